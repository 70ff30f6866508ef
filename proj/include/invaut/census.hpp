#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "invaut/linear_code.hpp"

namespace invaut {

inline constexpr std::size_t kMaxCensusLength = 12;
inline constexpr std::uint64_t kMaxCensusCount = 1'000'000'000;

/// Work shard: item number t of a stream belongs to shard t % total.
struct Partition {
    std::size_t index = 0;
    std::size_t total = 1;

    friend bool operator==(const Partition&, const Partition&) = default;
};

struct CensusSlice {
    std::size_t n = 0;
    std::size_t k = 0;
    bool sigma_invariant_only = false;
    Partition partition;
};

/// Number of k-dimensional subspaces of GF(2)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k);

/// Number of k-dimensional subspaces of GF(2)^n (n even) mapped onto
/// themselves by (1,2)(3,4)...(n-1,n). Saturating.
std::uint64_t sigma_invariant_count(std::size_t n, std::size_t k);

/// All k-dimensional subspaces of GF(2)^n, each once, as RREF matrices.
///
/// Order: pivot column sets in lexicographic order; for a fixed pivot set the
/// free entries (row by row, left to right, first entry most significant) run
/// through a binary counter. Throws TooLarge for n > 12 or more than 10^9
/// subspaces, InvalidInput for k > n.
class SubspaceStream {
public:
    SubspaceStream(std::size_t n, std::size_t k);
    ~SubspaceStream();
    SubspaceStream(SubspaceStream&&) noexcept;
    SubspaceStream& operator=(SubspaceStream&&) noexcept;

    bool next(LinearCode& out);
    /// Next RREF rows as masks, without building a LinearCode.
    bool next_masks(std::vector<std::uint64_t>& rows);

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

/// The sigma-invariant k-dimensional subspaces of GF(2)^n, each once.
///
/// Built directly rather than by filtering: such a code C is determined by
/// F = C ∩ Fix(sigma), by D = (id + sigma)C ⊆ F, and by one lift w_j of each
/// basis vector x_j of D chosen modulo F. Order: dim F ascending, then F in
/// SubspaceStream order over pair-compressed coordinates, then D, then lifts.
class SigmaInvariantStream {
public:
    SigmaInvariantStream(std::size_t n, std::size_t k);
    ~SigmaInvariantStream();
    SigmaInvariantStream(SigmaInvariantStream&&) noexcept;
    SigmaInvariantStream& operator=(SigmaInvariantStream&&) noexcept;

    bool next(LinearCode& out);

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

/// The codes of one slice: the matching full stream thinned to its shard.
class CensusStream {
public:
    /// Throws InvalidInput for index >= total or total == 0.
    explicit CensusStream(const CensusSlice& slice);

    bool next(LinearCode& out);
    /// Position in the unsharded stream of the code last returned.
    std::uint64_t position() const noexcept { return position_ - 1; }

private:
    bool raw_next(LinearCode& out);

    Partition partition_;
    std::uint64_t position_ = 0;
    std::unique_ptr<SubspaceStream> all_;
    std::unique_ptr<SigmaInvariantStream> invariant_;
};

std::vector<LinearCode> enumerate_subspaces(std::size_t n, std::size_t k);
std::vector<LinearCode> enumerate_sigma_invariant(std::size_t n, std::size_t k);
std::vector<LinearCode> collect(const CensusSlice& slice);

}  // namespace invaut
