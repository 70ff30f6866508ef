#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invaut/linear_code.hpp"
#include "invaut/word.hpp"

namespace invaut {

/// A permutation of the coordinates {0, ..., n-1}; p(i) is the image of i.
///
/// Permutations act on words from the right: coordinate p(i) of apply(p, w)
/// is coordinate i of w, so apply(q, apply(p, w)) == apply(compose(p, q), w).
/// Text form is 1-based cycle notation such as "(1,2)(3,4)", with "()" for the
/// identity.
class Perm {
public:
    Perm() = default;

    static Perm identity(std::size_t n);
    /// Throws InvalidInput unless `images` is a bijection of {0, ..., n-1}.
    static Perm from_images(std::vector<std::size_t> images);
    /// Parses 1-based cycle notation; whitespace is ignored. Points not named
    /// in any cycle are fixed.
    static Perm parse(std::string_view cycles, std::size_t n);
    /// Product of the given 0-based 2-cycles, which must be disjoint.
    static Perm from_transpositions(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> swaps);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    bool is_identity() const noexcept;
    Perm inverse() const;
    std::string to_string() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<std::size_t> images_;
};

/// i -> q(p(i)): apply p first, then q.
Perm compose(const Perm& p, const Perm& q);

/// b^{-1} p b in apply-left-first order: each cycle (a1,...,ak) of p becomes
/// (b(a1),...,b(ak)).
Perm conjugate(const Perm& p, const Perm& b);

Word apply(const Perm& p, const Word& w);
/// Mask variant for lengths <= 64.
std::uint64_t apply_mask(const Perm& p, std::uint64_t w);

/// RREF of the images of the generators.
LinearCode image_code(const LinearCode& code, const Perm& p);

/// (1,2)(3,4)...(n-1,n). Throws InvalidInput for odd or zero n.
Perm canonical_sigma(std::size_t n);
bool is_canonical_sigma(const Perm& p);

/// Cycle lengths (fixed points included), sorted in decreasing order.
struct CycleType {
    std::vector<std::size_t> lengths;

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Perm& p);
/// Order exactly 2.
bool is_involution(const Perm& p);
bool is_fixed_point_free(const Perm& p);
std::size_t fixed_point_count(const Perm& p);
/// Least m >= 1 with p^m = identity.
std::uint64_t order(const Perm& p);

}  // namespace invaut
