#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invaut/linear_code.hpp"
#include "invaut/perm.hpp"
#include "invaut/word.hpp"

namespace invaut {

// Throughout, sigma is the canonical involution (1,2)(3,4)...(n-1,n) and pair
// p covers the 0-based coordinates 2p and 2p+1 (1-based odd coordinate 2p+1).

/// A set of pair indices in {0, ..., m-1}.
class TSet {
public:
    TSet() = default;
    explicit TSet(std::size_t pair_count) : member_(pair_count, false) {}

    std::size_t pair_count() const noexcept { return member_.size(); }
    bool contains(std::size_t pair) const { return member_[pair]; }
    void insert(std::size_t pair) { member_[pair] = true; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool full() const noexcept { return size() == pair_count(); }
    /// Sorted pair indices.
    std::vector<std::size_t> pairs() const;

    bool is_subset_of(const TSet& other) const;
    TSet operator|(const TSet& other) const;
    TSet operator-(const TSet& other) const;
    TSet operator&(const TSet& other) const;

    /// Sorted 1-based odd coordinates, e.g. "{1, 5}".
    std::string to_string() const;

    friend bool operator==(const TSet&, const TSet&) = default;

private:
    std::vector<bool> member_;
};

/// {c in code : apply(p, c) == c}, computed as the kernel of id + p on code.
LinearCode fixed_subcode(const LinearCode& code, const Perm& p);

/// Pairs on which the sigma-fixed word x reads 11.
/// Throws InvalidInput if sigma is not canonical, NotFixed if x is not fixed.
TSet t_set(const Word& x, const Perm& sigma);

/// The product of the pair transpositions over t_set(x). For any w with
/// t_set(x) contained in t_set(w + w^sigma) it satisfies w^alpha = w + x.
/// Throws InvalidInput for x = 0.
Perm alpha_x(const Word& x, const Perm& sigma);

/// Product of the transpositions (2p, 2p+1) over the given pairs.
Perm pair_product(std::size_t length, const TSet& pairs);

struct FixedDecomposition {
    LinearCode fixed;
    /// Basis of a complement of `fixed` in the code.
    std::vector<Word> complement_basis;
    /// x_j = w_j + w_j^sigma for each complement vector w_j.
    std::vector<Word> x_list;
};

/// Splits the code into its sigma-fixed subcode and a complement. The
/// complement is chosen greedily from the RREF rows in order.
/// Throws NotInvariant if sigma is not an automorphism.
FixedDecomposition decompose(const LinearCode& code, const Perm& sigma);

/// Same, with a caller-chosen complement. Throws InvalidInput unless the
/// vectors are a basis of a complement of the fixed subcode inside the code.
FixedDecomposition decompose_with_complement(const LinearCode& code, const Perm& sigma,
                                             std::span<const Word> complement);

/// T(sigma): pairs on which some word of (id + sigma)C is nonzero. This does
/// not depend on any basis or complement choice.
TSet t_sigma(const LinearCode& code, const Perm& sigma);

/// Union of t_set(x_j) over a decomposition's x_list.
TSet t_sigma_from_decomposition(const FixedDecomposition& decomposition, const Perm& sigma);

/// A non-sigma involutory automorphism with fixed points, built from the
/// pairs outside T(sigma): the product of their transpositions. When T(sigma)
/// is empty that product would be sigma itself, so the single transposition
/// (1,2) is returned instead (it fixes every codeword). Absent when T(sigma)
/// covers every pair. Requires n >= 4.
std::optional<Perm> fixed_point_witness(const LinearCode& code, const Perm& sigma);

enum class WitnessPath {
    PointwiseFixingPair,
    TSigmaComplement,
    AlphaX,
    UnionProduct,
    NestedAlpha,
    MixedSwap,
    ParallelSwap,
    CrossedSwap,
    SingleTransposition,
    PairedTranspositions,
    ExhaustiveSearch,
};

std::string to_string(WitnessPath path);

struct Witness {
    Perm perm;
    WitnessPath path;
};

/// Some involutory automorphism other than sigma, or nothing when PAut(C)
/// has no such involution. Constructions are tried in a fixed order: the
/// T(sigma) complement, alpha_x for each nonzero fixed word, the pair-swap
/// constructions for two-dimensional complements, then exhaustive search
/// (n <= 12, TooLarge above).
std::optional<Witness> extra_automorphism(const LinearCode& code, const Perm& sigma);

}  // namespace invaut
