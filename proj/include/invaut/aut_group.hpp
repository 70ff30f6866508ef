#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invaut/linear_code.hpp"
#include "invaut/perm.hpp"

namespace invaut {

/// Exact automorphism groups are computed for n <= 12 only.
inline constexpr std::size_t kMaxExactLength = 12;
/// The regular-subgroup search behind is_group_code runs for n <= 8 only.
inline constexpr std::size_t kMaxGroupCodeLength = 8;

/// C^p == C, checked generator by generator. Works for any length.
bool is_automorphism(const LinearCode& code, const Perm& p);

struct PAutReport {
    std::uint64_t order = 1;
    /// Generators in discovery order. Only the group they generate is
    /// meaningful; the particular list is deterministic but not canonical.
    std::vector<Perm> generators;
    bool is_cyclic_of_order_2 = false;
    bool has_fpf_involution = false;
    bool has_fixed_point_involution = false;
};

/// The permutation automorphism group of `code`. Throws TooLarge for n > 12.
PAutReport paut(const LinearCode& code);

/// Order of PAut(code) without the involution flags.
std::uint64_t paut_order(const LinearCode& code);

/// Every element of PAut(code). Throws TooLarge when the order exceeds `limit`.
std::vector<Perm> paut_elements(const LinearCode& code, std::uint64_t limit = 1'000'000);

/// PAut contains a subgroup acting regularly on the coordinates (n <= 8).
bool is_group_code(const LinearCode& code);

/// PAut contains a nontrivial semiregular subgroup. Equivalent to containing a
/// fixed-point-free element of prime order, which is what is searched for.
bool is_quasi_group_code(const LinearCode& code);
/// The fixed-point-free prime-order element behind is_quasi_group_code.
std::optional<Perm> quasi_group_witness(const LinearCode& code);

/// First automorphism (in lexicographic image order) not in `excluded`.
std::optional<Perm> find_automorphism_outside(const LinearCode& code, std::span<const Perm> excluded);

/// PAut(code) == {id, g}.
bool paut_is_generated_by(const LinearCode& code, const Perm& g);

/// First involutory automorphism different from `excluded`.
std::optional<Perm> find_involution_other_than(const LinearCode& code, const Perm& excluded);

/// First involutory automorphism with at least one fixed point.
std::optional<Perm> find_involution_with_fixed_point(const LinearCode& code);

/// First fixed-point-free involutory automorphism.
std::optional<Perm> find_fixed_point_free_involution(const LinearCode& code);

}  // namespace invaut
