#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "invaut/census.hpp"
#include "invaut/linear_code.hpp"
#include "invaut/perm.hpp"

namespace invaut {

struct Counterexample {
    LinearCode code;
    std::string reason;
    /// The involution the failed check was about, when it is not implied by
    /// the code's length (sampled involutions, transpositions).
    std::optional<Perm> involution;
};

struct VerifyReport {
    std::string theorem_id;
    std::size_t n = 0;
    std::size_t k_lo = 0;
    std::size_t k_hi = 0;
    std::uint64_t scanned = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t witnesses_checked = 0;
    std::uint64_t elapsed_ms = 0;
    Partition slice;

    // Resume bookkeeping for journaled searches; not part of the JSON report.
    std::uint64_t units_total = 0;
    std::uint64_t units_resumed = 0;
    bool complete = true;

    bool clean() const noexcept { return counterexamples.empty(); }
};

// Exhaustive verifiers. Each throws InvalidInput outside its domain and
// TooLarge beyond its size guard; `jobs` spreads census shards over threads.

/// Random codes with a planted involution beta: dim F_beta(C) >= ceil(k/2).
VerifyReport verify_half_dimension_bound(std::size_t trials, std::size_t n_max, std::uint64_t seed = 1);

/// beta = (1,2)(3,4)...(t,t+1), t >= 3: PAut(C) = <beta> forces dim F_beta(C) <= k-1.
/// Every beta-invariant code of even length n <= 8, all k.
VerifyReport verify_partial_involution_bound(std::size_t n, std::size_t jobs = 1);

/// One-dimensional codes of even length 4 <= n <= 8 and their duals: group
/// order d!(n-d)! (never 2), the quasi-group/group-code classification.
VerifyReport verify_dimension_one(std::size_t n);

/// No [n,k] code with k = 2 (or k = n-2) has a group of order 2, n in {6, 8}.
VerifyReport verify_dimension_two(std::size_t n, std::size_t k = 2, std::size_t jobs = 1);

/// Length 4, dimension 2, every transposition beta: PAut(C) = <beta> exactly
/// when C is fixed pointwise by beta and has weight distribution (1,1,1,1,0),
/// and that happens for exactly two codes per beta.
VerifyReport verify_length_four();

/// Sigma-invariant codes with k >= 3, n in {6, 8}: PAut(C) = <sigma> would
/// force ceil(k/2) <= dim F <= k-2, and never happens for k = 3.
VerifyReport verify_fixed_dimension_interval(std::size_t n, std::size_t jobs = 1);

/// Sigma-invariant [n,4] codes, n in {6, 8, 10}: PAut(C) != <sigma> and
/// extra_automorphism returns a valid involution other than sigma.
VerifyReport verify_dimension_four(std::size_t n, std::size_t jobs = 1);

/// Every sigma-invariant code of length n in {4, 6, 8}, all dimensions:
/// none has PAut(C) = <sigma>.
VerifyReport verify_no_sigma_only_codes(std::size_t n, std::size_t jobs = 1);

/// Random sigma-invariant codes with T(sigma) not full: fixed_point_witness
/// returns beta != 1, sigma with fixed points and <sigma, beta> = C2 x C2.
VerifyReport verify_fixed_point_witnesses(std::size_t trials, std::size_t n_max, std::uint64_t seed = 1);

/// Random (C, w, x) with x fixed, w not fixed and T_x ⊆ T_{w + w^sigma}:
/// apply(alpha_x, w) == w + x.
VerifyReport verify_alpha_x_identity(std::size_t trials, std::size_t n_max, std::uint64_t seed = 1);

/// T(sigma) from random complements equals the choice-free value.
VerifyReport verify_t_sigma_choice_free(std::size_t codes, std::size_t complements_per_code, std::size_t n_max,
                                        std::uint64_t seed = 1);

struct ConjectureOptions {
    std::size_t n = 10;
    std::size_t k_lo = 5;
    std::size_t k_hi = 5;
    Partition slice;
    std::size_t jobs = 1;
    /// Journal units per (k, slice); each unit is one census shard.
    std::size_t chunks = 16;
    std::optional<std::filesystem::path> journal;
    /// Stop after this many fresh units (0 = run to completion).
    std::size_t stop_after_units = 0;
};

/// Scans sigma-invariant [n,k] codes, k_lo..k_hi, for PAut(C) = <sigma>,
/// i.e. a quasi group code whose group is cyclic of order 2. Requires even
/// n <= 12 and 5 <= k_lo <= k_hi <= n-5. With a journal, completed units
/// are appended (fsync'd) and skipped on the next run.
VerifyReport conjecture_search(const ConjectureOptions& options);

/// Re-runs the check that produced a counterexample; returns the failure
/// reason if it still fails, nothing if it now passes or cannot be replayed.
std::optional<std::string> replay(const std::string& theorem_id, const Counterexample& counterexample);

// Samplers shared by the property suites.

/// A random involution on n >= 2 points with at least one 2-cycle.
Perm random_involution(std::mt19937_64& rng, std::size_t n);

/// Span of random words closed under beta, plus a few beta-fixed words.
LinearCode random_invariant_code(std::mt19937_64& rng, const Perm& beta);

/// A random sigma-invariant code whose T(sigma) is not every pair: outside a
/// random proper subset of pairs every generator is pair-constant.
LinearCode random_partial_t_code(std::mt19937_64& rng, std::size_t n);

}  // namespace invaut
