#include "invaut/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

#include "invaut/aut_group.hpp"
#include "invaut/error.hpp"
#include "invaut/fixed_subcode.hpp"
#include "journal.hpp"

namespace invaut {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_since(Clock::time_point start) {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

void sort_counterexamples(std::vector<Counterexample>& list) {
    std::stable_sort(list.begin(), list.end(), [](const Counterexample& a, const Counterexample& b) {
        return std::tie(a.code.generators(), a.reason) < std::tie(b.code.generators(), b.reason);
    });
}

// PAut(C) has order exactly 2.
bool paut_is_order_two(const LinearCode& code) {
    const Perm identity[] = {Perm::identity(code.length())};
    const auto g = find_automorphism_outside(code, identity);
    return g && paut_is_generated_by(code, *g);
}

std::size_t ceil_half(std::size_t k) { return (k + 1) / 2; }

// Per-code checks. Each returns the failure reason, or nothing when the
// statement holds for the code.

std::optional<std::string> check_half_dimension(const LinearCode& code, const Perm& beta) {
    if (!is_automorphism(code, beta)) return std::nullopt;
    const auto f = fixed_subcode(code, beta).dim();
    if (f < ceil_half(code.dim())) {
        return "dim F = " + std::to_string(f) + " < ceil(k/2) for k = " + std::to_string(code.dim()) +
               " under " + beta.to_string();
    }
    return std::nullopt;
}

std::optional<std::string> check_partial_bound(const LinearCode& code, const Perm& beta) {
    if (!is_automorphism(code, beta) || !paut_is_generated_by(code, beta)) return std::nullopt;
    const auto f = fixed_subcode(code, beta).dim();
    if (code.dim() >= 1 && f > code.dim() - 1) {
        return "PAut = <" + beta.to_string() + "> but dim F = " + std::to_string(f) + " = k";
    }
    return std::nullopt;
}

std::optional<std::string> check_dimension_one(const LinearCode& code) {
    const std::size_t n = code.length();
    const std::size_t d = code.generators().front().weight();
    const auto order = paut_order(code);
    const auto expected = factorial(d) * factorial(n - d);
    if (order != expected) {
        return "PAut order " + std::to_string(order) + " != d!(n-d)! = " + std::to_string(expected);
    }
    if (order == 2) return "PAut has order 2";
    if (paut_order(dual(code)) != order) return "dual has a different PAut order";
    if (d == n) return std::nullopt;
    const bool quasi = is_quasi_group_code(code);
    if (d % 2 == 0) {
        if (!quasi) return "even weight " + std::to_string(d) + " but not a quasi group code";
        if (is_group_code(code)) return "even weight " + std::to_string(d) + " but a group code";
    }
    const bool power_of_two = (n & (n - 1)) == 0;
    if (power_of_two && quasi != (d % 2 == 0)) {
        return "n = 2^r, weight " + std::to_string(d) + ": quasi group code = " + (quasi ? "true" : "false");
    }
    return std::nullopt;
}

std::optional<std::string> check_not_order_two(const LinearCode& code) {
    if (paut_is_order_two(code)) return "PAut has order 2";
    return std::nullopt;
}

std::optional<std::string> check_length_four(const LinearCode& code, const Perm& beta) {
    const bool only_beta = paut_is_generated_by(code, beta);
    const WeightDistribution expected{{1, 1, 1, 1, 0}};
    const bool shape = fixed_subcode(code, beta) == code && weight_distribution(code) == expected;
    if (only_beta != shape) {
        return std::string("PAut = <") + beta.to_string() + "> is " + (only_beta ? "true" : "false") +
               " but the fixed/weight condition is " + (shape ? "true" : "false");
    }
    return std::nullopt;
}

std::optional<std::string> check_interval(const LinearCode& code) {
    const Perm sigma = canonical_sigma(code.length());
    if (!paut_is_generated_by(code, sigma)) return std::nullopt;
    const std::size_t k = code.dim();
    const std::size_t f = fixed_subcode(code, sigma).dim();
    if (k == 3) return "three-dimensional code with PAut = <sigma>";
    if (f + 1 >= k) return "PAut = <sigma> with dim F = " + std::to_string(f) + " >= k-1";
    if (f < ceil_half(k)) return "PAut = <sigma> with dim F = " + std::to_string(f) + " < ceil(k/2)";
    return std::nullopt;
}

std::optional<std::string> check_sigma_only(const LinearCode& code) {
    if (paut_is_generated_by(code, canonical_sigma(code.length()))) return "PAut = <sigma>";
    return std::nullopt;
}

std::optional<std::string> check_dimension_four(const LinearCode& code) {
    const Perm sigma = canonical_sigma(code.length());
    if (paut_is_generated_by(code, sigma)) return "PAut = <sigma>";
    const auto witness = extra_automorphism(code, sigma);
    if (!witness) return "no involution other than sigma found";
    const Perm& alpha = witness->perm;
    if (alpha == sigma || !is_involution(alpha) || !is_automorphism(code, alpha)) {
        return "invalid witness " + alpha.to_string() + " via " + to_string(witness->path);
    }
    return std::nullopt;
}

std::optional<std::string> check_fixed_point_witness(const LinearCode& code) {
    const std::size_t n = code.length();
    const Perm sigma = canonical_sigma(n);
    if (t_sigma(code, sigma).full()) return std::nullopt;
    const auto beta = fixed_point_witness(code, sigma);
    if (!beta) return "T(sigma) is not full but no witness was returned";
    const std::string tag = " (beta = " + beta->to_string() + ")";
    if (beta->is_identity()) return "witness is the identity" + tag;
    if (*beta == sigma) return "witness equals sigma" + tag;
    if (!is_automorphism(code, *beta)) return "witness is not an automorphism" + tag;
    if (fixed_point_count(*beta) < 2) return "witness has fewer than two fixed points" + tag;
    const Perm product = compose(sigma, *beta);
    const bool klein = compose(*beta, sigma) == product && is_involution(*beta) && is_involution(product) &&
                       product != sigma && product != *beta;
    if (!klein) return "<sigma, beta> is not C2 x C2" + tag;
    return std::nullopt;
}

std::optional<std::string> check_conjecture(const LinearCode& code) {
    if (paut_is_generated_by(code, canonical_sigma(code.length()))) {
        return "quasi group code with PAut = <sigma> of order 2";
    }
    return std::nullopt;
}

struct Tally {
    std::uint64_t scanned = 0;
    std::uint64_t witnesses = 0;
    std::vector<Counterexample> counterexamples;

    void merge(Tally&& other) {
        scanned += other.scanned;
        witnesses += other.witnesses;
        for (auto& c : other.counterexamples) counterexamples.push_back(std::move(c));
    }
};

using CodeVisitor = std::function<void(const LinearCode&, Tally&)>;

// Runs `visit` over every code of every slice, `jobs` slices at a time.
Tally scan_slices(const std::vector<CensusSlice>& slices, std::size_t jobs, const CodeVisitor& visit) {
    Tally total;
    std::mutex merge_lock;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;

    auto worker = [&] {
        try {
            while (true) {
                const auto i = next.fetch_add(1);
                if (i >= slices.size()) return;
                Tally local;
                CensusStream stream(slices[i]);
                LinearCode code;
                while (stream.next(code)) visit(code, local);
                std::lock_guard lock(merge_lock);
                total.merge(std::move(local));
            }
        } catch (...) {
            std::lock_guard lock(merge_lock);
            if (!failure) failure = std::current_exception();
            next = slices.size();
        }
    };

    jobs = std::max<std::size_t>(1, std::min(jobs, slices.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    sort_counterexamples(total.counterexamples);
    return total;
}

// One slice per (k, shard) so that threads have something to share.
std::vector<CensusSlice> split(std::size_t n, std::size_t k_lo, std::size_t k_hi, bool invariant, std::size_t shards) {
    std::vector<CensusSlice> out;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        for (std::size_t s = 0; s < shards; ++s) out.push_back(CensusSlice{n, k, invariant, {s, shards}});
    }
    return out;
}

VerifyReport new_report(std::string id, std::size_t n, std::size_t k_lo, std::size_t k_hi) {
    VerifyReport report;
    report.theorem_id = std::move(id);
    report.n = n;
    report.k_lo = k_lo;
    report.k_hi = k_hi;
    return report;
}

void finish(VerifyReport& report, Tally&& tally, Clock::time_point start) {
    report.scanned = tally.scanned;
    report.witnesses_checked = tally.witnesses;
    report.counterexamples = std::move(tally.counterexamples);
    report.elapsed_ms = elapsed_since(start);
}

void require_even(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
    if (n % 2 != 0 || n < lo) {
        throw InvalidInput(std::string(what) + ": n must be even and at least " + std::to_string(lo) + ", got " +
                           std::to_string(n));
    }
    if (n > hi) {
        throw TooLarge(std::string(what) + ": exhaustive scan supports n <= " + std::to_string(hi) + ", got " +
                       std::to_string(n));
    }
}

Word random_word(std::mt19937_64& rng, std::size_t n) {
    Word w(n);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < n; ++i) w.set(i, coin(rng));
    return w;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::size_t random_even(std::mt19937_64& rng, std::size_t lo, std::size_t hi) { return 2 * uniform(rng, lo / 2, hi / 2); }

LinearCode random_sigma_invariant_code(std::mt19937_64& rng, std::size_t n) {
    return random_invariant_code(rng, canonical_sigma(n));
}

}  // namespace

Perm random_involution(std::mt19937_64& rng, std::size_t n) {
    if (n < 2) throw InvalidInput("random_involution: needs n >= 2");
    std::vector<std::size_t> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = i;
    std::shuffle(points.begin(), points.end(), rng);
    const std::size_t swaps = uniform(rng, 1, n / 2);
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    for (std::size_t s = 0; s < swaps; ++s) parts.emplace_back(points[2 * s], points[2 * s + 1]);
    return Perm::from_transpositions(n, parts);
}

LinearCode random_invariant_code(std::mt19937_64& rng, const Perm& beta) {
    const std::size_t n = beta.size();
    std::vector<Word> rows;
    const std::size_t orbit_words = uniform(rng, 0, std::max<std::size_t>(1, n / 2));
    for (std::size_t i = 0; i < orbit_words; ++i) {
        Word w = random_word(rng, n);
        rows.push_back(apply(beta, w));
        rows.push_back(std::move(w));
    }
    const std::size_t fixed_words = uniform(rng, 0, 2);
    for (std::size_t i = 0; i < fixed_words; ++i) {
        Word w = random_word(rng, n);
        rows.push_back(w + apply(beta, w));
        // w + beta(w) is fixed; add a fixed word with support on fixed points too.
        Word on_fixed(n);
        for (std::size_t p = 0; p < n; ++p) {
            if (beta(p) == p && w.get(p)) on_fixed.set(p);
        }
        rows.push_back(std::move(on_fixed));
    }
    return rref(n, rows);
}

LinearCode random_partial_t_code(std::mt19937_64& rng, std::size_t n) {
    if (n < 4 || n % 2 != 0) throw InvalidInput("random_partial_t_code: needs even n >= 4");
    const std::size_t m = n / 2;
    std::vector<bool> moving(m, false);
    const std::size_t moving_count = uniform(rng, 0, m - 1);
    std::vector<std::size_t> order(m);
    for (std::size_t p = 0; p < m; ++p) order[p] = p;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < moving_count; ++i) moving[order[i]] = true;

    const Perm sigma = canonical_sigma(n);
    std::vector<Word> rows;
    const std::size_t count = uniform(rng, 1, n);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < count; ++i) {
        Word w(n);
        for (std::size_t p = 0; p < m; ++p) {
            if (moving[p]) {
                w.set(2 * p, coin(rng));
                w.set(2 * p + 1, coin(rng));
            } else if (coin(rng)) {
                w.set(2 * p);
                w.set(2 * p + 1);
            }
        }
        rows.push_back(apply(sigma, w));
        rows.push_back(std::move(w));
    }
    return rref(n, rows);
}

VerifyReport verify_half_dimension_bound(std::size_t trials, std::size_t n_max, std::uint64_t seed) {
    if (n_max < 2) throw InvalidInput("lemma-2.1: n_max must be at least 2");
    const auto start = Clock::now();
    auto report = new_report("lemma-2.1", n_max, 0, n_max);
    std::mt19937_64 rng(seed);
    Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = uniform(rng, 2, n_max);
        const Perm beta = random_involution(rng, n);
        const LinearCode code = random_invariant_code(rng, beta);
        ++tally.scanned;
        ++tally.witnesses;
        if (auto why = check_half_dimension(code, beta)) tally.counterexamples.push_back({code, *why, beta});
    }
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_partial_involution_bound(std::size_t n, std::size_t jobs) {
    require_even(n, 4, 8, "lemma-2.2");
    const auto start = Clock::now();
    auto report = new_report("lemma-2.2", n, 0, n);
    std::vector<Perm> betas;
    for (std::size_t pairs = 2; pairs <= n / 2; ++pairs) {
        std::vector<std::pair<std::size_t, std::size_t>> parts;
        for (std::size_t p = 0; p < pairs; ++p) parts.emplace_back(2 * p, 2 * p + 1);
        betas.push_back(Perm::from_transpositions(n, parts));
    }
    auto tally = scan_slices(split(n, 0, n, false, 4), jobs, [&](const LinearCode& code, Tally& local) {
        for (const auto& beta : betas) {
            if (!is_automorphism(code, beta)) continue;
            ++local.scanned;
            if (!paut_is_generated_by(code, beta)) continue;
            ++local.witnesses;
            if (auto why = check_partial_bound(code, beta)) local.counterexamples.push_back({code, *why, beta});
        }
    });
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_dimension_one(std::size_t n) {
    require_even(n, 4, 8, "prop-3.1");
    const auto start = Clock::now();
    auto report = new_report("prop-3.1", n, 1, 1);
    auto tally = scan_slices(split(n, 1, 1, false, 1), 1, [&](const LinearCode& code, Tally& local) {
        ++local.scanned;
        ++local.witnesses;
        if (auto why = check_dimension_one(code)) local.counterexamples.push_back({code, *why, std::nullopt});
    });
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_dimension_two(std::size_t n, std::size_t k, std::size_t jobs) {
    require_even(n, 6, 8, "thm-3.2");
    if (k != 2 && k != n - 2) throw InvalidInput("thm-3.2: k must be 2 or n-2");
    const auto start = Clock::now();
    auto report = new_report("thm-3.2", n, k, k);
    auto tally = scan_slices(split(n, k, k, false, 4), jobs, [&](const LinearCode& code, Tally& local) {
        ++local.scanned;
        if (auto why = check_not_order_two(code)) local.counterexamples.push_back({code, *why, std::nullopt});
    });
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_length_four() {
    const auto start = Clock::now();
    auto report = new_report("prop-3.4", 4, 2, 2);
    const auto codes = enumerate_subspaces(4, 2);
    Tally tally;
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            const std::pair<std::size_t, std::size_t> swap[] = {{a, b}};
            const Perm beta = Perm::from_transpositions(4, swap);
            std::size_t hits = 0;
            for (const auto& code : codes) {
                ++tally.scanned;
                if (paut_is_generated_by(code, beta)) {
                    ++hits;
                    ++tally.witnesses;
                }
                if (auto why = check_length_four(code, beta)) tally.counterexamples.push_back({code, *why, beta});
            }
            if (hits != 2) {
                tally.counterexamples.push_back({LinearCode::zero(4),
                                                 std::to_string(hits) + " codes have PAut = <" + beta.to_string() +
                                                     ">, expected exactly 2",
                                                 beta});
            }
        }
    }
    sort_counterexamples(tally.counterexamples);
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_fixed_dimension_interval(std::size_t n, std::size_t jobs) {
    require_even(n, 6, 8, "thm-4.2");
    const auto start = Clock::now();
    auto report = new_report("thm-4.2", n, 3, n);
    auto tally = scan_slices(split(n, 3, n, true, 2), jobs, [&](const LinearCode& code, Tally& local) {
        ++local.scanned;
        if (auto why = check_interval(code)) local.counterexamples.push_back({code, *why, std::nullopt});
    });
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_dimension_four(std::size_t n, std::size_t jobs) {
    require_even(n, 6, 10, "thm-4.4");
    const auto start = Clock::now();
    auto report = new_report("thm-4.4", n, 4, 4);
    auto tally = scan_slices(split(n, 4, 4, true, 8), jobs, [&](const LinearCode& code, Tally& local) {
        ++local.scanned;
        ++local.witnesses;
        if (auto why = check_dimension_four(code)) local.counterexamples.push_back({code, *why, std::nullopt});
    });
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_no_sigma_only_codes(std::size_t n, std::size_t jobs) {
    require_even(n, 4, 8, "cor-4.8");
    const auto start = Clock::now();
    auto report = new_report("cor-4.8", n, 0, n);
    auto tally = scan_slices(split(n, 0, n, true, 4), jobs, [&](const LinearCode& code, Tally& local) {
        ++local.scanned;
        if (auto why = check_sigma_only(code)) local.counterexamples.push_back({code, *why, std::nullopt});
    });
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_fixed_point_witnesses(std::size_t trials, std::size_t n_max, std::uint64_t seed) {
    if (n_max < 4) throw InvalidInput("thm-5.1: n_max must be at least 4");
    const auto start = Clock::now();
    auto report = new_report("thm-5.1", n_max, 0, n_max);
    std::mt19937_64 rng(seed);
    Tally tally;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = random_even(rng, 4, n_max);
        const LinearCode code = random_partial_t_code(rng, n);
        ++tally.scanned;
        ++tally.witnesses;
        if (auto why = check_fixed_point_witness(code)) tally.counterexamples.push_back({code, *why, std::nullopt});
    }
    sort_counterexamples(tally.counterexamples);
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_alpha_x_identity(std::size_t trials, std::size_t n_max, std::uint64_t seed) {
    if (n_max < 2) throw InvalidInput("lemma-4.1: n_max must be at least 2");
    const auto start = Clock::now();
    auto report = new_report("lemma-4.1", n_max, 0, n_max);
    std::mt19937_64 rng(seed);
    Tally tally;
    while (tally.scanned < trials) {
        const std::size_t n = random_even(rng, 2, n_max);
        const Perm sigma = canonical_sigma(n);
        const LinearCode code = random_sigma_invariant_code(rng, n);
        const auto fixed = fixed_subcode(code, sigma);
        if (fixed.dim() == code.dim()) continue;

        // A random codeword outside the fixed subcode.
        Word w;
        do {
            w = combination(code, rng() & ((std::uint64_t{1} << code.dim()) - 1));
        } while (apply(sigma, w) == w);
        const Word y = w + apply(sigma, w);
        const TSet ty = t_set(y, sigma);

        std::vector<Word> candidates;
        for (const auto& x : codewords(fixed)) {
            if (!x.is_zero() && t_set(x, sigma).is_subset_of(ty)) candidates.push_back(x);
        }
        const Word& x = candidates[uniform(rng, 0, candidates.size() - 1)];
        ++tally.scanned;
        ++tally.witnesses;
        const Perm alpha = alpha_x(x, sigma);
        if (apply(alpha, w) != w + x) {
            tally.counterexamples.push_back(
                {code, "alpha_x(" + x.to_string() + ") maps " + w.to_string() + " off w + x", alpha});
        }
    }
    sort_counterexamples(tally.counterexamples);
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport verify_t_sigma_choice_free(std::size_t codes, std::size_t complements_per_code, std::size_t n_max,
                                        std::uint64_t seed) {
    if (n_max < 2) throw InvalidInput("t-sigma: n_max must be at least 2");
    const auto start = Clock::now();
    auto report = new_report("t-sigma", n_max, 0, n_max);
    std::mt19937_64 rng(seed);
    Tally tally;
    for (std::size_t c = 0; c < codes; ++c) {
        const std::size_t n = random_even(rng, 2, n_max);
        const Perm sigma = canonical_sigma(n);
        const LinearCode code = random_sigma_invariant_code(rng, n);
        const TSet expected = t_sigma(code, sigma);
        const auto base = decompose(code, sigma);
        ++tally.scanned;
        if (t_sigma_from_decomposition(base, sigma) != expected) {
            tally.counterexamples.push_back({code, "greedy complement gives a different T(sigma)", std::nullopt});
            continue;
        }
        const std::size_t d = base.complement_basis.size();
        for (std::size_t r = 0; r < complements_per_code; ++r) {
            // Shift each complement vector by a random fixed word, then mix
            // them with a random invertible matrix (unit upper times lower).
            std::vector<Word> shifted;
            for (const auto& w : base.complement_basis) {
                const auto coeffs = base.fixed.dim() == 0 ? 0 : rng() & ((std::uint64_t{1} << base.fixed.dim()) - 1);
                shifted.push_back(w + combination(base.fixed, coeffs));
            }
            std::vector<Word> mixed = shifted;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i + 1; j < d; ++j) {
                    if (rng() & 1u) mixed[i] ^= mixed[j];
                }
            }
            for (std::size_t i = d; i-- > 0;) {
                for (std::size_t j = 0; j < i; ++j) {
                    if (rng() & 1u) mixed[i] ^= mixed[j];
                }
            }
            const auto dec = decompose_with_complement(code, sigma, mixed);
            ++tally.witnesses;
            if (t_sigma_from_decomposition(dec, sigma) != expected) {
                tally.counterexamples.push_back(
                    {code, "a random complement changes T(sigma) from " + expected.to_string(), std::nullopt});
                break;
            }
        }
    }
    sort_counterexamples(tally.counterexamples);
    finish(report, std::move(tally), start);
    return report;
}

VerifyReport conjecture_search(const ConjectureOptions& options) {
    const std::size_t n = options.n;
    if (n % 2 != 0 || n == 0) throw InvalidInput("conjecture: n must be even");
    if (n > kMaxExactLength) {
        throw TooLarge("conjecture: exact automorphism groups need n <= " + std::to_string(kMaxExactLength));
    }
    if (options.k_lo < 5 || options.k_hi + 5 > n || options.k_lo > options.k_hi) {
        throw InvalidInput("conjecture: need 5 <= k_lo <= k_hi <= n-5; dimensions and co-dimensions up to 4 are "
                           "already settled, so there is nothing to search at n = " +
                           std::to_string(n) + " for k in [" + std::to_string(options.k_lo) + ", " +
                           std::to_string(options.k_hi) + "]");
    }
    if (options.slice.total == 0 || options.slice.index >= options.slice.total) {
        throw InvalidInput("conjecture: invalid slice");
    }
    if (options.chunks == 0) throw InvalidInput("conjecture: chunks must be positive");

    const auto start = Clock::now();
    auto report = new_report("conjecture-4.9", n, options.k_lo, options.k_hi);
    report.slice = options.slice;

    struct Unit {
        CensusSlice slice;
        std::optional<JournalRecord> done;
    };
    const std::size_t unit_total = options.slice.total * options.chunks;
    std::vector<Unit> units;
    for (std::size_t k = options.k_lo; k <= options.k_hi; ++k) {
        for (std::size_t c = 0; c < options.chunks; ++c) {
            units.push_back({CensusSlice{n, k, true, {options.slice.index + options.slice.total * c, unit_total}}, {}});
        }
    }

    std::optional<Journal> journal;
    if (options.journal) {
        journal.emplace(*options.journal);
        const auto records = journal->load();
        for (auto& unit : units) {
            for (const auto& rec : records) {
                if (rec.theorem_id == report.theorem_id && rec.n == n && rec.k == unit.slice.k &&
                    rec.unit == unit.slice.partition) {
                    unit.done = rec;
                    break;
                }
            }
        }
    }

    Tally total;
    std::vector<CensusSlice> pending;
    for (const auto& unit : units) {
        if (!unit.done) {
            pending.push_back(unit.slice);
            continue;
        }
        ++report.units_resumed;
        total.scanned += unit.done->scanned;
        total.witnesses += unit.done->scanned;
        for (const auto& ce : unit.done->counterexamples) total.counterexamples.push_back(ce);
    }
    report.units_total = units.size();
    if (options.stop_after_units != 0 && pending.size() > options.stop_after_units) {
        pending.resize(options.stop_after_units);
        report.complete = false;
    }

    std::mutex lock;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    auto worker = [&] {
        try {
            while (true) {
                const auto i = next.fetch_add(1);
                if (i >= pending.size()) return;
                JournalRecord rec{report.theorem_id, n, pending[i].k, pending[i].partition, 0, {}};
                CensusStream stream(pending[i]);
                LinearCode code;
                while (stream.next(code)) {
                    ++rec.scanned;
                    if (auto why = check_conjecture(code)) rec.counterexamples.push_back({code, *why, std::nullopt});
                }
                std::lock_guard guard(lock);
                if (journal) journal->append(rec);
                total.scanned += rec.scanned;
                total.witnesses += rec.scanned;
                for (auto& ce : rec.counterexamples) total.counterexamples.push_back(std::move(ce));
            }
        } catch (...) {
            std::lock_guard guard(lock);
            if (!failure) failure = std::current_exception();
            next = pending.size();
        }
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, pending.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    sort_counterexamples(total.counterexamples);
    finish(report, std::move(total), start);
    return report;
}

std::optional<std::string> replay(const std::string& theorem_id, const Counterexample& ce) {
    const LinearCode& code = ce.code;
    if (theorem_id == "lemma-2.1" && ce.involution) return check_half_dimension(code, *ce.involution);
    if (theorem_id == "lemma-2.2" && ce.involution) return check_partial_bound(code, *ce.involution);
    if (theorem_id == "prop-3.1" && code.dim() == 1) return check_dimension_one(code);
    if (theorem_id == "thm-3.2") return check_not_order_two(code);
    if (theorem_id == "prop-3.4" && ce.involution && code.dim() == 2) return check_length_four(code, *ce.involution);
    if (code.length() % 2 != 0 || code.length() == 0) return std::nullopt;
    if (theorem_id == "thm-4.2") return check_interval(code);
    if (theorem_id == "thm-4.4") return check_dimension_four(code);
    if (theorem_id == "cor-4.8") return check_sigma_only(code);
    if (theorem_id == "thm-5.1") return check_fixed_point_witness(code);
    if (theorem_id == "conjecture-4.9") return check_conjecture(code);
    return std::nullopt;
}

}  // namespace invaut
