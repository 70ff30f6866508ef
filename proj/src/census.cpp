#include "invaut/census.hpp"

#include <limits>
#include <string>

#include "invaut/error.hpp"

namespace invaut {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

std::uint64_t pow2(std::size_t e) { return e >= 64 ? kSaturated : std::uint64_t{1} << e; }

Word to_word(std::size_t n, std::uint64_t mask) { return Word::from_mask(n, mask); }

LinearCode code_from_masks(std::size_t n, const std::vector<std::uint64_t>& rows) {
    std::vector<Word> words;
    words.reserve(rows.size());
    for (auto r : rows) words.push_back(to_word(n, r));
    return rref(n, words);
}

// Walks RREF k x n matrices (n <= 64) without any size guard.
class RrefWalker {
public:
    RrefWalker(std::size_t n, std::size_t k) : n_(n), k_(k), pivots_(k) {
        if (k > n) throw InvalidInput("census: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
        for (std::size_t r = 0; r < k; ++r) pivots_[r] = r;
        load_pivots();
    }

    bool next(std::vector<std::uint64_t>& rows) {
        if (done_) return false;
        if (counter_ == counter_end_) {
            if (!advance_pivots()) {
                done_ = true;
                return false;
            }
            load_pivots();
        }
        rows.assign(k_, 0);
        for (std::size_t r = 0; r < k_; ++r) rows[r] = std::uint64_t{1} << pivots_[r];
        // The first free entry is the most significant counter bit.
        const std::size_t bits = free_.size();
        for (std::size_t b = 0; b < bits; ++b) {
            if ((counter_ >> (bits - 1 - b)) & 1u) rows[free_[b].first] |= std::uint64_t{1} << free_[b].second;
        }
        ++counter_;
        return true;
    }

private:
    void load_pivots() {
        free_.clear();
        std::uint64_t pivot_mask = 0;
        for (auto p : pivots_) pivot_mask |= std::uint64_t{1} << p;
        for (std::size_t r = 0; r < k_; ++r) {
            for (std::size_t c = pivots_[r] + 1; c < n_; ++c) {
                if (((pivot_mask >> c) & 1u) == 0) free_.emplace_back(r, c);
            }
        }
        counter_ = 0;
        counter_end_ = pow2(free_.size());
    }

    bool advance_pivots() {
        std::size_t r = k_;
        while (r > 0) {
            --r;
            if (pivots_[r] < n_ - k_ + r) {
                ++pivots_[r];
                for (std::size_t s = r + 1; s < k_; ++s) pivots_[s] = pivots_[s - 1] + 1;
                return true;
            }
        }
        return false;
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<std::size_t> pivots_;
    std::vector<std::pair<std::size_t, std::size_t>> free_;
    std::uint64_t counter_ = 0;
    std::uint64_t counter_end_ = 1;
    bool done_ = false;
};

void check_census_guard(std::size_t n, std::size_t k, std::uint64_t count) {
    if (k > n) throw InvalidInput("census: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    if (n > kMaxCensusLength) {
        throw TooLarge("census supports n <= " + std::to_string(kMaxCensusLength) + ", got n = " + std::to_string(n));
    }
    if (count > kMaxCensusCount) {
        throw TooLarge("census of [" + std::to_string(n) + "," + std::to_string(k) + "] codes has " +
                       std::to_string(count) + " members, above the 10^9 guard");
    }
}

// Pair-compressed bit p stands for coordinates 2p and 2p+1.
std::uint64_t expand_pairs(std::uint64_t compressed) {
    std::uint64_t out = 0;
    for (std::uint64_t rest = compressed; rest != 0; rest &= rest - 1) {
        const auto p = static_cast<unsigned>(__builtin_ctzll(rest));
        out |= std::uint64_t{3} << (2 * p);
    }
    return out;
}

// A preimage of the expanded pair vector under id + sigma: the even coordinate of each pair.
std::uint64_t lift_pairs(std::uint64_t compressed) {
    std::uint64_t out = 0;
    for (std::uint64_t rest = compressed; rest != 0; rest &= rest - 1) {
        const auto p = static_cast<unsigned>(__builtin_ctzll(rest));
        out |= std::uint64_t{1} << (2 * p);
    }
    return out;
}

}  // namespace

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    // q-Pascal rule, row by row; stays in integers and saturates cleanly.
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t j = std::min(m, k); j >= 1; --j) {
            // [m, j] = [m-1, j-1] + 2^j [m-1, j]
            row[j] = saturating_add(row[j - 1], saturating_mul(pow2(j), row[j]));
        }
    }
    return row[k];
}

std::uint64_t sigma_invariant_count(std::size_t n, std::size_t k) {
    if (n % 2 != 0) throw InvalidInput("sigma_invariant_count: n must be even");
    if (k > n) return 0;
    const std::size_t m = n / 2;
    std::uint64_t total = 0;
    for (std::size_t f = 0; f <= m; ++f) {
        if (f > k || k - f > f) continue;
        const std::size_t d = k - f;
        std::uint64_t term = saturating_mul(gaussian_binomial(m, f), gaussian_binomial(f, d));
        term = saturating_mul(term, pow2((m - f) * d));
        total = saturating_add(total, term);
    }
    return total;
}

struct SubspaceStream::Impl {
    Impl(std::size_t n, std::size_t k) : n(n), walker(n, k) {}
    std::size_t n;
    RrefWalker walker;
    std::vector<std::uint64_t> rows;
};

SubspaceStream::SubspaceStream(std::size_t n, std::size_t k) {
    check_census_guard(n, k, gaussian_binomial(n, k));
    impl_ = std::make_unique<Impl>(n, k);
}

SubspaceStream::~SubspaceStream() = default;
SubspaceStream::SubspaceStream(SubspaceStream&&) noexcept = default;
SubspaceStream& SubspaceStream::operator=(SubspaceStream&&) noexcept = default;

bool SubspaceStream::next(LinearCode& out) {
    if (!impl_->walker.next(impl_->rows)) return false;
    out = code_from_masks(impl_->n, impl_->rows);
    return true;
}

bool SubspaceStream::next_masks(std::vector<std::uint64_t>& rows) { return impl_->walker.next(rows); }

struct SigmaInvariantStream::Impl {
    std::size_t n;
    std::size_t m;
    std::size_t k;
    std::size_t f;
    std::size_t f_end;

    std::unique_ptr<RrefWalker> fixed_walker;
    std::unique_ptr<RrefWalker> image_walker;
    bool have_fixed = false;
    bool have_image = false;

    std::vector<std::uint64_t> fixed_rows;   // compressed basis of F
    std::vector<std::size_t> free_pairs;     // pairs outside F's pivots: coset representatives of Fix / F
    std::vector<std::uint64_t> image_rows;   // compressed basis x_j of D
    std::vector<std::uint64_t> coefficient_rows;
    std::uint64_t choice = 0;
    std::uint64_t choice_end = 0;
    std::vector<std::uint64_t> generators;

    bool next(LinearCode& out) {
        while (true) {
            if (have_image && choice < choice_end) {
                emit(out);
                ++choice;
                return true;
            }
            if (have_fixed && image_walker->next(coefficient_rows)) {
                image_rows.assign(coefficient_rows.size(), 0);
                for (std::size_t j = 0; j < coefficient_rows.size(); ++j) {
                    for (std::size_t b = 0; b < f; ++b) {
                        if ((coefficient_rows[j] >> b) & 1u) image_rows[j] ^= fixed_rows[b];
                    }
                }
                choice = 0;
                choice_end = pow2(free_pairs.size() * image_rows.size());
                have_image = true;
                continue;
            }
            have_image = false;
            if (fixed_walker && fixed_walker->next(fixed_rows)) {
                free_pairs.clear();
                std::uint64_t pivots = 0;
                for (auto r : fixed_rows) pivots |= r & (~r + 1);
                for (std::size_t p = 0; p < m; ++p) {
                    if (((pivots >> p) & 1u) == 0) free_pairs.push_back(p);
                }
                image_walker = std::make_unique<RrefWalker>(f, k - f);
                have_fixed = true;
                continue;
            }
            have_fixed = false;
            if (fixed_walker) ++f;
            if (f > f_end) return false;
            fixed_walker = std::make_unique<RrefWalker>(m, f);
        }
    }

    void emit(LinearCode& out) {
        generators.clear();
        for (auto r : fixed_rows) generators.push_back(expand_pairs(r));
        const std::size_t width = free_pairs.size();
        for (std::size_t j = 0; j < image_rows.size(); ++j) {
            std::uint64_t w = lift_pairs(image_rows[j]);
            for (std::size_t b = 0; b < width; ++b) {
                if ((choice >> (j * width + b)) & 1u) w ^= expand_pairs(std::uint64_t{1} << free_pairs[b]);
            }
            generators.push_back(w);
        }
        out = code_from_masks(n, generators);
    }
};

SigmaInvariantStream::SigmaInvariantStream(std::size_t n, std::size_t k) {
    if (n == 0 || n % 2 != 0) throw InvalidInput("sigma-invariant census needs even positive n, got " + std::to_string(n));
    check_census_guard(n, k, sigma_invariant_count(n, k));
    impl_ = std::make_unique<Impl>();
    impl_->n = n;
    impl_->m = n / 2;
    impl_->k = k;
    impl_->f = (k + 1) / 2;
    impl_->f_end = std::min(k, n / 2);
}

SigmaInvariantStream::~SigmaInvariantStream() = default;
SigmaInvariantStream::SigmaInvariantStream(SigmaInvariantStream&&) noexcept = default;
SigmaInvariantStream& SigmaInvariantStream::operator=(SigmaInvariantStream&&) noexcept = default;

bool SigmaInvariantStream::next(LinearCode& out) { return impl_->next(out); }

CensusStream::CensusStream(const CensusSlice& slice) : partition_(slice.partition) {
    if (partition_.total == 0 || partition_.index >= partition_.total) {
        throw InvalidInput("census: shard " + std::to_string(partition_.index) + "/" + std::to_string(partition_.total) +
                           " is not a valid partition");
    }
    if (slice.sigma_invariant_only) {
        invariant_ = std::make_unique<SigmaInvariantStream>(slice.n, slice.k);
    } else {
        all_ = std::make_unique<SubspaceStream>(slice.n, slice.k);
    }
}

bool CensusStream::raw_next(LinearCode& out) { return all_ ? all_->next(out) : invariant_->next(out); }

bool CensusStream::next(LinearCode& out) {
    while (raw_next(out)) {
        const auto here = position_++;
        if (here % partition_.total == partition_.index) return true;
    }
    return false;
}

std::vector<LinearCode> enumerate_subspaces(std::size_t n, std::size_t k) {
    return collect(CensusSlice{n, k, false, {}});
}

std::vector<LinearCode> enumerate_sigma_invariant(std::size_t n, std::size_t k) {
    return collect(CensusSlice{n, k, true, {}});
}

std::vector<LinearCode> collect(const CensusSlice& slice) {
    CensusStream stream(slice);
    std::vector<LinearCode> out;
    LinearCode c;
    while (stream.next(c)) out.push_back(c);
    return out;
}

}  // namespace invaut
