#include "aut_search.hpp"

#include <bit>
#include <map>
#include <string>

#include "invaut/error.hpp"

namespace invaut::detail {

AutomorphismSearch::AutomorphismSearch(const LinearCode& code) : n_(code.length()), k_(code.dim()) {
    if (n_ > kSearchMaxLength) {
        throw TooLarge("exact automorphism search supports n <= " + std::to_string(kSearchMaxLength) + ", got n = " +
                       std::to_string(n_));
    }

    columns_.assign(n_, 0);
    const auto rows = code.generator_masks();
    for (std::size_t r = 0; r < k_; ++r) {
        for (std::size_t i = 0; i < n_; ++i) {
            if ((rows[r] >> i) & 1u) columns_[i] |= 1u << r;
        }
    }

    std::vector<std::vector<std::uint32_t>> signature(n_, std::vector<std::uint32_t>(n_ + 1, 0));
    std::uint64_t word = 0;
    const std::uint64_t total = std::uint64_t{1} << k_;
    for (std::uint64_t step = 0; step < total; ++step) {
        if (step != 0) word ^= rows[static_cast<std::size_t>(std::countr_zero(step))];
        const auto w = static_cast<std::size_t>(std::popcount(word));
        for (std::uint64_t rest = word; rest != 0; rest &= rest - 1) {
            ++signature[static_cast<std::size_t>(std::countr_zero(rest))][w];
        }
    }
    std::map<std::vector<std::uint32_t>, int> classes;
    signature_class_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        auto [it, inserted] = classes.emplace(signature[i], static_cast<int>(classes.size()));
        signature_class_[i] = it->second;
    }

    natural_independent_.assign(n_, false);
    natural_track_.assign(n_, 0);
    Elimination state;
    for (std::size_t d = 0; d < n_; ++d) {
        std::uint32_t v = columns_[d];
        std::uint32_t track = 0;
        for (std::size_t b = k_; b-- > 0;) {
            if (((v >> b) & 1u) && state.vec[b] != 0) {
                v ^= state.vec[b];
                track ^= state.track[b];
            }
        }
        if (v == 0) {
            natural_track_[d] = track;
        } else {
            natural_independent_[d] = true;
            const auto top = static_cast<std::size_t>(31 - std::countl_zero(v));
            state.vec[top] = v;
            state.track[top] = track ^ (1u << d);
        }
    }
}

void AutomorphismSearch::begin(const SearchOptions& options) {
    if (!options.forced.empty() && options.forced.size() != n_) {
        throw InvalidInput("automorphism search: forced table has the wrong length");
    }
    images_.assign(n_, 0);
    inverse_.assign(n_, -1);
    required_.assign(n_, -1);
    used_ = 0;
    stack_.assign(n_ + 1, Elimination{});
}

bool AutomorphismSearch::admissible(std::size_t depth, std::size_t image, const SearchOptions& options) const {
    if ((used_ >> image) & 1u) return false;
    if (signature_class_[depth] != signature_class_[image]) return false;
    if ((options.fixed_point_free || options.cycle_length >= 2) && image == depth) return false;
    if (options.involution && image < depth && required_[depth] != static_cast<int>(image)) return false;
    return true;
}

bool AutomorphismSearch::extend(std::size_t depth, std::size_t image) {
    const Elimination& cur = stack_[depth];
    Elimination& next = stack_[depth + 1];
    std::uint32_t v = columns_[image];
    std::uint32_t track = 0;
    for (std::size_t b = k_; b-- > 0;) {
        if (((v >> b) & 1u) && cur.vec[b] != 0) {
            v ^= cur.vec[b];
            track ^= cur.track[b];
        }
    }
    if (v == 0) {
        if (natural_independent_[depth] || track != natural_track_[depth]) return false;
        next = cur;
        return true;
    }
    if (!natural_independent_[depth]) return false;
    next = cur;
    const auto top = static_cast<std::size_t>(31 - std::countl_zero(v));
    next.vec[top] = v;
    next.track[top] = track ^ (1u << depth);
    return true;
}

bool AutomorphismSearch::cycle_ok(std::size_t depth, const SearchOptions& options) const {
    const std::size_t want = options.cycle_length;
    if (want == 0) return true;

    // Assigned coordinates are exactly 0..depth.
    std::size_t forward = 1;
    std::size_t x = images_[depth];
    while (x != depth && x <= depth) {
        ++forward;
        x = images_[x];
    }
    if (x == depth) return forward == want;

    std::size_t backward = 0;
    for (int y = inverse_[depth]; y >= 0; y = inverse_[static_cast<std::size_t>(y)]) ++backward;
    return forward + 1 + backward <= want;
}

}  // namespace invaut::detail
