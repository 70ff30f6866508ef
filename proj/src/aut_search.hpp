#pragma once

// Backtracking over coordinate images for codes of length <= 12.
//
// Coordinates are assigned in the order 0, 1, ..., n-1. A partial map is kept
// only while the columns of the generator matrix, read in image order, have
// the same linear dependencies as the columns read in natural order: that is
// exactly "the code punctured to the assigned coordinates is mapped onto the
// code punctured to their images". At full depth this is C^p = C. Candidate
// images are further restricted to coordinates with the same weight
// signature (how many codewords of each weight have a 1 there).

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "invaut/linear_code.hpp"

namespace invaut::detail {

inline constexpr std::size_t kSearchMaxLength = 12;

struct SearchOptions {
    /// forced[i] >= 0 pins the image of i.
    std::vector<int> forced;
    /// Only permutations with p(p(i)) = i.
    bool involution = false;
    bool fixed_point_free = false;
    /// Nonzero: every cycle has exactly this length.
    std::size_t cycle_length = 0;
};

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const LinearCode& code);

    std::size_t length() const noexcept { return n_; }
    bool same_signature(std::size_t i, std::size_t j) const { return signature_class_[i] == signature_class_[j]; }

    /// Calls visit(images) for each automorphism satisfying the options, in
    /// lexicographic order of image tables, until visit returns true. Returns
    /// whether the walk was stopped by the visitor.
    template <class Visit>
    bool run(const SearchOptions& options, Visit&& visit) {
        begin(options);
        return descend(0, options, visit);
    }

private:
    struct Elimination {
        std::array<std::uint32_t, kSearchMaxLength> vec{};
        std::array<std::uint32_t, kSearchMaxLength> track{};
    };

    void begin(const SearchOptions& options);
    bool admissible(std::size_t depth, std::size_t image, const SearchOptions& options) const;
    bool extend(std::size_t depth, std::size_t image);
    bool cycle_ok(std::size_t depth, const SearchOptions& options) const;

    template <class Visit>
    bool descend(std::size_t depth, const SearchOptions& options, Visit& visit) {
        if (depth == n_) return visit(static_cast<const std::vector<std::size_t>&>(images_));
        const bool pinned = options.forced.size() > depth && options.forced[depth] >= 0;
        const int required = required_[depth];
        for (std::size_t j = 0; j < n_; ++j) {
            if (pinned && static_cast<int>(j) != options.forced[depth]) continue;
            if (required >= 0 && static_cast<int>(j) != required) continue;
            if (!admissible(depth, j, options)) continue;
            if (!extend(depth, j)) continue;
            images_[depth] = j;
            inverse_[j] = static_cast<int>(depth);
            used_ |= 1u << j;
            const bool reserved = options.involution && j > depth;
            if (reserved) required_[j] = static_cast<int>(depth);
            bool stop = false;
            if (cycle_ok(depth, options)) stop = descend(depth + 1, options, visit);
            if (reserved) required_[j] = -1;
            used_ &= ~(1u << j);
            inverse_[j] = -1;
            if (stop) return true;
        }
        return false;
    }

    std::size_t n_;
    std::size_t k_;
    std::vector<std::uint32_t> columns_;
    std::vector<int> signature_class_;
    // Column dependencies in natural order: whether column d is independent of
    // columns 0..d-1, and if not, which independent earlier columns sum to it.
    std::vector<bool> natural_independent_;
    std::vector<std::uint32_t> natural_track_;

    std::vector<std::size_t> images_;
    std::vector<int> inverse_;
    std::vector<int> required_;
    std::uint32_t used_ = 0;
    std::vector<Elimination> stack_;
};

}  // namespace invaut::detail
