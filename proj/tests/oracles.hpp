#pragma once

// Slow, obviously-correct reference computations on raw bit masks. Bit i of
// a mask is coordinate i (0-based). Nothing here calls into the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Rows = std::vector<Mask>;

inline std::size_t rank(Rows rows) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < 64 && r < rows.size(); ++col) {
        const Mask bit = Mask{1} << col;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                               [&](Mask m) { return (m & bit) != 0; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        }
        ++r;
    }
    return r;
}

// Reduced row echelon form by textbook elimination. The pivot of a row is its
// lowest set coordinate; rows come out ordered by pivot.
inline Rows rref(Rows rows, std::size_t n) {
    Rows out;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        const Mask bit = Mask{1} << col;
        std::size_t pick = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i] & bit) {
                pick = i;
                break;
            }
        }
        if (pick == rows.size()) continue;
        std::swap(rows[r], rows[pick]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

// Every element of the span, sorted.
inline std::vector<Mask> span(const Rows& rows) {
    std::set<Mask> words{0};
    for (Mask g : rows) {
        std::vector<Mask> more;
        for (Mask w : words) more.push_back(w ^ g);
        words.insert(more.begin(), more.end());
    }
    return {words.begin(), words.end()};
}

inline bool in_span(const Rows& rows, Mask w) {
    Rows with = rows;
    with.push_back(w);
    return rank(with) == rank(rows);
}

inline bool same_span(const Rows& a, const Rows& b) {
    Rows both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(a) == rank(b) && rank(both) == rank(a);
}

inline Mask permute(const std::vector<std::size_t>& images, Mask w) {
    Mask out = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if ((w >> i) & 1u) out |= Mask{1} << images[i];
    }
    return out;
}

inline bool fixes_span(const std::vector<std::size_t>& images, const Rows& rows) {
    return std::all_of(rows.begin(), rows.end(), [&](Mask g) { return in_span(rows, permute(images, g)); });
}

// |PAut| by trying all n! permutations.
inline std::uint64_t paut_order(std::size_t n, const Rows& rows) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::uint64_t count = 0;
    do {
        if (fixes_span(images, rows)) ++count;
    } while (std::next_permutation(images.begin(), images.end()));
    return count;
}

inline std::vector<std::uint64_t> weight_distribution(std::size_t n, const Rows& rows) {
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (Mask w : span(rows)) ++counts[static_cast<std::size_t>(__builtin_popcountll(w))];
    return counts;
}

// [n, k]_2 from the product formula.
inline std::uint64_t gaussian_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= (static_cast<unsigned __int128>(1) << n) - (static_cast<unsigned __int128>(1) << i);
        den *= (static_cast<unsigned __int128>(1) << k) - (static_cast<unsigned __int128>(1) << i);
    }
    return static_cast<std::uint64_t>(num / den);
}

inline std::vector<std::size_t> sigma_images(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i ^ 1u;
    return images;
}

// Every k-dimensional subspace of GF(2)^n as an oracle RREF, by closing over
// all k-subsets of nonzero vectors. Feasible only for tiny n.
inline std::set<Rows> all_subspaces(std::size_t n, std::size_t k) {
    std::set<Rows> out;
    const Mask top = Mask{1} << n;
    Rows pick;
    auto rec = [&](auto&& self, Mask from) -> void {
        if (pick.size() == k) {
            if (rank(pick) == k) out.insert(rref(pick, n));
            return;
        }
        for (Mask v = from; v < top; ++v) {
            pick.push_back(v);
            if (rank(pick) == pick.size()) self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace oracle
