#include "invaut/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "invaut/error.hpp"

namespace invaut {

Perm Perm::identity(std::size_t n) {
    Perm p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
    return p;
}

Perm Perm::from_images(std::vector<std::size_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (auto img : images) {
        if (img >= images.size() || seen[img]) throw InvalidInput("perm: image table is not a bijection");
        seen[img] = true;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
}

Perm Perm::parse(std::string_view text, std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    std::vector<bool> used(n, false);

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> InvalidInput {
        return InvalidInput("perm: cannot parse \"" + std::string(text) + "\": " + why);
    };

    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') throw fail("expected '('");
        ++pos;
        std::vector<std::size_t> cycle;
        skip_space();
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            skip_space();
            continue;
        }
        while (true) {
            skip_space();
            std::size_t value = 0;
            std::size_t digits = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
                ++pos;
                ++digits;
            }
            if (digits == 0) throw fail("expected a point");
            if (value < 1 || value > n) throw fail("point " + std::to_string(value) + " outside 1.." + std::to_string(n));
            if (used[value - 1]) throw fail("point " + std::to_string(value) + " appears twice");
            used[value - 1] = true;
            cycle.push_back(value - 1);
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            throw fail("expected ',' or ')'");
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return from_images(std::move(images));
}

Perm Perm::from_transpositions(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> swaps) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    for (auto [a, b] : swaps) {
        if (a >= n || b >= n || a == b || images[a] != a || images[b] != b) {
            throw InvalidInput("perm: transpositions must be disjoint 2-cycles inside the length");
        }
        images[a] = b;
        images[b] = a;
    }
    Perm p;
    p.images_ = std::move(images);
    return p;
}

bool Perm::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

Perm Perm::inverse() const {
    Perm inv;
    inv.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = i;
    return inv;
}

std::string Perm::to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        out += '(';
        std::size_t i = start;
        bool first = true;
        do {
            if (!first) out += ',';
            first = false;
            out += std::to_string(i + 1);
            seen[i] = true;
            i = images_[i];
        } while (i != start);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw InvalidInput("compose: length mismatch");
    std::vector<std::size_t> images(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) images[i] = q(p(i));
    return Perm::from_images(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& b) {
    if (p.size() != b.size()) throw InvalidInput("conjugate: length mismatch");
    return compose(compose(b.inverse(), p), b);
}

Word apply(const Perm& p, const Word& w) {
    if (p.size() != w.size()) throw InvalidInput("apply: permutation and word lengths differ");
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w.get(i)) out.set(p(i));
    }
    return out;
}

std::uint64_t apply_mask(const Perm& p, std::uint64_t w) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out |= ((w >> i) & 1u) << p(i);
    }
    return out;
}

LinearCode image_code(const LinearCode& code, const Perm& p) {
    if (p.size() != code.length()) throw InvalidInput("image_code: permutation and code lengths differ");
    std::vector<Word> rows;
    rows.reserve(code.dim());
    for (const auto& g : code.generators()) rows.push_back(apply(p, g));
    return rref(code.length(), rows);
}

Perm canonical_sigma(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw InvalidInput("canonical_sigma: n must be even and positive, got " + std::to_string(n));
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; i += 2) {
        images[i] = i + 1;
        images[i + 1] = i;
    }
    return Perm::from_images(std::move(images));
}

bool is_canonical_sigma(const Perm& p) {
    if (p.size() == 0 || p.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p(i) != (i ^ 1u)) return false;
    }
    return true;
}

CycleType cycle_type(const Perm& p) {
    CycleType ct;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t i = start; !seen[i]; i = p(i)) {
            seen[i] = true;
            ++len;
        }
        ct.lengths.push_back(len);
    }
    std::sort(ct.lengths.begin(), ct.lengths.end(), std::greater<>());
    return ct;
}

bool is_involution(const Perm& p) {
    bool moved = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p(p(i)) != i) return false;
        if (p(i) != i) moved = true;
    }
    return moved;
}

bool is_fixed_point_free(const Perm& p) { return fixed_point_count(p) == 0; }

std::size_t fixed_point_count(const Perm& p) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p(i) == i) ++count;
    }
    return count;
}

std::uint64_t order(const Perm& p) {
    std::uint64_t result = 1;
    for (auto len : cycle_type(p).lengths) result = std::lcm(result, static_cast<std::uint64_t>(len));
    return result;
}

}  // namespace invaut
