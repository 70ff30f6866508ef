#include "invaut/word.hpp"

#include <bit>

#include "invaut/error.hpp"

namespace invaut {

namespace {

std::size_t limb_count(std::size_t length) { return (length + 63) / 64; }

}  // namespace

Word::Word(std::size_t length) : length_(length), limbs_(limb_count(length), 0) {}

Word Word::from_string(std::string_view bits) {
    Word w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            w.set(i);
        } else if (bits[i] != '0') {
            throw InvalidInput("word: unexpected character '" + std::string(1, bits[i]) + "'");
        }
    }
    return w;
}

Word Word::from_mask(std::size_t length, std::uint64_t mask) {
    if (length > 64) throw InvalidInput("word: from_mask needs length <= 64");
    Word w(length);
    if (length == 0) return w;
    if (length < 64) mask &= (std::uint64_t{1} << length) - 1;
    w.limbs_[0] = mask;
    return w;
}

Word Word::ones(std::size_t length) {
    Word w(length);
    for (std::size_t i = 0; i < length; ++i) w.set(i);
    return w;
}

void Word::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
        limbs_[i >> 6] |= bit;
    } else {
        limbs_[i >> 6] &= ~bit;
    }
}

std::size_t Word::weight() const noexcept {
    std::size_t total = 0;
    for (auto limb : limbs_) total += static_cast<std::size_t>(std::popcount(limb));
    return total;
}

bool Word::is_zero() const noexcept {
    for (auto limb : limbs_) {
        if (limb != 0) return false;
    }
    return true;
}

std::size_t Word::leading() const noexcept {
    for (std::size_t l = 0; l < limbs_.size(); ++l) {
        if (limbs_[l] != 0) return l * 64 + static_cast<std::size_t>(std::countr_zero(limbs_[l]));
    }
    return length_;
}

std::uint64_t Word::mask() const {
    if (length_ > 64) throw InvalidInput("word: mask() needs length <= 64");
    return limbs_.empty() ? 0 : limbs_[0];
}

Word& Word::operator^=(const Word& other) {
    if (other.length_ != length_) throw InvalidInput("word: length mismatch in addition");
    for (std::size_t l = 0; l < limbs_.size(); ++l) limbs_[l] ^= other.limbs_[l];
    return *this;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    // Text order puts coordinate 0 first, i.e. the lowest bit is most significant.
    for (std::size_t l = 0; l < a.limbs_.size(); ++l) {
        const auto x = a.limbs_[l];
        const auto y = b.limbs_[l];
        if (x == y) continue;
        const auto first = static_cast<unsigned>(std::countr_zero(x ^ y));
        return ((x >> first) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::string Word::to_string() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

bool dot(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw InvalidInput("dot: length mismatch");
    unsigned parity = 0;
    auto la = a.limbs();
    auto lb = b.limbs();
    for (std::size_t l = 0; l < la.size(); ++l) parity ^= std::popcount(la[l] & lb[l]) & 1u;
    return parity != 0;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(w.size());
    for (auto limb : w.limbs()) h = h * 1099511628211ull ^ std::hash<std::uint64_t>{}(limb);
    return h;
}

}  // namespace invaut
