#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invaut {

/// A vector in GF(2)^n.
///
/// Coordinate i (0-based) is bit (i % 64) of limb i / 64; limbs are stored
/// little-endian. Bits at positions >= n are always zero, so equality and
/// hashing can work limb-wise. Text form is a 0/1 string whose first
/// character is coordinate 0 (coordinate 1 in 1-based notation).
class Word {
public:
    Word() = default;
    explicit Word(std::size_t length);

    /// Parses a 0/1 string. Throws InvalidInput on any other character.
    static Word from_string(std::string_view bits);
    /// Builds a word of length <= 64 from a mask; bit i is coordinate i.
    static Word from_mask(std::size_t length, std::uint64_t mask);
    static Word ones(std::size_t length);

    std::size_t size() const noexcept { return length_; }
    bool get(std::size_t i) const { return (limbs_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { limbs_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    /// Index of the first nonzero coordinate, or size() if the word is zero.
    std::size_t leading() const noexcept;

    /// The single limb of a word with length <= 64.
    std::uint64_t mask() const;

    std::span<const std::uint64_t> limbs() const noexcept { return limbs_; }

    Word& operator^=(const Word& other);
    Word& operator+=(const Word& other) { return *this ^= other; }
    friend Word operator+(Word a, const Word& b) { return a ^= b; }

    friend bool operator==(const Word&, const Word&) = default;
    /// Orders by length, then by the text form read left to right.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> limbs_;
};

inline std::size_t weight(const Word& w) noexcept { return w.weight(); }

/// Even-overlap inner product.
bool dot(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace invaut
