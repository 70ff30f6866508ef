#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "invaut/word.hpp"

namespace invaut {

/// Largest dimension whose 2^k codewords we are willing to enumerate.
inline constexpr std::size_t kMaxEnumerationDim = 30;

/// A subspace of GF(2)^n held by its reduced row echelon generator matrix.
///
/// Row r has its leading 1 in pivots()[r]; pivots are strictly increasing and
/// each pivot column is zero in every other row. Because the RREF basis of a
/// subspace is unique, two codes are equal exactly when their matrices are.
class LinearCode {
public:
    LinearCode() = default;

    static LinearCode zero(std::size_t length);
    static LinearCode full(std::size_t length);

    std::size_t length() const noexcept { return length_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Word>& generators() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Generator rows as masks (length <= 64 only).
    std::vector<std::uint64_t> generator_masks() const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.length_ == b.length_ && a.rows_ == b.rows_;
    }

private:
    friend LinearCode rref(std::size_t length, std::span<const Word> rows);

    std::size_t length_ = 0;
    std::vector<Word> rows_;
    std::vector<std::size_t> pivots_;
};

/// Canonical RREF basis of span(rows). Dependent and zero rows are dropped.
/// Throws InvalidInput if some row does not have the given length.
LinearCode rref(std::size_t length, std::span<const Word> rows);
/// Same, taking the length from the first row; rows must be non-empty.
LinearCode rref(std::span<const Word> rows);

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[i] = number of codewords of weight i

    std::uint64_t operator[](std::size_t i) const { return counts[i]; }
    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exact weight distribution by enumerating all 2^k codewords (k <= 30).
WeightDistribution weight_distribution(const LinearCode& code);

/// Least weight of a nonzero codeword; 0 for the zero code.
std::size_t minimum_weight(const LinearCode& code);

LinearCode dual(const LinearCode& code);

/// Membership by reduction against the RREF rows.
bool contains(const LinearCode& code, const Word& w);

/// Sum of the generators selected by the bits of `coefficients`.
Word combination(const LinearCode& code, std::uint64_t coefficients);

/// Streams all 2^k codewords in reflected Gray-code order: the first word is
/// zero and step t adds generator number countr_zero(t).
class CodewordStream {
public:
    explicit CodewordStream(const LinearCode& code);

    bool next(Word& out);

private:
    const LinearCode* code_;
    std::uint64_t step_ = 0;
    std::uint64_t total_;
    Word current_;
};

/// Collects the whole CodewordStream (k <= 30).
std::vector<Word> codewords(const LinearCode& code);

/// Fixed-width rank helper over GF(2) for words of length <= 64.
std::size_t rank_of_masks(std::span<const std::uint64_t> rows);

}  // namespace invaut
