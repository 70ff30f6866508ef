#include "invaut/linear_code.hpp"

#include <bit>
#include <string>

#include "invaut/error.hpp"

namespace invaut {

namespace {

void check_enumerable(const LinearCode& code) {
    if (code.dim() > kMaxEnumerationDim) {
        throw TooLarge("enumeration of 2^" + std::to_string(code.dim()) + " codewords exceeds the k <= " +
                       std::to_string(kMaxEnumerationDim) + " guard");
    }
}

}  // namespace

LinearCode LinearCode::zero(std::size_t length) {
    LinearCode c;
    c.length_ = length;
    return c;
}

LinearCode LinearCode::full(std::size_t length) {
    std::vector<Word> rows;
    rows.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        Word w(length);
        w.set(i);
        rows.push_back(std::move(w));
    }
    return rref(length, rows);
}

std::vector<std::uint64_t> LinearCode::generator_masks() const {
    std::vector<std::uint64_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.mask());
    return out;
}

LinearCode rref(std::size_t length, std::span<const Word> rows) {
    std::vector<Word> work;
    work.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != length) {
            throw InvalidInput("rref: row of length " + std::to_string(r.size()) + " in a code of length " +
                               std::to_string(length));
        }
        work.push_back(r);
    }

    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < length && rank < work.size(); ++col) {
        std::size_t sel = rank;
        while (sel < work.size() && !work[sel].get(col)) ++sel;
        if (sel == work.size()) continue;
        std::swap(work[rank], work[sel]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r != rank && work[r].get(col)) work[r] ^= work[rank];
        }
        pivots.push_back(col);
        ++rank;
    }
    work.resize(rank);

    LinearCode c;
    c.length_ = length;
    c.rows_ = std::move(work);
    c.pivots_ = std::move(pivots);
    return c;
}

LinearCode rref(std::span<const Word> rows) {
    if (rows.empty()) throw InvalidInput("rref: cannot infer the length of an empty row list");
    return rref(rows.front().size(), rows);
}

WeightDistribution weight_distribution(const LinearCode& code) {
    check_enumerable(code);
    WeightDistribution wd;
    wd.counts.assign(code.length() + 1, 0);
    CodewordStream stream(code);
    Word w;
    while (stream.next(w)) ++wd.counts[w.weight()];
    return wd;
}

std::size_t minimum_weight(const LinearCode& code) {
    auto wd = weight_distribution(code);
    for (std::size_t i = 1; i < wd.counts.size(); ++i) {
        if (wd.counts[i] != 0) return i;
    }
    return 0;
}

LinearCode dual(const LinearCode& code) {
    // With G = [I | A] after moving pivots to the front, the dual is spanned by
    // one vector per free column f: e_f plus the pivot columns of the rows that
    // have a 1 in column f.
    const std::size_t n = code.length();
    std::vector<bool> is_pivot(n, false);
    for (auto p : code.pivots()) is_pivot[p] = true;

    std::vector<Word> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Word h(n);
        h.set(f);
        for (std::size_t r = 0; r < code.dim(); ++r) {
            if (code.generators()[r].get(f)) h.set(code.pivots()[r]);
        }
        rows.push_back(std::move(h));
    }
    return rref(n, rows);
}

bool contains(const LinearCode& code, const Word& w) {
    if (w.size() != code.length()) throw InvalidInput("contains: length mismatch");
    Word residue = w;
    for (std::size_t r = 0; r < code.dim(); ++r) {
        if (residue.get(code.pivots()[r])) residue ^= code.generators()[r];
    }
    return residue.is_zero();
}

Word combination(const LinearCode& code, std::uint64_t coefficients) {
    Word w(code.length());
    for (std::size_t r = 0; r < code.dim() && coefficients != 0; ++r, coefficients >>= 1) {
        if (coefficients & 1u) w ^= code.generators()[r];
    }
    return w;
}

CodewordStream::CodewordStream(const LinearCode& code) : code_(&code), current_(code.length()) {
    check_enumerable(code);
    total_ = std::uint64_t{1} << code.dim();
}

bool CodewordStream::next(Word& out) {
    if (step_ == total_) return false;
    if (step_ != 0) current_ ^= code_->generators()[static_cast<std::size_t>(std::countr_zero(step_))];
    ++step_;
    out = current_;
    return true;
}

std::vector<Word> codewords(const LinearCode& code) {
    std::vector<Word> out;
    CodewordStream stream(code);
    out.reserve(std::size_t{1} << code.dim());
    Word w;
    while (stream.next(w)) out.push_back(w);
    return out;
}

std::size_t rank_of_masks(std::span<const std::uint64_t> rows) {
    std::uint64_t basis[64] = {};
    std::size_t rank = 0;
    for (auto v : rows) {
        while (v != 0) {
            const auto top = 63 - std::countl_zero(v);
            if (basis[top] == 0) {
                basis[top] = v;
                ++rank;
                break;
            }
            v ^= basis[top];
        }
    }
    return rank;
}

}  // namespace invaut
