#include "invaut/fixed_subcode.hpp"

#include <utility>

#include "invaut/aut_group.hpp"
#include "invaut/error.hpp"

namespace invaut {

namespace {

// Incremental row reduction over words of one length, optionally tracking
// which inserted vectors each basis row is a combination of.
class Eliminator {
public:
    /// Reduces v (and its tag) against the basis; true when v ends up zero.
    bool reduce(Word& v, Word* tag) const {
        for (const auto& row : rows_) {
            if (v.get(row.lead)) {
                v ^= row.vec;
                if (tag != nullptr) *tag ^= row.tag;
            }
        }
        return v.is_zero();
    }

    /// Adds v unless it is dependent; returns whether it was independent.
    bool insert(Word v, Word tag = {}) {
        if (reduce(v, tag.size() != 0 ? &tag : nullptr)) return false;
        const auto lead = v.leading();
        rows_.push_back({std::move(v), std::move(tag), lead});
        return true;
    }

    std::size_t rank() const noexcept { return rows_.size(); }

private:
    struct Row {
        Word vec;
        Word tag;
        std::size_t lead;
    };
    std::vector<Row> rows_;
};

void require_canonical(const Perm& sigma, const char* op) {
    if (!is_canonical_sigma(sigma)) {
        throw InvalidInput(std::string(op) + ": expected the canonical involution (1,2)(3,4)...(n-1,n), got " +
                           sigma.to_string());
    }
}

void require_invariant(const LinearCode& code, const Perm& sigma, const char* op) {
    require_canonical(sigma, op);
    if (sigma.size() != code.length()) throw InvalidInput(std::string(op) + ": length mismatch");
    if (!is_automorphism(code, sigma)) throw NotInvariant(std::string(op) + ": sigma is not an automorphism of the code");
}

TSet odd_pair_support(const Word& w) {
    TSet t(w.size() / 2);
    for (std::size_t p = 0; p < t.pair_count(); ++p) {
        if (w.get(2 * p) || w.get(2 * p + 1)) t.insert(p);
    }
    return t;
}

std::pair<bool, bool> pair_bits(const Word& w, std::size_t pair) { return {w.get(2 * pair), w.get(2 * pair + 1)}; }

bool valid_extra(const LinearCode& code, const Perm& sigma, const Perm& alpha) {
    return alpha != sigma && is_involution(alpha) && is_automorphism(code, alpha);
}

Perm swaps(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> list) {
    std::vector<std::pair<std::size_t, std::size_t>> v(list);
    return Perm::from_transpositions(n, v);
}

// The pair-swap constructions for a complement of dimension two, with
// x = w + w^sigma and y = u + u^sigma. Each candidate is validated by the
// caller, so a construction that does not apply simply fails the check.
std::optional<Witness> two_complement_constructions(const LinearCode& code, const Perm& sigma,
                                                    const FixedDecomposition& dec) {
    const std::size_t n = code.length();
    const Word& w = dec.complement_basis[0];
    const Word& u = dec.complement_basis[1];
    const TSet tx = t_set(dec.x_list[0], sigma);
    const TSet ty = t_set(dec.x_list[1], sigma);
    const TSet both = tx & ty;
    const TSet only_x = tx - ty;
    const TSet only_y = ty - tx;

    auto accept = [&](const Perm& alpha, WitnessPath path) -> std::optional<Witness> {
        if (valid_extra(code, sigma, alpha)) return Witness{alpha, path};
        return std::nullopt;
    };

    const TSet all = tx | ty;
    if (!all.full() && !all.empty()) {
        if (auto hit = accept(pair_product(n, all), WitnessPath::UnionProduct)) return hit;
    }
    if (tx.is_subset_of(ty) && tx != ty) {
        if (auto hit = accept(alpha_x(dec.x_list[0], sigma), WitnessPath::NestedAlpha)) return hit;
    }
    if (ty.is_subset_of(tx) && tx != ty) {
        if (auto hit = accept(alpha_x(dec.x_list[1], sigma), WitnessPath::NestedAlpha)) return hit;
    }

    const auto common = both.pairs();
    for (std::size_t s = 0; s < common.size(); ++s) {
        for (std::size_t t = s + 1; t < common.size(); ++t) {
            const std::size_t a = 2 * common[s];
            const std::size_t b = 2 * common[t];
            const bool u_eq = u.get(a) == u.get(b);
            const bool w_eq = w.get(a) == w.get(b);
            if (u_eq && w_eq) {
                if (auto hit = accept(swaps(n, {{a, b}, {a + 1, b + 1}}), WitnessPath::ParallelSwap)) return hit;
            } else if (!u_eq && !w_eq) {
                if (auto hit = accept(swaps(n, {{a, b + 1}, {a + 1, b}}), WitnessPath::CrossedSwap)) return hit;
            } else if (only_x.size() == 1 && only_y.size() == 1) {
                // The pair outside the common part belonging to the word that differs.
                const std::size_t k = u_eq ? only_x.pairs()[0] : only_y.pairs()[0];
                if (auto hit = accept(swaps(n, {{2 * k, 2 * k + 1}, {a, b}, {a + 1, b + 1}}), WitnessPath::MixedSwap)) {
                    return hit;
                }
            }
        }
    }

    // Pairs moved by one word only: `mover` flips there, `still` is constant.
    const std::pair<const TSet*, std::pair<const Word*, const Word*>> sides[] = {
        {&only_x, {&w, &u}},
        {&only_y, {&u, &w}},
    };
    for (const auto& [own, words] : sides) {
        const Word& mover = *words.first;
        const Word& still = *words.second;
        const TSet& other = own == &only_x ? only_y : only_x;
        const auto list = own->pairs();
        for (std::size_t s = 0; s < list.size(); ++s) {
            for (std::size_t t = s + 1; t < list.size(); ++t) {
                const std::size_t k = list[s];
                const std::size_t l = list[t];
                std::size_t k1 = 2 * k;
                std::size_t l1 = 2 * l;
                if (mover.get(k1) != mover.get(l1)) l1 = 2 * l + 1;
                if (pair_bits(still, k) == pair_bits(still, l)) {
                    if (auto hit = accept(swaps(n, {{k1, l1}}), WitnessPath::SingleTransposition)) return hit;
                } else if (list.size() == 2) {
                    std::vector<std::pair<std::size_t, std::size_t>> parts;
                    for (auto p : other.pairs()) parts.emplace_back(2 * p, 2 * p + 1);
                    parts.emplace_back(k1, l1);
                    parts.emplace_back(sigma(k1), sigma(l1));
                    if (auto hit = accept(Perm::from_transpositions(n, parts), WitnessPath::PairedTranspositions)) {
                        return hit;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::size_t TSet::size() const noexcept {
    std::size_t count = 0;
    for (bool b : member_) count += b ? 1 : 0;
    return count;
}

std::vector<std::size_t> TSet::pairs() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < member_.size(); ++p) {
        if (member_[p]) out.push_back(p);
    }
    return out;
}

bool TSet::is_subset_of(const TSet& other) const {
    for (std::size_t p = 0; p < member_.size(); ++p) {
        if (member_[p] && !other.member_[p]) return false;
    }
    return true;
}

TSet TSet::operator|(const TSet& other) const {
    TSet out(member_.size());
    for (std::size_t p = 0; p < member_.size(); ++p) out.member_[p] = member_[p] || other.member_[p];
    return out;
}

TSet TSet::operator-(const TSet& other) const {
    TSet out(member_.size());
    for (std::size_t p = 0; p < member_.size(); ++p) out.member_[p] = member_[p] && !other.member_[p];
    return out;
}

TSet TSet::operator&(const TSet& other) const {
    TSet out(member_.size());
    for (std::size_t p = 0; p < member_.size(); ++p) out.member_[p] = member_[p] && other.member_[p];
    return out;
}

std::string TSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto p : pairs()) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(2 * p + 1);
    }
    return out + "}";
}

LinearCode fixed_subcode(const LinearCode& code, const Perm& p) {
    if (p.size() != code.length()) throw InvalidInput("fixed_subcode: permutation and code lengths differ");
    const std::size_t k = code.dim();
    Eliminator images;
    std::vector<Word> kernel;
    for (std::size_t r = 0; r < k; ++r) {
        const Word& g = code.generators()[r];
        Word moved = g + apply(p, g);
        Word tag(k);
        tag.set(r);
        Word reduced = moved;
        if (images.reduce(reduced, &tag)) {
            Word fixed_word(code.length());
            for (std::size_t s = 0; s < k; ++s) {
                if (tag.get(s)) fixed_word ^= code.generators()[s];
            }
            kernel.push_back(std::move(fixed_word));
        } else {
            Word fresh(k);
            fresh.set(r);
            images.insert(std::move(moved), std::move(fresh));
        }
    }
    return rref(code.length(), kernel);
}

TSet t_set(const Word& x, const Perm& sigma) {
    require_canonical(sigma, "t_set");
    if (x.size() != sigma.size()) throw InvalidInput("t_set: length mismatch");
    if (apply(sigma, x) != x) throw NotFixed("t_set: " + x.to_string() + " is not fixed by sigma");
    return odd_pair_support(x);
}

Perm alpha_x(const Word& x, const Perm& sigma) {
    const TSet t = t_set(x, sigma);
    if (t.empty()) throw InvalidInput("alpha_x: x must be nonzero");
    return pair_product(x.size(), t);
}

Perm pair_product(std::size_t length, const TSet& pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    for (auto p : pairs.pairs()) parts.emplace_back(2 * p, 2 * p + 1);
    return Perm::from_transpositions(length, parts);
}

FixedDecomposition decompose(const LinearCode& code, const Perm& sigma) {
    require_invariant(code, sigma, "decompose");
    FixedDecomposition dec;
    dec.fixed = fixed_subcode(code, sigma);
    Eliminator span;
    for (const auto& g : dec.fixed.generators()) span.insert(g);
    for (const auto& row : code.generators()) {
        if (span.rank() == code.dim()) break;
        if (span.insert(row)) {
            dec.x_list.push_back(row + apply(sigma, row));
            dec.complement_basis.push_back(row);
        }
    }
    return dec;
}

FixedDecomposition decompose_with_complement(const LinearCode& code, const Perm& sigma,
                                             std::span<const Word> complement) {
    require_invariant(code, sigma, "decompose_with_complement");
    FixedDecomposition dec;
    dec.fixed = fixed_subcode(code, sigma);
    if (dec.fixed.dim() + complement.size() != code.dim()) {
        throw InvalidInput("decompose_with_complement: complement has the wrong dimension");
    }
    Eliminator span;
    for (const auto& g : dec.fixed.generators()) span.insert(g);
    for (const auto& w : complement) {
        if (w.size() != code.length() || !contains(code, w) || !span.insert(w)) {
            throw InvalidInput("decompose_with_complement: vectors do not form a complement of the fixed subcode");
        }
        dec.complement_basis.push_back(w);
        dec.x_list.push_back(w + apply(sigma, w));
    }
    return dec;
}

TSet t_sigma(const LinearCode& code, const Perm& sigma) {
    require_invariant(code, sigma, "t_sigma");
    Word support(code.length());
    for (const auto& g : code.generators()) {
        const Word moved = g + apply(sigma, g);
        for (std::size_t i = 0; i < code.length(); ++i) {
            if (moved.get(i)) support.set(i);
        }
    }
    return odd_pair_support(support);
}

TSet t_sigma_from_decomposition(const FixedDecomposition& decomposition, const Perm& sigma) {
    require_canonical(sigma, "t_sigma_from_decomposition");
    TSet out(sigma.size() / 2);
    for (const auto& x : decomposition.x_list) out = out | t_set(x, sigma);
    return out;
}

std::optional<Perm> fixed_point_witness(const LinearCode& code, const Perm& sigma) {
    const TSet t = t_sigma(code, sigma);
    if (code.length() < 4) throw InvalidInput("fixed_point_witness: needs n >= 4");
    if (t.full()) return std::nullopt;
    if (t.empty()) return swaps(code.length(), {{0, 1}});
    TSet outside(t.pair_count());
    for (std::size_t p = 0; p < t.pair_count(); ++p) {
        if (!t.contains(p)) outside.insert(p);
    }
    return pair_product(code.length(), outside);
}

std::string to_string(WitnessPath path) {
    switch (path) {
        case WitnessPath::PointwiseFixingPair: return "pointwise-fixing pair";
        case WitnessPath::TSigmaComplement: return "T(σ)-complement";
        case WitnessPath::AlphaX: return "α_x pair product";
        case WitnessPath::UnionProduct: return "T_x ∪ T_y pair product";
        case WitnessPath::NestedAlpha: return "nested α_x";
        case WitnessPath::MixedSwap: return "mixed pair swap";
        case WitnessPath::ParallelSwap: return "parallel pair swap";
        case WitnessPath::CrossedSwap: return "crossed pair swap";
        case WitnessPath::SingleTransposition: return "single transposition";
        case WitnessPath::PairedTranspositions: return "paired transpositions";
        case WitnessPath::ExhaustiveSearch: return "exhaustive search";
    }
    return "unknown";
}

std::optional<Witness> extra_automorphism(const LinearCode& code, const Perm& sigma) {
    require_invariant(code, sigma, "extra_automorphism");

    if (code.length() >= 4) {
        const TSet t = t_sigma(code, sigma);
        if (auto beta = fixed_point_witness(code, sigma); beta && valid_extra(code, sigma, *beta)) {
            return Witness{*beta, t.empty() ? WitnessPath::PointwiseFixingPair : WitnessPath::TSigmaComplement};
        }
    }

    const auto dec = decompose(code, sigma);
    if (dec.fixed.dim() <= 20) {
        CodewordStream stream(dec.fixed);
        Word x;
        while (stream.next(x)) {
            if (x.is_zero()) continue;
            const Perm alpha = alpha_x(x, sigma);
            if (valid_extra(code, sigma, alpha)) return Witness{alpha, WitnessPath::AlphaX};
        }
    }

    if (dec.complement_basis.size() == 2) {
        if (auto hit = two_complement_constructions(code, sigma, dec)) return hit;
    }

    if (auto alpha = find_involution_other_than(code, sigma)) return Witness{*alpha, WitnessPath::ExhaustiveSearch};
    return std::nullopt;
}

}  // namespace invaut
