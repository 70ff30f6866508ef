#include "invaut/aut_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "aut_search.hpp"
#include "invaut/error.hpp"

namespace invaut {

namespace {

using detail::AutomorphismSearch;
using detail::SearchOptions;

// Pointwise stabilizer chain G = G_0 >= G_1 >= ... >= G_n = 1, where G_i fixes
// 0..i-1. transversals[i] holds one element of G_i per point of the orbit of i.
struct StabilizerChain {
    std::vector<Perm> generators;
    std::vector<std::vector<Perm>> transversals;
    std::uint64_t order = 1;
};

std::map<std::size_t, Perm> orbit_with_representatives(std::size_t point, std::size_t n,
                                                       const std::vector<Perm>& generators) {
    std::map<std::size_t, Perm> reps;
    reps.emplace(point, Perm::identity(n));
    std::deque<std::size_t> queue{point};
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            const auto y = g(x);
            if (reps.count(y) != 0) continue;
            reps.emplace(y, compose(reps.at(x), g));
            queue.push_back(y);
        }
    }
    return reps;
}

StabilizerChain build_chain(const LinearCode& code) {
    AutomorphismSearch search(code);
    const std::size_t n = code.length();
    StabilizerChain chain;
    chain.transversals.resize(n);

    // Deepest level first, so generators found so far always lie in G_i.
    for (std::size_t i = n; i-- > 0;) {
        auto reps = orbit_with_representatives(i, n, chain.generators);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (reps.count(j) != 0 || !search.same_signature(i, j)) continue;
            SearchOptions options;
            options.forced.assign(n, -1);
            for (std::size_t f = 0; f < i; ++f) options.forced[f] = static_cast<int>(f);
            options.forced[i] = static_cast<int>(j);
            std::optional<Perm> found;
            search.run(options, [&](const std::vector<std::size_t>& images) {
                found = Perm::from_images(images);
                return true;
            });
            if (!found) continue;
            chain.generators.push_back(std::move(*found));
            reps = orbit_with_representatives(i, n, chain.generators);
        }
        for (auto& [point, rep] : reps) chain.transversals[i].push_back(std::move(rep));
        chain.order *= chain.transversals[i].size();
    }
    return chain;
}

template <class Accept>
std::optional<Perm> first_automorphism(const LinearCode& code, const SearchOptions& options, Accept&& accept) {
    AutomorphismSearch search(code);
    std::optional<Perm> found;
    search.run(options, [&](const std::vector<std::size_t>& images) {
        auto p = Perm::from_images(images);
        if (!accept(p)) return false;
        found = std::move(p);
        return true;
    });
    return found;
}

bool is_prime(std::size_t p) {
    if (p < 2) return false;
    for (std::size_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

bool semiregular(const std::vector<Perm>& group) {
    for (const auto& g : group) {
        if (!g.is_identity() && fixed_point_count(g) != 0) return false;
    }
    return true;
}

// Closure of group ∪ {extra}; nullopt once it grows past `cap` elements.
std::optional<std::vector<Perm>> closure(const std::vector<Perm>& group, const Perm& extra, std::size_t cap) {
    std::vector<Perm> elements = group;
    if (std::find(elements.begin(), elements.end(), extra) == elements.end()) elements.push_back(extra);
    for (std::size_t a = 0; a < elements.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            for (const auto& prod : {compose(elements[a], elements[b]), compose(elements[b], elements[a])}) {
                if (std::find(elements.begin(), elements.end(), prod) != elements.end()) continue;
                elements.push_back(prod);
                if (elements.size() > cap) return std::nullopt;
            }
        }
    }
    return elements;
}

// Extends the semiregular group `current` towards a regular one using
// fixed-point-free elements of PAut. A regular group R containing `current`
// has exactly one element sending 0 to each point, so trying every candidate
// for the next uncovered point is exhaustive.
bool extend_to_regular(const std::vector<Perm>& current, const std::vector<Perm>& fpf, std::size_t n) {
    if (current.size() == n) return true;
    std::vector<bool> covered(n, false);
    for (const auto& g : current) covered[g(0)] = true;
    std::size_t target = 0;
    while (covered[target]) ++target;
    for (const auto& e : fpf) {
        if (e(0) != target) continue;
        auto next = closure(current, e, n);
        if (!next || n % next->size() != 0 || !semiregular(*next)) continue;
        if (extend_to_regular(*next, fpf, n)) return true;
    }
    return false;
}

}  // namespace

bool is_automorphism(const LinearCode& code, const Perm& p) {
    if (p.size() != code.length()) throw InvalidInput("is_automorphism: permutation and code lengths differ");
    for (const auto& g : code.generators()) {
        if (!contains(code, apply(p, g))) return false;
    }
    return true;
}

PAutReport paut(const LinearCode& code) {
    auto chain = build_chain(code);
    PAutReport report;
    report.order = chain.order;
    report.generators = std::move(chain.generators);
    report.is_cyclic_of_order_2 = report.order == 2;
    report.has_fpf_involution = find_fixed_point_free_involution(code).has_value();
    report.has_fixed_point_involution = find_involution_with_fixed_point(code).has_value();
    return report;
}

std::uint64_t paut_order(const LinearCode& code) { return build_chain(code).order; }

std::vector<Perm> paut_elements(const LinearCode& code, std::uint64_t limit) {
    const auto chain = build_chain(code);
    if (chain.order > limit) {
        throw TooLarge("PAut has " + std::to_string(chain.order) + " elements, above the listing limit " +
                       std::to_string(limit));
    }
    std::vector<Perm> elements{Perm::identity(code.length())};
    for (std::size_t i = code.length(); i-- > 0;) {
        std::vector<Perm> next;
        next.reserve(elements.size() * chain.transversals[i].size());
        for (const auto& h : elements) {
            for (const auto& u : chain.transversals[i]) next.push_back(compose(h, u));
        }
        elements = std::move(next);
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

bool is_group_code(const LinearCode& code) {
    const std::size_t n = code.length();
    if (n > kMaxGroupCodeLength) {
        throw TooLarge("group-code test supports n <= " + std::to_string(kMaxGroupCodeLength) + ", got n = " +
                       std::to_string(n));
    }
    if (n <= 1) return true;
    const auto chain = build_chain(code);
    if (chain.transversals[0].size() != n || chain.order % n != 0) return false;

    std::vector<Perm> fpf;
    for (auto& g : paut_elements(code)) {
        if (fixed_point_count(g) == 0) fpf.push_back(std::move(g));
    }
    return extend_to_regular({Perm::identity(n)}, fpf, n);
}

std::optional<Perm> quasi_group_witness(const LinearCode& code) {
    const std::size_t n = code.length();
    if (n > kMaxExactLength) {
        throw TooLarge("quasi-group test supports n <= " + std::to_string(kMaxExactLength) + ", got n = " +
                       std::to_string(n));
    }
    AutomorphismSearch search(code);
    for (std::size_t p = 2; p <= n; ++p) {
        if (!is_prime(p) || n % p != 0) continue;
        SearchOptions options;
        options.cycle_length = p;
        std::optional<Perm> found;
        search.run(options, [&](const std::vector<std::size_t>& images) {
            found = Perm::from_images(images);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool is_quasi_group_code(const LinearCode& code) { return quasi_group_witness(code).has_value(); }

std::optional<Perm> find_automorphism_outside(const LinearCode& code, std::span<const Perm> excluded) {
    return first_automorphism(code, SearchOptions{}, [&](const Perm& p) {
        return std::find(excluded.begin(), excluded.end(), p) == excluded.end();
    });
}

bool paut_is_generated_by(const LinearCode& code, const Perm& g) {
    if (g.size() != code.length()) throw InvalidInput("paut_is_generated_by: length mismatch");
    if (!is_automorphism(code, g)) return false;
    const Perm group[] = {Perm::identity(code.length()), g};
    return !find_automorphism_outside(code, group).has_value();
}

std::optional<Perm> find_involution_other_than(const LinearCode& code, const Perm& excluded) {
    SearchOptions options;
    options.involution = true;
    return first_automorphism(code, options, [&](const Perm& p) { return !p.is_identity() && p != excluded; });
}

std::optional<Perm> find_involution_with_fixed_point(const LinearCode& code) {
    SearchOptions options;
    options.involution = true;
    return first_automorphism(code, options,
                              [](const Perm& p) { return !p.is_identity() && fixed_point_count(p) != 0; });
}

std::optional<Perm> find_fixed_point_free_involution(const LinearCode& code) {
    SearchOptions options;
    options.involution = true;
    options.fixed_point_free = true;
    return first_automorphism(code, options, [](const Perm& p) { return !p.is_identity(); });
}

}  // namespace invaut
