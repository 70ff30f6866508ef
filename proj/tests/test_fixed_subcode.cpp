#include <doctest.h>

#include <random>

#include "invaut/aut_group.hpp"
#include "invaut/census.hpp"
#include "invaut/error.hpp"
#include "invaut/fixed_subcode.hpp"
#include "invaut/verifier.hpp"
#include "support.hpp"

using namespace invaut;
using testing::code_of;
using testing::word;

TEST_CASE("fixed subcode") {
    const auto f = fixed_subcode(LinearCode::full(2), Perm::parse("(1,2)", 2));
    CHECK(f == code_of(2, {"11"}));

    const auto c = code_of(4, {"0010", "1100"});
    CHECK(fixed_subcode(c, Perm::parse("(1,2)", 4)) == c);
    CHECK_THROWS_AS(fixed_subcode(c, Perm::identity(5)), InvalidInput);

    // kernel of id + p against a direct filter of the codewords
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + rng() % 9;
        oracle::Rows rows(rng() % 6);
        for (auto& r : rows) r = rng() & ((oracle::Mask{1} << n) - 1);
        const auto code = testing::from_masks(n, rows);
        std::vector<std::size_t> images(n);
        for (std::size_t i = 0; i < n; ++i) images[i] = i;
        std::shuffle(images.begin(), images.end(), rng);
        oracle::Rows fixed;
        for (auto w : oracle::span(rows)) {
            if (oracle::permute(images, w) == w) fixed.push_back(w);
        }
        CHECK(fixed_subcode(code, Perm::from_images(images)).generator_masks() == oracle::rref(fixed, n));
    }
}

TEST_CASE("t sets") {
    const Perm s4 = canonical_sigma(4);
    CHECK(t_set(word("1100"), s4).pairs() == std::vector<std::size_t>{0});
    CHECK(t_set(word("1100"), s4).to_string() == "{1}");
    CHECK(t_set(word("111111"), canonical_sigma(6)).full());
    CHECK(t_set(word("0000"), s4).empty());
    CHECK(t_set(word("110011"), canonical_sigma(6)).to_string() == "{1, 5}");
    CHECK_THROWS_AS(t_set(word("1000"), s4), NotFixed);
    CHECK_THROWS_AS(t_set(word("1100"), Perm::parse("(1,3)(2,4)", 4)), InvalidInput);
}

TEST_CASE("alpha_x") {
    CHECK(alpha_x(word("111111"), canonical_sigma(6)) == canonical_sigma(6));
    CHECK(alpha_x(word("1100"), canonical_sigma(4)) == Perm::parse("(1,2)", 4));
    const Word w = word("1011");
    const Word x = word("1100");
    CHECK(w + apply(canonical_sigma(4), w) == x);
    CHECK(apply(alpha_x(x, canonical_sigma(4)), w) == word("0111"));
    CHECK(apply(alpha_x(x, canonical_sigma(4)), w) == w + x);
    CHECK_THROWS_AS(alpha_x(word("0000"), canonical_sigma(4)), InvalidInput);
    CHECK_THROWS_AS(alpha_x(word("1000"), canonical_sigma(4)), NotFixed);
}

TEST_CASE("decompose") {
    const Perm s6 = canonical_sigma(6);
    const auto fixed_only = code_of(6, {"110000", "001111"});
    const auto d0 = decompose(fixed_only, s6);
    CHECK(d0.fixed == fixed_only);
    CHECK(d0.complement_basis.empty());
    CHECK(d0.x_list.empty());

    const auto d1 = decompose(LinearCode::full(2), canonical_sigma(2));
    CHECK(d1.fixed == code_of(2, {"11"}));
    REQUIRE(d1.complement_basis.size() == 1);
    CHECK(d1.x_list[0] == word("11"));

    const auto c = code_of(6, {"110000", "100011"});
    const auto d = decompose(c, s6);
    CHECK(d.fixed == code_of(6, {"110000"}));
    REQUIRE(d.complement_basis.size() == 1);
    CHECK(contains(c, d.complement_basis[0]));
    CHECK_FALSE(contains(d.fixed, d.complement_basis[0]));
    CHECK(d.x_list[0] == word("110000"));

    CHECK_THROWS_AS(decompose(code_of(4, {"1000"}), canonical_sigma(4)), NotInvariant);
    const Word bad[] = {word("110000")};
    CHECK_THROWS_AS(decompose_with_complement(c, s6, bad), InvalidInput);
}

TEST_CASE("decomposition invariants on random sigma-invariant codes") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 * (1 + rng() % 6);
        const Perm s = canonical_sigma(n);
        const auto c = random_invariant_code(rng, s);
        REQUIRE(is_automorphism(c, s));
        const auto d = decompose(c, s);
        CHECK(d.fixed.dim() + d.complement_basis.size() == c.dim());
        std::vector<Word> all = d.fixed.generators();
        all.insert(all.end(), d.complement_basis.begin(), d.complement_basis.end());
        CHECK(rref(n, all) == c);
        CHECK(rref(n, d.x_list).dim() == d.x_list.size());
        for (const auto& x : d.x_list) CHECK(contains(d.fixed, x));
        CHECK(is_automorphism(d.fixed, s));
        CHECK(2 * d.fixed.dim() >= c.dim());
    }
}

TEST_CASE("t_sigma") {
    const Perm s6 = canonical_sigma(6);
    CHECK(t_sigma(code_of(6, {"110000", "001111"}), s6).empty());
    CHECK(t_sigma(code_of(6, {"110000", "100011"}), s6).to_string() == "{1}");
    CHECK(t_sigma(LinearCode::full(6), s6).full());
    CHECK_THROWS_AS(t_sigma(code_of(4, {"1000"}), canonical_sigma(4)), NotInvariant);

    // against the pair support of (id + sigma)C, computed from every codeword
    std::mt19937_64 rng(41);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 * (1 + rng() % 6);
        const Perm s = canonical_sigma(n);
        const auto c = random_invariant_code(rng, s);
        const auto images = oracle::sigma_images(n);
        oracle::Mask support = 0;
        for (auto w : oracle::span(c.generator_masks())) support |= w ^ oracle::permute(images, w);
        TSet expected(n / 2);
        for (std::size_t p = 0; p < n / 2; ++p) {
            if ((support >> (2 * p)) & 3u) expected.insert(p);
        }
        CHECK(t_sigma(c, s) == expected);
        CHECK(t_sigma_from_decomposition(decompose(c, s), s) == expected);
    }
}

TEST_CASE("fixed point witness") {
    const Perm s6 = canonical_sigma(6);
    const auto c = code_of(6, {"110000", "100011"});
    const auto beta = fixed_point_witness(c, s6);
    REQUIRE(beta);
    CHECK(beta->to_string() == "(3,4)(5,6)");
    CHECK(is_automorphism(c, *beta));
    CHECK((*beta)(0) == 0);
    CHECK((*beta)(1) == 1);

    const auto fixed4 = code_of(4, {"1100", "0011"});
    CHECK(fixed_point_witness(fixed4, canonical_sigma(4)) == Perm::parse("(1,2)", 4));
    CHECK_FALSE(fixed_point_witness(LinearCode::full(6), s6).has_value());
    CHECK_THROWS_AS(fixed_point_witness(code_of(2, {"11"}), canonical_sigma(2)), InvalidInput);
}

TEST_CASE("extra automorphism") {
    const Perm s6 = canonical_sigma(6);
    const auto w = extra_automorphism(code_of(6, {"110000", "100011"}), s6);
    REQUIRE(w);
    CHECK(w->perm.to_string() == "(3,4)(5,6)");
    CHECK(to_string(w->path) == "T(σ)-complement");

    const auto fixed = extra_automorphism(code_of(6, {"110000", "001111"}), s6);
    REQUIRE(fixed);
    CHECK(fixed->perm.to_string() == "(1,2)");
    CHECK(to_string(fixed->path) == "pointwise-fixing pair");

    CHECK_THROWS_AS(extra_automorphism(code_of(4, {"1000"}), canonical_sigma(4)), NotInvariant);

    for (std::size_t n : {6, 8}) {
        const Perm s = canonical_sigma(n);
        for (const auto& c : enumerate_sigma_invariant(n, 4)) {
            const auto a = extra_automorphism(c, s);
            REQUIRE(a);
            CHECK(a->perm != s);
            CHECK(is_involution(a->perm));
            CHECK(is_automorphism(c, a->perm));
        }
    }
}

TEST_CASE("extra automorphism is absent exactly when sigma is the only involution") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 * (2 + rng() % 4);
        const Perm s = canonical_sigma(n);
        const auto c = random_invariant_code(rng, s);
        const auto a = extra_automorphism(c, s);
        CHECK(a.has_value() == find_involution_other_than(c, s).has_value());
        if (a) {
            CHECK(a->perm != s);
            CHECK(is_involution(a->perm));
            CHECK(is_automorphism(c, a->perm));
        }
    }
}
