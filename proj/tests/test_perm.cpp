#include <doctest.h>

#include <random>

#include "invaut/error.hpp"
#include "invaut/perm.hpp"
#include "support.hpp"

using namespace invaut;
using testing::code_of;
using testing::word;

namespace {

Perm random_perm(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Perm::from_images(images);
}

Word random_word(std::mt19937_64& rng, std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w.set(i, rng() & 1u);
    return w;
}

}  // namespace

TEST_CASE("parse and print cycle notation") {
    const Perm p = Perm::parse("(1,2)(3,4)", 4);
    CHECK(p(0) == 1);
    CHECK(p(3) == 2);
    CHECK(p.to_string() == "(1,2)(3,4)");
    CHECK(Perm::parse(" ( 1 , 3 ,2 ) ", 3).to_string() == "(1,3,2)");
    CHECK(Perm::parse("()", 5).is_identity());
    CHECK(Perm::identity(3).to_string() == "()");
    CHECK_THROWS_AS(Perm::parse("(1,5)", 4), InvalidInput);
    CHECK_THROWS_AS(Perm::parse("(1,2)(2,3)", 4), InvalidInput);
    CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), InvalidInput);
}

TEST_CASE("apply") {
    CHECK(apply(Perm::identity(4), word("1011")) == word("1011"));
    CHECK(apply(Perm::parse("(1,2)", 4), word("1011")) == word("0111"));
    CHECK(apply(canonical_sigma(4), word("1100")) == word("1100"));
    CHECK_THROWS_AS(apply(Perm::identity(3), word("1011")), InvalidInput);
}

TEST_CASE("image code") {
    const auto c = code_of(4, {"0010", "1100"});
    CHECK(image_code(c, Perm::identity(4)) == c);
    CHECK(image_code(code_of(4, {"1000"}), Perm::parse("(1,2)", 4)) == code_of(4, {"0100"}));
    CHECK(image_code(c, Perm::parse("(3,4)", 4)) == code_of(4, {"0001", "1100"}));
}

TEST_CASE("canonical sigma") {
    CHECK(canonical_sigma(2).to_string() == "(1,2)");
    CHECK(canonical_sigma(6).to_string() == "(1,2)(3,4)(5,6)");
    CHECK_THROWS_AS(canonical_sigma(0), InvalidInput);
    CHECK_THROWS_AS(canonical_sigma(5), InvalidInput);
    CHECK(is_canonical_sigma(canonical_sigma(8)));
    CHECK_FALSE(is_canonical_sigma(Perm::parse("(1,3)(2,4)", 4)));
}

TEST_CASE("cycle structure") {
    const Perm id = Perm::identity(4);
    CHECK(cycle_type(id).lengths == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK_FALSE(is_involution(id));

    const Perm s = canonical_sigma(8);
    CHECK(cycle_type(s).lengths == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(is_involution(s));
    CHECK(is_fixed_point_free(s));

    const Perm t = Perm::parse("(1,2)", 4);
    CHECK(cycle_type(t).lengths == std::vector<std::size_t>{2, 1, 1});
    CHECK(is_involution(t));
    CHECK_FALSE(is_fixed_point_free(t));
    CHECK(fixed_point_count(t) == 2);
    CHECK(order(Perm::parse("(1,2,3)(4,5)", 5)) == 6);
}

TEST_CASE("conjugate") {
    const Perm p = Perm::parse("(1,2)", 3);
    CHECK(conjugate(p, Perm::identity(3)) == p);
    CHECK(conjugate(p, Perm::parse("(2,3)", 3)) == Perm::parse("(1,3)", 3));
    CHECK_THROWS_AS(conjugate(p, Perm::identity(4)), InvalidInput);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const Perm a = random_perm(rng, n);
        const Perm b = random_perm(rng, n);
        CHECK(cycle_type(conjugate(a, b)) == cycle_type(a));
    }
}

TEST_CASE("action laws") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 16;
        const Perm p = random_perm(rng, n);
        const Perm q = random_perm(rng, n);
        const Word a = random_word(rng, n);
        const Word b = random_word(rng, n);
        CHECK(apply(q, apply(p, a)) == apply(compose(p, q), a));
        CHECK(apply(p, a + b) == apply(p, a) + apply(p, b));
        CHECK(weight(apply(p, a)) == weight(a));
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(Perm::parse(p.to_string(), n) == p);
        // coordinate i of the image is coordinate p^-1(i) of the source
        const Word img = apply(p, a);
        for (std::size_t i = 0; i < n; ++i) CHECK(img.get(i) == a.get(p.inverse()(i)));
    }
}

TEST_CASE("image codes keep dimension and weights") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 12;
        std::vector<Word> rows;
        for (std::size_t r = rng() % 5; r > 0; --r) rows.push_back(random_word(rng, n));
        const auto c = rref(n, rows);
        const auto img = image_code(c, random_perm(rng, n));
        CHECK(img.dim() == c.dim());
        CHECK(weight_distribution(img) == weight_distribution(c));
    }
}

TEST_CASE("sigma fixes exactly the pair-constant words") {
    for (std::size_t n = 2; n <= 8; n += 2) {
        const Perm s = canonical_sigma(n);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const Word w = Word::from_mask(n, m);
            bool pair_constant = true;
            for (std::size_t p = 0; p < n / 2; ++p) pair_constant &= w.get(2 * p) == w.get(2 * p + 1);
            CHECK((apply(s, w) == w) == pair_constant);
        }
    }
}
