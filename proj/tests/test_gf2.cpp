#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "invaut/code_io.hpp"
#include "invaut/error.hpp"
#include "invaut/linear_code.hpp"
#include "support.hpp"

using namespace invaut;
using testing::code_of;
using testing::word;

TEST_CASE("word basics") {
    const Word w = word("1101");
    CHECK(w.size() == 4);
    CHECK(w.weight() == 3);
    CHECK(weight(word("0000")) == 0);
    CHECK(weight(word("1111")) == 4);
    CHECK(w.get(0));
    CHECK_FALSE(w.get(2));
    CHECK(w.to_string() == "1101");
    CHECK(w.leading() == 0);
    CHECK(word("0001").leading() == 3);
    CHECK(word("0000").leading() == 4);
    CHECK((word("1100") + word("0110")).to_string() == "1010");
    CHECK(dot(word("1100"), word("0110")) == true);
    CHECK(dot(word("1100"), word("1100")) == false);
    CHECK_THROWS_AS(Word::from_string("10x1"), InvalidInput);
}

TEST_CASE("words longer than one limb keep their padding clear") {
    std::string bits(130, '0');
    bits[0] = bits[64] = bits[129] = '1';
    const Word w = Word::from_string(bits);
    CHECK(w.weight() == 3);
    CHECK(w.to_string() == bits);
    CHECK(Word::ones(130).weight() == 130);
    CHECK((w + w).is_zero());
}

TEST_CASE("rref examples") {
    CHECK(testing::rows_of(code_of(4, {"1000", "0100"})) == std::vector<std::string>{"1000", "0100"});
    CHECK(testing::rows_of(code_of(4, {"1100", "0110"})) == std::vector<std::string>{"1010", "0110"});
    const auto dup = code_of(4, {"1111", "1111"});
    CHECK(dup.dim() == 1);
    CHECK(testing::rows_of(dup) == std::vector<std::string>{"1111"});
    const Word mixed[] = {word("101"), word("1010")};
    CHECK_THROWS_AS(rref(4, mixed), InvalidInput);
}

TEST_CASE("rref agrees with a textbook elimination") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 16;
        oracle::Rows rows(rng() % 8);
        for (auto& r : rows) r = rng() & ((oracle::Mask{1} << n) - 1);
        const auto code = testing::from_masks(n, rows);
        CHECK(code.generator_masks() == oracle::rref(rows, n));
        // idempotent and insensitive to row operations
        CHECK(rref(n, code.generators()) == code);
        if (rows.size() >= 2) {
            auto shuffled = rows;
            shuffled[0] ^= shuffled[1];
            std::reverse(shuffled.begin(), shuffled.end());
            CHECK(testing::from_masks(n, shuffled) == code);
        }
    }
}

TEST_CASE("weight distribution") {
    CHECK(weight_distribution(code_of(4, {"1111"})).counts == std::vector<std::uint64_t>{1, 0, 0, 0, 1});
    CHECK(weight_distribution(code_of(4, {"0010", "1100"})).counts == std::vector<std::uint64_t>{1, 1, 1, 1, 0});
    CHECK(weight_distribution(LinearCode::full(3)).counts == std::vector<std::uint64_t>{1, 3, 3, 1});
    CHECK(minimum_weight(code_of(4, {"1111"})) == 4);
    CHECK_THROWS_AS(weight_distribution(LinearCode::full(31)), TooLarge);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 12;
        oracle::Rows rows(rng() % 6);
        for (auto& r : rows) r = rng() & ((oracle::Mask{1} << n) - 1);
        const auto code = testing::from_masks(n, rows);
        const auto wd = weight_distribution(code);
        CHECK(wd.counts == oracle::weight_distribution(n, rows));
        std::uint64_t total = 0;
        for (auto c : wd.counts) total += c;
        CHECK(total == (std::uint64_t{1} << code.dim()));
    }
}

TEST_CASE("dual") {
    CHECK(dual(LinearCode::full(5)) == LinearCode::zero(5));
    CHECK(dual(code_of(2, {"11"})) == code_of(2, {"11"}));
    CHECK(dual(code_of(4, {"1100", "0011"})) == code_of(4, {"1100", "0011"}));

    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 16;
        oracle::Rows rows(rng() % 8);
        for (auto& r : rows) r = rng() & ((oracle::Mask{1} << n) - 1);
        const auto code = testing::from_masks(n, rows);
        const auto d = dual(code);
        CHECK(code.dim() + d.dim() == n);
        for (const auto& a : code.generators()) {
            for (const auto& b : d.generators()) CHECK_FALSE(dot(a, b));
        }
        CHECK(dual(d) == code);
    }
}

TEST_CASE("dual twice is the identity on every code of length <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (const auto& rows : oracle::all_subspaces(n, k)) {
                const auto code = testing::from_masks(n, rows);
                CHECK(dual(dual(code)) == code);
            }
        }
    }
}

TEST_CASE("contains and codewords") {
    const auto c = code_of(4, {"1100", "0011"});
    CHECK(contains(c, word("1111")));
    CHECK_FALSE(contains(c, word("1000")));
    CHECK(contains(LinearCode::zero(4), word("0000")));
    CHECK_THROWS_AS(contains(c, word("111")), InvalidInput);

    const auto zero = codewords(LinearCode::zero(3));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].to_string() == "000");

    const auto rep = codewords(code_of(2, {"11"}));
    std::set<std::string> seen;
    for (const auto& w : rep) seen.insert(w.to_string());
    CHECK(seen == std::set<std::string>{"00", "11"});

    const auto words = codewords(c);
    CHECK(words.size() == 4);
    std::set<std::string> all;
    for (const auto& a : words) {
        all.insert(a.to_string());
        for (const auto& b : words) CHECK(contains(c, a + b));
    }
    CHECK(all.size() == 4);
}

TEST_CASE("code file format") {
    const auto code = parse_code("# comment\n1100\n\n0110\n");
    CHECK(code == code_of(4, {"1100", "0110"}));
    CHECK_THROWS_AS(parse_code("110\n1100\n"), InvalidInput);
    CHECK_THROWS_AS(parse_code(""), InvalidInput);
    CHECK_THROWS_AS(parse_code("# only a comment\n"), InvalidInput);
    CHECK_THROWS_AS(parse_code("12\n"), InvalidInput);

    std::ostringstream out;
    write_code(out, code, "two rows");
    CHECK(parse_code(out.str()) == code);
}
