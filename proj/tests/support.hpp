#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "invaut/linear_code.hpp"
#include "invaut/perm.hpp"
#include "oracles.hpp"

namespace testing {

inline invaut::LinearCode code_of(std::size_t n, std::initializer_list<const char*> rows) {
    std::vector<invaut::Word> words;
    for (const char* r : rows) words.push_back(invaut::Word::from_string(r));
    return invaut::rref(n, words);
}

inline invaut::Word word(const char* bits) { return invaut::Word::from_string(bits); }

inline oracle::Rows masks(const invaut::LinearCode& c) { return c.generator_masks(); }

inline std::vector<std::string> rows_of(const invaut::LinearCode& c) {
    std::vector<std::string> out;
    for (const auto& g : c.generators()) out.push_back(g.to_string());
    return out;
}

inline invaut::LinearCode from_masks(std::size_t n, const oracle::Rows& rows) {
    std::vector<invaut::Word> words;
    for (auto m : rows) words.push_back(invaut::Word::from_mask(n, m));
    return invaut::rref(n, words);
}

}  // namespace testing
