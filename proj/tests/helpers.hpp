#pragma once

#include <memory>
#include <random>

#include "nuca/core.hpp"

namespace testutil {

using namespace nuca;

inline LocalRule rule_id(int s = 2) { return make_linear_rule("id", s, {0, 1, 0}); }
inline LocalRule rule_shift(int s = 2) { return make_linear_rule("shift", s, {0, 0, 1}); }
inline LocalRule rule_xor(int s = 2) { return make_linear_rule("xor", s, {1, 0, 1}); }
inline LocalRule rule_zero(int s = 2) {
    return make_table_rule("zero", s, 1, std::vector<Letter>(pow_count(s, 3), 0));
}

inline RuleSetPtr rules_xor_id() {
    return std::make_shared<RuleSet>(Alphabet(2),
                                     std::vector<LocalRule>{rule_xor(), rule_id()});
}

inline RuleSetPtr rules_id_shift() {
    return std::make_shared<RuleSet>(Alphabet(2),
                                     std::vector<LocalRule>{rule_id(), rule_shift()});
}

inline RuleSetPtr rules_all_four() {
    return std::make_shared<RuleSet>(
        Alphabet(2),
        std::vector<LocalRule>{rule_id(), rule_shift(), rule_xor(), rule_zero()});
}

inline Word random_word(std::mt19937& rng, int s, int len) {
    std::uniform_int_distribution<int> d(0, s - 1);
    Word w(static_cast<size_t>(len));
    for (auto& a : w) a = d(rng);
    return w;
}

}  // namespace testutil
