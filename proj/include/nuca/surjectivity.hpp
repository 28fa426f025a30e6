#pragma once

// Surjectivity analysis: the DFA of forbidden rule patterns (rule words
// whose partial transition function misses some output word) and the
// exact verdict for eventually periodic distributions.

#include <optional>
#include <vector>

#include "nuca/automata.hpp"
#include "nuca/core.hpp"
#include "nuca/debruijn.hpp"

namespace nuca {

struct SurjectivityReport {
    bool surjective = true;
    // present when not surjective
    std::optional<long long> witness_lo;
    std::optional<long long> witness_hi;
    std::optional<RuleWord> witness_pattern;
    std::optional<Word> unreachable_word;
};

class SurjectivityAnalyzer {
  public:
    explicit SurjectivityAnalyzer(RuleSetPtr rs, std::size_t state_cap = 1000000);

    /// DFA over rule symbols recognizing the forbidden patterns.
    const Dfa& forbidden_pattern_dfa() const { return forbidden_; }

    bool is_pattern_surjective(const RuleWord& psi) const;

    SurjectivityReport analyze(const Distribution& theta) const;

    /// Given a forbidden pattern, recover an output word with empty preimage.
    Word unreachable_output(const RuleWord& psi) const;

  private:
    RuleSetPtr rule_set_;
    Dfa pre_projection_;  // over (rule, letter) symbols, accepts (psi,u) with empty preimage
    Dfa forbidden_;       // over rule symbols, accepts F_R
};

/// Enumerate all inputs of h_psi and compare image size with s^{|psi|}.
/// Refuses (nullopt) when s^{|psi|+2r} exceeds `cap`.
std::optional<bool> brute_force_pattern_surjective(const RuleSet& rs, const RuleWord& psi,
                                                   std::uint64_t cap = 1u << 24);

}  // namespace nuca
