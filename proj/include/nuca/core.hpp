#pragma once

// Core model: alphabets, local rules, rule sets normalized to a common
// radius, finite rule words, and eventually periodic bi-infinite words
// (used both for rule distributions and for configurations).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nuca {

using Letter = int;
using Word = std::vector<Letter>;   // letters 0..s-1
using RuleWord = std::vector<int>;  // indices into a RuleSet

struct Alphabet {
    int size = 2;  // s >= 2, letters are 0..s-1

    explicit Alphabet(int s) : size(s) {
        if (s < 2) throw std::invalid_argument("alphabet size must be >= 2");
    }
    bool contains(Letter a) const { return a >= 0 && a < size; }
};

/// Number of words of length `len` over an alphabet of size `s` (s^len).
std::uint64_t pow_count(int s, int len);

/// Word <-> integer index, leftmost letter most significant.
std::uint64_t word_index(const Word& w, int s);
Word index_word(std::uint64_t idx, int s, int len);

// A radius-r truth table from A^{2r+1} to A. linear_coeffs is present iff
// the rule is of the form u -> sum_i coeffs[i]*u[i] mod s.
struct LocalRule {
    std::string name;
    int radius = 0;
    std::vector<Letter> table;  // s^{2r+1} entries, indexed by word_index
    std::optional<Word> linear_coeffs;  // length 2r+1 when present

    int window_length() const { return 2 * radius + 1; }
    Letter apply(const Word& u, int s) const { return table[word_index(u, s)]; }
    bool is_linear() const { return linear_coeffs.has_value(); }
};

/// Build a rule from its coefficient vector (length 2r+1), table filled in.
LocalRule make_linear_rule(const std::string& name, int s, const Word& coeffs);

/// Build a rule from an explicit table, detecting linearity.
LocalRule make_table_rule(const std::string& name, int s, int radius,
                          const std::vector<Letter>& table);

/// Widen a rule to a larger radius; the padded rule ignores the extra
/// border letters. Linearity is preserved with zero-extended coefficients.
LocalRule pad_rule(const LocalRule& f, int s, int target_radius);

// An ordered list of rules over one alphabet, all padded to the maximum
// radius at construction. Original radii kept as metadata.
struct RuleSet {
    Alphabet alphabet;
    int radius = 0;
    std::vector<LocalRule> rules;
    std::vector<int> source_radii;
    std::map<std::string, int> index_of;

    RuleSet(Alphabet a, std::vector<LocalRule> raw);

    int size() const { return static_cast<int>(rules.size()); }
    const LocalRule& rule(int i) const { return rules.at(i); }
    int index(const std::string& name) const;
    void check_rule_word(const RuleWord& psi) const;
};

using RuleSetPtr = std::shared_ptr<const RuleSet>;

// Eventually periodic bi-infinite word: ^omega(left) . mid . (right)^omega.
// Position anchor is where mid begins; positions < anchor read `left`
// cyclically leftward (anchor-1 maps to left.back()), positions >=
// anchor+mid.size() read `right` cyclically rightward.
struct EpWord {
    std::vector<int> left{0};
    std::vector<int> mid{};
    std::vector<int> right{0};
    long long anchor = 0;

    EpWord() = default;
    EpWord(std::vector<int> l, std::vector<int> m, std::vector<int> rr,
           long long a);

    int at(long long i) const;
    long long mid_end() const { return anchor + static_cast<long long>(mid.size()); }
    std::vector<int> slice(long long i, long long j) const;  // inclusive
    /// Copy with position i set to v (middle widened as needed).
    EpWord with(long long i, int v) const;
    /// Shrink to minimal periods and minimal middle.
    EpWord normalized() const;
};

/// Exact equality as bi-infinite words, independent of representation.
bool ep_equal(const EpWord& x, const EpWord& y);

struct Distribution {
    RuleSetPtr rule_set;
    EpWord word;

    Distribution(RuleSetPtr rs, EpWord w);
    static Distribution uniform(RuleSetPtr rs, int rule_index);

    int rule_at(long long i) const { return word.at(i); }
    const LocalRule& local_rule_at(long long i) const {
        return rule_set->rule(word.at(i));
    }
    RuleWord window(long long i, long long j) const;
};

struct Configuration {
    Alphabet alphabet;
    EpWord word;

    Configuration(Alphabet a, EpWord w);
    static Configuration zero(Alphabet a);
    /// Finite-support configuration from letters at [pos, pos+len).
    static Configuration finite(Alphabet a, const Word& letters, long long pos);

    Letter at(long long i) const { return word.at(i); }
    bool operator==(const Configuration& o) const {
        return alphabet.size == o.alphabet.size && ep_equal(word, o.word);
    }
};

/// h_psi: maps a word of length |psi|+2r to a word of length |psi|.
Word apply_partial(const RuleSet& rs, const RuleWord& psi, const Word& w);

}  // namespace nuca
