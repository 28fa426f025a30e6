#pragma once

// Finite-automata toolkit over integer symbol alphabets: subset
// construction, Hopcroft minimization, complementation, label projection,
// factor scanners, and layered graphs modeling eventually periodic
// bi-infinite words.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nuca/core.hpp"

namespace nuca {

struct Nfa {
    int num_states = 0;
    int num_symbols = 0;
    std::vector<std::tuple<int, int, int>> transitions;  // (from, symbol, to)
    std::vector<char> initial;
    std::vector<char> accepting;

    void validate() const;
    bool accepts(const std::vector<int>& word) const;
};

struct Dfa {
    int num_states = 0;
    int num_symbols = 0;
    std::vector<int> delta;  // delta[state * num_symbols + symbol]
    int start = 0;
    std::vector<char> accepting;

    int next(int q, int a) const { return delta[static_cast<size_t>(q) * num_symbols + a]; }
    bool accepts(const std::vector<int>& word) const;
    /// True iff the accepted language is empty.
    bool empty_language() const;
};

struct DeterminizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Subset construction. Throws DeterminizeCapExceeded past `state_cap`.
Dfa determinize(const Nfa& n, std::size_t state_cap = 1u << 20);

/// Hopcroft minimization (input must be total, which Dfa guarantees).
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);

Nfa nfa_from_dfa(const Dfa& d);

/// Relabel every transition; `num_symbols_out` sizes the new alphabet.
Nfa project(const Nfa& n, const std::function<int(int)>& symbol_map, int num_symbols_out);

/// DFA for Sigma* . L(d) . Sigma* (words containing a factor in L(d)).
Dfa factor_scanner(const Dfa& d);

// Finite-graph presentation of an eventually periodic bi-infinite word:
// one node per left phase / middle position / right phase, each node
// emitting the symbol at its position.
struct LayeredWordGraph {
    std::vector<int> left;   // w_L, cycled for positions < anchor
    std::vector<int> mid;
    std::vector<int> right;  // w_R, cycled for positions >= anchor+|mid|
    long long anchor = 0;

    static LayeredWordGraph of(const EpWord& w);
    int symbol_at(long long i) const;
};

struct FactorWitness {
    std::vector<int> symbols;
    long long position = 0;  // position of the first symbol
};

struct ReachReport {
    bool found = false;
    std::optional<FactorWitness> witness;
};

/// Does some finite factor of the bi-infinite word lie in L(d)?
ReachReport layered_product_reach(const LayeredWordGraph& g, const Dfa& d);

// Node-labeled transition graph for bi-infinite path queries.
struct LabeledGraph {
    int num_nodes = 0;
    int num_symbols = 0;
    std::vector<std::tuple<int, int, int>> edges;  // (from, symbol, to)
};

struct BiinfinitePath {
    bool exists = false;
    // node assignment i -> node id, eventually periodic, present when exists
    std::optional<EpWord> nodes;
};

/// Is there a bi-infinite path in p labeled by the word of g that visits
/// at least one flagged node?
BiinfinitePath biinfinite_flagged_path(const LayeredWordGraph& g, const LabeledGraph& p,
                                       const std::vector<char>& flagged);

std::string nfa_to_dot(const Nfa& n, const std::function<std::string(int)>& symbol_name);
std::string dfa_to_dot(const Dfa& d, const std::function<std::string(int)>& symbol_name);

}  // namespace nuca
