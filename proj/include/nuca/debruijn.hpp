#pragma once

// DeBruijn graph of a rule set and its product graph. Nodes are words of
// length 2r encoded base s (leftmost letter most significant); edges are
// labeled by (rule, output letter).

#include <string>
#include <vector>

#include "nuca/automata.hpp"
#include "nuca/core.hpp"

namespace nuca {

struct DeBruijnEdge {
    int source;  // word aw
    int target;  // word wb
    int rule;
    Letter output;

    auto operator<=>(const DeBruijnEdge&) const = default;
};

struct DeBruijnGraph {
    RuleSetPtr rule_set;
    int num_nodes = 0;  // s^{2r}
    std::vector<DeBruijnEdge> edges;  // sorted (source, target, rule, output)

    /// View as an NFA over (rule, letter) symbols, all states initial and
    /// final. Symbol id = rule * s + letter.
    Nfa as_nfa() const;
};

struct ProductGraph {
    RuleSetPtr rule_set;
    int num_nodes = 0;  // s^{4r}, node id = u * s^{2r} + u'
    std::vector<DeBruijnEdge> edges;  // source/target are pair ids
    std::vector<char> off_diagonal;   // flagged nodes (u != u')

    /// Projection to rule labels only (second label component dropped).
    LabeledGraph projected() const;
};

/// Requires common radius >= 1 (pad radius-0 rule sets first).
DeBruijnGraph build_debruijn(const RuleSetPtr& rs);
ProductGraph build_product(const RuleSetPtr& rs);

/// Deterministic DOT rendering; parallel edges between a node pair are
/// collapsed with concatenated labels.
std::string to_dot(const DeBruijnGraph& g);
std::string to_dot(const ProductGraph& g);

/// CSV adjacency dump: source,target,rule_name,output_letter.
std::string to_csv(const DeBruijnGraph& g);

}  // namespace nuca
