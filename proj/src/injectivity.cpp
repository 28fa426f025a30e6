#include "nuca/injectivity.hpp"

#include "nuca/automata.hpp"

namespace nuca {

namespace {

// Witness node sequence -> configuration, taking the letter at offset r of
// one component word of each visited pair node.
Configuration component_config(const EpWord& nodes, const RuleSet& rs, bool second) {
    int s = rs.alphabet.size;
    int r = rs.radius;
    int base = static_cast<int>(pow_count(s, 2 * r));
    auto digit = [&](int pair_id) {
        int word_id = second ? pair_id % base : pair_id / base;
        return index_word(static_cast<std::uint64_t>(word_id), s, 2 * r)[r];
    };
    auto map_all = [&](const std::vector<int>& v) {
        std::vector<int> out;
        out.reserve(v.size());
        for (int id : v) out.push_back(digit(id));
        return out;
    };
    // the node at position i spells the letter at position i (offset r of
    // the 2r-window x_{[i-r, i+r-1]})
    EpWord w(map_all(nodes.left), map_all(nodes.mid), map_all(nodes.right), nodes.anchor);
    return Configuration(rs.alphabet, w.normalized());
}

}  // namespace

InjectivityReport is_distribution_injective(const Distribution& theta) {
    InjectivityReport rep;
    ProductGraph p = build_product(theta.rule_set);
    LabeledGraph lg = p.projected();
    LayeredWordGraph g = LayeredWordGraph::of(theta.word);
    BiinfinitePath path = biinfinite_flagged_path(g, lg, p.off_diagonal);
    if (!path.exists) return rep;
    rep.injective = false;
    rep.witness_x = component_config(*path.nodes, *theta.rule_set, false);
    rep.witness_y = component_config(*path.nodes, *theta.rule_set, true);
    return rep;
}

bool verify_witness(const Distribution& theta, const Configuration& x, const Configuration& y) {
    if (x == y) return false;
    return step(theta, x) == step(theta, y);
}

}  // namespace nuca
