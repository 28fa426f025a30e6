#include "nuca/debruijn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nuca {

namespace {

void require_radius(const RuleSetPtr& rs) {
    if (!rs) throw std::invalid_argument("null rule set");
    if (rs->radius < 1)
        throw std::invalid_argument(
            "DeBruijn construction needs radius >= 1; pad the rules first");
}

std::string node_word(int id, int s, int len) {
    Word w = index_word(static_cast<std::uint64_t>(id), s, len);
    std::string out;
    for (Letter a : w) out += std::to_string(a);
    return out;
}

}  // namespace

DeBruijnGraph build_debruijn(const RuleSetPtr& rs) {
    require_radius(rs);
    int s = rs->alphabet.size;
    int r = rs->radius;
    DeBruijnGraph g;
    g.rule_set = rs;
    g.num_nodes = static_cast<int>(pow_count(s, 2 * r));
    std::uint64_t words = pow_count(s, 2 * r + 1);
    for (std::uint64_t idx = 0; idx < words; ++idx) {
        Word awb = index_word(idx, s, 2 * r + 1);
        Word aw(awb.begin(), awb.end() - 1);
        Word wb(awb.begin() + 1, awb.end());
        int src = static_cast<int>(word_index(aw, s));
        int dst = static_cast<int>(word_index(wb, s));
        for (int f = 0; f < rs->size(); ++f)
            g.edges.push_back({src, dst, f, rs->rule(f).table[idx]});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Nfa DeBruijnGraph::as_nfa() const {
    int s = rule_set->alphabet.size;
    Nfa n;
    n.num_states = num_nodes;
    n.num_symbols = rule_set->size() * s;
    n.initial.assign(num_nodes, 1);
    n.accepting.assign(num_nodes, 1);
    for (const auto& e : edges) n.transitions.emplace_back(e.source, e.rule * s + e.output, e.target);
    return n;
}

ProductGraph build_product(const RuleSetPtr& rs) {
    require_radius(rs);
    DeBruijnGraph g = build_debruijn(rs);
    int base = g.num_nodes;
    ProductGraph p;
    p.rule_set = rs;
    p.num_nodes = base * base;
    p.off_diagonal.assign(static_cast<size_t>(p.num_nodes), 0);
    for (int u = 0; u < base; ++u)
        for (int v = 0; v < base; ++v)
            if (u != v) p.off_diagonal[static_cast<size_t>(u) * base + v] = 1;
    // group component edges by (rule, output) label for the synchronized product
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_label;
    for (const auto& e : g.edges) by_label[{e.rule, e.output}].emplace_back(e.source, e.target);
    for (const auto& [label, pairs] : by_label)
        for (auto [s1, t1] : pairs)
            for (auto [s2, t2] : pairs)
                p.edges.push_back({s1 * base + s2, t1 * base + t2, label.first, label.second});
    std::sort(p.edges.begin(), p.edges.end());
    return p;
}

LabeledGraph ProductGraph::projected() const {
    LabeledGraph lg;
    lg.num_nodes = num_nodes;
    lg.num_symbols = rule_set->size();
    for (const auto& e : edges) lg.edges.emplace_back(e.source, e.rule, e.target);
    return lg;
}

namespace {

std::string dot_of_edges(const std::vector<DeBruijnEdge>& edges, int num_nodes,
                         const RuleSet& rs, bool pair_nodes) {
    int s = rs.alphabet.size;
    int len = 2 * rs.radius;
    int base = static_cast<int>(pow_count(s, len));
    auto name = [&](int id) {
        if (!pair_nodes) return node_word(id, s, len);
        return node_word(id / base, s, len) + "|" + node_word(id % base, s, len);
    };
    std::ostringstream os;
    os << "digraph " << (pair_nodes ? "product" : "debruijn") << " {\n  rankdir=LR;\n";
    for (int v = 0; v < num_nodes; ++v) os << "  \"" << name(v) << "\";\n";
    std::map<std::pair<int, int>, std::vector<std::string>> collapsed;
    for (const auto& e : edges)
        collapsed[{e.source, e.target}].push_back("(" + rs.rule(e.rule).name + "," +
                                                  std::to_string(e.output) + ")");
    for (const auto& [key, labels] : collapsed) {
        os << "  \"" << name(key.first) << "\" -> \"" << name(key.second) << "\" [label=\"";
        for (size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string to_dot(const DeBruijnGraph& g) {
    return dot_of_edges(g.edges, g.num_nodes, *g.rule_set, false);
}

std::string to_dot(const ProductGraph& g) {
    return dot_of_edges(g.edges, g.num_nodes, *g.rule_set, true);
}

std::string to_csv(const DeBruijnGraph& g) {
    int s = g.rule_set->alphabet.size;
    int len = 2 * g.rule_set->radius;
    std::ostringstream os;
    os << "source,target,rule_name,output_letter\n";
    for (const auto& e : g.edges)
        os << node_word(e.source, s, len) << "," << node_word(e.target, s, len) << ","
           << g.rule_set->rule(e.rule).name << "," << e.output << "\n";
    return os.str();
}

}  // namespace nuca
