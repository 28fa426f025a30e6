#include "nuca/surjectivity.hpp"

#include <queue>
#include <unordered_set>

namespace nuca {

SurjectivityAnalyzer::SurjectivityAnalyzer(RuleSetPtr rs, std::size_t state_cap)
    : rule_set_(std::move(rs)) {
    int s = rule_set_->alphabet.size;
    // (1) DeBruijn graph as NFA over (rule, letter), all states initial/final:
    //     it accepts (psi, u) iff h_psi has a preimage of u.
    DeBruijnGraph g = build_debruijn(rule_set_);
    Nfa walk = g.as_nfa();
    // (2) determinize: a word is accepted iff the subset walk stays nonempty
    Dfa det = minimize(determinize(walk, state_cap));
    // (3) complement: (psi, u) accepted iff h_psi^{-1}(u) is empty
    pre_projection_ = complement(det);
    // (4) drop the letter component: psi accepted iff some u has no preimage
    Nfa proj = project(nfa_from_dfa(pre_projection_), [s](int sym) { return sym / s; },
                       rule_set_->size());
    // (5) determinize again and minimize
    forbidden_ = minimize(determinize(proj, state_cap));
}

bool SurjectivityAnalyzer::is_pattern_surjective(const RuleWord& psi) const {
    rule_set_->check_rule_word(psi);
    return !forbidden_.accepts(psi);
}

Word SurjectivityAnalyzer::unreachable_output(const RuleWord& psi) const {
    int s = rule_set_->alphabet.size;
    // BFS over (position, pre-projection state) choosing one letter per step
    size_t n = psi.size();
    int ns = pre_projection_.num_states;
    std::vector<int> parent_state(static_cast<size_t>(n + 1) * ns, -2);
    std::vector<int> parent_letter(static_cast<size_t>(n + 1) * ns, -1);
    auto id = [&](size_t pos, int q) { return pos * ns + q; };
    parent_state[id(0, pre_projection_.start)] = -1;
    std::queue<std::pair<size_t, int>> bfs;
    bfs.push({0, pre_projection_.start});
    while (!bfs.empty()) {
        auto [pos, q] = bfs.front();
        bfs.pop();
        if (pos == n) {
            if (!pre_projection_.accepting[q]) continue;
            Word u(n, 0);
            size_t p = pos;
            int cur = q;
            while (p > 0) {
                u[p - 1] = parent_letter[id(p, cur)];
                cur = parent_state[id(p, cur)];
                --p;
            }
            return u;
        }
        for (Letter a = 0; a < s; ++a) {
            int q2 = pre_projection_.next(q, psi[pos] * s + a);
            if (parent_state[id(pos + 1, q2)] == -2) {
                parent_state[id(pos + 1, q2)] = q;
                parent_letter[id(pos + 1, q2)] = a;
                bfs.push({pos + 1, q2});
            }
        }
    }
    throw std::logic_error("unreachable_output: pattern is surjective");
}

SurjectivityReport SurjectivityAnalyzer::analyze(const Distribution& theta) const {
    SurjectivityReport rep;
    LayeredWordGraph g = LayeredWordGraph::of(theta.word);
    ReachReport reach = layered_product_reach(g, forbidden_);
    if (!reach.found) return rep;
    rep.surjective = false;
    rep.witness_pattern = reach.witness->symbols;
    rep.witness_lo = reach.witness->position;
    rep.witness_hi = reach.witness->position + static_cast<long long>(reach.witness->symbols.size()) - 1;
    rep.unreachable_word = unreachable_output(*rep.witness_pattern);
    return rep;
}

std::optional<bool> brute_force_pattern_surjective(const RuleSet& rs, const RuleWord& psi,
                                                   std::uint64_t cap) {
    rs.check_rule_word(psi);
    int s = rs.alphabet.size;
    int r = rs.radius;
    int in_len = static_cast<int>(psi.size()) + 2 * r;
    std::uint64_t inputs = pow_count(s, in_len);
    if (inputs > cap) return std::nullopt;
    std::unordered_set<std::uint64_t> image;
    std::uint64_t target = pow_count(s, static_cast<int>(psi.size()));
    for (std::uint64_t idx = 0; idx < inputs; ++idx) {
        Word w = index_word(idx, s, in_len);
        image.insert(word_index(apply_partial(rs, psi, w), s));
        if (image.size() == target) return true;
    }
    return image.size() == target;
}

}  // namespace nuca
