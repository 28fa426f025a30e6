#include "nuca/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace nuca {

void Nfa::validate() const {
    if (static_cast<int>(initial.size()) != num_states ||
        static_cast<int>(accepting.size()) != num_states)
        throw std::invalid_argument("Nfa: flag vectors must match state count");
    for (auto [f, a, t] : transitions)
        if (f < 0 || f >= num_states || t < 0 || t >= num_states || a < 0 || a >= num_symbols)
            throw std::invalid_argument("Nfa: transition out of range");
}

bool Nfa::accepts(const std::vector<int>& word) const {
    std::vector<std::vector<std::vector<int>>> adj(
        num_symbols, std::vector<std::vector<int>>(num_states));
    for (auto [f, a, t] : transitions) adj[a][f].push_back(t);
    std::vector<char> cur = initial;
    for (int a : word) {
        std::vector<char> nxt(num_states, 0);
        for (int q = 0; q < num_states; ++q)
            if (cur[q])
                for (int t : adj[a][q]) nxt[t] = 1;
        cur = std::move(nxt);
    }
    for (int q = 0; q < num_states; ++q)
        if (cur[q] && accepting[q]) return true;
    return false;
}

bool Dfa::accepts(const std::vector<int>& word) const {
    int q = start;
    for (int a : word) q = next(q, a);
    return accepting[q] != 0;
}

bool Dfa::empty_language() const {
    std::vector<char> seen(num_states, 0);
    std::queue<int> bfs;
    bfs.push(start);
    seen[start] = 1;
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        if (accepting[q]) return false;
        for (int a = 0; a < num_symbols; ++a) {
            int t = next(q, a);
            if (!seen[t]) {
                seen[t] = 1;
                bfs.push(t);
            }
        }
    }
    return true;
}

Dfa determinize(const Nfa& n, std::size_t state_cap) {
    n.validate();
    std::vector<std::vector<std::vector<int>>> adj(
        n.num_symbols, std::vector<std::vector<int>>(n.num_states));
    for (auto [f, a, t] : n.transitions) adj[a][f].push_back(t);

    auto key_of = [](const std::vector<int>& subset) {
        std::string k;
        k.reserve(subset.size() * sizeof(int));
        for (int q : subset) k.append(reinterpret_cast<const char*>(&q), sizeof(int));
        return k;
    };

    std::vector<int> start_subset;
    for (int q = 0; q < n.num_states; ++q)
        if (n.initial[q]) start_subset.push_back(q);

    std::unordered_map<std::string, int> ids;
    std::vector<std::vector<int>> subsets;
    Dfa d;
    d.num_symbols = n.num_symbols;

    auto intern = [&](std::vector<int> subset) {
        std::string k = key_of(subset);
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(subsets.size());
        if (subsets.size() >= state_cap)
            throw DeterminizeCapExceeded("determinize: subset cap exceeded");
        ids.emplace(std::move(k), id);
        subsets.push_back(std::move(subset));
        return id;
    };

    intern(start_subset);
    d.start = 0;
    for (int q = 0; q < static_cast<int>(subsets.size()); ++q) {
        for (int a = 0; a < n.num_symbols; ++a) {
            std::vector<char> mark(n.num_states, 0);
            for (int p : subsets[q])
                for (int t : adj[a][p]) mark[t] = 1;
            std::vector<int> nxt;
            for (int t = 0; t < n.num_states; ++t)
                if (mark[t]) nxt.push_back(t);
            int id = intern(std::move(nxt));
            d.delta.resize(subsets.size() * static_cast<size_t>(n.num_symbols), -1);
            d.delta[static_cast<size_t>(q) * n.num_symbols + a] = id;
        }
    }
    d.num_states = static_cast<int>(subsets.size());
    d.delta.resize(static_cast<size_t>(d.num_states) * n.num_symbols, -1);
    d.accepting.assign(d.num_states, 0);
    for (int q = 0; q < d.num_states; ++q)
        for (int p : subsets[q])
            if (n.accepting[p]) d.accepting[q] = 1;
    return d;
}

Dfa minimize(const Dfa& d) {
    // restrict to reachable states
    std::vector<int> remap(d.num_states, -1);
    std::vector<int> order;
    std::queue<int> bfs;
    bfs.push(d.start);
    remap[d.start] = 0;
    order.push_back(d.start);
    while (!bfs.empty()) {
        int q = bfs.front();
        bfs.pop();
        for (int a = 0; a < d.num_symbols; ++a) {
            int t = d.next(q, a);
            if (remap[t] < 0) {
                remap[t] = static_cast<int>(order.size());
                order.push_back(t);
                bfs.push(t);
            }
        }
    }
    int n = static_cast<int>(order.size());
    int ns = d.num_symbols;
    std::vector<int> delta(static_cast<size_t>(n) * ns);
    std::vector<char> acc(n);
    for (int q = 0; q < n; ++q) {
        acc[q] = d.accepting[order[q]];
        for (int a = 0; a < ns; ++a) delta[static_cast<size_t>(q) * ns + a] = remap[d.next(order[q], a)];
    }

    // Hopcroft partition refinement
    std::vector<std::vector<std::vector<int>>> inv(ns, std::vector<std::vector<int>>(n));
    for (int q = 0; q < n; ++q)
        for (int a = 0; a < ns; ++a) inv[a][delta[static_cast<size_t>(q) * ns + a]].push_back(q);

    std::vector<int> block_of(n, 0);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> accs, rejs;
        for (int q = 0; q < n; ++q) (acc[q] ? accs : rejs).push_back(q);
        if (!accs.empty()) {
            for (int q : accs) block_of[q] = static_cast<int>(blocks.size());
            blocks.push_back(accs);
        }
        if (!rejs.empty()) {
            for (int q : rejs) block_of[q] = static_cast<int>(blocks.size());
            blocks.push_back(rejs);
        }
    }
    std::set<std::pair<int, int>> work;  // (block id, symbol)
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (int a = 0; a < ns; ++a) work.insert({b, a});

    while (!work.empty()) {
        auto [bi, a] = *work.begin();
        work.erase(work.begin());
        std::vector<char> in_x(n, 0);
        std::vector<int> touched_blocks;
        std::vector<std::vector<int>> moved(blocks.size());
        for (int q : blocks[bi])
            for (int p : inv[a][q]) in_x[p] = 1;
        // collect blocks intersecting X
        std::unordered_set<int> cand;
        for (int p = 0; p < n; ++p)
            if (in_x[p]) cand.insert(block_of[p]);
        for (int y : cand) {
            std::vector<int> y1, y2;
            for (int q : blocks[y]) (in_x[q] ? y1 : y2).push_back(q);
            if (y1.empty() || y2.empty()) continue;
            int newb = static_cast<int>(blocks.size());
            blocks[y] = y1;
            blocks.push_back(y2);
            for (int q : y2) block_of[q] = newb;
            for (int s = 0; s < ns; ++s) {
                if (work.count({y, s})) {
                    work.insert({newb, s});
                } else {
                    // add the smaller half
                    if (y1.size() <= y2.size())
                        work.insert({y, s});
                    else
                        work.insert({newb, s});
                }
            }
        }
    }

    Dfa m;
    m.num_symbols = ns;
    m.num_states = static_cast<int>(blocks.size());
    m.start = block_of[0];
    m.delta.assign(static_cast<size_t>(m.num_states) * ns, 0);
    m.accepting.assign(m.num_states, 0);
    for (int b = 0; b < m.num_states; ++b) {
        int rep = blocks[b][0];
        m.accepting[b] = acc[rep];
        for (int a = 0; a < ns; ++a)
            m.delta[static_cast<size_t>(b) * ns + a] = block_of[delta[static_cast<size_t>(rep) * ns + a]];
    }
    return m;
}

Dfa complement(const Dfa& d) {
    Dfa c = d;
    for (auto& f : c.accepting) f = f ? 0 : 1;
    return c;
}

Nfa nfa_from_dfa(const Dfa& d) {
    Nfa n;
    n.num_states = d.num_states;
    n.num_symbols = d.num_symbols;
    n.initial.assign(d.num_states, 0);
    n.initial[d.start] = 1;
    n.accepting = d.accepting;
    for (int q = 0; q < d.num_states; ++q)
        for (int a = 0; a < d.num_symbols; ++a) n.transitions.emplace_back(q, a, d.next(q, a));
    return n;
}

Nfa project(const Nfa& n, const std::function<int(int)>& symbol_map, int num_symbols_out) {
    Nfa out = n;
    out.num_symbols = num_symbols_out;
    out.transitions.clear();
    for (auto [f, a, t] : n.transitions) {
        int b = symbol_map(a);
        if (b < 0 || b >= num_symbols_out)
            throw std::invalid_argument("project: mapped symbol out of range");
        out.transitions.emplace_back(f, b, t);
    }
    return out;
}

Dfa factor_scanner(const Dfa& d) {
    // NFA: pre-state looping on everything, a copy of d, absorbing post-state
    Nfa n;
    int pre = 0, shift = 1, post = d.num_states + 1;
    n.num_states = d.num_states + 2;
    n.num_symbols = d.num_symbols;
    n.initial.assign(n.num_states, 0);
    n.initial[pre] = 1;
    n.accepting.assign(n.num_states, 0);
    n.accepting[post] = 1;
    if (d.accepting[d.start]) n.accepting[pre] = 1;
    for (int q = 0; q < d.num_states; ++q)
        if (d.accepting[q]) n.accepting[shift + q] = 1;
    for (int a = 0; a < d.num_symbols; ++a) {
        n.transitions.emplace_back(pre, a, pre);
        n.transitions.emplace_back(pre, a, shift + d.next(d.start, a));
        n.transitions.emplace_back(post, a, post);
        for (int q = 0; q < d.num_states; ++q) {
            n.transitions.emplace_back(shift + q, a, shift + d.next(q, a));
            if (d.accepting[q]) n.transitions.emplace_back(shift + q, a, post);
        }
    }
    return minimize(determinize(n));
}

LayeredWordGraph LayeredWordGraph::of(const EpWord& w) {
    LayeredWordGraph g;
    g.left = w.left;
    g.mid = w.mid;
    g.right = w.right;
    g.anchor = w.anchor;
    return g;
}

int LayeredWordGraph::symbol_at(long long i) const {
    EpWord w{left, mid, right, anchor};
    return w.at(i);
}

namespace {

// Node numbering inside a layered graph: left phases, middle chain,
// right phases.
struct Layout {
    int pl, m, pr;
    int left(int phi) const { return phi; }
    int midn(int i) const { return pl + i; }
    int rightn(int phi) const { return pl + m + phi; }
    int total() const { return pl + m + pr; }

    std::vector<int> succs(int v) const {
        std::vector<int> out;
        if (v < pl) {
            if (v + 1 < pl)
                out.push_back(v + 1);
            else {
                out.push_back(left(0));
                out.push_back(m > 0 ? midn(0) : rightn(0));
            }
        } else if (v < pl + m) {
            int i = v - pl;
            out.push_back(i + 1 < m ? midn(i + 1) : rightn(0));
        } else {
            int phi = v - pl - m;
            out.push_back(rightn((phi + 1) % pr));
        }
        return out;
    }
};

int node_symbol(const LayeredWordGraph& g, const Layout& ly, int v) {
    if (v < ly.pl) return g.left[v];
    if (v < ly.pl + ly.m) return g.mid[v - ly.pl];
    return g.right[v - ly.pl - ly.m];
}

}  // namespace

ReachReport layered_product_reach(const LayeredWordGraph& g, const Dfa& d) {
    Layout ly{static_cast<int>(g.left.size()), static_cast<int>(g.mid.size()),
              static_cast<int>(g.right.size())};
    ReachReport rep;
    if (d.accepting[d.start]) {
        // the empty factor is accepted
        rep.found = true;
        rep.witness = FactorWitness{{}, g.anchor};
        return rep;
    }
    int nn = ly.total();
    auto id = [&](int v, int q) { return v * d.num_states + q; };
    std::vector<int> parent(static_cast<size_t>(nn) * d.num_states, -2);  // -2 unseen, -1 seed
    std::queue<int> bfs;
    for (int v = 0; v < nn; ++v) {
        parent[id(v, d.start)] = -1;
        bfs.push(id(v, d.start));
    }
    int goal = -1;
    while (!bfs.empty() && goal < 0) {
        int cur = bfs.front();
        bfs.pop();
        int v = cur / d.num_states, q = cur % d.num_states;
        int a = node_symbol(g, ly, v);
        int q2 = d.next(q, a);
        for (int v2 : ly.succs(v)) {
            int nid = id(v2, q2);
            if (parent[nid] == -2) {
                parent[nid] = cur;
                if (d.accepting[q2]) {
                    goal = nid;
                    break;
                }
                bfs.push(nid);
            }
        }
    }
    if (goal < 0) return rep;

    // reconstruct node path (factor symbols come from all nodes but the last)
    std::vector<int> path;
    for (int cur = goal; cur != -1; cur = parent[cur]) path.push_back(cur / d.num_states);
    std::reverse(path.begin(), path.end());
    std::vector<int> symbols;
    for (size_t i = 0; i + 1 < path.size(); ++i) symbols.push_back(node_symbol(g, ly, path[i]));

    // attribute a concrete start position to the class path
    long long len = static_cast<long long>(symbols.size());
    long long start_pos = 0;
    bool placed = false;
    for (size_t i = 0; i < path.size() && !placed; ++i) {
        int v = path[i];
        if (v >= ly.pl) {
            long long pos_v = (v < ly.pl + ly.m)
                                  ? g.anchor + (v - ly.pl)
                                  : g.anchor + ly.m + (v - ly.pl - ly.m);
            start_pos = pos_v - static_cast<long long>(i);
            placed = true;
        }
    }
    if (!placed) {
        // path never leaves the left tail; place it far enough left
        long long phi0 = path[0];
        long long k = (len / ly.pl) + 2;
        start_pos = g.anchor + phi0 - k * ly.pl;
    }
    rep.found = true;
    rep.witness = FactorWitness{std::move(symbols), start_pos};
    return rep;
}

namespace {

using StateSet = std::vector<char>;

StateSet post_set(const std::vector<std::vector<std::vector<int>>>& adj, const StateSet& s,
                  int sym) {
    StateSet out(s.size(), 0);
    for (size_t q = 0; q < s.size(); ++q)
        if (s[q])
            for (int t : adj[sym][q]) out[t] = 1;
    return out;
}

StateSet pre_set(const std::vector<std::vector<std::vector<int>>>& radj, const StateSet& s,
                 int sym) {
    StateSet out(s.size(), 0);
    for (size_t q = 0; q < s.size(); ++q)
        if (s[q])
            for (int t : radj[sym][q]) out[t] = 1;
    return out;
}

std::string set_key(const StateSet& s) { return std::string(s.begin(), s.end()); }

int first_common(const StateSet& a, const StateSet& b, const std::vector<char>& c) {
    for (size_t q = 0; q < a.size(); ++q)
        if (a[q] && b[q] && c[q]) return static_cast<int>(q);
    return -1;
}

}  // namespace

BiinfinitePath biinfinite_flagged_path(const LayeredWordGraph& g, const LabeledGraph& p,
                                       const std::vector<char>& flagged) {
    if (static_cast<int>(flagged.size()) != p.num_nodes)
        throw std::invalid_argument("flagged vector size mismatch");
    int pl = static_cast<int>(g.left.size());
    int m = static_cast<int>(g.mid.size());
    int pr = static_cast<int>(g.right.size());
    int nq = p.num_nodes;

    std::vector<std::vector<std::vector<int>>> adj(p.num_symbols,
                                                   std::vector<std::vector<int>>(nq));
    std::vector<std::vector<std::vector<int>>> radj(p.num_symbols,
                                                    std::vector<std::vector<int>>(nq));
    for (auto [f, a, t] : p.edges) {
        adj[a][f].push_back(t);
        radj[a][t].push_back(f);
    }
    for (auto& per_sym : adj)
        for (auto& v : per_sym) std::sort(v.begin(), v.end());
    for (auto& per_sym : radj)
        for (auto& v : per_sym) std::sort(v.begin(), v.end());

    // greatest fixpoint: nodes with an infinite backward history in the
    // left-periodic region, per phase
    std::vector<StateSet> li_left(pl, StateSet(nq, 1));
    for (bool changed = true; changed;) {
        changed = false;
        for (int phi = 0; phi < pl; ++phi) {
            int prev = (phi - 1 + pl) % pl;
            StateSet ns = post_set(adj, li_left[prev], g.left[prev]);
            for (int q = 0; q < nq; ++q) ns[q] = ns[q] && li_left[phi][q];
            if (ns != li_left[phi]) {
                li_left[phi] = std::move(ns);
                changed = true;
            }
        }
    }

    // symmetric greatest fixpoint for forward futures in the right tail
    std::vector<StateSet> ri_right(pr, StateSet(nq, 1));
    for (bool changed = true; changed;) {
        changed = false;
        for (int phi = pr - 1; phi >= 0; --phi) {
            StateSet ns = pre_set(radj, ri_right[(phi + 1) % pr], g.right[phi]);
            for (int q = 0; q < nq; ++q) ns[q] = ns[q] && ri_right[phi][q];
            if (ns != ri_right[phi]) {
                ri_right[phi] = std::move(ns);
                changed = true;
            }
        }
    }

    // propagate forward histories through the middle and into the right tail
    std::vector<StateSet> li_mid;
    StateSet cur = li_left[0];  // value at position anchor
    for (int i = 0; i < m; ++i) {
        li_mid.push_back(cur);
        cur = post_set(adj, cur, g.mid[i]);
    }
    std::vector<StateSet> li_rseq;  // position anchor+m+j
    {
        std::unordered_set<std::string> seen;
        int j = 0;
        while (true) {
            std::string key = std::to_string(j % pr) + "|" + set_key(cur);
            if (!seen.insert(key).second) break;
            li_rseq.push_back(cur);
            cur = post_set(adj, cur, g.right[j % pr]);
            ++j;
        }
    }

    // propagate futures backward through the middle and into the left tail
    std::vector<StateSet> ri_mid(m);
    cur = ri_right[0];  // value at position anchor+m
    for (int i = m - 1; i >= 0; --i) {
        cur = pre_set(radj, cur, g.mid[i]);
        ri_mid[i] = cur;
    }
    StateSet ri_anchor = cur;  // futures at position anchor
    std::vector<StateSet> ri_lseq;  // position anchor-1-j
    {
        std::unordered_set<std::string> seen;
        int j = 0;
        while (true) {
            int phi = ((pl - 1 - j) % pl + pl) % pl;
            cur = pre_set(radj, cur, g.left[phi]);
            std::string key = std::to_string(phi) + "|" + set_key(cur);
            if (!seen.insert(key).second) break;
            ri_lseq.push_back(cur);
            ++j;
        }
    }

    auto li_at = [&](long long i) -> const StateSet& {
        if (i < g.anchor) return li_left[static_cast<size_t>(((i - g.anchor) % pl + pl) % pl)];
        long long off = i - g.anchor;
        if (off < m) return li_mid[static_cast<size_t>(off)];
        return li_rseq.at(static_cast<size_t>(off - m));
    };
    auto ri_at = [&](long long i) -> const StateSet& {
        long long off = i - g.anchor;
        if (off >= m) return ri_right[static_cast<size_t>((off - m) % pr)];
        if (off >= 0) return ri_mid[static_cast<size_t>(off)];
        return ri_lseq.at(static_cast<size_t>(g.anchor - 1 - i));
    };

    // search a position where a flagged node has both a history and a future
    long long found_pos = 0;
    int found_q = -1;
    for (int i = 0; i < m && found_q < 0; ++i) {
        int q = first_common(li_mid[i], ri_mid[i], flagged);
        if (q >= 0) {
            found_pos = g.anchor + i;
            found_q = q;
        }
    }
    for (size_t j = 0; j < li_rseq.size() && found_q < 0; ++j) {
        int q = first_common(li_rseq[j], ri_right[j % pr], flagged);
        if (q >= 0) {
            found_pos = g.anchor + m + static_cast<long long>(j);
            found_q = q;
        }
    }
    for (size_t j = 0; j < ri_lseq.size() && found_q < 0; ++j) {
        int phi = static_cast<int>(((pl - 1 - static_cast<long long>(j)) % pl + pl) % pl);
        int q = first_common(li_left[phi], ri_lseq[j], flagged);
        if (q >= 0) {
            found_pos = g.anchor - 1 - static_cast<long long>(j);
            found_q = q;
        }
    }
    // position anchor+m when the middle is nonempty is covered by li_rseq[0];
    // when m == 0 it is also li_rseq[0]

    BiinfinitePath out;
    if (found_q < 0) return out;
    out.exists = true;

    // backward walk along histories, lexicographically least predecessor
    std::map<long long, int> nodes;
    nodes[found_pos] = found_q;
    long long lcyc_hi = 0, lcyc_lo = 0;
    {
        std::map<std::pair<long long, int>, long long> seen;  // (phase, node) -> position
        long long pos = found_pos;
        int q = found_q;
        while (true) {
            long long prev = pos - 1;
            int sym = g.symbol_at(prev);
            const StateSet& allowed = li_at(prev);
            int chosen = -1;
            for (int cand : radj[sym][q]) {
                if (allowed[cand]) {
                    chosen = cand;
                    break;
                }
            }
            if (chosen < 0) throw std::logic_error("biinfinite path: broken history");
            pos = prev;
            q = chosen;
            nodes[pos] = q;
            if (pos < g.anchor) {
                long long phi = ((pos - g.anchor) % pl + pl) % pl;
                auto key = std::make_pair(phi, q);
                auto it = seen.find(key);
                if (it != seen.end()) {
                    lcyc_lo = pos;
                    lcyc_hi = it->second;
                    break;
                }
                seen[key] = pos;
            }
        }
    }

    // forward walk along futures
    long long rcyc_lo = 0, rcyc_hi = 0;
    {
        std::map<std::pair<long long, int>, long long> seen;
        long long pos = found_pos;
        int q = found_q;
        long long mend = g.anchor + m;
        if (pos >= mend) {
            seen[{(pos - mend) % pr, q}] = pos;
        }
        while (true) {
            int sym = g.symbol_at(pos);
            const StateSet& allowed = ri_at(pos + 1);
            int chosen = -1;
            for (int cand : adj[sym][q]) {
                if (allowed[cand]) {
                    chosen = cand;
                    break;
                }
            }
            if (chosen < 0) throw std::logic_error("biinfinite path: broken future");
            pos += 1;
            q = chosen;
            nodes[pos] = q;
            if (pos >= mend) {
                auto key = std::make_pair((pos - mend) % pr, q);
                auto it = seen.find(key);
                if (it != seen.end()) {
                    rcyc_lo = it->second;
                    rcyc_hi = pos;
                    break;
                }
                seen[key] = pos;
            }
        }
    }

    std::vector<int> wleft, wmid, wright;
    for (long long i = lcyc_lo; i < lcyc_hi; ++i) wleft.push_back(nodes.at(i));
    for (long long i = lcyc_hi; i < rcyc_lo; ++i) wmid.push_back(nodes.at(i));
    for (long long i = rcyc_lo; i < rcyc_hi; ++i) wright.push_back(nodes.at(i));
    out.nodes = EpWord(std::move(wleft), std::move(wmid), std::move(wright), lcyc_hi);
    return out;
}

std::string nfa_to_dot(const Nfa& n, const std::function<std::string(int)>& symbol_name) {
    std::ostringstream os;
    os << "digraph nfa {\n  rankdir=LR;\n";
    for (int q = 0; q < n.num_states; ++q) {
        os << "  q" << q << " [shape=" << (n.accepting[q] ? "doublecircle" : "circle");
        if (n.initial[q]) os << ", style=bold";
        os << "];\n";
    }
    std::map<std::pair<int, int>, std::vector<std::string>> collapsed;
    for (auto [f, a, t] : n.transitions) collapsed[{f, t}].push_back(symbol_name(a));
    for (auto& [edge, labels] : collapsed) {
        std::sort(labels.begin(), labels.end());
        os << "  q" << edge.first << " -> q" << edge.second << " [label=\"";
        for (size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string dfa_to_dot(const Dfa& d, const std::function<std::string(int)>& symbol_name) {
    return nfa_to_dot(nfa_from_dfa(d), symbol_name);
}

}  // namespace nuca
