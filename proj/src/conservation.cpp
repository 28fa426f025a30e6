#include "nuca/conservation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "nuca/simulation.hpp"

namespace nuca {

NcWindowCheck is_nc_window(const RuleSet& rs, const RuleWord& psi) {
    int r = rs.radius;
    int s = rs.alphabet.size;
    if (psi.size() != static_cast<size_t>(2 * r + 1))
        throw std::invalid_argument("is_nc_window: |psi| must be 2r+1");
    rs.check_rule_word(psi);
    std::uint64_t words = pow_count(s, 2 * r + 1);
    for (std::uint64_t idx = 0; idx < words; ++idx) {
        Word u = index_word(idx, s, 2 * r + 1);
        // lhs: the rightmost rule applied to u; rhs: telescoping charge flow
        long long lhs = rs.rule(psi[2 * r]).apply(u, s);
        long long rhs = u[0];
        for (int i = 0; i <= 2 * r - 1; ++i) {
            Word a(2 * r + 1, 0), b(2 * r + 1, 0);
            // 0^{2r-i} u_[1,i+1]  and  0^{2r-i} u_[0,i]
            for (int t = 0; t <= i; ++t) {
                a[2 * r - i + t] = u[1 + t];
                b[2 * r - i + t] = u[t];
            }
            rhs += static_cast<long long>(rs.rule(psi[i + 1]).apply(a, s)) -
                   static_cast<long long>(rs.rule(psi[i]).apply(b, s));
        }
        if (lhs != rhs) return {false, u};
    }
    return {true, std::nullopt};
}

bool NcForbiddenSet::contains(const RuleWord& psi) const {
    for (const auto& [w, u] : windows)
        if (w == psi) return true;
    return false;
}

NcForbiddenSet forbidden_nc_windows(const RuleSetPtr& rs) {
    NcForbiddenSet out;
    out.rule_set = rs;
    int len = 2 * rs->radius + 1;
    std::uint64_t total = pow_count(rs->size(), len);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = index_word(idx, rs->size(), len);
        RuleWord psi(w.begin(), w.end());
        NcWindowCheck chk = is_nc_window(*rs, psi);
        if (!chk.conserving) out.windows.emplace_back(psi, *chk.violating_input);
    }
    return out;
}

NcReport is_distribution_nc(const Distribution& theta) {
    const RuleSet& rs = *theta.rule_set;
    int r = rs.radius;
    long long pl = static_cast<long long>(theta.word.left.size());
    long long pr = static_cast<long long>(theta.word.right.size());
    long long a = theta.word.anchor;
    long long m = static_cast<long long>(theta.word.mid.size());
    NcReport rep;
    // window [j-2r, j]: j in [a-pl, a+m+2r+pr) covers every distinct window
    // of an eventually periodic distribution
    for (long long j = a - pl; j < a + m + 2 * r + pr; ++j) {
        RuleWord psi = theta.window(j - 2 * r, j);
        NcWindowCheck chk = is_nc_window(rs, psi);
        if (!chk.conserving) {
            rep.conserving = false;
            rep.window_lo = j - 2 * r;
            rep.window_hi = j;
            rep.window = psi;
            rep.violating_input = chk.violating_input;
            return rep;
        }
    }
    return rep;
}

NcSft nc_sft(const RuleSetPtr& rs) {
    NcSft sft;
    sft.rule_set = rs;
    int r = rs->radius;
    int nr = rs->size();
    int vlen = 2 * r;
    sft.num_vertices = static_cast<int>(pow_count(nr, vlen));
    std::uint64_t total = pow_count(nr, vlen + 1);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = index_word(idx, nr, vlen + 1);
        RuleWord psi(w.begin(), w.end());
        if (!is_nc_window(*rs, psi).conserving) continue;
        RuleWord prefix(psi.begin(), psi.end() - 1);
        RuleWord suffix(psi.begin() + 1, psi.end());
        sft.edges.emplace_back(static_cast<int>(word_index(prefix, nr)),
                               static_cast<int>(word_index(suffix, nr)));
    }
    // nonempty iff the allowed-window graph has a cycle
    std::vector<std::vector<int>> adj(sft.num_vertices);
    std::vector<int> indeg(sft.num_vertices, 0);
    for (auto [u, v] : sft.edges) {
        adj[u].push_back(v);
        indeg[v]++;
    }
    std::vector<int> queue;
    for (int v = 0; v < sft.num_vertices; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    size_t removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++removed;
        for (int t : adj[v])
            if (--indeg[t] == 0) queue.push_back(t);
    }
    sft.empty = (removed == static_cast<size_t>(sft.num_vertices));
    return sft;
}

std::string NcSft::to_dot() const {
    int nr = rule_set->size();
    int vlen = 2 * rule_set->radius;
    auto name = [&](int id) {
        Word w = index_word(static_cast<std::uint64_t>(id), nr, vlen);
        std::string out;
        for (size_t i = 0; i < w.size(); ++i)
            out += (i ? " " : "") + rule_set->rule(w[i]).name;
        return out;
    };
    std::ostringstream os;
    os << "digraph nc_sft {\n  rankdir=LR;\n";
    for (int v = 0; v < num_vertices; ++v) os << "  \"" << name(v) << "\";\n";
    for (auto [u, v] : edges) os << "  \"" << name(u) << "\" -> \"" << name(v) << "\";\n";
    os << "}\n";
    return os.str();
}

ChargeOracleResult charge_oracle(const Distribution& theta, int width,
                                 long long random_samples, unsigned seed) {
    const RuleSet& rs = *theta.rule_set;
    int r = rs.radius;
    int s = rs.alphabet.size;
    ChargeOracleResult res;
    // zero preservation first: one nonzero theta_i(0...0) already breaks FNC
    Word zeros(2 * r + 1, 0);
    long long pl = static_cast<long long>(theta.word.left.size());
    long long pr = static_cast<long long>(theta.word.right.size());
    long long a = theta.word.anchor;
    long long m = static_cast<long long>(theta.word.mid.size());
    for (long long i = a - pl; i < a + m + pr; ++i) {
        if (rs.rule(theta.rule_at(i)).apply(zeros, s) != 0) {
            res.confirmed = false;
            res.violating = Configuration::zero(rs.alphabet);
            res.charge_before = 0;
            res.charge_after = 1;  // nonzero image charge; exact value not needed
            return res;
        }
    }

    int support = 2 * width + 1;
    auto check_one = [&](const Word& letters) -> bool {
        Configuration x = Configuration::finite(rs.alphabet, letters, -width);
        long long before = 0;
        for (Letter v : letters) before += v;
        Configuration hx = step(theta, x);
        long long after = *global_charge(hx);
        ++res.checked;
        if (before != after) {
            res.confirmed = false;
            res.violating = x;
            res.charge_before = before;
            res.charge_after = after;
            return false;
        }
        return true;
    };

    if (random_samples > 0) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> dist(0, s - 1);
        for (long long k = 0; k < random_samples; ++k) {
            Word letters(support);
            for (auto& v : letters) v = dist(rng);
            if (!check_one(letters)) return res;
        }
    } else {
        std::uint64_t total = pow_count(s, support);
        for (std::uint64_t idx = 0; idx < total; ++idx)
            if (!check_one(index_word(idx, s, support))) return res;
    }
    return res;
}

}  // namespace nuca
