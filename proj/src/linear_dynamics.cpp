#include "nuca/linear_dynamics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "nuca/simulation.hpp"

namespace nuca {

namespace {

void require_linear(const RuleSet& rs, const RuleWord& psi) {
    rs.check_rule_word(psi);
    for (int i : psi)
        if (!rs.rule(i).is_linear())
            throw std::invalid_argument("wall check requires linear rules");
}

// One wall orbit: iterate u_{k+1} = h_psi(0^r u_k 0^r) from the seeded
// u_1, with cycle detection on the finite orbit space A^n. Returns false
// on the first state whose guarded cells are nonzero.
bool run_orbit(const RuleSet& rs, const RuleWord& psi, Word u1, bool right_side,
               OrbitSummary& summary) {
    int r = rs.radius;
    int n = static_cast<int>(psi.size());
    int s = rs.alphabet.size;
    auto guarded_zero = [&](const Word& u) {
        for (int t = 0; t < r; ++t)
            if (u[right_side ? t : n - 1 - t] != 0) return false;
        return true;
    };
    std::map<Word, long long> seen;
    Word u = std::move(u1);
    long long k = 1;
    while (true) {
        if (!guarded_zero(u)) return false;
        auto it = seen.find(u);
        if (it != seen.end()) {
            summary.cycle_entry = it->second;
            summary.cycle_length = k - it->second;
            return true;
        }
        seen[u] = k;
        Word padded(n + 2 * r, 0);
        std::copy(u.begin(), u.end(), padded.begin() + r);
        u = apply_partial(rs, psi, padded);
        ++k;
        if (k > static_cast<long long>(pow_count(s, n)) + 2)
            throw std::logic_error("wall orbit failed to cycle");
    }
}

std::pair<bool, WallCertificate> wall_check(const RuleSet& rs, const RuleWord& psi,
                                            bool right_side, bool exhaustive) {
    require_linear(rs, psi);
    int r = rs.radius;
    int n = static_cast<int>(psi.size());
    int s = rs.alphabet.size;
    if (n < r) throw std::invalid_argument("wall check: |psi| must be >= r");

    WallCertificate cert;
    cert.pattern = psi;
    cert.side = right_side ? WallSide::Right : WallSide::Left;
    cert.length = n;

    auto seed = [&](const Word& v) {
        // u_1 = h_psi(0^r 0^n v) for right walls, h_psi(v 0^n 0^r) for left
        Word w(n + 2 * r, 0);
        for (int t = 0; t < r; ++t)
            w[right_side ? n + r + t : t] = v[t];
        return apply_partial(rs, psi, w);
    };

    std::vector<Word> starts;
    if (exhaustive) {
        std::uint64_t total = pow_count(s, r);
        for (std::uint64_t idx = 1; idx < total; ++idx) starts.push_back(index_word(idx, s, r));
    } else {
        // the compliant v form a submodule of A^r, so unit vectors suffice
        for (int j = 0; j < r; ++j) {
            Word v(r, 0);
            v[j] = 1;
            starts.push_back(v);
        }
    }
    for (size_t j = 0; j < starts.size(); ++j) {
        OrbitSummary sum;
        sum.basis_index = static_cast<int>(j);
        if (!run_orbit(rs, psi, seed(starts[j]), right_side, sum)) return {false, cert};
        cert.orbits.push_back(sum);
    }
    cert.verified = true;
    return {true, cert};
}

}  // namespace

std::pair<bool, WallCertificate> is_right_wall(const RuleSet& rs, const RuleWord& psi,
                                               bool exhaustive) {
    return wall_check(rs, psi, true, exhaustive);
}

std::pair<bool, WallCertificate> is_left_wall(const RuleSet& rs, const RuleWord& psi,
                                              bool exhaustive) {
    return wall_check(rs, psi, false, exhaustive);
}

std::vector<long long> propagation_radii(const Distribution& theta, long long cell,
                                         int steps) {
    const RuleSet& rs = *theta.rule_set;
    for (const auto& f : rs.rules)
        if (!f.is_linear()) throw std::invalid_argument("propagation_radii: rules must be linear");
    if (steps < 0) throw std::invalid_argument("propagation_radii: steps must be >= 0");
    int r = rs.radius;
    int s = rs.alphabet.size;

    std::vector<long long> radii{0};  // H^0 is the identity
    std::map<long long, int> row{{cell, 1}};  // H^n(x)_cell = sum row[p] * x_p
    for (int n = 1; n <= steps; ++n) {
        std::map<long long, int> next;
        for (auto [p, c] : row) {
            const Word& lambda = *rs.rule(theta.rule_at(p)).linear_coeffs;
            for (int t = 0; t <= 2 * r; ++t) {
                int v = (next[p - r + t] + c * lambda[t]) % s;
                if (v == 0)
                    next.erase(p - r + t);
                else
                    next[p - r + t] = v;
            }
        }
        row = std::move(next);
        long long radius = 0;
        for (auto [p, c] : row) radius = std::max(radius, std::llabs(p - cell));
        radii.push_back(radius);
    }
    return radii;
}

int default_wall_search_bound(const Distribution& theta) {
    int pl = static_cast<int>(theta.word.left.size());
    int pr = static_cast<int>(theta.word.right.size());
    return std::max({4 * pl, 4 * pr, 8 * theta.rule_set->radius});
}

DynamicsReport classify(const Distribution& theta, int n_max) {
    const RuleSet& rs = *theta.rule_set;
    for (const auto& f : rs.rules)
        if (!f.is_linear()) throw std::invalid_argument("classify: rules must be linear");
    int r = rs.radius;
    if (n_max < std::max(r, 1))
        throw std::invalid_argument("classify: n_max must be >= max(r, 1)");

    DynamicsReport rep;
    rep.n_max = n_max;
    int pl = static_cast<int>(theta.word.left.size());
    int pr = static_cast<int>(theta.word.right.size());

    // A wall pattern lying wholly inside a periodic tail recurs at
    // infinitely many positions, which settles the verdict.
    for (int len = std::max(r, 1); len <= n_max; ++len) {
        for (int phi = 0; phi < pl; ++phi) {
            // pattern of the left tail ending at phase phi
            RuleWord psi(static_cast<size_t>(len));
            for (int t = 0; t < len; ++t)
                psi[static_cast<size_t>(t)] =
                    theta.word.left[static_cast<size_t>(((phi - (len - 1) + t) % pl + pl) % pl)];
            auto [is_wall, cert] = is_left_wall(rs, psi);
            if (is_wall) {
                cert.phase = phi;
                rep.verdict = DynamicsVerdict::Equicontinuous;
                rep.certificates.push_back(cert);
            }
        }
        for (int phi = 0; phi < pr; ++phi) {
            RuleWord psi(static_cast<size_t>(len));
            for (int t = 0; t < len; ++t)
                psi[static_cast<size_t>(t)] = theta.word.right[static_cast<size_t>((phi + t) % pr)];
            auto [is_wall, cert] = is_right_wall(rs, psi);
            if (is_wall) {
                cert.phase = phi;
                rep.verdict = DynamicsVerdict::Equicontinuous;
                rep.certificates.push_back(cert);
            }
        }
        if (!rep.certificates.empty()) return rep;  // smallest length wins
    }
    rep.verdict = DynamicsVerdict::SensitiveBoundedEvidence;
    return rep;
}

EmpiricalSummary empirical_classify(const Distribution& theta, long long trials,
                                    long long steps, long long window) {
    EmpiricalSummary sum;
    sum.trials = trials;
    sum.steps = steps;
    sum.window = window;
    Configuration x = Configuration::zero(theta.rule_set->alphabet);
    long long span = std::max<long long>(trials, 1);
    for (long long k = 0; k < trials; ++k) {
        long long pos = -span / 2 + k;
        PerturbationCone cone = perturbation_cone(theta, x, pos, steps);
        for (const auto& mask : cone.masks) {
            for (size_t i = 0; i < mask.size(); ++i) {
                if (!mask[i]) continue;
                long long dist = std::llabs(cone.window_lo + static_cast<long long>(i) - pos);
                sum.max_distance = std::max(sum.max_distance, dist);
                if (dist > window) sum.any_escape = true;
            }
        }
    }
    return sum;
}

}  // namespace nuca
