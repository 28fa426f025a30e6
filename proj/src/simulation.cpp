#include "nuca/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nuca {

double CantorDistance::value() const { return zero ? 0.0 : std::pow(2.0, -static_cast<double>(k)); }

Configuration step(const Distribution& theta, const Configuration& x) {
    const RuleSet& rs = *theta.rule_set;
    if (rs.alphabet.size != x.alphabet.size)
        throw std::invalid_argument("step: alphabet mismatch");
    int r = rs.radius;
    int s = rs.alphabet.size;

    auto eval = [&](long long i) -> Letter {
        Word u = x.word.slice(i - r, i + r);
        return rs.rule(theta.rule_at(i)).apply(u, s);
    };

    long long lp = std::lcm(static_cast<long long>(theta.word.left.size()),
                            static_cast<long long>(x.word.left.size()));
    long long rp = std::lcm(static_cast<long long>(theta.word.right.size()),
                            static_cast<long long>(x.word.right.size()));
    // below lbound both theta and the input window are purely left-periodic
    long long lbound = std::min(theta.word.anchor, x.word.anchor - r);
    long long rbound = std::max(theta.word.mid_end(), x.word.mid_end() + r);

    std::vector<int> left, mid, right;
    for (long long i = lbound - lp; i < lbound; ++i) left.push_back(eval(i));
    for (long long i = lbound; i < rbound; ++i) mid.push_back(eval(i));
    for (long long i = rbound; i < rbound + rp; ++i) right.push_back(eval(i));

    EpWord out(std::move(left), std::move(mid), std::move(right), lbound);
    return Configuration(x.alphabet, out.normalized());
}

Configuration iterate(const Distribution& theta, const Configuration& x, long long t) {
    if (t < 0) throw std::invalid_argument("iterate: t must be >= 0");
    Configuration y = x;
    for (long long k = 0; k < t; ++k) y = step(theta, y);
    return y;
}

CantorDistance cantor_distance(const Configuration& x, const Configuration& y) {
    if (x.alphabet.size != y.alphabet.size)
        throw std::invalid_argument("cantor_distance: alphabet mismatch");
    if (ep_equal(x.word, y.word)) return {true, 0};
    // not equal: some difference exists within the equality-check range
    long long lp = std::lcm(static_cast<long long>(x.word.left.size()),
                            static_cast<long long>(y.word.left.size()));
    long long rp = std::lcm(static_cast<long long>(x.word.right.size()),
                            static_cast<long long>(y.word.right.size()));
    long long lo = std::min(x.word.anchor, y.word.anchor) - lp;
    long long hi = std::max(x.word.mid_end(), y.word.mid_end()) + rp;
    long long bound = std::max(std::llabs(lo), std::llabs(hi));
    for (long long k = 0; k <= bound; ++k) {
        if (x.at(k) != y.at(k) || x.at(-k) != y.at(-k)) return {false, k};
    }
    return {false, bound};  // unreachable
}

long long partial_charge(const Configuration& x, long long n) {
    if (n < 0) throw std::invalid_argument("partial_charge: n must be >= 0");
    long long sum = 0;
    for (long long i = -n; i <= n; ++i) sum += x.at(i);
    return sum;
}

std::optional<long long> global_charge(const Configuration& x) {
    for (int a : x.word.left)
        if (a != 0) return std::nullopt;
    for (int a : x.word.right)
        if (a != 0) return std::nullopt;
    long long sum = 0;
    for (int a : x.word.mid) sum += a;
    return sum;
}

ChargeSeries charge_ratio_series(const Distribution& theta, const Configuration& x,
                                 long long n_max) {
    ChargeSeries out;
    Configuration hx = step(theta, x);
    for (long long n = 0; n <= n_max; ++n) {
        ChargeRow row{n, partial_charge(x, n), partial_charge(hx, n), std::nullopt};
        if (row.charge_x != 0)
            row.ratio = static_cast<double>(row.charge_hx) / static_cast<double>(row.charge_x);
        out.rows.push_back(row);
    }
    for (size_t i = out.rows.size() / 2; i < out.rows.size(); ++i) {
        if (!out.rows[i].ratio) continue;
        double v = *out.rows[i].ratio;
        if (!out.tail_min || v < *out.tail_min) out.tail_min = v;
        if (!out.tail_max || v > *out.tail_max) out.tail_max = v;
    }
    return out;
}

SpaceTimeDiagram space_time(const Distribution& theta, const Configuration& x,
                            long long a, long long b, long long steps) {
    if (a > b) throw std::invalid_argument("space_time: window must satisfy a <= b");
    if (steps < 0) throw std::invalid_argument("space_time: steps must be >= 0");
    SpaceTimeDiagram d;
    d.window_lo = a;
    d.window_hi = b;
    Configuration y = x;
    for (long long t = 0; t <= steps; ++t) {
        d.rows.push_back(y.word.slice(a, b));
        if (t < steps) y = step(theta, y);
    }
    return d;
}

PerturbationCone perturbation_cone(const Distribution& theta, const Configuration& x,
                                   long long position, long long steps) {
    if (steps < 0) throw std::invalid_argument("perturbation_cone: steps must be >= 0");
    int s = x.alphabet.size;
    int r = theta.rule_set->radius;
    Configuration y(x.alphabet, x.word.with(position, (x.at(position) + 1) % s));

    PerturbationCone cone;
    cone.position = position;
    cone.window_lo = position - static_cast<long long>(r) * steps - 1;
    cone.window_hi = position + static_cast<long long>(r) * steps + 1;
    Configuration cx = x, cy = y;
    for (long long t = 0; t <= steps; ++t) {
        std::vector<char> mask;
        for (long long i = cone.window_lo; i <= cone.window_hi; ++i)
            mask.push_back(cx.at(i) != cy.at(i) ? 1 : 0);
        cone.masks.push_back(std::move(mask));
        if (t < steps) {
            cx = step(theta, cx);
            cy = step(theta, cy);
        }
    }
    return cone;
}

}  // namespace nuca
