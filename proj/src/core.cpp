#include "nuca/core.hpp"

#include <algorithm>
#include <numeric>

namespace nuca {

std::uint64_t pow_count(int s, int len) {
    std::uint64_t n = 1;
    for (int i = 0; i < len; ++i) n *= static_cast<std::uint64_t>(s);
    return n;
}

std::uint64_t word_index(const Word& w, int s) {
    std::uint64_t idx = 0;
    for (Letter a : w) idx = idx * static_cast<std::uint64_t>(s) + static_cast<std::uint64_t>(a);
    return idx;
}

Word index_word(std::uint64_t idx, int s, int len) {
    Word w(len, 0);
    for (int j = len - 1; j >= 0; --j) {
        w[j] = static_cast<Letter>(idx % s);
        idx /= s;
    }
    return w;
}

LocalRule make_linear_rule(const std::string& name, int s, const Word& coeffs) {
    if (coeffs.size() % 2 == 0) throw std::invalid_argument("coefficient vector must have odd length");
    LocalRule f;
    f.name = name;
    f.radius = static_cast<int>(coeffs.size() / 2);
    f.linear_coeffs = coeffs;
    std::uint64_t n = pow_count(s, f.window_length());
    f.table.resize(n);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        Word u = index_word(idx, s, f.window_length());
        long long v = 0;
        for (size_t i = 0; i < u.size(); ++i) v += static_cast<long long>(coeffs[i]) * u[i];
        f.table[idx] = static_cast<Letter>(v % s);
    }
    return f;
}

namespace {

// A table rule is linear iff it matches the table generated by the
// coefficients read off the unit-vector inputs and f(0...0) = 0.
std::optional<Word> detect_linear(int s, int radius, const std::vector<Letter>& table) {
    int len = 2 * radius + 1;
    if (table[0] != 0) return std::nullopt;
    Word coeffs(len, 0);
    for (int i = 0; i < len; ++i) {
        Word e(len, 0);
        e[i] = 1;
        coeffs[i] = table[word_index(e, s)];
    }
    LocalRule cand = make_linear_rule("", s, coeffs);
    if (cand.table == table) return coeffs;
    return std::nullopt;
}

}  // namespace

LocalRule make_table_rule(const std::string& name, int s, int radius,
                          const std::vector<Letter>& table) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (table.size() != pow_count(s, 2 * radius + 1))
        throw std::invalid_argument("rule table for '" + name + "' has wrong size");
    for (Letter a : table)
        if (a < 0 || a >= s) throw std::invalid_argument("rule table entry out of alphabet");
    LocalRule f;
    f.name = name;
    f.radius = radius;
    f.table = table;
    f.linear_coeffs = detect_linear(s, radius, table);
    return f;
}

LocalRule pad_rule(const LocalRule& f, int s, int target_radius) {
    if (target_radius < f.radius)
        throw std::invalid_argument("pad_rule: target radius smaller than rule radius");
    if (target_radius == f.radius) return f;
    LocalRule g;
    g.name = f.name;
    g.radius = target_radius;
    int pad = target_radius - f.radius;
    std::uint64_t n = pow_count(s, g.window_length());
    g.table.resize(n);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        Word w = index_word(idx, s, g.window_length());
        Word center(w.begin() + pad, w.begin() + pad + f.window_length());
        g.table[idx] = f.table[word_index(center, s)];
    }
    if (f.linear_coeffs) {
        Word c(g.window_length(), 0);
        std::copy(f.linear_coeffs->begin(), f.linear_coeffs->end(), c.begin() + pad);
        g.linear_coeffs = c;
    }
    return g;
}

RuleSet::RuleSet(Alphabet a, std::vector<LocalRule> raw) : alphabet(a) {
    if (raw.empty()) throw std::invalid_argument("rule set must not be empty");
    radius = 0;
    for (const auto& f : raw) radius = std::max(radius, f.radius);
    for (auto& f : raw) {
        if (index_of.count(f.name))
            throw std::invalid_argument("duplicate rule name '" + f.name + "'");
        index_of[f.name] = static_cast<int>(rules.size());
        source_radii.push_back(f.radius);
        rules.push_back(pad_rule(f, a.size, radius));
    }
}

int RuleSet::index(const std::string& name) const {
    auto it = index_of.find(name);
    if (it == index_of.end())
        throw std::invalid_argument("unknown rule name '" + name + "'");
    return it->second;
}

void RuleSet::check_rule_word(const RuleWord& psi) const {
    for (int i : psi)
        if (i < 0 || i >= size()) throw std::invalid_argument("rule index out of range");
}

EpWord::EpWord(std::vector<int> l, std::vector<int> m, std::vector<int> rr,
               long long a)
    : left(std::move(l)), mid(std::move(m)), right(std::move(rr)), anchor(a) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("periods must be nonempty");
}

int EpWord::at(long long i) const {
    if (i < anchor) {
        long long p = static_cast<long long>(left.size());
        long long phi = ((i - anchor) % p + p) % p;
        return left[static_cast<size_t>(phi)];
    }
    long long off = i - anchor;
    if (off < static_cast<long long>(mid.size())) return mid[static_cast<size_t>(off)];
    long long p = static_cast<long long>(right.size());
    return right[static_cast<size_t>((off - static_cast<long long>(mid.size())) % p)];
}

std::vector<int> EpWord::slice(long long i, long long j) const {
    if (i > j) throw std::invalid_argument("slice: i > j");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(j - i + 1));
    for (long long k = i; k <= j; ++k) out.push_back(at(k));
    return out;
}

EpWord EpWord::with(long long i, int v) const {
    EpWord w = *this;
    // widen the middle so that position i falls inside it
    while (i < w.anchor) {
        w.mid.insert(w.mid.begin(), w.left.back());
        std::rotate(w.left.begin(), w.left.end() - 1, w.left.end());
        w.anchor -= 1;
    }
    while (i >= w.mid_end()) {
        w.mid.push_back(w.right[0]);
        std::rotate(w.right.begin(), w.right.begin() + 1, w.right.end());
    }
    w.mid[static_cast<size_t>(i - w.anchor)] = v;
    return w;
}

namespace {

// smallest p dividing |w| with w = (w[0..p))^{|w|/p}
std::vector<int> minimal_period(const std::vector<int>& w) {
    size_t n = w.size();
    for (size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i % p]);
        if (ok) return std::vector<int>(w.begin(), w.begin() + static_cast<long>(p));
    }
    return w;
}

}  // namespace

EpWord EpWord::normalized() const {
    EpWord w = *this;
    w.left = minimal_period(w.left);
    w.right = minimal_period(w.right);
    // absorb middle letters that already continue the periodic tails
    bool changed = true;
    while (changed) {
        changed = false;
        if (!w.mid.empty() && w.mid.back() == w.right[(w.right.size() - 1)]) {
            // dropping the last middle letter rotates the right period by one
            std::rotate(w.right.begin(), w.right.end() - 1, w.right.end());
            w.mid.pop_back();
            changed = true;
        }
        if (!w.mid.empty() && w.mid.front() == w.left[0]) {
            std::rotate(w.left.begin(), w.left.begin() + 1, w.left.end());
            w.mid.erase(w.mid.begin());
            w.anchor += 1;
            changed = true;
        }
    }
    return w;
}

bool ep_equal(const EpWord& x, const EpWord& y) {
    long long lp = std::lcm(static_cast<long long>(x.left.size()),
                            static_cast<long long>(y.left.size()));
    long long rp = std::lcm(static_cast<long long>(x.right.size()),
                            static_cast<long long>(y.right.size()));
    long long lo = std::min(x.anchor, y.anchor) - lp;
    long long hi = std::max(x.mid_end(), y.mid_end()) + rp;
    for (long long i = lo; i <= hi; ++i)
        if (x.at(i) != y.at(i)) return false;
    return true;
}

Distribution::Distribution(RuleSetPtr rs, EpWord w) : rule_set(std::move(rs)), word(std::move(w)) {
    if (!rule_set) throw std::invalid_argument("null rule set");
    auto check = [&](const std::vector<int>& v) { rule_set->check_rule_word(v); };
    check(word.left);
    check(word.mid);
    check(word.right);
}

Distribution Distribution::uniform(RuleSetPtr rs, int rule_index) {
    return Distribution(std::move(rs), EpWord({rule_index}, {}, {rule_index}, 0));
}

RuleWord Distribution::window(long long i, long long j) const {
    if (i > j) throw std::invalid_argument("window: i > j");
    return word.slice(i, j);
}

Configuration::Configuration(Alphabet a, EpWord w) : alphabet(a), word(std::move(w)) {
    auto check = [&](const std::vector<int>& v) {
        for (int x : v)
            if (!a.contains(x)) throw std::invalid_argument("letter out of alphabet");
    };
    check(word.left);
    check(word.mid);
    check(word.right);
}

Configuration Configuration::zero(Alphabet a) {
    return Configuration(a, EpWord({0}, {}, {0}, 0));
}

Configuration Configuration::finite(Alphabet a, const Word& letters, long long pos) {
    return Configuration(a, EpWord({0}, letters, {0}, pos));
}

Word apply_partial(const RuleSet& rs, const RuleWord& psi, const Word& w) {
    rs.check_rule_word(psi);
    int r = rs.radius;
    if (w.size() != psi.size() + static_cast<size_t>(2 * r))
        throw std::invalid_argument("apply_partial: |w| must equal |psi| + 2r");
    Word out(psi.size());
    for (size_t i = 0; i < psi.size(); ++i) {
        Word u(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2 * r + 1);
        out[i] = rs.rule(psi[i]).apply(u, rs.alphabet.size);
    }
    return out;
}

}  // namespace nuca
