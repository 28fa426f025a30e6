#include <doctest.h>

#include "helpers.hpp"
#include "nuca/simulation.hpp"

using namespace nuca;
using namespace testutil;

namespace {

Distribution random_dist(std::mt19937& rng, const RuleSetPtr& rs) {
    auto rw = [&](int len) {
        std::vector<int> v(static_cast<size_t>(len));
        for (auto& x : v) x = static_cast<int>(rng() % rs->size());
        return v;
    };
    return Distribution(rs, EpWord(rw(1 + static_cast<int>(rng() % 3)),
                                   rw(static_cast<int>(rng() % 5)),
                                   rw(1 + static_cast<int>(rng() % 3)),
                                   static_cast<long long>(rng() % 9) - 4));
}

Configuration random_config(std::mt19937& rng, int s) {
    return Configuration(Alphabet(s),
                         EpWord(random_word(rng, s, 1 + static_cast<int>(rng() % 3)),
                                random_word(rng, s, static_cast<int>(rng() % 5)),
                                random_word(rng, s, 1 + static_cast<int>(rng() % 3)),
                                static_cast<long long>(rng() % 9) - 4));
}

}  // namespace

TEST_CASE("step agrees with per-cell evaluation on random inputs") {
    auto rs = rules_all_four();
    std::mt19937 rng(42);
    std::uniform_int_distribution<long long> pos(-1000, 1000);
    for (int trial = 0; trial < 100; ++trial) {
        Distribution theta = random_dist(rng, rs);
        Configuration x = random_config(rng, 2);
        Configuration y = step(theta, x);
        for (int k = 0; k < 200; ++k) {
            long long i = pos(rng);
            Word win = x.word.slice(i - 1, i + 1);
            CHECK(y.at(i) == theta.local_rule_at(i).apply(win, 2));
        }
    }
}

TEST_CASE("uniform xor doubles a single 1") {
    auto rs = rules_xor_id();
    Distribution theta = Distribution::uniform(rs, rs->index("xor"));
    Configuration x = Configuration::finite(Alphabet(2), {1}, 0);
    Configuration y = step(theta, x);
    CHECK(y.at(-1) == 1);
    CHECK(y.at(0) == 0);
    CHECK(y.at(1) == 1);
    CHECK(global_charge(y) == 2);
}

TEST_CASE("uniform shift moves the configuration left by one") {
    auto rs = rules_id_shift();
    Distribution theta = Distribution::uniform(rs, rs->index("shift"));
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Configuration x = random_config(rng, 2);
        Configuration y = step(theta, x);
        for (long long i = -30; i <= 30; ++i) CHECK(y.at(i) == x.at(i + 1));
    }
}

TEST_CASE("uniform dynamics commute with the shift") {
    // shifted input -> shifted output when theta is uniform
    auto rs = rules_all_four();
    std::mt19937 rng(9);
    for (int rule = 0; rule < rs->size(); ++rule) {
        Distribution theta = Distribution::uniform(rs, rule);
        Configuration x = random_config(rng, 2);
        EpWord shifted = x.word;
        shifted.anchor += 1;
        Configuration xs(Alphabet(2), shifted);
        Configuration y = step(theta, x), ys = step(theta, xs);
        for (long long i = -20; i <= 20; ++i) CHECK(ys.at(i + 1) == y.at(i));
    }
}

TEST_CASE("iterate composes step") {
    auto rs = rules_xor_id();
    Distribution theta = Distribution::uniform(rs, rs->index("xor"));
    Configuration x = Configuration::finite(Alphabet(2), {1, 0, 1}, -1);
    Configuration a = iterate(theta, x, 3);
    Configuration b = step(theta, step(theta, step(theta, x)));
    CHECK(a == b);
    CHECK(iterate(theta, x, 0) == x);
}

TEST_CASE("light cone: t steps spread at most r*t") {
    auto rs = rules_all_four();
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Distribution theta = random_dist(rng, rs);
        Configuration x = random_config(rng, 2);
        long long p = static_cast<long long>(rng() % 11) - 5;
        Configuration x2(Alphabet(2), x.word.with(p, 1 - x.at(p)));
        long long t = 1 + rng() % 4;
        Configuration y = iterate(theta, x, t), y2 = iterate(theta, x2, t);
        for (long long i = -40; i <= 40; ++i)
            if (i < p - t || i > p + t) CHECK(y.at(i) == y2.at(i));
    }
}

TEST_CASE("cantor distance") {
    Alphabet a2(2);
    Configuration z = Configuration::zero(a2);
    CHECK(cantor_distance(z, z).zero);
    CHECK(cantor_distance(z, z).value() == 0.0);

    Configuration w = Configuration::finite(a2, {1}, 3);
    auto d = cantor_distance(z, w);
    CHECK_FALSE(d.zero);
    CHECK(d.k == 3);
    CHECK(d.value() == doctest::Approx(0.125));

    Configuration v = Configuration::finite(a2, {1}, -2);
    CHECK(cantor_distance(z, v).k == 2);
    Configuration u = Configuration::finite(a2, {1}, 0);
    CHECK(cantor_distance(z, u).k == 0);
    CHECK(cantor_distance(z, u).value() == doctest::Approx(1.0));
}

TEST_CASE("partial charge increments by window sums") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Configuration x = random_config(rng, 3);
        for (long long n = 0; n < 12; ++n) {
            long long expect = partial_charge(x, n) + x.at(n + 1) + x.at(-n - 1);
            CHECK(partial_charge(x, n + 1) == expect);
        }
        CHECK(partial_charge(x, 0) == x.at(0));
    }
}

TEST_CASE("global charge of finite and infinite supports") {
    Alphabet a2(2);
    CHECK(global_charge(Configuration::zero(a2)) == 0);
    CHECK(global_charge(Configuration::finite(a2, {1, 1, 0, 1}, -7)) == 3);
    Configuration inf(a2, EpWord({1}, {}, {0}, 0));
    CHECK_FALSE(global_charge(inf).has_value());
}

TEST_CASE("charge ratio series for uniform shift is flat at 1") {
    auto rs = rules_id_shift();
    Distribution theta = Distribution::uniform(rs, rs->index("shift"));
    Configuration x(Alphabet(2), EpWord({0, 1}, {1, 1}, {1, 0}, 0));
    auto series = charge_ratio_series(theta, x, 40);
    REQUIRE(series.tail_min.has_value());
    CHECK(*series.tail_min == doctest::Approx(1.0).epsilon(0.15));
    CHECK(*series.tail_max == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("space_time rows match iterate") {
    auto rs = rules_xor_id();
    Distribution theta = Distribution::uniform(rs, rs->index("xor"));
    Configuration x = Configuration::finite(Alphabet(2), {1}, 0);
    auto d = space_time(theta, x, -4, 4, 3);
    REQUIRE(d.rows.size() == 4);
    CHECK(d.window_lo == -4);
    for (long long t = 0; t <= 3; ++t) {
        Configuration y = iterate(theta, x, t);
        for (long long i = -4; i <= 4; ++i)
            CHECK(d.rows[static_cast<size_t>(t)][static_cast<size_t>(i + 4)] == y.at(i));
    }
}

TEST_CASE("perturbation cone of uniform xor grows linearly") {
    auto rs = rules_xor_id();
    Distribution theta = Distribution::uniform(rs, rs->index("xor"));
    Configuration x = Configuration::zero(Alphabet(2));
    auto cone = perturbation_cone(theta, x, 0, 6);
    REQUIRE(cone.masks.size() == 7);
    for (long long t = 0; t <= 6; ++t) {
        // xor of a single 1 spreads to exactly the cells of Pascal mod 2
        CHECK(cone.masks[static_cast<size_t>(t)][static_cast<size_t>(t - cone.window_lo)]);
        CHECK(cone.masks[static_cast<size_t>(t)][static_cast<size_t>(-t - cone.window_lo)]);
        for (long long i = cone.window_lo; i <= cone.window_hi; ++i)
            if (i < -t || i > t)
                CHECK_FALSE(cone.masks[static_cast<size_t>(t)][static_cast<size_t>(i - cone.window_lo)]);
    }
}
