#include <doctest.h>

#include "helpers.hpp"
#include "nuca/conservation.hpp"
#include "nuca/simulation.hpp"

using namespace nuca;
using namespace testutil;

TEST_CASE("forbidden windows for {id, shift}") {
    auto rs = rules_id_shift();
    int id = rs->index("id"), sh = rs->index("shift");
    auto fs = forbidden_nc_windows(rs);
    // a window leaks iff its two leftmost rules disagree (the identity is
    // independent of psi_2 here): 4 forbidden, 4 allowed
    CHECK(fs.windows.size() == 4);
    CHECK(fs.contains({id, sh, sh}));
    CHECK(fs.contains({sh, id, id}));
    CHECK(fs.contains({id, sh, id}));
    CHECK(fs.contains({sh, id, sh}));
    CHECK_FALSE(fs.contains({id, id, id}));
    CHECK_FALSE(fs.contains({sh, sh, sh}));
    CHECK_FALSE(fs.contains({sh, sh, id}));
    CHECK_FALSE(fs.contains({id, id, sh}));
    // independent confirmation that the alternating distribution leaks:
    // every even letter is counted twice, odd letters vanish
    Distribution alt(rs, EpWord({id, sh}, {}, {id, sh}, 0));
    CHECK_FALSE(charge_oracle(alt, 3).confirmed);
}

TEST_CASE("window lemma agrees with the charge oracle on {id, shift}") {
    auto rs = rules_id_shift();
    for (std::uint64_t k = 0; k < 8; ++k) {
        RuleWord psi;
        for (Letter a : index_word(k, 2, 3)) psi.push_back(a);
        // embed psi at [0,2] in a compatible background: extend both tails
        // with the window's outer rules (uniform tails never add new windows
        // beyond the uniform triples, which are always allowed here)
        Distribution theta(rs, EpWord({psi[0]}, psi, {psi[2]}, 0));
        bool lemma_ok = true;
        for (long long j = -3; j <= 6; ++j) {
            RuleWord w = theta.window(j - 2, j);
            if (!is_nc_window(*rs, w).conserving) lemma_ok = false;
        }
        auto oracle = charge_oracle(theta, 4);
        CHECK(lemma_ok == oracle.confirmed);
        CHECK(lemma_ok == is_distribution_nc(theta).conserving);
        if (!oracle.confirmed) {
            Configuration y = step(theta, *oracle.violating);
            CHECK(global_charge(*oracle.violating) == oracle.charge_before);
            CHECK(global_charge(y) == oracle.charge_after);
            CHECK(oracle.charge_before != oracle.charge_after);
        }
    }
}

TEST_CASE("violating input reported by is_nc_window breaks the identity") {
    auto rs = rules_all_four();
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        RuleWord psi;
        for (int i = 0; i < 3; ++i) psi.push_back(static_cast<int>(rng() % rs->size()));
        auto chk = is_nc_window(*rs, psi);
        if (chk.conserving) continue;
        REQUIRE(chk.violating_input.has_value());
        const Word& u = *chk.violating_input;
        // recompute the two sides of the identity directly
        auto f = [&](int i, const Word& w) {
            return static_cast<long long>(rs->rule(psi[static_cast<size_t>(i)]).apply(w, 2));
        };
        long long rhs = u[0];
        for (int i = 0; i <= 1; ++i) {
            Word hi, lo;
            for (int z = 0; z < 2 - i; ++z) hi.push_back(0);
            for (int j = 1; j <= i + 1; ++j) hi.push_back(u[static_cast<size_t>(j)]);
            for (int z = 0; z < 2 - i; ++z) lo.push_back(0);
            for (int j = 0; j <= i; ++j) lo.push_back(u[static_cast<size_t>(j)]);
            while (hi.size() < 3) hi.push_back(0);
            while (lo.size() < 3) lo.push_back(0);
            rhs += f(i + 1, hi) - f(i, lo);
        }
        CHECK(f(2, u) != rhs);
    }
}

TEST_CASE("uniform verdicts") {
    auto rs = rules_all_four();
    CHECK(is_distribution_nc(Distribution::uniform(rs, rs->index("shift"))).conserving);
    CHECK(is_distribution_nc(Distribution::uniform(rs, rs->index("id"))).conserving);
    auto rep = is_distribution_nc(Distribution::uniform(rs, rs->index("xor")));
    CHECK_FALSE(rep.conserving);
    REQUIRE(rep.window.has_value());
    CHECK_FALSE(is_nc_window(*rs, *rep.window).conserving);
    CHECK_FALSE(is_distribution_nc(Distribution::uniform(rs, rs->index("zero"))).conserving);
}

TEST_CASE("uniform xor loses a single 1 into two") {
    auto rs = rules_xor_id();
    Distribution theta = Distribution::uniform(rs, rs->index("xor"));
    auto oracle = charge_oracle(theta, 3);
    REQUIRE_FALSE(oracle.confirmed);
    Configuration one = Configuration::finite(Alphabet(2), {1}, 0);
    CHECK(global_charge(one) == 1);
    CHECK(global_charge(step(theta, one)) == 2);
}

TEST_CASE("seam distribution id|shift is not NC and the seam is located") {
    auto rs = rules_id_shift();
    Distribution theta(rs, EpWord({rs->index("id")}, {}, {rs->index("shift")}, 0));
    auto rep = is_distribution_nc(theta);
    REQUIRE_FALSE(rep.conserving);
    REQUIRE(rep.window_lo.has_value());
    // reported window straddles the seam at position 0
    CHECK(*rep.window_lo <= 0);
    CHECK(*rep.window_hi >= -1);
    CHECK(theta.window(*rep.window_lo, *rep.window_hi) == *rep.window);
    CHECK_FALSE(is_nc_window(*rs, *rep.window).conserving);
    // the charge oracle finds a leak too
    CHECK_FALSE(charge_oracle(theta, 4).confirmed);
}

TEST_CASE("NC verdict matches the charge oracle on random distributions") {
    auto rs = rules_id_shift();
    std::mt19937 rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        auto rw = [&](int len) {
            std::vector<int> v(static_cast<size_t>(len));
            for (auto& x : v) x = static_cast<int>(rng() % rs->size());
            return v;
        };
        Distribution theta(rs, EpWord(rw(1 + static_cast<int>(rng() % 2)),
                                      rw(static_cast<int>(rng() % 3)),
                                      rw(1 + static_cast<int>(rng() % 2)),
                                      static_cast<long long>(rng() % 3) - 1));
        CHECK(is_distribution_nc(theta).conserving == charge_oracle(theta, 5).confirmed);
    }
}

TEST_CASE("nc sft of {id, shift} is nonempty with the right vertices") {
    auto rs = rules_id_shift();
    auto sft = nc_sft(rs);
    CHECK(sft.num_vertices == 4);  // rule words of length 2
    CHECK_FALSE(sft.empty);
    // edge (ab) -> (bc) exists iff (a,b,c) is allowed
    auto fs = forbidden_nc_windows(rs);
    int count = 0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                bool allowed = !fs.contains({a, b, c});
                bool present = false;
                for (auto [u, v] : sft.edges)
                    if (u == a * 2 + b && v == b * 2 + c) present = true;
                CHECK(present == allowed);
                if (present) ++count;
            }
    CHECK(static_cast<size_t>(count) == sft.edges.size());
    CHECK(sft.to_dot().find("digraph") != std::string::npos);
}

TEST_CASE("nc sft emptiness: alphabet of only leaky rules") {
    auto rs = std::make_shared<RuleSet>(Alphabet(2),
                                        std::vector<LocalRule>{rule_xor(), rule_zero()});
    auto sft = nc_sft(rs);
    CHECK(sft.empty);
}

TEST_CASE("randomized charge oracle finds the xor leak") {
    auto rs = rules_xor_id();
    Distribution theta = Distribution::uniform(rs, rs->index("xor"));
    auto res = charge_oracle(theta, 6, 200, 1234);
    CHECK_FALSE(res.confirmed);
}
