#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "nuca/io.hpp"

using namespace nuca;
using namespace testutil;

namespace {

const char* kTwoRules =
    "# binary xor / identity\n"
    "alphabet 2\n"
    "radius 1\n"
    "rule xor linear 1 0 1\n"
    "rule id linear 0 1 0\n";

}  // namespace

TEST_CASE("rule file parsing: linear and table rules") {
    auto rs = parse_rule_set(kTwoRules);
    CHECK(rs->alphabet.size == 2);
    CHECK(rs->radius == 1);
    CHECK(rs->size() == 2);
    CHECK(rs->rule(rs->index("xor")).linear_coeffs == Word{1, 0, 1});

    auto rs2 = parse_rule_set(
        "alphabet 2\nradius 1\nrule f table 0 1 0 1 0 1 0 1\n");
    CHECK(rs2->rule(0).table == std::vector<Letter>{0, 1, 0, 1, 0, 1, 0, 1});
    // that table is u -> u_2, i.e. linear
    CHECK(rs2->rule(0).is_linear());
}

TEST_CASE("rule file parsing: per-rule radius sections") {
    auto rs = parse_rule_set(
        "alphabet 2\n"
        "radius 0\n"
        "rule neg table 1 0\n"
        "radius 1\n"
        "rule id linear 0 1 0\n");
    CHECK(rs->radius == 1);
    CHECK(rs->source_radii == std::vector<int>{0, 1});
    // padded neg still negates the center
    CHECK(rs->rule(rs->index("neg")).apply({0, 1, 0}, 2) == 0);
    CHECK(rs->rule(rs->index("neg")).apply({1, 0, 1}, 2) == 1);
}

TEST_CASE("rule file errors carry line numbers") {
    auto expect_fail = [](const std::string& text, const char* fragment) {
        try {
            parse_rule_set(text);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };
    expect_fail("alphabet 2\nradius 1\nrule f table 0 1\n", "line 3");
    expect_fail("alphabet 1\n", "line 1");
    expect_fail("radius 1\nrule f linear 0 1 0\n", "alphabet");
    expect_fail("alphabet 2\nradius 1\nrule f linear 0 2 0\n", "line 3");
    expect_fail("alphabet 2\nradius 1\nbogus\n", "line 3");
    expect_fail("alphabet 2\nradius 1\nrule f linear 0 1 0\nrule f linear 0 1 0\n", "f");
}

TEST_CASE("distribution literals") {
    auto rs = parse_rule_set(kTwoRules);
    Distribution u = parse_distribution(rs, "uniform=xor");
    CHECK(u.rule_at(-5) == rs->index("xor"));
    CHECK(u.rule_at(5) == rs->index("xor"));

    Distribution d = parse_distribution(rs, "left=(id) mid=(xor xor) right=(id) anchor=3");
    CHECK(d.rule_at(2) == rs->index("id"));
    CHECK(d.rule_at(3) == rs->index("xor"));
    CHECK(d.rule_at(4) == rs->index("xor"));
    CHECK(d.rule_at(5) == rs->index("id"));

    Distribution e = parse_distribution(rs, "left=(id) mid=() right=(xor)");
    CHECK(e.rule_at(-1) == rs->index("id"));
    CHECK(e.rule_at(0) == rs->index("xor"));

    CHECK_THROWS_AS(parse_distribution(rs, "uniform=nope"), std::exception);
    CHECK_THROWS_AS(parse_distribution(rs, "left=() right=(id)"), ParseError);
    CHECK_THROWS_AS(parse_distribution(rs, "gibberish"), ParseError);
}

TEST_CASE("configuration literals") {
    Alphabet a2(2);
    Configuration z = parse_configuration(a2, "zero");
    CHECK(z == Configuration::zero(a2));

    Configuration s = parse_configuration(a2, "single:1@-3");
    CHECK(s.at(-3) == 1);
    CHECK(s.at(-4) == 0);
    CHECK(s.at(0) == 0);

    Configuration w = parse_configuration(a2, "left=(0) mid=(1 0 1) right=(1) anchor=-1");
    CHECK(w.at(-2) == 0);
    CHECK(w.at(-1) == 1);
    CHECK(w.at(0) == 0);
    CHECK(w.at(1) == 1);
    CHECK(w.at(2) == 1);

    CHECK_THROWS_AS(parse_configuration(a2, "single:5@0"), ParseError);
    CHECK_THROWS_AS(parse_configuration(a2, "what"), ParseError);
}

TEST_CASE("surjectivity report JSON shape") {
    auto rs = parse_rule_set(
        "alphabet 2\nradius 1\nrule id linear 0 1 0\nrule zero table 0 0 0 0 0 0 0 0\n");
    SurjectivityAnalyzer an(rs);
    auto good = report_json(*rs, an.analyze(parse_distribution(rs, "uniform=id")));
    CHECK(good.at("schema") == 1);
    CHECK(good.at("verdict") == "surjective");
    CHECK(good.at("witness_window").is_null());

    auto bad = report_json(*rs, an.analyze(parse_distribution(rs, "uniform=zero")));
    CHECK(bad.at("verdict") == "not-surjective");
    CHECK(bad.at("witness_window").is_array());
    CHECK(bad.at("witness_pattern").is_array());
    CHECK(bad.at("unreachable_word").is_array());
}

TEST_CASE("injectivity and conservation report JSON shape") {
    auto rs = parse_rule_set(kTwoRules);
    auto rep = report_json(is_distribution_injective(parse_distribution(rs, "uniform=xor")));
    CHECK(rep.at("schema") == 1);
    CHECK(rep.at("verdict") == "not-injective");
    CHECK(rep.at("witness").contains("x"));
    CHECK(rep.at("witness").contains("y"));
    CHECK(rep.at("witness").at("x").contains("anchor"));

    auto nc = report_json(*rs, is_distribution_nc(parse_distribution(rs, "uniform=xor")));
    CHECK(nc.at("verdict") == "not-number-conserving");
    CHECK(nc.at("witness_window").is_array());
    CHECK(nc.at("window_pattern").is_array());
    CHECK(nc.at("violating_input").is_array());
}

TEST_CASE("dynamics report JSON shape") {
    auto rs = parse_rule_set(kTwoRules);
    Distribution theta = parse_distribution(rs, "uniform=id");
    auto rep = report_json(*rs, classify(theta, 8));
    CHECK(rep.at("schema") == 1);
    CHECK(rep.at("verdict") == "equicontinuous");
    CHECK(rep.at("bounded") == false);
    CHECK(rep.at("certificates").is_array());
    CHECK_FALSE(rep.at("certificates").empty());
    CHECK(rep.at("certificates")[0].contains("side"));

    auto rep2 = report_json(*rs, classify(parse_distribution(rs, "uniform=xor"), 8));
    CHECK(rep2.at("verdict") == "sensitive-bounded-evidence");
    CHECK(rep2.at("bounded") == true);
    CHECK(rep2.at("n_max") == 8);
}

TEST_CASE("ep_word_json round structure") {
    auto j = ep_word_json(EpWord({1}, {0, 1}, {0}, -2));
    CHECK(j.at("left") == nlohmann::json::array({1}));
    CHECK(j.at("mid") == nlohmann::json::array({0, 1}));
    CHECK(j.at("right") == nlohmann::json::array({0}));
    CHECK(j.at("anchor") == -2);
}

TEST_CASE("pgm export") {
    SpaceTimeDiagram d;
    d.window_lo = -1;
    d.window_hi = 1;
    d.rows = {{0, 1, 0}, {1, 1, 1}};
    std::string pgm = space_time_pgm(d, 2);
    std::istringstream in(pgm);
    std::string magic;
    int w, h, maxval;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P2");
    CHECK(w == 3);
    CHECK(h == 2);
    CHECK(maxval == 1);
    std::vector<int> px(6);
    for (auto& p : px) in >> p;
    // letter 0 -> white (maxval), letter 1 -> black (0)
    CHECK(px == std::vector<int>{1, 0, 1, 0, 0, 0});
}

TEST_CASE("csv and text exports") {
    SpaceTimeDiagram d;
    d.window_lo = 0;
    d.window_hi = 2;
    d.rows = {{0, 1, 2}};
    CHECK(space_time_csv(d).find("0,1,2") != std::string::npos);
    CHECK_FALSE(space_time_text(d).empty());
}

TEST_CASE("load_rule_set reports missing files") {
    CHECK_THROWS_AS(load_rule_set("/no/such/file.rules"), ParseError);
}
