#include "nuca/io.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace nuca {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

RuleSetPtr parse_rule_set(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::optional<int> alphabet;
    int radius = -1;
    std::vector<LocalRule> rules;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(strip_comment(line));
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "alphabet") {
            int s;
            if (!(ls >> s) || s < 2) fail(line_no, "alphabet needs an integer size >= 2");
            alphabet = s;
        } else if (kw == "radius") {
            if (!(ls >> radius) || radius < 0) fail(line_no, "radius needs an integer >= 0");
        } else if (kw == "rule") {
            if (!alphabet) fail(line_no, "rule before alphabet declaration");
            if (radius < 0) fail(line_no, "rule before radius declaration");
            std::string name, kind;
            if (!(ls >> name >> kind)) fail(line_no, "expected: rule <name> table|linear <ints>");
            std::vector<int> nums;
            int v;
            while (ls >> v) nums.push_back(v);
            if (!ls.eof()) fail(line_no, "non-integer in rule body");
            try {
                if (kind == "table") {
                    rules.push_back(make_table_rule(name, *alphabet, radius, nums));
                } else if (kind == "linear") {
                    if (nums.size() != static_cast<size_t>(2 * radius + 1))
                        fail(line_no, "linear rule needs 2r+1 coefficients");
                    for (int c : nums)
                        if (c < 0 || c >= *alphabet) fail(line_no, "coefficient out of alphabet");
                    rules.push_back(make_linear_rule(name, *alphabet, nums));
                } else {
                    fail(line_no, "unknown rule kind '" + kind + "'");
                }
            } catch (const std::invalid_argument& e) {
                fail(line_no, e.what());
            }
        } else {
            fail(line_no, "unknown keyword '" + kw + "'");
        }
    }
    if (!alphabet) throw ParseError("missing alphabet declaration");
    if (rules.empty()) throw ParseError("rule file declares no rules");
    try {
        return std::make_shared<RuleSet>(Alphabet(*alphabet), std::move(rules));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

RuleSetPtr load_rule_set(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open rule file '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_rule_set(buf.str());
}

namespace {

// parse `key=(tok tok ...)` and `key=value` fields of a literal
std::map<std::string, std::vector<std::string>> parse_fields(const std::string& literal) {
    std::map<std::string, std::vector<std::string>> fields;
    size_t i = 0;
    auto skip_ws = [&] { while (i < literal.size() && std::isspace(static_cast<unsigned char>(literal[i]))) ++i; };
    while (skip_ws(), i < literal.size()) {
        size_t eq = literal.find('=', i);
        if (eq == std::string::npos) throw ParseError("expected key=value in literal");
        std::string key = literal.substr(i, eq - i);
        i = eq + 1;
        std::vector<std::string> toks;
        if (i < literal.size() && literal[i] == '(') {
            size_t close = literal.find(')', i);
            if (close == std::string::npos) throw ParseError("unbalanced '(' in literal");
            std::istringstream ls(literal.substr(i + 1, close - i - 1));
            std::string t;
            while (ls >> t) toks.push_back(t);
            i = close + 1;
        } else {
            size_t end = i;
            while (end < literal.size() && !std::isspace(static_cast<unsigned char>(literal[end]))) ++end;
            toks.push_back(literal.substr(i, end - i));
            i = end;
        }
        if (fields.count(key)) throw ParseError("duplicate field '" + key + "' in literal");
        fields[key] = std::move(toks);
    }
    return fields;
}

EpWord ep_from_fields(const std::map<std::string, std::vector<std::string>>& fields,
                      const std::function<int(const std::string&)>& to_symbol) {
    auto get = [&](const std::string& key) -> std::vector<int> {
        auto it = fields.find(key);
        if (it == fields.end()) throw ParseError("literal is missing '" + key + "=(...)'");
        std::vector<int> out;
        for (const auto& t : it->second) out.push_back(to_symbol(t));
        return out;
    };
    std::vector<int> left = get("left");
    std::vector<int> right = get("right");
    std::vector<int> mid;
    if (fields.count("mid"))
        for (const auto& t : fields.at("mid")) mid.push_back(to_symbol(t));
    long long anchor = 0;
    if (fields.count("anchor")) {
        try {
            anchor = std::stoll(fields.at("anchor").at(0));
        } catch (const std::exception&) {
            throw ParseError("anchor must be an integer");
        }
    }
    if (left.empty() || right.empty()) throw ParseError("periods must be nonempty");
    for (const auto& [key, _] : fields)
        if (key != "left" && key != "mid" && key != "right" && key != "anchor")
            throw ParseError("unknown field '" + key + "' in literal");
    return EpWord(std::move(left), std::move(mid), std::move(right), anchor);
}

}  // namespace

Distribution parse_distribution(const RuleSetPtr& rs, const std::string& literal) {
    auto fields = parse_fields(literal);
    if (fields.count("uniform")) {
        if (fields.size() != 1) throw ParseError("uniform= cannot be combined with other fields");
        return Distribution::uniform(rs, rs->index(fields.at("uniform").at(0)));
    }
    auto to_rule = [&](const std::string& name) { return rs->index(name); };
    return Distribution(rs, ep_from_fields(fields, to_rule));
}

Configuration parse_configuration(const Alphabet& a, const std::string& literal) {
    if (literal == "zero") return Configuration::zero(a);
    if (literal.rfind("single:", 0) == 0) {
        auto at = literal.find('@');
        if (at == std::string::npos) throw ParseError("expected single:<letter>@<pos>");
        int letter;
        long long pos;
        try {
            letter = std::stoi(literal.substr(7, at - 7));
            pos = std::stoll(literal.substr(at + 1));
        } catch (const std::exception&) {
            throw ParseError("expected single:<letter>@<pos>");
        }
        if (!a.contains(letter)) throw ParseError("letter out of alphabet in 'single:'");
        return Configuration::finite(a, {letter}, pos);
    }
    auto to_letter = [&](const std::string& t) {
        int v;
        try {
            v = std::stoi(t);
        } catch (const std::exception&) {
            throw ParseError("letters must be integers");
        }
        if (!a.contains(v)) throw ParseError("letter out of alphabet");
        return v;
    };
    return Configuration(a, ep_from_fields(parse_fields(literal), to_letter));
}

nlohmann::json ep_word_json(const EpWord& w) {
    return {{"left", w.left}, {"mid", w.mid}, {"right", w.right}, {"anchor", w.anchor}};
}

nlohmann::json rule_word_json(const RuleSet& rs, const RuleWord& psi) {
    std::vector<std::string> names;
    for (int i : psi) names.push_back(rs.rule(i).name);
    return names;
}

nlohmann::json report_json(const RuleSet& rs, const SurjectivityReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["verdict"] = rep.surjective ? "surjective" : "not-surjective";
    j["witness_window"] = nullptr;
    j["witness_pattern"] = nullptr;
    j["unreachable_word"] = nullptr;
    if (!rep.surjective) {
        j["witness_window"] = {*rep.witness_lo, *rep.witness_hi};
        j["witness_pattern"] = rule_word_json(rs, *rep.witness_pattern);
        j["unreachable_word"] = *rep.unreachable_word;
    }
    return j;
}

nlohmann::json report_json(const InjectivityReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["verdict"] = rep.injective ? "injective" : "not-injective";
    j["witness"] = nullptr;
    if (!rep.injective)
        j["witness"] = {{"x", ep_word_json(rep.witness_x->word)},
                        {"y", ep_word_json(rep.witness_y->word)}};
    return j;
}

nlohmann::json report_json(const RuleSet& rs, const NcReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["verdict"] = rep.conserving ? "number-conserving" : "not-number-conserving";
    j["witness_window"] = nullptr;
    j["window_pattern"] = nullptr;
    j["violating_input"] = nullptr;
    if (!rep.conserving) {
        j["witness_window"] = {*rep.window_lo, *rep.window_hi};
        j["window_pattern"] = rule_word_json(rs, *rep.window);
        j["violating_input"] = *rep.violating_input;
    }
    return j;
}

nlohmann::json report_json(const RuleSet& rs, const DynamicsReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["verdict"] = rep.verdict == DynamicsVerdict::Equicontinuous
                       ? "equicontinuous"
                       : "sensitive-bounded-evidence";
    j["bounded"] = rep.verdict == DynamicsVerdict::SensitiveBoundedEvidence;
    j["n_max"] = rep.n_max;
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : rep.certificates) {
        j["certificates"].push_back({{"side", c.side == WallSide::Left ? "left" : "right"},
                                     {"phase", c.phase},
                                     {"length", c.length},
                                     {"pattern", rule_word_json(rs, c.pattern)}});
    }
    if (rep.empirical) j["empirical"] = empirical_json(*rep.empirical);
    return j;
}

nlohmann::json charge_series_json(const ChargeSeries& series) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : series.rows) {
        nlohmann::json row = {{"n", r.n}, {"charge_x", r.charge_x}, {"charge_hx", r.charge_hx}};
        row["ratio"] = r.ratio ? nlohmann::json(*r.ratio) : nlohmann::json(nullptr);
        rows.push_back(row);
    }
    nlohmann::json j = {{"rows", rows}};
    j["tail_min"] = series.tail_min ? nlohmann::json(*series.tail_min) : nlohmann::json(nullptr);
    j["tail_max"] = series.tail_max ? nlohmann::json(*series.tail_max) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json empirical_json(const EmpiricalSummary& sum) {
    return {{"any_escape", sum.any_escape},
            {"max_distance", sum.max_distance},
            {"trials", sum.trials},
            {"steps", sum.steps},
            {"window", sum.window}};
}

std::string space_time_pgm(const SpaceTimeDiagram& d, int alphabet_size) {
    int maxval = alphabet_size - 1;
    std::ostringstream os;
    os << "P2\n" << (d.window_hi - d.window_lo + 1) << " " << d.rows.size() << "\n"
       << maxval << "\n";
    for (const auto& row : d.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << (maxval - row[i]);
        os << "\n";
    }
    return os.str();
}

std::string space_time_csv(const SpaceTimeDiagram& d) {
    std::ostringstream os;
    for (const auto& row : d.rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

std::string space_time_text(const SpaceTimeDiagram& d) {
    std::ostringstream os;
    for (const auto& row : d.rows) {
        for (Letter a : row) os << (a == 0 ? '.' : static_cast<char>('0' + a));
        os << "\n";
    }
    return os.str();
}

}  // namespace nuca
