// Python bindings for the main operations: rule-set loading, simulation,
// and the four analyzers. Reports cross the boundary as JSON strings; the
// nuca package decodes them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nuca/conservation.hpp"
#include "nuca/core.hpp"
#include "nuca/debruijn.hpp"
#include "nuca/injectivity.hpp"
#include "nuca/io.hpp"
#include "nuca/linear_dynamics.hpp"
#include "nuca/simulation.hpp"
#include "nuca/surjectivity.hpp"

namespace py = pybind11;
using namespace nuca;

PYBIND11_MODULE(_nuca, m) {
    m.doc() = "structural analysis of one-dimensional non-uniform cellular automata";

    py::class_<RuleSet, std::shared_ptr<RuleSet>>(m, "RuleSet")
        .def_property_readonly("alphabet_size",
                               [](const RuleSet& rs) { return rs.alphabet.size; })
        .def_property_readonly("radius", [](const RuleSet& rs) { return rs.radius; })
        .def_property_readonly("rule_names", [](const RuleSet& rs) {
            std::vector<std::string> names;
            for (const auto& f : rs.rules) names.push_back(f.name);
            return names;
        })
        .def("index", &RuleSet::index);

    py::class_<Distribution>(m, "Distribution")
        .def("rule_at", &Distribution::rule_at)
        .def("window", &Distribution::window);

    py::class_<Configuration>(m, "Configuration")
        .def("at", &Configuration::at)
        .def("slice", [](const Configuration& c, long long i, long long j) {
            return c.word.slice(i, j);
        })
        .def("__eq__", [](const Configuration& a, const Configuration& b) { return a == b; });

    m.def("load_rule_set", &load_rule_set, py::arg("path"));
    m.def("parse_rule_set", &parse_rule_set, py::arg("text"));
    m.def("parse_distribution", &parse_distribution, py::arg("rule_set"), py::arg("literal"));
    m.def("parse_configuration",
          [](const RuleSetPtr& rs, const std::string& literal) {
              return parse_configuration(rs->alphabet, literal);
          },
          py::arg("rule_set"), py::arg("literal"));

    m.def("step", &step);
    m.def("iterate", &iterate);
    m.def("partial_charge", &partial_charge);
    m.def("cantor_distance",
          [](const Configuration& x, const Configuration& y) {
              return cantor_distance(x, y).value();
          });
    m.def("space_time_rows", [](const Distribution& t, const Configuration& x, long long a,
                                long long b, long long steps) {
        return space_time(t, x, a, b, steps).rows;
    });

    m.def("debruijn_dot",
          [](const RuleSetPtr& rs) { return to_dot(build_debruijn(rs)); });

    m.def("surjectivity_report_json", [](const RuleSetPtr& rs, const Distribution& theta) {
        SurjectivityAnalyzer an(rs);
        return report_json(*rs, an.analyze(theta)).dump();
    });
    m.def("is_pattern_surjective", [](const RuleSetPtr& rs, const RuleWord& psi) {
        return SurjectivityAnalyzer(rs).is_pattern_surjective(psi);
    });
    m.def("injectivity_report_json", [](const RuleSetPtr& rs, const Distribution& theta) {
        (void)rs;
        return report_json(is_distribution_injective(theta)).dump();
    });
    m.def("conservation_report_json", [](const RuleSetPtr& rs, const Distribution& theta) {
        return report_json(*rs, is_distribution_nc(theta)).dump();
    });
    m.def("dynamics_report_json",
          [](const RuleSetPtr& rs, const Distribution& theta, int n_max) {
              int bound = n_max > 0 ? n_max : default_wall_search_bound(theta);
              return report_json(*rs, classify(theta, bound)).dump();
          },
          py::arg("rule_set"), py::arg("dist"), py::arg("n_max") = -1);
}
