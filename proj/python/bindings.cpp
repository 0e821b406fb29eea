// Thin Python surface over the C++ core. Results are handed over as the same
// JSON documents the CLI prints, converted to plain dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threeterm/errors.hpp"
#include "threeterm/report.hpp"

namespace py = pybind11;
using namespace threeterm;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

RootSequence roots_of(const std::vector<int>& roots) { return RootSequence(roots); }

py::object pair(const std::vector<int>& roots, int height) {
    auto seq = roots_of(roots);
    auto outcome = build_matching(seq, height);
    if (auto* failure = std::get_if<MatchingFailure>(&outcome)) return to_python(to_json(*failure));
    const auto& cert = std::get<MatchingCertificate>(outcome);
    Json j = to_json(cert);
    auto check = verify_certificate(seq, cert);
    j["verified"] = check.valid;
    j["reasons"] = check.reasons;
    return to_python(j);
}

py::object translate(const std::string& beta, const std::string& u, const std::string& v) {
    ResidueBlockData block{parse_rational(beta), parse_rational(u), parse_rational(v)};
    return to_python(Json{{"representation", to_json(block)},
                          {"connection", to_json(residue_rep_to_connection(block))},
                          {"higgs", to_json(residue_rep_to_higgs(block))}});
}

py::object rank1(int a, const std::string& b_text) {
    Rational b = parse_rational(b_text);
    auto degrees = rank1_degrees(a, b);
    return to_python(Json{{"a", a},
                          {"b", to_string(b)},
                          {"jump", to_string(rank1_jump(a, b))},
                          {"unfiltered_degree", to_string(degrees.unfiltered)},
                          {"filtered_degree", to_string(degrees.filtered)}});
}

py::object run_sweep(int n_min, int n_max, int max_rise, int root_bound, int workers, bool timing) {
    SweepParams params{n_min, n_max, max_rise, root_bound, workers};
    SweepReport report;
    {
        py::gil_scoped_release release;
        report = sweep(params);
    }
    return to_python(to_json(report, timing));
}

py::object verify_metric(int grid, std::uint64_t seed) {
    MetricCheckOptions options;
    options.grid_size = grid;
    options.seed = seed;
    Json doc = Json::array();
    for (const auto& c : run_metric_checks(options)) doc.push_back(to_json(c));
    return to_python(doc);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Three-term inequality for root chains of Hodge bundles";

    static py::exception<HypothesisViolation> hypothesis(m, "HypothesisViolation", PyExc_ValueError);
    static py::exception<BranchError> branch(m, "BranchError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const HypothesisViolation& e) {
            py::set_error(hypothesis, e.what());
        } catch (const BranchError& e) {
            py::set_error(branch, e.what());
        }
    });

    m.def("check", [](const std::vector<int>& roots) { return to_python(check_report(roots_of(roots))); },
          py::arg("roots"));
    m.def("is_admissible", [](const std::vector<int>& roots) { return is_admissible(roots_of(roots)).admissible; },
          py::arg("roots"));
    m.def("is_stable", [](const std::vector<int>& roots) { return is_tail_stable(roots_of(roots)); },
          py::arg("roots"));
    m.def("three_term_holds",
          [](const std::vector<int>& roots) { return three_term_holds(multiplicities(roots_of(roots))).holds; },
          py::arg("roots"));
    m.def("pair", &pair, py::arg("roots"), py::arg("height"));
    m.def("translate", &translate, py::arg("beta"), py::arg("u"), py::arg("v"));
    m.def("rank1", &rank1, py::arg("a"), py::arg("b"));
    m.def("sweep", &run_sweep, py::arg("n_min") = 2, py::arg("n_max") = 5, py::arg("max_rise") = 8,
          py::arg("root_bound") = 10, py::arg("workers") = 1, py::arg("timing") = false);
    m.def("verify_metric", &verify_metric, py::arg("grid") = 20, py::arg("seed") = 0);
}
