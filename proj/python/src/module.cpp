// pybind11 bindings. Matrices travel as numpy arrays or nested lists;
// reports come back as plain dicts built from the JSON serializers.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpm/battery.hpp"
#include "lpm/cones.hpp"
#include "lpm/graph.hpp"
#include "lpm/inequalities.hpp"
#include "lpm/io.hpp"
#include "lpm/minorlift.hpp"
#include "lpm/permwalk.hpp"
#include "lpm/rayleigh.hpp"
#include "lpm/spectral.hpp"

#include <sstream>

namespace py = pybind11;
using lpm::io::json;

namespace {

py::object to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& x : j) out.append(to_py(x));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

lpm::SymMatrix as_matrix(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw lpm::DimensionError("expected a square 2-d array");
    const int n = static_cast<int>(a.shape(0));
    return lpm::SymMatrix(lpm::Matrix(n, std::vector<double>(a.data(), a.data() + static_cast<std::size_t>(n) * n)));
}

py::array_t<double> to_numpy(const lpm::SymMatrix& a) {
    py::array_t<double> out({a.n(), a.n()});
    std::copy(a.data().begin(), a.data().end(), out.mutable_data());
    return out;
}

// {(1, 3): 2.0, (): -1.0} with 1-based indices
lpm::MultiAffinePoly make_poly(int n, const py::dict& terms) {
    lpm::MultiAffinePoly::TermMap t;
    for (auto item : terms) {
        std::vector<int> idx;
        for (auto i : py::reinterpret_borrow<py::iterable>(item.first)) idx.push_back(i.cast<int>());
        const auto mask = lpm::SubsetMask::from_indices(n, idx);
        if (t.count(mask.bits())) throw lpm::DomainError("repeated subset");
        t[mask.bits()] = item.second.cast<double>();
    }
    return lpm::MultiAffinePoly(n, std::move(t));
}

py::dict poly_terms(const lpm::MultiAffinePoly& p) {
    py::dict out;
    for (const auto& [bits, c] : p.terms()) out[py::tuple(py::cast(lpm::SubsetMask(p.n(), bits).indices()))] = c;
    return out;
}

std::vector<int> one_based(const lpm::Permutation& p) {
    std::vector<int> out;
    for (int v : p) out.push_back(v + 1);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minor lifts of multiaffine polynomials: evaluation, cone tests and inequality checks";

    py::register_exception<lpm::Error>(m, "LpmError", PyExc_ValueError);

    py::class_<lpm::MultiAffinePoly>(m, "Poly")
        .def(py::init(&make_poly), py::arg("n"), py::arg("terms"),
             "Multiaffine polynomial in n variables; terms maps 1-based index tuples to coefficients")
        .def_property_readonly("n", &lpm::MultiAffinePoly::n)
        .def_property_readonly("degree", &lpm::MultiAffinePoly::degree)
        .def_property_readonly("terms", &poly_terms)
        .def("is_homogeneous", &lpm::MultiAffinePoly::is_homogeneous)
        .def("__call__",
             [](const lpm::MultiAffinePoly& p, const std::vector<double>& v) {
                 lpm::require_dim(static_cast<int>(v.size()) == p.n(), "point has the wrong length");
                 return p.evaluate(v);
             })
        .def("__add__", [](const lpm::MultiAffinePoly& a, const lpm::MultiAffinePoly& b) { return a + b; })
        .def("__sub__", [](const lpm::MultiAffinePoly& a, const lpm::MultiAffinePoly& b) { return a - b; })
        .def("__rmul__", [](const lpm::MultiAffinePoly& p, double s) { return s * p; })
        .def("__mul__", [](const lpm::MultiAffinePoly& p, double s) { return s * p; })
        .def("__eq__", [](const lpm::MultiAffinePoly& a, const lpm::MultiAffinePoly& b) { return a == b; })
        .def("__repr__", [](const lpm::MultiAffinePoly& p) { return "Poly(" + p.to_string() + ")"; });

    m.def("elementary", &lpm::elementary, py::arg("n"), py::arg("k"));
    m.def("dual", &lpm::dual);
    m.def("spanning_tree_poly", [](int m_vertices) { return lpm::spanning_tree_poly(lpm::Graph::complete(m_vertices)); },
          py::arg("vertices"), "Spanning-tree polynomial of the complete graph");
    m.def("spanning_tree_poly_edges",
          [](int vertices, std::vector<std::pair<int, int>> edges) {
              return lpm::spanning_tree_poly(lpm::Graph(vertices, std::move(edges)));
          },
          py::arg("vertices"), py::arg("edges"));

    m.def("minor_lift_eval", [](const lpm::MultiAffinePoly& p, py::array_t<double> a) {
        return lpm::minor_lift_eval(p, as_matrix(a));
    });
    m.def("restriction_value",
          [](const lpm::MultiAffinePoly& p, const std::vector<int>& t, py::array_t<double> a) {
              return lpm::restriction_value(p, lpm::SubsetMask::from_indices(p.n(), t), as_matrix(a));
          },
          py::arg("p"), py::arg("subset"), py::arg("a"));
    m.def("pencil_coeffs", [](const lpm::MultiAffinePoly& p, py::array_t<double> a) {
        return lpm::matrix_pencil_poly(p, as_matrix(a)).coeffs();
    }, "Ascending coefficients of t -> P(A - t I)");
    m.def("eigenvalues", [](py::array_t<double> a) { return lpm::eigenvalues_sym(as_matrix(a)); });
    m.def("real_roots",
          [](const std::vector<double>& coeffs) {
              const auto r = lpm::real_roots(lpm::UniPoly(coeffs));
              py::dict d;
              d["real_rooted"] = r.real_rooted;
              d["roots"] = r.roots;
              d["max_imag"] = r.max_imag;
              return d;
          },
          py::arg("coeffs"), "Roots of an ascending coefficient list");

    m.def("in_cone_vector",
          [](const lpm::MultiAffinePoly& p, const std::vector<double>& v, double tol) {
              return to_py(lpm::io::to_json(lpm::in_cone_vector(p, v, tol)));
          },
          py::arg("p"), py::arg("v"), py::arg("tol") = lpm::kConeTol);
    m.def("in_cone_matrix",
          [](const lpm::MultiAffinePoly& p, py::array_t<double> a, double tol) {
              return to_py(lpm::io::to_json(lpm::in_cone_matrix(p, as_matrix(a), tol)));
          },
          py::arg("p"), py::arg("a"), py::arg("tol") = lpm::kConeTol);
    m.def("is_stable",
          [](const lpm::MultiAffinePoly& p, int trials, std::uint64_t seed) {
              const auto r = lpm::is_stable_probabilistic(p, trials, seed);
              py::dict d;
              d["evidence_stable"] = r.evidence_stable;
              d["sign_test_rejected"] = r.sign_test_rejected;
              d["trials_run"] = r.trials_run;
              d["reason"] = r.reason;
              return d;
          },
          py::arg("p"), py::arg("trials"), py::arg("seed"));
    m.def("sample_in_cone_matrix",
          [](const lpm::MultiAffinePoly& p, double margin, std::uint64_t seed) {
              return to_numpy(lpm::sample_in_cone_matrix(p, margin, seed));
          },
          py::arg("p"), py::arg("margin"), py::arg("seed"));

    m.def("check_fischer_hadamard",
          [](const lpm::MultiAffinePoly& p, py::array_t<double> a, const std::vector<std::vector<int>>& blocks) {
              return to_py(lpm::io::to_json(
                  lpm::check_fischer_hadamard(p, as_matrix(a), lpm::Partition::from_one_based(p.n(), blocks))));
          },
          py::arg("p"), py::arg("a"), py::arg("blocks"), "blocks use 1-based indices");
    m.def("check_nlc",
          [](const lpm::MultiAffinePoly& p, py::array_t<double> a) {
              const auto r = lpm::check_nlc_battery(p, as_matrix(a));
              py::dict d;
              d["status"] = lpm::to_string(r.status);
              d["pa"] = r.pa;
              d["min_coeff"] = r.min_coeff;
              d["pairs"] = r.records.size();
              return d;
          },
          py::arg("p"), py::arg("a"));
    m.def("check_dual_identity",
          [](const lpm::MultiAffinePoly& p, py::array_t<double> a) {
              const auto r = lpm::check_dual_identity(p, as_matrix(a));
              py::dict d;
              d["lhs"] = r.lhs;
              d["rhs"] = r.rhs;
              d["rel_error"] = r.rel_error;
              d["pass"] = r.pass;
              return d;
          },
          py::arg("p"), py::arg("a"));

    m.def("spectral_containment",
          [](const lpm::MultiAffinePoly& p, py::array_t<double> a) {
              const auto r = lpm::spectral_containment_search(p, as_matrix(a));
              auto d = to_py(lpm::io::to_json(r)).cast<py::dict>();
              if (!r.permutation.empty()) d["permutation"] = one_based(r.permutation);
              return d;
          },
          py::arg("p"), py::arg("a"));
    m.def("derivation_matrix",
          [](py::array_t<double> x, int k, int d) {
              const auto dm = lpm::derivation_matrix(as_matrix(x), k, d);
              std::vector<std::vector<int>> labels;
              for (auto bits : dm.basis) labels.push_back(lpm::SubsetMask(dm.n, bits).indices());
              return py::make_tuple(to_numpy(dm.entries), labels);
          },
          py::arg("x"), py::arg("k"), py::arg("d"), "Returns (matrix, 1-based basis labels)");
    m.def("permutation_walk",
          [](const lpm::MultiAffinePoly& h, const std::vector<double>& v) {
              const auto w = lpm::permutation_walk(h, v);
              auto d = to_py(lpm::io::to_json(w)).cast<py::dict>();
              d["tau"] = one_based(w.tau);
              return d;
          },
          py::arg("h"), py::arg("v"), "tau is 1-based: entry i of v lands in slot tau[i-1]");
    m.def("verify_factorization", &lpm::verify_factorization, py::arg("n"));

    m.def("rayleigh_w", [] {
        const auto r = lpm::verify_w_identity();
        py::dict d;
        d["w"] = r.w.to_string();
        d["matches_closed_form"] = r.matches_closed_form;
        d["free_of_x1_x3"] = r.free_of_x1_x3;
        d["quarter_term_count"] = r.quarter_term_count;
        return d;
    });

    m.def("run_battery",
          [](const std::string& family, const std::string& check, int trials, std::uint64_t seed, int n_max) {
              lpm::BatteryConfig cfg;
              cfg.family = family;
              cfg.check = check;
              cfg.trials = trials;
              cfg.seed = seed;
              cfg.n_max = n_max;
              std::ostringstream out;
              const auto s = lpm::run_battery(cfg, out);
              py::dict d;
              d["samples"] = s.samples;
              d["records"] = s.records;
              d["violations"] = s.violations;
              d["preconditions_failed"] = s.preconditions_failed;
              d["min_slack"] = s.min_slack;
              d["lines"] = out.str();
              return d;
          },
          py::arg("family"), py::arg("check"), py::arg("trials"), py::arg("seed"), py::arg("n_max") = 5);
}
