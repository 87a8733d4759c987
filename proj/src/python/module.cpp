#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "kalu/engine.hpp"

namespace py = pybind11;

namespace {

using kalu::CondVector;
using kalu::SchubertDatum;

py::object py_integer(const kalu::Integer& n) {
    const std::string digits = n.str();
    PyObject* v = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!v) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(v);
}

py::list poly_to_py(const kalu::IntPoly& p) {
    py::list out;
    for (const auto& [e, c] : p.terms()) out.append(py::make_tuple(e, py_integer(c)));
    return out;
}

SchubertDatum datum_of(int k, int l, const std::vector<int>& I, const std::vector<int>& J) {
    const SchubertDatum d{k, l, I, J};
    kalu::require_valid(d);
    return d;
}

CondVector base_or(const std::optional<CondVector>& p, const SchubertDatum& d) {
    return p ? *p : CondVector(static_cast<size_t>(d.arity()), 0);
}

py::list validate_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J) {
    py::list out;
    for (const kalu::Violation& v : kalu::validate({k, l, I, J}))
        out.append(py::make_tuple(v.name, v.detail));
    return out;
}

py::dict essential_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J,
                      const std::optional<CondVector>& p) {
    const SchubertDatum d = datum_of(k, l, I, J);
    const CondVector base = base_or(p, d);
    const kalu::EssentialPair pair = kalu::essentialize(d, base);
    const kalu::Partition lam = kalu::lambda_of(d, base);
    py::dict out;
    out["positions"] = pair.positions;
    out["I"] = pair.i_bar;
    out["J"] = pair.j_bar;
    out["p"] = pair.p_bar;
    out["targets"] = pair.targets();
    out["lambda"] = lam;
    out["dim"] = kalu::dim_variety(d, base);
    out["codim"] = kalu::area(lam);
    return out;
}

py::list kl_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J,
               const CondVector& p, const CondVector& q) {
    return poly_to_py(kalu::kalu(datum_of(k, l, I, J), p, q));
}

py::dict smallness_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J,
                      const std::optional<CondVector>& p) {
    const SchubertDatum d = datum_of(k, l, I, J);
    const kalu::SmallnessReport r = kalu::smallness(d, base_or(p, d));
    py::dict out;
    out["pi_small"] = r.pi_small;
    out["xi_small"] = r.xi_small;
    out["pi_failing"] = r.pi_failing;
    out["xi_failing"] = r.xi_failing;
    return out;
}

py::dict decompose_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J) {
    const kalu::DecompositionReport r = kalu::decompose(datum_of(k, l, I, J));
    py::list entries;
    for (const kalu::DecompositionEntry& e : r.entries) {
        py::dict row;
        row["q"] = e.q;
        row["g"] = poly_to_py(e.g);
        py::list mults;
        for (const auto& [shift, count] : e.multiplicities)
            mults.append(py::make_tuple(shift, py_integer(count)));
        row["multiplicities"] = mults;
        entries.append(row);
    }
    py::dict out;
    out["dim"] = r.dim;
    out["entries"] = entries;
    return out;
}

py::list scan_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J) {
    py::list out;
    for (const kalu::ScanRow& row : kalu::scan_relevant(datum_of(k, l, I, J))) {
        py::dict r;
        r["q"] = row.q;
        r["m"] = row.m;
        r["dim_f"] = row.dim_f;
        r["relevant"] = row.relevant;
        r["g"] = poly_to_py(row.g);
        r["silent"] = row.silent;
        out.append(r);
    }
    return out;
}

py::dict verify_py(int k, int l, const std::vector<int>& I, const std::vector<int>& J,
                   const std::string& mode) {
    const kalu::VerifyReport r = kalu::verify_identities(datum_of(k, l, I, J), mode);
    py::dict out;
    out["mode"] = r.mode;
    out["passed"] = r.passed;
    out["checked"] = r.checked;
    out["failures"] = r.failures;
    return out;
}

py::list gauss_py(int k, int l) { return poly_to_py(kalu::gauss_poincare(k, l)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact intersection-cohomology and multiplicity polynomials for "
              "Schubert varieties in Grassmannians";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const kalu::validation_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("validate", &validate_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"),
          "Weak-condition violations of a datum as (name, detail) pairs; empty when valid.");
    m.def("essential", &essential_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"),
          py::arg("p") = py::none(),
          "Essential pair, partition, dimension and codimension of the variety named by "
          "offsets p (default: the base variety of the datum).");
    m.def("kl", &kl_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"), py::arg("p"),
          py::arg("q"),
          "Intersection-cohomology polynomial b of the pair (p, q) as "
          "[(exponent, coefficient), ...].");
    m.def("smallness", &smallness_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"),
          py::arg("p") = py::none(),
          "Smallness of the flag-type and product-type resolutions of the variety of p.");
    m.def("decompose", &decompose_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"),
          "Decomposition of the pushforward under the base variety's flag-type resolution.");
    m.def("scan_relevant", &scan_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"),
          "Every admissible q != 0 with codimension, fiber dimension, relevance, multiplicity "
          "polynomial and silence.");
    m.def("verify", &verify_py, py::arg("k"), py::arg("l"), py::arg("I"), py::arg("J"),
          py::arg("mode"),
          "Cross-check one identity family (pi-oracle, xi-oracle, reconstruction, zelevinsky) "
          "on the datum's base table.");
    m.def("gauss_poincare", &gauss_py, py::arg("k"), py::arg("l"),
          "Poincare polynomial of the Grassmannian of k-planes in l-space.");
}
