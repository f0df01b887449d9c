#include "rspin/cycles.hpp"
#include "rspin/flatness.hpp"
#include "rspin/gamma.hpp"
#include "rspin/json_io.hpp"
#include "rspin/potential.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rspin;

namespace {

std::string potential_string(int r, const std::string& format) {
    Poly w = build_deformed_potential(r).poly;
    if (format == "latex") return w.to_latex();
    if (format == "json") return poly_to_json(w).dump();
    return w.to_text();
}

py::list invariants_list(int r) {
    py::list out;
    for (const auto& [key, value] : enumerate_nonzero(r)) {
        py::dict item;
        item["twists"] = key.twists.twists();
        item["k"] = key.k;
        item["value"] = value.to_string();
        out.append(std::move(item));
    }
    return out;
}

py::dict verify_dict(int r, int cap) {
    if (cap < 0) cap = r;
    PrimitivityReport rep = verify_flat_coordinates(r, cap);
    py::dict out;
    out["r"] = rep.r;
    out["degree_cap"] = rep.cap;
    out["primitive"] = rep.primitive;
    out["flat"] = rep.flat;
    py::list coords;
    for (const auto& v : rep.per_basis)
        coords.append("t" + std::to_string(v.d) + " -> " + v.phi1.to_text());
    out["flat_coordinates"] = std::move(coords);
    return out;
}

py::list flat_map_list(int r, int cap) {
    if (cap < 0) cap = r;
    py::list out;
    auto maps = versal_flat_map(r, cap);
    for (size_t d = 0; d < maps.size(); ++d)
        out.append("t" + std::to_string(d) + " = " + maps[d].to_text());
    return out;
}

bool mirror_match(int r, int cap) {
    if (cap < 0) cap = r;
    return flat_potential_from_versal(r, cap) ==
           build_deformed_potential(r).poly.truncate_deformation(cap);
}

std::string invariant_string(int r, const std::vector<int>& twists, int k) {
    return open_invariant(r, twists, k).to_string();
}

py::dict lambda_scan_dict(int r, int max_l) {
    py::dict out;
    int checked = 0;
    bool numeric_zero = true;
    for (const auto& [key, value] : enumerate_nonzero(r)) {
        if (key.twists.size() < 2) continue;
        ++checked;
        if (!lambda_obstruction(r, key.twists).is_zero() ||
            !lambda_obstruction_via_partitions(r, key.twists).is_zero())
            numeric_zero = false;
    }
    bool symbolic_zero = true, recursion = true;
    for (int l = 2; l <= max_l; ++l) {
        if (!lambda_obstruction_symbolic(r, l).is_zero()) symbolic_zero = false;
        if (!contribution_recursion_holds(r, l)) recursion = false;
    }
    out["numeric_checked"] = checked;
    out["numeric_all_zero"] = numeric_zero;
    out["symbolic_all_zero"] = symbolic_zero;
    out["recursion_holds"] = recursion;
    return out;
}

py::object reduce_tuple(int r, long long e) {
    ReducedForm red = reduce_monomial(r, e);
    if (red.zero) return py::none();
    return py::make_tuple(red.scalar.to_string(), red.hbar_power, red.basis[0]);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact r-spin disk potential engine";

    m.def("potential", &potential_string, py::arg("r"), py::arg("format") = "text",
          "Deformed superpotential as text, latex or json.");
    m.def("invariants", &invariants_list, py::arg("r"),
          "All nonzero disk invariants as dicts with exact string values.");
    m.def("open_invariant", &invariant_string, py::arg("r"), py::arg("twists"), py::arg("k"),
          "Single closed-form invariant as an exact 'p/q' string.");
    m.def("verify", &verify_dict, py::arg("r"), py::arg("degree_cap") = -1,
          "Primitivity/flatness verdict with the flat coordinate map.");
    m.def("versal_flat_map", &flat_map_list, py::arg("r"), py::arg("degree_cap") = -1,
          "Flat coordinates of the versal family, one string per t_d.");
    m.def("mirror_match", &mirror_match, py::arg("r"), py::arg("degree_cap") = -1,
          "True when the inverted versal map reproduces the potential.");
    m.def("lambda_scan", &lambda_scan_dict, py::arg("r"), py::arg("max_l") = 5,
          "Vanishing scan of the obstruction sums.");
    m.def("reduce_monomial", &reduce_tuple, py::arg("r"), py::arg("exponent"),
          "None if the monomial dies, else (scalar, hbar_power, basis).");
    m.def("ray_integral", [](int r, int j, int k, Complex hbar) {
              return ray_integral(r, j, k, hbar);
          }, py::arg("r"), py::arg("j"), py::arg("k"), py::arg("hbar"),
          "Quadrature value of the k-th monomial over the j-th descent ray.");
    m.def("ray_integral_closed", [](int r, int j, int k, Complex hbar) {
              return ray_integral_closed(r, j, k, hbar);
          }, py::arg("r"), py::arg("j"), py::arg("k"), py::arg("hbar"),
          "Closed form of the same ray integral.");
    m.def("dual_basis_error", &dual_basis_error, py::arg("r"), py::arg("hbar"),
          "Defect of the closed-form dual basis against the quadrature pairing.");
    m.def("product_dual_basis_error",
          [](int r1, int r2, Complex hbar) {
              return product_dual_basis_error(FermatSignature({r1, r2}), hbar);
          },
          py::arg("r1"), py::arg("r2"), py::arg("hbar"),
          "Tensor dual-basis defect for a two-variable product singularity.");
    m.def("gamma", &gamma_positive, py::arg("x"), "Gamma function for x > 0.");

    py::register_exception<QuadratureError>(m, "QuadratureError");

    m.attr("END_TO_END_TOL") = kEndToEndTol;
    m.attr("LINEAR_ALGEBRA_TOL") = kLinearAlgebraTol;
}
