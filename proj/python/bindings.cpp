#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "littlewood/families.hpp"
#include "littlewood/limits.hpp"
#include "littlewood/number_core.hpp"
#include "littlewood/partitions.hpp"
#include "littlewood/rational.hpp"

namespace py = pybind11;
using namespace littlewood;

namespace {

py::object to_py(const Integer& x) {
    const std::string s = x.get_str();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
    static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    return (*fraction)(to_py(Integer(x.get_num())), to_py(Integer(x.get_den())));
}

// Accepts int, Fraction, or any object whose str() is "a", "a/b" or a decimal.
Rational rational_from(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

py::list int_list(std::span<const Integer> xs) {
    py::list out;
    for (const auto& x : xs) out.append(to_py(x));
    return out;
}

CoefVector coef_from(const py::iterable& xs) {
    CoefVector f;
    for (auto item : xs) f.coeffs.emplace_back(py::str(item).cast<std::string>());
    return f;
}

LimitFamily limit_family(const std::string& name) {
    if (name == "fekete") return LimitFamily::fekete;
    if (name == "galois") return LimitFamily::galois;
    throw py::value_error("family must be 'fekete' or 'galois'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact L^2q norm limits for Fekete, shifted Fekete and Galois polynomials";

    m.def("tangent_numbers", [](unsigned kmax) { return int_list(tangent_numbers(kmax).values()); }, py::arg("kmax"));
    m.def("carlitz_numbers", [](unsigned kmax) { return int_list(carlitz_numbers(kmax).values()); }, py::arg("kmax"));
    m.def("eulerian", [](unsigned n, const py::object& x) { return to_py(eulerian_general(n, rational_from(x))); },
          py::arg("n"), py::arg("x"));
    m.def("composition_count", [](unsigned N, unsigned n, long mm) { return to_py(composition_count(N, n, mm)); },
          py::arg("N"), py::arg("n"), py::arg("m"));

    m.def("limit", [](const std::string& family, unsigned q) {
        return to_py(limit_family(family) == LimitFamily::fekete ? fekete_limit_recursive(q) : galois_limit_recursive(q));
    }, py::arg("family"), py::arg("q"));
    m.def("limit_direct", [](const std::string& family, unsigned q) {
        return to_py(limit_family(family) == LimitFamily::fekete ? fekete_limit_direct(q) : galois_limit_direct(q));
    }, py::arg("family"), py::arg("q"));
    m.def("triangle_row", [](const std::string& family, unsigned k) {
        const auto row = limit_family(family) == LimitFamily::fekete ? fekete_triangle_row(k) : galois_triangle_row(k);
        return int_list(row.values);
    }, py::arg("family"), py::arg("k"));

    m.def("phi", [](unsigned q, const py::object& R) { return to_py(shifted_fekete_limit(q, rational_from(R))); },
          py::arg("q"), py::arg("R"));
    m.def("phi_pieces", [](unsigned q) {
        const auto f = phi_piecewise(q);
        py::list out;
        const auto& b = f.breakpoints();
        for (std::size_t i = 0; i < f.pieces().size(); ++i) {
            py::list coeffs;
            for (const auto& c : f.pieces()[i].coeffs()) coeffs.append(to_py(c));
            out.append(py::make_tuple(to_py(b[i]), to_py(b[i + 1]), coeffs));
        }
        return out;
    }, py::arg("q"), "List of (lo, hi, ascending coefficients) on [0, 1/2].");
    m.def("phi_min", [](unsigned q, const py::object& eps) {
        const auto r = phi_min(q, rational_from(eps));
        py::dict d;
        d["argmin"] = py::make_tuple(to_py(r.argmin.lo), to_py(r.argmin.hi));
        d["min"] = py::make_tuple(to_py(r.value.lo), to_py(r.value.hi));
        d["alt_flag"] = r.alternative;
        return d;
    }, py::arg("q"), py::arg("eps") = "1/1048576");

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("legendre", &legendre, py::arg("a"), py::arg("p"));
    m.def("fekete", [](std::uint64_t p) { return int_list(fekete(p).coeffs); }, py::arg("p"));
    m.def("shifted_fekete", [](std::uint64_t p, std::int64_t r) { return int_list(shifted_fekete(p, r).coeffs); },
          py::arg("p"), py::arg("r"));
    m.def("galois", [](unsigned k, std::uint32_t beta) { return int_list(galois(k, beta).coeffs); }, py::arg("k"),
          py::arg("beta") = 1);
    m.def("norm_2q", [](const py::iterable& coeffs, unsigned q) {
        const CoefVector f = coef_from(coeffs);
        Integer r;
        {
            py::gil_scoped_release release;
            r = norm_2q_exact(f, q);
        }
        return to_py(r);
    }, py::arg("coeffs"), py::arg("q"), "Exact ||f||_2q^2q.");
    m.def("norm_2q_quadrature", [](const py::iterable& coeffs, unsigned q) {
        return norm_2q_quadrature(coef_from(coeffs), q);
    }, py::arg("coeffs"), py::arg("q"));

    m.def("convergence_table", [](const std::string& family, unsigned q, const std::vector<std::uint64_t>& sizes,
                                  const py::object& shift, const py::object& shift_ratio) {
        const auto fam = parse_family(family);
        if (!fam) throw py::value_error("family must be 'fekete', 'shifted' or 'galois'");
        ShiftRule rule;
        if (!shift.is_none()) rule.fixed = shift.cast<std::int64_t>();
        if (!shift_ratio.is_none()) rule.ratio = rational_from(shift_ratio);
        std::vector<ConvergenceRow> rows;
        {
            py::gil_scoped_release release;
            rows = convergence_table(*fam, q, sizes, rule);
        }
        py::list out;
        for (const auto& r : rows) {
            py::dict d;
            d["n"] = r.n;
            d["size"] = r.size_param;
            d["shift"] = r.shift;
            d["exact_norm"] = to_py(r.exact_norm);
            d["ratio"] = to_py(r.ratio);
            d["limit"] = to_py(r.limit);
            d["rel_err"] = r.rel_err;
            out.append(d);
        }
        return out;
    }, py::arg("family"), py::arg("q"), py::arg("sizes"), py::arg("shift") = py::none(),
       py::arg("shift_ratio") = py::none());

    m.def("even_block_profile_count", [](unsigned q) { return even_block_profiles(q).size(); }, py::arg("q"));
}
