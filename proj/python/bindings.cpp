#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "syzgap/han.hpp"
#include "syzgap/hilbert_kunz.hpp"
#include "syzgap/io.hpp"
#include "syzgap/operators.hpp"
#include "syzgap/syzygy.hpp"

namespace py = pybind11;
using namespace syzgap;

namespace {

struct PyField {
  FieldPtr f;
};

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.numerator(), r.denominator());
}

Rational to_rational(const py::handle& h) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  py::object fr = Fraction(h);
  return {fr.attr("numerator").cast<std::int64_t>(), fr.attr("denominator").cast<std::int64_t>()};
}

std::vector<HomogPoly> polys(const PyField& f, const std::vector<std::string>& texts) {
  std::vector<HomogPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, f.f));
  return out;
}

RationalPoint point(const std::vector<std::int64_t>& a, std::uint64_t q) { return {a, q}; }

py::dict report(const VerificationReport& r) {
  py::list v;
  for (const auto& x : r.violations)
    v.append(py::dict(py::arg("point") = x.point.str(), py::arg("expected") = fraction(x.expected.value()),
                      py::arg("actual") = fraction(x.actual.value())));
  return py::dict(py::arg("theorem") = r.theorem, py::arg("q") = r.q, py::arg("checked") = r.checked,
                  py::arg("violations") = v, py::arg("passed") = r.passed());
}

py::dict grid_dict(const FractalGrid& g) {
  return py::dict(py::arg("q") = g.q, py::arg("axes") = g.axes(), py::arg("side") = g.side(),
                  py::arg("slice") = g.slice.str(), py::arg("values") = g.values);
}

}  // namespace

PYBIND11_MODULE(_syzgap, m) {
  m.doc() = "Syzygy gap fractals over finite fields";

  py::register_exception<Error>(m, "SyzgapError", PyExc_ValueError);

  py::class_<PyField>(m, "Field")
      .def(py::init([](std::uint64_t p, unsigned e, const std::string& modulus) {
             if (modulus.empty())
               return PyField{e == 1 ? FieldSpec::prime(p) : FieldSpec::make(p, e, FieldSpec::default_modulus(p, e))};
             return PyField{FieldSpec::parse(p, e, modulus)};
           }),
           py::arg("p"), py::arg("e") = 1, py::arg("modulus") = "")
      .def_property_readonly("p", [](const PyField& f) { return f.f->characteristic(); })
      .def_property_readonly("order", [](const PyField& f) { return f.f->order(); });

  py::class_<Cell>(m, "Cell")
      .def(py::init([](const PyField& f, const std::string& F, const std::string& G, const std::string& H,
                       const std::vector<std::string>& forms) {
             return Cell::make(parse_poly(F, f.f), parse_poly(G, f.f), parse_poly(H, f.f), polys(f, forms));
           }),
           py::arg("field"), py::arg("F"), py::arg("G"), py::arg("H") = "1", py::arg("forms"))
      .def_property_readonly("F", [](const Cell& c) { return format_poly(c.F); })
      .def_property_readonly("G", [](const Cell& c) { return format_poly(c.G); })
      .def_property_readonly("H", [](const Cell& c) { return format_poly(c.H); })
      .def_property_readonly("n", &Cell::n)
      .def("__repr__", [](const Cell& c) {
        return "<Cell " + format_poly(c.F) + "; " + format_poly(c.G) + "; " + format_poly(c.H) + ">";
      });

  m.def("syzygy_gap", [](const PyField& f, const std::string& F, const std::string& G, const std::string& H) {
    auto r = syzygy_gap(parse_poly(F, f.f), parse_poly(G, f.f), parse_poly(H, f.f));
    return py::make_tuple(r.delta, r.m);
  });
  m.def("colength", [](const PyField& f, const std::vector<std::string>& gens) { return colength(polys(f, gens)); });

  m.def("delta", [](const Cell& c, const std::vector<std::int64_t>& a, std::uint64_t q) {
    return fraction(delta_at(c, point(a, q)).value());
  }, py::arg("cell"), py::arg("a"), py::arg("q"));
  m.def("grid", [](const Cell& c, std::uint64_t q, const std::string& slice, unsigned workers) {
    return grid_dict(grid_eval(c, q, slice.empty() ? Slice::identity(c.n()) : Slice::parse(slice, c.n()), workers));
  }, py::arg("cell"), py::arg("q"), py::arg("slice") = "", py::arg("workers") = 0);
  m.def("local_maxima", [](const Cell& c, std::uint64_t q) {
    py::list out;
    for (const auto& [t, v] : local_maxima(grid_eval(c, q, Slice::identity(c.n()))))
      out.append(py::make_tuple(t.a, t.q, fraction(v.value())));
    return out;
  });
  m.def("verify", [](const Cell& c, const std::string& which, std::uint64_t q) {
    if (which == "A") return report(verify_theorem_A(c, q));
    if (which == "C") return report(verify_theorem_C(c, q));
    throw Error("verify takes 'A' or 'C'; use verify_cone for B");
  });
  m.def("verify_cone", [](const Cell& c, const std::vector<std::int64_t>& u, std::uint64_t q, std::uint64_t q2) {
    return report(verify_theorem_B(c, point(u, q), q2));
  });

  m.def("han_delta_star", [](const py::sequence& t, std::uint64_t p) {
    if (t.size() != 3) throw Error("Han's function takes three coordinates");
    return fraction(han_delta_star({to_rational(t[0]), to_rational(t[1]), to_rational(t[2])}, p));
  });

  m.def("reflect", &reflect, py::arg("cell"), py::arg("i"));
  m.def("magnify", &magnify, py::arg("cell"), py::arg("q"), py::arg("b"));
  m.def("colon_reduce", &colon_reduce);
  m.def("canonicalize", [](const Cell& c) {
    auto r = canonicalize(c);
    return py::make_tuple(r.cell, r.linear);
  });
  m.def("delta_equivalent", &delta_equivalent);

  m.def("phi_C", [](const Cell& c, const std::vector<std::int64_t>& a, std::uint64_t q) {
    return fraction(phi_C(c, point(a, q)));
  });
  m.def("newbound_lhs", [](const Cell& c, const std::vector<std::int64_t>& a, std::uint64_t q, int axis) {
    return newbound_lhs(c, point(a, q), axis);
  }, py::arg("cell"), py::arg("a"), py::arg("q"), py::arg("axis") = 0);
  m.def("surface_colength", [](const PyField& f, const std::string& U, const std::string& V,
                               const std::vector<std::string>& forms, const std::vector<int>& c, int mm,
                               const std::string& hlin, std::uint64_t q) {
    SurfaceInstance s{parse_poly(U, f.f), parse_poly(V, f.f), polys(f, forms), c, mm, parse_poly(hlin, f.f)};
    return surface_colength(s, q);
  });
  m.def("mu_formula", [](std::int64_t d, std::int64_t r, std::int64_t mm, const py::handle& ds) {
    return fraction(mu_formula(d, r, mm, to_rational(ds)));
  });
}
