#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fqpoints/error.hpp"
#include "fqpoints/field.hpp"
#include "fqpoints/footprint.hpp"
#include "fqpoints/groebner.hpp"
#include "fqpoints/projred.hpp"
#include "fqpoints/text.hpp"
#include "fqpoints/variety.hpp"

namespace py = pybind11;
using namespace fqp;

namespace {

Monomial to_monomial(const std::vector<std::uint64_t>& exps) { return Monomial::from_exponents(exps); }

std::vector<std::uint64_t> from_monomial(const Monomial& mu) {
  return std::vector<std::uint64_t>(mu.exponents().begin(), mu.exponents().end());
}

std::vector<Monomial> to_monomials(const std::vector<std::vector<std::uint64_t>>& list) {
  std::vector<Monomial> out;
  for (const auto& e : list) out.push_back(to_monomial(e));
  return out;
}

std::vector<std::vector<std::uint64_t>> from_monomials(const std::vector<Monomial>& list) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& mu : list) out.push_back(from_monomial(mu));
  return out;
}

MonomialOrder make_order(std::size_t num_vars, const std::string& family, std::vector<std::size_t> perm) {
  const OrderFamily f = parse_order_family(family);
  if (perm.empty()) return MonomialOrder::identity(f, num_vars);
  return MonomialOrder(f, std::move(perm));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite fields, projective reduction, Groebner bases and footprint point counts";

  static py::exception<Error> base(m, "FqpError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ContextMismatch>(m, "ContextMismatch", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<PositiveDimension>(m, "PositiveDimension", base.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def(py::init(&Field::make), py::arg("p"), py::arg("s") = 1)
      .def_static("with_modulus", &Field::with_modulus, py::arg("p"), py::arg("modulus"))
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("pow", &Field::pow)
      .def("format", &Field::format)
      .def("subfield_codes", &Field::subfield_codes)
      .def("__eq__", &Field::operator==)
      .def("__repr__", [](const Field& f) { return "Field(order=" + std::to_string(f.order()) + ")"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def_property_readonly("num_vars", &Polynomial::num_vars)
      .def_property_readonly("field", &Polynomial::field)
      .def("is_zero", &Polynomial::is_zero)
      .def("is_homogeneous", &Polynomial::is_homogeneous)
      .def("degree", &Polynomial::degree)
      .def("terms", [](const Polynomial& f) {
        std::vector<std::pair<std::vector<std::uint64_t>, Field::Code>> out;
        for (const auto& [mu, c] : f.terms()) out.emplace_back(from_monomial(mu), c);
        return out;
      })
      .def("evaluate", [](const Polynomial& f, const std::vector<Field::Code>& pt) { return f.evaluate(pt); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const Polynomial& f) { return render_polynomial(f); })
      .def("__repr__", [](const Polynomial& f) { return "Polynomial('" + render_polynomial(f) + "')"; });

  m.def("parse", &parse_polynomial, py::arg("text"), py::arg("field"), py::arg("m"),
        "Parse a polynomial in x0..xm over the field.");
  m.def("render", [](const Polynomial& f, const std::string& order, std::vector<std::size_t> perm) {
        return render_polynomial(f, make_order(f.num_vars(), order, std::move(perm)));
      }, py::arg("f"), py::arg("order") = "grevlex", py::arg("perm") = std::vector<std::size_t>{});

  m.def("reduce_monomial", [](const std::vector<std::uint64_t>& e, std::uint64_t q) {
        return from_monomial(reduce_monomial(to_monomial(e), q));
      }, py::arg("exponents"), py::arg("q"));
  m.def("reduce", &reduce_polynomial, py::arg("f"), py::arg("q"));
  m.def("is_reduced", py::overload_cast<const Polynomial&, std::uint64_t>(&is_reduced), py::arg("f"), py::arg("q"));
  m.def("weight", [](const std::vector<std::uint64_t>& e, std::uint64_t q) { return weight(to_monomial(e), q); },
        py::arg("exponents"), py::arg("q"));
  m.def("fermat_generators", &fermat_generators, py::arg("q"), py::arg("m"), py::arg("field"));
  m.def("projective_space_size", &projective_space_size, py::arg("j"), py::arg("q"));

  m.def("groebner", [](const std::vector<Polynomial>& gens, std::size_t num_vars, const std::string& order,
                       std::vector<std::size_t> perm) {
        return buchberger(gens, make_order(num_vars, order, std::move(perm))).generators;
      }, py::arg("gens"), py::arg("num_vars"), py::arg("order") = "grevlex",
      py::arg("perm") = std::vector<std::size_t>{});
  m.def("certify_universal_fermat",
        [](std::uint64_t q, std::size_t mm, const Field& field, const std::vector<std::string>& families,
           std::size_t max_perm_m) {
          std::vector<OrderFamily> fams;
          for (const auto& f : families) fams.push_back(parse_order_family(f));
          const auto cert = certify_universal_fermat(q, mm, field, fams, max_perm_m);
          py::dict d;
          d["certified"] = cert.certified;
          d["all_permutations"] = cert.all_permutations;
          d["cases"] = cert.cases.size();
          d["scope"] = cert.scope;
          return d;
        },
        py::arg("q"), py::arg("m"), py::arg("field"),
        py::arg("families") = std::vector<std::string>{"lex", "grlex", "grevlex"}, py::arg("max_perm_m") = 2);

  m.def("hilbert_by_linear_algebra", &hilbert_by_linear_algebra, py::arg("gens"), py::arg("num_vars"), py::arg("e"));
  m.def("standard_monomial_count", [](const std::vector<std::vector<std::uint64_t>>& gens, std::size_t num_vars,
                                      std::uint32_t e) {
        return standard_monomial_count(MonomialIdeal(num_vars, to_monomials(gens)), e);
      }, py::arg("generators"), py::arg("num_vars"), py::arg("e"));
  m.def("hilbert_polynomial_constant", [](const std::vector<std::vector<std::uint64_t>>& gens, std::size_t num_vars) {
        return hilbert_polynomial_constant(MonomialIdeal(num_vars, to_monomials(gens)));
      }, py::arg("generators"), py::arg("num_vars"));
  m.def("projective_footprint", [](const std::vector<std::vector<std::uint64_t>>& lms, std::uint64_t q,
                                   std::size_t mm) { return projective_fq_footprint_count(to_monomials(lms), q, mm); },
        py::arg("lms"), py::arg("q"), py::arg("m"));
  m.def("affine_footprint", [](const std::vector<std::vector<std::uint64_t>>& lms, std::uint64_t q,
                               std::size_t num_vars) { return affine_fq_footprint_count(to_monomials(lms), q, num_vars); },
        py::arg("lms"), py::arg("q"), py::arg("num_vars"));
  m.def("shadow_count", [](const std::vector<std::uint64_t>& nu, std::uint64_t q, std::size_t mm) {
        return shadow_count_closed_form(to_monomial(nu), q, mm);
      }, py::arg("nu"), py::arg("q"), py::arg("m"));
  m.def("cone_to_projective_bound", &cone_to_projective_bound, py::arg("affine_count"), py::arg("q"));

  m.def("enumerate_projective_points", [](const Field& field, std::uint64_t q, std::size_t mm) {
        std::vector<std::vector<Field::Code>> out;
        for (auto& pt : enumerate_projective_points(field, q, mm)) out.push_back(std::move(pt.coords));
        return out;
      }, py::arg("field"), py::arg("q"), py::arg("m"));
  m.def("count_points", &count_points_bruteforce, py::arg("gens"), py::arg("field"), py::arg("q"), py::arg("m"));
  m.def("count_by_footprint", [](const std::vector<Polynomial>& gens, const Field& field, std::uint64_t q,
                                 std::size_t mm, const std::string& order) {
        const auto r = count_points_by_footprint(gens, field, q, mm, make_order(mm + 1, order, {}));
        py::dict d;
        d["exact_count"] = r.exact_count;
        d["footprint_constant"] = r.footprint_constant;
        d["lm_bound"] = r.lm_bound;
        d["lm_set"] = from_monomials(r.lm_set);
        d["serre_bound"] = r.serre_bound;
        d["exact_matches_footprint"] = r.exact_matches_footprint;
        d["exact_within_lm_bound"] = r.exact_within_lm_bound;
        return d;
      }, py::arg("gens"), py::arg("field"), py::arg("q"), py::arg("m"), py::arg("order") = "grevlex");
  m.def("normalize_system", [](const std::vector<Polynomial>& gens, std::uint64_t q, std::size_t mm,
                               const std::string& order) {
        return normalize_system(gens, q, mm, make_order(mm + 1, order, {}));
      }, py::arg("gens"), py::arg("q"), py::arg("m"), py::arg("order") = "grevlex");
  m.def("serre_bound", &serre_bound, py::arg("d"), py::arg("m"), py::arg("q"));
  m.def("extremal_hypersurface", &extremal_hypersurface, py::arg("d"), py::arg("m"), py::arg("field"), py::arg("q"));
}
