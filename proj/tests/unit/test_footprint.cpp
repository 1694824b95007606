#include <doctest.h>

#include <random>

#include "fqpoints/error.hpp"
#include "fqpoints/footprint.hpp"
#include "fqpoints/groebner.hpp"
#include "fqpoints/projred.hpp"
#include "fqpoints/text.hpp"
#include "oracles.hpp"

using namespace fqp;

namespace {

Monomial M(std::initializer_list<std::uint64_t> e) { return Monomial::from_exponents(std::vector<std::uint64_t>(e)); }

std::vector<Polynomial> example_jq(std::uint64_t q, const Field& f) {
  const std::string s = std::to_string(q);
  std::vector<Polynomial> gens{parse_polynomial("x0^" + s + "*x1 - x0*x1^" + s + " + x0^" + std::to_string(q + 1), f, 1)};
  for (auto& phi : fermat_generators(q, 1, f)) gens.push_back(phi);
  return gens;
}

std::uint64_t table_value(std::uint64_t q, std::uint64_t e) {
  if (e <= q) return e + 1;
  if (e <= 2 * q - 1) return 2 * q + 1 - e;
  return 1;
}

MonomialIdeal fermat_lt(std::uint64_t q, std::size_t m) {
  std::vector<Monomial> g;
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) {
      Monomial mu(m + 1);
      mu.set(i, q);
      mu.set(j, 1);
      g.push_back(mu);
    }
  return MonomialIdeal(m + 1, g);
}

}  // namespace

TEST_CASE("hilbert by linear algebra") {
  const Field f3 = Field::make(3);
  for (std::uint32_t e = 0; e < 6; ++e) CHECK(hilbert_by_linear_algebra({}, 3, e) == binomial(e + 2, 2));
  const std::vector<Polynomial> x0{Polynomial::variable(f3, 2, 0)};
  for (std::uint32_t e = 0; e < 6; ++e) CHECK(hilbert_by_linear_algebra(x0, 2, e) == 1);
  CHECK(hilbert_by_linear_algebra(example_jq(3, f3), 2, 4) == 3);
  const std::vector<Polynomial> bad{parse_polynomial("x0 + 1", f3, 1)};
  CHECK_THROWS_AS(hilbert_by_linear_algebra(bad, 2, 2), InvalidArgument);
}

TEST_CASE("worked example Hilbert table") {
  for (std::uint64_t q : {2, 3, 5}) {
    const Field f = oracle::field_for(q);
    const auto gens = example_jq(q, f);
    const auto lt = leading_term_ideal(buchberger(gens, MonomialOrder::grevlex(2)));
    for (std::uint32_t e = 0; e <= 4 * q; ++e) {
      CHECK(hilbert_by_linear_algebra(gens, 2, e) == table_value(q, e));
      CHECK(standard_monomial_count(lt, e) == table_value(q, e));
    }
    CHECK(hilbert_polynomial_constant(lt) == 1);
    CHECK(hilbert_stabilization_degree(lt) == 2 * q);
  }
}

TEST_CASE("standard monomial counts") {
  for (std::uint32_t e = 0; e < 8; ++e) CHECK(standard_monomial_count(MonomialIdeal(3), e) == binomial(e + 2, 2));
  for (std::uint64_t q : {2, 3, 4})
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::uint32_t e = static_cast<std::uint32_t>(m * (q - 1) + 1); e < m * (q - 1) + 4; ++e)
        CHECK(standard_monomial_count(fermat_lt(q, m), e) == projective_space_size(static_cast<std::int64_t>(m), q));
  CHECK(hilbert_polynomial_constant(fermat_lt(2, 2)) == 7);
  CHECK(hilbert_polynomial_constant(MonomialIdeal(3, {M({1, 0, 0}), M({0, 1, 0}), M({0, 0, 1})})) == 0);
  CHECK_THROWS_AS(hilbert_polynomial_constant(MonomialIdeal(3, {M({1, 0, 0})})), PositiveDimension);
}

TEST_CASE("standard monomial count matches enumeration, including past the cap") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<Monomial> gens;
    const std::size_t r = t < 50 ? 1 + rng() % 6 : 25;
    for (std::size_t k = 0; k < r; ++k) {
      Monomial mu(n);
      for (std::size_t i = 0; i < n; ++i) mu.set(i, rng() % 5);
      if (mu.is_one()) mu.set(0, 1);
      gens.push_back(mu);
    }
    const MonomialIdeal I(n, gens);
    for (std::uint32_t e = 0; e < 10; ++e) CHECK(standard_monomial_count(I, e) == oracle::standard_monomials(I.generators(), n, e));
  }
}

TEST_CASE("projective footprint count") {
  const std::vector<Monomial> lms{M({4, 1, 0}), M({2, 3, 0})};
  CHECK(projective_fq_footprint_count(lms, 5, 2) == 20);
  CHECK(projective_fq_footprint_count({}, 3, 2) == 13);
  for (std::uint64_t q : {2, 3, 5})
    for (std::size_t m = 1; m <= 3; ++m) {
      Monomial x0(m + 1);
      x0.set(0, 1);
      CHECK(projective_fq_footprint_count(std::vector<Monomial>{x0}, q, m) ==
            projective_space_size(static_cast<std::int64_t>(m) - 1, q));
    }
  const std::uint32_t e = footprint_stabilization_degree(lms, 5, 2);
  CHECK(e == 3 * 4 + 5 + 1);
  CHECK(projective_fq_footprint_at(lms, 5, 2, e + 5) == 20);
  CHECK(projective_fq_footprint_at(lms, 5, 2, e) == oracle::projective_footprint(lms, 5, 2, e));
}

TEST_CASE("footprint monotonicity and stabilization") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const std::uint64_t q = std::vector<std::uint64_t>{2, 3, 4}[t % 3];
    const std::size_t m = 1 + rng() % 2;
    std::vector<Monomial> lms;
    for (int k = 0; k < 2; ++k) {
      Monomial mu(m + 1);
      for (std::size_t i = 0; i <= m; ++i) mu.set(i, rng() % 4);
      if (mu.is_one()) mu.set(m, 1);
      lms.push_back(mu);
    }
    const std::uint64_t before = projective_fq_footprint_count(lms, q, m);
    const std::uint32_t e = footprint_stabilization_degree(lms, q, m);
    CHECK(projective_fq_footprint_at(lms, q, m, e + static_cast<std::uint32_t>(q)) == before);
    CHECK(before == oracle::projective_footprint(lms, q, m, e));
    Monomial extra(m + 1);
    for (std::size_t i = 0; i <= m; ++i) extra.set(i, rng() % 4);
    if (extra.is_one()) extra.set(0, 1);
    lms.push_back(extra);
    CHECK(projective_fq_footprint_count(lms, q, m) <= before);
  }
}

TEST_CASE("shadow closed form") {
  CHECK(shadow_count_closed_form(M({4, 1, 0}), 5, 2) == 5);
  CHECK(shadow_count_closed_form(M({0, 0, 1}), 5, 2) == 25);
  CHECK_THROWS_AS(shadow_count_closed_form(M({0, 0, 0}), 5, 2), InvalidArgument);
  CHECK(shadow_count_closed_form(M({1, 0, 0}), 3, 2) == 9);
  CHECK_THROWS_AS(shadow_count_closed_form(M({3, 1}), 3, 1), InvalidArgument);
  CHECK_THROWS_AS(shadow_count_closed_form(M({0, 0}), 3, 1), InvalidArgument);
  // Clamped extension on the top exponent, checked by enumeration.
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t b : {q, q + 1, 2 * q}) {
      const Monomial nu = M({1, b, 0});
      const std::uint32_t e = footprint_stabilization_degree(std::vector<Monomial>{nu}, q, 2);
      CHECK(shadow_count_closed_form(nu, q, 2) == oracle::shadow(nu, q, 2, e));
    }
  }
}

TEST_CASE("affine footprint and cone bound") {
  const std::vector<Monomial> lms{M({4, 1, 0}), M({2, 3, 0})};
  CHECK(affine_fq_footprint_count(lms, 5, 3) == 85);
  CHECK(cone_to_projective_bound(85, 5) == 21);
  CHECK(affine_fq_footprint_count({}, 3, 3) == 27);
  CHECK(affine_fq_footprint_count(std::vector<Monomial>{Monomial(2)}, 3, 2) == 0);
  CHECK(cone_to_projective_bound(1, 7) == 0);
  CHECK(cone_to_projective_bound(projective_space_size(3, 4) * 3 + 1, 4) == projective_space_size(3, 4));
  CHECK_THROWS_AS(cone_to_projective_bound(0, 3), InvalidArgument);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    std::vector<Monomial> g;
    for (int k = 0; k < 3; ++k) {
      Monomial mu(3);
      for (std::size_t i = 0; i < 3; ++i) mu.set(i, rng() % 5);
      g.push_back(mu);
    }
    CHECK(affine_fq_footprint_count(g, 4, 3) == oracle::affine_footprint(g, 4, 3));
  }
}

TEST_CASE("Macaulay agreement on random ideals") {
  std::mt19937_64 rng(77);
  for (std::uint64_t q : {2, 3}) {
    const Field f = Field::make(static_cast<std::uint32_t>(q));
    for (int t = 0; t < 10; ++t) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k)
        gens.push_back(oracle::random_homogeneous(f, q, 3, 1 + static_cast<std::uint32_t>(rng() % 3), 3, rng));
      const auto report = hilbert_report(gens, MonomialOrder::grevlex(3), 8);
      for (const auto& row : report.table) CHECK(*row.h_value == row.delta_count);
    }
  }
}

TEST_CASE("footprint identity: reduced GB leading monomials vs LT(J + Gamma)") {
  std::mt19937_64 rng(55);
  for (std::uint64_t q : {2, 3}) {
    const Field f = Field::make(static_cast<std::uint32_t>(q));
    const std::size_t m = 2;
    const auto ord = MonomialOrder::grevlex(m + 1);
    for (int t = 0; t < 12; ++t) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k)
        gens.push_back(oracle::random_homogeneous(f, q, m + 1, 1 + static_cast<std::uint32_t>(rng() % 3), 3, rng));
      std::vector<Polynomial> jq = gens;
      for (auto& phi : fermat_generators(q, m, f)) jq.push_back(phi);
      const auto gbq = buchberger(jq, ord);
      const auto lt = leading_term_ideal(gbq);
      // Elements of GB(J_q) outside Gamma_q, after reduction, span the same footprint.
      std::vector<Monomial> lms;
      for (const auto& g : gbq.generators) {
        const auto gbar = reduce_polynomial(g, q);
        if (!gbar.is_zero()) lms.push_back(gbar.leading_monomial(ord));
      }
      const std::uint32_t e = footprint_stabilization_degree(lms, q, m) + 4;
      CHECK(projective_fq_footprint_at(lms, q, m, e) == standard_monomial_count(lt, e));
      // The leading monomials of the plain GB only bound it from above.
      std::vector<Monomial> plain;
      for (const auto& g : buchberger(gens, ord).generators) {
        const auto gbar = reduce_polynomial(g, q);
        if (!gbar.is_zero()) plain.push_back(gbar.leading_monomial(ord));
      }
      CHECK(projective_fq_footprint_count(plain, q, m) >= hilbert_polynomial_constant(lt));
    }
  }
}

TEST_CASE("reports") {
  const Field f3 = Field::make(3);
  const auto rep = hilbert_report(example_jq(3, f3), MonomialOrder::grevlex(2), 8);
  CHECK(rep.method == FootprintMethod::GbExact);
  CHECK(rep.stabilized_constant == 1u);
  CHECK(rep.stabilization_degree == 6u);
  CHECK(rep.certificate.rfind("plateau", 0) == 0);
  for (const auto& row : rep.table)
    if (row.e >= *rep.stabilization_degree) CHECK(row.delta_count == 1);

  const std::vector<Monomial> lms{M({4, 1, 0}), M({2, 3, 0})};
  const auto fr = projective_footprint_report(lms, 5, 2, 25);
  CHECK(fr.method == FootprintMethod::LmBound);
  CHECK(fr.stabilized_constant == 20u);
  for (const auto& row : fr.table)
    if (row.e >= *fr.stabilization_degree) CHECK(row.delta_count == 20);
  CHECK(to_string(FootprintMethod::ClosedForm) == "closed-form");
}
