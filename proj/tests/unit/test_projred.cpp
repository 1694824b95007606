#include <doctest.h>

#include <random>
#include <set>

#include "fqpoints/division.hpp"
#include "fqpoints/error.hpp"
#include "fqpoints/projred.hpp"
#include "fqpoints/text.hpp"
#include "oracles.hpp"

using namespace fqp;

namespace {

Monomial M(std::initializer_list<std::uint64_t> e) { return Monomial::from_exponents(std::vector<std::uint64_t>(e)); }

}  // namespace

TEST_CASE("reduce_monomial examples") {
  CHECK(reduce_monomial(M({3, 1}), 3) == M({1, 3}));
  CHECK(reduce_monomial(Monomial(3), 3).is_one());
  CHECK(reduce_monomial(M({5, 2, 1}), 3) == M({1, 2, 5}));
  CHECK(reduce_monomial(M({2, 1}), 2) == M({1, 2}));
  CHECK(reduce_monomial(M({7}), 2) == M({7}));
}

TEST_CASE("reduce_polynomial examples") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = oracle::field_for(q);
    for (const auto& phi : fermat_generators(q, 2, f)) CHECK(reduce_polynomial(phi, q).is_zero());
  }
  const Field f2 = Field::make(2);
  CHECK(reduce_polynomial(parse_polynomial("x0^2*x1 + x0*x1^2", f2, 1), 2).is_zero());
  const Field f5 = Field::make(5);
  const auto g = parse_polynomial("x0^2*x1 + 3*x1^7", f5, 1);
  CHECK(reduce_polynomial(g, 5) == g);
}

TEST_CASE("weight") {
  CHECK(weight(M({1, 2}), 2) == 0);
  CHECK(weight(M({2, 1}), 2) == 2);
  CHECK(weight(M({5, 2, 1}), 3) == 36);
}

TEST_CASE("fermat generators") {
  const Field f2 = Field::make(2);
  const auto g2 = fermat_generators(2, 1, f2);
  REQUIRE(g2.size() == 1);
  CHECK(g2[0] == parse_polynomial("x0^2*x1 + x0*x1^2", f2, 1));
  CHECK(fermat_generators(3, 2, Field::make(3)).size() == 3);
  CHECK(fermat_generators(4, 1, Field::make(2, 2)).size() == 1);
  CHECK_THROWS_AS(fermat_generators(3, 1, f2), InvalidArgument);
}

TEST_CASE("gamma membership") {
  for (std::uint64_t q : {2, 3, 5}) {
    const Field f = oracle::field_for(q);
    CHECK(is_in_gamma_q(fermat_generators(q, 1, f)[0], q));
    CHECK(!is_in_gamma_q(Polynomial::variable(f, 2, 0), q));
    CHECK(!is_in_gamma_q(Polynomial::term(f, Monomial::variable(2, 0, q + 1)), q));
  }
}

TEST_CASE("reduced strata") {
  CHECK(enumerate_reduced_monomials(2, 2, 5).size() == 7);
  const auto e0 = enumerate_reduced_monomials(3, 2, 0);
  REQUIRE(e0.size() == 1);
  CHECK(e0[0].is_one());
  CHECK(enumerate_reduced_monomials(2, 1, 2) == std::vector<Monomial>{M({2, 0}), M({0, 2}), M({1, 1})});
  CHECK(projective_space_size(2, 3) == 13);
  CHECK(projective_space_size(-1, 7) == 0);
  CHECK(projective_space_size(0, 7) == 1);
}

TEST_CASE("strata match the definition, and sizes stabilize") {
  for (std::uint64_t q : {2, 3, 4}) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::uint32_t e = 0; e <= m * (q - 1) + 3; ++e) {
        const auto fast = enumerate_reduced_monomials(q, m, e);
        const auto slow = oracle::reduced_monomials(q, m, e);
        CHECK(std::set<Monomial>(fast.begin(), fast.end()) == std::set<Monomial>(slow.begin(), slow.end()));
        CHECK(fast.size() == slow.size());
        if (e >= m * (q - 1) + 1) {
          CHECK(fast.size() == projective_space_size(static_cast<std::int64_t>(m), q));
          std::vector<std::uint64_t> per(m + 1, 0);
          for (const auto& s : enumerate_reduced_strata(q, m, e)) ++per[s.ell];
          std::uint64_t expect = 1;
          for (std::size_t l = 0; l <= m; ++l, expect *= q) CHECK(per[l] == expect);
        }
      }
    }
  }
}

TEST_CASE("reduce agrees with the definition on random monomials") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const std::uint64_t q = std::vector<std::uint64_t>{2, 3, 4, 5}[t % 4];
    Monomial mu(4);
    for (std::size_t i = 0; i < 4; ++i) mu.set(i, rng() % 12);
    const Monomial r = reduce_monomial(mu, q);
    CHECK(oracle::reduced_by_definition(r, q));
    CHECK(r.degree() == mu.degree());
    CHECK(is_reduced(mu, q) == oracle::reduced_by_definition(mu, q));
    CHECK((weight(mu, q) == 0) == is_reduced(mu, q));
    for (auto fam : {OrderFamily::Lex, OrderFamily::GradedLex, OrderFamily::GradedRevLex})
      CHECK(!MonomialOrder::identity(fam, 4).less(mu, r));
  }
}

TEST_CASE("reduced leading monomial survives reduction") {
  std::mt19937_64 rng(23);
  const auto ord = MonomialOrder::grevlex(3);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t q = 3;
    const Field f = Field::make(3);
    const auto g = oracle::random_polynomial(f, 3, 6, 7, rng);
    if (g.is_zero() || !is_reduced(g.leading_monomial(ord), q)) continue;
    CHECK(reduce_polynomial(g, q).leading_monomial(ord) == g.leading_monomial(ord));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(validate_field_size(6), InvalidArgument);
  CHECK_THROWS_AS(validate_field_size(1), InvalidArgument);
  CHECK_NOTHROW(validate_field_size(9));
}
