#include <doctest.h>

#include <random>

#include "fqpoints/division.hpp"
#include "fqpoints/error.hpp"
#include "fqpoints/order.hpp"
#include "fqpoints/polynomial.hpp"
#include "fqpoints/projred.hpp"
#include "fqpoints/text.hpp"
#include "oracles.hpp"

using namespace fqp;

namespace {

Polynomial P(const char* text, const Field& f, std::size_t m) { return parse_polynomial(text, f, m); }

const std::vector<OrderFamily> kFamilies{OrderFamily::Lex, OrderFamily::GradedLex, OrderFamily::GradedRevLex};

}  // namespace

TEST_CASE("monomial basics") {
  const Monomial mu{2, 0, 3};
  CHECK(mu.degree() == 5);
  CHECK(mu.support() == std::vector<std::size_t>{0, 2});
  CHECK(mu.top_variable() == 2u);
  CHECK(!Monomial(3).top_variable());
  CHECK((Monomial{1, 0} * Monomial{0, 2}) == Monomial{1, 2});
  CHECK(Monomial{1, 1}.divides(Monomial{2, 1}));
  CHECK(!Monomial{1, 1}.divides(Monomial{2, 0}));
  CHECK(lcm(Monomial{3, 1}, Monomial{1, 2}) == Monomial{3, 2});
  CHECK_THROWS_AS(Monomial{60000} * Monomial{60000}, CapacityError);
  CHECK_THROWS_AS((Monomial{1, 0} / Monomial{0, 1}), InvalidArgument);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(binomial(10, 3) == 120);
}

TEST_CASE("monomial order chain and admissibility") {
  std::mt19937_64 rng(3);
  for (auto fam : kFamilies) {
    const auto ord = MonomialOrder::identity(fam, 3);
    CHECK(ord.less(Monomial{0, 1, 0}, Monomial{1, 0, 0}));
    CHECK(ord.less(Monomial{0, 0, 1}, Monomial{0, 1, 0}));
    CHECK(ord.less(Monomial(3), Monomial{0, 0, 1}));
    const MonomialOrder perm(fam, {2, 0, 1});
    CHECK(perm.less(Monomial{1, 0, 0}, Monomial{0, 0, 1}));
    CHECK(perm.less(Monomial{0, 1, 0}, Monomial{1, 0, 0}));
    for (int t = 0; t < 300; ++t) {
      Monomial a(3), b(3), w(3);
      for (std::size_t i = 0; i < 3; ++i) {
        a.set(i, rng() % 4);
        b.set(i, rng() % 4);
        w.set(i, rng() % 3);
      }
      if (a == b) continue;
      CHECK(ord.less(a, b) != ord.less(b, a));
      CHECK(ord.less(a, b) == ord.less(a * w, b * w));
      CHECK(!ord.less(a * w, a));
    }
  }
  CHECK_THROWS_AS(MonomialOrder(OrderFamily::Lex, {0, 0}), InvalidArgument);
}

TEST_CASE("grevlex and grlex differ as expected") {
  // x0*x2^2 vs x1^3 in degree 3
  const Monomial a{1, 0, 2}, b{0, 3, 0};
  CHECK(MonomialOrder::identity(OrderFamily::GradedLex, 3).less(b, a));
  CHECK(MonomialOrder::grevlex(3).less(a, b));
}

TEST_CASE("polynomial arithmetic") {
  const Field f3 = Field::make(3);
  CHECK(P("x0 + x1", f3, 1) + P("x0 - x1", f3, 1) == P("2*x0", f3, 1));
  CHECK(P("x0", f3, 1) * P("x1^2", f3, 1) == P("x0*x1^2", f3, 1));
  const Field f2 = Field::make(2);
  CHECK(pow(P("x0 + x1", f2, 1), 2) == P("x0^2 + x1^2", f2, 1));
  CHECK(P("x0 - x0", f3, 1).is_zero());
  CHECK(P("x0^2 + x0*x1", f3, 1).is_homogeneous());
  CHECK(!P("x0^2 + x1", f3, 1).is_homogeneous());
  CHECK_THROWS_AS(P("x0", f3, 1) + P("x0", f2, 1), ContextMismatch);
}

TEST_CASE("leading terms") {
  for (std::uint64_t q : {2, 3, 5}) {
    const Field f = oracle::field_for(q);
    const auto phi = fermat_generators(q, 1, f).front();
    for (auto fam : kFamilies) CHECK(phi.leading_monomial(MonomialOrder::identity(fam, 2)) == Monomial::from_exponents(std::vector<std::uint64_t>{q, 1}));
  }
  const Field f5 = Field::make(5);
  CHECK(Polynomial::constant(f5, 2, 5 % 5 + 3).leading_monomial(MonomialOrder::grevlex(2)).is_one());
  CHECK(P("x0*x1^2 + x0^2*x1", f5, 1).leading_monomial(MonomialOrder::identity(OrderFamily::GradedLex, 2)) == Monomial{2, 1});
  CHECK_THROWS_AS(Polynomial(f5, 2).leading_term(MonomialOrder::grevlex(2)), InvalidArgument);
}

TEST_CASE("lm multiplicativity") {
  std::mt19937_64 rng(11);
  const Field f = Field::make(3);
  for (auto fam : kFamilies) {
    const auto ord = MonomialOrder::identity(fam, 3);
    for (int t = 0; t < 100; ++t) {
      const auto a = oracle::random_polynomial(f, 3, 4, 4, rng);
      const auto b = oracle::random_polynomial(f, 3, 4, 4, rng);
      if (a.is_zero() || b.is_zero()) continue;
      CHECK((a * b).leading_monomial(ord) == a.leading_monomial(ord) * b.leading_monomial(ord));
    }
  }
}

TEST_CASE("division examples") {
  const Field f2 = Field::make(2);
  const auto ord = MonomialOrder::grevlex(2);
  const auto phi = fermat_generators(2, 1, f2);
  CHECK(reduce_by(P("x0^2*x1", f2, 1), phi, ord) == P("x0*x1^2", f2, 1));

  const Field f5 = Field::make(5);
  const auto g = P("x0^3 + 2*x0*x1 + 4", f5, 1);
  const std::vector<Polynomial> self{g};
  CHECK(reduce_by(g, self, ord).is_zero());

  const auto ord3 = MonomialOrder::grevlex(3);
  const auto phis = fermat_generators(2, 2, f2);
  const auto x1 = Polynomial::variable(f2, 3, 1), x2 = Polynomial::variable(f2, 3, 2);
  CHECK(reduce_by(x2 * phis[0] - x1 * phis[1], phis, ord3).is_zero());
}

TEST_CASE("division identity and determinism") {
  std::mt19937_64 rng(5);
  const Field f = Field::make(3);
  for (auto fam : kFamilies) {
    const auto ord = MonomialOrder::identity(fam, 3);
    for (int t = 0; t < 60; ++t) {
      const auto f0 = oracle::random_polynomial(f, 3, 6, 6, rng);
      std::vector<Polynomial> divs;
      for (int k = 0; k < 3; ++k) divs.push_back(oracle::random_polynomial(f, 3, 3, 3, rng));
      const auto res = divide(f0, divs, ord);
      Polynomial back = res.remainder;
      for (std::size_t k = 0; k < divs.size(); ++k) back += res.quotients[k] * divs[k];
      CHECK(back == f0);
      for (const auto& [mu, c] : res.remainder.terms())
        for (const auto& d : divs) CHECK(!d.leading_monomial(ord).divides(mu));
      CHECK(divide(f0, divs, ord).remainder == res.remainder);
    }
  }
  const std::vector<Polynomial> zero{Polynomial(f, 2)};
  CHECK_THROWS_AS(divide(P("x0", f, 1), zero, MonomialOrder::grevlex(2)), InvalidArgument);
}

TEST_CASE("parser") {
  const Field f3 = Field::make(3);
  const auto lit = P("x0^2*x1 - x0*x1^2", f3, 1);
  CHECK(lit.size() == 2);
  CHECK(lit.coefficient(Monomial{1, 2}).code() == 2);
  CHECK(P("0", f3, 1).is_zero());
  CHECK(P(" 4 * x0 ", f3, 1) == P("x0", f3, 1));
  CHECK(P("-x1 + x1", f3, 1).is_zero());

  const Field f4 = Field::make(2, 2);
  const auto ext = P("(a+1)*x0*x2", f4, 2);
  REQUIRE(ext.size() == 1);
  CHECK(ext.coefficient(Monomial{1, 0, 1}) == f4.generator() + f4.one());
  CHECK(P("(a^2)*x0", f4, 0) == P("(a+1)*x0", f4, 0));

  CHECK_THROWS_AS(P("x2", f3, 1), ParseError);
  CHECK_THROWS_AS(P("(a)*x0", f3, 1), ParseError);
  CHECK_THROWS_AS(P("x0 +", f3, 1), ParseError);
  try {
    P("x0 + y1", f3, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK(parse_monomial_list("x0^4*x1, x0^2*x1^3", 2) == std::vector<Monomial>{Monomial{4, 1, 0}, Monomial{2, 3, 0}});
  CHECK(parse_monomial("1", 2).is_one());
}

TEST_CASE("render round trip") {
  std::mt19937_64 rng(21);
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    const Field f = Field::make(p, s);
    for (int t = 0; t < 100; ++t) {
      const auto g = oracle::random_polynomial(f, 3, 5, 5, rng);
      CHECK(parse_polynomial(render_polynomial(g), f, 2) == g);
      for (auto fam : kFamilies) {
        const auto ord = MonomialOrder::identity(fam, 3);
        CHECK(parse_polynomial(render_polynomial(g, ord), f, 2) == g);
      }
    }
  }
  CHECK(render_polynomial(P("2*x0^2 + x1", Field::make(3), 1)) == "-x0^2 + x1");
  CHECK(render_polynomial(Polynomial(Field::make(3), 2)) == "0");
}
