#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fqpoints/error.hpp"
#include "fqpoints/field.hpp"

using namespace fqp;

TEST_CASE("prime fields") {
  const Field f2 = Field::make(2);
  CHECK(f2.order() == 2);
  CHECK(f2.elements().size() == 2);

  const Field f5 = Field::make(5);
  CHECK(f5.mul(2, 3) == 1);
  CHECK(f5.pow(3, 5) == 3);

  const Field f3 = Field::make(3);
  CHECK(f3.inv(2) == 2);
  std::vector<Field::Code> codes;
  for (const auto& x : f3.elements()) codes.push_back(x.code());
  CHECK(codes == std::vector<Field::Code>{0, 1, 2});
}

TEST_CASE("GF(4) generator and modulus") {
  const Field f4 = Field::make(2, 2);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  const FieldElement a = f4.generator();
  CHECK(a.pow(2) == a + f4.one());
  CHECK(a.pow(3) == f4.one());
  CHECK((a + a).is_zero());
  std::set<Field::Code> seen;
  for (const auto& x : f4.elements()) {
    CHECK(x.pow(4) == x);
    seen.insert(x.code());
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("least irreducible modulus") {
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK_THROWS_AS(Field::with_modulus(2, {1, 0, 1}), InvalidArgument);  // x^2+1 = (x+1)^2
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::make(4), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 0), InvalidArgument);
  CHECK_THROWS_AS(Field::make(2, 21), CapacityError);
  CHECK_THROWS_AS(Field::make(3).inv(0), DivisionByZero);
  CHECK_THROWS_AS(Field::make(3).one() + Field::make(5).one(), ContextMismatch);
}

TEST_CASE("interned contexts") {
  CHECK(Field::make(7) == Field::make(7));
  CHECK(!(Field::make(7) == Field::make(11)));
}

TEST_CASE("subfields") {
  const Field f16 = Field::make(2, 4);
  CHECK(f16.contains_subfield(4));
  CHECK(!f16.contains_subfield(8));
  const auto sub = f16.subfield_codes(4);
  REQUIRE(sub.size() == 4);
  CHECK(sub[0] == 0);
  CHECK(sub[1] == 1);
  for (auto x : sub)
    for (auto y : sub) {
      CHECK(std::find(sub.begin(), sub.end(), f16.mul(x, y)) != sub.end());
      CHECK(std::find(sub.begin(), sub.end(), f16.add(x, y)) != sub.end());
    }
}

TEST_CASE("field axioms over small fields") {
  std::mt19937_64 rng(7);
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 3}, {7, 2}}) {
    const Field f = Field::make(p, s);
    const std::uint32_t q = f.order();
    for (std::uint32_t x = 0; x < q; ++x) {
      CHECK(f.pow(x, q) == x);
      if (x != 0) {
        CHECK(f.pow(x, q - 1) == 1);
        CHECK(f.mul(x, f.inv(x)) == 1);
      }
    }
    for (int t = 0; t < 300; ++t) {
      const Field::Code a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
    }
  }
}

TEST_CASE("formatting") {
  const Field f4 = Field::make(2, 2);
  CHECK(f4.format(3) == "a+1");
  CHECK(f4.format(1) == "1");
  CHECK(Field::make(3, 2).format(2 * 3 + 1) == "2*a+1");
}
