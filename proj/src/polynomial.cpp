#include "fqpoints/polynomial.hpp"

#include <algorithm>

#include "fqpoints/error.hpp"

namespace fqp {

Polynomial Polynomial::constant(Field field, std::size_t num_vars, Code value) {
  Polynomial p(field, num_vars);
  p.add_term(Monomial(num_vars), value);
  return p;
}

Polynomial Polynomial::variable(Field field, std::size_t num_vars, std::size_t index) {
  return term(field, Monomial::variable(num_vars, index), 1);
}

Polynomial Polynomial::term(Field field, const Monomial& monomial, Code coefficient) {
  Polynomial p(field, monomial.num_vars());
  p.add_term(monomial, coefficient);
  return p;
}

FieldElement Polynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return {field_, it == terms_.end() ? Code{0} : it->second};
}

void Polynomial::add_term(const Monomial& monomial, Code coefficient) {
  if (monomial.num_vars() != num_vars_) throw ContextMismatch("monomial has the wrong variable count");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) return;
  it->second = field_.add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::optional<std::uint32_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::pair<Monomial, FieldElement> Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, FieldElement(field_, best->second)};
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return scale(field_.inv(leading_term(order).second.code()));
}

std::vector<std::pair<Monomial, Field::Code>> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<std::pair<Monomial, Code>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&order](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return out;
}

void Polynomial::check_compatible(const Polynomial& rhs) const {
  if (!(field_ == rhs.field_)) throw ContextMismatch("polynomials are over different fields");
  if (num_vars_ != rhs.num_vars_) throw ContextMismatch("polynomials have different variable counts");
}

void Polynomial::axpy(const Polynomial& rhs, Code factor) {
  if (factor == 0) return;
  for (const auto& [m, c] : rhs.terms_) add_term(m, field_.mul(c, factor));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_compatible(rhs);
  axpy(rhs, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_compatible(rhs);
  axpy(rhs, field_.neg(1));
  return *this;
}

Polynomial Polynomial::operator-() const { return scale(field_.neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  check_compatible(rhs);
  Polynomial out(field_, num_vars_);
  for (const auto& [m, c] : terms_)
    for (const auto& [n, d] : rhs.terms_) out.add_term(m * n, field_.mul(c, d));
  return out;
}

Polynomial Polynomial::scale(Code factor) const {
  Polynomial out(field_, num_vars_);
  if (factor == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(c, factor));
  return out;
}

Polynomial Polynomial::scale(const FieldElement& factor) const {
  if (!(factor.field() == field_)) throw ContextMismatch();
  return scale(factor.code());
}

Polynomial Polynomial::mul_term(const Monomial& monomial, Code coefficient) const {
  Polynomial out(field_, num_vars_);
  if (coefficient == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m * monomial, field_.mul(c, coefficient));
  return out;
}

Field::Code Polynomial::evaluate(std::span<const Code> point) const {
  if (point.size() != num_vars_) throw ContextMismatch("point has the wrong number of coordinates");
  Code sum = 0;
  for (const auto& [m, c] : terms_) {
    Code value = c;
    for (std::size_t i = 0; i < num_vars_ && value != 0; ++i)
      if (m[i] > 0) value = field_.mul(value, field_.pow(point[i], m[i]));
    sum = field_.add(sum, value);
  }
  return sum;
}

Polynomial Polynomial::embed(const Field& target) const {
  if (target.characteristic() != field_.characteristic())
    throw ContextMismatch("target field has a different characteristic");
  Polynomial out(target, num_vars_);
  for (const auto& [m, c] : terms_) {
    if (!field_.in_prime_subfield(c))
      throw InvalidArgument("only prime-subfield coefficients can be embedded");
    out.terms_.emplace(m, c);
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return field_ == rhs.field_ && num_vars_ == rhs.num_vars_ && terms_ == rhs.terms_;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(base.field(), base.num_vars(), 1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

}  // namespace fqp
