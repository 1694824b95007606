#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fqpoints/field.hpp"
#include "fqpoints/monomial.hpp"
#include "fqpoints/order.hpp"

namespace fqp {

/// Sparse polynomial in x_0, ..., x_{n-1} over a finite field.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are
/// never stored, so equality of polynomials is equality of term maps.
class Polynomial {
 public:
  using Code = Field::Code;
  using Terms = std::map<Monomial, Code>;

  Polynomial(Field field, std::size_t num_vars) : field_(field), num_vars_(num_vars) {}

  static Polynomial constant(Field field, std::size_t num_vars, Code value);
  static Polynomial variable(Field field, std::size_t num_vars, std::size_t index);
  static Polynomial term(Field field, const Monomial& monomial, Code coefficient = 1);

  const Field& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  FieldElement coefficient(const Monomial& monomial) const;
  /// Adds c * monomial, merging with an existing term.
  void add_term(const Monomial& monomial, Code coefficient);

  bool is_homogeneous() const;
  /// Largest total degree of a term; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;

  /// Order-maximal term. Throws InvalidArgument on the zero polynomial.
  std::pair<Monomial, FieldElement> leading_term(const MonomialOrder& order) const;
  Monomial leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }
  /// Scaled so the leading coefficient is 1.
  Polynomial monic(const MonomialOrder& order) const;
  /// Terms sorted by `order`, largest first.
  std::vector<std::pair<Monomial, Code>> sorted_terms(const MonomialOrder& order) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial scale(Code factor) const;
  Polynomial scale(const FieldElement& factor) const;
  /// c * monomial * this.
  Polynomial mul_term(const Monomial& monomial, Code coefficient) const;

  /// Value at a point given by element codes, one per variable.
  Code evaluate(std::span<const Code> point) const;

  /// Same polynomial over `target`; coefficients must lie in the prime subfield.
  Polynomial embed(const Field& target) const;

  bool operator==(const Polynomial& rhs) const;

 private:
  void check_compatible(const Polynomial& rhs) const;
  void axpy(const Polynomial& rhs, Code factor);

  Field field_;
  std::size_t num_vars_;
  Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

}  // namespace fqp
