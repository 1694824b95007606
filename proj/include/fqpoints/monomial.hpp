#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fqp {

using Exponent = std::uint16_t;

/// Monomial x_0^{a_0} ... x_m^{a_m}, stored as its exponent vector.
///
/// Exponents are 16-bit; any product that would overflow throws CapacityError.
/// The built-in comparison is plain lexicographic on the exponent vector and
/// serves only as a storage key; use MonomialOrder for term orders.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents)
      : Monomial(std::vector<Exponent>(exponents)) {}

  /// Checked construction from wide exponents.
  static Monomial from_exponents(std::span<const std::uint64_t> exponents);
  /// x_index^power in num_vars variables.
  static Monomial variable(std::size_t num_vars, std::size_t index, std::uint64_t power = 1);

  std::size_t num_vars() const { return exponents_.size(); }
  std::uint32_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }
  bool is_one() const { return degree_ == 0; }

  std::vector<std::size_t> support() const;
  /// Highest index with positive exponent; nullopt for the monomial 1.
  std::optional<std::size_t> top_variable() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  void set(std::size_t i, std::uint64_t value);

  auto operator<=>(const Monomial& other) const { return exponents_ <=> other.exponents_; }
  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

 private:
  std::vector<Exponent> exponents_;
  std::uint32_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// All monomials of total degree `degree` in num_vars variables,
/// in lexicographic order of exponent vectors (x_0 exponent most significant, descending).
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, std::uint32_t degree);

/// C(n, k) with overflow checking; 0 when k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace fqp
