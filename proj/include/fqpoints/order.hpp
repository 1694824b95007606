#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fqpoints/monomial.hpp"

namespace fqp {

enum class OrderFamily { Lex, GradedLex, GradedRevLex };

std::string_view to_string(OrderFamily family);
/// Accepts "lex", "grlex", "grevlex" (and the long spellings "graded-lex", "graded-reverse-lex").
OrderFamily parse_order_family(std::string_view name);

/// Admissible term order: a family plus a ranking of the variables.
///
/// `permutation()[k]` is the variable that ranks k-th, so the chain is
/// x_{perm[0]} > x_{perm[1]} > ... > x_{perm[m]}. The identity permutation
/// gives x_0 > x_1 > ... > x_m.
class MonomialOrder {
 public:
  MonomialOrder(OrderFamily family, std::vector<std::size_t> permutation);

  static MonomialOrder identity(OrderFamily family, std::size_t num_vars);
  static MonomialOrder grevlex(std::size_t num_vars) {
    return identity(OrderFamily::GradedRevLex, num_vars);
  }

  OrderFamily family() const { return family_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  std::size_t num_vars() const { return permutation_.size(); }
  bool is_identity() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderFamily family_;
  std::vector<std::size_t> permutation_;
};

/// Comparator for ordered containers keyed by a term order.
struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->less(a, b); }
};

}  // namespace fqp
