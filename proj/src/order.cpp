#include "fqpoints/order.hpp"

#include <string>

#include "fqpoints/error.hpp"

namespace fqp {

std::string_view to_string(OrderFamily family) {
  switch (family) {
    case OrderFamily::Lex:
      return "lex";
    case OrderFamily::GradedLex:
      return "grlex";
    case OrderFamily::GradedRevLex:
      return "grevlex";
  }
  return "?";
}

OrderFamily parse_order_family(std::string_view name) {
  if (name == "lex") return OrderFamily::Lex;
  if (name == "grlex" || name == "graded-lex") return OrderFamily::GradedLex;
  if (name == "grevlex" || name == "graded-reverse-lex") return OrderFamily::GradedRevLex;
  throw InvalidArgument("unknown monomial order '" + std::string(name) + "'");
}

MonomialOrder::MonomialOrder(OrderFamily family, std::vector<std::size_t> permutation)
    : family_(family), permutation_(std::move(permutation)) {
  std::vector<bool> seen(permutation_.size(), false);
  for (auto v : permutation_) {
    if (v >= permutation_.size() || seen[v])
      throw InvalidArgument("variable ranking is not a permutation of 0..m");
    seen[v] = true;
  }
}

MonomialOrder MonomialOrder::identity(OrderFamily family, std::size_t num_vars) {
  std::vector<std::size_t> perm(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) perm[i] = i;
  return MonomialOrder(family, std::move(perm));
}

bool MonomialOrder::is_identity() const {
  for (std::size_t i = 0; i < permutation_.size(); ++i)
    if (permutation_[i] != i) return false;
  return true;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = permutation_.size();
  if (family_ != OrderFamily::Lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (family_ == OrderFamily::GradedRevLex) {
    // Smaller exponent in the last differing (lowest-ranked) variable wins.
    for (std::size_t k = n; k-- > 0;) {
      const std::size_t v = permutation_[k];
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = permutation_[k];
    if (a[v] != b[v]) return a[v] <=> b[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace fqp
