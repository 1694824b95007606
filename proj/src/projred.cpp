#include "fqpoints/projred.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fqpoints/error.hpp"

namespace fqp {

namespace {

constexpr std::uint64_t kMaxEnumeration = 10'000'000;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw CapacityError("integer overflow in 64-bit count");
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw CapacityError("integer overflow in 64-bit count");
  return a + b;
}

std::uint64_t fold_exponent(std::uint64_t a, std::uint64_t q) {
  if (a <= q - 1) return a;
  return (a - 1) % (q - 1) + 1;
}

}  // namespace

void validate_field_size(std::uint64_t q) {
  if (q < 2) throw InvalidArgument("q must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint64_t rest = q;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
}

Monomial ReducedMonomialStratum::to_monomial(std::size_t num_vars) const {
  Monomial mu(num_vars);
  if (degree == 0) return mu;
  std::uint32_t used = 0;
  for (std::size_t i = 0; i < free_exponents.size(); ++i) {
    mu.set(i, free_exponents[i]);
    used += free_exponents[i];
  }
  mu.set(ell, degree - used);
  return mu;
}

Monomial reduce_monomial(const Monomial& mu, std::uint64_t q) {
  const auto top = mu.top_variable();
  if (!top) return mu;
  Monomial out = mu;
  std::uint64_t excess = 0;
  for (std::size_t i = 0; i < *top; ++i) {
    const std::uint64_t folded = fold_exponent(mu[i], q);
    excess += mu[i] - folded;
    out.set(i, folded);
  }
  out.set(*top, mu[*top] + excess);
  return out;
}

bool is_reduced(const Monomial& mu, std::uint64_t q) {
  const auto top = mu.top_variable();
  if (!top) return true;
  for (std::size_t i = 0; i < *top; ++i)
    if (mu[i] > q - 1) return false;
  return true;
}

Polynomial reduce_polynomial(const Polynomial& f, std::uint64_t q) {
  Polynomial out(f.field(), f.num_vars());
  for (const auto& [mu, c] : f.terms()) out.add_term(reduce_monomial(mu, q), c);
  return out;
}

bool is_reduced(const Polynomial& f, std::uint64_t q) {
  for (const auto& [mu, c] : f.terms())
    if (!is_reduced(mu, q)) return false;
  return true;
}

std::uint64_t weight(const Monomial& mu, std::uint64_t q) {
  const auto top = mu.top_variable();
  if (!top) return 0;
  const std::size_t m = mu.num_vars() - 1;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < *top; ++i) {
    const std::uint64_t drop = mu[i] - fold_exponent(mu[i], q);
    if (drop == 0) continue;
    std::uint64_t scale = 1;
    for (std::size_t k = 0; k < m - i; ++k) scale = checked_mul(scale, q);
    total = checked_add(total, checked_mul(drop, scale));
  }
  return total;
}

std::vector<Polynomial> fermat_generators(std::uint64_t q, std::size_t m, const Field& field) {
  validate_field_size(q);
  std::uint64_t power = q;
  while (power % field.characteristic() == 0) power /= field.characteristic();
  if (power != 1)
    throw InvalidArgument("q = " + std::to_string(q) + " is not a power of the characteristic " +
                          std::to_string(field.characteristic()));
  const std::size_t n = m + 1;
  std::vector<Polynomial> out;
  out.reserve(n * m / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Monomial lead(n), tail(n);
      lead.set(i, q);
      lead.set(j, 1);
      tail.set(i, 1);
      tail.set(j, q);
      Polynomial phi(field, n);
      phi.add_term(lead, 1);
      phi.add_term(tail, field.neg(1));
      out.push_back(std::move(phi));
    }
  }
  return out;
}

bool is_in_gamma_q(const Polynomial& f, std::uint64_t q) { return reduce_polynomial(f, q).is_zero(); }

std::vector<ReducedMonomialStratum> enumerate_reduced_strata(std::uint64_t q, std::size_t m,
                                                             std::uint32_t e) {
  validate_field_size(q);
  std::vector<ReducedMonomialStratum> out;
  if (e == 0) {
    out.push_back({0, {}, 0});
    return out;
  }
  const std::uint64_t cap = q - 1;
  for (std::size_t ell = 0; ell <= m; ++ell) {
    std::vector<Exponent> free(ell, 0);
    // Free exponents in lexicographic order with sum <= e - 1 (top exponent stays positive).
    auto fill = [&](auto&& self, std::size_t i, std::uint32_t budget) -> void {
      if (i == ell) {
        if (out.size() >= kMaxEnumeration) throw CapacityError("reduced monomial enumeration exceeds 10^7");
        out.push_back({ell, free, e});
        return;
      }
      const std::uint64_t hi = std::min<std::uint64_t>(cap, budget);
      for (std::uint64_t a = 0; a <= hi; ++a) {
        free[i] = static_cast<Exponent>(a);
        self(self, i + 1, budget - static_cast<std::uint32_t>(a));
      }
      free[i] = 0;
    };
    fill(fill, 0, e - 1);
  }
  return out;
}

std::vector<Monomial> enumerate_reduced_monomials(std::uint64_t q, std::size_t m, std::uint32_t e) {
  std::vector<Monomial> out;
  for (const auto& s : enumerate_reduced_strata(q, m, e)) out.push_back(s.to_monomial(m + 1));
  return out;
}

std::uint64_t projective_space_size(std::int64_t j, std::uint64_t q) {
  if (j < 0) return 0;
  std::uint64_t total = 0, power = 1;
  for (std::int64_t k = 0; k <= j; ++k) {
    total = checked_add(total, power);
    if (k < j) power = checked_mul(power, q);
  }
  return total;
}

}  // namespace fqp
