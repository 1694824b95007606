#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fqpoints/order.hpp"
#include "fqpoints/polynomial.hpp"

namespace fqp {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division f = sum quotients[i] * divisors[i] + remainder.
///
/// Each step takes the order-largest monomial of the running polynomial that
/// some leading monomial divides and cancels it with the first such divisor
/// in list order. The remainder has no monomial divisible by any lm(divisor).
/// Throws InvalidArgument if a divisor is zero.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order);

/// Remainder only; same steps as divide().
Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors,
                     const MonomialOrder& order);

/// The polynomial after the first step of division, or nullopt when no
/// monomial of f is divisible by a leading monomial.
std::optional<Polynomial> division_step(const Polynomial& f, std::span<const Polynomial> divisors,
                                        const MonomialOrder& order);

}  // namespace fqp
