#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fqpoints/field.hpp"
#include "fqpoints/monomial.hpp"
#include "fqpoints/polynomial.hpp"

namespace fqp {

// Projective reduction over F_q. The top variable of a monomial mu != 1 is
// the largest index l in supp(mu). Every exponent below l is folded into
// [0, q-1], keeping its residue mod q-1 and keeping positive exponents
// positive. The excess moves onto x_l, so the degree is unchanged. The
// reduced monomials of degree e are exactly the normal forms of degree-e
// monomials modulo the vanishing ideal of P^m(F_q).

/// Checks q >= 2 is a prime power; throws InvalidArgument otherwise.
void validate_field_size(std::uint64_t q);

/// Reduced degree-e monomial viewed through its top variable:
/// x_0^{a_0} ... x_{l-1}^{a_{l-1}} x_l^{e - sum a_i} with each a_i in [0, q-1].
struct ReducedMonomialStratum {
  std::size_t ell = 0;
  std::vector<Exponent> free_exponents;
  std::uint32_t degree = 0;

  Monomial to_monomial(std::size_t num_vars) const;
};

Monomial reduce_monomial(const Monomial& mu, std::uint64_t q);
bool is_reduced(const Monomial& mu, std::uint64_t q);

/// Linear extension of reduce_monomial; merged coefficients may cancel.
Polynomial reduce_polynomial(const Polynomial& f, std::uint64_t q);
bool is_reduced(const Polynomial& f, std::uint64_t q);

/// sum_{i<l} (a_i - abar_i) q^{m-i} with m = num_vars - 1. Zero iff mu is reduced.
std::uint64_t weight(const Monomial& mu, std::uint64_t q);

/// Phi_ij = x_i^q x_j - x_i x_j^q for 0 <= i < j <= m, ordered (0,1), (0,2), ..., (m-1,m).
std::vector<Polynomial> fermat_generators(std::uint64_t q, std::size_t m, const Field& field);

/// Membership in the ideal generated by the Fermat polynomials: reduce(f) == 0.
bool is_in_gamma_q(const Polynomial& f, std::uint64_t q);

/// Reduced monomials of degree e in m+1 variables, by stratum l ascending and
/// then free exponent vectors in lexicographic order.
std::vector<ReducedMonomialStratum> enumerate_reduced_strata(std::uint64_t q, std::size_t m, std::uint32_t e);
std::vector<Monomial> enumerate_reduced_monomials(std::uint64_t q, std::size_t m, std::uint32_t e);

/// p_j = q^j + ... + q + 1 = |P^j(F_q)|, and 0 for j < 0.
std::uint64_t projective_space_size(std::int64_t j, std::uint64_t q);

}  // namespace fqp
