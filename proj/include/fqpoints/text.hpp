#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fqpoints/order.hpp"
#include "fqpoints/polynomial.hpp"

namespace fqp {

// Polynomial text grammar (whitespace is insignificant):
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff | coeff '*' mono | mono
//   mono   := factor ('*' factor)*
//   factor := 'x' index ('^' nat)?
//   coeff  := int | '(' ext ')'
//   ext    := ['+'|'-'] eterm (('+'|'-') eterm)*
//   eterm  := int | int '*' apow | apow
//   apow   := 'a' ('^' nat)?
//
// `a` is the field's distinguished generator and is rejected in prime fields.
// Integers are reduced mod p. Variables are x0 .. xm.

/// Parses a polynomial in m+1 variables. Throws ParseError with a character offset.
Polynomial parse_polynomial(std::string_view text, const Field& field, std::size_t m);

/// Parses a single monomial such as "x0^4*x1" (or "1").
Monomial parse_monomial(std::string_view text, std::size_t m);

/// Comma-separated list of monomials.
std::vector<Monomial> parse_monomial_list(std::string_view text, std::size_t m);

std::string render_monomial(const Monomial& monomial);

/// Terms largest first under `order`. Prime-field coefficients use the
/// symmetric residue range, so over GF(3) the coefficient 2 prints as "-".
std::string render_polynomial(const Polynomial& poly, const MonomialOrder& order);
std::string render_polynomial(const Polynomial& poly);

}  // namespace fqp
