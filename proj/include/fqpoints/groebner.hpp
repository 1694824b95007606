#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fqpoints/monomial.hpp"
#include "fqpoints/order.hpp"
#include "fqpoints/polynomial.hpp"

namespace fqp {

/// Monomial ideal held by its minimal generators (an antichain under divisibility).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t num_vars) : num_vars_(num_vars) {}
  /// Minimalizes `generators`; the result is sorted by degree, then exponent vector.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool contains(const Monomial& mu) const;
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> generators_;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;
};

/// (L / lt f) f - (L / lt g) g with L = lcm(lm f, lm g). Throws on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Pairs are processed by the normal strategy: smallest lcm degree first, ties
/// broken by creation index. Pairs with coprime leading monomials are skipped.
/// The result is monic, interreduced, and sorted by leading monomial ascending.
/// Zero inputs are ignored; an empty input gives an empty basis.
GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order);

/// True iff every S-polynomial of `basis` reduces to zero modulo `basis`.
bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Monic and no term of any generator is divisible by another generator's leading monomial.
bool is_reduced_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb);
MonomialIdeal leading_term_ideal(std::span<const Polynomial> basis, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

struct UniversalCase {
  OrderFamily family;
  std::vector<std::size_t> permutation;
  bool matches = false;
  std::size_t basis_size = 0;
};

struct UniversalCertification {
  std::uint64_t q = 0;
  std::size_t m = 0;
  bool certified = false;
  bool all_permutations = false;
  std::vector<UniversalCase> cases;
  /// Which orders were swept; the claim covers only these.
  std::string scope;
};

/// Runs buchberger on the Fermat generators under every requested family and,
/// when m <= max_perm_m, every ranking of the variables (the identity ranking
/// only otherwise). Certified iff each run returns exactly the Fermat set up to sign.
UniversalCertification certify_universal_fermat(std::uint64_t q, std::size_t m, const Field& field,
                                                std::span<const OrderFamily> families,
                                                std::size_t max_perm_m);

}  // namespace fqp
