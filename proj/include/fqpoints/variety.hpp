#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fqpoints/field.hpp"
#include "fqpoints/monomial.hpp"
#include "fqpoints/order.hpp"
#include "fqpoints/polynomial.hpp"

namespace fqp {

/// Upper limit on |P^m(F_q)| for any brute-force sweep.
inline constexpr std::uint64_t kMaxProjectivePoints = 10'000'000;

/// Canonical representative: the first nonzero coordinate is 1.
struct ProjectivePoint {
  std::vector<Field::Code> coords;
  bool operator==(const ProjectivePoint&) const = default;
};

/// The p_m points of P^m(F_q) with F_q taken as the subfield of order q of
/// `field`. Points whose leading 1 sits in the last position come first; within
/// a position the trailing coordinates run lexicographically by code.
std::vector<ProjectivePoint> enumerate_projective_points(const Field& field, std::uint64_t q, std::size_t m);

/// Number of F_q-rational points of P^m where every generator vanishes.
/// Generators must be homogeneous; throws CapacityError past kMaxProjectivePoints.
std::uint64_t count_points_bruteforce(std::span<const Polynomial> gens, const Field& field, std::uint64_t q,
                                      std::size_t m);

/// Brings a homogeneous system into the shape used by the leading-monomial
/// bound: every generator projectively reduced, of degree at most (m+1)(q-1),
/// linearly independent, with pairwise distinct leading monomials. The
/// F_q-rational zero set is unchanged. Generators that vanish on all of
/// P^m(F_q) disappear.
std::vector<Polynomial> normalize_system(std::span<const Polynomial> gens, std::uint64_t q, std::size_t m,
                                         const MonomialOrder& order);

struct CountReport {
  std::optional<std::uint64_t> exact_count;  // nullopt when brute force was skipped
  std::uint64_t footprint_constant = 0;
  std::uint32_t footprint_stabilization_degree = 0;
  std::vector<Monomial> lm_set;  // leading monomials of the normalized system
  std::uint64_t lm_bound = 0;
  std::optional<std::uint64_t> serre_bound;  // single generator of degree d <= q
  bool exact_matches_footprint = true;
  bool exact_within_lm_bound = true;
  bool exact_within_serre = true;
  bool footprint_within_lm_bound = true;
};

/// Exact count from LT(<gens> + Gamma_q), the leading-monomial bound of the
/// normalized system, and brute force when p_m allows it.
CountReport count_points_by_footprint(std::span<const Polynomial> gens, const Field& field, std::uint64_t q,
                                      std::size_t m, const MonomialOrder& order);

/// d q^{m-1} + p_{m-2}; needs d >= 1 and m >= 1.
std::uint64_t serre_bound(std::uint64_t d, std::size_t m, std::uint64_t q);

/// prod_{i=1..d} (x_1 - a_i x_0) over the first d elements of F_q in code order.
Polynomial extremal_hypersurface(std::uint64_t d, std::size_t m, const Field& field, std::uint64_t q);

/// Uniform integer in [0, n) by rejection; reproducible across standard libraries.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n);

/// Uniformly random nonzero form of degree d with F_q coefficients.
Polynomial random_form(const Field& field, std::uint64_t q, std::size_t m, std::uint32_t d, std::mt19937_64& rng);

struct SerreAudit {
  std::uint64_t q = 0;
  std::size_t m = 0;
  std::uint64_t d = 0;
  std::uint64_t bound = 0;
  std::uint64_t forms_checked = 0;
  std::uint64_t max_observed = 0;  // includes the extremal form
  bool all_within = true;
  std::uint64_t extremal_count = 0;
  bool extremal_attains = false;
  // Shadow inequality |shadow(lm F)| >= (q-d+1) q^{m-1}, checked on forms
  // with no pure power x_j^d term.
  std::uint64_t shadow_checked = 0;
  std::uint64_t shadow_failures = 0;
};

/// `samples` random forms drawn from a generator seeded with `seed`.
SerreAudit serre_audit(const Field& field, std::uint64_t q, std::size_t m, std::uint64_t d, std::uint64_t samples,
                       std::uint64_t seed);

/// Every nonzero form of degree d; throws CapacityError past 10^6 forms.
SerreAudit serre_exhaustive(const Field& field, std::uint64_t q, std::size_t m, std::uint64_t d);

}  // namespace fqp
