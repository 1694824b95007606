#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqpoints/groebner.hpp"
#include "fqpoints/monomial.hpp"
#include "fqpoints/polynomial.hpp"

namespace fqp {

/// Inclusion-exclusion is used up to this many minimal generators; beyond it
/// the counts fall back to direct enumeration.
inline constexpr std::size_t kInclusionExclusionCap = 20;

/// dim of the degree-e piece of k[x_0..x_{n-1}] / <gens>, by exact rank of the
/// span of {mu * g : deg mu = e - deg g}. Generators must be homogeneous.
std::uint64_t hilbert_by_linear_algebra(std::span<const Polynomial> gens, std::size_t num_vars,
                                        std::uint32_t e);

/// Number of degree-e monomials outside the monomial ideal.
std::uint64_t standard_monomial_count(const MonomialIdeal& lt, std::uint32_t e);

/// Eventually constant value of standard_monomial_count. For e at or past the
/// degree L of the lcm of all generators the count is a polynomial of degree
/// <= m in e, so equality at m+1 consecutive degrees from L proves constancy.
/// Throws PositiveDimension when the values differ.
std::uint64_t hilbert_polynomial_constant(const MonomialIdeal& lt);

/// Least e0 with standard_monomial_count(lt, e) constant for every e >= e0.
std::uint32_t hilbert_stabilization_degree(const MonomialIdeal& lt);

/// Reduced degree-e monomials in m+1 variables divisible by no element of lms.
std::uint64_t projective_fq_footprint_at(std::span<const Monomial> lms, std::uint64_t q, std::size_t m,
                                         std::uint32_t e);

/// (m+1)(q-1) + D + 1 with D the largest degree in lms (0 when empty).
std::uint32_t footprint_stabilization_degree(std::span<const Monomial> lms, std::uint64_t q, std::size_t m);

/// Stabilized projective F_q-footprint of lms, evaluated at the stabilization
/// degree and checked at the next one (InvariantViolation on mismatch).
std::uint64_t projective_fq_footprint_count(std::span<const Monomial> lms, std::uint64_t q, std::size_t m);

/// Stabilized projective shadow size of a single reduced monomial nu of degree >= 1:
/// prod_{i<l} max(q-b_i, 0) * (1 + max(q-b_l, 0) * p_{m-l-1}).
std::uint64_t shadow_count_closed_form(const Monomial& nu, std::uint64_t q, std::size_t m);

/// Monomials with every exponent in [0, q-1] divisible by no element of lms.
std::uint64_t affine_fq_footprint_count(std::span<const Monomial> lms, std::uint64_t q, std::size_t num_vars);

/// floor((affine_count - 1) / (q - 1)); affine_count must be >= 1.
std::uint64_t cone_to_projective_bound(std::uint64_t affine_count, std::uint64_t q);

enum class FootprintMethod { GbExact, LmBound, ClosedForm };
std::string_view to_string(FootprintMethod method);

struct FootprintRow {
  std::uint32_t e = 0;
  std::optional<std::uint64_t> h_value;  // linear-algebra Hilbert function, when computed
  std::uint64_t delta_count = 0;
};

struct FootprintReport {
  std::vector<FootprintRow> table;
  std::optional<std::uint64_t> stabilized_constant;
  std::optional<std::uint32_t> stabilization_degree;
  FootprintMethod method = FootprintMethod::GbExact;
  /// How stabilization was established. Always a plateau check, never an a-priori bound.
  std::string certificate;
};

/// Hilbert table of <gens> for e = 0..emax from both the linear-algebra oracle
/// and the standard monomials of LT(buchberger(gens)).
FootprintReport hilbert_report(std::span<const Polynomial> gens, const MonomialOrder& order, std::uint32_t emax);

/// Projective F_q-footprint table of lms for e = 0..emax plus its stabilized value.
FootprintReport projective_footprint_report(std::span<const Monomial> lms, std::uint64_t q, std::size_t m,
                                            std::uint32_t emax);

}  // namespace fqp
