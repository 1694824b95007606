#include "fqpoints/variety.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "fqpoints/error.hpp"
#include "fqpoints/footprint.hpp"
#include "fqpoints/groebner.hpp"
#include "fqpoints/projred.hpp"

namespace fqp {

namespace {

constexpr std::uint64_t kMaxExhaustiveForms = 1'000'000;

std::vector<Field::Code> base_field_codes(const Field& field, std::uint64_t q) {
  validate_field_size(q);
  if (!field.contains_subfield(q))
    throw InvalidArgument("GF(" + std::to_string(field.order()) + ") has no subfield of order " + std::to_string(q));
  return field.subfield_codes(q);
}

void check_system(std::span<const Polynomial> gens, const Field& field, std::size_t m) {
  for (const auto& g : gens) {
    if (!(g.field() == field)) throw ContextMismatch();
    if (g.num_vars() != m + 1) throw ContextMismatch("generator has the wrong variable count");
    if (!g.is_homogeneous()) throw InvalidArgument("generators must be homogeneous");
  }
}

template <class Fn>
void for_each_point(std::span<const Field::Code> fq, std::size_t m, Fn&& fn) {
  const std::size_t n = m + 1;
  ProjectivePoint pt{std::vector<Field::Code>(n, 0)};
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t lead = n; lead-- > 0;) {
    std::fill(pt.coords.begin(), pt.coords.end(), 0);
    pt.coords[lead] = 1;
    std::fill(digit.begin(), digit.end(), 0);
    while (true) {
      fn(pt);
      // Odometer over coordinates lead+1..m, last coordinate fastest.
      std::size_t k = n;
      while (k-- > lead + 1) {
        if (++digit[k] < fq.size()) {
          pt.coords[k] = fq[digit[k]];
          break;
        }
        digit[k] = 0;
        pt.coords[k] = fq[0];
      }
      if (k == lead) break;
    }
  }
}

void check_point_budget(std::uint64_t q, std::size_t m) {
  if (projective_space_size(static_cast<std::int64_t>(m), q) > kMaxProjectivePoints)
    throw CapacityError("P^" + std::to_string(m) + "(F_" + std::to_string(q) + ") exceeds 10^7 points");
}

std::uint64_t count_zeros(std::span<const Polynomial> gens, std::span<const Field::Code> fq, std::size_t m) {
  std::uint64_t count = 0;
  for_each_point(fq, m, [&](const ProjectivePoint& pt) {
    const bool zero = std::all_of(gens.begin(), gens.end(),
                                  [&pt](const Polynomial& g) { return g.evaluate(pt.coords) == 0; });
    if (zero) ++count;
  });
  return count;
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw CapacityError("integer overflow in 64-bit count");
    r *= base;
  }
  return r;
}

}  // namespace

std::vector<ProjectivePoint> enumerate_projective_points(const Field& field, std::uint64_t q, std::size_t m) {
  const auto fq = base_field_codes(field, q);
  check_point_budget(q, m);
  std::vector<ProjectivePoint> out;
  out.reserve(projective_space_size(static_cast<std::int64_t>(m), q));
  for_each_point(fq, m, [&out](const ProjectivePoint& pt) { out.push_back(pt); });
  return out;
}

std::uint64_t count_points_bruteforce(std::span<const Polynomial> gens, const Field& field, std::uint64_t q,
                                      std::size_t m) {
  check_system(gens, field, m);
  const auto fq = base_field_codes(field, q);
  check_point_budget(q, m);
  return count_zeros(gens, fq, m);
}

std::vector<Polynomial> normalize_system(std::span<const Polynomial> gens, std::uint64_t q, std::size_t m,
                                         const MonomialOrder& order) {
  validate_field_size(q);
  const std::uint64_t ceiling = static_cast<std::uint64_t>(m + 1) * (q - 1);
  std::vector<Polynomial> lowered;
  for (const auto& g : gens) {
    if (g.num_vars() != m + 1) throw ContextMismatch("generator has the wrong variable count");
    if (!g.is_homogeneous()) throw InvalidArgument("generators must be homogeneous");
    Polynomial f = reduce_polynomial(g, q);
    while (!f.is_zero() && *f.degree() > ceiling) {
      Polynomial next(f.field(), f.num_vars());
      for (const auto& [mu, c] : f.terms()) {
        std::size_t j = 0;
        while (j < mu.num_vars() && mu[j] < q) ++j;
        if (j == mu.num_vars()) throw InvariantViolation("reduced term of high degree has no exponent >= q");
        Monomial nu = mu;
        nu.set(j, mu[j] - (q - 1));
        next.add_term(nu, c);
      }
      f = reduce_polynomial(next, q);
    }
    if (!f.is_zero()) lowered.push_back(std::move(f));
  }

  // Leading-term elimination: a generator in the span of earlier ones reduces
  // to zero, and survivors end with pairwise distinct leading monomials.
  std::vector<Polynomial> out;
  std::map<Monomial, std::size_t> by_lm;
  for (auto& f : lowered) {
    while (!f.is_zero()) {
      const auto [lm, lc] = f.leading_term(order);
      const auto hit = by_lm.find(lm);
      if (hit == by_lm.end()) break;
      f -= out[hit->second].scale(lc);
    }
    if (f.is_zero()) continue;
    f = f.monic(order);
    by_lm.emplace(f.leading_monomial(order), out.size());
    out.push_back(std::move(f));
  }
  return out;
}

CountReport count_points_by_footprint(std::span<const Polynomial> gens, const Field& field, std::uint64_t q,
                                      std::size_t m, const MonomialOrder& order) {
  check_system(gens, field, m);
  const auto fq = base_field_codes(field, q);
  if (order.num_vars() != m + 1) throw ContextMismatch("order has the wrong variable count");

  CountReport report;
  std::vector<Polynomial> system(gens.begin(), gens.end());
  for (auto& phi : fermat_generators(q, m, field)) system.push_back(std::move(phi));
  const MonomialIdeal lt = leading_term_ideal(buchberger(system, order));
  report.footprint_constant = hilbert_polynomial_constant(lt);
  report.footprint_stabilization_degree = hilbert_stabilization_degree(lt);

  const auto normalized = normalize_system(gens, q, m, order);
  for (const auto& f : normalized) report.lm_set.push_back(f.leading_monomial(order));
  report.lm_bound = projective_fq_footprint_count(report.lm_set, q, m);

  std::vector<const Polynomial*> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(&g);
  if (nonzero.size() == 1 && m >= 1) {
    const std::uint32_t d = *nonzero.front()->degree();
    if (d >= 1 && d <= q) report.serre_bound = serre_bound(d, m, q);
  }

  if (projective_space_size(static_cast<std::int64_t>(m), q) <= kMaxProjectivePoints) {
    const std::uint64_t exact = count_zeros(gens, fq, m);
    report.exact_count = exact;
    report.exact_matches_footprint = exact == report.footprint_constant;
    report.exact_within_lm_bound = exact <= report.lm_bound;
    if (report.serre_bound) report.exact_within_serre = exact <= *report.serre_bound;
  }
  report.footprint_within_lm_bound = report.footprint_constant <= report.lm_bound;
  return report;
}

std::uint64_t serre_bound(std::uint64_t d, std::size_t m, std::uint64_t q) {
  validate_field_size(q);
  if (d < 1) throw InvalidArgument("serre_bound needs d >= 1");
  if (m < 1) throw InvalidArgument("serre_bound needs m >= 1");
  const std::uint64_t lead = ipow(q, m - 1);
  if (lead > std::numeric_limits<std::uint64_t>::max() / d) throw CapacityError("integer overflow in 64-bit count");
  return d * lead + projective_space_size(static_cast<std::int64_t>(m) - 2, q);
}

Polynomial extremal_hypersurface(std::uint64_t d, std::size_t m, const Field& field, std::uint64_t q) {
  const auto fq = base_field_codes(field, q);
  if (m < 1) throw InvalidArgument("extremal_hypersurface needs m >= 1");
  if (d < 1) throw InvalidArgument("extremal_hypersurface needs d >= 1");
  if (d > q) throw InvalidArgument("extremal_hypersurface needs d <= q");
  const std::size_t n = m + 1;
  Polynomial f = Polynomial::constant(field, n, 1);
  for (std::uint64_t i = 0; i < d; ++i) {
    Polynomial factor = Polynomial::variable(field, n, 1);
    factor.add_term(Monomial::variable(n, 0), field.neg(fq[i]));
    f = f * factor;
  }
  return f;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("bounded_draw needs n >= 1");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

Polynomial random_form(const Field& field, std::uint64_t q, std::size_t m, std::uint32_t d, std::mt19937_64& rng) {
  const auto fq = base_field_codes(field, q);
  const auto basis = monomials_of_degree(m + 1, d);
  while (true) {
    Polynomial f(field, m + 1);
    for (const auto& mu : basis) f.add_term(mu, fq[bounded_draw(rng, fq.size())]);
    if (!f.is_zero()) return f;
  }
}

namespace {

SerreAudit start_audit(const Field& field, std::uint64_t q, std::size_t m, std::uint64_t d) {
  SerreAudit audit;
  audit.q = q;
  audit.m = m;
  audit.d = d;
  audit.bound = serre_bound(d, m, q);
  const Polynomial extremal = extremal_hypersurface(d, m, field, q);
  audit.extremal_count = count_points_bruteforce(std::span(&extremal, 1), field, q, m);
  audit.extremal_attains = audit.extremal_count == audit.bound;
  audit.max_observed = audit.extremal_count;
  audit.all_within = audit.extremal_count <= audit.bound;
  return audit;
}

void audit_form(SerreAudit& audit, const Polynomial& f, std::span<const Field::Code> fq) {
  const std::uint64_t count = count_zeros(std::span(&f, 1), fq, audit.m);
  ++audit.forms_checked;
  audit.max_observed = std::max(audit.max_observed, count);
  if (count > audit.bound) audit.all_within = false;

  const std::size_t n = audit.m + 1;
  for (std::size_t j = 0; j < n; ++j)
    if (f.coefficient(Monomial::variable(n, j, audit.d)).code() != 0) return;
  const MonomialOrder order = MonomialOrder::grevlex(n);
  const Monomial nu = reduce_polynomial(f, audit.q).leading_monomial(order);
  const std::uint64_t need = (audit.q - audit.d + 1) * ipow(audit.q, audit.m - 1);
  ++audit.shadow_checked;
  if (shadow_count_closed_form(nu, audit.q, audit.m) < need) ++audit.shadow_failures;
}

}  // namespace

SerreAudit serre_audit(const Field& field, std::uint64_t q, std::size_t m, std::uint64_t d, std::uint64_t samples,
                       std::uint64_t seed) {
  const auto fq = base_field_codes(field, q);
  SerreAudit audit = start_audit(field, q, m, d);
  check_point_budget(q, m);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s)
    audit_form(audit, random_form(field, q, m, static_cast<std::uint32_t>(d), rng), fq);
  return audit;
}

SerreAudit serre_exhaustive(const Field& field, std::uint64_t q, std::size_t m, std::uint64_t d) {
  const auto fq = base_field_codes(field, q);
  SerreAudit audit = start_audit(field, q, m, d);
  check_point_budget(q, m);
  const auto basis = monomials_of_degree(m + 1, static_cast<std::uint32_t>(d));
  if (basis.size() > 64) throw CapacityError("exhaustive form sweep exceeds 10^6 forms");
  const std::uint64_t total = ipow(q, basis.size());
  if (total - 1 > kMaxExhaustiveForms) throw CapacityError("exhaustive form sweep exceeds 10^6 forms");
  std::vector<std::size_t> digit(basis.size(), 0);
  for (std::uint64_t k = 1; k < total; ++k) {
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < fq.size()) break;
      digit[i] = 0;
    }
    Polynomial f(field, m + 1);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], fq[digit[i]]);
    audit_form(audit, f, fq);
  }
  return audit;
}

}  // namespace fqp
