#include "fqpoints/footprint.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "fqpoints/error.hpp"
#include "fqpoints/projred.hpp"

namespace fqp {

namespace {

__extension__ using Wide = __int128;

constexpr std::uint64_t kMaxEnumeration = 10'000'000;

std::uint64_t narrow_count(Wide v) {
  if (v < 0 || v > static_cast<Wide>(std::numeric_limits<std::uint64_t>::max()))
    throw InvariantViolation("inclusion-exclusion total out of range");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw CapacityError("integer overflow in 64-bit count");
  return a * b;
}

// Monomials of degree e in n variables.
std::uint64_t degree_slice_size(std::size_t n, std::int64_t e) {
  if (n == 0) return e == 0 ? 1 : 0;
  if (e < 0) return 0;
  return binomial(static_cast<std::uint64_t>(e) + n - 1, n - 1);
}

void check_vars(std::span<const Monomial> lms, std::size_t n) {
  for (const auto& mu : lms)
    if (mu.num_vars() != n) throw ContextMismatch("monomial has the wrong variable count");
}

std::uint32_t max_degree(std::span<const Monomial> lms) {
  std::uint32_t d = 0;
  for (const auto& mu : lms) d = std::max(d, mu.degree());
  return d;
}

}  // namespace

std::uint64_t hilbert_by_linear_algebra(std::span<const Polynomial> gens, std::size_t num_vars,
                                        std::uint32_t e) {
  const auto slice = monomials_of_degree(num_vars, e);
  const std::size_t width = slice.size();
  const Polynomial* first = nullptr;
  for (const auto& g : gens) {
    if (g.num_vars() != num_vars) throw ContextMismatch("generator has the wrong variable count");
    if (!g.is_homogeneous()) throw InvalidArgument("hilbert_by_linear_algebra needs homogeneous generators");
    if (first && !(first->field() == g.field())) throw ContextMismatch();
    if (!g.is_zero() && !first) first = &g;
  }
  if (!first) return width;

  const Field& field = first->field();
  std::map<Monomial, std::size_t> column;
  for (std::size_t i = 0; i < width; ++i) column.emplace(slice[i], i);

  using Row = std::vector<Field::Code>;
  std::vector<Row> pivot(width);
  std::vector<bool> has_pivot(width, false);
  std::uint64_t rank = 0;

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const std::uint32_t d = *g.degree();
    if (d > e) continue;
    for (const auto& mu : monomials_of_degree(num_vars, e - d)) {
      Row row(width, 0);
      for (const auto& [nu, c] : g.terms()) row[column.at(mu * nu)] = c;
      for (std::size_t col = 0; col < width; ++col) {
        if (row[col] == 0) continue;
        if (has_pivot[col]) {
          const Field::Code f = row[col];
          const Row& p = pivot[col];
          for (std::size_t k = col; k < width; ++k)
            if (p[k] != 0) row[k] = field.sub(row[k], field.mul(f, p[k]));
          continue;
        }
        const Field::Code inv = field.inv(row[col]);
        for (std::size_t k = col; k < width; ++k) row[k] = field.mul(row[k], inv);
        pivot[col] = std::move(row);
        has_pivot[col] = true;
        ++rank;
        break;
      }
      if (rank == width) return 0;
    }
  }
  return width - rank;
}

std::uint64_t standard_monomial_count(const MonomialIdeal& lt, std::uint32_t e) {
  const std::size_t n = lt.num_vars();
  const auto& gens = lt.generators();
  if (gens.size() > kInclusionExclusionCap) {
    const auto slice = monomials_of_degree(n, e);
    if (slice.size() > kMaxEnumeration) throw CapacityError("standard monomial enumeration exceeds 10^7");
    return static_cast<std::uint64_t>(
        std::count_if(slice.begin(), slice.end(), [&lt](const Monomial& mu) { return !lt.contains(mu); }));
  }
  Wide total = degree_slice_size(n, e);
  auto dfs = [&](auto&& self, std::size_t start, const Monomial& acc, bool odd) -> void {
    for (std::size_t i = start; i < gens.size(); ++i) {
      const Monomial l = lcm(acc, gens[i]);
      if (l.degree() > e) continue;  // every superset has an lcm at least this large
      const bool now_odd = !odd;
      const Wide term = degree_slice_size(n, static_cast<std::int64_t>(e) - l.degree());
      total += now_odd ? -term : term;
      self(self, i + 1, l, now_odd);
    }
  };
  dfs(dfs, 0, Monomial(n), false);
  return narrow_count(total);
}

namespace {

std::uint32_t lcm_degree_all(const MonomialIdeal& lt) {
  Monomial acc(lt.num_vars());
  for (const auto& g : lt.generators()) acc = lcm(acc, g);
  return acc.degree();
}

}  // namespace

std::uint64_t hilbert_polynomial_constant(const MonomialIdeal& lt) {
  const std::uint32_t start = lcm_degree_all(lt);
  const std::size_t points = std::max<std::size_t>(3, lt.num_vars());
  const std::uint64_t value = standard_monomial_count(lt, start);
  for (std::size_t k = 1; k < points; ++k) {
    const std::uint64_t next = standard_monomial_count(lt, start + static_cast<std::uint32_t>(k));
    if (next != value)
      throw PositiveDimension("Hilbert polynomial is not constant (" + std::to_string(value) + " at degree " +
                              std::to_string(start) + ", " + std::to_string(next) + " at degree " +
                              std::to_string(start + k) + ")");
  }
  return value;
}

std::uint32_t hilbert_stabilization_degree(const MonomialIdeal& lt) {
  const std::uint64_t c = hilbert_polynomial_constant(lt);
  std::uint32_t e0 = lcm_degree_all(lt);
  while (e0 > 0 && standard_monomial_count(lt, e0 - 1) == c) --e0;
  return e0;
}

std::uint64_t projective_fq_footprint_at(std::span<const Monomial> lms, std::uint64_t q, std::size_t m,
                                         std::uint32_t e) {
  check_vars(lms, m + 1);
  const MonomialIdeal ideal(m + 1, std::vector<Monomial>(lms.begin(), lms.end()));
  std::uint64_t count = 0;
  for (const auto& mu : enumerate_reduced_monomials(q, m, e))
    if (!ideal.contains(mu)) ++count;
  return count;
}

std::uint32_t footprint_stabilization_degree(std::span<const Monomial> lms, std::uint64_t q, std::size_t m) {
  validate_field_size(q);
  const std::uint64_t e = static_cast<std::uint64_t>(m + 1) * (q - 1) + max_degree(lms) + 1;
  if (e >= std::numeric_limits<Exponent>::max()) throw CapacityError("stabilization degree exceeds exponent range");
  return static_cast<std::uint32_t>(e);
}

std::uint64_t projective_fq_footprint_count(std::span<const Monomial> lms, std::uint64_t q, std::size_t m) {
  const std::uint32_t e = footprint_stabilization_degree(lms, q, m);
  const std::uint64_t at = projective_fq_footprint_at(lms, q, m, e);
  const std::uint64_t next = projective_fq_footprint_at(lms, q, m, e + 1);
  if (at != next)
    throw InvariantViolation("projective footprint did not stabilize: " + std::to_string(at) + " vs " +
                             std::to_string(next));
  return at;
}

std::uint64_t shadow_count_closed_form(const Monomial& nu, std::uint64_t q, std::size_t m) {
  validate_field_size(q);
  if (nu.num_vars() != m + 1) throw ContextMismatch("monomial has the wrong variable count");
  if (nu.degree() == 0) throw InvalidArgument("shadow_count_closed_form needs degree >= 1");
  if (!is_reduced(nu, q)) throw InvalidArgument("shadow_count_closed_form needs a reduced monomial");
  const std::size_t ell = *nu.top_variable();
  auto clamp = [q](std::uint64_t b) -> std::uint64_t { return b >= q ? 0 : q - b; };
  std::uint64_t prefix = 1;
  for (std::size_t i = 0; i < ell; ++i) prefix = checked_mul(prefix, clamp(nu[i]));
  const std::uint64_t tail =
      checked_mul(clamp(nu[ell]), projective_space_size(static_cast<std::int64_t>(m) - static_cast<std::int64_t>(ell) - 1, q));
  return checked_mul(prefix, 1 + tail);
}

std::uint64_t affine_fq_footprint_count(std::span<const Monomial> lms, std::uint64_t q, std::size_t num_vars) {
  validate_field_size(q);
  check_vars(lms, num_vars);
  const MonomialIdeal ideal(num_vars, std::vector<Monomial>(lms.begin(), lms.end()));
  const auto& gens = ideal.generators();

  // Monomials in the box [0, q-1]^n divisible by mu.
  auto box_multiples = [&](const Monomial& mu) -> std::uint64_t {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (mu[i] >= q) return 0;
      r = checked_mul(r, q - mu[i]);
    }
    return r;
  };

  if (gens.size() > kInclusionExclusionCap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < num_vars; ++i) total = checked_mul(total, q);
    if (total > kMaxEnumeration) throw CapacityError("affine footprint enumeration exceeds 10^7");
    std::uint64_t count = 0;
    Monomial mu(num_vars);
    for (std::uint64_t k = 0; k < total; ++k) {
      std::uint64_t rest = k;
      for (std::size_t i = 0; i < num_vars; ++i) {
        mu.set(i, rest % q);
        rest /= q;
      }
      if (!ideal.contains(mu)) ++count;
    }
    return count;
  }

  Wide total = box_multiples(Monomial(num_vars));
  auto dfs = [&](auto&& self, std::size_t start, const Monomial& acc, bool odd) -> void {
    for (std::size_t i = start; i < gens.size(); ++i) {
      const Monomial l = lcm(acc, gens[i]);
      const std::uint64_t term = box_multiples(l);
      if (term == 0) continue;  // supersets stay outside the box
      const bool now_odd = !odd;
      total += now_odd ? -Wide(term) : Wide(term);
      self(self, i + 1, l, now_odd);
    }
  };
  dfs(dfs, 0, Monomial(num_vars), false);
  return narrow_count(total);
}

std::uint64_t cone_to_projective_bound(std::uint64_t affine_count, std::uint64_t q) {
  validate_field_size(q);
  if (affine_count < 1) throw InvalidArgument("affine count must be at least 1");
  return (affine_count - 1) / (q - 1);
}

std::string_view to_string(FootprintMethod method) {
  switch (method) {
    case FootprintMethod::GbExact: return "gb-exact";
    case FootprintMethod::LmBound: return "lm-bound";
    case FootprintMethod::ClosedForm: return "closed-form";
  }
  return "unknown";
}

FootprintReport hilbert_report(std::span<const Polynomial> gens, const MonomialOrder& order, std::uint32_t emax) {
  const std::size_t n = order.num_vars();
  const GroebnerBasis gb = buchberger(gens, order);
  const MonomialIdeal lt = leading_term_ideal(gb);

  FootprintReport report;
  report.method = FootprintMethod::GbExact;
  for (std::uint32_t e = 0; e <= emax; ++e) {
    const std::uint64_t h = hilbert_by_linear_algebra(gens, n, e);
    const std::uint64_t delta = standard_monomial_count(lt, e);
    if (h != delta)
      throw InvariantViolation("Hilbert function " + std::to_string(h) + " differs from standard monomial count " +
                               std::to_string(delta) + " at degree " + std::to_string(e));
    report.table.push_back({e, h, delta});
  }
  try {
    report.stabilized_constant = hilbert_polynomial_constant(lt);
    report.stabilization_degree = hilbert_stabilization_degree(lt);
    const std::uint32_t l = lcm_degree_all(lt);
    report.certificate = "plateau: standard monomial count constant on degrees " + std::to_string(l) + ".." +
                         std::to_string(l + std::max<std::size_t>(3, n) - 1) + " past the lcm degree";
  } catch (const PositiveDimension&) {
    report.certificate = "none: Hilbert polynomial is not constant";
  }
  return report;
}

FootprintReport projective_footprint_report(std::span<const Monomial> lms, std::uint64_t q, std::size_t m,
                                            std::uint32_t emax) {
  FootprintReport report;
  report.method = FootprintMethod::LmBound;
  for (std::uint32_t e = 0; e <= emax; ++e) report.table.push_back({e, std::nullopt, projective_fq_footprint_at(lms, q, m, e)});
  const std::uint32_t star = footprint_stabilization_degree(lms, q, m);
  const std::uint64_t c = projective_fq_footprint_count(lms, q, m);
  std::uint32_t e0 = star;
  while (e0 > 0 && projective_fq_footprint_at(lms, q, m, e0 - 1) == c) --e0;
  report.stabilized_constant = c;
  report.stabilization_degree = e0;
  report.certificate = "plateau: equal counts at degrees " + std::to_string(star) + " and " + std::to_string(star + 1);
  return report;
}

}  // namespace fqp
