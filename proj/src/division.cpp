#include "fqpoints/division.hpp"

#include <map>

#include "fqpoints/error.hpp"

namespace fqp {

namespace {

using Code = Field::Code;

struct Divisor {
  Monomial lead;
  Code lead_inv;
  std::vector<std::pair<Monomial, Code>> terms;
};

std::vector<Divisor> prepare(const Polynomial& f, std::span<const Polynomial> divisors,
                             const MonomialOrder& order) {
  std::vector<Divisor> out;
  out.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (!(d.field() == f.field()) || d.num_vars() != f.num_vars()) throw ContextMismatch();
    auto [lm, lc] = d.leading_term(order);
    out.push_back({lm, f.field().inv(lc.code()), {d.terms().begin(), d.terms().end()}});
  }
  return out;
}

using Working = std::map<Monomial, Code, OrderLess>;

std::optional<std::size_t> first_divisor(const std::vector<Divisor>& divs, const Monomial& m) {
  for (std::size_t j = 0; j < divs.size(); ++j)
    if (divs[j].lead.divides(m)) return j;
  return std::nullopt;
}

// w -= factor * shift * divisor
void subtract(Working& w, const Field& field, const Divisor& d, const Monomial& shift, Code factor) {
  for (const auto& [m, c] : d.terms) {
    const Code delta = field.neg(field.mul(factor, c));
    auto [it, inserted] = w.try_emplace(m * shift, delta);
    if (inserted) continue;
    it->second = field.add(it->second, delta);
    if (it->second == 0) w.erase(it);
  }
}

template <bool kTrackQuotients>
DivisionResult run_division(const Polynomial& f, std::span<const Polynomial> divisors,
                            const MonomialOrder& order) {
  const Field& field = f.field();
  const auto divs = prepare(f, divisors, order);
  Working w(OrderLess{&order});
  for (const auto& [m, c] : f.terms()) w.emplace(m, c);

  DivisionResult result{{}, Polynomial(field, f.num_vars())};
  if constexpr (kTrackQuotients) result.quotients.assign(divs.size(), Polynomial(field, f.num_vars()));

  while (!w.empty()) {
    auto top = std::prev(w.end());
    const Monomial m = top->first;
    const Code c = top->second;
    if (auto j = first_divisor(divs, m)) {
      const Code factor = field.mul(c, divs[*j].lead_inv);
      const Monomial shift = m / divs[*j].lead;
      if constexpr (kTrackQuotients) result.quotients[*j].add_term(shift, factor);
      subtract(w, field, divs[*j], shift, factor);
    } else {
      result.remainder.add_term(m, c);
      w.erase(top);
    }
  }
  return result;
}

}  // namespace

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrder& order) {
  return run_division<true>(f, divisors, order);
}

Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors,
                     const MonomialOrder& order) {
  return run_division<false>(f, divisors, order).remainder;
}

std::optional<Polynomial> division_step(const Polynomial& f, std::span<const Polynomial> divisors,
                                        const MonomialOrder& order) {
  const auto divs = prepare(f, divisors, order);
  for (const auto& [m, c] : f.sorted_terms(order)) {
    auto j = first_divisor(divs, m);
    if (!j) continue;
    const Field& field = f.field();
    Working w(OrderLess{&order});
    for (const auto& [n, d] : f.terms()) w.emplace(n, d);
    subtract(w, field, divs[*j], m / divs[*j].lead, field.mul(c, divs[*j].lead_inv));
    Polynomial out(field, f.num_vars());
    for (const auto& [n, d] : w) out.add_term(n, d);
    return out;
  }
  return std::nullopt;
}

}  // namespace fqp
