#include "fqpoints/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "fqpoints/division.hpp"
#include "fqpoints/error.hpp"
#include "fqpoints/projred.hpp"

namespace fqp {

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    return std::make_tuple(a.degree(), std::cref(a)) < std::make_tuple(b.degree(), std::cref(b));
  });
  for (auto& g : generators) {
    if (g.num_vars() != num_vars) throw ContextMismatch("monomial has the wrong variable count");
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&g](const Monomial& h) { return h.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
}

bool MonomialIdeal::contains(const Monomial& mu) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&mu](const Monomial& g) { return g.divides(mu); });
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("S-polynomial of the zero polynomial");
  const Field& field = f.field();
  const auto [lmf, lcf] = f.leading_term(order);
  const auto [lmg, lcg] = g.leading_term(order);
  const Monomial l = lcm(lmf, lmg);
  return f.mul_term(l / lmf, field.inv(lcf.code())) - g.mul_term(l / lmg, field.inv(lcg.code()));
}

namespace {

struct Pair {
  std::uint32_t lcm_degree;
  std::size_t index;
  std::size_t i, j;
  bool operator<(const Pair& o) const { return std::tie(lcm_degree, index) < std::tie(o.lcm_degree, o.index); }
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& g : basis) lms.push_back(g.leading_monomial(order));

  // Drop generators whose leading monomial is a multiple of another's (first wins on ties).
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_lms;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !lms[j].divides(lms[i])) continue;
      redundant = lms[j] != lms[i] || j < i;
    }
    if (!redundant) {
      minimal.push_back(std::move(basis[i]));
      minimal_lms.push_back(lms[i]);
    }
  }

  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce_by(minimal[i], others, order).monic(order);
  }

  std::vector<std::size_t> idx(minimal.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return order.less(minimal_lms[a], minimal_lms[b]); });
  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (auto k : idx) out.push_back(std::move(minimal[k]));
  return out;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  std::vector<Monomial> lms;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!basis.empty() && !(g.field() == basis.front().field())) throw ContextMismatch();
    if (g.num_vars() != order.num_vars()) throw ContextMismatch("order and polynomial variable counts differ");
    basis.push_back(g.monic(order));
    lms.push_back(basis.back().leading_monomial(order));
  }

  std::set<Pair> pairs;
  std::size_t next_index = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.insert({lcm(lms[i], lms[j]).degree(), next_index++, i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    const Pair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    if (coprime(lms[pair.i], lms[pair.j])) continue;
    Polynomial r = reduce_by(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    lms.push_back(basis.back().leading_monomial(order));
    add_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis{interreduce(std::move(basis), order), order, true};
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce_by(s_polynomial(basis[i], basis[j], order), basis, order).is_zero()) return false;
  return true;
}

bool is_reduced_basis(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& g : basis) {
    if (g.is_zero()) return false;
    auto [lm, lc] = g.leading_term(order);
    if (!lc.is_one()) return false;
    lms.push_back(lm);
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& [mu, c] : basis[i].terms())
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i && lms[j].divides(mu)) return false;
  return true;
}

MonomialIdeal leading_term_ideal(std::span<const Polynomial> basis, const MonomialOrder& order) {
  std::vector<Monomial> lms;
  for (const auto& g : basis)
    if (!g.is_zero()) lms.push_back(g.leading_monomial(order));
  return MonomialIdeal(order.num_vars(), std::move(lms));
}

MonomialIdeal leading_term_ideal(const GroebnerBasis& gb) { return leading_term_ideal(gb.generators, gb.order); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce_by(f, gb.generators, gb.order);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb).is_zero(); }

UniversalCertification certify_universal_fermat(std::uint64_t q, std::size_t m, const Field& field,
                                                std::span<const OrderFamily> families,
                                                std::size_t max_perm_m) {
  UniversalCertification report;
  report.q = q;
  report.m = m;
  report.all_permutations = m <= max_perm_m;
  const auto fermat = fermat_generators(q, m, field);

  std::string names;
  for (auto f : families) names += (names.empty() ? "" : ", ") + std::string(to_string(f));
  report.scope = "families {" + names + "} x " +
                 (report.all_permutations ? "all variable rankings" : "identity ranking only");

  bool all_ok = !families.empty();
  for (auto family : families) {
    std::vector<std::size_t> perm(m + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const MonomialOrder order(family, perm);
      const GroebnerBasis gb = buchberger(fermat, order);
      std::vector<Polynomial> expected;
      for (const auto& phi : fermat) expected.push_back(phi.monic(order));
      std::sort(expected.begin(), expected.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_monomial(order), b.leading_monomial(order));
      });
      UniversalCase c{family, perm, gb.generators == expected, gb.generators.size()};
      all_ok = all_ok && c.matches;
      report.cases.push_back(std::move(c));
    } while (report.all_permutations && std::next_permutation(perm.begin(), perm.end()));
  }
  report.certified = all_ok;
  return report;
}

}  // namespace fqp
