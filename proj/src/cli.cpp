#include "fqpoints/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>
#include <string_view>

#include "fqpoints/error.hpp"
#include "fqpoints/field.hpp"
#include "fqpoints/footprint.hpp"
#include "fqpoints/groebner.hpp"
#include "fqpoints/order.hpp"
#include "fqpoints/polynomial.hpp"
#include "fqpoints/projred.hpp"
#include "fqpoints/text.hpp"
#include "fqpoints/variety.hpp"

namespace fqp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Job {
  std::string command;
  std::uint32_t p = 2;
  std::uint32_t s = 1;
  std::uint64_t q = 0;  // 0: the order of GF(p^s)
  std::size_t m = 1;
  std::string order = "grevlex";
  std::vector<std::size_t> perm;
  std::vector<std::string> polynomials;
  bool add_gamma = false;
  std::string lms;
  std::optional<std::uint32_t> emax;
  std::uint64_t d = 1;
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  std::string families = "lex,grlex,grevlex";
  std::size_t max_perm_m = 2;
  std::string format = "json";
};

struct Context {
  Field field;
  std::uint64_t q;
  std::size_t m;
  MonomialOrder order;
};

struct Report {
  Json body = Json::object();
  std::vector<std::string> text;
  std::optional<std::string> violation;
};

Context make_context(const Job& job) {
  const Field field = Field::make(job.p, job.s);
  const std::uint64_t q = job.q == 0 ? field.order() : job.q;
  validate_field_size(q);
  if (!field.contains_subfield(q))
    throw InvalidArgument("--q " + std::to_string(q) + " is not the order of a subfield of GF(" +
                          std::to_string(field.order()) + ")");
  const OrderFamily family = parse_order_family(job.order);
  if (!job.perm.empty() && job.perm.size() != job.m + 1)
    throw InvalidArgument("--perm needs " + std::to_string(job.m + 1) + " entries");
  MonomialOrder order = job.perm.empty() ? MonomialOrder::identity(family, job.m + 1) : MonomialOrder(family, job.perm);
  return Context{field, q, job.m, std::move(order)};
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& raw, std::istream& in) {
  std::vector<std::string> out;
  for (const auto& text : raw) {
    if (text != "-") {
      out.push_back(text);
      continue;
    }
    std::string line;
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

std::vector<Polynomial> parse_inputs(const std::vector<std::string>& texts, const Context& ctx) {
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < texts.size(); ++k) {
    try {
      out.push_back(parse_polynomial(texts[k], ctx.field, ctx.m));
    } catch (const ParseError& e) {
      throw ParseError(e.position(), "polynomial " + std::to_string(k + 1) + " \"" + texts[k] + "\": " + e.detail());
    }
  }
  return out;
}

Json render_all(std::span<const Polynomial> polys, const MonomialOrder& order) {
  Json out = Json::array();
  for (const auto& f : polys) out.push_back(render_polynomial(f, order));
  return out;
}

Json render_all(std::span<const Monomial> monos) {
  Json out = Json::array();
  for (const auto& mu : monos) out.push_back(render_monomial(mu));
  return out;
}

Json job_json(const Job& job, const Context& ctx, const std::vector<std::string>& inputs) {
  Json j;
  j["command"] = job.command;
  j["p"] = job.p;
  j["s"] = job.s;
  j["q"] = ctx.q;
  j["m"] = ctx.m;
  j["order"] = std::string(to_string(ctx.order.family()));
  j["perm"] = ctx.order.permutation();
  j["polynomials"] = inputs;
  return j;
}

std::vector<Polynomial> with_gamma(std::vector<Polynomial> gens, const Context& ctx) {
  for (auto& phi : fermat_generators(ctx.q, ctx.m, ctx.field)) gens.push_back(std::move(phi));
  return gens;
}

Report do_reduce(const Context& ctx, const std::vector<Polynomial>& polys) {
  Report r;
  Json results = Json::array();
  for (const auto& f : polys) {
    const Polynomial fbar = reduce_polynomial(f, ctx.q);
    Json terms = Json::array();
    for (const auto& [mu, c] : f.sorted_terms(ctx.order)) {
      terms.push_back({{"monomial", render_monomial(mu)},
                       {"reduced", render_monomial(reduce_monomial(mu, ctx.q))},
                       {"weight", weight(mu, ctx.q)}});
    }
    results.push_back({{"input", render_polynomial(f, ctx.order)},
                       {"reduced", render_polynomial(fbar, ctx.order)},
                       {"is_reduced", is_reduced(f, ctx.q)},
                       {"in_gamma", fbar.is_zero()},
                       {"terms", std::move(terms)}});
    r.text.push_back(render_polynomial(fbar, ctx.order));
  }
  r.body["results"] = std::move(results);
  return r;
}

Report do_gamma(const Context& ctx) {
  Report r;
  const auto gens = fermat_generators(ctx.q, ctx.m, ctx.field);
  r.body["count"] = gens.size();
  r.body["generators"] = render_all(gens, ctx.order);
  for (const auto& g : gens) r.text.push_back(render_polynomial(g, ctx.order));
  return r;
}

Report do_groebner(const Job& job, const Context& ctx, std::vector<Polynomial> polys) {
  Report r;
  if (job.add_gamma) polys = with_gamma(std::move(polys), ctx);
  const GroebnerBasis gb = buchberger(polys, ctx.order);
  std::vector<Monomial> lms;
  for (const auto& g : gb.generators) lms.push_back(g.leading_monomial(ctx.order));
  const bool criterion = satisfies_buchberger_criterion(gb.generators, ctx.order);
  const bool reduced = is_reduced_basis(gb.generators, ctx.order);
  r.body["size"] = gb.generators.size();
  r.body["basis"] = render_all(gb.generators, ctx.order);
  r.body["leading_monomials"] = render_all(lms);
  r.body["criterion"] = criterion;
  r.body["reduced"] = reduced;
  for (const auto& g : gb.generators) r.text.push_back(render_polynomial(g, ctx.order));
  if (!criterion || !reduced) r.violation = "buchberger output failed its own Groebner basis checks";
  return r;
}

Report do_hilbert(const Job& job, const Context& ctx, std::vector<Polynomial> polys) {
  Report r;
  if (job.add_gamma) polys = with_gamma(std::move(polys), ctx);
  const std::uint32_t emax = job.emax.value_or(static_cast<std::uint32_t>(2 * (ctx.m + 1) * (ctx.q - 1)));
  const FootprintReport fr = hilbert_report(polys, ctx.order, emax);
  const MonomialIdeal lt = leading_term_ideal(buchberger(polys, ctx.order));
  Json table = Json::array();
  for (const auto& row : fr.table) {
    table.push_back({{"e", row.e}, {"hilbert", *row.h_value}, {"standard_monomials", row.delta_count}});
    r.text.push_back(std::to_string(row.e) + " " + std::to_string(*row.h_value) + " " + std::to_string(row.delta_count));
  }
  r.body["leading_term_ideal"] = render_all(lt.generators());
  r.body["table"] = std::move(table);
  r.body["method"] = std::string(to_string(fr.method));
  r.body["stabilized_constant"] = fr.stabilized_constant ? Json(*fr.stabilized_constant) : Json(nullptr);
  r.body["stabilization_degree"] = fr.stabilization_degree ? Json(*fr.stabilization_degree) : Json(nullptr);
  r.body["certificate"] = fr.certificate;
  return r;
}

Report do_footprint(const Job& job, const Context& ctx, const std::vector<Polynomial>& polys) {
  Report r;
  std::vector<Monomial> lms;
  if (!job.lms.empty()) {
    if (!polys.empty()) throw InvalidArgument("give either --lms or polynomials, not both");
    lms = parse_monomial_list(job.lms, ctx.m);
    r.body["source"] = "lms";
  } else {
    for (const auto& f : normalize_system(polys, ctx.q, ctx.m, ctx.order)) lms.push_back(f.leading_monomial(ctx.order));
    r.body["source"] = "generators";
  }
  const FootprintReport fr = projective_footprint_report(lms, ctx.q, ctx.m, job.emax.value_or(0));
  const std::uint64_t count = *fr.stabilized_constant;
  const std::uint64_t affine = affine_fq_footprint_count(lms, ctx.q, ctx.m + 1);
  r.body["lms"] = render_all(lms);
  r.body["count"] = count;
  r.body["method"] = std::string(to_string(fr.method));
  r.body["evaluation_degree"] = footprint_stabilization_degree(lms, ctx.q, ctx.m);
  r.body["stabilization_degree"] = *fr.stabilization_degree;
  r.body["certificate"] = fr.certificate;
  r.body["affine_count"] = affine;
  r.body["cone_bound"] = affine >= 1 ? Json(cone_to_projective_bound(affine, ctx.q)) : Json(nullptr);
  if (job.emax) {
    Json table = Json::array();
    for (const auto& row : fr.table) table.push_back({{"e", row.e}, {"footprint", row.delta_count}});
    r.body["table"] = std::move(table);
  }
  r.text.push_back(std::to_string(count));
  return r;
}

Report do_count(const Context& ctx, const std::vector<Polynomial>& polys) {
  Report r;
  const CountReport cr = count_points_by_footprint(polys, ctx.field, ctx.q, ctx.m, ctx.order);
  r.body["exact_count"] = cr.exact_count ? Json(*cr.exact_count) : Json(nullptr);
  r.body["brute_force"] = cr.exact_count ? "done" : "skipped";
  r.body["footprint_constant"] = cr.footprint_constant;
  r.body["footprint_stabilization_degree"] = cr.footprint_stabilization_degree;
  r.body["lm_set"] = render_all(cr.lm_set);
  r.body["lm_bound"] = cr.lm_bound;
  r.body["serre_bound"] = cr.serre_bound ? Json(*cr.serre_bound) : Json(nullptr);
  r.body["agreement"] = {{"exact_matches_footprint", cr.exact_matches_footprint},
                         {"exact_within_lm_bound", cr.exact_within_lm_bound},
                         {"exact_within_serre", cr.exact_within_serre},
                         {"footprint_within_lm_bound", cr.footprint_within_lm_bound}};
  r.text.push_back(std::to_string(cr.exact_count.value_or(cr.footprint_constant)));
  if (!cr.exact_matches_footprint || !cr.exact_within_lm_bound || !cr.exact_within_serre ||
      !cr.footprint_within_lm_bound)
    r.violation = "point count routes disagree";
  return r;
}

Report do_serre(const Job& job, const Context& ctx) {
  Report r;
  const SerreAudit audit = job.exhaustive ? serre_exhaustive(ctx.field, ctx.q, ctx.m, job.d)
                                          : serre_audit(ctx.field, ctx.q, ctx.m, job.d, job.samples, job.seed);
  const Polynomial extremal = extremal_hypersurface(job.d, ctx.m, ctx.field, ctx.q);
  r.body["d"] = job.d;
  r.body["bound"] = audit.bound;
  r.body["extremal"] = render_polynomial(extremal, ctx.order);
  r.body["extremal_count"] = audit.extremal_count;
  r.body["extremal_attains"] = audit.extremal_attains;
  Json a;
  a["mode"] = job.exhaustive ? "exhaustive" : "random";
  if (!job.exhaustive) a["seed"] = job.seed;
  a["forms_checked"] = audit.forms_checked;
  a["max_observed"] = audit.max_observed;
  a["all_within"] = audit.all_within;
  a["shadow_checked"] = audit.shadow_checked;
  a["shadow_failures"] = audit.shadow_failures;
  r.body["audit"] = std::move(a);
  r.text.push_back("bound " + std::to_string(audit.bound));
  r.text.push_back("max_observed " + std::to_string(audit.max_observed));
  if (!audit.all_within || !audit.extremal_attains) r.violation = "Serre bound check failed";
  return r;
}

Report do_certify(const Job& job, const Context& ctx) {
  Report r;
  std::vector<OrderFamily> families;
  std::stringstream ss(job.families);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    families.push_back(parse_order_family(item.substr(b, e - b + 1)));
  }
  if (families.empty()) throw InvalidArgument("--families is empty");
  const UniversalCertification cert = certify_universal_fermat(ctx.q, ctx.m, ctx.field, families, job.max_perm_m);
  Json cases = Json::array();
  for (const auto& c : cert.cases)
    cases.push_back({{"family", std::string(to_string(c.family))},
                     {"permutation", c.permutation},
                     {"matches", c.matches},
                     {"basis_size", c.basis_size}});
  r.body["certified"] = cert.certified;
  r.body["scope"] = cert.scope;
  r.body["all_permutations"] = cert.all_permutations;
  r.body["cases"] = std::move(cases);
  r.text.push_back(cert.certified ? "certified" : "not certified");
  r.text.push_back(cert.scope);
  if (!cert.certified) r.violation = "Fermat generators are not a Groebner basis for every swept order";
  return r;
}

void add_common(CLI::App* sub, Job& job) {
  sub->add_option("--p", job.p, "field characteristic")->required();
  sub->add_option("--s", job.s, "extension degree")->capture_default_str();
  sub->add_option("--m", job.m, "projective dimension (variables x0..xm)")->required();
  sub->add_option("--q", job.q, "order of the base field F_q (default: p^s)");
  sub->add_option("--order", job.order, "lex | grlex | grevlex")->capture_default_str();
  sub->add_option("--perm", job.perm, "variable ranking, largest first")->delimiter(',');
  sub->add_option("--format", job.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_polys(CLI::App* sub, Job& job) {
  sub->add_option("polynomials", job.polynomials, "polynomials; '-' reads one per line from stdin");
}

}  // namespace

Outcome run(const std::vector<std::string>& args, std::istream& in) {
  Outcome outcome;
  Job job;
  CLI::App app{"Rational point counts of projective varieties over finite fields", "fqpoints"};
  app.require_subcommand(1);

  auto* reduce = app.add_subcommand("reduce", "projective reduction and weights");
  add_common(reduce, job);
  add_polys(reduce, job);

  auto* gamma = app.add_subcommand("gamma", "Fermat generators of the vanishing ideal");
  add_common(gamma, job);

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis");
  add_common(groebner, job);
  add_polys(groebner, job);
  groebner->add_flag("--add-gamma", job.add_gamma, "append the Fermat generators");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table by two methods");
  add_common(hilbert, job);
  add_polys(hilbert, job);
  hilbert->add_flag("--add-gamma", job.add_gamma, "append the Fermat generators");
  hilbert->add_option("--emax", job.emax, "largest degree in the table (default 2(m+1)(q-1))");

  auto* footprint = app.add_subcommand("footprint", "projective F_q-footprint count");
  add_common(footprint, job);
  add_polys(footprint, job);
  footprint->add_option("--lms", job.lms, "comma-separated leading monomials");
  footprint->add_option("--emax", job.emax, "also tabulate degrees 0..emax");

  auto* count = app.add_subcommand("count", "rational point count by brute force and footprint");
  add_common(count, job);
  add_polys(count, job);

  auto* serre = app.add_subcommand("serre", "Serre bound, extremal hypersurface and audit");
  add_common(serre, job);
  serre->add_option("--d", job.d, "degree of the forms")->required();
  serre->add_option("--samples", job.samples, "random forms to audit")->capture_default_str();
  serre->add_option("--seed", job.seed, "seed of the form generator")->capture_default_str();
  serre->add_flag("--exhaustive", job.exhaustive, "audit every nonzero form instead of samples");

  auto* certify = app.add_subcommand("certify-universal", "universal Groebner basis sweep of the Fermat generators");
  add_common(certify, job);
  certify->add_option("--families", job.families, "comma-separated order families")->capture_default_str();
  certify->add_option("--max-perm-m", job.max_perm_m, "sweep all rankings when m is at most this")
      ->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("fqpoints");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());

  std::ostringstream out, err;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    outcome.out = out.str();
    outcome.err = err.str();
    outcome.status = code == 0 ? kOk : kUsage;
    return outcome;
  }
  job.command = app.get_subcommands().front()->get_name();

  try {
    const Context ctx = make_context(job);
    const auto inputs = expand_inputs(job.polynomials, in);
    const auto polys = parse_inputs(inputs, ctx);
    Report report;
    if (job.command == "reduce") report = do_reduce(ctx, polys);
    else if (job.command == "gamma") report = do_gamma(ctx);
    else if (job.command == "groebner") report = do_groebner(job, ctx, polys);
    else if (job.command == "hilbert") report = do_hilbert(job, ctx, polys);
    else if (job.command == "footprint") report = do_footprint(job, ctx, polys);
    else if (job.command == "count") report = do_count(ctx, polys);
    else if (job.command == "serre") report = do_serre(job, ctx);
    else report = do_certify(job, ctx);

    if (job.format == "json") {
      Json doc;
      doc["schema"] = 1;
      doc["job"] = job_json(job, ctx, inputs);
      Json& jj = doc["job"];
      if (job.command == "groebner" || job.command == "hilbert") jj["add_gamma"] = job.add_gamma;
      if (job.command == "hilbert" || job.command == "footprint") jj["emax"] = job.emax ? Json(*job.emax) : Json(nullptr);
      if (job.command == "footprint") jj["lms"] = job.lms;
      if (job.command == "serre") {
        jj["d"] = job.d;
        jj["samples"] = job.samples;
        jj["seed"] = job.seed;
        jj["exhaustive"] = job.exhaustive;
      }
      if (job.command == "certify-universal") {
        jj["families"] = job.families;
        jj["max_perm_m"] = job.max_perm_m;
      }
      for (auto& [key, value] : report.body.items()) doc[key] = value;
      out << doc.dump(2) << '\n';
    } else {
      for (const auto& line : report.text) out << line << '\n';
    }
    if (report.violation) {
      err << "invariant violation: " << *report.violation << '\n';
      outcome.status = kInvariant;
    }
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    outcome.status = kInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    outcome.status = kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    outcome.status = kInvariant;
  }
  outcome.out = out.str();
  outcome.err = err.str();
  return outcome;
}

}  // namespace fqp::cli
