// gform-lab: command-line front end for the exact library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gformlab/error.hpp"
#include "gformlab/gforms.hpp"
#include "gformlab/json_io.hpp"
#include "gformlab/propcheck.hpp"
#include "gformlab/resolvends.hpp"
#include "gformlab/stickelberger.hpp"

using namespace gformlab;
using nlohmann::json;
using json_io::encode;

namespace {

struct Output {
  bool as_json = false;
  std::string out;
};

// Writes the report to --out (always JSON) and to stdout (JSON or summary).
void emit(const Output& o, const json& report, const std::string& summary) {
  if (!o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw Error("cannot open '" + o.out + "' for writing");
    f << report.dump(2) << "\n";
  }
  if (o.as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << summary;
}

std::string summarize_checks(const json& checks) {
  std::ostringstream s;
  for (auto& [k, v] : checks.items()) s << "  " << k << ": " << (v.get<bool>() ? "ok" : "FAILED") << "\n";
  return s.str();
}

int cmd_stickelberger(const std::string& spec, const Output& o) {
  const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
  json pairs = json::array();
  for (const auto& chi : enumerate_characters(g))
    for (const auto& s : enumerate(g))
      pairs.push_back({{"chi", chi.exponents},
                       {"s", s.exponents},
                       {"upsilon", upsilon(g, chi, s)},
                       {"pairing", pairing(g, chi, s).get_str()}});
  const auto basis = s_hat_basis(g);
  json basis_json = json::array();
  bool basis_ok = true;
  for (const auto& psi : basis) {
    basis_json.push_back(psi.coeffs);
    basis_ok = basis_ok && integrality_check(g, psi) && determinant(g, psi) == g.trivial_character();
  }
  const auto units = subgroup_closure(unit_group_generators(g.exponent()), g.exponent());
  json checks{{"basis_in_kernel_and_integral", basis_ok},
              {"equivariance", equivariance_check(g, units)},
              {"image_selfdual_constant_map", image_selfdual_check(EquivariantMap::constant_one(g))}};
  json report{{"group", g.to_string()}, {"pairs", pairs}, {"s_hat_basis", basis_json}, {"checks", checks}};
  std::ostringstream s;
  s << "group " << g.to_string() << ": " << pairs.size() << " pairs, S basis of size " << basis.size() << "\n"
    << summarize_checks(checks);
  emit(o, report, s.str());
  return all_true(checks) ? 0 : 1;
}

int cmd_field(std::int64_t p, std::int64_t f, const Output& o) {
  const FieldPtr k = PeriodField::build(p, f);
  json periods = json::array();
  for (const auto& e : k->periods()) periods.push_back(encode(e));
  json table = json::array();
  for (const auto& row : k->multiplication_table()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(encode(v));
    table.push_back(r);
  }
  const json checks = field_invariant_checks(k);
  json report{{"field", k->name()},
              {"degree", p},
              {"conductor", f},
              {"generator_residue", k->generator_residue()},
              {"periods", periods},
              {"mult_table", table},
              {"gram", encode(k->trace_matrix())},
              {"integral_basis", encode(k->integral_basis())},
              {"discriminant", k->discriminant().get_str()},
              {"different_hnf", encode(different(k))},
              {"A_hnf", encode(sqrt_inverse_different(k))},
              {"checks", checks}};
  emit(o, report, k->name() + " discriminant " + k->discriminant().get_str() + "\n" + summarize_checks(checks));
  return all_true(checks) ? 0 : 1;
}

int cmd_selfdual(std::int64_t p, std::int64_t f, const Output& o) {
  const HomToG h(PeriodField::build(p, f), 1);
  const GForm form = gform_from_A(h);
  const auto w = find_self_dual_generator(form);
  json report{{"field", h.field->name()}, {"lattice", form.label}};
  std::string summary;
  bool ok = false;
  if (!w) {
    report["witness_coords"] = nullptr;
    report["gram_check"] = false;
    report["lattice_check"] = false;
    summary = h.field->name() + ": no self-dual generator of A found\n";
  } else {
    const IntMatrix& c = w->change_of_basis;
    // Gram of the translates in the lattice basis must be the identity.
    const RatMatrix cq = to_rational(c);
    const RatMatrix t = cq.transpose() * form.gram * cq;
    const bool gram_check = t == RatMatrix::identity(t.rows());
    const bool lattice_check = verify_witness(form, w->coords);
    ok = gram_check && lattice_check;
    report["witness_coords"] = encode(w->coords);
    report["witness_periods"] = encode(to_field(form, w->coords));
    report["gram_check"] = gram_check;
    report["lattice_check"] = lattice_check;
    report["norm_one_vectors"] = w->norm_one_vectors;
    report["multiplicity"] = w->multiplicity;
    summary = h.field->name() + ": witness " + report["witness_coords"].dump() + (ok ? " verified\n" : " FAILED\n");
  }
  emit(o, report, summary);
  return ok ? 0 : 1;
}

int cmd_compose(std::int64_t p, const std::vector<std::int64_t>& conductors, const Output& o) {
  if (conductors.size() != 2) throw DomainError("compose expects exactly two conductors");
  const HomToG h1(PeriodField::build(p, conductors[0]), 1), h2(PeriodField::build(p, conductors[1]), 1);
  const MultiplicativityResult res = verify_weak_multiplicativity(h1, h2);
  json report{{"fields", {h1.field->name(), h2.field->name()}},
              {"witnesses", {encode(res.witness1), encode(res.witness2)}},
              {"composite_field", res.composite.field->name()},
              {"product_element", encode(res.product)},
              {"product_is_selfdual_generator", res.passed}};
  emit(o, report,
       res.composite.field->name() + ": product of witnesses " + (res.passed ? "is" : "is NOT") +
           " a self-dual generator of A\n");
  return res.passed ? 0 : 1;
}

int cmd_propcheck(const std::string& suite, const SuiteConfig& cfg, const Output& o) {
  const Report rep = run_suite(suite, cfg);
  std::ostringstream s;
  for (const auto& c : rep.checks) s << to_string(c.status) << "  " << c.id << "\n";
  s << (rep.ok() ? "ok" : "FAILED") << " (seed " << cfg.seed << ")\n";
  emit(o, rep.to_json(), s.str());
  return rep.ok() ? 0 : 1;
}

int cmd_corpus(std::int64_t p, std::int64_t max, const Output& o) {
  const auto list = sieve_conductors(p, max);
  json report{{"degree", p}, {"max", max}, {"conductors", list}};
  std::ostringstream s;
  for (auto f : list) s << f << "\n";
  emit(o, report, s.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with G-forms, resolvends and Stickelberger maps"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Print the JSON report instead of a summary");
  app.add_option("--out", out.out, "Also write the JSON report to this file");

  std::string group = "3";
  std::int64_t degree = 3, conductor = 7, max = 100;
  std::vector<std::int64_t> conductors{7, 13};
  SuiteConfig cfg;
  std::string suite = "all", verb;

  auto* st = app.add_subcommand("stickelberger", "Pairing table and S basis for a group");
  st->add_option("verb", verb, "Optional verb 'table'")->check(CLI::IsMember({"table"}));
  st->add_option("--group", group, "Invariant factors d1,d2,... with d1 | d2 | ...");

  auto* fd = app.add_subcommand("field", "Period basis, different and A for a cyclic field");
  fd->add_option("verb", verb, "Optional verb 'analyze'")->check(CLI::IsMember({"analyze"}));
  fd->add_option("--degree", degree, "Odd prime degree p");
  fd->add_option("--conductor", conductor, "Squarefree conductor, primes = 1 mod p");

  auto* sd = app.add_subcommand("selfdual", "Search a self-dual ZG-generator of A");
  sd->add_option("verb", verb, "Optional verb 'search'")->check(CLI::IsMember({"search"}));
  sd->add_option("--degree", degree, "Odd prime degree p");
  sd->add_option("--conductor", conductor, "Squarefree conductor, primes = 1 mod p");

  auto* cp = app.add_subcommand("compose", "Product of witnesses in the composite field");
  cp->add_option("--degree", degree, "Odd prime degree p");
  cp->add_option("--conductors", conductors, "Two coprime conductors")->delimiter(',')->expected(2);

  auto* pc = app.add_subcommand("propcheck", "Run a property suite");
  pc->add_option("suite", suite, "Suite name")->check(CLI::IsMember(suite_names()));
  pc->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  pc->add_option("--max", cfg.conductor_bound, "Conductor bound of the degree-3 corpus");
  pc->add_flag("--timings", cfg.timings, "Record per-check timings (reports stop being byte-stable)");

  auto* co = app.add_subcommand("corpus", "List admissible conductors");
  co->add_option("--degree", degree, "Odd prime degree p");
  co->add_option("--max", max, "Upper bound");

  for (auto* sub : {st, fd, sd, cp, pc, co}) {
    sub->add_flag("--json", out.as_json, "Print the JSON report instead of a summary");
    sub->add_option("--out", out.out, "Also write the JSON report to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (st->parsed()) return cmd_stickelberger(group, out);
    if (fd->parsed()) return cmd_field(degree, conductor, out);
    if (sd->parsed()) return cmd_selfdual(degree, conductor, out);
    if (cp->parsed()) return cmd_compose(degree, conductors, out);
    if (pc->parsed()) return cmd_propcheck(suite, cfg, out);
    if (co->parsed()) return cmd_corpus(degree, max, out);
  } catch (const std::exception& e) {
    std::cerr << "gform-lab: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
