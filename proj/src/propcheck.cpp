#include "gformlab/propcheck.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <variant>

#include "gformlab/error.hpp"
#include "gformlab/gforms.hpp"
#include "gformlab/json_io.hpp"
#include "gformlab/random.hpp"
#include "gformlab/resolvends.hpp"
#include "gformlab/stickelberger.hpp"

namespace gformlab {

using nlohmann::json;
using json_io::encode;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "fail";
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::int64_t> sieve_conductors(std::int64_t p, std::int64_t bound) {
  if (p < 3 || !is_prime(p)) throw DomainError("sieve_conductors: p must be an odd prime");
  std::vector<std::int64_t> out;
  for (std::int64_t f = 2; f <= bound; ++f) {
    if (!is_squarefree(f)) continue;
    bool ok = true;
    for (auto l : prime_factors(f)) ok = ok && l % p == 1;
    if (ok) out.push_back(f);
  }
  return out;
}

namespace {

Status from_bool(bool b) { return b ? Status::Pass : Status::Fail; }

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Rng stream(const SuiteConfig& c, std::uint64_t salt) { return Rng(c.seed).fork(salt); }

mpq_class random_rational(Rng& rng, std::int64_t num, std::int64_t den) {
  const std::int64_t a = rng.uniform(-num, num);
  const std::int64_t b = rng.uniform(1, den);
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

// --- criterion 1 -------------------------------------------------------------

CheckResult criterion1(const SuiteConfig& cfg) {
  CheckResult r{"stickelberger.integrality", 1, Status::Pass, {}, {}, 0};
  const std::vector<std::string> groups{"3", "5", "7", "9", "3,3"};
  r.inputs = {{"groups", groups}, {"exhaustive_range", {-2, 2}}, {"random_samples", 500}, {"random_range", {-10, 10}}};
  Rng rng = stream(cfg, 1);
  for (const auto& spec : groups) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    const UpsilonTable table(g);
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::int64_t> psi(n, -2);
    std::int64_t total = 0, in_kernel = 0, mismatches = 0;
    json first_mismatch;
    while (true) {
      const bool integral = table.theta_integral(psi.data());
      const bool det = table.det_trivial(psi.data());
      ++total;
      in_kernel += det;
      if (integral != det) {
        if (mismatches++ == 0) first_mismatch = psi;
      }
      std::size_t i = 0;
      while (i < n && psi[i] == 2) psi[i++] = -2;
      if (i == n) break;
      ++psi[i];
    }
    // Random sample through the exact rational path.
    std::int64_t random_mismatches = 0;
    for (int t = 0; t < 500; ++t) {
      DualLatticeElement x;
      for (std::size_t c = 0; c < n; ++c) x.coeffs.push_back(rng.uniform(-10, 10));
      const bool integral = integrality_check(g, x);
      const bool det = determinant(g, x) == g.trivial_character();
      if (integral != det) {
        if (random_mismatches++ == 0 && mismatches == 0) first_mismatch = x.coeffs;
      }
    }
    json d{{"exhaustive_count", total}, {"exhaustive_in_S", in_kernel}, {"exhaustive_mismatches", mismatches},
           {"random_mismatches", random_mismatches}};
    if (mismatches + random_mismatches > 0) {
      d["first_mismatch"] = first_mismatch;
      r.status = Status::Fail;
    }
    r.details[spec] = d;
  }
  return r;
}

// --- criterion 2 -------------------------------------------------------------

CheckResult criterion2(const SuiteConfig&) {
  CheckResult r{"stickelberger.equivariance", 2, Status::Pass, {}, {}, 0};
  r.inputs = {{"groups", {"7", "9"}}, {"acting_group", "full unit group mod exp(G)"}};
  for (const std::string spec : {"7", "9"}) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    const auto units = subgroup_closure(unit_group_generators(g.exponent()), g.exponent());
    const bool ok = equivariance_check(g, units);
    r.details[spec] = {{"residues", units}, {"basis_size", s_hat_basis(g).size()}, {"passed", ok}};
    if (!ok) r.status = Status::Fail;
  }
  return r;
}

// --- criterion 3 -------------------------------------------------------------

CheckResult criterion3(const SuiteConfig& cfg) {
  CheckResult r{"stickelberger.image_selfdual", 3, Status::Pass, {}, {}, 0};
  r.inputs = {{"groups", {"3", "7"}}, {"maps_per_group", 100}};
  Rng rng = stream(cfg, 3);
  for (const std::string spec : {"3", "7"}) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    int failures = 0;
    json first;
    for (int t = 0; t < 100; ++t) {
      const EquivariantMap f = EquivariantMap::random(g, rng);
      if (!image_selfdual_check(f)) {
        if (failures++ == 0) {
          json vals = json::array();
          for (const auto& v : f.values()) vals.push_back(encode(v));
          first = {{"trial", t}, {"values", vals}};
        }
      }
    }
    // The deterministic maps named by the operation as well.
    bool fixed_ok = image_selfdual_check(EquivariantMap::constant_one(g));
    for (const auto& s : enumerate(g))
      if (!(s == g.identity())) fixed_ok = fixed_ok && image_selfdual_check(EquivariantMap::prime_valued(g, 7, s));
    json d{{"random_failures", failures}, {"constant_and_prime_valued", fixed_ok}};
    if (failures) d["first_failure"] = first;
    if (failures || !fixed_ok) r.status = Status::Fail;
    r.details[spec] = d;
  }
  return r;
}

// --- criterion 4 -------------------------------------------------------------

CheckResult criterion4(const SuiteConfig& cfg) {
  CheckResult r{"resolvend.pairing_identity", 4, Status::Pass, {}, {}, 0};
  r.inputs = {{"degree", 3}, {"conductors", {7, 13}}, {"pairs", 100}};
  Rng rng = stream(cfg, 4);
  for (std::int64_t f : {7, 13}) {
    const HomToG h(PeriodField::build(3, f), 1);
    int failures = 0;
    json first;
    for (int t = 0; t < 100; ++t) {
      FieldVector a = h.field->zero(), b = h.field->zero();
      for (auto& q : a) q = random_rational(rng, 5, 3);
      for (auto& q : b) q = random_rational(rng, 5, 3);
      if (!resolvend_pairing_identity(h, a, b) && failures++ == 0) first = {{"a", encode(a)}, {"b", encode(b)}};
    }
    json d{{"failures", failures}};
    if (failures) {
      d["first_failure"] = first;
      r.status = Status::Fail;
    }
    r.details[std::to_string(f)] = d;
  }
  return r;
}

// --- criterion 5 -------------------------------------------------------------

}  // namespace

json field_invariant_checks(const FieldPtr& k) {
  const FractionalIdeal o = FractionalIdeal::ring_of_integers(k);
  const FractionalIdeal d = different(k);
  const FractionalIdeal a = sqrt_inverse_different(k);
  mpz_class disc;
  mpz_ui_pow_ui(disc.get_mpz_t(), static_cast<unsigned long>(k->conductor()),
                static_cast<unsigned long>(k->degree() - 1));
  json c;
  c["A_squared_is_inverse_different"] = (a * a == d.inverse());
  c["A_self_dual"] = (a.dual() == a);
  c["gram_det_A_is_1"] = (a.gram_determinant() == 1);
  c["gram_det_O_is_f_pow"] = (o.gram_determinant() == mpq_class(disc));
  c["hilbert_equals_dual_lattice"] = (d.inverse() == o.dual());
  c["norm_different_is_disc"] = (d.norm() == mpq_class(disc));
  return c;
}

bool all_true(const json& checks) {
  for (const auto& v : checks) if (!v.get<bool>()) return false;
  return true;
}

namespace {

CheckResult criterion5(const SuiteConfig& cfg) {
  CheckResult r{"fields.sqrt_inverse_different", 5, Status::Pass, {}, {}, 0};
  std::vector<std::pair<std::int64_t, std::int64_t>> fields;
  for (auto f : sieve_conductors(3, cfg.conductor_bound)) fields.emplace_back(3, f);
  fields.emplace_back(5, 11);
  json list = json::array();
  for (auto& [p, f] : fields) list.push_back({p, f});
  r.inputs = {{"fields", list}};
  for (auto& [p, f] : fields) {
    const FieldPtr k = PeriodField::build(p, f);
    const json c = field_invariant_checks(k);
    r.details[k->name()] = c;
    if (!all_true(c)) r.status = Status::Fail;
  }
  return r;
}

// --- criterion 6 -------------------------------------------------------------

CheckResult criterion6(const SuiteConfig&) {
  CheckResult r{"gform.selfdual_witness", 6, Status::Pass, {}, {}, 0};
  const std::vector<std::pair<std::int64_t, std::int64_t>> fields{{3, 7}, {3, 13}, {3, 19}, {3, 31},
                                                                  {3, 37}, {3, 43}, {5, 11}};
  json list = json::array();
  for (auto& [p, f] : fields) list.push_back({p, f});
  r.inputs = {{"fields", list}};
  for (auto& [p, f] : fields) {
    const HomToG h(PeriodField::build(p, f), 1);
    const GForm form = gform_from_A(h);
    const auto w = find_self_dual_generator(form);
    json d;
    if (!w) {
      d["found"] = false;
      r.status = Status::Fail;
    } else {
      const FieldVector a = to_field(form, w->coords);
      const bool lattice = verify_witness(form, w->coords);
      const bool resolvend_route = is_self_dual(h, a);
      d = {{"found", true},
           {"witness_coords", encode(w->coords)},
           {"witness_periods", encode(a)},
           {"delta_orthonormal_and_lattice_equal", lattice},
           {"resolvend_self_dual", resolvend_route},
           {"norm_one_vectors", w->norm_one_vectors},
           {"multiplicity", w->multiplicity}};
      if (!lattice || !resolvend_route) r.status = Status::Fail;
    }
    r.details[h.field->name()] = d;
  }
  return r;
}

// --- criteria 7 and 8 --------------------------------------------------------

CheckResult criterion7(const SuiteConfig&) {
  CheckResult r{"theorem11.inverse_law", 7, Status::Pass, {}, {}, 0};
  r.inputs = {{"degree", 3}, {"conductors", {7, 13}}};
  for (std::int64_t f : {7, 13}) {
    const HomToG h(PeriodField::build(3, f), 1);
    const InverseLawResult res = verify_inverse_law(h);
    r.details[h.field->name()] = {{"witness", encode(res.witness)},
                                 {"inverse_element", encode(res.inverse)},
                                 {"inverse_equals_witness", res.inverse_equals_witness},
                                 {"selfdual_generator_of_A_h_inverse", res.passed}};
    if (!res.passed) r.status = Status::Fail;
  }
  return r;
}

CheckResult criterion8(const SuiteConfig&) {
  CheckResult r{"theorem11.weak_multiplicativity", 8, Status::Pass, {}, {}, 0};
  r.inputs = {{"degree", 3}, {"conductors", {7, 13}}};
  const HomToG h1(PeriodField::build(3, 7), 1), h2(PeriodField::build(3, 13), 1);
  const MultiplicativityResult res = verify_weak_multiplicativity(h1, h2);
  r.details = {{"witness_7", encode(res.witness1)},
               {"witness_13", encode(res.witness2)},
               {"composite_field", res.composite.field->name()},
               {"composite_level", res.composite.field->conductor()},
               {"level_dimension", euler_phi(res.composite.field->conductor())},
               {"product_element", encode(res.product)},
               {"selfdual_generator_of_A_composite", res.passed}};
  r.status = from_bool(res.passed && res.composite.field->conductor() == 91);
  return r;
}

// --- criterion 9 -------------------------------------------------------------

json encode_factorization(const FiniteAbelianGroup& g, const FactorizationResult& res) {
  json emb = json::array();
  for (const auto& e : res.embeddings) {
    json passing = json::array();
    for (const auto& s : e.passing) passing.push_back(s.exponents);
    emb.push_back({{"zeta_m_to", e.residue},
                   {"valuations", e.valuations},
                   {"passing_s", passing},
                   {"witness", e.witness ? json(e.witness->exponents) : json(nullptr)}});
  }
  (void)g;
  return {{"l", res.l},
          {"l_unit", res.l_unit},
          {"embeddings", emb},
          {"canonical_residue", res.canonical_residue},
          {"canonical_witness", res.canonical_witness ? json(res.canonical_witness->exponents) : json(nullptr)},
          {"passed", res.passed}};
}

CheckResult criterion9(const SuiteConfig&) {
  CheckResult r{"factorization.stickelberger", 9, Status::Pass, {}, {}, 0};
  r.inputs = {{"degree", 3}, {"conductors", {7, 13}}, {"map", "f_{l,s}"}};
  for (std::int64_t f : {7, 13}) {
    const HomToG h(PeriodField::build(3, f), 1);
    const auto a = self_dual_generator_of_A(h);
    if (!a) {
      r.details[h.field->name()] = {{"error", "no self-dual generator"}};
      r.status = Status::Fail;
      continue;
    }
    const FactorizationResult res = stickelberger_factorization_check(h, *a, f);
    json d = encode_factorization(h.group(), res);
    d["witness_element"] = encode(*a);
    r.details[h.field->name()] = d;
    if (!res.passed) r.status = Status::Fail;
  }
  return r;
}

// --- criterion 10 ------------------------------------------------------------

CheckResult criterion10(const SuiteConfig& cfg) {
  CheckResult r{"resolvend.inversion_oracle", 10, Status::Pass, {}, {}, 0};
  r.inputs = {{"groups", {"3", "7", "9"}}, {"elements_per_group", 200}};
  Rng rng = stream(cfg, 10);
  for (const std::string spec : {"3", "7", "9"}) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    int done = 0, rejected = 0, failures = 0;
    json first;
    while (done < 200) {
      std::vector<mpq_class> c(static_cast<std::size_t>(g.order()));
      for (auto& q : c) q = random_rational(rng, 5, 3);
      const RatGroupRingElement x = RatGroupRingElement::from_dense(g, c);
      auto fi = try_invert(x);
      auto ri = regular_representation_inverse(x);
      if (std::holds_alternative<NotInvertible>(fi)) {
        ++rejected;
        if (ri && failures++ == 0) first = encode(x);
        continue;
      }
      ++done;
      if ((!ri || !(*ri == std::get<RatGroupRingElement>(fi))) && failures++ == 0) first = encode(x);
    }
    json d{{"compared", done}, {"non_invertible_draws", rejected}, {"failures", failures}};
    if (failures) {
      d["first_failure"] = first;
      r.status = Status::Fail;
    }
    r.details[spec] = d;
  }
  return r;
}

// --- auxiliary sweeps ----------------------------------------------------------

CheckResult upsilon_laws(const SuiteConfig&) {
  CheckResult r{"stickelberger.upsilon_laws", 0, Status::Pass, {}, {}, 0};
  const std::vector<std::string> groups{"3", "5", "7", "9", "3,3", "11", "13", "15", "21", "25", "27", "3,9", "45", "63"};
  r.inputs = {{"groups", groups}};
  for (const auto& spec : groups) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    std::int64_t violations = 0;
    for (const auto& chi : enumerate_characters(g))
      for (const auto& s : enumerate(g)) {
        const std::int64_t u = upsilon(g, chi, s), o = g.element_order(s);
        if (2 * std::abs(u) > o - 1) ++violations;
        if (upsilon(g, g.inverse(chi), s) != -u) ++violations;
        if (upsilon(g, chi, g.inverse(s)) != -u) ++violations;
      }
    r.details[spec] = {{"violations", violations}};
    if (violations) r.status = Status::Fail;
  }
  return r;
}

CheckResult theta_linearity(const SuiteConfig& cfg) {
  CheckResult r{"stickelberger.theta_linearity", 0, Status::Pass, {}, {}, 0};
  r.inputs = {{"groups", {"7", "3,3"}}, {"trials", 50}};
  Rng rng = stream(cfg, 101);
  for (const std::string spec : {"7", "3,3"}) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::parse(spec);
    const auto n = static_cast<std::size_t>(g.order());
    int failures = 0;
    for (int t = 0; t < 50; ++t) {
      std::vector<mpq_class> p1(n), p2(n), mix(n);
      const mpq_class a = random_rational(rng, 4, 3), b = random_rational(rng, 4, 3);
      for (auto& q : p1) q = random_rational(rng, 6, 4);
      for (auto& q : p2) q = random_rational(rng, 6, 4);
      for (std::size_t i = 0; i < n; ++i) mix[i] = a * p1[i] + b * p2[i];
      const auto lhs = theta_star(g, mix);
      const auto rhs = theta_star(g, p1).scaled(a) + theta_star(g, p2).scaled(b);
      if (!(lhs == rhs)) ++failures;
    }
    r.details[spec] = {{"failures", failures}};
    if (failures) r.status = Status::Fail;
  }
  return r;
}

CheckResult resolvend_structure(const SuiteConfig& cfg) {
  CheckResult r{"resolvend.structure", 0, Status::Pass, {}, {}, 0};
  r.inputs = {{"degree", 3}, {"conductors", {7, 13}}, {"trials", 20}};
  Rng rng = stream(cfg, 102);
  for (std::int64_t f : {7, 13}) {
    const HomToG h(PeriodField::build(3, f), 1);
    const FiniteAbelianGroup g = h.group();
    int linearity = 0, homomorphism = 0, reduction = 0;
    for (int t = 0; t < 20; ++t) {
      FieldVector a = h.field->zero();
      for (auto& q : a) q = random_rational(rng, 5, 2);
      const CycGroupRingElement ra = resolvend(h, a);
      // Q G-linearity: r(t . a) = r(a) t.
      for (const auto& s : enumerate(g))
        if (!(resolvend(h, h.act(s, a)) == ra.shifted(s))) ++linearity;
      // Galois action on coefficients: sigma_k r(a) = r(a) h(sigma_k).
      for (std::int64_t k = 1; k < f; ++k) {
        CycGroupRingElement conj = map_coefficients<CyclotomicNumber>(
            ra, [k](const CyclotomicNumber& c) { return c.galois(k); });
        const GroupElement hk = g.element({h.value(k)});
        if (!(conj == ra.shifted(hk))) ++homomorphism;
      }
      // Reduction is constant on right G-orbits.
      const auto red = reduce(ra);
      for (const auto& s : enumerate(g))
        if (!(reduce(ra.shifted(s)).representative == red.representative)) ++reduction;
    }
    r.details[std::to_string(f)] = {{"linearity_failures", linearity},
                                    {"galois_homomorphism_failures", homomorphism},
                                    {"reduction_failures", reduction}};
    if (linearity + homomorphism + reduction) r.status = Status::Fail;
  }
  return r;
}

CheckResult field_sigma_invariance(const SuiteConfig& cfg) {
  CheckResult r{"fields.sigma_invariance", 0, Status::Pass, {}, {}, 0};
  std::vector<std::int64_t> fs = sieve_conductors(3, cfg.conductor_bound);
  r.inputs = {{"degree", 3}, {"conductors", fs}};
  for (auto f : fs) {
    const FieldPtr k = PeriodField::build(3, f);
    const RatMatrix& t = k->trace_matrix();
    bool ok = true;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) ok = ok && t((i + 1) % 3, (j + 1) % 3) == t(i, j);
    // sigma shifts the periods: sigma_g(eta_i) = eta_{i+1} inside Q(zeta_f).
    for (std::size_t i = 0; i < 3; ++i)
      ok = ok && k->periods()[i].galois(k->generator_residue()) == k->periods()[(i + 1) % 3];
    r.details[std::to_string(f)] = ok;
    if (!ok) r.status = Status::Fail;
  }
  return r;
}

CheckResult standard_form_witnesses(const SuiteConfig&) {
  CheckResult r{"gform.standard_form", 0, Status::Pass, {}, {}, 0};
  r.inputs = {{"orders", {3, 5, 7}}};
  for (std::int64_t n : {3, 5, 7}) {
    const FiniteAbelianGroup g({n});
    const GForm f = standard_gform(g);
    const auto w = find_self_dual_generator(f);
    // Norm-one vectors are exactly +-s, and each of them passes.
    bool ok = w.has_value() && w->norm_one_vectors == static_cast<std::size_t>(2 * n) &&
              w->multiplicity == static_cast<std::size_t>(2 * n);
    if (ok) {
      for (const auto& x : w->all_witnesses) {
        std::size_t nonzero = 0;
        for (const auto& c : x) nonzero += c != 0;
        ok = ok && nonzero == 1;  // norm 1 then forces the entry to be +-1
      }
      ok = ok && w->coords[0] == 1;
    }
    r.details[std::to_string(n)] = {{"norm_one_vectors", w ? w->norm_one_vectors : 0},
                                    {"passing", w ? w->multiplicity : 0},
                                    {"selected", w ? encode(w->coords) : json(nullptr)},
                                    {"ok", ok}};
    if (!ok) r.status = Status::Fail;
  }
  return r;
}

CheckResult corpus_witnesses(const SuiteConfig& cfg) {
  CheckResult r{"gform.corpus_witnesses", 0, Status::Pass, {}, {}, 0};
  const auto fs = sieve_conductors(3, cfg.conductor_bound);
  r.inputs = {{"degree", 3}, {"conductors", fs}};
  for (auto f : fs) {
    const HomToG h(PeriodField::build(3, f), 1);
    const GForm form = gform_from_A(h);
    const auto w = find_self_dual_generator(form);
    json d{{"found", w.has_value()}};
    bool ok = w.has_value() && verify_witness(form, w->coords);
    if (w) {
      d["witness_periods"] = encode(to_field(form, w->coords));
      d["multiplicity"] = w->multiplicity;
      const InverseLawResult inv = verify_inverse_law(h);
      d["inverse_law"] = inv.passed;
      ok = ok && inv.passed;
    }
    r.details[std::to_string(f)] = d;
    if (!ok) r.status = Status::Fail;
  }
  return r;
}

using Runner = std::function<CheckResult(const SuiteConfig&)>;

const std::map<std::string, std::vector<Runner>>& suites() {
  static const std::map<std::string, std::vector<Runner>> s{
      {"stickelberger", {criterion1, criterion2, criterion3, upsilon_laws, theta_linearity}},
      {"resolvend", {criterion4, criterion10, resolvend_structure}},
      {"fields", {criterion5, field_sigma_invariance}},
      {"gform", {criterion6, standard_form_witnesses, corpus_witnesses}},
      {"theorem11", {criterion7, criterion8}},
      {"factorization", {criterion9}},
  };
  return s;
}

CheckResult timed(const Runner& run, const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = run(cfg);
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details = {{"error", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"stickelberger", "resolvend", "fields", "gform",
                                              "theorem11", "factorization", "all"};
  return names;
}

std::string suite_of_criterion(int criterion) {
  switch (criterion) {
    case 1: case 2: case 3: return "stickelberger";
    case 4: case 10: return "resolvend";
    case 5: return "fields";
    case 6: return "gform";
    case 7: case 8: return "theorem11";
    case 9: return "factorization";
    default: throw DomainError("no acceptance criterion " + std::to_string(criterion));
  }
}

CheckResult run_criterion(int criterion, const SuiteConfig& config) {
  static const std::vector<Runner> runners{criterion1, criterion2, criterion3, criterion4, criterion5,
                                           criterion6, criterion7, criterion8, criterion9, criterion10};
  if (criterion < 1 || criterion > 10) throw DomainError("no acceptance criterion " + std::to_string(criterion));
  return timed(runners[static_cast<std::size_t>(criterion - 1)], config);
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  if (config.tolerance != "exact") throw DomainError("only the exact tolerance policy is supported");
  if (config.conductor_bound < 1) throw DomainError("conductor bound must be positive");
  Report rep{name, config, {}};
  std::vector<std::string> order;
  if (name == "all") {
    order.assign(suite_names().begin(), suite_names().end() - 1);
  } else if (suites().count(name)) {
    order.push_back(name);
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  for (const auto& s : order)
    for (const auto& run : suites().at(s)) rep.checks.push_back(timed(run, config));
  return rep;
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

json Report::to_json() const {
  json checks_json = json::array();
  json hashes = json::object();
  for (const auto& c : checks) {
    json j{{"id", c.id}, {"status", to_string(c.status)}, {"inputs", c.inputs}, {"details", c.details}};
    if (c.criterion) j["criterion"] = c.criterion;
    if (config.timings) j["seconds"] = c.seconds;
    hashes[c.id] = hex64(fnv1a(c.details.dump()));
    checks_json.push_back(std::move(j));
  }
  std::size_t passed = 0, failed = 0, inconclusive = 0;
  for (const auto& c : checks) {
    passed += c.status == Status::Pass;
    failed += c.status == Status::Fail;
    inconclusive += c.status == Status::Inconclusive;
  }
  return json{{"schema_version", kReportSchemaVersion},
              {"suite", suite},
              {"config",
               {{"seed", config.seed},
                {"conductor_bound", config.conductor_bound},
                {"tolerance", config.tolerance},
                {"timings", config.timings}}},
              {"checks", checks_json},
              {"artifact_hashes", hashes},
              {"summary", {{"pass", passed}, {"fail", failed}, {"inconclusive", inconclusive}, {"ok", ok()}}}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace gformlab
