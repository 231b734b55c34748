// One line per acceptance criterion. Usage: acceptance [N ...]
#include "mha/coaction.hpp"
#include "mha/convolution.hpp"
#include "mha/globalization.hpp"
#include "mha/scenario.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace mha;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream why;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
  void require(const Report& r, const std::string& what) {
    if (r.passed()) return;
    const CheckItem* f = r.first_failure();
    std::string item = f ? f->name + " [" + f->witness + "]" : std::string("inconclusive");
    require(false, what + ": " + item);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict c1() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<MhaPtr> instances{function_algebra_mha(cyclic_group(2)), function_algebra_mha(cyclic_group(4)),
                                function_algebra_mha(symmetric_group(3)), group_algebra_mha(cyclic_group(2)),
                                group_algebra_mha(symmetric_group(3))};
  for (const auto& m : instances) v.require(mha_axiom_suite(*m, mha_window(*m, 0)), m->name);
  double secs = seconds_since(t0);
  v.require(secs < 10.0, "suite took " + std::to_string(secs) + " s");

  // Each mutation must be caught wherever it changes the structure map.
  int mutants = 0, differ = 0;
  for (const auto& m : instances) {
    auto w = mha_window(*m, 0);
    for (auto what : {MhaMutation::delta, MhaMutation::counit, MhaMutation::antipode}) {
      auto bad = mutate(*m, what);
      bool changed = false;
      for (const Key& a : w) {
        Vec va = Vec::basis(a);
        changed = changed || bad->S(va) != m->S(va) || bad->counit(a) != m->counit(a);
        for (const Key& b : w) changed = changed || bad->delta_r(a, b) != m->delta_r(a, b);
      }
      ++mutants;
      if (!changed) continue;
      ++differ;
      v.require(mha_axiom_suite(*bad, w).failed(), bad->name + " not caught");
    }
  }
  v.note = std::to_string(differ) + " of " + std::to_string(mutants) + " mutants change a map, all caught";
  return v;
}

Vec random_hom(std::mt19937_64& rng, const HomSpace& h) {
  const auto& els = h.source()->group->elements();
  const auto& rb = h.target()->basis();
  std::map<Key, Vec> vals;
  for (int i = 0; i < 2; ++i) {
    Vec x;
    for (int j = 0; j < 2; ++j)
      x += make_scalar(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)) * rb[rng() % rb.size()];
    vals[els[rng() % els.size()]] += x;
  }
  return h.from_values(vals);
}

Verdict c2() {
  Verdict v;
  auto s3 = symmetric_group(3);
  HomSpace h(function_algebra_mha(s3), group_ring(s3));
  std::mt19937_64 rng(2024);
  std::vector<Vec> samples;
  for (int i = 0; i < 5; ++i) samples.push_back(random_hom(rng, h));
  auto assoc = check_conv_associativity(h, samples);
  v.require(assoc, "associativity");
  v.require(assoc.items().at(0).tested >= 100, "fewer than 100 triples");
  v.require(check_conv_paths(h, samples), "closed form vs coverage");
  // Module-algebra law on all pairs of basis elements of Hom^r.
  std::vector<Vec> basis;
  for (const Key& g : s3->elements())
    for (const Vec& r : h.target()->basis()) basis.push_back(h.from_values({{g, r}}));
  v.require(check_module_algebra(h, s3->elements(), basis), "module-algebra law");
  return v;
}

Verdict c3() {
  Verdict v;
  EndoRule id = [](const Vec& x) { return x; };
  std::vector<MhaPtr> instances{function_algebra_mha(cyclic_group(4)), group_algebra_mha(cyclic_group(2))};
  for (const auto& m : instances) {
    auto w = mha_window(*m, 0);
    EndoRule s = [m](const Vec& x) { return m->S(x); };
    v.require(check_convolutive_inverse(*m, s, id, w, w), m->name + " S");
    for (const Key& a : w) {
      if (a == m->group->identity()) continue;
      auto r = check_convolutive_inverse(*m, id, id, {a}, w);
      v.require(r.failed(), "id passes at " + m->format(Vec::basis(a)) + " in " + m->name +
                                (m->S(Vec::basis(a)) == Vec::basis(a) ? " (S = id there)" : ""));
    }
  }
  return v;
}

Verdict c4() {
  Verdict v;
  auto g = symmetric_group(3);
  auto a3 = named_subgroup(*g, "alternating");
  auto p = example_fN(g, a3, "A3");
  const auto& aw = g->elements();
  auto glob = functions_on_group_ring(g);
  auto fn = named_idempotent(*glob.algebra, "fN_alternating");
  auto ind = induce_from_projection(idempotent_projection(glob, fn, "f_N"), aw, glob.algebra->basis());
  std::size_t pairs = 0;
  for (const Key& a : aw)
    for (const Vec& x : p.target->basis()) {
      ++pairs;
      v.require(ind.act(a, x) == p.act(a, x), "π(a▷x) differs at " + p.target->format(x));
      v.require(ind.e_map(a).left(x) == p.e_map(a).left(x) && ind.e_map(a).right(x) == p.e_map(a).right(x),
                "𝔢 differs at " + p.target->format(x));
    }
  v.require(pairs == aw.size() * p.target->dim(), "pair count");
  AlgebraPtr kg = group_ring(g);
  Key t12 = g->parse_token("(12)"), t13 = g->parse_token("(13)");
  Vec x = kg->multiply(fn, Vec::basis(t13));
  Vec want = make_scalar(1, 3) * kg->multiply(fn, Vec::basis(t12));
  v.require(p.act(t12, x) == want && ind.act(t12, x) == want, "δ_(12)·(f_N(13)) ≠ (1/3)f_N(12)");
  v.require(check_partial_action(p, aw, p.target->basis()), "(i)-(iv)");
  v.require(check_symmetric(p, aw, p.target->basis()), "(v)-(vii)");
  return v;
}

Verdict c5() {
  Verdict v;
  auto g = symmetric_group(3);
  auto p = example_fN(g, named_subgroup(*g, "alternating"), "A3");
  const auto& aw = g->elements();
  auto gl = globalize(p, aw);
  for (const Key& a : aw)
    for (const Vec& x : p.target->basis())
      v.require(gl.theta(p.act(a, x)) == gl.pi(gl.envelope.act(a, gl.theta(x))), "θ(a·x) ≠ π(a▷θ(x))");
  auto env = check_enveloping(gl);
  v.require(env, "enveloping");
  v.require(env.item_passed("(iii) θ(L) two-sided ideal of R"), "θ(L) ideal");
  v.require(check_minimal(gl), "minimal");
  auto junk = junk_envelope(gl, junk_module(p.acting, 2));
  v.require(check_minimal(junk).failed(), "junk envelope passes minimality");
  auto cmp = compare_envelopes(junk, gl);
  v.require(!cmp.isomorphism && cmp.kernel_witness && !cmp.kernel_witness->is_zero(), "no kernel exposed");
  v.require(compare_envelopes(gl, transport(gl)).isomorphism, "relabelled envelope not matched");
  return v;
}

Verdict c6() {
  Verdict v;
  auto p = sign_twist_corner();
  v.require(check_pga(p), "check_pga");
  v.require(check_sigma_conditions(p), "check_sigma_conditions");
  v.require(check_globalizability(p), "check_globalizability");
  auto q = to_hopf(p);
  const auto& els = p.group->elements();
  v.require(check_partial_action(q, els, q.target->basis()), "to_hopf partial action");
  v.require(check_symmetric(q, els, q.target->basis()), "to_hopf symmetric");
  v.require(roundtrip_check(p), "round trip");
  auto s3 = symmetric_group(3);
  auto glob = global_group_action(s3, group_ring(s3), group_ring_action(s3, "conjugation"), "conjugation");
  auto gq = to_hopf(glob);
  for (const Key& g : s3->elements())
    for (const Vec& x : gq.target->basis())
      v.require(gq.e_map(g).left(x) == x && gq.e_map(g).right(x) == x, "𝔢 ≠ 1 in the global case");
  return v;
}

Verdict c7() {
  Verdict v;
  auto g = symmetric_group(3);
  auto kg = group_ring(g);
  auto l = corner_algebra(kg, named_idempotent(*kg, "not_sign"), "not_sign");
  auto c = trivial_coaction(l, g);
  const auto& aw = g->elements();
  v.require(check_partial_coaction(c, l->basis(), aw), "check_partial_coaction");
  for (const Key& k : aw) {
    auto r = check_quasi_counitary(*c.acting, Vec::basis(k), aw);
    if (k == g->identity())
      v.require(r, "δ_e quasi-counitary");
    else
      v.require(r.failed(), "δ_" + g->token(k) + " passes");
  }
  auto gl = coaction_globalize(c, Vec::basis(g->identity()), aw);
  auto r = check_coglobalization(gl);
  v.require(r, "check_coglobalization");
  v.require(r.item_passed("E-projection: (π⊗ι)(ρ(π(y))(1⊗e)) = Φ(E)(π⊗ι)(ρ(y)(1⊗e))"), "E-projection");
  return v;
}

Verdict c8() {
  Verdict v;
  for (const auto& [name, body] : builtin_scenarios()) {
    auto a = run_scenario(body);
    auto b = run_scenario(body);
    v.require(a.report.dump(2) == b.report.dump(2) && a.text == b.text, name + " not reproducible");
  }
  auto code = [&](const std::string& name) { return exit_code(run_scenario(*builtin_scenario(name)).outcome); };
  v.require(code("example_fN_S3") == kExitPass, "example_fN_S3 exit");
  v.require(code("mutation_antipode") == kExitFail, "mutation_antipode exit");
  v.require(code("inconclusive_closure") == kExitInconclusive, "inconclusive_closure exit");
  try {
    run_scenario("{\"schema\": 1,");
    v.require(false, "malformed scenario accepted");
  } catch (const ScenarioParseError&) {
  }
  return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
    {"MHA axiom suite on A_C2, A_C4, A_S3, kC2, kS3 and mutations", c1},
    {"convolution on Hom^r(A_S3, kS3)", c2},
    {"antipode as convolutive inverse; S replaced by id", c3},
    {"f_N example on S3 with N = A3", c4},
    {"globalization of the f_N example", c5},
    {"partial group action bijection on the kS3 corner", c6},
    {"coaction globalization of the trivial coaction", c7},
    {"CLI determinism and exit codes", c8},
};

} // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::stoul(argv[i]));
  if (which.empty())
    for (std::size_t i = 1; i <= criteria.size(); ++i) which.push_back(i);
  bool all = true;
  for (std::size_t n : which) {
    if (n < 1 || n > criteria.size()) {
      std::cerr << "no criterion " << n << '\n';
      return 2;
    }
    const auto& [title, run] = criteria[n - 1];
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "c" << n << " " << (v.ok ? "PASS" : "FAIL") << "  " << title;
    if (!v.ok) std::cout << "  (" << v.why.str() << ")";
    else if (!v.note.empty()) std::cout << "  (" << v.note << ")";
    std::cout << '\n';
    all = all && v.ok;
  }
  return all ? 0 : 1;
}
