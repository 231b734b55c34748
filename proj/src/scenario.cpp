#include "mha/scenario.hpp"

#include "mha/coaction.hpp"
#include "mha/convolution.hpp"
#include "mha/globalization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace mha {

const std::vector<std::pair<std::string, std::string>>& embedded_scenario_files();

namespace {

using json = nlohmann::ordered_json;

struct Context {
  std::uint64_t seed = 0;
  std::size_t window = 2;
};

using Runner = std::function<std::vector<Report>()>;

struct Field {
  const json& j;
  std::string where;

  bool has(const char* key) const { return j.contains(key); }

  std::string str(const char* key) const {
    if (!j.contains(key)) throw ScenarioParseError(where + ": missing field '" + key + "'");
    if (!j[key].is_string()) throw ScenarioParseError(where + ": field '" + key + "' must be a string");
    return j[key].get<std::string>();
  }
  std::string str(const char* key, std::string fallback) const { return has(key) ? str(key) : fallback; }

  std::int64_t positive(const char* key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    if (!j[key].is_number_integer() || j[key].get<std::int64_t>() <= 0)
      throw ScenarioParseError(where + ": field '" + key + "' must be a positive integer");
    return j[key].get<std::int64_t>();
  }

  bool flag(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!j[key].is_boolean()) throw ScenarioParseError(where + ": field '" + key + "' must be true or false");
    return j[key].get<bool>();
  }

  Field sub(const char* key) const {
    if (!has(key) || !j[key].is_object()) throw ScenarioParseError(where + ": field '" + key + "' must be an object");
    return {j[key], where + "." + key};
  }
};

// Name lookups raise StructuralError deep inside the library; at scenario
// level they are unresolved references.
template <class F>
auto resolve(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StructuralError& e) {
    throw ReferenceError(e.what());
  }
}

GroupPtr ref_group(const Field& f, const char* key = "group") {
  return resolve([&] { return group_from_name(f.str(key)); });
}

MhaPtr ref_instance(const Field& f, const char* key = "instance") {
  return resolve([&] { return mha_from_name(f.str(key)); });
}

AlgebraPtr ref_algebra(const Field& f, const char* key = "algebra") {
  return resolve([&] { return algebra_from_name(f.str(key)); });
}

std::vector<Key> ref_subgroup(const Field& f, const Group& g) {
  return resolve([&] { return named_subgroup(g, f.str("subgroup")); });
}

// e for quasi-counitarity: "unit", or a named idempotent; by default delta_1
// for function algebras and 1 for group rings.
Vec ref_e(const Field& f, const MhaInstance& a) {
  const Algebra& alg = *a.algebra;
  if (!f.has("e")) {
    if (alg.family() == AlgebraFamily::functions) return Vec::basis(alg.group()->identity());
    if (alg.unital()) return alg.identity();
    throw ReferenceError(f.where + ": no default e for " + a.name);
  }
  std::string name = f.str("e");
  if (name == "unit") {
    if (!alg.unital()) throw ReferenceError(f.where + ": " + alg.name() + " has no unit");
    return alg.identity();
  }
  return resolve([&] { return named_idempotent(alg, name); });
}

Report precondition_report(const std::string& check, const Error& e, Outcome o) {
  Report r(check);
  if (o == Outcome::fail)
    r.fail("precondition", e.what());
  else
    r.inconclusive("precondition", e.what());
  return r;
}

// Runs f, turning library exceptions into report items.
std::vector<Report> guarded(const std::string& check, const Runner& f) {
  try {
    return f();
  } catch (const InconclusiveError& e) {
    return {precondition_report(check, e, Outcome::inconclusive)};
  } catch (const CapabilityError& e) {
    return {precondition_report(check, e, Outcome::inconclusive)};
  } catch (const Error& e) {
    return {precondition_report(check, e, Outcome::fail)};
  }
}

Vec random_element(std::mt19937_64& rng, const Algebra& r) {
  Vec out;
  const auto& b = r.basis();
  for (int i = 0; i < 2; ++i) {
    auto num = static_cast<long>(rng() % 7) - 3;
    auto den = 1 + static_cast<long>(rng() % 3);
    out += make_scalar(num, den) * b[rng() % b.size()];
  }
  return out;
}

Vec random_hom(std::mt19937_64& rng, const HomSpace& h) {
  const auto& els = h.source()->group->elements();
  std::map<Key, Vec> vals;
  for (int i = 0; i < 2; ++i) vals[els[rng() % els.size()]] += random_element(rng, *h.target());
  return h.from_values(vals);
}

// ---- partial actions ----

PartialGroupAction resolve_group_action(const Field& f) {
  std::string kind = f.str("action");
  PartialGroupAction p;
  if (kind == "sign_twist_corner") {
    p = sign_twist_corner();
  } else if (kind == "global" || kind == "corner") {
    GroupPtr g = ref_group(f);
    AlgebraPtr s = resolve([&] { return group_ring(g); });
    GroupAutomorphisms beta = resolve([&] { return group_ring_action(g, f.str("automorphisms")); });
    if (kind == "global") {
      p = global_group_action(g, s, beta, "global:" + f.str("automorphisms"));
    } else {
      Vec idem = resolve([&] { return named_idempotent(*s, f.str("idempotent")); });
      p = restrict_to_corner(g, s, beta, idem, "corner:" + f.str("idempotent"));
    }
  } else {
    throw ReferenceError(f.where + ": unknown group action '" + kind + "'");
  }
  if (f.has("mutation")) {
    auto what = resolve([&] { return parse_group_action_mutation(f.str("mutation")); });
    p = mutate(p, what);
  }
  return p;
}

struct PartialSetup {
  PartialActionData p;
  std::vector<Key> aw;
};

PartialSetup resolve_partial(const Field& f, const Context& ctx) {
  std::string kind = f.str("action");
  PartialSetup s;
  if (kind == "example_fN" || kind == "example_lambda") {
    GroupPtr g = ref_group(f);
    std::string sub = f.str("subgroup");
    auto n = ref_subgroup(f, *g);
    if (kind == "example_fN") {
      s.p = resolve([&] { return example_fN(g, n, sub); });
    } else {
      AlgebraPtr t = ref_algebra(f, "target");
      s.p = resolve([&] { return example_lambda(g, n, t, sub); });
    }
    s.aw = g->window(ctx.window);
  } else if (kind == "global_functions") {
    GroupPtr g = ref_group(f);
    s.p = global_as_partial(functions_on_group_ring(g));
    s.aw = g->window(ctx.window);
  } else if (kind == "to_hopf") {
    PartialGroupAction q = resolve_group_action(f.sub("group_action"));
    s.p = to_hopf(q);
    s.aw = q.group->elements();
  } else {
    throw ReferenceError(f.where + ": unknown partial action '" + kind + "'");
  }
  if (f.has("mutation")) {
    auto what = resolve([&] { return parse_partial_mutation(f.str("mutation")); });
    s.p = mutate(s.p, what, s.aw, s.p.target->basis());
  }
  return s;
}

Report induced_comparison(const PartialSetup& s, const std::string& subgroup) {
  GroupPtr g = s.p.acting->group;
  auto glob = functions_on_group_ring(g);
  auto fpi = idempotent_projection(glob, named_idempotent(*glob.algebra, "fN_" + subgroup), "f_N");
  auto ind = induce_from_projection(fpi, s.aw, glob.algebra->basis());
  Report r("induced_projection", s.p.name);
  r.set_window(std::to_string(s.aw.size()) + " acting basis elements, " + std::to_string(s.p.target->dim()) +
               " target elements");
  auto ka = s.p.acting->algebra->key_formatter();
  const Algebra& L = *s.p.target;
  Tally ta("π(a▷x) = a·x");
  Tally te("𝔢 from π = 𝔢 closed form");
  for (const Key& a : s.aw)
    for (const Vec& x : L.basis()) {
      Vec u = ind.act(a, x);
      Vec v = s.p.act(a, x);
      ta.record(u == v, [&] { return "a=" + ka(a) + ", x=" + L.format(x) + ": " + L.format(u) + " vs " + L.format(v); });
      bool same = ind.e_map(a).left(x) == s.p.e_map(a).left(x) && ind.e_map(a).right(x) == s.p.e_map(a).right(x);
      te.record(same, [&] { return "a=" + ka(a) + ", x=" + L.format(x); });
    }
  ta.into(r);
  te.into(r);
  return r;
}

// ---- coactions ----

PartialCoactionData resolve_coaction(const Field& f) {
  std::string kind = f.str("coaction");
  if (kind == "trivial") {
    AlgebraPtr l = ref_algebra(f);
    GroupPtr g = ref_group(f);
    return trivial_coaction(l, g);
  }
  if (kind == "inversion") return inversion_coaction();
  if (kind == "group_like") return group_like_coaction(ref_group(f));
  if (kind == "from_group_action") return coaction_from_group_action(resolve_group_action(f.sub("group_action")));
  throw ReferenceError(f.where + ": unknown coaction '" + kind + "'");
}

std::vector<Key> coaction_window(const PartialCoactionData& c, const Context& ctx) {
  return c.acting->group->window(ctx.window);
}

// ---- check kinds ----

struct CheckKind {
  std::string name;
  std::string summary;
  std::string params;
  std::function<Runner(const Field&, const Context&)> prepare;
};

const std::vector<CheckKind>& kinds() {
  static const std::vector<CheckKind> all = {
      {"mha_axioms",
       "Coassociativity, counit, antipode, T1/T2 round trips, regularity and the structure maps of one "
       "multiplier Hopf algebra instance on every basis pair and triple of the window.",
       "instance (e.g. A_G:symmetric:3), mutation (optional: delta, counit, antipode, t2_inv)",
       [](const Field& f, const Context& ctx) -> Runner {
         MhaPtr m = ref_instance(f);
         if (f.has("mutation")) {
           auto what = resolve([&] { return parse_mha_mutation(f.str("mutation")); });
           m = mutate(*m, what);
         }
         auto w = mha_window(*m, ctx.window);
         return [m, w] { return std::vector<Report>{mha_axiom_suite(*m, w)}; };
       }},
      {"convolution",
       "Associativity of the convolution product on all triples of seeded random elements of Hom^r(A, R), "
       "agreement of the closed-form and coverage products, and the module-algebra law.",
       "instance, target (algebra name), samples (optional, default 5)",
       [](const Field& f, const Context& ctx) -> Runner {
         MhaPtr m = ref_instance(f);
         AlgebraPtr t = ref_algebra(f, "target");
         auto n = static_cast<std::size_t>(f.positive("samples", 5));
         std::uint64_t seed = ctx.seed;
         std::size_t radius = ctx.window;
         return [m, t, n, seed, radius] {
           HomSpace h(m, t);
           std::mt19937_64 rng(seed);
           std::vector<Vec> samples;
           for (std::size_t i = 0; i < n; ++i) samples.push_back(random_hom(rng, h));
           return std::vector<Report>{check_conv_associativity(h, samples), check_conv_paths(h, samples),
                                      check_module_algebra(h, mha_window(*m, radius), samples)};
         };
       }},
      {"antipode_inverse",
       "S is a convolutive inverse of the identity at every basis test element.",
       "instance, replace (optional: identity puts id in place of S)",
       [](const Field& f, const Context& ctx) -> Runner {
         MhaPtr m = ref_instance(f);
         std::string rep = f.str("replace", "");
         if (!rep.empty() && rep != "identity") throw ReferenceError(f.where + ": unknown replacement '" + rep + "'");
         auto w = mha_window(*m, ctx.window);
         return [m, w, rep] {
           EndoRule id = [](const Vec& v) { return v; };
           EndoRule s = [m](const Vec& v) { return m->S(v); };
           return std::vector<Report>{check_convolutive_inverse(*m, rep.empty() ? s : id, id, w, w)};
         };
       }},
      {"partial_action",
       "Items (i)-(iv) of a partial module algebra, the symmetric items (v)-(vii), quasi-unitarity and "
       "optionally the comparison with the action induced by the f_N projection.",
       "action (example_fN, example_lambda, global_functions, to_hopf), group, subgroup, target, group_action, "
       "symmetric (default true), compare_induced (default false), mutation (optional: zero_pair, e_right, e_left)",
       [](const Field& f, const Context& ctx) -> Runner {
         PartialSetup s = resolve_partial(f, ctx);
         bool sym = f.flag("symmetric", true);
         bool induced = f.flag("compare_induced", false);
         std::string sub = induced ? f.str("subgroup") : std::string();
         return [s, sym, induced, sub] {
           auto xw = s.p.target->basis();
           std::vector<Report> out{check_partial_action(s.p, s.aw, xw)};
           if (sym) out.push_back(check_symmetric(s.p, s.aw, xw));
           out.push_back(check_quasi_unitary(s.p, xw, s.aw).report);
           if (induced) out.push_back(induced_comparison(s, sub));
           return out;
         };
       }},
      {"globalization",
       "The standard envelope (R, θ, π) of a partial action: every enveloping item and minimality; "
       "optionally the comparison with a junk-extended or relabelled envelope.",
       "action and its fields as for partial_action, junk (optional dimension), transport (default false)",
       [](const Field& f, const Context& ctx) -> Runner {
         PartialSetup s = resolve_partial(f, ctx);
         auto junk = static_cast<std::size_t>(f.positive("junk", 0));
         bool moved = f.flag("transport", false);
         return [s, junk, moved] {
           auto gl = globalize(s.p, s.aw);
           std::vector<Report> out{check_enveloping(gl), check_minimal(gl)};
           if (junk > 0) out.push_back(compare_envelopes(junk_envelope(gl, junk_module(s.p.acting, junk)), gl).report);
           if (moved) out.push_back(compare_envelopes(gl, transport(gl)).report);
           return out;
         };
       }},
      {"group_action",
       "Partial group action axioms, the σ conditions, globalizability, the induced partial action of the "
       "dual of A_G and the round trip back to the group action.",
       "action (sign_twist_corner, global, corner), group, automorphisms, idempotent, mutation (optional: "
       "decouple_alpha, noncentral_sigma, zero_product)",
       [](const Field& f, const Context&) -> Runner {
         PartialGroupAction p = resolve_group_action(f);
         return [p] {
           std::vector<Report> out;
           out.push_back(check_pga(p));
           auto more = guarded("sigma_conditions", [&] { return std::vector<Report>{check_sigma_conditions(p)}; });
           out.insert(out.end(), more.begin(), more.end());
           out.push_back(check_globalizability(p));
           more = guarded("to_hopf", [&] {
             auto q = to_hopf(p);
             const auto& aw = p.group->elements();
             auto xw = q.target->basis();
             return std::vector<Report>{check_partial_action(q, aw, xw), check_symmetric(q, aw, xw),
                                        roundtrip_check(p)};
           });
           out.insert(out.end(), more.begin(), more.end());
           return out;
         };
       }},
      {"quasi_counitary",
       "e is a nonzero central idempotent with Δ(e)(e⊗1) = e⊗e and ε(e) = 1.",
       "instance, e (named idempotent or unit; default δ_1 or 1)",
       [](const Field& f, const Context& ctx) -> Runner {
         MhaPtr m = ref_instance(f);
         Vec e = ref_e(f, *m);
         auto w = mha_window(*m, ctx.window);
         return [m, e, w] { return std::vector<Report>{check_quasi_counitary(*m, e, w)}; };
       }},
      {"coaction",
       "Partial comodule algebra axioms with E, the symmetric law and ρ(L)(1⊗A) = E(L⊗A).",
       "coaction (trivial, inversion, group_like, from_group_action), algebra, group, group_action",
       [](const Field& f, const Context& ctx) -> Runner {
         PartialCoactionData c = resolve_coaction(f);
         auto aw = coaction_window(c, ctx);
         return [c, aw] {
           auto xw = c.target->basis();
           return std::vector<Report>{check_partial_coaction(c, xw, aw), check_symmetric_coaction(c, xw, aw),
                                      check_coaction_images(c, xw, aw)};
         };
       }},
      {"coglobalization",
       "The enveloping coaction (Q, ι⊗Δ, θ, π) with every item, the E-projection equation and π(Q) = θ(L).",
       "coaction fields, e (optional), bound (optional, default 512), mutation (optional: identity_projection, "
       "enlarged_envelope)",
       [](const Field& f, const Context& ctx) -> Runner {
         PartialCoactionData c = resolve_coaction(f);
         Vec e = ref_e(f, *c.acting);
         auto bound = static_cast<std::size_t>(f.positive("bound", static_cast<std::int64_t>(kDefaultClosureBound)));
         std::optional<CoglobMutation> mut;
         if (f.has("mutation")) mut = resolve([&] { return parse_coglob_mutation(f.str("mutation")); });
         auto aw = coaction_window(c, ctx);
         return [c, e, bound, mut, aw] {
           auto g = coaction_globalize(c, e, aw, bound);
           if (mut) g = mutate(g, *mut);
           return std::vector<Report>{check_coglobalization(g)};
         };
       }},
      {"subcomodule",
       "The subcomodule algebra of L⊗A generated by θ(L) = ρ(L)(1⊗e), with a dimension bound.",
       "coaction fields, e (optional), bound (optional, default 512)",
       [](const Field& f, const Context& ctx) -> Runner {
         PartialCoactionData c = resolve_coaction(f);
         Vec e = ref_e(f, *c.acting);
         auto bound = static_cast<std::size_t>(f.positive("bound", static_cast<std::int64_t>(kDefaultClosureBound)));
         auto aw = coaction_window(c, ctx);
         return [c, e, bound, aw] {
           std::vector<Vec> p;
           for (const Vec& x : c.target->basis()) {
             Vec t;
             for (const auto& [k, s] : e) t += s * c.rho_r(x, k);
             p.push_back(t);
           }
           return std::vector<Report>{generated_subcomodule(tensor_coaction(c.target, c.acting), p, aw, bound).report};
         };
       }},
      {"dual_module",
       "(ωω′)▷v = ω▷(ω′▷v) on L⊗A with ρ = ι⊗Δ for seeded random functionals.",
       "coaction fields (only L and A are used), samples (optional, default 8)",
       [](const Field& f, const Context& ctx) -> Runner {
         PartialCoactionData c = resolve_coaction(f);
         auto n = static_cast<std::size_t>(f.positive("samples", 8));
         auto aw = coaction_window(c, ctx);
         std::uint64_t seed = ctx.seed;
         return [c, n, aw, seed] {
           auto amb = tensor_coaction(c.target, c.acting);
           const Algebra& M = *amb.target;
           std::mt19937_64 rng(seed);
           auto functional = [&] {
             DualFunctional w;
             for (const Key& k : aw) w.add_term(k, make_scalar(static_cast<long>(rng() % 7) - 3));
             return w;
           };
           Report r("dual_module", amb.name);
           r.set_window(std::to_string(n) + " sampled functional pairs, seed " + std::to_string(seed));
           Tally t("(ωω′)▷v = ω▷(ω′▷v)");
           auto mb = M.basis();
           for (std::size_t i = 0; i < n; ++i) {
             DualFunctional w1 = functional();
             DualFunctional w2 = functional();
             const Vec& v = mb[rng() % mb.size()];
             Vec lhs = dual_act(amb, dual_product(*c.acting, w1, w2, aw), v);
             Vec rhs = dual_act(amb, w1, dual_act(amb, w2, v));
             t.record(lhs == rhs, [&] { return "v=" + M.format(v) + ": " + M.format(lhs) + " vs " + M.format(rhs); });
           }
           t.into(r);
           return std::vector<Report>{r};
         };
       }},
  };
  return all;
}

const CheckKind& find_kind(const std::string& name, const std::string& where) {
  for (const auto& k : kinds())
    if (k.name == name) return k;
  throw ReferenceError(where + ": unknown check '" + name + "'");
}

} // namespace

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::pass: return kExitPass;
    case Outcome::fail: return kExitFail;
    case Outcome::inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

RunResult run_scenario(std::string_view text, const RunOptions& opts) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(e.what());
  }
  if (!doc.is_object()) throw ScenarioParseError("scenario must be a JSON object");
  Field top{doc, "scenario"};
  if (!doc.contains("schema") || !doc["schema"].is_number_integer() || doc["schema"].get<int>() != kScenarioSchema)
    throw ScenarioParseError("scenario: field 'schema' must be " + std::to_string(kScenarioSchema));
  std::string name = top.str("name");
  Context ctx;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) throw ScenarioParseError("scenario: field 'seed' must be a non-negative integer");
    ctx.seed = doc["seed"].get<std::uint64_t>();
  }
  ctx.window = static_cast<std::size_t>(top.positive("window", 2));
  if (opts.seed) ctx.seed = *opts.seed;
  if (opts.window) {
    if (*opts.window == 0) throw ScenarioParseError("--window must be positive");
    ctx.window = *opts.window;
  }
  if (!doc.contains("checks") || !doc["checks"].is_array() || doc["checks"].empty())
    throw ScenarioParseError("scenario: field 'checks' must be a non-empty array");

  std::vector<std::pair<std::string, Runner>> runners;
  for (std::size_t i = 0; i < doc["checks"].size(); ++i) {
    const json& cj = doc["checks"][i];
    std::string where = "checks[" + std::to_string(i) + "]";
    if (!cj.is_object()) throw ScenarioParseError(where + " must be an object");
    Field f{cj, where};
    const CheckKind& k = find_kind(f.str("check"), where);
    runners.emplace_back(k.name, k.prepare(f, ctx));
  }

  RunResult res;
  json checks = json::array();
  std::ostringstream text_out;
  std::vector<Outcome> outcomes;
  std::ostringstream body;
  for (std::size_t i = 0; i < runners.size(); ++i) {
    const auto& [kind, run] = runners[i];
    auto reports = guarded(kind, run);
    Report all;
    json rj = json::array();
    for (const Report& r : reports) {
      all.absorb(r);
      rj.push_back(r.to_json());
    }
    Outcome o = all.outcome();
    outcomes.push_back(o);
    json c;
    c["index"] = i;
    c["check"] = kind;
    c["outcome"] = outcome_name(o);
    c["reports"] = std::move(rj);
    checks.push_back(std::move(c));
    body << "[" << i << "] " << kind << ": " << outcome_name(o) << '\n';
    for (const Report& r : reports) {
      std::istringstream lines(r.to_text());
      for (std::string line; std::getline(lines, line);) body << "    " << line << '\n';
    }
  }
  Outcome total = Outcome::pass;
  for (Outcome o : outcomes) {
    if (o == Outcome::fail) total = Outcome::fail;
    if (o == Outcome::inconclusive && total == Outcome::pass) total = Outcome::inconclusive;
  }
  res.outcome = total;
  res.report["schema"] = kScenarioSchema;
  res.report["scenario"] = name;
  res.report["seed"] = ctx.seed;
  res.report["window"] = ctx.window;
  res.report["outcome"] = outcome_name(total);
  res.report["checks"] = std::move(checks);
  text_out << "scenario " << name << "  seed " << ctx.seed << "  window " << ctx.window << "  outcome "
           << outcome_name(total) << '\n'
           << body.str();
  res.text = text_out.str();
  return res;
}

const std::vector<std::pair<std::string, std::string>>& builtin_scenarios() { return embedded_scenario_files(); }

std::optional<std::string> builtin_scenario(std::string_view name) {
  for (const auto& [n, body] : builtin_scenarios())
    if (n == name) return body;
  return std::nullopt;
}

std::vector<std::string> builtin_catalog() {
  std::vector<std::string> out = {
      "group:cyclic:<n>",
      "group:integers",
      "group:symmetric:<n>",
      "instance:A_G:cyclic:2",
      "instance:A_G:cyclic:4",
      "instance:A_G:integers",
      "instance:A_G:symmetric:3",
      "instance:dual:symmetric:3",
      "instance:kG:cyclic:2",
      "instance:kG:integers",
      "instance:kG:symmetric:3",
      "algebra:corner:<algebra>:<idempotent>",
      "algebra:functions:<group>",
      "algebra:groupalg:<group>",
      "algebra:structconsts:<dim>;<i>*<j>=<combo>;...",
      "coaction:from_group_action",
      "coaction:group_like",
      "coaction:inversion",
      "coaction:trivial",
  };
  for (const auto& k : kinds()) out.push_back("check:" + k.name);
  for (const auto& [n, body] : builtin_scenarios()) out.push_back("scenario:" + n);
  return out;
}

std::string explain_check(std::string_view kind) {
  const CheckKind& k = find_kind(std::string(kind), "explain");
  return k.name + "\n  " + k.summary + "\n  parameters: " + k.params + "\n";
}

} // namespace mha
