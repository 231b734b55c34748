#include "mha/globalization.hpp"

#include "mha/convolution.hpp"
#include "mha/errors.hpp"
#include "mha/linalg.hpp"

namespace mha {

std::vector<Vec> Globalization::r_basis() const { return Subspace(generators).basis(); }

Vec phi_embed_with(const PartialActionData& p, const Vec& x, const Vec& b) {
  HomSpace h(p.acting, p.target);
  return h.from_map([&](const Vec& a) { return p(a, x); }, b);
}

Vec phi_embed(const PartialActionData& p, const Vec& x, const std::vector<Key>& aw, std::size_t max_candidates) {
  auto q = check_quasi_unitary(p, {x}, aw, max_candidates);
  if (!q.witness) throw InconclusiveError("no quasi-unitary witness for " + p.target->format(x));
  return phi_embed_with(p, x, *q.witness);
}

namespace {

std::string first_failure_text(const Report& r) {
  const CheckItem* f = r.first_failure();
  if (!f) return r.to_text();
  return f->name + " at " + f->witness;
}

// theta^-1 on theta(L), by solving against the images of a basis of L.
Vec theta_inverse(const Globalization& g, const std::vector<Vec>& theta_basis, const Vec& y) {
  auto c = solve(theta_basis, y);
  if (!c) throw NoSolutionError("element outside θ(L): " + g.envelope.algebra->format(y));
  return combine(*c, g.partial.target->basis());
}

std::vector<Vec> theta_images(const Globalization& g) {
  std::vector<Vec> out;
  for (const Vec& x : g.partial.target->basis()) out.push_back(g.theta(x));
  return out;
}

// v -> (g -> theta^-1(pi(delta_g > v))) as an element of Hom^r(A, L).
Vec to_standard(const Globalization& g, const std::vector<Vec>& theta_basis, const Vec& v) {
  HomSpace h(g.partial.acting, g.partial.target);
  std::map<Key, Vec> vals;
  for (const Key& c : g.a_window) {
    Vec y = g.pi(g.envelope.act(c, v));
    if (!y.is_zero()) vals[c] = theta_inverse(g, theta_basis, y);
  }
  return h.from_values(vals);
}

Vec stack(const std::vector<Key>& aw, const std::function<Vec(const Key&)>& op) {
  Vec out;
  for (const Key& a : aw)
    for (const auto& [k, c] : op(a)) out.add_term(Key::pair(a, k), c);
  return out;
}

} // namespace

Globalization globalize(const PartialActionData& p, const std::vector<Key>& aw) {
  if (!p.target->finite_dimensional()) throw RejectedInput("globalize needs a finite-dimensional target");
  const auto& lb = p.target->basis();
  Report pa = check_partial_action(p, aw, lb);
  if (!pa.passed()) throw RejectedInput("not a partial action on the window: " + first_failure_text(pa));
  Report sym = check_symmetric(p, aw, lb);
  if (!sym.passed()) throw RejectedInput("not symmetric on the window: " + first_failure_text(sym));
  auto q = check_quasi_unitary(p, lb, aw);
  if (!q.witness) throw RejectedInput("no quasi-unitary witness for a basis of " + p.target->name());

  HomSpace h(p.acting, p.target);
  Vec b = *q.witness;
  PartialActionData pd = p;
  LinearOp theta = [pd, b](const Vec& x) { return phi_embed_with(pd, x, b); };
  LinearOp pi = [h, theta](const Vec& F) {
    Vec total;
    for (const Key& g : h.support(F)) total += h.value(F, g);
    return theta(total);
  };
  std::vector<Vec> gens;
  for (const Key& a : aw)
    for (const Vec& x : lb) gens.push_back(h.act(Vec::basis(a), theta(x)));
  return {"standard(" + p.name + ")", p, h.module_algebra(), theta, pi, gens, aw};
}

Report check_enveloping(const Globalization& g) {
  const PartialActionData& p = g.partial;
  const Algebra& R = *g.envelope.algebra;
  const Algebra& L = *p.target;
  const auto& aw = g.a_window;
  const auto& act = g.envelope.act;
  auto ka = p.acting->algebra->key_formatter();
  Report r("enveloping", g.name);
  auto rb = g.r_basis();
  const auto& lb = L.basis();
  r.set_window(std::to_string(aw.size()) + " acting basis elements, dim R = " + std::to_string(rb.size()) +
               ", dim L = " + std::to_string(lb.size()));
  Subspace rspan(rb);

  r.absorb(check_module_algebra_laws(g.envelope, aw, rb), "(i)");
  Tally closed("(i) R closed under product and ▷");
  for (const Vec& u : rb) {
    for (const Vec& v : rb)
      closed.record(rspan.contains(R.multiply(u, v)), [&] { return R.format(u) + " · " + R.format(v); });
    for (const Key& a : aw)
      closed.record(rspan.contains(act(a, u)), [&] { return ka(a) + " ▷ " + R.format(u); });
  }
  closed.into(r);

  auto tb = theta_images(g);
  Tally mult("(ii) θ(xy) = θ(x)θ(y)");
  for (std::size_t i = 0; i < lb.size(); ++i)
    for (std::size_t j = 0; j < lb.size(); ++j)
      mult.record(g.theta(L.multiply(lb[i], lb[j])) == R.multiply(tb[i], tb[j]),
                  [&] { return "x=" + L.format(lb[i]) + ", y=" + L.format(lb[j]); });
  mult.into(r);
  {
    auto ns = null_space(tb);
    if (ns.empty())
      r.pass("(ii) θ injective", "rank " + std::to_string(lb.size()), lb.size());
    else
      r.fail("(ii) θ injective", L.format(combine(ns.front(), lb)));
  }

  Subspace tspan(tb);
  Tally right("(iii) θ(L) right ideal of R");
  Tally both("(iii) θ(L) two-sided ideal of R");
  for (std::size_t i = 0; i < lb.size(); ++i)
    for (const Vec& u : rb) {
      right.record(tspan.contains(R.multiply(tb[i], u)), [&] { return "θ(" + L.format(lb[i]) + ")·" + R.format(u); });
      both.record(tspan.contains(R.multiply(u, tb[i])), [&] { return R.format(u) + "·θ(" + L.format(lb[i]) + ")"; });
    }
  right.into(r);
  both.into(r);

  AProjection proj{"π", g.envelope, subalgebra(g.envelope.algebra, tb, "θ(L)"), g.pi};
  r.absorb(check_a_projection(proj, aw, rb, true), "(iv)");
  Tally equiv("(iv) θ(a·x) = π(a▷θ(x))");
  for (const Key& a : aw)
    for (std::size_t i = 0; i < lb.size(); ++i) {
      Vec lhs = g.theta(p.act(a, lb[i]));
      Vec rhs = g.pi(act(a, tb[i]));
      equiv.record(lhs == rhs, [&] {
        return "a=" + ka(a) + ", x=" + L.format(lb[i]) + ": " + R.format(lhs) + " vs " + R.format(rhs);
      });
    }
  equiv.into(r);

  {
    Subspace gen;
    for (const Key& a : aw)
      for (const Vec& t : tb) gen.insert(act(a, t));
    std::optional<Vec> outside;
    for (const Vec& u : rb)
      if (!gen.contains(u)) {
        outside = u;
        break;
      }
    if (outside)
      r.fail("(v) R = A▷θ(L)", R.format(*outside), "element of R outside the span of A▷θ(L)");
    else
      r.pass("(v) R = A▷θ(L)", "dim " + std::to_string(gen.dim()), rb.size());
  }

  Tally la("(a▷θ(x))θ(y) = θ((a·x)y)");
  Tally lb2("θ(x)(a▷θ(y)) = θ(x(a·y))");
  for (const Key& a : aw)
    for (std::size_t i = 0; i < lb.size(); ++i)
      for (std::size_t j = 0; j < lb.size(); ++j) {
        la.record(R.multiply(act(a, tb[i]), tb[j]) == g.theta(L.multiply(p.act(a, lb[i]), lb[j])),
                  [&] { return "a=" + ka(a) + ", x=" + L.format(lb[i]) + ", y=" + L.format(lb[j]); });
        lb2.record(R.multiply(tb[i], act(a, tb[j])) == g.theta(L.multiply(lb[i], p.act(a, lb[j]))),
                   [&] { return "a=" + ka(a) + ", x=" + L.format(lb[i]) + ", y=" + L.format(lb[j]); });
      }
  la.into(r);
  lb2.into(r);

  Tally pg("(a▷F)G = a₁▷(F(S(a₂)▷G))");
  for (const Vec& G : rb) {
    Vec b;
    try {
      b = acting_unit(g.envelope, aw, G);
    } catch (const InconclusiveError& e) {
      pg.note_inconclusive(e.what());
      continue;
    }
    for (const Key& a : aw) {
      Vec cover = sweedler_cov(*p.acting, Sweedler::iS, Vec::basis(a), b);
      for (const Vec& F : rb) {
        Vec lhs = R.multiply(act(a, F), G);
        Vec rhs = extend_pairs(cover, [&](const Key& u, const Key& v) { return act(u, R.multiply(F, act(v, G))); });
        pg.record(lhs == rhs, [&] { return "a=" + ka(a) + ", F=" + R.format(F) + ", G=" + R.format(G); });
      }
    }
  }
  pg.into(r);
  return r;
}

Report check_minimal(const Globalization& g) {
  const Algebra& R = *g.envelope.algebra;
  Report r("minimal", g.name);
  auto rb = g.r_basis();
  r.set_window(std::to_string(g.a_window.size()) + " acting basis elements, dim R = " + std::to_string(rb.size()));
  auto killed = [&](const Vec& v) {
    return stack(g.a_window, [&](const Key& c) { return g.pi(g.envelope.act(c, v)); });
  };

  Tally battery("cyclic submodules: π(A▷v) = 0 ⇒ v = 0");
  for (const Vec& v : g.generators)
    battery.record(v.is_zero() || !killed(v).is_zero(), [&] { return R.format(v); });
  battery.into(r, "one cyclic submodule per generator");

  std::vector<Vec> images;
  for (const Vec& v : rb) images.push_back(killed(v));
  auto ns = null_space(images);
  if (ns.empty())
    r.pass("largest submodule killed by π is zero", "exact null space", rb.size());
  else
    r.fail("largest submodule killed by π is zero", R.format(combine(ns.front(), rb)),
           std::to_string(ns.size()) + "-dimensional submodule with π = 0");
  return r;
}

EnvelopeComparison compare_envelopes(const Globalization& g1, const Globalization& g2) {
  EnvelopeComparison out{Report("compare_envelopes", g1.name + " → " + g2.name), {}, std::nullopt, false};
  Report& r = out.report;
  const PartialActionData& p = g1.partial;
  const Algebra& R1 = *g1.envelope.algebra;
  const Algebra& R2 = *g2.envelope.algebra;
  const auto& lb = p.target->basis();
  const auto& aw = g1.a_window;
  auto ka = p.acting->algebra->key_formatter();
  auto t1 = theta_images(g1);
  auto t2 = theta_images(g2);
  auto b1 = g1.r_basis();
  auto b2 = g2.r_basis();
  r.set_window("dim R1 = " + std::to_string(b1.size()) + ", dim R2 = " + std::to_string(b2.size()));

  std::vector<Vec> psi2;
  for (const Vec& w : b2) psi2.push_back(to_standard(g2, t2, w));
  if (!null_space(psi2).empty())
    r.inconclusive("Φ well-defined", "R2 is not minimal: its comparison map to the standard envelope has a kernel");
  auto phi = [&](const Vec& v) -> std::optional<Vec> {
    auto c = solve(psi2, to_standard(g1, t1, v));
    if (!c) return std::nullopt;
    return combine(*c, b2);
  };

  Tally defined("Φ defined on R1");
  for (const Vec& v : b1) {
    auto img = phi(v);
    defined.record(img.has_value(), [&] { return R1.format(v); });
    out.table.emplace_back(v, img.value_or(Vec()));
  }
  defined.into(r);
  if (!defined.ok()) return out;
  auto Phi = [&](const Vec& v) { return *phi(v); };

  Tally gens("Φ(a▷θ₁(x)) = a▷θ₂(x)");
  std::vector<Vec> dom;
  std::vector<std::pair<Key, std::size_t>> labels;
  for (const Key& a : aw)
    for (std::size_t i = 0; i < lb.size(); ++i) {
      Vec u = g1.envelope.act(a, t1[i]);
      Vec w = g2.envelope.act(a, t2[i]);
      gens.record(Phi(u) == w, [&] { return "a=" + ka(a) + ", x=" + p.target->format(lb[i]); });
      dom.push_back(u);
      labels.emplace_back(a, i);
    }
  gens.into(r);

  // A relation among the a > theta1(x) must satisfy the criterion
  // sum c a_i . x_i = 0 for every c and vanish in R2.
  Tally wd("Φ well-defined (Σ ca_i·x_i = 0 for all c)");
  for (const Vec& rel : null_space(dom)) {
    bool crit = true;
    for (const Key& c : aw) {
      Vec s;
      for (const auto& [k, coef] : rel) {
        auto [a, i] = labels[static_cast<std::size_t>(k.head())];
        s += coef * p(p.acting->mul(Vec::basis(c), Vec::basis(a)), lb[i]);
      }
      if (!s.is_zero()) crit = false;
    }
    Vec image;
    for (const auto& [k, coef] : rel) {
      auto [a, i] = labels[static_cast<std::size_t>(k.head())];
      image += coef * g2.envelope.act(a, t2[i]);
    }
    wd.record(crit && image.is_zero(), [&] { return "relation " + format_vec(rel); });
  }
  wd.into(r);

  Tally hom("Φ homomorphism of A-module algebras");
  for (const Vec& u : b1) {
    for (const Vec& v : b1)
      hom.record(Phi(R1.multiply(u, v)) == R2.multiply(Phi(u), Phi(v)),
                 [&] { return "u=" + R1.format(u) + ", v=" + R1.format(v); });
    for (const Key& a : aw)
      hom.record(Phi(g1.envelope.act(a, u)) == g2.envelope.act(a, Phi(u)),
                 [&] { return "a=" + ka(a) + ", u=" + R1.format(u); });
  }
  hom.into(r);

  std::vector<Vec> images;
  for (const auto& row : out.table) images.push_back(row.second);
  std::size_t rk = rank_of(images);
  if (rk == b2.size())
    r.pass("Φ surjective", "rank " + std::to_string(rk), b1.size());
  else
    r.fail("Φ surjective", "rank " + std::to_string(rk) + " < " + std::to_string(b2.size()));

  auto ker = null_space(images);
  if (ker.empty()) {
    r.pass("Φ injective", "trivial kernel", b1.size());
  } else {
    out.kernel_witness = combine(ker.front(), b1);
    r.fail("Φ injective", R1.format(*out.kernel_witness), std::to_string(ker.size()) + "-dimensional kernel");
  }
  out.isomorphism = r.passed();
  return out;
}

ModuleAlgebra junk_module(MhaPtr acting, std::size_t dim) {
  MhaPtr m = acting;
  return {"junk(" + std::to_string(dim) + ")", m, zero_algebra(dim),
          [m](const Key& a, const Vec& j) { return m->counit(a) * j; }};
}

Globalization junk_envelope(const Globalization& g, const ModuleAlgebra& junk) {
  Globalization out = g;
  out.name = g.name + " ⊕ " + junk.name;
  AlgebraPtr sum = direct_sum(g.envelope.algebra, junk.algebra, g.envelope.algebra->name() + " ⊕ J");
  ModuleAlgebra base = g.envelope;
  ModuleAlgebra j = junk;
  out.envelope = {base.name + " ⊕ " + junk.name, base.acting, sum, [base, j](const Key& a, const Vec& v) {
                    return inject(0, base.act(a, component(0, v))) + inject(1, j.act(a, component(1, v)));
                  }};
  LinearOp theta = g.theta, pi = g.pi;
  out.theta = [theta](const Vec& x) { return inject(0, theta(x)); };
  out.pi = [pi](const Vec& v) { return inject(0, pi(component(0, v))); };
  out.generators.clear();
  for (const Vec& v : g.generators) out.generators.push_back(inject(0, v));
  for (const Vec& v : junk.algebra->basis()) out.generators.push_back(inject(1, v));
  return out;
}

namespace {

Vec relabel(const Group& grp, const Vec& v) {
  Vec out;
  for (const auto& [k, c] : v) {
    auto [g, r] = k.split_pair();
    out.add_term(Key::pair(grp.inv(g), r), c);
  }
  return out;
}

} // namespace

Globalization transport(const Globalization& g) {
  GroupPtr grp = g.partial.acting->group;
  if (!grp) throw CapabilityError("transport needs a group-based acting instance");
  AlgebraPtr R = g.envelope.algebra;
  Algebra::Spec s;
  s.name = "relabelled " + R->name();
  s.rule = [grp, R](const Key& x, const Key& y) {
    return relabel(*grp, R->multiply(relabel(*grp, Vec::basis(x)), relabel(*grp, Vec::basis(y))));
  };
  if (R->unital()) s.identity = relabel(*grp, R->identity());
  if (R->finite_dimensional()) {
    std::vector<Vec> basis;
    for (const Vec& b : R->basis()) basis.push_back(relabel(*grp, b));
    s.basis = basis;
  }
  s.format_key = [grp, R](const Key& k) {
    auto [h, r] = k.split_pair();
    return "τ" + R->key_formatter()(Key::pair(grp->inv(h), r));
  };
  s.group = grp;
  Globalization out = g;
  out.name = "transported " + g.name;
  ModuleAlgebra base = g.envelope;
  out.envelope = {"relabelled " + base.name, base.acting, std::make_shared<Algebra>(std::move(s)),
                  [base, grp](const Key& a, const Vec& v) { return relabel(*grp, base.act(a, relabel(*grp, v))); }};
  LinearOp theta = g.theta, pi = g.pi;
  out.theta = [theta, grp](const Vec& x) { return relabel(*grp, theta(x)); };
  out.pi = [pi, grp](const Vec& v) { return relabel(*grp, pi(relabel(*grp, v))); };
  out.generators.clear();
  for (const Vec& v : g.generators) out.generators.push_back(relabel(*grp, v));
  return out;
}

Globalization with_zero_projection(const Globalization& g) {
  Globalization out = g;
  out.name = g.name + " [π = 0]";
  out.pi = [](const Vec&) { return Vec(); };
  return out;
}

} // namespace mha
