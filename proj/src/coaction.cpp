#include "mha/coaction.hpp"

#include "mha/errors.hpp"
#include "mha/linalg.hpp"

#include <map>

namespace mha {

namespace {

// Splits t = sum w_b (x) b by its last leg.
std::map<Key, Vec> by_last_leg(const Vec& t) {
  std::map<Key, Vec> out;
  for (const auto& [k, c] : t) {
    auto [first, last] = k.split_pair();
    out[last].add_term(first, c);
  }
  return out;
}

// Applies f to the first leg of t.
Vec on_first_leg(const Vec& t, const LinearOp& f) {
  Vec out;
  for (const auto& [b, w] : by_last_leg(t)) out += tensor(f(w), Vec::basis(b));
  return out;
}

// (z (x) 1)t and t(z (x) 1).
Vec first_leg_left(const Algebra& l, const Vec& z, const Vec& t) {
  return on_first_leg(t, [&](const Vec& w) { return l.multiply(z, w); });
}

Vec first_leg_right(const Algebra& l, const Vec& t, const Vec& z) {
  return on_first_leg(t, [&](const Vec& w) { return l.multiply(w, z); });
}

std::vector<Vec> tensor_window(const std::vector<Vec>& xw, const std::vector<Key>& aw) {
  std::vector<Vec> out;
  for (const Vec& x : xw)
    for (const Key& a : aw) out.push_back(tensor(x, Vec::basis(a)));
  return out;
}

// rho(x)(1 (x) a) for an element a.
Vec rho_cov(const PartialCoactionData& c, const Vec& x, const Vec& a) {
  Vec out;
  for (const auto& [k, s] : a) out += s * c.rho_r(x, k);
  return out;
}

// (id (x) eps) on the last leg.
Vec counit_leg(const MhaInstance& m, const Vec& t) {
  Vec out;
  for (const auto& [b, w] : by_last_leg(t)) out += m.counit(b) * w;
  return out;
}

// (id (x) Delta)(rho(x))(1 (x) c (x) b) with c (x) b = sum Delta(a_i)(1 (x) b_i).
Vec id_delta_rho(const PartialCoactionData& c, const Vec& x, const Key& ck, const Key& bk) {
  const MhaInstance& m = *c.acting;
  Vec pre = m.t1_inv(ck, bk);
  Vec out;
  for (const auto& [k, s] : pre) {
    auto [ai, bi] = k.split_pair();
    for (const auto& [yk, t] : c.rho_r(x, ai)) {
      auto [y, alpha] = yk.split_pair();
      for (const auto& [dk, u] : m.delta_r(alpha, bi)) {
        auto [a1, a2] = dk.split_pair();
        out.add_term(Key::pair(Key::pair(y, a1), a2), s * t * u);
      }
    }
  }
  return out;
}

constexpr std::size_t kMultiplierSample = 64;

std::string window_text(std::size_t x, std::size_t a) {
  return std::to_string(x) + " target elements, " + std::to_string(a) + " acting basis elements";
}

Vec stack(const std::vector<Key>& aw, const std::function<Vec(const Key&)>& op) {
  Vec out;
  for (const Key& a : aw)
    for (const auto& [k, c] : op(a)) out.add_term(Key::pair(a, k), c);
  return out;
}

Multiplier leg_multiplier(std::function<Multiplier(const Key&)> per_key, std::vector<Vec> window) {
  auto side = [per_key](bool left) {
    return [per_key, left](const Vec& t) {
      Vec out;
      for (const auto& [b, w] : by_last_leg(t)) {
        Multiplier m = per_key(b);
        out += tensor(left ? m.left(w) : m.right(w), Vec::basis(b));
      }
      return out;
    };
  };
  return {side(true), side(false), std::move(window)};
}

std::vector<Vec> finite_tensor_window(const Algebra& l, const Algebra& a) {
  if (!l.finite_dimensional() || !a.finite_dimensional()) return {};
  std::vector<Vec> out;
  for (const Vec& x : l.basis())
    for (const Vec& y : a.basis()) out.push_back(tensor(x, y));
  return out;
}

} // namespace

Vec PartialCoactionData::rho_times(const Vec& x, const Vec& t) const {
  Vec out;
  for (const auto& [k, c] : t) {
    auto [z, b] = k.split_pair();
    out += c * first_leg_right(*target, rho_r(x, b), Vec::basis(z));
  }
  return out;
}

Vec PartialCoactionData::times_rho(const Vec& t, const Vec& x) const {
  Vec out;
  for (const auto& [k, c] : t) {
    auto [z, b] = k.split_pair();
    out += c * first_leg_left(*target, Vec::basis(z), rho_l(b, x));
  }
  return out;
}

PartialCoactionData trivial_coaction(AlgebraPtr l, GroupPtr g) {
  MhaPtr a = function_algebra_mha(g);
  Key one = g->identity();
  auto rho = [one](const Vec& x, const Key& k) { return k == one ? tensor(x, Vec::basis(one)) : Vec(); };
  auto e = [one](const Key& k) {
    return k == one ? identity_multiplier({}) : zero_multiplier({});
  };
  std::string name = "trivial:" + l->name() + ":" + g->name();
  std::vector<Vec> w = finite_tensor_window(*l, *a->algebra);
  return {std::move(name), l, a, rho, [rho](const Key& k, const Vec& x) { return rho(x, k); },
          leg_multiplier(e, w)};
}

PartialCoactionData coaction_from_group_action(const PartialGroupAction& p) {
  MhaPtr a = function_algebra_mha(p.group);
  GroupPtr g = p.group;
  auto rho = [p, g](const Vec& x, const Key& k) {
    return tensor(p.alpha(k, p.sigma(g->inv(k)).right(x)), Vec::basis(k));
  };
  std::vector<Vec> w = finite_tensor_window(*p.target, *a->algebra);
  return {"coaction:" + p.name, p.target, a, rho, [rho](const Key& k, const Vec& x) { return rho(x, k); },
          leg_multiplier(p.sigma, w)};
}

PartialCoactionData unital_coaction(std::string name, AlgebraPtr l, MhaPtr a,
                                    std::function<Vec(const Vec&, const Key&)> rho_r,
                                    std::function<Vec(const Key&, const Vec&)> rho_l) {
  if (!l->unital()) throw CapabilityError("E = rho(1) needs a unital target; " + l->name() + " has none");
  Vec one = l->identity();
  auto left = [l, one, rho_r](const Vec& t) {
    Vec out;
    for (const auto& [k, c] : t) {
      auto [z, b] = k.split_pair();
      out += c * first_leg_right(*l, rho_r(one, b), Vec::basis(z));
    }
    return out;
  };
  auto right = [l, one, rho_l](const Vec& t) {
    Vec out;
    for (const auto& [k, c] : t) {
      auto [z, b] = k.split_pair();
      out += c * first_leg_left(*l, Vec::basis(z), rho_l(b, one));
    }
    return out;
  };
  std::vector<Vec> w = finite_tensor_window(*l, *a->algebra);
  return {std::move(name), l, a, std::move(rho_r), std::move(rho_l), {left, right, w}};
}

PartialCoactionData inversion_coaction() {
  GroupPtr c2 = cyclic_group(2);
  GroupPtr c3 = cyclic_group(3);
  AlgebraPtr l = group_ring(c3);
  Key one = c2->identity();
  auto beta = [c3, one](const Key& g, const Vec& x) {
    if (g == one) return x;
    Vec out;
    for (const auto& [k, c] : x) out.add_term(c3->inv(k), c);
    return out;
  };
  auto rho = [beta](const Vec& x, const Key& g) { return tensor(beta(g, x), Vec::basis(g)); };
  return unital_coaction("inversion:C2:kC3", l, function_algebra_mha(c2), rho,
                         [rho](const Key& g, const Vec& x) { return rho(x, g); });
}

PartialCoactionData group_like_coaction(GroupPtr g) {
  AlgebraPtr l = group_ring(g);
  auto rr = [g](const Vec& x, const Key& a) {
    Vec out;
    for (const auto& [k, c] : x) out.add_term(Key::pair(k, g->mul(k, a)), c);
    return out;
  };
  auto rl = [g](const Key& a, const Vec& x) {
    Vec out;
    for (const auto& [k, c] : x) out.add_term(Key::pair(k, g->mul(a, k)), c);
    return out;
  };
  return unital_coaction("group_like:" + g->name(), l, group_algebra_mha(g), rr, rl);
}

PartialCoactionData tensor_coaction(AlgebraPtr l, MhaPtr a) {
  auto rr = [a](const Vec& v, const Key& b) {
    Vec out;
    for (const auto& [k, c] : v) {
      auto [lk, ak] = k.split_pair();
      for (const auto& [dk, d] : a->delta_r(ak, b)) {
        auto [a1, a2] = dk.split_pair();
        out.add_term(Key::pair(Key::pair(lk, a1), a2), c * d);
      }
    }
    return out;
  };
  auto rl = [a](const Key& b, const Vec& v) {
    Vec out;
    for (const auto& [k, c] : v) {
      auto [lk, ak] = k.split_pair();
      for (const auto& [dk, d] : a->delta_lf(b, ak)) {
        auto [a1, a2] = dk.split_pair();
        out.add_term(Key::pair(Key::pair(lk, a1), a2), c * d);
      }
    }
    return out;
  };
  AlgebraPtr t = tensor_algebra(l, a->algebra);
  std::vector<Vec> w = t->finite_dimensional() ? t->basis() : std::vector<Vec>{};
  return {"id⊗Δ:" + t->name(), t, a, rr, rl, identity_multiplier(w)};
}

Report check_partial_coaction(const PartialCoactionData& c, const std::vector<Vec>& xw,
                              const std::vector<Key>& aw) {
  const MhaInstance& m = *c.acting;
  const Algebra& L = *c.target;
  AlgebraPtr T = c.tensor();
  Report r("partial_coaction", c.name);
  r.set_window(window_text(xw.size(), aw.size()));
  auto ka = m.algebra->key_formatter();
  std::vector<Vec> tw = tensor_window(xw, aw);

  Tally te("E² = E");
  for (const Vec& t : tw) {
    Vec el = c.E.left(t);
    Vec er = c.E.right(t);
    te.record(c.E.left(el) == el && c.E.right(er) == er, [&] {
      return "t=" + T->format(t) + ": Et=" + T->format(el) + ", E(Et)=" + T->format(c.E.left(el));
    });
  }
  te.into(r);

  // The multiplier laws are quadratic in the window; large windows are
  // thinned to an evenly spaced sample.
  std::vector<Vec> mw;
  std::size_t stride = tw.size() / kMultiplierSample + 1;
  for (std::size_t i = 0; i < tw.size(); i += stride) mw.push_back(tw[i]);
  Report mr = multiplier_check(*T, c.E, mw);
  r.absorb(mr, "E ∈ M(L⊗A)");

  {
    std::vector<Vec> images;
    for (const Vec& x : xw) images.push_back(stack(aw, [&](const Key& a) { return c.rho_r(x, a); }));
    auto ker = null_space(images);
    if (ker.empty())
      r.pass("ρ injective", {}, xw.size());
    else
      r.fail("ρ injective", L.format(combine(ker.front(), xw)) + " has ρ(x)(1⊗A) = 0");
  }

  Tally th("ρ(xy) = ρ(x)ρ(y)");
  for (const Vec& x : xw)
    for (const Vec& y : xw)
      for (const Key& a : aw) {
        Vec lhs = c.rho_r(L.multiply(x, y), a);
        Vec rhs = c.rho_times(x, c.rho_r(y, a));
        th.record(lhs == rhs, [&] {
          return "x=" + L.format(x) + ", y=" + L.format(y) + ", a=" + ka(a) + ": " + T->format(lhs) + " vs " +
                 T->format(rhs);
        });
      }
  th.into(r, "covered by 1⊗a");

  {
    Subspace el, er;
    for (const Vec& t : tw) {
      el.insert(c.E.left(t));
      er.insert(c.E.right(t));
    }
    Tally ti("(i) ρ(L)(1⊗A) ⊆ E(L⊗A)");
    Tally tj("(i) (1⊗A)ρ(L) ⊆ (L⊗A)E");
    for (const Vec& x : xw)
      for (const Key& a : aw) {
        Vec v = c.rho_r(x, a);
        ti.record(el.contains(v), [&] { return "x=" + L.format(x) + ", a=" + ka(a) + ": " + T->format(v); });
        Vec w = c.rho_l(a, x);
        tj.record(er.contains(w), [&] { return "x=" + L.format(x) + ", a=" + ka(a) + ": " + T->format(w); });
      }
    ti.into(r);
    tj.into(r);
  }

  Tally t2("(ii) (ρ⊗ι)(ρ(x)(1⊗b)) = (E⊗1)(ι⊗Δ)(ρ(x))(1⊗1⊗b)");
  for (const Vec& x : xw)
    for (const Key& bk : aw) {
      Vec rb = c.rho_r(x, bk);
      for (const Key& ck : aw) {
        Vec lhs;
        for (const auto& [k, s] : rb) {
          auto [xi, ai] = k.split_pair();
          lhs += s * tensor(c.rho_r(Vec::basis(xi), ck), Vec::basis(ai));
        }
        Vec rhs = on_first_leg(id_delta_rho(c, x, ck, bk), c.E.left);
        t2.record(lhs == rhs, [&] {
          return "x=" + L.format(x) + ", b=" + ka(bk) + ", cover c=" + ka(ck) + ": " + format_vec(lhs) +
                 " vs " + format_vec(rhs);
        });
      }
    }
  t2.into(r, "covered by 1⊗c⊗1");

  Tally tl("Eρ(x) = ρ(x)");
  Tally tr("ρ(x)E = ρ(x)");
  Tally tc("(ι⊗ε)(ρ(x)(1⊗a)) = ε(a)x");
  for (const Vec& x : xw)
    for (const Key& a : aw) {
      Vec v = c.rho_r(x, a);
      Vec ev = c.E.left(v);
      tl.record(ev == v, [&] { return "x=" + L.format(x) + ", a=" + ka(a) + ": " + T->format(ev) + " vs " + T->format(v); });
      Vec w = c.rho_l(a, x);
      Vec we = c.E.right(w);
      tr.record(we == w, [&] { return "x=" + L.format(x) + ", a=" + ka(a) + ": " + T->format(we) + " vs " + T->format(w); });
      Vec back = counit_leg(m, v);
      Vec want = m.counit(a) * x;
      tc.record(back == want, [&] { return "x=" + L.format(x) + ", a=" + ka(a) + ": " + L.format(back); });
    }
  tl.into(r, "covered by 1⊗a");
  tr.into(r, "covered by 1⊗a on the left");
  tc.into(r);
  return r;
}

Report check_symmetric_coaction(const PartialCoactionData& c, const std::vector<Vec>& xw,
                                const std::vector<Key>& aw) {
  const MhaInstance& m = *c.acting;
  const Algebra& L = *c.target;
  Report r("symmetric_coaction", c.name);
  r.set_window(window_text(xw.size(), aw.size()));
  auto ka = m.algebra->key_formatter();
  Tally t3("(iii) (ρ⊗ι)(ρ(x)) = (ι⊗Δ)(ρ(x))(E⊗1)");
  for (const Vec& x : xw)
    for (const Key& bk : aw) {
      Vec rb = c.rho_r(x, bk);
      for (const Key& ck : aw)
        for (const Vec& y : xw) {
          Vec lhs;
          for (const auto& [k, s] : rb) {
            auto [xi, ai] = k.split_pair();
            lhs += s * tensor(first_leg_right(L, c.rho_r(Vec::basis(xi), ck), y), Vec::basis(ai));
          }
          Vec rhs;
          for (const auto& [k, s] : c.E.left(tensor(y, Vec::basis(ck)))) {
            auto [yj, cj] = k.split_pair();
            Vec d = id_delta_rho(c, x, cj, bk);
            rhs += s * on_first_leg(d, [&](const Vec& w) { return first_leg_right(L, w, Vec::basis(yj)); });
          }
          t3.record(lhs == rhs, [&] {
            return "x=" + L.format(x) + ", b=" + ka(bk) + ", cover " + L.format(y) + "⊗" + ka(ck) + ": " +
                   format_vec(lhs) + " vs " + format_vec(rhs);
          });
        }
    }
  t3.into(r, "covered by y⊗c⊗1");
  return r;
}

Report check_coaction_images(const PartialCoactionData& c, const std::vector<Vec>& xw,
                             const std::vector<Key>& aw) {
  Report r("coaction_images", c.name);
  r.set_window(window_text(xw.size(), aw.size()));
  Subspace rl, el, rr, er;
  for (const Vec& x : xw)
    for (const Key& a : aw) {
      rl.insert(c.rho_r(x, a));
      rr.insert(c.rho_l(a, x));
      Vec t = tensor(x, Vec::basis(a));
      el.insert(c.E.left(t));
      er.insert(c.E.right(t));
    }
  auto compare = [&](const std::string& name, const Subspace& u, const Subspace& v) {
    if (u.equals(v)) {
      r.pass(name, "dimension " + std::to_string(u.dim()));
      return;
    }
    for (const Vec& b : u.basis())
      if (!v.contains(b)) return r.fail(name, format_vec(b) + " only on the left");
    for (const Vec& b : v.basis())
      if (!u.contains(b)) return r.fail(name, format_vec(b) + " only on the right");
  };
  compare("ρ(L)(1⊗A) = E(L⊗A)", rl, el);
  compare("(1⊗A)ρ(L) = (L⊗A)E", rr, er);
  return r;
}

bool is_global(const PartialCoactionData& c, const std::vector<Vec>& window) {
  for (const Vec& t : window)
    if (c.E.left(t) != t || c.E.right(t) != t) return false;
  return true;
}

Report check_quasi_counitary(const MhaInstance& a, const Vec& e, const std::vector<Key>& aw) {
  Report r("quasi_counitary", a.name + ", e = " + a.format(e));
  r.set_window(std::to_string(aw.size()) + " acting basis elements");
  if (e.is_zero())
    r.fail("e ≠ 0", "e = 0");
  else
    r.pass("e ≠ 0");
  Tally tc("e central");
  for (const Key& k : aw) {
    Vec d = Vec::basis(k);
    Vec l = a.mul(e, d);
    Vec rr = a.mul(d, e);
    tc.record(l == rr, [&] { return "a=" + a.format(d) + ": " + a.format(l) + " vs " + a.format(rr); });
  }
  tc.into(r);
  Vec ee = a.mul(e, e);
  if (ee == e)
    r.pass("e² = e");
  else
    r.fail("e² = e", "e² = " + a.format(ee));
  Vec lhs = extend2(e, e, a.delta_rf);
  Vec rhs = tensor(e, e);
  if (lhs == rhs)
    r.pass("Δ(e)(e⊗1) = e⊗e");
  else
    r.fail("Δ(e)(e⊗1) = e⊗e", a.format_tensor(lhs) + " vs " + a.format_tensor(rhs));
  Scalar eps = a.eps(e);
  if (eps == 1)
    r.pass("ε(e) = 1");
  else
    r.fail("ε(e) = 1", "ε(e) = " + to_string(eps));
  return r;
}

Vec dual_act(const PartialCoactionData& c, const DualFunctional& omega, const Vec& x) {
  if (omega.is_zero()) return {};
  std::vector<Vec> supp;
  for (const auto& [k, s] : omega) supp.push_back(Vec::basis(k));
  Vec b = local_unit(*c.acting->algebra, supp);
  Vec out;
  for (const auto& [a, w] : by_last_leg(rho_cov(c, x, b))) out += omega.coeff(a) * w;
  return out;
}

DualFunctional dual_product(const MhaInstance& a, const DualFunctional& w1, const DualFunctional& w2,
                            const std::vector<Key>& aw) {
  auto cover = [&](const DualFunctional& w) {
    std::vector<Vec> supp;
    for (const auto& [k, s] : w) supp.push_back(Vec::basis(k));
    return local_unit(*a.algebra, supp);
  };
  if (w1.is_zero() || w2.is_zero()) return {};
  Vec b1 = cover(w1);
  Vec b2 = cover(w2);
  DualFunctional out;
  for (const Key& k : aw) {
    Vec d = extend2(Vec::basis(k), b2, a.delta_r);
    Scalar s = 0;
    for (const auto& [pk, c] : d) {
      auto [u, v] = pk.split_pair();
      Vec ub = a.mul(Vec::basis(u), b1);
      for (const auto& [uk, cu] : ub) s += c * cu * w1.coeff(uk) * w2.coeff(v);
    }
    out.add_term(k, s);
  }
  return out;
}

GeneratedSubcomodule generated_subcomodule(const PartialCoactionData& c, const std::vector<Vec>& p,
                                           const std::vector<Key>& aw, std::size_t bound) {
  const Algebra& M = *c.target;
  auto ka = c.acting->algebra->key_formatter();
  GeneratedSubcomodule out;
  out.report = Report("generated_subcomodule", c.name);
  out.report.set_window(window_text(p.size(), aw.size()) + ", bound " + std::to_string(bound));
  Report& r = out.report;
  Subspace& q = out.space;
  auto over = [&] {
    if (q.dim() <= bound) return false;
    out.complete = false;
    r.inconclusive("closure within the dimension bound",
                   "dimension exceeded " + std::to_string(bound) + " before the closure stabilized");
    return true;
  };
  for (const Vec& u : p)
    for (const Key& a : aw) {
      for (const auto& [ai, x] : by_last_leg(c.rho_r(u, a))) q.insert(x);
      if (over()) return out;
    }
  r.pass("components x_{i,a} of ρ(u)(1⊗a)", "span of dimension " + std::to_string(q.dim()));
  for (std::size_t k = 0; k < q.dim(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Vec bk = q.basis()[k];
      Vec bj = q.basis()[j];
      q.insert(M.multiply(bk, bj));
      q.insert(M.multiply(bj, bk));
      if (over()) return out;
    }
  }
  r.pass("closed under the product", "dimension " + std::to_string(q.dim()));

  Tally ts("ρ(Q)(1⊗A) ⊆ Q⊗A");
  for (const Vec& v : q.basis())
    for (const Key& a : aw)
      for (const auto& [ai, x] : by_last_leg(c.rho_r(v, a)))
        ts.record(q.contains(x), [&] { return "v=" + M.format(v) + ", a=" + ka(a) + ": component " + M.format(x); });
  ts.into(r);

  std::optional<Key> a0;
  for (const Key& a : aw)
    if (c.acting->counit(a) == 1) {
      a0 = a;
      break;
    }
  std::string name = "u = (ι⊗ε)(ρ(u)(1⊗a)) ∈ Q";
  if (!a0) {
    r.inconclusive(name, "no window element with ε(a) = 1");
  } else {
    Tally tu(name);
    for (const Vec& u : p) {
      Vec back = counit_leg(*c.acting, c.rho_r(u, *a0));
      tu.record(back == u && q.contains(u), [&] { return "u=" + M.format(u) + ": " + M.format(back); });
    }
    tu.into(r, "a = " + ka(*a0));
  }
  return out;
}

Vec CoactionGlobalization::phi_E(const Vec& t) const {
  const auto& lb = partial.target->basis();
  std::vector<Vec> images;
  for (const Vec& x : lb) images.push_back(theta(x));
  Vec out;
  for (const auto& [b, w] : by_last_leg(t)) {
    auto coeffs = solve(images, w);
    if (!coeffs) throw NoSolutionError("first leg " + ambient.target->format(w) + " is outside θ(L)");
    Vec x = combine(*coeffs, lb);
    out += on_first_leg(partial.E.left(tensor(x, Vec::basis(b))), theta);
  }
  return out;
}

CoactionGlobalization coaction_globalize(const PartialCoactionData& c, const Vec& e, const std::vector<Key>& aw,
                                         std::size_t bound) {
  if (!c.target->finite_dimensional()) throw RejectedInput(c.target->name() + " is not finite dimensional");
  const auto& lb = c.target->basis();
  Report pc = check_partial_coaction(c, lb, aw);
  if (!pc.passed()) throw RejectedInput("check_partial_coaction: " + pc.first_failure()->name);
  Report qc = check_quasi_counitary(*c.acting, e, aw);
  if (!qc.passed()) throw RejectedInput("check_quasi_counitary: " + qc.first_failure()->name);

  CoactionGlobalization g;
  g.name = "envelope:" + c.name;
  g.partial = c;
  g.ambient = tensor_coaction(c.target, c.acting);
  g.e = e;
  g.a_window = aw;
  auto ccopy = c;
  g.theta = [ccopy, e](const Vec& x) { return rho_cov(ccopy, x, e); };
  MhaPtr a = c.acting;
  g.pi = [ccopy, a, e](const Vec& v) {
    Vec ev;
    for (const auto& [k, s] : v) {
      auto [lk, ak] = k.split_pair();
      ev += s * tensor(Vec::basis(lk), a->mul(e, Vec::basis(ak)));
    }
    return ccopy.E.left(ev);
  };
  std::vector<Vec> r;
  for (const Vec& x : lb) r.push_back(g.theta(x));
  auto gen = generated_subcomodule(g.ambient, r, aw, bound);
  if (!gen.complete) throw InconclusiveError("closure of θ(L) exceeded the dimension bound " + std::to_string(bound));
  g.q_basis = gen.space.basis();
  return g;
}

Report check_coglobalization(const CoactionGlobalization& g) {
  const PartialCoactionData& c = g.partial;
  const Algebra& L = *c.target;
  const Algebra& M = *g.ambient.target;
  const auto& lb = L.basis();
  const auto& qb = g.q_basis;
  const auto& aw = g.a_window;
  Report r("coglobalization", g.name);
  r.set_window(std::to_string(lb.size()) + " basis elements of L, " + std::to_string(qb.size()) +
               " of Q, " + std::to_string(aw.size()) + " acting basis elements");
  Subspace q(qb);
  std::vector<Vec> thl;
  for (const Vec& x : lb) thl.push_back(g.theta(x));
  Subspace tl(thl);

  r.absorb(check_partial_coaction(g.ambient, qb, aw), "(i)");
  if (is_global(g.ambient, tensor_window(qb, aw)))
    r.pass("(i) E = 1 on Q⊗A");
  else
    r.fail("(i) E = 1 on Q⊗A", "ι⊗Δ has a nontrivial E");
  Tally tsub("(i) Q subalgebra");
  for (const Vec& v : qb)
    for (const Vec& w : qb) {
      Vec p = M.multiply(v, w);
      tsub.record(q.contains(p), [&] { return M.format(v) + " · " + M.format(w) + " = " + M.format(p); });
    }
  tsub.into(r);
  Tally tco("(i) ρ(Q)(1⊗A) ⊆ Q⊗A");
  for (const Vec& v : qb)
    for (const Key& a : aw)
      for (const auto& [ai, x] : by_last_leg(g.ambient.rho_r(v, a)))
        tco.record(q.contains(x), [&] { return "v=" + M.format(v) + ": component " + M.format(x); });
  tco.into(r);

  Tally tm("(ii) θ(xy) = θ(x)θ(y)");
  for (const Vec& x : lb)
    for (const Vec& y : lb) {
      Vec lhs = g.theta(L.multiply(x, y));
      Vec rhs = M.multiply(g.theta(x), g.theta(y));
      tm.record(lhs == rhs, [&] { return "x=" + L.format(x) + ", y=" + L.format(y) + ": " + M.format(lhs) + " vs " + M.format(rhs); });
    }
  tm.into(r);
  {
    auto ker = null_space(thl);
    if (ker.empty())
      r.pass("(ii) θ injective", {}, lb.size());
    else
      r.fail("(ii) θ injective", L.format(combine(ker.front(), lb)) + " ↦ 0");
  }

  Tally tin("(iii) θ(L) ⊆ Q");
  for (const Vec& t : thl) tin.record(q.contains(t), [&] { return M.format(t); });
  tin.into(r);
  Tally tid("(iii) θ(L) right ideal of Q");
  for (const Vec& t : thl)
    for (const Vec& v : qb) {
      Vec p = M.multiply(t, v);
      tid.record(tl.contains(p), [&] { return M.format(t) + " · " + M.format(v) + " = " + M.format(p); });
    }
  tid.into(r);

  Tally tpp("π∘π = π");
  Tally tph("π(vw) = π(v)π(w)");
  Subspace im;
  for (const Vec& v : qb) {
    Vec pv = g.pi(v);
    im.insert(pv);
    tpp.record(g.pi(pv) == pv, [&] { return "v=" + M.format(v) + ": π(v)=" + M.format(pv); });
    for (const Vec& w : qb) {
      Vec lhs = g.pi(M.multiply(v, w));
      Vec rhs = M.multiply(pv, g.pi(w));
      tph.record(lhs == rhs, [&] { return "v=" + M.format(v) + ", w=" + M.format(w) + ": " + M.format(lhs) + " vs " + M.format(rhs); });
    }
  }
  tpp.into(r);
  tph.into(r);
  if (im.equals(tl)) {
    r.pass("π(Q) = θ(L)", "dimension " + std::to_string(tl.dim()));
  } else {
    std::string w;
    for (const Vec& b : im.basis())
      if (!tl.contains(b)) {
        w = M.format(b) + " ∈ π(Q) \\ θ(L)";
        break;
      }
    if (w.empty()) w = "dim π(Q) = " + std::to_string(im.dim()) + " < dim θ(L) = " + std::to_string(tl.dim());
    r.fail("π(Q) = θ(L)", w);
  }
  Tally tpt("π∘θ = θ");
  for (std::size_t i = 0; i < lb.size(); ++i)
    tpt.record(g.pi(thl[i]) == thl[i], [&] { return "x=" + L.format(lb[i]) + ": " + M.format(g.pi(thl[i])); });
  tpt.into(r);

  Tally t4("(iv) (θ⊗ι)(ρ̄(x)(1⊗e)) = (π⊗ι)(ρ(θ(x))(1⊗e))");
  for (std::size_t i = 0; i < lb.size(); ++i) {
    Vec lhs = on_first_leg(rho_cov(c, lb[i], g.e), g.theta);
    Vec rhs = on_first_leg(rho_cov(g.ambient, thl[i], g.e), g.pi);
    t4.record(lhs == rhs, [&] { return "x=" + L.format(lb[i]) + ": " + format_vec(lhs) + " vs " + format_vec(rhs); });
  }
  t4.into(r);

  Tally tep("E-projection: (π⊗ι)(ρ(π(y))(1⊗e)) = Φ(E)(π⊗ι)(ρ(y)(1⊗e))");
  for (const Vec& y : qb) {
    Vec lhs = on_first_leg(rho_cov(g.ambient, g.pi(y), g.e), g.pi);
    Vec inner = on_first_leg(rho_cov(g.ambient, y, g.e), g.pi);
    std::optional<Vec> rhs;
    std::string why;
    try {
      rhs = g.phi_E(inner);
    } catch (const NoSolutionError& ex) {
      why = ex.what();
    }
    tep.record(rhs && lhs == *rhs, [&] {
      return "y=" + M.format(y) + ": " + format_vec(lhs) + " vs " + (rhs ? format_vec(*rhs) : "Φ(E) undefined, " + why);
    });
  }
  tep.into(r);

  {
    auto regen = generated_subcomodule(g.ambient, thl, aw, std::max(kDefaultClosureBound, qb.size()));
    if (!regen.complete)
      r.inconclusive("(v) Q generated by θ(L)", "closure of θ(L) exceeded the bound");
    else if (regen.space.equals(q))
      r.pass("(v) Q generated by θ(L)", "dimension " + std::to_string(q.dim()));
    else {
      std::string w;
      for (const Vec& b : qb)
        if (!regen.space.contains(b)) {
          w = M.format(b) + " ∈ Q outside the subcomodule algebra generated by θ(L)";
          break;
        }
      if (w.empty()) w = "the generated subcomodule algebra is not inside Q";
      r.fail("(v) Q generated by θ(L)", w);
    }
  }

  if (L.unital() && c.acting->algebra->unital()) {
    Vec t1 = g.theta(L.identity());
    Tally tu("unital: π(v) = θ(1_L)v");
    for (const Vec& v : qb) {
      Vec lhs = g.pi(v);
      Vec rhs = M.multiply(t1, v);
      tu.record(lhs == rhs, [&] { return "v=" + M.format(v) + ": " + M.format(lhs) + " vs " + M.format(rhs); });
    }
    tu.into(r);
  }
  return r;
}

CoglobMutation parse_coglob_mutation(std::string_view s) {
  if (s == "identity_projection") return CoglobMutation::identity_projection;
  if (s == "enlarged_envelope") return CoglobMutation::enlarged_envelope;
  throw StructuralError("unknown coglobalization mutation '" + std::string(s) + "'");
}

CoactionGlobalization mutate(const CoactionGlobalization& g, CoglobMutation what) {
  CoactionGlobalization out = g;
  out.q_basis = g.ambient.target->basis();
  if (what == CoglobMutation::identity_projection) {
    out.name += " [π = id]";
    out.pi = [](const Vec& v) { return v; };
  } else {
    out.name += " [Q = L⊗A]";
  }
  return out;
}

} // namespace mha
