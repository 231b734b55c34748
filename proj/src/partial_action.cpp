#include "mha/partial_action.hpp"

#include "mha/convolution.hpp"
#include "mha/errors.hpp"
#include "mha/linalg.hpp"

#include <algorithm>

namespace mha {

Vec PartialActionData::operator()(const Vec& a, const Vec& x) const {
  Vec out;
  for (const auto& [k, c] : a) out += c * act(k, x);
  return out;
}

Vec PartialActionData::e_left(const Vec& a, const Vec& x) const {
  Vec out;
  for (const auto& [k, c] : a) out += c * e_map(k).left(x);
  return out;
}

Vec PartialActionData::e_right(const Vec& a, const Vec& x) const {
  Vec out;
  for (const auto& [k, c] : a) out += c * e_map(k).right(x);
  return out;
}

namespace {

std::string window_text(std::size_t a, std::size_t x) {
  return std::to_string(a) + " acting basis elements, " + std::to_string(x) + " target elements";
}

std::vector<Vec> target_basis_or_empty(const Algebra& a) {
  return a.finite_dimensional() ? a.basis() : std::vector<Vec>{};
}

// Stacks the vectors op(a) for a in the window into one vector, tagging keys
// by a so that the blocks stay apart.
Vec stack(const std::vector<Key>& aw, const std::function<Vec(const Key&)>& op) {
  Vec out;
  for (const Key& a : aw)
    for (const auto& [k, c] : op(a)) out.add_term(Key::pair(a, k), c);
  return out;
}

bool member_of_window(const std::vector<Key>& n, const Key& g) {
  return std::binary_search(n.begin(), n.end(), g);
}

} // namespace

Report check_partial_action(const PartialActionData& p, const std::vector<Key>& aw, const std::vector<Vec>& xw) {
  const MhaInstance& m = *p.acting;
  const Algebra& L = *p.target;
  Report r("partial_action", p.name);
  r.set_window(window_text(aw.size(), xw.size()));
  auto ka = m.algebra->key_formatter();
  auto b = [](const Key& k) { return Vec::basis(k); };

  Tally t1("(i) a·(x(b·y)) = (a₁·x)(a₂b·y)");
  for (const Key& a : aw)
    for (const Key& bk : aw) {
      Vec cover = sweedler_cov(m, Sweedler::plain_r, b(a), b(bk));
      for (const Vec& x : xw)
        for (const Vec& y : xw) {
          Vec lhs = p.act(a, L.multiply(x, p.act(bk, y)));
          Vec rhs = extend_pairs(cover, [&](const Key& u, const Key& v) {
            return L.multiply(p.act(u, x), p.act(v, y));
          });
          t1.record(lhs == rhs, [&] {
            return "a=" + ka(a) + ", b=" + ka(bk) + ", x=" + L.format(x) + ", y=" + L.format(y) + ": " +
                   L.format(lhs) + " vs " + L.format(rhs);
          });
        }
    }
  t1.into(r);

  Tally t2("(ii) 𝔢(a)(b·x) = a₁·(S(a₂)b·x)");
  for (const Key& a : aw)
    for (const Key& bk : aw) {
      Vec cover = sweedler_cov(m, Sweedler::iS, b(a), b(bk));
      for (const Vec& x : xw) {
        Vec lhs = p.e_map(a).left(p.act(bk, x));
        Vec rhs = extend_pairs(cover, [&](const Key& u, const Key& v) { return p.act(u, p.act(v, x)); });
        t2.record(lhs == rhs, [&] {
          return "a=" + ka(a) + ", b=" + ka(bk) + ", x=" + L.format(x) + ": " + L.format(lhs) + " vs " +
                 L.format(rhs);
        });
      }
    }
  t2.into(r);

  Subspace ax;
  for (const Key& a : aw)
    for (const Vec& x : xw) ax.insert(p.act(a, x));
  Tally t2b("(ii) 𝔢(A)L ⊆ A·L");
  for (const Key& a : aw)
    for (const Vec& x : xw) {
      Vec y = p.e_map(a).left(x);
      t2b.record(ax.contains(y), [&] { return "𝔢(" + ka(a) + ")" + L.format(x) + " = " + L.format(y); });
    }
  t2b.into(r, "membership in the span of A·L over the window");

  Tally tm("𝔢(a) ∈ M(L)");
  for (const Key& a : aw) {
    Report mr = multiplier_check(L, p.e_map(a), xw);
    tm.record(mr.passed(), [&] {
      const CheckItem* f = mr.first_failure();
      return "a=" + ka(a) + (f ? ": " + f->name + " at " + f->witness : std::string());
    });
  }
  tm.into(r);

  // (iii): a_i b = a_i = b a_i forces b to cover the window, so the
  // support-union local unit is the canonical candidate.
  {
    std::vector<Vec> as;
    for (const Key& a : aw) as.push_back(b(a));
    std::optional<Vec> unit;
    try {
      unit = local_unit(*m.algebra, as);
    } catch (const Error&) {
    }
    std::string name = "(iii) a_ib = a_i = ba_i and a_i·x_j = a_i·(b·x_j)";
    if (!unit) {
      r.inconclusive(name, "no local unit for the window in " + m.algebra->name());
    } else {
      Tally t3(name);
      for (const Key& a : aw)
        for (const Vec& x : xw) {
          Vec lhs = p.act(a, x);
          Vec rhs = p.act(a, p(*unit, x));
          t3.record(lhs == rhs, [&] { return "b=" + m.format(*unit) + ", a=" + ka(a) + ", x=" + L.format(x); });
        }
      if (t3.ok() || m.algebra->unital()) {
        t3.into(r, "b = " + m.format(*unit));
      } else {
        r.inconclusive(name, "support-union candidate b = " + m.format(*unit) +
                                 " rejected; larger candidates outside the window not searched");
      }
    }
  }

  // (iv): x -> (a·x)_a must be injective on the span of the window.
  {
    std::vector<Vec> images;
    for (const Vec& x : xw) images.push_back(stack(aw, [&](const Key& a) { return p.act(a, x); }));
    std::optional<Vec> witness;
    for (const Vec& nv : null_space(images)) {
      Vec w = combine(nv, xw);
      if (!w.is_zero()) {
        witness = w;
        break;
      }
    }
    std::string name = "(iv) A·x = 0 ⇒ x = 0";
    if (witness)
      r.fail(name, L.format(*witness), "A·x vanishes on the window");
    else
      r.pass(name, "exact null space over the window", xw.size());
  }
  return r;
}

Report check_symmetric(const PartialActionData& p, const std::vector<Key>& aw, const std::vector<Vec>& xw) {
  const MhaInstance& m = *p.acting;
  if (!m.regular()) throw CapabilityError(m.name + " is not regular: symmetric conditions need S^-1");
  const Algebra& L = *p.target;
  Report r("symmetric", p.name);
  r.set_window(window_text(aw.size(), xw.size()));
  auto ka = m.algebra->key_formatter();
  auto b = [](const Key& k) { return Vec::basis(k); };

  Tally t5("(v) a·((b·x)y) = (a₁b·x)(a₂·y)");
  for (const Key& a : aw)
    for (const Key& bk : aw) {
      Vec cover = extend2(b(a), b(bk), m.delta_rf);
      for (const Vec& x : xw)
        for (const Vec& y : xw) {
          Vec lhs = p.act(a, L.multiply(p.act(bk, x), y));
          Vec rhs = extend_pairs(cover, [&](const Key& u, const Key& v) {
            return L.multiply(p.act(u, x), p.act(v, y));
          });
          t5.record(lhs == rhs, [&] {
            return "a=" + ka(a) + ", b=" + ka(bk) + ", x=" + L.format(x) + ", y=" + L.format(y);
          });
        }
    }
  t5.into(r);

  Tally t6("(vi) (b·x)𝔢(a) = a₂·(S⁻¹(a₁)b·x)");
  for (const Key& a : aw)
    for (const Key& bk : aw) {
      Vec cover = sweedler_cov(m, Sweedler::Sinv, b(a), b(bk));
      for (const Vec& x : xw) {
        Vec lhs = p.e_map(a).right(p.act(bk, x));
        Vec rhs = extend_pairs(cover, [&](const Key& u, const Key& v) { return p.act(u, p.act(v, x)); });
        t6.record(lhs == rhs, [&] {
          return "a=" + ka(a) + ", b=" + ka(bk) + ", x=" + L.format(x) + ": " + L.format(lhs) + " vs " +
                 L.format(rhs);
        });
      }
    }
  t6.into(r);

  Subspace ax;
  for (const Key& a : aw)
    for (const Vec& x : xw) ax.insert(p.act(a, x));
  Tally t7("(vii) L𝔢(A) ⊆ A·L");
  for (const Key& a : aw)
    for (const Vec& x : xw) {
      Vec y = p.e_map(a).right(x);
      t7.record(ax.contains(y), [&] { return L.format(x) + "𝔢(" + ka(a) + ") = " + L.format(y); });
    }
  t7.into(r, "membership in the span of A·L over the window");
  return r;
}

bool is_global(const PartialActionData& p, const std::vector<Key>& aw, const std::vector<Vec>& xw) {
  for (const Key& a : aw) {
    Scalar e = p.acting->counit(a);
    Multiplier mu = p.e_map(a);
    for (const Vec& x : xw)
      if (mu.left(x) != e * x || mu.right(x) != e * x) return false;
  }
  return true;
}

ModuleAlgebra functions_on_group_ring(GroupPtr g) {
  return {"A_G:" + g->name() + " on kG", function_algebra_mha(g), group_ring(g),
          [](const Key& p, const Vec& x) { return Vec::basis(p, x.coeff(p)); }};
}

PartialActionData example_fN(GroupPtr g, const std::vector<Key>& n_in, const std::string& n_name) {
  std::vector<Key> n = n_in;
  std::sort(n.begin(), n.end());
  if (!is_subgroup(*g, n)) throw StructuralError(n_name + " is not a subgroup of " + g->name());
  if (!is_normal(*g, n)) throw StructuralError(n_name + " is not normal in " + g->name());
  AlgebraPtr kg = group_ring(g);
  Scalar inv_n = make_scalar(1, static_cast<long>(n.size()));
  Vec fn;
  for (const Key& h : n) fn.add_term(h, inv_n);
  AlgebraPtr L = corner_algebra(kg, fn, "fN_" + n_name);
  auto fn_times = [g, fn](const Key& p) {
    Vec out;
    for (const auto& [h, c] : fn) out.add_term(g->mul(h, p), c);
    return out;
  };
  // x in f_N kG equals sum_h x_h f_N h.
  ModuleAction act = [g, n, inv_n, fn_times](const Key& p, const Vec& x) {
    Scalar s;
    for (const auto& [h, c] : x)
      if (member_of_window(n, g->mul(p, g->inv(h)))) s += c;
    if (s == 0) return Vec();
    return (s * inv_n) * fn_times(p);
  };
  std::vector<Vec> window = L->basis();
  auto e_map = [n, inv_n, window](const Key& p) {
    return scale(identity_multiplier(window), member_of_window(n, p) ? inv_n : Scalar(0));
  };
  return {"example_fN(" + g->name() + ", " + n_name + ")", function_algebra_mha(g), L, act, e_map};
}

PartialActionData example_lambda(GroupPtr g, const std::vector<Key>& n_in, AlgebraPtr target,
                                 const std::string& n_name) {
  std::vector<Key> n = n_in;
  std::sort(n.begin(), n.end());
  if (!is_subgroup(*g, n)) throw StructuralError(n_name + " is not a subgroup of " + g->name());
  Scalar inv_n = make_scalar(1, static_cast<long>(n.size()));
  auto lambda = [n, inv_n](const Key& p) { return member_of_window(n, p) ? inv_n : Scalar(0); };
  std::vector<Vec> window = target_basis_or_empty(*target);
  return {"lambda(" + g->name() + ", " + n_name + ") on " + target->name(), function_algebra_mha(g), target,
          [lambda](const Key& p, const Vec& x) { return lambda(p) * x; },
          [lambda, window](const Key& p) { return scale(identity_multiplier(window), lambda(p)); }};
}

PartialActionData global_as_partial(const ModuleAlgebra& ma) {
  MhaPtr m = ma.acting;
  std::vector<Vec> window = target_basis_or_empty(*ma.algebra);
  return {ma.name, m, ma.algebra, ma.act,
          [m, window](const Key& a) { return scale(identity_multiplier(window), m->counit(a)); }};
}

AlgebraPtr subalgebra(AlgebraPtr ambient, std::vector<Vec> basis, std::string name) {
  Algebra::Spec s;
  s.name = std::move(name);
  s.rule = ambient->rule();
  s.basis = std::move(basis);
  s.format_key = ambient->key_formatter();
  s.group = ambient->group();
  return std::make_shared<Algebra>(std::move(s));
}

AProjection idempotent_projection(const ModuleAlgebra& global, const Vec& f, std::string fname) {
  AlgebraPtr R = global.algebra;
  AlgebraPtr sub;
  try {
    sub = corner_algebra(R, f, fname);
  } catch (const StructuralError&) {
    Subspace span;
    for (const Vec& b : R->basis()) span.insert(R->multiply(f, b));
    sub = subalgebra(R, span.basis(), fname + "·" + R->name());
  }
  return {"π = " + fname + "·", global, sub, [R, f](const Vec& y) { return R->multiply(f, y); }};
}

AProjection identity_projection(const ModuleAlgebra& global) {
  return {"π = id", global, global.algebra, [](const Vec& y) { return y; }};
}

Report check_a_projection(const AProjection& pi, const std::vector<Key>& aw, const std::vector<Vec>& rw,
                          bool symmetric) {
  const Algebra& R = *pi.global.algebra;
  const Algebra& L = *pi.sub;
  const auto& act = pi.global.act;
  Report r(symmetric ? "symmetric_a_projection" : "a_projection", pi.name);
  r.set_window(window_text(aw.size(), rw.size()));
  auto ka = pi.global.acting->algebra->key_formatter();

  Tally idem("π∘π = π");
  for (const Vec& x : rw) {
    Vec px = pi.pi(x);
    idem.record(pi.pi(px) == px, [&] { return R.format(x); });
  }
  idem.into(r);

  Tally mult("π(xy) = π(x)π(y)");
  for (const Vec& x : rw)
    for (const Vec& y : rw)
      mult.record(pi.pi(R.multiply(x, y)) == R.multiply(pi.pi(x), pi.pi(y)),
                  [&] { return "x=" + R.format(x) + ", y=" + R.format(y); });
  mult.into(r);

  Subspace span(L.basis());
  Tally image("Im π ⊆ L and π = id on L");
  for (const Vec& x : rw) image.record(span.contains(pi.pi(x)), [&] { return "π(" + R.format(x) + ") ∉ L"; });
  for (const Vec& l : L.basis()) image.record(pi.pi(l) == l, [&] { return "π(" + R.format(l) + ") ≠ itself"; });
  image.into(r);

  const auto& lb = L.basis();
  Tally ap("π(a▷(x(b▷y))) = π(a▷(xπ(b▷y)))");
  for (const Key& a : aw)
    for (const Key& b : aw)
      for (const Vec& x : lb)
        for (const Vec& y : lb) {
          Vec by = act(b, y);
          Vec lhs = pi.pi(act(a, R.multiply(x, by)));
          Vec rhs = pi.pi(act(a, R.multiply(x, pi.pi(by))));
          ap.record(lhs == rhs, [&] {
            return "a=" + ka(a) + ", b=" + ka(b) + ", x=" + R.format(x) + ", y=" + R.format(y);
          });
        }
  ap.into(r);

  if (symmetric) {
    Tally sp("π(a▷((b▷x)y)) = π(a▷(π(b▷x)y))");
    for (const Key& a : aw)
      for (const Key& b : aw)
        for (const Vec& x : lb)
          for (const Vec& y : lb) {
            Vec bx = act(b, x);
            Vec lhs = pi.pi(act(a, R.multiply(bx, y)));
            Vec rhs = pi.pi(act(a, R.multiply(pi.pi(bx), y)));
            sp.record(lhs == rhs, [&] {
              return "a=" + ka(a) + ", b=" + ka(b) + ", x=" + R.format(x) + ", y=" + R.format(y);
            });
          }
    sp.into(r);
  }
  return r;
}

Vec acting_unit(const ModuleAlgebra& g, const std::vector<Key>& aw, const Vec& y) {
  const MhaInstance& m = *g.acting;
  Vec b;
  if (m.algebra->pointwise())
    for (const Key& k : aw) b.add_term(k, 1);
  else if (m.algebra->unital())
    b = m.algebra->identity();
  if (!b.is_zero() && g(b, y) == y) return b;
  auto found = search_unit(m, aw, kDefaultMaxCandidates, [&](const Vec& e) { return g(e, y) == y; });
  if (!found.witness) throw InconclusiveError("no unit b with b▷y = y for y = " + g.algebra->format(y));
  return *found.witness;
}

PartialActionData induce_from_projection(const AProjection& pi, const std::vector<Key>& aw,
                                         const std::vector<Vec>& rw) {
  Report pr = check_a_projection(pi, aw, rw, true);
  if (!pr.passed()) {
    const CheckItem* f = pr.first_failure();
    throw RejectedInput("not a symmetric A-projection: " + (f ? f->name + " at " + f->witness : pr.to_text()));
  }
  ModuleAlgebra g = pi.global;
  LinearOp p = pi.pi;
  MhaPtr m = g.acting;
  ModuleAction act = [g, p](const Key& a, const Vec& x) { return p(g.act(a, x)); };
  std::vector<Vec> window = target_basis_or_empty(*pi.sub);
  auto e_map = [g, p, m, aw, window](const Key& a) {
    // y = b.y for the unit b, then the two formulas with b.x = y.
    LinearOp left = [g, p, m, aw, a](const Vec& y) {
      Vec b = acting_unit(g, aw, y);
      Vec cover = sweedler_cov(*m, Sweedler::iS, Vec::basis(a), b);
      return extend_pairs(cover, [&](const Key& u, const Key& v) { return p(g.act(u, p(g.act(v, y)))); });
    };
    LinearOp right;
    if (m->regular())
      right = [g, p, m, aw, a](const Vec& y) {
        Vec b = acting_unit(g, aw, y);
        Vec cover = sweedler_cov(*m, Sweedler::Sinv, Vec::basis(a), b);
        return extend_pairs(cover, [&](const Key& u, const Key& v) { return p(g.act(u, p(g.act(v, y)))); });
      };
    else
      right = [](const Vec&) -> Vec { throw CapabilityError("right operator of 𝔢 needs a regular instance"); };
    return Multiplier{left, right, window};
  };
  return {"induced(" + g.name + ", " + pi.name + ")", m, pi.sub, act, e_map};
}

ThetaCorner theta_corner(GroupPtr g) {
  HomSpace h(function_algebra_mha(g), function_algebra(g));
  Vec not_e;
  for (const Key& q : g->elements())
    if (q != g->identity()) not_e.add_term(q, 1);
  Vec f = h.from_values({{g->identity(), not_e}});
  return {h.module_algebra(), f};
}

QuasiUnit check_quasi_unitary(const PartialActionData& p, const std::vector<Vec>& elems, const std::vector<Key>& aw,
                              std::size_t max_candidates) {
  const MhaInstance& m = *p.acting;
  QuasiUnit out{Report("quasi_unitary", p.name), std::nullopt};
  out.report.set_window(window_text(aw.size(), elems.size()));
  auto accept = [&](const Vec& b) {
    for (const Vec& x : elems) {
      if (p(b, x) != x) return false;
      for (const Key& a : aw)
        if (p(m.mul(Vec::basis(a), b), x) != p.act(a, x)) return false;
    }
    return true;
  };
  auto found = search_unit(m, aw, max_candidates, accept);
  std::string name = "b·x = x and ab·x = a·x";
  if (found.witness) {
    out.witness = found.witness;
    out.report.pass(name, "b = " + m.format(*found.witness), elems.size());
  } else if (found.exhausted) {
    out.report.inconclusive(name, "candidate bound " + std::to_string(max_candidates) + " reached");
  } else {
    out.report.inconclusive(name, "no indicator candidate within the window (" + std::to_string(found.tried) +
                                      " tried)");
  }
  return out;
}

PartialMutation parse_partial_mutation(std::string_view s) {
  if (s == "zero_pair") return PartialMutation::zero_pair;
  if (s == "e_right") return PartialMutation::e_right;
  if (s == "e_left") return PartialMutation::e_left;
  throw StructuralError("unknown partial-action mutation: " + std::string(s));
}

PartialActionData mutate(const PartialActionData& p, PartialMutation what, const std::vector<Key>& aw,
                         const std::vector<Vec>& xw) {
  PartialActionData out = p;
  switch (what) {
    case PartialMutation::zero_pair: {
      if (aw.empty() || xw.empty()) throw StructuralError("zero_pair mutation needs nonempty windows");
      Key a0 = aw.front();
      auto act = p.act;
      out.act = [act, a0, xw](const Key& a, const Vec& x) {
        if (a != a0) return act(a, x);
        auto coords = solve(xw, x);
        if (!coords) return act(a, x);
        return act(a, x - coords->coeff(Key::atom(0)) * xw.front());
      };
      out.name += " [zero_pair]";
      break;
    }
    case PartialMutation::e_right: {
      auto e = p.e_map;
      out.e_map = [e](const Key& a) {
        Multiplier mu = e(a);
        mu.right = [](const Vec&) { return Vec(); };
        return mu;
      };
      out.name += " [e_right]";
      break;
    }
    case PartialMutation::e_left: {
      auto e = p.e_map;
      out.e_map = [e](const Key& a) {
        Multiplier mu = e(a);
        mu.left = [](const Vec&) { return Vec(); };
        return mu;
      };
      out.name += " [e_left]";
      break;
    }
  }
  return out;
}

} // namespace mha
