#include "mha/convolution.hpp"

#include "mha/errors.hpp"

#include <set>

namespace mha {

HomSpace::HomSpace(MhaPtr source, AlgebraPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (!source_->right_finite())
    throw CapabilityError(source_->name + " is not right-finite; Hom^r is not representable");
}

Vec HomSpace::value(const Vec& F, const Key& g) const {
  Vec out;
  for (const auto& [k, c] : F) {
    auto [h, r] = k.split_pair();
    if (h == g) out.add_term(r, c);
  }
  return out;
}

Vec HomSpace::evaluate(const Vec& F, const Vec& a) const {
  Vec out;
  for (const auto& [k, c] : F) {
    auto [h, r] = k.split_pair();
    Scalar w = a.coeff(h);
    if (!is_zero(w)) out.add_term(r, w * c);
  }
  return out;
}

std::vector<Key> HomSpace::support(const Vec& F) const {
  std::set<Key> s;
  for (const auto& [k, c] : F) s.insert(k.split_pair().first);
  return {s.begin(), s.end()};
}

Vec HomSpace::from_values(const std::map<Key, Vec>& values) const {
  Vec out;
  for (const auto& [g, x] : values)
    for (const auto& [r, c] : x) out.add_term(Key::pair(g, r), c);
  return out;
}

Vec HomSpace::from_map(const std::function<Vec(const Vec&)>& f, const Vec& a) const {
  std::map<Key, Vec> values;
  for (const Key& g : source_->right_support(a)) values[g] = f(source_->mul(Vec::basis(g), a));
  return from_values(values);
}

Vec HomSpace::conv(const Vec& F, const Vec& G) const {
  const Group& grp = *source_->group;
  Vec out;
  for (const auto& [k1, c1] : F) {
    auto [p, x] = k1.split_pair();
    for (const auto& [k2, c2] : G) {
      auto [q, y] = k2.split_pair();
      Key pq = grp.mul(p, q);
      for (const auto& [r, c3] : target_->product_rule(x, y)) out.add_term(Key::pair(pq, r), c1 * c2 * c3);
    }
  }
  return out;
}

Vec HomSpace::conv_generic(const Vec& F, const Vec& G) const {
  const MhaInstance& m = *source_;
  const Algebra& R = *target_;
  // F = f(_a), G = g(_b) with a, b the support indicators and f, g the
  // evaluation maps. Writing a (x) b = sum Delta(p_i)(1 (x) q_i) gives
  // (F*G)(c) = sum_i mu(f (x) g)(Delta(c p_i)(1 (x) q_i)).
  Vec a, b;
  for (const Key& g : support(F)) a.add_term(g, 1);
  for (const Key& g : support(G)) b.add_term(g, 1);
  Vec cover = m.T1_inv(tensor(a, b));
  Vec out;
  for (const auto& [pq, coef] : cover) {
    auto [p, q] = pq.split_pair();
    Vec pv = Vec::basis(p);
    for (const Key& c : m.right_support(pv)) {
      Vec cp = m.mul(Vec::basis(c), pv);
      Vec t = m.T1(cp, Vec::basis(q));
      Vec h = extend_pairs(t, [&](const Key& u, const Key& v) {
        return R.multiply(evaluate(F, Vec::basis(u)), evaluate(G, Vec::basis(v)));
      });
      for (const auto& [r, c2] : h) out.add_term(Key::pair(c, r), coef * c2);
    }
  }
  return out;
}

Vec HomSpace::act(const Vec& a, const Vec& F) const {
  std::map<Key, Vec> values;
  for (const Key& g : source_->right_support(a)) {
    Vec v = evaluate(F, source_->mul(Vec::basis(g), a));
    if (!v.is_zero()) values[g] = v;
  }
  return from_values(values);
}

std::string HomSpace::format(const Vec& F) const {
  if (F.is_zero()) return "0";
  std::string out = "{";
  bool first = true;
  for (const Key& g : support(F)) {
    if (!first) out += ", ";
    out += source_->group->token(g) + " ↦ " + target_->format(value(F, g));
    first = false;
  }
  return out + "}";
}

AlgebraPtr HomSpace::algebra() const {
  GroupPtr grp = source_->group;
  AlgebraPtr R = target_;
  Algebra::Spec s;
  s.name = "Hom^r(" + source_->name + ", " + R->name() + ")";
  s.rule = [grp, R](const Key& x, const Key& y) {
    auto [p, k] = x.split_pair();
    auto [q, l] = y.split_pair();
    Key pq = grp->mul(p, q);
    Vec out;
    for (const auto& [r, c] : R->product_rule(k, l)) out.add_term(Key::pair(pq, r), c);
    return out;
  };
  if (grp->finite()) {
    if (R->unital()) {
      Vec one;
      for (const auto& [r, c] : R->identity()) one.add_term(Key::pair(grp->identity(), r), c);
      s.identity = one;
    }
    if (R->finite_dimensional()) {
      std::vector<Vec> basis;
      for (const Key& g : grp->elements())
        for (const Vec& b : R->basis()) {
          Vec v;
          for (const auto& [r, c] : b) v.add_term(Key::pair(g, r), c);
          basis.push_back(v);
        }
      s.basis = basis;
    }
  }
  s.format_key = [grp, R](const Key& k) {
    auto [g, r] = k.split_pair();
    return "[" + grp->token(g) + "↦" + R->key_formatter()(r) + "]";
  };
  s.group = grp;
  return std::make_shared<Algebra>(std::move(s));
}

ModuleAlgebra HomSpace::module_algebra() const {
  HomSpace self = *this;
  return {"Hom^r(" + source_->name + ", " + target_->name() + ")", source_, algebra(),
          [self](const Key& a, const Vec& F) { return self.act(Vec::basis(a), F); }};
}

Report check_conv_associativity(const HomSpace& h, const std::vector<Vec>& samples) {
  Report r("conv_associativity", h.source()->name + " → " + h.target()->name());
  r.set_window(std::to_string(samples.size()) + " samples");
  Tally t("(F∗G)∗H = F∗(G∗H)");
  for (const Vec& F : samples)
    for (const Vec& G : samples)
      for (const Vec& H : samples)
        t.record(h.conv(h.conv(F, G), H) == h.conv(F, h.conv(G, H)),
                 [&] { return "F=" + h.format(F) + ", G=" + h.format(G) + ", H=" + h.format(H); });
  t.into(r);
  return r;
}

Report check_conv_paths(const HomSpace& h, const std::vector<Vec>& samples) {
  Report r("conv_paths", h.source()->name + " → " + h.target()->name());
  r.set_window(std::to_string(samples.size()) + " samples");
  Tally t("closed form = t1_inv coverage");
  for (const Vec& F : samples)
    for (const Vec& G : samples) {
      Vec a = h.conv(F, G), b = h.conv_generic(F, G);
      t.record(a == b, [&] { return "F=" + h.format(F) + ", G=" + h.format(G) + ": " + h.format(a) + " vs " + h.format(b); });
    }
  t.into(r);
  return r;
}

Report check_module_algebra(const HomSpace& h, const std::vector<Key>& a_window, const std::vector<Vec>& samples) {
  return check_module_algebra_laws(h.module_algebra(), a_window, samples);
}

namespace {

Vec mu(const MhaInstance& m, const EndoRule& f, const EndoRule& g, const Vec& t) {
  return extend_pairs(t, [&](const Key& u, const Key& v) { return m.mul(f(Vec::basis(u)), g(Vec::basis(v))); });
}

// b with S'(b)a = a = aS'(b). With the true antipode this is S^-1 of a local
// unit; otherwise the candidates are searched.
Vec find_b(const MhaInstance& m, const EndoRule* candidate, const Vec& a, const std::vector<Key>& window) {
  if (!candidate) {
    if (!m.antipode_inv) throw CapabilityError(m.name + " is not regular");
    Vec e;
    try {
      e = local_unit(*m.algebra, {a});
    } catch (const Error& ex) {
      throw CapabilityError(std::string("b-search failed: ") + ex.what());
    }
    return m.S_inv(e);
  }
  auto found = search_unit(m, window, kDefaultMaxCandidates, [&](const Vec& b) {
    Vec sb = (*candidate)(b);
    return m.mul(sb, a) == a && m.mul(a, sb) == a;
  });
  if (!found.witness)
    throw CapabilityError("b-search failed for a=" + m.format(a) + " after " + std::to_string(found.tried) +
                          " candidates");
  return *found.witness;
}

void convolutive_items(Report& r, const MhaInstance& m, const EndoRule& f, const EndoRule& g,
                       const std::vector<Key>& tests, const std::vector<Key>& d_window, const EndoRule* b_antipode) {
  Tally pre("S(b)a = a = aS(b)"), one("(i) f(_b)∗ʳg(_a) = u_a∘ε"), two("(ii) g(a_)∗ˡf(b_) = u_a∘ε");
  const EndoRule S = b_antipode ? *b_antipode : EndoRule([&](const Vec& x) { return m.S(x); });
  for (const Key& ak : tests) {
    Vec a = Vec::basis(ak);
    Vec b = find_b(m, b_antipode, a, d_window);
    Vec sb = S(b);
    pre.record(m.mul(sb, a) == a && m.mul(a, sb) == a, [&] { return "a=" + m.format(a) + ", b=" + m.format(b); });
    Vec cover1 = m.T1_inv(tensor(b, a));
    Vec cover2 = m.T2_inv(tensor(a, b));
    for (const Key& dk : d_window) {
      Vec d = Vec::basis(dk);
      Vec expected = m.counit(dk) * a;
      // Delta(d)(b (x) a) = sum Delta(d p)(1 (x) q).
      Vec v1 = extend_pairs(cover1, [&](const Key& p, const Key& q) {
        return mu(m, f, g, m.T1(m.mul(d, Vec::basis(p)), Vec::basis(q)));
      });
      // (a (x) b)Delta(d) = sum (p (x) 1)Delta(q d).
      Vec v2 = extend_pairs(cover2, [&](const Key& p, const Key& q) {
        return mu(m, g, f, m.T2(Vec::basis(p), m.mul(Vec::basis(q), d)));
      });
      one.record(v1 == expected, [&] {
        return "a=" + m.format(a) + ", d=" + m.format(d) + ": " + m.format(v1) + " vs " + m.format(expected);
      });
      two.record(v2 == expected, [&] {
        return "a=" + m.format(a) + ", d=" + m.format(d) + ": " + m.format(v2) + " vs " + m.format(expected);
      });
    }
  }
  pre.into(r);
  one.into(r);
  two.into(r);
}

} // namespace

Report check_convolutive_inverse(const MhaInstance& m, const EndoRule& f, const EndoRule& g,
                                 const std::vector<Key>& tests, const std::vector<Key>& d_window) {
  Report r("convolutive_inverse", m.name);
  r.set_window(std::to_string(tests.size()) + " test elements, " + std::to_string(d_window.size()) + " points d");
  if (!m.regular()) throw CapabilityError(m.name + " is not regular");
  convolutive_items(r, m, f, g, tests, d_window, nullptr);
  return r;
}

Report check_antipode_from_inverse(const MhaInstance& m, const EndoRule& candidate, const std::vector<Key>& window) {
  Report r("antipode_from_inverse", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  EndoRule id = [](const Vec& x) { return x; };

  Tally anti("S′(ab) = S′(b)S′(a)");
  for (const Key& a : window)
    for (const Key& b : window) {
      Vec va = Vec::basis(a), vb = Vec::basis(b);
      anti.record(candidate(m.mul(va, vb)) == m.mul(candidate(vb), candidate(va)),
                  [&] { return "(" + m.format(va) + ", " + m.format(vb) + ")"; });
    }
  anti.into(r);

  Report inv("convolutive_inverse", m.name);
  convolutive_items(inv, m, candidate, id, window, window, &candidate);
  r.absorb(inv, "convolutive inverse of ι");

  Tally central("local units central");
  for (const Key& ak : window) {
    Vec a = Vec::basis(ak);
    Vec sb = candidate(find_b(m, &candidate, a, window));
    for (const Key& ck : window) {
      Vec c = Vec::basis(ck);
      central.record(m.mul(sb, c) == m.mul(c, sb), [&] { return "S′(b)=" + m.format(sb) + ", c=" + m.format(c); });
    }
  }
  central.into(r);

  Tally left("m(S′⊗ι)(Δ(c)(1⊗a)) = ε(c)a"), right("m(ι⊗S′)((a⊗1)Δ(c)) = ε(c)a");
  for (const Key& ck : window)
    for (const Key& ak : window) {
      Vec a = Vec::basis(ak);
      Vec expected = m.counit(ck) * a;
      Vec l = mu(m, candidate, id, m.delta_r(ck, ak));
      Vec rr = mu(m, id, candidate, m.delta_l(ak, ck));
      auto w = [&](const Vec& got) {
        return "c=" + m.format(Vec::basis(ck)) + ", a=" + m.format(a) + ": " + m.format(got) + " vs " + m.format(expected);
      };
      left.record(l == expected, [&] { return w(l); });
      right.record(rr == expected, [&] { return w(rr); });
    }
  left.into(r);
  right.into(r);
  return r;
}

} // namespace mha
