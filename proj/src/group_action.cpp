#include "mha/group_action.hpp"

#include "mha/errors.hpp"
#include "mha/linalg.hpp"

#include <map>

namespace mha {

std::vector<Vec> PartialGroupAction::ideal(const Key& g) const {
  Multiplier s = sigma(g);
  Subspace span;
  for (const Vec& b : target->basis()) span.insert(s.right(b));
  return span.basis();
}

GroupAutomorphisms group_ring_action(GroupPtr g, std::string_view name) {
  if (name == "trivial") return [](const Key&, const Vec& x) { return x; };
  if (name == "conjugation")
    return [g](const Key& k, const Vec& x) {
      return extend(x, [&](const Key& h) { return Vec::basis(g->mul(g->mul(k, h), g->inv(k))); });
    };
  if (name == "sign_twist") {
    if (!g->name().starts_with("symmetric:")) throw StructuralError("sign_twist needs a symmetric group");
    return [g](const Key& k, const Vec& x) {
      int sk = permutation_sign(k);
      return extend(x, [&](const Key& h) {
        Scalar c = (sk < 0 && permutation_sign(h) < 0) ? Scalar(-1) : Scalar(1);
        return Vec::basis(g->mul(g->mul(k, h), g->inv(k)), c);
      });
    };
  }
  if (name == "inversion") {
    if (!g->name().starts_with("cyclic:") || g->order() % 2 != 0)
      throw StructuralError("inversion is an action of even cyclic groups only");
    return [g](const Key& k, const Vec& x) {
      if (k.head() % 2 == 0) return x;
      return extend(x, [&](const Key& h) { return Vec::basis(g->inv(h)); });
    };
  }
  throw StructuralError("unknown group-ring action '" + std::string(name) + "'");
}

PartialGroupAction global_group_action(GroupPtr g, AlgebraPtr r, GroupAutomorphisms beta, std::string name) {
  std::vector<Vec> rb = r->basis();
  return {std::move(name), g, r, [rb](const Key&) { return identity_multiplier(rb); }, std::move(beta)};
}

PartialGroupAction restrict_to_corner(GroupPtr g, AlgebraPtr s, GroupAutomorphisms beta, const Vec& f,
                                      std::string name) {
  AlgebraPtr r = corner_algebra(s, f, "f");
  std::vector<Vec> rb = r->basis();
  std::map<Key, Vec> sig;
  for (const Key& k : g->elements()) sig[k] = s->multiply(f, beta(k, f));
  return {std::move(name), g, r,
          [r, rb, sig](const Key& k) { return multiplier_from_element(r, sig.at(k), rb); }, std::move(beta)};
}

PartialGroupAction sign_twist_corner() {
  GroupPtr g = symmetric_group(3);
  AlgebraPtr s = group_ring(g);
  return restrict_to_corner(g, s, group_ring_action(g, "sign_twist"), named_idempotent(*s, "not_sign"),
                            "sign_twist_corner");
}

namespace {

struct Tables {
  std::map<Key, Subspace> ideals;
  std::map<Key, std::vector<Vec>> bases;
};

Tables tabulate(const PartialGroupAction& p) {
  Tables t;
  for (const Key& g : p.group->elements()) {
    t.bases[g] = p.ideal(g);
    t.ideals.emplace(g, Subspace(t.bases[g]));
  }
  return t;
}

// x in R_{g^-1} with alpha_g(x) = y, or nullopt.
std::optional<Vec> alpha_preimage(const PartialGroupAction& p, const Tables& t, const Key& g, const Vec& y) {
  const auto& dom = t.bases.at(p.group->inv(g));
  std::vector<Vec> images;
  for (const Vec& x : dom) images.push_back(p.alpha(g, x));
  auto c = solve(images, y);
  if (!c) return std::nullopt;
  return combine(*c, dom);
}

} // namespace

Report check_pga(const PartialGroupAction& p) {
  const Group& G = *p.group;
  const Algebra& R = *p.target;
  Report r("partial_group_action", p.name);
  const auto& els = G.elements();
  const auto& rb = R.basis();
  r.set_window(std::to_string(els.size()) + " group elements, dim R = " + std::to_string(rb.size()));
  Tables t = tabulate(p);
  auto tok = [&](const Key& g) { return G.token(g); };

  Tally unit("(i) R_1 = R and α_1 = id");
  unit.record(t.bases.at(G.identity()).size() == rb.size(), [&] { return "dim R_1 < dim R"; });
  for (const Vec& b : rb) unit.record(p.alpha(G.identity(), b) == b, [&] { return R.format(b); });
  unit.into(r);

  Tally ideal("R_g two-sided ideals");
  for (const Key& g : els)
    for (const Vec& v : t.bases.at(g))
      for (const Vec& b : rb) {
        ideal.record(t.ideals.at(g).contains(R.multiply(v, b)) && t.ideals.at(g).contains(R.multiply(b, v)),
                     [&] { return "g=" + tok(g) + ", v=" + R.format(v) + ", b=" + R.format(b); });
      }
  ideal.into(r);

  Tally iso("α_g: R_{g⁻¹} → R_g algebra isomorphism");
  for (const Key& g : els) {
    const auto& dom = t.bases.at(G.inv(g));
    std::vector<Vec> images;
    for (const Vec& x : dom) {
      Vec y = p.alpha(g, x);
      iso.record(t.ideals.at(g).contains(y), [&] { return "g=" + tok(g) + ": α_g(" + R.format(x) + ") ∉ R_g"; });
      images.push_back(y);
    }
    iso.record(rank_of(images) == dom.size() && dom.size() == t.bases.at(g).size(),
               [&] { return "g=" + tok(g) + ": not bijective"; });
    for (const Vec& x : dom)
      for (const Vec& y : dom)
        iso.record(p.alpha(g, R.multiply(x, y)) == R.multiply(p.alpha(g, x), p.alpha(g, y)),
                   [&] { return "g=" + tok(g) + ", x=" + R.format(x) + ", y=" + R.format(y); });
  }
  iso.into(r);

  Tally inter("R_g ∩ R_h = Rσ_hσ_g");
  Tally two("(ii′) α_g(R_{g⁻¹} ∩ R_h) = R_g ∩ R_{gh}");
  Tally three("(iii) α_g∘α_h = α_{gh} on α_h⁻¹(R_h ∩ R_{g⁻¹})");
  for (const Key& g : els)
    for (const Key& h : els) {
      Subspace gh_cap = intersect(t.ideals.at(g), t.ideals.at(h));
      Subspace prod;
      for (const Vec& b : rb) prod.insert(p.sigma(g).right(p.sigma(h).right(b)));
      inter.record(gh_cap.equals(prod), [&] { return "g=" + tok(g) + ", h=" + tok(h); });

      Key gi = G.inv(g), gh = G.mul(g, h);
      Subspace lhs_dom = intersect(t.ideals.at(gi), t.ideals.at(h));
      Subspace image;
      for (const Vec& x : lhs_dom.basis()) image.insert(p.alpha(g, x));
      two.record(image.equals(intersect(t.ideals.at(g), t.ideals.at(gh))),
                 [&] { return "g=" + tok(g) + ", h=" + tok(h); });

      Subspace rhs_dom = intersect(t.ideals.at(h), t.ideals.at(gi));
      for (const Vec& y : rhs_dom.basis()) {
        auto x = alpha_preimage(p, t, h, y);
        if (!x) {
          three.record(false, [&] { return "g=" + tok(g) + ", h=" + tok(h) + ": " + R.format(y) + " not in α_h(R_{h⁻¹})"; });
          continue;
        }
        bool in_dom = t.ideals.at(G.inv(gh)).contains(*x);
        three.record(in_dom && p.alpha(g, y) == p.alpha(gh, *x), [&] {
          return "g=" + tok(g) + ", h=" + tok(h) + ", x=" + R.format(*x) + ": " + R.format(p.alpha(g, y)) + " vs " +
                 R.format(p.alpha(gh, *x));
        });
      }
    }
  inter.into(r);
  two.into(r);
  three.into(r);
  return r;
}

Report check_sigma_conditions(const PartialGroupAction& p) {
  const Group& G = *p.group;
  const Algebra& R = *p.target;
  Report r("sigma_conditions", p.name);
  const auto& els = G.elements();
  const auto& rb = R.basis();
  r.set_window(std::to_string(els.size()) + " group elements, dim R = " + std::to_string(rb.size()));
  Tables t = tabulate(p);
  auto tok = [&](const Key& g) { return G.token(g); };

  Tally c1("(i) σ_g central idempotent in M(R)");
  for (const Key& g : els) {
    Multiplier s = p.sigma(g);
    for (const Vec& b : rb) {
      Vec sb = s.left(b);
      c1.record(sb == s.right(b) && s.left(sb) == sb, [&] { return "g=" + tok(g) + ", x=" + R.format(b); });
    }
    Report mr = multiplier_check(R, s, rb);
    c1.record(mr.passed(), [&] { return "g=" + tok(g) + ": not a multiplier"; });
  }
  Tally c2("(ii) α_g(σ_{g⁻¹}σ_h) = σ_gσ_{gh}");
  for (const Key& g : els) {
    Key gi = G.inv(g);
    for (const Vec& y : t.bases.at(g)) {
      auto x = alpha_preimage(p, t, g, y);
      if (!x) {
        std::string why = "α_" + tok(g) + " does not extend to multipliers: " + R.format(y) + " is not in its image";
        // With broken sigma data the ideals themselves are off; report that
        // instead of giving up.
        if (!c1.ok()) {
          c2.record(false, [&] { return why; });
          continue;
        }
        throw CapabilityError(why);
      }
      for (const Key& h : els) {
        Vec lhs = p.alpha(g, p.sigma(gi).left(p.sigma(h).left(*x)));
        Vec rhs = p.sigma(g).left(p.sigma(G.mul(g, h)).left(y));
        c2.record(lhs == rhs, [&] { return "g=" + tok(g) + ", h=" + tok(h) + ", y=" + R.format(y); });
      }
    }
  }
  c1.into(r);
  c2.into(r, "α_g extended by conjugation on the basis of R_g");

  Tally c3("(iii) α_g(x) = α_g(x)σ_g");
  Tally c4("(iv) Rσ_g ⊆ R_g");
  for (const Key& g : els) {
    for (const Vec& x : t.bases.at(G.inv(g))) {
      Vec y = p.alpha(g, x);
      c3.record(p.sigma(g).right(y) == y, [&] { return "g=" + tok(g) + ", x=" + R.format(x); });
    }
    for (const Vec& b : rb)
      c4.record(t.ideals.at(g).contains(p.sigma(g).right(b)), [&] { return "g=" + tok(g) + ", x=" + R.format(b); });
  }
  c3.into(r);
  c4.into(r);
  return r;
}

Report check_globalizability(const PartialGroupAction& p) {
  const Group& G = *p.group;
  const Algebra& R = *p.target;
  Report r("globalizability", p.name);
  const auto& els = G.elements();
  const auto& rb = R.basis();
  r.set_window(std::to_string(els.size()) + " group elements, dim R = " + std::to_string(rb.size()));
  Tables t = tabulate(p);
  auto tok = [&](const Key& g) { return G.token(g); };

  Tally su("(i) R_g left s-unital");
  for (const Key& g : els) {
    const auto& basis = t.bases.at(g);
    Report sr = check_s_unital_left(*subalgebra(p.target, basis, "R_" + tok(g)), basis);
    su.record(sr.passed(), [&] {
      const CheckItem* f = sr.first_failure();
      return "g=" + tok(g) + (f ? ": " + f->witness : std::string());
    });
  }
  su.into(r);

  // gamma_g(x) = alpha_g(x sigma_{g^-1}).
  Tally into("(ii) Rγ_g(x) ⊆ R_g");
  Tally agree("(ii) yγ_g(x) = α_g(α_{g⁻¹}(y)x) on R_g");
  for (const Key& g : els) {
    Key gi = G.inv(g);
    for (const Vec& x : rb) {
      Vec gamma = p.alpha(g, p.sigma(gi).right(x));
      for (const Vec& b : rb)
        into.record(t.ideals.at(g).contains(R.multiply(b, gamma)),
                    [&] { return "g=" + tok(g) + ", x=" + R.format(x) + ", b=" + R.format(b); });
      for (const Vec& y : t.bases.at(g))
        agree.record(R.multiply(y, gamma) == p.alpha(g, R.multiply(p.alpha(gi, y), x)),
                     [&] { return "g=" + tok(g) + ", x=" + R.format(x) + ", y=" + R.format(y); });
    }
  }
  into.into(r);
  agree.into(r, "γ_g(x) = α_g(xσ_{g⁻¹})");
  return r;
}

PartialActionData to_hopf(const PartialGroupAction& p) {
  for (const Report& pre : {check_pga(p), check_sigma_conditions(p)})
    if (!pre.passed()) {
      const CheckItem* f = pre.first_failure();
      throw RejectedInput(pre.check() + " fails" + (f ? ": " + f->name + " at " + f->witness : std::string()));
    }
  GroupPtr g = p.group;
  auto sigma = p.sigma;
  auto alpha = p.alpha;
  return {"to_hopf(" + p.name + ")", dual_group_mha(g), p.target,
          [g, sigma, alpha](const Key& k, const Vec& x) { return alpha(k, sigma(g->inv(k)).right(x)); }, sigma};
}

PartialGroupAction to_group(const PartialActionData& q) {
  GroupPtr g = q.acting->group;
  if (!g || q.acting->algebra->family() != AlgebraFamily::group_ring)
    throw RejectedInput(q.acting->name + " is not a group algebra");
  const auto& els = g->elements();
  const auto& rb = q.target->basis();
  for (const Report& pre : {check_partial_action(q, els, rb), check_symmetric(q, els, rb)})
    if (!pre.passed()) {
      const CheckItem* f = pre.first_failure();
      throw RejectedInput(pre.check() + " fails" + (f ? ": " + f->name + " at " + f->witness : std::string()));
    }
  for (const Key& k : els) {
    Multiplier s = q.e_map(k);
    for (const Vec& b : rb) {
      Vec sb = s.left(b);
      if (sb != s.right(b) || s.left(sb) != sb)
        throw StructuralError("𝔢(" + q.acting->algebra->format(Vec::basis(k)) +
                              ") is not a central idempotent: fails at " + q.target->format(b));
    }
  }
  return {"to_group(" + q.name + ")", g, q.target, q.e_map, q.act};
}

Report roundtrip_check(const PartialGroupAction& p) {
  Report r("roundtrip", p.name);
  PartialActionData q = to_hopf(p);
  PartialGroupAction back = to_group(q);
  const Group& G = *p.group;
  const Algebra& R = *p.target;
  const auto& rb = R.basis();
  r.set_window(std::to_string(G.order()) + " group elements, dim R = " + std::to_string(rb.size()));
  auto tok = [&](const Key& g) { return G.token(g); };

  Tally unit("𝔢(φ(_δ_1)) = id");
  for (const Vec& b : rb) {
    Multiplier e1 = q.e_map(G.identity());
    unit.record(e1.left(b) == b && e1.right(b) == b, [&] { return R.format(b); });
    unit.record(q.act(G.identity(), b) == b, [&] { return "φ(_δ_1)·" + R.format(b) + " ≠ itself"; });
  }
  unit.into(r);

  Tally sig("σ tables equal");
  Tally ideals("ideal bases equal");
  Tally alpha("α tables equal");
  for (const Key& g : G.elements()) {
    for (const Vec& b : rb)
      sig.record(p.sigma(g).left(b) == back.sigma(g).left(b) && p.sigma(g).right(b) == back.sigma(g).right(b),
                 [&] { return "g=" + tok(g) + ", x=" + R.format(b); });
    ideals.record(p.ideal(g) == back.ideal(g), [&] { return "g=" + tok(g); });
    for (const Vec& x : p.ideal(G.inv(g)))
      alpha.record(p.alpha(g, x) == back.alpha(g, x), [&] { return "g=" + tok(g) + ", x=" + R.format(x); });
  }
  sig.into(r);
  ideals.into(r);
  alpha.into(r);
  return r;
}

GroupActionMutation parse_group_action_mutation(std::string_view s) {
  if (s == "decouple_alpha") return GroupActionMutation::decouple_alpha;
  if (s == "noncentral_sigma") return GroupActionMutation::noncentral_sigma;
  if (s == "zero_product") return GroupActionMutation::zero_product;
  throw StructuralError("unknown group-action mutation: " + std::string(s));
}

PartialGroupAction mutate(const PartialGroupAction& p, GroupActionMutation what) {
  const Group& G = *p.group;
  const auto& els = G.elements();
  if (els.size() < 2) throw CapabilityError("mutations need a nontrivial group");
  Key g0 = els[1];
  PartialGroupAction out = p;
  switch (what) {
    case GroupActionMutation::decouple_alpha: {
      Tables t = tabulate(p);
      for (std::size_t i = 2; i < els.size(); ++i) {
        Key g1 = els[i];
        if (!t.ideals.at(g1).equals(t.ideals.at(g0)) ||
            !t.ideals.at(G.inv(g1)).equals(t.ideals.at(G.inv(g0))))
          continue;
        bool differs = false;
        for (const Vec& x : t.bases.at(G.inv(g0))) differs = differs || p.alpha(g0, x) != p.alpha(g1, x);
        if (!differs) continue;
        auto alpha = p.alpha;
        out.alpha = [alpha, g0, g1](const Key& k, const Vec& x) { return alpha(k == g0 ? g1 : k, x); };
        out.name += " [decouple_alpha]";
        return out;
      }
      throw CapabilityError("no element to decouple α_" + G.token(g0) + " from");
    }
    case GroupActionMutation::noncentral_sigma: {
      AlgebraPtr R = p.target;
      Key t;
      bool found = false;
      for (const Key& k : els)
        if (k != G.identity() && G.mul(k, k) == G.identity()) {
          t = k;
          found = true;
          break;
        }
      if (!found || R->family() != AlgebraFamily::corner || !R->unital())
        throw CapabilityError("noncentral_sigma needs a group-ring corner and an involution");
      Vec half = make_scalar(1, 2) * (Vec::basis(G.identity()) + Vec::basis(t));
      Vec e = R->multiply(R->identity(), half);
      auto sigma = p.sigma;
      std::vector<Vec> rb = R->basis();
      out.sigma = [sigma, g0, R, e, rb](const Key& k) {
        return k == g0 ? multiplier_from_element(R, e, rb) : sigma(k);
      };
      out.name += " [noncentral_sigma]";
      return out;
    }
    case GroupActionMutation::zero_product: {
      Algebra::Spec s = p.target->spec();
      s.name = "zero-product " + s.name;
      s.rule = [](const Key&, const Key&) { return Vec(); };
      s.identity.reset();
      out.target = std::make_shared<Algebra>(std::move(s));
      out.name += " [zero_product]";
      return out;
    }
  }
  return out;
}

} // namespace mha
