#include "mha/mha.hpp"

#include "mha/errors.hpp"
#include "mha/linalg.hpp"

namespace mha {

Scalar MhaInstance::eps(const Vec& a) const {
  Scalar s(0);
  for (const auto& [k, c] : a) s += c * counit(k);
  return s;
}

Vec MhaInstance::S_inv(const Vec& a) const {
  if (!antipode_inv) throw CapabilityError(name + " is not regular");
  return extend(a, antipode_inv);
}

std::string MhaInstance::format_tensor(const Vec& t) const {
  const auto& f = algebra->key_formatter();
  return format_vec(t, [&](const Key& k) {
    auto [a, b] = k.split_pair();
    return f(a) + "⊗" + f(b);
  });
}

std::string MhaInstance::format_triple(const Vec& t) const {
  const auto& f = algebra->key_formatter();
  return format_vec(t, [&](const Key& k) {
    auto p = k.parts();
    return f(p[0]) + "⊗" + f(p[1]) + "⊗" + f(p[2]);
  });
}

namespace {

Vec pair_basis(const Key& a, const Key& b) { return Vec::basis(Key::pair(a, b)); }

} // namespace

MhaPtr function_algebra_mha(GroupPtr g) {
  auto m = std::make_shared<MhaInstance>();
  m->name = "A_G:" + g->name();
  m->algebra = function_algebra(g);
  m->group = g;
  // Delta(delta_g) = sum_{uv=g} delta_u (x) delta_v.
  m->delta_r = [g](const Key& r, const Key& q) { return pair_basis(g->mul(r, g->inv(q)), q); };
  m->delta_l = [g](const Key& p, const Key& r) { return pair_basis(p, g->mul(g->inv(p), r)); };
  m->delta_rf = [g](const Key& r, const Key& p) { return pair_basis(p, g->mul(g->inv(p), r)); };
  m->delta_lf = [g](const Key& q, const Key& r) { return pair_basis(g->mul(r, g->inv(q)), q); };
  m->t1_inv = [g](const Key& s, const Key& q) { return pair_basis(g->mul(s, q), q); };
  m->t2_inv = [g](const Key& p, const Key& s) { return pair_basis(p, g->mul(p, s)); };
  m->rf_inv = [g](const Key& p, const Key& s) { return pair_basis(g->mul(p, s), p); };
  m->lf_inv = [g](const Key& s, const Key& q) { return pair_basis(q, g->mul(s, q)); };
  m->counit = [g](const Key& k) { return Scalar(k == g->identity() ? 1 : 0); };
  m->antipode = [g](const Key& k) { return Vec::basis(g->inv(k)); };
  m->antipode_inv = m->antipode;
  // Only v = q^-1 survives in sum_{uv=p} delta_u (x) delta_{v^-1} delta_q.
  m->cov_iS = [g](const Key& p, const Key& q) { return pair_basis(g->mul(p, q), q); };
  // Only u = q^-1 survives in sum_{uv=p} delta_v (x) delta_{u^-1} delta_q.
  m->cov_Sinv = [g](const Key& p, const Key& q) { return pair_basis(g->mul(q, p), q); };
  m->right_support = [](const Vec& a) { return a.support(); };
  return m;
}

MhaPtr group_algebra_mha(GroupPtr g) {
  auto m = std::make_shared<MhaInstance>();
  m->name = "kG:" + g->name();
  m->algebra = group_ring(g);
  m->group = g;
  m->delta_r = [g](const Key& x, const Key& b) { return pair_basis(x, g->mul(x, b)); };
  m->delta_l = [g](const Key& a, const Key& x) { return pair_basis(g->mul(a, x), x); };
  m->delta_rf = [g](const Key& x, const Key& b) { return pair_basis(g->mul(x, b), x); };
  m->delta_lf = [g](const Key& a, const Key& x) { return pair_basis(x, g->mul(a, x)); };
  m->t1_inv = [g](const Key& x, const Key& h) { return pair_basis(x, g->mul(g->inv(x), h)); };
  m->t2_inv = [g](const Key& h, const Key& x) { return pair_basis(g->mul(h, g->inv(x)), x); };
  m->rf_inv = [g](const Key& p, const Key& s) { return pair_basis(s, g->mul(g->inv(s), p)); };
  m->lf_inv = [g](const Key& s, const Key& q) { return pair_basis(g->mul(q, g->inv(s)), s); };
  m->counit = [](const Key&) { return Scalar(1); };
  m->antipode = [g](const Key& k) { return Vec::basis(g->inv(k)); };
  m->antipode_inv = m->antipode;
  m->cov_iS = [g](const Key& x, const Key& b) { return pair_basis(x, g->mul(g->inv(x), b)); };
  m->cov_Sinv = m->cov_iS;
  return m;
}

MhaPtr dual_group_mha(GroupPtr g) {
  auto m = std::make_shared<MhaInstance>(*group_algebra_mha(g));
  m->name = "dual:" + g->name();
  Algebra::Spec s = m->algebra->spec();
  s.name = "Â_G:" + g->name();
  s.format_key = [g](const Key& k) { return "φ(_δ_" + g->token(k) + ")"; };
  m->algebra = std::make_shared<Algebra>(std::move(s));
  return m;
}

MhaPtr mha_from_name(std::string_view name) {
  if (name.starts_with("A_G:")) return function_algebra_mha(group_from_name(name.substr(4)));
  if (name.starts_with("kG:")) return group_algebra_mha(group_from_name(name.substr(3)));
  if (name.starts_with("dual:")) return dual_group_mha(group_from_name(name.substr(5)));
  throw StructuralError("unknown instance '" + std::string(name) + "'");
}

Sweedler parse_sweedler(std::string_view s) {
  if (s == "iS") return Sweedler::iS;
  if (s == "Sinv") return Sweedler::Sinv;
  if (s == "plain-r") return Sweedler::plain_r;
  if (s == "plain-l") return Sweedler::plain_l;
  throw StructuralError("unknown Sweedler pattern '" + std::string(s) + "'");
}

Vec sweedler_cov(const MhaInstance& m, Sweedler pattern, const Vec& a, const Vec& b) {
  switch (pattern) {
    case Sweedler::iS: return extend2(a, b, m.cov_iS);
    case Sweedler::Sinv:
      if (!m.cov_Sinv || !m.antipode_inv) throw CapabilityError(m.name + " is not regular: no S^-1 pattern");
      return extend2(a, b, m.cov_Sinv);
    case Sweedler::plain_r: return m.T1(a, b);
    case Sweedler::plain_l: return m.T2(a, b);
  }
  return {};
}

std::vector<Key> mha_window(const MhaInstance& m, std::size_t radius) {
  if (m.group) return m.group->window(radius);
  std::vector<Key> out;
  for (const Vec& v : m.algebra->window(radius))
    for (const Key& k : v.support()) out.push_back(k);
  return out;
}

namespace {

Key triple(const Key& a, const Key& b, const Key& c) { return Key::tuple({a, b, c}); }

std::string keys_text(const MhaInstance& m, std::initializer_list<Key> ks) {
  std::string out = "(";
  bool first = true;
  for (const Key& k : ks) {
    if (!first) out += ", ";
    out += m.algebra->key_formatter()(k);
    first = false;
  }
  return out + ")";
}

} // namespace

Report check_coassociativity(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("coassociativity", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  Tally t("(a⊗1⊗1)(Δ⊗ι)(Δ(b)(1⊗c)) = (ι⊗Δ)((a⊗1)Δ(b))(1⊗1⊗c)");
  for (const Key& a : window)
    for (const Key& b : window)
      for (const Key& c : window) {
        Vec lhs, rhs;
        for (const auto& [uv, c1] : m.delta_r(b, c)) {
          auto [u, v] = uv.split_pair();
          for (const auto& [xy, c2] : m.delta_l(a, u)) {
            auto [x, y] = xy.split_pair();
            lhs.add_term(triple(x, y, v), c1 * c2);
          }
        }
        for (const auto& [st, c1] : m.delta_l(a, b)) {
          auto [s, tt] = st.split_pair();
          for (const auto& [yz, c2] : m.delta_r(tt, c)) {
            auto [y, z] = yz.split_pair();
            rhs.add_term(triple(s, y, z), c1 * c2);
          }
        }
        t.record(lhs == rhs, [&] {
          return keys_text(m, {a, b, c}) + ": " + m.format_triple(lhs) + " vs " + m.format_triple(rhs);
        });
      }
  t.into(r);
  return r;
}

Report check_counit(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("counit", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  Tally left("(ε⊗ι)(Δ(a)(1⊗b)) = ab"), right("(ι⊗ε)((a⊗1)Δ(b)) = ab");
  for (const Key& a : window)
    for (const Key& b : window) {
      Vec ab = m.mul(Vec::basis(a), Vec::basis(b));
      Vec l = extend_pairs(m.delta_r(a, b), [&](const Key& x, const Key& y) { return m.counit(x) * Vec::basis(y); });
      Vec rr = extend_pairs(m.delta_l(a, b), [&](const Key& x, const Key& y) { return m.counit(y) * Vec::basis(x); });
      left.record(l == ab, [&] { return keys_text(m, {a, b}) + ": " + m.format(l) + " vs " + m.format(ab); });
      right.record(rr == ab, [&] { return keys_text(m, {a, b}) + ": " + m.format(rr) + " vs " + m.format(ab); });
    }
  left.into(r);
  right.into(r);
  return r;
}

Report check_antipode(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("antipode", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  Tally left("m(S⊗ι)(Δ(a)(1⊗b)) = ε(a)b"), right("m(ι⊗S)((a⊗1)Δ(b)) = ε(b)a");
  for (const Key& a : window)
    for (const Key& b : window) {
      Vec l = extend_pairs(m.delta_r(a, b), [&](const Key& x, const Key& y) { return m.mul(m.antipode(x), Vec::basis(y)); });
      Vec le = m.counit(a) * Vec::basis(b);
      Vec rr = extend_pairs(m.delta_l(a, b), [&](const Key& x, const Key& y) { return m.mul(Vec::basis(x), m.antipode(y)); });
      Vec re = m.counit(b) * Vec::basis(a);
      left.record(l == le, [&] { return keys_text(m, {a, b}) + ": " + m.format(l) + " vs " + m.format(le); });
      right.record(rr == re, [&] { return keys_text(m, {a, b}) + ": " + m.format(rr) + " vs " + m.format(re); });
    }
  left.into(r);
  right.into(r);
  return r;
}

namespace {

void roundtrip(Report& r, const MhaInstance& m, const std::vector<Key>& window, const std::string& label,
               const PairRule& fwd, const PairRule& inv) {
  Tally there(label + ": inverse∘forward = id"), back(label + ": forward∘inverse = id");
  if (!fwd || !inv) {
    r.fail(label + " inverse", "(missing rule)", "instance does not supply this map");
    return;
  }
  std::vector<Vec> images;
  for (const Key& a : window)
    for (const Key& b : window) {
      Vec t = pair_basis(a, b);
      Vec img = fwd(a, b);
      images.push_back(img);
      Vec x = extend_pairs(img, inv);
      there.record(x == t, [&] { return keys_text(m, {a, b}) + " ↦ " + m.format_tensor(x); });
      Vec y = extend_pairs(inv(a, b), fwd);
      back.record(y == t, [&] { return keys_text(m, {a, b}) + " ↦ " + m.format_tensor(y); });
    }
  there.into(r);
  back.into(r);
  std::size_t rk = rank_of(images);
  if (rk == images.size())
    r.pass(label + ": injective on window span", "rank " + std::to_string(rk), images.size());
  else
    r.fail(label + ": injective on window span", "rank " + std::to_string(rk) + " < " + std::to_string(images.size()));
}

} // namespace

Report check_t_inverses(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("t_inverses", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  roundtrip(r, m, window, "T1", m.delta_r, m.t1_inv);
  roundtrip(r, m, window, "T2", m.delta_l, m.t2_inv);
  return r;
}

Report check_regular(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("regular", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  roundtrip(r, m, window, "T1", m.delta_r, m.t1_inv);
  roundtrip(r, m, window, "T2", m.delta_l, m.t2_inv);
  roundtrip(r, m, window, "Δ(a)(b⊗1)", m.delta_rf, m.rf_inv);
  roundtrip(r, m, window, "(1⊗a)Δ(b)", m.delta_lf, m.lf_inv);
  if (!m.antipode_inv) {
    r.fail("S∘S⁻¹ = id = S⁻¹∘S", "(no S⁻¹)", "antipode is not invertible");
    return r;
  }
  Tally t("S∘S⁻¹ = id = S⁻¹∘S");
  for (const Key& a : window) {
    Vec x = Vec::basis(a);
    t.record(m.S(m.S_inv(x)) == x && m.S_inv(m.S(x)) == x, [&] { return m.format(x); });
  }
  t.into(r);
  return r;
}

Report check_structure_maps(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("structure_maps", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  Tally e("ε(ab) = ε(a)ε(b)"), s("S(ab) = S(b)S(a)");
  for (const Key& a : window)
    for (const Key& b : window) {
      Vec ab = m.mul(Vec::basis(a), Vec::basis(b));
      e.record(m.eps(ab) == m.counit(a) * m.counit(b), [&] { return keys_text(m, {a, b}); });
      s.record(m.S(ab) == m.mul(m.antipode(b), m.antipode(a)), [&] { return keys_text(m, {a, b}); });
    }
  e.into(r);
  s.into(r);
  return r;
}

Report mha_axiom_suite(const MhaInstance& m, const std::vector<Key>& window) {
  Report r("mha_axioms", m.name);
  r.set_window(std::to_string(window.size()) + " basis elements");
  r.absorb(check_associative(*m.algebra, [&] {
    std::vector<Vec> w;
    for (const Key& k : window) w.push_back(Vec::basis(k));
    return w;
  }()), "algebra");
  r.absorb(check_coassociativity(m, window), "coassociativity");
  r.absorb(check_counit(m, window), "counit");
  r.absorb(check_antipode(m, window), "antipode");
  r.absorb(check_regular(m, window), "regular");
  r.absorb(check_structure_maps(m, window), "structure_maps");
  return r;
}

MhaMutation parse_mha_mutation(std::string_view s) {
  if (s == "delta") return MhaMutation::delta;
  if (s == "counit") return MhaMutation::counit;
  if (s == "antipode") return MhaMutation::antipode;
  if (s == "t2_inv") return MhaMutation::t2_inv;
  throw StructuralError("unknown mutation '" + std::string(s) + "'");
}

MhaPtr mutate(const MhaInstance& m, MhaMutation what) {
  auto out = std::make_shared<MhaInstance>(m);
  GroupPtr g = m.group;
  Key one = g ? g->identity() : Key::atom(0);
  switch (what) {
    case MhaMutation::delta: {
      // Delta'(1) = Delta(1) + h (x) h for the first non-identity basis key h.
      // Both covered forms are derived from the same Delta', which is then no
      // longer coassociative.
      Key h = one;
      for (const Key& k : mha_window(m, 1))
        if (k != one) {
          h = k;
          break;
        }
      auto alg = m.algebra;
      auto base_r = m.delta_r;
      auto base_l = m.delta_l;
      out->delta_r = [base_r, alg, one, h](const Key& a, const Key& b) {
        Vec v = base_r(a, b);
        if (a == one) v += tensor(Vec::basis(h), alg->product_rule(h, b));
        return v;
      };
      out->delta_l = [base_l, alg, one, h](const Key& a, const Key& b) {
        Vec v = base_l(a, b);
        if (b == one) v += tensor(alg->product_rule(a, h), Vec::basis(h));
        return v;
      };
      out->name += " [Δ corrupted]";
      break;
    }
    case MhaMutation::counit: {
      bool constant_one = m.counit(one) == 1 && m.algebra->pointwise();
      if (constant_one)
        out->counit = [](const Key&) { return Scalar(1); };
      else
        out->counit = [one](const Key& k) { return Scalar(k == one ? 1 : 0); };
      out->name += " [ε corrupted]";
      break;
    }
    case MhaMutation::antipode:
      out->antipode = [](const Key& k) { return Vec::basis(k); };
      out->name += " [S = id]";
      break;
    case MhaMutation::t2_inv:
      out->t2_inv = [](const Key& p, const Key& s) { return pair_basis(p, s); };
      out->name += " [t2_inv broken]";
      break;
  }
  return out;
}

MhaPtr with_windowed_inverses(const MhaInstance& m, const std::vector<Key>& window) {
  auto out = std::make_shared<MhaInstance>(m);
  std::vector<Key> domain;
  for (const Key& a : window)
    for (const Key& b : window) domain.push_back(Key::pair(a, b));
  auto make = [&](const PairRule& fwd) -> PairRule {
    if (!fwd) return {};
    auto inv = std::make_shared<WindowedInverse>(domain, [fwd](const Key& k) {
      auto [a, b] = k.split_pair();
      return fwd(a, b);
    });
    return [inv](const Key& a, const Key& b) { return (*inv)(pair_basis(a, b)); };
  };
  out->t1_inv = make(m.delta_r);
  out->t2_inv = make(m.delta_l);
  out->rf_inv = make(m.delta_rf);
  out->lf_inv = make(m.delta_lf);
  out->name += " [windowed inverses]";
  return out;
}

} // namespace mha
