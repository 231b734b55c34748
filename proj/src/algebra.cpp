#include "mha/algebra.hpp"

#include "mha/errors.hpp"
#include "mha/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace mha {

Algebra::Algebra(Spec spec) : spec_(std::move(spec)) {}

Vec Algebra::multiply(const Vec& x, const Vec& y) const { return extend2(x, y, spec_.rule); }

const Vec& Algebra::identity() const {
  if (!spec_.identity) throw CapabilityError("algebra " + spec_.name + " has no identity");
  return *spec_.identity;
}

const std::vector<Vec>& Algebra::basis() const {
  if (!spec_.basis) throw CapabilityError("algebra " + spec_.name + " is not finite dimensional");
  return *spec_.basis;
}

std::vector<Vec> Algebra::window(std::size_t radius) const {
  if (spec_.basis) return *spec_.basis;
  if (!spec_.key_window) throw CapabilityError("algebra " + spec_.name + " has no window");
  std::vector<Vec> out;
  for (const Key& k : spec_.key_window(radius)) out.push_back(Vec::basis(k));
  return out;
}

AlgebraPtr function_algebra(GroupPtr g) {
  Algebra::Spec s;
  s.name = "functions:" + g->name();
  s.rule = [](const Key& a, const Key& b) { return a == b ? Vec::basis(a) : Vec(); };
  if (g->finite()) {
    Vec one;
    std::vector<Vec> basis;
    for (const Key& k : g->elements()) {
      one.add_term(k, 1);
      basis.push_back(Vec::basis(k));
    }
    s.identity = one;
    s.basis = basis;
  }
  s.key_window = [g](std::size_t r) { return g->window(r); };
  s.format_key = [g](const Key& k) { return "δ_" + g->token(k); };
  s.family = AlgebraFamily::functions;
  s.group = g;
  s.pointwise = true;
  s.commutative = true;
  return std::make_shared<Algebra>(std::move(s));
}

AlgebraPtr group_ring(GroupPtr g) {
  Algebra::Spec s;
  s.name = "groupalg:" + g->name();
  s.rule = [g](const Key& a, const Key& b) { return Vec::basis(g->mul(a, b)); };
  s.identity = Vec::basis(g->identity());
  if (g->finite()) {
    std::vector<Vec> basis;
    for (const Key& k : g->elements()) basis.push_back(Vec::basis(k));
    s.basis = basis;
  }
  s.key_window = [g](std::size_t r) { return g->window(r); };
  s.format_key = [g](const Key& k) { return g->token(k); };
  s.family = AlgebraFamily::group_ring;
  s.group = g;
  return std::make_shared<Algebra>(std::move(s));
}

AlgebraPtr corner_algebra(AlgebraPtr ambient, const Vec& f, std::string_view fname) {
  const auto& amb = *ambient;
  if (amb.multiply(f, f) != f) throw StructuralError(std::string(fname) + " is not idempotent");
  for (const Vec& b : amb.basis())
    if (amb.multiply(f, b) != amb.multiply(b, f))
      throw StructuralError(std::string(fname) + " is not central: fails against " + amb.format(b));
  Subspace span;
  for (const Vec& b : amb.basis()) span.insert(amb.multiply(f, b));
  Algebra::Spec s;
  s.name = "corner:" + amb.name() + ":" + std::string(fname);
  s.rule = amb.rule();
  s.identity = f;
  s.basis = span.basis();
  s.format_key = amb.key_formatter();
  s.family = AlgebraFamily::corner;
  s.group = amb.group();
  s.commutative = amb.commutative();
  return std::make_shared<Algebra>(std::move(s));
}

AlgebraPtr structure_constants(std::string name, std::size_t dim,
                               std::map<std::pair<std::size_t, std::size_t>, Vec> table,
                               std::optional<Vec> identity) {
  for (const auto& [ij, v] : table) {
    if (ij.first >= dim || ij.second >= dim) throw StructuralError("structure constant index out of range");
    for (const auto& [k, c] : v)
      if (k.head() < 0 || static_cast<std::size_t>(k.head()) >= dim)
        throw StructuralError("structure constant value out of range");
  }
  Algebra::Spec s;
  s.name = std::move(name);
  auto tab = std::make_shared<std::map<std::pair<std::size_t, std::size_t>, Vec>>(std::move(table));
  s.rule = [tab](const Key& a, const Key& b) {
    auto it = tab->find({static_cast<std::size_t>(a.head()), static_cast<std::size_t>(b.head())});
    return it == tab->end() ? Vec() : it->second;
  };
  s.identity = std::move(identity);
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(Vec::basis(Key::atom(static_cast<std::int64_t>(i))));
  s.basis = basis;
  s.format_key = [](const Key& k) { return "e" + std::to_string(k.head()); };
  s.family = AlgebraFamily::structconsts;
  return std::make_shared<Algebra>(std::move(s));
}

AlgebraPtr zero_algebra(std::size_t dim) {
  return structure_constants("structconsts:" + std::to_string(dim), dim, {});
}

AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b) {
  Algebra::Spec s;
  s.name = a->name() + " ⊗ " + b->name();
  s.rule = [a, b](const Key& x, const Key& y) {
    auto [x1, x2] = x.split_pair();
    auto [y1, y2] = y.split_pair();
    return tensor(a->product_rule(x1, y1), b->product_rule(x2, y2));
  };
  if (a->unital() && b->unital()) s.identity = tensor(a->identity(), b->identity());
  if (a->finite_dimensional() && b->finite_dimensional()) {
    std::vector<Vec> basis;
    for (const Vec& x : a->basis())
      for (const Vec& y : b->basis()) basis.push_back(tensor(x, y));
    s.basis = basis;
  }
  s.format_key = [a, b](const Key& k) {
    auto [x, y] = k.split_pair();
    return a->key_formatter()(x) + "⊗" + b->key_formatter()(y);
  };
  s.family = AlgebraFamily::tensor;
  s.commutative = a->commutative() && b->commutative();
  return std::make_shared<Algebra>(std::move(s));
}

Vec inject(int which, const Vec& x) {
  Vec out;
  for (const auto& [k, c] : x) out.add_term(Key::pair(Key::atom(which), k), c);
  return out;
}

Vec component(int which, const Vec& x) {
  Vec out;
  for (const auto& [k, c] : x) {
    auto [tag, inner] = k.split_pair();
    if (tag.head() == which) out.add_term(inner, c);
  }
  return out;
}

AlgebraPtr direct_sum(AlgebraPtr a, AlgebraPtr b, std::string name) {
  Algebra::Spec s;
  s.name = name.empty() ? a->name() + " ⊕ " + b->name() : std::move(name);
  s.rule = [a, b](const Key& x, const Key& y) {
    auto [tx, kx] = x.split_pair();
    auto [ty, ky] = y.split_pair();
    if (tx != ty) return Vec();
    return tx.head() == 0 ? inject(0, a->product_rule(kx, ky)) : inject(1, b->product_rule(kx, ky));
  };
  if (a->unital() && b->unital()) s.identity = inject(0, a->identity()) + inject(1, b->identity());
  if (a->finite_dimensional() && b->finite_dimensional()) {
    std::vector<Vec> basis;
    for (const Vec& x : a->basis()) basis.push_back(inject(0, x));
    for (const Vec& y : b->basis()) basis.push_back(inject(1, y));
    s.basis = basis;
  }
  s.format_key = [a, b](const Key& k) {
    auto [t, inner] = k.split_pair();
    return t.head() == 0 ? a->key_formatter()(inner) : "J[" + b->key_formatter()(inner) + "]";
  };
  s.family = AlgebraFamily::direct_sum;
  return std::make_shared<Algebra>(std::move(s));
}

Vec named_idempotent(const Algebra& a, std::string_view name) {
  const GroupPtr& g = a.group();
  if (!g) throw StructuralError("algebra " + a.name() + " has no named idempotents");
  if (a.family() == AlgebraFamily::functions) {
    if (name.starts_with("ind_")) {
      Vec out;
      for (const Key& k : named_subgroup(*g, name.substr(4))) out.add_term(k, 1);
      return out;
    }
    if (name.starts_with("delta_")) return Vec::basis(g->parse_token(name.substr(6)));
    throw StructuralError("unknown idempotent '" + std::string(name) + "'");
  }
  if (a.family() != AlgebraFamily::group_ring)
    throw StructuralError("algebra " + a.name() + " has no named idempotents");
  auto average = [&](const std::vector<Key>& elems, bool signed_) {
    Vec out;
    Scalar w = make_scalar(1, static_cast<long>(elems.size()));
    for (const Key& k : elems) out.add_term(k, signed_ ? Scalar(permutation_sign(k) * w) : w);
    return out;
  };
  bool symmetric = g->name().starts_with("symmetric:");
  if (name.starts_with("fN_")) {
    auto n = named_subgroup(*g, name.substr(3));
    if (!is_normal(*g, n)) throw StructuralError("subgroup " + std::string(name.substr(3)) + " is not normal");
    return average(n, false);
  }
  if (name == "e_triv") return average(g->elements(), false);
  if ((name == "e_sign" || name == "e_2" || name == "not_sign") && !symmetric)
    throw StructuralError("'" + std::string(name) + "' needs a symmetric group");
  if (name == "e_sign") return average(g->elements(), true);
  if (name == "not_sign") return a.identity() - average(g->elements(), true);
  if (name == "e_2") return a.identity() - average(g->elements(), false) - average(g->elements(), true);
  throw StructuralError("unknown idempotent '" + std::string(name) + "'");
}

Vec parse_combo(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw StructuralError("empty linear combination");
  if (t == "0") return {};
  Vec out;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i + 1;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    i = j;
    auto epos = term.find('e');
    if (epos == std::string::npos) throw StructuralError("bad term '" + term + "'");
    std::string coef = term.substr(0, epos);
    std::string idx = term.substr(epos + 1);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Scalar c(1);
    if (coef == "-") c = -1;
    else if (coef == "+" || coef.empty()) c = 1;
    else c = parse_scalar(coef);
    std::int64_t k = 0;
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), k);
    if (ec != std::errc() || p != idx.data() + idx.size() || idx.empty() || k < 0)
      throw StructuralError("bad basis index in '" + term + "'");
    out.add_term(Key::atom(k), c);
  }
  return out;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

AlgebraPtr parse_structconsts(std::string_view full) {
  auto parts = split(full.substr(std::string_view("structconsts:").size()), ';');
  std::size_t dim = 0;
  try {
    dim = std::stoul(parts.at(0));
  } catch (const std::exception&) {
    throw StructuralError("structconsts needs a dimension");
  }
  std::map<std::pair<std::size_t, std::size_t>, Vec> table;
  std::optional<Vec> unit;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.empty()) continue;
    auto eq = p.find('=');
    if (eq == std::string::npos) throw StructuralError("bad structconsts entry '" + p + "'");
    std::string lhs = p.substr(0, eq);
    Vec rhs = parse_combo(p.substr(eq + 1));
    if (lhs == "unit") {
      unit = rhs;
      continue;
    }
    auto star = lhs.find('*');
    if (star == std::string::npos) throw StructuralError("bad structconsts entry '" + p + "'");
    try {
      table[{std::stoul(lhs.substr(0, star)), std::stoul(lhs.substr(star + 1))}] = rhs;
    } catch (const std::exception&) {
      throw StructuralError("bad structconsts entry '" + p + "'");
    }
  }
  return structure_constants(std::string(full), dim, std::move(table), unit);
}

} // namespace

AlgebraPtr algebra_from_name(std::string_view name) {
  if (name.starts_with("functions:")) return function_algebra(group_from_name(name.substr(10)));
  if (name.starts_with("groupalg:")) return group_ring(group_from_name(name.substr(9)));
  if (name.starts_with("structconsts:")) return parse_structconsts(name);
  if (name.starts_with("corner:")) {
    auto rest = name.substr(7);
    auto pos = rest.rfind(':');
    if (pos == std::string_view::npos) throw StructuralError("corner needs an idempotent name");
    AlgebraPtr amb = algebra_from_name(rest.substr(0, pos));
    auto fname = rest.substr(pos + 1);
    return corner_algebra(amb, named_idempotent(*amb, fname), fname);
  }
  throw StructuralError("unknown algebra '" + std::string(name) + "'");
}

Report check_associative(const Algebra& a, const std::vector<Vec>& window) {
  Report r("associativity", a.name());
  r.set_window(std::to_string(window.size()) + " elements");
  Tally t("associativity");
  for (const Vec& x : window)
    for (const Vec& y : window)
      for (const Vec& z : window)
        t.record(a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z)),
                 [&] { return "(" + a.format(x) + ", " + a.format(y) + ", " + a.format(z) + ")"; });
  t.into(r);
  return r;
}

Report check_identity(const Algebra& a, const std::vector<Vec>& window) {
  Report r("identity", a.name());
  if (!a.unital()) {
    r.pass("identity", "no identity declared");
    return r;
  }
  Tally t("two-sided identity");
  for (const Vec& x : window)
    t.record(a.multiply(a.identity(), x) == x && a.multiply(x, a.identity()) == x,
             [&] { return a.format(x); });
  t.into(r);
  return r;
}

Vec local_unit(const Algebra& a, const std::vector<Vec>& elems) {
  Vec e;
  if (a.pointwise()) {
    Vec out;
    for (const Vec& x : elems)
      for (const auto& [k, c] : x)
        if (out.coeff(k) == 0) out.add_term(k, 1);
    e = out;
  } else if (a.unital()) {
    e = a.identity();
  } else if (a.finite_dimensional()) {
    // Stack e*x_i and x_i*e block by block and solve for the coordinates of e.
    std::vector<Vec> columns;
    for (const Vec& b : a.basis()) {
      Vec col;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        auto tag = [&](int side, const Vec& v) {
          Vec out;
          for (const auto& [k, c] : v) out.add_term(Key::tuple({Key::atom(side), Key::atom(static_cast<std::int64_t>(i)), k}), c);
          return out;
        };
        col += tag(0, a.multiply(b, elems[i]));
        col += tag(1, a.multiply(elems[i], b));
      }
      columns.push_back(col);
    }
    Vec target;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (int side = 0; side < 2; ++side)
        for (const auto& [k, c] : elems[i])
          target.add_term(Key::tuple({Key::atom(side), Key::atom(static_cast<std::int64_t>(i)), k}), c);
    auto sol = solve(columns, target);
    if (!sol) throw NoSolutionError("no local unit exists for the given elements in " + a.name());
    e = combine(*sol, a.basis());
  } else {
    throw CapabilityError("no local-unit method for " + a.name());
  }
  for (const Vec& x : elems)
    if (a.multiply(e, x) != x || a.multiply(x, e) != x)
      throw NoSolutionError("local unit candidate fails on " + a.format(x));
  return e;
}

Report check_nondegenerate(const Algebra& a, const std::vector<Vec>& window) {
  Report r("nondegenerate", a.name());
  r.set_window(std::to_string(window.size()) + " elements");
  Subspace span(window);
  const auto& basis = span.basis();
  for (int side = 0; side < 2; ++side) {
    std::vector<Vec> images;
    for (const Vec& x : basis) {
      Vec stacked;
      for (std::size_t j = 0; j < window.size(); ++j) {
        Vec p = side == 0 ? a.multiply(x, window[j]) : a.multiply(window[j], x);
        for (const auto& [k, c] : p) stacked.add_term(Key::pair(Key::atom(static_cast<std::int64_t>(j)), k), c);
      }
      images.push_back(stacked);
    }
    auto kernel = null_space(images);
    std::string name = side == 0 ? "x*b = 0 for all b implies x = 0" : "a*x = 0 for all a implies x = 0";
    if (kernel.empty())
      r.pass(name, "null space is zero", basis.size());
    else
      r.fail(name, a.format(combine(kernel.front(), basis)),
             "null space dimension " + std::to_string(kernel.size()));
  }
  return r;
}

Report check_s_unital_left(const Algebra& a, const std::vector<Vec>& window) {
  Report r("s_unital_left", a.name());
  r.set_window(std::to_string(window.size()) + " elements");
  Tally t("x in span(window)*x");
  for (const Vec& x : window) {
    std::vector<Vec> cols;
    for (const Vec& w : window) cols.push_back(a.multiply(w, x));
    t.record(solve(cols, x).has_value(), [&] { return a.format(x); });
  }
  t.into(r);
  return r;
}

Multiplier multiplier_from_element(AlgebraPtr alg, const Vec& z, std::vector<Vec> window) {
  return {[alg, z](const Vec& x) { return alg->multiply(z, x); },
          [alg, z](const Vec& x) { return alg->multiply(x, z); }, std::move(window)};
}

Multiplier identity_multiplier(std::vector<Vec> window) {
  return {[](const Vec& x) { return x; }, [](const Vec& x) { return x; }, std::move(window)};
}

Multiplier zero_multiplier(std::vector<Vec> window) {
  return {[](const Vec&) { return Vec(); }, [](const Vec&) { return Vec(); }, std::move(window)};
}

Multiplier scale(const Multiplier& m, const Scalar& c) {
  auto u = m.left;
  auto v = m.right;
  return {[u, c](const Vec& x) { return c * u(x); }, [v, c](const Vec& x) { return c * v(x); }, m.window};
}

Multiplier add(const Multiplier& m1, const Multiplier& m2) {
  auto u1 = m1.left, u2 = m2.left, v1 = m1.right, v2 = m2.right;
  return {[u1, u2](const Vec& x) { return u1(x) + u2(x); },
          [v1, v2](const Vec& x) { return v1(x) + v2(x); }, m1.window};
}

Report multiplier_check(const Algebra& a, const Multiplier& m, const std::vector<Vec>& window) {
  Report r("multiplier_check", a.name());
  r.set_window(std::to_string(window.size()) + " elements");
  Tally compat("U(a)b = aV(b)"), left("U(ab) = U(a)b"), right("V(ab) = aV(b)");
  for (const Vec& x : window)
    for (const Vec& y : window) {
      auto w = [&] { return "(" + a.format(x) + ", " + a.format(y) + ")"; };
      compat.record(a.multiply(m.left(x), y) == a.multiply(x, m.right(y)), w);
      Vec xy = a.multiply(x, y);
      left.record(m.left(xy) == a.multiply(m.left(x), y), w);
      right.record(m.right(xy) == a.multiply(x, m.right(y)), w);
    }
  compat.into(r);
  left.into(r);
  right.into(r);
  return r;
}

Multiplier multiplier_product(const Multiplier& m1, const Multiplier& m2) {
  std::vector<Vec> window;
  if (m1.window.empty() || m2.window.empty()) {
    if (!(m1.window.empty() && m2.window.empty())) throw StructuralError("multiplier window mismatch");
  } else {
    Subspace s2(m2.window);
    for (const Vec& v : m1.window)
      if (s2.contains(v)) window.push_back(v);
    if (window.empty()) throw StructuralError("multiplier window mismatch: windows are disjoint");
  }
  auto u1 = m1.left, u2 = m2.left, v1 = m1.right, v2 = m2.right;
  return {[u1, u2](const Vec& x) { return u1(u2(x)); }, [v1, v2](const Vec& x) { return v2(v1(x)); },
          std::move(window)};
}

bool multipliers_agree(const Multiplier& m1, const Multiplier& m2, const std::vector<Vec>& window) {
  for (const Vec& x : window)
    if (m1.left(x) != m2.left(x) || m1.right(x) != m2.right(x)) return false;
  return true;
}

} // namespace mha
