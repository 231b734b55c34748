#include "mha/module.hpp"

#include "mha/errors.hpp"

namespace mha {

Vec ModuleAlgebra::operator()(const Vec& a, const Vec& x) const {
  Vec out;
  for (const auto& [k, c] : a) out += c * act(k, x);
  return out;
}

UnitSearch search_unit(const MhaInstance& m, const std::vector<Key>& window, std::size_t max_candidates,
                       const std::function<bool(const Vec&)>& accept) {
  UnitSearch res;
  const Algebra& a = *m.algebra;
  if (!a.pointwise()) {
    if (a.unital()) {
      res.tried = 1;
      if (accept(a.identity())) res.witness = a.identity();
    }
    return res;
  }
  std::size_t n = window.size();
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      if (res.tried >= max_candidates) {
        res.exhausted = true;
        return res;
      }
      Vec cand;
      for (auto i : idx) cand.add_term(window[i], 1);
      ++res.tried;
      if (accept(cand)) {
        res.witness = cand;
        return res;
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return res;
}

Report check_module_algebra_laws(const ModuleAlgebra& ma, const std::vector<Key>& a_window,
                                 const std::vector<Vec>& samples, std::size_t max_candidates) {
  const MhaInstance& m = *ma.acting;
  const Algebra& R = *ma.algebra;
  Report r("module_algebra", ma.name);
  r.set_window(std::to_string(a_window.size()) + " acting basis elements, " + std::to_string(samples.size()) +
               " samples");
  auto ka = [&](const Key& k) { return m.algebra->key_formatter()(k); };

  Tally assoc("a▷(b▷x) = ab▷x");
  for (const Key& a : a_window)
    for (const Key& b : a_window)
      for (const Vec& x : samples) {
        Vec lhs = ma.act(a, ma.act(b, x));
        Vec rhs = ma(m.mul(Vec::basis(a), Vec::basis(b)), x);
        assoc.record(lhs == rhs, [&] { return "a=" + ka(a) + ", b=" + ka(b) + ", x=" + R.format(x); });
      }
  assoc.into(r);

  Tally law("a▷(xy) = (a₁▷x)(a₂▷y)");
  for (const Vec& y : samples) {
    auto unit = search_unit(m, a_window, max_candidates, [&](const Vec& e) { return ma(e, y) == y; });
    if (!unit.witness) {
      law.note_inconclusive("no covering unit for y=" + R.format(y) + " within the candidate bound");
      continue;
    }
    for (const Key& a : a_window) {
      Vec cover = m.T1(Vec::basis(a), *unit.witness);
      for (const Vec& x : samples) {
        Vec lhs = ma.act(a, R.multiply(x, y));
        Vec rhs = extend_pairs(cover, [&](const Key& u, const Key& v) { return R.multiply(ma.act(u, x), ma.act(v, y)); });
        law.record(lhs == rhs, [&] { return "a=" + ka(a) + ", x=" + R.format(x) + ", y=" + R.format(y); });
      }
    }
  }
  law.into(r);

  Tally unital("x = e▷x for some e (A▷R = R)");
  for (const Vec& x : samples) {
    if (x.is_zero()) continue;
    auto unit = search_unit(m, a_window, max_candidates, [&](const Vec& e) { return ma(e, x) == x; });
    if (unit.exhausted && !unit.witness) {
      unital.note_inconclusive("candidate bound reached for x=" + R.format(x));
      continue;
    }
    unital.record(unit.witness.has_value(), [&] { return R.format(x); });
  }
  unital.into(r);
  return r;
}

} // namespace mha
