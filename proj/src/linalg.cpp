#include "mha/linalg.hpp"

#include "mha/errors.hpp"

namespace mha {

Reducer::Reduced Reducer::reduce(const Vec& v) const {
  Reduced out{v, {}};
  if (rows_.empty()) return out;
  const Key* cursor = nullptr;
  Key last;
  for (;;) {
    const auto& terms = out.remainder.terms();
    auto it = cursor ? terms.upper_bound(last) : terms.begin();
    auto row = rows_.end();
    for (; it != terms.end(); ++it) {
      row = rows_.find(it->first);
      if (row != rows_.end()) break;
    }
    if (it == terms.end()) break;
    Scalar c = it->second;
    last = it->first;
    cursor = &last;
    out.remainder -= c * row->second.v;
    out.combo += c * row->second.combo;
  }
  return out;
}

std::optional<Vec> Reducer::insert(const Vec& v, std::size_t tag) {
  Reduced r = reduce(v);
  Vec self = Vec::basis(Key::atom(static_cast<std::int64_t>(tag)));
  if (r.remainder.is_zero()) return self - r.combo;
  Scalar lead = r.remainder.begin()->second;
  Scalar inv = 1 / lead;
  Key pivot = r.remainder.begin()->first;
  rows_.emplace(pivot, Row{inv * r.remainder, inv * (self - r.combo)});
  return std::nullopt;
}

Vec combine(const Vec& coeffs, const std::vector<Vec>& vs) {
  Vec out;
  for (const auto& [k, c] : coeffs) out += c * vs.at(static_cast<std::size_t>(k.head()));
  return out;
}

std::vector<Vec> null_space(const std::vector<Vec>& images) {
  Reducer red;
  std::vector<Vec> out;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (auto rel = red.insert(images[i], i)) out.push_back(std::move(*rel));
  return out;
}

std::size_t rank_of(const std::vector<Vec>& vs) {
  Reducer red;
  for (std::size_t i = 0; i < vs.size(); ++i) red.insert(vs[i], i);
  return red.rank();
}

std::optional<Vec> solve(const std::vector<Vec>& columns, const Vec& target) {
  Reducer red;
  for (std::size_t i = 0; i < columns.size(); ++i) red.insert(columns[i], i);
  auto r = red.reduce(target);
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.combo;
}

Subspace::Subspace(const std::vector<Vec>& generators) {
  for (const Vec& g : generators) insert(g);
}

bool Subspace::insert(const Vec& v) {
  if (red_.insert(v, basis_.size())) return false;
  basis_.push_back(v);
  return true;
}

bool Subspace::contains_all(const std::vector<Vec>& vs) const {
  for (const Vec& v : vs)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  auto r = red_.reduce(v);
  if (!r.remainder.is_zero()) return std::nullopt;
  return r.combo;
}

bool Subspace::equals(const Subspace& o) const {
  return dim() == o.dim() && contains_all(o.basis()) && o.contains_all(basis());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  // Relations sum x_i a_i - sum y_j b_j = 0 give the intersection elements.
  std::vector<Vec> stacked = a.basis();
  for (const Vec& v : b.basis()) stacked.push_back(-v);
  Subspace out;
  for (const Vec& rel : null_space(stacked)) {
    Vec x;
    for (const auto& [k, c] : rel) {
      auto i = static_cast<std::size_t>(k.head());
      if (i < a.dim()) x += c * a.basis()[i];
    }
    out.insert(x);
  }
  return out;
}

WindowedInverse::WindowedInverse(std::vector<Key> domain, const std::function<Vec(const Key&)>& forward)
    : domain_(std::move(domain)) {
  images_.reserve(domain_.size());
  for (const Key& k : domain_) images_.push_back(forward(k));
  injective_ = null_space(images_).empty();
}

Vec WindowedInverse::operator()(const Vec& target) const {
  if (!injective_) throw StructuralError("map is not injective on its window");
  auto c = solve(images_, target);
  if (!c) throw NoSolutionError("target outside the image of the windowed map");
  Vec out;
  for (const auto& [k, s] : *c) out.add_term(domain_[static_cast<std::size_t>(k.head())], s);
  return out;
}

} // namespace mha
