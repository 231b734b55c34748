#include "mha/sparse.hpp"

namespace mha {

Vec Vec::basis(const Key& k, const Scalar& c) {
  Vec v;
  v.add_term(k, c);
  return v;
}

Scalar Vec::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<Key> Vec::support() const {
  std::vector<Key> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

void Vec::add_term(const Key& k, const Scalar& c) {
  if (mha::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (mha::is_zero(it->second)) terms_.erase(it);
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Vec& Vec::operator*=(const Scalar& c) {
  if (mha::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool Vec::normalized() const {
  for (const auto& t : terms_)
    if (mha::is_zero(t.second)) return false;
  return true;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= Scalar(-1); }
Vec operator*(const Scalar& c, Vec a) { return a *= c; }

Vec tensor(const Vec& x, const Vec& y) {
  Vec out;
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : y) out.add_term(Key::pair(k, l), c * d);
  return out;
}

std::string format_vec(const Vec& v, const KeyFormatter& fmt) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : v) {
    Scalar a = c;
    if (first) {
      if (sgn(a) < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += sgn(a) < 0 ? " - " : " + ";
      if (sgn(a) < 0) a = -a;
    }
    if (a != 1) out += to_string(a) + "*";
    out += fmt(k);
    first = false;
  }
  return out;
}

std::string format_vec(const Vec& v) { return format_vec(v, default_key_format); }

} // namespace mha
