#ifndef MHA_SPARSE_HPP
#define MHA_SPARSE_HPP

#include "mha/key.hpp"
#include "mha/scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace mha {

// Finitely supported vector over an arbitrary key set. Zero coefficients are
// never stored, so equality is plain map equality.
class Vec {
 public:
  using Terms = std::map<Key, Scalar>;

  Vec() = default;
  static Vec basis(const Key& k, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Key& k) const;
  std::vector<Key> support() const;
  const Terms& terms() const { return terms_; }
  Terms::const_iterator begin() const { return terms_.begin(); }
  Terms::const_iterator end() const { return terms_.end(); }

  void add_term(const Key& k, const Scalar& c);

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& c);

  bool operator==(const Vec& o) const { return terms_ == o.terms_; }

  // Debug invariant: no zero stored.
  bool normalized() const;

 private:
  Terms terms_;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(const Scalar& c, Vec a);

// x ⊗ y over pair keys.
Vec tensor(const Vec& x, const Vec& y);

// Linear extension of a rule on basis keys.
template <class F>
Vec extend(const Vec& x, F&& f) {
  Vec out;
  for (const auto& [k, c] : x) {
    Vec img = f(k);
    img *= c;
    out += img;
  }
  return out;
}

// Bilinear extension of a rule on pairs of basis keys.
template <class F>
Vec extend2(const Vec& x, const Vec& y, F&& f) {
  Vec out;
  for (const auto& [k, c] : x)
    for (const auto& [l, d] : y) {
      Vec img = f(k, l);
      img *= c * d;
      out += img;
    }
  return out;
}

// Linear extension over a tensor: f is applied to the two legs of each key.
template <class F>
Vec extend_pairs(const Vec& t, F&& f) {
  Vec out;
  for (const auto& [k, c] : t) {
    auto [a, b] = k.split_pair();
    Vec img = f(a, b);
    img *= c;
    out += img;
  }
  return out;
}

// Apply linear maps on each leg of a tensor.
template <class F, class G>
Vec map_legs(const Vec& t, F&& f, G&& g) {
  return extend_pairs(t, [&](const Key& a, const Key& b) {
    return tensor(f(Vec::basis(a)), g(Vec::basis(b)));
  });
}

std::string format_vec(const Vec& v, const KeyFormatter& fmt);
std::string format_vec(const Vec& v);

} // namespace mha

#endif // MHA_SPARSE_HPP
