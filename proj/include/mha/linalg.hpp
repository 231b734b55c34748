#ifndef MHA_LINALG_HPP
#define MHA_LINALG_HPP

#include "mha/sparse.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace mha {

// Incremental exact row reduction over sparse vectors. Rows are kept in
// semi-echelon form: each row has a distinct pivot which is its smallest key,
// scaled to 1. Every row remembers which inserted vectors it combines, so
// relations and solutions come out of the same pass.
class Reducer {
 public:
  struct Reduced {
    Vec remainder;
    Vec combo;  // over Key::atom(tag): v = remainder + sum combo_t * v_t
  };

  // Returns the relation (over tag keys, coefficient 1 on `tag`) if v is
  // dependent on the vectors inserted so far; nullopt if it was added.
  std::optional<Vec> insert(const Vec& v, std::size_t tag);
  Reduced reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).remainder.is_zero(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    Vec v;
    Vec combo;
  };
  std::map<Key, Row> rows_;
};

// Sum of coeffs[atom(i)] * vs[i].
Vec combine(const Vec& coeffs, const std::vector<Vec>& vs);

// Kernel of e_i -> images[i], as coefficient vectors over Key::atom(i).
std::vector<Vec> null_space(const std::vector<Vec>& images);

std::size_t rank_of(const std::vector<Vec>& vs);

// Coefficients c with sum c_i columns[i] = target, or nullopt.
std::optional<Vec> solve(const std::vector<Vec>& columns, const Vec& target);

// A finite-dimensional subspace with an independent basis drawn from its
// generators, in insertion order.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const std::vector<Vec>& generators);

  bool insert(const Vec& v);  // true if the dimension grew
  bool contains(const Vec& v) const { return red_.contains(v); }
  bool contains_all(const std::vector<Vec>& vs) const;
  Vec reduce(const Vec& v) const { return red_.reduce(v).remainder; }
  // Coordinates of v in basis() or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  bool equals(const Subspace& o) const;

 private:
  std::vector<Vec> basis_;
  Reducer red_;
};

Subspace intersect(const Subspace& a, const Subspace& b);

// Inverse of a linear map given on a finite set of domain keys, evaluated by
// exact solving. Throws NoSolutionError when the target is not in the image
// and StructuralError when the map is not injective on the window.
class WindowedInverse {
 public:
  WindowedInverse(std::vector<Key> domain, const std::function<Vec(const Key&)>& forward);
  Vec operator()(const Vec& target) const;
  bool injective() const { return injective_; }

 private:
  std::vector<Key> domain_;
  std::vector<Vec> images_;
  bool injective_ = true;
};

} // namespace mha

#endif // MHA_LINALG_HPP
