#ifndef MHA_CONVOLUTION_HPP
#define MHA_CONVOLUTION_HPP

#include "mha/module.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mha {

// Hom^r(A, R) for a right-finite acting algebra. An element f(_a) is stored
// collapsed as the finitely supported function g -> f(delta_g a), encoded as
// a vector over keys pair(g, r) with r a basis key of R. Two elements are
// equal iff they agree as maps A -> R.
class HomSpace {
 public:
  HomSpace(MhaPtr source, AlgebraPtr target);

  const MhaPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }

  Vec value(const Vec& F, const Key& g) const;       // F(delta_g)
  Vec evaluate(const Vec& F, const Vec& a) const;    // F(a)
  std::vector<Key> support(const Vec& F) const;
  Vec from_values(const std::map<Key, Vec>& values) const;
  // f(_a): g -> f(delta_g a).
  Vec from_map(const std::function<Vec(const Vec&)>& f, const Vec& a) const;

  // (F*G)(c) = sum_{pq=c} F(p)G(q).
  Vec conv(const Vec& F, const Vec& G) const;
  // The same product through the t1_inv coverage of a (x) b.
  Vec conv_generic(const Vec& F, const Vec& G) const;
  // (a > F)(delta_g) = F(delta_g a).
  Vec act(const Vec& a, const Vec& F) const;

  std::string format(const Vec& F) const;
  // Hom^r(A,R) as an algebra on keys pair(g, r) (finite when G and R are).
  AlgebraPtr algebra() const;
  ModuleAlgebra module_algebra() const;

 private:
  MhaPtr source_;
  AlgebraPtr target_;
};

Report check_conv_associativity(const HomSpace& h, const std::vector<Vec>& samples);
// Closed-form and coverage paths agree on all pairs of samples.
Report check_conv_paths(const HomSpace& h, const std::vector<Vec>& samples);
// Module-algebra law of Hom^r(A,R) over the acting window.
Report check_module_algebra(const HomSpace& h, const std::vector<Key>& a_window, const std::vector<Vec>& samples);

using EndoRule = std::function<Vec(const Vec&)>;

// f is a convolutive inverse of g: items (i) and (ii) at every d in
// d_window for each test element a, with b = S^-1(local unit of a).
Report check_convolutive_inverse(const MhaInstance& m, const EndoRule& f, const EndoRule& g,
                                 const std::vector<Key>& tests, const std::vector<Key>& d_window);

// A candidate antipode that is an anti-homomorphism and a convolutive
// inverse of the identity with central local units behaves as the antipode.
Report check_antipode_from_inverse(const MhaInstance& m, const EndoRule& candidate, const std::vector<Key>& window);

} // namespace mha

#endif // MHA_CONVOLUTION_HPP
