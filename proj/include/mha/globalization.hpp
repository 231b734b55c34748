#ifndef MHA_GLOBALIZATION_HPP
#define MHA_GLOBALIZATION_HPP

#include "mha/partial_action.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mha {

// An enveloping action (R, theta, pi) of a partial action. R is the span of
// `generators` inside the ambient algebra of `envelope`.
struct Globalization {
  std::string name;
  PartialActionData partial;
  ModuleAlgebra envelope;
  LinearOp theta;  // L -> R
  LinearOp pi;     // R -> R
  std::vector<Vec> generators;
  std::vector<Key> a_window;

  std::vector<Vec> r_basis() const;
};

// phi(x) = f_x(_b) in Hom^r(A, L): g -> (delta_g b).x.
Vec phi_embed_with(const PartialActionData& p, const Vec& x, const Vec& b);
// The same with b found by the quasi-unitary search. Throws
// InconclusiveError when no witness is found.
Vec phi_embed(const PartialActionData& p, const Vec& x, const std::vector<Key>& a_window,
              std::size_t max_candidates = kDefaultMaxCandidates);

// The standard envelope: R spanned by a > phi(x), theta = phi and
// pi(F) = phi(sum_g F(delta_g)). Throws RejectedInput when the partial
// action is not symmetric on the window, L is not finite dimensional or no
// quasi-unitary witness exists for a basis of L.
Globalization globalize(const PartialActionData& p, const std::vector<Key>& a_window);

Report check_enveloping(const Globalization& g);
// The largest submodule killed by pi, {v : pi(c > v) = 0 for all c}, must
// be zero; also the cyclic submodules of the generators one by one.
Report check_minimal(const Globalization& g);

struct EnvelopeComparison {
  Report report;
  std::vector<std::pair<Vec, Vec>> table;  // basis element of R1, its image
  std::optional<Vec> kernel_witness;
  bool isomorphism = false;
};

// Phi: R1 -> R2 with Phi(a > theta1(x)) = a > theta2(x), computed through
// v -> (g -> theta^-1(pi(delta_g > v))) on both sides.
EnvelopeComparison compare_envelopes(const Globalization& g1, const Globalization& g2);

// A zero-product A-module with a > j = eps(a) j.
ModuleAlgebra junk_module(MhaPtr acting, std::size_t dim);
// R (+) J with theta and pi extended by zero on J.
Globalization junk_envelope(const Globalization& g, const ModuleAlgebra& junk);
// The same envelope with basis keys pair(g, r) relabelled to pair(g^-1, r).
Globalization transport(const Globalization& g);
Globalization with_zero_projection(const Globalization& g);

} // namespace mha

#endif // MHA_GLOBALIZATION_HPP
