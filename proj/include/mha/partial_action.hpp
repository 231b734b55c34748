#ifndef MHA_PARTIAL_ACTION_HPP
#define MHA_PARTIAL_ACTION_HPP

#include "mha/module.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mha {

// A partial action a.x of an MHA on an algebra L together with the
// multiplier map e: A -> M(L), given on basis keys of A.
struct PartialActionData {
  std::string name;
  MhaPtr acting;
  AlgebraPtr target;
  ModuleAction act;
  std::function<Multiplier(const Key&)> e_map;

  Vec operator()(const Vec& a, const Vec& x) const;
  Vec e_left(const Vec& a, const Vec& x) const;
  Vec e_right(const Vec& a, const Vec& x) const;
};

// Items (i)-(iv). The x window should be independent (a basis of L for
// finite L) so that (iv) is meaningful.
Report check_partial_action(const PartialActionData& p, const std::vector<Key>& a_window,
                            const std::vector<Vec>& x_window);
// Items (v)-(vii). Throws CapabilityError for a non-regular instance.
Report check_symmetric(const PartialActionData& p, const std::vector<Key>& a_window,
                       const std::vector<Vec>& x_window);
// e(a) = eps(a)1 on the window.
bool is_global(const PartialActionData& p, const std::vector<Key>& a_window, const std::vector<Vec>& x_window);

// A_G on kG by delta_p > h = [p = h] h.
ModuleAlgebra functions_on_group_ring(GroupPtr g);
// A_G partial action on f_N kG, from the closed form
// delta_p . (f_N h) = [p h^-1 in N]/|N| f_N p.
PartialActionData example_fN(GroupPtr g, const std::vector<Key>& n, const std::string& n_name = "N");
// A_G on any algebra by delta_g . x = lambda(delta_g) x, lambda = [g in N]/|N|.
PartialActionData example_lambda(GroupPtr g, const std::vector<Key>& n, AlgebraPtr target,
                                 const std::string& n_name = "N");
// b with b > y = y: the window indicator or the identity, else a search.
// Throws InconclusiveError.
Vec acting_unit(const ModuleAlgebra& g, const std::vector<Key>& a_window, const Vec& y);
// A global module algebra seen as a partial action with e = eps 1.
PartialActionData global_as_partial(const ModuleAlgebra& ma);

struct AProjection {
  std::string name;
  ModuleAlgebra global;
  AlgebraPtr sub;  // L inside R, in the coordinates of R
  LinearOp pi;
};

// The span of `basis` (closed under the product of R) as an algebra.
AlgebraPtr subalgebra(AlgebraPtr ambient, std::vector<Vec> basis, std::string name);
// Left multiplication by an idempotent of R onto f R (a corner when f is
// central).
AProjection idempotent_projection(const ModuleAlgebra& global, const Vec& f, std::string fname);
AProjection identity_projection(const ModuleAlgebra& global);

Report check_a_projection(const AProjection& pi, const std::vector<Key>& a_window, const std::vector<Vec>& r_window,
                          bool symmetric);

// a.x = pi(a > x) with e(a) given by the two one-sided formulas. The unit b
// with b > y = y is the indicator of the window (or the identity), falling
// back to a search. Throws RejectedInput if pi is not a symmetric
// A-projection on the windows.
PartialActionData induce_from_projection(const AProjection& pi, const std::vector<Key>& a_window,
                                         const std::vector<Vec>& r_window);

// The corner theta(_delta_e) Hom^r(A_G, A_G) for finite G with its global
// module structure: the idempotent and the ambient module algebra.
struct ThetaCorner {
  ModuleAlgebra global;
  Vec idempotent;
};
ThetaCorner theta_corner(GroupPtr g);

struct QuasiUnit {
  Report report;
  std::optional<Vec> witness;
};

// b with b.x = x and ab.x = a.x for every listed x and every a in the window.
QuasiUnit check_quasi_unitary(const PartialActionData& p, const std::vector<Vec>& elems,
                              const std::vector<Key>& a_window,
                              std::size_t max_candidates = kDefaultMaxCandidates);

enum class PartialMutation { zero_pair, e_right, e_left };
PartialMutation parse_partial_mutation(std::string_view s);
// zero_pair drops the coordinate of x along x_window[0] when a = a_window[0].
PartialActionData mutate(const PartialActionData& p, PartialMutation what, const std::vector<Key>& a_window,
                         const std::vector<Vec>& x_window);

} // namespace mha

#endif // MHA_PARTIAL_ACTION_HPP
