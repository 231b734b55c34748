#ifndef MHA_COACTION_HPP
#define MHA_COACTION_HPP

#include "mha/group_action.hpp"
#include "mha/linalg.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mha {

// A right partial coaction rho: L -> M(L (x) A) in covered form. Elements of
// L (x) A are vectors over pair keys (L key, A key); E is a multiplier of
// L (x) A given by its left and right operators.
struct PartialCoactionData {
  std::string name;
  AlgebraPtr target;
  MhaPtr acting;
  std::function<Vec(const Vec&, const Key&)> rho_r;  // rho(x)(1 (x) a)
  std::function<Vec(const Key&, const Vec&)> rho_l;  // (1 (x) a)rho(x)
  Multiplier E;

  AlgebraPtr tensor() const { return tensor_algebra(target, acting->algebra); }
  // rho(x)t and t rho(x) for t in L (x) A.
  Vec rho_times(const Vec& x, const Vec& t) const;
  Vec times_rho(const Vec& t, const Vec& x) const;
};

// rho(x) = x (x) delta_1 and E = 1 (x) delta_1 over A_G.
PartialCoactionData trivial_coaction(AlgebraPtr l, GroupPtr g);
// rho(x) = sum_g alpha_g(x sigma_{g^-1}) (x) delta_g and E = sum_g sigma_g (x) delta_g.
PartialCoactionData coaction_from_group_action(const PartialGroupAction& p);
// E = rho(1). Throws CapabilityError when L has no identity.
PartialCoactionData unital_coaction(std::string name, AlgebraPtr l, MhaPtr a,
                                    std::function<Vec(const Vec&, const Key&)> rho_r,
                                    std::function<Vec(const Key&, const Vec&)> rho_l);
// C2 acting on kC3 by inversion, as a global A_C2 coaction.
PartialCoactionData inversion_coaction();
// kG on itself through Delta(g) = g (x) g.
PartialCoactionData group_like_coaction(GroupPtr g);
// L (x) A with rho = id (x) Delta and E = 1.
PartialCoactionData tensor_coaction(AlgebraPtr l, MhaPtr a);

// Covered coassociativity with E, the identities rho = E rho = rho E,
// counit recovery, rho multiplicative, item (i) inclusions, E idempotent and
// rho injective on the window.
Report check_partial_coaction(const PartialCoactionData& c, const std::vector<Vec>& xw, const std::vector<Key>& aw);
// (rho (x) id)(rho(x)) = (id (x) Delta)(rho(x))(E (x) 1), covered by y (x) c.
Report check_symmetric_coaction(const PartialCoactionData& c, const std::vector<Vec>& xw,
                                const std::vector<Key>& aw);
// rho(L)(1 (x) A) = E(L (x) A) and (1 (x) A)rho(L) = (L (x) A)E as subspaces.
Report check_coaction_images(const PartialCoactionData& c, const std::vector<Vec>& xw, const std::vector<Key>& aw);
bool is_global(const PartialCoactionData& c, const std::vector<Vec>& window);

Report check_quasi_counitary(const MhaInstance& a, const Vec& e, const std::vector<Key>& aw);

// A finitely supported functional on the basis of A. The cover b of
// omega(_b) is the local unit of supp(omega).
using DualFunctional = Vec;
Vec dual_act(const PartialCoactionData& c, const DualFunctional& omega, const Vec& x);
// (omega omega')(a) = (omega (x) omega')(Delta(a)), evaluated on the window.
DualFunctional dual_product(const MhaInstance& a, const DualFunctional& w1, const DualFunctional& w2,
                            const std::vector<Key>& aw);

inline constexpr std::size_t kDefaultClosureBound = 512;

struct GeneratedSubcomodule {
  Subspace space;
  Report report;
  bool complete = true;  // false when the dimension bound was hit
};

// Smallest subalgebra containing the components x_{i,a} of rho(u)(1 (x) a)
// for u in P and a in the window. c must be a global coaction.
GeneratedSubcomodule generated_subcomodule(const PartialCoactionData& c, const std::vector<Vec>& p,
                                           const std::vector<Key>& aw,
                                           std::size_t bound = kDefaultClosureBound);

struct CoactionGlobalization {
  std::string name;
  PartialCoactionData partial;
  PartialCoactionData ambient;  // L (x) A, rho = id (x) Delta
  Vec e;
  std::vector<Vec> q_basis;
  LinearOp theta;
  LinearOp pi;
  std::vector<Key> a_window;
  // Phi(E)t for t in theta(L) (x) A; throws NoSolutionError outside.
  Vec phi_E(const Vec& t) const;
};

// theta(x) = rho(x)(1 (x) e), pi(v) = E(1 (x) e)v, Q generated by theta(L).
// Throws RejectedInput when the coaction or e fails its checks, when L is
// not finite dimensional, or when the closure is incomplete.
CoactionGlobalization coaction_globalize(const PartialCoactionData& c, const Vec& e, const std::vector<Key>& aw,
                                         std::size_t bound = kDefaultClosureBound);
Report check_coglobalization(const CoactionGlobalization& g);

enum class CoglobMutation { identity_projection, enlarged_envelope };
CoglobMutation parse_coglob_mutation(std::string_view s);
// identity_projection: pi = id on Q = L (x) A. enlarged_envelope: Q = L (x) A
// with the original pi.
CoactionGlobalization mutate(const CoactionGlobalization& g, CoglobMutation what);

} // namespace mha

#endif // MHA_COACTION_HPP
