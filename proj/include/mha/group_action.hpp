#ifndef MHA_GROUP_ACTION_HPP
#define MHA_GROUP_ACTION_HPP

#include "mha/partial_action.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mha {

// A partial action of a finite group on a finite-dimensional algebra R.
// The ideals are the images R_g = R sigma_g and alpha(g, .) is only
// meaningful on R_{g^-1}.
struct PartialGroupAction {
  std::string name;
  GroupPtr group;
  AlgebraPtr target;
  std::function<Multiplier(const Key&)> sigma;
  std::function<Vec(const Key&, const Vec&)> alpha;

  std::vector<Vec> ideal(const Key& g) const;
};

using GroupAutomorphisms = std::function<Vec(const Key&, const Vec&)>;

// Named actions of G on kG: "conjugation", "sign_twist" (symmetric groups,
// h -> sgn(g)^[h odd] g h g^-1), "inversion" (even cyclic groups, g^k acts
// by h -> h^((-1)^k)), "trivial".
GroupAutomorphisms group_ring_action(GroupPtr g, std::string_view name);

// Global action, sigma_g = 1.
PartialGroupAction global_group_action(GroupPtr g, AlgebraPtr r, GroupAutomorphisms beta, std::string name);
// Restriction of a global action on S to the corner fS of a central
// idempotent: R_g = f beta_g(f) S, alpha_g = beta_g.
PartialGroupAction restrict_to_corner(GroupPtr g, AlgebraPtr s, GroupAutomorphisms beta, const Vec& f,
                                      std::string name);
// S3 on (1 - e_sign)kS3 through the sign-twisted conjugation.
PartialGroupAction sign_twist_corner();

Report check_pga(const PartialGroupAction& p);
// Throws CapabilityError when some alpha_g is not injective on its ideal.
Report check_sigma_conditions(const PartialGroupAction& p);
Report check_globalizability(const PartialGroupAction& p);

// phi(_delta_g).x = alpha_g(x sigma_{g^-1}), e(phi(_delta_g)) = sigma_g.
// Throws RejectedInput unless check_pga and check_sigma_conditions pass.
PartialActionData to_hopf(const PartialGroupAction& p);
// sigma_g = e(phi(_delta_g)), alpha_g = phi(_delta_g). restricted. Throws
// RejectedInput if q is not a symmetric partial action, StructuralError if
// some e(phi(_delta_g)) is not a central idempotent.
PartialGroupAction to_group(const PartialActionData& q);
Report roundtrip_check(const PartialGroupAction& p);

enum class GroupActionMutation { decouple_alpha, noncentral_sigma, zero_product };
GroupActionMutation parse_group_action_mutation(std::string_view s);
// decouple_alpha: alpha at the first non-identity element g is replaced by
// alpha at the next element with the same ideal pair. noncentral_sigma:
// sigma at that g becomes left multiplication by a non-central idempotent
// of R (group rings only). zero_product: the same ideals inside R with its
// product set to zero.
PartialGroupAction mutate(const PartialGroupAction& p, GroupActionMutation what);

} // namespace mha

#endif // MHA_GROUP_ACTION_HPP
