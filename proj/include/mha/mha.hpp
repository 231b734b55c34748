#ifndef MHA_MHA_HPP
#define MHA_MHA_HPP

#include "mha/algebra.hpp"

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mha {

// A rule on a pair of basis keys whose value lives in A (x) A (pair keys).
using PairRule = std::function<Vec(const Key&, const Key&)>;

// Multiplier Hopf algebra in covered form. Delta itself is never stored;
// only the products that land back in A (x) A:
//   delta_r(a,b)  = Delta(a)(1 (x) b)     delta_l(a,b)  = (a (x) 1)Delta(b)
//   delta_rf(a,b) = Delta(a)(b (x) 1)     delta_lf(a,b) = (1 (x) a)Delta(b)
// t1_inv, t2_inv invert the first two (as maps a (x) b -> ...), rf_inv and
// lf_inv the flipped pair. cov_iS(a,b) = sum a1 (x) S(a2)b and
// cov_Sinv(a,b) = sum a2 (x) S^-1(a1)b.
struct MhaInstance {
  std::string name;
  AlgebraPtr algebra;
  GroupPtr group;
  PairRule delta_r, delta_l, delta_rf, delta_lf;
  PairRule t1_inv, t2_inv, rf_inv, lf_inv;
  std::function<Scalar(const Key&)> counit;
  std::function<Vec(const Key&)> antipode;
  std::function<Vec(const Key&)> antipode_inv;  // empty when not regular
  PairRule cov_iS, cov_Sinv;
  // Right-finiteness: keys g with delta_g * a possibly nonzero. Empty when
  // the instance has no such capability (kG).
  std::function<std::vector<Key>(const Vec&)> right_support;

  bool regular() const { return bool(antipode_inv) && bool(cov_Sinv) && bool(rf_inv) && bool(lf_inv); }
  bool right_finite() const { return bool(right_support); }

  Vec mul(const Vec& x, const Vec& y) const { return algebra->multiply(x, y); }
  Vec T1(const Vec& a, const Vec& b) const { return extend2(a, b, delta_r); }
  Vec T2(const Vec& a, const Vec& b) const { return extend2(a, b, delta_l); }
  // Tensor-argument forms.
  Vec T1(const Vec& t) const { return extend_pairs(t, delta_r); }
  Vec T2(const Vec& t) const { return extend_pairs(t, delta_l); }
  Vec T1_inv(const Vec& t) const { return extend_pairs(t, t1_inv); }
  Vec T2_inv(const Vec& t) const { return extend_pairs(t, t2_inv); }
  Scalar eps(const Vec& a) const;
  Vec S(const Vec& a) const { return extend(a, antipode); }
  Vec S_inv(const Vec& a) const;

  std::string format(const Vec& a) const { return algebra->format(a); }
  std::string format_tensor(const Vec& t) const;
  std::string format_triple(const Vec& t) const;
};

using MhaPtr = std::shared_ptr<const MhaInstance>;

MhaPtr function_algebra_mha(GroupPtr g);  // A_G
MhaPtr group_algebra_mha(GroupPtr g);     // kG
// kG with basis tokens printed as phi(_delta_g): the dual of A_G.
MhaPtr dual_group_mha(GroupPtr g);
// "A_G:<group>", "kG:<group>", "dual:<group>".
MhaPtr mha_from_name(std::string_view name);

enum class Sweedler { iS, Sinv, plain_r, plain_l };
Sweedler parse_sweedler(std::string_view s);  // "iS", "Sinv", "plain-r", "plain-l"
Vec sweedler_cov(const MhaInstance& m, Sweedler pattern, const Vec& a, const Vec& b);

// Basis-key windows: finite groups use every element.
std::vector<Key> mha_window(const MhaInstance& m, std::size_t radius);

Report check_coassociativity(const MhaInstance& m, const std::vector<Key>& window);
Report check_counit(const MhaInstance& m, const std::vector<Key>& window);
Report check_antipode(const MhaInstance& m, const std::vector<Key>& window);
// T1/T2 round trips (both directions).
Report check_t_inverses(const MhaInstance& m, const std::vector<Key>& window);
// Flipped coverage bijectivity, S o S^-1 = id, plus the T1/T2 round trips.
Report check_regular(const MhaInstance& m, const std::vector<Key>& window);
// eps multiplicative, S anti-multiplicative.
Report check_structure_maps(const MhaInstance& m, const std::vector<Key>& window);
Report mha_axiom_suite(const MhaInstance& m, const std::vector<Key>& window);

enum class MhaMutation { delta, counit, antipode, t2_inv };
// A deliberately broken copy used to show the checks are not vacuous.
MhaPtr mutate(const MhaInstance& m, MhaMutation what);
MhaMutation parse_mha_mutation(std::string_view s);

// Replaces the closed-form inverses by exact solving over window x window.
// Meant for finite-dimensional instances where the window is a basis.
MhaPtr with_windowed_inverses(const MhaInstance& m, const std::vector<Key>& window);

} // namespace mha

#endif // MHA_MHA_HPP
