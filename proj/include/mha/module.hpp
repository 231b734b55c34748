#ifndef MHA_MODULE_HPP
#define MHA_MODULE_HPP

#include "mha/mha.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mha {

// Action of a basis element of the acting algebra on a target element.
using ModuleAction = std::function<Vec(const Key&, const Vec&)>;

// A (global) left A-module algebra R.
struct ModuleAlgebra {
  std::string name;
  MhaPtr acting;
  AlgebraPtr algebra;
  ModuleAction act;

  Vec operator()(const Vec& a, const Vec& x) const;
};

// Local-unit candidates of the acting algebra. Pointwise algebras: indicator
// functions of subsets of the window, smallest first, then lexicographic in
// the window order. Unital algebras: the identity only.
struct UnitSearch {
  std::optional<Vec> witness;
  std::size_t tried = 0;
  bool exhausted = false;  // bound hit before the candidate list ran out
};

UnitSearch search_unit(const MhaInstance& m, const std::vector<Key>& window, std::size_t max_candidates,
                       const std::function<bool(const Vec&)>& accept);

inline constexpr std::size_t kDefaultMaxCandidates = 4096;

// a > (b > x) = ab > x; a > (xy) = sum (a1 > x)(a2 > y) with the covering
// unit found by search; every sample is e > x for some candidate e.
Report check_module_algebra_laws(const ModuleAlgebra& ma, const std::vector<Key>& a_window,
                                 const std::vector<Vec>& samples,
                                 std::size_t max_candidates = kDefaultMaxCandidates);

} // namespace mha

#endif // MHA_MODULE_HPP
