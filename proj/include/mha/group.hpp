#ifndef MHA_GROUP_HPP
#define MHA_GROUP_HPP

#include "mha/key.hpp"
#include "mha/report.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mha {

// A computable group. Elements are keys; `token` gives the canonical printed
// form used in reports and scenario files.
class Group {
 public:
  struct Spec {
    std::string name;
    Key identity;
    std::function<Key(const Key&, const Key&)> mul;
    std::function<Key(const Key&)> inv;
    std::function<std::string(const Key&)> token;
    std::optional<std::vector<Key>> elements;               // finite groups
    std::function<std::vector<Key>(std::size_t)> window_fn;  // infinite groups
  };

  explicit Group(Spec spec);

  const std::string& name() const { return spec_.name; }
  const Key& identity() const { return spec_.identity; }
  Key mul(const Key& a, const Key& b) const { return spec_.mul(a, b); }
  Key inv(const Key& a) const { return spec_.inv(a); }
  std::string token(const Key& a) const { return spec_.token(a); }
  bool finite() const { return spec_.elements.has_value(); }
  std::size_t order() const;

  // Finite: the full enumeration (sorted by key). Infinite: throws.
  const std::vector<Key>& elements() const;
  // Finite: all elements, radius ignored. Infinite: a symmetric window.
  std::vector<Key> window(std::size_t radius) const;

  // Token lookup for scenario parsing; throws StructuralError if unknown.
  Key parse_token(std::string_view tok, std::size_t radius = 16) const;

 private:
  Spec spec_;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);
GroupPtr integer_group();

// "cyclic:n", "symmetric:n", "integers".
GroupPtr group_from_name(std::string_view name);

// Associativity on all window triples, identity and inverse laws.
// Throws StructuralError on token collisions, RejectedInput if the window is
// not closed under inverses.
Report group_check(const Group& g, const std::vector<Key>& window);

// Named subgroups: "trivial", "whole", "alternating" (symmetric groups),
// "sub:d" (cyclic groups: generated by g^d). Sorted, verified closed.
std::vector<Key> named_subgroup(const Group& g, std::string_view name);

bool is_subgroup(const Group& g, const std::vector<Key>& h);
bool is_normal(const Group& g, const std::vector<Key>& h);

// Sign of a permutation element of symmetric_group.
int permutation_sign(const Key& perm);

} // namespace mha

#endif // MHA_GROUP_HPP
