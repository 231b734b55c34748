#ifndef MHA_ALGEBRA_HPP
#define MHA_ALGEBRA_HPP

#include "mha/group.hpp"
#include "mha/report.hpp"
#include "mha/sparse.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mha {

using ProductRule = std::function<Vec(const Key&, const Key&)>;
using LinearOp = std::function<Vec(const Vec&)>;

enum class AlgebraFamily { functions, group_ring, corner, structconsts, tensor, direct_sum, other };

// An associative algebra given by a product rule on basis keys. Finite
// dimensional algebras list a basis (vectors in key coordinates; corners use
// ambient keys). Infinite ones expose windows of basis keys instead.
class Algebra {
 public:
  struct Spec {
    std::string name;
    ProductRule rule;
    std::optional<Vec> identity;
    std::optional<std::vector<Vec>> basis;
    std::function<std::vector<Key>(std::size_t)> key_window;
    KeyFormatter format_key = default_key_format;
    AlgebraFamily family = AlgebraFamily::other;
    GroupPtr group;       // functions / group_ring families
    bool pointwise = false;  // basis keys are orthogonal idempotents
    bool commutative = false;
  };

  explicit Algebra(Spec spec);

  const std::string& name() const { return spec_.name; }
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec product_rule(const Key& a, const Key& b) const { return spec_.rule(a, b); }
  const ProductRule& rule() const { return spec_.rule; }

  bool unital() const { return spec_.identity.has_value(); }
  const Vec& identity() const;
  bool finite_dimensional() const { return spec_.basis.has_value(); }
  const std::vector<Vec>& basis() const;
  std::size_t dim() const { return basis().size(); }
  // Finite: the basis. Infinite: basis vectors of the key window.
  std::vector<Vec> window(std::size_t radius) const;

  std::string format(const Vec& v) const { return format_vec(v, spec_.format_key); }
  const KeyFormatter& key_formatter() const { return spec_.format_key; }
  AlgebraFamily family() const { return spec_.family; }
  const GroupPtr& group() const { return spec_.group; }
  bool pointwise() const { return spec_.pointwise; }
  bool commutative() const { return spec_.commutative; }
  const Spec& spec() const { return spec_; }

 private:
  Spec spec_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finitely supported functions G -> Q with pointwise product.
AlgebraPtr function_algebra(GroupPtr g);
// kG.
AlgebraPtr group_ring(GroupPtr g);
// fR for a central idempotent f; elements stay in ambient coordinates.
AlgebraPtr corner_algebra(AlgebraPtr ambient, const Vec& f, std::string_view fname);
// Basis e0..e{dim-1} with the given products; missing products are zero.
AlgebraPtr structure_constants(std::string name, std::size_t dim,
                               std::map<std::pair<std::size_t, std::size_t>, Vec> table,
                               std::optional<Vec> identity = std::nullopt);
AlgebraPtr zero_algebra(std::size_t dim);
AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b);
// A (+) B with keys tagged 0 and 1.
AlgebraPtr direct_sum(AlgebraPtr a, AlgebraPtr b, std::string name = {});
Vec inject(int component, const Vec& x);
Vec component(int which, const Vec& x);

// Idempotents addressable by name (see README): fN_<subgroup>, e_triv,
// e_sign, e_2, not_sign for group rings; ind_<subgroup>, delta_<token>
// for function algebras.
Vec named_idempotent(const Algebra& a, std::string_view name);

// "functions:<group>", "groupalg:<group>", "corner:<algebra>:<idempotent>",
// "structconsts:<dim>;<i>*<j>=<combo>;...[;unit=<combo>]".
AlgebraPtr algebra_from_name(std::string_view name);

// Linear combinations in structconsts syntax: "e0 + 1/2*e1 - e2", "0".
Vec parse_combo(std::string_view text);

Report check_associative(const Algebra& a, const std::vector<Vec>& window);
Report check_identity(const Algebra& a, const std::vector<Vec>& window);

// e with e x = x = x e for every listed x. Support-union for pointwise
// algebras, the identity for unital ones, exact solving otherwise.
Vec local_unit(const Algebra& a, const std::vector<Vec>& elems);

Report check_nondegenerate(const Algebra& a, const std::vector<Vec>& window);
Report check_s_unital_left(const Algebra& a, const std::vector<Vec>& window);

// A multiplier (U, V): U is the left action m*a, V the right action a*m.
struct Multiplier {
  LinearOp left;
  LinearOp right;
  std::vector<Vec> window;
};

Multiplier multiplier_from_element(AlgebraPtr a, const Vec& z, std::vector<Vec> window);
Multiplier identity_multiplier(std::vector<Vec> window);
Multiplier zero_multiplier(std::vector<Vec> window);
Multiplier scale(const Multiplier& m, const Scalar& c);
Multiplier add(const Multiplier& m1, const Multiplier& m2);
Report multiplier_check(const Algebra& a, const Multiplier& m, const std::vector<Vec>& window);
// (U,V)(U',V') = (U o U', V' o V). Throws StructuralError on window mismatch.
Multiplier multiplier_product(const Multiplier& m1, const Multiplier& m2);
bool multipliers_agree(const Multiplier& m1, const Multiplier& m2, const std::vector<Vec>& window);

} // namespace mha

#endif // MHA_ALGEBRA_HPP
