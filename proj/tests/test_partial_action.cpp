#include <doctest.h>

#include "mha/errors.hpp"
#include "mha/partial_action.hpp"

using namespace mha;

namespace {

struct S3Setup {
  GroupPtr g = symmetric_group(3);
  std::vector<Key> a3 = named_subgroup(*g, "alternating");
  Key tok(const char* t) const { return g->parse_token(t); }
};

// Oracle: f_N (delta_p > x) computed in kG directly.
Vec oracle_fN(const Group& g, const std::vector<Key>& n, const Key& p, const Vec& x) {
  AlgebraPtr kg = group_ring(std::make_shared<Group>(g));
  Vec fn;
  for (const Key& h : n) fn.add_term(h, make_scalar(1, static_cast<long>(n.size())));
  return kg->multiply(fn, Vec::basis(p, x.coeff(p)));
}

Vec fN_times(const Group& g, const std::vector<Key>& n, const Key& h) {
  Vec out;
  for (const Key& m : n) out.add_term(g.mul(m, h), make_scalar(1, static_cast<long>(n.size())));
  return out;
}

} // namespace

TEST_CASE("example_fN closed form on S3, A3") {
  S3Setup s;
  auto p = example_fN(s.g, s.a3, "A3");
  Vec lhs = p.act(s.tok("(12)"), fN_times(*s.g, s.a3, s.tok("(13)")));
  CHECK(lhs == make_scalar(1, 3) * fN_times(*s.g, s.a3, s.tok("(12)")));
  CHECK(p.act(s.tok("(12)"), fN_times(*s.g, s.a3, s.tok("(123)"))).is_zero());
  CHECK(p.target->dim() == 2);
  for (const Key& q : s.g->elements())
    for (const Key& h : s.g->elements()) {
      Vec x = fN_times(*s.g, s.a3, h);
      CHECK(p.act(q, x) == oracle_fN(*s.g, s.a3, q, x));
    }
}

TEST_CASE("example_fN rejects non-normal and non-closed N") {
  S3Setup s;
  std::vector<Key> h2{s.g->identity(), s.tok("(12)")};
  CHECK_THROWS_AS(example_fN(s.g, h2, "H"), StructuralError);
  std::vector<Key> bad{s.g->identity(), s.tok("(123)")};
  CHECK_THROWS_AS(example_fN(s.g, bad, "B"), StructuralError);
}

TEST_CASE("trivial N degenerates to the global action") {
  S3Setup s;
  auto p = example_fN(s.g, named_subgroup(*s.g, "trivial"), "1");
  auto glob = functions_on_group_ring(s.g);
  for (const Key& q : s.g->elements())
    for (const Key& h : s.g->elements()) CHECK(p.act(q, Vec::basis(h)) == glob.act(q, Vec::basis(h)));
  CHECK(is_global(p, s.g->elements(), p.target->basis()));
}

TEST_CASE("items (i)-(vii) on the f_N example, S3 and A3") {
  S3Setup s;
  auto p = example_fN(s.g, s.a3, "A3");
  const auto& aw = s.g->elements();
  auto r = check_partial_action(p, aw, p.target->basis());
  INFO(r.to_text());
  CHECK(r.passed());
  auto sym = check_symmetric(p, aw, p.target->basis());
  INFO(sym.to_text());
  CHECK(sym.passed());
  CHECK_FALSE(is_global(p, aw, p.target->basis()));
}

TEST_CASE("global action of A_G on kG") {
  auto g = symmetric_group(3);
  auto p = global_as_partial(functions_on_group_ring(g));
  auto xw = p.target->basis();
  CHECK(check_partial_action(p, g->elements(), xw).passed());
  CHECK(check_symmetric(p, g->elements(), xw).passed());
  CHECK(is_global(p, g->elements(), xw));
}

TEST_CASE("globality matches the module-algebra law") {
  S3Setup s;
  const auto& aw = s.g->elements();
  auto check = [&](const PartialActionData& p) {
    ModuleAlgebra ma{p.name, p.acting, p.target, p.act};
    bool law = check_module_algebra_laws(ma, aw, p.target->basis()).passed();
    CHECK(law == is_global(p, aw, p.target->basis()));
  };
  check(example_fN(s.g, s.a3, "A3"));
  check(example_fN(s.g, named_subgroup(*s.g, "trivial"), "1"));
  check(example_fN(s.g, named_subgroup(*s.g, "whole"), "S3"));
  check(global_as_partial(functions_on_group_ring(s.g)));
}

TEST_CASE("mutations are caught") {
  S3Setup s;
  auto p = example_fN(s.g, s.a3, "A3");
  const auto& aw = s.g->elements();
  auto xw = p.target->basis();
  auto zp = check_partial_action(mutate(p, PartialMutation::zero_pair, aw, xw), aw, xw);
  CHECK(zp.failed());
  CHECK(zp.find("(i) a·(x(b·y)) = (a₁·x)(a₂b·y)")->outcome == Outcome::fail);
  CHECK_FALSE(zp.find("(i) a·(x(b·y)) = (a₁·x)(a₂b·y)")->witness.empty());
  auto er = check_symmetric(mutate(p, PartialMutation::e_right, aw, xw), aw, xw);
  CHECK(er.find("(vi) (b·x)𝔢(a) = a₂·(S⁻¹(a₁)b·x)")->outcome == Outcome::fail);
}

TEST_CASE("symmetric check needs a regular instance") {
  auto g = cyclic_group(3);
  auto p = global_as_partial(functions_on_group_ring(g));
  auto m = std::make_shared<MhaInstance>(*p.acting);
  m->antipode_inv = nullptr;
  p.acting = m;
  CHECK_THROWS_AS(check_symmetric(p, g->elements(), p.target->basis()), CapabilityError);
}

TEST_CASE("lambda example") {
  auto g = symmetric_group(3);
  auto n = std::vector<Key>{g->identity(), g->parse_token("(12)")};
  auto p = example_lambda(g, n, group_ring(g), "H");
  auto xw = p.target->basis();
  CHECK(check_partial_action(p, g->elements(), xw).passed());
  CHECK(check_symmetric(p, g->elements(), xw).passed());
  auto q = check_quasi_unitary(p, xw, g->elements());
  REQUIRE(q.witness);
  Vec expect;
  for (const Key& h : n) expect.add_term(h, 1);
  CHECK(*q.witness == expect);
}

TEST_CASE("A-projections") {
  S3Setup s;
  auto glob = functions_on_group_ring(s.g);
  const auto& aw = s.g->elements();
  auto rw = glob.algebra->basis();
  auto kg = glob.algebra;
  auto fpi = idempotent_projection(glob, named_idempotent(*kg, "fN_alternating"), "f_N");
  CHECK(check_a_projection(fpi, aw, rw, false).passed());
  CHECK(check_a_projection(fpi, aw, rw, true).passed());
  CHECK(check_a_projection(identity_projection(glob), aw, rw, true).passed());

  Vec f = make_scalar(1, 2) * (Vec::basis(s.g->identity()) + Vec::basis(s.tok("(12)")));
  auto bad = idempotent_projection(glob, f, "(1+(12))/2");
  auto r = check_a_projection(bad, aw, rw, true);
  CHECK(r.failed());
  CHECK(r.first_failure() != nullptr);
  CHECK_FALSE(r.first_failure()->witness.empty());
  CHECK_THROWS_AS(induce_from_projection(bad, aw, rw), RejectedInput);
}

TEST_CASE("induced action from f_N equals the closed form") {
  S3Setup s;
  auto glob = functions_on_group_ring(s.g);
  const auto& aw = s.g->elements();
  auto fpi = idempotent_projection(glob, named_idempotent(*glob.algebra, "fN_alternating"), "f_N");
  auto ind = induce_from_projection(fpi, aw, glob.algebra->basis());
  auto ex = example_fN(s.g, s.a3, "A3");
  std::size_t pairs = 0;
  for (const Key& q : aw)
    for (const Vec& x : ex.target->basis()) {
      CHECK(ind.act(q, x) == ex.act(q, x));
      CHECK(ind.e_map(q).left(x) == ex.e_map(q).left(x));
      CHECK(ind.e_map(q).right(x) == ex.e_map(q).right(x));
      ++pairs;
    }
  CHECK(pairs == 12);
  CHECK(check_partial_action(ind, aw, ind.target->basis()).passed());
  CHECK(check_symmetric(ind, aw, ind.target->basis()).passed());
  auto q = check_quasi_unitary(ind, ind.target->basis(), aw);
  CHECK(q.witness.has_value());
}

TEST_CASE("identity projection recovers the global action") {
  auto g = cyclic_group(4);
  auto glob = functions_on_group_ring(g);
  auto ind = induce_from_projection(identity_projection(glob), g->elements(), glob.algebra->basis());
  CHECK(is_global(ind, g->elements(), ind.target->basis()));
}

TEST_CASE("theta(_delta_e) corner gives a global induced action") {
  auto g = cyclic_group(3);
  auto tc = theta_corner(g);
  const auto& aw = g->elements();
  auto pi = idempotent_projection(tc.global, tc.idempotent, "θ(_δ_e)");
  CHECK(pi.sub->unital());
  auto ind = induce_from_projection(pi, aw, tc.global.algebra->basis());
  auto xw = ind.target->basis();
  CHECK(check_partial_action(ind, aw, xw).passed());
  CHECK(check_symmetric(ind, aw, xw).passed());
  for (const Key& a : aw)
    for (const Vec& x : xw) {
      Scalar e = ind.acting->counit(a);
      CHECK(ind.e_map(a).left(x) == e * ind.target->multiply(tc.idempotent, x));
    }
  CHECK(is_global(ind, aw, xw));
}

TEST_CASE("quasi-unitary witness for the f_N example") {
  S3Setup s;
  auto p = example_fN(s.g, s.a3, "A3");
  const auto& aw = s.g->elements();
  auto q = check_quasi_unitary(p, p.target->basis(), aw);
  REQUIRE(q.witness);
  for (const Vec& x : p.target->basis()) {
    CHECK(p(*q.witness, x) == x);
    for (const Key& a : aw) CHECK(p(p.acting->mul(Vec::basis(a), *q.witness), x) == p.act(a, x));
  }
  // Only f_N itself: the sum over N suffices.
  auto qn = check_quasi_unitary(p, {p.target->identity()}, aw);
  REQUIRE(qn.witness);
  Vec expect;
  for (const Key& h : s.a3) expect.add_term(h, 1);
  CHECK(*qn.witness == expect);
  auto tight = check_quasi_unitary(p, p.target->basis(), aw, 3);
  CHECK(tight.report.outcome() == Outcome::inconclusive);
}
