#include <doctest.h>

#include "mha/coaction.hpp"
#include "mha/errors.hpp"
#include "mha/linalg.hpp"

#include <random>

using namespace mha;

namespace {

struct Corner {
  GroupPtr g = symmetric_group(3);
  AlgebraPtr kg = group_ring(g);
  AlgebraPtr l = corner_algebra(kg, named_idempotent(*kg, "not_sign"), "not_sign");
  PartialCoactionData c = trivial_coaction(l, g);
  const std::vector<Key>& aw() const { return g->elements(); }
};

Key find_token(const Group& g, const std::string& tok) { return g.parse_token(tok); }

} // namespace

TEST_CASE("trivial coaction on the corner of kS3") {
  Corner ex;
  auto r = check_partial_coaction(ex.c, ex.l->basis(), ex.aw());
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(check_symmetric_coaction(ex.c, ex.l->basis(), ex.aw()).passed());
  auto im = check_coaction_images(ex.c, ex.l->basis(), ex.aw());
  INFO(im.to_text());
  CHECK(im.passed());
  std::vector<Vec> tw;
  for (const Vec& x : ex.l->basis())
    for (const Key& a : ex.aw()) tw.push_back(tensor(x, Vec::basis(a)));
  CHECK_FALSE(is_global(ex.c, tw));
  Key one = ex.g->identity();
  for (const Vec& x : ex.l->basis())
    for (const Key& a : ex.aw()) {
      Vec want = a == one ? tensor(x, Vec::basis(one)) : Vec();
      CHECK(ex.c.rho_r(x, a) == want);
      CHECK(ex.c.E.left(tensor(x, Vec::basis(a))) == want);
    }
}

TEST_CASE("global coactions") {
  auto inv = inversion_coaction();
  auto c2 = inv.acting->group->elements();
  CHECK(check_partial_coaction(inv, inv.target->basis(), c2).passed());
  CHECK(check_symmetric_coaction(inv, inv.target->basis(), c2).passed());
  CHECK(is_global(inv, inv.E.window));
  auto gl = group_like_coaction(symmetric_group(3));
  auto s3 = gl.acting->group->elements();
  auto r = check_partial_coaction(gl, gl.target->basis(), s3);
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(is_global(gl, gl.E.window));
}

TEST_CASE("coaction dual to the sign-twisted partial action") {
  auto c = coaction_from_group_action(sign_twist_corner());
  const auto& aw = c.acting->group->elements();
  auto r = check_partial_coaction(c, c.target->basis(), aw);
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(check_symmetric_coaction(c, c.target->basis(), aw).passed());
  CHECK(check_coaction_images(c, c.target->basis(), aw).passed());
  CHECK_FALSE(is_global(c, c.E.window));
}

TEST_CASE("a non-idempotent E is caught") {
  Corner ex;
  auto bad = ex.c;
  bad.E = scale(ex.c.E, make_scalar(2));
  auto r = check_partial_coaction(bad, ex.l->basis(), ex.aw());
  CHECK(r.failed());
  const CheckItem* e2 = r.find("E² = E");
  REQUIRE(e2);
  CHECK(e2->outcome == Outcome::fail);
  CHECK_FALSE(e2->witness.empty());
}

TEST_CASE("quasi counitary idempotents") {
  auto g = symmetric_group(3);
  auto ag = function_algebra_mha(g);
  const auto& aw = g->elements();
  for (const Key& k : aw) {
    auto r = check_quasi_counitary(*ag, Vec::basis(k), aw);
    if (k == g->identity()) {
      CHECK(r.passed());
    } else {
      CHECK(r.find("Δ(e)(e⊗1) = e⊗e")->outcome == Outcome::fail);
      CHECK(r.find("ε(e) = 1")->outcome == Outcome::fail);
    }
  }
  auto kg = group_algebra_mha(g);
  CHECK(check_quasi_counitary(*kg, Vec::basis(g->identity()), aw).passed());
  // (1 ± t)/2 in kC2: both central idempotents, only the + sign has eps = 1.
  auto c2 = cyclic_group(2);
  auto kc2 = group_algebra_mha(c2);
  Key t = c2->elements()[1];
  Vec plus = make_scalar(1, 2) * (Vec::basis(c2->identity()) + Vec::basis(t));
  Vec minus = make_scalar(1, 2) * (Vec::basis(c2->identity()) - Vec::basis(t));
  CHECK(check_quasi_counitary(*kc2, plus, c2->elements()).passed());
  auto r = check_quasi_counitary(*kc2, minus, c2->elements());
  CHECK(r.item_passed("e central"));
  CHECK(r.item_passed("e² = e"));
  CHECK(r.find("Δ(e)(e⊗1) = e⊗e")->outcome == Outcome::fail);
  CHECK(r.find("ε(e) = 1")->outcome == Outcome::fail);
}

TEST_CASE("dual action values") {
  Corner ex;
  Key one = ex.g->identity();
  for (const Key& a : ex.aw()) {
    DualFunctional w = Vec::basis(a, 3) + Vec::basis(find_token(*ex.g, "(12)"), 5);
    for (const Vec& x : ex.l->basis()) {
      Scalar at_one = w.coeff(one);
      CHECK(dual_act(ex.c, w, x) == at_one * x);
    }
  }
  auto amb = tensor_coaction(ex.l, ex.c.acting);
  for (const Key& u : ex.aw())
    for (const Vec& x : ex.l->basis()) {
      Vec v = tensor(x, Vec::basis(one));
      CHECK(dual_act(amb, Vec::basis(u), v) == tensor(x, Vec::basis(ex.g->inv(u))));
    }
  auto gl = group_like_coaction(ex.g);
  DualFunctional counit;
  for (const Key& k : ex.aw()) counit.add_term(k, 1);
  for (const Vec& x : gl.target->basis()) CHECK(dual_act(gl, counit, x) == x);
}

TEST_CASE("dual action is a module action of the restricted dual") {
  Corner ex;
  auto amb = tensor_coaction(ex.l, ex.c.acting);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_functional = [&] {
    DualFunctional w;
    for (const Key& k : ex.aw()) w.add_term(k, coef(rng));
    return w;
  };
  auto qb = amb.target->basis();
  for (int s = 0; s < 12; ++s) {
    DualFunctional w1 = random_functional();
    DualFunctional w2 = random_functional();
    DualFunctional prod = dual_product(*ex.c.acting, w1, w2, ex.aw());
    // Convolution on S3: (w1 w2)(g) = sum_{uv = g} w1(u) w2(v).
    DualFunctional oracle;
    for (const Key& u : ex.aw())
      for (const Key& v : ex.aw()) oracle.add_term(ex.g->mul(u, v), w1.coeff(u) * w2.coeff(v));
    CHECK(prod == oracle);
    const Vec& v = qb[static_cast<std::size_t>(s) % qb.size()];
    CHECK(dual_act(amb, prod, v) == dual_act(amb, w1, dual_act(amb, w2, v)));
  }
}

TEST_CASE("generated subcomodules") {
  Corner ex;
  auto amb = tensor_coaction(ex.l, ex.c.acting);
  Key one = ex.g->identity();
  Vec x = ex.l->basis()[1];
  auto gen = generated_subcomodule(amb, {tensor(x, Vec::basis(one))}, ex.aw());
  INFO(gen.report.to_text());
  CHECK(gen.report.passed());
  // x^k (x) delta_u for every u and k >= 1.
  Subspace want;
  Vec xk = x;
  for (int k = 0; k < 8; ++k) {
    for (const Key& u : ex.aw()) want.insert(tensor(xk, Vec::basis(u)));
    xk = ex.l->multiply(xk, x);
  }
  CHECK(gen.space.equals(want));

  auto zero = generated_subcomodule(amb, {Vec()}, ex.aw());
  CHECK(zero.space.dim() == 0);

  auto kg = group_algebra_mha(ex.g);
  auto kamb = tensor_coaction(group_ring(ex.g), kg);
  Key t = find_token(*ex.g, "(12)");
  auto orbit = generated_subcomodule(kamb, {tensor(Vec::basis(t), Vec::basis(t))}, ex.aw());
  CHECK(orbit.report.passed());
  CHECK(orbit.space.equals(Subspace({tensor(Vec::basis(one), Vec::basis(one)), tensor(Vec::basis(t), Vec::basis(t))})));

  auto small = generated_subcomodule(amb, {tensor(x, Vec::basis(one))}, ex.aw(), 3);
  CHECK_FALSE(small.complete);
  CHECK(small.report.outcome() == Outcome::inconclusive);
}

TEST_CASE("globalization of the trivial coaction") {
  Corner ex;
  Key one = ex.g->identity();
  Vec d1 = Vec::basis(one);
  auto g = coaction_globalize(ex.c, d1, ex.aw());
  for (const Vec& x : ex.l->basis()) {
    CHECK(g.theta(x) == tensor(x, d1));
    CHECK(g.pi(g.theta(x)) == g.theta(x));
  }
  for (const Vec& v : g.q_basis) {
    Vec keep;
    for (const auto& [k, c] : v)
      if (k.split_pair().second == one) keep.add_term(k, c);
    CHECK(g.pi(v) == keep);
  }
  auto r = check_coglobalization(g);
  INFO(r.to_text());
  CHECK(r.passed());
  CHECK(r.item_passed("E-projection: (π⊗ι)(ρ(π(y))(1⊗e)) = Φ(E)(π⊗ι)(ρ(y)(1⊗e))"));
  CHECK(r.item_passed("unital: π(v) = θ(1_L)v"));
  CHECK(g.q_basis.size() == ex.l->dim() * ex.aw().size());

  auto idp = check_coglobalization(mutate(g, CoglobMutation::identity_projection));
  CHECK(idp.find("E-projection: (π⊗ι)(ρ(π(y))(1⊗e)) = Φ(E)(π⊗ι)(ρ(y)(1⊗e))")->outcome == Outcome::fail);
  CHECK(idp.find("π(Q) = θ(L)")->outcome == Outcome::fail);
}

TEST_CASE("globalization of the sign-twisted coaction") {
  auto c = coaction_from_group_action(sign_twist_corner());
  const auto& aw = c.acting->group->elements();
  auto g = coaction_globalize(c, Vec::basis(c.acting->group->identity()), aw);
  auto r = check_coglobalization(g);
  INFO(r.to_text());
  CHECK(r.passed());
  auto idp = check_coglobalization(mutate(g, CoglobMutation::identity_projection));
  CHECK(idp.failed());
}

TEST_CASE("globalization of global coactions") {
  auto gl = group_like_coaction(symmetric_group(3));
  auto g = coaction_globalize(gl, gl.target->identity(), gl.acting->group->elements());
  CHECK(g.q_basis.size() == gl.target->dim());
  auto r = check_coglobalization(g);
  INFO(r.to_text());
  CHECK(r.passed());
  auto big = check_coglobalization(mutate(g, CoglobMutation::enlarged_envelope));
  CHECK(big.find("(v) Q generated by θ(L)")->outcome == Outcome::fail);

  auto inv = inversion_coaction();
  auto gi = coaction_globalize(inv, Vec::basis(inv.acting->group->identity()), inv.acting->group->elements());
  CHECK(check_coglobalization(gi).passed());
}

TEST_CASE("coaction_globalize preconditions") {
  Corner ex;
  Key t = find_token(*ex.g, "(12)");
  CHECK_THROWS_AS(coaction_globalize(ex.c, Vec::basis(t), ex.aw()), RejectedInput);
  auto bad = ex.c;
  bad.E = scale(ex.c.E, make_scalar(2));
  CHECK_THROWS_AS(coaction_globalize(bad, Vec::basis(ex.g->identity()), ex.aw()), RejectedInput);
  CHECK_THROWS_AS(coaction_globalize(ex.c, Vec::basis(ex.g->identity()), ex.aw(), 4), InconclusiveError);
}
