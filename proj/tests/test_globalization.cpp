#include <doctest.h>

#include "mha/convolution.hpp"
#include "mha/errors.hpp"
#include "mha/globalization.hpp"

using namespace mha;

namespace {

struct Example {
  GroupPtr g = symmetric_group(3);
  std::vector<Key> a3 = named_subgroup(*g, "alternating");
  PartialActionData p = example_fN(g, a3, "A3");
  const std::vector<Key>& aw() const { return g->elements(); }
};

} // namespace

TEST_CASE("phi_embed values and independence of the witness") {
  Example ex;
  HomSpace h(ex.p.acting, ex.p.target);
  Vec fn = ex.p.target->identity();
  Vec phi = phi_embed(ex.p, fn, ex.aw());
  for (const Key& q : ex.aw()) {
    Vec expect;
    if (std::binary_search(ex.a3.begin(), ex.a3.end(), q)) {
      AlgebraPtr kg = group_ring(ex.g);
      expect = make_scalar(1, 3) * kg->multiply(fn, Vec::basis(q));
    }
    CHECK(h.value(phi, q) == expect);
  }
  Vec all;
  for (const Key& q : ex.aw()) all.add_term(q, 1);
  for (const Vec& x : ex.p.target->basis()) CHECK(phi_embed(ex.p, x, ex.aw()) == phi_embed_with(ex.p, x, all));
  CHECK(phi_embed(ex.p, Vec(), ex.aw()).is_zero());
  const auto& lb = ex.p.target->basis();
  for (const Vec& x : lb)
    for (const Vec& y : lb)
      CHECK(phi_embed_with(ex.p, ex.p.target->multiply(x, y), all) ==
            h.conv(phi_embed_with(ex.p, x, all), phi_embed_with(ex.p, y, all)));
}

TEST_CASE("standard globalization of the f_N example") {
  Example ex;
  auto gl = globalize(ex.p, ex.aw());
  for (const Key& a : ex.aw())
    for (const Vec& x : ex.p.target->basis())
      CHECK(gl.theta(ex.p.act(a, x)) == gl.pi(gl.envelope.act(a, gl.theta(x))));
  auto env = check_enveloping(gl);
  INFO(env.to_text());
  CHECK(env.passed());
  CHECK(env.item_passed("(iii) θ(L) two-sided ideal of R"));
  auto mn = check_minimal(gl);
  INFO(mn.to_text());
  CHECK(mn.passed());
}

TEST_CASE("zero projection breaks item (iv)") {
  Example ex;
  auto bad = check_enveloping(with_zero_projection(globalize(ex.p, ex.aw())));
  CHECK(bad.failed());
  CHECK(bad.find("(iv) θ(a·x) = π(a▷θ(x))")->outcome == Outcome::fail);
}

TEST_CASE("globalizing a global action") {
  auto g = cyclic_group(3);
  auto p = global_as_partial(functions_on_group_ring(g));
  auto gl = globalize(p, g->elements());
  CHECK(gl.r_basis().size() == p.target->dim());
  for (const Vec& x : p.target->basis()) CHECK(gl.pi(gl.theta(x)) == gl.theta(x));
  CHECK(check_enveloping(gl).passed());
  CHECK(check_minimal(gl).passed());
}

TEST_CASE("globalize rejects a broken partial action") {
  Example ex;
  auto broken = mutate(ex.p, PartialMutation::zero_pair, ex.aw(), ex.p.target->basis());
  CHECK_THROWS_AS(globalize(broken, ex.aw()), RejectedInput);
}

TEST_CASE("junk summand: not minimal, kernel in the comparison") {
  Example ex;
  auto gl = globalize(ex.p, ex.aw());
  auto junk = junk_envelope(gl, junk_module(ex.p.acting, 1));
  auto mn = check_minimal(junk);
  CHECK(mn.failed());
  CHECK_FALSE(mn.first_failure()->witness.empty());
  auto env = check_enveloping(junk);
  CHECK(env.find("(v) R = A▷θ(L)")->outcome == Outcome::fail);
  auto cmp = compare_envelopes(junk, gl);
  CHECK_FALSE(cmp.isomorphism);
  REQUIRE(cmp.kernel_witness);
  CHECK_FALSE(cmp.kernel_witness->is_zero());
  CHECK(cmp.report.item_passed("Φ surjective"));
  CHECK(cmp.report.item_passed("Φ homomorphism of A-module algebras"));
}

TEST_CASE("minimal envelopes are matched by a bijective Phi") {
  Example ex;
  auto gl = globalize(ex.p, ex.aw());
  auto self = compare_envelopes(gl, gl);
  CHECK(self.isomorphism);
  for (const auto& [v, w] : self.table) CHECK(v == w);
  auto moved = transport(gl);
  CHECK(check_enveloping(moved).passed());
  CHECK(check_minimal(moved).passed());
  auto cmp = compare_envelopes(gl, moved);
  INFO(cmp.report.to_text());
  CHECK(cmp.isomorphism);
  auto back = compare_envelopes(moved, gl);
  CHECK(back.isomorphism);
  bool differs = false;
  for (const auto& [v, w] : cmp.table) differs = differs || v != w;
  CHECK(differs);
}
