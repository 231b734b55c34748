#include <doctest.h>

#include "mha/errors.hpp"
#include "mha/mha.hpp"

#include <chrono>

using namespace mha;

namespace {

Vec pb(const Key& a, const Key& b) { return Vec::basis(Key::pair(a, b)); }

// Oracle: Delta(delta_r)(p,q) = [pq = r] as a function on G x G, multiplied
// by 1 (x) delta_q, i.e. evaluated pointwise over the whole group.
Vec oracle_delta_r(const Group& g, const Key& r, const Key& q) {
  Vec out;
  for (const Key& x : g.elements())
    for (const Key& y : g.elements())
      if (g.mul(x, y) == r && y == q) out.add_term(Key::pair(x, y), 1);
  return out;
}

Vec oracle_delta_l(const Group& g, const Key& p, const Key& r) {
  Vec out;
  for (const Key& x : g.elements())
    for (const Key& y : g.elements())
      if (x == p && g.mul(x, y) == r) out.add_term(Key::pair(x, y), 1);
  return out;
}

// Oracle: sum_{uv=p} delta_u (x) S(delta_v) delta_q by brute force.
Vec oracle_cov_iS(const Group& g, const Key& p, const Key& q) {
  Vec out;
  for (const Key& u : g.elements())
    for (const Key& v : g.elements())
      if (g.mul(u, v) == p && g.inv(v) == q) out.add_term(Key::pair(u, q), 1);
  return out;
}

Vec oracle_cov_Sinv(const Group& g, const Key& p, const Key& q) {
  Vec out;
  for (const Key& u : g.elements())
    for (const Key& v : g.elements())
      if (g.mul(u, v) == p && g.inv(u) == q) out.add_term(Key::pair(v, q), 1);
  return out;
}

} // namespace

TEST_CASE("A_G closed forms agree with the function-on-G x G oracle") {
  for (auto g : {cyclic_group(2), cyclic_group(4), symmetric_group(3)}) {
    auto m = function_algebra_mha(g);
    for (const Key& a : g->elements())
      for (const Key& b : g->elements()) {
        CHECK(m->delta_r(a, b) == oracle_delta_r(*g, a, b));
        CHECK(m->delta_l(a, b) == oracle_delta_l(*g, a, b));
        CHECK(m->cov_iS(a, b) == oracle_cov_iS(*g, a, b));
        CHECK(m->cov_Sinv(a, b) == oracle_cov_Sinv(*g, a, b));
      }
  }
}

TEST_CASE("A_G worked values") {
  auto c4 = cyclic_group(4);
  auto m = function_algebra_mha(c4);
  Key e = Key::atom(0), g = Key::atom(1), g3 = Key::atom(3);
  CHECK(m->delta_r(g, g) == pb(e, g));
  CHECK(m->counit(e) == 1);
  CHECK(m->counit(g) == 0);
  CHECK(m->antipode(g) == Vec::basis(g3));
  // iS pattern: delta_{pq} (x) delta_q.
  auto s3 = symmetric_group(3);
  auto ms3 = function_algebra_mha(s3);
  Key p = s3->parse_token("(12)"), q = s3->parse_token("(123)");
  CHECK(sweedler_cov(*ms3, Sweedler::iS, Vec::basis(p), Vec::basis(q)) == pb(s3->mul(p, q), q));
  // Sinv pattern: delta_{qp} (x) delta_q (differs from delta_{q^-1 p} in S3).
  CHECK(sweedler_cov(*ms3, Sweedler::Sinv, Vec::basis(p), Vec::basis(q)) == pb(s3->mul(q, p), q));
  CHECK(s3->mul(q, p) != s3->mul(s3->inv(q), p));
  CHECK(sweedler_cov(*ms3, Sweedler::plain_r, Vec::basis(p), Vec::basis(q)) == ms3->delta_r(p, q));
  CHECK(sweedler_cov(*ms3, Sweedler::plain_l, Vec::basis(p), Vec::basis(q)) == ms3->delta_l(p, q));
}

TEST_CASE("kG worked values") {
  auto c2 = cyclic_group(2);
  auto m = group_algebra_mha(c2);
  Key e = Key::atom(0), t = Key::atom(1);
  CHECK(m->delta_r(t, e) == pb(t, t));
  CHECK(m->t1_inv(t, e) == pb(t, t));
  CHECK(m->T1(m->t1_inv(t, e)) == pb(t, e));
  CHECK(m->counit(t) == 1);
  auto s3 = symmetric_group(3);
  auto ms3 = group_algebra_mha(s3);
  for (const Key& x : s3->elements())
    for (const Key& b : s3->elements()) {
      // Oracle: Delta(x)(1 (x) b) = (x (x) x)(1 (x) b).
      CHECK(ms3->delta_r(x, b) == pb(x, s3->mul(x, b)));
      CHECK(sweedler_cov(*ms3, Sweedler::iS, Vec::basis(x), Vec::basis(b)) == pb(x, s3->mul(s3->inv(x), b)));
    }
  CHECK_FALSE(ms3->right_finite());
}

TEST_CASE("axiom suites pass exhaustively and fast") {
  auto start = std::chrono::steady_clock::now();
  std::vector<MhaPtr> instances{function_algebra_mha(cyclic_group(2)), function_algebra_mha(cyclic_group(4)),
                                function_algebra_mha(symmetric_group(3)), group_algebra_mha(cyclic_group(2)),
                                group_algebra_mha(symmetric_group(3))};
  for (const auto& m : instances) {
    CAPTURE(m->name);
    auto w = mha_window(*m, 0);
    auto r = mha_axiom_suite(*m, w);
    CHECK(r.passed());
    CHECK(check_t_inverses(*m, w).passed());
    if (m->group->order() == 6) CHECK(r.find("coassociativity/(a⊗1⊗1)(Δ⊗ι)(Δ(b)(1⊗c)) = (ι⊗Δ)((a⊗1)Δ(b))(1⊗1⊗c)")->tested == 216);
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 10.0);
}

TEST_CASE("A_Z on a window") {
  auto m = function_algebra_mha(integer_group());
  auto w = mha_window(*m, 3);
  CHECK(w.size() == 7);
  CHECK(mha_axiom_suite(*m, w).passed());
}

TEST_CASE("mutations are caught") {
  for (auto base : {function_algebra_mha(cyclic_group(4)), group_algebra_mha(cyclic_group(2)),
                    group_algebra_mha(symmetric_group(3))}) {
    CAPTURE(base->name);
    auto w = mha_window(*base, 0);
    CHECK(check_coassociativity(*mutate(*base, MhaMutation::delta), w).failed());
    CHECK(check_counit(*mutate(*base, MhaMutation::counit), w).failed());
    CHECK(check_regular(*mutate(*base, MhaMutation::t2_inv), w).failed());
  }
  // S = id: A_C4 fails at p != e; kS3 fails at transposition-free elements.
  auto ac4 = function_algebra_mha(cyclic_group(4));
  auto r = check_antipode(*mutate(*ac4, MhaMutation::antipode), mha_window(*ac4, 0));
  CHECK(r.failed());
  CHECK(check_antipode(*mutate(*group_algebra_mha(symmetric_group(3)), MhaMutation::antipode),
                       mha_window(*group_algebra_mha(symmetric_group(3)), 0))
            .failed());
}

TEST_CASE("windowed inverse fallback agrees with the closed forms") {
  for (auto m : {function_algebra_mha(cyclic_group(4)), group_algebra_mha(cyclic_group(2)),
                 group_algebra_mha(symmetric_group(3))}) {
    auto w = mha_window(*m, 0);
    auto gen = with_windowed_inverses(*m, w);
    for (const Key& a : w)
      for (const Key& b : w) {
        CHECK(gen->t1_inv(a, b) == m->t1_inv(a, b));
        CHECK(gen->t2_inv(a, b) == m->t2_inv(a, b));
        CHECK(gen->rf_inv(a, b) == m->rf_inv(a, b));
        CHECK(gen->lf_inv(a, b) == m->lf_inv(a, b));
      }
  }
}

TEST_CASE("non-regular instances refuse the S^-1 pattern") {
  auto base = function_algebra_mha(cyclic_group(2));
  auto nr = std::make_shared<MhaInstance>(*base);
  nr->antipode_inv = nullptr;
  nr->cov_Sinv = nullptr;
  CHECK_FALSE(nr->regular());
  CHECK_THROWS_AS(sweedler_cov(*nr, Sweedler::Sinv, Vec::basis(Key::atom(0)), Vec::basis(Key::atom(1))),
                  CapabilityError);
  CHECK(check_regular(*nr, mha_window(*nr, 0)).failed());
}

TEST_CASE("counit and antipode homomorphism properties, Hopf cross-check on kG") {
  auto s3 = symmetric_group(3);
  auto m = group_algebra_mha(s3);
  // Classical Hopf axioms on group-likes: Delta(g) = g (x) g, unital.
  for (const Key& g : s3->elements()) {
    CHECK(m->T1(Vec::basis(g), m->algebra->identity()) == pb(g, g));
    CHECK(m->mul(m->antipode(g), Vec::basis(g)) == m->algebra->identity());
  }
  CHECK(check_structure_maps(*m, s3->elements()).passed());
  CHECK(check_structure_maps(*function_algebra_mha(s3), s3->elements()).passed());
}
