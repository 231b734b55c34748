#include <doctest.h>

#include "mha/errors.hpp"
#include "mha/group.hpp"
#include "mha/linalg.hpp"
#include "mha/sparse.hpp"

#include <random>

using namespace mha;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 19) - 9;
  long den = static_cast<long>(rng() % 7) + 1;
  return make_scalar(num, den);
}

Vec random_vec(std::mt19937_64& rng, int keys = 5) {
  Vec v;
  for (int i = 0; i < 3; ++i) v.add_term(Key::atom(static_cast<std::int64_t>(rng() % keys)), random_scalar(rng));
  return v;
}

} // namespace

TEST_CASE("scalars are canonical and exact") {
  CHECK(make_scalar(2, 4) == make_scalar(1, 2));
  CHECK(make_scalar(2, 4).get_den() == 2);
  CHECK(parse_scalar("-5/10") == make_scalar(-1, 2));
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_scalar("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_scalar("abc"), StructuralError);
  CHECK_THROWS_AS(make_scalar(1, 0), StructuralError);
}

TEST_CASE("scalar field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (a != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("keys: tuple encoding round trips") {
  Key a{1, 2, 3}, b = Key::atom(-4);
  Key p = Key::pair(a, b);
  auto [x, y] = p.split_pair();
  CHECK(x == a);
  CHECK(y == b);
  Key t = Key::tuple({p, a, Key()});
  auto parts = t.parts();
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == p);
  CHECK(parts[2].empty());
  CHECK_THROWS_AS(Key::atom(5).parts(), StructuralError);
}

TEST_CASE("vectors never store zeros") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Vec x = random_vec(rng), y = random_vec(rng), z = random_vec(rng);
    Scalar s = random_scalar(rng), t = random_scalar(rng);
    CHECK(((x + y) + z) == (x + (y + z)));
    CHECK(s * (x + y) == s * x + s * y);
    CHECK((s + t) * x == s * x + t * x);
    Vec w = x - x;
    CHECK(w.is_zero());
    CHECK(w.normalized());
    CHECK((x + y).normalized());
    CHECK((Scalar(0) * x).is_zero());
  }
}

TEST_CASE("tensor") {
  Key p = Key::atom(1), q = Key::atom(2), r = Key::atom(3);
  CHECK(tensor(Vec(), Vec::basis(q)).is_zero());
  Vec t = tensor(Vec::basis(p), Vec::basis(q));
  CHECK(t == Vec::basis(Key::pair(p, q)));
  Vec x = Vec::basis(p, 2) + Vec::basis(r);
  Vec u = tensor(x, Vec::basis(q, 3));
  CHECK(u.size() == 2);
  CHECK(u.coeff(Key::pair(p, q)) == 6);
  CHECK(u.coeff(Key::pair(r, q)) == 3);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Vec a = random_vec(rng), a2 = random_vec(rng), b = random_vec(rng);
    CHECK(tensor(a + a2, b) == tensor(a, b) + tensor(a2, b));
    CHECK(tensor(b, a + a2) == tensor(b, a) + tensor(b, a2));
    CHECK(tensor(a, b).size() == a.size() * b.size());
  }
}

TEST_CASE("group_check") {
  auto c2 = cyclic_group(2);
  CHECK(group_check(*c2, c2->elements()).passed());
  auto s3 = symmetric_group(3);
  auto r = group_check(*s3, s3->elements());
  CHECK(r.passed());
  CHECK(r.find("associativity")->tested == 216);

  // t^-1 := e
  Group::Spec broken;
  broken.name = "broken";
  broken.identity = Key::atom(0);
  broken.mul = [](const Key& a, const Key& b) { return Key::atom((a.head() + b.head()) % 2); };
  broken.inv = [](const Key&) { return Key::atom(0); };
  broken.token = [](const Key& a) { return a.head() == 0 ? std::string("e") : std::string("t"); };
  broken.elements = std::vector<Key>{Key::atom(0), Key::atom(1)};
  Group bg(broken);
  // The window {e, t} is still closed under the broken inverse.
  auto br = group_check(bg, bg.elements());
  CHECK(br.failed());
  CHECK(br.find("inverse")->witness == "(t, e, t)");

  Group::Spec collide = broken;
  collide.inv = [](const Key& a) { return a; };
  collide.token = [](const Key&) { return std::string("x"); };
  Group cg(collide);
  CHECK_THROWS_AS(group_check(cg, cg.elements()), StructuralError);

  auto z = integer_group();
  CHECK(group_check(*z, z->window(3)).passed());
  CHECK_THROWS_AS(group_check(*z, {Key::atom(0), Key::atom(1)}), RejectedInput);
}

TEST_CASE("symmetric group conventions") {
  auto s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  CHECK(s3->token(s3->identity()) == "e");
  Key t12 = s3->parse_token("(12)"), t13 = s3->parse_token("(13)"), c123 = s3->parse_token("(123)");
  // (12)(13): 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1, i.e. 1->3->2->1 = (132).
  CHECK(s3->token(s3->mul(t12, t13)) == "(132)");
  CHECK(s3->token(s3->mul(t12, s3->inv(c123))) == "(13)");
  auto a3 = named_subgroup(*s3, "alternating");
  CHECK(a3.size() == 3);
  CHECK(is_normal(*s3, a3));
  CHECK_FALSE(is_normal(*s3, {s3->identity(), t12}));
  auto c4 = cyclic_group(4);
  CHECK(named_subgroup(*c4, "sub:2").size() == 2);
  CHECK_THROWS_AS(named_subgroup(*c4, "sub:3"), StructuralError);
}

TEST_CASE("row reduction: rank, null space, solve") {
  auto k = [](int i) { return Key::atom(i); };
  Vec v1 = Vec::basis(k(0)) + Vec::basis(k(1));
  Vec v2 = Vec::basis(k(1)) + Vec::basis(k(2));
  Vec v3 = v1 + v2;
  CHECK(rank_of({v1, v2, v3}) == 2);
  auto ns = null_space({v1, v2, v3});
  REQUIRE(ns.size() == 1);
  CHECK(combine(ns[0], {v1, v2, v3}).is_zero());
  auto sol = solve({v1, v2}, Vec::basis(k(0)) - Vec::basis(k(2)));
  REQUIRE(sol);
  CHECK(combine(*sol, {v1, v2}) == Vec::basis(k(0)) - Vec::basis(k(2)));
  CHECK_FALSE(solve({v1, v2}, Vec::basis(k(0))).has_value());

  Subspace a({v1, v2}), b({Vec::basis(k(0)), Vec::basis(k(2))});
  auto i = intersect(a, b);
  CHECK(i.dim() == 1);
  CHECK(i.contains(Vec::basis(k(0)) - Vec::basis(k(2))));

  // Oracle: random integer matrices, rank via Gram determinant free check:
  // every null-space vector really annihilates and rank + nullity = n.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vec> cols;
    for (int j = 0; j < 6; ++j) cols.push_back(random_vec(rng, 4));
    auto kern = null_space(cols);
    CHECK(rank_of(cols) + kern.size() == cols.size());
    for (const auto& v : kern) CHECK(combine(v, cols).is_zero());
  }
}

TEST_CASE("windowed inverse") {
  auto k = [](int i) { return Key::atom(i); };
  WindowedInverse inv({k(0), k(1)}, [&](const Key& x) {
    return x.head() == 0 ? Vec::basis(k(5)) + Vec::basis(k(6)) : Vec::basis(k(6));
  });
  CHECK(inv(Vec::basis(k(5))) == Vec::basis(k(0)) - Vec::basis(k(1)));
  CHECK_THROWS_AS(inv(Vec::basis(k(7))), NoSolutionError);
}
