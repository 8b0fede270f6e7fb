#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "perm_group.hpp"
#include "shiftbox/oracle.hpp"

using namespace shiftbox;

namespace {
FiniteGroup group_of(const char* text) {
  return materialize(parse_presentation(text).presentation);
}
}  // namespace

TEST_CASE("materialized orders match the permutation oracle", "[oracle]") {
  CHECK(group_of(fixtures::s3).order() == permtest::s3().order());
  CHECK(group_of(fixtures::k4).order() == permtest::k4().order());
  CHECK(group_of(fixtures::c2c2c2).order() == permtest::c2c2c2().order());
  CHECK(group_of(fixtures::c3c3).order() == permtest::c3c3().order());
  CHECK(group_of(fixtures::c6).order() == 6);
  CHECK(group_of("generators: c\nrelators: ccccc\nsubgroup:\n").order() == 5);
}

TEST_CASE("materialize agrees with the trivial-subgroup enumeration", "[oracle]") {
  for (const char* text : {fixtures::s3, fixtures::k4, fixtures::c3c3}) {
    auto parsed = parse_presentation(text);
    FiniteGroup g = materialize(parsed.presentation);
    CHECK(g.order() == todd_coxeter(parsed.presentation, SubgroupSpec{}).num_cosets());
  }
}

TEST_CASE("group structure sanity", "[oracle][property]") {
  FiniteGroup g = group_of(fixtures::s3);
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, g.inverse(a)) == 0);
    for (int b = 0; b < g.order(); ++b)
      for (int c = 0; c < g.order(); ++c)
        CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
  // id_of_word is homomorphic
  fixtures::WordGen gen;
  for (int round = 0; round < 200; ++round) {
    Word u = gen.next(2), v = gen.next(2);
    CHECK(g.id_of_word(concat(u, v)) == g.mul(g.id_of_word(u), g.id_of_word(v)));
  }
}

TEST_CASE("generation checks", "[oracle]") {
  FiniteGroup g = group_of(fixtures::s3);
  const Alphabet a({"a", "b"});
  CHECK(generates(g, {fixtures::w("a", a), fixtures::w("b", a)}));
  CHECK(!generates(g, {fixtures::w("a", a)}));
  CHECK(!generates(g, {}));
  CHECK(generates(group_of("generators: c\nrelators: c\nsubgroup:\n"), {}));  // trivial group
}

TEST_CASE("primitive element sets", "[oracle]") {
  CHECK(primitive_elements(group_of(fixtures::k4), 2).size() == 3);
  CHECK(primitive_elements(group_of(fixtures::c6), 1).size() == 2);
  CHECK(primitive_elements(group_of(fixtures::c3c3), 2).size() == 8);
  // identity is never primitive in a nontrivial group
  CHECK(!primitive_elements(group_of(fixtures::k4), 2).count(0));
  // matches the permutation-side exhaustive search on S3
  FiniteGroup g = group_of(fixtures::s3);
  permtest::PermGroup p = permtest::s3();
  auto prim = primitive_elements(g, 2);
  auto prim_perms = p.primitive_elements(2);
  CHECK(prim.size() == prim_perms.size());
  for (int id : prim) CHECK(prim_perms.count(p.eval(g.rep(id))));
}

TEST_CASE("primitive sets are closed under conjugation", "[oracle][property]") {
  for (const char* text : {fixtures::s3, fixtures::k4, fixtures::c6}) {
    FiniteGroup g = group_of(text);
    int n = rank(g);
    auto prim = primitive_elements(g, n);
    for (int x : prim)
      for (int c = 0; c < g.order(); ++c)
        CHECK(prim.count(g.mul(g.inverse(c), g.mul(x, c))));
  }
}

TEST_CASE("subgroup lists are complete", "[oracle]") {
  CHECK(all_subgroups(group_of(fixtures::k4)).size() == 5);
  CHECK(all_subgroups(group_of(fixtures::s3)).size() == 6);
  CHECK(all_subgroups(group_of("generators: c\nrelators: ccccc\nsubgroup:\n")).size() == 2);
  CHECK(all_subgroups(group_of(fixtures::c2c2c2)).size() == 16);

  // every reported subgroup closes and its generator words evaluate inside it
  FiniteGroup g = group_of(fixtures::s3);
  for (const SubgroupInfo& info : all_subgroups(g)) {
    std::vector<int> ids;
    for (const Word& w : info.generator_words) ids.push_back(g.id_of_word(w));
    CHECK(subgroup_closure(g, ids) == info.elements);
    CHECK(g.order() % static_cast<int>(info.elements.size()) == 0);
  }
}

TEST_CASE("quaternion group has the right signature", "[oracle]") {
  // i^4 = 1, j^2 = i^2, j^-1 i j = i^-1: order 8, non-abelian, and a unique
  // involution, which pins the isomorphism type
  FiniteGroup g =
      group_of("generators: i j\nrelators: iiii jjII Jiji\nsubgroup:\n");
  REQUIRE(g.order() == 8);
  int involutions = 0;
  bool abelian = true;
  for (int a = 0; a < 8; ++a) {
    if (a != 0 && g.mul(a, a) == 0) ++involutions;
    for (int b = 0; b < 8; ++b)
      if (g.mul(a, b) != g.mul(b, a)) abelian = false;
  }
  CHECK(involutions == 1);
  CHECK(!abelian);
  // every subgroup of the quaternion group is normal
  for (const SubgroupInfo& info : all_subgroups(g))
    CHECK(is_normal_subgroup(g, info.elements));
  CHECK(all_subgroups(g).size() == 6);
}

TEST_CASE("rank by minimal search", "[oracle]") {
  CHECK(rank(group_of(fixtures::s3)) == 2);
  CHECK(rank(group_of(fixtures::k4)) == 2);
  CHECK(rank(group_of(fixtures::c2c2c2)) == 3);
  CHECK(rank(group_of(fixtures::c6)) == 1);
  CHECK(rank(group_of("generators: c\nrelators: c\nsubgroup:\n")) == 0);
}

TEST_CASE("normality check", "[oracle]") {
  FiniteGroup g = group_of(fixtures::s3);
  auto subs = all_subgroups(g);
  int normal_count = 0;
  for (const SubgroupInfo& info : subs)
    if (is_normal_subgroup(g, info.elements)) ++normal_count;
  CHECK(normal_count == 3);  // trivial, A3, S3
}

TEST_CASE("searches refuse unreasonable sizes", "[oracle]") {
  FiniteGroup g = group_of(fixtures::s3);
  try {
    primitive_elements(g, 4);  // sampled search without a seed
    FAIL("expected search_too_large");
  } catch (const error& e) {
    CHECK(e.code() == errc::search_too_large);
  }
  // with n = 4 > d(S3) even the identity sits inside generating tuples
  CHECK(primitive_elements(g, 4, 42u).size() == 6);
  try {
    primitive_elements(g, 5, 42u);
    FAIL("expected search_too_large");
  } catch (const error& e) {
    CHECK(e.code() == errc::search_too_large);
  }
}
