#include "doctest.h"
#include "fixtures.hpp"
#include "torsionlab/error.hpp"

using namespace torsionlab;
using namespace fixtures;

namespace {
  // Independent path counter: number of arrow sequences a -> b of length < L
  // in a relation-free quiver.
  std::size_t count_paths(CategoryPresentation const& p, std::size_t a, std::size_t b) {
    std::size_t              n = p.objects.size();
    std::vector<std::size_t> cur(n, 0);
    cur[a]            = 1;
    std::size_t total = cur[b];
    for (std::size_t len = 1; len < p.nilpotency_bound; ++len) {
      std::vector<std::size_t> next(n, 0);
      for (auto const& ar : p.arrows) {
        next[ar.target] += cur[ar.source];
      }
      cur = next;
      total += cur[b];
    }
    return total;
  }
}  // namespace

TEST_CASE("A2 hom dimensions") {
  auto c = a2();
  CHECK(c->hom_dim(0, 0) == 1);
  CHECK(c->hom_dim(1, 1) == 1);
  CHECK(c->hom_dim(0, 1) == 1);
  CHECK(c->hom_dim(1, 0) == 0);
  CHECK(c->total_hom_dim() == 3);
  CHECK(c->verify_laws().empty());
}

TEST_CASE("relation-free quivers match the path counter") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = gen_linear(n, Field::gf(3));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(g.category.hom_dim(a, b) == count_paths(g.presentation, a, b));
      }
    }
    CHECK(g.category.verify_laws().empty());
  }
}

TEST_CASE("single object without arrows") {
  auto c = one_object();
  CHECK(c->object_count() == 1);
  CHECK(c->hom_dim(0, 0) == 1);
}

TEST_CASE("loop quiver truncated at L = 3") {
  auto c = loop(3);
  CHECK(c->hom_dim(0, 0) == 3);
  CHECK(c->basis_label(0, 0, 0) == "id(1)");
  CHECK(c->basis_label(0, 0, 1) == "x");
  CHECK(c->basis_label(0, 0, 2) == "x*x");
  auto x2 = c->basis_morphism(0, 0, 2);
  CHECK(c->compose(x2, x2).is_zero());
  auto x = c->arrow_morphism(0);
  CHECK(c->compose(x, x) == x2);
  CHECK(c->verify_laws().empty());
}

TEST_CASE("composition with identities") {
  auto c = a2();
  auto a = c->arrow_morphism(0);
  CHECK(c->compose(a, c->identity(0)) == a);
  CHECK(c->compose(c->identity(1), a) == a);
  CHECK_THROWS_AS(c->compose(a, a), TargetMismatch);
}

TEST_CASE("opposite is an involution") {
  auto c  = a3();
  auto op = c->opposite();
  CHECK(op.hom_dim(2, 0) == c->hom_dim(0, 2));
  CHECK(op.verify_laws().empty());
  CHECK(op.opposite() == *c);
}

TEST_CASE("compile is deterministic") {
  auto g1 = gen_stable_tube(2, 3, Field::gf(3));
  auto g2 = gen_stable_tube(2, 3, Field::gf(3));
  CHECK(g1.category == g2.category);
}

TEST_CASE("relations that kill an identity are rejected") {
  CategoryPresentation p;
  p.field   = Field::gf(2);
  p.objects = {"X"};
  p.relations.push_back({{{Scalar::one(p.field), Path{0, 0, {}}}}});
  CHECK_THROWS_AS(compile_quiver(p), DegeneratePresentation);
}

TEST_CASE("malformed presentations") {
  CategoryPresentation p;
  p.field = Field::gf(2);
  CHECK_THROWS_AS(compile_quiver(p), DegeneratePresentation);
  p.objects = {"1", "2"};
  p.arrows  = {{"a", 0, 1}};
  p.relations.push_back({{{Scalar::one(p.field), Path{0, 1, {0, 0}}}}});
  CHECK_THROWS_AS(compile_quiver(p), DegeneratePresentation);
}

TEST_CASE("mesh window n=1, window=1 is discrete") {
  auto g = gen_mesh_window(1, 1, Field::gf(2));
  CHECK(g.category.object_count() == 1);
  CHECK(g.category.arrows().empty());
  CHECK(g.plain_path);
}

TEST_CASE("mesh window n=2, window=2 is a commuting square") {
  auto        g   = gen_mesh_window(2, 2, Field::gf(2));
  auto const& cat = g.category;
  CHECK(cat.object_count() == 4);
  CHECK_FALSE(g.plain_path);
  // bottom-left = M0_2, top-right = M1_2 (one up step then one down step).
  std::size_t bl = cat.object_index("M0_2");
  std::size_t tr = cat.object_index("M1_2");
  CHECK(cat.hom_dim(bl, tr) == 1);
  CHECK(cat.verify_laws().empty());
}

TEST_CASE("mesh window n=2, window=3: the signed mesh sum vanishes") {
  Field       f   = Field::gf(3);
  auto        g   = gen_mesh_window(2, 3, f);
  auto const& cat = g.category;
  CHECK(cat.verify_laws().empty());
  for (auto const& rel : g.presentation.relations) {
    auto const& p0 = rel.terms.front().path;
    Morphism    sum = cat.zero(p0.source, p0.target);
    for (auto const& t : rel.terms) {
      Morphism m = cat.identity(t.path.source);
      for (auto k : t.path.arrows) {
        m = cat.compose(cat.arrow_morphism(k), m);
      }
      sum.coords = add(sum.coords, scale(t.coefficient, m.coords));
    }
    CHECK(sum.is_zero());
  }
  CHECK(g.presentation.relations.size() == 2);
}

TEST_CASE("stable tube rank 1 depth 1") {
  auto g = gen_stable_tube(1, 1, Field::gf(2));
  CHECK(g.category.object_count() == 1);
  CHECK(g.category.hom_dim(0, 0) == 1);
}

TEST_CASE("stable tube rank 2 depth 1 has only identities after truncation") {
  auto g = gen_stable_tube(2, 1, Field::gf(2));
  CHECK(g.category.object_count() == 2);
  CHECK(g.category.hom_dim(0, 1) == 0);
  CHECK(g.mouth.size() == 2);
}

TEST_CASE("stable tube rank 2 depth 2") {
  auto        g   = gen_stable_tube(2, 2, Field::gf(2));
  auto const& cat = g.category;
  CHECK(cat.object_count() == 4);
  CHECK(cat.verify_laws().empty());
  std::size_t t01 = cat.object_index("T0_1");
  std::size_t t02 = cat.object_index("T0_2");
  std::size_t t11 = cat.object_index("T1_1");
  CHECK(cat.hom_dim(t01, t02) == 1);
  CHECK(cat.hom_dim(t02, t11) == 1);
  // Mouth mesh T0_1 -> T1_1 through T0_2 is a zero relation.
  CHECK(cat.hom_dim(t01, t11) == 0);
}

TEST_CASE("exact nilpotency bound") {
  CHECK(gen_linear(3, Field::gf(2)).presentation.nilpotency_bound == 3);
  CHECK(gen_linear(1, Field::gf(2)).presentation.nilpotency_bound == 1);
}
