#include "doctest.h"
#include "fixtures.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/ideals/ideals.hpp"
#include "torsionlab/modfun/universe.hpp"

using namespace torsionlab;
using namespace fixtures;

namespace {
  // The ideal (a) into 2 on A2: part(1) = span{a}, part(2) = 0.
  RightIdeal ideal_a(CategoryPtr const& c) {
    return right_ideal_closure(c, 1, {c->arrow_morphism(0)});
  }

  std::vector<CategoryPtr> enumerable_fixtures() {
    return {a2(), a3(), loop(3), a2(Field::gf(3)), share(gen_stable_tube(2, 2, Field::gf(2)).category),
            share(gen_mesh_window(2, 3, Field::gf(2)).category)};
  }
}  // namespace

TEST_CASE("right ideal closure on A2") {
  auto c = a2();
  CHECK(right_ideal_closure(c, 1, {}).is_zero());
  CHECK(right_ideal_closure(c, 1, {c->identity(1)}).is_whole());
  auto i = ideal_a(c);
  CHECK(i.part(0).dim() == 1);
  CHECK(i.part(1).dim() == 0);
  CHECK(i.to_string() == "{1: <a>, 2: 0}");
  CHECK_THROWS_AS(right_ideal_closure(c, 0, {c->arrow_morphism(0)}), TargetMismatch);
}

TEST_CASE("enumerating right ideals on A2") {
  auto c  = a2();
  auto i2 = enumerate_right_ideals(c, 1);
  REQUIRE(i2.size() == 3);
  CHECK(i2[0].is_zero());
  CHECK(i2[1] == ideal_a(c));
  CHECK(i2[2].is_whole());
  CHECK(enumerate_right_ideals(c, 0).size() == 2);
  CHECK(enumerate_right_ideals(one_object(), 0).size() == 2);
}

TEST_CASE("fast ideal enumeration agrees with the subspace-tuple oracle") {
  for (auto const& c : enumerable_fixtures()) {
    for (std::size_t x = 0; x < c->object_count(); ++x) {
      auto fast  = enumerate_right_ideals(c, x);
      auto brute = enumerate_right_ideals_bruteforce(c, x);
      CHECK(fast == brute);
    }
  }
}

TEST_CASE("residuation on A2") {
  auto c = a2();
  auto a = c->arrow_morphism(0);
  for (auto const& i : enumerate_right_ideals(c, 1)) {
    CHECK(residuate(i, c->identity(1)) == i);
  }
  CHECK(residuate(RightIdeal::whole(c, 1), a).is_whole());
  auto r = residuate(ideal_a(c), a);
  CHECK(r.target() == 0);
  CHECK(r.is_whole());
  CHECK_THROWS_AS(residuate(ideal_a(c), c->identity(0)), TargetMismatch);
}

TEST_CASE("residuation identities on every fixture") {
  for (auto const& c : enumerable_fixtures()) {
    for (std::size_t x = 0; x < c->object_count(); ++x) {
      auto ideals = enumerate_right_ideals(c, x);
      for (auto const& i : ideals) {
        CHECK(residuate(i, c->identity(x)) == i);
      }
      for (std::size_t b = 0; b < c->object_count(); ++b) {
        for (std::size_t k = 0; k < c->hom_dim(b, x); ++k) {
          auto h = c->basis_morphism(b, x, k);
          for (auto const& i : ideals) {
            for (auto const& j : ideals) {
              if (j.contains(i)) {
                CHECK(residuate(j, h).contains(residuate(i, h)));
              }
              CHECK(residuate(ideal_intersect(i, j), h)
                    == ideal_intersect(residuate(i, h), residuate(j, h)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("annihilators on A2") {
  auto  c  = a2();
  Field f  = c->field();
  auto  p2 = representable(c, 1);
  CHECK(annihilator(p2, 1, make_vector(f, {0})).is_whole());
  CHECK(annihilator(p2, 1, make_vector(f, {1})).is_zero());
  auto s2  = simple(c, 1);
  auto ann = annihilator(s2, 1, make_vector(f, {1}));
  CHECK(ann == ideal_a(c));
}

TEST_CASE("relative residuation on A2") {
  auto  c  = a2();
  Field f  = c->field();
  auto  p2 = representable(c, 1);
  auto  x  = make_vector(f, {1});
  CHECK(residuate_rel(p2, Submodule::zero(p2), 1, x) == annihilator(p2, 1, x));
  CHECK(residuate_rel(p2, Submodule::whole(p2), 1, x).is_whole());
  auto k = submodule_generated(p2, {Element{p2, 0, make_vector(f, {1})}});
  CHECK(residuate_rel(p2, k, 1, x) == ideal_a(c));
}

TEST_CASE("relative residuation is the annihilator in the quotient") {
  for (auto const& c : {a2(), a3()}) {
    auto u = enumerate_universe(c, c->object_count() == 2 ? 2 : 1);
    for (auto const& n : u.modules) {
      for (auto const& k : enumerate_submodules(n)) {
        auto q = quotient(n, k);
        for (std::size_t x = 0; x < c->object_count(); ++x) {
          for (auto const& v : all_vectors(c->field(), n.dim(x))) {
            CHECK(residuate_rel(n, k, x, v) == annihilator(q.module, x, quotient_class(k, x, v)));
          }
        }
      }
    }
  }
}

TEST_CASE("annihilator of a sum contains the meet") {
  auto c = a2();
  auto u = enumerate_universe(c, 2);
  for (auto const& m : u.modules) {
    for (std::size_t x = 0; x < c->object_count(); ++x) {
      auto vs = all_vectors(c->field(), m.dim(x));
      for (auto const& v : vs) {
        for (auto const& w : vs) {
          auto meet = ideal_intersect(annihilator(m, x, v), annihilator(m, x, w));
          CHECK(annihilator(m, x, add(v, w)).contains(meet));
        }
      }
    }
  }
}

TEST_CASE("ideal sum and intersection") {
  auto c     = a2();
  auto a     = ideal_a(c);
  auto whole = RightIdeal::whole(c, 1);
  auto zero  = RightIdeal::zero(c, 1);
  CHECK(ideal_intersect(a, a) == a);
  CHECK(ideal_sum(a, zero) == a);
  CHECK(ideal_intersect(a, whole) == a);
  CHECK(ideal_sum(zero, a) == a);
  CHECK_THROWS_AS(ideal_sum(a, RightIdeal::zero(c, 0)), TargetMismatch);
}

TEST_CASE("two-sided ideals through objects") {
  auto c = a2();
  CHECK(two_sided_from_objects(c, {0, 1}) == TwoSidedIdeal::whole(c));
  CHECK(two_sided_from_objects(c, {}) == TwoSidedIdeal::zero(c));
  auto through1 = two_sided_from_objects(c, {0});
  CHECK(through1.part(0, 1).dim() == 1);
  CHECK(through1.part(1, 1).dim() == 0);
  CHECK(two_sided_closure(c, {c->identity(0)}) == through1);

  auto g    = gen_stable_tube(2, 2, Field::gf(2));
  auto tube = share(g.category);
  auto ib   = two_sided_from_objects(tube, g.mouth);
  for (auto m : g.mouth) {
    CHECK(ib.part(m, m).dim() == 1);
  }
  // The identity of a quasi-length 2 object does not factor through the mouth.
  std::size_t t02 = tube->object_index("T0_2");
  CHECK(ib.part(t02, t02).dim() == 0);
  CHECK_THROWS_AS(two_sided_from_objects(c, {7}), Error);
}

TEST_CASE("trace submodules") {
  auto c  = a2();
  auto p2 = representable(c, 1);
  CHECK(trace_submodule(TwoSidedIdeal::zero(c), p2).is_zero());
  CHECK(trace_submodule(TwoSidedIdeal::whole(c), p2) == Submodule::whole(p2));
  auto t = trace_submodule(two_sided_from_objects(c, {0}), p2);
  CHECK(t == ideal_a(c).to_submodule());
}

TEST_CASE("module annihilator of the sum of quotients is the ideal") {
  auto c = a2();
  for (auto const& objs : std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}}) {
    auto                i = two_sided_from_objects(c, objs);
    std::vector<Module> qs;
    for (std::size_t x = 0; x < c->object_count(); ++x) {
      qs.push_back(ideal_quotient(i.component(x)).module);
    }
    CHECK(module_annihilator(coproduct(c, qs).module) == i);
  }
}

TEST_CASE("density on A2") {
  auto c = a2();
  CHECK(is_dense(RightIdeal::whole(c, 1)).dense);
  CHECK(is_dense(RightIdeal::whole(c, 1), DensityMode::strict).dense);
  auto zero = RightIdeal::zero(c, 1);
  CHECK(is_dense(zero, DensityMode::literal).dense);
  auto strict = is_dense(zero, DensityMode::strict);
  CHECK_FALSE(strict.dense);
  REQUIRE(strict.failing.has_value());
  CHECK(is_dense(ideal_a(c), DensityMode::strict).dense);
  // Every witness is genuine.
  for (auto const& w : is_dense(ideal_a(c), DensityMode::strict).witnesses) {
    CHECK_FALSE(w.h.is_zero());
    CHECK(ideal_a(c).contains(c->compose(w.g, w.h)));
  }
}

TEST_CASE("mesh window n=2, window=3: an up arrow generates a dense ideal") {
  auto        g   = gen_mesh_window(2, 3, Field::gf(2));
  auto        cat = share(g.category);
  std::size_t src = cat->object_index("M1_2");
  std::size_t tgt = cat->object_index("M1_3");
  std::size_t k   = 0;
  while (cat->arrows()[k].name != "u1_2") {
    ++k;
  }
  REQUIRE(cat->arrows()[k].source == src);
  REQUIRE(cat->arrows()[k].target == tgt);
  auto f   = cat->arrow_morphism(k);
  auto i   = right_ideal_closure(cat, tgt, {f});
  auto rep = is_dense(i, DensityMode::strict);
  CHECK(rep.dense);
  // g = d0_3 : M0_4 -> M1_3 needs the mesh: g * u0_3 = u1_2 * d0_3'.
  bool mesh_witness = false;
  for (auto const& w : rep.witnesses) {
    if (w.g.source == cat->object_index("M0_4") && !w.g.is_zero()) {
      CHECK(w.h.source == cat->object_index("M0_3"));
      CHECK(i.contains(cat->compose(w.g, w.h)));
      mesh_witness = true;
    }
  }
  CHECK(mesh_witness);
}

TEST_CASE("cyclic decomposition") {
  auto  c  = a2();
  Field f  = c->field();
  auto  cz = cyclic_decomposition(Module::zero(c));
  CHECK(cz.summands.empty());
  CHECK(cz.surjective);
  auto cp = cyclic_decomposition(representable(c, 1));
  bool found = false;
  for (auto const& s : cp.summands) {
    if (s.object == 1 && s.generator == make_vector(f, {1})) {
      CHECK(s.kernel.is_zero());
      found = true;
    }
  }
  CHECK(found);
  auto c1 = cyclic_decomposition(simple(c, 0));
  REQUIRE(c1.summands.size() == 1);
  CHECK(c1.summands[0].kernel == annihilator(simple(c, 0), 0, make_vector(f, {1})));
  CHECK(ideal_quotient(c1.summands[0].kernel).module.dims() == std::vector<std::size_t>{1, 0});
  for (auto const& cc : {a2(), a3(), loop(3)}) {
    for (auto const& m : enumerate_universe(cc, 2).modules) {
      CHECK(cyclic_decomposition(m).surjective);
    }
  }
}
