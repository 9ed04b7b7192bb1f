#include "doctest.h"
#include "fixtures.hpp"
#include "torsionlab/error.hpp"
#include "torsionlab/modfun/universe.hpp"

using namespace torsionlab;
using namespace fixtures;

namespace {
  Matrix one_by_one(Field f, long long v) {
    return Matrix::from_rows(f, 1, {{v}});
  }
}  // namespace

TEST_CASE("representables on A2") {
  auto c  = a2();
  auto p2 = representable(c, 1);
  auto p1 = representable(c, 0);
  CHECK(p2.dims() == std::vector<std::size_t>{1, 1});
  CHECK(p1.dims() == std::vector<std::size_t>{1, 0});
  CHECK(check_functoriality(p2).empty());
  CHECK(check_functoriality(p1).empty());
  CHECK(check_functoriality(Module::zero(c)).empty());
  auto t = representable(one_object(), 0);
  CHECK(t.total_dim() == 1);
  CHECK_THROWS(representable(c, 5));
}

TEST_CASE("functoriality violation on a bound quiver") {
  CategoryPresentation p;
  p.field            = Field::gf(2);
  p.objects          = {"1", "2", "3"};
  p.arrows           = {{"a", 0, 1}, {"b", 1, 2}};
  p.relations        = {{{{Scalar::one(p.field), Path{0, 2, {0, 1}}}}}};
  p.nilpotency_bound = 3;
  auto cat           = share(compile_quiver(p));
  CHECK(cat->hom_dim(0, 2) == 0);
  Field f = p.field;
  auto  m = Module::from_arrow_matrices(cat, {1, 1, 1}, {one_by_one(f, 1), one_by_one(f, 1)});
  auto  v = check_functoriality(m);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().find("f = a") != std::string::npos);
  CHECK(v.front().find("g = b") != std::string::npos);
}

TEST_CASE("shape errors are reported") {
  auto c = a2();
  CHECK_THROWS_AS(Module::from_arrow_matrices(c, {1, 1}, {Matrix(c->field(), 2, 1)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(Module::from_arrow_matrices(c, {1}, {Matrix(c->field(), 1, 1)}),
                  DimensionMismatch);
}

TEST_CASE("Hom between A2 modules") {
  auto c  = a2();
  auto s1 = simple(c, 0);
  auto s2 = simple(c, 1);
  auto p2 = representable(c, 1);
  CHECK(hom_modules(p2, p2).size() == 1);
  CHECK(hom_modules(s2, s1).empty());
  CHECK(hom_modules(p2, Module::zero(c)).empty());
  CHECK(hom_dim(s1, p2) == 1);
  CHECK(hom_dim(p2, s2) == 1);
  CHECK(hom_dim(p2, s1) == 0);
  for (auto const& eta : hom_modules(p2, s2)) {
    CHECK(eta.naturality_violations().empty());
  }
}

TEST_CASE("submodule generated by elements of C(-,2)") {
  auto c  = a2();
  auto p2 = representable(c, 1);
  Field f = c->field();
  auto sa = submodule_generated(p2, {Element{p2, 0, make_vector(f, {1})}});
  CHECK(sa.part(0).dim() == 1);
  CHECK(sa.part(1).dim() == 0);
  auto whole = submodule_generated(p2, {Element{p2, 1, make_vector(f, {1})}});
  CHECK(whole == Submodule::whole(p2));
  CHECK(submodule_generated(p2, {Element{p2, 1, make_vector(f, {0})}}).is_zero());

  auto q = quotient(p2, sa);
  CHECK(q.module.dims() == std::vector<std::size_t>{0, 1});
  CHECK(is_isomorphic(q.module, simple(c, 1)));
  CHECK(q.projection.is_epi());
  CHECK(q.projection.naturality_violations().empty());
  CHECK(kernel(q.projection) == sa);

  CHECK(is_isomorphic(quotient(p2, Submodule::zero(p2)).module, p2));
  CHECK(quotient(p2, Submodule::whole(p2)).module.is_zero());
}

TEST_CASE("stability is enforced") {
  auto c  = a2();
  auto p2 = representable(c, 1);
  Field f = c->field();
  // part(2) = everything, part(1) = 0 is not stable: a*1_2 = a.
  CHECK_THROWS_AS(Submodule(p2, {Subspace(f, 1), Subspace::full(f, 1)}), InvariantViolation);
}

TEST_CASE("coproducts") {
  auto c  = a2();
  auto s1 = simple(c, 0);
  auto s2 = simple(c, 1);
  CHECK(coproduct(c, {}).module.is_zero());
  CHECK(coproduct(c, {s1}).module == s1);
  auto s = coproduct(c, {s1, s2});
  CHECK(s.module.dims() == std::vector<std::size_t>{1, 1});
  CHECK(s.module.arrow_action(0).is_zero());
  for (auto const& inj : s.injections) {
    CHECK(inj.is_mono());
    CHECK(inj.naturality_violations().empty());
  }
}

TEST_CASE("duals") {
  auto c  = a2();
  auto s1 = simple(c, 0);
  auto d  = dual(s1);
  CHECK(d.cat().is_opposite());
  CHECK(d.dims() == std::vector<std::size_t>{1, 0});
  CHECK(check_functoriality(d).empty());
  CHECK(dual(Module::zero(c)).is_zero());
  auto p2 = representable(c, 1);
  CHECK(dual(dual(p2)).rebind(c) == p2);
}

TEST_CASE("universe of A2 over GF(2)") {
  auto c = a2();
  auto u = enumerate_universe(c, 1);
  REQUIRE(u.size() == 5);
  // 0, S2, S1, zero-action (1,1), C(-,2).
  CHECK(u.modules[0].is_zero());
  CHECK(u.index_of(simple(c, 0)).has_value());
  CHECK(u.index_of(simple(c, 1)).has_value());
  CHECK(u.index_of(representable(c, 1)).has_value());
  CHECK(u.index_of(coproduct(c, {simple(c, 0), simple(c, 1)}).module).has_value());
  CHECK(enumerate_universe(c, 0).size() == 1);
  CHECK(enumerate_universe(a3(), 0).size() == 1);
  // Indecomposables of A2 are S1, S2, P2, so classes are triples (s, t, p)
  // with s + p <= 2 and t + p <= 2.
  std::size_t triples = 0;
  for (int p = 0; p <= 2; ++p) {
    triples += static_cast<std::size_t>((3 - p) * (3 - p));
  }
  CHECK(enumerate_universe(c, 2).size() == triples);
}

TEST_CASE("universe of the loop with x^2 = 0") {
  auto c = loop(2);
  auto u = enumerate_universe(c, 1);
  // x = 1 on a line violates x^2 = 0; only 0 and the line with x = 0 remain.
  CHECK(u.size() == 2);
  Field f = c->field();
  auto  bad = Module::from_arrow_matrices(c, {1}, {one_by_one(f, 1)});
  CHECK_FALSE(check_functoriality(bad).empty());
  // x^2 = 0 on k^2 has two classes: x = 0 and one Jordan block.
  CHECK(enumerate_universe(c, 2).size() == 4);
}

TEST_CASE("ceiling refusal") {
  auto c = a3();
  CHECK_THROWS_AS(enumerate_universe(c, 3, 100), CeilingExceeded);
}

TEST_CASE("Yoneda dimension law on fixture universes") {
  for (auto const& c : {a2(), a3(), a2(Field::gf(3))}) {
    auto u = enumerate_universe(c, c->object_count() == 2 ? 2 : 1);
    for (auto const& m : u.modules) {
      for (std::size_t x = 0; x < c->object_count(); ++x) {
        CHECK(hom_dim(representable(c, x), m) == m.dim(x));
        CHECK(hom_dim(m, dual_corepresentable(c, x)) == m.dim(x));
      }
    }
  }
}

TEST_CASE("tensor-hom symmetry for the linear dual") {
  auto c  = a2();
  auto op = share(c->opposite());
  auto uc = enumerate_universe(c, 1);
  auto uo = enumerate_universe(op, 1);
  for (auto const& m : uc.modules) {
    for (auto const& n : uo.modules) {
      CHECK(hom_dim(m, dual(n).rebind(c)) == hom_dim(n, dual(m).rebind(op)));
    }
  }
}

TEST_CASE("submodule enumeration fast path agrees with brute force") {
  for (auto const& c : {a2(), a3(), loop(3), a2(Field::gf(3))}) {
    auto u = enumerate_universe(c, 2);
    for (auto const& m : u.modules) {
      auto fast  = enumerate_submodules(m);
      auto brute = enumerate_submodules_bruteforce(m);
      CHECK(fast == brute);
      for (auto const& k : fast) {
        auto q = quotient(m, k);
        CHECK(kernel(q.projection) == k);
        auto [kmod, incl] = k.as_module();
        CHECK(check_functoriality(kmod).empty());
        CHECK(incl.is_mono());
        CHECK(image(incl) == k);
      }
    }
  }
}

TEST_CASE("coproduct injections are jointly surjective and sums associate") {
  auto c = a2();
  auto u = enumerate_universe(c, 1);
  for (auto const& x : u.modules) {
    for (auto const& y : u.modules) {
      auto s = coproduct(c, {x, y});
      std::vector<Subspace> parts;
      for (std::size_t o = 0; o < c->object_count(); ++o) {
        parts.push_back(subspace_sum(image(s.injections[0]).part(o), image(s.injections[1]).part(o)));
      }
      CHECK(parts == Submodule::whole(s.module).parts());
      for (auto const& z : u.modules) {
        auto left  = coproduct(c, {coproduct(c, {x, y}).module, z}).module;
        auto right = coproduct(c, {x, coproduct(c, {y, z}).module}).module;
        CHECK(is_isomorphic(left, right));
      }
    }
  }
}

TEST_CASE("injectivity in the A2 universe") {
  auto c = a2();
  auto u = enumerate_universe(c, 1);
  CHECK(is_injective_in(u, Module::zero(c)).injective);
  CHECK(is_injective_in(u, dual_corepresentable(c, 1)).injective);
  CHECK(is_injective_in(u, dual_corepresentable(c, 0)).injective);
  auto rep = is_injective_in(u, simple(c, 0));
  CHECK_FALSE(rep.injective);
  REQUIRE(rep.witness.has_value());
  // The witness really has no extension.
  auto const& w  = *rep.witness;
  auto const& nm = u.modules[w.module_index];
  auto [kmod, incl] = w.sub.as_module();
  Subspace reach(c->field(), w.map.flatten().size());
  std::vector<Vector> restricted;
  for (auto const& phi : hom_modules(nm, simple(c, 0))) {
    restricted.push_back(phi.after(incl).flatten());
  }
  CHECK_FALSE(Subspace::span(c->field(), w.map.flatten().size(), restricted).contains(w.map.flatten()));
}
