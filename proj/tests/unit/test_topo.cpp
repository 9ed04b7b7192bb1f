#include "doctest.h"
#include "fixtures.hpp"
#include "torsionlab/topo/topology.hpp"

using namespace torsionlab;
using namespace fixtures;

namespace {
  RightIdeal ideal_a(CategoryPtr const& c) {
    return right_ideal_closure(c, 1, {c->arrow_morphism(0)});
  }

  bool all_pass(std::vector<TopologyReport> const& rs) {
    for (auto const& r : rs) {
      if (!r.ok()) {
        return false;
      }
    }
    return true;
  }

  bool composition_passes(std::vector<TopologyReport> const& rs) {
    for (auto const& r : rs) {
      if (r.composition.verdict != Verdict::pass) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("neighborhood bases on A2") {
  auto c  = a2();
  auto f  = FilterFamily::principal(c, {RightIdeal::whole(c, 0), ideal_a(c)});
  auto nb = neighborhoods(f, 0, 1);
  REQUIRE(nb.zero_basis.size() == 1);
  CHECK(nb.zero_basis[0].is_full());
  CHECK(nb.cosets().size() == 1);

  auto d = neighborhoods(FilterFamily::full(c), 0, 1);
  REQUIRE(d.zero_basis.size() == 1);
  CHECK(d.zero_basis[0].is_zero());
  // Discrete: one coset per point of Hom(1, 2).
  CHECK(d.cosets().size() == 2);

  auto i = neighborhoods(FilterFamily::improper(c), 1, 1);
  CHECK(i.zero_basis[0].is_full());
}

TEST_CASE("discrete and indiscrete topologies") {
  for (auto const& c : {a2(), a3(), loop(3), a2(Field::gf(3))}) {
    auto d = verify_topology_all(FilterFamily::full(c));
    auto i = verify_topology_all(FilterFamily::improper(c));
    CHECK(all_pass(d));
    CHECK(all_pass(i));
  }
  auto c = loop(3);
  // Hom(1, 1) has 8 points: discrete means all 256 subsets are open.
  CHECK(verify_topology(FilterFamily::full(c), 0, 0, 0).open_sets == 256);
  CHECK(verify_topology(FilterFamily::improper(c), 0, 0, 0).open_sets == 2);
}

TEST_CASE("every linear filter induces a linear topology on A2") {
  auto        c      = a2();
  std::size_t linear = 0;
  for (auto const& f : enumerate_filter_families(c)) {
    if (check_axioms(f).linear()) {
      ++linear;
      CHECK(all_pass(verify_topology_all(f)));
    }
  }
  CHECK(linear > 0);
}

TEST_CASE("composition continuity holds exactly when T3 does") {
  for (auto const& c : {a2(), a3(), loop(3), a2(Field::gf(3)), share(gen_stable_tube(2, 2, Field::gf(2)).category)}) {
    for (auto const& f : enumerate_filter_families(c)) {
      auto rs = verify_topology_all(f);
      CHECK(composition_passes(rs) == (check_axioms(f).t3.verdict == Verdict::pass));
      for (auto const& r : rs) {
        CHECK(r.topology.verdict == Verdict::pass);
        CHECK(r.addition.verdict == Verdict::pass);
        CHECK(r.translation.verdict != Verdict::fail);
      }
    }
  }
}

TEST_CASE("a T3-violating family is caught with a witness") {
  auto c   = a2();
  auto bad = FilterFamily::principal(c, {RightIdeal::whole(c, 0), RightIdeal::zero(c, 1)});
  auto r   = verify_topology(bad, 0, 0, 1);
  CHECK(r.composition.verdict == Verdict::fail);
  CHECK(r.composition.witness.find("g=a") != std::string::npos);
  CHECK(r.topology.verdict == Verdict::pass);
}

TEST_CASE("large Hom sets fall back to the basis") {
  // Hom(1, 1) of the loop with x^5 = 0 over GF(3) has 243 points.
  auto c = loop(5, Field::gf(3));
  auto r = verify_topology(FilterFamily::full(c), 0, 0, 0);
  CHECK(r.basis_level_only);
  CHECK(r.topology.verdict == Verdict::pass);
  CHECK(r.translation.verdict == Verdict::not_checked);
  // Improper: a single cell, so the coset enumeration applies.
  auto s = verify_topology(FilterFamily::improper(c), 0, 0, 0);
  CHECK_FALSE(s.basis_level_only);
  CHECK(s.open_sets == 2);
}
