#ifndef TORSIONLAB_TOPO_TOPOLOGY_HPP_
#define TORSIONLAB_TOPO_TOPOLOGY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "torsionlab/torsion/torsion.hpp"

namespace torsionlab {

  //! x + sub inside Hom(A, C).
  struct Coset {
    Vector   point;  // canonical: reduced modulo sub
    Subspace sub;
  };

  //! Basic neighborhoods on Hom(A, C) induced by a filter.
  struct NbhdBasis {
    std::size_t a = 0;
    std::size_t c = 0;
    //! Distinct A-components of the base ideals into C and of their meet.
    std::vector<Subspace> zero_basis;

    //! Every coset x + V for V in zero_basis (finite fields only).
    std::vector<Coset> cosets() const;
  };

  NbhdBasis neighborhoods(FilterFamily const& f, std::size_t a, std::size_t c);

  struct TopoCheck {
    Verdict     verdict = Verdict::not_checked;
    std::string note;
    std::string witness;
  };

  struct TopologyReport {
    std::size_t a = 0, b = 0, c = 0;
    TopoCheck   topology;     // (a)
    TopoCheck   addition;     // (b)
    TopoCheck   composition;  // (c)
    TopoCheck   translation;
    //! Open sets could not be enumerated; (a) certified on the basis only.
    bool basis_level_only = false;
    //! Number of open sets enumerated on Hom(A, C), 0 when basis-level only.
    std::size_t open_sets = 0;

    bool ok() const {
      return topology.verdict == Verdict::pass && addition.verdict == Verdict::pass
             && composition.verdict == Verdict::pass && translation.verdict != Verdict::fail;
    }
  };

  //! (a) the coset family on Hom(A, C) generates a topology; (b) addition on
  //! Hom(A, C) is continuous; (c) composition Hom(A, B) x Hom(B, C) -> Hom(A, C)
  //! is continuous. Open sets are enumerated as subsets of points when
  //! |Hom(A, C)| <= 12 and as unions of cosets of the smallest basic
  //! neighborhood when there are at most 12 of them; beyond that only the
  //! basis is checked and basis_level_only is set.
  TopologyReport verify_topology(FilterFamily const& f, std::size_t a, std::size_t b, std::size_t c);

  //! verify_topology over every triple of objects, in lexicographic order.
  std::vector<TopologyReport> verify_topology_all(FilterFamily const& f);

}  // namespace torsionlab

#endif  // TORSIONLAB_TOPO_TOPOLOGY_HPP_
