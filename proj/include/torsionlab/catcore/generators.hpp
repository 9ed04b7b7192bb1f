#ifndef TORSIONLAB_CATCORE_GENERATORS_HPP_
#define TORSIONLAB_CATCORE_GENERATORS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "torsionlab/catcore/category.hpp"

namespace torsionlab {

  //! A generated category together with the presentation it was compiled
  //! from and a human-readable account of the truncation used.
  struct GeneratedCategory {
    CategoryPresentation presentation;
    Category             category;
    std::string          description;
    //! True when the window holds no complete mesh, so the result is a plain
    //! path category.
    bool plain_path = false;
    //! Objects of the mouth (quasi-length 1) for tubes; empty otherwise.
    std::vector<std::size_t> mouth;
  };

  //! Linear quiver 1 -> 2 -> ... -> n with no relations, over f. Paths of
  //! every length survive.
  GeneratedCategory gen_linear(std::size_t n, Field f);

  //! One object with a loop x and x^bound = 0.
  GeneratedCategory gen_loop(std::size_t bound, Field f);

  //! A rectangular window of the mesh category of ZA_infinity, placed away
  //! from the boundary: `n` consecutive sectional levels (the up direction)
  //! times `window` consecutive tau-orbits' worth of down steps. Vertex (p, q)
  //! of ZA_infinity is named M<p>_<q>; up arrows u<p>_<q> : (p,q) -> (p,q+1),
  //! down arrows d<p>_<q> : (p,q+1) -> (p+1,q). Every complete mesh inside
  //! the window contributes d∘u - u∘d = 0, so each mesh is a commuting square.
  GeneratedCategory gen_mesh_window(std::size_t n, std::size_t window, Field f);

  //! The stable tube ZA_infinity/(tau^rank) truncated to quasi-length <= depth.
  //! Vertices T<p>_<q> with p mod rank and 1 <= q <= depth. Mesh relations are
  //! imposed with every path through a deleted vertex set to zero, so meshes
  //! at the mouth and at the top become zero relations.
  GeneratedCategory gen_stable_tube(std::size_t rank, std::size_t depth, Field f);

}  // namespace torsionlab

#endif  // TORSIONLAB_CATCORE_GENERATORS_HPP_
