#ifndef TORSIONLAB_MODFUN_UNIVERSE_HPP_
#define TORSIONLAB_MODFUN_UNIVERSE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/modfun/module.hpp"

namespace torsionlab {

  //! Isomorphism invariants used to bucket modules before the exact test.
  struct ModuleKey {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> ranks;  // rank of every basis action
    std::size_t              end_dim = 0;

    auto operator<=>(ModuleKey const&) const = default;
  };
  ModuleKey module_key(Module const& m);

  //! Every module with dim M(C) <= dim_bound at each object, one per
  //! isomorphism class, in enumeration order.
  struct Universe {
    CategoryPtr            cat;
    std::size_t            dim_bound = 0;
    std::vector<Module>    modules;
    std::vector<ModuleKey> keys;

    std::size_t size() const noexcept {
      return modules.size();
    }
    //! Index of the member isomorphic to m, if any.
    std::optional<std::size_t> index_of(Module const& m) const;
  };

  //! Number of raw candidates (arrow-matrix tuples) the enumeration visits.
  double universe_candidates(Category const& cat, std::size_t dim_bound);

  //! Dimension vectors in lexicographic order, then arrow matrices in
  //! row-major order (arrows in index order, entries as base-p digits with the
  //! first entry most significant). Non-functorial tuples are dropped and the
  //! rest deduplicated by isomorphism. Throws CeilingExceeded if the candidate
  //! count exceeds the ceiling (0 = default).
  Universe enumerate_universe(CategoryPtr cat, std::size_t dim_bound, double ceiling = 0);

  //! Witness that e is not injective: a map from a submodule of a universe
  //! member into e with no extension.
  struct InjectivityWitness {
    std::size_t module_index;
    Submodule   sub;
    NatTrans    map;
  };

  struct InjectivityReport {
    bool                              injective = true;
    std::size_t                       pairs_checked = 0;
    std::optional<InjectivityWitness> witness;
  };

  //! For every N in the universe and every submodule K ⊆ N, checks that
  //! restriction Hom(N, e) -> Hom(K, e) is onto.
  InjectivityReport is_injective_in(Universe const& u, Module const& e);

}  // namespace torsionlab

#endif  // TORSIONLAB_MODFUN_UNIVERSE_HPP_
