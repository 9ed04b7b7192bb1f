#ifndef TORSIONLAB_CATCORE_PRESENTATION_HPP_
#define TORSIONLAB_CATCORE_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/exactlin/field.hpp"

namespace torsionlab {

  struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;

    bool operator==(Arrow const&) const = default;
  };

  //! A path in a quiver. `arrows` lists arrow indices in traversal order, so
  //! the path a then b is the composite b∘a. A path of length 0 is the
  //! identity of `source`.
  struct Path {
    std::size_t              source;
    std::size_t              target;
    std::vector<std::size_t> arrows;

    std::size_t length() const noexcept {
      return arrows.size();
    }
    //! Orders by length, then lexicographically by arrow sequence.
    auto operator<=>(Path const& other) const {
      if (auto c = arrows.size() <=> other.arrows.size(); c != 0) {
        return c;
      }
      if (auto c = arrows <=> other.arrows; c != 0) {
        return c;
      }
      if (auto c = source <=> other.source; c != 0) {
        return c;
      }
      return target <=> other.target;
    }
    bool operator==(Path const&) const = default;
  };

  struct PathTerm {
    Scalar coefficient;
    Path   path;

    bool operator==(PathTerm const&) const = default;
  };

  //! A formal linear combination of parallel paths declared to be zero.
  struct Relation {
    std::vector<PathTerm> terms;

    bool operator==(Relation const&) const = default;
  };

  //! A quiver with relations over a field; paths of length >= nilpotency_bound
  //! are declared zero.
  struct CategoryPresentation {
    Field                    field = Field::gf(2);
    std::vector<std::string> objects;
    std::vector<Arrow>       arrows;
    std::vector<Relation>    relations;
    std::size_t              nilpotency_bound = 1;

    std::optional<std::size_t> object_index(std::string const& name) const;
    std::optional<std::size_t> arrow_index(std::string const& name) const;

    //! Throws DegeneratePresentation naming the first broken invariant.
    void validate() const;

    //! "b*a" for the path a then b; "id(X)" for an identity.
    std::string path_label(Path const& p) const;

    bool operator==(CategoryPresentation const&) const = default;
  };

}  // namespace torsionlab

#endif  // TORSIONLAB_CATCORE_PRESENTATION_HPP_
