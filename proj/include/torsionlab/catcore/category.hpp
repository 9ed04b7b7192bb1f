#ifndef TORSIONLAB_CATCORE_CATEGORY_HPP_
#define TORSIONLAB_CATCORE_CATEGORY_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "torsionlab/catcore/presentation.hpp"
#include "torsionlab/exactlin/matrix.hpp"

namespace torsionlab {

  //! An element of Hom(source, target), in coordinates over the hom basis.
  struct Morphism {
    std::size_t source;
    std::size_t target;
    Vector      coords;

    bool is_zero() const {
      return torsionlab::is_zero(coords);
    }
    bool operator==(Morphism const&) const = default;
  };

  //! A finite presented preadditive category: finitely many objects,
  //! finite-dimensional Hom spaces with fixed bases, and a bilinear
  //! composition table. Immutable once built.
  class Category {
   public:
    Field field() const noexcept {
      return _field;
    }
    std::size_t object_count() const noexcept {
      return _objects.size();
    }
    std::vector<std::string> const& objects() const noexcept {
      return _objects;
    }
    std::string const& object_name(std::size_t c) const {
      return _objects.at(c);
    }
    //! Throws UnknownObject.
    std::size_t object_index(std::string const& name) const;

    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }
    bool is_opposite() const noexcept {
      return _opposite;
    }

    std::size_t hom_dim(std::size_t a, std::size_t b) const {
      return _basis.at(index2(a, b)).size();
    }
    std::size_t total_hom_dim() const;
    //! Sum over all objects B of dim Hom(B, c).
    std::size_t total_hom_dim_into(std::size_t c) const;

    //! Path representing the i-th basis morphism of Hom(a, b), written in
    //! this category's own arrows.
    Path const& basis_path(std::size_t a, std::size_t b, std::size_t i) const {
      return _basis.at(index2(a, b)).at(i);
    }
    std::string basis_label(std::size_t a, std::size_t b, std::size_t i) const;
    std::string path_label(Path const& p) const;

    //! Coordinates in Hom(a, c) of basis_j(b, c) ∘ basis_i(a, b).
    Vector const& compose_basis(std::size_t a,
                                std::size_t b,
                                std::size_t c,
                                std::size_t j,
                                std::size_t i) const;

    Morphism zero(std::size_t a, std::size_t b) const;
    Morphism identity(std::size_t c) const;
    Morphism basis_morphism(std::size_t a, std::size_t b, std::size_t i) const;
    Morphism arrow_morphism(std::size_t k) const;
    //! Every vector of Hom(a, b); finite fields only.
    std::vector<Morphism> all_morphisms(std::size_t a, std::size_t b) const;

    //! g ∘ f. Throws TargetMismatch unless f.target == g.source.
    Morphism compose(Morphism const& g, Morphism const& f) const;

    //! Matrix of h ↦ g ∘ h from Hom(a, g.source) to Hom(a, g.target).
    Matrix postcompose_matrix(Morphism const& g, std::size_t a) const;
    //! Matrix of h ↦ h ∘ f from Hom(f.target, c) to Hom(f.source, c).
    Matrix precompose_matrix(Morphism const& f, std::size_t c) const;

    //! Same objects, reversed arrows, Hom_op(a, b) = Hom(b, a) with the same
    //! basis order. opposite().opposite() == *this.
    Category opposite() const;

    //! Exhaustive associativity and identity checks over basis triples;
    //! returns one line per violation.
    std::vector<std::string> verify_laws() const;

    void check_object(std::size_t c) const;
    void check_morphism(Morphism const& m) const;

    bool operator==(Category const&) const = default;

   private:
    friend Category compile_quiver(CategoryPresentation const& p);

    std::size_t index2(std::size_t a, std::size_t b) const {
      return a * _objects.size() + b;
    }
    std::size_t index3(std::size_t a, std::size_t b, std::size_t c) const {
      return (a * _objects.size() + b) * _objects.size() + c;
    }

    Field                    _field = Field::gf(2);
    std::vector<std::string> _objects;
    std::vector<Arrow>       _arrows;
    bool                     _opposite = false;
    // _basis[a*n+b] lists the basis paths of Hom(a, b).
    std::vector<std::vector<Path>> _basis;
    // _compose[(a*n+b)*n+c][j*dim(a,b)+i] = basis_j(b,c) ∘ basis_i(a,b).
    std::vector<std::vector<Vector>> _compose;
    std::vector<std::size_t>         _identity;
    std::vector<Morphism>            _arrow_morphisms;
  };

  using CategoryPtr = std::shared_ptr<Category const>;

  //! "a + 2*b*a" style label of a morphism; "0" for the zero morphism.
  std::string morphism_label(Category const& cat, Morphism const& f);

  //! Hom(a, b) has as basis the residue classes of the standard paths a -> b
  //! (length < L) modulo the two-sided ideal generated by the relations.
  //! Paths are ordered by length then lexicographically; each relation row
  //! eliminates its largest path. Throws DegeneratePresentation if the
  //! presentation is malformed or forces some identity to zero.
  Category compile_quiver(CategoryPresentation const& p);

  //! Smallest nilpotency bound L such that every path of length L is already
  //! zero modulo the relations, so that truncation at L changes nothing. Valid for
  //! homogeneous relations. Throws DegeneratePresentation if no such
  //! L <= max_bound exists.
  std::size_t exact_nilpotency_bound(CategoryPresentation p, std::size_t max_bound = 32);

}  // namespace torsionlab

#endif  // TORSIONLAB_CATCORE_CATEGORY_HPP_
