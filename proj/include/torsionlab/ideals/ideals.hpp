#ifndef TORSIONLAB_IDEALS_IDEALS_HPP_
#define TORSIONLAB_IDEALS_IDEALS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/modfun/module.hpp"

namespace torsionlab {

  //! A subfunctor of C(-, target): part[c'] ⊆ Hom(c', target), closed under
  //! precomposition.
  class RightIdeal {
   public:
    //! Throws InvariantViolation if the parts are not closed.
    RightIdeal(CategoryPtr cat, std::size_t target, std::vector<Subspace> parts);

    static RightIdeal zero(CategoryPtr const& cat, std::size_t target);
    static RightIdeal whole(CategoryPtr const& cat, std::size_t target);
    static RightIdeal from_submodule(Submodule const& k, std::size_t target);

    Category const& cat() const noexcept {
      return *_cat;
    }
    CategoryPtr const& category_ptr() const noexcept {
      return _cat;
    }
    std::size_t target() const noexcept {
      return _target;
    }
    std::vector<Subspace> const& parts() const noexcept {
      return _parts;
    }
    Subspace const& part(std::size_t c) const {
      return _parts.at(c);
    }
    std::size_t total_dim() const;
    bool        is_zero() const {
      return total_dim() == 0;
    }
    bool is_whole() const;

    bool contains(Morphism const& f) const;
    //! Objectwise containment of another ideal into the same target.
    bool contains(RightIdeal const& other) const;

    //! Basis morphisms of every part.
    std::vector<Morphism> generators() const;
    //! As a submodule of representable(cat, target).
    Submodule to_submodule() const;

    bool operator==(RightIdeal const& other) const;
    bool operator<(RightIdeal const& other) const;

    //! "{1: [[1]], 2: []}" with object names.
    std::string to_string() const;

   private:
    CategoryPtr           _cat;
    std::size_t           _target;
    std::vector<Subspace> _parts;
  };

  //! A subfunctor of the Hom bifunctor: part(a, b) ⊆ Hom(a, b), closed under
  //! pre- and postcomposition.
  class TwoSidedIdeal {
   public:
    TwoSidedIdeal(CategoryPtr cat, std::vector<Subspace> parts);

    static TwoSidedIdeal zero(CategoryPtr const& cat);
    static TwoSidedIdeal whole(CategoryPtr const& cat);

    Category const& cat() const noexcept {
      return *_cat;
    }
    CategoryPtr const& category_ptr() const noexcept {
      return _cat;
    }
    Subspace const& part(std::size_t a, std::size_t b) const {
      return _parts.at(a * _cat->object_count() + b);
    }
    //! I(-, c) as a right ideal.
    RightIdeal component(std::size_t c) const;
    bool       operator==(TwoSidedIdeal const& other) const {
      return _parts == other._parts;
    }

   private:
    CategoryPtr           _cat;
    std::vector<Subspace> _parts;
  };

  //! Smallest right ideal into c containing gens.
  RightIdeal right_ideal_closure(CategoryPtr const& cat, std::size_t c, std::vector<Morphism> const& gens);
  //! Smallest two-sided ideal containing gens.
  TwoSidedIdeal two_sided_closure(CategoryPtr const& cat, std::vector<Morphism> const& gens);

  //! All right ideals into c in canonical order. Fast path: joins of
  //! principal ideals.
  std::vector<RightIdeal> enumerate_right_ideals(CategoryPtr const& cat, std::size_t c, double ceiling = 0);
  //! Oracle: every tuple of subspaces filtered by closure.
  std::vector<RightIdeal> enumerate_right_ideals_bruteforce(CategoryPtr const& cat,
                                                            std::size_t        c,
                                                            double             ceiling = 0);

  //! (I(-) : h) for h : B -> C, a right ideal into B.
  RightIdeal residuate(RightIdeal const& i, Morphism const& h);
  //! Ann(x, -) for x ∈ M(c).
  RightIdeal annihilator(Module const& m, std::size_t c, Vector const& x);
  RightIdeal annihilator(Element const& x);
  //! (K(-) : x) = {f : N(f) x ∈ K}.
  RightIdeal residuate_rel(Module const& n, Submodule const& k, std::size_t c, Vector const& x);

  RightIdeal ideal_intersect(RightIdeal const& i, RightIdeal const& j);
  RightIdeal ideal_sum(RightIdeal const& i, RightIdeal const& j);

  //! Ideal of maps that are sums of composites through the given objects.
  TwoSidedIdeal two_sided_from_objects(CategoryPtr const& cat, std::vector<std::size_t> const& objs);

  //! IM(a) = sum over c and f ∈ I(a, c) of Im M(f).
  Submodule trace_submodule(TwoSidedIdeal const& i, Module const& m);

  //! Annihilator two-sided ideal: f with M(f) = 0.
  TwoSidedIdeal module_annihilator(Module const& m);

  //! C(-, c) / I.
  QuotientResult ideal_quotient(RightIdeal const& i);

  //! Whether witnesses h may be zero (literal) or must be nonzero (strict).
  enum class DensityMode { literal, strict };

  struct DensityWitness {
    Morphism g;  // B -> C
    Morphism h;  // D -> B, g ∘ h ∈ I(D)
  };

  struct DensityReport {
    bool                        dense = true;
    std::vector<DensityWitness> witnesses;
    std::optional<Morphism>     failing;
  };

  //! For every B and every g ∈ Hom(B, C), looks for D and h : D -> B with
  //! g ∘ h ∈ I(D). Enumerates g over all vectors (finite fields only).
  DensityReport is_dense(RightIdeal const& i, DensityMode mode = DensityMode::literal);

  struct CyclicSummand {
    std::size_t object;
    Vector      generator;
    RightIdeal  kernel;  // Ann(generator, -)
  };

  struct CyclicDecomposition {
    std::vector<CyclicSummand> summands;
    //! The induced map from the coproduct of C(-, c)/Ker onto m is onto at
    //! every object.
    bool surjective = false;
  };

  //! Generators: all nonzero vectors when dim M(c) <= 2 over a finite field,
  //! otherwise the standard basis.
  CyclicDecomposition cyclic_decomposition(Module const& m);

}  // namespace torsionlab

#endif  // TORSIONLAB_IDEALS_IDEALS_HPP_
