#ifndef TORSIONLAB_MODFUN_MODULE_HPP_
#define TORSIONLAB_MODFUN_MODULE_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "torsionlab/catcore/category.hpp"
#include "torsionlab/exactlin/subspace.hpp"

namespace torsionlab {

  //! True if both pointers denote equal categories (pointer or value equality).
  bool same_category(CategoryPtr const& a, CategoryPtr const& b);

  //! A C-module: a contravariant functor from the category to
  //! finite-dimensional vector spaces. For a basis morphism f : C' -> C the
  //! action M(f) is a dim M(C') x dim M(C) matrix, i.e. a map M(C) -> M(C').
  //!
  //! Modules are immutable and cheap to copy.
  class Module {
   public:
    //! `action[c' * n + c][i]` is M(f_i) for the i-th basis morphism of
    //! Hom(c', c). Shapes are validated; functoriality is not (see
    //! check_functoriality).
    Module(CategoryPtr cat, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> action);

    //! Extends matrices given on the arrows of the underlying quiver to all
    //! basis paths. arrow_mats[k] has shape dim M(source) x dim M(target).
    static Module from_arrow_matrices(CategoryPtr cat,
                                      std::vector<std::size_t> dims,
                                      std::vector<Matrix> const& arrow_mats);
    static Module zero(CategoryPtr cat);

    Category const& cat() const noexcept {
      return *_data->cat;
    }
    CategoryPtr const& category_ptr() const noexcept {
      return _data->cat;
    }
    Field field() const noexcept {
      return _data->cat->field();
    }
    std::vector<std::size_t> const& dims() const noexcept {
      return _data->dims;
    }
    std::size_t dim(std::size_t c) const {
      return _data->dims.at(c);
    }
    std::size_t total_dim() const;
    bool        is_zero() const {
      return total_dim() == 0;
    }

    Matrix const& action_basis(std::size_t c_from, std::size_t c_to, std::size_t i) const;
    //! M(f) : M(f.target) -> M(f.source).
    Matrix action(Morphism const& f) const;
    //! M(arrow k).
    Matrix arrow_action(std::size_t k) const;

    //! Same data over an equal category held by a different pointer.
    Module rebind(CategoryPtr cat) const;

    bool operator==(Module const& other) const;

    std::string to_string() const;

   private:
    struct Data {
      CategoryPtr                      cat;
      std::vector<std::size_t>         dims;
      std::vector<std::vector<Matrix>> action;
    };
    explicit Module(std::shared_ptr<Data const> d) : _data(std::move(d)) {}
    std::shared_ptr<Data const> _data;
  };

  //! An element x of M(object).
  struct Element {
    Module      module;
    std::size_t object;
    Vector      vector;
  };

  //! A natural transformation source -> target; comp[c] : source(c) -> target(c).
  struct NatTrans {
    Module              source;
    Module              target;
    std::vector<Matrix> comp;

    //! Naturality on every basis morphism; returns one line per failure.
    std::vector<std::string> naturality_violations() const;
    bool is_mono() const;
    bool is_epi() const;
    bool is_iso() const;
    bool is_zero() const;
    //! this ∘ other.
    NatTrans after(NatTrans const& other) const;
    Vector apply(std::size_t c, Vector const& v) const;
    //! Row-major concatenation of all components.
    Vector flatten() const;
  };

  //! A family of subspaces part[c] ⊆ parent(c) stable under the action.
  class Submodule {
   public:
    //! Throws InvariantViolation if the parts are not stable.
    Submodule(Module parent, std::vector<Subspace> parts);

    static Submodule zero(Module const& parent);
    static Submodule whole(Module const& parent);

    Module const& parent() const noexcept {
      return _parent;
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

    bool contains(Submodule const& other) const;

    //! The submodule as a module in its own right (bases = RREF rows of the
    //! parts) plus the inclusion into the parent.
    std::pair<Module, NatTrans> as_module() const;

    bool operator==(Submodule const& other) const;
    //! Canonical order: total dimension, then parts.
    bool operator<(Submodule const& other) const;

   private:
    Module                _parent;
    std::vector<Subspace> _parts;
  };

  //! True if `parts` is stable under every basis action of m.
  bool is_stable(Module const& m, std::vector<Subspace> const& parts);

  //! Violated identities M(1) = 1 and M(f∘g) = M(g)M(f); empty iff m is a
  //! module.
  std::vector<std::string> check_functoriality(Module const& m);

  //! The representable C(-, c): B ↦ Hom(B, c), acting by precomposition.
  Module representable(CategoryPtr const& cat, std::size_t c);

  //! Basis of the space of natural transformations m -> n, by solving the
  //! naturality system.
  std::vector<NatTrans> hom_modules(Module const& m, Module const& n);
  std::size_t           hom_dim(Module const& m, Module const& n);

  //! Smallest submodule containing the given elements.
  Submodule submodule_generated(Module const& m, std::vector<Element> const& gens);

  //! Smallest stable family containing `parts`.
  Submodule close_to_submodule(Module const& m, std::vector<Subspace> parts);

  struct QuotientResult {
    Module   module;
    NatTrans projection;
  };
  //! m / k with the canonical complement basis (non-pivot coordinates).
  QuotientResult quotient(Module const& m, Submodule const& k);
  //! The class of x in m / k, in the quotient's coordinates.
  Vector quotient_class(Submodule const& k, std::size_t c, Vector const& x);

  struct CoproductResult {
    Module                module;
    std::vector<NatTrans> injections;
  };
  //! Objectwise direct sum; the empty coproduct over `cat` is zero.
  CoproductResult coproduct(CategoryPtr const& cat, std::vector<Module> const& ms);

  //! Linear dual Hom_k(M(-), k), a module over the opposite category.
  Module dual(Module const& m);
  //! D(C(c, -)) as a module over cat itself.
  Module dual_corepresentable(CategoryPtr const& cat, std::size_t c);

  //! Kernel and image of a natural transformation.
  Submodule kernel(NatTrans const& eta);
  Submodule image(NatTrans const& eta);

  //! Search the Hom space for an isomorphism (exhaustive over finite fields).
  bool is_isomorphic(Module const& m, Module const& n, double ceiling = 0);

  //! Every submodule of m in canonical order. Fast path: principal
  //! submodules joined to a fixed point.
  std::vector<Submodule> enumerate_submodules(Module const& m, double ceiling = 0);
  //! Oracle: every tuple of subspaces filtered by stability.
  std::vector<Submodule> enumerate_submodules_bruteforce(Module const& m, double ceiling = 0);

}  // namespace torsionlab

#endif  // TORSIONLAB_MODFUN_MODULE_HPP_
