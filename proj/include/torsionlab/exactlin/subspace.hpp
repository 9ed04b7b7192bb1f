#ifndef TORSIONLAB_EXACTLIN_SUBSPACE_HPP_
#define TORSIONLAB_EXACTLIN_SUBSPACE_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "torsionlab/exactlin/matrix.hpp"

namespace torsionlab {

  //! A subspace of k^n stored canonically: its basis is the reduced row echelon
  //! form of any spanning set, with no zero rows. Equal subspaces therefore
  //! have identical bases and compare equal with ==.
  class Subspace {
   public:
    Subspace() : Subspace(Field::gf(2), 0) {}
    //! The zero subspace of k^ambient.
    Subspace(Field f, std::size_t ambient);

    static Subspace span(Field f, std::size_t ambient, std::vector<Vector> const& vectors);
    static Subspace full(Field f, std::size_t ambient);
    //! Row space of m.
    static Subspace row_space(Matrix const& m);

    Field field() const noexcept {
      return _basis.field();
    }
    std::size_t ambient_dim() const noexcept {
      return _basis.cols();
    }
    std::size_t dim() const noexcept {
      return _basis.rows();
    }
    Matrix const& basis() const noexcept {
      return _basis;
    }
    std::vector<Vector> basis_vectors() const;
    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }

    bool is_zero() const noexcept {
      return dim() == 0;
    }
    bool is_full() const noexcept {
      return dim() == ambient_dim();
    }

    bool contains(Vector const& v) const;
    bool contains(Subspace const& other) const;

    //! Canonical representative of v + U: v with the pivot coordinates cleared.
    Vector reduce(Vector const& v) const;
    //! Coefficients c with v = sum c_i basis_i, if v lies in the subspace.
    std::optional<Vector> coordinates(Vector const& v) const;

    //! Coordinates of the complement of the pivot columns; these index a basis
    //! of k^n / U.
    std::vector<std::size_t> free_columns() const;

    //! {w : w . u = 0 for all u in U} with respect to the standard pairing.
    Subspace orthogonal() const;

    //! {v : a v in U}, where a maps some k^m into the ambient space.
    Subspace preimage(Matrix const& a) const;
    //! a(U) for a linear map a with a.cols() == ambient_dim().
    Subspace image_under(Matrix const& a) const;

    bool operator==(Subspace const& other) const {
      return _basis == other._basis;
    }
    //! Orders by dimension, then by basis entries.
    std::strong_ordering operator<=>(Subspace const& other) const;

    std::string to_string() const;

   private:
    explicit Subspace(RrefResult r, std::size_t ambient);

    Matrix                   _basis;
    std::vector<std::size_t> _pivots;
  };

  //! Smallest subspace containing both; throws DimensionMismatch or
  //! FieldMismatch on incompatible inputs.
  Subspace subspace_sum(Subspace const& u, Subspace const& v);
  //! Largest common subspace.
  Subspace subspace_intersect(Subspace const& u, Subspace const& v);
  bool     subspace_member(Vector const& v, Subspace const& u);

  //! Kernel (in k^cols) and image (in k^rows) of the linear map m.
  std::pair<Subspace, Subspace> kernel_image(Matrix const& m);

  // Finite-field enumeration helpers. All of them throw Error over Q.

  //! Number of vectors in a subspace: q^dim, saturating at max double.
  double point_count(Subspace const& u);

  //! Calls fn on every vector of u in a fixed order (coefficient vectors in
  //! little-endian counting order over the basis). Stops early if fn returns
  //! false.
  void for_each_vector(Subspace const& u, std::function<bool(Vector const&)> const& fn);
  std::vector<Vector> all_vectors(Subspace const& u);
  std::vector<Vector> all_vectors(Field f, std::size_t n);

  //! Number of subspaces of k^n (sum of Gaussian binomials).
  double subspace_count(Field f, std::size_t n);
  //! Every subspace of k^n, in canonical (<=>) order.
  std::vector<Subspace> all_subspaces(Field f, std::size_t n);
  //! Every subspace W with lower <= W <= upper, in canonical order.
  std::vector<Subspace> subspaces_between(Subspace const& lower, Subspace const& upper);

}  // namespace torsionlab

#endif  // TORSIONLAB_EXACTLIN_SUBSPACE_HPP_
