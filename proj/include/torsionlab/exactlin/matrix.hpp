#ifndef TORSIONLAB_EXACTLIN_MATRIX_HPP_
#define TORSIONLAB_EXACTLIN_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/exactlin/field.hpp"

namespace torsionlab {

  using Vector = std::vector<Scalar>;

  Vector zero_vector(Field f, std::size_t n);
  Vector unit_vector(Field f, std::size_t n, std::size_t i);
  Vector add(Vector const& a, Vector const& b);
  Vector subtract(Vector const& a, Vector const& b);
  Vector scale(Scalar const& c, Vector const& v);
  bool   is_zero(Vector const& v);
  //! Builds a vector from integer literals, reduced into f.
  Vector make_vector(Field f, std::initializer_list<long long> entries);
  std::string to_string(Vector const& v);

  //! Dense row-major matrix over one exact field. A rows x cols matrix acts on
  //! column vectors, i.e. as a linear map k^cols -> k^rows.
  class Matrix {
   public:
    Matrix() : Matrix(Field::gf(2), 0, 0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols);
    //! Throws DimensionMismatch or FieldMismatch on malformed input.
    Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(Field f, std::size_t n);
    //! Integer literals, reduced into f. Every row must have `cols` entries.
    static Matrix from_rows(Field                                          f,
                            std::size_t                                    cols,
                            std::initializer_list<std::initializer_list<long long>> rows);
    static Matrix from_row_vectors(Field f, std::size_t cols, std::vector<Vector> const& rows);
    static Matrix from_column_vectors(Field f, std::size_t rows, std::vector<Vector> const& cols);

    Field field() const noexcept {
      return _field;
    }
    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::vector<Scalar> const& entries() const noexcept {
      return _entries;
    }

    Scalar const& at(std::size_t i, std::size_t j) const {
      return _entries[i * _cols + j];
    }
    Scalar& at(std::size_t i, std::size_t j) {
      return _entries[i * _cols + j];
    }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;

    Matrix transpose() const;
    Vector apply(Vector const& v) const;
    Matrix operator*(Matrix const& other) const;
    Matrix operator+(Matrix const& other) const;
    Matrix operator-(Matrix const& other) const;
    Matrix scaled(Scalar const& c) const;

    bool is_zero() const;
    bool is_identity() const;
    std::size_t rank() const;

    //! Stack `other` below this matrix.
    Matrix vstack(Matrix const& other) const;
    Matrix hstack(Matrix const& other) const;

    bool operator==(Matrix const& other) const = default;

    //! "[[a,b],[c,d]]"; a matrix with no rows prints as "[]".
    std::string to_string() const;

   private:
    void check_compatible(Matrix const& other) const;

    Field               _field;
    std::size_t         _rows;
    std::size_t         _cols;
    std::vector<Scalar> _entries;
  };

  //! Reduced row echelon form with zero rows removed. Throws FieldMismatch if
  //! the entries do not share the matrix field.
  Matrix rref(Matrix const& m);

  //! rref plus the pivot column of each returned row.
  struct RrefResult {
    Matrix                   reduced;
    std::vector<std::size_t> pivots;
  };
  RrefResult rref_with_pivots(Matrix const& m);

  //! Basis (as rows) of {v : m v = 0}.
  std::vector<Vector> kernel_basis(Matrix const& m);

  //! Solves m x = b; empty if inconsistent.
  std::optional<Vector> solve(Matrix const& m, Vector const& b);

  //! Inverse of a square invertible matrix; empty if singular.
  std::optional<Matrix> inverse(Matrix const& m);

}  // namespace torsionlab

#endif  // TORSIONLAB_EXACTLIN_MATRIX_HPP_
