#include "torsionlab/exactlin/matrix.hpp"

#include <utility>

#include "torsionlab/error.hpp"

namespace torsionlab {

  Vector zero_vector(Field f, std::size_t n) {
    return Vector(n, Scalar::zero(f));
  }

  Vector unit_vector(Field f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i)  = Scalar::one(f);
    return v;
  }

  Vector add(Vector const& a, Vector const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("vector lengths differ");
    }
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] += b[i];
    }
    return r;
  }

  Vector subtract(Vector const& a, Vector const& b) {
    if (a.size() != b.size()) {
      throw DimensionMismatch("vector lengths differ");
    }
    Vector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] -= b[i];
    }
    return r;
  }

  Vector scale(Scalar const& c, Vector const& v) {
    Vector r(v);
    for (auto& x : r) {
      x = c * x;
    }
    return r;
  }

  bool is_zero(Vector const& v) {
    for (auto const& x : v) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  Vector make_vector(Field f, std::initializer_list<long long> entries) {
    Vector v;
    v.reserve(entries.size());
    for (auto e : entries) {
      v.emplace_back(f, e);
    }
    return v;
  }

  std::string to_string(Vector const& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) {
        s += ",";
      }
      s += v[i].to_string();
    }
    return s + ")";
  }

  Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
      : _field(f), _rows(rows), _cols(cols), _entries(rows * cols, Scalar::zero(f)) {}

  Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : _field(f), _rows(rows), _cols(cols), _entries(std::move(entries)) {
    if (_entries.size() != rows * cols) {
      throw DimensionMismatch("matrix has " + std::to_string(_entries.size())
                              + " entries, expected "
                              + std::to_string(rows * cols));
    }
    for (auto const& e : _entries) {
      if (e.field() != f) {
        throw FieldMismatch("matrix entry over " + e.field().to_string()
                            + " in a matrix over " + f.to_string());
      }
    }
  }

  Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = Scalar::one(f);
    }
    return m;
  }

  Matrix Matrix::from_rows(Field f,
                           std::size_t cols,
                           std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<Scalar> entries;
    for (auto const& r : rows) {
      if (r.size() != cols) {
        throw DimensionMismatch("ragged matrix literal");
      }
      for (auto e : r) {
        entries.emplace_back(f, e);
      }
    }
    return Matrix(f, rows.size(), cols, std::move(entries));
  }

  Matrix Matrix::from_row_vectors(Field f, std::size_t cols, std::vector<Vector> const& rows) {
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * cols);
    for (auto const& r : rows) {
      if (r.size() != cols) {
        throw DimensionMismatch("row length " + std::to_string(r.size())
                                + " != " + std::to_string(cols));
      }
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return Matrix(f, rows.size(), cols, std::move(entries));
  }

  Matrix Matrix::from_column_vectors(Field f, std::size_t rows, std::vector<Vector> const& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) {
        throw DimensionMismatch("column length " + std::to_string(cols[j].size())
                                + " != " + std::to_string(rows));
      }
      for (std::size_t i = 0; i < rows; ++i) {
        if (cols[j][i].field() != f) {
          throw FieldMismatch("column entry over a different field");
        }
        m.at(i, j) = cols[j][i];
      }
    }
    return m;
  }

  Vector Matrix::row(std::size_t i) const {
    return Vector(_entries.begin() + i * _cols, _entries.begin() + (i + 1) * _cols);
  }

  Vector Matrix::column(std::size_t j) const {
    Vector v;
    v.reserve(_rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      v.push_back(at(i, j));
    }
    return v;
  }

  Matrix Matrix::transpose() const {
    Matrix t(_field, _cols, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        t.at(j, i) = at(i, j);
      }
    }
    return t;
  }

  Vector Matrix::apply(Vector const& v) const {
    if (v.size() != _cols) {
      throw DimensionMismatch("cannot apply " + std::to_string(_rows) + "x"
                              + std::to_string(_cols) + " matrix to a vector of length "
                              + std::to_string(v.size()));
    }
    Vector r = zero_vector(_field, _rows);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        if (!v[j].is_zero()) {
          r[i] += at(i, j) * v[j];
        }
      }
    }
    return r;
  }

  void Matrix::check_compatible(Matrix const& other) const {
    if (_field != other._field) {
      throw FieldMismatch("matrices over " + _field.to_string() + " and "
                          + other._field.to_string());
    }
  }

  Matrix Matrix::operator*(Matrix const& other) const {
    check_compatible(other);
    if (_cols != other._rows) {
      throw DimensionMismatch("cannot multiply " + std::to_string(_rows) + "x"
                              + std::to_string(_cols) + " by "
                              + std::to_string(other._rows) + "x"
                              + std::to_string(other._cols));
    }
    Matrix r(_field, _rows, other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t k = 0; k < _cols; ++k) {
        auto const& a = at(i, k);
        if (a.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < other._cols; ++j) {
          r.at(i, j) += a * other.at(k, j);
        }
      }
    }
    return r;
  }

  Matrix Matrix::operator+(Matrix const& other) const {
    check_compatible(other);
    if (_rows != other._rows || _cols != other._cols) {
      throw DimensionMismatch("matrix sum shape mismatch");
    }
    Matrix r(*this);
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      r._entries[i] += other._entries[i];
    }
    return r;
  }

  Matrix Matrix::operator-(Matrix const& other) const {
    return *this + other.scaled(-Scalar::one(_field));
  }

  Matrix Matrix::scaled(Scalar const& c) const {
    Matrix r(*this);
    for (auto& e : r._entries) {
      e = c * e;
    }
    return r;
  }

  bool Matrix::is_zero() const {
    for (auto const& e : _entries) {
      if (!e.is_zero()) {
        return false;
      }
    }
    return true;
  }

  bool Matrix::is_identity() const {
    return _rows == _cols && *this == identity(_field, _rows);
  }

  std::size_t Matrix::rank() const {
    return rref_with_pivots(*this).pivots.size();
  }

  Matrix Matrix::vstack(Matrix const& other) const {
    check_compatible(other);
    if (_cols != other._cols) {
      throw DimensionMismatch("vstack column mismatch");
    }
    std::vector<Scalar> e(_entries);
    e.insert(e.end(), other._entries.begin(), other._entries.end());
    return Matrix(_field, _rows + other._rows, _cols, std::move(e));
  }

  Matrix Matrix::hstack(Matrix const& other) const {
    check_compatible(other);
    if (_rows != other._rows) {
      throw DimensionMismatch("hstack row mismatch");
    }
    Matrix r(_field, _rows, _cols + other._cols);
    for (std::size_t i = 0; i < _rows; ++i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        r.at(i, j) = at(i, j);
      }
      for (std::size_t j = 0; j < other._cols; ++j) {
        r.at(i, _cols + j) = other.at(i, j);
      }
    }
    return r;
  }

  std::string Matrix::to_string() const {
    if (_rows == 0) {
      return "[]";
    }
    std::string s = "[";
    for (std::size_t i = 0; i < _rows; ++i) {
      if (i) {
        s += ",";
      }
      s += "[";
      for (std::size_t j = 0; j < _cols; ++j) {
        if (j) {
          s += ",";
        }
        s += at(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

  RrefResult rref_with_pivots(Matrix const& m) {
    for (auto const& e : m.entries()) {
      if (e.field() != m.field()) {
        throw FieldMismatch("mixed fields in rref input");
      }
    }
    Field                    f    = m.field();
    std::size_t const        rows = m.rows();
    std::size_t const        cols = m.cols();
    Matrix                   a(m);
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && a.at(p, c).is_zero()) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      if (p != r) {
        for (std::size_t j = 0; j < cols; ++j) {
          std::swap(a.at(p, j), a.at(r, j));
        }
      }
      Scalar inv = a.at(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        a.at(r, j) *= inv;
      }
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r || a.at(i, c).is_zero()) {
          continue;
        }
        Scalar factor = a.at(i, c);
        for (std::size_t j = c; j < cols; ++j) {
          a.at(i, j) -= factor * a.at(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    std::vector<Scalar> kept(a.entries().begin(),
                             a.entries().begin() + static_cast<std::ptrdiff_t>(r * cols));
    return {Matrix(f, r, cols, std::move(kept)), std::move(pivots)};
  }

  Matrix rref(Matrix const& m) {
    return rref_with_pivots(m).reduced;
  }

  std::vector<Vector> kernel_basis(Matrix const& m) {
    auto [reduced, pivots] = rref_with_pivots(m);
    Field                    f    = m.field();
    std::size_t const        cols = m.cols();
    std::vector<bool>        is_pivot(cols, false);
    for (auto p : pivots) {
      is_pivot[p] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) {
        continue;
      }
      Vector v = unit_vector(f, cols, free);
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        v[pivots[i]] = -reduced.at(i, free);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<Vector> solve(Matrix const& m, Vector const& b) {
    if (b.size() != m.rows()) {
      throw DimensionMismatch("right-hand side length mismatch");
    }
    Matrix augmented = m.hstack(Matrix::from_column_vectors(m.field(), m.rows(), {b}));
    auto [reduced, pivots] = rref_with_pivots(augmented);
    if (!pivots.empty() && pivots.back() == m.cols()) {
      return std::nullopt;
    }
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      x[pivots[i]] = reduced.at(i, m.cols());
    }
    return x;
  }

  std::optional<Matrix> inverse(Matrix const& m) {
    if (m.rows() != m.cols()) {
      throw DimensionMismatch("inverse of a non-square matrix");
    }
    std::size_t n = m.rows();
    auto [reduced, pivots] = rref_with_pivots(m.hstack(Matrix::identity(m.field(), n)));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
      return std::nullopt;
    }
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv.at(i, j) = reduced.at(i, n + j);
      }
    }
    return inv;
  }

}  // namespace torsionlab
