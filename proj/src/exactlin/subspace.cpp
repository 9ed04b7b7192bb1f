#include "torsionlab/exactlin/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    void require_finite(Field f, char const* what) {
      if (!f.is_finite()) {
        throw Error(std::string(what) + " needs a finite field");
      }
    }

    void check_pair(Subspace const& u, Subspace const& v) {
      if (u.field() != v.field()) {
        throw FieldMismatch("subspaces over " + u.field().to_string() + " and "
                            + v.field().to_string());
      }
      if (u.ambient_dim() != v.ambient_dim()) {
        throw DimensionMismatch("subspaces of k^" + std::to_string(u.ambient_dim())
                                + " and k^" + std::to_string(v.ambient_dim()));
      }
    }
  }  // namespace

  Subspace::Subspace(Field f, std::size_t ambient) : _basis(f, 0, ambient) {}

  Subspace::Subspace(RrefResult r, std::size_t ambient)
      : _basis(std::move(r.reduced)), _pivots(std::move(r.pivots)) {
    (void) ambient;
  }

  Subspace Subspace::span(Field f, std::size_t ambient, std::vector<Vector> const& vectors) {
    return row_space(Matrix::from_row_vectors(f, ambient, vectors));
  }

  Subspace Subspace::full(Field f, std::size_t ambient) {
    return row_space(Matrix::identity(f, ambient));
  }

  Subspace Subspace::row_space(Matrix const& m) {
    return Subspace(rref_with_pivots(m), m.cols());
  }

  std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      out.push_back(_basis.row(i));
    }
    return out;
  }

  Vector Subspace::reduce(Vector const& v) const {
    if (v.size() != ambient_dim()) {
      throw DimensionMismatch("vector of length " + std::to_string(v.size())
                              + " in k^" + std::to_string(ambient_dim()));
    }
    Vector r(v);
    for (std::size_t i = 0; i < _pivots.size(); ++i) {
      Scalar c = r[_pivots[i]];
      if (c.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] -= c * _basis.at(i, j);
      }
    }
    return r;
  }

  bool Subspace::contains(Vector const& v) const {
    return torsionlab::is_zero(reduce(v));
  }

  bool Subspace::contains(Subspace const& other) const {
    check_pair(*this, other);
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other._basis.row(i))) {
        return false;
      }
    }
    return true;
  }

  std::optional<Vector> Subspace::coordinates(Vector const& v) const {
    if (!contains(v)) {
      return std::nullopt;
    }
    // In RREF the coefficient of row i is the entry of v at pivot i.
    Vector c;
    c.reserve(dim());
    for (auto p : _pivots) {
      c.push_back(v[p]);
    }
    return c;
  }

  std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t              k = 0;
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      if (k < _pivots.size() && _pivots[k] == j) {
        ++k;
      } else {
        out.push_back(j);
      }
    }
    return out;
  }

  Subspace Subspace::orthogonal() const {
    return span(field(), ambient_dim(), kernel_basis(_basis));
  }

  Subspace Subspace::preimage(Matrix const& a) const {
    if (a.rows() != ambient_dim()) {
      throw DimensionMismatch("preimage: map lands in k^" + std::to_string(a.rows())
                              + ", subspace lives in k^" + std::to_string(ambient_dim()));
    }
    if (a.field() != field()) {
      throw FieldMismatch("preimage across fields");
    }
    Subspace perp = orthogonal();
    if (perp.is_zero()) {
      return full(field(), a.cols());
    }
    return span(field(), a.cols(), kernel_basis(perp.basis() * a));
  }

  Subspace Subspace::image_under(Matrix const& a) const {
    if (a.cols() != ambient_dim()) {
      throw DimensionMismatch("image_under: map from k^" + std::to_string(a.cols())
                              + " applied to a subspace of k^"
                              + std::to_string(ambient_dim()));
    }
    std::vector<Vector> imgs;
    for (std::size_t i = 0; i < dim(); ++i) {
      imgs.push_back(a.apply(_basis.row(i)));
    }
    return span(field(), a.rows(), imgs);
  }

  std::strong_ordering Subspace::operator<=>(Subspace const& other) const {
    if (auto c = ambient_dim() <=> other.ambient_dim(); c != 0) {
      return c;
    }
    if (auto c = dim() <=> other.dim(); c != 0) {
      return c;
    }
    auto const& a = _basis.entries();
    auto const& b = other._basis.entries();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (auto c = a[i] <=> b[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string Subspace::to_string() const {
    return "span" + _basis.to_string();
  }

  Subspace subspace_sum(Subspace const& u, Subspace const& v) {
    check_pair(u, v);
    return Subspace::row_space(u.basis().vstack(v.basis()));
  }

  Subspace subspace_intersect(Subspace const& u, Subspace const& v) {
    check_pair(u, v);
    // Zassenhaus: rows (u|u) and (v|0); rows with zero left half span u ∩ v.
    std::size_t n     = u.ambient_dim();
    Field       f     = u.field();
    Matrix      upper = u.basis().hstack(u.basis());
    Matrix      lower = v.basis().hstack(Matrix(f, v.dim(), n));
    auto [reduced, pivots] = rref_with_pivots(upper.vstack(lower));
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] >= n) {
        Vector r = reduced.row(i);
        rows.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());
      }
    }
    return Subspace::span(f, n, rows);
  }

  bool subspace_member(Vector const& v, Subspace const& u) {
    return u.contains(v);
  }

  std::pair<Subspace, Subspace> kernel_image(Matrix const& m) {
    Subspace ker = Subspace::span(m.field(), m.cols(), kernel_basis(m));
    Subspace im  = Subspace::row_space(m.transpose());
    return {std::move(ker), std::move(im)};
  }

  double point_count(Subspace const& u) {
    require_finite(u.field(), "point_count");
    return std::pow(static_cast<double>(u.field().characteristic()),
                    static_cast<double>(u.dim()));
  }

  void for_each_vector(Subspace const& u, std::function<bool(Vector const&)> const& fn) {
    require_finite(u.field(), "vector enumeration");
    Field         f = u.field();
    std::uint32_t q = f.characteristic();
    std::size_t   d = u.dim();
    std::vector<std::uint32_t> coeff(d, 0);
    while (true) {
      Vector v = zero_vector(f, u.ambient_dim());
      for (std::size_t i = 0; i < d; ++i) {
        if (coeff[i] == 0) {
          continue;
        }
        Scalar c(f, coeff[i]);
        for (std::size_t j = 0; j < v.size(); ++j) {
          v[j] += c * u.basis().at(i, j);
        }
      }
      if (!fn(v)) {
        return;
      }
      std::size_t i = 0;
      while (i < d && ++coeff[i] == q) {
        coeff[i] = 0;
        ++i;
      }
      if (i == d) {
        return;
      }
    }
  }

  std::vector<Vector> all_vectors(Subspace const& u) {
    std::vector<Vector> out;
    for_each_vector(u, [&](Vector const& v) {
      out.push_back(v);
      return true;
    });
    return out;
  }

  std::vector<Vector> all_vectors(Field f, std::size_t n) {
    return all_vectors(Subspace::full(f, n));
  }

  double subspace_count(Field f, std::size_t n) {
    require_finite(f, "subspace_count");
    double q     = f.characteristic();
    double total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      double g = 1;
      for (std::size_t i = 0; i < k; ++i) {
        g *= (std::pow(q, static_cast<double>(n - i)) - 1)
             / (std::pow(q, static_cast<double>(i + 1)) - 1);
      }
      total += g;
    }
    return total;
  }

  std::vector<Subspace> all_subspaces(Field f, std::size_t n) {
    require_finite(f, "subspace enumeration");
    std::uint32_t         q = f.characteristic();
    std::vector<Subspace> out;
    // Walk every pivot set; the free entries of an RREF matrix are the
    // positions right of a pivot in non-pivot columns.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> pivots;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::uint64_t{1} << j)) {
          pivots.push_back(j);
        }
      }
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t j = pivots[i] + 1; j < n; ++j) {
          if (!(mask & (std::uint64_t{1} << j))) {
            free_slots.emplace_back(i, j);
          }
        }
      }
      std::vector<std::uint32_t> coeff(free_slots.size(), 0);
      while (true) {
        Matrix m(f, pivots.size(), n);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          m.at(i, pivots[i]) = Scalar::one(f);
        }
        for (std::size_t s = 0; s < free_slots.size(); ++s) {
          m.at(free_slots[s].first, free_slots[s].second) = Scalar(f, coeff[s]);
        }
        out.push_back(Subspace::row_space(m));
        std::size_t s = 0;
        while (s < coeff.size() && ++coeff[s] == q) {
          coeff[s] = 0;
          ++s;
        }
        if (s == coeff.size()) {
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Subspace> subspaces_between(Subspace const& lower, Subspace const& upper) {
    if (!upper.contains(lower)) {
      throw Error("subspaces_between: lower bound not contained in upper bound");
    }
    std::set<Subspace> found;
    Matrix             to_ambient = upper.basis().transpose();
    for (auto const& s : all_subspaces(upper.field(), upper.dim())) {
      found.insert(subspace_sum(s.image_under(to_ambient), lower));
    }
    return {found.begin(), found.end()};
  }

}  // namespace torsionlab
