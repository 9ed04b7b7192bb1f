#include "torsionlab/catcore/category.hpp"

#include <algorithm>
#include <map>

#include "torsionlab/error.hpp"
#include "torsionlab/exactlin/subspace.hpp"

namespace torsionlab {

  std::size_t Category::object_index(std::string const& name) const {
    for (std::size_t i = 0; i < _objects.size(); ++i) {
      if (_objects[i] == name) {
        return i;
      }
    }
    throw UnknownObject("unknown object '" + name + "'");
  }

  std::size_t Category::total_hom_dim() const {
    std::size_t total = 0;
    for (auto const& b : _basis) {
      total += b.size();
    }
    return total;
  }

  std::size_t Category::total_hom_dim_into(std::size_t c) const {
    check_object(c);
    std::size_t total = 0;
    for (std::size_t b = 0; b < object_count(); ++b) {
      total += hom_dim(b, c);
    }
    return total;
  }

  std::string Category::path_label(Path const& p) const {
    if (p.arrows.empty()) {
      return "id(" + _objects.at(p.source) + ")";
    }
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!s.empty()) {
        s += "*";
      }
      s += _arrows.at(*it).name;
    }
    return s;
  }

  std::string Category::basis_label(std::size_t a, std::size_t b, std::size_t i) const {
    return path_label(basis_path(a, b, i));
  }

  Vector const& Category::compose_basis(std::size_t a,
                                        std::size_t b,
                                        std::size_t c,
                                        std::size_t j,
                                        std::size_t i) const {
    return _compose.at(index3(a, b, c)).at(j * hom_dim(a, b) + i);
  }

  void Category::check_object(std::size_t c) const {
    if (c >= _objects.size()) {
      throw UnknownObject("object index " + std::to_string(c) + " out of range");
    }
  }

  void Category::check_morphism(Morphism const& m) const {
    check_object(m.source);
    check_object(m.target);
    if (m.coords.size() != hom_dim(m.source, m.target)) {
      throw DimensionMismatch("morphism has " + std::to_string(m.coords.size())
                              + " coordinates, Hom(" + _objects[m.source] + ","
                              + _objects[m.target] + ") has dimension "
                              + std::to_string(hom_dim(m.source, m.target)));
    }
    for (auto const& x : m.coords) {
      if (x.field() != _field) {
        throw FieldMismatch("morphism coordinates over the wrong field");
      }
    }
  }

  Morphism Category::zero(std::size_t a, std::size_t b) const {
    check_object(a);
    check_object(b);
    return {a, b, zero_vector(_field, hom_dim(a, b))};
  }

  Morphism Category::identity(std::size_t c) const {
    check_object(c);
    return {c, c, unit_vector(_field, hom_dim(c, c), _identity[c])};
  }

  Morphism Category::basis_morphism(std::size_t a, std::size_t b, std::size_t i) const {
    check_object(a);
    check_object(b);
    return {a, b, unit_vector(_field, hom_dim(a, b), i)};
  }

  Morphism Category::arrow_morphism(std::size_t k) const {
    return _arrow_morphisms.at(k);
  }

  std::vector<Morphism> Category::all_morphisms(std::size_t a, std::size_t b) const {
    std::vector<Morphism> out;
    for (auto& v : all_vectors(_field, hom_dim(a, b))) {
      out.push_back({a, b, std::move(v)});
    }
    return out;
  }

  Morphism Category::compose(Morphism const& g, Morphism const& f) const {
    check_morphism(g);
    check_morphism(f);
    if (f.target != g.source) {
      throw TargetMismatch("cannot compose: " + _objects[f.target] + " != "
                           + _objects[g.source]);
    }
    std::size_t a = f.source, b = f.target, c = g.target;
    Vector      r = zero_vector(_field, hom_dim(a, c));
    for (std::size_t j = 0; j < g.coords.size(); ++j) {
      if (g.coords[j].is_zero()) {
        continue;
      }
      for (std::size_t i = 0; i < f.coords.size(); ++i) {
        if (f.coords[i].is_zero()) {
          continue;
        }
        Scalar      c_ji = g.coords[j] * f.coords[i];
        auto const& v    = compose_basis(a, b, c, j, i);
        for (std::size_t k = 0; k < r.size(); ++k) {
          if (!v[k].is_zero()) {
            r[k] += c_ji * v[k];
          }
        }
      }
    }
    return {a, c, std::move(r)};
  }

  Matrix Category::postcompose_matrix(Morphism const& g, std::size_t a) const {
    check_morphism(g);
    check_object(a);
    std::size_t         dim_in = hom_dim(a, g.source);
    std::vector<Vector> cols;
    cols.reserve(dim_in);
    for (std::size_t i = 0; i < dim_in; ++i) {
      cols.push_back(compose(g, basis_morphism(a, g.source, i)).coords);
    }
    return Matrix::from_column_vectors(_field, hom_dim(a, g.target), cols);
  }

  Matrix Category::precompose_matrix(Morphism const& f, std::size_t c) const {
    check_morphism(f);
    check_object(c);
    std::size_t         dim_in = hom_dim(f.target, c);
    std::vector<Vector> cols;
    cols.reserve(dim_in);
    for (std::size_t j = 0; j < dim_in; ++j) {
      cols.push_back(compose(basis_morphism(f.target, c, j), f).coords);
    }
    return Matrix::from_column_vectors(_field, hom_dim(f.source, c), cols);
  }

  Category Category::opposite() const {
    Category op;
    op._field    = _field;
    op._objects  = _objects;
    op._opposite = !_opposite;
    for (auto const& a : _arrows) {
      op._arrows.push_back({a.name, a.target, a.source});
    }
    std::size_t n = _objects.size();
    op._basis.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (auto const& p : _basis[index2(b, a)]) {
          Path q{a, b, {p.arrows.rbegin(), p.arrows.rend()}};
          op._basis[index2(a, b)].push_back(std::move(q));
        }
      }
    }
    op._compose.resize(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          // basis_j^op(b,c) ∘op basis_i^op(a,b) = basis_i(b,a) ∘ basis_j(c,b)
          std::size_t dab = hom_dim(b, a), dbc = hom_dim(c, b);
          auto&       table = op._compose[index3(a, b, c)];
          table.resize(dab * dbc);
          for (std::size_t j = 0; j < dbc; ++j) {
            for (std::size_t i = 0; i < dab; ++i) {
              table[j * dab + i] = compose_basis(c, b, a, i, j);
            }
          }
        }
      }
    }
    op._identity = _identity;
    for (auto const& m : _arrow_morphisms) {
      op._arrow_morphisms.push_back({m.target, m.source, m.coords});
    }
    return op;
  }

  std::vector<std::string> Category::verify_laws() const {
    std::vector<std::string> violations;
    std::size_t              n = _objects.size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < hom_dim(a, b); ++i) {
          auto f = basis_morphism(a, b, i);
          if (compose(identity(b), f) != f) {
            violations.push_back("left identity fails on " + basis_label(a, b, i));
          }
          if (compose(f, identity(a)) != f) {
            violations.push_back("right identity fails on " + basis_label(a, b, i));
          }
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t d = 0; d < n; ++d) {
            for (std::size_t i = 0; i < hom_dim(a, b); ++i) {
              auto f = basis_morphism(a, b, i);
              for (std::size_t j = 0; j < hom_dim(b, c); ++j) {
                auto g = basis_morphism(b, c, j);
                auto gf = compose(g, f);
                for (std::size_t k = 0; k < hom_dim(c, d); ++k) {
                  auto h = basis_morphism(c, d, k);
                  if (compose(compose(h, g), f) != compose(h, gf)) {
                    violations.push_back("associativity fails on ("
                                         + basis_label(c, d, k) + ", "
                                         + basis_label(b, c, j) + ", "
                                         + basis_label(a, b, i) + ")");
                  }
                }
              }
            }
          }
        }
      }
    }
    return violations;
  }

  namespace {
    // All paths of length < bound between every ordered pair of objects,
    // sorted by (length, arrow sequence).
    std::vector<std::vector<Path>> enumerate_paths(CategoryPresentation const& p) {
      std::size_t                    n = p.objects.size();
      std::vector<std::vector<Path>> paths(n * n);
      std::vector<Path>              frontier;
      for (std::size_t a = 0; a < n; ++a) {
        frontier.push_back({a, a, {}});
      }
      std::size_t length = 0;
      while (!frontier.empty() && length < p.nilpotency_bound) {
        std::vector<Path> next;
        for (auto const& path : frontier) {
          paths[path.source * n + path.target].push_back(path);
          if (length + 1 >= p.nilpotency_bound) {
            continue;
          }
          for (std::size_t k = 0; k < p.arrows.size(); ++k) {
            if (p.arrows[k].source == path.target) {
              Path longer = path;
              longer.arrows.push_back(k);
              longer.target = p.arrows[k].target;
              next.push_back(std::move(longer));
            }
          }
        }
        frontier = std::move(next);
        ++length;
      }
      for (auto& v : paths) {
        std::sort(v.begin(), v.end());
      }
      return paths;
    }
  }  // namespace

  Category compile_quiver(CategoryPresentation const& p) {
    p.validate();
    Field       f = p.field;
    std::size_t n = p.objects.size();
    std::size_t L = p.nilpotency_bound;

    auto paths = enumerate_paths(p);
    // Column of each path in its Hom space, in reversed order so that RREF
    // pivots land on the largest path of each relation.
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> rev_index(n * n);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      std::size_t N = paths[ab].size();
      for (std::size_t i = 0; i < N; ++i) {
        rev_index[ab][paths[ab][i].arrows] = N - 1 - i;
      }
    }

    std::vector<std::vector<Vector>> relation_rows(n * n);
    for (auto const& rel : p.relations) {
      std::size_t x = rel.terms.front().path.source;
      std::size_t y = rel.terms.front().path.target;
      for (std::size_t a = 0; a < n; ++a) {
        for (auto const& pre : paths[a * n + x]) {
          for (std::size_t b = 0; b < n; ++b) {
            auto const& targets = paths[a * n + b];
            for (auto const& post : paths[y * n + b]) {
              Vector row  = zero_vector(f, targets.size());
              bool   any  = false;
              for (auto const& t : rel.terms) {
                std::vector<std::size_t> combined = pre.arrows;
                combined.insert(combined.end(), t.path.arrows.begin(), t.path.arrows.end());
                combined.insert(combined.end(), post.arrows.begin(), post.arrows.end());
                if (combined.size() >= L) {
                  continue;
                }
                row[rev_index[a * n + b].at(combined)] += t.coefficient;
                any = true;
              }
              if (any && !is_zero(row)) {
                relation_rows[a * n + b].push_back(std::move(row));
              }
            }
          }
        }
      }
    }

    Category cat;
    cat._field   = f;
    cat._objects = p.objects;
    cat._arrows  = p.arrows;
    cat._basis.resize(n * n);

    // normal_form[ab][path index] = coordinates over the standard paths.
    std::vector<std::vector<Vector>> normal_form(n * n);
    for (std::size_t ab = 0; ab < n * n; ++ab) {
      std::size_t N   = paths[ab].size();
      Subspace    rel = Subspace::span(f, N, relation_rows[ab]);
      std::vector<bool> leading(N, false);
      for (auto col : rel.pivots()) {
        leading[N - 1 - col] = true;
      }
      std::vector<std::size_t> standard;
      for (std::size_t i = 0; i < N; ++i) {
        if (!leading[i]) {
          standard.push_back(i);
          cat._basis[ab].push_back(paths[ab][i]);
        } else if (paths[ab][i].arrows.empty()) {
          throw DegeneratePresentation("relations force id(" + p.objects[ab / n]
                                       + ") to vanish");
        }
      }
      for (std::size_t i = 0; i < N; ++i) {
        Vector reduced = rel.reduce(unit_vector(f, N, N - 1 - i));
        Vector coords;
        coords.reserve(standard.size());
        for (auto s : standard) {
          coords.push_back(reduced[N - 1 - s]);
        }
        normal_form[ab].push_back(std::move(coords));
      }
    }

    cat._identity.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      cat._identity[c] = 0;  // the identity path is the smallest standard path
    }

    cat._compose.resize(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          auto const& ab    = cat._basis[a * n + b];
          auto const& bc    = cat._basis[b * n + c];
          std::size_t dac   = cat._basis[a * n + c].size();
          auto&       table = cat._compose[(a * n + b) * n + c];
          table.reserve(ab.size() * bc.size());
          for (auto const& g : bc) {
            for (auto const& h : ab) {
              std::vector<std::size_t> combined = h.arrows;
              combined.insert(combined.end(), g.arrows.begin(), g.arrows.end());
              if (combined.size() >= L) {
                table.push_back(zero_vector(f, dac));
                continue;
              }
              auto const& idx = rev_index[a * n + c];
              std::size_t N   = paths[a * n + c].size();
              table.push_back(normal_form[a * n + c][N - 1 - idx.at(combined)]);
            }
          }
        }
      }
    }

    for (std::size_t k = 0; k < p.arrows.size(); ++k) {
      std::size_t a = p.arrows[k].source, b = p.arrows[k].target;
      if (L <= 1) {
        cat._arrow_morphisms.push_back({a, b, zero_vector(f, cat._basis[a * n + b].size())});
        continue;
      }
      std::size_t N = paths[a * n + b].size();
      std::size_t i = N - 1 - rev_index[a * n + b].at({k});
      cat._arrow_morphisms.push_back({a, b, normal_form[a * n + b][i]});
    }
    return cat;
  }

  std::string morphism_label(Category const& cat, Morphism const& f) {
    cat.check_morphism(f);
    std::string s;
    for (std::size_t i = 0; i < f.coords.size(); ++i) {
      if (f.coords[i].is_zero()) {
        continue;
      }
      if (!s.empty()) {
        s += " + ";
      }
      if (!f.coords[i].is_one()) {
        s += f.coords[i].to_string() + "*";
      }
      s += cat.basis_label(f.source, f.target, i);
    }
    return s.empty() ? "0" : s;
  }

  std::size_t exact_nilpotency_bound(CategoryPresentation p, std::size_t max_bound) {
    for (std::size_t L = 1; L <= max_bound; ++L) {
      p.nilpotency_bound = L + 1;
      Category    cat       = compile_quiver(p);
      bool        survivors = false;
      std::size_t n         = cat.object_count();
      for (std::size_t a = 0; a < n && !survivors; ++a) {
        for (std::size_t b = 0; b < n && !survivors; ++b) {
          for (std::size_t i = 0; i < cat.hom_dim(a, b); ++i) {
            if (cat.basis_path(a, b, i).length() == L) {
              survivors = true;
              break;
            }
          }
        }
      }
      if (!survivors) {
        return L;
      }
    }
    throw DegeneratePresentation("Hom spaces do not stabilise below nilpotency bound "
                                 + std::to_string(max_bound));
  }

}  // namespace torsionlab
