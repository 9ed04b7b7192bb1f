#include "torsionlab/modfun/module.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "torsionlab/config.hpp"
#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    double resolve(double ceiling) {
      return ceiling > 0 ? ceiling : default_ceiling();
    }

    void require_same(CategoryPtr const& a, CategoryPtr const& b, char const* what) {
      if (!same_category(a, b)) {
        throw CategoryMismatch(std::string(what) + ": modules live over different categories");
      }
    }

    Matrix sum_action(Module const& m, std::size_t from, std::size_t to, Vector const& coords) {
      Matrix out(m.field(), m.dim(from), m.dim(to));
      for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].is_zero()) {
          out = out + m.action_basis(from, to, i).scaled(coords[i]);
        }
      }
      return out;
    }

    bool full_rank_square(Matrix const& m) {
      return m.rows() == m.cols() && m.rank() == m.rows();
    }
  }  // namespace

  bool same_category(CategoryPtr const& a, CategoryPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  // ---------------------------------------------------------------- Module

  Module::Module(CategoryPtr cat, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> action) {
    if (!cat) {
      throw Error("module needs a category");
    }
    std::size_t n = cat->object_count();
    if (dims.size() != n) {
      throw DimensionMismatch("module has " + std::to_string(dims.size())
                              + " dimensions for " + std::to_string(n) + " objects");
    }
    if (action.size() != n * n) {
      throw DimensionMismatch("module action table has the wrong size");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto const& mats = action[a * n + b];
        if (mats.size() != cat->hom_dim(a, b)) {
          throw DimensionMismatch("module action missing basis morphisms of Hom("
                                  + cat->object_name(a) + "," + cat->object_name(b) + ")");
        }
        for (auto const& m : mats) {
          if (m.field() != cat->field()) {
            throw FieldMismatch("module action over the wrong field");
          }
          if (m.rows() != dims[a] || m.cols() != dims[b]) {
            throw DimensionMismatch("action of a morphism " + cat->object_name(a) + " -> "
                                    + cat->object_name(b) + " must be "
                                    + std::to_string(dims[a]) + "x" + std::to_string(dims[b]));
          }
        }
      }
    }
    _data = std::make_shared<Data const>(Data{std::move(cat), std::move(dims), std::move(action)});
  }

  Module Module::from_arrow_matrices(CategoryPtr cat,
                                     std::vector<std::size_t> dims,
                                     std::vector<Matrix> const& arrow_mats) {
    if (!cat) {
      throw Error("module needs a category");
    }
    auto const& arrows = cat->arrows();
    std::size_t n      = cat->object_count();
    if (arrow_mats.size() != arrows.size()) {
      throw DimensionMismatch("expected " + std::to_string(arrows.size()) + " arrow matrices, got "
                              + std::to_string(arrow_mats.size()));
    }
    if (dims.size() != n) {
      throw DimensionMismatch("module has " + std::to_string(dims.size())
                              + " dimensions for " + std::to_string(n) + " objects");
    }
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      auto const& m = arrow_mats[k];
      if (m.field() != cat->field()) {
        throw FieldMismatch("arrow matrix over the wrong field");
      }
      if (m.rows() != dims[arrows[k].source] || m.cols() != dims[arrows[k].target]) {
        throw DimensionMismatch("matrix for arrow '" + arrows[k].name + "' must be "
                                + std::to_string(dims[arrows[k].source]) + "x"
                                + std::to_string(dims[arrows[k].target]));
      }
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat->hom_dim(a, b); ++i) {
          Matrix acc = Matrix::identity(cat->field(), dims[a]);
          for (auto k : cat->basis_path(a, b, i).arrows) {
            acc = acc * arrow_mats[k];
          }
          action[a * n + b].push_back(std::move(acc));
        }
      }
    }
    return Module(std::move(cat), std::move(dims), std::move(action));
  }

  Module Module::zero(CategoryPtr cat) {
    std::size_t n = cat->object_count();
    std::vector<Matrix> mats;
    for (std::size_t k = 0; k < cat->arrows().size(); ++k) {
      mats.emplace_back(cat->field(), 0, 0);
    }
    return from_arrow_matrices(std::move(cat), std::vector<std::size_t>(n, 0), mats);
  }

  std::size_t Module::total_dim() const {
    std::size_t t = 0;
    for (auto d : _data->dims) {
      t += d;
    }
    return t;
  }

  Matrix const& Module::action_basis(std::size_t c_from, std::size_t c_to, std::size_t i) const {
    return _data->action.at(c_from * _data->dims.size() + c_to).at(i);
  }

  Matrix Module::action(Morphism const& f) const {
    cat().check_morphism(f);
    return sum_action(*this, f.source, f.target, f.coords);
  }

  Matrix Module::arrow_action(std::size_t k) const {
    return action(cat().arrow_morphism(k));
  }

  Module Module::rebind(CategoryPtr cat) const {
    require_same(_data->cat, cat, "rebind");
    return Module(std::make_shared<Data const>(Data{std::move(cat), _data->dims, _data->action}));
  }

  bool Module::operator==(Module const& other) const {
    return same_category(_data->cat, other._data->cat) && _data->dims == other._data->dims
           && _data->action == other._data->action;
  }

  std::string Module::to_string() const {
    std::string s = "dims (";
    for (std::size_t c = 0; c < _data->dims.size(); ++c) {
      s += (c ? "," : "") + std::to_string(_data->dims[c]);
    }
    s += ")";
    for (std::size_t k = 0; k < cat().arrows().size(); ++k) {
      s += "; " + cat().arrows()[k].name + " = " + arrow_action(k).to_string();
    }
    return s;
  }

  std::vector<std::string> check_functoriality(Module const& m) {
    std::vector<std::string> out;
    auto const&              cat = m.cat();
    std::size_t              n   = cat.object_count();
    for (std::size_t c = 0; c < n; ++c) {
      if (!m.action(cat.identity(c)).is_identity()) {
        out.push_back("M(id(" + cat.object_name(c) + ")) is not the identity");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          for (std::size_t i = 0; i < cat.hom_dim(a, b); ++i) {
            for (std::size_t j = 0; j < cat.hom_dim(b, c); ++j) {
              Matrix lhs = sum_action(m, a, c, cat.compose_basis(a, b, c, j, i));
              Matrix rhs = m.action_basis(a, b, i) * m.action_basis(b, c, j);
              if (lhs != rhs) {
                out.push_back("M(g*f) != M(f)M(g) for f = " + cat.basis_label(a, b, i)
                              + ", g = " + cat.basis_label(b, c, j));
              }
            }
          }
        }
      }
    }
    return out;
  }

  Module representable(CategoryPtr const& cat, std::size_t c) {
    cat->check_object(c);
    std::size_t              n = cat->object_count();
    std::vector<std::size_t> dims(n);
    for (std::size_t b = 0; b < n; ++b) {
      dims[b] = cat->hom_dim(b, c);
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat->hom_dim(a, b); ++i) {
          action[a * n + b].push_back(cat->precompose_matrix(cat->basis_morphism(a, b, i), c));
        }
      }
    }
    return Module(cat, std::move(dims), std::move(action));
  }

  // -------------------------------------------------------------- NatTrans

  std::vector<std::string> NatTrans::naturality_violations() const {
    std::vector<std::string> out;
    require_same(source.category_ptr(), target.category_ptr(), "naturality");
    auto const& cat = source.cat();
    std::size_t n   = cat.object_count();
    if (comp.size() != n) {
      out.push_back("wrong number of components");
      return out;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (comp[c].rows() != target.dim(c) || comp[c].cols() != source.dim(c)) {
        out.push_back("component at " + cat.object_name(c) + " has the wrong shape");
      }
    }
    if (!out.empty()) {
      return out;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat.hom_dim(a, b); ++i) {
          if (target.action_basis(a, b, i) * comp[b] != comp[a] * source.action_basis(a, b, i)) {
            out.push_back("not natural at " + cat.basis_label(a, b, i));
          }
        }
      }
    }
    return out;
  }

  bool NatTrans::is_mono() const {
    return std::all_of(comp.begin(), comp.end(), [](Matrix const& m) { return m.rank() == m.cols(); });
  }

  bool NatTrans::is_epi() const {
    return std::all_of(comp.begin(), comp.end(), [](Matrix const& m) { return m.rank() == m.rows(); });
  }

  bool NatTrans::is_iso() const {
    return std::all_of(comp.begin(), comp.end(), full_rank_square);
  }

  bool NatTrans::is_zero() const {
    return std::all_of(comp.begin(), comp.end(), [](Matrix const& m) { return m.is_zero(); });
  }

  NatTrans NatTrans::after(NatTrans const& other) const {
    if (!(other.target.dims() == source.dims())) {
      throw TargetMismatch("natural transformations are not composable");
    }
    std::vector<Matrix> c;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      c.push_back(comp[i] * other.comp[i]);
    }
    return {other.source, target, std::move(c)};
  }

  Vector NatTrans::apply(std::size_t c, Vector const& v) const {
    return comp.at(c).apply(v);
  }

  Vector NatTrans::flatten() const {
    Vector out;
    for (auto const& m : comp) {
      out.insert(out.end(), m.entries().begin(), m.entries().end());
    }
    return out;
  }

  // ------------------------------------------------------------- Submodule

  bool is_stable(Module const& m, std::vector<Subspace> const& parts) {
    auto const& cat = m.cat();
    for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
      auto const& a   = cat.arrows()[k];
      Matrix      act = m.arrow_action(k);
      for (auto const& v : parts[a.target].basis_vectors()) {
        if (!parts[a.source].contains(act.apply(v))) {
          return false;
        }
      }
    }
    return true;
  }

  Submodule::Submodule(Module parent, std::vector<Subspace> parts)
      : _parent(std::move(parent)), _parts(std::move(parts)) {
    std::size_t n = _parent.cat().object_count();
    if (_parts.size() != n) {
      throw DimensionMismatch("submodule needs one subspace per object");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (_parts[c].ambient_dim() != _parent.dim(c)) {
        throw DimensionMismatch("submodule part at " + _parent.cat().object_name(c)
                                + " has the wrong ambient dimension");
      }
      if (_parts[c].field() != _parent.field()) {
        throw FieldMismatch("submodule part over the wrong field");
      }
    }
    if (!is_stable(_parent, _parts)) {
      throw InvariantViolation("subspaces are not stable under the module action");
    }
  }

  Submodule Submodule::zero(Module const& parent) {
    std::vector<Subspace> parts;
    for (auto d : parent.dims()) {
      parts.emplace_back(parent.field(), d);
    }
    return Submodule(parent, std::move(parts));
  }

  Submodule Submodule::whole(Module const& parent) {
    std::vector<Subspace> parts;
    for (auto d : parent.dims()) {
      parts.push_back(Subspace::full(parent.field(), d));
    }
    return Submodule(parent, std::move(parts));
  }

  std::size_t Submodule::total_dim() const {
    std::size_t t = 0;
    for (auto const& p : _parts) {
      t += p.dim();
    }
    return t;
  }

  bool Submodule::contains(Submodule const& other) const {
    for (std::size_t c = 0; c < _parts.size(); ++c) {
      if (!_parts[c].contains(other._parts.at(c))) {
        return false;
      }
    }
    return true;
  }

  std::pair<Module, NatTrans> Submodule::as_module() const {
    auto const&              cat = _parent.cat();
    std::size_t              n   = cat.object_count();
    Field                    f   = _parent.field();
    std::vector<std::size_t> dims(n);
    for (std::size_t c = 0; c < n; ++c) {
      dims[c] = _parts[c].dim();
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat.hom_dim(a, b); ++i) {
          std::vector<Vector> cols;
          for (auto const& v : _parts[b].basis_vectors()) {
            auto coords = _parts[a].coordinates(_parent.action_basis(a, b, i).apply(v));
            if (!coords) {
              throw InvariantViolation("submodule is not stable");
            }
            cols.push_back(std::move(*coords));
          }
          action[a * n + b].push_back(Matrix::from_column_vectors(f, dims[a], cols));
        }
      }
    }
    Module              sub(_parent.category_ptr(), dims, std::move(action));
    std::vector<Matrix> inc;
    for (std::size_t c = 0; c < n; ++c) {
      inc.push_back(Matrix::from_column_vectors(f, _parent.dim(c), _parts[c].basis_vectors()));
    }
    NatTrans incl{sub, _parent, std::move(inc)};
    return {std::move(sub), std::move(incl)};
  }

  bool Submodule::operator==(Submodule const& other) const {
    return _parts == other._parts;
  }

  bool Submodule::operator<(Submodule const& other) const {
    if (total_dim() != other.total_dim()) {
      return total_dim() < other.total_dim();
    }
    return std::lexicographical_compare(_parts.begin(), _parts.end(), other._parts.begin(),
                                        other._parts.end(),
                                        [](Subspace const& x, Subspace const& y) { return x < y; });
  }

  Submodule close_to_submodule(Module const& m, std::vector<Subspace> parts) {
    auto const& cat     = m.cat();
    bool        changed = true;
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
      acts.push_back(m.arrow_action(k));
    }
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
        auto const& a   = cat.arrows()[k];
        Subspace    img = parts[a.target].image_under(acts[k]);
        if (!parts[a.source].contains(img)) {
          parts[a.source] = subspace_sum(parts[a.source], img);
          changed         = true;
        }
      }
    }
    return Submodule(m, std::move(parts));
  }

  Submodule submodule_generated(Module const& m, std::vector<Element> const& gens) {
    std::size_t                      n = m.cat().object_count();
    std::vector<std::vector<Vector>> vecs(n);
    for (auto const& g : gens) {
      if (!(g.module == m)) {
        throw CategoryMismatch("generator does not live in this module");
      }
      m.cat().check_object(g.object);
      if (g.vector.size() != m.dim(g.object)) {
        throw DimensionMismatch("generator has the wrong length");
      }
      vecs[g.object].push_back(g.vector);
    }
    std::vector<Subspace> parts;
    for (std::size_t c = 0; c < n; ++c) {
      parts.push_back(Subspace::span(m.field(), m.dim(c), vecs[c]));
    }
    return close_to_submodule(m, std::move(parts));
  }

  // -------------------------------------------------------------- quotient

  namespace {
    Matrix projection_matrix(Subspace const& k) {
      Field               f    = k.field();
      auto                free = k.free_columns();
      std::vector<Vector> cols;
      for (std::size_t t = 0; t < k.ambient_dim(); ++t) {
        Vector r = k.reduce(unit_vector(f, k.ambient_dim(), t));
        Vector col;
        for (auto j : free) {
          col.push_back(r[j]);
        }
        cols.push_back(std::move(col));
      }
      return Matrix::from_column_vectors(f, free.size(), cols);
    }

    Matrix section_matrix(Subspace const& k) {
      Field               f    = k.field();
      auto                free = k.free_columns();
      std::vector<Vector> cols;
      for (auto j : free) {
        cols.push_back(unit_vector(f, k.ambient_dim(), j));
      }
      return Matrix::from_column_vectors(f, k.ambient_dim(), cols);
    }
  }  // namespace

  QuotientResult quotient(Module const& m, Submodule const& k) {
    if (!(k.parent() == m)) {
      throw CategoryMismatch("quotient: submodule of a different module");
    }
    auto const&         cat = m.cat();
    std::size_t         n   = cat.object_count();
    std::vector<Matrix> proj, sect;
    std::vector<std::size_t> dims(n);
    for (std::size_t c = 0; c < n; ++c) {
      proj.push_back(projection_matrix(k.part(c)));
      sect.push_back(section_matrix(k.part(c)));
      dims[c] = proj.back().rows();
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat.hom_dim(a, b); ++i) {
          action[a * n + b].push_back(proj[a] * m.action_basis(a, b, i) * sect[b]);
        }
      }
    }
    Module q(m.category_ptr(), std::move(dims), std::move(action));
    return {q, NatTrans{m, q, std::move(proj)}};
  }

  Vector quotient_class(Submodule const& k, std::size_t c, Vector const& x) {
    Vector r = k.part(c).reduce(x);
    Vector out;
    for (auto j : k.part(c).free_columns()) {
      out.push_back(r[j]);
    }
    return out;
  }

  // ------------------------------------------------------------- coproduct

  CoproductResult coproduct(CategoryPtr const& cat, std::vector<Module> const& ms) {
    for (auto const& m : ms) {
      require_same(cat, m.category_ptr(), "coproduct");
    }
    std::size_t              n = cat->object_count();
    Field                    f = cat->field();
    std::vector<std::size_t> dims(n, 0);
    for (auto const& m : ms) {
      for (std::size_t c = 0; c < n; ++c) {
        dims[c] += m.dim(c);
      }
    }
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat->hom_dim(a, b); ++i) {
          Matrix      big(f, dims[a], dims[b]);
          std::size_t ra = 0, rb = 0;
          for (auto const& m : ms) {
            auto const& blk = m.action_basis(a, b, i);
            for (std::size_t r = 0; r < blk.rows(); ++r) {
              for (std::size_t s = 0; s < blk.cols(); ++s) {
                big.at(ra + r, rb + s) = blk.at(r, s);
              }
            }
            ra += m.dim(a);
            rb += m.dim(b);
          }
          action[a * n + b].push_back(std::move(big));
        }
      }
    }
    Module                sum(cat, dims, std::move(action));
    std::vector<NatTrans> inj;
    std::vector<std::size_t> offset(n, 0);
    for (auto const& m : ms) {
      std::vector<Matrix> comp;
      for (std::size_t c = 0; c < n; ++c) {
        Matrix e(f, dims[c], m.dim(c));
        for (std::size_t r = 0; r < m.dim(c); ++r) {
          e.at(offset[c] + r, r) = Scalar::one(f);
        }
        offset[c] += m.dim(c);
        comp.push_back(std::move(e));
      }
      inj.push_back({m, sum, std::move(comp)});
    }
    return {std::move(sum), std::move(inj)};
  }

  // ------------------------------------------------------------------ dual

  Module dual(Module const& m) {
    auto        op = std::make_shared<Category const>(m.cat().opposite());
    std::size_t n  = op->object_count();
    std::vector<std::vector<Matrix>> action(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t i = 0; i < op->hom_dim(x, y); ++i) {
          action[x * n + y].push_back(m.action_basis(y, x, i).transpose());
        }
      }
    }
    return Module(op, m.dims(), std::move(action));
  }

  Module dual_corepresentable(CategoryPtr const& cat, std::size_t c) {
    auto op = std::make_shared<Category const>(cat->opposite());
    return dual(representable(op, c)).rebind(cat);
  }

  // ---------------------------------------------------------- Hom solving

  std::vector<NatTrans> hom_modules(Module const& m, Module const& n) {
    require_same(m.category_ptr(), n.category_ptr(), "hom_modules");
    auto const&              cat = m.cat();
    std::size_t              no  = cat.object_count();
    Field                    f   = m.field();
    std::vector<std::size_t> offset(no + 1, 0);
    for (std::size_t c = 0; c < no; ++c) {
      offset[c + 1] = offset[c] + n.dim(c) * m.dim(c);
    }
    std::size_t vars = offset[no];
    if (vars == 0) {
      return {};
    }
    // X_c is n.dim(c) x m.dim(c); variable (r, s) of X_c sits at offset[c] + r*m.dim(c) + s.
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
      std::size_t cp = cat.arrows()[k].source;
      std::size_t c  = cat.arrows()[k].target;
      Matrix      nf = n.arrow_action(k);  // n.dim(cp) x n.dim(c)
      Matrix      mf = m.arrow_action(k);  // m.dim(cp) x m.dim(c)
      // nf X_c - X_cp mf = 0, entry (r, s) with r < n.dim(cp), s < m.dim(c).
      for (std::size_t r = 0; r < n.dim(cp); ++r) {
        for (std::size_t s = 0; s < m.dim(c); ++s) {
          Vector row = zero_vector(f, vars);
          for (std::size_t t = 0; t < n.dim(c); ++t) {
            row[offset[c] + t * m.dim(c) + s] = row[offset[c] + t * m.dim(c) + s] + nf.at(r, t);
          }
          for (std::size_t t = 0; t < m.dim(cp); ++t) {
            row[offset[cp] + r * m.dim(cp) + t] = row[offset[cp] + r * m.dim(cp) + t] - mf.at(t, s);
          }
          if (!is_zero(row)) {
            rows.push_back(std::move(row));
          }
        }
      }
    }
    std::vector<Vector> sol;
    if (rows.empty()) {
      for (std::size_t v = 0; v < vars; ++v) {
        sol.push_back(unit_vector(f, vars, v));
      }
    } else {
      sol = kernel_basis(Matrix::from_row_vectors(f, vars, rows));
    }
    std::vector<NatTrans> out;
    for (auto const& v : sol) {
      std::vector<Matrix> comp;
      for (std::size_t c = 0; c < no; ++c) {
        std::vector<Scalar> e(v.begin() + static_cast<long>(offset[c]),
                              v.begin() + static_cast<long>(offset[c + 1]));
        comp.emplace_back(f, n.dim(c), m.dim(c), std::move(e));
      }
      out.push_back({m, n, std::move(comp)});
    }
    return out;
  }

  std::size_t hom_dim(Module const& m, Module const& n) {
    return hom_modules(m, n).size();
  }

  Submodule kernel(NatTrans const& eta) {
    std::vector<Subspace> parts;
    for (auto const& c : eta.comp) {
      parts.push_back(kernel_image(c).first);
    }
    return Submodule(eta.source, std::move(parts));
  }

  Submodule image(NatTrans const& eta) {
    std::vector<Subspace> parts;
    for (auto const& c : eta.comp) {
      parts.push_back(kernel_image(c).second);
    }
    return Submodule(eta.target, std::move(parts));
  }

  bool is_isomorphic(Module const& m, Module const& n, double ceiling) {
    require_same(m.category_ptr(), n.category_ptr(), "is_isomorphic");
    if (m.dims() != n.dims()) {
      return false;
    }
    if (m.total_dim() == 0) {
      return true;
    }
    auto basis = hom_modules(m, n);
    if (basis.empty()) {
      return false;
    }
    for (auto const& b : basis) {
      if (b.is_iso()) {
        return true;
      }
    }
    Field f = m.field();
    if (!f.is_finite()) {
      throw Error("is_isomorphic: exhaustive search needs a finite field");
    }
    double count = std::pow(static_cast<double>(f.characteristic()), static_cast<double>(basis.size()));
    if (count > resolve(ceiling)) {
      throw CeilingExceeded("is_isomorphic", count, resolve(ceiling));
    }
    Field const fld = f;
    bool        found = false;
    for_each_vector(Subspace::full(fld, basis.size()), [&](Vector const& coeff) {
      std::size_t no = basis.front().comp.size();
      for (std::size_t c = 0; c < no; ++c) {
        Matrix acc(fld, n.dim(c), m.dim(c));
        for (std::size_t i = 0; i < basis.size(); ++i) {
          if (!coeff[i].is_zero()) {
            acc = acc + basis[i].comp[c].scaled(coeff[i]);
          }
        }
        if (!full_rank_square(acc)) {
          return true;
        }
      }
      found = true;
      return false;
    });
    return found;
  }

  // ------------------------------------------------ submodule enumeration

  std::vector<Submodule> enumerate_submodules(Module const& m, double ceiling) {
    Field f = m.field();
    if (!f.is_finite()) {
      throw Error("submodule enumeration needs a finite field");
    }
    std::size_t n        = m.cat().object_count();
    double      vectors  = 0;
    for (std::size_t c = 0; c < n; ++c) {
      vectors += std::pow(static_cast<double>(f.characteristic()), static_cast<double>(m.dim(c)));
    }
    if (vectors > resolve(ceiling)) {
      throw CeilingExceeded("enumerate_submodules", vectors, resolve(ceiling));
    }
    std::set<Submodule> principal;
    for (std::size_t c = 0; c < n; ++c) {
      for (auto const& v : all_vectors(f, m.dim(c))) {
        if (!is_zero(v)) {
          principal.insert(submodule_generated(m, {Element{m, c, v}}));
        }
      }
    }
    std::vector<Submodule> gens(principal.begin(), principal.end());
    std::set<Submodule>    seen{Submodule::zero(m)};
    std::vector<Submodule> frontier{Submodule::zero(m)};
    while (!frontier.empty()) {
      std::vector<Submodule> next;
      for (auto const& s : frontier) {
        for (auto const& g : gens) {
          if (s.contains(g)) {
            continue;
          }
          std::vector<Subspace> parts;
          for (std::size_t c = 0; c < n; ++c) {
            parts.push_back(subspace_sum(s.part(c), g.part(c)));
          }
          Submodule j(m, std::move(parts));
          if (seen.insert(j).second) {
            next.push_back(j);
          }
          if (static_cast<double>(seen.size()) > resolve(ceiling)) {
            throw CeilingExceeded("enumerate_submodules", static_cast<double>(seen.size()),
                                  resolve(ceiling));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<Submodule> enumerate_submodules_bruteforce(Module const& m, double ceiling) {
    Field f = m.field();
    if (!f.is_finite()) {
      throw Error("submodule enumeration needs a finite field");
    }
    std::size_t n        = m.cat().object_count();
    double      estimate = 1;
    for (std::size_t c = 0; c < n; ++c) {
      estimate *= subspace_count(f, m.dim(c));
    }
    if (estimate > resolve(ceiling)) {
      throw CeilingExceeded("enumerate_submodules_bruteforce", estimate, resolve(ceiling));
    }
    std::vector<std::vector<Subspace>> choices;
    for (std::size_t c = 0; c < n; ++c) {
      choices.push_back(all_subspaces(f, m.dim(c)));
    }
    std::vector<Submodule>   out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<Subspace> parts;
      for (std::size_t c = 0; c < n; ++c) {
        parts.push_back(choices[c][idx[c]]);
      }
      if (is_stable(m, parts)) {
        out.emplace_back(m, std::move(parts));
      }
      std::size_t c = 0;
      while (c < n && ++idx[c] == choices[c].size()) {
        idx[c] = 0;
        ++c;
      }
      if (c == n) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace torsionlab
