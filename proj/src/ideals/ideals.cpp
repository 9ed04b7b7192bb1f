#include "torsionlab/ideals/ideals.hpp"

#include <algorithm>

#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    bool closed_under_precomposition(Category const& cat, std::size_t c, std::vector<Subspace> const& parts) {
      for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
        auto const& a = cat.arrows()[k];
        Matrix      p = cat.precompose_matrix(cat.arrow_morphism(k), c);
        for (auto const& v : parts[a.target].basis_vectors()) {
          if (!parts[a.source].contains(p.apply(v))) {
            return false;
          }
        }
      }
      return true;
    }

    void require_cat(CategoryPtr const& a, CategoryPtr const& b) {
      if (!same_category(a, b)) {
        throw CategoryMismatch("ideals over different categories");
      }
    }

    void require_target(RightIdeal const& i, RightIdeal const& j) {
      require_cat(i.category_ptr(), j.category_ptr());
      if (i.target() != j.target()) {
        throw TargetMismatch("right ideals into different objects");
      }
    }

    std::vector<Subspace> close_right(Category const& cat, std::size_t c, std::vector<Subspace> parts) {
      std::vector<Matrix> pre;
      for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
        pre.push_back(cat.precompose_matrix(cat.arrow_morphism(k), c));
      }
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t k = 0; k < cat.arrows().size(); ++k) {
          auto const& a   = cat.arrows()[k];
          Subspace    img = parts[a.target].image_under(pre[k]);
          if (!parts[a.source].contains(img)) {
            parts[a.source] = subspace_sum(parts[a.source], img);
            changed         = true;
          }
        }
      }
      return parts;
    }

    // Columns: image of each basis morphism of Hom(c', c) under f ↦ M(f) x.
    Matrix evaluation_matrix(Module const& m, std::size_t cp, std::size_t c, Vector const& x) {
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < m.cat().hom_dim(cp, c); ++i) {
        cols.push_back(m.action_basis(cp, c, i).apply(x));
      }
      return Matrix::from_column_vectors(m.field(), m.dim(cp), cols);
    }
  }  // namespace

  // ------------------------------------------------------------ RightIdeal

  RightIdeal::RightIdeal(CategoryPtr cat, std::size_t target, std::vector<Subspace> parts)
      : _cat(std::move(cat)), _target(target), _parts(std::move(parts)) {
    _cat->check_object(target);
    std::size_t n = _cat->object_count();
    if (_parts.size() != n) {
      throw DimensionMismatch("right ideal needs one subspace per object");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (_parts[c].ambient_dim() != _cat->hom_dim(c, target)) {
        throw DimensionMismatch("right ideal part at " + _cat->object_name(c)
                                + " has the wrong ambient dimension");
      }
      if (_parts[c].field() != _cat->field()) {
        throw FieldMismatch("right ideal part over the wrong field");
      }
    }
    if (!closed_under_precomposition(*_cat, target, _parts)) {
      throw InvariantViolation("subspaces are not closed under precomposition");
    }
  }

  RightIdeal RightIdeal::zero(CategoryPtr const& cat, std::size_t target) {
    cat->check_object(target);
    std::vector<Subspace> parts;
    for (std::size_t c = 0; c < cat->object_count(); ++c) {
      parts.emplace_back(cat->field(), cat->hom_dim(c, target));
    }
    return RightIdeal(cat, target, std::move(parts));
  }

  RightIdeal RightIdeal::whole(CategoryPtr const& cat, std::size_t target) {
    cat->check_object(target);
    std::vector<Subspace> parts;
    for (std::size_t c = 0; c < cat->object_count(); ++c) {
      parts.push_back(Subspace::full(cat->field(), cat->hom_dim(c, target)));
    }
    return RightIdeal(cat, target, std::move(parts));
  }

  RightIdeal RightIdeal::from_submodule(Submodule const& k, std::size_t target) {
    return RightIdeal(k.parent().category_ptr(), target, k.parts());
  }

  std::size_t RightIdeal::total_dim() const {
    std::size_t t = 0;
    for (auto const& p : _parts) {
      t += p.dim();
    }
    return t;
  }

  bool RightIdeal::is_whole() const {
    return std::all_of(_parts.begin(), _parts.end(), [](Subspace const& s) { return s.is_full(); });
  }

  bool RightIdeal::contains(Morphism const& f) const {
    _cat->check_morphism(f);
    if (f.target != _target) {
      throw TargetMismatch("morphism does not end at the ideal's target");
    }
    return _parts[f.source].contains(f.coords);
  }

  bool RightIdeal::contains(RightIdeal const& other) const {
    require_target(*this, other);
    for (std::size_t c = 0; c < _parts.size(); ++c) {
      if (!_parts[c].contains(other._parts[c])) {
        return false;
      }
    }
    return true;
  }

  std::vector<Morphism> RightIdeal::generators() const {
    std::vector<Morphism> out;
    for (std::size_t c = 0; c < _parts.size(); ++c) {
      for (auto const& v : _parts[c].basis_vectors()) {
        out.push_back({c, _target, v});
      }
    }
    return out;
  }

  Submodule RightIdeal::to_submodule() const {
    return Submodule(representable(_cat, _target), _parts);
  }

  bool RightIdeal::operator==(RightIdeal const& other) const {
    return _target == other._target && _parts == other._parts;
  }

  bool RightIdeal::operator<(RightIdeal const& other) const {
    if (_target != other._target) {
      return _target < other._target;
    }
    if (total_dim() != other.total_dim()) {
      return total_dim() < other.total_dim();
    }
    return std::lexicographical_compare(_parts.begin(), _parts.end(), other._parts.begin(),
                                        other._parts.end(),
                                        [](Subspace const& x, Subspace const& y) { return x < y; });
  }

  std::string RightIdeal::to_string() const {
    std::string s = "{";
    for (std::size_t c = 0; c < _parts.size(); ++c) {
      if (_parts[c].ambient_dim() == 0) {
        continue;
      }
      if (s.size() > 1) {
        s += ", ";
      }
      s += _cat->object_name(c) + ": ";
      if (_parts[c].is_zero()) {
        s += "0";
      } else {
        std::string gens;
        for (auto const& v : _parts[c].basis_vectors()) {
          std::string term;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) {
              continue;
            }
            if (!term.empty()) {
              term += " + ";
            }
            term += (v[i].is_one() ? "" : v[i].to_string() + "*") + _cat->basis_label(c, _target, i);
          }
          gens += (gens.empty() ? "" : ", ") + term;
        }
        s += "<" + gens + ">";
      }
    }
    return s + "}";
  }

  // --------------------------------------------------------- TwoSidedIdeal

  TwoSidedIdeal::TwoSidedIdeal(CategoryPtr cat, std::vector<Subspace> parts)
      : _cat(std::move(cat)), _parts(std::move(parts)) {
    std::size_t n = _cat->object_count();
    if (_parts.size() != n * n) {
      throw DimensionMismatch("two-sided ideal needs one subspace per object pair");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (part(a, b).ambient_dim() != _cat->hom_dim(a, b)) {
          throw DimensionMismatch("two-sided ideal part has the wrong ambient dimension");
        }
      }
    }
    for (std::size_t k = 0; k < _cat->arrows().size(); ++k) {
      auto const& ar = _cat->arrows()[k];
      Morphism    f  = _cat->arrow_morphism(k);
      for (std::size_t x = 0; x < n; ++x) {
        Matrix pre  = _cat->precompose_matrix(f, x);   // Hom(t, x) -> Hom(s, x)
        Matrix post = _cat->postcompose_matrix(f, x);  // Hom(x, s) -> Hom(x, t)
        for (auto const& v : part(ar.target, x).basis_vectors()) {
          if (!part(ar.source, x).contains(pre.apply(v))) {
            throw InvariantViolation("two-sided ideal not closed under precomposition");
          }
        }
        for (auto const& v : part(x, ar.source).basis_vectors()) {
          if (!part(x, ar.target).contains(post.apply(v))) {
            throw InvariantViolation("two-sided ideal not closed under postcomposition");
          }
        }
      }
    }
  }

  TwoSidedIdeal TwoSidedIdeal::zero(CategoryPtr const& cat) {
    std::vector<Subspace> parts;
    std::size_t           n = cat->object_count();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        parts.emplace_back(cat->field(), cat->hom_dim(a, b));
      }
    }
    return TwoSidedIdeal(cat, std::move(parts));
  }

  TwoSidedIdeal TwoSidedIdeal::whole(CategoryPtr const& cat) {
    std::vector<Subspace> parts;
    std::size_t           n = cat->object_count();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        parts.push_back(Subspace::full(cat->field(), cat->hom_dim(a, b)));
      }
    }
    return TwoSidedIdeal(cat, std::move(parts));
  }

  RightIdeal TwoSidedIdeal::component(std::size_t c) const {
    std::vector<Subspace> parts;
    for (std::size_t a = 0; a < _cat->object_count(); ++a) {
      parts.push_back(part(a, c));
    }
    return RightIdeal(_cat, c, std::move(parts));
  }

  // ------------------------------------------------------------ operations

  RightIdeal right_ideal_closure(CategoryPtr const& cat, std::size_t c, std::vector<Morphism> const& gens) {
    cat->check_object(c);
    std::size_t                      n = cat->object_count();
    std::vector<std::vector<Vector>> vecs(n);
    for (auto const& g : gens) {
      cat->check_morphism(g);
      if (g.target != c) {
        throw TargetMismatch("generator " + std::to_string(g.source) + " -> "
                             + std::to_string(g.target) + " does not end at "
                             + cat->object_name(c));
      }
      vecs[g.source].push_back(g.coords);
    }
    std::vector<Subspace> parts;
    for (std::size_t a = 0; a < n; ++a) {
      parts.push_back(Subspace::span(cat->field(), cat->hom_dim(a, c), vecs[a]));
    }
    return RightIdeal(cat, c, close_right(*cat, c, std::move(parts)));
  }

  TwoSidedIdeal two_sided_closure(CategoryPtr const& cat, std::vector<Morphism> const& gens) {
    std::size_t           n = cat->object_count();
    std::vector<Subspace> parts;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        parts.emplace_back(cat->field(), cat->hom_dim(a, b));
      }
    }
    for (auto const& g : gens) {
      cat->check_morphism(g);
      auto& p = parts[g.source * n + g.target];
      p       = subspace_sum(p, Subspace::span(cat->field(), p.ambient_dim(), {g.coords}));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < cat->arrows().size(); ++k) {
        auto const& ar = cat->arrows()[k];
        Morphism    f  = cat->arrow_morphism(k);
        for (std::size_t x = 0; x < n; ++x) {
          Subspace pre  = parts[ar.target * n + x].image_under(cat->precompose_matrix(f, x));
          Subspace post = parts[x * n + ar.source].image_under(cat->postcompose_matrix(f, x));
          auto&    ps   = parts[ar.source * n + x];
          auto&    pt   = parts[x * n + ar.target];
          if (!ps.contains(pre)) {
            ps      = subspace_sum(ps, pre);
            changed = true;
          }
          if (!pt.contains(post)) {
            pt      = subspace_sum(pt, post);
            changed = true;
          }
        }
      }
    }
    return TwoSidedIdeal(cat, std::move(parts));
  }

  std::vector<RightIdeal> enumerate_right_ideals(CategoryPtr const& cat, std::size_t c, double ceiling) {
    std::vector<RightIdeal> out;
    for (auto const& k : enumerate_submodules(representable(cat, c), ceiling)) {
      out.push_back(RightIdeal(cat, c, k.parts()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<RightIdeal> enumerate_right_ideals_bruteforce(CategoryPtr const& cat,
                                                            std::size_t        c,
                                                            double             ceiling) {
    std::vector<RightIdeal> out;
    for (auto const& k : enumerate_submodules_bruteforce(representable(cat, c), ceiling)) {
      out.push_back(RightIdeal(cat, c, k.parts()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  RightIdeal residuate(RightIdeal const& i, Morphism const& h) {
    auto const& cat = i.cat();
    cat.check_morphism(h);
    if (h.target != i.target()) {
      throw TargetMismatch("residuation needs h to end at the ideal's target");
    }
    std::vector<Subspace> parts;
    for (std::size_t c = 0; c < cat.object_count(); ++c) {
      parts.push_back(i.part(c).preimage(cat.postcompose_matrix(h, c)));
    }
    return RightIdeal(i.category_ptr(), h.source, std::move(parts));
  }

  RightIdeal annihilator(Module const& m, std::size_t c, Vector const& x) {
    m.cat().check_object(c);
    if (x.size() != m.dim(c)) {
      throw DimensionMismatch("element has the wrong length");
    }
    std::vector<Subspace> parts;
    for (std::size_t cp = 0; cp < m.cat().object_count(); ++cp) {
      parts.push_back(kernel_image(evaluation_matrix(m, cp, c, x)).first);
    }
    return RightIdeal(m.category_ptr(), c, std::move(parts));
  }

  RightIdeal annihilator(Element const& x) {
    return annihilator(x.module, x.object, x.vector);
  }

  RightIdeal residuate_rel(Module const& n, Submodule const& k, std::size_t c, Vector const& x) {
    if (!(k.parent() == n)) {
      throw CategoryMismatch("submodule of a different module");
    }
    if (x.size() != n.dim(c)) {
      throw DimensionMismatch("element has the wrong length");
    }
    std::vector<Subspace> parts;
    for (std::size_t cp = 0; cp < n.cat().object_count(); ++cp) {
      parts.push_back(k.part(cp).preimage(evaluation_matrix(n, cp, c, x)));
    }
    return RightIdeal(n.category_ptr(), c, std::move(parts));
  }

  RightIdeal ideal_intersect(RightIdeal const& i, RightIdeal const& j) {
    require_target(i, j);
    std::vector<Subspace> parts;
    for (std::size_t c = 0; c < i.parts().size(); ++c) {
      parts.push_back(subspace_intersect(i.part(c), j.part(c)));
    }
    return RightIdeal(i.category_ptr(), i.target(), std::move(parts));
  }

  RightIdeal ideal_sum(RightIdeal const& i, RightIdeal const& j) {
    require_target(i, j);
    std::vector<Subspace> parts;
    for (std::size_t c = 0; c < i.parts().size(); ++c) {
      parts.push_back(subspace_sum(i.part(c), j.part(c)));
    }
    return RightIdeal(i.category_ptr(), i.target(), std::move(parts));
  }

  TwoSidedIdeal two_sided_from_objects(CategoryPtr const& cat, std::vector<std::size_t> const& objs) {
    std::size_t n = cat->object_count();
    for (auto o : objs) {
      cat->check_object(o);
    }
    std::vector<Subspace> parts;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<Vector> vecs;
        for (auto c : objs) {
          for (std::size_t i = 0; i < cat->hom_dim(a, c); ++i) {
            for (std::size_t j = 0; j < cat->hom_dim(c, b); ++j) {
              vecs.push_back(cat->compose_basis(a, c, b, j, i));
            }
          }
        }
        parts.push_back(Subspace::span(cat->field(), cat->hom_dim(a, b), vecs));
      }
    }
    return TwoSidedIdeal(cat, std::move(parts));
  }

  Submodule trace_submodule(TwoSidedIdeal const& i, Module const& m) {
    require_cat(i.category_ptr(), m.category_ptr());
    std::size_t           n = m.cat().object_count();
    std::vector<Subspace> parts;
    for (std::size_t a = 0; a < n; ++a) {
      Subspace acc(m.field(), m.dim(a));
      for (std::size_t c = 0; c < n; ++c) {
        for (auto const& f : i.part(a, c).basis_vectors()) {
          acc = subspace_sum(acc, kernel_image(m.action(Morphism{a, c, f})).second);
        }
      }
      parts.push_back(std::move(acc));
    }
    return Submodule(m, std::move(parts));
  }

  TwoSidedIdeal module_annihilator(Module const& m) {
    auto const&           cat = m.cat();
    std::size_t           n   = cat.object_count();
    std::vector<Subspace> parts;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t h = cat.hom_dim(a, b);
        std::size_t e = m.dim(a) * m.dim(b);
        if (e == 0) {
          parts.push_back(Subspace::full(m.field(), h));
          continue;
        }
        std::vector<Vector> cols;
        for (std::size_t i = 0; i < h; ++i) {
          cols.push_back(m.action_basis(a, b, i).entries());
        }
        parts.push_back(kernel_image(Matrix::from_column_vectors(m.field(), e, cols)).first);
      }
    }
    return TwoSidedIdeal(m.category_ptr(), std::move(parts));
  }

  QuotientResult ideal_quotient(RightIdeal const& i) {
    Module p = representable(i.category_ptr(), i.target());
    return quotient(p, Submodule(p, i.parts()));
  }

  DensityReport is_dense(RightIdeal const& i, DensityMode mode) {
    auto const&   cat = i.cat();
    std::size_t   c   = i.target();
    DensityReport rep;
    for (std::size_t b = 0; b < cat.object_count(); ++b) {
      for (auto const& g : cat.all_morphisms(b, c)) {
        RightIdeal               r = residuate(i, g);
        std::optional<Morphism> h;
        for (std::size_t d = 0; d < cat.object_count() && !h; ++d) {
          if (!r.part(d).is_zero()) {
            h = Morphism{d, b, r.part(d).basis_vectors().front()};
          }
        }
        if (!h && mode == DensityMode::literal) {
          h = cat.zero(b, b);
        }
        if (!h) {
          rep.dense   = false;
          rep.failing = g;
          return rep;
        }
        rep.witnesses.push_back({g, *h});
      }
    }
    return rep;
  }

  CyclicDecomposition cyclic_decomposition(Module const& m) {
    CyclicDecomposition out;
    Field               f = m.field();
    std::vector<Element> gens;
    for (std::size_t c = 0; c < m.cat().object_count(); ++c) {
      std::vector<Vector> xs;
      if (f.is_finite() && m.dim(c) <= 2) {
        for (auto const& v : all_vectors(f, m.dim(c))) {
          if (!is_zero(v)) {
            xs.push_back(v);
          }
        }
      } else {
        for (std::size_t t = 0; t < m.dim(c); ++t) {
          xs.push_back(unit_vector(f, m.dim(c), t));
        }
      }
      for (auto& x : xs) {
        out.summands.push_back({c, x, annihilator(m, c, x)});
        gens.push_back({m, c, std::move(x)});
      }
    }
    out.surjective = submodule_generated(m, gens) == Submodule::whole(m);
    return out;
  }

}  // namespace torsionlab
