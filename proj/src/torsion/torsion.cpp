#include "torsionlab/torsion/torsion.hpp"

#include <cmath>
#include <set>

#include "torsionlab/config.hpp"
#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    constexpr double small_hom_points = 4096;

    double resolve(double ceiling) {
      return ceiling > 0 ? ceiling : default_ceiling();
    }

    std::string dims_string(Module const& m) {
      std::string s = "(";
      for (std::size_t c = 0; c < m.dims().size(); ++c) {
        s += (c ? "," : "") + std::to_string(m.dim(c));
      }
      return s + ")";
    }

    //! All vectors of Hom(b, c) when that set is small, else its basis.
    std::vector<Morphism> probe_morphisms(Category const& cat, std::size_t b, std::size_t c) {
      Field f = cat.field();
      if (f.is_finite()
          && std::pow(static_cast<double>(f.characteristic()), static_cast<double>(cat.hom_dim(b, c)))
                 <= small_hom_points) {
        return cat.all_morphisms(b, c);
      }
      std::vector<Morphism> out;
      for (std::size_t i = 0; i < cat.hom_dim(b, c); ++i) {
        out.push_back(cat.basis_morphism(b, c, i));
      }
      return out;
    }

    //! Vectors of a subspace of Hom(b, c) as morphisms: all of them when few, else a basis.
    std::vector<Morphism> probe_subspace(std::size_t b, std::size_t c, Subspace const& s) {
      std::vector<Morphism> out;
      if (s.field().is_finite() && point_count(s) <= small_hom_points) {
        for (auto const& v : all_vectors(s)) {
          out.push_back({b, c, v});
        }
      } else {
        for (auto const& v : s.basis_vectors()) {
          out.push_back({b, c, v});
        }
      }
      return out;
    }

    std::string ideal_desc(RightIdeal const& i) {
      return "ideal into " + i.cat().object_name(i.target()) + " " + i.to_string();
    }
  }  // namespace

  // ---------------------------------------------------------- FilterFamily

  FilterFamily::FilterFamily(CategoryPtr cat, std::vector<std::vector<RightIdeal>> base)
      : _cat(std::move(cat)), _base(std::move(base)) {
    std::size_t n = _cat->object_count();
    if (_base.size() != n) {
      throw DimensionMismatch("filter needs a base for every object");
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (_base[c].empty()) {
        throw NotAFilter("filter base at " + _cat->object_name(c) + " is empty");
      }
      RightIdeal m = RightIdeal::whole(_cat, c);
      for (auto const& i : _base[c]) {
        if (!same_category(i.category_ptr(), _cat) || i.target() != c) {
          throw TargetMismatch("filter base at " + _cat->object_name(c)
                               + " holds an ideal into another object");
        }
        m = ideal_intersect(m, i);
      }
      _meet.push_back(std::move(m));
    }
  }

  FilterFamily FilterFamily::principal(CategoryPtr const& cat, std::vector<RightIdeal> gens) {
    std::vector<std::vector<RightIdeal>> base;
    for (auto& g : gens) {
      base.push_back({std::move(g)});
    }
    return FilterFamily(cat, std::move(base));
  }

  FilterFamily FilterFamily::improper(CategoryPtr const& cat) {
    std::vector<RightIdeal> gens;
    for (std::size_t c = 0; c < cat->object_count(); ++c) {
      gens.push_back(RightIdeal::whole(cat, c));
    }
    return principal(cat, std::move(gens));
  }

  FilterFamily FilterFamily::full(CategoryPtr const& cat) {
    std::vector<RightIdeal> gens;
    for (std::size_t c = 0; c < cat->object_count(); ++c) {
      gens.push_back(RightIdeal::zero(cat, c));
    }
    return principal(cat, std::move(gens));
  }

  std::string FilterFamily::to_string() const {
    std::string s;
    for (std::size_t c = 0; c < _base.size(); ++c) {
      s += (c ? "; " : "") + _cat->object_name(c) + ": ";
      for (std::size_t k = 0; k < _base[c].size(); ++k) {
        s += (k ? " & " : "") + _base[c][k].to_string();
      }
    }
    return s;
  }

  bool filter_member(FilterFamily const& f, RightIdeal const& i) {
    if (!same_category(f.category_ptr(), i.category_ptr())) {
      throw CategoryMismatch("filter and ideal over different categories");
    }
    return i.contains(f.meet(i.target()));
  }

  std::vector<FilterFamily> enumerate_filter_families(CategoryPtr const& cat, double ceiling) {
    std::size_t                          n = cat->object_count();
    std::vector<std::vector<RightIdeal>> ideals;
    double                               count = 1;
    for (std::size_t c = 0; c < n; ++c) {
      ideals.push_back(enumerate_right_ideals(cat, c, ceiling));
      count *= static_cast<double>(ideals.back().size());
    }
    if (count > resolve(ceiling)) {
      throw CeilingExceeded("enumerate_filter_families", count, resolve(ceiling));
    }
    std::vector<FilterFamily> out;
    std::vector<std::size_t>  idx(n, 0);
    while (true) {
      std::vector<RightIdeal> gens;
      for (std::size_t c = 0; c < n; ++c) {
        gens.push_back(ideals[c][idx[c]]);
      }
      out.push_back(FilterFamily::principal(cat, std::move(gens)));
      std::size_t c = n;
      while (c > 0 && ++idx[c - 1] == ideals[c - 1].size()) {
        idx[c - 1] = 0;
        --c;
      }
      if (c == 0) {
        return out;
      }
    }
  }

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "pass";
      case Verdict::fail:
        return "fail";
      case Verdict::not_checked:
        return "not checked";
    }
    return "?";
  }

  // ---------------------------------------------------------------- axioms

  AxiomReport check_axioms(FilterFamily const& f, double ceiling) {
    AxiomReport rep;
    auto const& cat = f.cat();
    std::size_t n   = cat.object_count();
    rep.t1          = {Verdict::pass, "upward closed by base representation", ""};
    rep.t2          = {Verdict::pass, "meet-closed by base representation", ""};

    rep.t3 = {Verdict::pass, "checked on the meet and every base ideal", ""};
    for (std::size_t c = 0; c < n && rep.t3.verdict == Verdict::pass; ++c) {
      std::vector<RightIdeal> probes = f.base(c);
      probes.push_back(f.meet(c));
      for (auto const& i : probes) {
        for (std::size_t b = 0; b < n && rep.t3.verdict == Verdict::pass; ++b) {
          for (auto const& h : probe_morphisms(cat, b, c)) {
            RightIdeal r = residuate(i, h);
            if (!filter_member(f, r)) {
              rep.t3.verdict        = Verdict::fail;
              rep.t3.counterexample = "C=" + cat.object_name(c) + ", I=" + i.to_string()
                                      + ", B=" + cat.object_name(b) + ", h=" + morphism_label(cat, h)
                                      + ": (I:h)=" + r.to_string() + " not in F_"
                                      + cat.object_name(b);
              break;
            }
          }
        }
      }
    }

    rep.t4 = {Verdict::pass, "every ideal tested against J = meet of the base", ""};
    try {
      for (std::size_t c = 0; c < n && rep.t4.verdict == Verdict::pass; ++c) {
        RightIdeal const& j = f.meet(c);
        for (auto const& i : enumerate_right_ideals(f.category_ptr(), c, ceiling)) {
          if (filter_member(f, i)) {
            continue;
          }
          bool all_in = true;
          for (std::size_t b = 0; b < n && all_in; ++b) {
            for (auto const& h : probe_subspace(b, c, j.part(b))) {
              if (!filter_member(f, residuate(i, h))) {
                all_in = false;
                break;
              }
            }
          }
          if (all_in) {
            rep.t4.verdict        = Verdict::fail;
            rep.t4.counterexample = "C=" + cat.object_name(c) + ", I=" + i.to_string()
                                    + " not in F_" + cat.object_name(c) + " although (I:h) in F for every h in J="
                                    + j.to_string();
            break;
          }
        }
      }
    } catch (CeilingExceeded const& e) {
      rep.t4 = {Verdict::not_checked, e.what(), ""};
    }
    return rep;
  }

  bool t3_oracle(FilterFamily const& f, double ceiling) {
    auto const& cat = f.cat();
    std::size_t n   = cat.object_count();
    for (std::size_t c = 0; c < n; ++c) {
      for (auto const& i : enumerate_right_ideals(f.category_ptr(), c, ceiling)) {
        if (!filter_member(f, i)) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          for (auto const& h : cat.all_morphisms(b, c)) {
            if (!filter_member(f, residuate(i, h))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  bool torsion_member(FilterFamily const& f, Module const& m) {
    for (std::size_t c = 0; c < m.cat().object_count(); ++c) {
      for (std::size_t t = 0; t < m.dim(c); ++t) {
        if (!filter_member(f, annihilator(m, c, unit_vector(m.field(), m.dim(c), t)))) {
          return false;
        }
      }
    }
    return true;
  }

  bool torsion_member_all_vectors(FilterFamily const& f, Module const& m) {
    for (std::size_t c = 0; c < m.cat().object_count(); ++c) {
      for (auto const& v : all_vectors(m.field(), m.dim(c))) {
        if (!filter_member(f, annihilator(m, c, v))) {
          return false;
        }
      }
    }
    return true;
  }

  // --------------------------------------------------------------- classes

  ClassPredicate class_predicate(Universe const& u, ModuleClassSpec const& cls) {
    return std::visit(
        [&u](auto const& spec) -> ClassPredicate {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, FilterInduced>) {
            FilterFamily f = spec.filter;
            return [f](Module const& m) { return torsion_member(f, m); };
          } else if constexpr (std::is_same_v<T, VanishingAt>) {
            std::vector<std::size_t> objs = spec.objects;
            return [objs](Module const& m) {
              for (auto o : objs) {
                if (m.dim(o) != 0) {
                  return false;
                }
              }
              return true;
            };
          } else if constexpr (std::is_same_v<T, SigmaOf>) {
            Module g = spec.generator;
            return [g](Module const& m) {
              auto r = sigma_member(g, m);
              if (r.verdict == SigmaVerdict::exhausted) {
                throw Error("sigma membership undecided within the search bound");
              }
              return r.verdict == SigmaVerdict::member;
            };
          } else {
            std::set<std::size_t> idx(spec.indices.begin(), spec.indices.end());
            Universe const*       up = &u;
            return [idx, up](Module const& m) {
              auto i = up->index_of(m);
              if (!i) {
                throw Error("module " + dims_string(m) + " lies outside the universe");
              }
              return idx.count(*i) > 0;
            };
          }
        },
        cls);
  }

  FilterFamily filter_from_class(Universe const& u, ModuleClassSpec const& cls, double ceiling) {
    auto                    pred = class_predicate(u, cls);
    auto const&             cat  = u.cat;
    std::vector<RightIdeal> gens;
    for (std::size_t c = 0; c < cat->object_count(); ++c) {
      std::vector<RightIdeal> members;
      auto                    all = enumerate_right_ideals(cat, c, ceiling);
      for (auto const& i : all) {
        if (pred(ideal_quotient(i).module)) {
          members.push_back(i);
        }
      }
      auto in = [&members](RightIdeal const& i) {
        for (auto const& m : members) {
          if (m == i) {
            return true;
          }
        }
        return false;
      };
      if (!in(RightIdeal::whole(cat, c))) {
        throw NotAFilter("class does not contain the zero module (whole ideal into "
                         + cat->object_name(c) + " missing)");
      }
      for (auto const& i : members) {
        for (auto const& j : all) {
          if (j.contains(i) && !in(j)) {
            throw NotAFilter("T1 fails at " + cat->object_name(c) + ": " + i.to_string()
                             + " is in the family but " + j.to_string() + " is not");
          }
        }
        for (auto const& j : members) {
          if (!in(ideal_intersect(i, j))) {
            throw NotAFilter("T2 fails at " + cat->object_name(c) + ": " + i.to_string() + " and "
                             + j.to_string() + " are in the family, their meet is not");
          }
        }
      }
      RightIdeal meet = RightIdeal::whole(cat, c);
      for (auto const& i : members) {
        meet = ideal_intersect(meet, i);
      }
      gens.push_back(std::move(meet));
    }
    return FilterFamily::principal(cat, std::move(gens));
  }

  RoundtripReport roundtrip_filter(Universe const& u, FilterFamily const& f, double ceiling) {
    RoundtripReport rep;
    FilterFamily    g = [&] {
      try {
        return filter_from_class(u, FilterInduced{f}, ceiling);
      } catch (NotAFilter const& e) {
        rep.error = e.what();
        throw;
      }
    }();
    rep.recovered   = g;
    rep.ideal_level = true;
    for (std::size_t c = 0; c < f.cat().object_count(); ++c) {
      for (auto const& i : enumerate_right_ideals(f.category_ptr(), c, ceiling)) {
        bool a = filter_member(f, i), b = filter_member(g, i);
        if (a != b) {
          rep.ideal_level = false;
          rep.ideal_mismatches.push_back(ideal_desc(i) + (a ? " in F but not in F'" : " in F' but not in F"));
        }
      }
    }
    rep.class_level = true;
    for (std::size_t k = 0; k < u.modules.size(); ++k) {
      bool a = torsion_member(f, u.modules[k]), b = torsion_member(g, u.modules[k]);
      if (a != b) {
        rep.class_level = false;
        rep.class_mismatches.push_back("universe #" + std::to_string(k) + " "
                                       + dims_string(u.modules[k]) + (a ? " in T but not T'" : " in T' but not T"));
      }
    }
    return rep;
  }

  RoundtripReport class_roundtrip(Universe const& u, ModuleClassSpec const& cls, double ceiling) {
    RoundtripReport rep;
    auto            pred = class_predicate(u, cls);
    try {
      rep.recovered = filter_from_class(u, cls, ceiling);
    } catch (NotAFilter const& e) {
      rep.error = e.what();
      return rep;
    }
    rep.ideal_level = true;
    rep.class_level = true;
    for (std::size_t k = 0; k < u.modules.size(); ++k) {
      bool a = pred(u.modules[k]), b = torsion_member(*rep.recovered, u.modules[k]);
      if (a != b) {
        rep.class_level = false;
        rep.class_mismatches.push_back("universe #" + std::to_string(k) + " "
                                       + dims_string(u.modules[k]) + (a ? " in T but not T'" : " in T' but not T"));
      }
    }
    return rep;
  }

  // --------------------------------------------------------------- closure

  ClosureReport closure_report(Universe const& u, ClassPredicate const& in_class) {
    ClosureReport     rep;
    std::vector<bool> member;
    for (auto const& m : u.modules) {
      member.push_back(in_class(m));
    }
    auto fail = [](ClosureResult& r, std::string w) {
      if (r.closed) {
        r.closed  = false;
        r.witness = std::move(w);
      }
    };
    for (std::size_t k = 0; k < u.modules.size(); ++k) {
      Module const& l = u.modules[k];
      for (auto const& sub : enumerate_submodules(l)) {
        auto kmod = sub.as_module().first;
        auto q    = quotient(l, sub).module;
        bool ks = in_class(kmod), qs = in_class(q);
        if (member[k]) {
          ++rep.subobjects.checked;
          ++rep.quotients.checked;
          if (!ks) {
            fail(rep.subobjects, "submodule " + dims_string(kmod) + " of universe #" + std::to_string(k)
                                     + " " + dims_string(l) + " leaves the class");
          }
          if (!qs) {
            fail(rep.quotients, "quotient " + dims_string(q) + " of universe #" + std::to_string(k)
                                    + " " + dims_string(l) + " leaves the class");
          }
        }
        if (ks && qs) {
          ++rep.extensions.checked;
          if (!member[k]) {
            fail(rep.extensions, "universe #" + std::to_string(k) + " " + dims_string(l)
                                     + " extends " + dims_string(q) + " by " + dims_string(kmod)
                                     + ", both in the class, but is not");
          }
        }
      }
    }
    for (std::size_t i = 0; i < u.modules.size(); ++i) {
      for (std::size_t j = i; j < u.modules.size(); ++j) {
        if (!member[i] || !member[j]) {
          continue;
        }
        bool fits = true;
        for (std::size_t c = 0; c < u.cat->object_count(); ++c) {
          fits = fits && u.modules[i].dim(c) + u.modules[j].dim(c) <= u.dim_bound;
        }
        if (!fits) {
          continue;
        }
        ++rep.coproducts.checked;
        auto s = coproduct(u.cat, {u.modules[i], u.modules[j]}).module;
        if (!in_class(s)) {
          fail(rep.coproducts, "universe #" + std::to_string(i) + " + #" + std::to_string(j)
                                   + " leaves the class");
        }
      }
    }
    return rep;
  }

  ClosureReport closure_report(Universe const& u, ModuleClassSpec const& cls) {
    return closure_report(u, class_predicate(u, cls));
  }

  // ----------------------------------------------------------------- sigma

  std::string to_string(SigmaVerdict v) {
    switch (v) {
      case SigmaVerdict::member:
        return "member";
      case SigmaVerdict::not_member:
        return "not a member";
      case SigmaVerdict::exhausted:
        return "search bound exhausted";
    }
    return "?";
  }

  SigmaResult sigma_member(Module const& gen, Module const& n, SigmaOptions const& opts) {
    if (!same_category(gen.category_ptr(), n.category_ptr())) {
      throw CategoryMismatch("sigma_member: modules over different categories");
    }
    if (n.is_zero()) {
      return {SigmaVerdict::member, "zero module"};
    }
    auto const& cat = n.cat();
    Field       f   = n.field();
    std::size_t no  = cat.object_count();

    // A minimal generating set of n among the standard basis vectors.
    std::vector<Element> gens;
    Submodule            reached = Submodule::zero(n);
    for (std::size_t c = 0; c < no; ++c) {
      for (std::size_t t = 0; t < n.dim(c); ++t) {
        Vector x = unit_vector(f, n.dim(c), t);
        if (!reached.part(c).contains(x)) {
          gens.push_back({n, c, x});
          reached = submodule_generated(n, gens);
        }
      }
    }

    std::size_t copies = 0;
    for (auto const& g : gens) {
      copies += gen.dim(g.object);
    }
    bool constructive = copies > 0 && copies <= opts.max_copies;
    for (auto const& g : gens) {
      constructive = constructive && gen.dim(g.object) > 0;
    }

    if (constructive) {
      // gen^copies; generator x gets the block of copies listing a basis of gen(C_x).
      auto power = coproduct(gen.category_ptr(), std::vector<Module>(copies, gen)).module;
      std::vector<Element> ws;
      std::size_t          block = 0;
      for (auto const& g : gens) {
        std::size_t d = gen.dim(g.object);
        Vector      w = zero_vector(f, power.dim(g.object));
        for (std::size_t t = 0; t < d; ++t) {
          w[(block + t) * d + t] = Scalar::one(f);
        }
        block += d;
        ws.push_back({power, g.object, std::move(w)});
      }
      Submodule s          = submodule_generated(power, ws);
      auto [smod, incl]    = s.as_module();
      auto          basis  = hom_modules(smod, n);
      std::vector<Vector> rows;
      Vector              rhs;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t c  = gens[k].object;
        Vector      wc = *s.part(c).coordinates(ws[k].vector);
        for (std::size_t r = 0; r < n.dim(c); ++r) {
          Vector row;
          for (auto const& eta : basis) {
            row.push_back(eta.comp[c].apply(wc)[r]);
          }
          rows.push_back(std::move(row));
          rhs.push_back(gens[k].vector[r]);
        }
      }
      if (!basis.empty()) {
        auto sol = solve(Matrix::from_row_vectors(f, basis.size(), rows), rhs);
        if (sol) {
          std::vector<Matrix> comp;
          for (std::size_t c = 0; c < no; ++c) {
            Matrix acc(f, n.dim(c), smod.dim(c));
            for (std::size_t j = 0; j < basis.size(); ++j) {
              acc = acc + basis[j].comp[c].scaled((*sol)[j]);
            }
            comp.push_back(std::move(acc));
          }
          NatTrans phi{smod, n, std::move(comp)};
          if (phi.is_epi() && phi.naturality_violations().empty()) {
            return {SigmaVerdict::member,
                    "n is a quotient of a submodule S of gen^" + std::to_string(copies)
                        + " (S generated by " + std::to_string(gens.size())
                        + " element(s)), hence embeds in gen^" + std::to_string(copies) + "/ker"};
          }
        }
      }
    }

    TwoSidedIdeal ann = module_annihilator(gen);
    for (std::size_t a = 0; a < no; ++a) {
      for (std::size_t b = 0; b < no; ++b) {
        for (auto const& v : ann.part(a, b).basis_vectors()) {
          Morphism fm{a, b, v};
          if (!n.action(fm).is_zero()) {
            return {SigmaVerdict::not_member,
                    "f = " + morphism_label(cat, fm) + " kills gen but acts nonzero on n"};
          }
        }
      }
    }
    return {SigmaVerdict::exhausted, "no cover within " + std::to_string(opts.max_copies)
                                         + " copies and no annihilator obstruction"};
  }

  SigmaIdealReport sigma_ideal_check(TwoSidedIdeal const& i, Universe const& u) {
    if (!same_category(i.category_ptr(), u.cat)) {
      throw CategoryMismatch("sigma_ideal_check: ideal and universe over different categories");
    }
    std::vector<Module> parts;
    for (std::size_t c = 0; c < u.cat->object_count(); ++c) {
      parts.push_back(ideal_quotient(i.component(c)).module);
    }
    Module           gen = coproduct(u.cat, parts).module;
    SigmaIdealReport rep;
    for (std::size_t k = 0; k < u.modules.size(); ++k) {
      auto const& nmod = u.modules[k];
      auto        s    = sigma_member(gen, nmod);
      ++rep.checked;
      if (s.verdict == SigmaVerdict::exhausted) {
        ++rep.exhausted;
        continue;
      }
      bool lhs = s.verdict == SigmaVerdict::member;
      bool rhs = trace_submodule(i, nmod).is_zero();
      if (lhs != rhs) {
        rep.discrepancies.push_back("universe #" + std::to_string(k) + " " + dims_string(nmod)
                                    + ": sigma says " + to_string(s.verdict) + ", IN "
                                    + (rhs ? "= 0" : "!= 0"));
      }
    }
    return rep;
  }

  // ------------------------------------------------ vanishing, cogenerators

  FilterFamily vanishing_filter(CategoryPtr const& cat, std::vector<std::size_t> const& objs) {
    std::vector<RightIdeal> gens;
    for (std::size_t c = 0; c < cat->object_count(); ++c) {
      std::vector<Morphism> ms;
      for (auto l : objs) {
        cat->check_object(l);
        for (std::size_t i = 0; i < cat->hom_dim(l, c); ++i) {
          ms.push_back(cat->basis_morphism(l, c, i));
        }
      }
      gens.push_back(right_ideal_closure(cat, c, ms));
    }
    return FilterFamily::principal(cat, std::move(gens));
  }

  CogeneratorReport cogenerator_check(Module const& e, FilterFamily const& f, Universe const& u) {
    CogeneratorReport rep;
    rep.injective = is_injective_in(u, e).injective;
    for (std::size_t k = 0; k < u.modules.size(); ++k) {
      auto const& m = u.modules[k];
      ++rep.checked;
      bool t = torsion_member(f, m);
      bool z = hom_dim(m, e) == 0;
      if (t != z) {
        rep.discrepancies.push_back("universe #" + std::to_string(k) + " " + dims_string(m)
                                    + (t ? " is torsion but Hom(M,E) != 0" : " is not torsion but Hom(M,E) = 0"));
      }
    }
    return rep;
  }

  // ----------------------------------------------------------------- dense

  DenseFilterResult dense_filter(CategoryPtr const& cat, DensityMode mode, double ceiling) {
    std::size_t                          n = cat->object_count();
    std::vector<std::vector<RightIdeal>> dense(n);
    AxiomResult                          t1{Verdict::pass, "checked extensionally on enumerated dense ideals", ""};
    AxiomResult                          t2 = t1;
    std::vector<RightIdeal>              gens;
    for (std::size_t c = 0; c < n; ++c) {
      auto all = enumerate_right_ideals(cat, c, ceiling);
      for (auto const& i : all) {
        if (is_dense(i, mode).dense) {
          dense[c].push_back(i);
        }
      }
      auto in = [&](RightIdeal const& i) {
        for (auto const& d : dense[c]) {
          if (d == i) {
            return true;
          }
        }
        return false;
      };
      for (auto const& i : dense[c]) {
        for (auto const& j : all) {
          if (t1.verdict == Verdict::pass && j.contains(i) && !in(j)) {
            t1 = {Verdict::fail, t1.note, i.to_string() + " dense but " + j.to_string() + " is not"};
          }
        }
        for (auto const& j : dense[c]) {
          if (t2.verdict == Verdict::pass && !in(ideal_intersect(i, j))) {
            t2 = {Verdict::fail, t2.note,
                  i.to_string() + " and " + j.to_string() + " dense, their meet is not"};
          }
        }
      }
      RightIdeal meet = RightIdeal::whole(cat, c);
      for (auto const& i : dense[c]) {
        meet = ideal_intersect(meet, i);
      }
      gens.push_back(std::move(meet));
    }
    auto family = FilterFamily::principal(cat, std::move(gens));
    auto report = check_axioms(family, ceiling);
    report.t1   = t1;
    report.t2   = t2;
    return {std::move(dense), std::move(family), std::move(report)};
  }

}  // namespace torsionlab
