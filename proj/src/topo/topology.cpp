#include "torsionlab/topo/topology.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

namespace torsionlab {

  namespace {
    constexpr double      max_points_powerset = 12;
    constexpr double      max_cells_cosets    = 12;
    constexpr double      max_points_pairs    = 256;
    using Mask            = std::uint32_t;

    std::string mask_string(Mask m, std::vector<Vector> const& reps) {
      std::string s = "{";
      bool        first = true;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (m >> i & 1u) {
          s += (first ? "" : ", ") + to_string(reps[i]);
          first = false;
        }
      }
      return s + "}";
    }

    std::vector<RightIdeal> basic_ideals(FilterFamily const& f, std::size_t c) {
      std::vector<RightIdeal> out = f.base(c);
      out.push_back(f.meet(c));
      return out;
    }

    //! Cells are points (powerset mode) or cosets of the smallest basic
    //! neighborhood; a set of cells is a bitmask.
    struct CellSpace {
      Subspace                 coarse;  // cells are cosets of this
      std::vector<Vector>      reps;
      std::map<Vector, std::size_t> index;

      std::size_t cell(Vector const& v) const {
        return index.at(coarse.reduce(v));
      }
    };

    CellSpace make_cells(Subspace const& coarse, std::size_t n, Field fld) {
      CellSpace cs{coarse, {}, {}};
      for (auto const& v : all_vectors(fld, n)) {
        Vector r = coarse.reduce(v);
        if (!cs.index.count(r)) {
          cs.index.emplace(r, cs.reps.size());
          cs.reps.push_back(r);
        }
      }
      return cs;
    }

    void check_topology(TopologyReport& rep, NbhdBasis const& nb, Subspace const& finest, std::size_t n, Field fld) {
      double points = std::pow(static_cast<double>(fld.characteristic()), static_cast<double>(n));
      double cells  = std::pow(static_cast<double>(fld.characteristic()), static_cast<double>(n - finest.dim()));
      CellSpace cs;
      std::string mode;
      if (points <= max_points_powerset) {
        cs   = make_cells(Subspace(fld, n), n, fld);
        mode = "every subset of the " + std::to_string(static_cast<long>(points)) + " points";
      } else if (cells <= max_cells_cosets) {
        cs   = make_cells(finest, n, fld);
        mode = "every union of the " + std::to_string(static_cast<long>(cells))
               + " cosets of the smallest basic neighborhood";
      } else {
        rep.basis_level_only = true;
        rep.topology         = {Verdict::pass,
                                "basis level only: the zero basis is closed under intersection up to refinement", ""};
        for (auto const& u : nb.zero_basis) {
          for (auto const& v : nb.zero_basis) {
            Subspace w = subspace_intersect(u, v);
            bool     refined = std::any_of(nb.zero_basis.begin(), nb.zero_basis.end(),
                                           [&](Subspace const& x) { return w.contains(x); });
            if (!refined) {
              rep.topology = {Verdict::fail, rep.topology.note,
                              "no basic neighborhood inside " + u.to_string() + " & " + v.to_string()};
            }
          }
        }
        rep.translation = {Verdict::not_checked, "open sets not enumerated", ""};
        return;
      }

      std::size_t k = cs.reps.size();
      // nbhd[x][j]: cells of rep_x + zero_basis[j].
      std::vector<std::vector<Mask>> nbhd(k);
      for (std::size_t x = 0; x < k; ++x) {
        for (auto const& v : nb.zero_basis) {
          Mask m = 0;
          for (auto const& w : all_vectors(v)) {
            m |= Mask{1} << cs.cell(add(cs.reps[x], w));
          }
          nbhd[x].push_back(m);
        }
      }
      Mask const full = k == 32 ? ~Mask{0} : (Mask{1} << k) - 1;
      std::vector<bool> open(std::size_t{1} << k, false);
      std::vector<Mask> opens;
      for (Mask u = 0;; ++u) {
        bool is_open = true;
        for (std::size_t x = 0; x < k && is_open; ++x) {
          if (u >> x & 1u) {
            is_open = std::any_of(nbhd[x].begin(), nbhd[x].end(), [u](Mask m) { return (m & ~u) == 0; });
          }
        }
        if (is_open) {
          open[u] = true;
          opens.push_back(u);
        }
        if (u == full) {
          break;
        }
      }
      rep.open_sets = opens.size();
      rep.topology  = {Verdict::pass, "open sets enumerated over " + mode, ""};
      if (!open[0] || !open[full]) {
        rep.topology = {Verdict::fail, rep.topology.note, "empty set or whole Hom set not open"};
      }
      for (std::size_t i = 0; i < opens.size() && rep.topology.verdict == Verdict::pass; ++i) {
        for (std::size_t j = i; j < opens.size(); ++j) {
          Mask u = opens[i], v = opens[j];
          if (!open[u | v] || !open[u & v]) {
            rep.topology.verdict = Verdict::fail;
            rep.topology.witness = "U=" + mask_string(u, cs.reps) + ", V=" + mask_string(v, cs.reps)
                                   + ": " + (open[u | v] ? "intersection" : "union") + " not open";
            break;
          }
        }
      }

      rep.translation = {Verdict::pass, "U open iff U - a open, for every a and every subset", ""};
      for (std::size_t a = 0; a < k && rep.translation.verdict == Verdict::pass; ++a) {
        std::vector<std::size_t> shift(k);
        for (std::size_t x = 0; x < k; ++x) {
          shift[x] = cs.cell(subtract(cs.reps[x], cs.reps[a]));
        }
        for (Mask u = 0;; ++u) {
          Mask t = 0;
          for (std::size_t x = 0; x < k; ++x) {
            if (u >> x & 1u) {
              t |= Mask{1} << shift[x];
            }
          }
          if (open[u] != open[t]) {
            rep.translation = {Verdict::fail, rep.translation.note,
                               "a=" + to_string(cs.reps[a]) + ", U=" + mask_string(u, cs.reps)};
            break;
          }
          if (u == full) {
            break;
          }
        }
      }
    }

    void check_addition(TopologyReport& rep, NbhdBasis const& nb, std::size_t n, Field fld) {
      rep.addition = {Verdict::pass, "(f + V) + (g + V) inside f + g + V for every basic V", ""};
      std::vector<Vector> pts;
      if (fld.is_finite()
          && std::pow(static_cast<double>(fld.characteristic()), static_cast<double>(n)) <= max_points_pairs) {
        pts = all_vectors(fld, n);
      } else {
        pts = Subspace::full(fld, n).basis_vectors();
        rep.addition.note += "; f, g over a basis";
      }
      for (auto const& v : nb.zero_basis) {
        auto span = v.basis_vectors();
        for (auto const& f : pts) {
          for (auto const& g : pts) {
            Vector fg = add(f, g);
            for (auto const& s : span) {
              for (auto const& t : span) {
                Vector sum = add(add(f, s), add(g, t));
                if (!v.contains(subtract(sum, fg))) {
                  rep.addition = {Verdict::fail, rep.addition.note,
                                  "f=" + to_string(f) + ", g=" + to_string(g) + ", V=" + v.to_string()};
                  return;
                }
              }
            }
          }
        }
      }
    }

    void check_composition(TopologyReport& rep, FilterFamily const& fam) {
      auto const& cat = fam.cat();
      std::size_t a = rep.a, b = rep.b, c = rep.c;
      rep.composition = {Verdict::pass,
                         "(g + I(B)) o (f + J(A)) inside g o f + I(A) with J the meet at B; bilinear, "
                         "checked on spanning sets",
                         ""};
      Subspace const& j = fam.meet(b).part(a);
      for (auto const& i : basic_ideals(fam, c)) {
        Subspace const& ia = i.part(a);
        auto in_ia = [&](Morphism const& m) { return ia.contains(m.coords); };
        for (std::size_t gi = 0; gi < cat.hom_dim(b, c); ++gi) {
          Morphism g = cat.basis_morphism(b, c, gi);
          for (auto const& jv : j.basis_vectors()) {
            Morphism jm{a, b, jv};
            if (!in_ia(cat.compose(g, jm))) {
              rep.composition = {Verdict::fail, rep.composition.note,
                                 "A=" + cat.object_name(a) + ", B=" + cat.object_name(b) + ", C="
                                     + cat.object_name(c) + ", I=" + i.to_string() + ", g="
                                     + morphism_label(cat, g) + ", j=" + morphism_label(cat, jm)
                                     + ": g*j not in I(A), so (I:g) is not a neighborhood at B"};
              return;
            }
          }
        }
        for (auto const& iv : i.part(b).basis_vectors()) {
          Morphism im{b, c, iv};
          for (std::size_t fi = 0; fi < cat.hom_dim(a, b); ++fi) {
            Morphism f = cat.basis_morphism(a, b, fi);
            if (!in_ia(cat.compose(im, f))) {
              rep.composition = {Verdict::fail, rep.composition.note,
                                 "i=" + morphism_label(cat, im) + ", f=" + morphism_label(cat, f)
                                     + ": i*f not in I(A)"};
              return;
            }
          }
        }
      }
    }
  }  // namespace

  std::vector<Coset> NbhdBasis::cosets() const {
    std::vector<Coset> out;
    for (auto const& v : zero_basis) {
      std::vector<Vector> seen;
      for (auto const& x : all_vectors(v.field(), v.ambient_dim())) {
        Vector r = v.reduce(x);
        if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
          seen.push_back(r);
          out.push_back({r, v});
        }
      }
    }
    return out;
  }

  NbhdBasis neighborhoods(FilterFamily const& f, std::size_t a, std::size_t c) {
    f.cat().check_object(a);
    f.cat().check_object(c);
    NbhdBasis nb{a, c, {}};
    for (auto const& i : basic_ideals(f, c)) {
      if (std::find(nb.zero_basis.begin(), nb.zero_basis.end(), i.part(a)) == nb.zero_basis.end()) {
        nb.zero_basis.push_back(i.part(a));
      }
    }
    return nb;
  }

  TopologyReport verify_topology(FilterFamily const& f, std::size_t a, std::size_t b, std::size_t c) {
    auto const&    cat = f.cat();
    TopologyReport rep;
    cat.check_object(b);
    rep.a         = a;
    rep.b         = b;
    rep.c         = c;
    auto        nb = neighborhoods(f, a, c);
    std::size_t n  = cat.hom_dim(a, c);
    Field       fld = cat.field();
    if (fld.is_finite()) {
      check_topology(rep, nb, f.meet(c).part(a), n, fld);
    } else {
      rep.basis_level_only = true;
      rep.topology         = {Verdict::pass, "infinite field: basis level only", ""};
      rep.translation      = {Verdict::not_checked, "infinite field", ""};
    }
    check_addition(rep, nb, n, fld);
    check_composition(rep, f);
    return rep;
  }

  std::vector<TopologyReport> verify_topology_all(FilterFamily const& f) {
    std::vector<TopologyReport> out;
    std::size_t                 n = f.cat().object_count();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          out.push_back(verify_topology(f, a, b, c));
        }
      }
    }
    return out;
  }

}  // namespace torsionlab
