#include "torsionlab/modfun/universe.hpp"

#include <cmath>
#include <map>

#include "torsionlab/config.hpp"
#include "torsionlab/error.hpp"

namespace torsionlab {

  ModuleKey module_key(Module const& m) {
    ModuleKey   key{m.dims(), {}, 0};
    auto const& cat = m.cat();
    std::size_t n   = cat.object_count();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < cat.hom_dim(a, b); ++i) {
          key.ranks.push_back(m.action_basis(a, b, i).rank());
        }
      }
    }
    key.end_dim = hom_dim(m, m);
    return key;
  }

  std::optional<std::size_t> Universe::index_of(Module const& m) const {
    if (!same_category(cat, m.category_ptr())) {
      return std::nullopt;
    }
    ModuleKey key = module_key(m);
    for (std::size_t i = 0; i < modules.size(); ++i) {
      if (keys[i] == key && is_isomorphic(modules[i], m)) {
        return i;
      }
    }
    return std::nullopt;
  }

  namespace {
    // Dimension vectors in {0..bound}^n, lexicographic.
    std::vector<std::vector<std::size_t>> dimension_vectors(std::size_t n, std::size_t bound) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              d(n, 0);
      while (true) {
        out.push_back(d);
        std::size_t i = n;
        while (i > 0 && d[i - 1] == bound) {
          d[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return out;
        }
        ++d[i - 1];
      }
    }

    std::size_t entry_count(Category const& cat, std::vector<std::size_t> const& d) {
      std::size_t e = 0;
      for (auto const& a : cat.arrows()) {
        e += d[a.source] * d[a.target];
      }
      return e;
    }
  }  // namespace

  double universe_candidates(Category const& cat, std::size_t dim_bound) {
    double q     = static_cast<double>(cat.field().characteristic());
    double total = 0;
    for (auto const& d : dimension_vectors(cat.object_count(), dim_bound)) {
      total += std::pow(q, static_cast<double>(entry_count(cat, d)));
    }
    return total;
  }

  Universe enumerate_universe(CategoryPtr cat, std::size_t dim_bound, double ceiling) {
    Field f = cat->field();
    if (!f.is_finite()) {
      throw Error("universe enumeration needs a finite field");
    }
    double limit    = ceiling > 0 ? ceiling : default_ceiling();
    double estimate = universe_candidates(*cat, dim_bound);
    if (estimate > limit) {
      throw CeilingExceeded("enumerate_universe", estimate, limit);
    }
    Universe u{cat, dim_bound, {}, {}};
    std::uint32_t q = f.characteristic();
    for (auto const& d : dimension_vectors(cat->object_count(), dim_bound)) {
      std::size_t                entries = entry_count(*cat, d);
      std::vector<std::uint32_t> digit(entries, 0);
      while (true) {
        std::vector<Matrix> mats;
        std::size_t         pos = 0;
        for (auto const& a : cat->arrows()) {
          std::size_t         r = d[a.source], c = d[a.target];
          std::vector<Scalar> e;
          for (std::size_t t = 0; t < r * c; ++t) {
            e.emplace_back(f, static_cast<long long>(digit[pos++]));
          }
          mats.emplace_back(f, r, c, std::move(e));
        }
        Module m = Module::from_arrow_matrices(cat, d, mats);
        if (check_functoriality(m).empty()) {
          ModuleKey key = module_key(m);
          bool      fresh = true;
          for (std::size_t i = 0; i < u.modules.size() && fresh; ++i) {
            if (u.keys[i] == key && is_isomorphic(u.modules[i], m, limit)) {
              fresh = false;
            }
          }
          if (fresh) {
            u.modules.push_back(std::move(m));
            u.keys.push_back(std::move(key));
          }
        }
        std::size_t i = entries;
        while (i > 0 && digit[i - 1] == q - 1) {
          digit[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
        ++digit[i - 1];
      }
    }
    return u;
  }

  InjectivityReport is_injective_in(Universe const& u, Module const& e) {
    InjectivityReport rep;
    for (std::size_t idx = 0; idx < u.modules.size(); ++idx) {
      Module const& n      = u.modules[idx];
      auto          from_n = hom_modules(n, e);
      for (auto const& k : enumerate_submodules(n)) {
        ++rep.pairs_checked;
        auto [kmod, incl] = k.as_module();
        auto from_k       = hom_modules(kmod, e);
        if (from_k.empty()) {
          continue;
        }
        std::vector<Vector> restricted;
        for (auto const& phi : from_n) {
          restricted.push_back(phi.after(incl).flatten());
        }
        Subspace reach = Subspace::span(e.field(), from_k.front().flatten().size(), restricted);
        if (reach.dim() == from_k.size()) {
          continue;
        }
        rep.injective = false;
        for (auto const& psi : from_k) {
          if (!reach.contains(psi.flatten())) {
            rep.witness = InjectivityWitness{idx, k, psi};
            break;
          }
        }
        return rep;
      }
    }
    return rep;
  }

}  // namespace torsionlab
