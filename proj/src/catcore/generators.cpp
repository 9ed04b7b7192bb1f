#include "torsionlab/catcore/generators.hpp"

#include <map>
#include <optional>
#include <utility>

#include "torsionlab/error.hpp"

namespace torsionlab {

  namespace {
    GeneratedCategory finish(CategoryPresentation p, std::string description, bool plain) {
      p.nilpotency_bound = exact_nilpotency_bound(p);
      Category cat       = compile_quiver(p);
      return {std::move(p), std::move(cat), std::move(description), plain, {}};
    }

    std::string coord_name(char prefix, long p, long q) {
      return prefix + std::to_string(p) + "_" + std::to_string(q);
    }
  }  // namespace

  GeneratedCategory gen_linear(std::size_t n, Field f) {
    if (n == 0) {
      throw Error("gen_linear needs at least one object");
    }
    CategoryPresentation p;
    p.field = f;
    for (std::size_t i = 1; i <= n; ++i) {
      p.objects.push_back(std::to_string(i));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      p.arrows.push_back({std::string(1, static_cast<char>('a' + i % 26))
                              + (i >= 26 ? std::to_string(i / 26) : ""),
                          i,
                          i + 1});
    }
    return finish(std::move(p), "linear quiver A" + std::to_string(n), true);
  }

  GeneratedCategory gen_loop(std::size_t bound, Field f) {
    if (bound == 0) {
      throw Error("gen_loop needs bound >= 1");
    }
    CategoryPresentation p;
    p.field            = f;
    p.objects          = {"1"};
    p.arrows           = {{"x", 0, 0}};
    p.nilpotency_bound = bound;
    Category cat       = compile_quiver(p);
    return {std::move(p),
            std::move(cat),
            "loop x with x^" + std::to_string(bound) + " = 0",
            false,
            {}};
  }

  GeneratedCategory gen_mesh_window(std::size_t n, std::size_t window, Field f) {
    if (n == 0 || window == 0) {
      throw Error("gen_mesh_window needs n >= 1 and window >= 1");
    }
    // Grid coordinates: s = p + q (sectional level), t = p (tau-orbit step).
    // s ranges over [window, window + n) so that q = s - t >= 1 throughout.
    CategoryPresentation p;
    p.field = f;
    std::map<std::pair<long, long>, std::size_t> vertex;  // (s, t) -> object
    long const s0 = static_cast<long>(window);
    for (long t = 0; t < static_cast<long>(window); ++t) {
      for (long s = s0; s < s0 + static_cast<long>(n); ++s) {
        vertex[{s, t}] = p.objects.size();
        p.objects.push_back(coord_name('M', t, s - t));
      }
    }
    std::map<std::pair<long, long>, std::size_t> up, down;  // keyed by source (s, t)
    for (auto const& [st, obj] : vertex) {
      auto [s, t] = st;
      if (auto it = vertex.find({s + 1, t}); it != vertex.end()) {
        up[st] = p.arrows.size();
        p.arrows.push_back({coord_name('u', t, s - t), obj, it->second});
      }
      if (auto it = vertex.find({s, t + 1}); it != vertex.end()) {
        down[st] = p.arrows.size();
        // d<p>_<q> : (p, q+1) -> (p+1, q)
        p.arrows.push_back({coord_name('d', t, s - t - 1), obj, it->second});
      }
    }
    Scalar const one = Scalar::one(f);
    std::size_t  meshes = 0;
    for (auto const& [st, obj] : vertex) {
      auto [s, t] = st;
      if (!vertex.count({s + 1, t + 1})) {
        continue;
      }
      std::size_t x  = obj;
      std::size_t y  = vertex.at({s + 1, t + 1});
      Path        via_up{x, y, {up.at(st), down.at({s + 1, t})}};
      Path        via_down{x, y, {down.at(st), up.at({s, t + 1})}};
      p.relations.push_back({{{one, via_up}, {-one, via_down}}});
      ++meshes;
    }
    std::string description = "mesh window of ZA_inf: " + std::to_string(n)
                              + " level(s) x " + std::to_string(window)
                              + " step(s), vertices M<p>_<q> with p in [0,"
                              + std::to_string(window - 1) + "], " + std::to_string(meshes)
                              + " mesh(es)";
    if (meshes == 0) {
      description += "; window contains no mesh, plain path category";
    }
    return finish(std::move(p), std::move(description), meshes == 0);
  }

  GeneratedCategory gen_stable_tube(std::size_t rank, std::size_t depth, Field f) {
    if (rank == 0 || depth == 0) {
      throw Error("gen_stable_tube needs rank >= 1 and depth >= 1");
    }
    CategoryPresentation p;
    p.field = f;
    long const r = static_cast<long>(rank);
    long const d = static_cast<long>(depth);
    auto       obj = [&](long pp, long q) {
      return static_cast<std::size_t>(((pp % r + r) % r) * d + (q - 1));
    };
    for (long pp = 0; pp < r; ++pp) {
      for (long q = 1; q <= d; ++q) {
        p.objects.push_back(coord_name('T', pp, q));
      }
    }
    std::map<std::pair<long, long>, std::size_t> up, down;
    for (long pp = 0; pp < r; ++pp) {
      for (long q = 1; q <= d; ++q) {
        if (q < d) {
          up[{pp, q}] = p.arrows.size();
          p.arrows.push_back({coord_name('u', pp, q), obj(pp, q), obj(pp, q + 1)});
        }
      }
    }
    for (long pp = 0; pp < r; ++pp) {
      for (long q = 1; q < d; ++q) {
        // d<p>_<q> : (p, q+1) -> (p+1, q)
        down[{pp, q}] = p.arrows.size();
        p.arrows.push_back({coord_name('d', pp, q), obj(pp, q + 1), obj(pp + 1, q)});
      }
    }
    Scalar const one = Scalar::one(f);
    for (long pp = 0; pp < r; ++pp) {
      for (long q = 1; q <= d; ++q) {
        // Mesh from (p, q) to (p+1, q).
        std::vector<PathTerm> terms;
        if (q + 1 <= d) {
          terms.push_back({one, Path{obj(pp, q), obj(pp + 1, q), {up.at({pp, q}), down.at({pp, q})}}});
        }
        if (q - 1 >= 1) {
          terms.push_back({-one,
                           Path{obj(pp, q),
                                obj(pp + 1, q),
                                {down.at({pp, q - 1}), up.at({(pp + 1) % r, q - 1})}}});
        }
        if (!terms.empty()) {
          p.relations.push_back({std::move(terms)});
        }
      }
    }
    std::string description = "stable tube of rank " + std::to_string(rank)
                              + " truncated to quasi-length <= " + std::to_string(depth)
                              + "; paths through deleted vertices are zero";
    auto g = finish(std::move(p), std::move(description), depth == 1);
    for (long pp = 0; pp < r; ++pp) {
      g.mouth.push_back(obj(pp, 1));
    }
    return g;
  }

}  // namespace torsionlab
