#include "torsionlab/catcore/presentation.hpp"

#include <set>

#include "torsionlab/error.hpp"

namespace torsionlab {

  std::optional<std::size_t> CategoryPresentation::object_index(std::string const& name) const {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      if (objects[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> CategoryPresentation::arrow_index(std::string const& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::string CategoryPresentation::path_label(Path const& p) const {
    if (p.arrows.empty()) {
      return "id(" + objects.at(p.source) + ")";
    }
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
      if (!s.empty()) {
        s += "*";
      }
      s += arrows.at(*it).name;
    }
    return s;
  }

  void CategoryPresentation::validate() const {
    if (objects.empty()) {
      throw DegeneratePresentation("presentation has no objects");
    }
    std::set<std::string> names;
    for (auto const& o : objects) {
      if (o.empty() || !names.insert(o).second) {
        throw DegeneratePresentation("duplicate or empty object name '" + o + "'");
      }
    }
    std::set<std::string> arrow_names;
    for (auto const& a : arrows) {
      if (a.source >= objects.size() || a.target >= objects.size()) {
        throw DegeneratePresentation("arrow '" + a.name + "' has an undeclared endpoint");
      }
      if (a.name.empty() || !arrow_names.insert(a.name).second) {
        throw DegeneratePresentation("duplicate or empty arrow name '" + a.name + "'");
      }
    }
    if (nilpotency_bound < 1) {
      throw DegeneratePresentation("nilpotency bound must be at least 1");
    }
    for (std::size_t r = 0; r < relations.size(); ++r) {
      auto const& rel = relations[r];
      if (rel.terms.empty()) {
        throw DegeneratePresentation("relation " + std::to_string(r) + " is empty");
      }
      auto const& first = rel.terms.front().path;
      for (auto const& t : rel.terms) {
        if (t.coefficient.field() != field) {
          throw DegeneratePresentation("relation coefficient over the wrong field");
        }
        auto const& p = t.path;
        if (p.source >= objects.size() || p.target >= objects.size()) {
          throw DegeneratePresentation("relation path has an undeclared endpoint");
        }
        std::size_t at = p.source;
        for (auto k : p.arrows) {
          if (k >= arrows.size()) {
            throw DegeneratePresentation("relation references an unknown arrow");
          }
          if (arrows[k].source != at) {
            throw DegeneratePresentation("relation path '" + path_label(p)
                                         + "' is not composable");
          }
          at = arrows[k].target;
        }
        if (at != p.target) {
          throw DegeneratePresentation("relation path '" + path_label(p)
                                       + "' ends at the wrong object");
        }
        if (p.source != first.source || p.target != first.target) {
          throw DegeneratePresentation("relation " + std::to_string(r)
                                       + " mixes paths with different endpoints");
        }
      }
    }
  }

}  // namespace torsionlab
