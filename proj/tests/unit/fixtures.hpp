#ifndef TORSIONLAB_TESTS_FIXTURES_HPP_
#define TORSIONLAB_TESTS_FIXTURES_HPP_

#include <memory>

#include "torsionlab/catcore/generators.hpp"
#include "torsionlab/modfun/module.hpp"

namespace fixtures {

  using namespace torsionlab;

  inline CategoryPtr share(Category c) {
    return std::make_shared<Category const>(std::move(c));
  }

  //! 1 --a--> 2 over f.
  inline CategoryPtr a2(Field f = Field::gf(2)) {
    return share(gen_linear(2, f).category);
  }

  //! 1 --a--> 2 --b--> 3 over f.
  inline CategoryPtr a3(Field f = Field::gf(2)) {
    return share(gen_linear(3, f).category);
  }

  inline CategoryPtr one_object(Field f = Field::gf(2)) {
    return share(gen_linear(1, f).category);
  }

  inline CategoryPtr loop(std::size_t bound, Field f = Field::gf(2)) {
    return share(gen_loop(bound, f).category);
  }

  //! Module on A2 with the given dims and matrix for a (dims[0] x dims[1]).
  inline Module a2_module(CategoryPtr const& cat, std::size_t d1, std::size_t d2, Matrix a) {
    return Module::from_arrow_matrices(cat, {d1, d2}, {std::move(a)});
  }

  inline Module simple(CategoryPtr const& cat, std::size_t c) {
    std::vector<std::size_t> dims(cat->object_count(), 0);
    dims[c] = 1;
    std::vector<Matrix> mats;
    for (auto const& a : cat->arrows()) {
      mats.emplace_back(cat->field(), dims[a.source], dims[a.target]);
    }
    return Module::from_arrow_matrices(cat, dims, mats);
  }

}  // namespace fixtures

#endif  // TORSIONLAB_TESTS_FIXTURES_HPP_
