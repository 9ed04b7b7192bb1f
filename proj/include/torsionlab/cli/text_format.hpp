#ifndef TORSIONLAB_CLI_TEXT_FORMAT_HPP_
#define TORSIONLAB_CLI_TEXT_FORMAT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torsionlab/torsion/torsion.hpp"

namespace torsionlab {

  // Line-oriented text files with sections [category], [module], [ideal] and
  // [filter]. '#' starts a comment. Every parse error carries line and column
  // of the offending token; a file may hold several sections and each parser
  // reads the first section of its kind.
  //
  //   [category]
  //   field: GF(2)
  //   objects: 1 2 3
  //   arrow a: 1 -> 2
  //   arrow b: 2 -> 3
  //   relation: b*a = 0
  //   bound: 2                      (optional; computed when absent)
  //
  //   [module]
  //   dims: 1 1 0
  //   action a: [[1]]               (dim M(source) x dim M(target))
  //   action b: [[]]
  //
  //   [ideal]
  //   target: 3
  //   gen: b*a + b
  //
  //   [filter]
  //   base 1: id(1)
  //   base 2: a                     (one line per base ideal; "0" = zero ideal)

  CategoryPresentation parse_category(std::string_view text);
  std::string          serialize_category(CategoryPresentation const& p);

  //! Validates shapes and functoriality.
  Module      parse_module(std::string_view text, CategoryPtr const& cat);
  std::string serialize_module(Module const& m);

  RightIdeal  parse_ideal(std::string_view text, CategoryPtr const& cat);
  std::string serialize_ideal(RightIdeal const& i);

  FilterFamily parse_filter(std::string_view text, CategoryPtr const& cat);
  std::string  serialize_filter(FilterFamily const& f);

  //! A linear combination of paths such as "a + 2*b*a" or "id(1)"; "0" yields
  //! nullopt. With a target given, every term must end there.
  std::optional<Morphism> parse_morphism(std::string_view           expr,
                                         Category const&            cat,
                                         std::optional<std::size_t> target = std::nullopt);

  //! Irredundant generating set: the basis generators of every part, with
  //! each one dropped in turn when the rest still generate.
  std::vector<Morphism> minimal_generators(RightIdeal const& i);

  //! Throws Error if the file cannot be read.
  std::string read_text_file(std::string const& path);

}  // namespace torsionlab

#endif  // TORSIONLAB_CLI_TEXT_FORMAT_HPP_
