#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "locale_lab/space.hpp"

namespace lab {

/// A parsed input file: either a finite space or a finite poset.
struct ParsedInput {
  std::string name;
  std::variant<FiniteSpace, Poset> value;

  bool is_space() const { return std::holds_alternative<FiniteSpace>(value); }
  const FiniteSpace& space() const { return std::get<FiniteSpace>(value); }
  const Poset& poset() const { return std::get<Poset>(value); }
};

/// Parses the line-based input format:
///
///   space <name>            (or: poset <name>)
///   points: a b c
///   open: a b               (spaces: one line per open set; empty for {})
///   le: a b                 (posets: order pairs; closure is taken)
///
/// '#' starts a comment. Spaces are validated as topologies; poset relations
/// are reflexively and transitively closed, then checked for antisymmetry.
ParsedInput parse_input(const std::filesystem::path& path);
ParsedInput parse_input_text(std::string_view text,
                             std::string_view source_name = "<input>");

}  // namespace lab
