#pragma once

// Polynomial text format and triangular-set files.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+'|'-') factor | atom ['^' INT]
//   atom   := INT ['/' INT] | NAME | '(' expr ')'
//
// '/' is only accepted between two integer literals.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsgcd/tset.hpp"

namespace tsgcd {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

/// Variable names: zvars[i] is the level-(i+1) variable, main is level n+1.
struct VarContext {
  std::vector<std::string> zvars;
  std::string main = "x";

  int top() const noexcept { return static_cast<int>(zvars.size()) + 1; }
  static VarContext standard(int n);
};

/// Parses at level ctx.top().
QPoly parse_poly(std::string_view s, const VarContext& ctx);

/// Flattened monomials, lex-descending with the main variable first.
std::string format_poly(const QPoly& a, const VarContext& ctx);

struct TsetFile {
  VarContext vars;
  QTset tset;
};

/// vars: / main: headers, t<i>: lines, '#' comments.
TsetFile parse_tset(std::string_view text);
TsetFile read_tset_file(const std::string& path);

std::vector<std::string> format_tset(const QTset& T, const VarContext& ctx);

}  // namespace tsgcd
