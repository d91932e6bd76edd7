#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace folim {

/// Minimal S-expression: either an atom (bare token) or a parenthesized list.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t offset = 0;  // byte offset of the token or opening paren

  bool is_atom() const noexcept { return !is_list; }
  bool is_atom(std::string_view s) const noexcept { return !is_list && atom == s; }
};

/// Parses exactly one S-expression; trailing non-whitespace is an error.
/// `;` starts a comment running to end of line.
SExpr parse_sexpr(std::string_view text);

/// Parses a sequence of S-expressions (possibly empty).
std::vector<SExpr> parse_sexprs(std::string_view text);

std::string to_string(const SExpr& e);

}  // namespace folim
