#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "posat/poset.hpp"

namespace posat {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses a poset expression.
///
///   expr  := term ('+' term)*
///   term  := INT '*' term | 'dot(' expr ')' | 'dual(' expr ')' | '(' expr ')' | atom
///   atom  := C<k> | A<k> | V<k> | L<k> | K(<s>,<t>) | D | D- | D' | B | N | Y
///
/// `+` numbers the left operand first; `dot` adds its new top last.
Poset parse_poset_expr(std::string_view text);

/// Catalog atom by name (the atoms of the expression grammar). Throws
/// `Error` for unknown names.
Poset named_poset(std::string_view name);

/// "poset v1" text: `poset <k>` then one `<a> < <b>` per line, `#` comments.
Poset read_poset(std::istream& in);
void write_poset(std::ostream& out, const Poset& p);

/// Reads a poset file when `source` names an existing file, otherwise
/// parses it as an expression.
Poset load_poset(const std::string& source);

}  // namespace posat
