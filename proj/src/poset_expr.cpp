#include "posat/poset_expr.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace posat {

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error("at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

Poset relations_poset(int size, std::initializer_list<std::pair<int, int>> rel) {
  return Poset::from_relations(size, std::vector<std::pair<int, int>>(rel));
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Poset parse() {
    Poset p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxPosetSize) throw ParseError(start, "number exceeds 64");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(value);
  }

  int positive_number() {
    const std::size_t start = (skip_space(), pos_);
    const int v = number();
    if (v < 1) throw ParseError(start, "parameter must be at least 1");
    return v;
  }

  Poset expr() {
    Poset p = term();
    while (accept('+')) p = disjoint_union(p, term());
    return p;
  }

  Poset term() {
    skip_space();
    if (at_digit()) {
      const int copies = positive_number();
      expect('*');
      return repeat(copies, term());
    }
    if (accept_word("dot(")) {
      Poset inner = expr();
      expect(')');
      return add_top(inner);
    }
    if (accept_word("dual(")) {
      Poset inner = expr();
      expect(')');
      return dual(inner);
    }
    if (accept('(')) {
      Poset inner = expr();
      expect(')');
      return inner;
    }
    return atom();
  }

  Poset atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a poset");
    const char c = text_[pos_];
    const std::size_t start = pos_;
    ++pos_;
    switch (c) {
      case 'C':
        return chain(positive_number());
      case 'A':
        return antichain(positive_number());
      case 'V':
        return fork(positive_number());
      case 'L':
        return dual(fork(positive_number()));
      case 'K': {
        expect('(');
        const int s = positive_number();
        expect(',');
        const int t = positive_number();
        expect(')');
        return complete_bipartite(s, t);
      }
      case 'D':
        if (accept('-')) return named_poset("D-");
        if (accept('\'')) return named_poset("D'");
        return named_poset("D");
      case 'B':
        return named_poset("B");
      case 'N':
        return named_poset("N");
      case 'Y':
        return named_poset("Y");
      default:
        throw ParseError(start, std::string("unknown poset atom '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poset parse_poset_expr(std::string_view text) { return ExprParser(text).parse(); }

Poset named_poset(std::string_view name) {
  // Diamond: 0 bottom, 1 and 2 middles, 3 top.
  if (name == "D") return add_top(fork(2));
  if (name == "D-") return relations_poset(4, {{0, 1}, {1, 3}, {2, 3}});
  // A=0 < B=1 < C=3, A < B'=2 < C, B' < C'=4.
  if (name == "D'") return relations_poset(5, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {2, 4}});
  if (name == "B") return complete_bipartite(2, 2);
  // a=0, b=1, c=2, d=3 with a<c, b<c, b<d.
  if (name == "N") return relations_poset(4, {{0, 2}, {1, 2}, {1, 3}});
  // Bottom 0 < 1, then 1 below the two tops 2 and 3.
  if (name == "Y") return relations_poset(4, {{0, 1}, {1, 2}, {1, 3}});
  try {
    return ExprParser(name).parse();
  } catch (const ParseError&) {
    throw Error("unknown poset name '" + std::string(name) + "'");
  }
}

Poset read_poset(std::istream& in) {
  std::string line;
  int line_no = 0;
  int size = -1;
  std::vector<std::pair<int, int>> rel;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    auto bad = [&](const std::string& msg) {
      throw Error("poset file line " + std::to_string(line_no) + ": " + msg);
    };
    if (size < 0) {
      if (first != "poset" || !(ss >> size) || size < 0 || size > kMaxPosetSize) {
        bad("expected header 'poset <k>'");
      }
      continue;
    }
    int a = 0;
    int b = 0;
    char lt = 0;
    std::istringstream pair_ss(line);
    if (!(pair_ss >> a >> lt >> b) || lt != '<') bad("expected '<a> < <b>'");
    std::string rest;
    if (pair_ss >> rest) bad("trailing text");
    if (a < 0 || b < 0 || a >= size || b >= size) bad("element out of range");
    rel.emplace_back(a, b);
  }
  if (size < 0) throw Error("poset file: missing header");
  return Poset::from_relations(size, rel);
}

void write_poset(std::ostream& out, const Poset& p) {
  out << "poset " << p.size() << '\n';
  for (auto [a, b] : p.relations()) out << a << " < " << b << '\n';
}

Poset load_poset(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw Error("cannot open poset file '" + source + "'");
    return read_poset(in);
  }
  return parse_poset_expr(source);
}

}  // namespace posat
