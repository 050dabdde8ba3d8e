#include "ualg/format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "ualg/error.hpp"

namespace ualg {

namespace {

struct Token {
  std::string text;
  std::size_t line = 0, column = 0;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::optional<Token> next() {
    skip();
    if (pos_ >= text_.size()) return std::nullopt;
    Token t{{}, line_, column_};
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '#')
      t.text += advance();
    return t;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(text) {}

  FiniteAlgebra parse() {
    expect_keyword("algebra");
    const std::string name = require("algebra name").text;
    expect_keyword("size");
    const Token size_tok = require("universe size");
    const std::size_t n = number(size_tok);
    if (n == 0) throw ParseError(size_tok.line, size_tok.column, "universe size must be positive");
    check_universe_size(n);

    std::vector<OperationTable> ops;
    while (true) {
      const Token t = require("'op' or 'end'");
      if (t.text == "end") break;
      if (t.text != "op") throw ParseError(t.line, t.column, "expected 'op' or 'end', found '" + t.text + "'");
      OperationTable op;
      op.name = require("operation name").text;
      const Token arity_tok = require("arity");
      op.arity = number(arity_tok);
      std::size_t entries = 1;
      for (std::size_t i = 0; i < op.arity; ++i) {
        if (entries > (std::size_t{1} << 26) / n)
          throw ParseError(arity_tok.line, arity_tok.column, "operation table too large");
        entries *= n;
      }
      op.table.reserve(entries);
      for (std::size_t i = 0; i < entries; ++i) {
        const auto tok = tokens_.next();
        if (!tok || tok->text == "op" || tok->text == "end") {
          const std::size_t line = tok ? tok->line : tokens_.line();
          const std::size_t col = tok ? tok->column : tokens_.column();
          throw ParseError(line, col, "operation '" + op.name + "' expects " + std::to_string(entries) +
                                          " entries, found " + std::to_string(i));
        }
        const std::size_t v = number(*tok);
        if (v >= n)
          throw ParseError(tok->line, tok->column, "entry " + tok->text + " of operation '" + op.name +
                                                       "' is out of range for size " + std::to_string(n));
        op.table.push_back(static_cast<Element>(v));
      }
      ops.push_back(std::move(op));
    }
    if (auto extra = tokens_.next())
      throw ParseError(extra->line, extra->column, "unexpected '" + extra->text + "' after 'end'");
    try {
      return FiniteAlgebra(name, n, std::move(ops));
    } catch (const InvalidInput& e) {
      throw ParseError(tokens_.line(), tokens_.column(), e.what());
    }
  }

 private:
  Token require(const std::string& what) {
    auto t = tokens_.next();
    if (!t) throw ParseError(tokens_.line(), tokens_.column(), "unexpected end of input, expected " + what);
    return *t;
  }

  void expect_keyword(const std::string& keyword) {
    const Token t = require("'" + keyword + "'");
    if (t.text != keyword)
      throw ParseError(t.line, t.column, "expected '" + keyword + "', found '" + t.text + "'");
  }

  static std::size_t number(const Token& t) {
    std::size_t v = 0;
    const char* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc() || ptr != end)
      throw ParseError(t.line, t.column, "expected a non-negative integer, found '" + t.text + "'");
    return v;
  }

  Tokenizer tokens_;
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) { return Parser(text).parse(); }

std::string print_algebra(const FiniteAlgebra& a) {
  std::ostringstream out;
  const std::size_t n = a.size();
  out << "algebra " << a.name() << "\nsize " << n << "\n";
  for (const auto& op : a.operations()) {
    out << "op " << op.name << " " << op.arity << "\n";
    const std::size_t width = op.arity == 0 ? 1 : n;
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      out << op.table[i];
      out << ((i + 1) % width == 0 ? '\n' : ' ');
    }
  }
  out << "end\n";
  return out.str();
}

FiniteAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open algebra file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string export_dot(const CongruenceLattice& lattice) {
  std::ostringstream out;
  out << "digraph Con {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    out << "  n" << i << " [label=\"" << lattice[i].to_string() << "\"];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j : lattice.upper_covers(i)) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ualg
