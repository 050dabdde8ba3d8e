#include "ualg/term.hpp"

#include <algorithm>
#include <cctype>

#include "ualg/error.hpp"

namespace ualg {

struct Term::Node {
  bool is_variable = false;
  std::size_t index = 0;
  std::string op;
  std::vector<Term> args;
};

Term Term::variable(std::size_t index) {
  auto node = std::make_shared<Node>();
  node->is_variable = true;
  node->index = index;
  return Term(std::move(node));
}

Term Term::apply(std::string op, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->op = std::move(op);
  node->args = std::move(args);
  return Term(std::move(node));
}

bool Term::is_variable() const { return node_->is_variable; }
std::size_t Term::variable_index() const { return node_->index; }
const std::string& Term::op() const { return node_->op; }
std::span<const Term> Term::args() const { return node_->args; }

std::size_t Term::variable_count() const {
  if (is_variable()) return variable_index() + 1;
  std::size_t count = 0;
  for (const auto& arg : args()) count = std::max(count, arg.variable_count());
  return count;
}

std::string Term::to_string() const {
  if (is_variable()) {
    static const char* kNames[] = {"x", "y", "z"};
    return variable_index() < 3 ? kNames[variable_index()]
                                : "x" + std::to_string(variable_index());
  }
  std::string s = op();
  if (args().empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < args().size(); ++i) {
    if (i) s += ',';
    s += args()[i].to_string();
  }
  return s + ')';
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(1, pos_ + 1, "term: " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',';
  }

  Term term() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a name");
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      std::vector<Term> args;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return Term::apply(std::move(name));
      }
      while (true) {
        args.push_back(term());
        skip_space();
        if (pos_ >= text_.size()) fail("unterminated argument list");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      return Term::apply(std::move(name), std::move(args));
    }
    if (name == "x") return Term::variable(0);
    if (name == "y") return Term::variable(1);
    if (name == "z") return Term::variable(2);
    if (name.size() > 1 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return Term::variable(std::stoul(name.substr(1)));
    return Term::apply(std::move(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term Term::parse(std::string_view text) { return TermParser(text).parse(); }

CompiledTerm::CompiledTerm(const FiniteAlgebra& a, const Term& t) : algebra_(a) {
  auto compile = [&](auto&& self, const Term& u) -> std::size_t {
    Node node{u.is_variable(), 0, {}};
    if (u.is_variable()) {
      node.index = u.variable_index();
      variables_ = std::max(variables_, node.index + 1);
    } else {
      auto op = a.find_operation(u.op());
      if (!op) throw InvalidInput("term uses unknown operation '" + u.op() + "'");
      if (a.operation(*op).arity != u.args().size())
        throw InvalidInput("operation '" + u.op() + "' has arity " +
                           std::to_string(a.operation(*op).arity) + " but the term gives " +
                           std::to_string(u.args().size()) + " arguments");
      node.index = *op;
      for (const auto& arg : u.args()) node.children.push_back(self(self, arg));
    }
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
  };
  root_ = compile(compile, t);
}

Element CompiledTerm::eval(std::size_t node, std::span<const Element> args) const {
  const Node& n = nodes_[node];
  if (n.is_variable) return args[n.index];
  Element buffer[8];
  std::vector<Element> heap;
  std::span<Element> values;
  if (n.children.size() <= 8) {
    values = std::span<Element>(buffer, n.children.size());
  } else {
    heap.resize(n.children.size());
    values = heap;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) values[i] = eval(n.children[i], args);
  return algebra_.apply(n.index, values);
}

Element CompiledTerm::operator()(std::span<const Element> args) const {
  if (args.size() < variables_)
    throw InvalidInput("term needs " + std::to_string(variables_) + " arguments, got " +
                       std::to_string(args.size()));
  for (Element x : args)
    if (x >= algebra_.size()) throw InvalidInput("term argument out of range");
  return eval(root_, args);
}

Element eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Element> args) {
  return CompiledTerm(a, t)(args);
}

std::vector<Element> term_table(const FiniteAlgebra& a, const Term& t, std::size_t arity) {
  CompiledTerm compiled(a, t);
  if (arity < compiled.variable_count()) throw InvalidInput("term_table: arity too small");
  const std::size_t n = a.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  std::vector<Element> table(total);
  std::vector<Element> args(arity, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    table[idx] = compiled(args);
    for (std::size_t i = arity; i-- > 0;) {
      if (++args[i] < n) break;
      args[i] = 0;
    }
  }
  return table;
}

}  // namespace ualg
