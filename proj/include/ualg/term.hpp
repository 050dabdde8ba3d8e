#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

/// An immutable term tree. Leaves are 0-based variables; inner nodes name an
/// operation of the target signature.
class Term {
 public:
  static Term variable(std::size_t index);
  static Term apply(std::string op, std::vector<Term> args = {});

  /// Grammar: term := var | name | name '(' term {',' term} ')'.
  /// `x`, `y`, `z` are variables 0, 1, 2 and `x<k>` is variable k; any other
  /// bare name is a nullary operation.
  static Term parse(std::string_view text);

  bool is_variable() const;
  std::size_t variable_index() const;
  const std::string& op() const;
  std::span<const Term> args() const;

  /// One more than the largest variable index (0 for ground terms).
  std::size_t variable_count() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A term with operation names resolved against one algebra.
class CompiledTerm {
 public:
  /// Throws InvalidInput on an unknown operation or an arity mismatch.
  CompiledTerm(const FiniteAlgebra& a, const Term& t);

  Element operator()(std::span<const Element> args) const;
  std::size_t variable_count() const noexcept { return variables_; }
  const FiniteAlgebra& algebra() const noexcept { return algebra_; }

 private:
  struct Node {
    bool is_variable;
    std::size_t index;  // variable index or operation index
    std::vector<std::size_t> children;
  };
  Element eval(std::size_t node, std::span<const Element> args) const;

  FiniteAlgebra algebra_;
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::size_t variables_ = 0;
};

/// Evaluates t at `args`. Throws InvalidInput if there are fewer arguments
/// than variables.
Element eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Element> args);

/// The term operation of t as a table of the given arity (last argument
/// fastest), arity >= t.variable_count().
std::vector<Element> term_table(const FiniteAlgebra& a, const Term& t, std::size_t arity);

}  // namespace ualg
