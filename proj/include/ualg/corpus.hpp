#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/term.hpp"

namespace ualg {

enum class Kind { group, module, lattice, set };

struct CorpusEntry {
  FiniteAlgebra algebra;
  Kind kind = Kind::set;
  /// Builtin difference term name (group_d, module_d, proj_d), if any.
  std::optional<std::string> difference_term;
  /// Whether the variety generated by the algebra is residually small. Data,
  /// not computed.
  bool residually_small = false;
  /// Known to be an abelian group or module.
  bool abelian = false;
};

/// The builtin algebras, ordered by name.
const std::vector<CorpusEntry>& builtin_corpus();
std::optional<CorpusEntry> find_builtin(std::string_view name);

/// mul(mul(x,inv(y)),z), x+(-y)+z and the first projection.
Term group_difference_term();
Term module_difference_term();
Term projection_difference_term();
/// Resolves group_d, module_d and proj_d; anything else is parsed as a term.
Term difference_term_by_name(std::string_view name);

/// Group with operations mul, inv, e from a multiplication table whose
/// identity is element 0.
FiniteAlgebra group_from_table(std::string name, std::size_t n,
                               const std::vector<Element>& mul);
FiniteAlgebra cyclic_group(std::size_t n);
/// Lattice with operations meet and join from its order relation.
FiniteAlgebra lattice_from_order(std::string name, std::size_t n,
                                 const std::vector<std::pair<Element, Element>>& covers);

}  // namespace ualg
