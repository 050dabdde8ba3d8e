#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/term.hpp"

namespace ualg {

struct DifferenceTerm {
  Term term;
  /// Names of the algebras on which validate_difference_term succeeded.
  std::vector<std::string> validated_on;
};

/// Ternary term operation of one algebra, tabulated when the table is small
/// and evaluated through the compiled term otherwise.
class TernaryOperation {
 public:
  TernaryOperation(const FiniteAlgebra& a, const Term& t);
  Element operator()(Element x, Element y, Element z) const;

 private:
  std::size_t n_;
  CompiledTerm compiled_;
  std::vector<Element> table_;
};

struct DifferenceTermViolation {
  /// "d(x,y,y) = x" or "d(x,x,y) = y".
  std::string law;
  Element x = 0, y = 0;
  Element value = 0;
  /// The abelian congruence containing (x,y), for the second law.
  std::optional<Partition> theta;
};

/// Checks d(x,y,y) = x on all pairs, then d(x,x,y) = y for every abelian
/// congruence theta (in lattice order) and every (x,y) in theta.
std::optional<DifferenceTermViolation> difference_term_violation(const CommutatorTable& table,
                                                                 const Term& d);
/// Records the algebra in d.validated_on on success.
bool validate_difference_term(const FiniteAlgebra& a, DifferenceTerm& d);

/// A failing instance of the term condition: condition (i) involves a single
/// chain; condition (ii) one chain per argument of `operation`.
struct GummWitness {
  int condition = 0;
  std::string operation;
  std::vector<std::array<Element, 3>> chains;  // (x_i, y_i, z_i)
  Element lhs = 0, rhs = 0;
};

struct GummResult {
  bool holds = true;
  std::optional<GummWitness> witness;
  std::size_t chains = 0;  // number of chains x phi y psi z
};

/// For phi >= psi, evaluates over all chains x_i phi y_i psi z_i:
///   (i)  d(y,y,z) = z;
///   (ii) f(d(x_1,y_1,z_1),..) = d(f(x..), f(y..), f(z..)) for every basic
///        operation f and for f = d itself.
/// The witness is the first failure in lexicographic chain order.
GummResult check_gumm_characterization(const FiniteAlgebra& a, const Term& d, const Partition& phi,
                                       const Partition& psi, Execution ex = Execution::parallel);

struct CorollaryWitness {
  Element a = 0, x = 0, y = 0, value = 0;
};

/// d(x,a,d(a,x,y)) = y for all a and all x zeta y.
std::optional<CorollaryWitness> check_corollary_24(const CommutatorTable& table, const Term& d);

struct CentralExtensionInput {
  FiniteAlgebra abar;
  /// Injective homomorphism from A into abar.
  Homomorphism embedding;
  /// Base point, an element of A.
  Element base = 0;
  Partition alphabar;
  Partition beta;
  /// The center of abar (or a congruence the caller knows equals it).
  Partition center;
};

/// beta-bar = {(x,y) in zeta : d(a,x,y) in [a]beta}. Checks the
/// preconditions (InvalidInput) and asserts that the result is a congruence
/// of abar below alphabar restricting to beta (Falsification otherwise).
Partition extend_central_congruence(const CentralExtensionInput& in, const Term& d);
/// Same, computing the center of abar.
Partition extend_central_congruence(const FiniteAlgebra& abar, const Homomorphism& embedding,
                                    Element base, const Partition& alphabar,
                                    const Partition& beta, const Term& d);

struct CubeHypotheses {
  bool non_abelian = false;
  bool center_dense = false;
  /// A nonzero congruence meeting the center trivially, when not dense.
  std::optional<Partition> density_witness;
  bool hold() const { return non_abelian && center_dense; }
};

struct CubeExtension {
  FiniteAlgebra base;
  Partition center;
  CubeHypotheses hypotheses;
  ProductAlgebra cube;
  /// Triples a zeta b zeta c, ascending by encoding.
  Subalgebra chained;
  Partition theta;  // on chained: kernel of d
  Partition Theta;  // on the cube
  Quotient chained_quotient;
  Quotient cube_quotient;
  Homomorphism embedding;  // chained_quotient -> cube_quotient
  bool proper = false;
  bool essential = false;
  /// A pair of the cube quotient whose principal congruence restricts to 0.
  std::optional<std::pair<Element, Element>> essentiality_witness;
  /// Distinct Theta obtained over every base point of the chained triples.
  std::size_t base_point_variants = 0;
};

/// Builds B = {(a,b,c) : a zeta b zeta c} <= A^3, theta = ker(d : B -> A), and
/// Theta extending theta with base point (0,0,0), then the induced embedding
/// B/theta -> A^3/Theta. Hypotheses are reported, not enforced; when they
/// hold, essentiality is asserted.
CubeExtension build_cube_extension(const FiniteAlgebra& a, const Term& d);

}  // namespace ualg
