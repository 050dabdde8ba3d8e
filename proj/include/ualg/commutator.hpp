#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

/// The modular commutator via the Delta construction: on the subalgebra
/// A(alpha) = {(x,y) : x alpha y} of A^2, let Delta be the congruence
/// generated by all ((b,b),(c,c)) with b beta c. Then
///   [alpha, beta] = {(x,y) : (x,x) Delta (x,y)}.
/// Only valid when A lies in a congruence modular variety; the caller vouches
/// for that. Use CommutatorTable or commutator() for the guarded entry points.
Partition commutator_unchecked(const FiniteAlgebra& a, const Partition& alpha,
                               const Partition& beta);

/// Con(A) together with cached commutators. Construction refuses algebras
/// whose congruence lattice is not modular.
class CommutatorTable {
 public:
  explicit CommutatorTable(CongruenceLattice lattice);
  explicit CommutatorTable(const FiniteAlgebra& a);

  const CongruenceLattice& lattice() const noexcept { return lattice_; }
  const FiniteAlgebra& algebra() const noexcept { return lattice_.algebra(); }

  /// Lattice index of [i, j]. Thread-safe; the cache only stores values that
  /// would be recomputed identically.
  std::size_t commutator(std::size_t i, std::size_t j) const;
  const Partition& commutator_partition(std::size_t i, std::size_t j) const {
    return lattice_[commutator(i, j)];
  }
  Partition commutator(const Partition& alpha, const Partition& beta) const;

  /// Largest central congruence, from the principal criterion
  /// zeta = {(a,b) : [Cg(a,b), 1] = 0}.
  std::size_t center() const;
  /// Same congruence found by scanning the lattice for the largest central
  /// element. Kept as an independent cross-check.
  std::size_t center_by_scan() const;

  bool is_abelian(std::size_t i) const { return commutator(i, i) == lattice_.bottom(); }
  bool is_central(std::size_t i) const {
    return commutator(i, lattice_.top()) == lattice_.bottom();
  }

 private:
  CongruenceLattice lattice_;
  std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::vector<std::optional<std::size_t>> cache_;
  mutable std::optional<std::size_t> center_;
};

Partition commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);
Partition center(const FiniteAlgebra& a);
bool is_abelian_congruence(const FiniteAlgebra& a, const Partition& theta);
bool is_central_congruence(const FiniteAlgebra& a, const Partition& theta);
/// [1,1] = 0.
bool is_abelian(const FiniteAlgebra& a);
/// zeta = 0.
bool is_centerless(const FiniteAlgebra& a);

/// Image of phi (which must lie above the kernel) in Con(A/pi).
Partition quotient_congruence(const Partition& phi, const Homomorphism& natural_map);

struct FactCheck {
  std::string fact;
  bool passed = true;
  std::size_t instances = 0;
  std::string witness;
};

struct FactReport {
  std::vector<FactCheck> checks;
  bool all_passed() const;
};

struct FactPartners {
  /// Subuniverses B of A for the restriction facts.
  std::vector<std::vector<Element>> subuniverses;
  /// Algebras B for the product-center fact.
  std::vector<FiniteAlgebra> product_partners;
};

/// Exhaustively checks the basic commutator facts on A: bounds, symmetry and
/// join additivity; restriction to subalgebras; the quotient formula; center
/// of products and of subalgebras; permutability of abelian congruences.
FactReport check_fact_properties(const FiniteAlgebra& a, const FactPartners& partners = {});

struct C1Witness {
  std::size_t alpha, beta;  // lattice indices
  Partition lhs;            // alpha ∧ [beta, beta]
  Partition rhs;            // [alpha ∧ beta, beta]
};

/// First (alpha, beta) in canonical order violating
/// alpha ∧ [beta,beta] = [alpha ∧ beta, beta].
std::optional<C1Witness> c1_violation(const CommutatorTable& table);
bool check_C1(const FiniteAlgebra& a);

struct PermutationWitness {
  std::size_t abelian, other;  // lattice indices
  std::string detail;
};

/// For every abelian theta and every phi: theta∘phi = phi∘theta = theta∨phi.
std::optional<PermutationWitness> abelian_permutation_violation(const CommutatorTable& table);
bool check_abelian_permutes(const FiniteAlgebra& a);

}  // namespace ualg
