#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

struct EssentialityCheck {
  bool essential = true;
  /// Generating pair, in the target, of a nonzero congruence restricting to 0.
  std::optional<std::pair<Element, Element>> pair;
  std::optional<Partition> witness;
};

/// emb must be an injective homomorphism. Sweeps principal congruences of the
/// target, since a nonzero congruence restricting to 0 contains a principal
/// one that does too.
EssentialityCheck check_essential(const Homomorphism& emb, Execution ex = Execution::parallel);
bool is_essential(const Homomorphism& emb);
/// Reference version scanning the whole of Con(target) in lattice order.
std::optional<Partition> essentiality_witness_by_scan(const Homomorphism& emb);

/// Every congruence of the target whose restriction along emb is 0, in
/// ascending order. Built as the join closure of the principal ones.
std::vector<Partition> zero_restriction_congruences(const Homomorphism& emb);

/// A -> A/eta_1 x .. x A/eta_n.
struct SubdirectRepresentation {
  FiniteAlgebra algebra;
  std::vector<Partition> kernels;
  std::vector<Quotient> factors;
  ProductAlgebra product;
  Homomorphism embedding;
  /// alpha_i = eta_i v (meet of eta_j, j != i), on A.
  std::vector<Partition> alphas;
  /// alpha_i / eta_i, on factor i.
  std::vector<Partition> alpha_bars;
};

/// Requires a nonempty list of congruences meeting to 0.
SubdirectRepresentation make_representation(const FiniteAlgebra& a,
                                            std::vector<Partition> kernels);

struct ProductEssentialCheck {
  bool product_essential = true;
  /// First tuple (phi_i) in lattice order, not all zero, with
  /// (phi_1 x .. x phi_n) restricting to 0.
  std::optional<std::vector<Partition>> witness;
  std::size_t tuples = 0;
};

ProductEssentialCheck check_product_essential(const SubdirectRepresentation& rep);
bool is_product_essential(const SubdirectRepresentation& rep);

/// The kernel criterion: meet of etas is 0 and no tuple phi_i >= eta_i other
/// than the etas themselves meets to 0. Returns such a tuple, or the etas
/// when their meet is not 0.
std::optional<std::vector<Partition>> meet_system_violation(const CongruenceLattice& lattice,
                                                            std::span<const Partition> etas);

struct MaximizationStep {
  std::size_t index;
  Partition from, to;
};

struct MeetSystem {
  std::vector<Partition> phis;
  std::vector<MaximizationStep> chain;
};

/// For i = 1..n in turn, climbs from eta_i through the least upper cover
/// (lattice order) keeping phi_1 ^ .. ^ phi_i ^ eta_{i+1} ^ .. ^ eta_n = 0.
/// The result is checked against meet_system_violation.
MeetSystem maximize_meet_system(const CongruenceLattice& lattice,
                                const std::vector<Partition>& etas);

struct SubCheck {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string witness;
};

struct TheoremReport {
  std::string subject;
  std::vector<SubCheck> checks;
  bool passed() const;
  const SubCheck* find(const std::string& name) const;
};

/// Replays the argument that a product-essential subdirect representation is
/// essential, recording each step as a sub-check: prop35 (zero-restriction
/// congruences are central), lemma36 (product of alpha-bars is dense),
/// lemma37, lemma38 ([A] of the product of beta-bars is A), prop34 and the
/// final essential check. Throws InvalidInput unless rep is product-essential.
TheoremReport verify_theorem_33(const SubdirectRepresentation& rep);

struct Lemma37Result {
  bool holds = true;
  std::size_t k = 0;
  std::optional<std::pair<Element, Element>> pair;
};

/// (beta_1 ^ .. ^ beta_k) o beta_{k+1} = (eta_1 ^ .. ^ eta_k) o eta_{k+1} for
/// k = 1..n-1. Throws InvalidInput naming the hypothesis that fails:
/// eta_i <= beta_i <= alpha_i, or beta_i / eta_i central in A/eta_i.
Lemma37Result verify_lemma_37(const SubdirectRepresentation& rep,
                              const std::vector<Partition>& betas);

/// For each i, the congruences beta of A admissible for the lemma: the
/// interval from eta_i to alpha_i ^ (pullback of the center of A/eta_i).
std::vector<std::vector<Partition>> admissible_betas(const SubdirectRepresentation& rep);

enum class Outcome { direct_product, proper_essential_extension, hypothesis_failure };

std::string to_string(Outcome outcome);

struct DecompositionReport {
  FiniteAlgebra algebra;
  Outcome outcome = Outcome::hypothesis_failure;
  std::string detail;
  /// Maximized kernels and the corresponding quotients.
  std::vector<Partition> kernels;
  std::vector<FiniteAlgebra> factors;
  std::vector<MaximizationStep> chain;
  /// A -> product of the factors, verified injective homomorphism. For the
  /// product outcome it is also surjective.
  std::optional<Homomorphism> embedding;
  bool product_essential = false;
  bool essential = false;

  // Irredundant meet search.
  std::vector<Partition> irredundant_meet;

  // Center/abelian split.
  std::optional<Partition> center;
  std::optional<Partition> derived;  // [1,1]
  std::optional<bool> c1_holds;
  std::optional<Partition> hypothesis_witness;  // zeta ^ [1,1] when nonzero
  std::optional<bool> first_centerless;
  std::optional<bool> second_abelian;
};

/// Longest irredundant meet of meet-irreducible congruences equal to 0,
/// maximized; reports either a product of subdirectly irreducible factors
/// or a proper essential extension.
DecompositionReport decompose_absolute_retract(const FiniteAlgebra& a);

/// Maximizes (theta >= zeta, psi >= [1,1]) with theta ^ psi = 0 and examines
/// A -> A/theta x A/psi.
DecompositionReport split_center_abelian(const FiniteAlgebra& a);

/// theta ^ phi = 0 and theta o phi = 1, both proper.
struct FactorPair {
  Partition theta, phi;
};

struct FactorizationReport {
  /// Unordered complementary permuting pairs of A itself.
  std::vector<FactorPair> factor_pairs;
  /// Directly indecomposable factors up to isomorphism.
  std::vector<FiniteAlgebra> classes;
  /// Distinct factorizations of A as sorted multisets of class indices.
  std::vector<std::vector<std::size_t>> factorizations;
  bool unique() const { return factorizations.size() <= 1; }
};

FactorizationReport enumerate_direct_decompositions(const FiniteAlgebra& a);
bool check_unique_factorization(const FiniteAlgebra& a);

/// If A is not finitely subdirectly irreducible, takes the first pair of
/// nonzero congruences meeting to 0, maximizes it and checks the two-factor
/// representation is product-essential and essential.
TheoremReport verify_theorem_41(const FiniteAlgebra& a);

}  // namespace ualg
