#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

enum class Execution { serial, parallel };

struct CongruenceViolation {
  std::string operation;
  std::size_t position = 0;
  /// Arguments of the operation with the moving slot holding `x`.
  std::vector<Element> arguments;
  Element x = 0, y = 0;    // related by the partition
  Element fx = 0, fy = 0;  // images, not related
};

std::optional<CongruenceViolation> congruence_violation(const FiniteAlgebra& a,
                                                        const Partition& p);
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Least congruence containing all the pairs.
Partition generated_congruence(const FiniteAlgebra& a,
                               std::span<const std::pair<Element, Element>> pairs);
Partition principal_congruence(const FiniteAlgebra& a, Element x, Element y);

/// Distinct principal congruences Cg(x,y), x < y, in ascending order.
std::vector<Partition> principal_congruences(const FiniteAlgebra& a,
                                             Execution ex = Execution::parallel);

/// Con(A) as a finite lattice. Elements are held in ascending lexicographic
/// order of their representative arrays, so index 0 is 1_A and the last index
/// is 0_A.
class CongruenceLattice {
 public:
  CongruenceLattice(FiniteAlgebra algebra, std::vector<Partition> elements);

  const FiniteAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Partition& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Partition> elements() const noexcept { return elements_; }

  std::optional<std::size_t> index_of(const Partition& p) const;
  /// Throws InvalidInput if p is not in the lattice.
  std::size_t require_index(const Partition& p) const;

  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i * size() + j]; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i * size() + j]; }

  std::vector<std::size_t> upper_covers(std::size_t i) const;
  std::vector<std::size_t> lower_covers(std::size_t i) const;
  std::vector<std::size_t> atoms() const { return upper_covers(bottom_); }
  /// Length of the longest chain from bottom to top.
  std::size_t height() const;

 private:
  struct Hash {
    std::size_t operator()(const Partition& p) const noexcept;
  };

  FiniteAlgebra algebra_;
  std::vector<Partition> elements_;
  std::unordered_map<Partition, std::size_t, Hash> index_;
  std::vector<bool> leq_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// All principal congruences closed under joins, plus 0_A. The parallel
/// variant computes principal congruences and join frontiers concurrently;
/// the result is identical to the serial one.
CongruenceLattice congruence_lattice(const FiniteAlgebra& a, Execution ex = Execution::parallel);

/// Congruence join: the congruence generated by the union of p and q.
Partition join(const FiniteAlgebra& a, const Partition& p, const Partition& q);

/// a1 ~ a2 iff emb(a1) theta emb(a2).
Partition restrict(const Partition& theta, const Homomorphism& emb);
Partition restrict(const Partition& theta, std::span<const Element> embedding);

/// Tuples related iff related in every coordinate.
Partition product_congruence(const MixedRadix& encoding, std::span<const Partition> parts);

struct ProductCongruenceCheck {
  /// Projections of theta to each coordinate (equivalence-closed).
  std::vector<Partition> factors;
  /// Set when theta is strictly smaller than the product of its projections:
  /// a pair related by the product but not by theta.
  std::optional<std::pair<Element, Element>> mismatch;
  bool is_product() const noexcept { return !mismatch.has_value(); }
};

ProductCongruenceCheck is_product_congruence(const MixedRadix& encoding, const Partition& theta);

/// Indices of the interval [lo, hi], ascending. Throws unless lo <= hi.
std::vector<std::size_t> interval(const CongruenceLattice& lattice, std::size_t lo, std::size_t hi);
std::vector<Partition> interval(const CongruenceLattice& lattice, const Partition& lo,
                                const Partition& hi);

/// Five lattice indices spanning a pentagon: bottom < a < b < top with c
/// incomparable, a∧c = b∧c = bottom and a∨c = b∨c = top.
struct Pentagon {
  std::size_t bottom, a, b, c, top;
};

std::optional<Pentagon> find_pentagon(const CongruenceLattice& lattice);
bool is_modular(const CongruenceLattice& lattice);

/// First nonzero element (canonical order) whose meet with alpha is 0.
std::optional<std::size_t> density_witness(const CongruenceLattice& lattice, const Partition& alpha);
bool is_dense(const CongruenceLattice& lattice, const Partition& alpha);

/// Elements other than the top with exactly one upper cover.
std::vector<std::size_t> meet_irreducibles(const CongruenceLattice& lattice);
/// 0_A is meet irreducible: A is nontrivial and 0 is not a meet of two
/// nonzero congruences.
bool is_fsi(const CongruenceLattice& lattice);
/// A is nontrivial and has a unique atom lying below every nonzero congruence.
bool is_si(const CongruenceLattice& lattice);
bool is_fsi(const FiniteAlgebra& a);
bool is_si(const FiniteAlgebra& a);

Partition kernel(const Homomorphism& h);

/// Searches pairs x < y in lexicographic order for the first whose principal
/// congruence relates no two distinct elements carrying the same label.
/// Negative labels never collide. The closure for each pair stops as soon as
/// a collision appears, which keeps sweeps over large algebras cheap.
std::optional<std::pair<Element, Element>> first_collision_free_pair(
    const FiniteAlgebra& a, std::span<const long> labels, Execution ex = Execution::parallel);

/// Every pair x < y passing the same test, in lexicographic order.
std::vector<std::pair<Element, Element>> collision_free_pairs(const FiniteAlgebra& a,
                                                          std::span<const long> labels,
                                                          Execution ex = Execution::parallel);
/// Density of alpha in Con(A) without building the lattice: every nonzero
/// congruence contains a principal one, so alpha is dense iff no Cg(x,y)
/// meets it trivially. Returns the first such pair.
std::optional<std::pair<Element, Element>> density_witness_pair(const FiniteAlgebra& a,
                                                                const Partition& alpha,
                                                                Execution ex = Execution::parallel);

}  // namespace ualg
