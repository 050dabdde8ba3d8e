#pragma once

#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

// Brute-force reference computations, independent of the closure-based
// routines. Only practical for very small universes.
namespace ualg::oracle {

/// Every partition of {0..n-1}, in ascending canonical order.
std::vector<Partition> all_partitions(std::size_t n);

/// Partitions compatible with every operation, checked on full argument
/// tuples rather than translations. Ascending canonical order.
std::vector<Partition> congruences_by_enumeration(const FiniteAlgebra& a);

/// The multiplication of a group given by an operation named "mul".
struct GroupView {
  std::size_t n = 0;
  std::vector<Element> mul;
  Element identity = 0;
  std::vector<Element> inverse;

  Element operator()(Element x, Element y) const { return mul[x * n + y]; }
};

/// Nullopt unless `a` has a binary "mul" forming a group.
std::optional<GroupView> group_view(const FiniteAlgebra& a);

/// Subgroup generated by a set of elements.
std::vector<Element> generated_subgroup(const GroupView& g, const std::vector<Element>& gens);

/// Normal subgroups, each sorted, in ascending lexicographic order.
std::vector<std::vector<Element>> normal_subgroups(const GroupView& g);

/// Cosets of a normal subgroup as a partition: x ~ y iff x^-1 y in N.
Partition coset_partition(const GroupView& g, const std::vector<Element>& normal);
/// The class of the identity.
std::vector<Element> identity_class(const GroupView& g, const Partition& p);

/// [M, N] = <m n m^-1 n^-1>, returned as the congruence of its cosets, for the
/// normal subgroups corresponding to alpha and beta.
Partition group_commutator(const GroupView& g, const Partition& alpha, const Partition& beta);

/// Cosets of Z(G) = {z : zg = gz for all g}.
Partition group_center(const GroupView& g);

}  // namespace ualg::oracle
