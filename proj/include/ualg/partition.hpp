#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ualg {

using Element = std::uint32_t;

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  Element find(Element x);
  /// Returns true when x and y were in different sets.
  bool unite(Element x, Element y);
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<Element> parent_;
  std::vector<std::uint32_t> weight_;
};

/// An equivalence relation on {0..n-1} in canonical form: rep(x) is the least
/// member of the block of x. Equality of partitions is equality of the
/// representative arrays, and the total order is lexicographic on them.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidInput unless `reps` is canonical.
  explicit Partition(std::vector<Element> reps);

  static Partition zero(std::size_t n);
  static Partition one(std::size_t n);
  /// Canonicalises an arbitrary labelling: x ~ y iff labels[x] == labels[y].
  static Partition from_labels(std::span<const std::size_t> labels);
  /// Equivalence relation generated by the pairs.
  static Partition from_pairs(std::size_t n,
                              std::span<const std::pair<Element, Element>> pairs);
  static Partition from_union_find(UnionFind& uf);
  /// Blocks as lists of elements; every element must appear exactly once.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<Element>>& blocks);

  std::size_t size() const noexcept { return reps_.size(); }
  Element rep(Element x) const { return reps_[x]; }
  bool related(Element x, Element y) const { return reps_[x] == reps_[y]; }
  std::span<const Element> reps() const noexcept { return reps_; }

  bool is_zero() const;
  bool is_one() const;
  std::size_t block_count() const;
  /// Blocks ordered by least member; members ascending.
  std::vector<std::vector<Element>> blocks() const;
  /// Index of the block of each element, blocks numbered by least member.
  std::vector<Element> block_index() const;

  /// Refinement order: every block of *this lies inside a block of other.
  bool leq(const Partition& other) const;

  /// Human-readable form such as "0,2|1,3".
  std::string to_string() const;
  /// Inverse of to_string. Elements not mentioned become singletons.
  static Partition parse(std::size_t n, const std::string& text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Element> reps_;
};

Partition meet(const Partition& p, const Partition& q);
/// Join in the lattice of equivalence relations. The join of two congruences
/// is a congruence, so this is also the join in Con(A).
Partition equivalence_join(const Partition& p, const Partition& q);

/// A binary relation on {0..n-1} as a dense bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}
  static Relation of(const Partition& p);

  std::size_t size() const noexcept { return n_; }
  bool contains(Element x, Element y) const { return bits_[x * n_ + y]; }
  void insert(Element x, Element y) { bits_[x * n_ + y] = true; }
  std::size_t pair_count() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }
  /// Only meaningful when is_equivalence().
  Partition to_partition() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

/// Relational product: x (r∘s) z iff x r y and y s z for some y.
Relation compose(const Relation& r, const Relation& s);
Relation compose(const Partition& p, const Partition& q);

/// Union of the blocks of p that meet `subset`, as a sorted element list.
std::vector<Element> saturate(std::span<const Element> subset, const Partition& p);

}  // namespace ualg
