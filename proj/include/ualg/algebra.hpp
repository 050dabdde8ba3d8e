#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/partition.hpp"

namespace ualg {

/// Largest universe any construction may produce. Defaults to 1024; the CLI
/// sets it from --max-size or UALG_MAX_SIZE at start-up.
std::size_t max_universe_size() noexcept;
void set_max_universe_size(std::size_t limit) noexcept;
/// Throws SizeLimitExceeded when `required` is over the limit.
void check_universe_size(std::size_t required);

/// A k-ary operation on {0..n-1}. Entries are row-major with the last
/// argument varying fastest, so f(a0,..,ak-1) sits at sum a_i * n^(k-1-i).
struct OperationTable {
  std::string name;
  std::size_t arity = 0;
  std::vector<Element> table;
};

struct Signature {
  std::vector<std::pair<std::string, std::size_t>> symbols;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A finite algebra on the universe {0..n-1}. Immutable; copies share the
/// operation tables.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Validates table lengths, entry ranges and name uniqueness.
  FiniteAlgebra(std::string name, std::size_t size, std::vector<OperationTable> operations);

  const std::string& name() const noexcept { return data_->name; }
  std::size_t size() const noexcept { return data_->size; }
  std::span<const OperationTable> operations() const noexcept { return data_->operations; }
  const OperationTable& operation(std::size_t index) const { return data_->operations[index]; }
  std::size_t operation_count() const noexcept { return data_->operations.size(); }
  std::optional<std::size_t> find_operation(std::string_view name) const;

  Element apply(std::size_t op, std::span<const Element> args) const;
  Signature signature() const;
  bool signature_compatible(const FiniteAlgebra& other) const {
    return signature() == other.signature();
  }
  bool has_nullary() const;
  FiniteAlgebra renamed(std::string name) const;

 private:
  struct Data {
    std::string name;
    std::size_t size = 0;
    std::vector<OperationTable> operations;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws InvalidInput naming the first operation whose name or arity differs.
void require_signature_compatible(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// A total map between universes. Whether it preserves the operations is a
/// separate question; see homomorphism_violation.
struct Homomorphism {
  FiniteAlgebra source;
  FiniteAlgebra target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
  bool is_injective() const;
  bool is_surjective() const;
  /// Sorted distinct image elements.
  std::vector<Element> image() const;
};

struct OperationViolation {
  std::string operation;
  std::vector<Element> arguments;
  std::string detail;
};

/// First operation/tuple the map fails to preserve. Operations are taken by
/// ascending arity, then in signature order; tuples in table order.
std::optional<OperationViolation> homomorphism_violation(const Homomorphism& h);
bool is_homomorphism(const Homomorphism& h);

/// Mixed-radix encoding of tuples, first coordinate most significant.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::size_t> radices);

  std::size_t total() const noexcept { return total_; }
  std::span<const std::size_t> radices() const noexcept { return radices_; }
  std::size_t arity() const noexcept { return radices_.size(); }

  Element encode(std::span<const Element> coords) const;
  std::vector<Element> decode(Element x) const;
  Element coordinate(Element x, std::size_t i) const {
    return static_cast<Element>((x / weights_[i]) % radices_[i]);
  }

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> weights_;
  std::size_t total_ = 1;
};

struct ProductAlgebra {
  FiniteAlgebra algebra;
  MixedRadix encoding;
  std::vector<FiniteAlgebra> factors;
  std::vector<Homomorphism> projections;
};

ProductAlgebra make_product(const std::vector<FiniteAlgebra>& factors);

struct Quotient {
  FiniteAlgebra algebra;
  Homomorphism natural_map;
};

/// Blocks of theta become elements, numbered by least member ascending.
Quotient make_quotient(const FiniteAlgebra& a, const Partition& theta);

/// Least subuniverse containing `seed`, sorted.
std::vector<Element> subalgebra_generated(const FiniteAlgebra& a, std::span<const Element> seed);

struct Subalgebra {
  FiniteAlgebra algebra;
  Homomorphism inclusion;
};

/// The subalgebra on a closed subset; element i of the result is the i-th
/// smallest member of `universe`.
Subalgebra make_subalgebra(const FiniteAlgebra& a, std::span<const Element> universe,
                           std::string name = {});

/// Every subuniverse of `a` (nonempty ones, plus the empty set when the
/// signature has no constants), in ascending lexicographic order.
std::vector<std::vector<Element>> all_subuniverses(const FiniteAlgebra& a);

/// Backtracking search with forced-value propagation. Suitable for the small
/// algebras this library handles, not for general isomorphism testing.
std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b);

/// Precomputed unary translations x -> f(c_1,..,x,..,c_k) of the basic
/// operations. Congruence compatibility only needs to be checked against
/// these.
class TranslationSet {
 public:
  struct Family {
    std::size_t operation;
    std::size_t position;
    const Element* table;
    std::size_t stride;
    std::vector<std::size_t> bases;
  };

  explicit TranslationSet(const FiniteAlgebra& a);

  std::span<const Family> families() const noexcept { return families_; }
  std::size_t count() const noexcept { return count_; }

  /// Calls f(t(x), t(y)) for every translation t.
  template <class F>
  void for_each_image(Element x, Element y, F&& f) const {
    for (const auto& family : families_) {
      const std::size_t ox = x * family.stride;
      const std::size_t oy = y * family.stride;
      for (std::size_t base : family.bases) f(family.table[base + ox], family.table[base + oy]);
    }
  }

 private:
  FiniteAlgebra algebra_;
  std::vector<Family> families_;
  std::size_t count_ = 0;
};

}  // namespace ualg
