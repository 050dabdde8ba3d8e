#include "ualg/algebra.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <unordered_set>

#include "ualg/congruence.hpp"
#include "ualg/error.hpp"

namespace ualg {

namespace {

std::atomic<std::size_t> g_max_universe{1024};

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > SIZE_MAX / base) throw InvalidInput("operation table too large");
    out *= base;
  }
  return out;
}

std::string format_tuple(std::span<const Element> t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Advances a little-endian-in-significance counter where the last digit is
// fastest. Returns false after the final tuple.
bool next_tuple(std::vector<Element>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

std::size_t max_universe_size() noexcept { return g_max_universe.load(); }
void set_max_universe_size(std::size_t limit) noexcept { g_max_universe.store(limit); }

void check_universe_size(std::size_t required) {
  const std::size_t limit = max_universe_size();
  if (required > limit) throw SizeLimitExceeded(required, limit);
}

FiniteAlgebra::FiniteAlgebra(std::string name, std::size_t size,
                             std::vector<OperationTable> operations) {
  if (size == 0) throw InvalidInput("algebra '" + name + "' has an empty universe");
  std::set<std::string> names;
  for (const auto& op : operations) {
    if (!names.insert(op.name).second)
      throw InvalidInput("duplicate operation name '" + op.name + "'");
    const std::size_t expected = checked_power(size, op.arity);
    if (op.table.size() != expected)
      throw InvalidInput("operation '" + op.name + "' has " + std::to_string(op.table.size()) +
                         " entries, expected " + std::to_string(expected));
    for (std::size_t i = 0; i < op.table.size(); ++i)
      if (op.table[i] >= size)
        throw InvalidInput("operation '" + op.name + "' entry " + std::to_string(i) +
                           " is out of range");
  }
  data_ = std::make_shared<const Data>(Data{std::move(name), size, std::move(operations)});
}

std::optional<std::size_t> FiniteAlgebra::find_operation(std::string_view name) const {
  for (std::size_t i = 0; i < operation_count(); ++i)
    if (data_->operations[i].name == name) return i;
  return std::nullopt;
}

Element FiniteAlgebra::apply(std::size_t op, std::span<const Element> args) const {
  const auto& table = data_->operations[op];
  std::size_t index = 0;
  for (Element a : args) index = index * data_->size + a;
  return table.table[index];
}

Signature FiniteAlgebra::signature() const {
  Signature s;
  for (const auto& op : operations()) s.symbols.emplace_back(op.name, op.arity);
  return s;
}

bool FiniteAlgebra::has_nullary() const {
  return std::any_of(operations().begin(), operations().end(),
                     [](const OperationTable& op) { return op.arity == 0; });
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra copy;
  copy.data_ = std::make_shared<const Data>(Data{std::move(name), size(), data_->operations});
  return copy;
}

void require_signature_compatible(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const auto sa = a.signature().symbols;
  const auto sb = b.signature().symbols;
  for (std::size_t i = 0; i < std::max(sa.size(), sb.size()); ++i) {
    if (i >= sa.size() || i >= sb.size() || sa[i] != sb[i]) {
      const std::string name = i < sa.size() ? sa[i].first : sb[i].first;
      throw InvalidInput("signature mismatch between '" + a.name() + "' and '" + b.name() +
                         "' at operation '" + name + "'");
    }
  }
}

bool Homomorphism::is_injective() const {
  std::vector<bool> hit(target.size(), false);
  for (Element y : map) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool Homomorphism::is_surjective() const { return image().size() == target.size(); }

std::vector<Element> Homomorphism::image() const {
  std::vector<Element> out(map);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<OperationViolation> homomorphism_violation(const Homomorphism& h) {
  require_signature_compatible(h.source, h.target);
  if (h.map.size() != h.source.size()) throw InvalidInput("map length differs from source size");
  for (Element y : h.map)
    if (y >= h.target.size()) throw InvalidInput("map value outside the target universe");
  const std::size_t n = h.source.size();
  std::vector<std::size_t> order(h.source.operation_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return h.source.operation(x).arity < h.source.operation(y).arity;
  });
  for (std::size_t op : order) {
    const auto& table = h.source.operation(op);
    std::vector<Element> args(table.arity, 0), mapped(table.arity);
    do {
      for (std::size_t i = 0; i < args.size(); ++i) mapped[i] = h.map[args[i]];
      const Element lhs = h.map[h.source.apply(op, args)];
      const Element rhs = h.target.apply(op, mapped);
      if (lhs != rhs) {
        return OperationViolation{
            table.name, args,
            "h(" + table.name + format_tuple(args) + ") = " + std::to_string(lhs) + " but " +
                table.name + format_tuple(mapped) + " = " + std::to_string(rhs)};
      }
    } while (next_tuple(args, n));
  }
  return std::nullopt;
}

bool is_homomorphism(const Homomorphism& h) { return !homomorphism_violation(h).has_value(); }

MixedRadix::MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  weights_.assign(radices_.size(), 1);
  total_ = 1;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    weights_[i] = total_;
    if (radices_[i] == 0) throw InvalidInput("zero radix");
    total_ *= radices_[i];
  }
}

Element MixedRadix::encode(std::span<const Element> coords) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) x = x * radices_[i] + coords[i];
  return static_cast<Element>(x);
}

std::vector<Element> MixedRadix::decode(Element x) const {
  std::vector<Element> out(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) out[i] = coordinate(x, i);
  return out;
}

ProductAlgebra make_product(const std::vector<FiniteAlgebra>& factors) {
  if (factors.empty()) throw InvalidInput("make_product needs at least one factor");
  for (std::size_t i = 1; i < factors.size(); ++i)
    require_signature_compatible(factors[0], factors[i]);

  std::vector<std::size_t> radices;
  std::size_t total = 1;
  std::string name;
  for (const auto& f : factors) {
    radices.push_back(f.size());
    total = total > SIZE_MAX / f.size() ? SIZE_MAX : total * f.size();
    if (!name.empty()) name += " x ";
    name += f.name();
  }
  check_universe_size(total);
  MixedRadix enc(radices);

  std::vector<OperationTable> ops;
  const std::size_t m = factors.size();
  for (std::size_t op = 0; op < factors[0].operation_count(); ++op) {
    OperationTable out{factors[0].operation(op).name, factors[0].operation(op).arity, {}};
    const std::size_t k = out.arity;
    out.table.resize(checked_power(total, k));
    std::vector<Element> args(k, 0), coord_args(k), result(m);
    std::size_t idx = 0;
    do {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) coord_args[j] = enc.coordinate(args[j], i);
        result[i] = factors[i].apply(op, coord_args);
      }
      out.table[idx++] = enc.encode(result);
    } while (next_tuple(args, total));
    ops.push_back(std::move(out));
  }

  ProductAlgebra product{FiniteAlgebra(name, total, std::move(ops)), enc, factors, {}};
  for (std::size_t i = 0; i < m; ++i) {
    Homomorphism pi{product.algebra, factors[i], std::vector<Element>(total)};
    for (Element x = 0; x < total; ++x) pi.map[x] = enc.coordinate(x, i);
    product.projections.push_back(std::move(pi));
  }
  return product;
}

Quotient make_quotient(const FiniteAlgebra& a, const Partition& theta) {
  if (theta.size() != a.size()) throw InvalidInput("make_quotient: partition size mismatch");
  if (auto v = congruence_violation(a, theta)) {
    throw InvalidInput("make_quotient: not a congruence; operation '" + v->operation +
                       "' at position " + std::to_string(v->position) + " maps related " +
                       std::to_string(v->x) + "," + std::to_string(v->y) + " to unrelated " +
                       std::to_string(v->fx) + "," + std::to_string(v->fy));
  }
  const auto index = theta.block_index();
  const auto blocks = theta.blocks();
  const std::size_t q = blocks.size();
  std::vector<OperationTable> ops;
  for (const auto& op : a.operations()) {
    OperationTable out{op.name, op.arity, std::vector<Element>(checked_power(q, op.arity))};
    std::vector<Element> args(op.arity, 0), reps(op.arity);
    std::size_t idx = 0;
    do {
      for (std::size_t j = 0; j < op.arity; ++j) reps[j] = blocks[args[j]].front();
      std::size_t flat = 0;
      for (Element r : reps) flat = flat * a.size() + r;
      out.table[idx++] = index[op.table[flat]];
    } while (next_tuple(args, q));
    ops.push_back(std::move(out));
  }
  std::string name = a.name() + "/" +
                     (a.size() <= 16 ? theta.to_string() : std::to_string(q) + " blocks");
  FiniteAlgebra quotient(std::move(name), q, std::move(ops));
  return Quotient{quotient, Homomorphism{a, quotient, index}};
}

std::vector<Element> subalgebra_generated(const FiniteAlgebra& a, std::span<const Element> seed) {
  const std::size_t n = a.size();
  std::vector<bool> in(n, false);
  std::vector<Element> members;
  for (Element s : seed) {
    if (s >= n) throw InvalidInput("subalgebra_generated: seed element out of range");
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  if (members.empty() && !a.has_nullary())
    throw InvalidInput("subalgebra_generated: empty seed and no constants");

  // Naive fixpoint: re-scan all argument tuples over the current members until
  // nothing new appears.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t op = 0; op < a.operation_count(); ++op) {
      const std::size_t k = a.operation(op).arity;
      const std::vector<Element> current(members);
      const std::size_t m = current.size();
      if (k > 0 && m == 0) continue;
      std::vector<Element> pos(k, 0), args(k);
      do {
        for (std::size_t j = 0; j < k; ++j) args[j] = current[pos[j]];
        const Element r = a.apply(op, args);
        if (!in[r]) {
          in[r] = true;
          members.push_back(r);
          changed = true;
        }
      } while (k > 0 && next_tuple(pos, m));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subalgebra make_subalgebra(const FiniteAlgebra& a, std::span<const Element> universe,
                           std::string name) {
  std::vector<Element> members(universe.begin(), universe.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InvalidInput("make_subalgebra: empty universe");
  if (subalgebra_generated(a, members) != members)
    throw InvalidInput("make_subalgebra: subset is not closed under the operations");
  std::vector<long> position(a.size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<long>(i);
  const std::size_t m = members.size();
  std::vector<OperationTable> ops;
  for (std::size_t op = 0; op < a.operation_count(); ++op) {
    const auto& src = a.operation(op);
    OperationTable out{src.name, src.arity, std::vector<Element>(checked_power(m, src.arity))};
    std::vector<Element> pos(src.arity, 0), args(src.arity);
    std::size_t idx = 0;
    do {
      for (std::size_t j = 0; j < src.arity; ++j) args[j] = members[pos[j]];
      out.table[idx++] = static_cast<Element>(position[a.apply(op, args)]);
    } while (next_tuple(pos, m));
    ops.push_back(std::move(out));
  }
  if (name.empty()) name = "sub(" + a.name() + ")";
  FiniteAlgebra sub(std::move(name), m, std::move(ops));
  return Subalgebra{sub, Homomorphism{sub, a, members}};
}

std::vector<std::vector<Element>> all_subuniverses(const FiniteAlgebra& a) {
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> frontier;
  auto add = [&](std::vector<Element> s) {
    if (found.insert(s).second) frontier.push_back(std::move(s));
  };
  if (!a.has_nullary()) found.insert(std::vector<Element>{});
  else add(subalgebra_generated(a, {}));
  for (Element x = 0; x < a.size(); ++x) {
    const Element seed[] = {x};
    add(subalgebra_generated(a, seed));
  }
  std::vector<std::vector<Element>> singles(found.begin(), found.end());
  // Every subuniverse is the join of the subuniverses generated by its
  // elements, so closing under binary joins with the one-generated ones
  // reaches all of them.
  while (!frontier.empty()) {
    auto current = std::move(frontier);
    frontier.clear();
    for (const auto& s : current) {
      for (const auto& g : singles) {
        if (g.empty()) continue;
        std::vector<Element> u;
        std::set_union(s.begin(), s.end(), g.begin(), g.end(), std::back_inserter(u));
        if (u.size() == s.size()) continue;
        add(subalgebra_generated(a, u));
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteAlgebra& a, const FiniteAlgebra& b)
      : a_(a), b_(b), n_(a.size()), forward_(n_, kNone), backward_(n_, kNone) {}

  std::optional<std::vector<Element>> run() {
    std::vector<std::pair<Element, Element>> trail;
    if (!propagate(trail)) return std::nullopt;
    if (search()) return forward_;
    return std::nullopt;
  }

 private:
  static constexpr Element kNone = ~Element{0};

  bool assign(Element x, Element y, std::vector<std::pair<Element, Element>>& trail) {
    if (forward_[x] != kNone) return forward_[x] == y;
    if (backward_[y] != kNone) return false;
    forward_[x] = y;
    backward_[y] = x;
    trail.emplace_back(x, y);
    return true;
  }

  void undo(std::vector<std::pair<Element, Element>>& trail) {
    for (auto [x, y] : trail) {
      forward_[x] = kNone;
      backward_[y] = kNone;
    }
    trail.clear();
  }

  // Forces f(a(args)) = b(f(args)) for every fully assigned argument tuple.
  bool propagate(std::vector<std::pair<Element, Element>>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Element> assigned;
      for (Element x = 0; x < n_; ++x)
        if (forward_[x] != kNone) assigned.push_back(x);
      for (std::size_t op = 0; op < a_.operation_count(); ++op) {
        const std::size_t k = a_.operation(op).arity;
        if (k > 0 && assigned.empty()) continue;
        std::vector<Element> pos(k, 0), args(k), images(k);
        do {
          for (std::size_t j = 0; j < k; ++j) {
            args[j] = assigned[pos[j]];
            images[j] = forward_[args[j]];
          }
          const Element x = a_.apply(op, args);
          const Element y = b_.apply(op, images);
          if (forward_[x] == kNone) {
            if (!assign(x, y, trail)) return false;
            changed = true;
          } else if (forward_[x] != y) {
            return false;
          }
        } while (k > 0 && next_tuple(pos, assigned.size()));
      }
    }
    return true;
  }

  bool search() {
    Element x = 0;
    while (x < n_ && forward_[x] != kNone) ++x;
    if (x == n_) return true;
    for (Element y = 0; y < n_; ++y) {
      if (backward_[y] != kNone) continue;
      std::vector<std::pair<Element, Element>> trail;
      if (assign(x, y, trail) && propagate(trail) && search()) return true;
      undo(trail);
    }
    return false;
  }

  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  std::size_t n_;
  std::vector<Element> forward_, backward_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteAlgebra& a,
                                                     const FiniteAlgebra& b) {
  if (a.size() != b.size() || !a.signature_compatible(b)) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

TranslationSet::TranslationSet(const FiniteAlgebra& a) : algebra_(a) {
  const std::size_t n = a.size();
  for (std::size_t op = 0; op < a.operation_count(); ++op) {
    const auto& table = a.operation(op);
    const std::size_t k = table.arity;
    for (std::size_t pos = 0; pos < k; ++pos) {
      Family family{op, pos, table.table.data(), checked_power(n, k - 1 - pos), {}};
      // Bases: all flat indices whose digit at `pos` is zero.
      std::vector<Element> digits(k - 1, 0);
      do {
        std::size_t flat = 0, d = 0;
        for (std::size_t j = 0; j < k; ++j) flat = flat * n + (j == pos ? 0 : digits[d++]);
        family.bases.push_back(flat);
      } while (k > 1 && next_tuple(digits, n));
      count_ += family.bases.size();
      families_.push_back(std::move(family));
    }
  }
}

}  // namespace ualg
