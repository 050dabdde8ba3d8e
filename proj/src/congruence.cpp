#include "ualg/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>

#include "ualg/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ualg {

namespace {

// Mal'cev closure: every successful merge is queued, and every queued pair is
// pushed through every basic translation. The equivalence generated by the
// queued pairs is then closed under translations.
template <class OnMerge>
bool close_under_translations(const TranslationSet& ts, UnionFind& uf,
                              std::vector<std::pair<Element, Element>>& work, OnMerge&& on_merge) {
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    bool stop = false;
    ts.for_each_image(x, y, [&](Element tx, Element ty) {
      if (stop || tx == ty) return;
      const Element rx = uf.find(tx), ry = uf.find(ty);
      if (rx == ry) return;
      if (on_merge(rx, ry)) {
        stop = true;
        return;
      }
      uf.unite(rx, ry);
      work.emplace_back(tx, ty);
    });
    if (stop) return true;
  }
  return false;
}

Partition principal_with(const TranslationSet& ts, std::size_t n, Element x, Element y) {
  UnionFind uf(n);
  std::vector<std::pair<Element, Element>> work;
  if (uf.unite(x, y)) work.emplace_back(x, y);
  close_under_translations(ts, uf, work, [](Element, Element) { return false; });
  return Partition::from_union_find(uf);
}

std::vector<Partition> unique_sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

// Decodes the k-th pair x < y in lexicographic order.
std::pair<Element, Element> pair_at(std::size_t n, std::size_t k) {
  Element x = 0;
  std::size_t row = n - 1;
  while (k >= row) {
    k -= row;
    ++x;
    --row;
  }
  return {x, static_cast<Element>(x + 1 + k)};
}

}  // namespace

std::optional<CongruenceViolation> congruence_violation(const FiniteAlgebra& a,
                                                        const Partition& p) {
  if (p.size() != a.size()) throw InvalidInput("is_congruence: partition size mismatch");
  const std::size_t n = a.size();
  TranslationSet ts(a);
  for (const auto& family : ts.families()) {
    const auto& op = a.operation(family.operation);
    for (std::size_t base : family.bases) {
      for (Element x = 0; x < n; ++x) {
        const Element r = p.rep(x);
        if (r == x) continue;
        const Element fx = family.table[base + r * family.stride];
        const Element fy = family.table[base + x * family.stride];
        if (p.related(fx, fy)) continue;
        CongruenceViolation v;
        v.operation = op.name;
        v.position = family.position;
        v.x = r;
        v.y = x;
        v.fx = fx;
        v.fy = fy;
        std::size_t rest = base;
        v.arguments.assign(op.arity, 0);
        for (std::size_t j = op.arity; j-- > 0;) {
          v.arguments[j] = static_cast<Element>(rest % n);
          rest /= n;
        }
        v.arguments[family.position] = r;
        return v;
      }
    }
  }
  return std::nullopt;
}

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  return !congruence_violation(a, p).has_value();
}

Partition generated_congruence(const FiniteAlgebra& a,
                               std::span<const std::pair<Element, Element>> pairs) {
  TranslationSet ts(a);
  UnionFind uf(a.size());
  std::vector<std::pair<Element, Element>> work;
  for (auto [x, y] : pairs) {
    if (x >= a.size() || y >= a.size()) throw InvalidInput("generated_congruence: out of range");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  close_under_translations(ts, uf, work, [](Element, Element) { return false; });
  return Partition::from_union_find(uf);
}

Partition principal_congruence(const FiniteAlgebra& a, Element x, Element y) {
  if (x >= a.size() || y >= a.size()) throw InvalidInput("principal_congruence: out of range");
  TranslationSet ts(a);
  return principal_with(ts, a.size(), x, y);
}

std::vector<Partition> principal_congruences(const FiniteAlgebra& a, Execution ex) {
  const std::size_t n = a.size();
  const std::size_t pairs = pair_count(n);
  TranslationSet ts(a);
  std::vector<Partition> out(pairs);
  if (ex == Execution::serial) {
    std::size_t k = 0;
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y) out[k++] = principal_with(ts, n, x, y);
  } else {
    // Row-parallel; each pair writes its own slot, so the merge below is
    // independent of the schedule.
#pragma omp parallel for schedule(dynamic)
    for (long xi = 0; xi < static_cast<long>(n); ++xi) {
      const Element x = static_cast<Element>(xi);
      std::size_t k = static_cast<std::size_t>(x) * (2 * n - x - 1) / 2;
      for (Element y = x + 1; y < n; ++y) out[k++] = principal_with(ts, n, x, y);
    }
  }
  return unique_sorted(std::move(out));
}

std::size_t CongruenceLattice::Hash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Element r : p.reps()) h = (h ^ r) * 1099511628211ull;
  return h;
}

CongruenceLattice::CongruenceLattice(FiniteAlgebra algebra, std::vector<Partition> elements)
    : algebra_(std::move(algebra)), elements_(unique_sorted(std::move(elements))) {
  const std::size_t n = algebra_.size();
  const std::size_t m = elements_.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (elements_[i].size() != n) throw InvalidInput("lattice element size mismatch");
    index_.emplace(elements_[i], i);
  }
  auto z = index_.find(Partition::zero(n));
  auto o = index_.find(Partition::one(n));
  if (z == index_.end() || o == index_.end())
    throw InvalidInput("congruence lattice must contain 0 and 1");
  bottom_ = z->second;
  top_ = o->second;

  leq_.assign(m * m, false);
  meet_.assign(m * m, 0);
  join_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Partition mt = ualg::meet(elements_[i], elements_[j]);
      const Partition jn = equivalence_join(elements_[i], elements_[j]);
      auto mi = index_.find(mt);
      auto ji = index_.find(jn);
      if (mi == index_.end() || ji == index_.end())
        throw InvalidInput("element set is not closed under meet and join");
      meet_[i * m + j] = meet_[j * m + i] = mi->second;
      join_[i * m + j] = join_[j * m + i] = ji->second;
      leq_[i * m + j] = mi->second == i;
      leq_[j * m + i] = mi->second == j;
    }
  }
}

std::optional<std::size_t> CongruenceLattice::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CongruenceLattice::require_index(const Partition& p) const {
  auto i = index_of(p);
  if (!i) throw InvalidInput("partition " + p.to_string() + " is not a congruence of " +
                             algebra_.name());
  return *i;
}

std::vector<std::size_t> CongruenceLattice::upper_covers(std::size_t i) const {
  std::vector<std::size_t> above;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != i && leq(i, j)) above.push_back(j);
  std::vector<std::size_t> covers;
  for (std::size_t j : above) {
    bool minimal = true;
    for (std::size_t k : above)
      if (k != j && leq(k, j)) {
        minimal = false;
        break;
      }
    if (minimal) covers.push_back(j);
  }
  return covers;
}

std::vector<std::size_t> CongruenceLattice::lower_covers(std::size_t i) const {
  std::vector<std::size_t> below;
  for (std::size_t j = 0; j < size(); ++j)
    if (j != i && leq(j, i)) below.push_back(j);
  std::vector<std::size_t> covers;
  for (std::size_t j : below) {
    bool maximal = true;
    for (std::size_t k : below)
      if (k != j && leq(j, k)) {
        maximal = false;
        break;
      }
    if (maximal) covers.push_back(j);
  }
  return covers;
}

std::size_t CongruenceLattice::height() const {
  // Longest chain; process elements by increasing block-pair count so every
  // element below another is handled first.
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return elements_[x].block_count() > elements_[y].block_count();
  });
  std::vector<std::size_t> depth(size(), 0);
  for (std::size_t i : order)
    for (std::size_t j : lower_covers(i)) depth[i] = std::max(depth[i], depth[j] + 1);
  return depth[top_];
}

CongruenceLattice congruence_lattice(const FiniteAlgebra& a, Execution ex) {
  const std::size_t n = a.size();
  std::vector<Partition> principal = principal_congruences(a, ex);
  std::set<Partition> all(principal.begin(), principal.end());
  all.insert(Partition::zero(n));
  std::vector<Partition> frontier(principal);
  while (!frontier.empty()) {
    std::vector<std::vector<Partition>> found(frontier.size());
    auto expand = [&](std::size_t i) {
      for (const auto& p : principal) {
        if (p.leq(frontier[i])) continue;
        found[i].push_back(equivalence_join(frontier[i], p));
      }
    };
    if (ex == Execution::serial) {
      for (std::size_t i = 0; i < frontier.size(); ++i) expand(i);
    } else {
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < static_cast<long>(frontier.size()); ++i)
        expand(static_cast<std::size_t>(i));
    }
    std::vector<Partition> next;
    for (auto& list : found)
      for (auto& p : list)
        if (all.insert(p).second) next.push_back(std::move(p));
    frontier = std::move(next);
  }
  return CongruenceLattice(a, std::vector<Partition>(all.begin(), all.end()));
}

Partition join(const FiniteAlgebra& a, const Partition& p, const Partition& q) {
  if (p.size() != a.size() || q.size() != a.size())
    throw InvalidInput("join: partition size mismatch");
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < a.size(); ++x) {
    if (p.rep(x) != x) pairs.emplace_back(p.rep(x), x);
    if (q.rep(x) != x) pairs.emplace_back(q.rep(x), x);
  }
  return generated_congruence(a, pairs);
}

Partition restrict(const Partition& theta, std::span<const Element> embedding) {
  std::vector<std::size_t> labels(embedding.size());
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    if (embedding[i] >= theta.size()) throw InvalidInput("restrict: embedding out of range");
    labels[i] = theta.rep(embedding[i]);
  }
  return Partition::from_labels(labels);
}

Partition restrict(const Partition& theta, const Homomorphism& emb) {
  if (theta.size() != emb.target.size()) throw InvalidInput("restrict: size mismatch");
  return restrict(theta, std::span<const Element>(emb.map));
}

Partition product_congruence(const MixedRadix& encoding, std::span<const Partition> parts) {
  if (parts.size() != encoding.arity())
    throw InvalidInput("product_congruence: wrong number of factors");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].size() != encoding.radices()[i])
      throw InvalidInput("product_congruence: factor " + std::to_string(i) + " has wrong size");
  const std::size_t total = encoding.total();
  std::vector<Element> reps(total);
  std::vector<Element> coords(parts.size());
  for (Element x = 0; x < total; ++x) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      coords[i] = parts[i].rep(encoding.coordinate(x, i));
    reps[x] = encoding.encode(coords);
  }
  // Coordinatewise least representatives give the least tuple of the block.
  return Partition(std::move(reps));
}

ProductCongruenceCheck is_product_congruence(const MixedRadix& encoding, const Partition& theta) {
  if (theta.size() != encoding.total())
    throw InvalidInput("is_product_congruence: size mismatch");
  ProductCongruenceCheck out;
  for (std::size_t i = 0; i < encoding.arity(); ++i) {
    std::vector<std::pair<Element, Element>> pairs;
    for (Element x = 0; x < theta.size(); ++x)
      pairs.emplace_back(encoding.coordinate(theta.rep(x), i), encoding.coordinate(x, i));
    out.factors.push_back(Partition::from_pairs(encoding.radices()[i], pairs));
  }
  const Partition product = product_congruence(encoding, out.factors);
  for (Element x = 0; x < theta.size(); ++x) {
    if (product.rep(x) != x && !theta.related(product.rep(x), x)) {
      out.mismatch = std::make_pair(product.rep(x), x);
      break;
    }
  }
  return out;
}

std::vector<std::size_t> interval(const CongruenceLattice& lattice, std::size_t lo,
                                  std::size_t hi) {
  if (!lattice.leq(lo, hi)) throw InvalidInput("interval: lower end is not below upper end");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.leq(lo, i) && lattice.leq(i, hi)) out.push_back(i);
  return out;
}

std::vector<Partition> interval(const CongruenceLattice& lattice, const Partition& lo,
                                const Partition& hi) {
  std::vector<Partition> out;
  for (std::size_t i : interval(lattice, lattice.require_index(lo), lattice.require_index(hi)))
    out.push_back(lattice[i]);
  return out;
}

std::optional<Pentagon> find_pentagon(const CongruenceLattice& lattice) {
  // Non-modular iff some a < b and c have a∧c = b∧c and a∨c = b∨c.
  const std::size_t m = lattice.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !lattice.leq(a, b)) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (lattice.meet(a, c) == lattice.meet(b, c) && lattice.join(a, c) == lattice.join(b, c))
          return Pentagon{lattice.meet(a, c), a, b, c, lattice.join(a, c)};
      }
    }
  return std::nullopt;
}

bool is_modular(const CongruenceLattice& lattice) { return !find_pentagon(lattice).has_value(); }

std::optional<std::size_t> density_witness(const CongruenceLattice& lattice,
                                           const Partition& alpha) {
  const std::size_t ai = lattice.require_index(alpha);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (i != lattice.bottom() && lattice.meet(i, ai) == lattice.bottom()) return i;
  return std::nullopt;
}

bool is_dense(const CongruenceLattice& lattice, const Partition& alpha) {
  return !density_witness(lattice, alpha).has_value();
}

std::vector<std::size_t> meet_irreducibles(const CongruenceLattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (i != lattice.top() && lattice.upper_covers(i).size() == 1) out.push_back(i);
  return out;
}

bool is_fsi(const CongruenceLattice& lattice) {
  if (lattice.size() < 2) return false;
  const std::size_t z = lattice.bottom();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (i == z) continue;
    for (std::size_t j = i + 1; j < lattice.size(); ++j)
      if (j != z && lattice.meet(i, j) == z) return false;
  }
  return true;
}

bool is_si(const CongruenceLattice& lattice) {
  if (lattice.size() < 2) return false;
  const auto atoms = lattice.atoms();
  if (atoms.size() != 1) return false;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (i != lattice.bottom() && !lattice.leq(atoms[0], i)) return false;
  return true;
}

bool is_fsi(const FiniteAlgebra& a) { return is_fsi(congruence_lattice(a)); }
bool is_si(const FiniteAlgebra& a) { return is_si(congruence_lattice(a)); }

Partition kernel(const Homomorphism& h) {
  std::vector<std::size_t> labels(h.map.begin(), h.map.end());
  return Partition::from_labels(labels);
}

namespace {

// Closure of Cg(x,y) that stops at the first merge joining two classes which
// share a label.
class CollisionProbe {
 public:
  CollisionProbe(const TranslationSet& ts, std::span<const long> labels)
      : ts_(ts), labels_(labels), uf_(labels.size()), sets_(labels.size()) {}

  bool collides(Element x, Element y) {
    reset();
    std::vector<std::pair<Element, Element>> work;
    if (merge(uf_.find(x), uf_.find(y))) return true;
    uf_.unite(x, y);
    work.emplace_back(x, y);
    return close_under_translations(ts_, uf_, work,
                                    [&](Element rx, Element ry) { return merge(rx, ry); });
  }

 private:
  void reset() {
    const std::size_t n = labels_.size();
    uf_ = UnionFind(n);
    for (Element i = 0; i < n; ++i) {
      sets_[i].clear();
      if (labels_[i] >= 0) sets_[i].push_back(labels_[i]);
    }
  }

  // Returns true on a collision; otherwise combines the label sets into both
  // roots so whichever survives the union carries them.
  bool merge(Element rx, Element ry) {
    auto& a = sets_[rx];
    auto& b = sets_[ry];
    std::vector<long> merged;
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return true;
      merged.push_back(a[i] < b[j] ? a[i++] : b[j++]);
    }
    merged.insert(merged.end(), a.begin() + i, a.end());
    merged.insert(merged.end(), b.begin() + j, b.end());
    a = merged;
    b = std::move(merged);
    return false;
  }

  const TranslationSet& ts_;
  std::span<const long> labels_;
  UnionFind uf_;
  std::vector<std::vector<long>> sets_;
};

}  // namespace

std::optional<std::pair<Element, Element>> first_collision_free_pair(
    const FiniteAlgebra& a, std::span<const long> labels, Execution ex) {
  const std::size_t n = a.size();
  if (labels.size() != n) throw InvalidInput("label vector size mismatch");
  TranslationSet ts(a);
  const std::size_t pairs = pair_count(n);
  if (ex == Execution::serial) {
    CollisionProbe probe(ts, labels);
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (!probe.collides(x, y)) return std::make_pair(x, y);
    return std::nullopt;
  }
  std::atomic<std::size_t> best{pairs};
#pragma omp parallel
  {
    CollisionProbe probe(ts, labels);
#pragma omp for schedule(dynamic, 64)
    for (long k = 0; k < static_cast<long>(pairs); ++k) {
      const auto idx = static_cast<std::size_t>(k);
      if (idx >= best.load(std::memory_order_relaxed)) continue;
      auto [x, y] = pair_at(n, idx);
      if (!probe.collides(x, y)) {
        std::size_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
      }
    }
  }
  if (best.load() == pairs) return std::nullopt;
  return pair_at(n, best.load());
}

std::vector<std::pair<Element, Element>> collision_free_pairs(const FiniteAlgebra& a,
                                                          std::span<const long> labels,
                                                          Execution ex) {
  const std::size_t n = a.size();
  if (labels.size() != n) throw InvalidInput("label vector size mismatch");
  TranslationSet ts(a);
  const std::size_t pairs = pair_count(n);
  std::vector<char> free(pairs, 0);
  if (ex == Execution::serial) {
    CollisionProbe probe(ts, labels);
    for (std::size_t k = 0; k < pairs; ++k) {
      auto [x, y] = pair_at(n, k);
      free[k] = !probe.collides(x, y);
    }
  } else {
#pragma omp parallel
    {
      CollisionProbe probe(ts, labels);
#pragma omp for schedule(dynamic, 64)
      for (long k = 0; k < static_cast<long>(pairs); ++k) {
        auto [x, y] = pair_at(n, static_cast<std::size_t>(k));
        free[k] = !probe.collides(x, y);
      }
    }
  }
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t k = 0; k < pairs; ++k)
    if (free[k]) out.push_back(pair_at(n, k));
  return out;
}

std::optional<std::pair<Element, Element>> density_witness_pair(const FiniteAlgebra& a,
                                                                const Partition& alpha,
                                                                Execution ex) {
  if (alpha.size() != a.size()) throw InvalidInput("density: size mismatch");
  std::vector<long> labels(a.size());
  for (Element x = 0; x < a.size(); ++x) labels[x] = alpha.rep(x);
  return first_collision_free_pair(a, labels, ex);
}

}  // namespace ualg
