#include "ualg/commutator.hpp"

#include <algorithm>
#include <limits>

#include "ualg/error.hpp"

namespace ualg {

namespace {

constexpr Element kAbsent = std::numeric_limits<Element>::max();

// Unary translations of A(alpha) for one (operation, position): each entry is
// a pair of bases into the operation table, one for the constants' first
// coordinates and one for their second coordinates.
struct PairedFamily {
  const Element* table;
  std::size_t stride;
  std::vector<std::pair<std::size_t, std::size_t>> bases;
};

}  // namespace

Partition commutator_unchecked(const FiniteAlgebra& a, const Partition& alpha,
                               const Partition& beta) {
  const std::size_t n = a.size();
  if (alpha.size() != n || beta.size() != n) throw InvalidInput("commutator: size mismatch");
  if (alpha.is_zero() || beta.is_zero()) return Partition::zero(n);

  std::vector<std::pair<Element, Element>> elems;
  std::vector<Element> index(n * n, kAbsent);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (alpha.related(x, y)) {
        index[x * n + y] = static_cast<Element>(elems.size());
        elems.emplace_back(x, y);
      }
  const std::size_t m = elems.size();

  std::vector<PairedFamily> families;
  for (const auto& op : a.operations()) {
    const std::size_t k = op.arity;
    for (std::size_t pos = 0; pos < k; ++pos) {
      PairedFamily fam{op.table.data(), 1, {}};
      for (std::size_t j = pos + 1; j < k; ++j) fam.stride *= n;
      std::vector<std::size_t> digits(k > 0 ? k - 1 : 0, 0);
      while (true) {
        std::size_t b1 = 0, b2 = 0, d = 0;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == pos) {
            b1 *= n;
            b2 *= n;
            continue;
          }
          const auto [c1, c2] = elems[digits[d++]];
          b1 = b1 * n + c1;
          b2 = b2 * n + c2;
        }
        fam.bases.emplace_back(b1, b2);
        std::size_t i = digits.size();
        while (i-- > 0) {
          if (++digits[i] < m) break;
          digits[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
      }
      families.push_back(std::move(fam));
    }
  }

  UnionFind uf(m);
  std::vector<std::pair<Element, Element>> work;
  for (Element b = 0; b < n; ++b) {
    const Element c = beta.rep(b);
    if (c == b) continue;
    const Element u = index[b * n + b], v = index[c * n + c];
    if (uf.unite(u, v)) work.emplace_back(u, v);
  }
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    const auto [x1, y1] = elems[u];
    const auto [x2, y2] = elems[v];
    for (const auto& fam : families) {
      for (auto [b1, b2] : fam.bases) {
        const Element tu = index[fam.table[b1 + x1 * fam.stride] * n + fam.table[b2 + y1 * fam.stride]];
        const Element tv = index[fam.table[b1 + x2 * fam.stride] * n + fam.table[b2 + y2 * fam.stride]];
        if (uf.find(tu) != uf.find(tv)) {
          uf.unite(tu, tv);
          work.emplace_back(tu, tv);
        }
      }
    }
  }

  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (x != y && alpha.related(x, y) && uf.find(index[x * n + x]) == uf.find(index[x * n + y]))
        pairs.emplace_back(x, y);
  return Partition::from_pairs(n, pairs);
}

CommutatorTable::CommutatorTable(CongruenceLattice lattice) : lattice_(std::move(lattice)) {
  if (auto p = find_pentagon(lattice_)) {
    throw Refusal("Con(" + lattice_.algebra().name() +
                  ") is not modular (pentagon " + lattice_[p->bottom].to_string() + " < " +
                  lattice_[p->a].to_string() + " < " + lattice_[p->b].to_string() + " < " +
                  lattice_[p->top].to_string() + ", side " + lattice_[p->c].to_string() +
                  "); commutator theory does not apply");
  }
  cache_.assign(lattice_.size() * lattice_.size(), std::nullopt);
}

CommutatorTable::CommutatorTable(const FiniteAlgebra& a) : CommutatorTable(congruence_lattice(a)) {}

std::size_t CommutatorTable::commutator(std::size_t i, std::size_t j) const {
  const std::size_t m = lattice_.size();
  if (i > j) std::swap(i, j);
  {
    std::lock_guard lock(*mutex_);
    if (cache_[i * m + j]) return *cache_[i * m + j];
  }
  const Partition c = commutator_unchecked(algebra(), lattice_[i], lattice_[j]);
  auto idx = lattice_.index_of(c);
  if (!idx) throw Falsification("commutator of " + lattice_[i].to_string() + " and " +
                                lattice_[j].to_string() + " is not a congruence");
  if (!lattice_.leq(*idx, lattice_.meet(i, j)))
    throw Falsification("commutator exceeds the meet for " + lattice_[i].to_string() + ", " +
                        lattice_[j].to_string());
  std::lock_guard lock(*mutex_);
  cache_[i * m + j] = *idx;
  return *idx;
}

Partition CommutatorTable::commutator(const Partition& alpha, const Partition& beta) const {
  return lattice_[commutator(lattice_.require_index(alpha), lattice_.require_index(beta))];
}

std::size_t CommutatorTable::center() const {
  {
    std::lock_guard lock(*mutex_);
    if (center_) return *center_;
  }
  const FiniteAlgebra& a = algebra();
  const std::size_t n = a.size();
  const std::size_t top = lattice_.top();
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<std::optional<bool>> central(lattice_.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      const std::size_t cg = lattice_.require_index(principal_congruence(a, x, y));
      if (!central[cg]) central[cg] = commutator(cg, top) == lattice_.bottom();
      if (*central[cg]) pairs.emplace_back(x, y);
    }
  const std::size_t zeta = lattice_.require_index(Partition::from_pairs(n, pairs));
  if (!is_central(zeta))
    throw Falsification("union of central principal congruences is not central in " + a.name());
  std::lock_guard lock(*mutex_);
  center_ = zeta;
  return zeta;
}

std::size_t CommutatorTable::center_by_scan() const {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < lattice_.size(); ++i) {
    if (!is_central(i)) continue;
    if (!best || lattice_.leq(*best, i)) best = i;
  }
  for (std::size_t i = 0; i < lattice_.size(); ++i)
    if (is_central(i) && !lattice_.leq(i, *best))
      throw Falsification("central congruences have no largest element in " + algebra().name());
  return *best;
}

Partition commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  return CommutatorTable(a).commutator(alpha, beta);
}

Partition center(const FiniteAlgebra& a) {
  CommutatorTable table(a);
  return table.lattice()[table.center()];
}

bool is_abelian_congruence(const FiniteAlgebra& a, const Partition& theta) {
  CommutatorTable table(a);
  return table.is_abelian(table.lattice().require_index(theta));
}

bool is_central_congruence(const FiniteAlgebra& a, const Partition& theta) {
  CommutatorTable table(a);
  return table.is_central(table.lattice().require_index(theta));
}

bool is_abelian(const FiniteAlgebra& a) {
  CommutatorTable table(a);
  return table.is_abelian(table.lattice().top());
}

bool is_centerless(const FiniteAlgebra& a) {
  CommutatorTable table(a);
  return table.center() == table.lattice().bottom();
}

Partition quotient_congruence(const Partition& phi, const Homomorphism& natural_map) {
  if (phi.size() != natural_map.source.size()) throw InvalidInput("quotient_congruence: size");
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < phi.size(); ++x)
    pairs.emplace_back(natural_map.map[x], natural_map.map[phi.rep(x)]);
  Partition out = Partition::from_pairs(natural_map.target.size(), pairs);
  if (!kernel(natural_map).leq(phi))
    throw InvalidInput("quotient_congruence: partition does not contain the kernel");
  return out;
}

bool FactReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FactCheck& c) { return c.passed; });
}

namespace {

void fail(FactCheck& check, std::string witness) {
  if (check.passed) {
    check.passed = false;
    check.witness = std::move(witness);
  }
}

FactCheck named(std::string fact) {
  FactCheck check;
  check.fact = std::move(fact);
  return check;
}

std::string pair_text(const CongruenceLattice& l, std::size_t i, std::size_t j) {
  return "(" + l[i].to_string() + ") , (" + l[j].to_string() + ")";
}

}  // namespace

FactReport check_fact_properties(const FiniteAlgebra& a, const FactPartners& partners) {
  CommutatorTable table(a);
  const auto& lat = table.lattice();
  const std::size_t m = lat.size();
  const std::size_t top = lat.top(), bot = lat.bottom();
  FactReport report;

  FactCheck bound = named("1(i)"), sym = named("1(ii)"), additive = named("1(iii)");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t c = table.commutator(i, j);
      ++bound.instances;
      if (!lat.leq(c, lat.meet(i, j))) fail(bound, pair_text(lat, i, j));
      // The table normalises argument order, so recompute the reversed
      // orientation from scratch.
      ++sym.instances;
      const Partition rev = commutator_unchecked(a, lat[j], lat[i]);
      if (rev != lat[c]) fail(sym, pair_text(lat, i, j));
      for (std::size_t k = 0; k < m; ++k) {
        ++additive.instances;
        const std::size_t lhs = table.commutator(i, lat.join(j, k));
        const std::size_t rhs = lat.join(c, table.commutator(i, k));
        if (lhs != rhs) fail(additive, pair_text(lat, i, j) + " , (" + lat[k].to_string() + ")");
      }
    }
  report.checks.push_back(bound);
  report.checks.push_back(sym);
  report.checks.push_back(additive);

  FactCheck restriction = named("2"), center_sub = named("4(ii)");
  const Partition& zeta = lat[table.center()];
  for (const auto& universe : partners.subuniverses) {
    if (universe.empty()) continue;
    std::string label = "{";
    for (std::size_t k = 0; k < universe.size(); ++k) label += (k ? "," : "") + std::to_string(universe[k]);
    Subalgebra sub = make_subalgebra(a, universe, label + "}");
    CommutatorTable sub_table(sub.algebra);
    const auto& sl = sub_table.lattice();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        ++restriction.instances;
        const std::size_t ri = sl.require_index(restrict(lat[i], sub.inclusion));
        const std::size_t rj = sl.require_index(restrict(lat[j], sub.inclusion));
        const std::size_t lhs = sub_table.commutator(ri, rj);
        const std::size_t rhs =
            sl.require_index(restrict(table.commutator_partition(i, j), sub.inclusion));
        if (!sl.leq(lhs, rhs)) fail(restriction, "B = " + sub.algebra.name() + ", " + pair_text(lat, i, j));
      }
    ++center_sub.instances;
    const Partition z_restricted = restrict(zeta, sub.inclusion);
    if (!z_restricted.leq(sl[sub_table.center()]))
      fail(center_sub, "B = " + sub.algebra.name());
  }
  report.checks.push_back(restriction);

  FactCheck quotient = named("3");
  for (std::size_t p = 0; p < m; ++p) {
    if (p == bot) continue;
    Quotient q = make_quotient(a, lat[p]);
    CommutatorTable qt(q.algebra);
    const auto& ql = qt.lattice();
    for (std::size_t i = 0; i < m; ++i) {
      if (!lat.leq(p, i)) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!lat.leq(p, j)) continue;
        ++quotient.instances;
        const std::size_t qi = ql.require_index(quotient_congruence(lat[i], q.natural_map));
        const std::size_t qj = ql.require_index(quotient_congruence(lat[j], q.natural_map));
        const Partition lhs = ql[qt.commutator(qi, qj)];
        const Partition rhs =
            quotient_congruence(lat[lat.join(table.commutator(i, j), p)], q.natural_map);
        if (lhs != rhs) fail(quotient, "pi = " + lat[p].to_string() + ", " + pair_text(lat, i, j));
      }
    }
  }
  report.checks.push_back(quotient);

  FactCheck center_product = named("4(i)");
  for (const auto& partner : partners.product_partners) {
    ++center_product.instances;
    ProductAlgebra prod = make_product({a, partner});
    CommutatorTable pt(prod.algebra);
    CommutatorTable bt(partner);
    const Partition parts[] = {zeta, bt.lattice()[bt.center()]};
    const Partition expected = product_congruence(prod.encoding, parts);
    if (pt.lattice()[pt.center()] != expected) fail(center_product, "B = " + partner.name());
  }
  report.checks.push_back(center_product);
  report.checks.push_back(center_sub);

  FactCheck permute = named("4(iii)");
  for (std::size_t i = 0; i < m; ++i)
    if (table.is_abelian(i)) permute.instances += m;
  if (auto w = abelian_permutation_violation(table)) fail(permute, w->detail);
  report.checks.push_back(permute);

  (void)top;
  return report;
}

std::optional<C1Witness> c1_violation(const CommutatorTable& table) {
  const auto& lat = table.lattice();
  for (std::size_t alpha = 0; alpha < lat.size(); ++alpha)
    for (std::size_t beta = 0; beta < lat.size(); ++beta) {
      const std::size_t lhs = lat.meet(alpha, table.commutator(beta, beta));
      const std::size_t rhs = table.commutator(lat.meet(alpha, beta), beta);
      if (lhs != rhs) return C1Witness{alpha, beta, lat[lhs], lat[rhs]};
    }
  return std::nullopt;
}

bool check_C1(const FiniteAlgebra& a) { return !c1_violation(CommutatorTable(a)).has_value(); }

std::optional<PermutationWitness> abelian_permutation_violation(const CommutatorTable& table) {
  const auto& lat = table.lattice();
  for (std::size_t t = 0; t < lat.size(); ++t) {
    if (!table.is_abelian(t)) continue;
    for (std::size_t p = 0; p < lat.size(); ++p) {
      const Relation tp = compose(lat[t], lat[p]);
      const Relation pt = compose(lat[p], lat[t]);
      const Relation j = Relation::of(lat[lat.join(t, p)]);
      if (tp != pt || tp != j)
        return PermutationWitness{t, p,
                                  "abelian " + lat[t].to_string() + " does not permute with " +
                                      lat[p].to_string()};
    }
  }
  return std::nullopt;
}

bool check_abelian_permutes(const FiniteAlgebra& a) {
  return !abelian_permutation_violation(CommutatorTable(a)).has_value();
}

}  // namespace ualg
