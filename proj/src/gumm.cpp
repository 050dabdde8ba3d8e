#include "ualg/gumm.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "ualg/decompose.hpp"
#include "ualg/error.hpp"

namespace ualg {

namespace {

constexpr std::size_t kMaxTabulated = std::size_t{1} << 22;

std::size_t cube(std::size_t n) { return n * n * n; }

}  // namespace

TernaryOperation::TernaryOperation(const FiniteAlgebra& a, const Term& t)
    : n_(a.size()), compiled_(a, t) {
  if (compiled_.variable_count() > 3) throw InvalidInput("difference term has more than 3 variables");
  if (cube(n_) <= kMaxTabulated) table_ = term_table(a, t, 3);
}

Element TernaryOperation::operator()(Element x, Element y, Element z) const {
  if (!table_.empty()) return table_[(x * n_ + y) * n_ + z];
  const Element args[] = {x, y, z};
  return compiled_(args);
}

std::optional<DifferenceTermViolation> difference_term_violation(const CommutatorTable& table,
                                                                 const Term& d) {
  const FiniteAlgebra& a = table.algebra();
  const std::size_t n = a.size();
  TernaryOperation dt(a, d);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (Element v = dt(x, y, y); v != x) return DifferenceTermViolation{"d(x,y,y) = x", x, y, v, {}};
  const auto& lat = table.lattice();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!table.is_abelian(i)) continue;
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (lat[i].related(x, y))
          if (Element v = dt(x, x, y); v != y)
            return DifferenceTermViolation{"d(x,x,y) = y", x, y, v, lat[i]};
  }
  return std::nullopt;
}

bool validate_difference_term(const FiniteAlgebra& a, DifferenceTerm& d) {
  if (difference_term_violation(CommutatorTable(a), d.term)) return false;
  if (std::find(d.validated_on.begin(), d.validated_on.end(), a.name()) == d.validated_on.end())
    d.validated_on.push_back(a.name());
  return true;
}

GummResult check_gumm_characterization(const FiniteAlgebra& a, const Term& d, const Partition& phi,
                                       const Partition& psi, Execution ex) {
  const std::size_t n = a.size();
  if (phi.size() != n || psi.size() != n) throw InvalidInput("gumm: size mismatch");
  if (!psi.leq(phi)) throw InvalidInput("gumm: psi " + psi.to_string() + " is not below phi " +
                                        phi.to_string());
  if (cube(n) > kMaxTabulated) throw SizeLimitExceeded(cube(n), kMaxTabulated);
  const std::vector<Element> dtab = term_table(a, d, 3);
  auto dd = [&](Element x, Element y, Element z) { return dtab[(x * n + y) * n + z]; };

  std::vector<std::array<Element, 3>> chains;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (phi.related(x, y))
        for (Element z = 0; z < n; ++z)
          if (psi.related(y, z)) chains.push_back({x, y, z});
  const std::size_t c = chains.size();
  GummResult result;
  result.chains = c;

  for (const auto& ch : chains)
    if (Element v = dd(ch[1], ch[1], ch[2]); v != ch[2]) {
      result.holds = false;
      result.witness = GummWitness{1, "d", {ch}, v, ch[2]};
      return result;
    }

  std::vector<Element> dchain(c);
  for (std::size_t i = 0; i < c; ++i) dchain[i] = dd(chains[i][0], chains[i][1], chains[i][2]);

  struct Op {
    std::string name;
    std::size_t arity;
    const Element* table;
  };
  std::vector<Op> ops;
  for (const auto& op : a.operations()) ops.push_back({op.name, op.arity, op.table.data()});
  ops.push_back({"d", 3, dtab.data()});

  for (const auto& op : ops) {
    const std::size_t k = op.arity;
    if (k == 0) {
      const Element v = op.table[0];
      if (dd(v, v, v) != v) {
        result.holds = false;
        result.witness = GummWitness{2, op.name, {}, v, dd(v, v, v)};
        return result;
      }
      continue;
    }
    // Scans every tuple of chains whose first entry is `first`; returns the
    // first failure in odometer order.
    auto scan = [&](std::size_t first) -> std::optional<GummWitness> {
      std::vector<std::size_t> idx(k, 0);
      idx[0] = first;
      while (true) {
        std::size_t lhs_i = 0, fx = 0, fy = 0, fz = 0;
        for (std::size_t j = 0; j < k; ++j) {
          const auto& ch = chains[idx[j]];
          lhs_i = lhs_i * n + dchain[idx[j]];
          fx = fx * n + ch[0];
          fy = fy * n + ch[1];
          fz = fz * n + ch[2];
        }
        const Element lhs = op.table[lhs_i];
        const Element rhs = dd(op.table[fx], op.table[fy], op.table[fz]);
        if (lhs != rhs) {
          GummWitness w{2, op.name, {}, lhs, rhs};
          for (std::size_t j = 0; j < k; ++j) w.chains.push_back(chains[idx[j]]);
          return w;
        }
        std::size_t j = k;
        while (j-- > 1) {
          if (++idx[j] < c) break;
          idx[j] = 0;
        }
        if (j == 0) return std::nullopt;
      }
    };

    std::optional<GummWitness> found;
    if (ex == Execution::serial) {
      for (std::size_t i = 0; i < c && !found; ++i) found = scan(i);
    } else {
      std::atomic<std::size_t> best{c};
      std::vector<std::optional<GummWitness>> slots(c);
#pragma omp parallel for schedule(dynamic, 1)
      for (long i = 0; i < static_cast<long>(c); ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (u >= best.load(std::memory_order_relaxed)) continue;
        slots[u] = scan(u);
        if (slots[u]) {
          std::size_t cur = best.load();
          while (u < cur && !best.compare_exchange_weak(cur, u)) {
          }
        }
      }
      if (best.load() < c) found = std::move(slots[best.load()]);
    }
    if (found) {
      result.holds = false;
      result.witness = std::move(found);
      return result;
    }
  }
  return result;
}

std::optional<CorollaryWitness> check_corollary_24(const CommutatorTable& table, const Term& d) {
  const FiniteAlgebra& a = table.algebra();
  const Partition& zeta = table.lattice()[table.center()];
  TernaryOperation dt(a, d);
  const std::size_t n = a.size();
  for (Element p = 0; p < n; ++p)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (zeta.related(x, y))
          if (Element v = dt(x, p, dt(p, x, y)); v != y) return CorollaryWitness{p, x, y, v};
  return std::nullopt;
}

namespace {

void require_extension_input(const CentralExtensionInput& in) {
  const FiniteAlgebra& abar = in.abar;
  const Homomorphism& emb = in.embedding;
  const FiniteAlgebra& a = emb.source;
  const std::size_t n = abar.size();
  if (emb.target.size() != n || emb.map.size() != a.size())
    throw InvalidInput("extend_central_congruence: embedding does not match the algebras");
  if (in.alphabar.size() != n || in.center.size() != n || in.beta.size() != a.size())
    throw InvalidInput("extend_central_congruence: partition size mismatch");
  if (in.base >= a.size()) throw InvalidInput("extend_central_congruence: base point out of range");
  if (!emb.is_injective()) throw InvalidInput("extend_central_congruence: map is not injective");
  if (auto v = homomorphism_violation(emb))
    throw InvalidInput("extend_central_congruence: map is not a homomorphism: " + v->detail);
  if (!is_congruence(abar, in.alphabar))
    throw InvalidInput("extend_central_congruence: alphabar is not a congruence");
  if (!is_congruence(a, in.beta))
    throw InvalidInput("extend_central_congruence: beta is not a congruence");
  if (!in.alphabar.leq(in.center))
    throw InvalidInput("extend_central_congruence: alphabar is not below the center");
  if (!in.beta.leq(restrict(in.alphabar, emb)))
    throw InvalidInput("extend_central_congruence: beta is not below the restriction of alphabar");
}

// The relation {(x,y) in center : d(base,x,y) in [base]beta}; throws unless
// it is an equivalence.
template <class D>
Partition extension_relation(const CentralExtensionInput& in, const D& dt, Element base_in_a) {
  const Homomorphism& emb = in.embedding;
  const std::size_t n = in.abar.size();
  const Element base = emb(base_in_a);
  std::vector<bool> in_class(n, false);
  for (Element b = 0; b < emb.source.size(); ++b)
    if (in.beta.related(b, base_in_a)) in_class[emb(b)] = true;

  std::vector<bool> rel(n * n, false);
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& block : in.center.blocks())
    for (Element x : block)
      for (Element y : block) {
        if (in_class[dt(base, x, y)]) {
          rel[x * n + y] = true;
          if (x < y) pairs.emplace_back(x, y);
        }
      }
  Partition out = Partition::from_pairs(n, pairs);
  for (const auto& block : out.blocks())
    for (Element x : block)
      for (Element y : block)
        if (!rel[x * n + y])
          throw Falsification("extended relation is not an equivalence: (" + std::to_string(x) +
                              "," + std::to_string(y) + ") missing");
  return out;
}

void require_extension_output(const CentralExtensionInput& in, const Partition& out) {
  if (auto v = congruence_violation(in.abar, out))
    throw Falsification("extended relation is not compatible with '" + v->operation + "'");
  if (!out.leq(in.alphabar)) throw Falsification("extended relation is not below alphabar");
  if (restrict(out, in.embedding) != in.beta)
    throw Falsification("extended relation does not restrict to beta");
}

}  // namespace

Partition extend_central_congruence(const CentralExtensionInput& in, const Term& d) {
  require_extension_input(in);
  const CompiledTerm dt(in.abar, d);
  const auto eval = [&](Element b, Element x, Element y) {
    const Element args[] = {b, x, y};
    return dt(args);
  };
  const Partition out = extension_relation(in, eval, in.base);
  require_extension_output(in, out);
  return out;
}

Partition extend_central_congruence(const FiniteAlgebra& abar, const Homomorphism& embedding,
                                    Element base, const Partition& alphabar,
                                    const Partition& beta, const Term& d) {
  return extend_central_congruence(
      CentralExtensionInput{abar, embedding, base, alphabar, beta, center(abar)}, d);
}

CubeExtension build_cube_extension(const FiniteAlgebra& a, const Term& d) {
  CommutatorTable table(a);
  if (auto v = difference_term_violation(table, d))
    throw InvalidInput("term " + d.to_string() + " is not a difference term on " + a.name() +
                       ": " + v->law + " fails at x=" + std::to_string(v->x) +
                       ", y=" + std::to_string(v->y));
  const auto& lat = table.lattice();
  const Partition zeta = lat[table.center()];

  CubeHypotheses hyp;
  hyp.non_abelian = !table.is_abelian(lat.top());
  const auto dw = density_witness(lat, zeta);
  hyp.center_dense = !dw.has_value();
  if (dw) hyp.density_witness = lat[*dw];

  ProductAlgebra cube_alg = make_product({a, a, a});
  const auto& enc = cube_alg.encoding;
  std::vector<Element> universe;
  for (Element t = 0; t < enc.total(); ++t) {
    const Element x = enc.coordinate(t, 0), y = enc.coordinate(t, 1), z = enc.coordinate(t, 2);
    if (zeta.related(x, y) && zeta.related(y, z)) universe.push_back(t);
  }
  Subalgebra chained = make_subalgebra(cube_alg.algebra, universe, a.name() + "^3 chained");

  TernaryOperation dt(a, d);
  std::vector<Element> dmap(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const Element t = universe[i];
    dmap[i] = dt(enc.coordinate(t, 0), enc.coordinate(t, 1), enc.coordinate(t, 2));
  }
  Homomorphism dhom{chained.algebra, a, dmap};
  if (auto v = homomorphism_violation(dhom))
    throw Falsification("d is not a homomorphism on the chained triples: " + v->detail);
  if (!dhom.is_surjective()) throw Falsification("d is not surjective on the chained triples");
  const Partition theta = kernel(dhom);

  const Partition parts[] = {zeta, zeta, zeta};
  const Partition zeta3 = product_congruence(enc, parts);
  CentralExtensionInput input{cube_alg.algebra, chained.inclusion, 0, zeta3, theta, zeta3};
  const Partition Theta = extend_central_congruence(input, d);

  Quotient bq = make_quotient(chained.algebra, theta);
  Quotient cq = make_quotient(cube_alg.algebra, Theta);
  std::vector<Element> rep_of(bq.algebra.size());
  for (Element b = universe.size(); b-- > 0;) rep_of[bq.natural_map(b)] = b;
  std::vector<Element> emap(bq.algebra.size());
  for (Element q = 0; q < emap.size(); ++q) emap[q] = cq.natural_map(chained.inclusion(rep_of[q]));
  Homomorphism embedding{bq.algebra, cq.algebra, emap};
  if (auto v = homomorphism_violation(embedding))
    throw Falsification("induced map is not a homomorphism: " + v->detail);
  if (!embedding.is_injective()) throw Falsification("induced map is not injective");

  // Preconditions do not depend on the base point; every distinct result
  // still has its postconditions checked.
  std::array<std::vector<Element>, 3> coord;
  for (std::size_t i = 0; i < 3; ++i)
    for (Element t = 0; t < enc.total(); ++t) coord[i].push_back(enc.coordinate(t, i));
  const std::size_t n = a.size();
  const auto cube_d = [&](Element u, Element x, Element y) {
    return static_cast<Element>(
        (dt(coord[0][u], coord[0][x], coord[0][y]) * n + dt(coord[1][u], coord[1][x], coord[1][y])) * n +
        dt(coord[2][u], coord[2][x], coord[2][y]));
  };
  std::set<Partition> variants{Theta};
  for (Element b = 1; b < universe.size(); ++b) {
    Partition v = extension_relation(input, cube_d, b);
    if (variants.count(v)) continue;
    input.base = b;
    require_extension_output(input, v);
    variants.insert(std::move(v));
  }

  CubeExtension out;
  out.base_point_variants = variants.size();
  out.base = a;
  out.center = zeta;
  out.hypotheses = hyp;
  out.cube = std::move(cube_alg);
  out.chained = std::move(chained);
  out.theta = theta;
  out.Theta = Theta;
  out.chained_quotient = std::move(bq);
  out.cube_quotient = std::move(cq);
  out.embedding = embedding;
  out.proper = !embedding.is_surjective();
  const EssentialityCheck ess = check_essential(embedding);
  out.essential = ess.essential;
  out.essentiality_witness = ess.pair;
  if (hyp.hold() && !out.essential)
    throw Falsification("cube extension of " + a.name() + " is not essential");
  return out;
}

}  // namespace ualg
