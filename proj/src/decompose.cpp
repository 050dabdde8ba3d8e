#include "ualg/decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ualg/commutator.hpp"
#include "ualg/error.hpp"

namespace ualg {

namespace {

std::vector<long> image_labels(const Homomorphism& emb) {
  std::vector<long> labels(emb.target.size(), -1);
  for (Element x : emb.map) labels[x] = 0;
  return labels;
}

void require_embedding(const Homomorphism& emb) {
  if (!emb.is_injective()) throw InvalidInput("map from " + emb.source.name() + " is not injective");
  if (auto v = homomorphism_violation(emb)) throw InvalidInput("map is not a homomorphism: " + v->detail);
}

Partition meet_all(std::span<const Partition> ps, std::size_t n) {
  Partition m = Partition::one(n);
  for (const auto& p : ps) m = meet(m, p);
  return m;
}

std::string pair_text(std::pair<Element, Element> p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string tuple_text(std::span<const Partition> ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "(" : ", (") + p.to_string() + ")";
  return s;
}

void fail(SubCheck& c, std::string witness) {
  if (!c.passed) return;
  c.passed = false;
  c.witness = std::move(witness);
}

SubCheck named(std::string name) {
  SubCheck c;
  c.name = std::move(name);
  return c;
}

std::vector<std::size_t> lattice_indices(const CongruenceLattice& lat, std::span<const Partition> ps) {
  std::vector<std::size_t> out;
  for (const auto& p : ps) out.push_back(lat.require_index(p));
  return out;
}

}  // namespace

EssentialityCheck check_essential(const Homomorphism& emb, Execution ex) {
  require_embedding(emb);
  const auto labels = image_labels(emb);
  EssentialityCheck out;
  out.pair = first_collision_free_pair(emb.target, labels, ex);
  if (out.pair) {
    out.essential = false;
    out.witness = principal_congruence(emb.target, out.pair->first, out.pair->second);
  }
  return out;
}

bool is_essential(const Homomorphism& emb) { return check_essential(emb).essential; }

std::optional<Partition> essentiality_witness_by_scan(const Homomorphism& emb) {
  require_embedding(emb);
  const CongruenceLattice lat = congruence_lattice(emb.target);
  for (const auto& p : lat.elements())
    if (!p.is_zero() && restrict(p, emb).is_zero()) return p;
  return std::nullopt;
}

std::vector<Partition> zero_restriction_congruences(const Homomorphism& emb) {
  const auto labels = image_labels(emb);
  std::set<Partition> gens;
  for (auto [x, y] : collision_free_pairs(emb.target, labels))
    gens.insert(principal_congruence(emb.target, x, y));
  std::set<Partition> found{Partition::zero(emb.target.size())};
  found.insert(gens.begin(), gens.end());
  std::vector<Partition> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        Partition j = equivalence_join(f, g);
        if (restrict(j, emb).is_zero() && found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

SubdirectRepresentation make_representation(const FiniteAlgebra& a,
                                            std::vector<Partition> kernels) {
  const std::size_t n = a.size();
  if (kernels.empty()) throw InvalidInput("a subdirect representation needs at least one kernel");
  for (const auto& k : kernels) {
    if (k.size() != n) throw InvalidInput("kernel size mismatch");
    if (auto v = congruence_violation(a, k))
      throw InvalidInput(k.to_string() + " is not a congruence of " + a.name());
  }
  if (!meet_all(kernels, n).is_zero())
    throw InvalidInput("kernels " + tuple_text(kernels) + " do not meet to 0");

  SubdirectRepresentation rep;
  rep.algebra = a;
  rep.kernels = std::move(kernels);
  std::vector<FiniteAlgebra> algebras;
  for (const auto& k : rep.kernels) {
    rep.factors.push_back(make_quotient(a, k));
    algebras.push_back(rep.factors.back().algebra);
  }
  rep.product = make_product(algebras);
  std::vector<Element> map(n);
  std::vector<Element> coords(rep.kernels.size());
  for (Element x = 0; x < n; ++x) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = rep.factors[i].natural_map(x);
    map[x] = rep.product.encoding.encode(coords);
  }
  rep.embedding = Homomorphism{a, rep.product.algebra, std::move(map)};
  if (auto v = homomorphism_violation(rep.embedding))
    throw Falsification("subdirect map is not a homomorphism: " + v->detail);
  if (!rep.embedding.is_injective()) throw Falsification("subdirect map is not injective");

  for (std::size_t i = 0; i < rep.kernels.size(); ++i) {
    Partition others = Partition::one(n);
    for (std::size_t j = 0; j < rep.kernels.size(); ++j)
      if (j != i) others = meet(others, rep.kernels[j]);
    rep.alphas.push_back(equivalence_join(rep.kernels[i], others));
    rep.alpha_bars.push_back(quotient_congruence(rep.alphas.back(), rep.factors[i].natural_map));
  }
  return rep;
}

ProductEssentialCheck check_product_essential(const SubdirectRepresentation& rep) {
  const std::size_t k = rep.factors.size();
  std::vector<CongruenceLattice> lats;
  for (const auto& f : rep.factors) lats.push_back(congruence_lattice(f.algebra));
  ProductEssentialCheck out;
  std::vector<std::size_t> idx(k, 0);
  std::vector<Partition> parts(k);
  while (true) {
    bool all_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      parts[i] = lats[i][idx[i]];
      all_zero = all_zero && parts[i].is_zero();
    }
    if (!all_zero) {
      ++out.tuples;
      const Partition prod = product_congruence(rep.product.encoding, parts);
      if (restrict(prod, rep.embedding).is_zero()) {
        out.product_essential = false;
        out.witness = parts;
        return out;
      }
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (++idx[i] < lats[i].size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

bool is_product_essential(const SubdirectRepresentation& rep) {
  return check_product_essential(rep).product_essential;
}

std::optional<std::vector<Partition>> meet_system_violation(const CongruenceLattice& lattice,
                                                            std::span<const Partition> etas) {
  const auto e = lattice_indices(lattice, etas);
  const std::size_t k = e.size();
  std::size_t m = lattice.top();
  for (std::size_t i : e) m = lattice.meet(m, i);
  if (m != lattice.bottom()) return std::vector<Partition>(etas.begin(), etas.end());

  std::vector<std::vector<std::size_t>> ranges;
  for (std::size_t i : e) ranges.push_back(interval(lattice, i, lattice.top()));
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::size_t meet_idx = lattice.top();
    bool same = true;
    for (std::size_t i = 0; i < k; ++i) {
      meet_idx = lattice.meet(meet_idx, ranges[i][idx[i]]);
      same = same && ranges[i][idx[i]] == e[i];
    }
    if (!same && meet_idx == lattice.bottom()) {
      std::vector<Partition> out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(lattice[ranges[i][idx[i]]]);
      return out;
    }
    std::size_t i = k;
    while (i-- > 0) {
      if (++idx[i] < ranges[i].size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return std::nullopt;
}

MeetSystem maximize_meet_system(const CongruenceLattice& lattice,
                                const std::vector<Partition>& etas) {
  auto phi = lattice_indices(lattice, etas);
  std::size_t total = lattice.top();
  for (std::size_t i : phi) total = lattice.meet(total, i);
  if (total != lattice.bottom()) throw InvalidInput("congruences " + tuple_text(etas) + " do not meet to 0");

  MeetSystem out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    std::size_t others = lattice.top();
    for (std::size_t j = 0; j < phi.size(); ++j)
      if (j != i) others = lattice.meet(others, phi[j]);
    bool climbed = true;
    while (climbed) {
      climbed = false;
      auto covers = lattice.upper_covers(phi[i]);
      std::sort(covers.begin(), covers.end());
      for (std::size_t c : covers)
        if (lattice.meet(c, others) == lattice.bottom()) {
          out.chain.push_back({i, lattice[phi[i]], lattice[c]});
          phi[i] = c;
          climbed = true;
          break;
        }
    }
  }
  for (std::size_t i : phi) out.phis.push_back(lattice[i]);
  if (auto v = meet_system_violation(lattice, out.phis))
    throw Falsification("maximized system " + tuple_text(out.phis) + " is not maximal: " +
                        tuple_text(*v) + " also meets to 0");
  return out;
}

bool TheoremReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

const SubCheck* TheoremReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::vector<Partition>> admissible_betas(const SubdirectRepresentation& rep) {
  const CongruenceLattice lat = congruence_lattice(rep.algebra);
  std::vector<std::vector<Partition>> out;
  for (std::size_t i = 0; i < rep.kernels.size(); ++i) {
    CommutatorTable table(rep.factors[i].algebra);
    const Partition zeta = table.lattice()[table.center()];
    const Partition upper = meet(rep.alphas[i], restrict(zeta, rep.factors[i].natural_map));
    out.push_back(interval(lat, rep.kernels[i], upper));
  }
  return out;
}

Lemma37Result verify_lemma_37(const SubdirectRepresentation& rep,
                              const std::vector<Partition>& betas) {
  const std::size_t k = rep.kernels.size();
  const std::size_t n = rep.algebra.size();
  if (betas.size() != k) throw InvalidInput("one beta per kernel is required");
  for (std::size_t i = 0; i < k; ++i) {
    if (!rep.kernels[i].leq(betas[i]) || !betas[i].leq(rep.alphas[i]))
      throw InvalidInput("hypothesis eta_i <= beta_i <= alpha_i fails at i=" + std::to_string(i + 1));
    CommutatorTable table(rep.factors[i].algebra);
    const Partition bar = quotient_congruence(betas[i], rep.factors[i].natural_map);
    if (!table.is_central(table.lattice().require_index(bar)))
      throw InvalidInput("hypothesis beta_i/eta_i central fails at i=" + std::to_string(i + 1));
  }
  Lemma37Result out;
  Partition bmeet = Partition::one(n), emeet = Partition::one(n);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    bmeet = meet(bmeet, betas[j]);
    emeet = meet(emeet, rep.kernels[j]);
    const Relation lhs = compose(bmeet, betas[j + 1]);
    const Relation rhs = compose(emeet, rep.kernels[j + 1]);
    if (lhs == rhs) continue;
    out.holds = false;
    out.k = j + 1;
    for (Element x = 0; x < n && !out.pair; ++x)
      for (Element y = 0; y < n; ++y)
        if (lhs.contains(x, y) != rhs.contains(x, y)) {
          out.pair = std::make_pair(x, y);
          break;
        }
    return out;
  }
  return out;
}

TheoremReport verify_theorem_33(const SubdirectRepresentation& rep) {
  const auto pe = check_product_essential(rep);
  if (!pe.product_essential)
    throw InvalidInput("representation is not product-essential: " + tuple_text(*pe.witness));
  const FiniteAlgebra& prod = rep.product.algebra;
  const Homomorphism& emb = rep.embedding;
  const std::size_t k = rep.factors.size();
  const std::vector<Element> image = emb.image();

  TheoremReport report;
  report.subject = rep.algebra.name() + " -> " + prod.name();
  SubCheck prop35 = named("prop35"), lemma36 = named("lemma36"), lemma37 = named("lemma37"),
           lemma38 = named("lemma38"), prop34 = named("prop34"), essential = named("essential");

  const Partition one = Partition::one(prod.size());
  const auto zero_restricted = zero_restriction_congruences(emb);
  for (const auto& t : zero_restricted) {
    ++prop35.instances;
    if (!commutator_unchecked(prod, t, one).is_zero()) fail(prop35, t.to_string());
  }

  const Partition alpha_prod = product_congruence(rep.product.encoding, rep.alpha_bars);
  ++lemma36.instances;
  if (auto w = density_witness_pair(prod, alpha_prod))
    fail(lemma36, "Cg" + pair_text(*w) + " meets the product of alpha-bars trivially");

  const auto betas = admissible_betas(rep);
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<Partition> choice;
    for (std::size_t i = 0; i < k; ++i) choice.push_back(betas[i][idx[i]]);
    ++lemma37.instances;
    const auto r = verify_lemma_37(rep, choice);
    if (!r.holds)
      fail(lemma37, "betas " + tuple_text(choice) + ", k=" + std::to_string(r.k) + ", pair " +
                        pair_text(*r.pair));
    std::size_t i = k;
    while (i-- > 0) {
      if (++idx[i] < betas[i].size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }

  std::vector<Partition> beta_bars;
  for (std::size_t i = 0; i < k; ++i) {
    CommutatorTable table(rep.factors[i].algebra);
    beta_bars.push_back(meet(rep.alpha_bars[i], table.lattice()[table.center()]));
  }
  const Partition beta_prod = product_congruence(rep.product.encoding, beta_bars);
  ++lemma38.instances;
  if (saturate(image, beta_prod) != image) fail(lemma38, "[A] of " + tuple_text(beta_bars) + " exceeds A");

  for (const auto& t : zero_restricted) {
    ++prop34.instances;
    const Partition psi = meet(t, alpha_prod);
    const bool central = commutator_unchecked(prod, psi, one).is_zero();
    const bool saturated = saturate(image, psi) == image;
    if (!central || !saturated)
      fail(prop34, "hypotheses fail for " + psi.to_string());
    else if (!psi.is_zero())
      fail(prop34, psi.to_string() + " is nonzero");
  }

  ++essential.instances;
  const auto ess = check_essential(emb);
  if (!ess.essential) fail(essential, "Cg" + pair_text(*ess.pair) + " restricts to 0");

  report.checks = {prop35, lemma36, lemma37, lemma38, prop34, essential};
  return report;
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::direct_product:
      return "direct product";
    case Outcome::proper_essential_extension:
      return "proper essential extension";
    case Outcome::hypothesis_failure:
      return "hypothesis failure";
  }
  return "unknown";
}

namespace {

void require_modular(const CongruenceLattice& lat) {
  if (auto p = find_pentagon(lat))
    throw Refusal("Con(" + lat.algebra().name() + ") is not modular");
}

// Builds and checks the representation for maximized kernels, filling the
// common report fields.
SubdirectRepresentation finish_representation(DecompositionReport& report, const MeetSystem& ms) {
  SubdirectRepresentation rep = make_representation(report.algebra, ms.phis);
  report.kernels = ms.phis;
  report.chain = ms.chain;
  for (const auto& f : rep.factors) report.factors.push_back(f.algebra);
  report.embedding = rep.embedding;
  report.product_essential = is_product_essential(rep);
  if (!report.product_essential)
    throw Falsification("maximal meet system " + tuple_text(ms.phis) + " is not product-essential");
  report.essential = is_essential(rep.embedding);
  if (!report.essential)
    throw Falsification("product-essential representation " + tuple_text(ms.phis) +
                        " is not essential");
  report.outcome = rep.embedding.is_surjective() ? Outcome::direct_product
                                                 : Outcome::proper_essential_extension;
  return rep;
}

}  // namespace

DecompositionReport decompose_absolute_retract(const FiniteAlgebra& a) {
  const CongruenceLattice lat = congruence_lattice(a);
  require_modular(lat);
  DecompositionReport report;
  report.algebra = a;
  if (a.size() == 1) {
    report.outcome = Outcome::direct_product;
    report.detail = "trivial algebra: the empty product";
    report.product_essential = report.essential = true;
    return report;
  }

  // Longest chain from the bottom up to each element.
  const std::size_t m = lat.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::vector<std::size_t> blocks(m);
  for (std::size_t i = 0; i < m; ++i) blocks[i] = lat[i].block_count();
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return blocks[x] > blocks[y]; });
  std::vector<std::size_t> depth(m, 0);
  for (std::size_t i : order)
    for (std::size_t c : lat.upper_covers(i)) depth[c] = std::max(depth[c], depth[i] + 1);

  const auto mi = meet_irreducibles(lat);
  std::vector<std::size_t> best, chosen;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t from, std::size_t current) {
    if (current == lat.bottom()) {
      bool irredundant = true;
      for (std::size_t skip = 0; skip < chosen.size() && irredundant; ++skip) {
        std::size_t rest = lat.top();
        for (std::size_t j = 0; j < chosen.size(); ++j)
          if (j != skip) rest = lat.meet(rest, chosen[j]);
        irredundant = rest != lat.bottom();
      }
      if (irredundant && chosen.size() > best.size()) best = chosen;
      return;
    }
    if (chosen.size() + depth[current] <= best.size()) return;
    for (std::size_t t = from; t < mi.size(); ++t) {
      const std::size_t next = lat.meet(current, mi[t]);
      if (next == current) continue;
      chosen.push_back(mi[t]);
      search(t + 1, next);
      chosen.pop_back();
    }
  };
  search(0, lat.top());
  for (std::size_t i : best) report.irredundant_meet.push_back(lat[i]);

  const MeetSystem ms = maximize_meet_system(lat, report.irredundant_meet);
  finish_representation(report, ms);
  for (const auto& f : report.factors)
    if (!is_si(f)) throw Falsification("factor " + f.name() + " is not subdirectly irreducible");
  report.detail = std::to_string(report.factors.size()) + " subdirectly irreducible factor(s)";
  return report;
}

DecompositionReport split_center_abelian(const FiniteAlgebra& a) {
  CommutatorTable table(a);
  const auto& lat = table.lattice();
  DecompositionReport report;
  report.algebra = a;
  const Partition zeta = lat[table.center()];
  const Partition derived = table.commutator_partition(lat.top(), lat.top());
  report.center = zeta;
  report.derived = derived;
  report.c1_holds = !c1_violation(table).has_value();
  const Partition both = meet(zeta, derived);
  if (!both.is_zero()) {
    report.outcome = Outcome::hypothesis_failure;
    report.hypothesis_witness = both;
    report.detail = "center meets [1,1] in " + both.to_string() + ", so (C1) fails";
    return report;
  }
  const MeetSystem ms = maximize_meet_system(lat, {zeta, derived});
  finish_representation(report, ms);
  if (report.outcome == Outcome::direct_product) {
    const Partition& theta = report.kernels[0];
    report.first_centerless = is_centerless(report.factors[0]);
    report.second_abelian = is_abelian(report.factors[1]);
    if (*report.c1_holds) {
      if (theta != zeta) throw Falsification("theta " + theta.to_string() + " differs from the center");
      if (!*report.first_centerless) throw Falsification(report.factors[0].name() + " is not centerless");
      if (!*report.second_abelian) throw Falsification(report.factors[1].name() + " is not abelian");
    }
    report.detail = "centerless x abelian";
  } else {
    report.detail = "A -> A/theta x A/psi is a proper essential extension";
  }
  return report;
}

FactorizationReport enumerate_direct_decompositions(const FiniteAlgebra& a) {
  const CongruenceLattice lat = congruence_lattice(a);
  const std::size_t m = lat.size();
  const Relation full = Relation::of(lat[lat.top()]);
  FactorizationReport report;

  std::map<std::pair<std::size_t, std::size_t>, bool> permute_cache;
  auto complementary = [&](std::size_t base, std::size_t x, std::size_t y) {
    if (lat.meet(x, y) != base) return false;
    auto key = std::make_pair(x, y);
    auto it = permute_cache.find(key);
    if (it != permute_cache.end()) return it->second;
    const bool ok = compose(lat[x], lat[y]) == full;
    permute_cache[key] = ok;
    return ok;
  };
  auto class_of = [&](const FiniteAlgebra& f) {
    for (std::size_t c = 0; c < report.classes.size(); ++c)
      if (report.classes[c].size() == f.size() && find_isomorphism(report.classes[c], f)) return c;
    report.classes.push_back(f);
    return report.classes.size() - 1;
  };

  using Multisets = std::set<std::vector<std::size_t>>;
  std::vector<std::optional<Multisets>> memo(m);
  std::function<const Multisets&(std::size_t)> factorizations = [&](std::size_t base) -> const Multisets& {
    if (memo[base]) return *memo[base];
    Multisets out;
    if (base == lat.top()) {
      out.insert(std::vector<std::size_t>{});
    } else {
      const auto above = interval(lat, base, lat.top());
      for (std::size_t x : above)
        for (std::size_t y : above) {
          if (x >= y || x == base || y == base || x == lat.top() || y == lat.top()) continue;
          if (!complementary(base, x, y)) continue;
          if (base == lat.bottom()) report.factor_pairs.push_back({lat[x], lat[y]});
          const Multisets left = factorizations(x);
          const Multisets& right = factorizations(y);
          for (const auto& l : left)
            for (const auto& r : right) {
              std::vector<std::size_t> merged = l;
              merged.insert(merged.end(), r.begin(), r.end());
              std::sort(merged.begin(), merged.end());
              out.insert(merged);
            }
        }
      if (out.empty()) out.insert({class_of(make_quotient(a, lat[base]).algebra)});
    }
    memo[base] = std::move(out);
    return *memo[base];
  };
  const Multisets all = factorizations(lat.bottom());
  report.factorizations.assign(all.begin(), all.end());
  return report;
}

bool check_unique_factorization(const FiniteAlgebra& a) {
  return enumerate_direct_decompositions(a).unique();
}

TheoremReport verify_theorem_41(const FiniteAlgebra& a) {
  const CongruenceLattice lat = congruence_lattice(a);
  require_modular(lat);
  TheoremReport report;
  report.subject = a.name();
  if (a.size() == 1 || is_fsi(lat)) {
    SubCheck c = named("not-fsi");
    c.witness = "finitely subdirectly irreducible: nothing to check";
    report.checks.push_back(c);
    return report;
  }
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  for (std::size_t i = 0; i < lat.size() && !pair; ++i)
    for (std::size_t j = i + 1; j < lat.size(); ++j)
      if (i != lat.bottom() && j != lat.bottom() && lat.meet(i, j) == lat.bottom()) {
        pair = std::make_pair(i, j);
        break;
      }
  const MeetSystem ms = maximize_meet_system(lat, {lat[pair->first], lat[pair->second]});
  const SubdirectRepresentation rep = make_representation(a, ms.phis);
  SubCheck pe = named("product-essential"), ess = named("essential"), split = named("decomposition");
  ++pe.instances;
  if (auto w = check_product_essential(rep); !w.product_essential) fail(pe, tuple_text(*w.witness));
  ++ess.instances;
  if (auto w = check_essential(rep.embedding); !w.essential) fail(ess, "Cg" + pair_text(*w.pair));
  ++split.instances;
  split.witness = rep.embedding.is_surjective()
                      ? a.name() + " = " + rep.factors[0].algebra.name() + " x " + rep.factors[1].algebra.name()
                      : "proper essential extension into " + rep.product.algebra.name();
  report.checks = {pe, ess, split};
  return report;
}

}  // namespace ualg
