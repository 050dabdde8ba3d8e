#include "ualg/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/decompose.hpp"
#include "ualg/error.hpp"
#include "ualg/gumm.hpp"

namespace ualg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::skipped:
      return "SKIP";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(Verdict::fail) == 0; }

std::size_t SuiteReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.verdict == v; }));
}

namespace {

using Entries = std::vector<const CorpusEntry*>;

constexpr std::size_t kSmall = 8;
constexpr std::size_t kPairProduct = 36;
constexpr std::size_t kRepProduct = 216;
constexpr std::size_t kMaxFactors = 3;
constexpr std::size_t kFactorizationSize = 16;
constexpr std::size_t kPartnerProduct = 32;

const char* const kRequired[] = {"cor24",  "fact1",  "fact2",  "fact3",     "fact4",  "fact5",
                                 "fact6",  "lemma21", "lemma22", "lemma36", "lemma37", "lemma38",
                                 "prop34", "prop35", "propA1", "propA2",    "remark32a", "thm23",
                                 "thm33",  "thm41",  "thm42",  "thm43",     "thm44"};

std::string text(const Partition& p) { return p.to_string(); }

std::string tuple_text(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "(" : ", (") + p.to_string() + ")";
  return s;
}

SuiteRecord record(std::string subject, Verdict v, std::size_t instances, std::string detail) {
  return SuiteRecord{std::move(subject), v, instances, std::move(detail)};
}

SuiteRecord skip(const std::string& subject, std::string reason) {
  return record(subject, Verdict::skipped, 0, std::move(reason));
}

/// Runs body, turning library errors into records.
SuiteRecord guarded(const std::string& subject, const std::function<SuiteRecord()>& body) {
  try {
    return body();
  } catch (const Refusal& e) {
    return skip(subject, std::string("refused: ") + e.what());
  } catch (const Error& e) {
    return record(subject, Verdict::fail, 0, e.what());
  }
}

Term term_of(const CorpusEntry& e) { return difference_term_by_name(*e.difference_term); }

/// Why an entry is outside the scope of checks that need a difference term
/// and a size bound, if it is.
std::optional<std::string> out_of_scope(const CorpusEntry& e, std::size_t max_size) {
  if (!e.difference_term) return "no difference term: not in a congruence modular variety";
  if (e.algebra.size() > max_size) return "size " + std::to_string(e.algebra.size()) + " exceeds " + std::to_string(max_size);
  return std::nullopt;
}

struct ProductCase {
  std::string subject;
  const CorpusEntry* left;
  const CorpusEntry* right;
  std::optional<ProductAlgebra> product;
  std::optional<CongruenceLattice> lattice, left_lattice, right_lattice;
  std::optional<std::string> skip_reason;
};

struct RepCase {
  std::vector<Partition> kernels;
  std::optional<TheoremReport> report;
  std::string error;
};

struct RepWorkload {
  std::optional<std::string> skip_reason;
  std::string error;
  // Kernel criterion against direct product-essentiality.
  std::size_t tuples = 0;
  std::optional<std::string> disagreement;
  std::vector<RepCase> maximized;
};

class Run {
 public:
  explicit Run(Entries entries) : entries_(std::move(entries)) {}

  const Entries& entries() const { return entries_; }

  const FactReport& facts(const CorpusEntry& e) {
    auto it = facts_.find(e.algebra.name());
    if (it != facts_.end()) return it->second;
    FactPartners partners;
    partners.subuniverses = all_subuniverses(e.algebra);
    for (const auto& other : builtin_corpus()) {
      if (!other.difference_term || other.algebra.size() < 2) continue;
      if (!other.algebra.signature_compatible(e.algebra)) continue;
      if (other.algebra.size() * e.algebra.size() > kPartnerProduct) continue;
      partners.product_partners.push_back(other.algebra);
    }
    return facts_.emplace(e.algebra.name(), check_fact_properties(e.algebra, partners)).first->second;
  }

  std::vector<ProductCase>& products() {
    if (products_) return *products_;
    products_.emplace();
    for (const CorpusEntry* l : entries_)
      for (const CorpusEntry* r : entries_) {
        if (!l->algebra.signature_compatible(r->algebra)) continue;
        if (l->algebra.size() * r->algebra.size() > kPairProduct) continue;
        ProductCase pc{l->algebra.name() + " x " + r->algebra.name(), l, r, {}, {}, {}, {}, {}};
        if (!l->difference_term || !r->difference_term) {
          pc.skip_reason = "no difference term: not in a congruence modular variety";
        } else {
          pc.product = make_product({l->algebra, r->algebra});
          pc.lattice.emplace(congruence_lattice(pc.product->algebra));
          if (find_pentagon(*pc.lattice)) {
            pc.skip_reason = "Con of the product is not modular";
          } else {
            pc.left_lattice.emplace(congruence_lattice(l->algebra));
            pc.right_lattice.emplace(congruence_lattice(r->algebra));
          }
        }
        products_->push_back(std::move(pc));
      }
    return *products_;
  }

  const RepWorkload& representations(const CorpusEntry& e) {
    auto it = reps_.find(e.algebra.name());
    if (it != reps_.end()) return it->second;
    return reps_.emplace(e.algebra.name(), build_representations(e)).first->second;
  }

 private:
  static RepWorkload build_representations(const CorpusEntry& e) {
    RepWorkload w;
    if (auto why = out_of_scope(e, kSmall)) {
      w.skip_reason = *why;
      return w;
    }
    try {
      const CongruenceLattice lat = congruence_lattice(e.algebra);
      if (find_pentagon(lat)) {
        w.skip_reason = "Con is not modular";
        return w;
      }
      const std::size_t m = lat.size();
      std::set<std::vector<Partition>> maximized;
      std::vector<std::size_t> idx;
      // Ordered tuples drive the maximization; sorted ones the criterion.
      std::function<void(std::size_t, std::size_t, std::size_t)> walk = [&](std::size_t depth,
                                                                            std::size_t running,
                                                                            std::size_t size) {
        if (depth > 0 && running == lat.bottom()) {
          std::vector<Partition> etas;
          for (std::size_t i : idx) etas.push_back(lat[i]);
          if (std::is_sorted(idx.begin(), idx.end()) && !w.disagreement) {
            ++w.tuples;
            const SubdirectRepresentation rep = make_representation(e.algebra, etas);
            const bool pe = is_product_essential(rep);
            const bool criterion = !meet_system_violation(lat, etas).has_value();
            if (pe != criterion)
              w.disagreement = "kernels " + tuple_text(etas) + ": product-essential " +
                               (pe ? "yes" : "no") + ", kernel criterion " + (criterion ? "yes" : "no");
          }
          MeetSystem ms = maximize_meet_system(lat, etas);
          std::sort(ms.phis.begin(), ms.phis.end());
          maximized.insert(ms.phis);
        }
        if (depth == kMaxFactors) return;
        for (std::size_t i = 0; i < m; ++i) {
          const std::size_t blocks = lat[i].block_count();
          if (size * blocks > kRepProduct) continue;
          idx.push_back(i);
          walk(depth + 1, depth == 0 ? i : lat.meet(running, i), size * blocks);
          idx.pop_back();
        }
      };
      walk(0, lat.top(), 1);
      for (const auto& kernels : maximized) {
        RepCase rc{kernels, {}, {}};
        try {
          rc.report = verify_theorem_33(make_representation(e.algebra, kernels));
        } catch (const Error& err) {
          rc.error = err.what();
        }
        w.maximized.push_back(std::move(rc));
      }
    } catch (const Error& err) {
      w.error = err.what();
    }
    return w;
  }

  Entries entries_;
  std::map<std::string, FactReport> facts_;
  std::optional<std::vector<ProductCase>> products_;
  std::map<std::string, RepWorkload> reps_;
};

using Records = std::vector<SuiteRecord>;

// Per-entry driver for checks scoped to algebras with a difference term.
Records each_entry(Run& run, std::size_t max_size,
                   const std::function<SuiteRecord(const CorpusEntry&)>& body) {
  Records out;
  for (const CorpusEntry* e : run.entries()) {
    const std::string& name = e->algebra.name();
    if (auto why = out_of_scope(*e, max_size)) {
      out.push_back(skip(name, *why));
      continue;
    }
    out.push_back(guarded(name, [&] { return body(*e); }));
  }
  return out;
}

Records fact_records(Run& run, const std::string& prefix) {
  return each_entry(run, kSmall, [&](const CorpusEntry& e) {
    const FactReport& report = run.facts(e);
    SuiteRecord r = record(e.algebra.name(), Verdict::pass, 0, "");
    for (const auto& c : report.checks) {
      if (c.fact.rfind(prefix, 0) != 0) continue;
      r.instances += c.instances;
      if (!c.passed && r.verdict == Verdict::pass) {
        r.verdict = Verdict::fail;
        r.detail = c.fact + ": " + c.witness;
      }
      if (r.verdict == Verdict::pass)
        r.detail += (r.detail.empty() ? "" : ", ") + c.fact + " x" + std::to_string(c.instances);
    }
    return r;
  });
}

Records check_cor24(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    CommutatorTable table(e.algebra);
    const Partition& zeta = table.lattice()[table.center()];
    std::size_t related = 0;
    for (Element x = 0; x < zeta.size(); ++x)
      for (Element y = 0; y < zeta.size(); ++y) related += zeta.related(x, y);
    const std::size_t instances = related * e.algebra.size();
    if (auto w = check_corollary_24(table, term_of(e)))
      return record(e.algebra.name(), Verdict::fail, instances,
                    "a=" + std::to_string(w->a) + " x=" + std::to_string(w->x) + " y=" + std::to_string(w->y) +
                        " gives " + std::to_string(w->value));
    return record(e.algebra.name(), Verdict::pass, instances, "center " + text(zeta));
  });
}

Records check_fact5(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    CommutatorTable table(e.algebra);
    const Term d = term_of(e);
    std::size_t abelian = 0;
    for (std::size_t i = 0; i < table.lattice().size(); ++i) abelian += table.is_abelian(i);
    const std::size_t n = e.algebra.size();
    if (auto v = difference_term_violation(table, d)) {
      std::string detail = v->law + " fails at x=" + std::to_string(v->x) + " y=" + std::to_string(v->y) +
                           " (value " + std::to_string(v->value) + ")";
      if (v->theta) detail += " inside " + text(*v->theta);
      return record(e.algebra.name(), Verdict::fail, n * n, detail);
    }
    return record(e.algebra.name(), Verdict::pass, n * n + abelian,
                  "d = " + d.to_string() + ", " + std::to_string(abelian) + " abelian congruences");
  });
}

Records check_fact6(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    CommutatorTable table(e.algebra);
    const std::size_t m = table.lattice().size();
    const auto w = c1_violation(table);
    if (!e.residually_small) {
      std::string detail = "variety not residually small; identity ";
      detail += w ? "fails at alpha=" + text(table.lattice()[w->alpha]) + " beta=" + text(table.lattice()[w->beta])
                  : std::string("holds anyway");
      return skip(e.algebra.name(), detail);
    }
    if (w)
      return record(e.algebra.name(), Verdict::fail, m * m,
                    "alpha=" + text(table.lattice()[w->alpha]) + " beta=" + text(table.lattice()[w->beta]) +
                        ": " + text(w->lhs) + " != " + text(w->rhs));
    return record(e.algebra.name(), Verdict::pass, m * m, "alpha ^ [beta,beta] = [alpha ^ beta, beta]");
  });
}

Records product_checks(Run& run, const std::function<SuiteRecord(ProductCase&)>& body) {
  Records out;
  for (auto& pc : run.products()) {
    if (pc.skip_reason) {
      out.push_back(skip(pc.subject, *pc.skip_reason));
      continue;
    }
    out.push_back(guarded(pc.subject, [&] { return body(pc); }));
  }
  return out;
}

Records check_lemma21(Run& run) {
  return product_checks(run, [](ProductCase& pc) {
    const auto& L = *pc.lattice;
    const auto& La = *pc.left_lattice;
    const auto& Lb = *pc.right_lattice;
    const MixedRadix& enc = pc.product->encoding;
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> split(L.size());
    for (std::size_t t = 0; t < L.size(); ++t) {
      const auto pcheck = is_product_congruence(enc, L[t]);
      if (!pcheck.is_product()) continue;
      const auto a = La.index_of(pcheck.factors[0]);
      const auto b = Lb.index_of(pcheck.factors[1]);
      if (a && b) split[t] = std::make_pair(*a, *b);
    }
    std::size_t instances = 0;
    for (std::size_t p1 = 0; p1 < La.size(); ++p1)
      for (std::size_t p2 = 0; p2 < La.size(); ++p2) {
        if (!La.leq(p1, p2)) continue;
        for (std::size_t q = 0; q < Lb.size(); ++q) {
          const Partition lo_parts[] = {La[p1], Lb[q]};
          const Partition hi_parts[] = {La[p2], Lb[q]};
          const std::size_t lo = L.require_index(product_congruence(enc, lo_parts));
          const std::size_t hi = L.require_index(product_congruence(enc, hi_parts));
          for (std::size_t t : interval(L, lo, hi)) {
            ++instances;
            const auto& s = split[t];
            if (!s || s->second != q || !La.leq(p1, s->first) || !La.leq(s->first, p2))
              return record(pc.subject, Verdict::fail, instances,
                            "theta " + text(L[t]) + " between " + text(L[lo]) + " and " + text(L[hi]) +
                                " is not phi x " + text(Lb[q]));
          }
        }
      }
    return record(pc.subject, Verdict::pass, instances,
                  std::to_string(L.size()) + " congruences on the product");
  });
}

Records check_lemma22(Run& run) {
  return product_checks(run, [](ProductCase& pc) {
    const auto& L = *pc.lattice;
    const auto& La = *pc.left_lattice;
    const auto& Lb = *pc.right_lattice;
    std::vector<std::size_t> da, db;
    for (std::size_t i = 0; i < La.size(); ++i)
      if (is_dense(La, La[i])) da.push_back(i);
    for (std::size_t j = 0; j < Lb.size(); ++j)
      if (is_dense(Lb, Lb[j])) db.push_back(j);
    std::size_t instances = 0;
    for (std::size_t i : da)
      for (std::size_t j : db) {
        ++instances;
        const Partition parts[] = {La[i], Lb[j]};
        const Partition prod = product_congruence(pc.product->encoding, parts);
        if (auto w = density_witness(L, prod))
          return record(pc.subject, Verdict::fail, instances,
                        text(La[i]) + " x " + text(Lb[j]) + " meets " + text(L[*w]) + " trivially");
      }
    return record(pc.subject, Verdict::pass, instances,
                  std::to_string(da.size()) + " x " + std::to_string(db.size()) + " dense pairs");
  });
}

Records check_thm23(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    CommutatorTable table(e.algebra);
    const auto& lat = table.lattice();
    const Term d = term_of(e);
    std::size_t instances = 0, central = 0;
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j) {
        if (!lat.leq(j, i)) continue;
        ++instances;
        const GummResult g = check_gumm_characterization(e.algebra, d, lat[i], lat[j]);
        const bool zero = table.commutator(i, j) == lat.bottom();
        central += zero;
        if (g.holds != zero) {
          std::string detail = "phi=" + text(lat[i]) + " psi=" + text(lat[j]) + ": term condition " +
                               (g.holds ? "holds" : "fails") + " but [phi,psi] " + (zero ? "= 0" : "!= 0");
          if (g.witness)
            detail += " (condition " + std::to_string(g.witness->condition) + " on " + g.witness->operation + ")";
          return record(e.algebra.name(), Verdict::fail, instances, detail);
        }
      }
    return record(e.algebra.name(), Verdict::pass, instances,
                  std::to_string(central) + " of " + std::to_string(instances) + " pairs with [phi,psi] = 0");
  });
}

Records rep_records(Run& run, const std::string& sub) {
  Records out;
  for (const CorpusEntry* e : run.entries()) {
    const std::string& name = e->algebra.name();
    const RepWorkload& w = run.representations(*e);
    if (w.skip_reason) {
      out.push_back(skip(name, *w.skip_reason));
      continue;
    }
    if (!w.error.empty()) {
      out.push_back(record(name, Verdict::fail, 0, w.error));
      continue;
    }
    SuiteRecord r = record(name, Verdict::pass, 0, "");
    for (const auto& rc : w.maximized) {
      if (!rc.report) {
        if (r.verdict == Verdict::pass) {
          r.verdict = Verdict::fail;
          r.detail = "kernels " + tuple_text(rc.kernels) + ": " + rc.error;
        }
        continue;
      }
      for (const auto& c : rc.report->checks) {
        const bool wanted = sub == "thm33" ? c.name == "essential" : c.name == sub;
        if (!wanted) continue;
        r.instances += c.instances;
        if (!c.passed && r.verdict == Verdict::pass) {
          r.verdict = Verdict::fail;
          r.detail = "kernels " + tuple_text(rc.kernels) + ": " + c.witness;
        }
      }
    }
    if (r.verdict == Verdict::pass)
      r.detail = std::to_string(w.maximized.size()) + " maximized representations";
    out.push_back(r);
  }
  return out;
}

Records check_remark32a(Run& run) {
  Records out;
  for (const CorpusEntry* e : run.entries()) {
    const std::string& name = e->algebra.name();
    const RepWorkload& w = run.representations(*e);
    if (w.skip_reason)
      out.push_back(skip(name, *w.skip_reason));
    else if (!w.error.empty())
      out.push_back(record(name, Verdict::fail, w.tuples, w.error));
    else if (w.disagreement)
      out.push_back(record(name, Verdict::fail, w.tuples, *w.disagreement));
    else
      out.push_back(record(name, Verdict::pass, w.tuples, "criterion agrees on every kernel tuple"));
  }
  return out;
}

std::string theorem_detail(const TheoremReport& t) {
  std::string s;
  for (const auto& c : t.checks) {
    s += (s.empty() ? "" : "; ") + c.name;
    if (!c.witness.empty()) s += ": " + c.witness;
  }
  return s;
}

Records check_thm41(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    const TheoremReport t = verify_theorem_41(e.algebra);
    std::size_t instances = 0;
    for (const auto& c : t.checks) instances += c.instances;
    for (const auto& c : t.checks)
      if (!c.passed) return record(e.algebra.name(), Verdict::fail, instances, c.name + ": " + c.witness);
    return record(e.algebra.name(), Verdict::pass, instances, theorem_detail(t));
  });
}

std::string factor_names(const std::vector<FiniteAlgebra>& fs) {
  std::string s;
  for (const auto& f : fs) s += (s.empty() ? "" : " x ") + f.name();
  return s.empty() ? "empty product" : s;
}

Records check_thm42(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    const DecompositionReport r = decompose_absolute_retract(e.algebra);
    const std::string name = e.algebra.name();
    const std::size_t k = r.factors.size();
    if (r.outcome == Outcome::direct_product) {
      if (r.embedding) {
        const Homomorphism& h = *r.embedding;
        if (!h.is_injective() || !h.is_surjective() || !is_homomorphism(h))
          return record(name, Verdict::fail, k, "embedding is not an isomorphism");
      }
      for (const auto& f : r.factors)
        if (!is_si(f)) return record(name, Verdict::fail, k, "factor " + f.name() + " is not subdirectly irreducible");
      if (is_si(e.algebra) && k != 1)
        return record(name, Verdict::fail, k, "subdirectly irreducible but split into " + std::to_string(k));
      return record(name, Verdict::pass, k, "direct product: " + factor_names(r.factors));
    }
    if (r.outcome == Outcome::proper_essential_extension) {
      if (!r.essential || (r.embedding && r.embedding->is_surjective()))
        return record(name, Verdict::fail, k, "extension is not proper and essential");
      return record(name, Verdict::pass, k,
                    "proper essential extension into " + factor_names(r.factors) + ": not an absolute retract");
    }
    return record(name, Verdict::fail, k, "no outcome: " + r.detail);
  });
}

Records check_thm43(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    const DecompositionReport r = split_center_abelian(e.algebra);
    const std::string name = e.algebra.name();
    if (r.outcome == Outcome::hypothesis_failure) {
      const std::string detail = "center ^ [1,1] = " + (r.hypothesis_witness ? text(*r.hypothesis_witness) : "?");
      if (e.residually_small) return record(name, Verdict::fail, 1, "residually small yet " + detail);
      return record(name, Verdict::pass, 1, "hypothesis failure, " + detail);
    }
    std::string detail = to_string(r.outcome) + ": " + factor_names(r.factors);
    if (r.first_centerless && r.second_abelian)
      detail += std::string(", first factor ") + (*r.first_centerless ? "centerless" : "has a center") +
                ", second " + (*r.second_abelian ? "abelian" : "not abelian");
    return record(name, Verdict::pass, 1, detail);
  });
}

Records check_thm44(Run& run) {
  Records out;
  for (const CorpusEntry* e : run.entries()) {
    const std::string& name = e->algebra.name();
    if (e->algebra.size() > kFactorizationSize) {
      out.push_back(skip(name, "size exceeds " + std::to_string(kFactorizationSize)));
      continue;
    }
    out.push_back(guarded(name, [&] {
      const FactorizationReport f = enumerate_direct_decompositions(e->algebra);
      std::string classes;
      for (const auto& c : f.classes) classes += (classes.empty() ? "" : ", ") + c.name();
      const std::string detail = std::to_string(f.factor_pairs.size()) + " factor pairs, " +
                                 std::to_string(f.factorizations.size()) + " factorization(s) over {" + classes + "}";
      return record(name, f.unique() ? Verdict::pass : Verdict::fail, f.factor_pairs.size() + 1, detail);
    }));
  }
  return out;
}

Records check_propA1(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    CommutatorTable table(e.algebra);
    const auto& lat = table.lattice();
    const Partition zeta = lat[table.center()];
    const Term d = term_of(e);
    std::size_t instances = 0;
    for (const auto& universe : all_subuniverses(e.algebra)) {
      if (universe.empty()) continue;
      const Subalgebra sub = make_subalgebra(e.algebra, universe);
      const CongruenceLattice sl = congruence_lattice(sub.algebra);
      for (std::size_t ab = 0; ab < lat.size(); ++ab) {
        if (!lat[ab].leq(zeta)) continue;
        const Partition bound = restrict(lat[ab], sub.inclusion);
        for (std::size_t b = 0; b < sl.size(); ++b) {
          if (!sl[b].leq(bound)) continue;
          for (Element base = 0; base < sub.algebra.size(); ++base) {
            ++instances;
            CentralExtensionInput in{e.algebra, sub.inclusion, base, lat[ab], sl[b], zeta};
            extend_central_congruence(in, d);
          }
        }
      }
    }
    return record(e.algebra.name(), Verdict::pass, instances, "center " + text(zeta));
  });
}

Records check_propA2(Run& run) {
  return each_entry(run, kSmall, [](const CorpusEntry& e) {
    const CubeExtension c = build_cube_extension(e.algebra, term_of(e));
    const std::string name = e.algebra.name();
    std::string detail = "|B/theta|=" + std::to_string(c.chained_quotient.algebra.size()) +
                         " |A^3/Theta|=" + std::to_string(c.cube_quotient.algebra.size()) +
                         ", proper=" + (c.proper ? "yes" : "no") + ", essential=" + (c.essential ? "yes" : "no") +
                         ", base points give " + std::to_string(c.base_point_variants) + " Theta";
    if (c.hypotheses.hold() && !(c.proper && c.essential))
      return record(name, Verdict::fail, 1, "hypotheses hold but " + detail);
    if (!c.hypotheses.non_abelian && c.proper)
      return record(name, Verdict::fail, 1, "abelian yet " + detail);
    detail = (c.hypotheses.hold() ? "hypotheses hold, " : "hypotheses fail, ") + detail;
    return record(name, Verdict::pass, 1, detail);
  });
}

struct Registered {
  CheckInfo info;
  std::function<Records(Run&)> run;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = [] {
    std::vector<Registered> r = {
        {{"cor24", "d(x,a,d(a,x,y)) = y for all a and all x, y related by the center"}, check_cor24},
        {{"fact1", "[φ,ψ] = [ψ,φ] ≤ φ∧ψ, and [φ,ψ∨χ] = [φ,ψ]∨[φ,χ]"},
         [](Run& run) { return fact_records(run, "1"); }},
        {{"fact2", "[φ|B, ψ|B] ≤ [φ,ψ]|B for every subalgebra B"}, [](Run& run) { return fact_records(run, "2"); }},
        {{"fact3", "[φ/π, ψ/π] = ([φ,ψ]∨π)/π for φ, ψ ≥ π"}, [](Run& run) { return fact_records(run, "3"); }},
        {{"fact4", "centers of products and subalgebras; abelian congruences permute"},
         [](Run& run) { return fact_records(run, "4"); }},
        {{"fact5", "d(x,y,y) = x, and d(x,x,y) = y inside abelian congruences"}, check_fact5},
        {{"fact6", "α∧[β,β] = [α∧β,β] when the variety is residually small"}, check_fact6},
        {{"lemma21", "congruences between φ1×ψ and φ2×ψ are products φ×ψ"}, check_lemma21},
        {{"lemma22", "a product of dense congruences is dense"}, check_lemma22},
        {{"lemma36", "the product of the α-bars is dense in the product"},
         [](Run& run) { return rep_records(run, "lemma36"); }},
        {{"lemma37", "(β1∧..∧βk)∘βk+1 = (η1∧..∧ηk)∘ηk+1 for admissible β"},
         [](Run& run) { return rep_records(run, "lemma37"); }},
        {{"lemma38", "A saturated by the product of the β-bars is A"},
         [](Run& run) { return rep_records(run, "lemma38"); }},
        {{"prop34", "a central congruence with zero restriction and [A]θ = A is 0"},
         [](Run& run) { return rep_records(run, "prop34"); }},
        {{"prop35", "congruences of the product restricting to 0 are central"},
         [](Run& run) { return rep_records(run, "prop35"); }},
        {{"propA1", "the extended congruence is a congruence below ᾱ restricting to β"}, check_propA1},
        {{"propA2", "a non-abelian algebra with dense center has a proper essential extension"}, check_propA2},
        {{"remark32a", "product-essential iff the kernels are meet-maximal"}, check_remark32a},
        {{"thm23", "the term condition over basic operations and d holds iff [φ,ψ] = 0"}, check_thm23},
        {{"thm33", "subdirect product-essential embeddings are essential"},
         [](Run& run) { return rep_records(run, "thm33"); }},
        {{"thm41", "a maximized pair of kernels gives an essential embedding"}, check_thm41},
        {{"thm42", "maximal irredundant meets give SI factors or a proper essential extension"}, check_thm42},
        {{"thm43", "the center/commutator split yields a centerless and an abelian factor"}, check_thm43},
        {{"thm44", "direct factorizations are unique up to isomorphism"}, check_thm44},
    };
    std::sort(r.begin(), r.end(), [](const Registered& a, const Registered& b) { return a.info.name < b.info.name; });
    return r;
  }();
  return checks;
}

CheckResult summarize(const Registered& reg, Records records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const SuiteRecord& a, const SuiteRecord& b) { return a.subject < b.subject; });
  CheckResult out;
  out.name = reg.info.name;
  out.statement = reg.info.statement;
  bool any_pass = false, any_fail = false;
  for (const auto& r : records) {
    out.instances += r.instances;
    any_pass |= r.verdict == Verdict::pass;
    if (r.verdict == Verdict::fail && !any_fail) {
      any_fail = true;
      out.witness = r.subject + ": " + r.detail;
    }
  }
  out.verdict = any_fail ? Verdict::fail : any_pass ? Verdict::pass : Verdict::skipped;
  out.records = std::move(records);
  return out;
}

}  // namespace

const std::vector<CheckInfo>& suite_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& r : registry()) v.push_back(r.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> coverage_gaps() {
  std::vector<std::string> gaps;
  std::map<std::string, int> seen;
  for (const auto& r : registry()) ++seen[r.info.name];
  for (const char* name : kRequired)
    if (!seen.count(name)) gaps.push_back(name);
  for (const auto& [name, count] : seen)
    if (count > 1) gaps.push_back(name);
  return gaps;
}

SuiteReport run_suite(const SuiteOptions& options) {
  for (const auto& name : options.checks)
    if (std::none_of(registry().begin(), registry().end(),
                     [&](const Registered& r) { return r.info.name == name; }))
      throw InvalidInput("unknown check '" + name + "'");

  Entries entries;
  if (options.corpus.empty()) {
    for (const auto& e : builtin_corpus()) entries.push_back(&e);
  } else {
    for (const auto& name : options.corpus) {
      auto it = std::find_if(builtin_corpus().begin(), builtin_corpus().end(),
                             [&](const CorpusEntry& e) { return e.algebra.name() == name; });
      if (it == builtin_corpus().end()) throw InvalidInput("unknown corpus algebra '" + name + "'");
      if (std::find(entries.begin(), entries.end(), &*it) == entries.end()) entries.push_back(&*it);
    }
  }
  if (options.seed) {
    std::mt19937_64 rng(*options.seed);
    std::shuffle(entries.begin(), entries.end(), rng);
  }

  Run run(std::move(entries));
  SuiteReport report;
  for (const auto& reg : registry()) {
    if (!options.checks.empty() &&
        std::find(options.checks.begin(), options.checks.end(), reg.info.name) == options.checks.end())
      continue;
    report.checks.push_back(summarize(reg, reg.run(run)));
  }
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << "[" << to_string(c.verdict) << "] " << c.name << ": " << c.statement << " (" << c.instances
        << " instances)\n";
    for (const auto& r : c.records)
      out << "    " << to_string(r.verdict) << "  " << r.subject << "  " << r.instances << "  " << r.detail << "\n";
    if (c.verdict == Verdict::fail) out << "    witness: " << c.witness << "\n";
  }
  out << "summary: " << report.count(Verdict::pass) << " passed, " << report.count(Verdict::fail) << " failed, "
      << report.count(Verdict::skipped) << " skipped\n";
  return out.str();
}

}  // namespace ualg
