// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ualg/cli.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"
#include "ualg/decompose.hpp"
#include "ualg/error.hpp"
#include "ualg/gumm.hpp"
#include "ualg/oracle.hpp"
#include "ualg/suite.hpp"

using namespace ualg;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

class Ledger {
 public:
  void fail(const std::string& why) {
    if (pass_) first_ = why;
    pass_ = false;
    ++failures_;
  }
  void expect(bool ok, const std::string& why) {
    ++checked_;
    if (!ok) fail(why);
  }
  Result done(const std::string& summary) const {
    if (pass_) return {true, summary + ", " + std::to_string(checked_) + " assertions"};
    return {false, std::to_string(failures_) + " failures, first: " + first_};
  }

 private:
  bool pass_ = true;
  std::size_t checked_ = 0, failures_ = 0;
  std::string first_;
};

FiniteAlgebra builtin(const std::string& name) { return find_builtin(name)->algebra; }

// The suite is shared by several criteria; it is run once.
const SuiteReport& suite() {
  static const SuiteReport report = run_suite();
  return report;
}

Ledger suite_checks(const std::vector<std::string>& names) {
  Ledger l;
  for (const auto& name : names) {
    const auto it = std::find_if(suite().checks.begin(), suite().checks.end(),
                                 [&](const CheckResult& c) { return c.name == name; });
    if (it == suite().checks.end()) {
      l.fail(name + " missing from the suite");
      continue;
    }
    l.expect(it->verdict == Verdict::pass, name + ": " + it->witness);
    for (const auto& r : it->records) l.expect(r.verdict != Verdict::fail, name + " on " + r.subject + ": " + r.detail);
    l.expect(it->instances > 0, name + " examined nothing");
  }
  return l;
}

std::size_t instances(const std::vector<std::string>& names) {
  std::size_t n = 0;
  for (const auto& c : suite().checks)
    if (std::find(names.begin(), names.end(), c.name) != names.end()) n += c.instances;
  return n;
}

// r^2 in D4: the central element other than the identity.
Element central_involution(const FiniteAlgebra& g) {
  const auto view = *oracle::group_view(g);
  const auto z = oracle::identity_class(view, oracle::group_center(view));
  for (Element x : z)
    if (x != view.identity) return x;
  throw Error("center is trivial");
}

Result criterion1() {
  Ledger l;
  std::size_t algebras = 0;
  for (const auto& e : builtin_corpus()) {
    if (e.algebra.size() > 8) continue;
    ++algebras;
    const auto lat = congruence_lattice(e.algebra);
    const std::vector<Partition> got(lat.elements().begin(), lat.elements().end());
    l.expect(got == oracle::congruences_by_enumeration(e.algebra), e.algebra.name());
    l.expect(congruence_lattice(e.algebra, Execution::serial).size() == got.size(), e.algebra.name() + " serial");
  }
  return l.done(std::to_string(algebras) + " algebras");
}

Result criterion2() {
  Ledger l;
  std::size_t pairs = 0;
  for (const char* name : {"z4", "z6", "klein4", "d4", "q8", "s3"}) {
    const auto g = builtin(name);
    const auto view = *oracle::group_view(g);
    const CommutatorTable t(g);
    const auto& lat = t.lattice();
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j, ++pairs)
        l.expect(t.commutator_partition(i, j) == oracle::group_commutator(view, lat[i], lat[j]),
                 std::string(name) + " [" + lat[i].to_string() + ", " + lat[j].to_string() + "]");
  }
  for (const auto& e : builtin_corpus()) {
    if (e.kind != Kind::lattice) continue;
    const CommutatorTable t(e.algebra);
    const auto& lat = t.lattice();
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (std::size_t j = 0; j < lat.size(); ++j, ++pairs)
        l.expect(t.commutator_partition(i, j) == meet(lat[i], lat[j]), e.algebra.name());
  }
  return l.done(std::to_string(pairs) + " pairs");
}

Result criterion3() {
  Ledger l;
  for (const char* name : {"d4", "q8"}) {
    const auto g = builtin(name);
    const auto view = *oracle::group_view(g);
    const auto zeta = center(g);
    l.expect(zeta == oracle::group_center(view), std::string(name) + " center");
    l.expect(oracle::identity_class(view, zeta).size() == 2, std::string(name) + " center order");
  }
  for (const auto& e : builtin_corpus())
    if (e.kind == Kind::group && e.abelian) l.expect(center(e.algebra).is_one(), e.algebra.name());
  l.expect(center(builtin("s3")).is_zero(), "s3");
  return l.done("d4, q8, s3 and the abelian groups");
}

Result criterion4() {
  return suite_checks({"lemma21"}).done(std::to_string(instances({"lemma21"})) + " intervals");
}

Result criterion5() {
  return suite_checks({"lemma22"}).done(std::to_string(instances({"lemma22"})) + " dense pairs");
}

Result criterion6() {
  Ledger l = suite_checks({"thm23", "cor24"});
  for (const auto& e : builtin_corpus()) {
    if (!e.difference_term || e.algebra.size() > 8) continue;
    const CommutatorTable t(e.algebra);
    l.expect(!check_corollary_24(t, difference_term_by_name(*e.difference_term)), e.algebra.name() + " cor");
  }
  return l.done(std::to_string(instances({"thm23", "cor24"})) + " instances");
}

Result criterion7() {
  const std::vector<std::string> names{"remark32a", "prop35", "lemma36", "lemma37", "lemma38", "prop34", "thm33"};
  return suite_checks(names).done(std::to_string(instances(names)) + " instances");
}

Result criterion8() {
  Ledger l;
  const auto z6 = decompose_absolute_retract(builtin("z6"));
  l.expect(z6.outcome == Outcome::direct_product, "z6 outcome");
  l.expect(z6.factors.size() == 2, "z6 factor count");
  if (z6.factors.size() == 2) {
    const bool two_three = (find_isomorphism(z6.factors[0], builtin("z2")) && find_isomorphism(z6.factors[1], builtin("z3"))) ||
                           (find_isomorphism(z6.factors[0], builtin("z3")) && find_isomorphism(z6.factors[1], builtin("z2")));
    l.expect(two_three, "z6 factors are not z2 and z3");
  }
  for (const auto& f : z6.factors) l.expect(is_si(f), "z6 factor not SI");
  l.expect(z6.embedding && is_homomorphism(*z6.embedding) && z6.embedding->is_injective() &&
               z6.embedding->is_surjective(),
           "z6 isomorphism");
  std::size_t si = 0;
  for (const auto& e : builtin_corpus()) {
    if (!e.difference_term || !is_si(e.algebra)) continue;
    ++si;
    const auto r = decompose_absolute_retract(e.algebra);
    l.expect(r.factors.size() == 1, e.algebra.name() + " has " + std::to_string(r.factors.size()) + " factors");
  }
  l.expect(is_si(builtin("z4")), "z4 is SI");
  return l.done("z6 = z2 x z3, " + std::to_string(si) + " SI members single");
}

Result criterion9() {
  Ledger l;
  for (const auto& e : builtin_corpus()) {
    if (e.kind != Kind::group || !e.abelian) continue;
    const auto r = split_center_abelian(e.algebra);
    const auto n = e.algebra.size();
    l.expect(r.outcome == Outcome::direct_product && r.factors.size() == 2 && r.factors[0].size() == 1 &&
                 r.factors[1].size() == n && r.second_abelian == true,
             e.algebra.name());
  }
  const auto s3 = split_center_abelian(builtin("s3"));
  l.expect(s3.outcome == Outcome::direct_product && s3.factors.size() == 2 && s3.factors[0].size() == 6 &&
               s3.factors[1].size() == 1,
           "s3 shape");
  l.expect(s3.factors.size() == 2 && is_centerless(s3.factors[0]) && is_abelian(s3.factors[1]), "s3 verdicts");
  l.expect(s3.first_centerless == true && s3.second_abelian == true, "s3 reported verdicts");
  const auto d4 = builtin("d4");
  const auto r = split_center_abelian(d4);
  const auto cg = principal_congruence(d4, 0, central_involution(d4));
  l.expect(r.outcome == Outcome::hypothesis_failure, "d4 outcome");
  l.expect(r.hypothesis_witness && *r.hypothesis_witness == cg, "d4 witness");
  return l.done("d4 witness " + cg.to_string());
}

Result criterion10() {
  Ledger l;
  for (const auto& e : builtin_corpus())
    if (e.abelian) l.expect(check_C1(e.algebra), e.algebra.name());
  l.expect(check_C1(builtin("z6")), "z6");
  l.expect(check_C1(builtin("s3")), "s3");
  const auto d4 = builtin("d4");
  const CommutatorTable t(d4);
  const auto cg = principal_congruence(d4, 0, central_involution(d4));
  const auto w = c1_violation(t);
  l.expect(w.has_value(), "d4 passes");
  if (w) {
    l.expect(t.lattice()[w->alpha] == cg, "d4 alpha");
    l.expect(w->beta == t.lattice().top(), "d4 beta");
    l.expect(w->lhs == cg && w->rhs.is_zero(), "d4 sides");
  }
  return l.done("d4 alpha = " + cg.to_string() + ", beta = 1");
}

Result criterion11() {
  return suite_checks({"propA1"}).done(std::to_string(instances({"propA1"})) + " extensions");
}

Result criterion12() {
  Ledger l;
  std::string timing;
  for (const char* name : {"d4", "q8"}) {
    const auto start = std::chrono::steady_clock::now();
    const auto c = build_cube_extension(builtin(name), group_difference_term());
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    l.expect(c.proper, std::string(name) + " not proper");
    l.expect(c.essential && is_essential(c.embedding), std::string(name) + " not essential");
    l.expect(secs <= 600, std::string(name) + " too slow");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.1fs ", name, secs);
    timing += buf;
  }
  for (const auto& e : builtin_corpus()) {
    if (e.kind != Kind::group || !e.abelian) continue;
    const auto c = build_cube_extension(e.algebra, group_difference_term());
    l.expect(!c.proper && c.embedding.is_surjective(), e.algebra.name());
  }
  return l.done(timing + "and abelian groups surjective");
}

Result criterion13() {
  Ledger l = suite_checks({"thm44"});
  std::size_t n = 0;
  for (const auto& e : builtin_corpus())
    if (e.algebra.size() <= 16) {
      ++n;
      l.expect(check_unique_factorization(e.algebra), e.algebra.name());
    }
  return l.done(std::to_string(n) + " algebras");
}

Result criterion14() {
  Ledger l;
  std::ostringstream out1, err1, out2, err2;
  const int code1 = run_command({"verify"}, out1, err1);
  const int code2 = run_command({"verify"}, out2, err2);
  l.expect(code1 == exit_ok && code2 == exit_ok, "verify exit status");
  l.expect(out1.str() == out2.str(), "reports differ");
  l.expect(!out1.str().empty(), "empty report");
  return l.done(std::to_string(out1.str().size()) + " bytes identical");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"congruence lattices match partition enumeration", criterion1},
      {"commutators match group and lattice oracles", criterion2},
      {"centers match brute force", criterion3},
      {"interval product congruences", criterion4},
      {"dense times dense is dense", criterion5},
      {"term condition and difference term identity", criterion6},
      {"product-essential representations are essential", criterion7},
      {"absolute retract decomposition", criterion8},
      {"centerless times abelian split", criterion9},
      {"(C1) on the corpus", criterion10},
      {"central congruence extension", criterion11},
      {"cube essential extension", criterion12},
      {"unique factorization", criterion13},
      {"verify is deterministic", criterion14},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
