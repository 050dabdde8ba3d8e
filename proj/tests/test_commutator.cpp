#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"
#include "ualg/error.hpp"
#include "ualg/oracle.hpp"

using namespace ualg;
using testing::blocks;
using testing::builtin;

namespace {

const Partition d4_center = Partition::parse(8, "0,2|1,3|4,6|5,7");

}  // namespace

TEST_CASE("zero annihilates") {
  for (const char* name : {"z4", "d4", "s3", "m3"}) {
    const CommutatorTable t(builtin(name));
    const auto& l = t.lattice();
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(t.commutator(l.bottom(), i) == l.bottom());
      CHECK(t.commutator(i, l.bottom()) == l.bottom());
    }
  }
}

TEST_CASE("basic values") {
  CHECK(commutator(builtin("z4"), Partition::one(4), Partition::one(4)).is_zero());
  CHECK(commutator(builtin("d4"), Partition::one(8), Partition::one(8)) == d4_center);
  CHECK(commutator(builtin("s3"), Partition::one(6), Partition::one(6)) == blocks(6, "0,3,4|1,2,5"));
}

TEST_CASE("centers") {
  CHECK(center(builtin("trivial")).is_one());
  CHECK(center(builtin("z4")).is_one());
  CHECK(center(builtin("d4")) == d4_center);
  CHECK(center(builtin("s3")).is_zero());
  for (const auto& e : builtin_corpus()) {
    if (!e.difference_term) continue;
    const CommutatorTable t(e.algebra);
    CHECK(t.center() == t.center_by_scan());
  }
}

TEST_CASE("abelian and centerless predicates") {
  CHECK(is_abelian_congruence(builtin("s3"), Partition::zero(6)));
  CHECK(is_central_congruence(builtin("s3"), Partition::zero(6)));
  CHECK(is_abelian(builtin("z4")));
  CHECK_FALSE(is_centerless(builtin("z4")));
  CHECK(is_centerless(builtin("s3")));
  CHECK_FALSE(is_abelian(builtin("s3")));
  CHECK(is_abelian_congruence(builtin("s3"), blocks(6, "0,3,4|1,2,5")));
  CHECK_FALSE(is_central_congruence(builtin("s3"), blocks(6, "0,3,4|1,2,5")));
}

TEST_CASE("non-modular algebras are refused") {
  CHECK_THROWS_AS(CommutatorTable(builtin("set4")), Refusal);
  CHECK_THROWS_AS(center(builtin("set4")), Refusal);
}

TEST_CASE("group commutator oracle on every corpus group") {
  for (const auto& e : builtin_corpus()) {
    if (e.kind != Kind::group) continue;
    const auto g = oracle::group_view(e.algebra);
    REQUIRE(g);
    const CommutatorTable t(e.algebra);
    const auto& l = t.lattice();
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j)
        CHECK(t.commutator_partition(i, j) == oracle::group_commutator(*g, l[i], l[j]));
    CHECK(l[t.center()] == oracle::group_center(*g));
  }
}

TEST_CASE("lattices: commutator is meet") {
  for (const char* name : {"chain2", "chain3", "chain5", "m3", "n5"}) {
    const CommutatorTable t(builtin(name));
    const auto& l = t.lattice();
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) CHECK(t.commutator(i, j) == l.meet(i, j));
  }
}

TEST_CASE("bounds, symmetry, additivity and monotonicity") {
  for (const auto& e : builtin_corpus()) {
    if (!e.difference_term) continue;
    const CommutatorTable t(e.algebra);
    const auto& l = t.lattice();
    if (l.size() > 12) continue;
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        const auto c = t.commutator(a, b);
        CHECK(l.leq(c, l.meet(a, b)));
        CHECK(c == t.commutator(b, a));
        for (std::size_t b2 = 0; b2 < l.size(); ++b2) {
          CHECK(t.commutator(a, l.join(b, b2)) == l.join(c, t.commutator(a, b2)));
          if (l.leq(b, b2)) CHECK(l.leq(c, t.commutator(a, b2)));
        }
      }
  }
}

TEST_CASE("fact report on small algebras") {
  const auto trivial = check_fact_properties(builtin("trivial"));
  CHECK(trivial.all_passed());

  FactPartners partners;
  partners.subuniverses = {{0, 2}};
  const auto z4 = check_fact_properties(builtin("z4"), partners);
  CHECK(z4.all_passed());
  for (const auto& c : z4.checks)
    if (c.fact == "2") CHECK(c.instances > 0);

  FactPartners z3;
  z3.product_partners = {builtin("z3")};
  const auto z2 = check_fact_properties(builtin("z2"), z3);
  CHECK(z2.all_passed());
}

TEST_CASE("(C1)") {
  for (const char* name : {"z4", "z8", "klein4", "z2xz4", "z4_module", "z6", "s3"}) CHECK(check_C1(builtin(name)));
  const CommutatorTable t(builtin("d4"));
  const auto w = c1_violation(t);
  REQUIRE(w);
  CHECK(t.lattice()[w->alpha] == d4_center);
  CHECK(w->beta == t.lattice().top());
  CHECK(w->lhs == d4_center);
  CHECK(w->rhs.is_zero());
}

TEST_CASE("abelian congruences permute with everything") {
  for (const char* name : {"d4", "q8", "z2xz4", "chain5", "m3", "n5"}) CHECK(check_abelian_permutes(builtin(name)));
}

TEST_CASE("quotient congruence") {
  const auto z4 = builtin("z4");
  const auto q = make_quotient(z4, blocks(4, "0,2|1,3"));
  CHECK(quotient_congruence(Partition::one(4), q.natural_map).is_one());
  CHECK(quotient_congruence(blocks(4, "0,2|1,3"), q.natural_map).is_zero());
}

TEST_CASE("unchecked commutator matches the table on a product") {
  const auto a = make_product({builtin("s3"), builtin("z2")}).algebra;
  const CommutatorTable t(a);
  const auto& l = t.lattice();
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j)
      CHECK(commutator_unchecked(a, l[i], l[j]) == t.commutator_partition(i, j));
}
