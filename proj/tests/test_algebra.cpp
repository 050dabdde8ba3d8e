#include "doctest.h"

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"
#include "ualg/error.hpp"
#include "ualg/term.hpp"

using namespace ualg;
using testing::blocks;
using testing::builtin;

TEST_CASE("tables are validated on construction") {
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {{"f", 1, {0, 2}}}), InvalidInput);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {{"f", 1, {0}}}), InvalidInput);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 2, {{"f", 0, {0}}, {"f", 0, {1}}}), InvalidInput);
  CHECK_THROWS_AS(FiniteAlgebra("bad", 0, {}), InvalidInput);
  const FiniteAlgebra ok("ok", 2, {{"c", 0, {1}}, {"f", 2, {0, 1, 1, 0}}});
  const Element args[] = {1, 1};
  CHECK(ok.apply(1, args) == 0);
  CHECK(ok.has_nullary());
}

TEST_CASE("unary product is the identity encoding") {
  const auto z4 = builtin("z4");
  const auto p = make_product({z4});
  CHECK(p.algebra.size() == 4);
  CHECK(find_isomorphism(p.algebra, z4) == std::vector<Element>{0, 1, 2, 3});
}

TEST_CASE("Z2 x Z2 is the Klein four group and Z2 x Z3 is Z6") {
  const auto z2 = builtin("z2"), z3 = builtin("z3");
  CHECK(find_isomorphism(make_product({z2, z2}).algebra, builtin("klein4")));
  CHECK(find_isomorphism(make_product({z2, z3}).algebra, builtin("z6")));
  CHECK_FALSE(find_isomorphism(make_product({z2, z2}).algebra, builtin("z4")));
}

TEST_CASE("product encoding puts the first factor first") {
  const auto p = make_product({builtin("z2"), builtin("z3")});
  CHECK(p.encoding.decode(4) == std::vector<Element>{1, 1});
  for (Element x = 0; x < 6; ++x) {
    const std::vector<Element> coords{p.projections[0](x), p.projections[1](x)};
    CHECK(p.encoding.encode(coords) == x);
  }
  for (const auto& pi : p.projections) {
    CHECK(is_homomorphism(pi));
    CHECK(pi.is_surjective());
  }
}

TEST_CASE("product rejects mismatched signatures by name") {
  try {
    make_product({builtin("z2"), builtin("z4_module")});
    FAIL("expected InvalidInput");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("mul") != std::string::npos);
  }
}

TEST_CASE("quotients") {
  const auto z4 = builtin("z4");
  const auto by_zero = make_quotient(z4, Partition::zero(4));
  CHECK(by_zero.algebra.size() == 4);
  CHECK(by_zero.natural_map.map == std::vector<Element>{0, 1, 2, 3});
  CHECK(make_quotient(z4, Partition::one(4)).algebra.size() == 1);
  const auto theta2 = blocks(4, "0,2|1,3");
  const auto q = make_quotient(z4, theta2);
  CHECK(find_isomorphism(q.algebra, builtin("z2")));
  CHECK(kernel(q.natural_map) == theta2);
  CHECK_THROWS_AS(make_quotient(z4, blocks(4, "0,1")), InvalidInput);
}

TEST_CASE("kernel of every natural map recovers the congruence") {
  for (const char* name : {"d4", "s3", "n5", "z2xz4"}) {
    const auto a = builtin(name);
    const auto lattice = congruence_lattice(a);
    for (const auto& theta : lattice.elements())
      CHECK(kernel(make_quotient(a, theta).natural_map) == theta);
  }
}

TEST_CASE("generated subuniverses") {
  const auto z4 = builtin("z4_module");
  const std::vector<Element> all{0, 1, 2, 3}, two{2}, none;
  CHECK(subalgebra_generated(z4, all) == all);
  CHECK(subalgebra_generated(z4, two) == std::vector<Element>{0, 2});
  CHECK(subalgebra_generated(z4, none) == std::vector<Element>{0});
  CHECK_THROWS_AS(subalgebra_generated(builtin("chain3"), none), InvalidInput);

  const auto cube = make_product({z4, z4, z4}).algebra;
  std::vector<Element> b(64);
  for (Element i = 0; i < 64; ++i) b[i] = i;
  CHECK(subalgebra_generated(cube, b) == b);
}

TEST_CASE("generation is idempotent and monotone") {
  const auto d4 = builtin("d4");
  for (Element x = 0; x < 8; ++x) {
    const std::vector<Element> seed{x};
    const auto once = subalgebra_generated(d4, seed);
    CHECK(subalgebra_generated(d4, once) == once);
    for (Element y = 0; y < 8; ++y) {
      const std::vector<Element> bigger{x, y};
      const auto grown = subalgebra_generated(d4, bigger);
      for (Element e : once) CHECK(std::binary_search(grown.begin(), grown.end(), e));
    }
  }
}

TEST_CASE("subuniverses of Z4 and of a chain") {
  CHECK(all_subuniverses(builtin("z4")).size() == 3);
  // Every subset of a chain is a sublattice, the empty one included.
  CHECK(all_subuniverses(builtin("chain3")).size() == 8);
}

TEST_CASE("term evaluation") {
  const auto z4 = builtin("z4");
  const auto d = group_difference_term();
  const Element a[] = {1, 2, 3}, b[] = {1, 3, 3}, c[] = {5, 0};
  CHECK(eval_term(z4, d, a) == 2);
  CHECK(eval_term(z4, d, b) == 1);
  CHECK(eval_term(builtin("z8"), Term::variable(0), c) == 5);
  CHECK_THROWS_AS(eval_term(z4, Term::variable(0), c), InvalidInput);
  CHECK_THROWS_AS(eval_term(z4, Term::parse("nope(x)"), a), InvalidInput);
  CHECK_THROWS_AS(eval_term(z4, Term::parse("mul(x)"), a), InvalidInput);
  const Element short_args[] = {1, 2};
  CHECK_THROWS_AS(eval_term(z4, d, short_args), InvalidInput);
}

TEST_CASE("a single operation on distinct variables is its own table") {
  for (const auto& entry : builtin_corpus()) {
    for (const auto& op : entry.algebra.operations()) {
      std::vector<Term> vars;
      for (std::size_t i = 0; i < op.arity; ++i) vars.push_back(Term::variable(i));
      CHECK(term_table(entry.algebra, Term::apply(op.name, vars), op.arity) == op.table);
    }
  }
}

TEST_CASE("term parsing round-trips") {
  const auto t = Term::parse("mul(mul(x, inv(y)), z)");
  CHECK(t.variable_count() == 3);
  CHECK(Term::parse(t.to_string()).to_string() == t.to_string());
  CHECK(Term::parse("x3").variable_index() == 3);
  CHECK_THROWS_AS(Term::parse("mul(x,"), InvalidInput);
}

TEST_CASE("homomorphisms") {
  const auto z4 = builtin("z4_module");
  Homomorphism id{z4, z4, {0, 1, 2, 3}};
  CHECK(is_homomorphism(id));

  const FiniteAlgebra z2("z2_module", 2, {{"+", 2, {0, 1, 1, 0}}, {"-", 1, {0, 1}}, {"0", 0, {0}}});
  CHECK(is_homomorphism(Homomorphism{z4, z2, {0, 1, 0, 1}}));

  const auto shift = homomorphism_violation(Homomorphism{z4, z4, {1, 2, 3, 0}});
  REQUIRE(shift);
  CHECK(shift->operation == "0");
  CHECK(shift->arguments.empty());
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(builtin("d4"), builtin("q8")) == std::nullopt);
  CHECK(find_isomorphism(builtin("z2xz4"), builtin("z8")) == std::nullopt);
  CHECK(find_isomorphism(builtin("m3"), builtin("m3")));
}

TEST_CASE("size limit is enforced on construction") {
  const auto saved = max_universe_size();
  set_max_universe_size(16);
  CHECK_THROWS_AS(make_product({builtin("z8"), builtin("z4")}), SizeLimitExceeded);
  CHECK_NOTHROW(make_product({builtin("z4"), builtin("z4")}));
  set_max_universe_size(saved);
}
