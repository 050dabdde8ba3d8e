#include "doctest.h"

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"
#include "ualg/decompose.hpp"
#include "ualg/error.hpp"

using namespace ualg;
using testing::blocks;
using testing::builtin;

namespace {

const Partition ker2 = Partition::parse(6, "0,2,4|1,3,5");
const Partition ker3 = Partition::parse(6, "0,3|1,4|2,5");
const Partition a3 = Partition::parse(6, "0,3,4|1,2,5");

}  // namespace

TEST_CASE("essential embeddings") {
  const auto z4 = builtin("z4");
  CHECK(is_essential(Homomorphism{z4, z4, {0, 1, 2, 3}}));
  const auto sub = make_subalgebra(z4, std::vector<Element>{0, 2});
  CHECK(is_essential(sub.inclusion));

  const auto v = make_product({builtin("z2"), builtin("z2")});
  const Homomorphism diagonal{builtin("z2"), v.algebra, {0, 3}};
  const auto check = check_essential(diagonal);
  CHECK_FALSE(check.essential);
  REQUIRE(check.witness);
  CHECK(*check.witness == kernel(v.projections[0]));
  CHECK(essentiality_witness_by_scan(diagonal));
  CHECK(check_essential(diagonal, Execution::serial).pair == check_essential(diagonal, Execution::parallel).pair);
}

TEST_CASE("product essential representations") {
  const auto single = make_representation(builtin("z4"), {Partition::zero(4)});
  CHECK(is_product_essential(single));

  const auto z6 = make_representation(builtin("z6"), {ker2, ker3});
  CHECK(is_product_essential(z6));

  const auto s3 = make_representation(builtin("s3"), {Partition::zero(6), a3});
  const auto check = check_product_essential(s3);
  CHECK_FALSE(check.product_essential);
  REQUIRE(check.witness);
  CHECK((*check.witness)[0].is_zero());
  CHECK((*check.witness)[1].is_one());
  CHECK(meet_system_violation(congruence_lattice(builtin("s3")), s3.kernels));

  CHECK_THROWS_AS(make_representation(builtin("z6"), {ker2}), InvalidInput);
}

TEST_CASE("meet system maximization") {
  const auto z6 = congruence_lattice(builtin("z6"));
  const auto same = maximize_meet_system(z6, {ker2, ker3});
  CHECK(same.phis == std::vector<Partition>{ker2, ker3});
  CHECK(same.chain.empty());

  const auto s3 = congruence_lattice(builtin("s3"));
  const auto climbed = maximize_meet_system(s3, {Partition::zero(6), a3});
  CHECK(climbed.phis == std::vector<Partition>{Partition::zero(6), Partition::one(6)});
  CHECK(climbed.chain.size() == 1);
  CHECK(climbed.chain[0].index == 1);

  CHECK_THROWS_AS(maximize_meet_system(z6, {ker2, ker2}), InvalidInput);
}

TEST_CASE("essentiality pipeline") {
  const auto z6 = verify_theorem_33(make_representation(builtin("z6"), {ker2, ker3}));
  CHECK(z6.passed());
  for (const char* step : {"prop35", "lemma36", "lemma37", "lemma38", "prop34", "essential"})
    CHECK(z6.find(step) != nullptr);

  const auto v = make_product({builtin("z2"), builtin("z2")});
  const auto klein = verify_theorem_33(make_representation(v.algebra, {kernel(v.projections[0]), kernel(v.projections[1])}));
  CHECK(klein.passed());

  const auto cube = make_product({builtin("z2"), builtin("z2"), builtin("z2")});
  std::vector<Partition> kernels;
  for (const auto& p : cube.projections) kernels.push_back(kernel(p));
  CHECK(verify_theorem_33(make_representation(cube.algebra, kernels)).passed());

  CHECK_THROWS_AS(verify_theorem_33(make_representation(builtin("s3"), {Partition::zero(6), a3})), InvalidInput);
}

TEST_CASE("lemma on admissible betas") {
  const auto z6 = make_representation(builtin("z6"), {ker2, ker3});
  CHECK(verify_lemma_37(z6, z6.kernels).holds);
  const auto betas = admissible_betas(z6);
  REQUIRE(betas.size() == 2);
  CHECK(verify_lemma_37(z6, {betas[0].front(), betas[1].front()}).holds);

  const auto cube = make_product({builtin("z2"), builtin("z2"), builtin("z2")});
  std::vector<Partition> kernels;
  for (const auto& p : cube.projections) kernels.push_back(kernel(p));
  const auto rep = make_representation(cube.algebra, kernels);
  const auto admissible = admissible_betas(rep);
  for (const auto& b0 : admissible[0])
    for (const auto& b1 : admissible[1])
      for (const auto& b2 : admissible[2]) CHECK(verify_lemma_37(rep, {b0, b1, b2}).holds);

  CHECK_THROWS_AS(verify_lemma_37(z6, {Partition::zero(6), ker3}), InvalidInput);
  CHECK_THROWS_AS(verify_lemma_37(z6, {ker2}), InvalidInput);
}

TEST_CASE("absolute retract procedure") {
  const auto z2 = decompose_absolute_retract(builtin("z2"));
  CHECK(z2.outcome == Outcome::direct_product);
  CHECK(z2.factors.size() == 1);

  const auto z6 = decompose_absolute_retract(builtin("z6"));
  CHECK(z6.outcome == Outcome::direct_product);
  REQUIRE(z6.factors.size() == 2);
  REQUIRE(z6.embedding);
  CHECK(is_homomorphism(*z6.embedding));
  CHECK(z6.embedding->is_injective());
  CHECK(z6.embedding->is_surjective());
  std::vector<std::size_t> sizes{z6.factors[0].size(), z6.factors[1].size()};
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 3});
  for (const auto& f : z6.factors) CHECK(is_si(f));

  const auto z4 = decompose_absolute_retract(builtin("z4"));
  CHECK(z4.outcome == Outcome::direct_product);
  CHECK(z4.factors.size() == 1);

  const auto chain3 = decompose_absolute_retract(builtin("chain3"));
  CHECK(chain3.outcome == Outcome::proper_essential_extension);
  REQUIRE(chain3.embedding);
  CHECK_FALSE(chain3.embedding->is_surjective());
  CHECK(chain3.essential);

  CHECK_THROWS_AS(decompose_absolute_retract(builtin("set4")), Refusal);
}

TEST_CASE("center and abelian split") {
  const auto z4 = split_center_abelian(builtin("z4"));
  CHECK(z4.outcome == Outcome::direct_product);
  REQUIRE(z4.kernels.size() == 2);
  CHECK(z4.kernels[0].is_one());
  CHECK(z4.kernels[1].is_zero());
  CHECK(z4.factors[0].size() == 1);
  CHECK(z4.second_abelian == true);

  const auto s3 = split_center_abelian(builtin("s3"));
  CHECK(s3.outcome == Outcome::direct_product);
  REQUIRE(s3.kernels.size() == 2);
  CHECK(s3.kernels[0].is_zero());
  CHECK(s3.kernels[1].is_one());
  CHECK(s3.first_centerless == true);
  CHECK(s3.second_abelian == true);

  const auto d4 = split_center_abelian(builtin("d4"));
  CHECK(d4.outcome == Outcome::hypothesis_failure);
  REQUIRE(d4.hypothesis_witness);
  CHECK(*d4.hypothesis_witness == blocks(8, "0,2|1,3|4,6|5,7"));
  CHECK(d4.c1_holds == false);
}

TEST_CASE("unique factorization") {
  const auto z2 = enumerate_direct_decompositions(builtin("z2"));
  CHECK(z2.factor_pairs.empty());
  CHECK(z2.unique());
  CHECK(z2.factorizations.size() == 1);

  const auto z6 = enumerate_direct_decompositions(builtin("z6"));
  CHECK(z6.factor_pairs.size() == 1);
  CHECK(z6.unique());
  REQUIRE(z6.factorizations.size() == 1);
  CHECK(z6.factorizations[0].size() == 2);

  const auto v = enumerate_direct_decompositions(builtin("klein4"));
  CHECK(v.factor_pairs.size() == 3);
  CHECK(v.unique());
  REQUIRE(v.factorizations.size() == 1);
  CHECK(v.factorizations[0] == std::vector<std::size_t>{0, 0});
  CHECK(v.classes.size() == 1);

  CHECK(check_unique_factorization(builtin("trivial")));
  CHECK(enumerate_direct_decompositions(builtin("trivial")).factorizations.front().empty());
}

TEST_CASE("product essential pair from a non-FSI algebra") {
  CHECK(verify_theorem_41(builtin("z4")).passed());
  for (const char* name : {"z6", "klein4", "z2xz4", "chain3"}) {
    const auto r = verify_theorem_41(builtin(name));
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.find("essential"));
  }
}

TEST_CASE("zero restriction congruences are central") {
  const auto chain3 = decompose_absolute_retract(builtin("chain3"));
  REQUIRE(chain3.embedding);
  const auto zr = zero_restriction_congruences(*chain3.embedding);
  CHECK(zr.size() == 1);
  CHECK(zr.front().is_zero());
}
