#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "ualg/error.hpp"
#include "ualg/oracle.hpp"
#include "ualg/partition.hpp"

using namespace ualg;
using testing::blocks;

TEST_CASE("canonical form is least element of each block") {
  std::vector<std::size_t> labels{7, 3, 7, 3, 9};
  const auto p = Partition::from_labels(labels);
  CHECK(p.reps()[0] == 0);
  CHECK(p.reps()[2] == 0);
  CHECK(p.reps()[3] == 1);
  CHECK(p.reps()[4] == 4);
  CHECK(p.to_string() == "0,2|1,3|4");
  CHECK(p.block_count() == 3);
  CHECK_THROWS_AS(Partition(std::vector<Element>{1, 1}), InvalidInput);
}

TEST_CASE("parse and to_string are inverse") {
  for (const auto& p : oracle::all_partitions(5)) CHECK(Partition::parse(5, p.to_string()) == p);
  CHECK(Partition::parse(4, "0,2") == blocks(4, "0,2|1|3"));
  CHECK_THROWS_AS(Partition::parse(3, "0,5"), InvalidInput);
}

TEST_CASE("bell numbers count all partitions") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) CHECK(oracle::all_partitions(n).size() == bell[n]);
}

TEST_CASE("order, meet and join") {
  const auto zero = Partition::zero(4), one = Partition::one(4);
  const auto p = blocks(4, "0,1|2|3"), q = blocks(4, "1,2|0|3");
  CHECK(zero.leq(p));
  CHECK(p.leq(one));
  CHECK_FALSE(p.leq(q));
  CHECK(meet(p, one) == p);
  CHECK(meet(p, q) == zero);
  CHECK(equivalence_join(p, zero) == p);
  CHECK(equivalence_join(p, q) == blocks(4, "0,1,2|3"));
  CHECK_FALSE(zero < one);
  CHECK(one < zero);
}

TEST_CASE("from_pairs and from_blocks") {
  const std::pair<Element, Element> pairs[] = {{0, 3}, {3, 1}};
  CHECK(Partition::from_pairs(5, pairs) == blocks(5, "0,1,3"));
  CHECK(Partition::from_blocks(4, {{3, 1}, {0}, {2}}) == blocks(4, "1,3|0|2"));
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InvalidInput);
}

TEST_CASE("compose with zero is the identity and saturate of everything is everything") {
  const auto theta = blocks(6, "0,2,4|1,3,5");
  const auto c = compose(theta, Partition::zero(6));
  CHECK(c.is_equivalence());
  CHECK(c.to_partition() == theta);
  const std::vector<Element> all{0, 1, 2, 3, 4, 5};
  CHECK(saturate(all, theta) == all);
  const std::vector<Element> two{2};
  CHECK(saturate(two, theta) == std::vector<Element>{0, 2, 4});
}

TEST_CASE("kernels of Z6 permute and compose to the full relation") {
  const auto ker2 = blocks(6, "0,2,4|1,3,5");
  const auto ker3 = blocks(6, "0,3|1,4|2,5");
  const auto a = compose(ker2, ker3), b = compose(ker3, ker2);
  CHECK(a == b);
  CHECK(a.pair_count() == 36);
}

TEST_CASE("compose of non-permuting partitions is not transitive") {
  const auto p = blocks(3, "0,1"), q = blocks(3, "1,2");
  const auto r = compose(p, q);
  CHECK(r.contains(0, 2));
  CHECK_FALSE(r.contains(2, 0));
  CHECK_FALSE(r.is_symmetric());
}
