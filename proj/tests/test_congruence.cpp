#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/corpus.hpp"
#include "ualg/error.hpp"
#include "ualg/oracle.hpp"

using namespace ualg;
using testing::blocks;
using testing::builtin;

namespace {

const Partition ker2 = Partition::parse(6, "0,2,4|1,3,5");
const Partition ker3 = Partition::parse(6, "0,3|1,4|2,5");

}  // namespace

TEST_CASE("compatibility") {
  const auto z4 = builtin("z4_module");
  CHECK(is_congruence(z4, Partition::zero(4)));
  CHECK(is_congruence(z4, blocks(4, "0,2|1,3")));
  const auto v = congruence_violation(z4, blocks(4, "0,1"));
  REQUIRE(v);
  CHECK(v->operation == "+");
  CHECK_FALSE(Partition::parse(4, "0,1").related(v->fx, v->fy));
}

TEST_CASE("principal congruences") {
  const auto z4 = builtin("z4");
  CHECK(principal_congruence(z4, 3, 3) == Partition::zero(4));
  CHECK(principal_congruence(z4, 0, 2) == blocks(4, "0,2|1,3"));
  // Klein four as Z2 x Z2: (0,0) ~ (1,0) is 0 ~ 2, whose class is the kernel of
  // the second projection.
  const auto v = make_product({builtin("z2"), builtin("z2")});
  CHECK(principal_congruence(v.algebra, 0, 2) == kernel(v.projections[1]));
}

TEST_CASE("principal congruence is the least congruence containing the pair") {
  for (const char* name : {"d4", "s3", "n5", "m3", "z2xz4", "set3"}) {
    const auto a = builtin(name);
    const auto all = oracle::congruences_by_enumeration(a);
    for (Element x = 0; x < a.size(); ++x)
      for (Element y = x + 1; y < a.size(); ++y) {
        const auto cg = principal_congruence(a, x, y);
        for (const auto& theta : all)
          if (theta.related(x, y)) CHECK(cg.leq(theta));
        CHECK(cg.related(x, y));
      }
  }
}

TEST_CASE("small lattices") {
  const auto trivial = congruence_lattice(builtin("trivial"));
  CHECK(trivial.size() == 1);
  CHECK(trivial.bottom() == trivial.top());

  const auto z4 = congruence_lattice(builtin("z4"));
  CHECK(z4.size() == 3);
  CHECK(z4.height() == 2);

  const auto v = congruence_lattice(builtin("klein4"));
  CHECK(v.size() == 5);
  CHECK(v.atoms().size() == 3);
  CHECK(v.height() == 2);
  CHECK(is_modular(v));
}

TEST_CASE("lattice index 0 is the top and the last index is the bottom") {
  const auto l = congruence_lattice(builtin("d4"));
  CHECK(l.top() == 0);
  CHECK(l.bottom() == l.size() - 1);
  CHECK(l[l.top()].is_one());
  CHECK(l[l.bottom()].is_zero());
}

TEST_CASE("serial and parallel lattices agree") {
  for (const auto& e : builtin_corpus()) {
    const auto s = congruence_lattice(e.algebra, Execution::serial);
    const auto p = congruence_lattice(e.algebra, Execution::parallel);
    CHECK(std::vector<Partition>(s.elements().begin(), s.elements().end()) ==
          std::vector<Partition>(p.elements().begin(), p.elements().end()));
    CHECK(principal_congruences(e.algebra, Execution::serial) ==
          principal_congruences(e.algebra, Execution::parallel));
  }
}

TEST_CASE("meet and join in Con(Z6)") {
  const auto z6 = builtin("z6");
  CHECK(join(z6, ker2, ker3) == Partition::one(6));
  CHECK(meet(ker2, ker3) == Partition::zero(6));
  CHECK(join(z6, ker2, Partition::zero(6)) == ker2);
  CHECK(meet(ker2, Partition::one(6)) == ker2);
}

TEST_CASE("join is the least upper bound inside the lattice") {
  for (const char* name : {"n5", "m3", "d4", "z2xz2xz2"}) {
    const auto l = congruence_lattice(builtin(name));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j) {
        const auto jp = join(l.algebra(), l[i], l[j]);
        CHECK(l.index_of(jp) == l.join(i, j));
        for (std::size_t k = 0; k < l.size(); ++k)
          if (l.leq(i, k) && l.leq(j, k)) CHECK(jp.leq(l[k]));
      }
  }
}

TEST_CASE("restriction along embeddings") {
  const auto z4 = builtin("z4");
  const std::vector<Element> sub{0, 2};
  CHECK(restrict(Partition::zero(4), sub) == Partition::zero(2));
  CHECK(restrict(blocks(4, "0,2|1,3"), sub) == Partition::one(2));

  const auto v = make_product({builtin("z2"), builtin("z2")});
  const std::vector<Element> diagonal{0, 3};
  CHECK(restrict(kernel(v.projections[0]), diagonal) == Partition::zero(2));
}

TEST_CASE("restriction of a product congruence agrees with the definition") {
  const auto z6 = builtin("z6");
  const auto pz2 = make_quotient(z6, ker3), pz3 = make_quotient(z6, ker2);
  const auto prod = make_product({pz2.algebra, pz3.algebra});
  std::vector<Element> emb(6);
  for (Element a = 0; a < 6; ++a) {
    const std::vector<Element> c{pz2.natural_map(a), pz3.natural_map(a)};
    emb[a] = prod.encoding.encode(c);
  }
  const auto l2 = congruence_lattice(pz2.algebra), l3 = congruence_lattice(pz3.algebra);
  for (const auto& p : l2.elements())
    for (const auto& q : l3.elements()) {
      const Partition parts[] = {p, q};
      const auto via_tuples = restrict(product_congruence(prod.encoding, parts), emb);
      std::vector<std::pair<Element, Element>> pairs;
      for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b)
          if (p.related(pz2.natural_map(a), pz2.natural_map(b)) &&
              q.related(pz3.natural_map(a), pz3.natural_map(b)))
            pairs.emplace_back(a, b);
      CHECK(via_tuples == Partition::from_pairs(6, pairs));
    }
}

TEST_CASE("product congruences on Z2 x Z2") {
  const auto v = make_product({builtin("z2"), builtin("z2")});
  const Partition zeros[] = {Partition::zero(2), Partition::zero(2)};
  const Partition ones[] = {Partition::one(2), Partition::one(2)};
  const Partition first[] = {Partition::one(2), Partition::zero(2)};
  CHECK(product_congruence(v.encoding, zeros).is_zero());
  CHECK(product_congruence(v.encoding, ones).is_one());
  CHECK(product_congruence(v.encoding, first) == kernel(v.projections[1]));

  const auto zero_check = is_product_congruence(v.encoding, Partition::zero(4));
  CHECK(zero_check.is_product());
  CHECK(zero_check.factors == std::vector<Partition>{Partition::zero(2), Partition::zero(2)});

  const auto k1 = is_product_congruence(v.encoding, kernel(v.projections[1]));
  CHECK(k1.is_product());
  CHECK(k1.factors == std::vector<Partition>{Partition::one(2), Partition::zero(2)});

  const auto skew = is_product_congruence(v.encoding, principal_congruence(v.algebra, 0, 3));
  CHECK_FALSE(skew.is_product());
  CHECK(skew.factors == std::vector<Partition>{Partition::one(2), Partition::one(2)});
}

TEST_CASE("intervals") {
  const auto l = congruence_lattice(builtin("z4"));
  const auto theta2 = blocks(4, "0,2|1,3");
  CHECK(interval(l, theta2, theta2) == std::vector<Partition>{theta2});
  CHECK(interval(l, l.bottom(), l.top()).size() == l.size());
  CHECK(interval(l, Partition::zero(4), theta2) == std::vector<Partition>{theta2, Partition::zero(4)});
  CHECK_THROWS_AS(interval(l, Partition::one(4), Partition::zero(4)), InvalidInput);
}

TEST_CASE("modularity") {
  for (const char* name : {"z4", "d4", "q8", "s3", "klein4", "z2xz4", "chain3"})
    CHECK(is_modular(congruence_lattice(builtin(name))));
  const auto l = congruence_lattice(builtin("set4"));
  CHECK(l.size() == 15);
  const auto p = find_pentagon(l);
  REQUIRE(p);
  CHECK(l.leq(p->a, p->b));
  CHECK(p->a != p->b);
  CHECK(l.meet(p->b, p->c) == p->bottom);
  CHECK(l.join(p->a, p->c) == p->top);
}

TEST_CASE("density") {
  const auto z4 = congruence_lattice(builtin("z4"));
  CHECK(is_dense(z4, Partition::one(4)));
  CHECK(is_dense(z4, blocks(4, "0,2|1,3")));
  CHECK_FALSE(is_dense(z4, Partition::zero(4)));

  const auto z6 = congruence_lattice(builtin("z6"));
  const auto w = density_witness(z6, ker2);
  REQUIRE(w);
  CHECK(z6[*w] == ker3);
  CHECK(density_witness_pair(z6.algebra(), ker2) == std::make_pair(Element{0}, Element{3}));
  CHECK_FALSE(density_witness_pair(z4.algebra(), blocks(4, "0,2|1,3")));
}

TEST_CASE("subdirect irreducibility") {
  const auto z2 = congruence_lattice(builtin("z2"));
  CHECK(is_si(z2));
  CHECK(is_fsi(z2));
  CHECK(is_si(builtin("z4")));
  CHECK(is_si(builtin("d4")));
  CHECK_FALSE(is_fsi(builtin("z6")));
  CHECK_FALSE(is_fsi(builtin("trivial")));
  CHECK(meet_irreducibles(congruence_lattice(builtin("z6"))).size() == 2);
}

TEST_CASE("kernels") {
  const auto z4 = builtin("z4");
  CHECK(kernel(Homomorphism{z4, z4, {0, 1, 2, 3}}).is_zero());
  CHECK(kernel(Homomorphism{z4, builtin("trivial"), {0, 0, 0, 0}}).is_one());
  const auto z2 = builtin("z2");
  CHECK(kernel(Homomorphism{z4, z2, {0, 1, 0, 1}}) == blocks(4, "0,2|1,3"));
}

TEST_CASE("collision free pairs: serial and parallel agree") {
  for (const char* name : {"d4", "z2xz2xz2", "m3", "s3"}) {
    const auto a = builtin(name);
    std::vector<long> labels(a.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<long>(i % 2);
    CHECK(collision_free_pairs(a, labels, Execution::serial) ==
          collision_free_pairs(a, labels, Execution::parallel));
    CHECK(first_collision_free_pair(a, labels, Execution::serial) ==
          first_collision_free_pair(a, labels, Execution::parallel));
  }
}
