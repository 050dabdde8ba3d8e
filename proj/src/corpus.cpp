#include "ualg/corpus.hpp"

#include <algorithm>
#include <array>

#include "ualg/error.hpp"

namespace ualg {

FiniteAlgebra group_from_table(std::string name, std::size_t n,
                               const std::vector<Element>& mul) {
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y)
      if (mul[x * n + y] == 0) {
        inv[x] = y;
        found = true;
      }
    if (!found) throw InvalidInput(name + ": element " + std::to_string(x) + " has no inverse");
  }
  return FiniteAlgebra(std::move(name), n,
                       {{"mul", 2, mul}, {"inv", 1, std::move(inv)}, {"e", 0, {0}}});
}

FiniteAlgebra cyclic_group(std::size_t n) {
  std::vector<Element> mul(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) mul[x * n + y] = static_cast<Element>((x + y) % n);
  return group_from_table("z" + std::to_string(n), n, mul);
}

FiniteAlgebra lattice_from_order(std::string name, std::size_t n,
                                 const std::vector<std::pair<Element, Element>>& covers) {
  std::vector<bool> leq(n * n, false);
  for (Element x = 0; x < n; ++x) leq[x * n + x] = true;
  for (auto [x, y] : covers) leq[x * n + y] = true;
  for (Element k = 0; k < n; ++k)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (leq[x * n + k] && leq[k * n + y]) leq[x * n + y] = true;
  auto bound = [&](Element x, Element y, bool lower) {
    std::vector<Element> cands;
    for (Element z = 0; z < n; ++z)
      if (lower ? (leq[z * n + x] && leq[z * n + y]) : (leq[x * n + z] && leq[y * n + z]))
        cands.push_back(z);
    for (Element c : cands)
      if (std::all_of(cands.begin(), cands.end(),
                      [&](Element d) { return lower ? leq[d * n + c] : leq[c * n + d]; }))
        return c;
    throw InvalidInput(name + ": order is not a lattice");
  };
  std::vector<Element> meet(n * n), join(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      meet[x * n + y] = bound(x, y, true);
      join[x * n + y] = bound(x, y, false);
    }
  return FiniteAlgebra(std::move(name), n, {{"meet", 2, meet}, {"join", 2, join}});
}

namespace {

FiniteAlgebra product_group(std::string name, const std::vector<std::size_t>& orders) {
  MixedRadix enc(orders);
  const std::size_t n = enc.total();
  std::vector<Element> mul(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      auto a = enc.decode(x), b = enc.decode(y);
      for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = static_cast<Element>((a[i] + b[i]) % orders[i]);
      mul[x * n + y] = enc.encode(a);
    }
  return group_from_table(std::move(name), n, mul);
}

// r^i s^j stored as i + 4j.
FiniteAlgebra dihedral4() {
  std::vector<Element> mul(64);
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      const Element i = x % 4, j = x / 4, k = y % 4, l = y / 4;
      const Element r = (j == 0 ? i + k : i + 4 - k) % 4;
      mul[x * 8 + y] = r + 4 * ((j + l) % 2);
    }
  return group_from_table("d4", 8, mul);
}

// 1, -1, i, -i, j, -j, k, -k: unit u in {1,i,j,k} with sign bit s at 2u + s.
FiniteAlgebra quaternion8() {
  // unit products as (unit, sign flip)
  static const std::array<std::array<std::pair<int, int>, 4>, 4> kUnits = {{
      {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}},
      {{{1, 0}, {0, 1}, {3, 0}, {2, 1}}},
      {{{2, 0}, {3, 1}, {0, 1}, {1, 0}}},
      {{{3, 0}, {2, 0}, {1, 1}, {0, 1}}},
  }};
  std::vector<Element> mul(64);
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      auto [u, flip] = kUnits[x / 2][y / 2];
      const int sign = (static_cast<int>(x % 2) + static_cast<int>(y % 2) + flip) % 2;
      mul[x * 8 + y] = static_cast<Element>(2 * u + sign);
    }
  return group_from_table("q8", 8, mul);
}

// Permutations of {0,1,2} in lexicographic order; mul(p,q) = p after q.
FiniteAlgebra symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<Element> mul(36);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) {
      std::array<int, 3> c{};
      for (int t = 0; t < 3; ++t) c[t] = perms[x][perms[y][t]];
      mul[x * 6 + y] =
          static_cast<Element>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return group_from_table("s3", 6, mul);
}

FiniteAlgebra z4_module() {
  std::vector<Element> add(16), neg(4);
  for (Element x = 0; x < 4; ++x) {
    neg[x] = (4 - x) % 4;
    for (Element y = 0; y < 4; ++y) add[x * 4 + y] = (x + y) % 4;
  }
  return FiniteAlgebra("z4_module", 4, {{"+", 2, add}, {"-", 1, neg}, {"0", 0, {0}}});
}

FiniteAlgebra chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> covers;
  for (Element x = 0; x + 1 < n; ++x) covers.emplace_back(x, x + 1);
  return lattice_from_order("chain" + std::to_string(n), n, covers);
}

CorpusEntry group_entry(FiniteAlgebra a, bool abelian, bool residually_small) {
  return {std::move(a), Kind::group, "group_d", residually_small, abelian};
}

CorpusEntry lattice_entry(FiniteAlgebra a) {
  return {std::move(a), Kind::lattice, "proj_d", true, false};
}

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back(group_entry(group_from_table("trivial", 1, {0}), true, true));
  out.push_back(group_entry(cyclic_group(2), true, true));
  out.push_back(group_entry(cyclic_group(3), true, true));
  out.push_back(group_entry(cyclic_group(4), true, true));
  out.push_back(group_entry(cyclic_group(6), true, true));
  out.push_back(group_entry(cyclic_group(8), true, true));
  out.push_back(group_entry(product_group("klein4", {2, 2}), true, true));
  out.push_back(group_entry(product_group("z2xz4", {2, 4}), true, true));
  out.push_back(group_entry(product_group("z2xz2xz2", {2, 2, 2}), true, true));
  out.push_back(group_entry(dihedral4(), false, false));
  out.push_back(group_entry(quaternion8(), false, false));
  out.push_back(group_entry(symmetric3(), false, true));
  out.push_back({z4_module(), Kind::module, "module_d", true, true});
  out.push_back(lattice_entry(chain(2)));
  out.push_back(lattice_entry(chain(3)));
  out.push_back(lattice_entry(chain(5)));
  out.push_back(lattice_entry(lattice_from_order("m3", 5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}})));
  out.push_back(lattice_entry(lattice_from_order("n5", 5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}})));
  out.push_back({FiniteAlgebra("set3", 3, {}), Kind::set, std::nullopt, false, false});
  out.push_back({FiniteAlgebra("set4", 4, {}), Kind::set, std::nullopt, false, false});
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.algebra.name() < b.algebra.name();
  });
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

std::optional<CorpusEntry> find_builtin(std::string_view name) {
  for (const auto& e : builtin_corpus())
    if (e.algebra.name() == name) return e;
  return std::nullopt;
}

Term group_difference_term() { return Term::parse("mul(mul(x,inv(y)),z)"); }
Term module_difference_term() { return Term::parse("+(+(x,-(y)),z)"); }
Term projection_difference_term() { return Term::variable(0); }

Term difference_term_by_name(std::string_view name) {
  if (name == "group_d") return group_difference_term();
  if (name == "module_d") return module_difference_term();
  if (name == "proj_d") return projection_difference_term();
  return Term::parse(name);
}

}  // namespace ualg
