#include "ualg/oracle.hpp"

#include <algorithm>
#include <set>

#include "ualg/error.hpp"

namespace ualg::oracle {

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return {Partition::zero(0)};
  // Restricted growth strings.
  std::vector<std::size_t> rgs(n, 0), maxima(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(rgs));
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == maxima[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxima[i] = std::max(maxima[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool compatible(const FiniteAlgebra& a, const Partition& p) {
  const std::size_t n = a.size();
  for (const auto& op : a.operations()) {
    const std::size_t k = op.arity;
    if (k == 0) continue;
    // Every pair of coordinatewise related tuples.
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= n;
    for (std::size_t u = 0; u < total; ++u) {
      std::vector<Element> x(k);
      std::size_t rest = u;
      for (std::size_t i = k; i-- > 0;) {
        x[i] = static_cast<Element>(rest % n);
        rest /= n;
      }
      for (std::size_t v = 0; v < total; ++v) {
        std::size_t w = v, ix = 0, iy = 0;
        bool related = true;
        std::vector<Element> y(k);
        for (std::size_t i = k; i-- > 0;) {
          y[i] = static_cast<Element>(w % n);
          w /= n;
        }
        for (std::size_t i = 0; i < k; ++i) {
          if (!p.related(x[i], y[i])) related = false;
          ix = ix * n + x[i];
          iy = iy * n + y[i];
        }
        if (related && !p.related(op.table[ix], op.table[iy])) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Partition> congruences_by_enumeration(const FiniteAlgebra& a) {
  std::vector<Partition> out;
  for (auto& p : all_partitions(a.size()))
    if (compatible(a, p)) out.push_back(std::move(p));
  return out;
}

std::optional<GroupView> group_view(const FiniteAlgebra& a) {
  auto op = a.find_operation("mul");
  if (!op || a.operation(*op).arity != 2 || a.size() == 0) return std::nullopt;
  GroupView g;
  g.n = a.size();
  g.mul = a.operation(*op).table;
  const std::size_t n = g.n;
  std::optional<Element> id;
  for (Element e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = g(e, x) == x && g(x, e) == x;
    if (ok) id = e;
  }
  if (!id) return std::nullopt;
  g.identity = *id;
  g.inverse.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y)
      if (g(x, y) == g.identity && g(y, x) == g.identity) {
        g.inverse[x] = y;
        found = true;
      }
    if (!found) return std::nullopt;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (g(g(x, y), z) != g(x, g(y, z))) return std::nullopt;
  return g;
}

std::vector<Element> generated_subgroup(const GroupView& g, const std::vector<Element>& gens) {
  std::set<Element> h{g.identity};
  std::vector<Element> frontier{g.identity};
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      Element y = g(x, s);
      if (h.insert(y).second) frontier.push_back(y);
    }
  }
  return {h.begin(), h.end()};
}

std::vector<std::vector<Element>> normal_subgroups(const GroupView& g) {
  // Every normal subgroup is generated by the conjugacy classes it contains,
  // so close unions of conjugacy-class-generated subgroups.
  const std::size_t n = g.n;
  std::set<std::vector<Element>> found;
  std::vector<std::vector<Element>> frontier;
  auto add = [&](std::vector<Element> s) {
    if (found.insert(s).second) frontier.push_back(std::move(s));
  };
  add({g.identity});
  for (Element x = 0; x < n; ++x) {
    std::vector<Element> conj;
    for (Element y = 0; y < n; ++y) conj.push_back(g(g(y, x), g.inverse[y]));
    add(generated_subgroup(g, conj));
  }
  while (!frontier.empty()) {
    auto s = frontier.back();
    frontier.pop_back();
    std::vector<std::vector<Element>> current(found.begin(), found.end());
    for (const auto& t : current) {
      std::vector<Element> gens = s;
      gens.insert(gens.end(), t.begin(), t.end());
      add(generated_subgroup(g, gens));
    }
  }
  std::vector<std::vector<Element>> out;
  for (const auto& s : found) {
    bool normal = true;
    for (Element x : s)
      for (Element y = 0; y < n && normal; ++y)
        normal = std::binary_search(s.begin(), s.end(), g(g(y, x), g.inverse[y]));
    if (!normal) throw Error("normal subgroup oracle produced a non-normal subgroup");
    out.push_back(s);
  }
  return out;
}

Partition coset_partition(const GroupView& g, const std::vector<Element>& normal) {
  std::vector<std::size_t> labels(g.n);
  for (Element x = 0; x < g.n; ++x) {
    Element least = g.n;
    for (Element h : normal) least = std::min(least, g(x, h));
    labels[x] = least;
  }
  return Partition::from_labels(labels);
}

std::vector<Element> identity_class(const GroupView& g, const Partition& p) {
  std::vector<Element> out;
  for (Element x = 0; x < g.n; ++x)
    if (p.related(x, g.identity)) out.push_back(x);
  return out;
}

Partition group_commutator(const GroupView& g, const Partition& alpha, const Partition& beta) {
  const auto m = identity_class(g, alpha), k = identity_class(g, beta);
  std::vector<Element> gens;
  for (Element x : m)
    for (Element y : k) gens.push_back(g(g(x, y), g(g.inverse[x], g.inverse[y])));
  return coset_partition(g, generated_subgroup(g, gens));
}

Partition group_center(const GroupView& g) {
  std::vector<Element> z;
  for (Element x = 0; x < g.n; ++x) {
    bool central = true;
    for (Element y = 0; y < g.n && central; ++y) central = g(x, y) == g(y, x);
    if (central) z.push_back(x);
  }
  return coset_partition(g, z);
}

}  // namespace ualg::oracle
