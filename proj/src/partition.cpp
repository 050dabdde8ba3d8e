#include "ualg/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ualg/error.hpp"

namespace ualg {

UnionFind::UnionFind(std::size_t n) : parent_(n), weight_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), Element{0});
}

Element UnionFind::find(Element x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Element x, Element y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (weight_[x] < weight_[y]) std::swap(x, y);
  parent_[y] = x;
  weight_[x] += weight_[y];
  return true;
}

Partition::Partition(std::vector<Element> reps) : reps_(std::move(reps)) {
  for (std::size_t x = 0; x < reps_.size(); ++x) {
    Element r = reps_[x];
    if (r > x || reps_[r] != r) {
      throw InvalidInput("partition array is not canonical at element " +
                         std::to_string(x));
    }
  }
}

Partition Partition::zero(std::size_t n) {
  Partition p;
  p.reps_.resize(n);
  std::iota(p.reps_.begin(), p.reps_.end(), Element{0});
  return p;
}

Partition Partition::one(std::size_t n) {
  Partition p;
  p.reps_.assign(n, 0);
  return p;
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  Partition p;
  p.reps_.resize(labels.size());
  // Label values may be large, so map them through a sorted lookup.
  std::vector<std::pair<std::size_t, Element>> seen;
  seen.reserve(labels.size());
  for (Element x = 0; x < labels.size(); ++x) seen.emplace_back(labels[x], x);
  std::stable_sort(seen.begin(), seen.end(),
                   [](auto& a, auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < seen.size();) {
    std::size_t j = i;
    Element least = seen[i].second;
    while (j < seen.size() && seen[j].first == seen[i].first) {
      least = std::min(least, seen[j].second);
      ++j;
    }
    for (std::size_t k = i; k < j; ++k) p.reps_[seen[k].second] = least;
    i = j;
  }
  return p;
}

Partition Partition::from_union_find(UnionFind& uf) {
  const std::size_t n = uf.size();
  constexpr Element kUnset = std::numeric_limits<Element>::max();
  std::vector<Element> least(n, kUnset);
  Partition p;
  p.reps_.resize(n);
  for (Element x = 0; x < n; ++x) {
    Element r = uf.find(x);
    if (least[r] == kUnset) least[r] = x;
    p.reps_[x] = least[r];
  }
  return p;
}

Partition Partition::from_pairs(std::size_t n,
                                std::span<const std::pair<Element, Element>> pairs) {
  UnionFind uf(n);
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n) throw InvalidInput("pair element out of range");
    uf.unite(x, y);
  }
  return from_union_find(uf);
}

Partition Partition::from_blocks(std::size_t n,
                                 const std::vector<std::vector<Element>>& blocks) {
  std::vector<int> seen(n, 0);
  UnionFind uf(n);
  for (const auto& block : blocks) {
    for (Element x : block) {
      if (x >= n) throw InvalidInput("block element out of range");
      if (seen[x]++) throw InvalidInput("element listed twice: " + std::to_string(x));
      uf.unite(block.front(), x);
    }
  }
  for (Element x = 0; x < n; ++x)
    if (!seen[x]) throw InvalidInput("element missing from the blocks: " + std::to_string(x));
  return from_union_find(uf);
}

bool Partition::is_zero() const {
  for (Element x = 0; x < reps_.size(); ++x)
    if (reps_[x] != x) return false;
  return true;
}

bool Partition::is_one() const {
  return std::all_of(reps_.begin(), reps_.end(), [](Element r) { return r == 0; });
}

std::size_t Partition::block_count() const {
  std::size_t count = 0;
  for (Element x = 0; x < reps_.size(); ++x) count += reps_[x] == x;
  return count;
}

std::vector<Element> Partition::block_index() const {
  std::vector<Element> index(reps_.size());
  Element next = 0;
  for (Element x = 0; x < reps_.size(); ++x)
    index[x] = reps_[x] == x ? next++ : index[reps_[x]];
  return index;
}

std::vector<std::vector<Element>> Partition::blocks() const {
  auto index = block_index();
  std::vector<std::vector<Element>> out(block_count());
  for (Element x = 0; x < reps_.size(); ++x) out[index[x]].push_back(x);
  return out;
}

bool Partition::leq(const Partition& other) const {
  if (other.size() != size()) throw InvalidInput("partition size mismatch");
  for (Element x = 0; x < reps_.size(); ++x)
    if (other.reps_[x] != other.reps_[reps_[x]]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out << '|';
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out << ',';
      out << block[i];
    }
  }
  return out.str();
}

Partition Partition::parse(std::size_t n, const std::string& text) {
  std::vector<std::vector<Element>> blocks;
  std::vector<Element> current;
  std::string number;
  auto flush_number = [&] {
    if (number.empty()) return;
    unsigned long v = std::stoul(number);
    if (v >= n) throw InvalidInput("element " + number + " out of range in '" + text + "'");
    current.push_back(static_cast<Element>(v));
    number.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      number.push_back(c);
    } else if (c == ',' || c == ' ') {
      flush_number();
    } else if (c == '|') {
      flush_number();
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
    } else {
      throw InvalidInput(std::string("unexpected character '") + c + "' in partition '" +
                         text + "'");
    }
  }
  flush_number();
  if (!current.empty()) blocks.push_back(std::move(current));
  std::vector<bool> mentioned(n, false);
  for (const auto& block : blocks)
    for (Element x : block) mentioned[x] = true;
  for (Element x = 0; x < n; ++x)
    if (!mentioned[x]) blocks.push_back({x});
  return from_blocks(n, blocks);
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw InvalidInput("partition size mismatch in meet");
  const std::size_t n = p.size();
  std::vector<std::size_t> labels(n);
  for (Element x = 0; x < n; ++x)
    labels[x] = static_cast<std::size_t>(p.rep(x)) * n + q.rep(x);
  return Partition::from_labels(labels);
}

Partition equivalence_join(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw InvalidInput("partition size mismatch in join");
  UnionFind uf(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    uf.unite(x, p.rep(x));
    uf.unite(x, q.rep(x));
  }
  return Partition::from_union_find(uf);
}

Relation Relation::of(const Partition& p) {
  Relation r(p.size());
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.related(x, y)) r.insert(x, y);
  return r;
}

std::size_t Relation::pair_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool Relation::is_reflexive() const {
  for (Element x = 0; x < n_; ++x)
    if (!contains(x, x)) return false;
  return true;
}

bool Relation::is_symmetric() const {
  for (Element x = 0; x < n_; ++x)
    for (Element y = x + 1; y < n_; ++y)
      if (contains(x, y) != contains(y, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  auto square = compose(*this, *this);
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (square.contains(x, y) && !contains(x, y)) return false;
  return true;
}

Partition Relation::to_partition() const {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y)
      if (contains(x, y)) pairs.emplace_back(x, y);
  return Partition::from_pairs(n_, pairs);
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.size() != s.size()) throw InvalidInput("relation size mismatch in compose");
  const std::size_t n = r.size();
  Relation out(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!r.contains(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (s.contains(y, z)) out.insert(x, z);
    }
  return out;
}

Relation compose(const Partition& p, const Partition& q) {
  return compose(Relation::of(p), Relation::of(q));
}

std::vector<Element> saturate(std::span<const Element> subset, const Partition& p) {
  std::vector<bool> hit(p.size(), false);
  for (Element s : subset) {
    if (s >= p.size()) throw InvalidInput("saturate: element out of range");
    hit[p.rep(s)] = true;
  }
  std::vector<Element> out;
  for (Element x = 0; x < p.size(); ++x)
    if (hit[p.rep(x)]) out.push_back(x);
  return out;
}

}  // namespace ualg
