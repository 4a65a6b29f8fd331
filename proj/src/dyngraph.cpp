#include "noisyperc/dyngraph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace noisyperc {

Edge::Edge(VertexId a, VertexId b) {
  if (a == b) throw std::invalid_argument("self-loop " + std::to_string(a));
  lo = std::min(a, b);
  hi = std::max(a, b);
}

std::uint64_t pair_index(std::uint32_t n, const Edge& e) {
  const std::uint64_t i = e.lo;
  return i * (2 * std::uint64_t{n} - i - 1) / 2 + (e.hi - e.lo - 1);
}

Edge pair_from_index(std::uint32_t n, std::uint64_t index) {
  // Row i starts at i*(2n-i-1)/2. Estimate i from the quadratic, then correct.
  const double nn = n;
  const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(index);
  auto row = static_cast<std::int64_t>(std::floor(((2 * nn - 1) - std::sqrt(std::max(disc, 0.0))) / 2));
  row = std::clamp<std::int64_t>(row, 0, static_cast<std::int64_t>(n) - 2);
  auto start = [n](std::uint64_t i) { return i * (2 * std::uint64_t{n} - i - 1) / 2; };
  auto i = static_cast<std::uint64_t>(row);
  while (i > 0 && start(i) > index) --i;
  while (i + 1 < n - 1 && start(i + 1) <= index) ++i;
  const auto j = i + 1 + (index - start(i));
  return Edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit UnionFind(std::uint32_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0U);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

ComponentSummary summary_from_sizes(std::vector<std::size_t> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  ComponentSummary s;
  s.s1 = sizes.empty() ? 0 : sizes[0];
  s.s2 = sizes.size() > 1 ? sizes[1] : 0;
  s.sizes = std::move(sizes);
  return s;
}

} // namespace

ComponentSummary summarize_edges(std::uint32_t n, std::span<const Edge> edges, bool with_sizes) {
  UnionFind uf(n);
  for (const auto& e : edges) uf.unite(e.lo, e.hi);
  if (with_sizes) {
    std::vector<std::size_t> sizes;
    for (std::uint32_t v = 0; v < n; ++v)
      if (uf.parent[v] == v) sizes.push_back(uf.size[v]);
    return summary_from_sizes(std::move(sizes));
  }
  ComponentSummary s;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (uf.parent[v] != v) continue;
    const std::size_t sz = uf.size[v];
    if (sz > s.s1) {
      s.s2 = s.s1;
      s.s1 = sz;
    } else if (sz > s.s2) {
      s.s2 = sz;
    }
  }
  return s;
}

DynamicGraph::DynamicGraph(std::uint32_t n)
    : n_(n), adj_(n), label_(n), members_(n), live_components_(n) {
  if (n < 2) throw std::invalid_argument("graph needs at least 2 vertices, got " + std::to_string(n));
  for (std::uint32_t v = 0; v < n; ++v) {
    label_[v] = v;
    members_[v] = {v};
  }
}

void DynamicGraph::check_vertex(VertexId v) const {
  if (v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
}

void DynamicGraph::check_edge(const Edge& e) const {
  check_vertex(e.lo);
  check_vertex(e.hi);
  if (e.lo >= e.hi) throw std::invalid_argument("edge not in canonical form");
}

void DynamicGraph::add_edge(const Edge& e) {
  check_edge(e);
  if (has_edge(e))
    throw std::invalid_argument("duplicate edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")");
  slot_.emplace(e.key(), edges_.size());
  edges_.push_back(e);
  adj_[e.lo].push_back(e.hi);
  adj_[e.hi].push_back(e.lo);

  auto a = label_[e.lo];
  auto b = label_[e.hi];
  if (a == b) return;
  if (members_[a].size() < members_[b].size()) std::swap(a, b);
  for (auto v : members_[b]) label_[v] = a;
  members_[a].insert(members_[a].end(), members_[b].begin(), members_[b].end());
  members_[b].clear();
  members_[b].shrink_to_fit();
  free_labels_.push_back(b);
  --live_components_;
}

void DynamicGraph::remove_edge(const Edge& e) {
  check_edge(e);
  const auto it = slot_.find(e.key());
  if (it == slot_.end())
    throw std::invalid_argument("absent edge (" + std::to_string(e.lo) + "," + std::to_string(e.hi) + ")");
  const auto pos = it->second;
  slot_.erase(it);
  if (pos + 1 != edges_.size()) {
    edges_[pos] = edges_.back();
    slot_[edges_[pos].key()] = pos;
  }
  edges_.pop_back();
  auto drop = [](std::vector<VertexId>& list, VertexId v) {
    auto where = std::find(list.begin(), list.end(), v);
    *where = list.back();
    list.pop_back();
  };
  drop(adj_[e.lo], e.hi);
  drop(adj_[e.hi], e.lo);

  // Search from lo; if hi is unreachable the visited set becomes a new block.
  const auto old_label = label_[e.lo];
  std::vector<VertexId> seen{e.lo};
  std::vector<char> mark(n_, 0);
  mark[e.lo] = 1;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    for (auto w : adj_[seen[head]]) {
      if (mark[w]) continue;
      if (w == e.hi) return;
      mark[w] = 1;
      seen.push_back(w);
    }
  }
  std::uint32_t fresh;
  if (!free_labels_.empty()) {
    fresh = free_labels_.back();
    free_labels_.pop_back();
  } else {
    throw std::logic_error("component label pool exhausted");
  }
  for (auto v : seen) label_[v] = fresh;
  members_[fresh] = std::move(seen);
  auto& rest = members_[old_label];
  std::erase_if(rest, [&](VertexId v) { return mark[v] != 0; });
  ++live_components_;
}

std::pair<std::size_t, std::size_t> DynamicGraph::top_two() const {
  std::size_t s1 = 0, s2 = 0;
  for (const auto& block : members_) {
    const auto sz = block.size();
    if (sz > s1) {
      s2 = s1;
      s1 = sz;
    } else if (sz > s2) {
      s2 = sz;
    }
  }
  return {s1, s2};
}

ComponentSummary DynamicGraph::component_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(live_components_);
  for (const auto& block : members_)
    if (!block.empty()) sizes.push_back(block.size());
  return summary_from_sizes(std::move(sizes));
}

std::size_t DynamicGraph::component_of(VertexId v) const {
  check_vertex(v);
  return members_[label_[v]].size();
}

ComponentSummary DynamicGraph::recompute_components() const {
  std::vector<char> mark(n_, 0);
  std::vector<std::size_t> sizes;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n_; ++s) {
    if (mark[s]) continue;
    queue.assign(1, s);
    mark[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (auto w : adj_[queue[head]])
        if (!mark[w]) {
          mark[w] = 1;
          queue.push_back(w);
        }
    sizes.push_back(queue.size());
  }
  return summary_from_sizes(std::move(sizes));
}

std::vector<Edge> DynamicGraph::sample_absent_pairs(std::size_t k, Rng& rng) const {
  const auto total = pair_count(n_);
  const auto absent = absent_count();
  if (absent == 0) throw NoCandidates("no absent vertex pairs: graph is saturated");
  std::vector<Edge> out;
  if (k == 0) return out;

  if (absent <= k || absent * 4 < total) {
    // Sparse complement: enumerate it and draw without replacement.
    std::vector<Edge> pool;
    pool.reserve(absent);
    for (VertexId i = 0; i + 1 < n_; ++i)
      for (VertexId j = i + 1; j < n_; ++j)
        if (!slot_.contains((std::uint64_t{i} << 32) | j)) pool.emplace_back(i, j);
    if (pool.size() <= k) return pool;
    for (std::size_t r = 0; r < k; ++r) {
      const auto pick = r + uniform_below(rng, pool.size() - r);
      std::swap(pool[r], pool[pick]);
    }
    pool.resize(k);
    return pool;
  }

  // Rejection over all pairs: accepted draws are uniform on the remaining absent pairs.
  out.reserve(k);
  while (out.size() < k) {
    const auto e = pair_from_index(n_, uniform_below(rng, total));
    if (has_edge(e) || std::find(out.begin(), out.end(), e) != out.end()) continue;
    out.push_back(e);
  }
  return out;
}

std::vector<Edge> DynamicGraph::sample_present_pairs(std::size_t k, Rng& rng) const {
  const auto m = edges_.size();
  if (m == 0) throw NoCandidates("no present edges: graph is empty");
  if (k == 0) return {};
  if (m <= k) return edges_;
  std::vector<std::size_t> picked;
  picked.reserve(k);
  while (picked.size() < k) {
    const auto idx = uniform_below(rng, m);
    if (std::find(picked.begin(), picked.end(), idx) == picked.end()) picked.push_back(idx);
  }
  std::vector<Edge> out;
  out.reserve(k);
  for (auto idx : picked) out.push_back(edges_[idx]);
  return out;
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
  for (const auto& e : edges) out << e.lo << ' ' << e.hi << '\n';
}

std::vector<Edge> read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 || u == v)
      throw std::invalid_argument("malformed edge on line " + std::to_string(lineno) + ": '" + line + "'");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return edges;
}

} // namespace noisyperc
