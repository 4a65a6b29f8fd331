#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "noisyperc/rng.hpp"

namespace noisyperc {

using VertexId = std::uint32_t;

/// Undirected edge stored canonically with lo < hi.
struct Edge {
  VertexId lo = 0;
  VertexId hi = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  std::uint64_t key() const { return (std::uint64_t{lo} << 32) | hi; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when a sampling request finds no edge of the requested status.
class NoCandidates : public std::runtime_error {
public:
  explicit NoCandidates(const std::string& what) : std::runtime_error(what) {}
};

struct ComponentSummary {
  std::vector<std::size_t> sizes; // descending
  std::size_t s1 = 0;
  std::size_t s2 = 0; // 0 when a single component spans all vertices
};

/// Number of unordered vertex pairs, n choose 2.
constexpr std::uint64_t pair_count(std::uint64_t n) { return n * (n - 1) / 2; }

/// Bijection between edges of K_n and [0, C(n,2)) in row-major (lo, hi) order.
std::uint64_t pair_index(std::uint32_t n, const Edge& e);
Edge pair_from_index(std::uint32_t n, std::uint64_t index);

/// Top two component sizes of the graph (V = [0, n), edges). Static union-find.
ComponentSummary summarize_edges(std::uint32_t n, std::span<const Edge> edges,
                                 bool with_sizes = false);

// Simple graph on n labeled vertices. Additions merge components by relabeling
// the smaller block; deletions re-explore the affected block and split it if
// the removed edge was a bridge.
class DynamicGraph {
public:
  explicit DynamicGraph(std::uint32_t n);

  std::uint32_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  std::uint64_t absent_count() const { return pair_count(n_) - edges_.size(); }
  bool saturated() const { return absent_count() == 0; }

  bool has_edge(const Edge& e) const { return slot_.contains(e.key()); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add_edge(const Edge& e);
  void remove_edge(const Edge& e);

  ComponentSummary component_sizes() const;
  /// Largest and second-largest component sizes without materializing the list.
  std::pair<std::size_t, std::size_t> top_two() const;
  std::size_t component_of(VertexId v) const;
  std::size_t component_count() const { return live_components_; }

  /// Up to k distinct absent pairs, uniformly without replacement.
  std::vector<Edge> sample_absent_pairs(std::size_t k, Rng& rng) const;
  /// Up to k distinct present edges, uniformly without replacement.
  std::vector<Edge> sample_present_pairs(std::size_t k, Rng& rng) const;

  /// Component sizes recomputed from scratch by breadth-first search.
  ComponentSummary recompute_components() const;

private:
  void check_vertex(VertexId v) const;
  void check_edge(const Edge& e) const;
  void relabel(VertexId start, std::uint32_t label, std::vector<VertexId>* visited);

  std::uint32_t n_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> slot_; // edge key -> index in edges_
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint32_t> label_;          // component label per vertex
  std::vector<std::vector<VertexId>> members_; // members per label
  std::vector<std::uint32_t> free_labels_;
  std::size_t live_components_;
};

/// "u v" per line, u < v, 0-based.
void write_edge_list(std::ostream& out, std::span<const Edge> edges);
std::vector<Edge> read_edge_list(std::istream& in);

} // namespace noisyperc
