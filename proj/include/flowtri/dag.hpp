#pragma once

// Vertex-ordered directed acyclic multigraphs with a distinguished source and sink.
//
// Vertices are integers: 0 is the source s, 1..n are the inner vertices, and n+1
// is the sink t. Edges carry string ids and are first-class, so parallel edges
// are distinguished by id, never by endpoint pair. The vertex order is part of
// the input and is never recomputed.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flowtri {

struct Edge {
  std::string id;
  int tail = 0;
  int head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class Dag {
 public:
  Dag() = default;

  /// Throws InvalidInput if an endpoint lies outside [0, inner_count + 1].
  /// All other structural rules are reported by validate().
  Dag(int inner_count, std::vector<Edge> edges);

  int inner_count() const noexcept { return inner_count_; }
  int source() const noexcept { return 0; }
  int sink() const noexcept { return inner_count_ + 1; }
  int vertex_count() const noexcept { return inner_count_ + 2; }
  bool is_inner(int v) const noexcept { return v > 0 && v <= inner_count_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::optional<std::size_t> find_edge(std::string_view id) const;
  /// Like find_edge but throws InvalidInput for unknown ids.
  std::size_t edge_index(std::string_view id) const;

  std::span<const std::size_t> in_edges(int v) const { return in_.at(static_cast<std::size_t>(v)); }
  std::span<const std::size_t> out_edges(int v) const { return out_.at(static_cast<std::size_t>(v)); }
  int indeg(int v) const { return static_cast<int>(in_edges(v).size()); }
  int outdeg(int v) const { return static_cast<int>(out_edges(v).size()); }

  /// "s", "t", or the decimal inner index.
  std::string vertex_name(int v) const;
  /// Inverse of vertex_name; throws InvalidInput.
  int parse_vertex(std::string_view name) const;

  friend bool operator==(const Dag& a, const Dag& b) {
    return a.inner_count_ == b.inner_count_ && a.edges_ == b.edges_;
  }

 private:
  int inner_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
};

struct Violation {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks every Dag invariant: tail < head, unique ids, s is the unique source,
/// t the unique sink, and every inner vertex lies on some route.
ValidationReport validate(const Dag& dag);

/// True iff `edge` is the only incoming or the only outgoing edge of an inner vertex.
bool is_idle(const Dag& dag, std::size_t edge);
bool has_idle_edges(const Dag& dag);

struct ContractionResult {
  Dag dag;
  /// Old edge id -> surviving edge id; contracted edges map to nullopt.
  std::map<std::string, std::optional<std::string>> edge_map;
  /// Ids of contracted edges, in contraction order.
  std::vector<std::string> contracted;
};

/// Repeatedly contracts the idle edge with the smallest id until none remain.
/// Throws InvalidInput("trivial graph") if the result has no edges.
ContractionResult contract_idle_edges(const Dag& dag);

bool degree_equality(const Dag& dag);

/// Adds |indeg - outdeg| edges s->v or v->t at each unbalanced inner vertex.
/// Original edges keep their ids; new ids have the form "+s>v#k" / "+v>t#k".
Dag gorenstein_completion(const Dag& dag);

/// |E| - n - 1.
int dimension(const Dag& dag);

}  // namespace flowtri
