#ifndef TRIADIC_PRESENTATION_HPP_
#define TRIADIC_PRESENTATION_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace triadic {

using VertexId = std::uint32_t;
using Digit = std::uint8_t;

inline constexpr int kAlphabetSize = 3;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId from;
  VertexId to;
  Digit digit;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct OutEdge {
  Digit digit;
  VertexId to;
  friend auto operator<=>(const OutEdge&, const OutEdge&) = default;
};

/// A pointed labeled directed graph over the digit alphabet {0,1,2}.
///
/// The path set it presents is the set of label sequences of infinite
/// walks starting at the marked vertex.  An empty presentation (no
/// vertices) presents the empty path set.  Edge triples (from,to,digit)
/// are unique; vertex labels are unique and display-only: no structural
/// algorithm in this library depends on them.
class Presentation {
 public:
  Presentation() = default;

  VertexId add_vertex(std::string label);
  void add_edge(VertexId from, VertexId to, Digit digit);
  void set_marked(VertexId v);

  bool is_empty() const { return labels_.empty(); }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  VertexId marked() const { return marked_; }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<OutEdge>& out(VertexId v) const { return out_.at(v); }
  std::optional<VertexId> find_vertex(std::string_view label) const;

  /// All edges, sorted by (from, digit, to).
  std::vector<Edge> edges() const;

  bool operator==(const Presentation& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<OutEdge>> out_;
  std::unordered_map<std::string, VertexId> label_index_;
  VertexId marked_ = kNoVertex;
  std::size_t edge_count_ = 0;
};

/// Restricts to vertices reachable from the marked vertex, then
/// iteratively deletes vertices with no outgoing edge.  Returns the
/// empty presentation when the marked vertex itself dies.
Presentation trim(const Presentation& p);

/// True iff no vertex has two out-edges sharing a digit.
bool is_right_resolving(const Presentation& p);

/// Subset construction: a right-resolving, trimmed presentation of the
/// same path set.  Vertices of the result are nonempty subsets of the
/// input's vertices.  Empty input gives empty output.
Presentation determinize(const Presentation& p);

/// Presentation of the intersection of the two path sets (pair
/// construction on matching digits), trimmed.
Presentation label_product(const Presentation& a, const Presentation& b);

/// True iff `prefix` labels a path from the marked vertex.  Requires a
/// right-resolving presentation; returns false on the empty presentation.
bool run_automaton(const Presentation& p, const std::vector<Digit>& prefix);

struct SccDecomposition {
  /// Strongly connected components in topological order of the
  /// condensation (every condensation edge goes from a lower to a
  /// higher component index).  Component members are sorted.
  std::vector<std::vector<VertexId>> components;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> condensation_edges;
  std::vector<std::uint32_t> component_of;
};

SccDecomposition scc_decomposition(const Presentation& p);

/// Canonical byte encoding of a right-resolving trimmed presentation.
/// Two such presentations have equal forms iff they are isomorphic as
/// pointed edge-labeled graphs (vertex labels are ignored).
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Presentation& p);

/// Labeled directed graph without a marked vertex; the quotient of an
/// automorphism check lives here.
struct UnpointedGraph {
  std::vector<std::string> labels;
  std::vector<Edge> edges;  // sorted
  std::size_t vertex_count() const { return labels.size(); }
  bool operator==(const UnpointedGraph&) const = default;
};

struct AutomorphismResult {
  bool holds = false;
  /// Present when the check holds and vertex_map is an involution:
  /// the graph on orbit pairs {v, map(v)}.
  std::optional<UnpointedGraph> quotient;
};

/// Checks that (u -> v on d) iff (map(u) -> map(v) on digit_map(d)).
/// Throws std::invalid_argument unless vertex_map is a bijection on the
/// vertex set and digit_map a permutation of {0,1,2}.
AutomorphismResult verify_automorphism(const Presentation& p,
                                       const std::vector<VertexId>& vertex_map,
                                       const std::array<Digit, 3>& digit_map);

}  // namespace triadic

#endif  // TRIADIC_PRESENTATION_HPP_
