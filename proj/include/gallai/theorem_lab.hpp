#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/longest_path.hpp"
#include "gallai/path.hpp"
#include "gallai/recognizers.hpp"

namespace gallai {

/// Raised when a step that only works in 2K2-free graphs meets an induced
/// 2K2. Carries the 2K2 as evidence.
class Not2K2FreeError : public std::runtime_error {
 public:
  explicit Not2K2FreeError(TwoK2Witness witness);
  const TwoK2Witness& witness() const { return witness_; }

 private:
  TwoK2Witness witness_;
};

// ---------------------------------------------------------------------------
// Dominating paths

/// True when no edge of g avoids V(p). Throws InvalidPath if p is not a
/// path of g.
bool is_dominating(const Graph& g, const Path& p);

/// Given an edge uv disjoint from p (order >= 2), returns a path one vertex
/// longer: u v v0 v1..vl if v~v0, u v v1..vl if v~v1, and the same with u, v
/// swapped, trying the four joins in that order. Throws Not2K2FreeError when
/// none of the joins exists and std::invalid_argument on bad arguments.
Path extend_non_dominating(const Graph& g, const Path& p, Edge uv);

/// Starts from the lexicographically first edge and extends past the first
/// missed edge until nothing is missed; at most n - 2 steps. Throws
/// std::invalid_argument for an edgeless graph and Not2K2FreeError (with the
/// first induced 2K2) otherwise.
Path find_dominating_path(const Graph& g);

// ---------------------------------------------------------------------------
// Off-path vertex rules

enum class Lemma4Kind {
  adjacent_to_endpoint,   // x ~ v0 or x ~ vl                       (a = 0 or l)
  consecutive_neighbors,  // x ~ vi and x ~ vi+1                    (a = i)
  endpoint_chord,         // x ~ va and v0 ~ va+1, 1 <= a < l
  successor_chord,        // x ~ va, x ~ vb, va+1 ~ vb+1, a + 1 < b < l
};

struct LemmaViolation {
  Lemma4Kind kind = Lemma4Kind::adjacent_to_endpoint;
  Vertex x = 0;
  int a = 0;
  std::optional<int> b;

  friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

/// Every way in which x (off p) could be used to lengthen p, in the order
/// endpoints, consecutive pairs, endpoint chords, successor chords, each by
/// increasing position. An empty list means none of the four rules fires.
/// Throws std::invalid_argument when x lies on p.
std::vector<LemmaViolation> check_lemma4(const Graph& g, const Path& p, Vertex x);

/// Rewires p through x into a strictly longer path. Throws
/// std::invalid_argument when `violation` does not hold in g.
Path exploit_lemma4_violation(const Graph& g, const Path& p, Vertex x,
                              const LemmaViolation& violation);

// ---------------------------------------------------------------------------
// Meeting vertex for E(S, T)

struct MeetingFailure {
  Edge missed;  // u in S, v in T, neither adjacent to y
  TwoK2Witness witness;
};

struct MeetingSelection {
  Vertex y = 0;
  int bipartite_degree = 0;
  std::vector<Vertex> s_prime;  // N(y) ∩ S
  std::vector<Vertex> t_prime;  // N(y) ∩ T
  std::optional<MeetingFailure> failure;
};

/// Picks y in T with the most neighbours in S (lowest id on ties) and checks
/// that N(y) covers every S–T edge. A missed edge uv is reported together
/// with the induced 2K2 {uv, sy} for some s in N(y) ∩ S not adjacent to v.
/// Throws std::invalid_argument if S is not independent, S and T overlap, T
/// is empty, or a vertex is out of range.
MeetingSelection select_meeting_vertex(const Graph& g, std::span<const Vertex> s,
                                       std::span<const Vertex> t);

/// Edges of g with one end in `s` and the other in `t`.
std::vector<Edge> edges_between(const Graph& g, VertexMask s, VertexMask t);

// ---------------------------------------------------------------------------
// Independent S–T edges along a longest path

enum class GapCase { none, start, end, interior };

struct IndependentEdgeSet {
  int k = 0;                 // |N(x) ∩ V(p)|
  std::vector<Vertex> s;     // {v0} ∪ {va+1 : va ∈ N(x)}
  std::vector<Vertex> t;     // V(p) − S
  std::vector<Edge> edges;   // pairwise disjoint, each with one end in S and one in T
  GapCase gap = GapCase::none;
};

/// With x off p, N(x) ⊆ V(p) and no off-path rule firing for (p, x), returns
/// the k edges {va va+1}, or k + 1 disjoint S–T edges when p.order() >= 2k + 2,
/// built from the first segment between neighbours of x that holds at least
/// two non-neighbours. Throws std::invalid_argument when a precondition fails.
IndependentEdgeSet build_independent_edge_set(const Graph& g, const Path& p, Vertex x);

bool pairwise_disjoint(std::span<const Edge> edges);

// ---------------------------------------------------------------------------
// Maximum-degree vertices on all longest paths

enum class Verdict { holds, not_applicable, violated };

struct TheoremReport {
  Verdict verdict = Verdict::not_applicable;
  std::vector<Vertex> delta_vertices;
  std::vector<Vertex> intersection;
  /// Set when not applicable because g contains an induced 2K2.
  std::optional<TwoK2Witness> two_k2;
  /// Set when violated: a longest path missing a maximum-degree vertex.
  std::optional<Path> witness_path;
};

/// not_applicable for edgeless graphs and graphs with an induced 2K2;
/// otherwise compares the maximum-degree vertices with the longest-path
/// intersection (deletion method). Throws GraphError on the 0-vertex graph.
TheoremReport verify_theorem1(const Graph& g, const EngineOptions& options = {});

// ---------------------------------------------------------------------------
// Counterexample hunt

struct HuntOptions {
  /// Graphs with more vertices than this are skipped.
  int order_bound = 12;
  int workers = 1;
  EngineOptions engine;
};

struct HuntRecordError {
  std::size_t line = 0;
  std::string message;
};

struct HuntResult {
  std::vector<Graph> counterexamples;  // in input order
  std::size_t scanned = 0;             // well-formed records read
  std::size_t skipped = 0;             // disconnected or above the order bound
  std::vector<HuntRecordError> errors;
};

/// True when g is connected and its longest paths share no vertex.
bool is_gallai_counterexample(const Graph& g, const EngineOptions& options = {});

HuntResult hunt_counterexamples(std::span<const Graph> graphs, const HuntOptions& options = {});

/// graph6 lines; malformed lines are reported with their line number.
HuntResult hunt_counterexamples(std::istream& graph6_stream, const HuntOptions& options = {});

/// Every labelled graph on 1..max_order vertices (2^C(n,2) per order).
/// Refuses max_order > 7.
HuntResult hunt_exhaustive(int max_order, const HuntOptions& options = {});

std::string_view to_string(Lemma4Kind kind);
std::string_view to_string(Verdict verdict);
std::string_view to_string(GapCase gap);

}  // namespace gallai
