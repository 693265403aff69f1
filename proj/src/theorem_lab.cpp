#include "gallai/theorem_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "gallai/generators.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/parallel.hpp"

namespace gallai {

Not2K2FreeError::Not2K2FreeError(TwoK2Witness witness)
    : std::runtime_error("graph contains an induced 2K2 on " + to_string(witness)),
      witness_(witness) {}

namespace {

void require_path_in(const Graph& g, const Path& p) {
  if (!p.valid_in(g)) throw InvalidPath("path " + to_string(p) + " is not a path of the graph");
}

void require_off_path(const Graph& g, const Path& p, Vertex x) {
  if (!g.contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " is not in the graph");
  if (p.contains(x)) throw std::invalid_argument("vertex " + std::to_string(x) + " lies on the path");
}

std::vector<Vertex> concat(std::initializer_list<std::span<const Vertex>> parts) {
  std::vector<Vertex> out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_dominating(const Graph& g, const Path& p) {
  require_path_in(g, p);
  for (const Edge& e : g.edges())
    if (!p.contains(e.u) && !p.contains(e.v)) return false;
  return true;
}

Path extend_non_dominating(const Graph& g, const Path& p, Edge uv) {
  require_path_in(g, p);
  if (p.order() < 2) throw std::invalid_argument("the path needs at least one edge");
  if (!g.contains(uv.u) || !g.contains(uv.v) || !g.adjacent(uv.u, uv.v))
    throw std::invalid_argument(to_string(uv) + " is not an edge of the graph");
  if (p.contains(uv.u) || p.contains(uv.v))
    throw std::invalid_argument(to_string(uv) + " meets the path");

  const auto seq = p.vertices();
  const Vertex v0 = seq[0];
  const Vertex v1 = seq[1];
  const Vertex u = uv.u;
  const Vertex v = uv.v;
  auto build = [&](Vertex outer, Vertex inner, std::size_t from) {
    const Vertex head[] = {outer, inner};
    return Path(g, concat({head, seq.subspan(from)}));
  };
  if (g.adjacent(v, v0)) return build(u, v, 0);
  if (g.adjacent(v, v1)) return build(u, v, 1);
  if (g.adjacent(u, v0)) return build(v, u, 0);
  if (g.adjacent(u, v1)) return build(v, u, 1);
  throw Not2K2FreeError(TwoK2Witness{v0, v1, u, v}.normalized());
}

Path find_dominating_path(const Graph& g) {
  if (g.empty_of_edges()) throw std::invalid_argument("a dominating path needs a graph with an edge");
  if (const auto w = find_induced_2k2(g)) throw Not2K2FreeError(w->normalized());

  const Edge first = g.edges().front();
  Path p(g, {first.u, first.v});
  for (int step = 0; step <= g.order() - 2; ++step) {
    const auto& edges = g.edges();
    const auto missed = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
      return !p.contains(e.u) && !p.contains(e.v);
    });
    if (missed == edges.end()) return p;
    p = extend_non_dominating(g, p, *missed);
  }
  throw std::logic_error("find_dominating_path: no dominating path after n - 2 extensions");
}

// ---------------------------------------------------------------------------

std::vector<LemmaViolation> check_lemma4(const Graph& g, const Path& p, Vertex x) {
  require_path_in(g, p);
  require_off_path(g, p, x);
  const int last = p.length();
  auto adj = [&](int i, int j) { return g.adjacent(p[i], p[j]); };
  auto sees = [&](int i) { return g.adjacent(x, p[i]); };

  std::vector<LemmaViolation> out;
  if (sees(0)) out.push_back({Lemma4Kind::adjacent_to_endpoint, x, 0, std::nullopt});
  if (last > 0 && sees(last)) out.push_back({Lemma4Kind::adjacent_to_endpoint, x, last, std::nullopt});
  for (int i = 0; i < last; ++i)
    if (sees(i) && sees(i + 1)) out.push_back({Lemma4Kind::consecutive_neighbors, x, i, std::nullopt});
  for (int a = 1; a < last; ++a)
    if (sees(a) && adj(0, a + 1)) out.push_back({Lemma4Kind::endpoint_chord, x, a, std::nullopt});
  for (int a = 0; a < last; ++a) {
    if (!sees(a)) continue;
    for (int b = a + 2; b < last; ++b)
      if (sees(b) && adj(a + 1, b + 1)) out.push_back({Lemma4Kind::successor_chord, x, a, b});
  }
  return out;
}

Path exploit_lemma4_violation(const Graph& g, const Path& p, Vertex x,
                              const LemmaViolation& violation) {
  require_path_in(g, p);
  require_off_path(g, p, x);
  const int last = p.length();
  const int a = violation.a;
  auto bad = [&](const char* why) {
    return std::invalid_argument(std::string("violation does not hold: ") + why);
  };
  if (violation.x != x) throw bad("it names a different vertex");
  if (a < 0 || a > last) throw bad("position out of range");
  if (!g.adjacent(x, p[a])) throw bad("x is not adjacent to v_a");

  const auto seq = p.vertices();
  const Vertex xs[] = {x};
  std::vector<Vertex> out;
  switch (violation.kind) {
    case Lemma4Kind::adjacent_to_endpoint:
      if (a == 0) out = concat({xs, seq});
      else if (a == last) out = concat({seq, xs});
      else throw bad("v_a is not an endpoint");
      break;
    case Lemma4Kind::consecutive_neighbors:
      if (a >= last || !g.adjacent(x, p[a + 1])) throw bad("x is not adjacent to v_a+1");
      out = concat({seq.first(a + 1), xs, seq.subspan(a + 1)});
      break;
    case Lemma4Kind::endpoint_chord: {
      if (a < 1 || a >= last || !g.adjacent(p[0], p[a + 1])) throw bad("v0 is not adjacent to v_a+1");
      // x va va-1 .. v0 va+1 .. vl
      std::vector<Vertex> back(seq.begin(), seq.begin() + a + 1);
      std::reverse(back.begin(), back.end());
      out = concat({xs, back, seq.subspan(a + 1)});
      break;
    }
    case Lemma4Kind::successor_chord: {
      if (!violation.b) throw bad("successor chord without b");
      const int b = *violation.b;
      if (b <= a + 1 || b >= last) throw bad("positions must satisfy a + 1 < b < l");
      if (!g.adjacent(x, p[b])) throw bad("x is not adjacent to v_b");
      if (!g.adjacent(p[a + 1], p[b + 1])) throw bad("v_a+1 is not adjacent to v_b+1");
      // v0 .. va x vb vb-1 .. va+1 vb+1 .. vl
      std::vector<Vertex> middle(seq.begin() + a + 1, seq.begin() + b + 1);
      std::reverse(middle.begin(), middle.end());
      out = concat({seq.first(a + 1), xs, middle, seq.subspan(b + 1)});
      break;
    }
  }
  return Path(g, std::move(out));
}

// ---------------------------------------------------------------------------

std::vector<Edge> edges_between(const Graph& g, VertexMask s, VertexMask t) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((s & bit(e.u)) && (t & bit(e.v))) out.push_back({e.u, e.v});
    else if ((s & bit(e.v)) && (t & bit(e.u))) out.push_back({e.v, e.u});
  }
  return out;
}

MeetingSelection select_meeting_vertex(const Graph& g, std::span<const Vertex> s,
                                       std::span<const Vertex> t) {
  for (auto part : {s, t})
    for (Vertex v : part)
      if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
  const VertexMask s_mask = to_mask(s);
  const VertexMask t_mask = to_mask(t);
  if (t_mask == 0) throw std::invalid_argument("T is empty");
  if (s_mask & t_mask) throw std::invalid_argument("S and T overlap");
  if (!is_independent(g, s_mask)) throw std::invalid_argument("S is not independent");

  MeetingSelection out;
  out.bipartite_degree = -1;
  for (VertexMask m = t_mask; m; m &= m - 1) {
    const Vertex y = lowest(m);
    const int degree = popcount(g.neighbor_mask(y) & s_mask);
    if (degree > out.bipartite_degree) {
      out.y = y;
      out.bipartite_degree = degree;
    }
  }
  const VertexMask cover = g.neighbor_mask(out.y);
  out.s_prime = to_vertices(cover & s_mask);
  out.t_prime = to_vertices(cover & t_mask);

  for (const Edge& e : edges_between(g, s_mask, t_mask)) {
    if ((cover & bit(e.u)) || (cover & bit(e.v))) continue;
    // e = uv with u in S, v in T, both outside N(y). Some s in N(y) ∩ S must
    // miss v, otherwise v would have more S-neighbours than y.
    const VertexMask partner = cover & s_mask & ~g.neighbor_mask(e.v);
    if (partner == 0)
      throw std::logic_error("select_meeting_vertex: y does not have maximum bipartite degree");
    const TwoK2Witness w = TwoK2Witness{e.u, e.v, lowest(partner), out.y}.normalized();
    out.failure = MeetingFailure{e, w};
    break;
  }
  return out;
}

// ---------------------------------------------------------------------------

bool pairwise_disjoint(std::span<const Edge> edges) {
  VertexMask used = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v || (used & (bit(e.u) | bit(e.v)))) return false;
    used |= bit(e.u) | bit(e.v);
  }
  return true;
}

IndependentEdgeSet build_independent_edge_set(const Graph& g, const Path& p, Vertex x) {
  require_path_in(g, p);
  require_off_path(g, p, x);
  if (g.neighbor_mask(x) & ~p.mask())
    throw std::invalid_argument("x has a neighbour off the path");
  if (!check_lemma4(g, p, x).empty())
    throw std::invalid_argument("x can be used to lengthen the path");

  const int last = p.length();
  std::vector<int> at;  // positions of N(x) on p, increasing
  for (int i = 0; i <= last; ++i)
    if (g.adjacent(x, p[i])) at.push_back(i);

  IndependentEdgeSet out;
  out.k = static_cast<int>(at.size());
  VertexMask s_mask = bit(p[0]);
  for (int a : at) s_mask |= bit(p[a + 1]);
  out.s = to_vertices(s_mask);
  out.t = to_vertices(p.mask() & ~s_mask);

  auto edge = [&](int i) { return Edge{p[i], p[i + 1]}; };

  if (p.order() < 2 * out.k + 2) {
    for (int a : at) out.edges.push_back(edge(a));
    return out;
  }

  // Segments of p between consecutive neighbours of x: [0, a1-1],
  // [a1+1, a2-1], ..., [ak+1, l]. Take the first one with two or more vertices.
  int segment = 0;
  for (; segment <= out.k; ++segment) {
    const int lo = segment == 0 ? 0 : at[segment - 1] + 1;
    const int hi = segment == out.k ? last : at[segment] - 1;
    if (hi - lo + 1 >= 2) break;
  }
  if (segment > out.k) throw std::logic_error("build_independent_edge_set: pigeonhole failed");

  out.edges.push_back(edge(0));
  if (segment == 0) {
    out.gap = GapCase::start;
    for (int a : at) out.edges.push_back(edge(a));
  } else if (segment == out.k) {
    out.gap = GapCase::end;
    for (int a : at) out.edges.push_back(edge(a + 1));
  } else {
    out.gap = GapCase::interior;
    const int alpha = at[segment - 1];
    for (int a : at) out.edges.push_back(a <= alpha ? edge(a + 1) : edge(a));
  }
  return out;
}

// ---------------------------------------------------------------------------

TheoremReport verify_theorem1(const Graph& g, const EngineOptions& options) {
  TheoremReport report;
  report.delta_vertices = max_degree_vertices(g);
  if (g.empty_of_edges()) return report;
  if (const auto w = find_induced_2k2(g)) {
    report.two_k2 = w->normalized();
    return report;
  }
  report.intersection =
      intersection_of_longest_paths(g, IntersectionMethod::deletion, options).intersection;
  const VertexMask common = to_mask(report.intersection);
  report.verdict = Verdict::holds;
  for (Vertex v : report.delta_vertices) {
    if (common & bit(v)) continue;
    report.verdict = Verdict::violated;
    const VertexDeletion rest = delete_vertex(g, v);
    const Path inner = find_longest_path(rest.graph);
    std::vector<Vertex> seq;
    for (Vertex w : inner.vertices()) seq.push_back(rest.original_label[w]);
    report.witness_path = Path(g, std::move(seq)).canonical();
    break;
  }
  return report;
}

// ---------------------------------------------------------------------------

bool is_gallai_counterexample(const Graph& g, const EngineOptions& options) {
  if (!is_connected(g)) return false;
  const int order = longest_path_order(g, options);
  if (order == g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (longest_path_order(delete_vertex(g, v).graph, options) < order) return false;
  return true;
}

namespace {

enum class Outcome { skipped, clean, counterexample };

Outcome examine(const Graph& g, const HuntOptions& options) {
  if (g.order() > options.order_bound || !is_connected(g)) return Outcome::skipped;
  return is_gallai_counterexample(g, options.engine) ? Outcome::counterexample : Outcome::clean;
}

}  // namespace

HuntResult hunt_counterexamples(std::span<const Graph> graphs, const HuntOptions& options) {
  std::vector<Outcome> outcome(graphs.size());
  parallel_for(graphs.size(), options.workers,
               [&](std::size_t i) { outcome[i] = examine(graphs[i], options); });
  HuntResult result;
  result.scanned = graphs.size();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (outcome[i] == Outcome::skipped) ++result.skipped;
    if (outcome[i] == Outcome::counterexample) result.counterexamples.push_back(graphs[i]);
  }
  return result;
}

HuntResult hunt_counterexamples(std::istream& graph6_stream, const HuntOptions& options) {
  std::vector<Graph> graphs;
  std::vector<HuntRecordError> errors;
  for (auto& rec : read_graphs(graph6_stream, InputFormat::graph6)) {
    if (rec.ok()) graphs.push_back(rec.graph());
    else errors.push_back({rec.line, rec.error()});
  }
  HuntResult result = hunt_counterexamples(graphs, options);
  result.errors = std::move(errors);
  return result;
}

HuntResult hunt_exhaustive(int max_order, const HuntOptions& options) {
  if (max_order < 1 || max_order > 7)
    throw std::invalid_argument("in-process exhaustive enumeration covers orders 1..7");
  constexpr std::uint64_t kChunk = 1 << 14;
  HuntResult result;
  for (int n = 1; n <= max_order; ++n) {
    const std::uint64_t total = labelled_graph_count(n);
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<std::vector<std::uint64_t>> found(chunks);
    std::vector<std::size_t> skipped(chunks, 0);
    parallel_for(chunks, options.workers, [&](std::size_t c) {
      const std::uint64_t end = std::min<std::uint64_t>(total, (c + 1) * kChunk);
      for (std::uint64_t bits = c * kChunk; bits < end; ++bits) {
        switch (examine(labelled_graph(n, bits), options)) {
          case Outcome::skipped: ++skipped[c]; break;
          case Outcome::counterexample: found[c].push_back(bits); break;
          case Outcome::clean: break;
        }
      }
    });
    result.scanned += total;
    for (std::size_t c = 0; c < chunks; ++c) {
      result.skipped += skipped[c];
      for (std::uint64_t bits : found[c]) result.counterexamples.push_back(labelled_graph(n, bits));
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Lemma4Kind kind) {
  switch (kind) {
    case Lemma4Kind::adjacent_to_endpoint: return "adjacentToEndpoint";
    case Lemma4Kind::consecutive_neighbors: return "consecutiveNeighbors";
    case Lemma4Kind::endpoint_chord: return "endpointChord";
    case Lemma4Kind::successor_chord: return "successorChord";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::holds: return "holds";
    case Verdict::not_applicable: return "notApplicable";
    case Verdict::violated: return "violated";
  }
  return "?";
}

std::string_view to_string(GapCase gap) {
  switch (gap) {
    case GapCase::none: return "none";
    case GapCase::start: return "start";
    case GapCase::end: return "end";
    case GapCase::interior: return "interior";
  }
  return "?";
}

}  // namespace gallai
