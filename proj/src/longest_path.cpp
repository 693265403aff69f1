#include "gallai/longest_path.hpp"

#include <algorithm>
#include <cstdint>

namespace gallai {

namespace {

void require_vertices(const Graph& g) {
  if (g.order() == 0) throw GraphError("longest paths of the empty vertex set");
}

int largest_component(const Graph& g) {
  int best = 0;
  for (const auto& c : components(g)) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

// Vertices still reachable from `v` through `avail`, not counting v.
int residual_reach(const Graph& g, Vertex v, VertexMask avail) {
  return popcount(reachable_from(g, v, avail | bit(v))) - 1;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g), target_(largest_component(g)) {}

  void run() {
    // Low-degree vertices first: they are the likelier endpoints.
    std::vector<Vertex> starts(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) starts[v] = v;
    std::stable_sort(starts.begin(), starts.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    for (Vertex s : starts) {
      stack_.assign(1, s);
      if (search(s, bit(s))) return;
    }
  }

  int best() const { return static_cast<int>(best_path_.size()); }
  const std::vector<Vertex>& best_path() const { return best_path_; }

 private:
  // Returns true once the order of the largest component is reached.
  bool search(Vertex v, VertexMask visited) {
    const int order = static_cast<int>(stack_.size());
    if (order > best()) {
      best_path_ = stack_;
      if (order == target_) return true;
    }
    const VertexMask avail = g_.vertex_mask() & ~visited;
    if (order + residual_reach(g_, v, avail) <= best()) return false;
    for (VertexMask m = g_.neighbor_mask(v) & avail; m; m &= m - 1) {
      const Vertex w = lowest(m);
      stack_.push_back(w);
      const bool done = search(w, visited | bit(w));
      stack_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  int target_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> best_path_;
};

class Enumerator {
 public:
  Enumerator(const Graph& g, int target, std::size_t cap) : g_(g), target_(target), cap_(cap) {}

  std::vector<Path> run() {
    for (Vertex s = 0; s < g_.order(); ++s) {
      stack_.assign(1, s);
      extend(s, bit(s));
    }
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void extend(Vertex v, VertexMask visited) {
    const int order = static_cast<int>(stack_.size());
    if (order == target_) {
      // Keep the orientation with the smaller first vertex.
      if (order == 1 || stack_.front() < stack_.back()) {
        if (found_.size() == cap_) throw EnumerationCapExceeded(cap_);
        found_.emplace_back(g_, stack_);
      }
      return;
    }
    const VertexMask avail = g_.vertex_mask() & ~visited;
    if (order + residual_reach(g_, v, avail) < target_) return;
    for (VertexMask m = g_.neighbor_mask(v) & avail; m; m &= m - 1) {
      const Vertex w = lowest(m);
      stack_.push_back(w);
      extend(w, visited | bit(w));
      stack_.pop_back();
    }
  }

  const Graph& g_;
  int target_;
  std::size_t cap_;
  std::vector<Vertex> stack_;
  std::vector<Path> found_;
};

}  // namespace

int longest_path_order(const Graph& g, const EngineOptions& options) {
  require_vertices(g);
  if (g.order() <= std::min(options.dp_threshold, kMaxDpVertices)) return longest_path_order_dp(g);
  return longest_path_order_bnb(g);
}

int longest_path_order_dp(const Graph& g) {
  require_vertices(g);
  const int n = g.order();
  if (n > kMaxDpVertices)
    throw GraphError("subset DP refused for " + std::to_string(n) + " vertices (limit " +
                     std::to_string(kMaxDpVertices) + ")");
  // ends[S] = set of vertices v such that some path visits exactly S and ends at v.
  thread_local std::vector<std::uint32_t> ends;
  const std::size_t states = std::size_t{1} << n;
  ends.assign(states, 0);
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;

  int best = 1;
  for (std::size_t set = 1; set < states; ++set) {
    std::uint32_t e = ends[set];
    if (e == 0) continue;
    best = std::max(best, popcount(set));
    for (; e; e &= e - 1) {
      const Vertex v = std::countr_zero(e);
      for (VertexMask next = g.neighbor_mask(v) & ~VertexMask{set}; next; next &= next - 1) {
        const Vertex w = lowest(next);
        ends[set | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return best;
}

int longest_path_order_bnb(const Graph& g) {
  require_vertices(g);
  BranchAndBound search(g);
  search.run();
  return search.best();
}

Path find_longest_path(const Graph& g) {
  require_vertices(g);
  BranchAndBound search(g);
  search.run();
  return Path(g, search.best_path()).canonical();
}

std::vector<Path> enumerate_longest_paths(const Graph& g, const EngineOptions& options) {
  require_vertices(g);
  return Enumerator(g, longest_path_order(g, options), options.enumeration_cap).run();
}

IntersectionReport intersection_of_longest_paths(const Graph& g, IntersectionMethod method,
                                                 const EngineOptions& options) {
  require_vertices(g);
  IntersectionReport report;
  report.method = method;
  report.longest_order = longest_path_order(g, options);

  if (method == IntersectionMethod::enumeration) {
    const auto paths = Enumerator(g, report.longest_order, options.enumeration_cap).run();
    VertexMask common = g.vertex_mask();
    for (const Path& p : paths) common &= p.mask();
    report.intersection = to_vertices(common);
    report.path_count = paths.size();
    return report;
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    const Graph rest = delete_vertex(g, v).graph;
    const int without = rest.order() == 0 ? 0 : longest_path_order(rest, options);
    if (without < report.longest_order) report.intersection.push_back(v);
  }
  return report;
}

bool is_longest_path(const Graph& g, const Path& p, const EngineOptions& options) {
  if (!p.valid_in(g)) throw InvalidPath("path " + to_string(p) + " is not a path of the graph");
  return p.order() == longest_path_order(g, options);
}

std::string_view to_string(IntersectionMethod method) {
  return method == IntersectionMethod::enumeration ? "enumeration" : "deletion";
}

std::optional<IntersectionMethod> parse_intersection_method(std::string_view text) {
  if (text == "enumeration") return IntersectionMethod::enumeration;
  if (text == "deletion") return IntersectionMethod::deletion;
  return std::nullopt;
}

}  // namespace gallai
