#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

class InvalidPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A nonempty sequence v0..vl of distinct vertices, each consecutive pair
/// adjacent in the graph it was validated against.
///
/// A Path keeps the orientation it was built with, since several of the
/// path-surgery operations index positions from v0. `canonical()` gives the
/// orientation that is lexicographically no larger than its reverse, which is
/// the form used for enumeration and deduplication.
class Path {
 public:
  /// Throws InvalidPath when the sequence is empty, repeats a vertex, leaves
  /// the graph, or steps along a non-edge.
  Path(const Graph& g, std::vector<Vertex> vertices);

  /// Vertex count.
  int order() const { return static_cast<int>(seq_.size()); }
  /// Edge count.
  int length() const { return order() - 1; }

  std::span<const Vertex> vertices() const { return seq_; }
  Vertex operator[](int i) const { return seq_[i]; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  VertexMask mask() const { return mask_; }
  bool contains(Vertex v) const { return v >= 0 && v < kMaxVertices && (mask_ & bit(v)); }
  /// Position of `v` on the path, or -1.
  int position(Vertex v) const;

  Path reversed() const;
  Path canonical() const;
  bool is_canonical() const { return order() == 1 || seq_.front() < seq_.back(); }
  bool same_up_to_reversal(const Path& other) const;

  /// Whether the same vertex sequence is a path of `g`.
  bool valid_in(const Graph& g) const;

  /// Edges v_i v_{i+1} in path order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Path& a, const Path& b) { return a.seq_ == b.seq_; }
  friend auto operator<=>(const Path& a, const Path& b) { return a.seq_ <=> b.seq_; }

 private:
  Path(std::vector<Vertex> seq, VertexMask mask) : seq_(std::move(seq)), mask_(mask) {}

  std::vector<Vertex> seq_;
  VertexMask mask_ = 0;
};

/// Space separated vertex list, e.g. "0 1 2".
std::string to_string(const Path& p);

}  // namespace gallai
