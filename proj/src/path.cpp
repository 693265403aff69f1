#include "gallai/path.hpp"

#include <algorithm>

namespace gallai {

Path::Path(const Graph& g, std::vector<Vertex> vertices) : seq_(std::move(vertices)) {
  if (seq_.empty()) throw InvalidPath("a path needs at least one vertex");
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    const Vertex v = seq_[i];
    if (!g.contains(v)) throw InvalidPath("vertex " + std::to_string(v) + " is not in the graph");
    if (mask_ & bit(v)) throw InvalidPath("vertex " + std::to_string(v) + " repeats");
    mask_ |= bit(v);
    if (i > 0 && !g.adjacent(seq_[i - 1], v))
      throw InvalidPath("consecutive vertices " + std::to_string(seq_[i - 1]) + " and " +
                        std::to_string(v) + " are not adjacent");
  }
}

int Path::position(Vertex v) const {
  if (!contains(v)) return -1;
  return static_cast<int>(std::find(seq_.begin(), seq_.end(), v) - seq_.begin());
}

Path Path::reversed() const { return Path(std::vector<Vertex>(seq_.rbegin(), seq_.rend()), mask_); }

Path Path::canonical() const { return is_canonical() ? *this : reversed(); }

bool Path::same_up_to_reversal(const Path& other) const {
  return canonical() == other.canonical();
}

bool Path::valid_in(const Graph& g) const {
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (!g.contains(seq_[i])) return false;
    if (i > 0 && !g.adjacent(seq_[i - 1], seq_[i])) return false;
  }
  return true;
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i + 1 < order(); ++i) out.push_back({seq_[i], seq_[i + 1]});
  return out;
}

std::string to_string(const Path& p) {
  std::string out;
  for (Vertex v : p.vertices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace gallai
