#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "sct/error.hpp"

namespace sct {

// Vertex labels are non-negative integers. -1 is reserved for the apex node
// used by the graph augmentation and never appears inside a complex.
using VertexId = int;

// A simplex is a non-empty set of vertices, stored as a strictly increasing
// sequence. Dimension is vertex count minus one.
class Simplex {
 public:
  Simplex(std::initializer_list<VertexId> vs)
      : Simplex(std::vector<VertexId>(vs)) {}

  explicit Simplex(std::vector<VertexId> vs) : vertices_(std::move(vs)) {
    if (vertices_.empty())
      throw Error(errc::malformed_simplex, "simplex must be non-empty");
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] < 0)
        throw Error(errc::malformed_simplex, "negative vertex id");
      if (i > 0 && vertices_[i] == vertices_[i - 1])
        throw Error(errc::malformed_simplex,
                    "repeated vertex " + std::to_string(vertices_[i]));
    }
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }

  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  // Subset test, equality included.
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
  }

  bool is_proper_face_of(const Simplex& other) const {
    return vertices_.size() < other.vertices_.size() && is_face_of(other);
  }

  Simplex with_vertex(VertexId v) const {
    std::vector<VertexId> vs = vertices_;
    vs.push_back(v);
    return Simplex(std::move(vs));
  }

  Simplex without_vertex(VertexId v) const {
    std::vector<VertexId> vs;
    vs.reserve(vertices_.size() - 1);
    for (VertexId w : vertices_)
      if (w != v) vs.push_back(w);
    return Simplex(std::move(vs));
  }

  // Canonical textual form: comma-separated sorted ids in brackets.
  std::string to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) out << ',';
      out << vertices_[i];
    }
    out << ']';
    return out.str();
  }

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

}  // namespace sct
