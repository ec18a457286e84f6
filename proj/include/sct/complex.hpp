#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "sct/simplex.hpp"

namespace sct {

// A finite abstract simplicial complex: a set of simplices closed under
// taking non-empty subsets. Instances are immutable once constructed and
// every construction path re-validates downward closure.
class Complex {
 public:
  Complex() = default;

  // Builds from an already downward-closed set; validates the closure
  // axiom by checking that every facet of every simplex is present.
  static Complex from_closed(std::set<Simplex> simplices) {
    for (const Simplex& s : simplices) {
      if (s.dimension() == 0) continue;
      for (VertexId v : s.vertices()) {
        if (!simplices.count(s.without_vertex(v)))
          throw Error(errc::not_closed,
                      "missing face of " + s.to_string());
      }
    }
    Complex c;
    c.simplices_ = std::move(simplices);
    return c;
  }

  const std::set<Simplex>& simplices() const { return simplices_; }
  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  bool has_vertex(VertexId v) const { return contains(Simplex{v}); }

  // -1 for the empty complex.
  int dimension() const {
    int d = -1;
    for (const Simplex& s : simplices_) d = std::max(d, s.dimension());
    return d;
  }

  std::vector<VertexId> vertex_ids() const {
    std::vector<VertexId> out;
    for (const Simplex& s : simplices_)
      if (s.dimension() == 0) out.push_back(s.vertices()[0]);
    return out;  // sorted: 0-simplices come out in id order
  }

  // Members with no proper superset in the complex.
  std::vector<Simplex> maximal_simplices() const {
    std::vector<Simplex> out;
    for (const Simplex& s : simplices_) {
      bool maximal = true;
      for (const Simplex& t : simplices_) {
        if (s.is_proper_face_of(t)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
    return out;
  }

  std::size_t count_of_dimension(int d) const {
    std::size_t n = 0;
    for (const Simplex& s : simplices_)
      if (s.dimension() == d) ++n;
    return n;
  }

  bool is_subcomplex_of(const Complex& other) const {
    for (const Simplex& s : simplices_)
      if (!other.contains(s)) return false;
    return true;
  }

  bool operator==(const Complex&) const = default;

 private:
  std::set<Simplex> simplices_;
};

// Smallest downward-closed superset of the generators. Idempotent.
inline Complex closure(const std::set<Simplex>& generators) {
  std::set<Simplex> out;
  for (const Simplex& s : generators) {
    const auto& vs = s.vertices();
    const std::size_t n = vs.size();
    if (n > 24)
      throw Error(errc::size_guard, "simplex dimension too large to close");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(vs[i]);
      out.insert(Simplex(std::move(sub)));
    }
  }
  return Complex::from_closed(std::move(out));
}

inline Complex closure(std::initializer_list<Simplex> generators) {
  return closure(std::set<Simplex>(generators));
}

// Closure of all simplices containing v.
inline Complex star(const Complex& c, VertexId v) {
  if (!c.has_vertex(v))
    throw Error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
  std::set<Simplex> gens;
  for (const Simplex& s : c.simplices())
    if (s.contains(v)) gens.insert(s);
  return closure(gens);
}

// Simplices s with v not in s and s + {v} in the complex. The result is
// downward closed by construction.
inline Complex link(const Complex& c, VertexId v) {
  if (!c.has_vertex(v))
    throw Error(errc::unknown_vertex, "unknown vertex " + std::to_string(v));
  std::set<Simplex> out;
  for (const Simplex& s : c.simplices())
    if (s.contains(v) && s.dimension() >= 1) out.insert(s.without_vertex(v));
  return Complex::from_closed(std::move(out));
}

enum class BoundaryKind { one, plus, odd };

// Simplices contained in exactly one / at least one / an odd number of
// simplices of the next dimension. These are the generators; the boundary
// complex is their closure.
inline std::set<Simplex> boundary_generators(const Complex& c,
                                             BoundaryKind kind) {
  std::map<Simplex, std::size_t> cofacets;
  for (const Simplex& t : c.simplices()) {
    if (t.dimension() == 0) continue;
    for (VertexId v : t.vertices()) ++cofacets[t.without_vertex(v)];
  }
  std::set<Simplex> gens;
  for (const Simplex& s : c.simplices()) {
    auto it = cofacets.find(s);
    std::size_t n = it == cofacets.end() ? 0 : it->second;
    bool keep = false;
    switch (kind) {
      case BoundaryKind::one: keep = n == 1; break;
      case BoundaryKind::plus: keep = n >= 1; break;
      case BoundaryKind::odd: keep = n % 2 == 1; break;
    }
    if (keep) gens.insert(s);
  }
  return gens;
}

inline Complex boundary(const Complex& c, BoundaryKind kind) {
  return closure(boundary_generators(c, kind));
}

// Members with exactly one proper superset in the complex, of any dimension.
inline std::set<Simplex> free_simplices(const Complex& c) {
  std::set<Simplex> out;
  for (const Simplex& s : c.simplices()) {
    std::size_t supersets = 0;
    for (const Simplex& t : c.simplices())
      if (s.is_proper_face_of(t) && ++supersets > 1) break;
    if (supersets == 1) out.insert(s);
  }
  return out;
}

// Vertices whose link is a single vertex and nothing else.
inline std::set<VertexId> free_vertices(const Complex& c) {
  std::set<VertexId> out;
  for (VertexId v : c.vertex_ids()) {
    Complex lk = link(c, v);
    if (lk.size() == 1 && lk.dimension() == 0) out.insert(v);
  }
  return out;
}

inline long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (const Simplex& s : c.simplices())
    chi += (s.dimension() % 2 == 0) ? 1 : -1;
  return chi;
}

// Image complex under a vertex permutation. The map must cover every vertex
// of the complex and be injective.
inline Complex relabel(const Complex& c,
                       const std::map<VertexId, VertexId>& permutation) {
  std::set<VertexId> images;
  for (const auto& [from, to] : permutation) {
    (void)from;
    if (to < 0)
      throw Error(errc::non_bijective_relabel, "negative image id");
    if (!images.insert(to).second)
      throw Error(errc::non_bijective_relabel,
                  "duplicate image " + std::to_string(to));
  }
  std::set<Simplex> out;
  for (const Simplex& s : c.simplices()) {
    std::vector<VertexId> vs;
    vs.reserve(s.vertices().size());
    for (VertexId v : s.vertices()) {
      auto it = permutation.find(v);
      if (it == permutation.end())
        throw Error(errc::non_bijective_relabel,
                    "vertex " + std::to_string(v) + " has no image");
      vs.push_back(it->second);
    }
    out.insert(Simplex(std::move(vs)));
  }
  return Complex::from_closed(std::move(out));
}

}  // namespace sct
