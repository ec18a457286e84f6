#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sct/pair.hpp"

namespace sct {

namespace detail {

// Full flags of a complex: chains s0 < s1 < ... < sk obtained by ordering
// the vertices of each maximal simplex. Every chain of the complex is a
// face of one of these, so their closure is the whole subdivision.
inline std::set<Simplex> flag_generators(
    const Complex& c, const std::map<Simplex, VertexId>& id_of) {
  std::set<Simplex> flags;
  for (const Simplex& m : c.maximal_simplices()) {
    std::vector<VertexId> perm = m.vertices();
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<VertexId> chain_ids;
      std::vector<VertexId> prefix;
      for (VertexId v : perm) {
        prefix.push_back(v);
        chain_ids.push_back(id_of.at(Simplex(prefix)));
      }
      flags.insert(Simplex(std::move(chain_ids)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return flags;
}

}  // namespace detail

struct Subdivision {
  Pair pair;
  // names[id] is the dash-joined sorted vertex list of the simplex the new
  // vertex subdivides, e.g. "0-1-2".
  std::vector<std::string> vertex_names;
};

// Barycentric subdivision of a pair. New vertices are the simplices of X,
// numbered in the canonical (sorted) order of X's simplex set; simplices of
// the result are chains of X. A's chains reuse the same numbering, so the
// image of A is a subcomplex of the subdivided X.
inline Subdivision barycentric_subdivision_named(const Pair& p) {
  std::map<Simplex, VertexId> id_of;
  std::vector<std::string> names;
  VertexId next = 0;
  for (const Simplex& s : p.X().simplices()) {
    id_of[s] = next++;
    std::string name;
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
      if (i) name += '-';
      name += std::to_string(s.vertices()[i]);
    }
    names.push_back(name);
  }
  Complex sdx = closure(detail::flag_generators(p.X(), id_of));
  Complex sda = p.A().empty()
                    ? Complex()
                    : closure(detail::flag_generators(p.A(), id_of));
  return Subdivision{Pair(std::move(sdx), std::move(sda)), std::move(names)};
}

inline Pair barycentric_subdivision(const Pair& p) {
  return barycentric_subdivision_named(p).pair;
}

inline Complex barycentric_subdivision(const Complex& c) {
  return barycentric_subdivision(Pair(c, Complex())).X();
}

}  // namespace sct
