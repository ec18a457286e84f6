#pragma once

#include <set>
#include <utility>

#include "sct/complex.hpp"

namespace sct {

// A simplicial pair: a complex X with a subcomplex A.
class Pair {
 public:
  Pair() = default;

  Pair(Complex x, Complex a) : x_(std::move(x)), a_(std::move(a)) {
    for (const Simplex& s : a_.simplices())
      if (!x_.contains(s))
        throw Error(errc::subset_violation,
                    "A is not a subcomplex of X: " + s.to_string());
  }

  // Closes both generator sets before validating, so inputs may list only
  // maximal simplices.
  static Pair from_generators(const std::set<Simplex>& x_gens,
                              const std::set<Simplex>& a_gens) {
    return Pair(closure(x_gens), closure(a_gens));
  }

  const Complex& X() const { return x_; }
  const Complex& A() const { return a_; }

  bool operator==(const Pair&) const = default;

 private:
  Complex x_;
  Complex a_;
};

// A has empty interior in X iff A contains no maximal simplex of X.
inline bool has_empty_interior(const Pair& p) {
  for (const Simplex& m : p.X().maximal_simplices())
    if (p.A().contains(m)) return false;
  return true;
}

}  // namespace sct
