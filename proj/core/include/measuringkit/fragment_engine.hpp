#pragma once

// Quotient coalgebras cut out by subalgebras of the dual, and the matching
// factorization test. A set of functionals on C generates a unital
// subalgebra S of the convolution algebra C*; its annihilator is a coideal
// and C / S^perp = S* is the smallest quotient through which every seed
// functional factors.

#include <optional>
#include <utility>
#include <vector>

#include "measuringkit/structures.hpp"

namespace measuringkit {

/// (f * g)(c) = sum f(c_1) g(c_2) for functionals on C.
Vector convolve_functionals(const Coalgebra& c, const Vector& f, const Vector& g);

struct FunctionalQuotient {
  Coalgebra quotient;    // D = S*, basis dual to the echelon basis of S
  Matrix projection;     // C -> D, rows are the echelon basis of S
  Matrix section;        // D -> C, right inverse of projection
  Subspace functionals;  // S inside C*

  /// A functional in S written as a functional on D.
  Vector induced(const Vector& phi) const { return functionals.coordinates(phi); }
};

FunctionalQuotient quotient_by_functionals(const Coalgebra& c, const std::vector<Vector>& seeds);

struct FunctionalFactor {
  std::optional<Matrix> map;  // h : C -> D, dim D x dim C
  bool unique = false;
};

/// Looks for h : C -> D with phi_D . h = phi_C for every pair (phi_D, phi_C)
/// in the unital subalgebra of D* x C* generated by the given pairs. When
/// the phi_D generate D*, a solution is unique and is a coalgebra morphism.
FunctionalFactor factor_by_functionals(const Coalgebra& c, const Coalgebra& d,
                                       const std::vector<std::pair<Vector, Vector>>& pairs);

}  // namespace measuringkit
