#pragma once

// Known internal homs in Comod and deliberately broken variants of them.

#include <string>
#include <utility>
#include <vector>

#include "measuringkit/qmodule.hpp"

namespace testkit {

/// H(k, Z) = Z with identity evaluation, Y the ground comodule.
measuringkit::InternalHomCandidate unit_internal_hom(const measuringkit::Comodule& z);

/// Z = V (x) E cofree, Y = k^y over k: H = Hom(Y, V) (x) E, cofree, with
/// evaluation (phi (x) e) (x) y |-> phi(y) (x) e.
measuringkit::InternalHomCandidate cofree_internal_hom(std::size_t dim_v, std::size_t dim_y,
                                                       const measuringkit::Coalgebra& e);

/// Ten named corruptions of cofree_internal_hom(dim_v, dim_y, e). Needs
/// dim_v * dim_y >= 2 and e with a grouplike in its first basis vector.
std::vector<std::pair<std::string, measuringkit::InternalHomCandidate>> cofree_perturbations(
    std::size_t dim_v, std::size_t dim_y, const measuringkit::Coalgebra& e);

/// Small comodules over F_2 used as test objects W.
std::vector<measuringkit::Comodule> internal_hom_test_objects(const measuringkit::Field& f);

}  // namespace testkit
