#pragma once

// Tensor products, duals, convolution algebras and Hom-modules.
//
// Hom(V, W) is coordinatized row-major: the elementary map e_v |-> e_w has
// index w * dim V + v. With this choice Hom(C, k) is literally C* and
// Hom(k, A) is literally A.

#include <cstddef>

#include "measuringkit/structures.hpp"

namespace measuringkit {

Algebra tensor_algebra(const Algebra& a, const Algebra& b);
Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d);

/// Comultiplication is the transpose of the multiplication; the counit is
/// evaluation at the unit. Dual basis is indexed like the primal basis.
Coalgebra dual_coalgebra(const Algebra& a);
Algebra dual_algebra(const Coalgebra& c);

/// Hom(C, A) under (f * g)(x) = sum f(x_1) g(x_2), unit eta . epsilon.
Algebra convolution_algebra(const Coalgebra& c, const Algebra& a);

/// Flattens a dim W x dim V matrix into its Hom(V, W) coordinate vector.
Vector hom_vector(const Matrix& f);
/// Inverse of hom_vector.
Matrix hom_matrix(const Vector& v, std::size_t dim_w, std::size_t dim_v);

/// Convolution of two maps C -> A given as dim A x dim C matrices.
Matrix convolve(const Coalgebra& c, const Algebra& a, const Matrix& f, const Matrix& g);

/// Evaluation Hom(V, W) (x) V -> W.
Matrix evaluation_map(const Field& field, std::size_t dim_v, std::size_t dim_w);

/// Hom(X, M) as a module over Hom(C, A) with
/// (phi . h)(x) = sum phi(x_(1)) . h(x_(0)) for the right coaction
/// x |-> sum x_(0) (x) x_(1). The result is validated; when C is not
/// cocommutative the formula can fail the module laws, and LawViolation is
/// thrown with the witness.
Module hom_module(const Comodule& x, const Module& m);
/// The same action matrix without validation.
Matrix hom_module_action(const Comodule& x, const Module& m);

/// psi : Hom(A, B) (x) Hom(A', B') -> Hom(A (x) A', B (x) B'), sending
/// f (x) g to the tensor product map.
Matrix lax_structure_psi(const Field& field, std::size_t a, std::size_t b, std::size_t a2, std::size_t b2);
/// psi_0 : k -> Hom(k, k), 1 |-> id.
Matrix lax_unit_psi0(const Field& field);

}  // namespace measuringkit
