#pragma once

// Small named structures used throughout tests, examples and fuzzing.

#include <cstddef>

#include "measuringkit/structures.hpp"

namespace measuringkit {

/// k as a 1-dimensional algebra.
Algebra ground_algebra(const Field& field);
/// k as a 1-dimensional coalgebra (Delta 1 = 1 (x) 1).
Coalgebra ground_coalgebra(const Field& field);
/// n grouplikes g_i with Delta g_i = g_i (x) g_i, epsilon g_i = 1.
Coalgebra grouplike_coalgebra(const Field& field, std::size_t n);
/// Basis g, d with Delta g = g(x)g, Delta d = d(x)g + g(x)d, epsilon = (1, 0).
Coalgebra dual_numbers_coalgebra(const Field& field);
/// k[x]/(x^n) on the basis 1, x, ..., x^(n-1).
Algebra truncated_polynomial_algebra(const Field& field, std::size_t n);
/// k^n with componentwise product.
Algebra product_algebra(const Field& field, std::size_t n);
/// A x B with componentwise product; basis of A followed by basis of B.
Algebra direct_product(const Algebra& a, const Algebra& b);
/// n x n matrices; E_ij has index i * n + j.
Algebra matrix_algebra(const Field& field, std::size_t n);
/// Upper triangular n x n matrices, basis E_ij (i <= j) in row-major order.
Algebra upper_triangular_algebra(const Field& field, std::size_t n);
/// Direct sum of coalgebras (basis of C followed by basis of D).
Coalgebra direct_sum_coalgebra(const Coalgebra& c, const Coalgebra& d);

/// A acting on itself by left multiplication.
Module regular_module(const Algebra& a);
/// k^n with A acting through a character chi : A -> k (given by its values).
Module character_module(const Algebra& a, const Vector& chi, std::size_t n);
/// C coacting on itself via Delta.
Comodule regular_comodule(const Coalgebra& c);
/// k^n with x |-> x (x) g for a grouplike g (given as a vector of C).
Comodule trivial_comodule(const Coalgebra& c, const Vector& grouplike, std::size_t n);

}  // namespace measuringkit
