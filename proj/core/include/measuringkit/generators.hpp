#pragma once

// Seeded random structures for property tests, benchmarks and the fuzz
// harness. Everything is deterministic given the generator state.
//
// Algebras are found by rejection sampling (random structure constants with
// the unit fixed to a basis vector, kept when associative) and otherwise
// drawn from a small catalog; either way a random change of basis is applied
// afterwards. Coalgebras are duals of random algebras, which covers every
// finite-dimensional coalgebra. Comodules over C are built as modules over
// C*.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "measuringkit/measuring.hpp"

namespace measuringkit::gen {

using Rng = std::mt19937_64;

Scalar random_scalar(const Field& field, Rng& rng);
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& field, std::size_t n, Rng& rng);

/// Transports the structure along the basis whose vectors are the columns of p.
Algebra change_basis(const Algebra& a, const Matrix& p);
Coalgebra change_basis(const Coalgebra& c, const Matrix& p);

/// Catalog of algebras of the given dimension (may be empty for dim > 3).
std::vector<Algebra> catalog_algebras(const Field& field, std::size_t dim);

/// Pure rejection sampling; nullopt when every attempt fails.
std::optional<Algebra> sample_algebra(const Field& field, std::size_t dim, Rng& rng, std::size_t attempts);

/// Dimension uniform in [1, max_dim].
Algebra random_algebra(const Field& field, std::size_t max_dim, Rng& rng);
Coalgebra random_coalgebra(const Field& field, std::size_t max_dim, Rng& rng);
Module random_module(const Algebra& a, std::size_t max_dim, Rng& rng);
Comodule random_comodule(const Coalgebra& c, std::size_t max_dim, Rng& rng);

/// Every measuring C (x) A -> B over a finite field, in enumeration order.
/// Throws EnumerationUnsupported if there are more than `limit` candidates.
std::vector<Measuring> all_measurings(const Coalgebra& c, const Algebra& a, const Algebra& b,
                                      std::uint64_t limit = 1u << 16);

/// A random valid measuring with all dims <= max_dim over a finite field.
/// Candidates are enumerated, so keep max_dim <= 2 over F_2 and F_3.
Measuring random_measuring(const Field& field, std::size_t max_dim, Rng& rng);
/// Same with a fixed source algebra; falls back to the identity measuring
/// when no small candidate is found.
Measuring random_measuring_from(const Algebra& a, std::size_t max_dim, Rng& rng);

}  // namespace measuringkit::gen
