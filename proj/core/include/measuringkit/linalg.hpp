#pragma once

// Exact elimination, solving, kernels, tensor products and subspace algebra.
//
// Tensor bases are ordered with the left factor varying slowest: the basis
// vector e_i (x) f_j of V (x) W sits at index i * dim W + j. Every module in the
// library relies on this convention.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "measuringkit/matrix.hpp"

namespace measuringkit {

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, same shape as input
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Over Q the forward phase is fraction-free
/// (Bareiss) and only the final normalization introduces fractions.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with map * x == target, or nullopt if target is outside the image.
std::optional<Vector> solve(const LinearMap& map, const Vector& target);
/// Some X with a * X == b, column by column.
std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b);
/// Basis of the null space, one vector per free column, in RREF order.
std::vector<Vector> kernel(const LinearMap& map);
std::optional<Matrix> inverse(const Matrix& m);

Matrix tensor_map(const Matrix& f, const Matrix& g);
Vector tensor_vector(const Vector& a, const Vector& b);
/// The symmetry V_m (x) V_n -> V_n (x) V_m.
Matrix swap_map(const Field& field, std::size_t m, std::size_t n);
/// Reorders tensor factors: factor j of the output is factor order[j] of the
/// input, whose factor dimensions are dims.
Matrix tensor_permutation(const Field& field, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& order);

Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// A subspace of F^n stored by its reduced echelon basis, so two subspaces
/// are equal exactly when their stored bases are equal.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(Field field, std::size_t ambient_dim);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// dim x ambient matrix whose rows are the basis.
  Matrix basis_matrix() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis; throws if v is not in the subspace.
  Vector coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;
  /// Functionals (indexed like the primal basis) vanishing on the subspace.
  Subspace annihilator() const;
  /// Projection F^n -> F^n / S, using the non-pivot coordinates as the
  /// quotient basis.
  Matrix quotient_projection() const;
  /// Right inverse of quotient_projection.
  Matrix quotient_section() const;

  bool operator==(const Subspace& other) const;

 private:
  void require_compatible(const Subspace& other) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

using BilinearProduct = std::function<Vector(const Vector&, const Vector&)>;

/// Smallest subspace containing unit and every seed vector that is closed
/// under the product.
Subspace multiplicative_closure(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& seed,
                                const BilinearProduct& product, const std::optional<Vector>& unit);
/// Same, with the product given as a dim x dim^2 structure-constant matrix.
Subspace multiplicative_closure(const std::vector<Vector>& seed, const Matrix& product, const Vector& unit);

}  // namespace measuringkit
