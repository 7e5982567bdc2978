#include "measuringkit/generators.hpp"

#include <stdexcept>

#include "measuringkit/families.hpp"

namespace measuringkit::gen {

Scalar random_scalar(const Field& field, Rng& rng) {
  if (field.is_finite()) return field.from_int(static_cast<std::int64_t>(rng() % field.characteristic()));
  // Small integers keep rational coefficient growth in check.
  return field.from_int(static_cast<std::int64_t>(rng() % 5) - 2);
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(field, rng);
  return m;
}

Matrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(field, n, n, rng);
    if (rank(m) == n) return m;
  }
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  Matrix pinv = *inverse(p);
  Matrix mult = pinv * a.mult() * tensor_map(p, p);
  return Algebra::unchecked(std::move(mult), pinv.apply(a.unit()));
}

Coalgebra change_basis(const Coalgebra& c, const Matrix& p) {
  Matrix pinv = *inverse(p);
  return Coalgebra::unchecked(tensor_map(pinv, pinv) * c.comult() * p, c.counit() * p);
}

std::vector<Algebra> catalog_algebras(const Field& field, std::size_t dim) {
  std::vector<Algebra> out;
  if (dim == 0) return out;
  out.push_back(truncated_polynomial_algebra(field, dim));
  if (dim >= 2) out.push_back(product_algebra(field, dim));
  if (dim == 3) {
    out.push_back(direct_product(truncated_polynomial_algebra(field, 2), ground_algebra(field)));
    out.push_back(upper_triangular_algebra(field, 2));
  }
  if (dim == 4) {
    out.push_back(matrix_algebra(field, 2));
    out.push_back(tensor_algebra(truncated_polynomial_algebra(field, 2), truncated_polynomial_algebra(field, 2)));
  }
  return out;
}

std::optional<Algebra> sample_algebra(const Field& field, std::size_t dim, Rng& rng, std::size_t attempts) {
  if (dim == 0) return std::nullopt;
  for (std::size_t t = 0; t < attempts; ++t) {
    Matrix mult(field, dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        if (i == 0 || j == 0) {
          mult.at(i == 0 ? j : i, i * dim + j) = field.one();
          continue;
        }
        for (std::size_t k = 0; k < dim; ++k) mult.at(k, i * dim + j) = random_scalar(field, rng);
      }
    Vector unit = unit_vector(field, dim, 0);
    if (check_algebra(mult, unit).ok()) return Algebra::unchecked(std::move(mult), std::move(unit));
  }
  return std::nullopt;
}

Algebra random_algebra(const Field& field, std::size_t max_dim, Rng& rng) {
  if (max_dim == 0) throw std::invalid_argument("random_algebra: max_dim must be positive");
  const std::size_t dim = 1 + rng() % max_dim;
  std::optional<Algebra> a;
  if (rng() % 2 == 0) a = sample_algebra(field, dim, rng, 64);
  if (!a) {
    std::vector<Algebra> cat = catalog_algebras(field, dim);
    if (cat.empty()) cat = catalog_algebras(field, 1);
    a = cat[rng() % cat.size()];
  }
  return change_basis(*a, random_invertible(field, a->dim(), rng));
}

Coalgebra random_coalgebra(const Field& field, std::size_t max_dim, Rng& rng) {
  return dual_coalgebra(random_algebra(field, max_dim, rng));
}

Module random_module(const Algebra& a, std::size_t max_dim, Rng& rng) {
  const Field& field = a.field();
  const std::size_t n = a.dim();
  const std::size_t dim_m = 1 + rng() % std::max<std::size_t>(max_dim, 1);
  // A basis of A whose first vector is the unit; unit acts as the identity
  // and the other basis vectors act by random matrices.
  std::vector<Vector> cols{a.unit()};
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    std::vector<Vector> trial = cols;
    trial.push_back(unit_vector(field, n, i));
    if (rank(Matrix::from_columns(field, n, trial)) == trial.size()) cols = std::move(trial);
  }
  Matrix qinv = *inverse(Matrix::from_columns(field, n, cols));
  for (std::size_t attempt = 0; attempt < 256; ++attempt) {
    std::vector<Matrix> images{Matrix::identity(field, dim_m)};
    for (std::size_t i = 1; i < n; ++i) images.push_back(random_matrix(field, dim_m, dim_m, rng));
    Matrix action(field, dim_m, n * dim_m);
    for (std::size_t j = 0; j < n; ++j) {
      Matrix act_j(field, dim_m, dim_m);
      for (std::size_t i = 0; i < n; ++i)
        if (!qinv.at(i, j).is_zero()) act_j += images[i] * qinv.at(i, j);
      for (std::size_t r = 0; r < dim_m; ++r)
        for (std::size_t c = 0; c < dim_m; ++c) action.at(r, j * dim_m + c) = act_j.at(r, c);
    }
    if (check_module(a, action).ok()) return Module::unchecked(a, std::move(action));
  }
  return regular_module(a);
}

Comodule random_comodule(const Coalgebra& c, std::size_t max_dim, Rng& rng) {
  if (c.dim() == 0) throw std::invalid_argument("random_comodule: zero coalgebra has only the zero comodule");
  Module m = random_module(dual_algebra(c), max_dim, rng);
  const std::size_t x = m.dim(), cd = c.dim();
  // delta(x') = sum_{x, c} (e*_c . x')_x  x (x) c
  Matrix coaction(c.field(), x * cd, x);
  for (std::size_t xo = 0; xo < x; ++xo)
    for (std::size_t ci = 0; ci < cd; ++ci)
      for (std::size_t xi = 0; xi < x; ++xi) coaction.at(xo * cd + ci, xi) = m.action().at(xo, ci * x + xi);
  return Comodule(c, std::move(coaction));
}

std::vector<Measuring> all_measurings(const Coalgebra& c, const Algebra& a, const Algebra& b, std::uint64_t limit) {
  const Field& field = a.field();
  if (!field.is_finite()) throw EnumerationUnsupported("all_measurings: enumeration unsupported over Q");
  const std::size_t rows = b.dim(), cols = c.dim() * a.dim();
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < rows * cols; ++k) {
    total *= field.characteristic();
    if (total > limit) throw EnumerationUnsupported("all_measurings: enumeration unsupported, too many candidates");
  }
  std::vector<Measuring> out;
  for (std::uint64_t index = 0; index < total; ++index) {
    Matrix sigma(field, rows, cols);
    std::uint64_t rest = index;
    for (std::size_t k = 0; k < rows * cols; ++k) {
      sigma.at(k / cols, k % cols) = field.from_int(static_cast<std::int64_t>(rest % field.characteristic()));
      rest /= field.characteristic();
    }
    if (check_measuring(sigma, c, a, b).ok()) out.push_back(Measuring::unchecked(c, a, b, std::move(sigma)));
  }
  return out;
}

Measuring random_measuring(const Field& field, std::size_t max_dim, Rng& rng) {
  if (!field.is_finite()) throw EnumerationUnsupported("random_measuring: enumeration unsupported over Q");
  return random_measuring_from(random_algebra(field, max_dim, rng), max_dim, rng);
}

Measuring random_measuring_from(const Algebra& a, std::size_t max_dim, Rng& rng) {
  constexpr std::uint64_t kBudget = 4096;
  const Field& field = a.field();
  if (!field.is_finite()) throw EnumerationUnsupported("random_measuring_from: enumeration unsupported over Q");
  for (int attempt = 0; attempt < 256; ++attempt) {
    Coalgebra c = random_coalgebra(field, max_dim, rng);
    Algebra b = random_algebra(field, max_dim, rng);
    std::vector<Measuring> found;
    try {
      found = all_measurings(c, a, b, kBudget);
    } catch (const EnumerationUnsupported&) {
      continue;
    }
    if (!found.empty()) return found[rng() % found.size()];
  }
  // The identity measuring always exists.
  return algebra_map_measuring(AlgebraMorphism::identity(a));
}

}  // namespace measuringkit::gen
