#include "measuringkit/families.hpp"

#include <utility>

namespace measuringkit {

Algebra ground_algebra(const Field& field) {
  return Algebra(Matrix::identity(field, 1), {field.one()});
}

Coalgebra ground_coalgebra(const Field& field) {
  return Coalgebra(Matrix::identity(field, 1), Matrix::identity(field, 1));
}

Coalgebra grouplike_coalgebra(const Field& field, std::size_t n) {
  Matrix comult(field, n * n, n);
  Matrix counit(field, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    comult.at(i * n + i, i) = field.one();
    counit.at(0, i) = field.one();
  }
  return Coalgebra(std::move(comult), std::move(counit));
}

Coalgebra dual_numbers_coalgebra(const Field& field) {
  // basis 0 = g, 1 = d
  Matrix comult(field, 4, 2);
  comult.at(0, 0) = field.one();  // g (x) g
  comult.at(2, 1) = field.one();  // d (x) g
  comult.at(1, 1) = field.one();  // g (x) d
  Matrix counit(field, 1, 2);
  counit.at(0, 0) = field.one();
  return Coalgebra(std::move(comult), std::move(counit));
}

Algebra truncated_polynomial_algebra(const Field& field, std::size_t n) {
  Matrix mult(field, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) mult.at(i + j, i * n + j) = field.one();
  return Algebra(std::move(mult), unit_vector(field, n, 0));
}

Algebra product_algebra(const Field& field, std::size_t n) {
  Matrix mult(field, n, n * n);
  Vector unit(n, field.one());
  for (std::size_t i = 0; i < n; ++i) mult.at(i, i * n + i) = field.one();
  return Algebra(std::move(mult), std::move(unit));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim(), m = b.dim(), t = n + m;
  const Field& f = a.field();
  Matrix mult(f, t, t * t);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mult.at(k, i * t + j) = a.mult().at(k, i * n + j);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) mult.at(n + k, (n + i) * t + (n + j)) = b.mult().at(k, i * m + j);
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra(std::move(mult), std::move(unit));
}

Algebra matrix_algebra(const Field& field, std::size_t n) {
  const std::size_t d = n * n;
  Matrix mult(field, d, d * d);
  Vector unit(d, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = field.one();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) mult.at(i * n + l, (i * n + j) * d + (j * n + l)) = field.one();
  }
  return Algebra(std::move(mult), std::move(unit));
}

Algebra upper_triangular_algebra(const Field& field, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) basis.emplace_back(i, j);
  const std::size_t d = basis.size();
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < d; ++k)
      if (basis[k] == std::make_pair(i, j)) return k;
    return d;
  };
  Matrix mult(field, d, d * d);
  Vector unit(d, field.zero());
  for (std::size_t p = 0; p < d; ++p) {
    auto [i, j] = basis[p];
    if (i == j) unit[p] = field.one();
    for (std::size_t q = 0; q < d; ++q) {
      auto [k, l] = basis[q];
      if (j == k) mult.at(index(i, l), p * d + q) = field.one();
    }
  }
  return Algebra(std::move(mult), std::move(unit));
}

Coalgebra direct_sum_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  const std::size_t n = c.dim(), m = d.dim(), t = n + m;
  const Field& f = c.field();
  Matrix comult(f, t * t, t);
  Matrix counit(f, 1, t);
  for (std::size_t k = 0; k < n; ++k) {
    counit.at(0, k) = c.counit().at(0, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) comult.at(i * t + j, k) = c.comult().at(i * n + j, k);
  }
  for (std::size_t k = 0; k < m; ++k) {
    counit.at(0, n + k) = d.counit().at(0, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) comult.at((n + i) * t + (n + j), n + k) = d.comult().at(i * m + j, k);
  }
  return Coalgebra::unchecked(std::move(comult), std::move(counit));
}

Module regular_module(const Algebra& a) { return Module::unchecked(a, a.mult()); }

Module character_module(const Algebra& a, const Vector& chi, std::size_t n) {
  const Field& f = a.field();
  Matrix action(f, n, a.dim() * n);
  for (std::size_t p = 0; p < a.dim(); ++p)
    for (std::size_t i = 0; i < n; ++i) action.at(i, p * n + i) = chi.at(p);
  return Module(a, std::move(action));
}

Comodule regular_comodule(const Coalgebra& c) { return Comodule::unchecked(c, c.comult()); }

Comodule trivial_comodule(const Coalgebra& c, const Vector& grouplike, std::size_t n) {
  const Field& f = c.field();
  const std::size_t cd = c.dim();
  Matrix coaction(f, n * cd, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < cd; ++k) coaction.at(i * cd + k, i) = grouplike.at(k);
  return Comodule(c, std::move(coaction));
}

}  // namespace measuringkit
