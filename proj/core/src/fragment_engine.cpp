#include "measuringkit/fragment_engine.hpp"

namespace measuringkit {

Vector convolve_functionals(const Coalgebra& c, const Vector& f, const Vector& g) {
  // (f (x) g) . Delta, as a row vector
  return c.comult().transpose().apply(tensor_vector(f, g));
}

FunctionalQuotient quotient_by_functionals(const Coalgebra& c, const std::vector<Vector>& seeds) {
  const Field& fld = c.field();
  const std::size_t n = c.dim();
  if (n == 0) {
    return FunctionalQuotient{c, Matrix(fld, 0, 0), Matrix(fld, 0, 0), Subspace(fld, 0)};
  }
  const Matrix dual_mult = c.comult().transpose();
  Subspace s = multiplicative_closure(seeds, dual_mult, c.counit_vector());
  const std::size_t r = s.dim();

  // S has structure constants s_i * s_j = sum_k gamma^k_ij s_k; D = S* has
  // the transposed comultiplication.
  Matrix comult(fld, r * r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vector coords = s.coordinates(dual_mult.apply(tensor_vector(s.basis()[i], s.basis()[j])));
      for (std::size_t k = 0; k < r; ++k) comult.at(i * r + j, k) = coords[k];
    }
  Matrix counit(fld, 1, r);
  counit.set_row(0, s.coordinates(c.counit_vector()));

  Matrix projection = s.basis_matrix();
  Matrix section(fld, n, r);
  for (std::size_t k = 0; k < r; ++k) section.at(s.pivots()[k], k) = fld.one();
  return FunctionalQuotient{Coalgebra::unchecked(std::move(comult), std::move(counit)), std::move(projection),
                            std::move(section), std::move(s)};
}

FunctionalFactor factor_by_functionals(const Coalgebra& c, const Coalgebra& d,
                                       const std::vector<std::pair<Vector, Vector>>& pairs) {
  const Field& fld = c.field();
  const std::size_t cd = c.dim(), dd = d.dim(), total = cd + dd;
  FunctionalFactor result;
  if (cd == 0) {
    result.map = Matrix(fld, dd, 0);
    result.unique = true;
    return result;
  }

  auto join = [&](const Vector& on_d, const Vector& on_c) {
    Vector w = on_d;
    w.insert(w.end(), on_c.begin(), on_c.end());
    return w;
  };
  auto split = [&](const Vector& w) {
    return std::make_pair(Vector(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(dd)),
                          Vector(w.begin() + static_cast<std::ptrdiff_t>(dd), w.end()));
  };

  std::vector<Vector> seeds;
  for (const auto& [on_d, on_c] : pairs) seeds.push_back(join(on_d, on_c));
  BilinearProduct product = [&](const Vector& x, const Vector& y) {
    auto [xd, xc] = split(x);
    auto [yd, yc] = split(y);
    Vector pd = dd ? convolve_functionals(d, xd, yd) : Vector{};
    return join(pd, convolve_functionals(c, xc, yc));
  };
  Vector unit = join(dd ? d.counit_vector() : Vector{}, c.counit_vector());
  Subspace w = multiplicative_closure(fld, total, seeds, product, unit);

  // Unknown h[k][x] at index k * cd + x; one equation per (closure vector, x).
  std::vector<Vector> rows;
  Vector rhs;
  for (const auto& v : w.basis()) {
    auto [on_d, on_c] = split(v);
    for (std::size_t x = 0; x < cd; ++x) {
      Vector row(dd * cd, fld.zero());
      for (std::size_t k = 0; k < dd; ++k) row[k * cd + x] = on_d[k];
      rows.push_back(std::move(row));
      rhs.push_back(on_c[x]);
    }
  }
  const std::size_t unknowns = dd * cd;
  if (unknowns == 0) {
    // Only the zero map exists; it works iff every right-hand side vanishes.
    bool ok = true;
    for (const auto& s : rhs) ok = ok && s.is_zero();
    if (ok) result.map = Matrix(fld, dd, cd);
    result.unique = true;
    return result;
  }
  Matrix system = Matrix::from_rows(fld, unknowns, rows);
  auto sol = solve(system, rhs);
  if (!sol) return result;
  Matrix h(fld, dd, cd);
  for (std::size_t k = 0; k < dd; ++k)
    for (std::size_t x = 0; x < cd; ++x) h.at(k, x) = (*sol)[k * cd + x];
  result.map = std::move(h);
  result.unique = rank(system) == unknowns;
  return result;
}

}  // namespace measuringkit
