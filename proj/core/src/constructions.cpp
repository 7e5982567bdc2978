#include "measuringkit/constructions.hpp"

namespace measuringkit {

namespace {

void require_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw FieldError(std::string(what) + ": inputs over different fields");
}

}  // namespace

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  require_same_field(a.field(), b.field(), "tensor_algebra");
  const std::size_t n = a.dim(), m = b.dim();
  // (m_A (x) m_B) . (1 (x) s (x) 1)
  Matrix middle = tensor_permutation(a.field(), {n, m, n, m}, {0, 2, 1, 3});
  Matrix mult = tensor_map(a.mult(), b.mult()) * middle;
  return Algebra::unchecked(std::move(mult), tensor_vector(a.unit(), b.unit()));
}

Coalgebra tensor_coalgebra(const Coalgebra& c, const Coalgebra& d) {
  require_same_field(c.field(), d.field(), "tensor_coalgebra");
  const std::size_t n = c.dim(), m = d.dim();
  Matrix middle = tensor_permutation(c.field(), {n, n, m, m}, {0, 2, 1, 3});
  Matrix comult = middle * tensor_map(c.comult(), d.comult());
  return Coalgebra::unchecked(std::move(comult), tensor_map(c.counit(), d.counit()));
}

Coalgebra dual_coalgebra(const Algebra& a) {
  return Coalgebra::unchecked(a.mult().transpose(), a.unit_map().transpose());
}

Algebra dual_algebra(const Coalgebra& c) {
  if (c.dim() == 0) throw DimensionError("dual_algebra: the zero coalgebra has no unital dual");
  return Algebra::unchecked(c.comult().transpose(), c.counit_vector());
}

Vector hom_vector(const Matrix& f) {
  Vector v;
  v.reserve(f.rows() * f.cols());
  for (std::size_t w = 0; w < f.rows(); ++w)
    for (std::size_t x = 0; x < f.cols(); ++x) v.push_back(f.at(w, x));
  return v;
}

Matrix hom_matrix(const Vector& v, std::size_t dim_w, std::size_t dim_v) {
  if (v.size() != dim_w * dim_v) throw DimensionError("hom_matrix: wrong vector length");
  if (v.empty()) throw DimensionError("hom_matrix: empty vector has no field");
  Matrix f(v[0].field(), dim_w, dim_v);
  for (std::size_t w = 0; w < dim_w; ++w)
    for (std::size_t x = 0; x < dim_v; ++x) f.at(w, x) = v[w * dim_v + x];
  return f;
}

Algebra convolution_algebra(const Coalgebra& c, const Algebra& a) {
  require_same_field(c.field(), a.field(), "convolution_algebra");
  const Field& f = a.field();
  const std::size_t cd = c.dim(), ad = a.dim(), n = cd * ad;
  if (n == 0) throw DimensionError("convolution_algebra: zero-dimensional carrier");
  // E_{a,c} * E_{b,c'} = sum_{c''} Delta[(c,c'),c''] E_{ab,c''}
  Matrix mult(f, n, n * n);
  for (std::size_t x = 0; x < cd; ++x)
    for (std::size_t y = 0; y < cd; ++y)
      for (std::size_t z = 0; z < cd; ++z) {
        const Scalar& delta = c.comult().at(x * cd + y, z);
        if (delta.is_zero()) continue;
        for (std::size_t p = 0; p < ad; ++p)
          for (std::size_t q = 0; q < ad; ++q)
            for (std::size_t e = 0; e < ad; ++e) {
              const Scalar& mu = a.mult().at(e, p * ad + q);
              if (mu.is_zero()) continue;
              mult.at(e * cd + z, (p * cd + x) * n + (q * cd + y)) += delta * mu;
            }
      }
  Vector unit(n, f.zero());
  for (std::size_t p = 0; p < ad; ++p)
    for (std::size_t x = 0; x < cd; ++x) unit[p * cd + x] = a.unit()[p] * c.counit().at(0, x);
  return Algebra::unchecked(std::move(mult), std::move(unit));
}

Matrix convolve(const Coalgebra& c, const Algebra& a, const Matrix& f, const Matrix& g) {
  // m_A . (f (x) g) . Delta_C
  return a.mult() * tensor_map(f, g) * c.comult();
}

Matrix evaluation_map(const Field& field, std::size_t dim_v, std::size_t dim_w) {
  Matrix e(field, dim_w, dim_w * dim_v * dim_v);
  for (std::size_t w = 0; w < dim_w; ++w)
    for (std::size_t v = 0; v < dim_v; ++v) e.at(w, (w * dim_v + v) * dim_v + v) = field.one();
  return e;
}

Matrix hom_module_action(const Comodule& x, const Module& m) {
  require_same_field(x.field(), m.field(), "hom_module");
  const Field& f = m.field();
  const std::size_t xd = x.dim(), cd = x.over().dim(), md = m.dim(), ad = m.over().dim();
  const std::size_t hd = md * xd;
  const std::size_t conv = ad * cd;
  // (E_{a,c} . E_{m,x})(x'') = delta[(x,c), x''] mu(a (x) m)
  Matrix action(f, hd, conv * hd);
  for (std::size_t xx = 0; xx < xd; ++xx)
    for (std::size_t cc = 0; cc < cd; ++cc)
      for (std::size_t x2 = 0; x2 < xd; ++x2) {
        const Scalar& delta = x.coaction().at(xx * cd + cc, x2);
        if (delta.is_zero()) continue;
        for (std::size_t aa = 0; aa < ad; ++aa)
          for (std::size_t mm = 0; mm < md; ++mm)
            for (std::size_t m2 = 0; m2 < md; ++m2) {
              const Scalar& mu = m.action().at(m2, aa * md + mm);
              if (mu.is_zero()) continue;
              action.at(m2 * xd + x2, (aa * cd + cc) * hd + (mm * xd + xx)) += delta * mu;
            }
      }
  return action;
}

Module hom_module(const Comodule& x, const Module& m) {
  Algebra conv = convolution_algebra(x.over(), m.over());
  return Module(std::move(conv), hom_module_action(x, m));
}

Matrix lax_structure_psi(const Field& field, std::size_t a, std::size_t b, std::size_t a2, std::size_t b2) {
  const std::size_t n = a * b * a2 * b2;
  Matrix psi(field, n, n);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < a2; ++k)
        for (std::size_t l = 0; l < b2; ++l) {
          std::size_t src = (j * a + i) * (b2 * a2) + (l * a2 + k);
          std::size_t dst = (j * b2 + l) * (a * a2) + (i * a2 + k);
          psi.at(dst, src) = field.one();
        }
  return psi;
}

Matrix lax_unit_psi0(const Field& field) { return Matrix::identity(field, 1); }

}  // namespace measuringkit
