#include "measuringkit/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace measuringkit {

namespace {

Echelon reduce_prime(const Matrix& m) {
  const std::uint64_t p = m.field().characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c).residue();

  auto inv = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t s = inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * s % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }

  Matrix out(m.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j]) out.at(i, j) = m.field().from_int(static_cast<std::int64_t>(a[i][j]));
  return {std::move(out), std::move(pivots)};
}

Echelon reduce_rational(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row so the forward phase runs over Z.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class d = m.at(r, c).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m.at(r, c).rational();
      a[r][c] = q.get_num() * (l / q.get_den());
    }
  }

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  std::vector<std::vector<mpq_class>> q(pivots.size(), std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const mpz_class& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      q[i][j] = mpq_class(a[i][j], lead);
      q[i][j].canonicalize();
    }
  }
  for (std::size_t i = pivots.size(); i-- > 0;) {
    for (std::size_t k = 0; k < i; ++k) {
      mpq_class f = q[k][pivots[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = pivots[i]; j < cols; ++j) q[k][j] -= f * q[i][j];
    }
  }

  Matrix out(m.field(), rows, cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = Scalar(m.field(), q[i][j]);
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(const Matrix& m) {
  return m.field().is_finite() ? reduce_prime(m) : reduce_rational(m);
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Vector> solve(const LinearMap& map, const Vector& target) {
  if (target.size() != map.rows()) {
    throw DimensionError("solve: target length " + std::to_string(target.size()) + " but map has " +
                         std::to_string(map.rows()) + " rows");
  }
  Matrix b(map.field(), map.rows(), 1);
  b.set_column(0, target);
  auto x = solve_matrix(map, b);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve_matrix: row count mismatch");
  const std::size_t n = a.cols();
  Echelon e = row_reduce(hstack(a, b));
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t pc = e.pivots[i];
    if (pc >= n) return std::nullopt;  // pivot in the augmented block
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pc, j) = e.reduced.at(i, n + j);
  }
  return x;
}

std::vector<Vector> kernel(const LinearMap& map) {
  Echelon e = row_reduce(map);
  const std::size_t n = map.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(map.field(), n);
    v[free] = map.field().one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve_matrix(m, Matrix::identity(m.field(), m.rows()));
  if (!x || !(m * *x == Matrix::identity(m.field(), m.rows()))) return std::nullopt;
  return x;
}

Matrix tensor_map(const Matrix& f, const Matrix& g) {
  if (!(f.field() == g.field())) throw FieldError("tensor_map over different fields");
  Matrix out(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Scalar& x = f.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Scalar& y = g.at(k, l);
          if (!y.is_zero()) out.at(i * g.rows() + k, j * g.cols() + l) = x * y;
        }
    }
  return out;
}

Vector tensor_vector(const Vector& a, const Vector& b) {
  if (a.empty() || b.empty()) return {};
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

Matrix swap_map(const Field& field, std::size_t m, std::size_t n) {
  return tensor_permutation(field, {m, n}, {1, 0});
}

Matrix tensor_permutation(const Field& field, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& order) {
  const std::size_t k = dims.size();
  if (order.size() != k) throw DimensionError("tensor_permutation: order has wrong length");
  std::vector<bool> seen(k, false);
  for (auto o : order) {
    if (o >= k || seen[o]) throw DimensionError("tensor_permutation: order is not a permutation");
    seen[o] = true;
  }
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> out_dims(k);
  for (std::size_t j = 0; j < k; ++j) out_dims[j] = dims[order[j]];

  Matrix out(field, total, total);
  std::vector<std::size_t> digits(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t f = k; f-- > 0;) {
      digits[f] = rest % dims[f];
      rest /= dims[f];
    }
    std::size_t target = 0;
    for (std::size_t j = 0; j < k; ++j) target = target * out_dims[j] + digits[order[j]];
    out.at(target, idx) = field.one();
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldError("direct_sum over different fields");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column count mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
  }
  return out;
}

Subspace::Subspace(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(field, ambient_dim);
  if (vectors.empty()) return s;
  for (const auto& v : vectors)
    if (v.size() != ambient_dim) throw DimensionError("span: vector length does not match ambient dimension");
  Echelon e = row_reduce(Matrix::from_rows(field, ambient_dim, vectors));
  for (std::size_t i = 0; i < e.rank(); ++i) s.basis_.push_back(e.reduced.row(i));
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(field, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis_); }

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("contains: vector length does not match ambient dimension");
  // Reduce v against the echelon basis; in the subspace iff nothing remains.
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_[i][j].is_zero()) r[j] -= f * basis_[i][j];
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DimensionError("coordinates: vector is not in the subspace");
  Vector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_compatible(other);
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersection(const Subspace& other) const {
  require_compatible(other);
  // (S ∩ T)^⊥ = S^⊥ + T^⊥
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return full(field_, ambient_);
  return span(field_, ambient_, kernel(basis_matrix()));
}

Matrix Subspace::quotient_projection() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) free.push_back(j);
  // v ↦ free coordinates of v - Σ v_p s_p
  Matrix out(field_, free.size(), ambient_);
  for (std::size_t q = 0; q < free.size(); ++q) {
    out.at(q, free[q]) = field_.one();
    for (std::size_t i = 0; i < basis_.size(); ++i) out.at(q, pivots_[i]) = -basis_[i][free[q]];
  }
  return out;
}

Matrix Subspace::quotient_section() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) cols.push_back(unit_vector(field_, ambient_, j));
  return Matrix::from_columns(field_, ambient_, cols);
}

bool Subspace::operator==(const Subspace& other) const {
  return field_ == other.field_ && ambient_ == other.ambient_ && basis_ == other.basis_;
}

void Subspace::require_compatible(const Subspace& other) const {
  if (!(field_ == other.field_)) throw FieldError("subspaces over different fields");
  if (ambient_ != other.ambient_) throw DimensionError("subspaces of different ambient dimension");
}

Subspace multiplicative_closure(const Field& field, std::size_t ambient_dim, const std::vector<Vector>& seed,
                                const BilinearProduct& product, const std::optional<Vector>& unit) {
  std::vector<Vector> gens = seed;
  if (unit) gens.push_back(*unit);
  Subspace current = Subspace::span(field, ambient_dim, gens);
  // Each pass either grows the space or proves closure, so there are at most
  // ambient_dim + 1 passes.
  while (true) {
    const std::vector<Vector> basis = current.basis();
    Subspace grown = current;
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        Vector p = product(x, y);
        if (!grown.contains(p)) grown = grown.sum(Subspace::span(field, ambient_dim, {p}));
      }
    }
    if (grown.dim() == current.dim()) return current;
    current = std::move(grown);
  }
}

Subspace multiplicative_closure(const std::vector<Vector>& seed, const Matrix& product, const Vector& unit) {
  const std::size_t n = product.rows();
  if (product.cols() != n * n) throw DimensionError("multiplicative_closure: product must be n x n^2");
  BilinearProduct mult = [&product](const Vector& a, const Vector& b) {
    return product.apply(tensor_vector(a, b));
  };
  if (n == 0) return Subspace(product.field(), 0);
  return multiplicative_closure(product.field(), n, seed, mult, unit);
}

}  // namespace measuringkit
