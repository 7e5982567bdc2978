#include "measuringkit/measuring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "measuringkit/families.hpp"
#include "measuringkit/fragment_engine.hpp"

namespace measuringkit {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(what) + ": shape " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

void require_same_ambient(const Algebra& a1, const Algebra& b1, const Algebra& a2, const Algebra& b2,
                          const char* what) {
  if (!(a1 == a2) || !(b1 == b2)) throw std::invalid_argument(std::string(what) + ": ambient algebras differ");
}

}  // namespace

LawReport check_measuring(const Matrix& sigma, const Coalgebra& c, const Algebra& a, const Algebra& b) {
  const std::size_t cd = c.dim(), ad = a.dim(), bd = b.dim();
  require_shape(sigma, bd, cd * ad, "measuring");
  if (!(sigma.field() == c.field()) || !(a.field() == c.field()) || !(b.field() == c.field())) {
    throw FieldError("measuring: inputs over different fields");
  }
  const Field& f = sigma.field();
  LawReport r;
  const Matrix idc = Matrix::identity(f, cd);
  const Matrix ida = Matrix::identity(f, ad);

  // sigma(c, a a') = sum sigma(c_1, a) sigma(c_2, a')
  Matrix lhs = sigma * tensor_map(idc, a.mult());
  Matrix spread = tensor_permutation(f, {cd, cd, ad, ad}, {0, 2, 1, 3}) *
                  tensor_map(c.comult(), tensor_map(ida, ida));
  Matrix rhs = b.mult() * tensor_map(sigma, sigma) * spread;
  bool mult_ok = true;
  for (std::size_t col = 0; col < lhs.cols() && mult_ok; ++col)
    for (std::size_t row = 0; row < bd; ++row)
      if (!(lhs.at(row, col) == rhs.at(row, col))) {
        auto idx = split_index(col, {cd, ad, ad});
        r.fail("multiplicativity", "basis pair (a" + std::to_string(idx[1]) + ", a" + std::to_string(idx[2]) +
                                       ") at c" + std::to_string(idx[0]));
        mult_ok = false;
        break;
      }
  if (mult_ok) r.pass("multiplicativity");

  // sigma(c, 1) = epsilon(c) 1
  Matrix lhs_u = sigma * tensor_map(idc, a.unit_map());
  Matrix rhs_u = b.unit_map() * c.counit();
  bool unit_ok = true;
  for (std::size_t col = 0; col < cd && unit_ok; ++col)
    for (std::size_t row = 0; row < bd; ++row)
      if (!(lhs_u.at(row, col) == rhs_u.at(row, col))) {
        r.fail("unitality", "basis pair (c" + std::to_string(col) + ", 1)");
        unit_ok = false;
        break;
      }
  if (unit_ok) r.pass("unitality");
  return r;
}

Matrix sigma_to_rho(const Matrix& sigma, std::size_t dim_c, std::size_t dim_a, std::size_t dim_b) {
  require_shape(sigma, dim_b, dim_c * dim_a, "sigma_to_rho");
  Matrix rho(sigma.field(), dim_b * dim_c, dim_a);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t c = 0; c < dim_c; ++c)
      for (std::size_t a = 0; a < dim_a; ++a) rho.at(b * dim_c + c, a) = sigma.at(b, c * dim_a + a);
  return rho;
}

Matrix rho_to_sigma(const Matrix& rho, std::size_t dim_c, std::size_t dim_a, std::size_t dim_b) {
  require_shape(rho, dim_b * dim_c, dim_a, "rho_to_sigma");
  Matrix sigma(rho.field(), dim_b, dim_c * dim_a);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t c = 0; c < dim_c; ++c)
      for (std::size_t a = 0; a < dim_a; ++a) sigma.at(b, c * dim_a + a) = rho.at(b * dim_c + c, a);
  return sigma;
}

Measuring::Measuring(Coalgebra c, Algebra a, Algebra b, Matrix sigma)
    : c_(std::move(c)), a_(std::move(a)), b_(std::move(b)), sigma_(std::move(sigma)) {
  LawReport r = check_measuring(sigma_, c_, a_, b_);
  if (!r.ok()) throw LawViolation("not a measuring", std::move(r));
}

Measuring::Measuring(Coalgebra c, Algebra a, Algebra b, Matrix sigma, Unchecked)
    : c_(std::move(c)), a_(std::move(a)), b_(std::move(b)), sigma_(std::move(sigma)) {}

Measuring Measuring::unchecked(Coalgebra c, Algebra a, Algebra b, Matrix sigma) {
  return Measuring(std::move(c), std::move(a), std::move(b), std::move(sigma), Unchecked{});
}

Vector Measuring::functional(std::size_t i, std::size_t j) const {
  const std::size_t cd = c_.dim(), ad = a_.dim();
  Vector v;
  v.reserve(cd);
  for (std::size_t c = 0; c < cd; ++c) v.push_back(sigma_.at(j, c * ad + i));
  return v;
}

Measuring algebra_map_measuring(const AlgebraMorphism& u) {
  return Measuring(ground_coalgebra(u.source().field()), u.source(), u.target(), u.map());
}

Measuring evaluation_measuring(const Algebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Matrix sigma(f, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) sigma.at(0, i * n + i) = f.one();
  return Measuring(dual_coalgebra(a), a, ground_algebra(f), std::move(sigma));
}

Measuring derivation_measuring(const Algebra& a, const Matrix& derivation) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  require_shape(derivation, n, n, "derivation");
  Matrix sigma(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    sigma.at(i, i) = f.one();
    for (std::size_t k = 0; k < n; ++k) sigma.at(k, n + i) = derivation.at(k, i);
  }
  return Measuring(dual_numbers_coalgebra(f), a, a, std::move(sigma));
}

Measuring direct_sum_measuring(const Measuring& m1, const Measuring& m2) {
  require_same_ambient(m1.source(), m1.target(), m2.source(), m2.target(), "direct_sum_measuring");
  Matrix sigma = hstack(m1.sigma(), m2.sigma());
  return Measuring::unchecked(direct_sum_coalgebra(m1.coalgebra(), m2.coalgebra()), m1.source(), m1.target(),
                              std::move(sigma));
}

std::string PresentedAlgebra::generator_name(std::size_t g) const {
  return "x[" + std::to_string(g / dim_b) + "," + std::to_string(g % dim_b) + "]";
}

PresentedAlgebra present_measuring_algebra(const Algebra& a, const Algebra& b) {
  const Field& f = a.field();
  const std::size_t ad = a.dim(), bd = b.dim();
  PresentedAlgebra pa{f, ad, bd, {}, {}};
  auto add_term = [&](NcPolynomial& p, const Word& w, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, inserted] = p.emplace(w, s);
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero()) p.erase(it);
    }
  };
  // sum_k mu^k_{ii'} x_kj - sum_{p,q} mu_B^j_{pq} x_ip x_i'q
  for (std::size_t i = 0; i < ad; ++i)
    for (std::size_t i2 = 0; i2 < ad; ++i2)
      for (std::size_t j = 0; j < bd; ++j) {
        NcPolynomial p;
        for (std::size_t k = 0; k < ad; ++k) add_term(p, {k * bd + j}, a.mult().at(k, i * ad + i2));
        for (std::size_t p1 = 0; p1 < bd; ++p1)
          for (std::size_t q1 = 0; q1 < bd; ++q1)
            add_term(p, {i * bd + p1, i2 * bd + q1}, -b.mult().at(j, p1 * bd + q1));
        pa.relations.push_back(std::move(p));
        pa.relation_names.push_back("mult(" + std::to_string(i) + "," + std::to_string(i2) + ";" +
                                    std::to_string(j) + ")");
      }
  // sum_i eta^i x_ij - beta_j(1_B) 1
  for (std::size_t j = 0; j < bd; ++j) {
    NcPolynomial p;
    for (std::size_t i = 0; i < ad; ++i) add_term(p, {i * bd + j}, a.unit()[i]);
    add_term(p, {}, -b.unit()[j]);
    pa.relations.push_back(std::move(p));
    pa.relation_names.push_back("unit(" + std::to_string(j) + ")");
  }
  return pa;
}

Vector evaluate(const NcPolynomial& p, const Algebra& target, const std::vector<Vector>& images) {
  Vector total = zero_vector(target.field(), target.dim());
  for (const auto& [word, coeff] : p) {
    Vector value = target.unit();
    for (auto g : word) value = target.multiply(value, images.at(g));
    total = add(total, scale(coeff, value));
  }
  return total;
}

LawReport check_representation(const PresentedAlgebra& pa, const Algebra& target,
                               const std::vector<Vector>& images) {
  if (images.size() != pa.generator_count()) throw DimensionError("check_representation: wrong image count");
  LawReport r;
  for (std::size_t k = 0; k < pa.relations.size(); ++k) {
    if (!is_zero(evaluate(pa.relations[k], target, images))) {
      r.fail("relations", "relation " + pa.relation_names[k] + " does not vanish");
      return r;
    }
  }
  r.pass("relations");
  return r;
}

Representation measuring_to_rep(const Measuring& m) {
  const std::size_t ad = m.source().dim(), bd = m.target().dim();
  Algebra target = dual_algebra(m.coalgebra());
  std::vector<Vector> images;
  for (std::size_t i = 0; i < ad; ++i)
    for (std::size_t j = 0; j < bd; ++j) images.push_back(m.functional(i, j));
  LawReport report = check_representation(present_measuring_algebra(m.source(), m.target()), target, images);
  return Representation{std::move(target), std::move(images), std::move(report)};
}

Matrix rep_to_sigma(const std::vector<Vector>& images, std::size_t dim_c, std::size_t dim_a, std::size_t dim_b) {
  if (images.size() != dim_a * dim_b || images.empty()) throw DimensionError("rep_to_sigma: wrong image count");
  Matrix sigma(images[0].at(0).field(), dim_b, dim_c * dim_a);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t c = 0; c < dim_c; ++c) sigma.at(j, c * dim_a + i) = images[i * dim_b + j].at(c);
  return sigma;
}

UniversalFragment::UniversalFragment(Measuring universal, std::vector<FragmentProvenance> provenance)
    : universal_(std::move(universal)), provenance_(std::move(provenance)) {}

UniversalFragment p_fragment(const Measuring& m) {
  const std::size_t ad = m.source().dim(), bd = m.target().dim();
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < ad; ++i)
    for (std::size_t j = 0; j < bd; ++j) seeds.push_back(m.functional(i, j));
  FunctionalQuotient q = quotient_by_functionals(m.coalgebra(), seeds);
  const std::size_t dd = q.quotient.dim();
  Matrix sigma(m.sigma().field(), bd, dd * ad);
  for (std::size_t i = 0; i < ad; ++i)
    for (std::size_t j = 0; j < bd; ++j) {
      Vector coords = dd ? q.induced(seeds[i * bd + j]) : Vector{};
      for (std::size_t k = 0; k < dd; ++k) sigma.at(j, k * ad + i) = coords[k];
    }
  Measuring universal = Measuring::unchecked(q.quotient, m.source(), m.target(), std::move(sigma));
  CoalgebraMorphism quotient = CoalgebraMorphism::unchecked(m.coalgebra(), q.quotient, q.projection);
  return UniversalFragment(std::move(universal), {FragmentProvenance{m, std::move(quotient)}});
}

UniversalFragment merge_fragments(const UniversalFragment& f1, const UniversalFragment& f2) {
  require_same_ambient(f1.source(), f1.target(), f2.source(), f2.target(), "merge_fragments");
  Measuring sum = direct_sum_measuring(f1.universal_measuring(), f2.universal_measuring());
  UniversalFragment merged = p_fragment(sum);
  const Matrix& q = merged.provenance().front().quotient.map();
  const Field& fld = q.field();
  const std::size_t d1 = f1.carrier().dim(), d2 = f2.carrier().dim(), dm = merged.carrier().dim();

  // Inclusions D1 -> D1 + D2 and D2 -> D1 + D2 followed by the quotient.
  Matrix in1(fld, d1 + d2, d1), in2(fld, d1 + d2, d2);
  for (std::size_t i = 0; i < d1; ++i) in1.at(i, i) = fld.one();
  for (std::size_t i = 0; i < d2; ++i) in2.at(d1 + i, i) = fld.one();
  Matrix to_merged1 = d1 ? q * in1 : Matrix(fld, dm, 0);
  Matrix to_merged2 = d2 ? q * in2 : Matrix(fld, dm, 0);

  std::vector<FragmentProvenance> provenance;
  for (const auto& p : f1.provenance()) {
    provenance.push_back({p.source, CoalgebraMorphism::unchecked(p.source.coalgebra(), merged.carrier(),
                                                                 to_merged1 * p.quotient.map())});
  }
  for (const auto& p : f2.provenance()) {
    provenance.push_back({p.source, CoalgebraMorphism::unchecked(p.source.coalgebra(), merged.carrier(),
                                                                 to_merged2 * p.quotient.map())});
  }
  return UniversalFragment(merged.universal_measuring(), std::move(provenance));
}

std::optional<CoalgebraMorphism> factor_through_fragment(const Measuring& m, const UniversalFragment& f) {
  require_same_ambient(m.source(), m.target(), f.source(), f.target(), "factor_through_fragment");
  const std::size_t ad = m.source().dim(), bd = m.target().dim();
  const Measuring& u = f.universal_measuring();
  std::vector<std::pair<Vector, Vector>> pairs;
  for (std::size_t i = 0; i < ad; ++i)
    for (std::size_t j = 0; j < bd; ++j) pairs.emplace_back(u.functional(i, j), m.functional(i, j));
  FunctionalFactor ff = factor_by_functionals(m.coalgebra(), f.carrier(), pairs);
  if (!ff.map || !ff.unique) return std::nullopt;
  const Matrix& h = *ff.map;
  if (!check_coalgebra_morphism(m.coalgebra(), f.carrier(), h).ok()) return std::nullopt;
  Matrix through = u.sigma() * tensor_map(h, Matrix::identity(h.field(), ad));
  if (!(through == m.sigma())) return std::nullopt;
  return CoalgebraMorphism::unchecked(m.coalgebra(), f.carrier(), h);
}

namespace {

// Minimal polynomial of s in the algebra, monic, coefficients low degree first.
std::vector<Scalar> minimal_polynomial(const Algebra& alg, const Vector& s) {
  const Field& f = alg.field();
  std::vector<Vector> powers{alg.unit()};
  while (true) {
    Vector next = alg.multiply(powers.back(), s);
    Matrix basis = Matrix::from_columns(f, alg.dim(), powers);
    if (auto coeffs = solve(basis, next)) {
      std::vector<Scalar> poly;
      for (const auto& c : *coeffs) poly.push_back(-c);
      poly.push_back(f.one());
      return poly;
    }
    powers.push_back(std::move(next));
  }
}

Scalar evaluate_poly(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc = x.field().zero();
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > mpz_class("1000000000000")) throw EnumerationUnsupported("enumeration unsupported: coefficient too large");
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Scalar> roots(const std::vector<Scalar>& poly, const Field& f) {
  std::vector<Scalar> out;
  if (f.is_finite()) {
    const std::uint32_t p = f.characteristic();
    if (p > (1u << 20)) throw EnumerationUnsupported("enumeration unsupported: characteristic above 2^20");
    for (std::uint32_t v = 0; v < p; ++v) {
      Scalar x = f.from_int(v);
      if (evaluate_poly(poly, x).is_zero()) out.push_back(x);
    }
    return out;
  }
  // Rational root theorem on the integer-scaled polynomial.
  mpz_class l = 1;
  for (const auto& c : poly) {
    mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& c : poly) ints.push_back(c.numerator() * (l / c.denominator()));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) out.push_back(f.zero());
  if (low + 1 >= ints.size()) return out;
  for (const auto& num : positive_divisors(ints[low]))
    for (const auto& den : positive_divisors(ints.back()))
      for (int sign : {1, -1}) {
        Scalar x = f.from_fraction(sign * num, den);
        if (evaluate_poly(poly, x).is_zero() &&
            std::find(out.begin(), out.end(), x) == out.end()) {
          out.push_back(x);
        }
      }
  return out;
}

}  // namespace

std::vector<Vector> grouplike_elements(const Coalgebra& c) {
  const Field& f = c.field();
  const std::size_t n = c.dim();
  if (n == 0) return {};
  if (f.is_rational() && n > 4) {
    throw EnumerationUnsupported("enumeration unsupported: grouplike search over Q needs dimension <= 4, got " +
                                 std::to_string(n));
  }
  // A grouplike x is a character of C*, so its i-th coordinate is a root of
  // the minimal polynomial of the i-th dual basis functional.
  Algebra dual = dual_algebra(c);
  std::vector<std::vector<Scalar>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    candidates.push_back(roots(minimal_polynomial(dual, unit_vector(f, n, i)), f));
    if (candidates.back().empty()) return {};
  }
  std::vector<Vector> out;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    Vector x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(candidates[i][choice[i]]);
    if (dot(f, c.counit_vector(), x).is_one() && c.comult().apply(x) == tensor_vector(x, x)) out.push_back(x);
    std::size_t pos = 0;
    while (pos < n && ++choice[pos] == candidates[pos].size()) choice[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

std::vector<AlgebraMorphism> grouplike_points(const UniversalFragment& f) {
  const Measuring& u = f.universal_measuring();
  const std::size_t ad = u.source().dim();
  std::vector<AlgebraMorphism> out;
  for (const auto& x : grouplike_elements(f.carrier())) {
    Matrix xcol = Matrix::from_columns(x.at(0).field(), x.size(), {x});
    Matrix map = u.sigma() * tensor_map(xcol, Matrix::identity(u.sigma().field(), ad));
    out.emplace_back(u.source(), u.target(), std::move(map));
  }
  return out;
}

LawReport lemma_triangle_check(const Measuring& m, const UniversalFragment& f) {
  LawReport r;
  auto h = factor_through_fragment(m, f);
  if (!h) {
    r.fail("factorization", "measuring does not factor through the fragment");
    return r;
  }
  const Field& fld = m.sigma().field();
  const std::size_t ad = m.source().dim(), bd = m.target().dim(), cd = m.coalgebra().dim(),
                    dd = f.carrier().dim();
  const Matrix rho = m.rho();                               // A -> Hom(C, B)
  const Matrix alpha = f.universal_measuring().rho();       // A -> Hom(D, B)
  const Matrix hom_h = tensor_map(Matrix::identity(fld, bd), h->map().transpose());  // Hom(D,B) -> Hom(C,B)
  const Matrix fbar = m.sigma() * swap_map(fld, ad, cd);   // A (x) C -> B

  r.add("left triangle f = Hom(h, B) alpha", hom_h * alpha == rho, "transposes disagree");
  Matrix upper = evaluation_map(fld, dd, bd) * tensor_map(Matrix::identity(fld, bd * dd), h->map()) *
                 tensor_map(alpha, Matrix::identity(fld, cd));
  r.add("upper path e (1 (x) h)(alpha (x) 1)", upper == fbar, "composite differs from fbar");
  Matrix middle = evaluation_map(fld, cd, bd) * tensor_map(hom_h, Matrix::identity(fld, cd)) *
                  tensor_map(alpha, Matrix::identity(fld, cd));
  r.add("middle path e (Hom(h,1) (x) 1)(alpha (x) 1)", middle == fbar, "composite differs from fbar");
  Matrix lower = evaluation_map(fld, cd, bd) * tensor_map(rho, Matrix::identity(fld, cd));
  r.add("lower path e (f (x) 1)", lower == fbar, "composite differs from fbar");
  return r;
}

Coalgebra finite_dual(const Algebra& a) { return dual_coalgebra(a); }

UniversalFragment FragmentRegistry::merge(const Key& key, const UniversalFragment& fragment) {
  std::unique_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, fragment);
    return fragment;
  }
  UniversalFragment merged = merge_fragments(it->second, fragment);
  it->second = merged;
  return merged;
}

std::optional<UniversalFragment> FragmentRegistry::find(const Key& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t FragmentRegistry::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace measuringkit
