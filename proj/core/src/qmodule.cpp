#include "measuringkit/qmodule.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "detail.hpp"
#include "measuringkit/families.hpp"
#include "measuringkit/fragment_engine.hpp"

namespace measuringkit {

using detail::compare;
using detail::require_shape;

Matrix ell_to_ellbar(const Matrix& ell, std::size_t dim_m, std::size_t dim_x, std::size_t dim_n) {
  require_shape(ell, dim_n * dim_x, dim_m, "ell_to_ellbar");
  Matrix out(ell.field(), dim_n, dim_m * dim_x);
  for (std::size_t n = 0; n < dim_n; ++n)
    for (std::size_t m = 0; m < dim_m; ++m)
      for (std::size_t x = 0; x < dim_x; ++x) out.at(n, m * dim_x + x) = ell.at(n * dim_x + x, m);
  return out;
}

Matrix ellbar_to_ell(const Matrix& ellbar, std::size_t dim_m, std::size_t dim_x, std::size_t dim_n) {
  require_shape(ellbar, dim_n, dim_m * dim_x, "ellbar_to_ell");
  Matrix out(ellbar.field(), dim_n * dim_x, dim_m);
  for (std::size_t n = 0; n < dim_n; ++n)
    for (std::size_t m = 0; m < dim_m; ++m)
      for (std::size_t x = 0; x < dim_x; ++x) out.at(n * dim_x + x, m) = ellbar.at(n, m * dim_x + x);
  return out;
}

namespace {

void require_boundaries(const Measuring& base, const Comodule& x, const Module& m, const Module& n,
                        const Matrix& ellbar) {
  if (!(x.over() == base.coalgebra())) throw std::invalid_argument("module measuring: comodule is not over the base coalgebra");
  if (!(m.over() == base.source())) throw std::invalid_argument("module measuring: source module is not over the base source");
  if (!(n.over() == base.target())) throw std::invalid_argument("module measuring: target module is not over the base target");
  require_shape(ellbar, n.dim(), m.dim() * x.dim(), "module measuring");
}

// A (x) M (x) X -> N, (a, m, x) |-> sum sigma(x_(1) (x) a) . lbar(m (x) x_(0)),
// for the coaction delta : X -> X (x) C.
Matrix coaction_side(const Matrix& sigma, const Matrix& coaction, std::size_t dim_c, const Module& m, const Module& n,
                     const Matrix& ellbar) {
  const Field& f = sigma.field();
  const std::size_t da = m.over().dim(), dm = m.dim(), dx = coaction.cols();
  Matrix spread = tensor_map(Matrix::identity(f, da * dm), coaction);
  Matrix perm = tensor_permutation(f, {da, dm, dx, dim_c}, {3, 0, 1, 2});
  return n.action() * tensor_map(sigma, ellbar) * perm * spread;
}

Comodule direct_sum_comodule(const Comodule& x, const Comodule& y) {
  const Field& f = x.field();
  const std::size_t dx = x.dim(), dy = y.dim(), cx = x.over().dim(), cy = y.over().dim(), cs = cx + cy;
  Matrix co(f, (dx + dy) * cs, dx + dy);
  for (std::size_t col = 0; col < dx; ++col)
    for (std::size_t r = 0; r < dx; ++r)
      for (std::size_t c = 0; c < cx; ++c) co.at(r * cs + c, col) = x.coaction().at(r * cx + c, col);
  for (std::size_t col = 0; col < dy; ++col)
    for (std::size_t r = 0; r < dy; ++r)
      for (std::size_t c = 0; c < cy; ++c) co.at((dx + r) * cs + cx + c, dx + col) = y.coaction().at(r * cy + c, col);
  return Comodule::unchecked(direct_sum_coalgebra(x.over(), y.over()), std::move(co));
}

Matrix block_injection(const Field& f, std::size_t total, std::size_t offset, std::size_t dim) {
  Matrix m(f, total, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(offset + i, i) = f.one();
  return m;
}

}  // namespace

LawReport check_module_measuring(const Measuring& base, const Comodule& x, const Module& m, const Module& n,
                                 const Matrix& ellbar) {
  require_boundaries(base, x, m, n, ellbar);
  const Field& f = ellbar.field();
  const std::size_t da = m.over().dim(), dm = m.dim(), dx = x.dim();
  LawReport r;
  const Matrix lhs = ellbar * tensor_map(m.action(), Matrix::identity(f, dx));
  const Matrix rhs1 = coaction_side(base.sigma(), x.coaction(), x.over().dim(), m, n, ellbar);
  compare(r, "impdiag1: lbar((a.m) (x) x) = sum sigma(x_1 (x) a) . lbar(m (x) x_0)", lhs, rhs1, {da, dm, dx});

  // The same through alpha : A -> Hom(D, B) and the factorization h : C -> D.
  UniversalFragment pf = p_fragment(base);
  const CoalgebraMorphism& h = pf.provenance().front().quotient;
  Comodule hx = corestrict(h, x);
  const Matrix rhs2 =
      coaction_side(pf.universal_measuring().sigma(), hx.coaction(), pf.carrier().dim(), m, n, ellbar);
  compare(r, "impdiag2: through alpha and the fragment factorization", lhs, rhs2, {da, dm, dx});
  compare(r, "impdiag1 and impdiag2 agree", rhs1, rhs2, {da, dm, dx});
  return r;
}

LawReport check_module_measuring(const ModuleMeasuring& mm) {
  return check_module_measuring(mm.base(), mm.comodule(), mm.module_src(), mm.module_tgt(), mm.ellbar());
}

ModuleMeasuring::ModuleMeasuring(Measuring base, Comodule comodule, Module module_src, Module module_tgt, Matrix ellbar)
    : base_(std::move(base)),
      comodule_(std::move(comodule)),
      module_src_(std::move(module_src)),
      module_tgt_(std::move(module_tgt)),
      ellbar_(std::move(ellbar)) {
  LawReport r = check_module_measuring(*this);
  if (!r.ok()) throw LawViolation("not a module measuring", std::move(r));
}

ModuleMeasuring::ModuleMeasuring(Measuring base, Comodule comodule, Module module_src, Module module_tgt, Matrix ellbar,
                                 Unchecked)
    : base_(std::move(base)),
      comodule_(std::move(comodule)),
      module_src_(std::move(module_src)),
      module_tgt_(std::move(module_tgt)),
      ellbar_(std::move(ellbar)) {}

ModuleMeasuring ModuleMeasuring::unchecked(Measuring base, Comodule comodule, Module module_src, Module module_tgt,
                                           Matrix ellbar) {
  return ModuleMeasuring(std::move(base), std::move(comodule), std::move(module_src), std::move(module_tgt),
                         std::move(ellbar), Unchecked{});
}

Matrix ModuleMeasuring::ell() const {
  return ellbar_to_ell(ellbar_, module_src_.dim(), comodule_.dim(), module_tgt_.dim());
}

Module alpha_module_structure(const UniversalFragment& pfrag, const Comodule& x, const Module& n) {
  if (!(x.over() == pfrag.carrier())) throw std::invalid_argument("alpha_module_structure: comodule is not over the fragment carrier");
  if (!(n.over() == pfrag.target())) throw std::invalid_argument("alpha_module_structure: module is not over the target algebra");
  const Field& f = n.field();
  Matrix action = hom_module_action(x, n) *
                  tensor_map(pfrag.universal_measuring().rho(), Matrix::identity(f, n.dim() * x.dim()));
  return Module(pfrag.source(), std::move(action));
}

ComoduleFragment::ComoduleFragment(UniversalFragment base, Comodule carrier, Module module_src, Module module_tgt,
                                   Matrix universal_ellbar, std::vector<QProvenance> provenance)
    : base_(std::move(base)),
      carrier_(std::move(carrier)),
      module_src_(std::move(module_src)),
      module_tgt_(std::move(module_tgt)),
      universal_ellbar_(std::move(universal_ellbar)),
      provenance_(std::move(provenance)) {}

ModuleMeasuring ComoduleFragment::universal() const {
  return ModuleMeasuring::unchecked(base_.universal_measuring(), carrier_, module_src_, module_tgt_, universal_ellbar_);
}

ComoduleFragment q_fragment(const ModuleMeasuring& mm) {
  const Field& f = mm.ellbar().field();
  const Comodule& x = mm.comodule();
  const std::size_t dm = mm.module_src().dim(), dn = mm.module_tgt().dim(), dx = x.dim();

  UniversalFragment pf = p_fragment(mm.base());
  const CoalgebraMorphism& h = pf.provenance().front().quotient;
  const Comodule hx = corestrict(h, x);
  const std::size_t dd = pf.carrier().dim();

  // Seeds x |-> nu_n(lbar(m (x) x)), closed under (s . xi)(x) = sum xi(x_0) s(x_1)
  // for s running over the dual basis of D = S*.
  std::vector<Vector> seeds;
  for (std::size_t m = 0; m < dm; ++m)
    for (std::size_t n = 0; n < dn; ++n) {
      Vector xi(dx, f.zero());
      for (std::size_t k = 0; k < dx; ++k) xi[k] = mm.ellbar().at(n, m * dx + k);
      seeds.push_back(std::move(xi));
    }
  Subspace t = Subspace::span(f, dx, seeds);
  std::vector<Vector> frontier = t.basis();
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& xi : frontier)
      for (std::size_t d = 0; d < dd; ++d) {
        Vector moved(dx, f.zero());
        for (std::size_t col = 0; col < dx; ++col)
          for (std::size_t x0 = 0; x0 < dx; ++x0) moved[col] += xi[x0] * hx.coaction().at(x0 * dd + d, col);
        if (!t.contains(moved)) {
          t = t.sum(Subspace::span(f, dx, {moved}));
          next.push_back(std::move(moved));
        }
      }
    frontier = std::move(next);
  }

  const std::size_t dt = t.dim();
  Matrix projection = dt ? t.basis_matrix() : Matrix(f, 0, dx);
  Matrix section(f, dx, dt);
  if (dt) {
    auto s = solve_matrix(projection, Matrix::identity(f, dt));
    if (!s) throw std::logic_error("q_fragment: projection without a section");
    section = std::move(*s);
  }
  Comodule carrier(pf.carrier(), tensor_map(projection, Matrix::identity(f, dd)) * hx.coaction() * section);
  Matrix ellbar = mm.ellbar() * tensor_map(Matrix::identity(f, dm), section);
  ComodMorphism quotient = ComodMorphism::unchecked(x, carrier, h, projection);
  return ComoduleFragment(std::move(pf), std::move(carrier), mm.module_src(), mm.module_tgt(), std::move(ellbar),
                          {QProvenance{mm, std::move(quotient)}});
}

ComoduleFragment merge_q_fragments(const ComoduleFragment& f1, const ComoduleFragment& f2) {
  if (!(f1.module_src() == f2.module_src()) || !(f1.module_tgt() == f2.module_tgt()))
    throw std::invalid_argument("merge_q_fragments: ambient modules differ");
  const Field& fld = f1.universal_ellbar().field();
  const std::size_t dm = f1.module_src().dim(), y1 = f1.carrier().dim(), y2 = f2.carrier().dim(), ys = y1 + y2;

  Measuring base = direct_sum_measuring(f1.base().universal_measuring(), f2.base().universal_measuring());
  Comodule sum = direct_sum_comodule(f1.carrier(), f2.carrier());
  Matrix ellbar(fld, f1.module_tgt().dim(), dm * ys);
  for (std::size_t n = 0; n < ellbar.rows(); ++n)
    for (std::size_t m = 0; m < dm; ++m) {
      for (std::size_t y = 0; y < y1; ++y) ellbar.at(n, m * ys + y) = f1.universal_ellbar().at(n, m * y1 + y);
      for (std::size_t y = 0; y < y2; ++y) ellbar.at(n, m * ys + y1 + y) = f2.universal_ellbar().at(n, m * y2 + y);
    }
  ComoduleFragment merged =
      q_fragment(ModuleMeasuring::unchecked(base, sum, f1.module_src(), f1.module_tgt(), std::move(ellbar)));
  const ComodMorphism& q = merged.provenance().front().quotient;

  // Keep the richer provenance of the merged P-fragment; its universal
  // measuring is the one q_fragment just built.
  UniversalFragment pbase = merge_fragments(f1.base(), f2.base());
  if (!(pbase.universal_measuring() == merged.base().universal_measuring()))
    throw std::logic_error("merge_q_fragments: merged P-fragments disagree");

  const Coalgebra& dsum = sum.over();
  const std::size_t d1 = f1.carrier().over().dim(), d2 = f2.carrier().over().dim();
  ComodMorphism in1 = ComodMorphism::unchecked(
      f1.carrier(), sum, CoalgebraMorphism::unchecked(f1.carrier().over(), dsum, block_injection(fld, d1 + d2, 0, d1)),
      block_injection(fld, ys, 0, y1));
  ComodMorphism in2 = ComodMorphism::unchecked(
      f2.carrier(), sum, CoalgebraMorphism::unchecked(f2.carrier().over(), dsum, block_injection(fld, d1 + d2, d1, d2)),
      block_injection(fld, ys, y1, y2));
  ComodMorphism to1 = compose_comod(q, in1), to2 = compose_comod(q, in2);

  std::vector<QProvenance> provenance;
  for (const auto& p : f1.provenance()) provenance.push_back({p.source, compose_comod(to1, p.quotient)});
  for (const auto& p : f2.provenance()) provenance.push_back({p.source, compose_comod(to2, p.quotient)});
  return ComoduleFragment(std::move(pbase), merged.carrier(), merged.module_src(), merged.module_tgt(),
                          merged.universal_ellbar(), std::move(provenance));
}

std::optional<ComodMorphism> factor_q(const ModuleMeasuring& mm, const ComoduleFragment& qf) {
  if (!(mm.module_src() == qf.module_src()) || !(mm.module_tgt() == qf.module_tgt()) ||
      !(mm.base().source() == qf.base().source()) || !(mm.base().target() == qf.base().target()))
    throw std::invalid_argument("factor_q: ambient mismatch");
  auto h = factor_through_fragment(mm.base(), qf.base());
  if (!h) return std::nullopt;

  const Field& f = mm.ellbar().field();
  const Comodule& x = mm.comodule();
  const Comodule& y = qf.carrier();
  const Comodule hx = corestrict(*h, x);
  const std::size_t dm = mm.module_src().dim(), dn = mm.module_tgt().dim(), dx = x.dim(), dy = y.dim(),
                    dd = y.over().dim();
  const Matrix& u = qf.universal_ellbar();

  // Unknowns k[y, x] at y * dx + x.
  const std::size_t rows_a = dn * dm * dx, rows_b = dy * dd * dx;
  Matrix sys(f, rows_a + rows_b, dy * dx);
  Vector rhs(rows_a + rows_b, f.zero());
  for (std::size_t n = 0; n < dn; ++n)
    for (std::size_t m = 0; m < dm; ++m)
      for (std::size_t xi = 0; xi < dx; ++xi) {
        const std::size_t row = (n * dm + m) * dx + xi;
        for (std::size_t yi = 0; yi < dy; ++yi) sys.at(row, yi * dx + xi) = u.at(n, m * dy + yi);
        rhs[row] = mm.ellbar().at(n, m * dx + xi);
      }
  for (std::size_t yo = 0; yo < dy; ++yo)
    for (std::size_t e = 0; e < dd; ++e)
      for (std::size_t xi = 0; xi < dx; ++xi) {
        const std::size_t row = rows_a + (yo * dd + e) * dx + xi;
        for (std::size_t yi = 0; yi < dy; ++yi) sys.at(row, yi * dx + xi) += y.coaction().at(yo * dd + e, yi);
        for (std::size_t xm = 0; xm < dx; ++xm) sys.at(row, yo * dx + xm) -= hx.coaction().at(xm * dd + e, xi);
      }

  Matrix k(f, dy, dx);
  if (dy * dx > 0) {
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    if (!kernel(sys).empty()) return std::nullopt;
    for (std::size_t yi = 0; yi < dy; ++yi)
      for (std::size_t xi = 0; xi < dx; ++xi) k.at(yi, xi) = (*sol)[yi * dx + xi];
  } else {
    for (const auto& v : rhs)
      if (!v.is_zero()) return std::nullopt;
  }
  if (!check_comod_morphism(x, y, *h, k).ok()) return std::nullopt;
  return ComodMorphism::unchecked(x, y, *h, std::move(k));
}

ComoduleFragment QFragmentRegistry::merge(const Key& key, const ComoduleFragment& fragment) {
  std::unique_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, fragment);
    return fragment;
  }
  ComoduleFragment merged = merge_q_fragments(it->second, fragment);
  it->second = merged;
  return merged;
}

std::optional<ComoduleFragment> QFragmentRegistry::find(const Key& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::size_t QFragmentRegistry::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

LawReport comod_internal_hom_check(const std::vector<Comodule>& tests, const Comodule& y, const Comodule& z,
                                   const InternalHomCandidate& candidate) {
  const Comodule& h = candidate.hom;
  const Field& f = h.field();
  if (!(candidate.evaluation_coalgebra.source() == tensor_coalgebra(h.over(), y.over())) ||
      !(candidate.evaluation_coalgebra.target() == z.over()))
    throw std::invalid_argument("comod_internal_hom_check: evaluation coalgebra map has the wrong boundary");
  require_shape(candidate.evaluation, z.dim(), h.dim() * y.dim(), "comod_internal_hom_check");

  LawReport r;
  r.merge(check_comodule(h), "candidate ");
  const Comodule hy = tensor_comod_objects(h, y);
  r.merge(check_comod_morphism(hy, z, candidate.evaluation_coalgebra, candidate.evaluation), "evaluation ");

  const std::size_t dy = y.dim(), dd = y.over().dim();
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const Comodule& w = tests[i];
    const std::vector<ComodMorphism> into_hom = all_comod_morphisms(w, h);
    const std::vector<ComodMorphism> from_tensor = all_comod_morphisms(tensor_comod_objects(w, y), z);
    std::set<std::string> target;
    for (const auto& m : from_tensor) target.insert(m.comap().map().to_string() + "|" + m.map().to_string());
    std::set<std::string> images;
    std::size_t outside = 0;
    for (const auto& m : into_hom) {
      Matrix map = candidate.evaluation * tensor_map(m.map(), Matrix::identity(f, dy));
      Matrix comap = candidate.evaluation_coalgebra.map() * tensor_map(m.comap().map(), Matrix::identity(f, dd));
      std::string key = comap.to_string() + "|" + map.to_string();
      if (!target.count(key)) ++outside;
      images.insert(std::move(key));
    }
    const bool ok = outside == 0 && images.size() == into_hom.size() && images.size() == target.size();
    r.add("transposition bijective on test object " + std::to_string(i), ok,
          "|Comod(W,H)| = " + std::to_string(into_hom.size()) + ", |Comod(W(x)Y,Z)| = " +
              std::to_string(target.size()) + ", distinct images = " + std::to_string(images.size()) +
              ", images outside Comod(W(x)Y,Z) = " + std::to_string(outside));
  }
  return r;
}

CoalgHomFragment coalg_hom_fragment(const Coalgebra& c, const Coalgebra& d, const CoalgebraMorphism& phi) {
  if (!(phi.source() == tensor_coalgebra(c, d)))
    throw std::invalid_argument("coalg_hom_fragment: phi does not run from C (x) D");
  const Coalgebra& e = phi.target();
  const std::size_t dc = c.dim(), ddim = d.dim(), de = e.dim();
  std::vector<Vector> seeds;
  for (std::size_t i = 0; i < ddim; ++i)
    for (std::size_t j = 0; j < de; ++j) {
      Vector s(dc, c.field().zero());
      for (std::size_t x = 0; x < dc; ++x) s[x] = phi.map().at(j, x * ddim + i);
      seeds.push_back(std::move(s));
    }
  FunctionalQuotient q = quotient_by_functionals(c, seeds);
  const std::size_t dk = q.quotient.dim();
  Matrix ev(c.field(), de, dk * ddim);
  for (std::size_t i = 0; i < ddim; ++i)
    for (std::size_t j = 0; j < de; ++j) {
      Vector coords = dk ? q.induced(seeds[i * de + j]) : Vector{};
      for (std::size_t k = 0; k < dk; ++k) ev.at(j, k * ddim + i) = coords[k];
    }
  CoalgebraMorphism quotient = CoalgebraMorphism::unchecked(c, q.quotient, q.projection);
  CoalgebraMorphism evaluation(tensor_coalgebra(q.quotient, d), e, std::move(ev));
  return CoalgHomFragment{d, e, q.quotient, std::move(quotient), std::move(evaluation)};
}

std::optional<CoalgebraMorphism> factor_through_coalg_hom(const Coalgebra& c2, const CoalgebraMorphism& psi,
                                                          const CoalgHomFragment& frag) {
  if (!(psi.source() == tensor_coalgebra(c2, frag.d)) || !(psi.target() == frag.e))
    throw std::invalid_argument("factor_through_coalg_hom: psi does not run from C' (x) D to E");
  const std::size_t dd = frag.d.dim(), de = frag.e.dim(), dk = frag.carrier.dim(), dc = c2.dim();
  const Field& f = c2.field();
  std::vector<std::pair<Vector, Vector>> pairs;
  for (std::size_t i = 0; i < dd; ++i)
    for (std::size_t j = 0; j < de; ++j) {
      Vector on_frag(dk, f.zero()), on_c(dc, f.zero());
      for (std::size_t k = 0; k < dk; ++k) on_frag[k] = frag.evaluation.map().at(j, k * dd + i);
      for (std::size_t x = 0; x < dc; ++x) on_c[x] = psi.map().at(j, x * dd + i);
      pairs.emplace_back(std::move(on_frag), std::move(on_c));
    }
  FunctionalFactor ff = factor_by_functionals(c2, frag.carrier, pairs);
  if (!ff.map || !ff.unique) return std::nullopt;
  const Matrix& h = *ff.map;
  if (!check_coalgebra_morphism(c2, frag.carrier, h).ok()) return std::nullopt;
  if (!(frag.evaluation.map() * tensor_map(h, Matrix::identity(f, dd)) == psi.map())) return std::nullopt;
  return CoalgebraMorphism::unchecked(c2, frag.carrier, h);
}

CoeffCoalgebra coeff_coalgebra(const Comodule& x) {
  const Field& f = x.field();
  const Coalgebra& c = x.over();
  const std::size_t dx = x.dim(), dc = c.dim();
  std::vector<Vector> coefficients;
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dx; ++j) {
      Vector v(dc, f.zero());
      for (std::size_t k = 0; k < dc; ++k) v[k] = x.coaction().at(i * dc + k, j);
      coefficients.push_back(std::move(v));
    }
  Subspace span = Subspace::span(f, dc, coefficients);
  const std::size_t dk = span.dim();
  Matrix inclusion = Matrix::from_columns(f, dc, span.basis());
  if (dk == 0) {
    Coalgebra zero(Matrix(f, 0, 0), Matrix(f, 1, 0));
    return CoeffCoalgebra{zero, inclusion, Comodule(zero, Matrix(f, 0, dx))};
  }
  // Delta(c_ij) = sum_k c_ik (x) c_kj, so the span is a subcoalgebra.
  auto comult = solve_matrix(tensor_map(inclusion, inclusion), c.comult() * inclusion);
  auto coaction = solve_matrix(tensor_map(Matrix::identity(f, dx), inclusion), x.coaction());
  if (!comult || !coaction) throw std::logic_error("coeff_coalgebra: coefficients do not span a subcoalgebra");
  Coalgebra sub(std::move(*comult), c.counit() * inclusion);
  return CoeffCoalgebra{sub, std::move(inclusion), Comodule(sub, std::move(*coaction))};
}

}  // namespace measuringkit
