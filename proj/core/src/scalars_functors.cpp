#include "measuringkit/scalars_functors.hpp"

#include <stdexcept>

namespace measuringkit {

namespace {

void compare(LawReport& report, const std::string& check, const Matrix& lhs, const Matrix& rhs,
             const std::vector<std::size_t>& in_dims) {
  for (std::size_t c = 0; c < lhs.cols(); ++c)
    for (std::size_t r = 0; r < lhs.rows(); ++r)
      if (!(lhs.at(r, c) == rhs.at(r, c))) {
        report.fail(check, "basis " + format_index(split_index(c, in_dims)) + ", output coordinate " +
                               std::to_string(r));
        return;
      }
  report.pass(check);
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(what) + ": map has shape " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

Matrix coordinates_matrix(const Subspace& s, const std::vector<Vector>& columns) {
  Matrix out(s.field(), s.dim(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) out.set_column(j, s.coordinates(columns[j]));
  return out;
}

}  // namespace

LawReport check_algebra_morphism(const Algebra& source, const Algebra& target, const Matrix& map) {
  require_shape(map, target.dim(), source.dim(), "algebra morphism");
  LawReport r;
  compare(r, "preserves multiplication", map * source.mult(), target.mult() * tensor_map(map, map),
          {source.dim(), source.dim()});
  compare(r, "preserves unit", map * source.unit_map(), target.unit_map(), {1});
  return r;
}

LawReport check_coalgebra_morphism(const Coalgebra& source, const Coalgebra& target, const Matrix& map) {
  require_shape(map, target.dim(), source.dim(), "coalgebra morphism");
  LawReport r;
  compare(r, "preserves comultiplication", target.comult() * map, tensor_map(map, map) * source.comult(),
          {source.dim()});
  compare(r, "preserves counit", target.counit() * map, source.counit(), {source.dim()});
  return r;
}

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  LawReport r = check_algebra_morphism(source_, target_, map_);
  if (!r.ok()) throw LawViolation("not an algebra morphism", std::move(r));
}

AlgebraMorphism::AlgebraMorphism(Algebra source, Algebra target, Matrix map, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

AlgebraMorphism AlgebraMorphism::unchecked(Algebra source, Algebra target, Matrix map) {
  return AlgebraMorphism(std::move(source), std::move(target), std::move(map), Unchecked{});
}

AlgebraMorphism AlgebraMorphism::identity(const Algebra& a) {
  return unchecked(a, a, Matrix::identity(a.field(), a.dim()));
}

AlgebraMorphism AlgebraMorphism::unit_of(const Algebra& a) {
  Algebra k(Matrix::identity(a.field(), 1), {a.field().one()});
  return unchecked(std::move(k), a, a.unit_map());
}

CoalgebraMorphism::CoalgebraMorphism(Coalgebra source, Coalgebra target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  LawReport r = check_coalgebra_morphism(source_, target_, map_);
  if (!r.ok()) throw LawViolation("not a coalgebra morphism", std::move(r));
}

CoalgebraMorphism::CoalgebraMorphism(Coalgebra source, Coalgebra target, Matrix map, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

CoalgebraMorphism CoalgebraMorphism::unchecked(Coalgebra source, Coalgebra target, Matrix map) {
  return CoalgebraMorphism(std::move(source), std::move(target), std::move(map), Unchecked{});
}

CoalgebraMorphism CoalgebraMorphism::identity(const Coalgebra& c) {
  return unchecked(c, c, Matrix::identity(c.field(), c.dim()));
}

CoalgebraMorphism CoalgebraMorphism::counit_of(const Coalgebra& c) {
  Coalgebra k(Matrix::identity(c.field(), 1), Matrix::identity(c.field(), 1));
  return unchecked(c, std::move(k), c.counit());
}

AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first) {
  if (!(first.target() == second.source())) throw std::invalid_argument("compose: algebra boundary mismatch");
  return AlgebraMorphism::unchecked(first.source(), second.target(), second.map() * first.map());
}

CoalgebraMorphism compose(const CoalgebraMorphism& second, const CoalgebraMorphism& first) {
  if (!(first.target() == second.source())) throw std::invalid_argument("compose: coalgebra boundary mismatch");
  return CoalgebraMorphism::unchecked(first.source(), second.target(), second.map() * first.map());
}

bool is_module_map(const Module& m, const Module& n, const Matrix& k) {
  require_shape(k, n.dim(), m.dim(), "module map");
  const Matrix ida = Matrix::identity(m.field(), m.over().dim());
  return k * m.action() == n.action() * tensor_map(ida, k);
}

bool is_comodule_map(const Comodule& x, const Comodule& y, const Matrix& k) {
  require_shape(k, y.dim(), x.dim(), "comodule map");
  const Matrix idc = Matrix::identity(x.field(), x.over().dim());
  return y.coaction() * k == tensor_map(k, idc) * x.coaction();
}

Module restrict(const AlgebraMorphism& f, const Module& n) {
  if (!(n.over() == f.target())) throw std::invalid_argument("restrict: module is not over the target algebra");
  Matrix action = n.action() * tensor_map(f.map(), Matrix::identity(n.field(), n.dim()));
  return Module::unchecked(f.source(), std::move(action));
}

Comodule corestrict(const CoalgebraMorphism& g, const Comodule& x) {
  if (!(x.over() == g.source())) {
    throw std::invalid_argument("corestrict: comodule is not over the source coalgebra");
  }
  Matrix coaction = tensor_map(Matrix::identity(x.field(), x.dim()), g.map()) * x.coaction();
  return Comodule::unchecked(g.target(), std::move(coaction));
}

Extension extend(const AlgebraMorphism& f, const Module& m) {
  if (!(m.over() == f.source())) throw std::invalid_argument("extend: module is not over the source algebra");
  const Algebra& b = f.target();
  const Field& fld = m.field();
  const std::size_t bd = b.dim(), md = m.dim(), n = bd * md;
  const Matrix idb = Matrix::identity(fld, bd);
  const Matrix idm = Matrix::identity(fld, md);

  // b (x) a.m  -  b f(a) (x) m, as maps B (x) A (x) M -> B (x) M
  Matrix lhs = tensor_map(idb, m.action());
  Matrix rhs = tensor_map(b.mult() * tensor_map(idb, f.map()), idm);
  Matrix diff = lhs - rhs;
  std::vector<Vector> relations;
  for (std::size_t c = 0; c < diff.cols(); ++c) relations.push_back(diff.column(c));
  Subspace rel = Subspace::span(fld, n, relations);

  Matrix q = rel.quotient_projection();
  Matrix s = rel.quotient_section();
  Matrix action = q * tensor_map(b.mult(), idm) * tensor_map(idb, s);
  Matrix unit = q * tensor_map(b.unit_map(), idm);
  return Extension{Module::unchecked(b, std::move(action)), std::move(q), std::move(s), std::move(unit)};
}

Matrix extend_map(const Extension& src, const Extension& tgt, const Matrix& u) {
  const Field& f = u.field();
  const std::size_t bd = src.module.over().dim();
  return tgt.projection * tensor_map(Matrix::identity(f, bd), u) * src.section;
}

Matrix extension_counit(const Extension& ext_of_restricted, const Module& n) {
  return n.action() * ext_of_restricted.section;
}

Matrix extension_transpose(const Extension& ext, const Module& n, const Matrix& psi) {
  const std::size_t bd = ext.module.over().dim();
  return n.action() * tensor_map(Matrix::identity(psi.field(), bd), psi) * ext.section;
}

Matrix extension_untranspose(const Extension& ext, const Matrix& phi) { return phi * ext.unit; }

LawReport check_extension_adjunction(const AlgebraMorphism& f, const Module& m, const Module& n) {
  LawReport r;
  const Field& fld = m.field();
  // epsilon_{extend M} . extend(eta_M) = id
  Extension em = extend(f, m);
  Module rem = restrict(f, em.module);
  Extension erem = extend(f, rem);
  Matrix lhs1 = extension_counit(erem, em.module) * extend_map(em, erem, em.unit);
  r.add("extension triangle at M", lhs1 == Matrix::identity(fld, em.module.dim()), "composite is not the identity");
  // restrict(epsilon_N) . eta_{restrict N} = id
  Module rn = restrict(f, n);
  Extension ern = extend(f, rn);
  Matrix lhs2 = extension_counit(ern, n) * ern.unit;
  r.add("extension triangle at N", lhs2 == Matrix::identity(fld, n.dim()), "composite is not the identity");
  r.add("unit is a module map", is_module_map(m, rem, em.unit), "eta_M fails equivariance");
  r.add("counit is a module map", is_module_map(ern.module, n, extension_counit(ern, n)),
        "epsilon_N fails equivariance");
  return r;
}

Coinduction coinduce(const AlgebraMorphism& f, const Module& m) {
  if (!(m.over() == f.source())) throw std::invalid_argument("coinduce: module is not over the source algebra");
  const Algebra& a = f.source();
  const Algebra& b = f.target();
  const Field& fld = m.field();
  const std::size_t ad = a.dim(), bd = b.dim(), md = m.dim(), hd = md * bd;

  // For each (a, b, m''): sum_b' [f(a) e_b]_{b'} h[m'', b'] - sum_m mu[m'', a m] h[m, b] = 0
  std::vector<Vector> rows;
  for (std::size_t ai = 0; ai < ad; ++ai) {
    Vector fa = f.map().column(ai);
    for (std::size_t bi = 0; bi < bd; ++bi) {
      Vector prod = b.multiply(fa, unit_vector(fld, bd, bi));
      for (std::size_t m2 = 0; m2 < md; ++m2) {
        Vector row(hd, fld.zero());
        for (std::size_t b2 = 0; b2 < bd; ++b2) row[m2 * bd + b2] += prod[b2];
        for (std::size_t mi = 0; mi < md; ++mi) row[mi * bd + bi] -= m.action().at(m2, ai * md + mi);
        rows.push_back(std::move(row));
      }
    }
  }
  Subspace k = rows.empty() ? Subspace::full(fld, hd)
                            : Subspace::span(fld, hd, kernel(Matrix::from_rows(fld, hd, rows)));
  const std::size_t kd = k.dim();

  // (b' . h)[m, b] = sum_b'' h[m, b''] mult[b'', b b']
  Matrix action(fld, kd, bd * kd);
  for (std::size_t bp = 0; bp < bd; ++bp) {
    for (std::size_t j = 0; j < kd; ++j) {
      const Vector& h = k.basis()[j];
      Vector out(hd, fld.zero());
      for (std::size_t mi = 0; mi < md; ++mi)
        for (std::size_t bi = 0; bi < bd; ++bi)
          for (std::size_t b2 = 0; b2 < bd; ++b2) {
            const Scalar& c = b.mult().at(b2, bi * bd + bp);
            if (!c.is_zero()) out[mi * bd + bi] += h[mi * bd + b2] * c;
          }
      Vector coords = k.coordinates(out);
      for (std::size_t i = 0; i < kd; ++i) action.at(i, bp * kd + j) = coords[i];
    }
  }
  Matrix inclusion = kd ? k.basis_matrix().transpose() : Matrix(fld, hd, 0);
  return Coinduction{Module::unchecked(b, std::move(action)), std::move(inclusion), std::move(k)};
}

Matrix coinduction_counit(const Coinduction& co, const Algebra& b) {
  const Field& f = b.field();
  const std::size_t bd = b.dim();
  const std::size_t md = co.inclusion.rows() / bd;
  // h |-> h(1)
  Matrix eval_one(f, md, md * bd);
  for (std::size_t mi = 0; mi < md; ++mi)
    for (std::size_t bi = 0; bi < bd; ++bi) eval_one.at(mi, mi * bd + bi) = b.unit()[bi];
  return eval_one * co.inclusion;
}

Matrix coinduction_transpose(const Coinduction& co, const Module& n, const Matrix& u) {
  const Field& f = n.field();
  const Algebra& b = n.over();
  const std::size_t bd = b.dim(), nd = n.dim(), md = u.rows();
  std::vector<Vector> cols;
  for (std::size_t ni = 0; ni < nd; ++ni) {
    Vector h(md * bd, f.zero());
    for (std::size_t bi = 0; bi < bd; ++bi) {
      Vector bn = n.action().column(bi * nd + ni);
      Vector image = u.apply(bn);
      for (std::size_t mi = 0; mi < md; ++mi) h[mi * bd + bi] = image[mi];
    }
    cols.push_back(std::move(h));
  }
  return coordinates_matrix(co.subspace, cols);
}

Matrix coinduction_untranspose(const Coinduction& co, const Algebra& b, const Matrix& v) {
  return coinduction_counit(co, b) * v;
}

Cotensor cotensor(const Comodule& y, const CoalgebraMorphism& g) {
  if (!(y.over() == g.target())) throw std::invalid_argument("cotensor: comodule is not over the target coalgebra");
  const Coalgebra& c = g.source();
  const Field& f = y.field();
  const std::size_t yd = y.dim(), cd = c.dim(), n = yd * cd;
  const Matrix idc = Matrix::identity(f, cd);
  const Matrix idy = Matrix::identity(f, yd);
  Matrix lhs = tensor_map(y.coaction(), idc);
  Matrix rhs = tensor_map(idy, tensor_map(g.map(), idc) * c.comult());
  Subspace k = Subspace::span(f, n, kernel(lhs - rhs));
  const std::size_t kd = k.dim();

  // (1 (x) Delta_C) v_j = sum_i v_i (x) c_i
  Matrix co = tensor_map(idy, c.comult());
  Matrix coaction(f, kd * cd, kd);
  for (std::size_t j = 0; j < kd; ++j) {
    Vector w = co.apply(k.basis()[j]);  // index (y*C + c)*C + c'
    for (std::size_t cp = 0; cp < cd; ++cp) {
      Vector column(n, f.zero());
      for (std::size_t i = 0; i < n; ++i) column[i] = w[i * cd + cp];
      Vector coords = k.coordinates(column);
      for (std::size_t i = 0; i < kd; ++i) coaction.at(i * cd + cp, j) = coords[i];
    }
  }
  Matrix inclusion = kd ? k.basis_matrix().transpose() : Matrix(f, n, 0);
  return Cotensor{Comodule::unchecked(c, std::move(coaction)), std::move(inclusion), std::move(k)};
}

Matrix cotensor_transpose(const Cotensor& ct, const Comodule& x, const Matrix& k) {
  const std::size_t cd = x.over().dim();
  Matrix image = tensor_map(k, Matrix::identity(k.field(), cd)) * x.coaction();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < image.cols(); ++j) cols.push_back(image.column(j));
  return coordinates_matrix(ct.subspace, cols);
}

Matrix cotensor_untranspose(const Cotensor& ct, const Comodule& y, const Matrix& l) {
  const Coalgebra& c = ct.comodule.over();
  return tensor_map(Matrix::identity(l.field(), y.dim()), c.counit()) * ct.inclusion * l;
}

}  // namespace measuringkit
