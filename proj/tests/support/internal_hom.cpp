#include "internal_hom.hpp"

#include "measuringkit/families.hpp"

namespace testkit {

using namespace measuringkit;

namespace {

Matrix cofree_evaluation(const Field& f, std::size_t dim_v, std::size_t dim_y, std::size_t dim_e, std::size_t hom_dim) {
  Matrix ev(f, dim_v * dim_e, hom_dim * dim_e * dim_y);
  for (std::size_t v = 0; v < dim_v; ++v)
    for (std::size_t y = 0; y < dim_y; ++y) {
      const std::size_t phi = v * dim_y + y;
      if (phi >= hom_dim) continue;
      for (std::size_t e = 0; e < dim_e; ++e) ev.at(v * dim_e + e, (phi * dim_e + e) * dim_y + y) = f.one();
    }
  return ev;
}

CoalgebraMorphism drop_unit(const Coalgebra& e) {
  return CoalgebraMorphism(tensor_coalgebra(e, ground_coalgebra(e.field())), e, Matrix::identity(e.field(), e.dim()));
}

}  // namespace

InternalHomCandidate unit_internal_hom(const Comodule& z) {
  return InternalHomCandidate{z, drop_unit(z.over()), Matrix::identity(z.field(), z.dim())};
}

InternalHomCandidate cofree_internal_hom(std::size_t dim_v, std::size_t dim_y, const Coalgebra& e) {
  const Field& f = e.field();
  const std::size_t hom = dim_v * dim_y;
  return InternalHomCandidate{cofree_comodule(hom, e), drop_unit(e), cofree_evaluation(f, dim_v, dim_y, e.dim(), hom)};
}

std::vector<std::pair<std::string, InternalHomCandidate>> cofree_perturbations(std::size_t dim_v, std::size_t dim_y,
                                                                               const Coalgebra& e) {
  const Field& f = e.field();
  const std::size_t de = e.dim(), hom = dim_v * dim_y;
  const InternalHomCandidate good = cofree_internal_hom(dim_v, dim_y, e);
  std::vector<std::pair<std::string, InternalHomCandidate>> out;
  auto flip = [&](Matrix m, std::size_t r, std::size_t c) {
    m.at(r, c) += f.one();
    return m;
  };

  InternalHomCandidate c = good;
  c.evaluation = flip(good.evaluation, 0, 0);
  out.emplace_back("evaluation entry flipped", c);

  c = good;
  c.evaluation = flip(good.evaluation, good.evaluation.rows() - 1, 0);
  out.emplace_back("evaluation off-diagonal entry flipped", c);

  c = good;
  c.evaluation = Matrix(f, good.evaluation.rows(), good.evaluation.cols());
  out.emplace_back("zero evaluation", c);

  c = good;
  for (std::size_t col = 0; col < c.evaluation.cols(); ++col)
    for (std::size_t v = 0; v < dim_v; ++v)
      for (std::size_t k = 1; k < de; ++k) c.evaluation.at(v * de + k, col) = f.zero();
  out.emplace_back("evaluation forgets the non-grouplike part", c);

  c = good;
  c.hom = Comodule::unchecked(e, flip(good.hom.coaction(), 0, 0));
  out.emplace_back("coaction entry perturbed", c);

  c = good;
  c.hom = Comodule::unchecked(e, flip(good.hom.coaction(), good.hom.coaction().rows() - 1, 0));
  out.emplace_back("coaction off-diagonal entry perturbed", c);

  c = good;
  Vector g(de, f.zero());
  g[0] = f.one();
  c.hom = trivial_comodule(e, g, good.hom.dim());
  out.emplace_back("valid but wrong coaction", c);

  c = good;
  c.hom = cofree_comodule(hom - 1, e);
  c.evaluation = cofree_evaluation(f, dim_v, dim_y, de, hom - 1);
  out.emplace_back("dimension dropped", c);

  c = good;
  c.hom = cofree_comodule(hom + 1, e);
  c.evaluation = cofree_evaluation(f, dim_v, dim_y, de, hom + 1);
  out.emplace_back("dimension added", c);

  c = good;
  Matrix to_g(f, de, de);
  for (std::size_t k = 0; k < de; ++k) to_g.at(0, k) = e.counit().at(0, k);
  c.evaluation_coalgebra = CoalgebraMorphism(good.evaluation_coalgebra.source(), e, to_g);
  out.emplace_back("evaluation coalgebra map collapsed to a grouplike", c);
  return out;
}

std::vector<Comodule> internal_hom_test_objects(const Field& f) {
  const Coalgebra k = ground_coalgebra(f), g2 = grouplike_coalgebra(f, 2), dn = dual_numbers_coalgebra(f);
  return {trivial_comodule(k, Vector{f.one()}, 1), trivial_comodule(k, Vector{f.one()}, 2), regular_comodule(g2),
          regular_comodule(dn), trivial_comodule(dn, Vector{f.one(), f.zero()}, 1)};
}

}  // namespace testkit
