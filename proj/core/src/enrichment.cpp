#include "measuringkit/enrichment.hpp"

#include <stdexcept>

#include "measuringkit/families.hpp"

namespace measuringkit {

Matrix action_alpha(const Field& field, std::size_t dim_c, std::size_t dim_d, std::size_t dim_a) {
  const std::size_t n = dim_c * dim_d * dim_a;
  Matrix out(field, n, n);
  // Elementary map c (x) d |-> a sits at a * (C D) + c * D + d; its image
  // c |-> (d |-> a) sits at (a * D + d) * C + c.
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t c = 0; c < dim_c; ++c)
      for (std::size_t d = 0; d < dim_d; ++d)
        out.at((a * dim_d + d) * dim_c + c, a * dim_c * dim_d + c * dim_d + d) = field.one();
  return out;
}

Matrix action_lambda(const Field& field, std::size_t dim_a) { return Matrix::identity(field, dim_a); }

namespace {

void check_iso(LawReport& r, const std::string& name, const Algebra& src, const Algebra& tgt, const Matrix& m) {
  LawReport morph = check_algebra_morphism(src, tgt, m);
  r.merge(morph, name + " ");
  r.add(name + " invertible", m.rows() == m.cols() && rank(m) == m.rows(), "not a linear isomorphism");
}

}  // namespace

LawReport check_action_axioms(const Coalgebra& x, const Coalgebra& y, const Coalgebra& z, const Algebra& a) {
  const Field& f = a.field();
  const std::size_t dx = x.dim(), dy = y.dim(), dz = z.dim(), da = a.dim();
  LawReport r;

  Coalgebra xy = tensor_coalgebra(x, y), yz = tensor_coalgebra(y, z);
  Algebra hom_z_a = convolution_algebra(z, a);
  Algebra hom_yz_a = convolution_algebra(yz, a);

  check_iso(r, "alpha(X,Y,A)", convolution_algebra(xy, a), convolution_algebra(x, convolution_algebra(y, a)),
            action_alpha(f, dx, dy, da));
  check_iso(r, "alpha(X(x)Y,Z,A)", convolution_algebra(tensor_coalgebra(xy, z), a), convolution_algebra(xy, hom_z_a),
            action_alpha(f, dx * dy, dz, da));
  check_iso(r, "alpha(X,Y,Hom(Z,A))", convolution_algebra(xy, hom_z_a),
            convolution_algebra(x, convolution_algebra(y, hom_z_a)), action_alpha(f, dx, dy, dz * da));
  check_iso(r, "alpha(X,Y(x)Z,A)", convolution_algebra(tensor_coalgebra(x, yz), a), convolution_algebra(x, hom_yz_a),
            action_alpha(f, dx, dy * dz, da));
  check_iso(r, "lambda(A)", convolution_algebra(ground_coalgebra(f), a), a, action_lambda(f, da));

  // The associator (X (x) Y) (x) Z -> X (x) (Y (x) Z) is the identity on
  // flattened indices, and so are the unitors, so a * 1, l * 1 and r * 1 are
  // identities; they still have to agree as coalgebras.
  r.add("associator is a coalgebra map", tensor_coalgebra(xy, z) == tensor_coalgebra(x, yz),
        "(X(x)Y)(x)Z and X(x)(Y(x)Z) differ on flattened indices");

  Matrix top = action_alpha(f, dx, dy, dz * da) * action_alpha(f, dx * dy, dz, da);
  Matrix bottom = tensor_map(action_alpha(f, dy, dz, da), Matrix::identity(f, dx)) * action_alpha(f, dx, dy * dz, da);
  r.add("pentagon", top == bottom, "alpha . alpha != (1 * alpha) . alpha . (a * 1)");

  Matrix left = action_lambda(f, dx * da) * action_alpha(f, 1, dx, da);
  r.add("left unit triangle", left == Matrix::identity(f, dx * da), "lambda . alpha != l * 1");
  Matrix right = tensor_map(action_lambda(f, da), Matrix::identity(f, dx)) * action_alpha(f, dx, 1, da);
  r.add("right unit triangle", right == Matrix::identity(f, dx * da), "(1 * lambda) . alpha != r * 1");
  return r;
}

LawReport check_action_axioms(const Coalgebra& c, const Coalgebra& d, const Algebra& a) {
  return check_action_axioms(c, d, c, a);
}

ConvolutionIso convolution_iso_beta(const Coalgebra& c, const Coalgebra& d, const Algebra& a) {
  const Field& f = a.field();
  Algebra lhs = convolution_algebra(tensor_coalgebra(c, d), a);
  Algebra rhs = convolution_algebra(c, convolution_algebra(d, a));
  Matrix alpha = action_alpha(f, c.dim(), d.dim(), a.dim());
  Matrix beta = alpha.transpose();  // inverse of a permutation
  LawReport r;
  r.merge(check_algebra_morphism(lhs, rhs, alpha), "alpha ");
  r.merge(check_algebra_morphism(rhs, lhs, beta), "beta ");
  const Matrix id = Matrix::identity(f, alpha.rows());
  r.add("beta . alpha = 1", beta * alpha == id, "left inverse fails");
  r.add("alpha . beta = 1", alpha * beta == id, "right inverse fails");
  return ConvolutionIso{AlgebraMorphism::unchecked(lhs, rhs, alpha), AlgebraMorphism::unchecked(rhs, lhs, beta),
                        std::move(r)};
}

Measuring compose_measurings(const Measuring& outer, const Measuring& inner) {
  if (!(inner.target() == outer.source()))
    throw std::invalid_argument("compose_measurings: inner target is not the outer source");
  Coalgebra dc = tensor_coalgebra(outer.coalgebra(), inner.coalgebra());
  Matrix sigma = outer.sigma() * tensor_map(Matrix::identity(outer.sigma().field(), outer.coalgebra().dim()), inner.sigma());
  return Measuring(std::move(dc), inner.source(), outer.target(), std::move(sigma));
}

Measuring enriched_unit(const Algebra& a) { return algebra_map_measuring(AlgebraMorphism::identity(a)); }

EnrichedComposite enriched_composition(const UniversalFragment& outer, const UniversalFragment& inner) {
  UniversalFragment frag = p_fragment(compose_measurings(outer.universal_measuring(), inner.universal_measuring()));
  CoalgebraMorphism q = frag.provenance().front().quotient;
  return EnrichedComposite{std::move(frag), std::move(q)};
}

LawReport check_fragment_isomorphism(const UniversalFragment& x, const UniversalFragment& y) {
  LawReport r;
  auto h = factor_through_fragment(x.universal_measuring(), y);
  auto k = factor_through_fragment(y.universal_measuring(), x);
  r.add("forward factorization", h.has_value(), "first fragment does not factor through the second");
  r.add("backward factorization", k.has_value(), "second fragment does not factor through the first");
  if (h && k) {
    const Field& f = x.carrier().field();
    r.add("k . h = 1", k->map() * h->map() == Matrix::identity(f, x.carrier().dim()), "composite is not the identity");
    r.add("h . k = 1", h->map() * k->map() == Matrix::identity(f, y.carrier().dim()), "composite is not the identity");
  }
  return r;
}

LawReport check_enriched_category_axioms(const Measuring& third, const Measuring& second, const Measuring& first) {
  if (!(first.target() == second.source()) || !(second.target() == third.source()))
    throw std::invalid_argument("check_enriched_category_axioms: measurings are not composable");
  LawReport r;
  Measuring left = compose_measurings(compose_measurings(third, second), first);
  Measuring right = compose_measurings(third, compose_measurings(second, first));
  r.add("associativity on representing measurings", left.coalgebra() == right.coalgebra() && left.sigma() == right.sigma(),
        "(m3 m2) m1 and m3 (m2 m1) differ");

  UniversalFragment fl = p_fragment(left), fr = p_fragment(right);
  r.merge(check_fragment_isomorphism(fl, fr), "associativity fragments: ");
  UniversalFragment merged = merge_fragments(fl, fr);
  auto hl = factor_through_fragment(left, merged);
  auto hr = factor_through_fragment(right, merged);
  r.add("associativity inside merged fragment", hl && hr && hl->map() == hr->map(),
        "the two composites classify different maps into the merged fragment");

  const std::vector<const Measuring*> chain{&first, &second, &third};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Measuring& m = *chain[i];
    UniversalFragment own = p_fragment(m);
    const std::string tag = "m" + std::to_string(i + 1) + " ";
    r.merge(check_fragment_isomorphism(p_fragment(compose_measurings(m, enriched_unit(m.source()))), own),
            tag + "right unit: ");
    r.merge(check_fragment_isomorphism(p_fragment(compose_measurings(enriched_unit(m.target()), m)), own),
            tag + "left unit: ");
  }
  return r;
}

}  // namespace measuringkit
