#pragma once

// Hom(-, -) as an action of coalgebras on algebras, and the resulting
// enrichment of algebras in coalgebras, computed on representing measurings
// and their fragments.

#include "measuringkit/measuring.hpp"

namespace measuringkit {

/// alpha_{CDA} : Hom(C (x) D, A) -> Hom(C, Hom(D, A)), f |-> (c |-> (d |-> f(c (x) d))).
/// Arguments are carrier dimensions; the result is a permutation matrix.
Matrix action_alpha(const Field& field, std::size_t dim_c, std::size_t dim_d, std::size_t dim_a);
/// lambda_A : Hom(k, A) -> A.
Matrix action_lambda(const Field& field, std::size_t dim_a);

/// Checks that alpha_{CDA}, alpha_{(C(x)D)EA}, alpha_{C(D(x)E)A}, ... and
/// lambda_A are algebra isomorphisms for the convolution structures, and that
/// the pentagon and both unit triangles commute. The pentagon uses the
/// triple (c, d, e).
LawReport check_action_axioms(const Coalgebra& c, const Coalgebra& d, const Coalgebra& e, const Algebra& a);
/// Same with e = c.
LawReport check_action_axioms(const Coalgebra& c, const Coalgebra& d, const Algebra& a);

struct ConvolutionIso {
  AlgebraMorphism alpha;  // Hom(C (x) D, A) -> Hom(C, Hom(D, A))
  AlgebraMorphism beta;   // the inverse
  LawReport report;       // algebra maps and two-sided inverse
};
ConvolutionIso convolution_iso_beta(const Coalgebra& c, const Coalgebra& d, const Algebra& a);

/// sigma((d (x) c) (x) a) = tau(d (x) sigma(c (x) a)) over D (x) C.
/// Throws std::invalid_argument if inner's target is not outer's source.
Measuring compose_measurings(const Measuring& outer, const Measuring& inner);

/// j_A : k (x) A -> A, 1 (x) a |-> a.
Measuring enriched_unit(const Algebra& a);

/// The composition P(B, E) (x) P(A, B) -> P(A, E) restricted to fragments:
/// the fragment of the composite universal measuring and the coalgebra map
/// onto it from the tensor product of the two carriers.
struct EnrichedComposite {
  UniversalFragment fragment;
  CoalgebraMorphism composition;  // outer carrier (x) inner carrier -> fragment carrier
};
EnrichedComposite enriched_composition(const UniversalFragment& outer, const UniversalFragment& inner);

/// h : x.carrier -> y.carrier and k back, mutually inverse, both obtained
/// from factor_through_fragment.
LawReport check_fragment_isomorphism(const UniversalFragment& x, const UniversalFragment& y);

/// For a composable chain first : A ~> B, second : B ~> C, third : C ~> D,
/// checks associativity of composition at fragment level and that the
/// enriched units absorb on both sides of every measuring in the chain.
LawReport check_enriched_category_axioms(const Measuring& third, const Measuring& second, const Measuring& first);

}  // namespace measuringkit
