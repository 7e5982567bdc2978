#pragma once

// Algebra and coalgebra morphisms, and the functors that change the base
// (co)algebra of (co)modules: restriction, corestriction, extension,
// coinduction and the cotensor product.

#include "measuringkit/linalg.hpp"
#include "measuringkit/structures.hpp"

namespace measuringkit {

LawReport check_algebra_morphism(const Algebra& source, const Algebra& target, const Matrix& map);
LawReport check_coalgebra_morphism(const Coalgebra& source, const Coalgebra& target, const Matrix& map);

class AlgebraMorphism {
 public:
  AlgebraMorphism(Algebra source, Algebra target, Matrix map);
  static AlgebraMorphism unchecked(Algebra source, Algebra target, Matrix map);
  static AlgebraMorphism identity(const Algebra& a);
  /// The unit k -> A.
  static AlgebraMorphism unit_of(const Algebra& a);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const Matrix& map() const { return map_; }

  bool operator==(const AlgebraMorphism&) const = default;

 private:
  struct Unchecked {};
  AlgebraMorphism(Algebra source, Algebra target, Matrix map, Unchecked);
  Algebra source_;
  Algebra target_;
  Matrix map_;
};

class CoalgebraMorphism {
 public:
  CoalgebraMorphism(Coalgebra source, Coalgebra target, Matrix map);
  static CoalgebraMorphism unchecked(Coalgebra source, Coalgebra target, Matrix map);
  static CoalgebraMorphism identity(const Coalgebra& c);
  /// The counit C -> k.
  static CoalgebraMorphism counit_of(const Coalgebra& c);

  const Coalgebra& source() const { return source_; }
  const Coalgebra& target() const { return target_; }
  const Matrix& map() const { return map_; }

  bool operator==(const CoalgebraMorphism&) const = default;

 private:
  struct Unchecked {};
  CoalgebraMorphism(Coalgebra source, Coalgebra target, Matrix map, Unchecked);
  Coalgebra source_;
  Coalgebra target_;
  Matrix map_;
};

/// second . first; throws std::invalid_argument on a boundary mismatch.
AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first);
CoalgebraMorphism compose(const CoalgebraMorphism& second, const CoalgebraMorphism& first);

/// k mu_M == mu_N (1 (x) k), both modules over the same algebra.
bool is_module_map(const Module& m, const Module& n, const Matrix& k);
/// delta_Y k == (k (x) 1) delta_X, both comodules over the same coalgebra.
bool is_comodule_map(const Comodule& x, const Comodule& y, const Matrix& k);

/// Action mu . (f (x) 1); the carrier is unchanged.
Module restrict(const AlgebraMorphism& f, const Module& n);
/// Coaction (1 (x) g) . delta; the carrier is unchanged.
Comodule corestrict(const CoalgebraMorphism& g, const Comodule& x);

/// B (x)_A M as the quotient of B (x) M by b (x) a.m - b f(a) (x) m.
struct Extension {
  Module module;       // over B
  Matrix projection;   // B (x) M -> carrier
  Matrix section;      // carrier -> B (x) M, right inverse of projection
  Matrix unit;         // eta_M : M -> restrict(f, carrier), m |-> [1 (x) m]
};
Extension extend(const AlgebraMorphism& f, const Module& m);
/// extend on a map u : M -> M' of A-modules.
Matrix extend_map(const Extension& src, const Extension& tgt, const Matrix& u);
/// Counit extend(f, restrict(f, N)) -> N, [b (x) n] |-> b . n.
Matrix extension_counit(const Extension& ext_of_restricted, const Module& n);
/// Mod_A(M, restrict(f, N)) -> Mod_B(extend(f, M), N): psi |-> ([b (x) m] |-> b . psi(m)).
Matrix extension_transpose(const Extension& ext, const Module& n, const Matrix& psi);
/// Inverse direction: phi |-> phi . eta_M.
Matrix extension_untranspose(const Extension& ext, const Matrix& phi);
/// Both triangle identities for the adjunction at (M, N).
LawReport check_extension_adjunction(const AlgebraMorphism& f, const Module& m, const Module& n);

/// Hom_A(B, M): A-equivariant maps h (h(f(a) b) = a . h(b)) with
/// (b' . h)(b) = h(b b').
struct Coinduction {
  Module module;    // over B
  Matrix inclusion; // carrier -> Hom(B, M), Hom coordinates as in hom_vector
  Subspace subspace;
};
Coinduction coinduce(const AlgebraMorphism& f, const Module& m);
/// restrict(f, coinduce(f, M)) -> M, h |-> h(1).
Matrix coinduction_counit(const Coinduction& co, const Algebra& b);
/// Mod_A(restrict(f, N), M) -> Mod_B(N, coinduce(f, M)): u |-> (n |-> (b |-> u(b . n))).
Matrix coinduction_transpose(const Coinduction& co, const Module& n, const Matrix& u);
/// Inverse direction: v |-> counit . v.
Matrix coinduction_untranspose(const Coinduction& co, const Algebra& b, const Matrix& v);

/// Y box_D C: equalizer of delta_Y (x) 1 and 1 (x) (g (x) 1) Delta_C on Y (x) C,
/// with coaction 1 (x) Delta_C.
struct Cotensor {
  Comodule comodule;  // over C
  Matrix inclusion;   // carrier -> Y (x) C
  Subspace subspace;
};
Cotensor cotensor(const Comodule& y, const CoalgebraMorphism& g);
/// Comod_D(corestrict(g, X), Y) -> Comod_C(X, Y box_D C): k |-> (k (x) 1) delta_X.
Matrix cotensor_transpose(const Cotensor& ct, const Comodule& x, const Matrix& k);
/// Inverse direction: l |-> (1 (x) epsilon) . inclusion . l.
Matrix cotensor_untranspose(const Cotensor& ct, const Comodule& y, const Matrix& l);

}  // namespace measuringkit
