#pragma once

// Measuring comodules: module-measurings over a measuring, fragments of the
// universal measuring comodule Q(M, N), and the closed structure of Comod
// (internal-hom checker, fragments of the coalgebra internal hom, and
// coefficient coalgebras).

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "measuringkit/global_cats.hpp"
#include "measuringkit/measuring.hpp"

namespace measuringkit {

/// l : M -> Hom(X, N) over a measuring sigma : C (x) A -> B, stored as
/// lbar : M (x) X -> N (dim N x dim M * dim X); l has Hom(X, N) index
/// n * dim X + x.
class ModuleMeasuring {
 public:
  /// Throws LawViolation unless check_module_measuring passes.
  ModuleMeasuring(Measuring base, Comodule comodule, Module module_src, Module module_tgt, Matrix ellbar);
  static ModuleMeasuring unchecked(Measuring base, Comodule comodule, Module module_src, Module module_tgt,
                                   Matrix ellbar);

  const Measuring& base() const { return base_; }
  const Comodule& comodule() const { return comodule_; }
  const Module& module_src() const { return module_src_; }
  const Module& module_tgt() const { return module_tgt_; }
  const Matrix& ellbar() const { return ellbar_; }
  /// l : M -> Hom(X, N), dim N * dim X x dim M.
  Matrix ell() const;

  bool operator==(const ModuleMeasuring&) const = default;

 private:
  struct Unchecked {};
  ModuleMeasuring(Measuring base, Comodule comodule, Module module_src, Module module_tgt, Matrix ellbar, Unchecked);
  Measuring base_;
  Comodule comodule_;
  Module module_src_;
  Module module_tgt_;
  Matrix ellbar_;
};

/// l (dim N * dim X x dim M) <-> lbar (dim N x dim M * dim X).
Matrix ell_to_ellbar(const Matrix& ell, std::size_t dim_m, std::size_t dim_x, std::size_t dim_n);
Matrix ellbar_to_ell(const Matrix& ellbar, std::size_t dim_m, std::size_t dim_x, std::size_t dim_n);

/// lbar((a . m) (x) x) = sum sigma(x_(1) (x) a) . lbar(m (x) x_(0)) on every
/// basis triple, and the same identity computed through the P-fragment of
/// the base (alpha and the factorization h). Throws std::invalid_argument on
/// inconsistent boundaries.
LawReport check_module_measuring(const Measuring& base, const Comodule& x, const Module& m, const Module& n,
                                 const Matrix& ellbar);
LawReport check_module_measuring(const ModuleMeasuring& mm);

/// Hom(X, N) as an A-module through alpha : A -> Hom(D, B) followed by the
/// convolution action, for X a comodule over the fragment carrier D.
/// Throws LawViolation if the module laws fail.
Module alpha_module_structure(const UniversalFragment& pfrag, const Comodule& x, const Module& n);

struct QProvenance {
  ModuleMeasuring source;
  ComodMorphism quotient;  // source comodule -> carrier, over the base factorization
};

/// A finite-dimensional subcomodule of Q(M, N) over a fragment of P(A, B).
class ComoduleFragment {
 public:
  ComoduleFragment(UniversalFragment base, Comodule carrier, Module module_src, Module module_tgt,
                   Matrix universal_ellbar, std::vector<QProvenance> provenance);

  const UniversalFragment& base() const { return base_; }
  const Comodule& carrier() const { return carrier_; }
  const Module& module_src() const { return module_src_; }
  const Module& module_tgt() const { return module_tgt_; }
  const Matrix& universal_ellbar() const { return universal_ellbar_; }
  const std::vector<QProvenance>& provenance() const { return provenance_; }
  /// The universal module-measuring restricted to the fragment.
  ModuleMeasuring universal() const;

 private:
  UniversalFragment base_;
  Comodule carrier_;
  Module module_src_;
  Module module_tgt_;
  Matrix universal_ellbar_;
  std::vector<QProvenance> provenance_;
};

/// With S the subalgebra of C* cut out by the base and T the smallest
/// S-stable subspace of X* containing x |-> nu(lbar(m (x) x)), the carrier
/// is X / T^perp = T* over the P-fragment of the base.
ComoduleFragment q_fragment(const ModuleMeasuring& mm);
/// q_fragment of the direct sum of the two universal module-measurings.
/// Throws std::invalid_argument if the ambient modules differ.
ComoduleFragment merge_q_fragments(const ComoduleFragment& f1, const ComoduleFragment& f2);
/// The unique Comod morphism X_C -> carrier over the factorization of the
/// base carrying lbar to the universal lbar, if it exists.
/// Throws std::invalid_argument on an ambient mismatch.
std::optional<ComodMorphism> factor_q(const ModuleMeasuring& mm, const ComoduleFragment& qf);

/// Current merged Q-fragment per caller-named key. Reads run concurrently;
/// merges are serialized.
class QFragmentRegistry {
 public:
  using Key = std::pair<std::string, std::string>;
  ComoduleFragment merge(const Key& key, const ComoduleFragment& fragment);
  std::optional<ComoduleFragment> find(const Key& key) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, ComoduleFragment> entries_;
};

/// A candidate internal hom H(Y, Z) over a fragment H_c of [D, E]_c with its
/// evaluation (ev, eps) : H (x) Y -> Z in Comod.
struct InternalHomCandidate {
  Comodule hom;
  CoalgebraMorphism evaluation_coalgebra;  // H_c (x) D -> E
  Matrix evaluation;                       // H (x) Y -> Z
};

/// Checks that (l, g) |-> (ev (l (x) 1), eps (g (x) 1)) is a bijection
/// Comod(W, H) -> Comod(W (x) Y, Z) for every test object W, by exhaustive
/// enumeration over a finite field. Throws std::invalid_argument if the
/// candidate's boundaries do not match y and z.
LawReport comod_internal_hom_check(const std::vector<Comodule>& tests, const Comodule& y, const Comodule& z,
                                   const InternalHomCandidate& candidate);

/// The image of C in [D, E]_c for a coalgebra morphism phi : C (x) D -> E,
/// as the quotient of C by the largest coideal on which every functional
/// c |-> xi(phi(c (x) d)) vanishes.
struct CoalgHomFragment {
  Coalgebra d;
  Coalgebra e;
  Coalgebra carrier;
  CoalgebraMorphism quotient;    // C -> carrier
  CoalgebraMorphism evaluation;  // carrier (x) D -> E
};
/// Throws std::invalid_argument unless phi runs from C (x) D.
CoalgHomFragment coalg_hom_fragment(const Coalgebra& c, const Coalgebra& d, const CoalgebraMorphism& phi);
/// The unique coalgebra map h : C' -> carrier with evaluation (h (x) 1) = psi,
/// if any. Throws std::invalid_argument unless psi runs from C' (x) D to E.
std::optional<CoalgebraMorphism> factor_through_coalg_hom(const Coalgebra& c2, const CoalgebraMorphism& psi,
                                                          const CoalgHomFragment& frag);

/// Coeff(X): the span of the matrix coefficients of the coaction.
struct CoeffCoalgebra {
  Coalgebra coalgebra;
  Matrix inclusion;   // Coeff(X) -> C
  Comodule comodule;  // X over Coeff(X)
};
CoeffCoalgebra coeff_coalgebra(const Comodule& x);

}  // namespace measuringkit
