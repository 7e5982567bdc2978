#pragma once

// Measurings sigma : C (x) A -> B, their presented classifying algebra, and
// finite-dimensional fragments of the universal measuring coalgebra P(A, B).

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "measuringkit/constructions.hpp"
#include "measuringkit/scalars_functors.hpp"

namespace measuringkit {

/// sigma is dim B x (dim C * dim A), input index c * dim A + a.
LawReport check_measuring(const Matrix& sigma, const Coalgebra& c, const Algebra& a, const Algebra& b);

/// rho[(b * dim C + c), a] = sigma[b, c * dim A + a]; rho : A -> Hom(C, B).
Matrix sigma_to_rho(const Matrix& sigma, std::size_t dim_c, std::size_t dim_a, std::size_t dim_b);
Matrix rho_to_sigma(const Matrix& rho, std::size_t dim_c, std::size_t dim_a, std::size_t dim_b);

class Measuring {
 public:
  /// Throws LawViolation if rho is not an algebra map into Hom(C, B).
  Measuring(Coalgebra c, Algebra a, Algebra b, Matrix sigma);
  static Measuring unchecked(Coalgebra c, Algebra a, Algebra b, Matrix sigma);

  const Coalgebra& coalgebra() const { return c_; }
  const Algebra& source() const { return a_; }
  const Algebra& target() const { return b_; }
  const Matrix& sigma() const { return sigma_; }
  Matrix rho() const { return sigma_to_rho(sigma_, c_.dim(), a_.dim(), b_.dim()); }
  /// The functional c |-> beta_j(sigma(c (x) a_i)) on C, for i < dim A, j < dim B.
  Vector functional(std::size_t i, std::size_t j) const;

  bool operator==(const Measuring&) const = default;

 private:
  struct Unchecked {};
  Measuring(Coalgebra c, Algebra a, Algebra b, Matrix sigma, Unchecked);
  Coalgebra c_;
  Algebra a_;
  Algebra b_;
  Matrix sigma_;
};

/// C = k, sigma(1 (x) a) = u(a).
Measuring algebra_map_measuring(const AlgebraMorphism& u);
/// C = A*, B = k, sigma(phi (x) a) = phi(a).
Measuring evaluation_measuring(const Algebra& a);
/// C = dual numbers, B = A, sigma(g, a) = a, sigma(d, a) = D(a) for a
/// derivation D given as a dim A x dim A matrix.
Measuring derivation_measuring(const Algebra& a, const Matrix& derivation);
/// Measuring by the direct sum coalgebra C1 + C2.
Measuring direct_sum_measuring(const Measuring& m1, const Measuring& m2);

/// Noncommutative polynomial: word of generator indices -> coefficient.
using Word = std::vector<std::size_t>;
using NcPolynomial = std::map<Word, Scalar>;

/// Free algebra on generators x_ij (index i * dim B + j) for a basis a_i of A
/// and dual basis beta_j of B*, modulo the measuring relations.
struct PresentedAlgebra {
  Field field;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::vector<NcPolynomial> relations;
  std::vector<std::string> relation_names;

  std::size_t generator_count() const { return dim_a * dim_b; }
  std::string generator_name(std::size_t g) const;
};

PresentedAlgebra present_measuring_algebra(const Algebra& a, const Algebra& b);
/// Value of p in `target` when generator g is sent to images[g].
Vector evaluate(const NcPolynomial& p, const Algebra& target, const std::vector<Vector>& images);
/// Every relation vanishes on the images; witness names the first that does not.
LawReport check_representation(const PresentedAlgebra& pa, const Algebra& target,
                               const std::vector<Vector>& images);

struct Representation {
  Algebra target;              // dual_algebra(C)
  std::vector<Vector> images;  // image of each generator
  LawReport report;            // relations checked on the images
};
Representation measuring_to_rep(const Measuring& m);
/// Inverse of measuring_to_rep: sigma(c (x) a_i) = sum_j images[i * dim B + j](c) b_j.
Matrix rep_to_sigma(const std::vector<Vector>& images, std::size_t dim_c, std::size_t dim_a, std::size_t dim_b);

struct FragmentProvenance {
  Measuring source;
  CoalgebraMorphism quotient;  // source coalgebra -> fragment carrier
};

/// A finite-dimensional subcoalgebra of P(A, B) together with the restriction
/// of the universal measuring to it.
class UniversalFragment {
 public:
  UniversalFragment(Measuring universal, std::vector<FragmentProvenance> provenance);

  const Algebra& source() const { return universal_.source(); }
  const Algebra& target() const { return universal_.target(); }
  const Coalgebra& carrier() const { return universal_.coalgebra(); }
  const Measuring& universal_measuring() const { return universal_; }
  const std::vector<FragmentProvenance>& provenance() const { return provenance_; }

 private:
  Measuring universal_;
  std::vector<FragmentProvenance> provenance_;
};

UniversalFragment p_fragment(const Measuring& m);
/// Throws std::invalid_argument if the ambient pairs differ.
UniversalFragment merge_fragments(const UniversalFragment& f1, const UniversalFragment& f2);
/// The unique coalgebra morphism h with sigma = sigma_F (h (x) 1), if any.
std::optional<CoalgebraMorphism> factor_through_fragment(const Measuring& m, const UniversalFragment& f);

class EnumerationUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grouplike elements of the carrier, returned as the algebra maps
/// sigma(x, -) : A -> B. Over Q only carriers of dimension <= 4 are handled.
std::vector<AlgebraMorphism> grouplike_points(const UniversalFragment& f);
/// All grouplike elements of a coalgebra. Over Q requires dim <= 4; over F_p
/// requires p <= 2^20.
std::vector<Vector> grouplike_elements(const Coalgebra& c);

/// For f = rho of m, h the factorization C -> D and alpha the universal rho
/// of the fragment, checks f = Hom(h, B) alpha and that
/// fbar = e (1 (x) h)(alpha (x) 1) = e (f (x) 1) on A (x) C.
LawReport lemma_triangle_check(const Measuring& m, const UniversalFragment& f);

/// For finite-dimensional A every ideal is cofinite, so A° = A*.
Coalgebra finite_dual(const Algebra& a);

/// Current merged fragment per caller-named ambient pair. Reads run
/// concurrently; merges are serialized.
class FragmentRegistry {
 public:
  using Key = std::pair<std::string, std::string>;

  /// Merges the fragment into the entry for key and returns the new entry.
  UniversalFragment merge(const Key& key, const UniversalFragment& fragment);
  std::optional<UniversalFragment> find(const Key& key) const;
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, UniversalFragment> entries_;
};

}  // namespace measuringkit
