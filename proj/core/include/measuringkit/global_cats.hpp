#pragma once

// The global categories Comod (comodules over varying coalgebras) and Mod
// (modules over varying algebras): morphism pairs, composition, the tensor
// product of objects, the comonad GH on Mod_k x Coalg_k, finite colimits in
// Comod and the contravariant Hom(-, N_B).

#include <cstdint>
#include <optional>
#include <vector>

#include "measuringkit/constructions.hpp"
#include "measuringkit/scalars_functors.hpp"

namespace measuringkit {

/// (k, g) : X_C -> Y_D with g : C -> D and k : corestrict(g, X) -> Y in Comod_D.
class ComodMorphism {
 public:
  /// Throws LawViolation if k is not a D-comodule map.
  ComodMorphism(Comodule source, Comodule target, CoalgebraMorphism comap, Matrix map);
  static ComodMorphism unchecked(Comodule source, Comodule target, CoalgebraMorphism comap, Matrix map);
  static ComodMorphism identity(const Comodule& x);

  const Comodule& source() const { return source_; }
  const Comodule& target() const { return target_; }
  const CoalgebraMorphism& comap() const { return comap_; }
  const Matrix& map() const { return map_; }
  bool operator==(const ComodMorphism&) const = default;

 private:
  struct Unchecked {};
  ComodMorphism(Comodule source, Comodule target, CoalgebraMorphism comap, Matrix map, Unchecked);
  Comodule source_;
  Comodule target_;
  CoalgebraMorphism comap_;
  Matrix map_;
};

/// (m, f) : M_A -> N_B with f : A -> B and m : M -> restrict(f, N) in Mod_A.
class ModMorphism {
 public:
  ModMorphism(Module source, Module target, AlgebraMorphism algmap, Matrix map);
  static ModMorphism unchecked(Module source, Module target, AlgebraMorphism algmap, Matrix map);
  static ModMorphism identity(const Module& m);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const AlgebraMorphism& algmap() const { return algmap_; }
  const Matrix& map() const { return map_; }
  bool operator==(const ModMorphism&) const = default;

 private:
  struct Unchecked {};
  ModMorphism(Module source, Module target, AlgebraMorphism algmap, Matrix map, Unchecked);
  Module source_;
  Module target_;
  AlgebraMorphism algmap_;
  Matrix map_;
};

LawReport check_comod_morphism(const Comodule& x, const Comodule& y, const CoalgebraMorphism& g, const Matrix& k);
LawReport check_mod_morphism(const Module& m, const Module& n, const AlgebraMorphism& f, const Matrix& k);

/// (l, h) . (k, g) = (l k, h g); throws std::invalid_argument on a boundary mismatch.
ComodMorphism compose_comod(const ComodMorphism& second, const ComodMorphism& first);
ModMorphism compose_mod(const ModMorphism& second, const ModMorphism& first);

/// X (x) Y over C (x) D with coaction (1 (x) s (x) 1)(delta_X (x) delta_Y).
Comodule tensor_comod_objects(const Comodule& x, const Comodule& y);
/// M (x) N over A (x) B with action (mu_M (x) mu_N)(1 (x) s (x) 1).
Module tensor_mod_objects(const Module& m, const Module& n);

/// H(V, D) = (V (x) D)_D with coaction 1 (x) Delta.
Comodule cofree_comodule(std::size_t dim_v, const Coalgebra& d);

/// A pair in Mod_k x Coalg_k: a linear map and a coalgebra map.
struct LinearCoalgebraPair {
  Matrix linear;
  CoalgebraMorphism coalgebra;
};

/// Direction (i) of Comod(X_C, H(V, D)) = Mod_k(X, V) x Coalg(C, D):
/// (k, f) |-> ((k (x) f) delta, f).
ComodMorphism adjunction_transpose(const Comodule& x, const Matrix& k, const CoalgebraMorphism& f);
/// Direction (ii): (l, g) |-> ((1 (x) epsilon) l, g). The target of l must be cofree.
LinearCoalgebraPair adjunction_untranspose(const ComodMorphism& l, std::size_t dim_v);

/// The comonad GH on Mod_k x Coalg_k: (V, D) |-> (V (x) D, D).
namespace gh {
/// GH on an arrow (k : V -> W, f : D -> E) is (k (x) f, f).
LinearCoalgebraPair on_arrow(const Matrix& k, const CoalgebraMorphism& f);
/// Counit component (1 (x) epsilon, 1) at (V, D).
LinearCoalgebraPair counit(std::size_t dim_v, const Coalgebra& d);
/// Comultiplication component (1 (x) Delta, 1) at (V, D).
LinearCoalgebraPair comultiplication(std::size_t dim_v, const Coalgebra& d);
/// Counit and coassociativity laws at (V, D).
LawReport check_laws(std::size_t dim_v, const Coalgebra& d);
/// Naturality of counit and comultiplication along (k, f) : (V, D) -> (W, E).
LawReport check_naturality(const Matrix& k, const CoalgebraMorphism& f);

/// A GH-coalgebra gamma : (V, D) -> (V (x) D, D).
struct CoalgebraStructure {
  std::size_t dim_v = 0;
  Coalgebra base;
  Matrix gamma;                // V -> V (x) D
  CoalgebraMorphism base_map;  // D -> D
};
LawReport check_coalgebra(const CoalgebraStructure& g);
/// Throws LawViolation unless check_coalgebra passes.
Comodule to_comodule(const CoalgebraStructure& g);
CoalgebraStructure from_comodule(const Comodule& x);
}  // namespace gh

struct ComodDiagramEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  ComodMorphism morphism;
};

struct ComodDiagram {
  Field field = Field::rationals();  // only consulted when there are no objects
  std::vector<Comodule> objects;
  std::vector<ComodDiagramEdge> edges;
};

/// Throws std::invalid_argument if an edge does not run between the named objects.
void validate_diagram(const ComodDiagram& diagram);

struct ComodCocone {
  Comodule apex;
  std::vector<ComodMorphism> legs;  // one per object
};

/// legs[to] . edge == legs[from] for every edge.
LawReport check_cocone(const ComodDiagram& diagram, const ComodCocone& cocone);

struct ComodColimit {
  ComodCocone cocone;
  Coalgebra base;                  // colimit of the coalgebra parts
  std::vector<CoalgebraMorphism> base_legs;
  Matrix base_projection;          // (+) C_j -> base
  Matrix base_section;             // right inverse of base_projection
  Matrix projection;               // (+) X_j -> apex
  Matrix section;                  // right inverse of projection
};

/// Stage 1: colimit of the coalgebras as a quotient of their direct sum.
/// Stage 2: corestrict every object to it and take the colimit in the fibre.
ComodColimit comod_colimit(const ComodDiagram& diagram);

struct Mediator {
  std::optional<ComodMorphism> morphism;
  bool unique = false;  // the homogeneous system has only the zero solution
  LawReport report;
};
/// The morphism from the colimit to another cocone's apex compatible with the legs.
Mediator mediate(const ComodDiagram& diagram, const ComodColimit& colimit, const ComodCocone& other);

/// Every coalgebra morphism C -> D over a finite field. Throws
/// EnumerationUnsupported over Q or when more than `limit` candidates remain
/// after the counit constraint.
std::vector<CoalgebraMorphism> all_coalgebra_morphisms(const Coalgebra& c, const Coalgebra& d,
                                                       std::uint64_t limit = 1u << 20);
/// Every morphism X_C -> Y_D of Comod over a finite field, grouped by
/// coalgebra part; comodule parts are enumerated from the solution space.
std::vector<ComodMorphism> all_comod_morphisms(const Comodule& x, const Comodule& y, std::uint64_t limit = 1u << 20);

/// Hom(X, N) as a module over Hom(C, B); delegates to hom_module.
Module hom_global(const Comodule& x, const Module& n);
/// Hom((k, g), N_B) : Hom(Y, N)_{Hom(D, B)} -> Hom(X, N)_{Hom(C, B)} over
/// precomposition with g.
ModMorphism hom_global(const ComodMorphism& kg, const Module& n);

}  // namespace measuringkit
