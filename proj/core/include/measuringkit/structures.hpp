#pragma once

// Finite-dimensional algebras, coalgebras, modules and comodules given by
// structure constants, validated at construction.
//
// Shapes (n = dim of the carrier):
//   algebra      mult     n x n^2        unit      length n
//   coalgebra    comult   n^2 x n        counit    1 x n
//   module       action   dimM x dimA*dimM   (A (x) M -> M)
//   comodule     coaction dimX*dimC x dimX   (X -> X (x) C)

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "measuringkit/linalg.hpp"
#include "measuringkit/report.hpp"

namespace measuringkit {

LawReport check_algebra(const Matrix& mult, const Vector& unit);
LawReport check_coalgebra(const Matrix& comult, const Matrix& counit);

class Algebra {
 public:
  /// Throws LawViolation if associativity or a unit law fails.
  Algebra(Matrix mult, Vector unit);
  /// Skips validation; for results of constructions already known to be valid.
  static Algebra unchecked(Matrix mult, Vector unit);

  const Field& field() const { return mult_.field(); }
  std::size_t dim() const { return mult_.rows(); }
  const Matrix& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }
  /// dim x 1 matrix of the unit k -> A.
  Matrix unit_map() const;
  Vector multiply(const Vector& a, const Vector& b) const;

  bool operator==(const Algebra& other) const = default;

 private:
  struct Unchecked {};
  Algebra(Matrix mult, Vector unit, Unchecked);
  Matrix mult_;
  Vector unit_;
};

class Coalgebra {
 public:
  /// Dimension 0 is allowed: the zero coalgebra is the initial object and
  /// the colimit of the empty diagram.
  Coalgebra(Matrix comult, Matrix counit);
  static Coalgebra unchecked(Matrix comult, Matrix counit);

  const Field& field() const { return comult_.field(); }
  std::size_t dim() const { return comult_.cols(); }
  const Matrix& comult() const { return comult_; }
  const Matrix& counit() const { return counit_; }
  Vector counit_vector() const { return counit_.row(0); }

  bool operator==(const Coalgebra& other) const = default;

 private:
  struct Unchecked {};
  Coalgebra(Matrix comult, Matrix counit, Unchecked);
  Matrix comult_;
  Matrix counit_;
};

LawReport check_algebra(const Algebra& a);
LawReport check_coalgebra(const Coalgebra& c);
LawReport check_module(const Algebra& over, const Matrix& action);
LawReport check_comodule(const Coalgebra& over, const Matrix& coaction);

class Module {
 public:
  Module(Algebra over, Matrix action);
  static Module unchecked(Algebra over, Matrix action);

  const Field& field() const { return action_.field(); }
  std::size_t dim() const { return action_.rows(); }
  const Algebra& over() const { return over_; }
  const Matrix& action() const { return action_; }
  /// dim x dim matrix of m |-> a . m.
  Matrix act_by(const Vector& a) const;

  bool operator==(const Module& other) const = default;

 private:
  struct Unchecked {};
  Module(Algebra over, Matrix action, Unchecked);
  Algebra over_;
  Matrix action_;
};

class Comodule {
 public:
  Comodule(Coalgebra over, Matrix coaction);
  static Comodule unchecked(Coalgebra over, Matrix coaction);

  const Field& field() const { return coaction_.field(); }
  std::size_t dim() const { return coaction_.cols(); }
  const Coalgebra& over() const { return over_; }
  const Matrix& coaction() const { return coaction_; }

  bool operator==(const Comodule& other) const = default;

 private:
  struct Unchecked {};
  Comodule(Coalgebra over, Matrix coaction, Unchecked);
  Coalgebra over_;
  Matrix coaction_;
};

LawReport check_module(const Module& m);
LawReport check_comodule(const Comodule& x);

/// Decodes a flat tensor index into per-factor indices (left factor slowest).
std::vector<std::size_t> split_index(std::size_t index, const std::vector<std::size_t>& dims);
std::string format_index(const std::vector<std::size_t>& idx);

/// Caller-named structures, so morphisms and measurings can refer to their
/// (co)domains by name. Reads may run concurrently; writes are exclusive.
class StructureRegistry {
 public:
  using Entry = std::variant<Algebra, Coalgebra, Module, Comodule>;

  /// Throws std::invalid_argument if the name is taken.
  void add(const std::string& name, Entry entry);
  bool contains(const std::string& name) const;
  std::optional<Entry> find(const std::string& name) const;
  Algebra algebra(const std::string& name) const;
  Coalgebra coalgebra(const std::string& name) const;
  Module module(const std::string& name) const;
  Comodule comodule(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  template <class T>
  T get(const std::string& name, const char* kind) const;

  mutable std::shared_mutex mutex_;
  std::map<std::string, Entry> entries_;
};

}  // namespace measuringkit
