#pragma once

// JSON workspace documents: named structures over one field.
//
// Structure constants are stored sparsely as [[indices...], numerator,
// denominator] with output indices first, e.g. a multiplication entry
// [[k, i, j], n, d] says e_i e_j has coefficient n/d on e_k. Prime-field
// entries use canonical representatives with denominator 1. Numerators and
// denominators outside the int64 range are written as decimal strings.

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "measuringkit/global_cats.hpp"
#include "measuringkit/qmodule.hpp"

namespace measuringkit::cli {

inline constexpr std::string_view kWorkspaceFormat = "measuringkit-workspace/1";

class WorkspaceError : public std::runtime_error {
 public:
  enum class Kind { parse, schema, reference, law };
  WorkspaceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct ModuleEntry {
  std::string over;
  Module module;
};
struct ComoduleEntry {
  std::string over;
  Comodule comodule;
};
struct AlgebraMapEntry {
  std::string source, target;
  AlgebraMorphism morphism;
};
struct CoalgebraMapEntry {
  std::string source, target;
  CoalgebraMorphism morphism;
};
struct MeasuringEntry {
  std::string coalgebra, source, target;
  Measuring measuring;
};
struct ModuleMeasuringEntry {
  std::string measuring, comodule, module_src, module_tgt;
  ModuleMeasuring module_measuring;
};
struct DiagramEdgeEntry {
  std::size_t from = 0, to = 0;
  std::string comap;  // coalgebra map name
  Matrix map;
};
struct DiagramEntry {
  std::vector<std::string> objects;  // comodule names
  std::vector<DiagramEdgeEntry> edges;
  ComodDiagram diagram;
};

struct Workspace {
  Field field = Field::rationals();
  std::map<std::string, Algebra> algebras;
  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, ModuleEntry> modules;
  std::map<std::string, ComoduleEntry> comodules;
  std::map<std::string, AlgebraMapEntry> algebra_maps;
  std::map<std::string, CoalgebraMapEntry> coalgebra_maps;
  std::map<std::string, MeasuringEntry> measurings;
  std::map<std::string, ModuleMeasuringEntry> module_measurings;
  std::map<std::string, DiagramEntry> diagrams;

  explicit Workspace(Field f = Field::rationals()) : field(f) {}
  std::size_t size() const;
};

/// Parses and validates a document: every reference resolves and every
/// structure passes its law checker. Throws WorkspaceError; parse errors
/// carry line and column, law errors carry the checker's witness.
Workspace parse_workspace(std::string_view text);
Workspace load_workspace(const std::filesystem::path& path);

/// Canonical form: sorted keys, sparse entries in index order, two-space
/// indentation and a trailing newline.
std::string serialize_workspace(const Workspace& ws);
void save_workspace(const Workspace& ws, const std::filesystem::path& path);

}  // namespace measuringkit::cli
