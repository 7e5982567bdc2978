#include "measuringkit/structures.hpp"

#include <mutex>

namespace measuringkit {

namespace {

// Compares two maps with the same shape; on mismatch records the first
// differing input basis element (decoded along in_dims) and output coordinate.
void compare(LawReport& report, const std::string& check, const Matrix& lhs, const Matrix& rhs,
             const std::vector<std::size_t>& in_dims) {
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      if (!(lhs.at(r, c) == rhs.at(r, c))) {
        report.fail(check, "basis " + format_index(split_index(c, in_dims)) + ", output coordinate " +
                               std::to_string(r) + ": " + lhs.at(r, c).to_string() +
                               " != " + rhs.at(r, c).to_string());
        return;
      }
    }
  }
  report.pass(check);
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

Matrix as_column(const Field& f, const Vector& v) {
  Matrix m(f, v.size(), 1);
  m.set_column(0, v);
  return m;
}

}  // namespace

std::vector<std::size_t> split_index(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t f = dims.size(); f-- > 0;) {
    out[f] = dims[f] ? index % dims[f] : 0;
    if (dims[f]) index /= dims[f];
  }
  return out;
}

std::string format_index(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

LawReport check_algebra(const Matrix& mult, const Vector& unit) {
  const std::size_t n = mult.rows();
  if (n == 0) throw DimensionError("algebra must have positive dimension");
  require_shape(mult, n, n * n, "multiplication");
  if (unit.size() != n) throw DimensionError("unit length does not match algebra dimension");
  const Field& f = mult.field();
  const Matrix id = Matrix::identity(f, n);
  const Matrix eta = as_column(f, unit);
  LawReport r;
  compare(r, "associativity", mult * tensor_map(mult, id), mult * tensor_map(id, mult), {n, n, n});
  compare(r, "left unit", mult * tensor_map(eta, id), id, {n});
  compare(r, "right unit", mult * tensor_map(id, eta), id, {n});
  return r;
}

LawReport check_coalgebra(const Matrix& comult, const Matrix& counit) {
  const std::size_t n = comult.cols();
  require_shape(comult, n * n, n, "comultiplication");
  require_shape(counit, 1, n, "counit");
  const Field& f = comult.field();
  const Matrix id = Matrix::identity(f, n);
  LawReport r;
  compare(r, "coassociativity", tensor_map(comult, id) * comult, tensor_map(id, comult) * comult, {n});
  compare(r, "left counit", tensor_map(counit, id) * comult, id, {n});
  compare(r, "right counit", tensor_map(id, counit) * comult, id, {n});
  return r;
}

LawReport check_algebra(const Algebra& a) { return check_algebra(a.mult(), a.unit()); }
LawReport check_coalgebra(const Coalgebra& c) { return check_coalgebra(c.comult(), c.counit()); }

LawReport check_module(const Algebra& over, const Matrix& action) {
  const std::size_t a = over.dim();
  const std::size_t m = action.rows();
  require_shape(action, m, a * m, "action");
  if (!(action.field() == over.field())) throw FieldError("module and algebra over different fields");
  const Field& f = action.field();
  const Matrix idm = Matrix::identity(f, m);
  LawReport r;
  compare(r, "action associativity", action * tensor_map(over.mult(), idm),
          action * tensor_map(Matrix::identity(f, a), action), {a, a, m});
  compare(r, "action unit", action * tensor_map(over.unit_map(), idm), idm, {m});
  return r;
}

LawReport check_comodule(const Coalgebra& over, const Matrix& coaction) {
  const std::size_t c = over.dim();
  const std::size_t x = coaction.cols();
  require_shape(coaction, x * c, x, "coaction");
  if (!(coaction.field() == over.field())) throw FieldError("comodule and coalgebra over different fields");
  const Field& f = coaction.field();
  const Matrix idx = Matrix::identity(f, x);
  LawReport r;
  compare(r, "coaction coassociativity", tensor_map(coaction, Matrix::identity(f, c)) * coaction,
          tensor_map(idx, over.comult()) * coaction, {x});
  compare(r, "coaction counit", tensor_map(idx, over.counit()) * coaction, idx, {x});
  return r;
}

LawReport check_module(const Module& m) { return check_module(m.over(), m.action()); }
LawReport check_comodule(const Comodule& x) { return check_comodule(x.over(), x.coaction()); }

Algebra::Algebra(Matrix mult, Vector unit) : mult_(std::move(mult)), unit_(std::move(unit)) {
  LawReport r = check_algebra(mult_, unit_);
  if (!r.ok()) throw LawViolation("not an algebra", std::move(r));
}

Algebra::Algebra(Matrix mult, Vector unit, Unchecked) : mult_(std::move(mult)), unit_(std::move(unit)) {}

Algebra Algebra::unchecked(Matrix mult, Vector unit) { return Algebra(std::move(mult), std::move(unit), Unchecked{}); }

Matrix Algebra::unit_map() const { return as_column(field(), unit_); }

Vector Algebra::multiply(const Vector& a, const Vector& b) const { return mult_.apply(tensor_vector(a, b)); }

Coalgebra::Coalgebra(Matrix comult, Matrix counit) : comult_(std::move(comult)), counit_(std::move(counit)) {
  LawReport r = check_coalgebra(comult_, counit_);
  if (!r.ok()) throw LawViolation("not a coalgebra", std::move(r));
}

Coalgebra::Coalgebra(Matrix comult, Matrix counit, Unchecked)
    : comult_(std::move(comult)), counit_(std::move(counit)) {}

Coalgebra Coalgebra::unchecked(Matrix comult, Matrix counit) {
  return Coalgebra(std::move(comult), std::move(counit), Unchecked{});
}

Module::Module(Algebra over, Matrix action) : over_(std::move(over)), action_(std::move(action)) {
  LawReport r = check_module(over_, action_);
  if (!r.ok()) throw LawViolation("not a module", std::move(r));
}

Module::Module(Algebra over, Matrix action, Unchecked) : over_(std::move(over)), action_(std::move(action)) {}

Module Module::unchecked(Algebra over, Matrix action) { return Module(std::move(over), std::move(action), Unchecked{}); }

Matrix Module::act_by(const Vector& a) const {
  const std::size_t m = dim();
  return action_ * tensor_map(as_column(field(), a), Matrix::identity(field(), m));
}

Comodule::Comodule(Coalgebra over, Matrix coaction) : over_(std::move(over)), coaction_(std::move(coaction)) {
  LawReport r = check_comodule(over_, coaction_);
  if (!r.ok()) throw LawViolation("not a comodule", std::move(r));
}

Comodule::Comodule(Coalgebra over, Matrix coaction, Unchecked)
    : over_(std::move(over)), coaction_(std::move(coaction)) {}

Comodule Comodule::unchecked(Coalgebra over, Matrix coaction) {
  return Comodule(std::move(over), std::move(coaction), Unchecked{});
}

void StructureRegistry::add(const std::string& name, Entry entry) {
  std::unique_lock lock(mutex_);
  if (!entries_.emplace(name, std::move(entry)).second) {
    throw std::invalid_argument("structure name already registered: " + name);
  }
}

bool StructureRegistry::contains(const std::string& name) const {
  std::shared_lock lock(mutex_);
  return entries_.count(name) != 0;
}

std::optional<StructureRegistry::Entry> StructureRegistry::find(const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

template <class T>
T StructureRegistry::get(const std::string& name, const char* kind) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::invalid_argument(std::string("unknown ") + kind + " '" + name + "'");
  if (const T* v = std::get_if<T>(&it->second)) return *v;
  throw std::invalid_argument("'" + name + "' is not a " + kind);
}

Algebra StructureRegistry::algebra(const std::string& name) const { return get<Algebra>(name, "algebra"); }
Coalgebra StructureRegistry::coalgebra(const std::string& name) const { return get<Coalgebra>(name, "coalgebra"); }
Module StructureRegistry::module(const std::string& name) const { return get<Module>(name, "module"); }
Comodule StructureRegistry::comodule(const std::string& name) const { return get<Comodule>(name, "comodule"); }

std::vector<std::string> StructureRegistry::names() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

}  // namespace measuringkit
