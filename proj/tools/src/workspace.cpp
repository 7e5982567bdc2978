#include "measuringkit_cli/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <set>
#include <sstream>

namespace measuringkit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw WorkspaceError(WorkspaceError::Kind::schema, where + ": " + what);
}

[[noreturn]] void reference_error(const std::string& where, const std::string& kind, const std::string& name) {
  throw WorkspaceError(WorkspaceError::Kind::reference, where + ": unknown " + kind + " '" + name + "'");
}

// Runs a constructor and turns a law violation into a WorkspaceError naming
// the structure.
template <class Fn>
auto checked(const std::string& where, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const LawViolation& e) {
    throw WorkspaceError(WorkspaceError::Kind::law, where + ": " + e.report().summary());
  } catch (const DimensionError& e) {
    throw WorkspaceError(WorkspaceError::Kind::schema, where + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw WorkspaceError(WorkspaceError::Kind::reference, where + ": " + e.what());
  }
}

json encode_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class decode_integer(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) schema_error(where, "malformed integer string");
    return z;
  }
  schema_error(where, "expected an integer");
}

std::size_t flat_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) out = out * dims[i] + idx[i];
  return out;
}

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

json encode_entries(const Matrix& m, const std::vector<std::size_t>& out_dims, const std::vector<std::size_t>& in_dims) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& v = m.at(r, c);
      if (v.is_zero()) continue;
      json idx = json::array();
      for (auto i : split_index(r, out_dims)) idx.push_back(i);
      for (auto i : split_index(c, in_dims)) idx.push_back(i);
      out.push_back(json::array({idx, encode_integer(v.numerator()), encode_integer(v.denominator())}));
    }
  return out;
}

Matrix decode_entries(const Field& field, const json& j, const std::vector<std::size_t>& out_dims,
                      const std::vector<std::size_t>& in_dims, const std::string& where) {
  if (!j.is_array()) schema_error(where, "entries must be an array");
  Matrix m(field, product(out_dims), product(in_dims));
  std::vector<std::size_t> dims = out_dims;
  dims.insert(dims.end(), in_dims.begin(), in_dims.end());
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string at = where + "[" + std::to_string(e) + "]";
    const json& entry = j[e];
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_array())
      schema_error(at, "entry must be [[indices...], numerator, denominator]");
    if (entry[0].size() != dims.size())
      schema_error(at, "expected " + std::to_string(dims.size()) + " indices, got " + std::to_string(entry[0].size()));
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const json& v = entry[0][k];
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        schema_error(at, "indices must be non-negative integers");
      const auto i = v.get<std::uint64_t>();
      if (i >= dims[k]) schema_error(at, "index " + std::to_string(i) + " out of range " + std::to_string(dims[k]));
      idx.push_back(static_cast<std::size_t>(i));
    }
    if (!seen.insert(idx).second) schema_error(at, "duplicate entry " + format_index(idx));
    const mpz_class num = decode_integer(entry[1], at), den = decode_integer(entry[2], at);
    if (den == 0) schema_error(at, "zero denominator");
    Scalar value = field.zero();
    try {
      value = field.from_fraction(num, den);
    } catch (const std::exception& ex) {
      schema_error(at, ex.what());
    }
    const std::vector<std::size_t> row(idx.begin(), idx.begin() + out_dims.size());
    const std::vector<std::size_t> col(idx.begin() + out_dims.size(), idx.end());
    m.at(flat_index(row, out_dims), flat_index(col, in_dims)) = value;
  }
  return m;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing '") + key + "'");
  return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) schema_error(where, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t dim_member(const json& obj, const std::string& where) {
  const json& v = member(obj, "dim", where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    schema_error(where, "'dim' must be a non-negative integer");
  return v.get<std::size_t>();
}

const json& section(const json& doc, const char* key) {
  static const json empty = json::object();
  auto it = doc.find(key);
  if (it == doc.end()) return empty;
  if (!it->is_object()) schema_error(key, "section must be an object");
  return *it;
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name, const std::string& where,
                                        const std::string& kind) {
  auto it = map.find(name);
  if (it == map.end()) reference_error(where, kind, name);
  return it->second;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::size_t Workspace::size() const {
  return algebras.size() + coalgebras.size() + modules.size() + comodules.size() + algebra_maps.size() +
         coalgebra_maps.size() + measurings.size() + module_measurings.size() + diagrams.size();
}

Workspace parse_workspace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The byte offset points one past the offending character.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw WorkspaceError(WorkspaceError::Kind::parse, "parse error at " + line_column(text, byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("document", "top level must be an object");
  if (string_member(doc, "format", "document") != kWorkspaceFormat)
    schema_error("document", "unsupported format '" + doc["format"].get<std::string>() + "'");
  Field field = Field::rationals();
  try {
    field = Field::parse(string_member(doc, "field", "document"));
  } catch (const FieldError& e) {
    schema_error("field", e.what());
  }
  static const std::set<std::string> known{"format",         "field",      "algebras",          "coalgebras",
                                           "modules",        "comodules",  "algebra_maps",      "coalgebra_maps",
                                           "measurings",     "diagrams",   "module_measurings"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) schema_error("document", "unknown section '" + key + "'");

  Workspace ws(field);
  for (const auto& [name, v] : section(doc, "algebras").items()) {
    const std::string where = "algebra '" + name + "'";
    const std::size_t n = dim_member(v, where);
    Matrix mult = decode_entries(field, member(v, "mult", where), {n}, {n, n}, where + " mult");
    Matrix unit = decode_entries(field, member(v, "unit", where), {n}, {}, where + " unit");
    ws.algebras.emplace(name, checked(where, [&] { return Algebra(mult, unit.column(0)); }));
  }
  for (const auto& [name, v] : section(doc, "coalgebras").items()) {
    const std::string where = "coalgebra '" + name + "'";
    const std::size_t n = dim_member(v, where);
    Matrix comult = decode_entries(field, member(v, "comult", where), {n, n}, {n}, where + " comult");
    Matrix counit = decode_entries(field, member(v, "counit", where), {}, {n}, where + " counit");
    ws.coalgebras.emplace(name, checked(where, [&] { return Coalgebra(comult, counit); }));
  }
  for (const auto& [name, v] : section(doc, "modules").items()) {
    const std::string where = "module '" + name + "'";
    const std::string over = string_member(v, "over", where);
    const Algebra& a = lookup(ws.algebras, over, where, "algebra");
    const std::size_t n = dim_member(v, where);
    Matrix action = decode_entries(field, member(v, "action", where), {n}, {a.dim(), n}, where + " action");
    ws.modules.emplace(name, ModuleEntry{over, checked(where, [&] { return Module(a, action); })});
  }
  for (const auto& [name, v] : section(doc, "comodules").items()) {
    const std::string where = "comodule '" + name + "'";
    const std::string over = string_member(v, "over", where);
    const Coalgebra& c = lookup(ws.coalgebras, over, where, "coalgebra");
    const std::size_t n = dim_member(v, where);
    Matrix coaction = decode_entries(field, member(v, "coaction", where), {n, c.dim()}, {n}, where + " coaction");
    ws.comodules.emplace(name, ComoduleEntry{over, checked(where, [&] { return Comodule(c, coaction); })});
  }
  for (const auto& [name, v] : section(doc, "algebra_maps").items()) {
    const std::string where = "algebra map '" + name + "'";
    const std::string s = string_member(v, "source", where), t = string_member(v, "target", where);
    const Algebra& a = lookup(ws.algebras, s, where, "algebra");
    const Algebra& b = lookup(ws.algebras, t, where, "algebra");
    Matrix map = decode_entries(field, member(v, "map", where), {b.dim()}, {a.dim()}, where + " map");
    ws.algebra_maps.emplace(name, AlgebraMapEntry{s, t, checked(where, [&] { return AlgebraMorphism(a, b, map); })});
  }
  for (const auto& [name, v] : section(doc, "coalgebra_maps").items()) {
    const std::string where = "coalgebra map '" + name + "'";
    const std::string s = string_member(v, "source", where), t = string_member(v, "target", where);
    const Coalgebra& c = lookup(ws.coalgebras, s, where, "coalgebra");
    const Coalgebra& d = lookup(ws.coalgebras, t, where, "coalgebra");
    Matrix map = decode_entries(field, member(v, "map", where), {d.dim()}, {c.dim()}, where + " map");
    ws.coalgebra_maps.emplace(name,
                              CoalgebraMapEntry{s, t, checked(where, [&] { return CoalgebraMorphism(c, d, map); })});
  }
  for (const auto& [name, v] : section(doc, "measurings").items()) {
    const std::string where = "measuring '" + name + "'";
    const std::string cn = string_member(v, "coalgebra", where), an = string_member(v, "source", where),
                      bn = string_member(v, "target", where);
    const Coalgebra& c = lookup(ws.coalgebras, cn, where, "coalgebra");
    const Algebra& a = lookup(ws.algebras, an, where, "algebra");
    const Algebra& b = lookup(ws.algebras, bn, where, "algebra");
    Matrix sigma = decode_entries(field, member(v, "sigma", where), {b.dim()}, {c.dim(), a.dim()}, where + " sigma");
    ws.measurings.emplace(name, MeasuringEntry{cn, an, bn, checked(where, [&] { return Measuring(c, a, b, sigma); })});
  }
  for (const auto& [name, v] : section(doc, "module_measurings").items()) {
    const std::string where = "module measuring '" + name + "'";
    const std::string sn = string_member(v, "measuring", where), xn = string_member(v, "comodule", where),
                      mn = string_member(v, "module_src", where), nn = string_member(v, "module_tgt", where);
    const Measuring& s = lookup(ws.measurings, sn, where, "measuring").measuring;
    const Comodule& x = lookup(ws.comodules, xn, where, "comodule").comodule;
    const Module& m = lookup(ws.modules, mn, where, "module").module;
    const Module& n = lookup(ws.modules, nn, where, "module").module;
    Matrix ellbar =
        decode_entries(field, member(v, "ellbar", where), {n.dim()}, {m.dim(), x.dim()}, where + " ellbar");
    ws.module_measurings.emplace(
        name, ModuleMeasuringEntry{sn, xn, mn, nn, checked(where, [&] { return ModuleMeasuring(s, x, m, n, ellbar); })});
  }
  for (const auto& [name, v] : section(doc, "diagrams").items()) {
    const std::string where = "diagram '" + name + "'";
    DiagramEntry entry;
    entry.diagram.field = field;
    const json& objects = member(v, "objects", where);
    if (!objects.is_array()) schema_error(where, "'objects' must be an array");
    for (const auto& o : objects) {
      if (!o.is_string()) schema_error(where, "object names must be strings");
      entry.objects.push_back(o.get<std::string>());
      entry.diagram.objects.push_back(lookup(ws.comodules, entry.objects.back(), where, "comodule").comodule);
    }
    const json& edges = v.contains("edges") ? v["edges"] : json::array();
    if (!edges.is_array()) schema_error(where, "'edges' must be an array");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string at = where + " edge " + std::to_string(e);
      const json& ej = edges[e];
      const json& from = member(ej, "from", at);
      const json& to = member(ej, "to", at);
      if (!from.is_number_unsigned() || !to.is_number_unsigned()) schema_error(at, "'from' and 'to' must be indices");
      DiagramEdgeEntry edge{from.get<std::size_t>(), to.get<std::size_t>(), string_member(ej, "comap", at),
                            Matrix(field, 0, 0)};
      if (edge.from >= entry.objects.size() || edge.to >= entry.objects.size())
        schema_error(at, "object index out of range");
      const CoalgebraMorphism& g = lookup(ws.coalgebra_maps, edge.comap, at, "coalgebra map").morphism;
      const Comodule& xs = entry.diagram.objects[edge.from];
      const Comodule& xt = entry.diagram.objects[edge.to];
      edge.map = decode_entries(field, member(ej, "map", at), {xt.dim()}, {xs.dim()}, at + " map");
      entry.diagram.edges.push_back(
          ComodDiagramEdge{edge.from, edge.to, checked(at, [&] { return ComodMorphism(xs, xt, g, edge.map); })});
      entry.edges.push_back(std::move(edge));
    }
    ws.diagrams.emplace(name, std::move(entry));
  }
  return ws;
}

Workspace load_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError(WorkspaceError::Kind::parse, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_workspace(buf.str());
}

// Two-space indentation, except that arrays holding no objects (sparse
// entries, index lists, name lists) stay on one line, one entry per line.
void pretty(const json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + json(key).dump() + ": ";
      pretty(value, indent + 2, out);
    }
    out += "\n" + std::string(indent, ' ') + "}";
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object() || e.is_array(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      if (j[i].is_object())
        pretty(j[i], indent + 2, out);
      else
        out += j[i].dump();
      if (i + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

std::string serialize_workspace(const Workspace& ws) {
  json doc = json::object();
  doc["format"] = kWorkspaceFormat;
  doc["field"] = ws.field.name();
  auto put = [&](const char* key, json value) {
    if (!value.empty()) doc[key] = std::move(value);
  };
  json algebras = json::object();
  for (const auto& [name, a] : ws.algebras) {
    const std::size_t n = a.dim();
    algebras[name] = {{"dim", n},
                      {"mult", encode_entries(a.mult(), {n}, {n, n})},
                      {"unit", encode_entries(Matrix::from_columns(ws.field, n, {a.unit()}), {n}, {})}};
  }
  put("algebras", std::move(algebras));
  json coalgebras = json::object();
  for (const auto& [name, c] : ws.coalgebras) {
    const std::size_t n = c.dim();
    coalgebras[name] = {{"dim", n},
                        {"comult", encode_entries(c.comult(), {n, n}, {n})},
                        {"counit", encode_entries(c.counit(), {}, {n})}};
  }
  put("coalgebras", std::move(coalgebras));
  json modules = json::object();
  for (const auto& [name, e] : ws.modules) {
    const std::size_t n = e.module.dim();
    modules[name] = {{"over", e.over},
                     {"dim", n},
                     {"action", encode_entries(e.module.action(), {n}, {e.module.over().dim(), n})}};
  }
  put("modules", std::move(modules));
  json comodules = json::object();
  for (const auto& [name, e] : ws.comodules) {
    const std::size_t n = e.comodule.dim();
    comodules[name] = {{"over", e.over},
                       {"dim", n},
                       {"coaction", encode_entries(e.comodule.coaction(), {n, e.comodule.over().dim()}, {n})}};
  }
  put("comodules", std::move(comodules));
  json amaps = json::object();
  for (const auto& [name, e] : ws.algebra_maps)
    amaps[name] = {{"source", e.source}, {"target", e.target}, {"map", encode_entries(e.morphism.map(), {e.morphism.map().rows()}, {e.morphism.map().cols()})}};
  put("algebra_maps", std::move(amaps));
  json cmaps = json::object();
  for (const auto& [name, e] : ws.coalgebra_maps)
    cmaps[name] = {{"source", e.source}, {"target", e.target}, {"map", encode_entries(e.morphism.map(), {e.morphism.map().rows()}, {e.morphism.map().cols()})}};
  put("coalgebra_maps", std::move(cmaps));
  json measurings = json::object();
  for (const auto& [name, e] : ws.measurings) {
    const Measuring& m = e.measuring;
    measurings[name] = {{"coalgebra", e.coalgebra},
                        {"source", e.source},
                        {"target", e.target},
                        {"sigma", encode_entries(m.sigma(), {m.target().dim()}, {m.coalgebra().dim(), m.source().dim()})}};
  }
  put("measurings", std::move(measurings));
  json mms = json::object();
  for (const auto& [name, e] : ws.module_measurings) {
    const ModuleMeasuring& mm = e.module_measuring;
    mms[name] = {{"measuring", e.measuring},
                 {"comodule", e.comodule},
                 {"module_src", e.module_src},
                 {"module_tgt", e.module_tgt},
                 {"ellbar", encode_entries(mm.ellbar(), {mm.module_tgt().dim()},
                                           {mm.module_src().dim(), mm.comodule().dim()})}};
  }
  put("module_measurings", std::move(mms));
  json diagrams = json::object();
  for (const auto& [name, d] : ws.diagrams) {
    json edges = json::array();
    for (const auto& e : d.edges)
      edges.push_back({{"from", e.from},
                       {"to", e.to},
                       {"comap", e.comap},
                       {"map", encode_entries(e.map, {e.map.rows()}, {e.map.cols()})}});
    diagrams[name] = {{"objects", d.objects}, {"edges", std::move(edges)}};
  }
  put("diagrams", std::move(diagrams));
  std::string out;
  pretty(doc, 0, out);
  return out + "\n";
}

void save_workspace(const Workspace& ws, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WorkspaceError(WorkspaceError::Kind::parse, "cannot write " + path.string());
  out << serialize_workspace(ws);
}

}  // namespace measuringkit::cli
