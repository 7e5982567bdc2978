#include "measuringkit_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "measuringkit/constructions.hpp"
#include "measuringkit/enrichment.hpp"
#include "measuringkit/families.hpp"
#include "measuringkit/global_cats.hpp"
#include "measuringkit/qmodule.hpp"
#include "measuringkit_cli/fuzz.hpp"
#include "measuringkit_cli/report.hpp"
#include "measuringkit_cli/workspace.hpp"

namespace measuringkit::cli {

namespace {

// Raised for usage problems found after option parsing; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string workspace;
  std::string field;
  std::uint64_t seed = 0;
  std::string json;
  std::string save;

  std::string algebra, coalgebra, comodule, diagram, outer, inner;
  std::vector<std::string> measurings, into, module_measurings;

  std::size_t cases = 500;
  std::size_t dim_max = 2;
  std::string inject;
  unsigned jobs = 1;
  bool no_shrink = false;
};

struct Context {
  Options opt;
  Workspace ws;
  bool have_workspace = false;
  std::ostream& out;
};

template <class Map>
const typename Map::mapped_type& find(const Map& map, const std::string& name, const char* kind) {
  if (name.empty()) throw UsageError(std::string("missing --") + kind);
  auto it = map.find(name);
  if (it == map.end()) throw WorkspaceError(WorkspaceError::Kind::reference, std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

void print_coalgebra(std::ostream& out, const std::string& title, const Coalgebra& c) {
  out << title << ": coalgebra of dimension " << c.dim() << "\ncomultiplication\n"
      << c.comult().to_string() << "\ncounit\n" << c.counit().to_string() << "\n";
}

void print_algebra(std::ostream& out, const std::string& title, const Algebra& a) {
  out << title << ": algebra of dimension " << a.dim() << "\nmultiplication\n"
      << a.mult().to_string() << "\nunit " << to_string(a.unit()) << "\n";
}

bool cocommutative(const Coalgebra& c) {
  return swap_map(c.field(), c.dim(), c.dim()) * c.comult() == c.comult();
}

Report validate(Context& ctx) {
  Report r;
  const Workspace& ws = ctx.ws;
  r.add("load " + std::to_string(ws.size()) + " named entries", true);
  for (const auto& [n, a] : ws.algebras) r.merge(check_algebra(a), "algebra " + n + ": ");
  for (const auto& [n, c] : ws.coalgebras) r.merge(check_coalgebra(c), "coalgebra " + n + ": ");
  for (const auto& [n, m] : ws.modules) r.merge(check_module(m.module), "module " + n + ": ");
  for (const auto& [n, x] : ws.comodules) r.merge(check_comodule(x.comodule), "comodule " + n + ": ");
  for (const auto& [n, f] : ws.algebra_maps)
    r.merge(check_algebra_morphism(f.morphism.source(), f.morphism.target(), f.morphism.map()), "algebra map " + n + ": ");
  for (const auto& [n, g] : ws.coalgebra_maps)
    r.merge(check_coalgebra_morphism(g.morphism.source(), g.morphism.target(), g.morphism.map()),
            "coalgebra map " + n + ": ");
  for (const auto& [n, m] : ws.measurings) {
    const Measuring& s = m.measuring;
    r.merge(check_measuring(s.sigma(), s.coalgebra(), s.source(), s.target()), "measuring " + n + ": ");
  }
  for (const auto& [n, q] : ws.module_measurings)
    r.merge(check_module_measuring(q.module_measuring), "module measuring " + n + ": ");
  for (const auto& [n, d] : ws.diagrams) {
    bool ok = true;
    std::string witness;
    try {
      validate_diagram(d.diagram);
    } catch (const std::exception& e) {
      ok = false;
      witness = e.what();
    }
    r.add("diagram " + n + " is well formed", ok, witness);
  }
  return r;
}

Report dual(Context& ctx) {
  Report r;
  if (!ctx.opt.algebra.empty()) {
    const Algebra& a = find(ctx.ws.algebras, ctx.opt.algebra, "algebra");
    Coalgebra d = dual_coalgebra(a);
    r.merge(check_coalgebra(d), "dual coalgebra: ");
    r.add("finite dual equals the linear dual", finite_dual(a) == d);
    print_coalgebra(ctx.out, ctx.opt.algebra + ".dual", d);
    ctx.ws.coalgebras.insert_or_assign(ctx.opt.algebra + ".dual", d);
  } else if (!ctx.opt.coalgebra.empty()) {
    const Coalgebra& c = find(ctx.ws.coalgebras, ctx.opt.coalgebra, "coalgebra");
    Algebra d = dual_algebra(c);
    r.merge(check_algebra(d), "dual algebra: ");
    print_algebra(ctx.out, ctx.opt.coalgebra + ".dual", d);
    ctx.ws.algebras.insert_or_assign(ctx.opt.coalgebra + ".dual", d);
  } else {
    throw UsageError("dual needs --algebra or --coalgebra");
  }
  return r;
}

Report conv(Context& ctx) {
  Report r;
  const Coalgebra& c = find(ctx.ws.coalgebras, ctx.opt.coalgebra, "coalgebra");
  const Algebra& a = find(ctx.ws.algebras, ctx.opt.algebra, "algebra");
  Algebra h = convolution_algebra(c, a);
  r.merge(check_algebra(h), "convolution algebra: ");
  const std::string name = "Hom(" + ctx.opt.coalgebra + "," + ctx.opt.algebra + ")";
  print_algebra(ctx.out, name, h);
  ctx.ws.algebras.insert_or_assign(name, h);
  return r;
}

Report measure_check(Context& ctx) {
  Report r;
  if (ctx.opt.measurings.size() != 1) throw UsageError("measure-check needs exactly one --measuring");
  const Measuring& m = find(ctx.ws.measurings, ctx.opt.measurings[0], "measuring").measuring;
  const std::size_t dc = m.coalgebra().dim(), da = m.source().dim(), db = m.target().dim();
  r.merge(check_measuring(m.sigma(), m.coalgebra(), m.source(), m.target()), "measuring: ");
  const Matrix rho = sigma_to_rho(m.sigma(), dc, da, db);
  r.add("sigma and rho are mutually transpose", rho_to_sigma(rho, dc, da, db) == m.sigma());
  Representation rep = measuring_to_rep(m);
  r.merge(rep.report, "representation: ");
  PresentedAlgebra pa = present_measuring_algebra(m.source(), m.target());
  r.merge(check_representation(pa, rep.target, rep.images), "presented algebra: ");
  ctx.out << "rho : A -> Hom(C, B)\n" << rho.to_string() << "\n";
  return r;
}

Report fragment(Context& ctx) {
  Report r;
  if (ctx.opt.measurings.size() != 1) throw UsageError("fragment needs exactly one --measuring");
  const std::string& name = ctx.opt.measurings[0];
  const MeasuringEntry& e = find(ctx.ws.measurings, name, "measuring");
  UniversalFragment pf = p_fragment(e.measuring);
  r.merge(lemma_triangle_check(e.measuring, pf), "lemma: ");
  r.add("the measuring factors through its fragment", factor_through_fragment(e.measuring, pf).has_value());
  print_coalgebra(ctx.out, name + ".fragment", pf.carrier());
  ctx.ws.coalgebras.insert_or_assign(name + ".fragment", pf.carrier());
  ctx.ws.measurings.insert_or_assign(name + ".universal",
                                     MeasuringEntry{name + ".fragment", e.source, e.target, pf.universal_measuring()});
  return r;
}

UniversalFragment merged_fragment(const Workspace& ws, const std::vector<std::string>& names) {
  std::optional<UniversalFragment> acc;
  for (const auto& n : names) {
    UniversalFragment pf = p_fragment(find(ws.measurings, n, "measuring").measuring);
    if (acc && (acc->source() != pf.source() || acc->target() != pf.target()))
      throw UsageError("measuring '" + n + "' runs between different algebras");
    acc = acc ? merge_fragments(*acc, pf) : pf;
  }
  return *acc;
}

Report merge(Context& ctx) {
  Report r;
  if (ctx.opt.measurings.size() < 2) throw UsageError("merge needs at least two --measuring");
  UniversalFragment merged = merged_fragment(ctx.ws, ctx.opt.measurings);
  for (const auto& n : ctx.opt.measurings)
    r.add(n + " factors through the merged fragment",
          factor_through_fragment(ctx.ws.measurings.at(n).measuring, merged).has_value());
  print_coalgebra(ctx.out, "merged.fragment", merged.carrier());
  const MeasuringEntry& first = ctx.ws.measurings.at(ctx.opt.measurings[0]);
  ctx.ws.coalgebras.insert_or_assign("merged.fragment", merged.carrier());
  ctx.ws.measurings.insert_or_assign(
      "merged.universal", MeasuringEntry{"merged.fragment", first.source, first.target, merged.universal_measuring()});
  return r;
}

Report factor(Context& ctx) {
  Report r;
  if (ctx.opt.measurings.size() != 1 || ctx.opt.into.empty())
    throw UsageError("factor needs one --measuring and at least one --into");
  const std::string& name = ctx.opt.measurings[0];
  const Measuring& m = find(ctx.ws.measurings, name, "measuring").measuring;
  UniversalFragment target = merged_fragment(ctx.ws, ctx.opt.into);
  if (target.source() != m.source() || target.target() != m.target())
    throw UsageError("--measuring and --into run between different algebras");
  auto h = factor_through_fragment(m, target);
  r.add(name + " factors through the fragment", h.has_value(), "no coalgebra map into the fragment reproduces sigma");
  if (h) ctx.out << "factorization " << name << ".coalgebra -> fragment\n" << h->map().to_string() << "\n";
  return r;
}

Report compose(Context& ctx) {
  Report r;
  const MeasuringEntry& o = find(ctx.ws.measurings, ctx.opt.outer, "measuring");
  const MeasuringEntry& i = find(ctx.ws.measurings, ctx.opt.inner, "measuring");
  if (o.source != i.target) throw UsageError("outer measuring does not start where the inner one ends");
  Measuring c = compose_measurings(o.measuring, i.measuring);
  r.merge(check_measuring(c.sigma(), c.coalgebra(), c.source(), c.target()), "composite: ");
  r.merge(check_enriched_category_axioms(enriched_unit(o.measuring.target()), o.measuring, i.measuring), "enriched: ");
  r.merge(check_action_axioms(o.measuring.coalgebra(), i.measuring.coalgebra(), i.measuring.source()), "action: ");
  r.merge(convolution_iso_beta(o.measuring.coalgebra(), i.measuring.coalgebra(), i.measuring.source()).report, "beta: ");
  const std::string name = ctx.opt.outer + "." + ctx.opt.inner;
  print_coalgebra(ctx.out, name + ".coalgebra", c.coalgebra());
  ctx.out << "sigma\n" << c.sigma().to_string() << "\n";
  ctx.ws.coalgebras.insert_or_assign(name + ".coalgebra", c.coalgebra());
  ctx.ws.measurings.insert_or_assign(name, MeasuringEntry{name + ".coalgebra", i.source, o.target, c});
  return r;
}

Report grouplikes(Context& ctx) {
  Report r;
  if (ctx.opt.measurings.size() != 1) throw UsageError("grouplikes needs exactly one --measuring");
  const std::string& name = ctx.opt.measurings[0];
  const MeasuringEntry& e = find(ctx.ws.measurings, name, "measuring");
  UniversalFragment pf = p_fragment(e.measuring);
  std::vector<AlgebraMorphism> points = grouplike_points(pf);
  r.add("grouplike points match grouplike elements of the fragment",
        points.size() == grouplike_elements(pf.carrier()).size());
  ctx.out << points.size() << " algebra maps " << e.source << " -> " << e.target << "\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    r.merge(check_algebra_morphism(points[k].source(), points[k].target(), points[k].map()),
            "point " + std::to_string(k) + ": ");
    ctx.out << "point " << k << "\n" << points[k].map().to_string() << "\n";
    ctx.ws.algebra_maps.insert_or_assign(name + ".point" + std::to_string(k),
                                         AlgebraMapEntry{e.source, e.target, points[k]});
  }
  return r;
}

Report colimit(Context& ctx) {
  Report r;
  const DiagramEntry& d = find(ctx.ws.diagrams, ctx.opt.diagram, "diagram");
  ComodColimit col = comod_colimit(d.diagram);
  r.merge(check_cocone(d.diagram, col.cocone), "cocone: ");
  Mediator self = mediate(d.diagram, col, col.cocone);
  r.add("the colimit mediates uniquely to itself", self.morphism.has_value() && self.unique);
  const std::string name = ctx.opt.diagram + ".colimit";
  print_coalgebra(ctx.out, name + ".base", col.base);
  ctx.out << name << ": comodule of dimension " << col.cocone.apex.dim() << "\ncoaction\n"
          << col.cocone.apex.coaction().to_string() << "\n";
  ctx.ws.coalgebras.insert_or_assign(name + ".base", col.base);
  ctx.ws.comodules.insert_or_assign(name, ComoduleEntry{name + ".base", col.cocone.apex});
  return r;
}

Report qcheck(Context& ctx) {
  Report r;
  if (ctx.opt.module_measurings.size() != 1) throw UsageError("qcheck needs exactly one --module-measuring");
  const ModuleMeasuring& mm = find(ctx.ws.module_measurings, ctx.opt.module_measurings[0], "module measuring").module_measuring;
  r.merge(check_module_measuring(mm), "module measuring: ");
  UniversalFragment pf = p_fragment(mm.base());
  auto h = factor_through_fragment(mm.base(), pf);
  Comodule x = corestrict(*h, mm.comodule());
  if (cocommutative(pf.carrier())) {
    Module hm = alpha_module_structure(pf, x, mm.module_tgt());
    r.merge(check_module(hm), "alpha module structure: ");
  } else {
    ctx.out << "fragment is not cocommutative; alpha module structure not checked\n";
  }
  return r;
}

Report qfragment(Context& ctx) {
  Report r;
  if (ctx.opt.module_measurings.empty()) throw UsageError("qfragment needs at least one --module-measuring");
  std::optional<ComoduleFragment> acc;
  for (const auto& n : ctx.opt.module_measurings) {
    const ModuleMeasuring& mm = find(ctx.ws.module_measurings, n, "module measuring").module_measuring;
    ComoduleFragment q = q_fragment(mm);
    if (acc && (acc->module_src() != q.module_src() || acc->module_tgt() != q.module_tgt()))
      throw UsageError("module measuring '" + n + "' has different modules");
    acc = acc ? merge_q_fragments(*acc, q) : q;
  }
  r.merge(check_comodule(acc->carrier()), "carrier: ");
  r.merge(check_module_measuring(acc->universal()), "universal module measuring: ");
  for (const auto& n : ctx.opt.module_measurings)
    r.add(n + " factors through the Q-fragment", factor_q(ctx.ws.module_measurings.at(n).module_measuring, *acc).has_value());
  print_coalgebra(ctx.out, "qfragment.base", acc->base().carrier());
  ctx.out << "qfragment: comodule of dimension " << acc->carrier().dim() << "\ncoaction\n"
          << acc->carrier().coaction().to_string() << "\n";
  ctx.ws.coalgebras.insert_or_assign("qfragment.base", acc->base().carrier());
  ctx.ws.comodules.insert_or_assign("qfragment", ComoduleEntry{"qfragment.base", acc->carrier()});
  return r;
}

Report coeff(Context& ctx) {
  Report r;
  const ComoduleEntry& e = find(ctx.ws.comodules, ctx.opt.comodule, "comodule");
  CoeffCoalgebra co = coeff_coalgebra(e.comodule);
  r.merge(check_coalgebra(co.coalgebra), "Coeff coalgebra: ");
  r.merge(check_coalgebra_morphism(co.coalgebra, e.comodule.over(), co.inclusion), "inclusion: ");
  r.add("inclusion is injective", rank(co.inclusion) == co.coalgebra.dim());
  r.merge(check_comodule(co.comodule), "comodule over Coeff: ");
  const std::string name = ctx.opt.comodule + ".coeff";
  print_coalgebra(ctx.out, name, co.coalgebra);
  ctx.ws.coalgebras.insert_or_assign(name, co.coalgebra);
  ctx.ws.coalgebra_maps.insert_or_assign(name + ".inclusion",
                                         CoalgebraMapEntry{name, e.over, CoalgebraMorphism(co.coalgebra, e.comodule.over(), co.inclusion)});
  return r;
}

Report fuzz(Context& ctx) {
  FuzzConfig cfg;
  cfg.field = ctx.ws.field;
  cfg.seed = ctx.opt.seed;
  cfg.cases = ctx.opt.cases;
  cfg.dim_max = ctx.opt.dim_max;
  cfg.fault = ctx.opt.inject;
  cfg.shrink = !ctx.opt.no_shrink;
  cfg.jobs = ctx.opt.jobs;
  FuzzReport fr;
  try {
    fr = run_fuzz(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ctx.out << "fuzz over " << cfg.field.name() << ", seed " << cfg.seed << ", " << cfg.cases << " cases, dim_max "
          << cfg.dim_max << ": " << fr.count(FuzzCase::Status::pass) << " passed, "
          << fr.count(FuzzCase::Status::fail) << " failed, " << fr.count(FuzzCase::Status::skip) << " skipped\n";
  return fr.to_report();
}

struct Verb {
  VerbInfo info;
  std::function<Report(Context&)> run;
  bool needs_workspace = true;
};

std::vector<std::string> fuzz_operations() {
  std::vector<std::string> ops{"fuzz"};
  for (const auto& p : fuzz_properties()) ops.insert(ops.end(), p.operations.begin(), p.operations.end());
  return ops;
}

const std::vector<Verb>& verbs() {
  static const std::vector<Verb> table{
      {{"validate", "load a workspace and re-run every law checker",
        {"load", "save", "run_command", "check_algebra", "check_coalgebra", "check_module", "check_comodule", "check_measuring",
         "check_module_measuring"}},
       validate},
      {{"dual", "linear dual of an algebra or coalgebra",
        {"dual_coalgebra", "dual_algebra", "finite_dual", "check_coalgebra", "check_algebra", "save"}},
       dual},
      {{"conv", "convolution algebra Hom(C, A)", {"convolution_algebra", "check_algebra"}}, conv},
      {{"measure-check", "check a measuring and its representation",
        {"check_measuring", "transpose_measuring", "present_measuring_algebra", "measuring_to_rep"}},
       measure_check},
      {{"fragment", "universal fragment of a measuring",
        {"p_fragment", "lemma_triangle_check", "factor_through_fragment"}},
       fragment},
      {{"merge", "merge the fragments of several measurings", {"p_fragment", "merge_fragments", "factor_through_fragment"}},
       merge},
      {{"factor", "factor a measuring through a fragment", {"p_fragment", "merge_fragments", "factor_through_fragment"}},
       factor},
      {{"compose", "compose two measurings and check the enriched laws",
        {"compose_measurings", "enriched_unit", "check_enriched_category_axioms", "check_action_axioms",
         "convolution_iso_beta"}},
       compose},
      {{"grouplikes", "algebra maps as grouplike points of a fragment", {"p_fragment", "grouplike_points"}}, grouplikes},
      {{"colimit", "colimit of a diagram of comodules", {"comod_colimit"}}, colimit},
      {{"qcheck", "check a module-measuring", {"check_module_measuring", "alpha_module_structure", "corestrict"}},
       qcheck},
      {{"qfragment", "Q-fragment of one or more module-measurings", {"q_fragment", "factor_q", "check_comodule"}},
       qfragment},
      {{"coeff", "coefficient coalgebra of a comodule", {"coeff_coalgebra"}}, coeff},
      {{"fuzz", "seeded property suite over random and curated structures", fuzz_operations()}, fuzz, false},
  };
  return table;
}

int emit(const Report& report, Context& ctx, std::ostream& err) {
  ctx.out << report.to_text();
  std::size_t failed = 0;
  for (const auto& e : report.entries()) failed += e.passed ? 0 : 1;
  ctx.out << (failed == 0 ? "ok" : "FAILED") << ": " << report.entries().size() - failed << " of "
          << report.entries().size() << " checks passed\n";
  if (!ctx.opt.json.empty()) {
    std::ofstream f(ctx.opt.json, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << ctx.opt.json << "\n";
      return 2;
    }
    f << report.to_json();
  }
  if (!ctx.opt.save.empty()) save_workspace(ctx.ws, ctx.opt.save);
  return report.ok() ? 0 : 1;
}

}  // namespace

const std::vector<VerbInfo>& verb_table() {
  static const std::vector<VerbInfo> infos = [] {
    std::vector<VerbInfo> v;
    for (const auto& verb : verbs()) v.push_back(verb.info);
    return v;
  }();
  return infos;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"measuringkit: exact computations with measurings, comodules and their fragments", "measuringkit"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--workspace", opt.workspace, "workspace JSON file");
  app.add_option("--field", opt.field, "q or f<p>; must match the workspace");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--json", opt.json, "write the machine-readable report here");

  std::map<std::string, CLI::App*> subs;
  for (const auto& verb : verbs()) {
    CLI::App* sub = app.add_subcommand(verb.info.name, verb.info.summary);
    sub->fallthrough();
    subs[verb.info.name] = sub;
  }
  for (const char* v : {"validate", "dual", "conv", "fragment", "merge", "compose", "grouplikes", "colimit", "qfragment", "coeff"})
    subs[v]->add_option("--save", opt.save, "write the workspace with the results added");
  subs["dual"]->add_option("--algebra", opt.algebra);
  subs["dual"]->add_option("--coalgebra", opt.coalgebra);
  subs["conv"]->add_option("--algebra", opt.algebra)->required();
  subs["conv"]->add_option("--coalgebra", opt.coalgebra)->required();
  for (const char* v : {"measure-check", "fragment", "merge", "factor", "grouplikes"})
    subs[v]->add_option("--measuring", opt.measurings)->required();
  subs["factor"]->add_option("--into", opt.into, "measurings whose merged fragment is the target")->required();
  subs["compose"]->add_option("--outer", opt.outer)->required();
  subs["compose"]->add_option("--inner", opt.inner)->required();
  subs["colimit"]->add_option("--diagram", opt.diagram)->required();
  for (const char* v : {"qcheck", "qfragment"}) subs[v]->add_option("--module-measuring", opt.module_measurings)->required();
  subs["coeff"]->add_option("--comodule", opt.comodule)->required();
  CLI::App* fz = subs["fuzz"];
  fz->add_option("--cases", opt.cases, "number of cases");
  fz->add_option("--dim-max", opt.dim_max, "dimension bound");
  fz->add_option("--inject", opt.inject, "deliberate fault: convolution, fragment or colimit");
  fz->add_option("--jobs", opt.jobs, "worker threads");
  fz->add_flag("--no-shrink", opt.no_shrink, "report failures without shrinking");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Verb* verb = nullptr;
  for (const auto& v : verbs())
    if (subs[v.info.name]->parsed()) verb = &v;

  try {
    std::optional<Field> field;
    if (!opt.field.empty()) field = Field::parse(opt.field);
    Context ctx{opt, Workspace(field.value_or(Field::rationals())), false, out};
    if (!opt.workspace.empty()) {
      ctx.ws = load_workspace(opt.workspace);
      ctx.have_workspace = true;
      if (field && *field != ctx.ws.field)
        throw UsageError("--field " + opt.field + " does not match the workspace field " + ctx.ws.field.name());
    } else if (verb->needs_workspace) {
      throw UsageError(verb->info.name + " needs --workspace");
    } else if (!field) {
      ctx.ws.field = Field::prime(2);
    }
    return emit(verb->run(ctx), ctx, err);
  } catch (const WorkspaceError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == WorkspaceError::Kind::law ? 1 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LawViolation& e) {
    err << "error: " << e.what() << "\n" << e.report().summary() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace measuringkit::cli
