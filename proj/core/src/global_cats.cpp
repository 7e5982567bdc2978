#include "measuringkit/global_cats.hpp"

#include <functional>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "measuringkit/measuring.hpp"

namespace measuringkit {

using detail::compare;
using detail::require_shape;

LawReport check_comod_morphism(const Comodule& x, const Comodule& y, const CoalgebraMorphism& g, const Matrix& k) {
  if (!(g.source() == x.over()) || !(g.target() == y.over()))
    throw std::invalid_argument("comod morphism: coalgebra map does not run between the base coalgebras");
  require_shape(k, y.dim(), x.dim(), "comod morphism");
  Comodule gx = corestrict(g, x);
  LawReport r;
  const Field& f = x.field();
  compare(r, "commutes with coactions", y.coaction() * k, tensor_map(k, Matrix::identity(f, y.over().dim())) * gx.coaction(),
          {x.dim()});
  return r;
}

LawReport check_mod_morphism(const Module& m, const Module& n, const AlgebraMorphism& f, const Matrix& k) {
  if (!(f.source() == m.over()) || !(f.target() == n.over()))
    throw std::invalid_argument("mod morphism: algebra map does not run between the base algebras");
  require_shape(k, n.dim(), m.dim(), "mod morphism");
  Module fn = restrict(f, n);
  LawReport r;
  compare(r, "commutes with actions", k * m.action(),
          fn.action() * tensor_map(Matrix::identity(m.field(), m.over().dim()), k), {m.over().dim(), m.dim()});
  return r;
}

ComodMorphism::ComodMorphism(Comodule source, Comodule target, CoalgebraMorphism comap, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), comap_(std::move(comap)), map_(std::move(map)) {
  LawReport r = check_comod_morphism(source_, target_, comap_, map_);
  if (!r.ok()) throw LawViolation("not a comod morphism", std::move(r));
}

ComodMorphism::ComodMorphism(Comodule source, Comodule target, CoalgebraMorphism comap, Matrix map, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), comap_(std::move(comap)), map_(std::move(map)) {}

ComodMorphism ComodMorphism::unchecked(Comodule source, Comodule target, CoalgebraMorphism comap, Matrix map) {
  return ComodMorphism(std::move(source), std::move(target), std::move(comap), std::move(map), Unchecked{});
}

ComodMorphism ComodMorphism::identity(const Comodule& x) {
  return unchecked(x, x, CoalgebraMorphism::identity(x.over()), Matrix::identity(x.field(), x.dim()));
}

ModMorphism::ModMorphism(Module source, Module target, AlgebraMorphism algmap, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), algmap_(std::move(algmap)), map_(std::move(map)) {
  LawReport r = check_mod_morphism(source_, target_, algmap_, map_);
  if (!r.ok()) throw LawViolation("not a mod morphism", std::move(r));
}

ModMorphism::ModMorphism(Module source, Module target, AlgebraMorphism algmap, Matrix map, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), algmap_(std::move(algmap)), map_(std::move(map)) {}

ModMorphism ModMorphism::unchecked(Module source, Module target, AlgebraMorphism algmap, Matrix map) {
  return ModMorphism(std::move(source), std::move(target), std::move(algmap), std::move(map), Unchecked{});
}

ModMorphism ModMorphism::identity(const Module& m) {
  return unchecked(m, m, AlgebraMorphism::identity(m.over()), Matrix::identity(m.field(), m.dim()));
}

ComodMorphism compose_comod(const ComodMorphism& second, const ComodMorphism& first) {
  if (!(first.target() == second.source())) throw std::invalid_argument("compose_comod: boundary mismatch");
  // h_* g_* X = (hg)_* X, and l . h_* k is l k on the underlying spaces.
  return ComodMorphism::unchecked(first.source(), second.target(), compose(second.comap(), first.comap()),
                                  second.map() * first.map());
}

ModMorphism compose_mod(const ModMorphism& second, const ModMorphism& first) {
  if (!(first.target() == second.source())) throw std::invalid_argument("compose_mod: boundary mismatch");
  return ModMorphism::unchecked(first.source(), second.target(), compose(second.algmap(), first.algmap()),
                                second.map() * first.map());
}

Comodule tensor_comod_objects(const Comodule& x, const Comodule& y) {
  const Field& f = x.field();
  const std::size_t dx = x.dim(), dy = y.dim(), dc = x.over().dim(), dd = y.over().dim();
  Matrix middle = tensor_permutation(f, {dx, dc, dy, dd}, {0, 2, 1, 3});
  return Comodule::unchecked(tensor_coalgebra(x.over(), y.over()), middle * tensor_map(x.coaction(), y.coaction()));
}

Module tensor_mod_objects(const Module& m, const Module& n) {
  const Field& f = m.field();
  const std::size_t da = m.over().dim(), db = n.over().dim();
  Matrix middle = tensor_permutation(f, {da, db, m.dim(), n.dim()}, {0, 2, 1, 3});
  return Module::unchecked(tensor_algebra(m.over(), n.over()), tensor_map(m.action(), n.action()) * middle);
}

Comodule cofree_comodule(std::size_t dim_v, const Coalgebra& d) {
  return Comodule::unchecked(d, tensor_map(Matrix::identity(d.field(), dim_v), d.comult()));
}

ComodMorphism adjunction_transpose(const Comodule& x, const Matrix& k, const CoalgebraMorphism& f) {
  if (!(f.source() == x.over())) throw std::invalid_argument("adjunction_transpose: coalgebra map has the wrong source");
  require_shape(k, k.rows(), x.dim(), "adjunction_transpose");
  Matrix kbar = tensor_map(k, f.map()) * x.coaction();
  return ComodMorphism(x, cofree_comodule(k.rows(), f.target()), f, std::move(kbar));
}

LinearCoalgebraPair adjunction_untranspose(const ComodMorphism& l, std::size_t dim_v) {
  const Coalgebra& d = l.comap().target();
  if (!(l.target() == cofree_comodule(dim_v, d)))
    throw std::invalid_argument("adjunction_untranspose: target is not the cofree comodule on the given space");
  Matrix lin = tensor_map(Matrix::identity(d.field(), dim_v), d.counit()) * l.map();
  return LinearCoalgebraPair{std::move(lin), l.comap()};
}

namespace gh {

LinearCoalgebraPair on_arrow(const Matrix& k, const CoalgebraMorphism& f) {
  return LinearCoalgebraPair{tensor_map(k, f.map()), f};
}

LinearCoalgebraPair counit(std::size_t dim_v, const Coalgebra& d) {
  return LinearCoalgebraPair{tensor_map(Matrix::identity(d.field(), dim_v), d.counit()), CoalgebraMorphism::identity(d)};
}

LinearCoalgebraPair comultiplication(std::size_t dim_v, const Coalgebra& d) {
  return LinearCoalgebraPair{tensor_map(Matrix::identity(d.field(), dim_v), d.comult()),
                             CoalgebraMorphism::identity(d)};
}

LawReport check_laws(std::size_t dim_v, const Coalgebra& d) {
  const Field& f = d.field();
  const std::size_t n = d.dim();
  LawReport r;
  LinearCoalgebraPair delta = comultiplication(dim_v, d);
  LinearCoalgebraPair eps = counit(dim_v, d);
  LinearCoalgebraPair eps_gh = counit(dim_v * n, d);
  LinearCoalgebraPair delta_gh = comultiplication(dim_v * n, d);
  LinearCoalgebraPair gh_eps = on_arrow(eps.linear, eps.coalgebra);
  LinearCoalgebraPair gh_delta = on_arrow(delta.linear, delta.coalgebra);
  const Matrix id = Matrix::identity(f, dim_v * n);

  compare(r, "counit left (eps GH . delta = 1)", eps_gh.linear * delta.linear, id, {dim_v, n});
  compare(r, "counit right (GH eps . delta = 1)", gh_eps.linear * delta.linear, id, {dim_v, n});
  compare(r, "coassociativity (GH delta . delta = delta GH . delta)", gh_delta.linear * delta.linear,
          delta_gh.linear * delta.linear, {dim_v, n});
  const Matrix idd = Matrix::identity(f, n);
  r.add("coalgebra components", eps.coalgebra.map() == idd && delta.coalgebra.map() == idd &&
                                    gh_eps.coalgebra.map() == idd && gh_delta.coalgebra.map() == idd,
        "a coalgebra component is not the identity");
  return r;
}

LawReport check_naturality(const Matrix& k, const CoalgebraMorphism& fm) {
  const Coalgebra& d = fm.source();
  const Coalgebra& e = fm.target();
  const std::size_t dv = k.cols(), dw = k.rows();
  LawReport r;
  LinearCoalgebraPair ghk = on_arrow(k, fm);
  compare(r, "counit naturality", counit(dw, e).linear * ghk.linear, k * counit(dv, d).linear, {dv, d.dim()});
  LinearCoalgebraPair ghghk = on_arrow(ghk.linear, fm);
  compare(r, "comultiplication naturality", comultiplication(dw, e).linear * ghk.linear,
          ghghk.linear * comultiplication(dv, d).linear, {dv, d.dim()});
  return r;
}

LawReport check_coalgebra(const CoalgebraStructure& g) {
  const Field& f = g.base.field();
  const std::size_t n = g.base.dim();
  require_shape(g.gamma, g.dim_v * n, g.dim_v, "GH-coalgebra");
  LawReport r;
  r.add("base component is the identity", g.base_map.map() == Matrix::identity(f, n),
        "eps . gamma = 1 forces the coalgebra component to be the identity");
  compare(r, "counit", counit(g.dim_v, g.base).linear * g.gamma, Matrix::identity(f, g.dim_v), {g.dim_v});
  compare(r, "coassociativity", comultiplication(g.dim_v, g.base).linear * g.gamma,
          on_arrow(g.gamma, g.base_map).linear * g.gamma, {g.dim_v});
  return r;
}

Comodule to_comodule(const CoalgebraStructure& g) {
  LawReport r = check_coalgebra(g);
  if (!r.ok()) throw LawViolation("not a GH-coalgebra", std::move(r));
  return Comodule::unchecked(g.base, g.gamma);
}

CoalgebraStructure from_comodule(const Comodule& x) {
  return CoalgebraStructure{x.dim(), x.over(), x.coaction(), CoalgebraMorphism::identity(x.over())};
}

}  // namespace gh

void validate_diagram(const ComodDiagram& diagram) {
  for (const auto& e : diagram.edges) {
    if (e.from >= diagram.objects.size() || e.to >= diagram.objects.size())
      throw std::invalid_argument("comod diagram: edge endpoint out of range");
    if (!(e.morphism.source() == diagram.objects[e.from]) || !(e.morphism.target() == diagram.objects[e.to]))
      throw std::invalid_argument("comod diagram: edge morphism does not run between its endpoints");
  }
  for (const auto& x : diagram.objects)
    if (!(x.field() == diagram.objects.front().field())) throw std::invalid_argument("comod diagram: mixed fields");
}

LawReport check_cocone(const ComodDiagram& diagram, const ComodCocone& cocone) {
  LawReport r;
  if (cocone.legs.size() != diagram.objects.size()) {
    r.fail("leg count", "expected " + std::to_string(diagram.objects.size()) + " legs");
    return r;
  }
  for (std::size_t j = 0; j < cocone.legs.size(); ++j) {
    const ComodMorphism& leg = cocone.legs[j];
    r.add("leg " + std::to_string(j) + " boundary", leg.source() == diagram.objects[j] && leg.target() == cocone.apex,
          "leg does not run from its object to the apex");
  }
  for (std::size_t i = 0; i < diagram.edges.size(); ++i) {
    const auto& e = diagram.edges[i];
    ComodMorphism via = compose_comod(cocone.legs[e.to], e.morphism);
    const ComodMorphism& direct = cocone.legs[e.from];
    r.add("edge " + std::to_string(i) + " commutes",
          via.map() == direct.map() && via.comap().map() == direct.comap().map(), "legs disagree along the edge");
  }
  return r;
}

namespace {

struct Sum {
  Matrix structure;               // comultiplication or coaction of the direct sum
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;
};

std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& dims, std::size_t& total) {
  std::vector<std::size_t> off;
  total = 0;
  for (auto d : dims) {
    off.push_back(total);
    total += d;
  }
  return off;
}

Matrix injection(const Field& f, std::size_t total, std::size_t offset, std::size_t dim) {
  Matrix m(f, total, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(offset + i, i) = f.one();
  return m;
}

}  // namespace

ComodColimit comod_colimit(const ComodDiagram& diagram) {
  validate_diagram(diagram);
  const Field f = diagram.objects.empty() ? diagram.field : diagram.objects.front().field();
  const std::size_t n = diagram.objects.size();

  // Stage 1: coalgebras.
  std::vector<std::size_t> cdims;
  for (const auto& x : diagram.objects) cdims.push_back(x.over().dim());
  std::size_t ctotal = 0;
  std::vector<std::size_t> coff = offsets_of(cdims, ctotal);
  Matrix sum_comult(f, ctotal * ctotal, ctotal), sum_counit(f, 1, ctotal);
  for (std::size_t j = 0; j < n; ++j) {
    const Coalgebra& c = diagram.objects[j].over();
    const std::size_t d = c.dim(), o = coff[j];
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q)
        for (std::size_t x = 0; x < d; ++x)
          sum_comult.at((o + p) * ctotal + (o + q), o + x) = c.comult().at(p * d + q, x);
    for (std::size_t x = 0; x < d; ++x) sum_counit.at(0, o + x) = c.counit().at(0, x);
  }
  std::vector<Vector> crel;
  for (const auto& e : diagram.edges) {
    const Matrix& g = e.morphism.comap().map();
    for (std::size_t c = 0; c < cdims[e.from]; ++c) {
      Vector v = zero_vector(f, ctotal);
      for (std::size_t t = 0; t < cdims[e.to]; ++t) v[coff[e.to] + t] += g.at(t, c);
      v[coff[e.from] + c] -= f.one();
      crel.push_back(std::move(v));
    }
  }
  Subspace crel_space = Subspace::span(f, ctotal, crel);
  Matrix cproj = crel_space.quotient_projection();
  Matrix csec = crel_space.quotient_section();
  Coalgebra base(tensor_map(cproj, cproj) * sum_comult * csec, sum_counit * csec);
  const std::size_t dl = base.dim();

  std::vector<CoalgebraMorphism> base_legs;
  for (std::size_t j = 0; j < n; ++j)
    base_legs.push_back(CoalgebraMorphism(diagram.objects[j].over(), base, cproj * injection(f, ctotal, coff[j], cdims[j])));

  // Stage 2: corestrict to the base and take the fibre colimit.
  std::vector<std::size_t> xdims;
  for (const auto& x : diagram.objects) xdims.push_back(x.dim());
  std::size_t xtotal = 0;
  std::vector<std::size_t> xoff = offsets_of(xdims, xtotal);
  Matrix sum_coaction(f, xtotal * dl, xtotal);
  for (std::size_t j = 0; j < n; ++j) {
    Comodule cx = corestrict(base_legs[j], diagram.objects[j]);
    const std::size_t d = xdims[j], o = xoff[j];
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t l = 0; l < dl; ++l)
        for (std::size_t xi = 0; xi < d; ++xi) sum_coaction.at((o + x) * dl + l, o + xi) = cx.coaction().at(x * dl + l, xi);
  }
  std::vector<Vector> xrel;
  for (const auto& e : diagram.edges) {
    const Matrix& k = e.morphism.map();
    for (std::size_t x = 0; x < xdims[e.from]; ++x) {
      Vector v = zero_vector(f, xtotal);
      for (std::size_t t = 0; t < xdims[e.to]; ++t) v[xoff[e.to] + t] += k.at(t, x);
      v[xoff[e.from] + x] -= f.one();
      xrel.push_back(std::move(v));
    }
  }
  Subspace xrel_space = Subspace::span(f, xtotal, xrel);
  Matrix xproj = xrel_space.quotient_projection();
  Matrix xsec = xrel_space.quotient_section();
  Comodule apex(base, tensor_map(xproj, Matrix::identity(f, dl)) * sum_coaction * xsec);

  std::vector<ComodMorphism> legs;
  for (std::size_t j = 0; j < n; ++j)
    legs.push_back(ComodMorphism(diagram.objects[j], apex, base_legs[j], xproj * injection(f, xtotal, xoff[j], xdims[j])));

  return ComodColimit{ComodCocone{std::move(apex), std::move(legs)}, std::move(base), std::move(base_legs),
                      std::move(cproj), std::move(csec), std::move(xproj), std::move(xsec)};
}

Mediator mediate(const ComodDiagram& diagram, const ComodColimit& colimit, const ComodCocone& other) {
  Mediator out;
  out.report.merge(check_cocone(diagram, other), "competing cocone: ");
  if (!out.report.ok()) return out;
  const Field& f = colimit.base.field();
  const Coalgebra& e = other.apex.over();

  std::vector<Matrix> gs, ks, taus, sigmas;
  for (std::size_t j = 0; j < other.legs.size(); ++j) {
    gs.push_back(other.legs[j].comap().map());
    ks.push_back(other.legs[j].map());
    taus.push_back(colimit.base_legs[j].map());
    sigmas.push_back(colimit.cocone.legs[j].map());
  }
  Matrix g_all = detail::hstack_all(f, e.dim(), gs);
  Matrix k_all = detail::hstack_all(f, other.apex.dim(), ks);
  Matrix h = g_all * colimit.base_section;
  Matrix u = k_all * colimit.section;
  out.report.add("coalgebra part solves h tau_j = g_j", h * colimit.base_projection == g_all,
                 "competing coalgebra legs do not coequalize the diagram");
  out.report.add("comodule part solves u sigma_j = k_j", u * colimit.projection == k_all,
                 "competing comodule legs do not coequalize the diagram");
  // The homogeneous system h tau_j = 0, u sigma_j = 0 has only the zero
  // solution iff the legs are jointly surjective.
  out.unique = rank(detail::hstack_all(f, colimit.base.dim(), taus)) == colimit.base.dim() &&
               rank(detail::hstack_all(f, colimit.cocone.apex.dim(), sigmas)) == colimit.cocone.apex.dim();
  out.report.add("mediator unique", out.unique, "legs of the colimit are not jointly surjective");
  if (!out.report.ok()) return out;
  LawReport hr = check_coalgebra_morphism(colimit.base, e, h);
  out.report.merge(hr, "mediator coalgebra part: ");
  if (!hr.ok()) return out;
  CoalgebraMorphism hm = CoalgebraMorphism::unchecked(colimit.base, e, h);
  LawReport kr = check_comod_morphism(colimit.cocone.apex, other.apex, hm, u);
  out.report.merge(kr, "mediator comodule part: ");
  if (!kr.ok()) return out;
  out.morphism = ComodMorphism::unchecked(colimit.cocone.apex, other.apex, hm, u);
  return out;
}

namespace {

// Calls fn on particular + sum c_i kernel_i for every coefficient vector
// over F_p.
void for_each_affine(const Field& f, const Vector& particular, const std::vector<Vector>& kernel_basis,
                     std::uint64_t limit, const char* what, const std::function<void(const Vector&)>& fn) {
  if (!f.is_finite()) throw EnumerationUnsupported(std::string(what) + ": enumeration unsupported over Q");
  const std::uint64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < kernel_basis.size(); ++i) {
    total *= p;
    if (total > limit) throw EnumerationUnsupported(std::string(what) + ": enumeration unsupported, too many candidates");
  }
  std::vector<std::uint64_t> digits(kernel_basis.size(), 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    Vector v = particular;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] == 0) continue;
      const Scalar c = f.from_int(static_cast<std::int64_t>(digits[i]));
      for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * kernel_basis[i][j];
    }
    fn(v);
    for (std::size_t i = 0; i < digits.size() && ++digits[i] == p; ++i) digits[i] = 0;
  }
}

Matrix unflatten(const Field& f, const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = v[r * cols + c];
  return m;
}

}  // namespace

std::vector<CoalgebraMorphism> all_coalgebra_morphisms(const Coalgebra& c, const Coalgebra& d, std::uint64_t limit) {
  const Field& f = c.field();
  const std::size_t dc = c.dim(), dd = d.dim();
  // Counit constraint eps_D g = eps_C on the unknowns g[t, x] (index t * dc + x).
  Matrix sys(f, dc, dd * dc);
  Vector rhs(dc, f.zero());
  for (std::size_t x = 0; x < dc; ++x) {
    for (std::size_t t = 0; t < dd; ++t) sys.at(x, t * dc + x) = d.counit().at(0, t);
    rhs[x] = c.counit().at(0, x);
  }
  std::vector<CoalgebraMorphism> out;
  auto particular = solve(sys, rhs);
  if (!particular) return out;
  for_each_affine(f, *particular, kernel(sys), limit, "all_coalgebra_morphisms", [&](const Vector& v) {
    Matrix g = unflatten(f, v, dd, dc);
    if (tensor_map(g, g) * c.comult() == d.comult() * g) out.push_back(CoalgebraMorphism::unchecked(c, d, std::move(g)));
  });
  return out;
}

std::vector<ComodMorphism> all_comod_morphisms(const Comodule& x, const Comodule& y, std::uint64_t limit) {
  const Field& f = x.field();
  const std::size_t dx = x.dim(), dy = y.dim(), dd = y.over().dim();
  std::vector<ComodMorphism> out;
  for (const auto& g : all_coalgebra_morphisms(x.over(), y.over(), limit)) {
    const Matrix gx = corestrict(g, x).coaction();
    // delta_Y k = (k (x) 1) delta_{g_* X}, unknowns k[y, x] at y * dx + x.
    Matrix sys(f, dy * dd * dx, dy * dx);
    for (std::size_t yo = 0; yo < dy; ++yo)
      for (std::size_t e = 0; e < dd; ++e)
        for (std::size_t xi = 0; xi < dx; ++xi) {
          const std::size_t row = (yo * dd + e) * dx + xi;
          for (std::size_t yi = 0; yi < dy; ++yi) sys.at(row, yi * dx + xi) += y.coaction().at(yo * dd + e, yi);
          for (std::size_t xm = 0; xm < dx; ++xm) sys.at(row, yo * dx + xm) -= gx.at(xm * dd + e, xi);
        }
    for_each_affine(f, Vector(dy * dx, f.zero()), kernel(sys), limit, "all_comod_morphisms", [&](const Vector& v) {
      out.push_back(ComodMorphism::unchecked(x, y, g, unflatten(f, v, dy, dx)));
    });
  }
  return out;
}

Module hom_global(const Comodule& x, const Module& n) { return hom_module(x, n); }

ModMorphism hom_global(const ComodMorphism& kg, const Module& n) {
  const Field& f = n.field();
  const Matrix& g = kg.comap().map();
  Module from = hom_module(kg.target(), n);
  Module to = hom_module(kg.source(), n);
  AlgebraMorphism pre(from.over(), to.over(), tensor_map(Matrix::identity(f, n.over().dim()), g.transpose()));
  return ModMorphism(std::move(from), std::move(to), std::move(pre),
                     tensor_map(Matrix::identity(f, n.dim()), kg.map().transpose()));
}

}  // namespace measuringkit
