#include "measuringkit_cli/fuzz.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include "measuringkit/constructions.hpp"
#include "measuringkit/enrichment.hpp"
#include "measuringkit/families.hpp"
#include "measuringkit/generators.hpp"
#include "measuringkit/global_cats.hpp"
#include "measuringkit/qmodule.hpp"
#include "measuringkit/scalars_functors.hpp"

namespace measuringkit::cli {

namespace {

using Rng = std::mt19937_64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index, std::size_t attempt) {
  return splitmix(splitmix(seed) ^ splitmix(index * 0x100000001b3ULL + attempt));
}

// Order-sensitive hash of the checks a case ran, for the report digest.
std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
  return (h ^ 0xff) * 0x100000001b3ULL;
}

std::size_t at_most(std::size_t dim_max, std::size_t cap) { return std::max<std::size_t>(1, std::min(dim_max, cap)); }

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[rng() % v.size()];
}

void flip(Matrix& m, std::size_t r, std::size_t c) { m.at(r, c) += m.field().one(); }

bool cocommutative(const Coalgebra& c) {
  return swap_map(c.field(), c.dim(), c.dim()) * c.comult() == c.comult();
}

Vector random_vector(const Field& f, std::size_t n, Rng& rng) {
  Vector v(n, f.zero());
  for (auto& x : v) x = gen::random_scalar(f, rng);
  return v;
}

// Measurings by enumeration over F_p, curated families over Q.
Measuring some_measuring(const Field& f, std::size_t dim_max, Rng& rng) {
  if (f.is_finite()) return gen::random_measuring(f, at_most(dim_max, 2), rng);
  switch (rng() % 3) {
    case 0:
      return evaluation_measuring(gen::random_algebra(f, at_most(dim_max, 3), rng));
    case 1:
      return algebra_map_measuring(AlgebraMorphism::identity(gen::random_algebra(f, at_most(dim_max, 3), rng)));
    default:
      return derivation_measuring(truncated_polynomial_algebra(f, 2), Matrix(f, 2, 2, {0, 0, 0, 1}));  // x d/dx
  }
}

Measuring some_measuring_from(const Algebra& a, std::size_t dim_max, Rng& rng) {
  if (a.field().is_finite()) return gen::random_measuring_from(a, at_most(dim_max, 2), rng);
  return algebra_map_measuring(AlgebraMorphism::identity(a));
}

// Algebra maps A -> B are the measurings by k.
std::optional<AlgebraMorphism> some_algebra_map(const Algebra& a, const Algebra& b, Rng& rng) {
  if (!a.field().is_finite()) return std::nullopt;
  auto all = gen::all_measurings(ground_coalgebra(a.field()), a, b, 1u << 12);
  if (all.empty()) return std::nullopt;
  return AlgebraMorphism(a, b, pick(all, rng).sigma());
}

std::optional<CoalgebraMorphism> some_coalgebra_map(const Coalgebra& c, const Coalgebra& d, Rng& rng) {
  if (!c.field().is_finite()) return std::nullopt;
  auto all = all_coalgebra_morphisms(c, d, 1u << 12);
  if (all.empty()) return std::nullopt;
  return pick(all, rng);
}

// Structure constants of Hom(C, A) from the defining sum on elementary maps.
Matrix naive_convolution(const Coalgebra& c, const Algebra& a) {
  const std::size_t cd = c.dim(), ad = a.dim(), n = cd * ad;
  Matrix mult(a.field(), n, n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t p = u / cd, x = u % cd, q = v / cd, y = v % cd;
      for (std::size_t z = 0; z < cd; ++z) {
        const Scalar& d = c.comult().at(x * cd + y, z);
        if (d.is_zero()) continue;
        for (std::size_t o = 0; o < ad; ++o) mult.at(o * cd + z, u * n + v) += d * a.mult().at(o, p * ad + q);
      }
    }
  return mult;
}

// Basis of the space of lbar : M (x) X -> N satisfying the module-measuring
// identity, which is linear in lbar.
std::vector<Matrix> module_measuring_basis(const Measuring& base, const Comodule& x, const Module& m, const Module& n) {
  const Field& f = base.sigma().field();
  const std::size_t da = m.over().dim(), dm = m.dim(), dx = x.dim(), dn = n.dim(), dc = x.over().dim();
  const std::size_t unknowns = dn * dm * dx, eqs = dn * da * dm * dx;
  const Matrix spread = tensor_map(Matrix::identity(f, da * dm), x.coaction());
  const Matrix perm = tensor_permutation(f, {da, dm, dx, dc}, {3, 0, 1, 2});
  const Matrix lhs_factor = tensor_map(m.action(), Matrix::identity(f, dx));
  Matrix system(f, eqs, unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) {
    Matrix e(f, dn, dm * dx);
    e.at(k / (dm * dx), k % (dm * dx)) = f.one();
    Matrix diff = e * lhs_factor;
    Matrix rhs = n.action() * tensor_map(base.sigma(), e) * perm * spread;
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < da * dm * dx; ++c) system.at(r * da * dm * dx + c, k) = diff.at(r, c) - rhs.at(r, c);
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(system)) {
    Matrix l(f, dn, dm * dx);
    for (std::size_t k = 0; k < unknowns; ++k) l.at(k / (dm * dx), k % (dm * dx)) = v[k];
    out.push_back(std::move(l));
  }
  return out;
}

LawReport linear_algebra(const Field& f, std::size_t dim_max, Rng& rng, const std::string&) {
  LawReport r;
  const std::size_t rows = 1 + rng() % (dim_max + 1), cols = 1 + rng() % (dim_max + 1);
  Matrix a = gen::random_matrix(f, rows, cols, rng);
  Vector x = random_vector(f, cols, rng);
  Vector b = a.apply(x);
  auto y = solve(a, b);
  r.add("solve finds a preimage of a consistent system", y && a.apply(*y) == b);
  auto ker = kernel(a);
  bool annihilated = true;
  for (const auto& v : ker) annihilated = annihilated && a.apply(v) == Vector(rows, f.zero());
  r.add("kernel vectors are annihilated", annihilated);
  r.add("rank-nullity", ker.size() + rank(a) == cols,
        "dim ker " + std::to_string(ker.size()) + " + rank " + std::to_string(rank(a)) + " != " + std::to_string(cols));

  const std::size_t m = 1 + rng() % dim_max, n = 1 + rng() % dim_max;
  Matrix f1 = gen::random_matrix(f, m, m, rng), g1 = gen::random_matrix(f, n, n, rng);
  Matrix f2 = gen::random_matrix(f, m, m, rng), g2 = gen::random_matrix(f, n, n, rng);
  r.add("tensor_map is functorial", tensor_map(f1, g1) * tensor_map(f2, g2) == tensor_map(f1 * f2, g1 * g2));
  r.add("swap is an involution", swap_map(f, n, m) * swap_map(f, m, n) == Matrix::identity(f, m * n));
  r.add("swap is natural", swap_map(f, m, n) * tensor_map(f1, g1) == tensor_map(g1, f1) * swap_map(f, m, n));

  const std::size_t amb = 1 + rng() % (dim_max + 1);
  std::vector<Vector> us, vs;
  for (std::size_t i = 0, cnt = rng() % (amb + 1); i < cnt; ++i) us.push_back(random_vector(f, amb, rng));
  for (std::size_t i = 0, cnt = rng() % (amb + 1); i < cnt; ++i) vs.push_back(random_vector(f, amb, rng));
  Subspace u = Subspace::span(f, amb, us), v = Subspace::span(f, amb, vs);
  r.add("dim (U + V) + dim (U n V) = dim U + dim V",
        u.sum(v).dim() + u.intersection(v).dim() == u.dim() + v.dim());
  r.add("dim U + dim U^perp = ambient", u.dim() + u.annihilator().dim() == amb);

  Algebra alg = gen::random_algebra(f, at_most(dim_max, 3), rng);
  std::vector<Vector> seed{random_vector(f, alg.dim(), rng)};
  Subspace cl = multiplicative_closure(seed, alg.mult(), alg.unit());
  bool closed = cl.contains(alg.unit()) && cl.contains(seed[0]);
  for (const auto& p : cl.basis())
    for (const auto& q : cl.basis()) closed = closed && cl.contains(alg.mult().apply(tensor_vector(p, q)));
  r.add("multiplicative closure contains the seed and is closed", closed);
  return r;
}

LawReport algebra_core(const Field& f, std::size_t dim_max, Rng& rng, const std::string& fault) {
  LawReport r;
  Algebra a = gen::random_algebra(f, at_most(dim_max, 3), rng), b = gen::random_algebra(f, at_most(dim_max, 2), rng);
  Coalgebra c = gen::random_coalgebra(f, at_most(dim_max, 3), rng), d = gen::random_coalgebra(f, at_most(dim_max, 2), rng);
  r.merge(check_algebra(tensor_algebra(a, b)), "tensor algebra ");
  r.merge(check_coalgebra(tensor_coalgebra(c, d)), "tensor coalgebra ");
  r.merge(check_coalgebra(dual_coalgebra(a)), "dual coalgebra ");
  Module m = gen::random_module(a, at_most(dim_max, 2), rng);
  r.merge(check_module(m), "random module ");
  Comodule x = gen::random_comodule(c, at_most(dim_max, 2), rng);
  r.merge(check_comodule(x), "random comodule ");

  Algebra conv = convolution_algebra(c, a);
  Matrix mult = conv.mult();
  if (fault == "convolution") flip(mult, 0, 0);
  const Matrix naive = naive_convolution(c, a);
  std::string where;
  for (std::size_t i = 0; i < mult.rows() && where.empty(); ++i)
    for (std::size_t j = 0; j < mult.cols() && where.empty(); ++j)
      if (mult.at(i, j) != naive.at(i, j))
        where = "entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " + mult.at(i, j).to_string() +
                " != " + naive.at(i, j).to_string();
  r.add("convolution product matches the defining sum", where.empty(), where);
  r.merge(check_algebra(conv), "convolution algebra ");

  if (cocommutative(c)) {
    Module h = hom_module(x, m);
    r.merge(check_module(h), "hom module ");
  }
  Matrix psi = lax_structure_psi(f, c.dim(), 1, d.dim(), 1);
  r.merge(check_algebra_morphism(tensor_algebra(dual_algebra(c), dual_algebra(d)), dual_algebra(tensor_coalgebra(c, d)), psi),
          "psi on duals ");
  return r;
}

LawReport change_of_scalars(const Field& f, std::size_t dim_max, Rng& rng, const std::string&) {
  LawReport r;
  Algebra a = gen::random_algebra(f, at_most(dim_max, 2), rng), b = gen::random_algebra(f, at_most(dim_max, 2), rng);
  auto fm = some_algebra_map(a, b, rng);
  if (!fm) {
    b = a;
    fm = AlgebraMorphism::identity(a);
  }
  Module m = gen::random_module(a, at_most(dim_max, 2), rng), n = gen::random_module(b, at_most(dim_max, 2), rng);
  r.merge(check_module(restrict(*fm, n)), "restriction ");
  r.merge(check_extension_adjunction(*fm, m, n), "extension ");
  r.merge(check_module(coinduce(*fm, m).module), "coinduction ");

  Coalgebra c = gen::random_coalgebra(f, at_most(dim_max, 2), rng), d = gen::random_coalgebra(f, at_most(dim_max, 2), rng);
  auto gm = some_coalgebra_map(c, d, rng);
  if (!gm) {
    d = c;
    gm = CoalgebraMorphism::identity(c);
  }
  Comodule x = gen::random_comodule(c, at_most(dim_max, 2), rng), y = gen::random_comodule(d, at_most(dim_max, 2), rng);
  r.merge(check_comodule(corestrict(*gm, x)), "corestriction ");
  r.merge(check_comodule(cotensor(y, *gm).comodule), "cotensor ");
  return r;
}

LawReport measurings(const Field& f, std::size_t dim_max, Rng& rng, const std::string& fault) {
  LawReport r;
  Measuring m = some_measuring(f, dim_max, rng);
  const Algebra& a = m.source();
  const Algebra& b = m.target();
  const std::size_t dc = m.coalgebra().dim();
  r.merge(check_measuring(m.sigma(), m.coalgebra(), a, b));
  r.add("transpose round trip",
        rho_to_sigma(sigma_to_rho(m.sigma(), dc, a.dim(), b.dim()), dc, a.dim(), b.dim()) == m.sigma());
  Representation rep = measuring_to_rep(m);
  r.merge(rep.report, "representation ");
  r.merge(check_representation(present_measuring_algebra(a, b), rep.target, rep.images), "presented algebra ");

  UniversalFragment pf = p_fragment(m);
  auto h = factor_through_fragment(m, pf);
  Matrix expected = m.sigma();
  if (fault == "fragment") flip(expected, 0, 0);
  r.add("measuring factors through its fragment",
        h && pf.universal_measuring().sigma() * tensor_map(h->map(), Matrix::identity(f, a.dim())) == expected);
  r.merge(lemma_triangle_check(m, pf), "lemma ");

  Measuring m2 = some_measuring_from(a, dim_max, rng);
  if (m2.target() == b) {
    UniversalFragment merged = merge_fragments(pf, p_fragment(m2));
    r.add("both measurings factor through the merged fragment",
          factor_through_fragment(m, merged).has_value() && factor_through_fragment(m2, merged).has_value());
  } else {
    r.add("merging a fragment with itself keeps its dimension",
          merge_fragments(pf, pf).carrier().dim() == pf.carrier().dim());
  }
  try {
    bool maps = true;
    for (const auto& p : grouplike_points(pf)) maps = maps && check_algebra_morphism(a, b, p.map()).ok();
    r.add("grouplike points are algebra maps", maps);
  } catch (const EnumerationUnsupported&) {
  }
  r.add("finite dual is the linear dual", finite_dual(a) == dual_coalgebra(a));
  return r;
}

LawReport enrichment(const Field& f, std::size_t dim_max, Rng& rng, const std::string&) {
  LawReport r;
  Coalgebra c = gen::random_coalgebra(f, at_most(dim_max, 2), rng), d = gen::random_coalgebra(f, at_most(dim_max, 2), rng),
            e = gen::random_coalgebra(f, at_most(dim_max, 2), rng);
  Algebra a = gen::random_algebra(f, at_most(dim_max, 2), rng);
  r.merge(check_action_axioms(c, d, e, a), "action ");
  r.merge(convolution_iso_beta(c, d, a).report, "beta ");

  Measuring first = some_measuring(f, dim_max, rng);
  Measuring second = some_measuring_from(first.target(), dim_max, rng);
  Measuring third = some_measuring_from(second.target(), dim_max, rng);
  Measuring comp = compose_measurings(second, first);
  r.merge(check_measuring(comp.sigma(), comp.coalgebra(), comp.source(), comp.target()), "composite ");
  r.merge(check_enriched_category_axioms(third, second, first), "enriched ");
  Measuring j = enriched_unit(a);
  r.add("enriched unit is the identity on a 1-dimensional fragment",
        j.sigma() == Matrix::identity(f, a.dim()) && p_fragment(j).carrier().dim() == 1);
  return r;
}

LawReport global_comod(const Field& f, std::size_t dim_max, Rng& rng, const std::string& fault) {
  LawReport r;
  Coalgebra c = gen::random_coalgebra(f, at_most(dim_max, 2), rng), d = gen::random_coalgebra(f, at_most(dim_max, 2), rng);
  Comodule x = gen::random_comodule(c, at_most(dim_max, 2), rng), y = gen::random_comodule(d, at_most(dim_max, 2), rng);
  r.merge(check_comodule(tensor_comod_objects(x, y)), "tensor ");

  auto gm = some_coalgebra_map(c, d, rng);
  if (!gm) {
    d = c;
    gm = CoalgebraMorphism::identity(c);
  }
  const std::size_t dv = 1 + rng() % 2;
  Matrix k = gen::random_matrix(f, dv, x.dim(), rng);
  ComodMorphism l = adjunction_transpose(x, k, *gm);
  LinearCoalgebraPair back = adjunction_untranspose(l, dv);
  r.add("adjunction transpose and untranspose are inverse", back.linear == k && back.coalgebra.map() == gm->map());
  ComodMorphism twice = compose_comod(ComodMorphism::identity(l.target()), compose_comod(l, ComodMorphism::identity(x)));
  r.add("identities are units for composition", twice.map() == l.map() && twice.comap().map() == l.comap().map());
  r.merge(check_comodule(cofree_comodule(dv, d)), "cofree ");
  r.merge(gh::check_laws(dv, d), "GH ");
  r.merge(gh::check_naturality(gen::random_matrix(f, 1 + rng() % 2, dv, rng), *gm), "GH naturality ");

  ComodDiagram diagram;
  diagram.field = f;
  Comodule gx = corestrict(*gm, x);
  diagram.objects = {x, gx};
  diagram.edges.push_back({0, 1, ComodMorphism(x, gx, *gm, Matrix::identity(f, x.dim()))});
  ComodColimit col = comod_colimit(diagram);
  ComodCocone cocone = col.cocone;
  if (fault == "colimit" && cocone.legs[0].map().rows() > 0) {
    Matrix bad = cocone.legs[0].map();
    flip(bad, 0, 0);
    cocone.legs[0] = ComodMorphism::unchecked(cocone.legs[0].source(), cocone.legs[0].target(), cocone.legs[0].comap(), bad);
  } else if (fault == "colimit") {
    r.add("colimit fault has no entry to corrupt", false, "apex is zero-dimensional");
  }
  r.merge(check_cocone(diagram, cocone), "colimit ");
  Mediator med = mediate(diagram, col, col.cocone);
  r.add("the colimit mediates uniquely to itself", med.morphism.has_value() && med.unique);

  if (cocommutative(c)) {
    Algebra bb = gen::random_algebra(f, at_most(dim_max, 2), rng);
    Module n = gen::random_module(bb, at_most(dim_max, 2), rng);
    Module hx = hom_global(x, n);
    r.merge(check_module(hx), "global hom ");
    ModMorphism id = hom_global(ComodMorphism::identity(x), n);
    r.add("global hom preserves identities", id.map() == Matrix::identity(f, hx.dim()));
    r.add("identity composes trivially", compose_mod(id, id).map() == id.map());
  }
  return r;
}

LawReport measuring_comodules(const Field& f, std::size_t dim_max, Rng& rng, const std::string&) {
  LawReport r;
  Measuring base = some_measuring(f, dim_max, rng);
  Comodule x = gen::random_comodule(base.coalgebra(), at_most(dim_max, 2), rng);
  Module m = gen::random_module(base.source(), at_most(dim_max, 2), rng);
  Module n = gen::random_module(base.target(), at_most(dim_max, 2), rng);
  Matrix lbar(f, n.dim(), m.dim() * x.dim());
  for (const auto& e : module_measuring_basis(base, x, m, n)) {
    Matrix term = e;
    term *= gen::random_scalar(f, rng);
    lbar += term;
  }
  ModuleMeasuring mm = ModuleMeasuring::unchecked(base, x, m, n, lbar);
  r.merge(check_module_measuring(mm), "module measuring ");
  ComoduleFragment q = q_fragment(mm);
  r.merge(check_comodule(q.carrier()), "Q-fragment carrier ");
  r.merge(check_module_measuring(q.universal()), "Q-fragment universal ");
  auto h = factor_q(mm, q);
  r.add("factor_q recovers the provenance quotient",
        h && h->map() == q.provenance().front().quotient.map() &&
            h->comap().map() == q.provenance().front().quotient.comap().map());
  if (cocommutative(q.carrier().over())) {
    Module hm = alpha_module_structure(q.base(), q.carrier(), n);
    r.merge(check_module(hm), "alpha module ");
  }

  const Coalgebra& c = x.over();
  CoeffCoalgebra co = coeff_coalgebra(x);
  r.merge(check_comodule(co.comodule), "Coeff comodule ");
  r.merge(check_coalgebra_morphism(co.coalgebra, c, co.inclusion), "Coeff inclusion ");

  Coalgebra d = gen::random_coalgebra(f, at_most(dim_max, 2), rng);
  CoalgebraMorphism phi = CoalgebraMorphism::identity(tensor_coalgebra(c, d));
  CoalgHomFragment frag = coalg_hom_fragment(c, d, phi);
  r.add("C embeds in [D, C (x) D]", frag.carrier.dim() == c.dim());
  r.add("the identity of C (x) D factors", factor_through_coalg_hom(c, phi, frag).has_value());

  if (f.is_finite() && x.dim() <= 2) {
    const Coalgebra k = ground_coalgebra(f);
    Comodule unit = trivial_comodule(k, Vector{f.one()}, 1);
    InternalHomCandidate cand{x, CoalgebraMorphism(tensor_coalgebra(c, k), c, Matrix::identity(f, c.dim())),
                              Matrix::identity(f, x.dim())};
    r.merge(comod_internal_hom_check({unit}, unit, x, cand), "H(k, X) = X ");
  }
  return r;
}

}  // namespace

const std::vector<FuzzProperty>& fuzz_properties() {
  static const std::vector<FuzzProperty> props{
      {"linear-algebra",
       {"solve", "kernel", "tensor_map", "swap", "subspace_ops", "multiplicative_closure"},
       linear_algebra},
      {"algebra-core",
       {"check_algebra", "check_coalgebra", "check_module", "check_comodule", "tensor_algebra", "tensor_coalgebra",
        "dual_coalgebra", "dual_algebra", "convolution_algebra", "hom_module", "lax_structure_psi"},
       algebra_core},
      {"change-of-scalars", {"restrict", "corestrict", "extend", "coinduce", "cotensor"}, change_of_scalars},
      {"measurings",
       {"check_measuring", "transpose_measuring", "present_measuring_algebra", "measuring_to_rep", "p_fragment",
        "merge_fragments", "factor_through_fragment", "grouplike_points", "lemma_triangle_check", "finite_dual"},
       measurings},
      {"enrichment",
       {"check_action_axioms", "convolution_iso_beta", "compose_measurings", "enriched_unit",
        "check_enriched_category_axioms"},
       enrichment},
      {"global-comod",
       {"compose_comod", "compose_mod", "tensor_comod_objects", "cofree_comodule", "adjunction_bij", "comonad_GH", "comod_colimit",
        "hom_global"},
       global_comod},
      {"measuring-comodules",
       {"check_module_measuring", "alpha_module_structure", "q_fragment", "factor_q", "comod_internal_hom_check",
        "coalg_hom_fragment", "coeff_coalgebra"},
       measuring_comodules},
  };
  return props;
}

const std::vector<std::string>& fuzz_faults() {
  static const std::vector<std::string> faults{"convolution", "fragment", "colimit"};
  return faults;
}

std::size_t FuzzReport::count(FuzzCase::Status s) const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const FuzzCase& c) { return c.status == s; }));
}

Report FuzzReport::to_report() const {
  Report out;
  for (const auto& p : fuzz_properties()) {
    std::size_t run = 0, skipped = 0, failed = 0, checks = 0;
    std::uint64_t digest = 0xcbf29ce484222325ULL;
    const FuzzCase* first = nullptr;
    for (const auto& c : cases) {
      if (c.property != p.name) continue;
      ++run;
      checks += c.checks;
      digest = fnv1a(digest, std::to_string(c.seed) + ":" + std::to_string(c.digest) + ":" +
                                 std::to_string(static_cast<int>(c.status)));
      if (c.status == FuzzCase::Status::skip) ++skipped;
      if (c.status == FuzzCase::Status::fail) {
        ++failed;
        if (!first) first = &c;
      }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
    std::string check = "fuzz " + p.name + " (" + std::to_string(run) + " cases, " + std::to_string(skipped) +
                        " skipped, " + std::to_string(checks) + " checks, digest " + hex + ")";
    std::string witness;
    if (first)
      witness = std::to_string(failed) + " failing; case " + std::to_string(first->index) + " seed " +
                std::to_string(first->seed) + " shrunk to dim_max " + std::to_string(first->shrunk_dim) + ": " +
                first->witness;
    out.add(std::move(check), failed == 0, std::move(witness));
  }
  return out;
}

namespace {

struct Attempt {
  FuzzCase::Status status;
  std::string witness;
  std::size_t checks = 0;
  std::uint64_t digest = 0;
};


Attempt attempt(const FuzzProperty& p, const Field& f, std::size_t dim_max, std::uint64_t seed,
                const std::string& fault) {
  Rng rng(seed);
  try {
    LawReport r = p.run(f, dim_max, rng, fault);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& c : r.results()) h = fnv1a(fnv1a(h, c.check), c.witness);
    if (r.ok()) return {FuzzCase::Status::pass, {}, r.results().size(), h};
    return {FuzzCase::Status::fail, r.summary(), r.results().size(), h};
  } catch (const EnumerationUnsupported&) {
    return {FuzzCase::Status::skip, {}};
  } catch (const LawViolation& e) {
    return {FuzzCase::Status::fail, std::string("law violation: ") + e.what() + ": " + e.report().summary()};
  } catch (const std::exception& e) {
    return {FuzzCase::Status::fail, std::string("exception: ") + e.what()};
  }
}

FuzzCase run_case(const FuzzConfig& cfg, std::size_t index) {
  const auto& props = fuzz_properties();
  const FuzzProperty& p = props[index % props.size()];
  FuzzCase out;
  out.index = index;
  out.property = p.name;
  out.seed = case_seed(cfg.seed, index, 0);
  Attempt a = attempt(p, cfg.field, cfg.dim_max, out.seed, cfg.fault);
  out.status = a.status;
  out.witness = a.witness;
  out.checks = a.checks;
  out.digest = a.digest;
  out.shrunk_dim = cfg.dim_max;
  if (a.status != FuzzCase::Status::fail || !cfg.shrink) return out;
  // Shrink: the smallest dimension bound at which a related seed still fails.
  constexpr std::size_t kTries = 8;
  for (std::size_t d = 1; d < cfg.dim_max; ++d)
    for (std::size_t t = 0; t < kTries; ++t) {
      const std::uint64_t s = t == 0 ? out.seed : case_seed(cfg.seed, index, t);
      Attempt small = attempt(p, cfg.field, d, s, cfg.fault);
      if (small.status == FuzzCase::Status::fail) {
        out.shrunk_dim = d;
        out.seed = s;
        out.witness = small.witness;
        return out;
      }
    }
  return out;
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& config) {
  if (config.dim_max == 0) throw std::invalid_argument("fuzz: dim_max must be positive");
  if (!config.fault.empty() &&
      std::find(fuzz_faults().begin(), fuzz_faults().end(), config.fault) == fuzz_faults().end())
    throw std::invalid_argument("fuzz: unknown fault '" + config.fault + "'");
  FuzzReport report;
  report.config = config;
  report.cases.resize(config.cases);
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < config.cases; ++i) report.cases[i] = run_case(config, i);
    return report;
  }
  // Each worker owns a strided slice; results land in their own slots.
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < config.cases; i += jobs) report.cases[i] = run_case(config, i);
    });
  for (auto& t : workers) t.join();
  return report;
}

}  // namespace measuringkit::cli
