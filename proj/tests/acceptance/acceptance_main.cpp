// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Budgets are wall-clock seconds and are part of the verdict.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diagrams.hpp"
#include "internal_hom.hpp"
#include "measuringkit/constructions.hpp"
#include "measuringkit/enrichment.hpp"
#include "measuringkit/families.hpp"
#include "measuringkit/generators.hpp"
#include "measuringkit/global_cats.hpp"
#include "measuringkit/qmodule.hpp"
#include "measuringkit_cli/commands.hpp"
#include "oracles.hpp"
#include "qbijection.hpp"

using namespace measuringkit;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates a verdict and the first failure.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass_) first_ = what;
    pass_ = false;
    ++failures_;
  }
  bool pass() const { return pass_; }
  std::string failures() const {
    return pass_ ? std::string() : std::to_string(failures_) + " failure(s), first: " + first_;
  }

 private:
  bool pass_ = true;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string key(const Matrix& m) { return m.to_string(); }

Outcome finish(const Verdict& v, std::string detail) {
  if (!v.pass()) detail += "; " + v.failures();
  return {v.pass(), detail};
}

Outcome convolution() {
  Verdict v;
  std::mt19937_64 rng(101);
  std::size_t cases = 0;
  for (const Field& f : {F2, F3})
    for (int t = 0; t < 120; ++t) {
      Coalgebra c = gen::random_coalgebra(f, 3, rng);
      Algebra a = gen::random_algebra(f, 3, rng);
      Algebra h = convolution_algebra(c, a);
      v.require(check_algebra(h).ok(), "convolution algebra fails its laws");
      v.require(h.mult() == oracle::naive_convolution_mult(c, a), "product differs from the defining sum");
      v.require(oracle::algebra_laws(h.mult(), h.unit()), "oracle rejects the convolution algebra");

      // Hom(k, A) = A through f |-> f(1).
      Algebra hk = convolution_algebra(ground_coalgebra(f), a);
      v.require(check_algebra_morphism(hk, a, Matrix::identity(f, a.dim())).ok(), "Hom(k, A) -> A is not an algebra map");

      // Hom(kG_2, A) = A x A through f |-> (f(g_0), f(g_1)).
      Algebra hg = convolution_algebra(grouplike_coalgebra(f, 2), a);
      Matrix p(f, 2 * a.dim(), 2 * a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t g = 0; g < 2; ++g) p.at(g * a.dim() + i, i * 2 + g) = f.one();
      v.require(check_algebra_morphism(hg, direct_product(a, a), p).ok() && rank(p) == 2 * a.dim(),
                "Hom(kG_2, A) -> A x A is not an algebra isomorphism");
      ++cases;
    }
  return finish(v, std::to_string(cases) + " random (C, A) over F2 and F3, dims <= 3");
}

Outcome desk_bijection() {
  Verdict v;
  const std::vector<std::pair<std::string, Coalgebra>> coalgs{{"dual numbers", dual_numbers_coalgebra(F2)},
                                                               {"kG_2", grouplike_coalgebra(F2, 2)}};
  const std::vector<std::pair<std::string, Algebra>> algs{{"k[x]/x^2", truncated_polynomial_algebra(F2, 2)},
                                                           {"k x k", product_algebra(F2, 2)}};
  std::size_t triples = 0, sigmas = 0, valid = 0, morphisms = 0;
  for (const auto& [cn, c] : coalgs)
    for (const auto& [an, a] : algs)
      for (const auto& [bn, b] : algs) {
        const std::string where = cn + "; " + an + " -> " + bn;
        std::vector<Matrix> measurings;
        std::size_t seen = 0;
        oracle::for_each_matrix(F2, b.dim(), c.dim() * a.dim(), [&](const Matrix& sigma) {
          ++seen;
          const bool lib = check_measuring(sigma, c, a, b).ok();
          v.require(lib == oracle::measures(sigma, c, a, b), where + ": checker disagrees with the oracle");
          if (lib) measurings.push_back(sigma);
        });
        v.require(seen == 256, where + ": enumeration did not visit 256 maps");
        sigmas += seen;
        valid += measurings.size();
        ++triples;
        if (measurings.empty()) continue;

        UniversalFragment merged = p_fragment(Measuring(c, a, b, measurings[0]));
        for (std::size_t i = 1; i < measurings.size(); ++i)
          merged = merge_fragments(merged, p_fragment(Measuring(c, a, b, measurings[i])));

        // Every coalgebra map C -> carrier, by brute force, pulls back the
        // universal measuring; the pullbacks must be exactly the measurings,
        // each hit once.
        std::map<std::string, std::size_t> hits;
        const Matrix& u = merged.universal_measuring().sigma();
        for (const auto& h : oracle::all_coalgebra_maps(c, merged.carrier())) {
          ++morphisms;
          ++hits[key(u * tensor_map(h, Matrix::identity(F2, a.dim())))];
        }
        std::set<std::string> valid_keys;
        for (const auto& s : measurings) {
          valid_keys.insert(key(s));
          auto h = factor_through_fragment(Measuring(c, a, b, s), merged);
          v.require(h.has_value(), where + ": a measuring does not factor");
          if (h) v.require(u * tensor_map(h->map(), Matrix::identity(F2, a.dim())) == s, where + ": wrong factorization");
          v.require(hits[key(s)] == 1, where + ": factorization not unique or missing");
        }
        for (const auto& [k, n] : hits) v.require(valid_keys.count(k) == 1, where + ": a coalgebra map pulls back a non-measuring");
      }
  return finish(v, std::to_string(triples) + " triples with dims 2, " + std::to_string(sigmas) + " maps, " +
                       std::to_string(valid) + " measurings, " + std::to_string(morphisms) + " coalgebra maps");
}

Outcome fragment_is_finite_dual() {
  Verdict v;
  const std::vector<std::pair<std::string, Algebra>> algs{{"F2[x]/(x^2)", truncated_polynomial_algebra(F2, 2)},
                                                           {"k x k", product_algebra(F2, 2)}};
  for (const auto& [name, a] : algs) {
    UniversalFragment pf = p_fragment(evaluation_measuring(a));
    const Coalgebra dual = dual_coalgebra(a);
    // Canonical form: transport the carrier along the quotient from A*, which
    // the evaluation measuring identifies with the dual basis.
    const Matrix& q = pf.provenance().front().quotient.map();
    v.require(rank(q) == dual.dim() && pf.carrier().dim() == dual.dim(), name + ": carrier dimension");
    auto qinv = inverse(q);
    v.require(qinv.has_value(), name + ": quotient is not invertible");
    if (!qinv) continue;
    const Matrix comult = tensor_map(*qinv, *qinv) * pf.carrier().comult() * q;
    const Matrix counit = pf.carrier().counit() * q;
    v.require(comult == dual.comult() && counit == dual.counit(), name + ": structure constants differ from A*");
    v.require(finite_dual(a) == dual, name + ": finite dual differs from A*");
  }
  return finish(v, "F2[x]/(x^2) and k x k");
}

Outcome lemma() {
  Verdict v;
  std::mt19937_64 rng(104);
  std::size_t cases = 0;
  for (int t = 0; t < 120; ++t) {
    Measuring m = gen::random_measuring(F2, 2, rng);
    UniversalFragment pf = p_fragment(m);
    v.require(lemma_triangle_check(m, pf).ok(), "triangle fails on its own fragment");
    auto others = gen::all_measurings(m.coalgebra(), m.source(), m.target());
    UniversalFragment merged = merge_fragments(pf, p_fragment(others[rng() % others.size()]));
    v.require(lemma_triangle_check(m, merged).ok(), "triangle fails on a merged fragment");
    ++cases;
  }
  return finish(v, std::to_string(cases) + " random measurings over F2, dims <= 2");
}

Outcome enrichment() {
  Verdict v;
  std::mt19937_64 rng(105);
  std::size_t triples = 0, units = 0;
  auto absorb = [&](const Measuring& m) {
    const Measuring left = compose_measurings(enriched_unit(m.target()), m);
    const Measuring right = compose_measurings(m, enriched_unit(m.source()));
    v.require(check_fragment_isomorphism(p_fragment(left), p_fragment(m)).ok(), "unit does not absorb on the left");
    v.require(check_fragment_isomorphism(p_fragment(right), p_fragment(m)).ok(), "unit does not absorb on the right");
    ++units;
  };
  auto triple = [&](const Measuring& third, const Measuring& second, const Measuring& first) {
    LawReport r = check_enriched_category_axioms(third, second, first);
    v.require(r.ok(), r.summary());
    ++triples;
  };
  const Algebra tp = truncated_polynomial_algebra(F2, 2);
  const Measuring der = derivation_measuring(tp, Matrix(F2, 2, 2, {0, 1, 0, 0}));
  const Measuring scale = derivation_measuring(tp, Matrix(F2, 2, 2, {0, 0, 0, 1}));
  const Measuring id = algebra_map_measuring(AlgebraMorphism::identity(tp));
  for (const auto& a : {der, scale, id})
    for (const auto& b : {der, scale, id})
      for (const auto& c : {der, scale})
        triple(a, b, c);
  absorb(der);
  absorb(scale);
  for (int t = 0; t < 50; ++t) {
    Measuring first = gen::random_measuring(F2, 2, rng);
    Measuring second = gen::random_measuring_from(first.target(), 2, rng);
    Measuring third = gen::random_measuring_from(second.target(), 2, rng);
    triple(third, second, first);
    absorb(first);
  }
  return finish(v, std::to_string(triples) + " triples (18 from the derivation family), " + std::to_string(units) +
                       " two-sided unit checks");
}

Outcome comonad() {
  Verdict v;
  std::mt19937_64 rng(106);
  std::vector<Coalgebra> bases{ground_coalgebra(F2), grouplike_coalgebra(F2, 2), dual_numbers_coalgebra(F2)};
  for (int t = 0; t < 3; ++t) bases.push_back(gen::random_coalgebra(F2, 2, rng));
  std::size_t structures = 0, law_checks = 0;
  for (const auto& d : bases) {
    for (std::size_t dv = 0; dv <= 3; ++dv) {
      v.require(gh::check_laws(dv, d).ok(), "comonad laws fail");
      ++law_checks;
    }
    for (std::size_t dv = 1; dv <= 2; ++dv) {
      std::size_t gh_count = 0, comod_count = 0;
      std::set<std::string> images;
      oracle::for_each_matrix(F2, dv * d.dim(), dv, [&](const Matrix& gamma) {
        gh::CoalgebraStructure s{dv, d, gamma, CoalgebraMorphism::identity(d)};
        const bool lib = gh::check_coalgebra(s).ok();
        const bool is_comodule = oracle::comodule_laws(d, gamma);
        gh_count += lib;
        comod_count += is_comodule;
        if (!lib) return;
        Comodule x = gh::to_comodule(s);
        images.insert(key(x.coaction()));
        gh::CoalgebraStructure back = gh::from_comodule(x);
        v.require(back.gamma == gamma && back.dim_v == dv, "translation does not round trip");
      });
      v.require(gh_count == comod_count, "GH-coalgebra count differs from the comodule count");
      v.require(images.size() == gh_count, "translation is not injective");
      structures += gh_count;
    }
  }
  return finish(v, std::to_string(law_checks) + " law checks, " + std::to_string(structures) +
                       " GH-coalgebras matched to comodules over " + std::to_string(bases.size()) + " coalgebras");
}

Outcome colimits() {
  Verdict v;
  std::mt19937_64 rng(107);
  std::size_t diagrams = 0, cocones = 0;
  for (int t = 0; t < 60; ++t) {
    ComodDiagram diagram = testkit::random_comod_diagram(F2, 3, rng);
    ComodColimit col = comod_colimit(diagram);
    v.require(check_cocone(diagram, col.cocone).ok(), "colimit is not a cocone");
    Mediator self = mediate(diagram, col, col.cocone);
    v.require(self.morphism.has_value() && self.unique, "no unique mediator to the colimit itself");
    auto tally = testkit::check_universality(diagram, col, testkit::candidate_apexes(col, 2, rng));
    v.require(tally.mismatches == 0, tally.first_witness);
    cocones += tally.cocones;
    ++diagrams;
  }
  v.require(cocones > 0, "no competing cocones were enumerated");
  return finish(v, std::to_string(diagrams) + " diagrams, " + std::to_string(cocones) + " competing cocones");
}

Outcome q_bijection() {
  Verdict v;
  const Algebra k = ground_algebra(F2), tp = truncated_polynomial_algebra(F2, 2), k2 = product_algebra(F2, 2);
  const Coalgebra kc = ground_coalgebra(F2), g2 = grouplike_coalgebra(F2, 2), dn = dual_numbers_coalgebra(F2);
  const Vector one{F2.one()}, aug{F2.one(), F2.zero()};
  struct Instance {
    std::string name;
    Comodule x;
    Module m, n;
  };
  const std::vector<Instance> instances{
      {"all dims 1", trivial_comodule(kc, one, 1), regular_module(k), regular_module(k)},
      {"ground, dim M 2", trivial_comodule(kc, one, 1), character_module(k, one, 2), regular_module(k)},
      {"k over k[x]/x^2", trivial_comodule(kc, one, 1), regular_module(tp), regular_module(tp)},
      {"grouplikes on k^2", regular_comodule(g2), regular_module(k2), character_module(k2, aug, 1)},
      {"dual numbers into k", regular_comodule(dn), regular_module(tp), character_module(tp, aug, 1)},
      {"dual numbers, characters", regular_comodule(dn), character_module(tp, aug, 1), character_module(tp, aug, 1)},
      {"dual numbers, trivial X", trivial_comodule(dn, Vector{F2.one(), F2.zero()}, 1), regular_module(tp),
       character_module(tp, aug, 1)},
  };
  std::size_t pairs = 0, morphisms = 0;
  for (const auto& inst : instances) {
    testkit::QBijectionTally t = testkit::q_bijection(inst.x, inst.m, inst.n);
    v.require(t.ok(), inst.name + ": " + t.summary());
    v.require(t.pairs > 0, inst.name + ": no module-measurings");
    pairs += t.pairs;
    morphisms += t.morphisms;
  }
  return finish(v, std::to_string(instances.size()) + " instances, " + std::to_string(pairs) + " pairs, " +
                       std::to_string(morphisms) + " global morphisms");
}

Outcome internal_hom() {
  Verdict v;
  const auto tests = testkit::internal_hom_test_objects(F2);
  const Coalgebra e = dual_numbers_coalgebra(F2);
  std::size_t good = 0, rejected = 0;
  const Comodule k1 = trivial_comodule(ground_coalgebra(F2), Vector{F2.one()}, 1);
  for (const auto& z : {regular_comodule(e), regular_comodule(grouplike_coalgebra(F2, 2)), cofree_comodule(2, e)}) {
    LawReport r = comod_internal_hom_check(tests, k1, z, testkit::unit_internal_hom(z));
    v.require(r.ok(), "Y = k: " + r.summary());
    ++good;
  }
  for (std::size_t dv : {1u, 2u})
    for (std::size_t dy : {1u, 2u}) {
      Comodule y = trivial_comodule(ground_coalgebra(F2), Vector{F2.one()}, dy);
      LawReport r = comod_internal_hom_check(tests, y, cofree_comodule(dv, e), testkit::cofree_internal_hom(dv, dy, e));
      v.require(r.ok(), "cofree target: " + r.summary());
      ++good;
    }
  const Comodule y = trivial_comodule(ground_coalgebra(F2), Vector{F2.one()}, 2);
  auto bad = testkit::cofree_perturbations(1, 2, e);
  v.require(bad.size() == 10, "expected 10 perturbations");
  for (const auto& [name, cand] : bad) {
    const bool ok = comod_internal_hom_check(tests, y, cofree_comodule(1, e), cand).ok();
    v.require(!ok, "perturbation accepted: " + name);
    rejected += !ok;
  }
  return finish(v, std::to_string(good) + " candidates accepted, " + std::to_string(rejected) + " of " +
                       std::to_string(bad.size()) + " perturbations rejected");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Verdict v;
  const auto dir = std::filesystem::temp_directory_path() / "measuringkit_acceptance";
  std::filesystem::create_directories(dir);
  std::string reports[2];
  for (int i = 0; i < 2; ++i) {
    const auto path = dir / ("fuzz" + std::to_string(i) + ".json");
    std::ostringstream out, err;
    const int code = cli::run_command({"fuzz", "--seed", "0", "--cases", "500", "--json", path.string()}, out, err);
    v.require(code == 0, "fuzz run " + std::to_string(i) + " exited " + std::to_string(code) + ": " + out.str() + err.str());
    reports[i] = slurp(path);
  }
  v.require(!reports[0].empty() && reports[0] == reports[1], "reports differ between runs");
  return finish(v, "2 runs of 500 cases, " + std::to_string(reports[0].size()) + "-byte reports");
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "convolution correctness", 10, convolution},
      {2, "measuring bijection at desk scale", 30, desk_bijection},
      {3, "P(A, k) is the finite dual", 0, fragment_is_finite_dual},
      {4, "fragment triangle lemma", 0, lemma},
      {5, "enrichment laws", 0, enrichment},
      {6, "GH comonad and its coalgebras", 0, comonad},
      {7, "colimits in Comod", 0, colimits},
      {8, "module-measuring bijection at desk scale", 60, q_bijection},
      {9, "internal hom candidates", 0, internal_hom},
      {10, "fuzz determinism", 300, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    if (c.budget_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", secs, c.budget_seconds);
      if (secs >= c.budget_seconds) {
        o.pass = false;
        o.detail += "; over budget";
      }
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << timing
              << ")" << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
