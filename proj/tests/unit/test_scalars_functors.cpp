#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "measuringkit/constructions.hpp"
#include "measuringkit/families.hpp"
#include "measuringkit/generators.hpp"
#include "measuringkit/scalars_functors.hpp"
#include "oracles.hpp"

using namespace measuringkit;

namespace {

const Field F2 = Field::prime(2);

std::string key(const Matrix& m) { return m.to_string(); }

// Small algebra morphisms over F2 between catalog algebras of dim <= 2.
std::vector<AlgebraMorphism> small_algebra_maps() {
  std::vector<Algebra> algs{ground_algebra(F2), truncated_polynomial_algebra(F2, 2), product_algebra(F2, 2)};
  std::vector<AlgebraMorphism> out;
  for (const auto& a : algs)
    for (const auto& b : algs)
      for (const auto& m : oracle::all_algebra_maps(a, b)) out.push_back(AlgebraMorphism(a, b, m));
  return out;
}

std::vector<Module> small_modules(const Algebra& a) {
  std::vector<Module> out{regular_module(a)};
  // Every 1- and 2-dimensional module of a over F2.
  for (std::size_t d = 1; d <= 2; ++d)
    oracle::for_each_matrix(F2, d, a.dim() * d, [&](const Matrix& act) {
      if (oracle::module_laws(a, act) && out.size() < 12) out.push_back(Module(a, act));
    });
  return out;
}

std::vector<Comodule> small_comodules(const Coalgebra& c) {
  std::vector<Comodule> out;
  for (std::size_t d = 1; d <= 2; ++d)
    oracle::for_each_matrix(F2, d * c.dim(), d, [&](const Matrix& co) {
      if (oracle::comodule_laws(c, co) && out.size() < 10) out.push_back(Comodule(c, co));
    });
  return out;
}

}  // namespace

TEST_CASE("restrict") {
  Algebra tp = truncated_polynomial_algebra(F2, 2);
  Module n = regular_module(tp);
  CHECK(restrict(AlgebraMorphism::identity(tp), n) == n);

  Module scalar = restrict(AlgebraMorphism::unit_of(tp), n);
  CHECK(scalar.over() == ground_algebra(F2));
  CHECK(scalar.action() == Matrix::identity(F2, 2));

  // F2[x]/(x^2) -> F2, x |-> 0, applied to the regular F2-module.
  AlgebraMorphism aug(tp, ground_algebra(F2), Matrix(F2, 1, 2, {1, 0}));
  Module r = restrict(aug, regular_module(ground_algebra(F2)));
  CHECK(r.dim() == 1);
  CHECK(r.action() == Matrix(F2, 1, 2, {1, 0}));
  CHECK(r.act_by(unit_vector(F2, 2, 1)).is_zero());
}

TEST_CASE("restrict is functorial and keeps the carrier") {
  auto maps = small_algebra_maps();
  for (const auto& f : maps)
    for (const auto& g : maps) {
      if (!(f.target() == g.source())) continue;
      for (const auto& n : small_modules(g.target())) {
        Module once = restrict(compose(g, f), n);
        CHECK(once == restrict(f, restrict(g, n)));
        CHECK(once.dim() == n.dim());
      }
    }
}

TEST_CASE("corestrict") {
  Coalgebra dn = dual_numbers_coalgebra(F2);
  Comodule x = regular_comodule(dn);
  CHECK(corestrict(CoalgebraMorphism::identity(dn), x) == x);

  Comodule triv = corestrict(CoalgebraMorphism::counit_of(dn), x);
  CHECK(triv.coaction() == Matrix::identity(F2, 2));

  CoalgebraMorphism g(dn, grouplike_coalgebra(F2, 1), Matrix(F2, 1, 2, {1, 0}));
  Comodule lost = corestrict(g, x);
  CHECK(lost.coaction() == Matrix::identity(F2, 2));

  // Functoriality along dn -> dn -> k.
  for (const auto& m : oracle::all_coalgebra_maps(dn, dn)) {
    CoalgebraMorphism h(dn, dn, m);
    CoalgebraMorphism e = CoalgebraMorphism::counit_of(dn);
    CHECK(corestrict(compose(e, h), x) == corestrict(e, corestrict(h, x)));
  }
}

TEST_CASE("extension of scalars") {
  Algebra tp = truncated_polynomial_algebra(F2, 2);
  Module m = regular_module(tp);
  Extension id_ext = extend(AlgebraMorphism::identity(tp), m);
  CHECK(id_ext.module.dim() == m.dim());
  CHECK(oracle::all_module_maps(id_ext.module, m).size() == oracle::all_module_maps(m, m).size());

  for (const auto& f : small_algebra_maps()) {
    Extension e = extend(f, regular_module(f.source()));
    CHECK(e.module.dim() == f.target().dim());
    CHECK(e.projection * e.section == Matrix::identity(F2, e.module.dim()));
  }
}

TEST_CASE("extension adjunction is a bijection over F2") {
  std::size_t instances = 0;
  for (const auto& f : small_algebra_maps()) {
    for (const auto& m : small_modules(f.source())) {
      if (m.dim() > 2) continue;
      Extension ext = extend(f, m);
      for (const auto& n : small_modules(f.target())) {
        if (n.dim() > 2) continue;
        Module rn = restrict(f, n);
        auto left = oracle::all_module_maps(m, rn);
        auto right = oracle::all_module_maps(ext.module, n);
        CHECK(left.size() == right.size());
        std::set<std::string> image;
        for (const auto& psi : left) {
          Matrix phi = extension_transpose(ext, n, psi);
          CHECK(oracle::is_module_map(ext.module, n, phi));
          CHECK(extension_untranspose(ext, phi) == psi);
          image.insert(key(phi));
        }
        CHECK(image.size() == right.size());
        CHECK(check_extension_adjunction(f, m, n).ok());
        ++instances;
      }
    }
  }
  CHECK(instances > 20);
}

TEST_CASE("coinduction") {
  Algebra tp = truncated_polynomial_algebra(F2, 2);
  Module m = regular_module(tp);
  CHECK(coinduce(AlgebraMorphism::identity(tp), m).module.dim() == 2);

  // A = k: every linear map is equivariant.
  AlgebraMorphism u = AlgebraMorphism::unit_of(tp);
  Coinduction co = coinduce(u, regular_module(ground_algebra(F2)));
  CHECK(co.module.dim() == 2);

  std::size_t instances = 0;
  for (const auto& f : small_algebra_maps()) {
    for (const auto& mm : small_modules(f.source())) {
      if (mm.dim() > 2) continue;
      Coinduction c = coinduce(f, mm);
      CHECK(oracle::module_laws(c.module.over(), c.module.action()));
      for (const auto& n : small_modules(f.target())) {
        if (n.dim() > 2) continue;
        auto left = oracle::all_module_maps(restrict(f, n), mm);
        auto right = oracle::all_module_maps(n, c.module);
        CHECK(left.size() == right.size());
        std::set<std::string> image;
        for (const auto& uu : left) {
          Matrix v = coinduction_transpose(c, n, uu);
          CHECK(oracle::is_module_map(n, c.module, v));
          CHECK(coinduction_untranspose(c, f.target(), v) == uu);
          image.insert(key(v));
        }
        CHECK(image.size() == right.size());
        ++instances;
      }
    }
  }
  CHECK(instances > 20);
}

TEST_CASE("cotensor") {
  Coalgebra dn = dual_numbers_coalgebra(F2);
  Comodule y = regular_comodule(dn);
  Cotensor same = cotensor(y, CoalgebraMorphism::identity(dn));
  CHECK(same.comodule.dim() == y.dim());

  // D = k: the equalizer is all of Y (x) C with the cofree coaction.
  Comodule ky = trivial_comodule(ground_coalgebra(F2), {F2.one()}, 2);
  Cotensor cofree = cotensor(ky, CoalgebraMorphism::counit_of(dn));
  CHECK(cofree.comodule.dim() == 2 * dn.dim());
  CHECK(cofree.inclusion == Matrix::identity(F2, 4));
  CHECK(cofree.comodule.coaction() == tensor_map(Matrix::identity(F2, 2), dn.comult()));
}

TEST_CASE("cotensor adjunction is a bijection over F2") {
  std::vector<Coalgebra> coalgs{ground_coalgebra(F2), dual_numbers_coalgebra(F2), grouplike_coalgebra(F2, 2)};
  std::size_t instances = 0;
  for (const auto& c : coalgs)
    for (const auto& d : coalgs)
      for (const auto& gm : oracle::all_coalgebra_maps(c, d)) {
        CoalgebraMorphism g(c, d, gm);
        for (const auto& x : small_comodules(c)) {
          Comodule gx = corestrict(g, x);
          for (const auto& y : small_comodules(d)) {
            Cotensor ct = cotensor(y, g);
            CHECK(oracle::comodule_laws(c, ct.comodule.coaction()));
            auto left = oracle::all_comodule_maps(gx, y);
            auto right = oracle::all_comodule_maps(x, ct.comodule);
            CHECK(left.size() == right.size());
            std::set<std::string> image;
            for (const auto& k : left) {
              Matrix l = cotensor_transpose(ct, x, k);
              CHECK(oracle::is_comodule_map(x, ct.comodule, l));
              CHECK(cotensor_untranspose(ct, y, l) == k);
              image.insert(key(l));
            }
            CHECK(image.size() == right.size());
            ++instances;
          }
        }
      }
  CHECK(instances > 50);
}

TEST_CASE("morphism validation") {
  Algebra tp = truncated_polynomial_algebra(F2, 2);
  CHECK_THROWS_AS(AlgebraMorphism(tp, tp, Matrix(F2, 2, 2)), LawViolation);
  Coalgebra dn = dual_numbers_coalgebra(F2);
  CHECK_THROWS_AS(CoalgebraMorphism(dn, dn, Matrix(F2, 2, 2, {1, 1, 0, 1})), LawViolation);
  CHECK_THROWS(compose(AlgebraMorphism::identity(tp), AlgebraMorphism::identity(ground_algebra(F2))));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    Algebra a = gen::random_algebra(F2, 2, rng), b = gen::random_algebra(F2, 2, rng);
    for (const auto& m : oracle::all_algebra_maps(a, b)) CHECK(check_algebra_morphism(a, b, m).ok());
    std::size_t accepted = 0;
    oracle::for_each_matrix(F2, b.dim(), a.dim(), [&](const Matrix& m) { accepted += check_algebra_morphism(a, b, m).ok(); });
    CHECK(accepted == oracle::all_algebra_maps(a, b).size());
  }
}
