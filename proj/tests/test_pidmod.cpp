#include <doctest.h>

#include <algorithm>

#include "novcup/complexes/cut.hpp"
#include "novcup/pidmod/snf.hpp"
#include "support.hpp"

using namespace novcup;

namespace {

const FieldSpec& Q = FieldSpec::rationals();

LaurentPoly tau_pow(const FieldSpec& f, int k) { return LaurentPoly::monomial(f.one(), k); }
LaurentPoly cst(const FieldSpec& f, long c) { return LaurentPoly::constant(f.from_int(c)); }

Poly poly_of(const FieldSpec& f, std::initializer_list<long> c) {
  std::vector<FieldElem> v;
  for (long x : c) v.push_back(f.from_int(x));
  return Poly(f, v);
}

LaurentPoly det(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return cst(m.field(), 1);
  LaurentPoly total(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    LaurentPoly a = m.at(0, j);
    if (a.is_zero()) continue;
    LaurentMatrix minor(m.field(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k) {
        if (k == j) continue;
        minor.add(i - 1, c++, m.at(i, k));
      }
    LaurentPoly term = a * det(minor);
    total += (j % 2) ? -term : term;
  }
  return total;
}

LaurentMatrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, std::mt19937_64& rng, Ring ring) {
  LaurentMatrix m(f, r, c);
  std::uniform_int_distribution<int> coin(0, 2), ex(ring == Ring::laurent ? -1 : 0, 2), cf(-2, 2);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (coin(rng) == 0) continue;
      LaurentPoly p(f);
      for (int t = 0; t < 2; ++t) p += LaurentPoly::monomial(f.from_int(cf(rng)), ex(rng));
      m.add(i, j, p);
    }
  return m;
}

void check_transforms(const LaurentMatrix& m, Ring ring) {
  auto res = snf(m, ring, {true, true});
  REQUIRE(res.u.has_value());
  REQUIRE(res.v.has_value());
  LaurentMatrix d = (*res.u * m) * *res.v;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      LaurentPoly e = d.at(i, j);
      if (i == j && i < res.rank) {
        CHECK(e == LaurentPoly(res.diagonal[i], 0));
      } else {
        CHECK(e.is_zero());
      }
    }
  for (std::size_t k = 0; k + 1 < res.diagonal.size(); ++k)
    CHECK(poly_divmod(res.diagonal[k + 1], res.diagonal[k]).second.is_zero());
  const LaurentPoly du = det(*res.u), dv = det(*res.v);
  if (ring == Ring::laurent) {
    CHECK(du.is_unit());
    CHECK(dv.is_unit());
  } else {
    CHECK((du.is_unit() && du.valuation() == 0));
    CHECK((dv.is_unit() && dv.valuation() == 0));
  }
}

SimplicialComplex torus7() {
  std::vector<Simplex> f;
  for (std::uint32_t i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(7, f);
}

}  // namespace

TEST_CASE("snf of small matrices") {
  LaurentMatrix m(Q, 2, 2);
  m.add(0, 0, tau_pow(Q, 1));
  m.add(1, 1, tau_pow(Q, 1) - cst(Q, 1));
  auto res = snf(m, Ring::polynomial);
  REQUIRE(res.diagonal.size() == 2);
  CHECK(res.diagonal[0] == poly_of(Q, {1}));
  CHECK(res.diagonal[1] == poly_of(Q, {0, -1, 1}));
  auto lres = snf(m, Ring::laurent);
  CHECK(lres.invariant_factors() == std::vector<Poly>{poly_of(Q, {-1, 1})});

  LaurentMatrix one(Q, 1, 1);
  one.add(0, 0, tau_pow(Q, 1) - cst(Q, 1));
  CHECK(snf(one, Ring::polynomial).invariant_factors() == std::vector<Poly>{poly_of(Q, {-1, 1})});

  LaurentMatrix field(Q, 3, 3);
  field.add(0, 0, cst(Q, 2));
  field.add(0, 1, cst(Q, 1));
  field.add(1, 0, cst(Q, 4));
  field.add(1, 1, cst(Q, 2));
  field.add(2, 2, cst(Q, 5));
  auto fr = snf(field, Ring::polynomial);
  CHECK(fr.rank == 2);
  CHECK(fr.invariant_factors().empty());
}

TEST_CASE("snf transforms are unimodular") {
  std::mt19937_64 rng(3);
  for (const FieldSpec* f : {&Q, &FieldSpec::prime(5)}) {
    for (Ring ring : {Ring::polynomial, Ring::laurent}) {
      for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        check_transforms(random_matrix(*f, r, c, rng, ring), ring);
      }
    }
  }
}

TEST_CASE("snf is invariant under permutations") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(Q, 4, 4, rng, Ring::polynomial);
    std::vector<std::size_t> pr{0, 1, 2, 3}, pc{0, 1, 2, 3};
    std::shuffle(pr.begin(), pr.end(), rng);
    std::shuffle(pc.begin(), pc.end(), rng);
    LaurentMatrix p(Q, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) p.add(pr[i], pc[j], m.at(i, j));
    CHECK(snf(m, Ring::polynomial).diagonal == snf(p, Ring::polynomial).diagonal);
  }
}

TEST_CASE("circle and torus modules") {
  auto x = SimplicialComplex::from_facets(3, {{0, 1}, {0, 2}, {1, 2}});
  IntegralCocycle z(x, {{{0, 1}, 1}});
  auto mods = cohomology_modules(lambda_complex(x, z, FlatBundle::trivial(x, Q)));
  REQUIRE(mods.size() == 2);
  CHECK(mods[0].free_rank == 0);
  CHECK(mods[0].invariant_factors.empty());
  CHECK(mods[1].free_rank == 0);
  CHECK(mods[1].invariant_factors == std::vector<Poly>{poly_of(Q, {-1, 1})});
  CHECK(dims_at(mods, Q.one()) == std::vector<std::size_t>{1, 1});
  CHECK(dims_at(mods, Q.from_int(2)) == std::vector<std::size_t>{0, 0});
  CHECK_THROWS_AS(dims_at(mods, Q.zero()), ModuleError);

  auto t = torus7();
  auto zt = cut_along(t, {0, 1, 2}, FlatBundle::trivial(t, Q)).dual;
  auto tm = cohomology_modules(lambda_complex(t, zt, FlatBundle::trivial(t, Q)));
  CHECK(tm[0].invariant_factors.empty());
  CHECK(tm[1].invariant_factors == std::vector<Poly>{poly_of(Q, {-1, 1})});
  CHECK(tm[2].invariant_factors == std::vector<Poly>{poly_of(Q, {-1, 1})});
  for (const auto& m : tm) CHECK(m.free_rank == 0);

  auto untw = cohomology_modules(lambda_complex(t, IntegralCocycle(t), FlatBundle::trivial(t, Q)));
  CHECK(untw[0].free_rank == 1);
  CHECK(untw[1].free_rank == 2);
  CHECK(untw[2].free_rank == 1);
}

TEST_CASE("universal coefficients against direct evaluation") {
  std::mt19937_64 rng(9);
  auto t = torus7();
  for (const FieldSpec* f : {&Q, &FieldSpec::prime(7)}) {
    auto zt = cut_along(t, {0, 3, 6}, FlatBundle::trivial(t, *f)).dual.scaled(2);
    auto lc = lambda_complex(t, zt, FlatBundle::power(t, f->from_int(3), zt));
    auto mods = cohomology_modules(lc);
    for (int i = 0; i < 5; ++i) {
      auto a = novcup::testing::random_nonzero(*f, rng);
      CHECK(dims_at(mods, a) == novcup::testing::betti_numbers(lc.evaluate(a)));
    }
    // Roots of the torsion factors are where the dimension jumps.
    for (const auto& m : mods)
      for (const auto& fac : m.invariant_factors)
        for (const auto& [root, mult] : poly_roots(fac).roots)
          CHECK(dims_at(mods, root) == novcup::testing::betti_numbers(lc.evaluate(root)));
  }
}

TEST_CASE("deformation complex modules over k[T]") {
  auto t = torus7();
  auto res = cut_along(t, {0, 1, 2}, FlatBundle::trivial(t, Q));
  auto dc = deformation_complex(res.cut);
  auto mods = cohomology_modules(dc.complex);
  for (FieldElem a : {Q.zero(), Q.one(), Q.from_int(2), Q.from_rational(mpq_class(-3, 5))})
    CHECK(dims_at(mods, a) == novcup::testing::betti_numbers(evaluate(dc, a)));
}
