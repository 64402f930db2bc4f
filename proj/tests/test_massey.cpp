#include <doctest.h>

#include "novcup/corpus/corpus.hpp"
#include "novcup/massey/massey.hpp"
#include "support.hpp"

using namespace novcup;

namespace {

const FieldSpec& Q = FieldSpec::rationals();

std::vector<SpectralPage> chain_pages(const ParamComplex& c, int pages) {
  ChainLevelSS ss(taylor_at_one(c, pages + 1), pages);
  return ss.pages();
}

std::vector<std::size_t> dims_of(const SpectralPage& p) { return p.dims; }

}  // namespace

TEST_CASE("taylor coefficients of negative powers") {
  auto s = build("circle");
  auto mc = massey_complex(s.x, s.xi, FlatBundle::trivial(s.x, Q));
  auto series = taylor_at_one(mc, 4);
  // T^-1 = 1 - t + t^2 - t^3 + ...
  const std::size_t e01 = s.x.index_or_throw({0, 1});
  Vec one = unit_vec(Q, 3, 1);
  for (int a = 0; a < 4; ++a) {
    Vec img = series.apply(0, a, one);
    const FieldElem expect = a == 0 ? Q.one() : Q.from_int(a % 2 ? -1 : 1);
    CHECK(img[e01] == expect);
  }
}

TEST_CASE("circle pages") {
  auto s = build("circle");
  auto F = FlatBundle::trivial(s.x, Q);
  auto pages = spectral_pages(s.x, s.xi, F);
  REQUIRE(pages.size() == 2);
  CHECK(pages[0].dims == std::vector<std::size_t>{1, 1});
  CHECK(pages[0].ranks == std::vector<std::size_t>{1, 0});
  CHECK(pages[1].dims == std::vector<std::size_t>{0, 0});
  CHECK(pages[1].stable);
  CHECK(chain_pages(massey_complex(s.x, s.xi, F), 2) == pages);

  // d_1(1) = -xi
  Vec one(3, Q.one());
  auto dr = chain_level_dr(s.x, s.xi, F, 0, one, 1);
  CHECK(!dr.obstructed);
  ChainLevelSS ss(taylor_at_one(massey_complex(s.x, s.xi, F), 2), 1);
  Vec xi(3, Q.zero());
  for (std::size_t e = 0; e < 3; ++e) xi[e] = Q.from_int(s.xi.at(e));
  CHECK(dr.value == scaled(ss.cohomology(1).coords(xi), -Q.one()));
  CHECK(chain_level_dr(s.x, s.xi, F, 0, one, 2).obstructed);

  CHECK(survivors(s.x, s.xi, F, 0).classes.empty());
  CHECK(survivors(s.x, s.xi, F, 1).classes.size() == 1);
}

TEST_CASE("torus and untwisted pages") {
  auto t = build("torus2");
  auto F = FlatBundle::trivial(t.x, Q);
  auto pages = spectral_pages(t.x, t.xi, F);
  REQUIRE(pages.size() == 2);
  CHECK(pages[0].dims == std::vector<std::size_t>{1, 2, 1});
  CHECK(pages[0].ranks == std::vector<std::size_t>{1, 1, 0});
  CHECK(dims_of(pages[1]) == std::vector<std::size_t>{0, 0, 0});
  CHECK(chain_pages(massey_complex(t.x, t.xi, F), 3) ==
        pages_from_modules(cohomology_modules(massey_complex(t.x, t.xi, F)), 3));

  auto zero = spectral_pages(t.x, IntegralCocycle(t.x), F);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].dims == std::vector<std::size_t>{1, 2, 1});
  CHECK(zero[0].ranks == std::vector<std::size_t>{0, 0, 0});
  CHECK(survivors(t.x, IntegralCocycle(t.x), F, 1).classes.size() == 2);
}

TEST_CASE("higher differentials from a doubled class") {
  // 2 xi over F_2 kills d_1; over Q it does not.
  auto s = build("circle");
  for (const FieldSpec* f : {&Q, &FieldSpec::prime(2), &FieldSpec::prime(3)}) {
    auto F = FlatBundle::trivial(s.x, *f);
    for (long c : {2L, 3L, 4L}) {
      auto z = s.xi.scaled(c);
      auto mods = cohomology_modules(massey_complex(s.x, z, F));
      const int n = stabilization_page(mods) + 1;
      CAPTURE(f->name());
      CAPTURE(c);
      CHECK(chain_pages(massey_complex(s.x, z, F), n) == pages_from_modules(mods, n));
    }
  }
}

TEST_CASE("survivor certificates and dimensions") {
  for (const auto& name : {"circle", "torus2", "surface2", "rp2"}) {
    CAPTURE(name);
    auto s = build(name);
    const FieldSpec& f = FieldSpec::parse(s.default_field);
    auto F = FlatBundle::trivial(s.x, f);
    auto mc = massey_complex(s.x, s.xi, F);
    auto mods = cohomology_modules(mc);
    const int pages = stabilization_page(mods);
    ChainLevelSS ss(taylor_at_one(mc, pages + 1), pages);
    for (int q = 0; q <= ss.series().top(); ++q) {
      auto sv = survivors(ss, q);
      std::size_t drop = 0;
      if (q + 1 < static_cast<int>(mods.size())) drop = multiplicities_at_one(mods[q + 1]).size();
      CHECK(sv.classes.size() == ss.cohomology(q).dim() - drop);
      for (const auto& cert : sv.certificates) CHECK(lift_satisfies(ss.series(), q, cert, sv.order));
    }
  }
}

TEST_CASE("surface survivors contain the dual curves") {
  auto s = build("surface2");
  auto F = FlatBundle::trivial(s.x, Q);
  auto sv = survivors(s.x, s.xi, F, 1);
  CHECK(sv.classes.size() == 3);
  auto mc = massey_complex(s.x, s.xi, F);
  ChainLevelSS ss(taylor_at_one(mc, 3), 2);
  const auto& h = ss.cohomology(1);
  Subspace span(Q, h.dim());
  for (const auto& c : sv.classes) span.add(c);
  for (const char* n : {"v1", "v2", "xi"}) {
    const auto& z = s.cls(n);
    Vec v(z.size(), Q.zero());
    for (std::size_t e = 0; e < z.size(); ++e) v[e] = Q.from_int(z.at(e));
    CHECK(span.contains(h.coords(v)));
    for (int r = 1; r <= 2; ++r) CHECK(chain_level_dr(ss, 1, v, r).zero);
  }
}

TEST_CASE("support criterion") {
  auto s = build("surface2");
  auto F = FlatBundle::trivial(s.x, Q);
  auto cut = cut_along(s.x, s.cut_vertices, F);
  auto as_vec = [&](const IntegralCocycle& z) {
    Vec v(z.size(), Q.zero());
    for (std::size_t e = 0; e < z.size(); ++e) v[e] = Q.from_int(z.at(e));
    return v;
  };
  for (const char* n : {"v1", "v2"}) CHECK(support_criterion(cut.cut, s.x, 1, as_vec(s.cls(n))).has_value());
  CHECK(!support_criterion(cut.cut, s.x, 1, as_vec(s.xi)).has_value());

  // Rows 1 and 2 of the last grid torus run parallel to V = row 0.
  REQUIRE(s.cut_vertices == std::vector<std::uint32_t>{9, 10, 11});
  bool found = false;
  for (const std::vector<std::uint32_t>& row : {std::vector<std::uint32_t>{4, 5, 12}, std::vector<std::uint32_t>{8, 13, 14}}) {
    auto par = cut_along(s.x, row, F).dual;
    if (!is_integral_coboundary(s.x, par + s.xi) && !is_integral_coboundary(s.x, par + s.xi.negated())) continue;
    // The cut dual lives on one side of the row; shifting by the row indicator moves it to the other.
    std::vector<long> ind(s.x.vertex_count(), 0);
    for (auto v : row) ind[v] = -1;
    for (const auto& c : {par, par.plus_coboundary(s.x, ind)})
      if (support_criterion(cut.cut, s.x, 1, as_vec(c))) found = true;
  }
  CHECK(found);

  std::mt19937_64 rng(4);
  Vec touching = novcup::testing::random_vec(Q, s.x.count(1), rng);
  touching[s.x.index_or_throw({9, 10})] = Q.one();
  CHECK(!support_criterion(cut.cut, s.x, 1, touching).has_value());
}
