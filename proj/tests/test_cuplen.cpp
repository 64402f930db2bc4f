#include <doctest.h>

#include "novcup/corpus/corpus.hpp"
#include "novcup/cuplen/cuplen.hpp"
#include "novcup/massey/massey.hpp"
#include "support.hpp"

using namespace novcup;

namespace {

const FieldSpec& Q = FieldSpec::rationals();

Vec as_vec(const FieldSpec& f, const IntegralCocycle& z) {
  Vec v;
  for (std::size_t e = 0; e < z.size(); ++e) v.push_back(f.from_int(z.at(e)));
  return v;
}

bool nonzero_class(const SimplicialComplex& x, const FlatBundle& b, int q, const Vec& c) {
  return !twisted_complex(x, b).cohomology(q).is_coboundary(c);
}

Vec random_cochain(const SimplicialComplex& x, const FlatBundle& b, int q, std::mt19937_64& rng) {
  return novcup::testing::random_vec(b.field(), x.count(q) * b.rank(), rng);
}

}  // namespace

TEST_CASE("cup product basics") {
  auto s = build("surface2");
  auto k = FlatBundle::trivial(s.x, Q);
  auto d = dual_curve_cocycles(s);
  const Vec v1 = as_vec(Q, d.v1), v2 = as_vec(Q, d.v2);
  CHECK(nonzero_class(s.x, k, 2, cup(s.x, k, 1, v1, k, 1, v2)));
  CHECK(!nonzero_class(s.x, k, 2, cup(s.x, k, 1, v1, k, 1, v1)));
  const Vec one(s.x.count(0), Q.one());
  CHECK(cup(s.x, k, 0, one, k, 1, v1) == v1);
  CHECK(cup(s.x, k, 1, v1, k, 0, one) == v1);

  auto t = build("torus2");
  auto kt = FlatBundle::trivial(t.x, Q);
  const Vec x = as_vec(Q, t.cls("x1")), y = as_vec(Q, t.cls("x2"));
  auto h2 = twisted_complex(t.x, kt).cohomology(2);
  CHECK(h2.coords(cup(t.x, kt, 1, x, kt, 1, y)) == scaled(h2.coords(cup(t.x, kt, 1, y, kt, 1, x)), -Q.one()));
  CHECK(!h2.is_coboundary(cup(t.x, kt, 1, x, kt, 1, y)));
}

TEST_CASE("cup product is a chain map and associative up to coboundary") {
  std::mt19937_64 rng(21);
  for (const FieldSpec* f : {&Q, &FieldSpec::prime(5)}) {
    auto t = build("torus3");
    auto a = FlatBundle::power(t.x, f->from_int(2), t.cls("x1"));
    auto b = FlatBundle::power(t.x, f->from_int(3), t.cls("x2"));
    auto ca = twisted_complex(t.x, a), cb = twisted_complex(t.x, b), cab = twisted_complex(t.x, a.tensor(b));
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 2; ++q) {
        Vec u = random_cochain(t.x, a, p, rng), v = random_cochain(t.x, b, q, rng);
        Vec lhs = cab.d(p + q).apply(cup(t.x, a, p, u, b, q, v));
        Vec rhs = cup(t.x, a, p + 1, ca.d(p).apply(u), b, q, v);
        Vec r2 = cup(t.x, a, p, u, b, q + 1, cb.d(q).apply(v));
        CHECK(lhs == (p % 2 ? rhs - r2 : rhs + r2));
      }
    // Associativity holds on the nose for this product.
    auto c = FlatBundle::trivial(t.x, *f);
    Vec u = random_cochain(t.x, a, 1, rng), v = random_cochain(t.x, b, 1, rng), w = random_cochain(t.x, c, 1, rng);
    CHECK(cup(t.x, a.tensor(b), 2, cup(t.x, a, 1, u, b, 1, v), c, 1, w) ==
          cup(t.x, a, 1, u, b.tensor(c), 2, cup(t.x, b, 1, v, c, 1, w)));
  }
}

TEST_CASE("psi product satisfies the Leibniz rule") {
  std::mt19937_64 rng(33);
  for (const FieldSpec* f : {&FieldSpec::prime(5), &Q}) {
    for (const auto& name : {"circle", "torus2", "surface2"}) {
      auto s = build(name);
      auto cut = cut_along(s.x, s.cut_vertices, FlatBundle::trivial(s.x, *f)).cut;
      auto cut2 = cut_along(s.x, s.cut_vertices, FlatBundle::trivial(s.x, *f)).cut;
      auto dc = deformation_complex(cut), dc2 = deformation_complex(cut2), dcp = deformation_complex(tensor_cut(cut, cut2));
      const FieldElem t = f->from_int(2);
      const auto d_t = evaluate(dc, f->one() + t), d_t2 = evaluate(dc2, (f->one() + t).inverse()), d_0 = evaluate(dcp, f->one());
      const int top = dc.complex.top();
      int failures = 0;
      for (int trial = 0; trial < 100; ++trial) {
        const int q = static_cast<int>(rng() % top), q2 = static_cast<int>(rng() % (top - q));
        Vec a = novcup::testing::random_vec(*f, dc.complex.dim(q), rng);
        Vec b = novcup::testing::random_vec(*f, dc2.complex.dim(q2), rng);
        CutCochain c = unflatten(dc, q, a), c2 = unflatten(dc2, q2, b);
        Vec lhs = d_0.d(q + q2).apply(flatten(psi_product(cut, cut2, c, c2, t)));
        Vec r1 = flatten(psi_product(cut, cut2, unflatten(dc, q + 1, d_t.d(q).apply(a)), c2, t));
        Vec r2 = flatten(psi_product(cut, cut2, c, unflatten(dc2, q2 + 1, d_t2.d(q2).apply(b)), t));
        if (lhs != (q % 2 ? r1 - r2 : r1 + r2)) ++failures;
      }
      CAPTURE(name);
      CHECK(failures == 0);
      CHECK_THROWS_AS(psi_product(cut, cut2, unflatten(dc, 0, Vec(dc.complex.dim(0), f->zero())),
                                  unflatten(dc2, 0, Vec(dc2.complex.dim(0), f->zero())), -f->one()),
                      ComplexError);
    }
  }
}

TEST_CASE("psi product special cases") {
  const FieldSpec& F5 = FieldSpec::prime(5);
  auto s = build("torus2");
  auto cut = cut_along(s.x, s.cut_vertices, FlatBundle::trivial(s.x, F5)).cut;
  auto dc = deformation_complex(cut);
  std::mt19937_64 rng(8);
  for (int q = 0; q <= 2; ++q) {
    Vec a = novcup::testing::random_vec(F5, dc.complex.dim(q), rng);
    CutCochain c = unflatten(dc, q, a);
    // c' = (0, 1): psi_0(c, c') = (-1)^(|a|+1) delta_1(c)
    CutCochain unit;
    unit.degree = 1;
    unit.alpha = zero_vec(F5, dc.n_dims[1]);
    unit.beta = Vec(dc.v_dims[0], F5.one());
    Vec lhs = flatten(psi_product(cut, cut, c, unit, F5.zero()));
    auto series = taylor_at_one(dc.complex, 2);
    Vec d1 = series.apply(q, 1, a);
    CHECK(lhs == (q % 2 ? d1 : scaled(d1, -F5.one())));
    if (q >= 1) {
      CutCochain c0 = c, c1 = unflatten(dc, 1, novcup::testing::random_vec(F5, dc.complex.dim(1), rng));
      std::fill(c0.beta.begin(), c0.beta.end(), F5.zero());
      std::fill(c1.beta.begin(), c1.beta.end(), F5.zero());
      auto p = psi_product(cut, cut, c0, c1, F5.zero());
      CHECK(p.alpha == cup(cut.n, cut.f0, q, c0.alpha, cut.f0, 1, c1.alpha));
      CHECK(is_zero_vec(p.beta));
    }
  }
}

TEST_CASE("massey cup-length on the corpus") {
  auto circle = build("circle");
  auto rc = cuplength_massey(circle.x, circle.xi, Q, {});
  CHECK(!rc.has_bound);
  CHECK(rc.critical_bound == 0);

  auto s = build("surface2");
  auto rs = cuplength_massey(s.x, s.xi, Q, {});
  CHECK(rs.m == 2);
  CHECK(rs.critical_bound == 1);
  CHECK(rs.verified);
  CHECK(rs.within_dimension_bound());
  CHECK(rs.survivor_dims == std::vector<std::size_t>{0, 3, 1});
  auto strict = cuplength_massey(s.x, s.xi, Q, {}, {true});
  CHECK(strict.m == rs.m);
  CHECK(strict.second_survivor_dims == rs.survivor_dims);

  auto t = build("torus2");
  auto rt = cuplength_massey(t.x, IntegralCocycle(t.x), Q, {});
  CHECK(rt.m == 4);
  CHECK(rt.critical_bound == 3);
  CHECK(rt.m - 2 == naive_cup_length(t.x, Q));
  CHECK(rt.verified);

  auto p = build("s1_x_surface2");
  auto rp = cuplength_massey(p.x, p.xi, Q, {});
  CHECK(!rp.has_bound);
  CHECK(rp.critical_bound == 0);
}

TEST_CASE("classical cup-length oracle for xi = 0") {
  for (const auto& name : {"circle", "torus2", "rp2", "s1_x_sphere3"}) {
    CAPTURE(name);
    auto s = build(name);
    const FieldSpec& f = FieldSpec::parse(s.default_field);
    auto r = cuplength_massey(s.x, IntegralCocycle(s.x), f, {});
    CHECK(r.m - 2 == naive_cup_length(s.x, f));
  }
}

TEST_CASE("extra bundles never lower the bound") {
  auto s = build("surface2");
  auto base = cuplength_massey(s.x, s.xi, Q, {});
  auto more = cuplength_massey(s.x, s.xi, Q, {FlatBundle::power(s.x, Q.from_int(3), s.xi)});
  CHECK(more.m >= base.m);
  CHECK(more.within_dimension_bound());
}

TEST_CASE("generic-bundle cup-length") {
  auto s = build("surface2");
  auto e1 = realize(s.bundles[0], s, Q), e2 = realize(s.bundles[1], s, Q);
  auto r = cuplength_generic(s.x, s.xi, e1, e2, {});
  CHECK(r.m == 2);
  CHECK(r.verified);
  CHECK(std::find(r.excluded_roots.begin(), r.excluded_roots.end(), Q.one()) == r.excluded_roots.end());

  CHECK_THROWS_AS(cuplength_generic(s.x, s.xi, FlatBundle::trivial(s.x, Q), e2, {}), CupLengthError);

  auto p = build("s1_x_surface2_prime");
  auto pe1 = realize(p.bundles[0], p, Q), pe2 = realize(p.bundles[1], p, Q);
  auto rp = cuplength_generic(p.x, p.xi, pe1, pe2, {});
  CHECK(rp.m == 3);
  CHECK(rp.within_dimension_bound());
}

TEST_CASE("projective space with a handle over F4") {
  auto s = build("rp3_handle");
  const FieldSpec& f = FieldSpec::parse("2^2");
  auto e = realize(s.bundles[0], s, f);
  auto g = cuplength_generic(s.x, s.xi, e, e, {e});
  CHECK(g.m >= 3);
  CHECK(g.critical_bound >= 2);
  CHECK(g.verified);
  CHECK(g.within_dimension_bound());
  auto r = cuplength_massey(s.x, s.xi, f, {e});
  CHECK(r.within_dimension_bound());
  CHECK(r.m <= 3);
}
