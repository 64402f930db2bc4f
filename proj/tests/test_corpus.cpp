#include <doctest.h>

#include <map>

#include "novcup/complexes/cut.hpp"
#include "novcup/corpus/corpus.hpp"
#include "support.hpp"

using namespace novcup;

namespace {

std::vector<std::size_t> betti(const NamedSpace& s, const FieldSpec& f) {
  return novcup::testing::betti_numbers(twisted_complex(s.x, FlatBundle::trivial(s.x, f)));
}

bool is_pseudomanifold(const SimplicialComplex& x) {
  std::map<Simplex, int> count;
  for (const auto& t : x.simplices(x.dim()))
    for (std::size_t i = 0; i < t.size(); ++i) {
      Simplex f = t;
      f.erase(f.begin() + static_cast<long>(i));
      ++count[f];
    }
  for (const auto& [f, c] : count)
    if (c != 2) return false;
  return count.size() == x.count(x.dim() - 1);
}

bool cohomologous_up_to_sign(const SimplicialComplex& x, const IntegralCocycle& a, const IntegralCocycle& b) {
  return is_integral_coboundary(x, a + b.negated()) || is_integral_coboundary(x, a + b);
}

}  // namespace

TEST_CASE("corpus spaces are valid closed complexes") {
  const FieldSpec& Q = FieldSpec::rationals();
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    NamedSpace s = build(name);
    CHECK(s.x.construction_defects().empty());
    CHECK(is_pseudomanifold(s.x));
    CHECK(component_count(s.x) == 1);
    CHECK(!cocycle_violation(s.x, s.xi));
    for (const auto& [n, z] : s.classes) CHECK(!cocycle_violation(s.x, z));
    std::vector<FlatBundle> bundles;
    const FieldSpec& f = FieldSpec::parse(s.default_field);
    for (const auto& r : s.bundles) bundles.push_back(realize(r, s, f));
    CHECK(validate(s.x, s.xi, bundles).ok());
    (void)Q;
  }
}

TEST_CASE("euler characteristics and betti numbers") {
  const FieldSpec& Q = FieldSpec::rationals();
  const FieldSpec& F2 = FieldSpec::prime(2);
  struct Row {
    std::string name;
    long chi;
    std::vector<std::size_t> bq, b2;
  };
  const std::vector<Row> rows{
      {"circle", 0, {1, 1}, {1, 1}},
      {"torus2", 0, {1, 2, 1}, {1, 2, 1}},
      {"torus3", 0, {1, 3, 3, 1}, {1, 3, 3, 1}},
      {"surface2", -2, {1, 4, 1}, {1, 4, 1}},
      {"surface3", -4, {1, 6, 1}, {1, 6, 1}},
      {"rp2", 1, {1, 0, 0}, {1, 1, 1}},
      {"rp3", 0, {1, 0, 0, 1}, {1, 1, 1, 1}},
      {"s1_x_sphere2", 0, {1, 2, 1}, {1, 2, 1}},
      {"s1_x_sphere3", 0, {1, 1, 1, 1}, {1, 1, 1, 1}},
      {"rp3_handle", 0, {1, 1, 1, 1}, {1, 2, 2, 1}},
      {"s1_x_surface2", 0, {1, 5, 5, 1}, {1, 5, 5, 1}},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    NamedSpace s = build(r.name);
    CHECK(s.x.euler_characteristic() == r.chi);
    CHECK(betti(s, Q) == r.bq);
    CHECK(betti(s, F2) == r.b2);
  }
}

TEST_CASE("triangulation sizes") {
  auto s2 = build("surface2");
  CHECK(s2.x.count(0) == 15);
  CHECK(s2.x.count(1) == 51);
  CHECK(s2.x.count(2) == 34);
  auto r3 = build("rp3");
  CHECK(r3.x.count(0) == 40);
  CHECK(r3.x.count(3) == 192);
  CHECK(build("torus3").x.count(3) == 162);
}

TEST_CASE("bundled cuts are dual to xi") {
  const FieldSpec& Q = FieldSpec::rationals();
  for (const auto& name : corpus_names()) {
    NamedSpace s = build(name);
    if (s.cut_vertices.empty()) continue;
    CAPTURE(name);
    auto res = cut_along(s.x, s.cut_vertices, FlatBundle::trivial(s.x, Q));
    CHECK(validate_cut(res.cut).ok());
    CHECK(cohomologous_up_to_sign(s.x, res.dual, s.xi));
    CHECK(!is_integral_coboundary(s.x, s.xi));
  }
}

TEST_CASE("named classes are independent") {
  auto s = build("surface2");
  auto d = dual_curve_cocycles(s);
  CHECK(!is_integral_coboundary(s.x, d.v1));
  CHECK(!is_integral_coboundary(s.x, d.v2));
  CHECK(!cohomologous_up_to_sign(s.x, d.v1, d.v2));
  CHECK(!cohomologous_up_to_sign(s.x, d.v1, d.xi));
  auto t3 = build("torus3");
  for (const char* a : {"x1", "x2", "x3"}) CHECK(!is_integral_coboundary(t3.x, t3.cls(a)));
  CHECK(!is_integral_coboundary(t3.x, t3.cls("x1") + t3.cls("x2") + t3.cls("x3")));
  auto h = build("rp3_handle");
  CHECK(!is_integral_coboundary(h.x, h.xi));
  auto sp = build("s1_x_surface2_prime");
  CHECK(!cohomologous_up_to_sign(sp.x, sp.xi, sp.cls("theta")));
}

TEST_CASE("unknown names and missing roots are reported") {
  CHECK_THROWS_AS(build("klein"), CorpusError);
  CHECK_THROWS_AS(build("torus9"), CorpusError);
  auto h = build("rp3_handle");
  CHECK_THROWS_AS(realize(h.bundles[0], h, FieldSpec::prime(2)), CorpusError);
  CHECK_NOTHROW(realize(h.bundles[0], h, FieldSpec::parse("2^2")));
}
