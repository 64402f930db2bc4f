#include <doctest.h>

#include "novcup/corpus/corpus.hpp"
#include "novcup/novikov/novikov.hpp"
#include "support.hpp"

using namespace novcup;

namespace {

const FieldSpec& Q = FieldSpec::rationals();

std::vector<FieldElem> jump_values(const NovikovDegree& d) {
  std::vector<FieldElem> out;
  for (const auto& j : d.jumps) out.push_back(j.a);
  return out;
}

}  // namespace

TEST_CASE("circle novikov numbers") {
  auto s = build("circle");
  auto rep = novikov_numbers(s.x, s.xi, FlatBundle::trivial(s.x, Q));
  CHECK(rep.b() == std::vector<std::size_t>{0, 0});
  CHECK(jump_values(rep.degrees[0]) == std::vector<FieldElem>{Q.one()});
  CHECK(jump_values(rep.degrees[1]) == std::vector<FieldElem>{Q.one()});
  CHECK(rep.generic_check);
  CHECK(rep.content == 1);
}

TEST_CASE("surface and torus novikov numbers") {
  auto s = build("surface2");
  auto rep = novikov_numbers(s.x, s.xi, FlatBundle::trivial(s.x, Q));
  CHECK(rep.b() == std::vector<std::size_t>{0, 2, 0});
  CHECK(static_cast<long>(rep.degrees[1].b) == -s.x.euler_characteristic());
  std::mt19937_64 rng(11);
  const auto lc = novikov_complex(s.x, s.xi, FlatBundle::trivial(s.x, Q));
  for (int i = 0; i < 3; ++i) {
    auto a = novcup::testing::random_nonzero(Q, rng);
    if (a.is_one()) continue;
    CHECK(novcup::testing::betti_numbers(lc.evaluate(a)) == rep.b());
  }
  auto t = build("torus2");
  auto tr = novikov_numbers(t.x, t.xi, FlatBundle::trivial(t.x, Q));
  CHECK(tr.b() == std::vector<std::size_t>{0, 0, 0});
  for (const auto& d : tr.degrees) CHECK(jump_values(d) == std::vector<FieldElem>{Q.one()});
}

TEST_CASE("jumps raise dimension and flip under negation") {
  for (const auto& name : {"circle", "torus2", "surface2", "rp3_handle"}) {
    CAPTURE(name);
    auto s = build(name);
    const FieldSpec& f = FieldSpec::parse(s.default_field);
    const auto F = FlatBundle::trivial(s.x, f);
    auto rep = novikov_numbers(s.x, s.xi, F);
    auto neg = novikov_numbers(s.x, s.xi.negated(), F);
    CHECK(rep.b() == neg.b());
    CHECK(rep.generic_check);
    const auto lc = novikov_complex(s.x, s.xi, F);
    for (std::size_t q = 0; q < rep.degrees.size(); ++q) {
      for (const auto& j : rep.degrees[q].jumps) {
        CHECK(lc.evaluate(j.a).betti(static_cast<int>(q)) > rep.degrees[q].b);
        auto nj = jump_values(neg.degrees[q]);
        CHECK(std::find(nj.begin(), nj.end(), j.a.inverse()) != nj.end());
      }
      CHECK(rep.degrees[q].jumps.size() == neg.degrees[q].jumps.size());
    }
  }
}

TEST_CASE("residual factors are reported symbolically") {
  // T^2 + 1 has no roots over F_3: twist the circle by the rank-2 rotation.
  const FieldSpec& F3 = FieldSpec::prime(3);
  auto s = build("circle");
  Mat rot(F3, 2);
  rot.at(0, 1) = F3.one();
  rot.at(1, 0) = -F3.one();
  std::vector<Mat> edges(s.x.count(1), Mat::identity(F3, 2));
  edges[s.x.index_or_throw({0, 1})] = rot;
  FlatBundle F(F3, 2, edges);
  auto rep = novikov_numbers(s.x, s.xi, F);
  CHECK(rep.b() == std::vector<std::size_t>{0, 0});
  CHECK(rep.degrees[0].jumps.empty());
  REQUIRE(rep.degrees[0].residual_factors.size() == 1);
  CHECK(rep.degrees[0].residual_factors[0].degree() == 2);
}

TEST_CASE("xi-generic test") {
  auto s = build("circle");
  auto triv = xi_generic_test(s.x, s.xi, FlatBundle::trivial(s.x, Q));
  CHECK(!triv.generic);
  REQUIRE(triv.witness.has_value());
  CHECK(triv.witness->factor.eval(Q.one()).is_zero());
  CHECK(xi_generic_test(s.x, s.xi, FlatBundle::power(s.x, Q.from_int(2), s.xi)).generic);
  CHECK(xi_generic_test(s.x, IntegralCocycle(s.x), FlatBundle::trivial(s.x, Q)).generic);
  auto t = build("torus2");
  CHECK(xi_generic_test(t.x, IntegralCocycle(t.x), FlatBundle::power(t.x, Q.from_int(5), t.cls("x2"))).generic);
}
