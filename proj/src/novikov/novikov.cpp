#include "novcup/novikov/novikov.hpp"

#include <algorithm>

namespace novcup {

namespace {

bool vanishes_anywhere(const std::vector<ModuleDecomposition>& mods, const FieldElem& a) {
  for (const auto& m : mods)
    for (const auto& p : m.invariant_factors)
      if (p.eval(a).is_zero()) return true;
  return false;
}

std::optional<FieldElem> find_regular_point(const FieldSpec& f, const std::vector<ModuleDecomposition>& mods) {
  if (f.is_finite()) {
    for (std::uint64_t c = 1; c < *f.order(); ++c) {
      FieldElem a = f.from_code(c);
      if (!a.is_zero() && !vanishes_anywhere(mods, a)) return a;
    }
    return std::nullopt;
  }
  for (long k = 2;; ++k) {
    FieldElem a = f.from_int(k);
    if (!vanishes_anywhere(mods, a)) return a;
  }
}

}  // namespace

std::vector<std::size_t> NovikovReport::b() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.b);
  return out;
}

ParamComplex novikov_complex(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int sign) {
  const auto prim = primitive_part(x, z);
  const IntegralCocycle zz = prim.content == 0 ? IntegralCocycle(x) : gauge_fix(x, prim.z).z;
  return lambda_complex(x, zz, f, sign);
}

NovikovReport novikov_numbers(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f) {
  NovikovReport rep;
  rep.content = primitive_part(x, z).content;
  rep.modules = cohomology_modules(novikov_complex(x, z, f));
  const auto& mods = rep.modules;
  for (std::size_t q = 0; q < mods.size(); ++q) {
    NovikovDegree d;
    d.q = static_cast<int>(q);
    d.b = mods[q].free_rank;
    std::vector<Poly> factors = mods[q].invariant_factors;
    if (q + 1 < mods.size())
      factors.insert(factors.end(), mods[q + 1].invariant_factors.begin(), mods[q + 1].invariant_factors.end());
    for (const auto& p : factors) {
      auto rf = poly_roots(p);
      for (const auto& [root, mult] : rf.roots) {
        auto it = std::find_if(d.jumps.begin(), d.jumps.end(), [&](const JumpPoint& j) { return j.a == root; });
        if (it == d.jumps.end()) d.jumps.push_back({root, mult});
        else it->multiplicity += mult;
      }
      if (rf.residual.degree() > 0 &&
          std::find(d.residual_factors.begin(), d.residual_factors.end(), rf.residual) == d.residual_factors.end())
        d.residual_factors.push_back(rf.residual);
    }
    std::sort(d.jumps.begin(), d.jumps.end(), [](const JumpPoint& a, const JumpPoint& b) { return a.a < b.a; });
    rep.degrees.push_back(d);
  }
  rep.check_point = find_regular_point(f.field(), mods);
  if (rep.check_point) {
    const TwistedComplex c = novikov_complex(x, z, f).evaluate(*rep.check_point);
    rep.generic_check = true;
    for (const auto& d : rep.degrees)
      if (c.betti(d.q) != d.b) rep.generic_check = false;
  }
  return rep;
}

GenericResult xi_generic_test(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f) {
  GenericResult res;
  const auto mods = cohomology_modules(novikov_complex(x, z, f));
  const FieldElem one = f.field().one();
  for (const auto& m : mods)
    for (const auto& p : m.invariant_factors)
      if (p.eval(one).is_zero()) {
        res.generic = false;
        res.witness = GenericWitness{m.degree, p};
        return res;
      }
  return res;
}

}  // namespace novcup
