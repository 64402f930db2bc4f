#pragma once

// Cross-check suites shared by `selftest` and the acceptance driver. Each
// check compares two independent computations and reports a single verdict.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "novcup/corpus/corpus.hpp"

namespace novcup {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

/// A random closed-under-faces 2-complex over Z/4-labelled vertices; edges
/// join labels at distance <= 1, so the label difference is a cocycle. The
/// cocycle is scaled by 1, 2 or 3 and a field is picked among Q, F2, F3, F5.
struct RandomSpace {
  SimplicialComplex x;
  IntegralCocycle z;
  const FieldSpec* field = nullptr;
  std::string label;
};
RandomSpace random_two_complex(std::mt19937_64& rng, std::size_t max_simplices = 200);

/// Module-formula pages against the chain-level Z_r / B_r computation, up to
/// the stable page.
CheckResult check_pages(const std::string& label, const SimplicialComplex& x, const IntegralCocycle& z,
                        const FieldSpec& f);

/// dims_at(a) against the dimensions of the complex evaluated at a.
CheckResult check_uct(const std::string& label, const SimplicialComplex& x, const IntegralCocycle& z,
                      const FieldSpec& f, std::mt19937_64& rng, int samples = 5);

/// Deformation complex at a against the direct model with a^-1, and at 0
/// against relative cohomology. Needs s.cut_vertices.
CheckResult check_cut(const NamedSpace& s, const FieldSpec& f, std::mt19937_64& rng, int samples = 5);

/// Leibniz rule for psi_t on random cochain pairs of the bundled cut.
CheckResult check_leibniz(const NamedSpace& s, const FieldSpec& f, std::mt19937_64& rng, int pairs = 100);

/// E_infinity dims equal the Novikov numbers; survivors lie in ker(. u xi).
CheckResult check_survivors(const NamedSpace& s, const FieldSpec& f);

/// Massey cup-length for xi = 0 against the naive classical cup-length.
CheckResult check_classical(const NamedSpace& s, const FieldSpec& f);

/// All suites on the corpus and `randoms` random complexes.
std::vector<CheckResult> selftest_suite(std::uint64_t seed, int randoms = 20);

}  // namespace novcup
