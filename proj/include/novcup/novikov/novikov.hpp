#pragma once

// Novikov numbers, jump points and the xi-genericity test for the rank-one
// family a^xi (x) F.

#include <optional>
#include <string>
#include <vector>

#include "novcup/pidmod/snf.hpp"

namespace novcup {

struct JumpPoint {
  FieldElem a;
  int multiplicity = 0;  // total multiplicity over the factors of degrees q and q+1
};

struct NovikovDegree {
  int q = 0;
  std::size_t b = 0;  // free rank, also the generic dimension
  std::vector<JumpPoint> jumps;
  /// Monic factors of the torsion in degrees q, q+1 without roots in the field.
  std::vector<Poly> residual_factors;
};

struct NovikovReport {
  std::vector<ModuleDecomposition> modules;
  std::vector<NovikovDegree> degrees;
  /// Content of z (gcd of gauge-fixed values); the family uses z / content.
  long content = 0;
  /// Non-jump point where the direct dimensions were compared to b_q.
  std::optional<FieldElem> check_point;
  bool generic_check = false;

  std::vector<std::size_t> b() const;
};

/// H^*(X; T^xi (x) F) over k[T, T^-1], with xi normalized to be primitive.
ParamComplex novikov_complex(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int sign = 1);

NovikovReport novikov_numbers(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f);

struct GenericWitness {
  int degree = 0;
  Poly factor;
};

struct GenericResult {
  bool generic = true;
  std::optional<GenericWitness> witness;
};

/// F is xi-generic in the rank-one slice iff T = 1 is not a root of any
/// torsion factor of H^*(X; T^xi (x) F).
GenericResult xi_generic_test(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f);

}  // namespace novcup
