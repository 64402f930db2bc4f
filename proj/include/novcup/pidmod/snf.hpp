#pragma once

// Smith normal form over k[T] and k[T, T^-1] and the resulting module
// structure of cohomology of free complexes.

#include <optional>
#include <string>
#include <vector>

#include "novcup/complexes/twisted.hpp"

namespace novcup {

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SnfOptions {
  bool track_u = false;
  bool track_v = false;
};

struct SnfResult {
  std::size_t rank = 0;
  /// Diagonal entries d_1 | d_2 | ... | d_rank, monic; for the Laurent ring
  /// also free of T-power factors. Units appear as 1.
  std::vector<Poly> diagonal;
  /// U * M * V = D with D diagonal in the leading rank positions.
  std::optional<LaurentMatrix> u, v;

  /// The non-unit diagonal entries.
  std::vector<Poly> invariant_factors() const;
};

/// Deterministic pivoting: unit pivots first (fewest fill, then lowest row,
/// then lowest column), then a dense Euclidean pass choosing a pivot of
/// minimal degree, ties broken by lowest (row, column).
SnfResult snf(const LaurentMatrix& m, Ring ring, SnfOptions opts = {});

struct ModuleDecomposition {
  int degree = 0;
  Ring ring = Ring::laurent;
  std::size_t free_rank = 0;
  std::vector<Poly> invariant_factors;  // monic non-units, each dividing the next

  std::string str() const;
};

/// Per-degree decomposition of H^q = ker d_q / im d_{q-1}. Throws
/// ModuleError when d^2 != 0.
std::vector<ModuleDecomposition> cohomology_modules(const ParamComplex& c);

/// Dimensions of H^q(C (x) k_a) predicted by the universal coefficient
/// theorem: free(q) + #{factors of q vanishing at a} + #{factors of q+1 vanishing at a}.
std::vector<std::size_t> dims_at(const std::vector<ModuleDecomposition>& m, const FieldElem& a);

/// Multiplicities of the root a in the invariant factors of one degree.
std::vector<int> multiplicities_at(const ModuleDecomposition& m, const FieldElem& a);

}  // namespace novcup
