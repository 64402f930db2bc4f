#pragma once

// Cut presentations: X rebuilt from a complex N whose boundary contains two
// disjoint copies i_+(V), i_-(V) of a complex V, glued by sigma.

#include <cstdint>
#include <vector>

#include "novcup/complexes/bundle.hpp"
#include "novcup/complexes/twisted.hpp"

namespace novcup {

struct CutPresentation {
  SimplicialComplex n;
  SimplicialComplex v;
  std::vector<std::uint32_t> i_plus;   // vertex of V -> vertex of N
  std::vector<std::uint32_t> i_minus;
  std::vector<Mat> sigma;              // per vertex of V, fiber map over i_+ to fiber over i_-
  FlatBundle f0;                       // on N
  std::vector<std::uint32_t> projection;  // vertex of N -> vertex of X; may be empty

  const FieldSpec& field() const { return f0.field(); }
  std::size_t rank() const { return f0.rank(); }
};

Simplex map_simplex(const std::vector<std::uint32_t>& vmap, const Simplex& s);

/// Checks that i_+ and i_- are order preserving simplicial embeddings with
/// disjoint full images and that sigma intertwines the restricted bundles.
Diagnostics validate_cut(const CutPresentation& cut);

/// The bundle i_-^* F_0 on V.
FlatBundle restrict_minus(const CutPresentation& cut);

/// C^q = C^q(N)[T] + C^{q-1}(V)[T] with
/// delta(a, b) = (delta_N a, (sigma i_+^* - T i_-^*) a - delta_V b).
struct DeformationComplex {
  ParamComplex complex;
  std::vector<std::size_t> n_dims;  // rank * #q-simplices of N
  std::vector<std::size_t> v_dims;  // rank * #q-simplices of V
  /// Offset of the V part inside C^q (equals n_dims[q]).
  std::size_t v_offset(int q) const { return q >= 0 && q < static_cast<int>(n_dims.size()) ? n_dims[q] : 0; }
};

DeformationComplex deformation_complex(const CutPresentation& cut);
TwistedComplex evaluate(const DeformationComplex& c, const FieldElem& a);

/// Cochains on N with a i_-^* alpha = sigma i_+^* alpha, with delta_N
/// restricted; expressed in a kernel basis. Requires a != 0.
struct BoundaryConditionComplex {
  TwistedComplex complex;
  std::vector<std::vector<Vec>> basis;  // per degree, cochains on N
};
BoundaryConditionComplex boundary_condition_complex(const CutPresentation& cut, const FieldElem& a);

/// Cochains of N vanishing on i_+(V): C*(N, d_+N; F_0).
TwistedComplex relative_complex(const CutPresentation& cut);

/// Cuts X along the full subcomplex spanned by the given vertices. The star
/// of V must split into exactly two sides; the "+" side is the one holding the
/// lowest-indexed top simplex. F_0 is the pullback of f and sigma is the
/// identity. dual receives the cocycle on X that counts crossings from the
/// "+" side to the "-" side.
struct CutResult {
  CutPresentation cut;
  IntegralCocycle dual;
  std::vector<std::uint32_t> v_vertices;  // vertex of V -> vertex of X
};
CutResult cut_along(const SimplicialComplex& x, const std::vector<std::uint32_t>& v_vertices, const FlatBundle& f);

/// The complex X recovered from the projection of a cut (simplices of N mapped down).
SimplicialComplex glue(const CutPresentation& cut, std::uint32_t x_vertices);

}  // namespace novcup
