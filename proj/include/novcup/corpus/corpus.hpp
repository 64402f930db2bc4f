#pragma once

// Deterministic triangulations of the example spaces with their
// distinguished integral classes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novcup/complexes/bundle.hpp"
#include "novcup/complexes/simplicial.hpp"

namespace novcup {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank-1 bundle a^{s xi} where a is the least primitive-ish root of unity of
/// the given order (root_order = 0 means a fixed generic parameter).
struct BundleRecipe {
  std::string name;
  std::uint64_t root_order = 0;
  std::int64_t generic_value = 2;  // used when root_order == 0
  int exponent = 1;                // s
};

struct NamedSpace {
  std::string name;
  SimplicialComplex x;
  IntegralCocycle xi;
  /// Further named integral classes (v1, v2, theta, ...).
  std::vector<std::pair<std::string, IntegralCocycle>> classes;
  /// Vertex set V of X whose cut has dual class xi (empty when none is bundled).
  std::vector<std::uint32_t> cut_vertices;
  std::vector<BundleRecipe> bundles;
  std::string default_field = "Q";

  const IntegralCocycle& cls(const std::string& n) const;
};

/// Circle as a triangle; xi(01) = 1.
NamedSpace circle();
/// T^n for n = 1, 2, 3 with coordinate classes x1..xn; xi = x1.
NamedSpace torus(int n);
/// Genus g surface as a chain of 3x3 grid tori; classes v1, v2 and xi.
NamedSpace surface(int g);
/// RP^n for n = 1, 2, 3; xi = 0.
NamedSpace rp(int n);
/// S^1 x S^(n-1), the sphere being the boundary of the n-simplex; xi = theta.
NamedSpace s1_x_sphere(int n);
/// Removes one top simplex from each (the lexicographically first one on
/// which all classes vanish) and glues the boundary spheres. Classes of both
/// summands are kept, extended by zero; xi = xi_a + xi_b.
NamedSpace connected_sum(const NamedSpace& a, const NamedSpace& b);
/// S^1 x A with the staircase product triangulation; xi = theta, and each
/// class c of A is pulled back as "c" (xi of A becomes "xi_base").
NamedSpace product_with_circle(const NamedSpace& a);

/// Product of ordered simplicial complexes (vertex (i, j) -> i * |B| + j).
SimplicialComplex ordered_product(const SimplicialComplex& a, const SimplicialComplex& b);

/// v1, v2, xi of surface(g).
struct DualCurves {
  IntegralCocycle v1, v2, xi;
};
DualCurves dual_curve_cocycles(const NamedSpace& surface_space);

/// Names accepted by build(): circle, torus1..3, surface2..6, rp1..3,
/// s1_x_sphere2..4, rp2_handle, rp3_handle, s1_x_surface2, s1_x_surface2_prime.
NamedSpace build(const std::string& name);
std::vector<std::string> corpus_names();

FlatBundle realize(const BundleRecipe& r, const NamedSpace& s, const FieldSpec& f);

}  // namespace novcup
