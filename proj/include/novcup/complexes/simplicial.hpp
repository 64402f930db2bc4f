#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace novcup {

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Simplex = std::vector<std::uint32_t>;

std::string simplex_str(const Simplex& s);

/// Finite simplicial complex with simplices stored per dimension in
/// lexicographic order. Cochain bases follow this order.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// All faces of the given simplices are added. Vertices are sorted.
  static SimplicialComplex from_facets(std::uint32_t n_vertices, const std::vector<Simplex>& facets);
  /// Takes the list as is (no closure), so that validate() can report defects.
  /// Simplices are sorted internally; duplicates are recorded as defects.
  static SimplicialComplex from_simplices(std::uint32_t n_vertices, const std::vector<Simplex>& simplices);

  std::uint32_t vertex_count() const { return n_; }
  /// -1 for the empty complex.
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int q) const;
  const Simplex& simplex(int q, std::size_t i) const { return by_dim_[q][i]; }
  const std::vector<Simplex>& simplices(int q) const;
  std::optional<std::size_t> index(const Simplex& s) const;
  std::size_t index_or_throw(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index(s).has_value(); }
  long euler_characteristic() const;
  std::size_t total_simplices() const;

  /// Defects recorded at construction (unsorted input, duplicates, bad vertices).
  const std::vector<std::string>& construction_defects() const { return defects_; }

  /// Full subcomplex spanned by a vertex set (indices kept).
  std::vector<Simplex> induced(const std::vector<std::uint32_t>& vertices) const;

 private:
  void add_sorted(const Simplex& s);
  std::uint32_t n_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> lookup_;
  std::vector<std::string> defects_;
  void rebuild_index();
};

/// Integer values on oriented edges u < v, indexed like the edges of X.
class IntegralCocycle {
 public:
  IntegralCocycle() = default;
  explicit IntegralCocycle(const SimplicialComplex& x) : values_(x.count(1), 0) {}
  IntegralCocycle(const SimplicialComplex& x, const std::map<std::pair<std::uint32_t, std::uint32_t>, long>& edges);

  std::size_t size() const { return values_.size(); }
  long at(std::size_t edge) const { return values_[edge]; }
  void set(std::size_t edge, long v) { values_[edge] = v; }
  const std::vector<long>& values() const { return values_; }
  /// Value on an oriented edge of X (antisymmetric extension).
  long value(const SimplicialComplex& x, std::uint32_t u, std::uint32_t v) const;
  bool is_zero() const;
  IntegralCocycle negated() const;
  IntegralCocycle scaled(long c) const;
  IntegralCocycle operator+(const IntegralCocycle& o) const;
  /// z + delta(f) for an integer 0-cochain f.
  IntegralCocycle plus_coboundary(const SimplicialComplex& x, const std::vector<long>& f) const;
  bool operator==(const IntegralCocycle& o) const { return values_ == o.values_; }

 private:
  std::vector<long> values_;
};

/// The first 2-simplex violating the cocycle condition, if any.
std::optional<Simplex> cocycle_violation(const SimplicialComplex& x, const IntegralCocycle& z);

/// Spanning-forest gauge of z: result vanishes on a spanning forest of the
/// 1-skeleton and differs from z by an integral coboundary.
struct GaugeResult {
  IntegralCocycle z;
  std::vector<long> potential;  // z_gauged = z + delta(potential)
};
GaugeResult gauge_fix(const SimplicialComplex& x, const IntegralCocycle& z);

/// Divides z by the gcd of its gauge-fixed values. Returns the primitive
/// cocycle and the content (0 when z is a coboundary).
struct PrimitiveCocycle {
  IntegralCocycle z;
  long content = 0;
};
PrimitiveCocycle primitive_part(const SimplicialComplex& x, const IntegralCocycle& z);

/// True iff z is an integral coboundary (equivalently zero in H^1(X; Q)).
bool is_integral_coboundary(const SimplicialComplex& x, const IntegralCocycle& z);

/// Number of connected components of the 1-skeleton.
std::size_t component_count(const SimplicialComplex& x);

}  // namespace novcup
