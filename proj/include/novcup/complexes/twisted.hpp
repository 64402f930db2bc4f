#pragma once

#include <functional>
#include <vector>

#include "novcup/algebra/linalg.hpp"
#include "novcup/algebra/poly.hpp"
#include "novcup/complexes/bundle.hpp"
#include "novcup/complexes/simplicial.hpp"

namespace novcup {

/// Cochain complex over a field, C^0 -> C^1 -> ... -> C^D. d(q) maps C^q to
/// C^{q+1}; outside 0..D-1 it is a zero map of the right shape.
class TwistedComplex {
 public:
  TwistedComplex() = default;
  TwistedComplex(const FieldSpec& f, std::vector<std::size_t> dims, std::vector<SparseMatrix> d);

  const FieldSpec& field() const { return *f_; }
  int top() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int q) const;
  const SparseMatrix& d(int q) const;
  CohomologySpace cohomology(int q) const { return CohomologySpace(d(q - 1), d(q)); }
  std::size_t betti(int q) const;
  bool d_squared_zero() const;

 private:
  const FieldSpec* f_ = nullptr;
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> d_;
  std::vector<SparseMatrix> zero_;  // zero maps for q = -1 and q = D
};

/// Sparse matrix with Laurent polynomial entries in one variable T.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols) : f_(&f), m_(rows, cols) {}

  const FieldSpec& field() const { return *f_; }
  std::size_t rows() const { return m_.rows; }
  std::size_t cols() const { return m_.cols; }
  void add(std::size_t i, std::size_t j, const LaurentPoly& v);
  LaurentPoly at(std::size_t i, std::size_t j) const;
  const std::vector<std::pair<std::uint32_t, LaurentPoly>>& row(std::size_t i) const { return m_.row[i]; }
  std::size_t nnz() const { return m_.nnz(); }

  SparseMatrix evaluate(const FieldElem& a) const;
  std::vector<LaurentPoly> apply(const std::vector<LaurentPoly>& x) const;
  LaurentMatrix operator*(const LaurentMatrix& o) const;
  bool is_zero() const;
  /// Smallest exponent among the entries (0 for the zero matrix).
  int min_valuation() const;

 private:
  const FieldSpec* f_ = nullptr;
  SparseRows<LaurentPoly> m_;
};

enum class Ring { polynomial, laurent };

/// Cochain complex of free modules over k[T] or k[T, T^-1].
class ParamComplex {
 public:
  ParamComplex() = default;
  ParamComplex(const FieldSpec& f, Ring ring, std::vector<std::size_t> dims, std::vector<LaurentMatrix> d);

  const FieldSpec& field() const { return *f_; }
  Ring ring() const { return ring_; }
  int top() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int q) const;
  /// Empty (0 x 0) matrix outside 0..D-1 is never returned; shapes always match.
  const LaurentMatrix& d(int q) const;
  /// Substitutes T = a.
  TwistedComplex evaluate(const FieldElem& a) const;
  bool d_squared_zero() const;

 private:
  const FieldSpec* f_ = nullptr;
  Ring ring_ = Ring::laurent;
  std::vector<std::size_t> dims_;
  std::vector<LaurentMatrix> d_;
  std::vector<LaurentMatrix> zero_;
};

/// Row index of cochain (simplex s, fiber e) in a rank-d cochain group.
inline std::size_t cochain_index(std::size_t s, std::size_t e, std::size_t d) { return s * d + e; }

/// Coboundary with the twist on the leading face:
/// (dc)(v0..v{q+1}) = g(v0v1) c(v1..v{q+1}) + sum_{i>=1} (-1)^i c(..^vi..).
TwistedComplex twisted_complex(const SimplicialComplex& x, const FlatBundle& f);

/// C*(X; T^{s z} (x) F) over k[T, T^-1].
ParamComplex lambda_complex(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int s = 1);

/// Visits the nonzero structure of the degree-q coboundary: the callback gets
/// (row, col, coefficient, edge exponent) where the exponent is z(v0v1) for
/// leading-face terms and 0 otherwise. Used to build twisted variants.
void for_each_coboundary_entry(const SimplicialComplex& x, const IntegralCocycle* z, const FlatBundle& f, int q,
                               const std::function<void(std::size_t, std::size_t, const FieldElem&, long)>& fn);

}  // namespace novcup
