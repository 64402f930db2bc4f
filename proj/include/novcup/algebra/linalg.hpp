#pragma once

// Exact linear algebra over a field: sparse matrices, an incremental echelon
// basis with combination tracking, kernels, and cohomology of a pair of maps.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "novcup/algebra/field.hpp"

namespace novcup {

using Vec = std::vector<FieldElem>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
void axpy(Vec& y, const FieldElem& a, const Vec& x);  // y += a x
Vec scaled(const Vec& v, const FieldElem& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);

/// Row-major sparse matrix; entries within a row sorted by column, no zeros.
template <class T>
struct SparseRows {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, T>>> row;

  SparseRows() = default;
  SparseRows(std::size_t r, std::size_t c) : rows(r), cols(c), row(r) {}
  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : row) n += r.size();
    return n;
  }
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols) : f_(&f), m_(rows, cols) {}

  const FieldSpec& field() const { return *f_; }
  std::size_t rows() const { return m_.rows; }
  std::size_t cols() const { return m_.cols; }
  /// Accumulates v into entry (i, j).
  void add(std::size_t i, std::size_t j, const FieldElem& v);
  FieldElem at(std::size_t i, std::size_t j) const;
  const std::vector<std::pair<std::uint32_t, FieldElem>>& row(std::size_t i) const { return m_.row[i]; }

  Vec apply(const Vec& x) const;
  /// x^T A
  Vec apply_left(const Vec& y) const;
  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  bool is_zero() const;

 private:
  const FieldSpec* f_ = nullptr;
  SparseRows<FieldElem> m_;
};

/// Incrementally built echelon basis of row vectors of length n. Every stored
/// row carries a tag of length m, combined alongside during elimination, so
/// reductions report the combination of inserted vectors that was used.
class Echelon {
 public:
  Echelon(const FieldSpec& f, std::size_t n, std::size_t m);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  std::size_t rank() const;
  std::size_t width() const { return n_; }
  std::size_t tag_width() const { return m_; }

  /// v -= sum c_i row_i and tag -= sum c_i tag_i until v has no entry in a
  /// pivot column. tag may be null.
  void reduce(Vec& v, Vec* tag) const;
  /// Inserts an already reduced nonzero vector; returns its pivot column.
  std::size_t insert(Vec v, Vec tag);
  /// Reduces and inserts when independent. Returns true if inserted; else
  /// tag holds the dependency relation (the reduced tag).
  bool add(Vec v, Vec& tag);
  bool is_pivot(std::size_t col) const;

  struct Impl;

 private:
  std::unique_ptr<Impl> impl_;
  std::size_t n_, m_;
};

std::size_t rank(const SparseMatrix& a);
/// Basis of {x : A x = 0}.
std::vector<Vec> kernel_basis(const SparseMatrix& a);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const SparseMatrix& a, const Vec& b);

/// H = ker(d_next) / im(d_prev) for maps C^{q-1} -> C^q -> C^{q+1}.
/// Representatives are cocycles chosen deterministically by echelon order.
class CohomologySpace {
 public:
  CohomologySpace(const SparseMatrix& d_prev, const SparseMatrix& d_next);

  const FieldSpec& field() const { return *f_; }
  std::size_t dim() const { return reps_.size(); }
  std::size_t cochain_dim() const { return n_; }
  /// Cocycle representatives of a basis of H.
  const std::vector<Vec>& reps() const { return reps_; }
  /// Coordinates of the class of a cocycle; throws if y is not a cocycle.
  Vec coords(const Vec& y) const;
  /// Class coordinates and a preimage x with y - rep(coords) = d_prev x.
  std::pair<Vec, Vec> decompose(const Vec& y) const;
  bool is_coboundary(const Vec& y) const { return is_zero_vec(coords(y)); }
  Vec rep_of(const Vec& coords) const;
  /// Basis of cocycles (before quotienting).
  const std::vector<Vec>& cocycles() const { return cocycles_; }

 private:
  const FieldSpec* f_;
  std::size_t n_, prev_dim_;
  std::vector<Vec> cocycles_;
  std::vector<Vec> reps_;
  std::vector<std::size_t> gen_index_;  // cocycle index of each generator
  Echelon ech_;
};

/// Span bookkeeping for subspaces of k^n.
class Subspace {
 public:
  Subspace(const FieldSpec& f, std::size_t n);
  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return n_; }
  /// Adds v; returns true if it enlarged the span.
  bool add(const Vec& v);
  bool contains(const Vec& v) const;
  const std::vector<Vec>& basis() const { return basis_; }
  /// Coefficients of v in the basis, if v lies in the span.
  std::optional<Vec> coefficients(const Vec& v) const;

 private:
  const FieldSpec* f_;
  std::size_t n_;
  std::vector<Vec> basis_;
  Echelon ech_;
};

}  // namespace novcup
