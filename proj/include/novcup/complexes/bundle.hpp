#pragma once

#include <string>
#include <vector>

#include "novcup/algebra/field.hpp"
#include "novcup/complexes/simplicial.hpp"

namespace novcup {

/// Small dense square matrix over a field (bundle fibers).
class Mat {
 public:
  Mat() = default;
  Mat(const FieldSpec& f, std::size_t n) : f_(&f), n_(n), a_(n * n, f.zero()) {}
  static Mat identity(const FieldSpec& f, std::size_t n);
  static Mat scalar(const FieldElem& c, std::size_t n);

  const FieldSpec& field() const { return *f_; }
  std::size_t size() const { return n_; }
  const FieldElem& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  FieldElem& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_identity() const;
  /// Throws AlgebraError when singular.
  Mat inverse() const;
  FieldElem det() const;
  /// Kronecker product, index (i, k) -> i * o.size() + k.
  Mat kron(const Mat& o) const;
  std::string str() const;

 private:
  const FieldSpec* f_ = nullptr;
  std::size_t n_ = 0;
  std::vector<FieldElem> a_;
};

/// Rank-d local system over k: one invertible matrix per edge u < v of X,
/// acting as parallel transport g(uv). Reversed edges use the inverse.
class FlatBundle {
 public:
  FlatBundle() = default;
  FlatBundle(const FieldSpec& f, std::size_t rank, std::vector<Mat> edge_mats, std::string name = "");

  static FlatBundle trivial(const SimplicialComplex& x, const FieldSpec& f, std::size_t rank = 1);
  /// The rank-1 bundle a^z: g(uv) = a^{z(uv)}.
  static FlatBundle power(const SimplicialComplex& x, const FieldElem& a, const IntegralCocycle& z);

  const FieldSpec& field() const { return *f_; }
  std::size_t rank() const { return d_; }
  std::size_t edge_count() const { return g_.size(); }
  const Mat& edge(std::size_t e) const { return g_[e]; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  bool is_trivial() const;

  /// Fiberwise tensor product, fiber index (i, k) -> i * o.rank() + k.
  FlatBundle tensor(const FlatBundle& o) const;

 private:
  const FieldSpec* f_ = nullptr;
  std::size_t d_ = 0;
  std::vector<Mat> g_;
  std::string name_;
};

struct Diagnostics {
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

/// Closure, cocycle and flatness checks. Each problem names the offending simplex.
Diagnostics validate(const SimplicialComplex& x, const IntegralCocycle& z, const std::vector<FlatBundle>& bundles);

/// Flatness only; the first violating 2-simplex, if any.
std::optional<Simplex> flatness_violation(const SimplicialComplex& x, const FlatBundle& b);

}  // namespace novcup
