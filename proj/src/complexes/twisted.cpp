#include "novcup/complexes/twisted.hpp"

#include <algorithm>

namespace novcup {

TwistedComplex::TwistedComplex(const FieldSpec& f, std::vector<std::size_t> dims, std::vector<SparseMatrix> d)
    : f_(&f), dims_(std::move(dims)), d_(std::move(d)) {
  if (!dims_.empty() && d_.size() + 1 != dims_.size()) throw ComplexError("complex needs one map per adjacent pair");
  for (std::size_t q = 0; q < d_.size(); ++q)
    if (d_[q].rows() != dims_[q + 1] || d_[q].cols() != dims_[q]) throw ComplexError("coboundary shape mismatch");
  zero_.emplace_back(f, dims_.empty() ? 0 : dims_[0], 0);
  zero_.emplace_back(f, 0, dims_.empty() ? 0 : dims_.back());
}

std::size_t TwistedComplex::dim(int q) const {
  if (q < 0 || q > top()) return 0;
  return dims_[q];
}

const SparseMatrix& TwistedComplex::d(int q) const {
  if (q < 0) return zero_[0];
  if (q >= static_cast<int>(d_.size())) return zero_[1];
  return d_[q];
}

std::size_t TwistedComplex::betti(int q) const {
  if (q < 0 || q > top()) return 0;
  return dim(q) - rank(d(q)) - rank(d(q - 1));
}

bool TwistedComplex::d_squared_zero() const {
  for (std::size_t q = 0; q + 1 < d_.size(); ++q)
    if (!(d_[q + 1] * d_[q]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

void LaurentMatrix::add(std::size_t i, std::size_t j, const LaurentPoly& v) {
  if (v.is_zero()) return;
  auto& r = m_.row[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, {static_cast<std::uint32_t>(j), v});
  }
}

LaurentPoly LaurentMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = m_.row[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return LaurentPoly(*f_);
}

SparseMatrix LaurentMatrix::evaluate(const FieldElem& a) const {
  SparseMatrix out(*f_, m_.rows, m_.cols);
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (const auto& [j, v] : m_.row[i]) out.add(i, j, v.eval(a));
  return out;
}

std::vector<LaurentPoly> LaurentMatrix::apply(const std::vector<LaurentPoly>& x) const {
  std::vector<LaurentPoly> y(m_.rows, LaurentPoly(*f_));
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (const auto& [j, v] : m_.row[i])
      if (!x[j].is_zero()) y[i] += v * x[j];
  return y;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
  if (m_.cols != o.rows()) throw AlgebraError("matrix product shape mismatch");
  LaurentMatrix r(*f_, m_.rows, o.cols());
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (const auto& [k, a] : m_.row[i])
      for (const auto& [j, b] : o.row(k)) r.add(i, j, a * b);
  return r;
}

bool LaurentMatrix::is_zero() const { return m_.nnz() == 0; }

int LaurentMatrix::min_valuation() const {
  bool any = false;
  int v = 0;
  for (const auto& r : m_.row)
    for (const auto& [j, e] : r) {
      v = any ? std::min(v, e.valuation()) : e.valuation();
      any = true;
    }
  return v;
}

// ---------------------------------------------------------------------------

ParamComplex::ParamComplex(const FieldSpec& f, Ring ring, std::vector<std::size_t> dims, std::vector<LaurentMatrix> d)
    : f_(&f), ring_(ring), dims_(std::move(dims)), d_(std::move(d)) {
  if (!dims_.empty() && d_.size() + 1 != dims_.size()) throw ComplexError("complex needs one map per adjacent pair");
  for (std::size_t q = 0; q < d_.size(); ++q) {
    if (d_[q].rows() != dims_[q + 1] || d_[q].cols() != dims_[q]) throw ComplexError("coboundary shape mismatch");
    if (ring_ == Ring::polynomial && d_[q].min_valuation() < 0)
      throw ComplexError("negative exponent in a polynomial complex");
  }
  zero_.emplace_back(f, dims_.empty() ? 0 : dims_[0], 0);
  zero_.emplace_back(f, 0, dims_.empty() ? 0 : dims_.back());
}

std::size_t ParamComplex::dim(int q) const {
  if (q < 0 || q > top()) return 0;
  return dims_[q];
}

const LaurentMatrix& ParamComplex::d(int q) const {
  if (q < 0) return zero_[0];
  if (q >= static_cast<int>(d_.size())) return zero_[1];
  return d_[q];
}

TwistedComplex ParamComplex::evaluate(const FieldElem& a) const {
  if (ring_ == Ring::laurent && a.is_zero()) throw AlgebraError("cannot evaluate a Laurent complex at 0");
  std::vector<SparseMatrix> d;
  for (const auto& m : d_) d.push_back(m.evaluate(a));
  return TwistedComplex(*f_, dims_, std::move(d));
}

bool ParamComplex::d_squared_zero() const {
  for (std::size_t q = 0; q + 1 < d_.size(); ++q)
    if (!(d_[q + 1] * d_[q]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

void for_each_coboundary_entry(const SimplicialComplex& x, const IntegralCocycle* z, const FlatBundle& f, int q,
                               const std::function<void(std::size_t, std::size_t, const FieldElem&, long)>& fn) {
  const std::size_t d = f.rank();
  const FieldElem one = f.field().one(), mone = -one;
  Simplex face;
  for (std::size_t r = 0; r < x.count(q + 1); ++r) {
    const Simplex& s = x.simplex(q + 1, r);
    for (std::size_t i = 0; i < s.size(); ++i) {
      face.assign(s.begin(), s.end());
      face.erase(face.begin() + static_cast<long>(i));
      const std::size_t c = x.index_or_throw(face);
      if (i == 0) {
        const std::size_t e01 = x.index_or_throw({s[0], s[1]});
        const Mat& g = f.edge(e01);
        const long k = z ? z->at(e01) : 0;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            if (!g.at(a, b).is_zero()) fn(cochain_index(r, a, d), cochain_index(c, b, d), g.at(a, b), k);
      } else {
        const FieldElem& sign = (i % 2) ? mone : one;
        for (std::size_t a = 0; a < d; ++a) fn(cochain_index(r, a, d), cochain_index(c, a, d), sign, 0);
      }
    }
  }
}

TwistedComplex twisted_complex(const SimplicialComplex& x, const FlatBundle& f) {
  if (f.edge_count() != x.count(1)) throw ComplexError("bundle does not match the complex");
  if (auto t = flatness_violation(x, f)) throw ComplexError("bundle is not flat on " + simplex_str(*t));
  const int top = std::max(x.dim(), 0);
  std::vector<std::size_t> dims;
  for (int q = 0; q <= top; ++q) dims.push_back(x.count(q) * f.rank());
  std::vector<SparseMatrix> d;
  for (int q = 0; q < top; ++q) {
    SparseMatrix m(f.field(), dims[q + 1], dims[q]);
    for_each_coboundary_entry(x, nullptr, f, q,
                              [&](std::size_t i, std::size_t j, const FieldElem& c, long) { m.add(i, j, c); });
    d.push_back(std::move(m));
  }
  return TwistedComplex(f.field(), std::move(dims), std::move(d));
}

ParamComplex lambda_complex(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int s) {
  if (f.edge_count() != x.count(1) || z.size() != x.count(1)) throw ComplexError("bundle does not match the complex");
  if (auto t = flatness_violation(x, f)) throw ComplexError("bundle is not flat on " + simplex_str(*t));
  if (auto t = cocycle_violation(x, z)) throw ComplexError("cocycle condition fails on " + simplex_str(*t));
  const int top = std::max(x.dim(), 0);
  std::vector<std::size_t> dims;
  for (int q = 0; q <= top; ++q) dims.push_back(x.count(q) * f.rank());
  std::vector<LaurentMatrix> d;
  for (int q = 0; q < top; ++q) {
    LaurentMatrix m(f.field(), dims[q + 1], dims[q]);
    for_each_coboundary_entry(x, &z, f, q, [&](std::size_t i, std::size_t j, const FieldElem& c, long k) {
      m.add(i, j, LaurentPoly::monomial(c, static_cast<int>(s * k)));
    });
    d.push_back(std::move(m));
  }
  return ParamComplex(f.field(), Ring::laurent, std::move(dims), std::move(d));
}

}  // namespace novcup
