#include "novcup/complexes/bundle.hpp"

#include <algorithm>
#include <set>

namespace novcup {

Mat Mat::identity(const FieldSpec& f, std::size_t n) { return scalar(f.one(), n); }

Mat Mat::scalar(const FieldElem& c, std::size_t n) {
  Mat m(c.field(), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (n_ != o.n_) throw AlgebraError("matrix size mismatch");
  Mat r(*f_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const FieldElem& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

bool Mat::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
  return true;
}

Mat Mat::inverse() const {
  Mat a = *this, inv = identity(*f_, n_);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && a.at(p, c).is_zero()) ++p;
    if (p == n_) throw AlgebraError("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(a.at(p, j), a.at(c, j));
        std::swap(inv.at(p, j), inv.at(c, j));
      }
    const FieldElem s = a.at(c, c).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      a.at(c, j) *= s;
      inv.at(c, j) *= s;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == c || a.at(i, c).is_zero()) continue;
      const FieldElem m = a.at(i, c);
      for (std::size_t j = 0; j < n_; ++j) {
        a.at(i, j) -= m * a.at(c, j);
        inv.at(i, j) -= m * inv.at(c, j);
      }
    }
  }
  return inv;
}

FieldElem Mat::det() const {
  Mat a = *this;
  FieldElem d = f_->one();
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && a.at(p, c).is_zero()) ++p;
    if (p == n_) return f_->zero();
    if (p != c) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    const FieldElem s = a.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n_; ++i) {
      if (a.at(i, c).is_zero()) continue;
      const FieldElem m = a.at(i, c) * s;
      for (std::size_t j = c; j < n_; ++j) a.at(i, j) -= m * a.at(c, j);
    }
  }
  return d;
}

Mat Mat::kron(const Mat& o) const {
  Mat r(*f_, n_ * o.n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < o.n_; ++k)
        for (std::size_t l = 0; l < o.n_; ++l) r.at(i * o.n_ + k, j * o.n_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

std::string Mat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += " ";
      s += at(i, j).str();
    }
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

FlatBundle::FlatBundle(const FieldSpec& f, std::size_t rank, std::vector<Mat> edge_mats, std::string name)
    : f_(&f), d_(rank), g_(std::move(edge_mats)), name_(std::move(name)) {
  for (const auto& m : g_)
    if (m.size() != d_ || &m.field() != f_) throw ComplexError("bundle matrix has wrong size or field");
}

FlatBundle FlatBundle::trivial(const SimplicialComplex& x, const FieldSpec& f, std::size_t rank) {
  return FlatBundle(f, rank, std::vector<Mat>(x.count(1), Mat::identity(f, rank)), "trivial");
}

FlatBundle FlatBundle::power(const SimplicialComplex& x, const FieldElem& a, const IntegralCocycle& z) {
  if (a.is_zero()) throw ComplexError("monodromy parameter must be nonzero");
  std::vector<Mat> g;
  g.reserve(x.count(1));
  for (std::size_t e = 0; e < x.count(1); ++e) g.push_back(Mat::scalar(a.pow(z.at(e)), 1));
  return FlatBundle(a.field(), 1, std::move(g), a.str() + "^xi");
}

bool FlatBundle::is_trivial() const {
  return std::all_of(g_.begin(), g_.end(), [](const Mat& m) { return m.is_identity(); });
}

FlatBundle FlatBundle::tensor(const FlatBundle& o) const {
  if (f_ != o.f_ || g_.size() != o.g_.size()) throw ComplexError("tensor of bundles over different data");
  std::vector<Mat> g;
  g.reserve(g_.size());
  for (std::size_t e = 0; e < g_.size(); ++e) g.push_back(g_[e].kron(o.g_[e]));
  return FlatBundle(*f_, d_ * o.d_, std::move(g), name_ + "*" + o.name_);
}

std::optional<Simplex> flatness_violation(const SimplicialComplex& x, const FlatBundle& b) {
  for (const auto& t : x.simplices(2)) {
    const auto uv = x.index({t[0], t[1]}), uw = x.index({t[0], t[2]}), vw = x.index({t[1], t[2]});
    if (!uv || !uw || !vw) return t;
    if (!(b.edge(*uw) == b.edge(*uv) * b.edge(*vw))) return t;
  }
  return std::nullopt;
}

Diagnostics validate(const SimplicialComplex& x, const IntegralCocycle& z, const std::vector<FlatBundle>& bundles) {
  Diagnostics d;
  for (const auto& s : x.construction_defects()) d.errors.push_back("complex: " + s);
  for (int q = 1; q <= x.dim(); ++q)
    for (const auto& s : x.simplices(q)) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(i));
        if (!x.contains(face)) d.errors.push_back("closure: face " + simplex_str(face) + " of " + simplex_str(s) + " missing");
      }
    }
  if (z.size() != x.count(1)) {
    d.errors.push_back("cocycle: size does not match the edge count");
  } else if (auto t = cocycle_violation(x, z)) {
    d.errors.push_back("cocycle: condition fails on " + simplex_str(*t));
  }
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    const auto& b = bundles[i];
    const std::string label = "bundle " + (b.name().empty() ? std::to_string(i) : b.name());
    if (b.edge_count() != x.count(1)) {
      d.errors.push_back(label + ": edge count mismatch");
      continue;
    }
    bool invertible = true;
    for (std::size_t e = 0; e < b.edge_count(); ++e)
      if (b.edge(e).det().is_zero()) {
        d.errors.push_back(label + ": singular matrix on edge " + simplex_str(x.simplex(1, e)));
        invertible = false;
        break;
      }
    if (!invertible) continue;
    if (auto t = flatness_violation(x, b)) d.errors.push_back(label + ": flatness fails on " + simplex_str(*t));
  }
  return d;
}

}  // namespace novcup
