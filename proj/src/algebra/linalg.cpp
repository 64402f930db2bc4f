#include "novcup/algebra/linalg.hpp"

#include <algorithm>

#include "novcup/algebra/kernels.hpp"

namespace novcup {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElem& x) { return x.is_zero(); });
}

void axpy(Vec& y, const FieldElem& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(const Vec& v, const FieldElem& a) {
  Vec r = v;
  for (auto& x : r) x *= a;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// ---------------------------------------------------------------------------

void SparseMatrix::add(std::size_t i, std::size_t j, const FieldElem& v) {
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

FieldElem SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = m_.row[i];
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) return it->second;
  return f_->zero();
}

Vec SparseMatrix::apply(const Vec& x) const {
  Vec y = zero_vec(*f_, m_.rows);
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (const auto& [j, v] : m_.row[i])
      if (!x[j].is_zero()) y[i] += v * x[j];
  return y;
}

Vec SparseMatrix::apply_left(const Vec& y) const {
  Vec x = zero_vec(*f_, m_.cols);
  for (std::size_t i = 0; i < m_.rows; ++i) {
    if (y[i].is_zero()) continue;
    for (const auto& [j, v] : m_.row[i]) x[j] += y[i] * v;
  }
  return x;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(*f_, m_.cols, m_.rows);
  for (std::size_t i = 0; i < m_.rows; ++i)
    for (const auto& [j, v] : m_.row[i]) t.m_.row[j].emplace_back(static_cast<std::uint32_t>(i), v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (m_.cols != o.m_.rows) throw AlgebraError("matrix dimension mismatch in product");
  SparseMatrix r(*f_, m_.rows, o.m_.cols);
  for (std::size_t i = 0; i < m_.rows; ++i) {
    Vec acc = zero_vec(*f_, o.m_.cols);
    bool any = false;
    for (const auto& [k, a] : m_.row[i])
      for (const auto& [j, b] : o.m_.row[k]) {
        acc[j] += a * b;
        any = true;
      }
    if (!any) continue;
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (!acc[j].is_zero()) r.m_.row[i].emplace_back(static_cast<std::uint32_t>(j), acc[j]);
  }
  return r;
}

bool SparseMatrix::is_zero() const { return m_.nnz() == 0; }

// ---------------------------------------------------------------------------
// Echelon backends

struct Echelon::Impl {
  virtual ~Impl() = default;
  virtual std::size_t rank() const = 0;
  virtual void reduce(Vec& v, Vec* tag) const = 0;
  virtual std::size_t insert(const Vec& v, const Vec& tag) = 0;
  virtual bool is_pivot(std::size_t c) const = 0;
};

namespace {

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

// Dense rows of 32-bit residues [v | tag], eliminated with the row kernels.
class PrimeEchelon final : public Echelon::Impl {
 public:
  PrimeEchelon(const FieldSpec& f, std::size_t n, std::size_t m)
      : f_(f), p_(static_cast<std::uint32_t>(f.characteristic())), n_(n), m_(m), pivot_row_(n, -1) {}

  std::size_t rank() const override { return rows_.size(); }
  bool is_pivot(std::size_t c) const override { return pivot_row_[c] >= 0; }

  void reduce(Vec& v, Vec* tag) const override {
    const std::size_t width = tag ? n_ + m_ : n_;
    std::vector<std::uint32_t> buf(width);
    for (std::size_t i = 0; i < n_; ++i) buf[i] = static_cast<std::uint32_t>(v[i].code());
    if (tag)
      for (std::size_t i = 0; i < m_; ++i) buf[n_ + i] = static_cast<std::uint32_t>((*tag)[i].code());
    for (std::size_t c = 0; c < n_; ++c) {
      if (buf[c] == 0 || pivot_row_[c] < 0) continue;
      const auto& row = rows_[static_cast<std::size_t>(pivot_row_[c])];
      kernels::row_axpy_mod(buf.data() + c, row.data() + c, p_ - buf[c], width - c, p_);
    }
    for (std::size_t i = 0; i < n_; ++i) v[i] = FieldElem(f_, std::uint64_t{buf[i]});
    if (tag)
      for (std::size_t i = 0; i < m_; ++i) (*tag)[i] = FieldElem(f_, std::uint64_t{buf[n_ + i]});
  }

  std::size_t insert(const Vec& v, const Vec& tag) override {
    const std::size_t piv = first_nonzero(v);
    std::vector<std::uint32_t> row(n_ + m_);
    for (std::size_t i = 0; i < n_; ++i) row[i] = static_cast<std::uint32_t>(v[i].code());
    for (std::size_t i = 0; i < m_ && i < tag.size(); ++i) row[n_ + i] = static_cast<std::uint32_t>(tag[i].code());
    const auto inv = static_cast<std::uint32_t>(f_.inv_code(row[piv]));
    kernels::row_scale_mod(row.data() + piv, inv, n_ + m_ - piv, p_);
    pivot_row_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return piv;
  }

 private:
  const FieldSpec& f_;
  std::uint32_t p_;
  std::size_t n_, m_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<int> pivot_row_;
};

// Sparse rows of field elements over the combined index space [v | tag].
class GenericEchelon final : public Echelon::Impl {
 public:
  GenericEchelon(const FieldSpec& f, std::size_t n, std::size_t m) : f_(f), n_(n), m_(m), pivot_row_(n, -1) {}

  std::size_t rank() const override { return rows_.size(); }
  bool is_pivot(std::size_t c) const override { return pivot_row_[c] >= 0; }

  void reduce(Vec& v, Vec* tag) const override {
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c].is_zero() || pivot_row_[c] < 0) continue;
      const FieldElem coef = v[c];
      for (const auto& [j, val] : rows_[static_cast<std::size_t>(pivot_row_[c])]) {
        if (j < n_) {
          v[j] -= coef * val;
        } else if (tag) {
          (*tag)[j - n_] -= coef * val;
        }
      }
    }
  }

  std::size_t insert(const Vec& v, const Vec& tag) override {
    const std::size_t piv = first_nonzero(v);
    const FieldElem inv = v[piv].inverse();
    std::vector<std::pair<std::uint32_t, FieldElem>> row;
    for (std::size_t i = piv; i < n_; ++i)
      if (!v[i].is_zero()) row.emplace_back(static_cast<std::uint32_t>(i), v[i] * inv);
    for (std::size_t i = 0; i < m_ && i < tag.size(); ++i)
      if (!tag[i].is_zero()) row.emplace_back(static_cast<std::uint32_t>(n_ + i), tag[i] * inv);
    pivot_row_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    return piv;
  }

 private:
  const FieldSpec& f_;
  std::size_t n_, m_;
  std::vector<std::vector<std::pair<std::uint32_t, FieldElem>>> rows_;
  std::vector<int> pivot_row_;
};

}  // namespace

Echelon::Echelon(const FieldSpec& f, std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (f.kind() == FieldKind::prime && f.characteristic() < (1ull << 31))
    impl_ = std::make_unique<PrimeEchelon>(f, n, m);
  else
    impl_ = std::make_unique<GenericEchelon>(f, n, m);
}

Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

std::size_t Echelon::rank() const { return impl_->rank(); }
void Echelon::reduce(Vec& v, Vec* tag) const { impl_->reduce(v, tag); }
bool Echelon::is_pivot(std::size_t col) const { return impl_->is_pivot(col); }

std::size_t Echelon::insert(Vec v, Vec tag) {
  if (is_zero_vec(v)) throw AlgebraError("cannot insert a zero vector into an echelon basis");
  return impl_->insert(v, tag);
}

bool Echelon::add(Vec v, Vec& tag) {
  impl_->reduce(v, &tag);
  if (is_zero_vec(v)) return false;
  impl_->insert(v, tag);
  return true;
}

// ---------------------------------------------------------------------------

std::size_t rank(const SparseMatrix& a) {
  Echelon e(a.field(), a.cols(), 0);
  Vec none;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vec v = zero_vec(a.field(), a.cols());
    for (const auto& [j, x] : a.row(i)) v[j] = x;
    e.add(std::move(v), none);
  }
  return e.rank();
}

std::vector<Vec> kernel_basis(const SparseMatrix& a) {
  const FieldSpec& f = a.field();
  const SparseMatrix t = a.transpose();
  Echelon e(f, a.rows(), a.cols());
  std::vector<Vec> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec v = zero_vec(f, a.rows());
    for (const auto& [i, x] : t.row(j)) v[i] = x;
    Vec tag = unit_vec(f, a.cols(), j);
    if (!e.add(std::move(v), tag)) out.push_back(std::move(tag));
  }
  return out;
}

std::optional<Vec> solve(const SparseMatrix& a, const Vec& b) {
  const FieldSpec& f = a.field();
  const SparseMatrix t = a.transpose();
  Echelon e(f, a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec v = zero_vec(f, a.rows());
    for (const auto& [i, x] : t.row(j)) v[i] = x;
    Vec tag = unit_vec(f, a.cols(), j);
    e.add(std::move(v), tag);
  }
  Vec r = b;
  Vec tag = zero_vec(f, a.cols());
  e.reduce(r, &tag);
  if (!is_zero_vec(r)) return std::nullopt;
  for (auto& x : tag) x = -x;
  return tag;
}

// ---------------------------------------------------------------------------

CohomologySpace::CohomologySpace(const SparseMatrix& d_prev, const SparseMatrix& d_next)
    : f_(&d_next.field()),
      n_(d_next.cols()),
      prev_dim_(d_prev.cols()),
      cocycles_(kernel_basis(d_next)),
      ech_(d_next.field(), d_next.cols(), d_prev.cols() + cocycles_.size()) {
  if (d_prev.rows() != n_) throw AlgebraError("cohomology: composable maps expected");
  const std::size_t m = prev_dim_ + cocycles_.size();
  const SparseMatrix t = d_prev.transpose();
  for (std::size_t j = 0; j < prev_dim_; ++j) {
    Vec v = zero_vec(*f_, n_);
    for (const auto& [i, x] : t.row(j)) v[i] = x;
    Vec tag = unit_vec(*f_, m, j);
    ech_.add(std::move(v), tag);
  }
  for (std::size_t k = 0; k < cocycles_.size(); ++k) {
    Vec tag = unit_vec(*f_, m, prev_dim_ + k);
    if (ech_.add(cocycles_[k], tag)) {
      gen_index_.push_back(k);
      reps_.push_back(cocycles_[k]);
    }
  }
}

std::pair<Vec, Vec> CohomologySpace::decompose(const Vec& y) const {
  if (y.size() != n_) throw AlgebraError("cohomology: cochain has the wrong length");
  Vec v = y;
  Vec tag = zero_vec(*f_, prev_dim_ + cocycles_.size());
  ech_.reduce(v, &tag);
  if (!is_zero_vec(v)) throw AlgebraError("cohomology: cochain is not a cocycle");
  Vec coords = zero_vec(*f_, reps_.size());
  for (std::size_t g = 0; g < reps_.size(); ++g) coords[g] = -tag[prev_dim_ + gen_index_[g]];
  Vec pre(tag.begin(), tag.begin() + static_cast<std::ptrdiff_t>(prev_dim_));
  for (auto& x : pre) x = -x;
  return {coords, pre};
}

Vec CohomologySpace::coords(const Vec& y) const { return decompose(y).first; }

Vec CohomologySpace::rep_of(const Vec& c) const {
  Vec r = zero_vec(*f_, n_);
  for (std::size_t g = 0; g < reps_.size(); ++g) axpy(r, c[g], reps_[g]);
  return r;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const FieldSpec& f, std::size_t n) : f_(&f), n_(n), ech_(f, n, n) {}

bool Subspace::add(const Vec& v) {
  if (basis_.size() >= n_) return false;
  Vec tag = unit_vec(*f_, n_, basis_.size());
  if (!ech_.add(v, tag)) return false;
  basis_.push_back(v);
  return true;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = v;
  ech_.reduce(r, nullptr);
  return is_zero_vec(r);
}

std::optional<Vec> Subspace::coefficients(const Vec& v) const {
  Vec r = v;
  Vec tag = zero_vec(*f_, n_);
  ech_.reduce(r, &tag);
  if (!is_zero_vec(r)) return std::nullopt;
  Vec out(tag.begin(), tag.begin() + static_cast<std::ptrdiff_t>(basis_.size()));
  for (auto& x : out) x = -x;
  return out;
}

}  // namespace novcup
