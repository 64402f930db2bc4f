#include "novcup/massey/massey.hpp"

#include <algorithm>
#include <set>

namespace novcup {

namespace {

FieldElem integer_in(const FieldSpec& f, const mpz_class& n) {
  if (!f.is_finite()) return f.from_rational(mpq_class(n));
  const unsigned long p = static_cast<unsigned long>(f.characteristic());
  return f.from_int(static_cast<std::int64_t>(mpz_fdiv_ui(n.get_mpz_t(), p)));
}

// Coefficient of t^a in T^k at T = 1 + t, valid for negative k.
mpz_class binom(long k, unsigned long a) {
  mpz_class n(k), out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), a);
  return out;
}

}  // namespace

SeriesComplex::SeriesComplex(const FieldSpec& f, std::vector<std::size_t> dims,
                             std::vector<std::vector<SparseMatrix>> terms)
    : f_(&f), dims_(std::move(dims)), terms_(std::move(terms)) {
  order_ = terms_.empty() ? 0 : static_cast<int>(terms_[0].size());
}

Vec SeriesComplex::apply(int q, int a, const Vec& x) const {
  if (q + 1 > top() || q < 0) return zero_vec(*f_, dim(q + 1));
  if (a >= order_) return zero_vec(*f_, dims_[q + 1]);
  return terms_[q][a].apply(x);
}

TwistedComplex SeriesComplex::center() const {
  std::vector<SparseMatrix> d;
  for (const auto& t : terms_) d.push_back(t.at(0));
  return TwistedComplex(*f_, dims_, std::move(d));
}

SeriesComplex taylor_at_one(const ParamComplex& c, int order) {
  const FieldSpec& f = c.field();
  std::vector<std::size_t> dims;
  for (int q = 0; q <= c.top(); ++q) dims.push_back(c.dim(q));
  std::vector<std::vector<SparseMatrix>> terms;
  for (int q = 0; q < c.top(); ++q) {
    const LaurentMatrix& m = c.d(q);
    std::vector<SparseMatrix> t(order, SparseMatrix(f, m.rows(), m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (const auto& [j, p] : m.row(i))
        for (int k = p.valuation(); k <= p.top(); ++k) {
          const FieldElem ck = p.coeff(k);
          if (ck.is_zero()) continue;
          for (int a = 0; a < order; ++a) {
            const FieldElem b = integer_in(f, binom(k, static_cast<unsigned long>(a)));
            if (!b.is_zero()) t[a].add(i, j, ck * b);
          }
        }
    terms.push_back(std::move(t));
  }
  return SeriesComplex(f, std::move(dims), std::move(terms));
}

ParamComplex massey_complex(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f) {
  return lambda_complex(x, z, f, -1);
}

std::vector<int> multiplicities_at_one(const ModuleDecomposition& m) {
  std::vector<int> out;
  if (m.invariant_factors.empty()) return out;
  const FieldElem one = m.invariant_factors.front().field().one();
  for (const auto& p : m.invariant_factors) {
    const int k = root_multiplicity(p, one);
    if (k > 0) out.push_back(k);
  }
  return out;
}

int stabilization_page(const std::vector<ModuleDecomposition>& mods) {
  int mx = 0;
  for (const auto& m : mods)
    for (int k : multiplicities_at_one(m)) mx = std::max(mx, k);
  return mx + 1;
}

std::vector<SpectralPage> pages_from_modules(const std::vector<ModuleDecomposition>& mods, int pages) {
  const int stable = stabilization_page(mods);
  const int n = pages > 0 ? pages : stable;
  std::vector<std::vector<int>> m;
  for (const auto& d : mods) m.push_back(multiplicities_at_one(d));
  m.emplace_back();
  auto count = [](const std::vector<int>& v, auto pred) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), pred));
  };
  std::vector<SpectralPage> out;
  for (int r = 1; r <= n; ++r) {
    SpectralPage p;
    p.r = r;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      p.dims.push_back(mods[i].free_rank + count(m[i], [r](int k) { return k >= r; }) +
                       count(m[i + 1], [r](int k) { return k >= r; }));
      p.ranks.push_back(count(m[i + 1], [r](int k) { return k == r; }));
    }
    p.stable = r >= stable;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<SpectralPage> spectral_pages(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f,
                                         int max_page) {
  auto pages = pages_from_modules(cohomology_modules(massey_complex(x, z, f)));
  if (max_page > 0 && static_cast<int>(pages.size()) > max_page) pages.resize(max_page);
  return pages;
}

std::vector<SpectralPage> spectral_pages(const DeformationComplex& dc, int max_page) {
  auto pages = pages_from_modules(cohomology_modules(dc.complex));
  if (max_page > 0 && static_cast<int>(pages.size()) > max_page) pages.resize(max_page);
  return pages;
}

ChainLevelSS::ChainLevelSS(SeriesComplex s, int pages) : s_(std::move(s)) {
  const FieldSpec& f = s_.field();
  const int top = s_.top();
  const TwistedComplex c0 = s_.center();
  for (int q = 0; q <= top; ++q) h_.push_back(c0.cohomology(q));
  auto hdim = [&](int q) -> std::size_t { return q >= 0 && q <= top ? h_[q].dim() : 0; };

  std::vector<std::vector<Lift>> z1(top + 1);
  for (int q = 0; q <= top; ++q)
    for (std::size_t k = 0; k < h_[q].dim(); ++k) z1[q].push_back({unit_vec(f, h_[q].dim(), k), {h_[q].reps()[k]}});
  z_.push_back(std::move(z1));
  b_.emplace_back(top + 1);

  for (int r = 1; r <= pages; ++r) {
    const auto& zr = z_.back();
    const auto& br = b_.back();
    std::vector<std::vector<Lift>> zn(top + 1);
    std::vector<std::vector<Boundary>> bn(top + 1);
    for (int q = 0; q <= top; ++q)
      if (q >= 1)
        for (const auto& e : br[q]) {
          Boundary moved = e;
          moved.chain.insert(moved.chain.begin(), zero_vec(f, s_.dim(q - 1)));
          bn[q].push_back(std::move(moved));
        }
    SpectralPage page;
    page.r = r;
    for (int q = 0; q <= top; ++q) {
      page.dims.push_back(zr[q].size() - br[q].size());
      const std::vector<Boundary> empty;
      const auto& bq1 = q + 1 <= top ? br[q + 1] : empty;
      const std::size_t nb = bq1.size(), nz = zr[q].size();
      Echelon ech(f, hdim(q + 1), nb + nz);
      for (std::size_t j = 0; j < nb; ++j) {
        Vec tag = unit_vec(f, nb + nz, j);
        if (!ech.add(bq1[j].cls, tag)) throw ModuleError("dependent boundary classes");
      }
      std::size_t rank = 0;
      for (std::size_t k = 0; k < nz; ++k) {
        const auto& chain = zr[q][k].chain;
        Vec o = zero_vec(f, s_.dim(q + 1));
        for (int a = 1; a <= r; ++a) o = o + s_.apply(q, a, chain[r - a]);
        Vec cls = q + 1 <= top ? h_[q + 1].coords(o) : Vec{};
        Vec tag = unit_vec(f, nb + nz, nb + k);
        if (ech.add(cls, tag)) {
          ++rank;
          bn[q + 1].push_back({cls, o, chain});
          bn[q + 1].back().chain.push_back(zero_vec(f, s_.dim(q)));
          continue;
        }
        // sum_l tag_l o_l + sum_j tag_j x_j is a coboundary.
        std::vector<Vec> chain2(r + 1, zero_vec(f, s_.dim(q)));
        Vec cls2 = zero_vec(f, h_[q].dim());
        for (std::size_t l = 0; l < nz; ++l) {
          const FieldElem& c = tag[nb + l];
          if (c.is_zero()) continue;
          axpy(cls2, c, zr[q][l].cls);
          for (int a = 0; a < r; ++a) axpy(chain2[a], c, zr[q][l].chain[a]);
        }
        for (std::size_t j = 0; j < nb; ++j) {
          const FieldElem& c = tag[j];
          if (c.is_zero()) continue;
          for (int a = 0; a < r; ++a) axpy(chain2[a + 1], c, bq1[j].chain[a]);
        }
        Vec u = zero_vec(f, s_.dim(q + 1));
        for (int a = 0; a <= r; ++a) u = u + s_.apply(q, a, chain2[r - a]);
        if (q + 1 <= top) {
          auto [coords, w] = h_[q + 1].decompose(u);
          if (!is_zero_vec(coords)) throw ModuleError("chain-level relation is not exact");
          chain2[r] = chain2[r] - w;
        }
        zn[q].push_back({cls2, chain2});
      }
      page.ranks.push_back(rank);
    }
    page.stable = std::all_of(page.ranks.begin(), page.ranks.end(), [](std::size_t k) { return k == 0; });
    pages_.push_back(std::move(page));
    z_.push_back(std::move(zn));
    b_.push_back(std::move(bn));
  }
}

bool lift_satisfies(const SeriesComplex& s, int q, const std::vector<Vec>& chain, int order) {
  for (int l = 0; l < order; ++l) {
    Vec sum = zero_vec(s.field(), s.dim(q + 1));
    for (int a = 0; a <= l; ++a)
      if (l - a < static_cast<int>(chain.size())) sum = sum + s.apply(q, a, chain[l - a]);
    if (!is_zero_vec(sum)) return false;
  }
  return true;
}

DrResult chain_level_dr(const ChainLevelSS& ss, int degree, const Vec& v, int r) {
  if (r < 1 || r > ss.computed()) throw ModuleError("page out of range");
  const SeriesComplex& s = ss.series();
  const FieldSpec& f = s.field();
  const int top = s.top();
  if (degree < 0 || degree > top) throw ModuleError("degree out of range");
  const CohomologySpace& h = ss.cohomology(degree);
  if (!is_zero_vec(s.apply(degree, 0, v))) throw ModuleError("v is not a cocycle");
  const Vec cls = h.coords(v);
  DrResult res;
  for (int l = 1; l < r; ++l) {
    Subspace zs(f, h.dim());
    for (const auto& e : ss.z(l + 1, degree)) zs.add(e.cls);
    if (!zs.contains(cls)) {
      res.obstructed = true;
      res.step = l;
      return res;
    }
  }
  const auto& zr = ss.z(r, degree);
  Subspace zs(f, h.dim());
  for (const auto& e : zr) zs.add(e.cls);
  const Vec mu = *zs.coefficients(cls);
  // Subspace basis is the inserted order of zr, since the Z classes are independent.
  std::vector<Vec> chain(r, zero_vec(f, s.dim(degree)));
  for (std::size_t k = 0; k < zr.size(); ++k)
    for (int a = 0; a < r; ++a) axpy(chain[a], mu[k], zr[k].chain[a]);
  if (degree > 0) {
    auto [coords, b] = h.decompose(v - chain[0]);
    for (int a = 0; a < r; ++a) chain[a] = chain[a] + s.apply(degree - 1, a, b);
  } else {
    chain[0] = v;
  }
  Vec o = zero_vec(f, s.dim(degree + 1));
  for (int a = 1; a <= r; ++a) o = o + s.apply(degree, a, chain[r - a]);
  if (degree + 1 > top) {
    res.zero = true;
    return res;
  }
  Vec oc = ss.cohomology(degree + 1).coords(o);
  const auto& br = ss.b(r, degree + 1);
  Echelon ech(f, oc.size(), 0);
  for (const auto& e : br) {
    Vec none;
    ech.add(e.cls, none);
  }
  ech.reduce(oc, nullptr);
  res.value = oc;
  res.zero = is_zero_vec(oc);
  return res;
}

DrResult chain_level_dr(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int degree,
                        const Vec& v, int r) {
  const ParamComplex mc = massey_complex(x, z, f);
  ChainLevelSS ss(taylor_at_one(mc, r + 1), r);
  return chain_level_dr(ss, degree, v, r);
}

SurvivorBasis survivors(const ChainLevelSS& ss, int degree) {
  SurvivorBasis out;
  out.degree = degree;
  const int last = ss.computed() + 1;
  out.order = last;
  for (const auto& e : ss.z(last, degree)) {
    out.classes.push_back(e.cls);
    out.reps.push_back(e.chain[0]);
    out.certificates.push_back(e.chain);
  }
  return out;
}

std::vector<SurvivorBasis> all_survivors(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f) {
  const ParamComplex mc = massey_complex(x, z, f);
  const int pages = stabilization_page(cohomology_modules(mc));
  ChainLevelSS ss(taylor_at_one(mc, pages + 1), pages);
  std::vector<SurvivorBasis> out;
  for (int q = 0; q <= ss.series().top(); ++q) out.push_back(survivors(ss, q));
  return out;
}

SurvivorBasis survivors(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int degree) {
  auto all = all_survivors(x, z, f);
  if (degree < 0 || degree >= static_cast<int>(all.size())) {
    SurvivorBasis empty;
    empty.degree = degree;
    return empty;
  }
  return all[degree];
}

std::optional<SupportCertificate> support_criterion(const CutPresentation& cut, const SimplicialComplex& x, int degree,
                                                    const Vec& c) {
  if (!validate_cut(cut).ok()) throw ComplexError("cut presentation is invalid");
  if (cut.projection.size() != cut.n.vertex_count()) throw ComplexError("cut presentation has no projection");
  const SimplicialComplex glued = glue(cut, x.vertex_count());
  for (int q = 0; q <= std::max(x.dim(), glued.dim()); ++q)
    if (glued.count(q) != x.count(q)) throw ComplexError("cut presentation does not glue to X");
  const std::size_t d = cut.rank();
  if (c.size() != x.count(degree) * d) throw ComplexError("cochain does not match the complex");
  std::set<std::uint32_t> v_in_x;
  for (std::uint32_t v = 0; v < cut.v.vertex_count(); ++v) {
    v_in_x.insert(cut.projection[cut.i_plus[v]]);
    v_in_x.insert(cut.projection[cut.i_minus[v]]);
  }
  for (std::size_t s = 0; s < x.count(degree); ++s) {
    bool nonzero = false;
    for (std::size_t e = 0; e < d; ++e)
      if (!c[cochain_index(s, e, d)].is_zero()) nonzero = true;
    if (!nonzero) continue;
    for (auto v : x.simplex(degree, s))
      if (v_in_x.count(v)) return std::nullopt;
  }
  const DeformationComplex dc = deformation_complex(cut);
  const FieldSpec& f = cut.field();
  SupportCertificate cert;
  cert.degree = degree;
  cert.lift.assign(dc.complex.dim(degree), LaurentPoly(f));
  for (std::size_t s = 0; s < cut.n.count(degree); ++s) {
    const Simplex down = map_simplex(cut.projection, cut.n.simplex(degree, s));
    if (!std::is_sorted(down.begin(), down.end())) throw ComplexError("projection does not preserve vertex order");
    const std::size_t sx = x.index_or_throw(down);
    for (std::size_t e = 0; e < d; ++e) cert.lift[cochain_index(s, e, d)] = LaurentPoly::constant(c[cochain_index(sx, e, d)]);
  }
  if (degree < dc.complex.top())
    for (const auto& p : dc.complex.d(degree).apply(cert.lift))
      if (!p.is_zero()) throw ComplexError("cochain is not a cocycle");
  return cert;
}

}  // namespace novcup
