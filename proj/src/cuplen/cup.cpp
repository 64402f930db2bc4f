#include "novcup/cuplen/cuplen.hpp"

namespace novcup {

namespace {

Vec restrict_along(const CutPresentation& cut, const std::vector<std::uint32_t>& map, int q, const Vec& alpha) {
  const std::size_t d = cut.rank();
  Vec out = zero_vec(cut.field(), cut.v.count(q) * d);
  for (std::size_t s = 0; s < cut.v.count(q); ++s) {
    const std::size_t j = cut.n.index_or_throw(map_simplex(map, cut.v.simplex(q, s)));
    for (std::size_t e = 0; e < d; ++e) out[cochain_index(s, e, d)] = alpha[cochain_index(j, e, d)];
  }
  return out;
}

}  // namespace

Vec cup(const SimplicialComplex& x, const FlatBundle& e, int p, const Vec& u, const FlatBundle& f, int q, const Vec& v) {
  if (&e.field() != &f.field()) throw ComplexError("cup: mismatched base fields");
  const FieldSpec& k = e.field();
  const std::size_t de = e.rank(), df = f.rank(), d = de * df;
  if (p < 0 || q < 0 || u.size() != x.count(p) * de || v.size() != x.count(q) * df)
    throw ComplexError("cup: cochain does not match the complex");
  Vec out = zero_vec(k, x.count(p + q) * d);
  Simplex front, back;
  for (std::size_t s = 0; s < x.count(p + q); ++s) {
    const Simplex& sv = x.simplex(p + q, s);
    front.assign(sv.begin(), sv.begin() + p + 1);
    back.assign(sv.begin() + p, sv.end());
    const std::size_t iu = x.index_or_throw(front), iv = x.index_or_throw(back);
    const Mat* g = p == 0 ? nullptr : &f.edge(x.index_or_throw({sv[0], sv[p]}));
    for (std::size_t a = 0; a < de; ++a) {
      const FieldElem& ua = u[cochain_index(iu, a, de)];
      if (ua.is_zero()) continue;
      for (std::size_t b = 0; b < df; ++b) {
        FieldElem w = k.zero();
        if (g) {
          for (std::size_t c = 0; c < df; ++c) w += g->at(b, c) * v[cochain_index(iv, c, df)];
        } else {
          w = v[cochain_index(iv, b, df)];
        }
        if (!w.is_zero()) out[cochain_index(s, a * df + b, d)] += ua * w;
      }
    }
  }
  return out;
}

std::vector<LaurentPoly> cup(const SimplicialComplex& x, std::size_t rank_e, int p, const std::vector<LaurentPoly>& u,
                             const FlatBundle& f, const IntegralCocycle& z, int s, int q,
                             const std::vector<LaurentPoly>& v) {
  const FieldSpec& k = f.field();
  const std::size_t de = rank_e, df = f.rank(), d = de * df;
  if (u.size() != x.count(p) * de || v.size() != x.count(q) * df)
    throw ComplexError("cup: cochain does not match the complex");
  std::vector<LaurentPoly> out(x.count(p + q) * d, LaurentPoly(k));
  Simplex front, back;
  for (std::size_t i = 0; i < x.count(p + q); ++i) {
    const Simplex& sv = x.simplex(p + q, i);
    front.assign(sv.begin(), sv.begin() + p + 1);
    back.assign(sv.begin() + p, sv.end());
    const std::size_t iu = x.index_or_throw(front), iv = x.index_or_throw(back);
    std::optional<std::size_t> edge;
    if (p > 0) edge = x.index_or_throw({sv[0], sv[p]});
    const LaurentPoly shift = LaurentPoly::monomial(k.one(), edge ? static_cast<int>(s * z.at(*edge)) : 0);
    for (std::size_t a = 0; a < de; ++a) {
      const LaurentPoly& ua = u[cochain_index(iu, a, de)];
      if (ua.is_zero()) continue;
      for (std::size_t b = 0; b < df; ++b) {
        LaurentPoly w(k);
        if (edge) {
          const Mat& g = f.edge(*edge);
          for (std::size_t c = 0; c < df; ++c)
            if (!g.at(b, c).is_zero()) w += v[cochain_index(iv, c, df)].scaled(g.at(b, c));
          w = w * shift;
        } else {
          w = v[cochain_index(iv, b, df)];
        }
        if (!w.is_zero()) out[cochain_index(i, a * df + b, d)] += ua * w;
      }
    }
  }
  return out;
}

Vec flatten(const CutCochain& c) {
  Vec out = c.alpha;
  out.insert(out.end(), c.beta.begin(), c.beta.end());
  return out;
}

CutCochain unflatten(const DeformationComplex& dc, int q, const Vec& v) {
  CutCochain c;
  c.degree = q;
  const std::size_t n = dc.v_offset(q);
  c.alpha.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  c.beta.assign(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
  return c;
}

CutPresentation tensor_cut(const CutPresentation& a, const CutPresentation& b) {
  CutPresentation out = a;
  out.f0 = a.f0.tensor(b.f0);
  for (std::size_t i = 0; i < out.sigma.size(); ++i) out.sigma[i] = a.sigma[i].kron(b.sigma[i]);
  return out;
}

CutCochain psi_product(const CutPresentation& a, const CutPresentation& b, const CutCochain& c, const CutCochain& c2,
                       const FieldElem& t) {
  const FieldSpec& f = a.field();
  const FieldElem tau = f.one() + t;
  if (tau.is_zero()) throw ComplexError("psi_t is undefined at t = -1");
  const int q = c.degree, q2 = c2.degree;
  const std::size_t d = a.rank() * b.rank();
  CutCochain out;
  out.degree = q + q2;
  out.alpha = cup(a.n, a.f0, q, c.alpha, b.f0, q2, c2.alpha);
  out.beta = zero_vec(f, q + q2 >= 1 ? a.v.count(q + q2 - 1) * d : 0);
  if (q + q2 == 0) return out;
  const FlatBundle ma = restrict_minus(a), mb = restrict_minus(b);
  if (q2 >= 1) {
    const Vec im = restrict_along(a, a.i_minus, q, c.alpha);
    const FieldElem sign = (q % 2) ? -tau : tau;
    axpy(out.beta, sign, cup(a.v, ma, q, im, mb, q2 - 1, c2.beta));
  }
  if (q >= 1) {
    // sigma' i_+^* alpha', sigma taken at the leading vertex.
    Vec ip = restrict_along(b, b.i_plus, q2, c2.alpha);
    const std::size_t db = b.rank();
    Vec sp = zero_vec(f, ip.size());
    for (std::size_t s = 0; s < b.v.count(q2); ++s) {
      const Mat& sg = b.sigma[b.v.simplex(q2, s)[0]];
      for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) sp[cochain_index(s, i, db)] += sg.at(i, j) * ip[cochain_index(s, j, db)];
    }
    out.beta = out.beta + cup(a.v, ma, q - 1, c.beta, mb, q2, sp);
  }
  return out;
}

}  // namespace novcup
