#include "novcup/complexes/cut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace novcup {

Simplex map_simplex(const std::vector<std::uint32_t>& vmap, const Simplex& s) {
  Simplex r;
  r.reserve(s.size());
  for (auto v : s) r.push_back(vmap.at(v));
  return r;
}

Diagnostics validate_cut(const CutPresentation& cut) {
  Diagnostics d;
  const auto nv = cut.v.vertex_count();
  if (cut.i_plus.size() != nv || cut.i_minus.size() != nv) {
    d.errors.push_back("cut: vertex maps must be defined on every vertex of V");
    return d;
  }
  if (cut.sigma.size() != nv) d.errors.push_back("cut: sigma must be given on every vertex of V");
  if (cut.f0.edge_count() != cut.n.count(1)) {
    d.errors.push_back("cut: F0 does not match N");
    return d;
  }
  std::set<std::uint32_t> plus(cut.i_plus.begin(), cut.i_plus.end()), minus(cut.i_minus.begin(), cut.i_minus.end());
  if (plus.size() != nv || minus.size() != nv) d.errors.push_back("cut: vertex maps are not injective");
  for (auto v : plus)
    if (minus.count(v)) d.errors.push_back("cut: images of i_+ and i_- meet at vertex " + std::to_string(v));
  for (std::uint32_t a = 0; a + 1 < nv; ++a)
    if (cut.i_plus[a] >= cut.i_plus[a + 1] || cut.i_minus[a] >= cut.i_minus[a + 1])
      d.errors.push_back("cut: vertex maps must preserve vertex order");
  for (auto v : cut.i_plus)
    if (v >= cut.n.vertex_count()) d.errors.push_back("cut: i_+ vertex out of range");
  for (auto v : cut.i_minus)
    if (v >= cut.n.vertex_count()) d.errors.push_back("cut: i_- vertex out of range");
  if (!d.ok()) return d;
  for (int q = 0; q <= cut.v.dim(); ++q)
    for (const auto& s : cut.v.simplices(q)) {
      if (!cut.n.contains(map_simplex(cut.i_plus, s)) || !cut.n.contains(map_simplex(cut.i_minus, s)))
        d.errors.push_back("cut: image of " + simplex_str(s) + " is not a simplex of N");
    }
  // Full images: a simplex of N spanned by image vertices comes from V.
  for (const auto* im : {&cut.i_plus, &cut.i_minus}) {
    std::map<std::uint32_t, std::uint32_t> inv;
    for (std::uint32_t a = 0; a < nv; ++a) inv[(*im)[a]] = a;
    std::vector<std::uint32_t> verts(im->begin(), im->end());
    for (const auto& s : cut.n.induced(verts)) {
      Simplex pre;
      for (auto v : s) pre.push_back(inv[v]);
      if (!cut.v.contains(pre)) d.errors.push_back("cut: image is not a full subcomplex at " + simplex_str(s));
    }
  }
  if (!d.ok()) return d;
  const FlatBundle gm = restrict_minus(cut);
  for (std::uint32_t a = 0; a < nv; ++a)
    if (cut.sigma[a].size() != cut.rank() || cut.sigma[a].det().is_zero())
      d.errors.push_back("cut: sigma is not invertible at vertex " + std::to_string(a));
  if (!d.ok()) return d;
  for (std::size_t e = 0; e < cut.v.count(1); ++e) {
    const auto& s = cut.v.simplex(1, e);
    const Mat& gp = cut.f0.edge(cut.n.index_or_throw(map_simplex(cut.i_plus, s)));
    if (!(cut.sigma[s[0]] * gp == gm.edge(e) * cut.sigma[s[1]]))
      d.errors.push_back("cut: sigma does not intertwine the bundles on " + simplex_str(s));
  }
  if (auto t = flatness_violation(cut.n, cut.f0)) d.errors.push_back("cut: F0 is not flat on " + simplex_str(*t));
  return d;
}

FlatBundle restrict_minus(const CutPresentation& cut) {
  std::vector<Mat> g;
  for (std::size_t e = 0; e < cut.v.count(1); ++e)
    g.push_back(cut.f0.edge(cut.n.index_or_throw(map_simplex(cut.i_minus, cut.v.simplex(1, e)))));
  return FlatBundle(cut.field(), cut.rank(), std::move(g), "F0|V");
}

DeformationComplex deformation_complex(const CutPresentation& cut) {
  if (auto diag = validate_cut(cut); !diag.ok()) throw ComplexError(diag.errors.front());
  const FieldSpec& f = cut.field();
  const std::size_t d = cut.rank();
  const FlatBundle gm = restrict_minus(cut);
  const int top = std::max(cut.n.dim(), cut.v.dim() + 1);
  DeformationComplex out;
  std::vector<std::size_t> dims;
  for (int q = 0; q <= top; ++q) {
    out.n_dims.push_back(cut.n.count(q) * d);
    out.v_dims.push_back(cut.v.count(q) * d);
  }
  for (int q = 0; q <= top; ++q) dims.push_back(out.n_dims[q] + (q >= 1 ? out.v_dims[q - 1] : 0));
  const LaurentPoly mtau = LaurentPoly::monomial(-f.one(), 1);
  std::vector<LaurentMatrix> mats;
  for (int q = 0; q < top; ++q) {
    LaurentMatrix m(f, dims[q + 1], dims[q]);
    const std::size_t row_v = out.n_dims[q + 1], col_v = out.n_dims[q];
    for_each_coboundary_entry(cut.n, nullptr, cut.f0, q, [&](std::size_t i, std::size_t j, const FieldElem& c, long) {
      m.add(i, j, LaurentPoly::constant(c));
    });
    for (std::size_t s = 0; s < cut.v.count(q); ++s) {
      const Simplex& sv = cut.v.simplex(q, s);
      const std::size_t jp = cut.n.index_or_throw(map_simplex(cut.i_plus, sv));
      const std::size_t jm = cut.n.index_or_throw(map_simplex(cut.i_minus, sv));
      const Mat& sg = cut.sigma[sv[0]];
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b)
          if (!sg.at(a, b).is_zero()) m.add(row_v + cochain_index(s, a, d), cochain_index(jp, b, d), LaurentPoly::constant(sg.at(a, b)));
        m.add(row_v + cochain_index(s, a, d), cochain_index(jm, a, d), mtau);
      }
    }
    if (q >= 1)
      for_each_coboundary_entry(cut.v, nullptr, gm, q - 1, [&](std::size_t i, std::size_t j, const FieldElem& c, long) {
        m.add(row_v + i, col_v + j, LaurentPoly::constant(-c));
      });
    mats.push_back(std::move(m));
  }
  out.complex = ParamComplex(f, Ring::polynomial, std::move(dims), std::move(mats));
  return out;
}

TwistedComplex evaluate(const DeformationComplex& c, const FieldElem& a) { return c.complex.evaluate(a); }

namespace {

// sigma i_+^* - a i_-^* : C^q(N) -> C^q(V)
SparseMatrix boundary_map(const CutPresentation& cut, int q, const FieldElem& a) {
  const std::size_t d = cut.rank();
  SparseMatrix m(cut.field(), cut.v.count(q) * d, cut.n.count(q) * d);
  for (std::size_t s = 0; s < cut.v.count(q); ++s) {
    const Simplex& sv = cut.v.simplex(q, s);
    const std::size_t jp = cut.n.index_or_throw(map_simplex(cut.i_plus, sv));
    const std::size_t jm = cut.n.index_or_throw(map_simplex(cut.i_minus, sv));
    const Mat& sg = cut.sigma[sv[0]];
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t y = 0; y < d; ++y) m.add(cochain_index(s, x, d), cochain_index(jp, y, d), sg.at(x, y));
      m.add(cochain_index(s, x, d), cochain_index(jm, x, d), -a);
    }
  }
  return m;
}

}  // namespace

BoundaryConditionComplex boundary_condition_complex(const CutPresentation& cut, const FieldElem& a) {
  if (a.is_zero()) throw ComplexError("boundary condition needs a nonzero parameter");
  if (auto diag = validate_cut(cut); !diag.ok()) throw ComplexError(diag.errors.front());
  const TwistedComplex cn = twisted_complex(cut.n, cut.f0);
  const int top = std::max(cn.top(), 0);
  BoundaryConditionComplex out;
  std::vector<std::size_t> dims;
  for (int q = 0; q <= top; ++q) {
    out.basis.push_back(kernel_basis(boundary_map(cut, q, a)));
    dims.push_back(out.basis.back().size());
  }
  std::vector<SparseMatrix> mats;
  for (int q = 0; q < top; ++q) {
    Subspace target(cut.field(), cn.dim(q + 1));
    for (const auto& b : out.basis[q + 1]) target.add(b);
    SparseMatrix m(cut.field(), dims[q + 1], dims[q]);
    for (std::size_t j = 0; j < dims[q]; ++j) {
      auto co = target.coefficients(cn.d(q).apply(out.basis[q][j]));
      if (!co) throw ComplexError("boundary condition is not preserved by the coboundary");
      for (std::size_t i = 0; i < co->size(); ++i) m.add(i, j, (*co)[i]);
    }
    mats.push_back(std::move(m));
  }
  out.complex = TwistedComplex(cut.field(), std::move(dims), std::move(mats));
  return out;
}

TwistedComplex relative_complex(const CutPresentation& cut) {
  const TwistedComplex cn = twisted_complex(cut.n, cut.f0);
  const std::size_t d = cut.rank();
  const int top = std::max(cn.top(), 0);
  std::vector<std::vector<long>> pos(top + 1);
  std::vector<std::size_t> dims;
  for (int q = 0; q <= top; ++q) {
    std::set<std::size_t> excluded;
    for (const auto& s : cut.v.simplices(q)) excluded.insert(cut.n.index_or_throw(map_simplex(cut.i_plus, s)));
    pos[q].assign(cut.n.count(q) * d, -1);
    std::size_t k = 0;
    for (std::size_t s = 0; s < cut.n.count(q); ++s)
      if (!excluded.count(s))
        for (std::size_t e = 0; e < d; ++e) pos[q][cochain_index(s, e, d)] = static_cast<long>(k++);
    dims.push_back(k);
  }
  std::vector<SparseMatrix> mats;
  for (int q = 0; q < top; ++q) {
    SparseMatrix m(cut.field(), dims[q + 1], dims[q]);
    const SparseMatrix& dn = cn.d(q);
    for (std::size_t i = 0; i < dn.rows(); ++i) {
      if (pos[q + 1][i] < 0) continue;
      for (const auto& [j, v] : dn.row(i))
        if (pos[q][j] >= 0) m.add(pos[q + 1][i], pos[q][j], v);
    }
    mats.push_back(std::move(m));
  }
  return TwistedComplex(cut.field(), std::move(dims), std::move(mats));
}

CutResult cut_along(const SimplicialComplex& x, const std::vector<std::uint32_t>& v_vertices, const FlatBundle& f) {
  std::vector<std::uint32_t> vv(v_vertices);
  std::sort(vv.begin(), vv.end());
  vv.erase(std::unique(vv.begin(), vv.end()), vv.end());
  const int top = x.dim();
  if (top < 1 || vv.empty()) throw ComplexError("cut needs a positive-dimensional complex and a nonempty V");
  std::vector<bool> in_v(x.vertex_count(), false);
  for (auto v : vv) {
    if (v >= x.vertex_count()) throw ComplexError("cut vertex out of range");
    in_v[v] = true;
  }
  auto touches = [&](const Simplex& s) { return std::any_of(s.begin(), s.end(), [&](auto v) { return in_v[v]; }); };
  auto inside = [&](const Simplex& s) { return std::all_of(s.begin(), s.end(), [&](auto v) { return in_v[v]; }); };

  // Top simplices in the star of V, joined across codimension-one faces off V.
  const auto& tops = x.simplices(top);
  std::vector<std::size_t> star;
  for (std::size_t i = 0; i < tops.size(); ++i)
    if (touches(tops[i])) {
      if (inside(tops[i])) throw ComplexError("cut: V contains a top simplex");
      star.push_back(i);
    }
  std::vector<std::size_t> parent(tops.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::map<Simplex, std::size_t> first_owner;
  for (auto i : star) {
    const Simplex& s = tops[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      if (!touches(face) || inside(face)) continue;
      auto [it, fresh] = first_owner.emplace(face, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, int> side_of_root;
  std::vector<int> side(tops.size(), 0);
  for (auto i : star) {
    const auto r = find(i);
    if (!side_of_root.count(r)) {
      if (side_of_root.size() == 2) throw ComplexError("cut: the star of V has more than two sides");
      side_of_root[r] = side_of_root.empty() ? +1 : -1;
    }
    side[i] = side_of_root[r];
  }
  if (side_of_root.size() != 2) throw ComplexError("cut: V does not separate its star into two sides");

  // N vertices: X vertices in order, V vertices doubled as (+, -).
  std::vector<std::uint32_t> plus_id(x.vertex_count()), minus_id(x.vertex_count());
  std::vector<std::uint32_t> projection;
  std::uint32_t k = 0;
  for (std::uint32_t v = 0; v < x.vertex_count(); ++v) {
    plus_id[v] = k++;
    projection.push_back(v);
    if (in_v[v]) {
      minus_id[v] = k++;
      projection.push_back(v);
    } else {
      minus_id[v] = plus_id[v];
    }
  }
  auto lift = [&](const Simplex& s, int sd) {
    Simplex r;
    for (auto v : s) r.push_back(sd < 0 ? minus_id[v] : plus_id[v]);
    return r;
  };

  // Side of every simplex touching V but not inside V, from any top coface.
  std::map<Simplex, int> simplex_side;
  for (auto i : star) {
    const Simplex& s = tops[i];
    const std::uint32_t m = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      Simplex face;
      for (std::uint32_t b = 0; b < m; ++b)
        if (mask & (1u << b)) face.push_back(s[b]);
      if (!touches(face) || inside(face)) continue;
      auto [it, fresh] = simplex_side.emplace(face, side[i]);
      if (!fresh && it->second != side[i]) throw ComplexError("cut: simplex " + simplex_str(face) + " lies on both sides");
    }
  }

  std::vector<Simplex> facets;
  for (int q = 0; q <= top; ++q)
    for (const auto& s : x.simplices(q)) {
      if (inside(s)) {
        facets.push_back(lift(s, +1));
        facets.push_back(lift(s, -1));
      } else if (touches(s)) {
        facets.push_back(lift(s, simplex_side.at(s)));
      } else {
        facets.push_back(lift(s, +1));
      }
    }
  CutResult out;
  out.cut.n = SimplicialComplex::from_facets(k, facets);
  out.cut.projection = projection;
  std::vector<Simplex> vfacets = x.induced(vv);
  std::map<std::uint32_t, std::uint32_t> vindex;
  for (std::uint32_t i = 0; i < vv.size(); ++i) vindex[vv[i]] = i;
  for (auto& s : vfacets)
    for (auto& v : s) v = vindex[v];
  out.cut.v = SimplicialComplex::from_facets(static_cast<std::uint32_t>(vv.size()), vfacets);
  for (auto v : vv) {
    out.cut.i_plus.push_back(plus_id[v]);
    out.cut.i_minus.push_back(minus_id[v]);
  }
  out.v_vertices = vv;
  std::vector<Mat> g0;
  for (const auto& e : out.cut.n.simplices(1))
    g0.push_back(f.edge(x.index_or_throw({projection[e[0]], projection[e[1]]})));
  out.cut.f0 = FlatBundle(f.field(), f.rank(), std::move(g0), f.name());
  out.cut.sigma.assign(vv.size(), Mat::identity(f.field(), f.rank()));

  out.dual = IntegralCocycle(x);
  std::vector<long> h(k, 0);
  for (auto v : vv) h[minus_id[v]] = 1;
  for (std::size_t e = 0; e < x.count(1); ++e) {
    const Simplex& s = x.simplex(1, e);
    Simplex l = inside(s) ? lift(s, +1) : touches(s) ? lift(s, simplex_side.at(s)) : lift(s, +1);
    out.dual.set(e, h[l[1]] - h[l[0]]);
  }
  return out;
}

SimplicialComplex glue(const CutPresentation& cut, std::uint32_t x_vertices) {
  std::vector<Simplex> all;
  for (int q = 0; q <= cut.n.dim(); ++q)
    for (const auto& s : cut.n.simplices(q)) all.push_back(map_simplex(cut.projection, s));
  return SimplicialComplex::from_facets(x_vertices, all);
}

}  // namespace novcup
