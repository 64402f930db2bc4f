#include "novcup/pidmod/snf.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace novcup {

namespace {

using Row = std::map<std::uint32_t, LaurentPoly>;

bool is_ring_unit(const LaurentPoly& p, Ring ring) {
  if (!p.is_unit()) return false;
  return ring == Ring::laurent || p.valuation() == 0;
}

// target -= c * src, for sparse maps.
void sub_scaled(Row& target, const LaurentPoly& c, const Row& src) {
  for (const auto& [j, v] : src) {
    auto it = target.find(j);
    if (it == target.end()) {
      target.emplace(j, -(c * v));
    } else {
      it->second -= c * v;
      if (it->second.is_zero()) target.erase(it);
    }
  }
}

void scale_row(Row& r, const LaurentPoly& c) {
  for (auto& [j, v] : r) v *= c;
}

Poly to_poly(const LaurentPoly& p) {
  if (p.is_zero()) return Poly(p.field());
  if (p.valuation() < 0) throw ModuleError("negative exponent in polynomial elimination");
  return p.body().shifted(static_cast<unsigned>(p.valuation()));
}

LaurentPoly from_poly(const Poly& p) { return p.is_zero() ? LaurentPoly(p.field()) : LaurentPoly(p, 0); }

// Lowest exponent of T dividing p (p nonzero).
unsigned t_adic_valuation(const Poly& p) {
  unsigned k = 0;
  while (p.coeff(k).is_zero()) ++k;
  return k;
}

struct Eliminator {
  const FieldSpec& f;
  Ring ring;
  SnfOptions opts;
  std::size_t nr, nc;
  std::vector<Row> rows;
  std::vector<std::set<std::uint32_t>> col_rows;
  std::vector<bool> row_active, col_active;
  std::vector<Row> u;      // rows of U
  std::vector<Row> v;      // columns of V (row index -> entry)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;
  std::vector<Poly> diagonal;

  Eliminator(const LaurentMatrix& m, Ring r, SnfOptions o)
      : f(m.field()), ring(r), opts(o), nr(m.rows()), nc(m.cols()), rows(nr), col_rows(nc),
        row_active(nr, true), col_active(nc, true) {
    for (std::size_t i = 0; i < nr; ++i)
      for (const auto& [j, val] : m.row(i)) {
        if (ring == Ring::polynomial && val.valuation() < 0) throw ModuleError("negative exponent in a k[T] matrix");
        rows[i].emplace(j, val);
        col_rows[j].insert(static_cast<std::uint32_t>(i));
      }
    const LaurentPoly one = LaurentPoly::constant(f.one());
    if (opts.track_u) {
      u.resize(nr);
      for (std::size_t i = 0; i < nr; ++i) u[i].emplace(static_cast<std::uint32_t>(i), one);
    }
    if (opts.track_v) {
      v.resize(nc);
      for (std::size_t j = 0; j < nc; ++j) v[j].emplace(static_cast<std::uint32_t>(j), one);
    }
  }

  void row_sub(std::uint32_t i, const LaurentPoly& c, std::uint32_t r) {
    const Row& src = rows[r];
    Row& dst = rows[i];
    for (const auto& [j, val] : src) {
      auto it = dst.find(j);
      if (it == dst.end()) {
        dst.emplace(j, -(c * val));
        col_rows[j].insert(i);
      } else {
        it->second -= c * val;
        if (it->second.is_zero()) {
          dst.erase(it);
          col_rows[j].erase(i);
        }
      }
    }
    if (opts.track_u) sub_scaled(u[i], c, u[r]);
  }

  void unit_phase() {
    for (;;) {
      std::size_t best_cost = std::numeric_limits<std::size_t>::max();
      std::uint32_t br = 0, bc = 0;
      bool found = false;
      for (std::uint32_t i = 0; i < nr; ++i) {
        if (!row_active[i] || rows[i].empty()) continue;
        const std::size_t rc = rows[i].size() - 1;
        if (found && rc == 0 && best_cost == 0) break;
        for (const auto& [j, val] : rows[i]) {
          if (!is_ring_unit(val, ring)) continue;
          const std::size_t cost = rc * (col_rows[j].size() - 1);
          if (!found || cost < best_cost) {
            best_cost = cost;
            br = i;
            bc = j;
            found = true;
          }
        }
      }
      if (!found) return;
      const LaurentPoly inv = rows[br].at(bc).unit_inverse();
      const std::vector<std::uint32_t> others(col_rows[bc].begin(), col_rows[bc].end());
      for (auto i : others) {
        if (i == br) continue;
        row_sub(i, rows[i].at(bc) * inv, br);
      }
      if (opts.track_v) {
        for (const auto& [j, val] : rows[br])
          if (j != bc) sub_scaled(v[j], val * inv, v[bc]);
        scale_row(v[bc], inv);
      } else if (opts.track_u) {
        scale_row(u[br], inv);
      }
      for (const auto& [j, val] : rows[br]) col_rows[j].erase(br);
      rows[br].clear();
      row_active[br] = false;
      col_active[bc] = false;
      pivots.emplace_back(br, bc);
      diagonal.push_back(Poly::constant(f.one()));
    }
  }

  void dense_phase() {
    std::vector<std::uint32_t> rid, cid;
    for (std::uint32_t i = 0; i < nr; ++i)
      if (row_active[i] && !rows[i].empty()) rid.push_back(i);
    for (std::uint32_t j = 0; j < nc; ++j)
      if (col_active[j] && !col_rows[j].empty()) cid.push_back(j);
    if (rid.empty() || cid.empty()) return;
    std::map<std::uint32_t, std::size_t> cpos;
    for (std::size_t k = 0; k < cid.size(); ++k) cpos[cid[k]] = k;
    const std::size_t R = rid.size(), C = cid.size();
    std::vector<std::vector<Poly>> a(R, std::vector<Poly>(C, Poly(f)));
    for (std::size_t i = 0; i < R; ++i) {
      Row& r = rows[rid[i]];
      if (ring == Ring::laurent) {
        int mv = std::numeric_limits<int>::max();
        for (const auto& [j, val] : r) mv = std::min(mv, val.valuation());
        if (mv != 0) {
          const LaurentPoly sh = LaurentPoly::monomial(f.one(), -mv);
          scale_row(r, sh);
          if (opts.track_u) scale_row(u[rid[i]], sh);
        }
      }
      for (const auto& [j, val] : r) a[i][cpos.at(j)] = to_poly(val);
    }
    auto urow_sub = [&](std::size_t i, const Poly& q, std::size_t t) {
      if (opts.track_u) sub_scaled(u[rid[i]], from_poly(q), u[rid[t]]);
    };
    auto vcol_sub = [&](std::size_t j, const Poly& q, std::size_t t) {
      if (opts.track_v) sub_scaled(v[cid[j]], from_poly(q), v[cid[t]]);
    };
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
      auto find_min = [&](bool only_cross) {
        int bd = std::numeric_limits<int>::max();
        std::size_t bi = R, bj = C;
        for (std::size_t i = t; i < R; ++i)
          for (std::size_t j = t; j < C; ++j) {
            if (only_cross && i != t && j != t) continue;
            if (a[i][j].is_zero()) continue;
            if (a[i][j].degree() < bd) {
              bd = a[i][j].degree();
              bi = i;
              bj = j;
            }
          }
        return std::make_pair(bi, bj);
      };
      auto bring = [&](std::size_t i, std::size_t j) {
        if (i != t) {
          std::swap(a[i], a[t]);
          std::swap(rid[i], rid[t]);
        }
        if (j != t) {
          for (auto& row : a) std::swap(row[j], row[t]);
          std::swap(cid[j], cid[t]);
        }
      };
      auto [pi, pj] = find_min(false);
      if (pi == R) break;
      bring(pi, pj);
      for (;;) {
        for (std::size_t i = t + 1; i < R; ++i) {
          if (a[i][t].is_zero()) continue;
          const Poly q = poly_divmod(a[i][t], a[t][t]).first;
          for (std::size_t j = t; j < C; ++j)
            if (!a[t][j].is_zero()) a[i][j] -= q * a[t][j];
          urow_sub(i, q, t);
        }
        for (std::size_t j = t + 1; j < C; ++j) {
          if (a[t][j].is_zero()) continue;
          const Poly q = poly_divmod(a[t][j], a[t][t]).first;
          for (std::size_t i = t; i < R; ++i)
            if (!a[i][t].is_zero()) a[i][j] -= q * a[i][t];
          vcol_sub(j, q, t);
        }
        bool cross = false;
        for (std::size_t i = t + 1; i < R && !cross; ++i) cross = !a[i][t].is_zero();
        for (std::size_t j = t + 1; j < C && !cross; ++j) cross = !a[t][j].is_zero();
        if (cross) {
          auto [ci, cj] = find_min(true);
          bring(ci, cj);
          continue;
        }
        std::size_t bad = R;
        for (std::size_t i = t + 1; i < R && bad == R; ++i)
          for (std::size_t j = t + 1; j < C; ++j)
            if (!a[i][j].is_zero() && !poly_divmod(a[i][j], a[t][t]).second.is_zero()) {
              bad = i;
              break;
            }
        if (bad == R) break;
        // Row t += row bad, then eliminate again.
        for (std::size_t j = t; j < C; ++j) a[t][j] += a[bad][j];
        if (opts.track_u) sub_scaled(u[rid[t]], LaurentPoly::constant(-f.one()), u[rid[bad]]);
      }
      Poly d = a[t][t];
      LaurentPoly scale = LaurentPoly::constant(d.lead().inverse());
      d = d.monic();
      if (ring == Ring::laurent) {
        const unsigned k = t_adic_valuation(d);
        if (k > 0) {
          std::vector<FieldElem> c(d.coeffs().begin() + k, d.coeffs().end());
          d = Poly(f, c);
          scale = scale * LaurentPoly::monomial(f.one(), -static_cast<int>(k));
        }
      }
      if (opts.track_u) {
        scale_row(u[rid[t]], scale);
      } else if (opts.track_v) {
        scale_row(v[cid[t]], scale);
      }
      pivots.emplace_back(rid[t], cid[t]);
      diagonal.push_back(d);
    }
  }

  SnfResult finish() {
    SnfResult res;
    res.rank = pivots.size();
    res.diagonal = diagonal;
    if (opts.track_u) {
      LaurentMatrix um(f, nr, nr);
      std::vector<bool> used(nr, false);
      std::size_t k = 0;
      auto emit = [&](std::uint32_t i) {
        for (const auto& [j, val] : u[i]) um.add(k, j, val);
        used[i] = true;
        ++k;
      };
      for (const auto& p : pivots) emit(p.first);
      for (std::uint32_t i = 0; i < nr; ++i)
        if (!used[i]) emit(i);
      res.u = std::move(um);
    }
    if (opts.track_v) {
      LaurentMatrix vm(f, nc, nc);
      std::vector<bool> used(nc, false);
      std::size_t k = 0;
      auto emit = [&](std::uint32_t j) {
        for (const auto& [i, val] : v[j]) vm.add(i, k, val);
        used[j] = true;
        ++k;
      };
      for (const auto& p : pivots) emit(p.second);
      for (std::uint32_t j = 0; j < nc; ++j)
        if (!used[j]) emit(j);
      res.v = std::move(vm);
    }
    return res;
  }
};

}  // namespace

std::vector<Poly> SnfResult::invariant_factors() const {
  std::vector<Poly> out;
  for (const auto& d : diagonal)
    if (d.degree() > 0) out.push_back(d);
  return out;
}

SnfResult snf(const LaurentMatrix& m, Ring ring, SnfOptions opts) {
  Eliminator e(m, ring, opts);
  e.unit_phase();
  e.dense_phase();
  return e.finish();
}

std::string ModuleDecomposition::str() const {
  std::string s = "free " + std::to_string(free_rank) + ", torsion [";
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) s += ", ";
    s += invariant_factors[i].str();
  }
  return s + "]";
}

std::vector<ModuleDecomposition> cohomology_modules(const ParamComplex& c) {
  if (!c.d_squared_zero()) throw ModuleError("coboundary does not square to zero");
  std::vector<SnfResult> s;
  for (int q = 0; q <= c.top(); ++q) s.push_back(snf(c.d(q), c.ring()));
  std::vector<ModuleDecomposition> out;
  for (int q = 0; q <= c.top(); ++q) {
    ModuleDecomposition m;
    m.degree = q;
    m.ring = c.ring();
    const std::size_t prev = q > 0 ? s[q - 1].rank : 0;
    m.free_rank = c.dim(q) - s[q].rank - prev;
    if (q > 0) m.invariant_factors = s[q - 1].invariant_factors();
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::size_t> dims_at(const std::vector<ModuleDecomposition>& m, const FieldElem& a) {
  std::vector<std::size_t> out;
  auto vanishing = [&](std::size_t q) {
    if (q >= m.size()) return std::size_t{0};
    if (m[q].ring == Ring::laurent && a.is_zero()) throw ModuleError("cannot evaluate a Laurent module at 0");
    std::size_t n = 0;
    for (const auto& f : m[q].invariant_factors)
      if (f.eval(a).is_zero()) ++n;
    return n;
  };
  for (std::size_t q = 0; q < m.size(); ++q) out.push_back(m[q].free_rank + vanishing(q) + vanishing(q + 1));
  return out;
}

std::vector<int> multiplicities_at(const ModuleDecomposition& m, const FieldElem& a) {
  std::vector<int> out;
  for (const auto& f : m.invariant_factors) out.push_back(root_multiplicity(f, a));
  return out;
}

}  // namespace novcup
