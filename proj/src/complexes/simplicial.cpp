#include "novcup/complexes/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace novcup {

std::string simplex_str(const Simplex& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

void SimplicialComplex::add_sorted(const Simplex& s) {
  const std::size_t q = s.size() - 1;
  if (by_dim_.size() <= q) by_dim_.resize(q + 1);
  by_dim_[q].push_back(s);
}

void SimplicialComplex::rebuild_index() {
  lookup_.assign(by_dim_.size(), {});
  for (std::size_t q = 0; q < by_dim_.size(); ++q) {
    auto& list = by_dim_[q];
    std::sort(list.begin(), list.end());
    auto last = std::unique(list.begin(), list.end());
    if (last != list.end()) {
      for (auto it = last; it != list.end(); ++it) defects_.push_back("duplicate simplex " + simplex_str(*it));
      list.erase(last, list.end());
    }
    for (std::size_t i = 0; i < list.size(); ++i) lookup_[q].emplace(list[i], i);
  }
  while (!by_dim_.empty() && by_dim_.back().empty()) {
    by_dim_.pop_back();
    lookup_.pop_back();
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::uint32_t n_vertices, const std::vector<Simplex>& facets) {
  SimplicialComplex x;
  x.n_ = n_vertices;
  std::set<Simplex> all;
  for (Simplex f : facets) {
    if (f.empty()) throw ComplexError("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ComplexError("facet with repeated vertex " + simplex_str(f));
    if (f.back() >= n_vertices) throw ComplexError("facet vertex out of range " + simplex_str(f));
    if (f.size() > 20) throw ComplexError("facet dimension too large");
    const std::uint32_t k = static_cast<std::uint32_t>(f.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Simplex s;
      for (std::uint32_t i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      all.insert(s);
    }
  }
  for (std::uint32_t v = 0; v < n_vertices; ++v) all.insert({v});
  for (const auto& s : all) x.add_sorted(s);
  x.rebuild_index();
  return x;
}

SimplicialComplex SimplicialComplex::from_simplices(std::uint32_t n_vertices, const std::vector<Simplex>& simplices) {
  SimplicialComplex x;
  x.n_ = n_vertices;
  for (Simplex s : simplices) {
    if (s.empty()) {
      x.defects_.push_back("empty simplex");
      continue;
    }
    if (!std::is_sorted(s.begin(), s.end())) {
      x.defects_.push_back("simplex " + simplex_str(s) + " is not listed in increasing vertex order");
      std::sort(s.begin(), s.end());
    }
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      x.defects_.push_back("simplex " + simplex_str(s) + " repeats a vertex");
      continue;
    }
    if (s.back() >= n_vertices) {
      x.defects_.push_back("simplex " + simplex_str(s) + " has a vertex out of range");
      continue;
    }
    x.add_sorted(s);
  }
  x.rebuild_index();
  return x;
}

std::size_t SimplicialComplex::count(int q) const {
  if (q < 0 || q >= static_cast<int>(by_dim_.size())) return 0;
  return by_dim_[q].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
  static const std::vector<Simplex> empty;
  if (q < 0 || q >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[q];
}

std::optional<std::size_t> SimplicialComplex::index(const Simplex& s) const {
  if (s.empty() || s.size() > lookup_.size()) return std::nullopt;
  const auto& m = lookup_[s.size() - 1];
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::index_or_throw(const Simplex& s) const {
  auto i = index(s);
  if (!i) throw ComplexError("missing simplex " + simplex_str(s));
  return *i;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t q = 0; q < by_dim_.size(); ++q) chi += (q % 2 ? -1 : 1) * static_cast<long>(by_dim_[q].size());
  return chi;
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (const auto& l : by_dim_) n += l.size();
  return n;
}

std::vector<Simplex> SimplicialComplex::induced(const std::vector<std::uint32_t>& vertices) const {
  std::set<std::uint32_t> vs(vertices.begin(), vertices.end());
  std::vector<Simplex> out;
  for (const auto& level : by_dim_)
    for (const auto& s : level)
      if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return vs.count(v) > 0; })) out.push_back(s);
  return out;
}

// ---------------------------------------------------------------------------

IntegralCocycle::IntegralCocycle(const SimplicialComplex& x,
                                 const std::map<std::pair<std::uint32_t, std::uint32_t>, long>& edges)
    : values_(x.count(1), 0) {
  for (const auto& [e, v] : edges) {
    auto [a, b] = e;
    long val = v;
    if (a > b) {
      std::swap(a, b);
      val = -val;
    }
    auto idx = x.index({a, b});
    if (!idx) throw ComplexError("cocycle on missing edge " + simplex_str({a, b}));
    values_[*idx] = val;
  }
}

long IntegralCocycle::value(const SimplicialComplex& x, std::uint32_t u, std::uint32_t v) const {
  if (u == v) return 0;
  if (u < v) return values_[x.index_or_throw({u, v})];
  return -values_[x.index_or_throw({v, u})];
}

bool IntegralCocycle::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](long v) { return v == 0; });
}

IntegralCocycle IntegralCocycle::negated() const { return scaled(-1); }

IntegralCocycle IntegralCocycle::scaled(long c) const {
  IntegralCocycle r = *this;
  for (auto& v : r.values_) v *= c;
  return r;
}

IntegralCocycle IntegralCocycle::operator+(const IntegralCocycle& o) const {
  IntegralCocycle r = *this;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

IntegralCocycle IntegralCocycle::plus_coboundary(const SimplicialComplex& x, const std::vector<long>& f) const {
  IntegralCocycle r = *this;
  for (std::size_t e = 0; e < x.count(1); ++e) {
    const auto& s = x.simplex(1, e);
    r.values_[e] += f[s[1]] - f[s[0]];
  }
  return r;
}

std::optional<Simplex> cocycle_violation(const SimplicialComplex& x, const IntegralCocycle& z) {
  for (const auto& t : x.simplices(2)) {
    const auto uv = x.index({t[0], t[1]}), uw = x.index({t[0], t[2]}), vw = x.index({t[1], t[2]});
    if (!uv || !uw || !vw) return t;
    if (z.at(*vw) - z.at(*uw) + z.at(*uv) != 0) return t;
  }
  return std::nullopt;
}

GaugeResult gauge_fix(const SimplicialComplex& x, const IntegralCocycle& z) {
  const std::uint32_t n = x.vertex_count();
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < x.count(1); ++e) {
    const auto& s = x.simplex(1, e);
    adj[s[0]].emplace_back(s[1], e);
    adj[s[1]].emplace_back(s[0], e);
  }
  // Potential p with p(v) - p(u) = -z(uv) along tree edges.
  std::vector<long> pot(n, 0);
  std::vector<bool> seen(n, false);
  for (std::uint32_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::uint32_t> q;
    q.push(root);
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop();
      for (const auto& [v, e] : adj[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        const long zuv = u < v ? z.at(e) : -z.at(e);
        pot[v] = pot[u] - zuv;
        q.push(v);
      }
    }
  }
  return {z.plus_coboundary(x, pot), pot};
}

PrimitiveCocycle primitive_part(const SimplicialComplex& x, const IntegralCocycle& z) {
  GaugeResult g = gauge_fix(x, z);
  long content = 0;
  for (long v : g.z.values()) content = std::gcd(content, std::labs(v));
  if (content <= 1) return {z, content};
  IntegralCocycle r = g.z;
  for (std::size_t e = 0; e < r.size(); ++e) r.set(e, r.at(e) / content);
  return {r, content};
}

bool is_integral_coboundary(const SimplicialComplex& x, const IntegralCocycle& z) {
  return gauge_fix(x, z).z.is_zero();
}

std::size_t component_count(const SimplicialComplex& x) {
  std::vector<std::uint32_t> parent(x.vertex_count());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::size_t comps = x.vertex_count();
  for (const auto& e : x.simplices(1)) {
    const auto a = find(e[0]), b = find(e[1]);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace novcup
