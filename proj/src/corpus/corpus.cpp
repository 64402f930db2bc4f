#include "novcup/corpus/corpus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "novcup/complexes/cut.hpp"

namespace novcup {

namespace {

std::vector<Simplex> maximal_simplices(const SimplicialComplex& x) {
  std::set<Simplex> covered;
  for (int q = 1; q <= x.dim(); ++q)
    for (const auto& s : x.simplices(q))
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(i));
        covered.insert(f);
      }
  std::vector<Simplex> out;
  for (int q = 0; q <= x.dim(); ++q)
    for (const auto& s : x.simplices(q))
      if (!covered.count(s)) out.push_back(s);
  return out;
}

// Pulls back z along a vertex map X -> B.
IntegralCocycle pullback(const SimplicialComplex& x, const std::function<std::uint32_t(std::uint32_t)>& proj,
                         const SimplicialComplex& b, const IntegralCocycle& z) {
  IntegralCocycle out(x);
  for (std::size_t e = 0; e < x.count(1); ++e) {
    const auto& s = x.simplex(1, e);
    out.set(e, z.value(b, proj(s[0]), proj(s[1])));
  }
  return out;
}

IntegralCocycle cut_dual(const SimplicialComplex& x, const std::vector<std::uint32_t>& v) {
  return cut_along(x, v, FlatBundle::trivial(x, FieldSpec::rationals())).dual;
}

SimplicialComplex grid_torus() {
  std::vector<Simplex> f;
  auto id = [](std::uint32_t i, std::uint32_t j) { return 3 * (i % 3) + (j % 3); };
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) {
      f.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      f.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
    }
  return SimplicialComplex::from_facets(9, f);
}

SimplicialComplex circle_complex() { return SimplicialComplex::from_facets(3, {{0, 1}, {0, 2}, {1, 2}}); }

std::string sphere_name(int n) { return "s1_x_sphere" + std::to_string(n); }

}  // namespace

const IntegralCocycle& NamedSpace::cls(const std::string& n) const {
  if (n == "xi") return xi;
  for (const auto& [name, z] : classes)
    if (name == n) return z;
  throw CorpusError("space " + name + " has no class " + n);
}

NamedSpace circle() {
  NamedSpace s;
  s.name = "circle";
  s.x = circle_complex();
  s.xi = IntegralCocycle(s.x, {{{0, 1}, 1}});
  s.classes = {{"theta", s.xi}};
  s.cut_vertices = {0};
  s.bundles = {{"E", 0, 2, 1}};
  return s;
}

NamedSpace torus(int n) {
  if (n == 1) {
    NamedSpace s = circle();
    s.name = "torus1";
    s.classes = {{"x1", s.xi}};
    return s;
  }
  NamedSpace s;
  s.name = "torus" + std::to_string(n);
  if (n == 2) {
    std::vector<Simplex> f;
    for (std::uint32_t i = 0; i < 7; ++i) {
      f.push_back({i, (i + 1) % 7, (i + 3) % 7});
      f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    s.x = SimplicialComplex::from_facets(7, f);
    s.cut_vertices = {0, 1, 2};
    s.xi = cut_dual(s.x, s.cut_vertices);
    s.classes = {{"x1", s.xi}, {"x2", cut_dual(s.x, {0, 3, 6})}};
    return s;
  }
  if (n == 3) {
    auto id = [](std::array<int, 3> p) {
      return static_cast<std::uint32_t>(((p[0] % 3) + 3) % 3 + 3 * (((p[1] % 3) + 3) % 3) + 9 * (((p[2] % 3) + 3) % 3));
    };
    std::vector<Simplex> f;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::array<int, 3>> disp;
    std::array<int, 3> perm{0, 1, 2};
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z) {
          std::sort(perm.begin(), perm.end());
          do {
            std::array<std::array<int, 3>, 4> path;
            path[0] = {x, y, z};
            for (int k = 0; k < 3; ++k) {
              path[k + 1] = path[k];
              path[k + 1][perm[k]] += 1;
            }
            Simplex t;
            for (const auto& p : path) t.push_back(id(p));
            f.push_back(t);
            for (int a = 0; a < 4; ++a)
              for (int b = a + 1; b < 4; ++b) {
                std::array<int, 3> d{path[b][0] - path[a][0], path[b][1] - path[a][1], path[b][2] - path[a][2]};
                std::uint32_t u = id(path[a]), v = id(path[b]);
                if (u > v) {
                  std::swap(u, v);
                  for (auto& c : d) c = -c;
                }
                disp[{u, v}] = d;
              }
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
    s.x = SimplicialComplex::from_facets(27, f);
    for (int k = 0; k < 3; ++k) {
      IntegralCocycle c(s.x);
      for (std::size_t e = 0; e < s.x.count(1); ++e) {
        const auto& sv = s.x.simplex(1, e);
        const int xu = static_cast<int>(sv[0] / (k == 0 ? 1 : k == 1 ? 3 : 9)) % 3;
        const int xv = static_cast<int>(sv[1] / (k == 0 ? 1 : k == 1 ? 3 : 9)) % 3;
        const int d = disp.at({sv[0], sv[1]})[k];
        c.set(e, (xu + d - xv) / 3);
      }
      s.classes.push_back({"x" + std::to_string(k + 1), c});
    }
    s.xi = s.classes[0].second;
    for (std::uint32_t v = 0; v < 27; ++v)
      if (v % 3 == 0) s.cut_vertices.push_back(v);
    return s;
  }
  throw CorpusError("torus dimension must be 1, 2 or 3");
}

NamedSpace surface(int g) {
  if (g < 1 || g > 6) throw CorpusError("surface genus must be between 1 and 6");
  if (g == 1) {
    NamedSpace s = torus(2);
    s.name = "surface1";
    return s;
  }
  const SimplicialComplex t = grid_torus();
  auto id = [](std::uint32_t i, std::uint32_t j) { return 3 * i + j; };
  const Simplex first_out{id(1, 1), id(1, 2), id(2, 2)};
  const Simplex mid_in{id(0, 0), id(0, 1), id(1, 1)};
  const Simplex mid_out{id(1, 2), id(2, 0), id(2, 2)};
  const Simplex last_in{id(1, 1), id(1, 2), id(2, 2)};
  std::vector<Simplex> facets;
  std::vector<std::vector<std::uint32_t>> global(g, std::vector<std::uint32_t>(9));
  std::uint32_t next = 0;
  Simplex prev_out_global;
  for (int k = 0; k < g; ++k) {
    const Simplex* in = k == 0 ? nullptr : (k == g - 1 ? &last_in : &mid_in);
    const Simplex* out = k == g - 1 ? nullptr : (k == 0 ? &first_out : &mid_out);
    std::map<std::uint32_t, std::uint32_t> glued;
    if (in) {
      Simplex pg = prev_out_global;
      std::sort(pg.begin(), pg.end());
      for (std::size_t i = 0; i < 3; ++i) glued[(*in)[i]] = pg[i];
    }
    for (std::uint32_t v = 0; v < 9; ++v) global[k][v] = glued.count(v) ? glued[v] : next++;
    for (const auto& tri : t.simplices(2)) {
      if ((in && tri == *in) || (out && tri == *out)) continue;
      facets.push_back(map_simplex(global[k], tri));
    }
    if (out) prev_out_global = map_simplex(global[k], *out);
  }
  NamedSpace s;
  s.name = "surface" + std::to_string(g);
  s.x = SimplicialComplex::from_facets(next, facets);
  const std::vector<std::uint32_t> row0_first{global[0][id(0, 0)], global[0][id(0, 1)], global[0][id(0, 2)]};
  const std::vector<std::uint32_t> col0_first{global[0][id(0, 0)], global[0][id(1, 0)], global[0][id(2, 0)]};
  s.cut_vertices = {global[g - 1][id(0, 0)], global[g - 1][id(0, 1)], global[g - 1][id(0, 2)]};
  std::sort(s.cut_vertices.begin(), s.cut_vertices.end());
  s.xi = cut_dual(s.x, s.cut_vertices);
  s.classes = {{"v1", cut_dual(s.x, row0_first)}, {"v2", cut_dual(s.x, col0_first)}};
  s.bundles = {{"E1", 0, 2, 1}, {"E2", 0, 2, -1}};
  return s;
}

NamedSpace rp(int n) {
  NamedSpace s;
  s.name = "rp" + std::to_string(n);
  s.default_field = "2";
  if (n == 1) {
    s.x = circle_complex();
  } else if (n == 2) {
    s.x = SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                             {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
  } else if (n == 3) {
    // Barycentric subdivision of the boundary of the 4-dimensional
    // cross-polytope modulo the antipodal map. A face is a word over
    // {absent, +, -} in each coordinate.
    auto code = [](const std::array<int, 4>& w) {
      int c = 0;
      for (int i = 3; i >= 0; --i) c = 3 * c + w[i];
      return c;
    };
    auto flip = [](std::array<int, 4> w) {
      for (auto& x : w) x = x == 0 ? 0 : 3 - x;
      return w;
    };
    std::vector<std::pair<std::pair<int, int>, int>> reps;  // ((size, canonical code), code)
    std::map<int, int> canon;
    for (int c = 1; c < 81; ++c) {
      std::array<int, 4> w{c % 3, c / 3 % 3, c / 9 % 3, c / 27};
      const int other = code(flip(w));
      const int size = static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
      canon[c] = std::min(c, other);
      if (c < other) reps.push_back({{size, c}, c});
    }
    std::sort(reps.begin(), reps.end());
    std::map<int, std::uint32_t> orbit_id;
    for (std::size_t i = 0; i < reps.size(); ++i) orbit_id[reps[i].second] = static_cast<std::uint32_t>(i);
    std::vector<Simplex> f;
    for (int signs = 0; signs < 16; ++signs) {
      std::array<int, 4> order{0, 1, 2, 3};
      do {
        std::array<int, 4> w{0, 0, 0, 0};
        Simplex t;
        for (int k = 0; k < 4; ++k) {
          w[order[k]] = (signs >> order[k] & 1) ? 2 : 1;
          t.push_back(orbit_id.at(canon.at(code(w))));
        }
        f.push_back(t);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    s.x = SimplicialComplex::from_facets(static_cast<std::uint32_t>(reps.size()), f);
  } else {
    throw CorpusError("projective space dimension must be 1, 2 or 3");
  }
  s.xi = IntegralCocycle(s.x);
  return s;
}

SimplicialComplex ordered_product(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::uint32_t nb = b.vertex_count();
  std::vector<Simplex> facets;
  for (const auto& sa : maximal_simplices(a))
    for (const auto& sb : maximal_simplices(b)) {
      const std::size_t p = sa.size() - 1, q = sb.size() - 1;
      // Lattice paths: choose which of the p + q steps advance in A.
      for (std::uint64_t mask = 0; mask < (1ull << (p + q)); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != p) continue;
        std::size_t i = 0, j = 0;
        Simplex t{sa[0] * nb + sb[0]};
        for (std::size_t k = 0; k < p + q; ++k) {
          if (mask >> k & 1) ++i;
          else ++j;
          t.push_back(sa[i] * nb + sb[j]);
        }
        facets.push_back(t);
      }
    }
  return SimplicialComplex::from_facets(a.vertex_count() * nb, facets);
}

NamedSpace product_with_circle(const NamedSpace& a) {
  const SimplicialComplex c = circle_complex();
  const IntegralCocycle theta(c, {{{0, 1}, 1}});
  const std::uint32_t na = a.x.vertex_count();
  NamedSpace s;
  s.name = "s1_x_" + a.name;
  s.x = ordered_product(c, a.x);
  auto to_c = [na](std::uint32_t v) { return v / na; };
  auto to_a = [na](std::uint32_t v) { return v % na; };
  s.xi = pullback(s.x, to_c, c, theta);
  s.classes.push_back({"theta", s.xi});
  for (const auto& [name, z] : a.classes)
    if (name != "theta") s.classes.push_back({name, pullback(s.x, to_a, a.x, z)});
  s.classes.push_back({"xi_base", pullback(s.x, to_a, a.x, a.xi)});
  for (std::uint32_t v = 0; v < na; ++v) s.cut_vertices.push_back(v);
  s.default_field = a.default_field;
  return s;
}

NamedSpace s1_x_sphere(int n) {
  if (n < 1 || n > 5) throw CorpusError("sphere dimension must be between 1 and 5");
  NamedSpace sphere;
  sphere.name = "sphere" + std::to_string(n);
  std::vector<Simplex> f;
  for (std::uint32_t skip = 0; skip <= static_cast<std::uint32_t>(n); ++skip) {
    Simplex t;
    for (std::uint32_t v = 0; v <= static_cast<std::uint32_t>(n); ++v)
      if (v != skip) t.push_back(v);
    f.push_back(t);
  }
  sphere.x = SimplicialComplex::from_facets(n + 1, f);
  sphere.xi = IntegralCocycle(sphere.x);
  NamedSpace s = product_with_circle(sphere);
  s.classes.pop_back();  // xi_base is zero
  s.name = sphere_name(n);
  return s;
}

NamedSpace connected_sum(const NamedSpace& a, const NamedSpace& b) {
  if (a.x.dim() != b.x.dim() || a.x.dim() < 2) throw CorpusError("connected sum needs equal dimensions >= 2");
  auto pick = [](const NamedSpace& s) {
    std::set<std::uint32_t> avoid(s.cut_vertices.begin(), s.cut_vertices.end());
    for (const auto& t : s.x.simplices(s.x.dim())) {
      if (std::any_of(t.begin(), t.end(), [&](auto v) { return avoid.count(v) > 0; })) continue;
      bool zero = true;
      for (std::size_t i = 0; i < t.size() && zero; ++i)
        for (std::size_t j = i + 1; j < t.size() && zero; ++j) {
          const std::size_t e = s.x.index_or_throw({t[i], t[j]});
          if (s.xi.at(e) != 0) zero = false;
          for (const auto& [n, z] : s.classes)
            if (z.at(e) != 0) zero = false;
        }
      if (zero) return t;
    }
    throw CorpusError("no top simplex of " + s.name + " avoids the classes");
  };
  const Simplex ta = pick(a), tb = pick(b);
  const std::uint32_t na = a.x.vertex_count();
  std::vector<std::uint32_t> relabel(b.x.vertex_count());
  std::uint32_t next = na;
  for (std::uint32_t v = 0; v < b.x.vertex_count(); ++v) {
    auto it = std::find(tb.begin(), tb.end(), v);
    relabel[v] = it != tb.end() ? ta[static_cast<std::size_t>(it - tb.begin())] : next++;
  }
  std::vector<Simplex> facets;
  for (const auto& t : maximal_simplices(a.x))
    if (t != ta) facets.push_back(t);
  for (const auto& t : maximal_simplices(b.x))
    if (t != tb) {
      Simplex m = map_simplex(relabel, t);
      std::sort(m.begin(), m.end());
      facets.push_back(m);
    }
  NamedSpace s;
  s.name = a.name + "#" + b.name;
  s.x = SimplicialComplex::from_facets(next, facets);
  if (s.x.euler_characteristic() != a.x.euler_characteristic() + b.x.euler_characteristic() -
                                        (a.x.dim() % 2 == 0 ? 2 : 0))
    throw CorpusError("connected sum produced an unexpected complex");
  // Extends classes by zero across the other summand; values on shared edges agree (both zero).
  auto extend = [&](const IntegralCocycle* za, const IntegralCocycle* zb) {
    IntegralCocycle z(s.x);
    for (std::size_t e = 0; e < s.x.count(1); ++e) {
      const auto& sv = s.x.simplex(1, e);
      long v = 0;
      if (za && sv[1] < na && a.x.contains(sv)) v += za->value(a.x, sv[0], sv[1]);
      if (zb) {
        std::vector<long> pre(2, -1);
        for (std::uint32_t w = 0; w < b.x.vertex_count(); ++w)
          for (int k = 0; k < 2; ++k)
            if (relabel[w] == sv[k]) pre[k] = w;
        if (pre[0] >= 0 && pre[1] >= 0) {
          const auto u = static_cast<std::uint32_t>(pre[0]), w = static_cast<std::uint32_t>(pre[1]);
          if (b.x.contains({std::min(u, w), std::max(u, w)})) v += zb->value(b.x, u, w);
        }
      }
      z.set(e, v);
    }
    return z;
  };
  s.xi = extend(&a.xi, &b.xi);
  std::set<std::string> names;
  for (const auto& [n, z] : a.classes) names.insert(n);
  for (const auto& [n, z] : b.classes) names.insert(n);
  for (const auto& n : names) {
    const IntegralCocycle* za = nullptr;
    const IntegralCocycle* zb = nullptr;
    for (const auto& [m, z] : a.classes)
      if (m == n) za = &z;
    for (const auto& [m, z] : b.classes)
      if (m == n) zb = &z;
    s.classes.push_back({n, extend(za, zb)});
  }
  if (!b.cut_vertices.empty()) {
    for (auto v : b.cut_vertices) s.cut_vertices.push_back(relabel[v]);
  } else {
    s.cut_vertices = a.cut_vertices;
  }
  std::sort(s.cut_vertices.begin(), s.cut_vertices.end());
  s.default_field = a.default_field;
  return s;
}

DualCurves dual_curve_cocycles(const NamedSpace& surface_space) {
  return {surface_space.cls("v1"), surface_space.cls("v2"), surface_space.xi};
}

NamedSpace build(const std::string& name) {
  auto suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) || rest.size() > 2)
      return std::nullopt;
    return std::stoi(rest);
  };
  if (name == "circle") return circle();
  if (name == "rp2_handle" || name == "rp3_handle") {
    const int n = name[2] - '0';
    NamedSpace s = connected_sum(rp(n), s1_x_sphere(n));
    s.name = name;
    s.default_field = "2^2";
    if (n == 3) s.bundles = {{"E", 3, 0, 1}};
    return s;
  }
  if (name == "s1_x_surface2" || name == "s1_x_surface2_prime") {
    NamedSpace s = product_with_circle(surface(2));
    s.name = name;
    if (name == "s1_x_surface2_prime") {
      const IntegralCocycle theta = s.xi;
      s.xi = s.cls("xi_base");
      s.classes.erase(std::remove_if(s.classes.begin(), s.classes.end(), [](const auto& c) { return c.first == "xi_base"; }),
                      s.classes.end());
      // Cut along the surface's own curve, crossed with the circle.
      NamedSpace base = surface(2);
      const std::uint32_t nb = base.x.vertex_count();
      s.cut_vertices.clear();
      for (std::uint32_t c = 0; c < 3; ++c)
        for (auto v : base.cut_vertices) s.cut_vertices.push_back(c * nb + v);
      std::sort(s.cut_vertices.begin(), s.cut_vertices.end());
      s.bundles = {{"E1", 0, 2, 1}, {"E2", 0, 2, -1}};
    }
    return s;
  }
  if (auto n = suffix("torus")) return torus(*n);
  if (auto g = suffix("surface")) return surface(*g);
  if (auto n = suffix("rp")) return rp(*n);
  if (auto n = suffix("s1_x_sphere")) return s1_x_sphere(*n);
  throw CorpusError("unknown example " + name);
}

std::vector<std::string> corpus_names() {
  return {"circle", "torus2", "torus3", "surface2", "rp2", "rp3", "s1_x_sphere2", "s1_x_sphere3", "rp3_handle",
          "s1_x_surface2", "s1_x_surface2_prime"};
}

FlatBundle realize(const BundleRecipe& r, const NamedSpace& s, const FieldSpec& f) {
  FieldElem a;
  if (r.root_order > 0) {
    auto root = root_of_unity(f, r.root_order);
    if (!root) throw CorpusError("bundle " + r.name + " needs a root of unity of order " + std::to_string(r.root_order) +
                                 " which the field " + f.name() + " lacks");
    a = *root;
  } else {
    a = f.from_int(r.generic_value);
    if (a.is_zero()) throw CorpusError("bundle parameter vanishes in field " + f.name());
  }
  FlatBundle b = FlatBundle::power(s.x, a.pow(r.exponent), s.xi);
  b.set_name(r.name);
  return b;
}

}  // namespace novcup
