#include "novcup/cli/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "novcup/cuplen/cuplen.hpp"
#include "novcup/massey/massey.hpp"

namespace novcup {

namespace {

FieldElem random_elem(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_finite()) return f.from_code(rng() % *f.order());
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  return f.from_rational(mpq_class(num(rng), den(rng)));
}

FieldElem random_nonzero(const FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    FieldElem a = random_elem(f, rng);
    if (!a.is_zero()) return a;
  }
}

Vec random_vec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_elem(f, rng));
  return v;
}

std::vector<std::size_t> betti(const TwistedComplex& c) {
  std::vector<std::size_t> b;
  for (int q = 0; q <= c.top(); ++q) b.push_back(c.betti(q));
  return b;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string page_str(const SpectralPage& p) {
  return "E" + std::to_string(p.r) + " dims " + join(p.dims) + " ranks " + join(p.ranks);
}

Vec as_vec(const FieldSpec& f, const IntegralCocycle& z) {
  Vec v;
  for (std::size_t e = 0; e < z.size(); ++e) v.push_back(f.from_int(z.at(e)));
  return v;
}

CheckResult fail(CheckResult r, const std::string& why) {
  r.ok = false;
  if (r.detail.empty()) r.detail = why;
  return r;
}

}  // namespace

RandomSpace random_two_complex(std::mt19937_64& rng, std::size_t max_simplices) {
  RandomSpace out;
  const std::uint32_t n = 6 + static_cast<std::uint32_t>(rng() % 9);
  std::vector<int> label(n);
  for (std::uint32_t v = 0; v < n; ++v) label[v] = v < 4 ? static_cast<int>(v) : static_cast<int>(rng() % 4);
  auto close = [&](std::uint32_t u, std::uint32_t v) {
    const int d = ((label[v] - label[u]) % 4 + 4) % 4;
    return d != 2;
  };
  std::vector<Simplex> triangles, edges;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (!close(a, b)) continue;
      edges.push_back({a, b});
      for (std::uint32_t c = b + 1; c < n; ++c) {
        // Labels of a triangle must sit in an arc of length one.
        std::set<int> ls{label[a], label[b], label[c]};
        if (ls.size() <= 2 && close(a, c) && close(b, c)) triangles.push_back({a, b, c});
      }
    }
  std::shuffle(triangles.begin(), triangles.end(), rng);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::set<Simplex> have;
  for (std::uint32_t v = 0; v < n; ++v) have.insert({v});
  std::vector<Simplex> facets;
  auto add = [&](const Simplex& s) {
    std::vector<Simplex> fresh;
    const std::size_t k = s.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      if (!have.count(f)) fresh.push_back(f);
    }
    if (have.size() + fresh.size() > max_simplices) return;
    have.insert(fresh.begin(), fresh.end());
    facets.push_back(s);
  };
  const std::size_t n_tri = triangles.size() / 2 + 1;
  for (std::size_t i = 0; i < std::min(n_tri, triangles.size()); ++i) add(triangles[i]);
  for (std::size_t i = 0; i < std::min<std::size_t>(4, edges.size()); ++i) add(edges[i]);
  for (std::uint32_t v = 0; v < n; ++v) facets.push_back({v});
  out.x = SimplicialComplex::from_facets(n, facets);
  const long scale = 1 + static_cast<long>(rng() % 3);
  out.z = IntegralCocycle(out.x);
  for (std::size_t e = 0; e < out.x.count(1); ++e) {
    const auto& s = out.x.simplex(1, e);
    const int d = ((label[s[1]] - label[s[0]]) % 4 + 4) % 4;
    out.z.set(e, scale * (d == 0 ? 0 : d == 1 ? 1 : -1));
  }
  static const char* fields[] = {"Q", "2", "3", "5"};
  out.field = &FieldSpec::parse(fields[rng() % 4]);
  out.label = "random(n=" + std::to_string(n) + ", simplices=" + std::to_string(out.x.total_simplices()) +
              ", scale=" + std::to_string(scale) + ", k=" + out.field->name() + ")";
  return out;
}

CheckResult check_pages(const std::string& label, const SimplicialComplex& x, const IntegralCocycle& z,
                        const FieldSpec& f) {
  CheckResult r{"pages " + label, true, ""};
  const ParamComplex mc = massey_complex(x, z, FlatBundle::trivial(x, f));
  const auto mods = cohomology_modules(mc);
  const int n = stabilization_page(mods) + 1;
  const auto formula = pages_from_modules(mods, n);
  ChainLevelSS ss(taylor_at_one(mc, n + 1), n);
  const auto& chain = ss.pages();
  if (chain.size() != formula.size()) return fail(r, "page counts differ");
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (!(chain[i] == formula[i])) return fail(r, "formula " + page_str(formula[i]) + " vs chain " + page_str(chain[i]));
  r.detail = std::to_string(n) + " pages";
  return r;
}

CheckResult check_uct(const std::string& label, const SimplicialComplex& x, const IntegralCocycle& z,
                      const FieldSpec& f, std::mt19937_64& rng, int samples) {
  CheckResult r{"uct " + label, true, ""};
  const FlatBundle k = FlatBundle::trivial(x, f);
  const auto mods = cohomology_modules(lambda_complex(x, z, k));
  std::vector<FieldElem> points{f.one()};
  while (static_cast<int>(points.size()) < samples) points.push_back(random_nonzero(f, rng));
  for (const auto& a : points) {
    const auto predicted = dims_at(mods, a);
    const auto direct = betti(twisted_complex(x, FlatBundle::power(x, a, z)));
    if (predicted != direct) return fail(r, "a = " + a.str() + ": " + join(predicted) + " vs " + join(direct));
  }
  r.detail = std::to_string(points.size()) + " points";
  return r;
}

CheckResult check_cut(const NamedSpace& s, const FieldSpec& f, std::mt19937_64& rng, int samples) {
  CheckResult r{"cut " + s.name + " over " + f.name(), true, ""};
  auto res = cut_along(s.x, s.cut_vertices, FlatBundle::trivial(s.x, f));
  if (!is_integral_coboundary(s.x, res.dual + s.xi.negated()) && !is_integral_coboundary(s.x, res.dual + s.xi))
    return fail(r, "cut is not dual to xi");
  const auto dc = deformation_complex(res.cut);
  std::vector<FieldElem> points{f.one()};
  while (static_cast<int>(points.size()) < samples + 1) points.push_back(random_nonzero(f, rng));
  for (const auto& a : points) {
    const auto deformed = betti(evaluate(dc, a));
    const auto direct = betti(twisted_complex(s.x, FlatBundle::power(s.x, a.inverse(), res.dual)));
    if (deformed != direct) return fail(r, "a = " + a.str() + ": " + join(deformed) + " vs " + join(direct));
  }
  const auto at_zero = betti(evaluate(dc, f.zero()));
  const auto relative = betti(relative_complex(res.cut));
  if (at_zero != relative) return fail(r, "a = 0: " + join(at_zero) + " vs relative " + join(relative));
  r.detail = std::to_string(points.size()) + " points and a = 0";
  return r;
}

CheckResult check_leibniz(const NamedSpace& s, const FieldSpec& f, std::mt19937_64& rng, int pairs) {
  CheckResult r{"leibniz " + s.name + " over " + f.name(), true, ""};
  const auto cut = cut_along(s.x, s.cut_vertices, FlatBundle::trivial(s.x, f)).cut;
  const auto dc = deformation_complex(cut);
  const auto dcp = deformation_complex(tensor_cut(cut, cut));
  FieldElem t = f.from_int(2);
  if ((f.one() + t).is_zero() || t.is_zero()) t = f.from_int(3);
  const FieldElem tau = f.one() + t;
  const auto d_t = evaluate(dc, tau), d_t2 = evaluate(dc, tau.inverse()), d_0 = evaluate(dcp, f.one());
  const int top = dc.complex.top();
  for (int i = 0; i < pairs; ++i) {
    const int q = static_cast<int>(rng() % top), q2 = static_cast<int>(rng() % (top - q));
    const Vec a = random_vec(f, dc.complex.dim(q), rng), b = random_vec(f, dc.complex.dim(q2), rng);
    const CutCochain c = unflatten(dc, q, a), c2 = unflatten(dc, q2, b);
    const Vec lhs = d_0.d(q + q2).apply(flatten(psi_product(cut, cut, c, c2, t)));
    const Vec r1 = flatten(psi_product(cut, cut, unflatten(dc, q + 1, d_t.d(q).apply(a)), c2, t));
    const Vec r2 = flatten(psi_product(cut, cut, c, unflatten(dc, q2 + 1, d_t2.d(q2).apply(b)), t));
    if (lhs != (q % 2 ? r1 - r2 : r1 + r2))
      return fail(r, "pair " + std::to_string(i) + " in degrees " + std::to_string(q) + "," + std::to_string(q2));
  }
  r.detail = std::to_string(pairs) + " pairs, t = " + t.str();
  return r;
}

CheckResult check_survivors(const NamedSpace& s, const FieldSpec& f) {
  CheckResult r{"survivors " + s.name + " over " + f.name(), true, ""};
  const FlatBundle k = FlatBundle::trivial(s.x, f);
  const auto mods = cohomology_modules(massey_complex(s.x, s.xi, k));
  const auto pages = pages_from_modules(mods);
  const auto& last = pages.back().dims;
  const auto all = all_survivors(s.x, s.xi, k);
  const Vec xi = as_vec(f, s.xi);
  const auto tc = twisted_complex(s.x, k);
  std::vector<std::size_t> free, surv;
  for (const auto& m : mods) free.push_back(m.free_rank);
  if (free != last) return fail(r, "E_inf " + join(last) + " vs free ranks " + join(free));
  for (const auto& b : all) {
    surv.push_back(b.classes.size());
    if (b.degree + 1 > tc.top()) continue;
    const auto h = tc.cohomology(b.degree + 1);
    for (const auto& rep : b.reps)
      if (!h.is_coboundary(cup(s.x, k, b.degree, rep, k, 1, xi)))
        return fail(r, "a degree " + std::to_string(b.degree) + " survivor has v u xi != 0");
  }
  r.detail = "E_inf " + join(last) + ", survivors " + join(surv);
  return r;
}

CheckResult check_classical(const NamedSpace& s, const FieldSpec& f) {
  CheckResult r{"classical cup-length " + s.name + " over " + f.name(), true, ""};
  const auto rep = cuplength_massey(s.x, IntegralCocycle(s.x), f, {});
  const int naive = naive_cup_length(s.x, f);
  if (rep.m != naive + 2 || !rep.verified)
    return fail(r, "m = " + std::to_string(rep.m) + ", naive = " + std::to_string(naive));
  r.detail = "m = " + std::to_string(rep.m);
  return r;
}

std::vector<CheckResult> selftest_suite(std::uint64_t seed, int randoms) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  for (const auto& name : corpus_names()) {
    const NamedSpace s = build(name);
    const FieldSpec& f = FieldSpec::parse(s.default_field);
    guarded("pages " + name, [&] { return check_pages(name, s.x, s.xi, f); });
    guarded("uct " + name, [&] { return check_uct(name, s.x, s.xi, f, rng); });
    guarded("survivors " + name, [&] { return check_survivors(s, f); });
    if (name == "circle" || name == "torus2" || name == "surface2")
      for (const FieldSpec* k : {&FieldSpec::prime(5), &FieldSpec::rationals()}) {
        guarded("cut " + name, [&] { return check_cut(s, *k, rng); });
        guarded("leibniz " + name, [&] { return check_leibniz(s, *k, rng); });
      }
    if (name == "circle" || name == "torus2" || name == "rp2" || name == "s1_x_sphere3")
      guarded("classical " + name, [&] { return check_classical(s, f); });
  }
  for (int i = 0; i < randoms; ++i) {
    const RandomSpace rs = random_two_complex(rng);
    guarded("pages " + rs.label, [&] { return check_pages(rs.label, rs.x, rs.z, *rs.field); });
    guarded("uct " + rs.label, [&] { return check_uct(rs.label, rs.x, rs.z, *rs.field, rng); });
  }
  return out;
}

}  // namespace novcup
