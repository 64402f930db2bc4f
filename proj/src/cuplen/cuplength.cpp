#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>

#include "novcup/cuplen/cuplen.hpp"
#include "novcup/massey/massey.hpp"

namespace novcup {

namespace {

struct Factor {
  int bundle = 0;  // index into Search::bundles
  int degree = 0;
  Vec cocycle;
};

struct Element {
  Vec cocycle;
  std::vector<Factor> factors;
};

struct Entry {
  FlatBundle bundle;
  Subspace span;
  std::vector<Element> basis;
};

using Level = std::map<std::pair<std::string, int>, Entry>;

// Span iteration W_{j+1} = W_j u H^{>0}(X; E_i) keyed by (bundle word, degree).
class Search {
 public:
  Search(const SimplicialComplex& x, const FieldSpec& f) : x_(x), f_(f) {}

  int add_bundle(const std::string& name, const FlatBundle& b) {
    bundles.push_back({name, b});
    return static_cast<int>(bundles.size()) - 1;
  }

  const CohomologySpace& cohomology(const std::string& key, const FlatBundle& b, int q) {
    auto& slot = h_[{key, q}];
    if (!slot) {
      auto it = complexes_.find(key);
      if (it == complexes_.end()) it = complexes_.emplace(key, twisted_complex(x_, b)).first;
      slot = std::make_unique<CohomologySpace>(it->second.cohomology(q));
    }
    return *slot;
  }

  bool add(Level& lvl, const std::string& key, const FlatBundle& b, int q, Element e) {
    const CohomologySpace& h = cohomology(key, b, q);
    const Vec c = h.coords(e.cocycle);
    auto it = lvl.find({key, q});
    if (it == lvl.end()) it = lvl.emplace(std::make_pair(key, q), Entry{b, Subspace(f_, h.dim()), {}}).first;
    if (!it->second.span.add(c)) return false;
    it->second.basis.push_back(std::move(e));
    return true;
  }

  /// Returns the number of successful extensions and the last nonempty level.
  std::pair<int, Level> run(Level w, const std::vector<int>& multipliers) {
    std::vector<std::vector<std::pair<int, Vec>>> classes;
    for (int m : multipliers) {
      const auto& [name, b] = bundles[m];
      std::vector<std::pair<int, Vec>> reps;
      for (int d = 1; d <= x_.dim(); ++d)
        for (const auto& r : cohomology(name, b, d).reps()) reps.push_back({d, r});
      classes.push_back(std::move(reps));
    }
    int steps = 0;
    for (;;) {
      Level next;
      for (const auto& [kd, entry] : w) {
        const auto& [key, q] = kd;
        for (const auto& e : entry.basis)
          for (std::size_t i = 0; i < multipliers.size(); ++i) {
            const auto& [mname, mb] = bundles[multipliers[i]];
            const bool trivial = mb.is_trivial() && mb.rank() == 1;
            const std::string nkey = trivial ? key : key + "*" + mname;
            const FlatBundle nb = trivial ? entry.bundle : entry.bundle.tensor(mb);
            for (const auto& [d, rep] : classes[i]) {
              if (q + d > x_.dim()) continue;
              Element ne{cup(x_, entry.bundle, q, e.cocycle, mb, d, rep), e.factors};
              ne.factors.push_back({multipliers[i], d, rep});
              add(next, nkey, nb, q + d, std::move(ne));
            }
          }
      }
      if (!nonempty(next)) break;
      w = std::move(next);
      ++steps;
    }
    return {steps, std::move(w)};
  }

  static bool nonempty(const Level& l) {
    for (const auto& [k, e] : l)
      if (!e.basis.empty()) return true;
    return false;
  }

  // Recomputes the product from the factors and checks it is not a coboundary via a direct solve.
  bool verify(const Element& e, const std::string& key) const {
    (void)key;
    FlatBundle b = bundles[e.factors[0].bundle].second;
    Vec p = e.factors[0].cocycle;
    int q = e.factors[0].degree;
    for (std::size_t i = 1; i < e.factors.size(); ++i) {
      const FlatBundle& fb = bundles[e.factors[i].bundle].second;
      p = cup(x_, b, q, p, fb, e.factors[i].degree, e.factors[i].cocycle);
      b = (fb.is_trivial() && fb.rank() == 1) ? b : b.tensor(fb);
      q += e.factors[i].degree;
    }
    if (p != e.cocycle) return false;
    const TwistedComplex c = twisted_complex(x_, b);
    if (!is_zero_vec(c.d(q).apply(p))) return false;
    if (q == 0) return !is_zero_vec(p);
    return !solve(c.d(q - 1), p).has_value();
  }

  std::vector<std::pair<std::string, FlatBundle>> bundles;

 private:
  const SimplicialComplex& x_;
  const FieldSpec& f_;
  std::map<std::string, TwistedComplex> complexes_;
  std::map<std::pair<std::string, int>, std::unique_ptr<CohomologySpace>> h_;
};

void fill_witness(CupLengthReport& rep, const Search& s, const Level& last) {
  for (const auto& [kd, entry] : last) {
    if (entry.basis.empty()) continue;
    const Element& e = entry.basis.front();
    for (const auto& f : e.factors) rep.witness.push_back({f.degree, s.bundles[f.bundle].first, f.cocycle});
    rep.product_bundle = kd.first;
    rep.product_degree = kd.second;
    rep.verified = s.verify(e, kd.first);
    return;
  }
}

std::vector<int> multiplier_list(Search& s, const FieldSpec& f, const SimplicialComplex& x,
                                 const std::vector<FlatBundle>& extras) {
  std::vector<int> out{s.add_bundle("k", FlatBundle::trivial(x, f))};
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string name = extras[i].name().empty() ? "B" + std::to_string(i + 1) : extras[i].name();
    for (const auto& [n, b] : s.bundles)
      if (n == name) name += "'" + std::to_string(i + 1);
    if (name == "E1" || name == "E2") name += "'" + std::to_string(i + 1);
    out.push_back(s.add_bundle(name, extras[i]));
  }
  return out;
}

void finish(CupLengthReport& rep, const SimplicialComplex& x, const IntegralCocycle& z, bool nonempty_w2, int steps) {
  rep.dim_x = x.dim();
  rep.xi_nonzero = !is_integral_coboundary(x, z);
  rep.has_bound = nonempty_w2;
  rep.m = nonempty_w2 ? 2 + steps : 0;
  rep.critical_bound = std::max(rep.m - 1, 0);
}

// Lifts the class of v in H^p(X; E) to a cocycle of C^p(X; T^(s z) (x) E) over Lambda.
std::vector<LaurentPoly> lambda_lift(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& e, int s,
                                     int p, const Vec& v) {
  const FieldSpec& f = e.field();
  const ParamComplex lc = lambda_complex(x, z, e, s);
  const std::size_t n = lc.dim(p);
  std::vector<std::vector<LaurentPoly>> kernel;
  if (p < lc.top()) {
    const SnfResult res = snf(lc.d(p), Ring::laurent, {false, true});
    const LaurentMatrix& vm = *res.v;
    std::vector<std::vector<LaurentPoly>> cols(n - res.rank, std::vector<LaurentPoly>(n, LaurentPoly(f)));
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [j, val] : vm.row(i))
        if (j >= res.rank) cols[j - res.rank][i] = val;
    kernel = std::move(cols);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<LaurentPoly> col(n, LaurentPoly(f));
      col[j] = LaurentPoly::constant(f.one());
      kernel.push_back(std::move(col));
    }
  }
  const TwistedComplex at_one = lc.evaluate(f.one());
  const CohomologySpace h = at_one.cohomology(p);
  Subspace span(f, h.dim());
  std::vector<std::size_t> used;
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    Vec k1;
    for (const auto& c : kernel[j]) k1.push_back(c.eval(f.one()));
    if (span.add(h.coords(k1))) used.push_back(j);
  }
  const auto coeffs = span.coefficients(h.coords(v));
  if (!coeffs) throw std::logic_error("class does not lift over the Novikov ring");
  std::vector<LaurentPoly> out(n, LaurentPoly(f));
  for (std::size_t i = 0; i < used.size(); ++i) {
    const FieldElem& c = (*coeffs)[i];
    if (c.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) out[r] += kernel[used[i]][r].scaled(c);
  }
  return out;
}

void add_jump_roots(const ParamComplex& c, std::vector<FieldElem>& roots, std::vector<Poly>& residual) {
  for (const auto& m : cohomology_modules(c))
    for (const auto& p : m.invariant_factors) {
      auto rf = poly_roots(p);
      for (const auto& [a, k] : rf.roots) roots.push_back(a);
      if (rf.residual.degree() > 0) residual.push_back(rf.residual);
    }
}

}  // namespace

CupLengthReport cuplength_massey(const SimplicialComplex& x, const IntegralCocycle& z, const FieldSpec& f,
                                 const std::vector<FlatBundle>& extra_bundles, CupOptions opts) {
  CupLengthReport rep;
  rep.mode = CupLengthReport::Mode::massey;
  rep.strict_dual = opts.strict_dual;
  const FlatBundle triv = FlatBundle::trivial(x, f);
  const auto s1 = all_survivors(x, z, triv);
  const auto s2 = opts.strict_dual ? all_survivors(x, z.negated(), triv) : s1;
  for (const auto& s : s1) rep.survivor_dims.push_back(s.classes.size());
  for (const auto& s : s2) rep.second_survivor_dims.push_back(s.classes.size());

  Search search(x, f);
  const std::vector<int> mult = multiplier_list(search, f, x, extra_bundles);
  const int k = mult[0];
  Level w2;
  for (const auto& a : s1)
    for (const auto& ra : a.reps)
      for (const auto& b : s2)
        for (const auto& rb : b.reps) {
          if (a.degree + b.degree > x.dim()) continue;
          Element e{cup(x, triv, a.degree, ra, triv, b.degree, rb), {{k, a.degree, ra}, {k, b.degree, rb}}};
          search.add(w2, "k", triv, a.degree + b.degree, std::move(e));
        }
  const bool nonempty = Search::nonempty(w2);
  auto [steps, last] = search.run(std::move(w2), mult);
  finish(rep, x, z, nonempty, steps);
  if (nonempty) fill_witness(rep, search, last);
  return rep;
}

CupLengthReport cuplength_generic(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& e1,
                                  const FlatBundle& e2, const std::vector<FlatBundle>& extra_bundles) {
  const FieldSpec& f = e1.field();
  if (&e2.field() != &f) throw ComplexError("cup-length: bundles over different fields");
  for (const auto& [b, sign, name] : {std::tuple{&e1, 1, "E1"}, std::tuple{&e2, -1, "E2"}}) {
    const auto g = xi_generic_test(x, sign > 0 ? z : z.negated(), *b);
    if (!g.generic)
      throw CupLengthError(std::string(name) + " is not xi-generic: T = 1 is a root of " + g.witness->factor.str() +
                               " in degree " + std::to_string(g.witness->degree),
                           name, g.witness->degree, g.witness->factor);
  }
  CupLengthReport rep;
  rep.mode = CupLengthReport::Mode::generic;
  Search search(x, f);
  const std::vector<int> mult = multiplier_list(search, f, x, extra_bundles);
  const int i1 = search.add_bundle("E1", e1), i2 = search.add_bundle("E2", e2);
  const TwistedComplex c1 = twisted_complex(x, e1), c2 = twisted_complex(x, e2);
  const FlatBundle e12 = e1.tensor(e2);
  Level w2;
  for (int p = 0; p <= x.dim(); ++p) {
    const CohomologySpace h1 = c1.cohomology(p);
    rep.survivor_dims.push_back(h1.dim());
    rep.second_survivor_dims.push_back(c2.betti(p));
    for (int q = 0; p + q <= x.dim(); ++q) {
      const CohomologySpace h2 = c2.cohomology(q);
      for (const auto& a : h1.reps())
        for (const auto& b : h2.reps()) {
          Element e{cup(x, e1, p, a, e2, q, b), {{i1, p, a}, {i2, q, b}}};
          search.add(w2, "E1*E2", e12, p + q, std::move(e));
        }
    }
  }
  const bool nonempty = Search::nonempty(w2);
  auto [steps, last] = search.run(std::move(w2), mult);
  finish(rep, x, z, nonempty, steps);
  if (!nonempty) return rep;
  fill_witness(rep, search, last);

  // The witness over Lambda: lifts of the first two factors, constant factors after.
  const auto& w = rep.witness;
  std::vector<LaurentPoly> prod = cup(x, e1.rank(), w[0].degree, lambda_lift(x, z, e1, 1, w[0].degree, w[0].cocycle),
                                      e2, z, -1, w[1].degree, lambda_lift(x, z.negated(), e2, 1, w[1].degree, w[1].cocycle));
  std::size_t rank = e1.rank() * e2.rank();
  FlatBundle b = e12;
  int q = w[0].degree + w[1].degree;
  const IntegralCocycle zero(x);
  for (std::size_t i = 2; i < w.size(); ++i) {
    const FlatBundle* fb = nullptr;
    for (const auto& [n, bb] : search.bundles)
      if (n == w[i].bundle) fb = &bb;
    std::vector<LaurentPoly> h;
    for (const auto& c : w[i].cocycle) h.push_back(LaurentPoly::constant(c));
    prod = cup(x, rank, q, prod, *fb, zero, 0, w[i].degree, h);
    rank *= fb->rank();
    if (!(fb->is_trivial() && fb->rank() == 1)) b = b.tensor(*fb);
    q += w[i].degree;
  }
  const CohomologySpace h = twisted_complex(x, b).cohomology(q);
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& p : prod)
    if (!p.is_zero()) {
      lo = any ? std::min(lo, p.valuation()) : p.valuation();
      hi = any ? std::max(hi, p.top()) : p.top();
      any = true;
    }
  std::vector<LaurentPoly> coords(h.dim(), LaurentPoly(f));
  for (int k = lo; any && k <= hi; ++k) {
    Vec ck;
    for (const auto& p : prod) ck.push_back(p.coeff(k));
    const Vec c = h.coords(ck);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) coords[i] += LaurentPoly::monomial(c[i], k);
  }
  Poly g(f);
  for (const auto& c : coords)
    if (!c.is_zero()) g = poly_gcd(g, laurent_normalize(c).normalized);
  if (g.is_zero() || g.eval(f.one()).is_zero())
    throw std::logic_error("lifted witness vanishes at T = 1");
  auto rf = poly_roots(g);
  for (const auto& [a, k] : rf.roots) rep.excluded_roots.push_back(a);
  if (rf.residual.degree() > 0) rep.excluded_factors.push_back(rf.residual);
  add_jump_roots(lambda_complex(x, z, e1, 1), rep.excluded_roots, rep.excluded_factors);
  add_jump_roots(lambda_complex(x, z, e2, -1), rep.excluded_roots, rep.excluded_factors);
  std::sort(rep.excluded_roots.begin(), rep.excluded_roots.end());
  rep.excluded_roots.erase(std::unique(rep.excluded_roots.begin(), rep.excluded_roots.end()), rep.excluded_roots.end());
  std::sort(rep.excluded_factors.begin(), rep.excluded_factors.end(),
            [](const Poly& a, const Poly& b) { return a.str() < b.str(); });
  rep.excluded_factors.erase(std::unique(rep.excluded_factors.begin(), rep.excluded_factors.end()),
                             rep.excluded_factors.end());
  return rep;
}

int naive_cup_length(const SimplicialComplex& x, const FieldSpec& f) {
  const FlatBundle k = FlatBundle::trivial(x, f);
  const TwistedComplex c = twisted_complex(x, k);
  std::vector<CohomologySpace> h;
  std::vector<std::pair<int, Vec>> basis;
  for (int q = 0; q <= x.dim(); ++q) {
    h.push_back(c.cohomology(q));
    if (q > 0)
      for (const auto& r : h.back().reps()) basis.push_back({q, r});
  }
  int best = 0;
  std::function<void(int, const Vec&, int)> grow = [&](int q, const Vec& p, int len) {
    best = std::max(best, len);
    for (const auto& [d, r] : basis) {
      if (q + d > x.dim()) continue;
      Vec n = cup(x, k, q, p, k, d, r);
      if (!h[q + d].is_coboundary(n)) grow(q + d, n, len + 1);
    }
  };
  for (const auto& [d, r] : basis) grow(d, r, 1);
  return best;
}

}  // namespace novcup
