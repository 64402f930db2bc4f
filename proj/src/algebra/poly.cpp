#include "novcup/algebra/poly.hpp"

#include <algorithm>
#include <sstream>

namespace novcup {

Poly::Poly(const FieldSpec& f, std::vector<FieldElem> coeffs) : f_(&f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (&c.field() != f_) throw AlgebraError("polynomial coefficient from a different field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const FieldElem& c, unsigned k) {
  std::vector<FieldElem> v(k + 1, c.field().zero());
  v[k] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear_root(const FieldElem& a) { return Poly(a.field(), {-a, a.field().one()}); }

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }

FieldElem Poly::lead() const {
  if (c_.empty()) return f_->zero();
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  if (!f_) return o;
  if (!o.f_) return *this;
  std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(*f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (!f_) return *this;
  if (c_.empty() || o.c_.empty()) return Poly(*f_);
  std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, f_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(*f_, std::move(r));
}

Poly Poly::scaled(const FieldElem& c) const {
  Poly r = *this;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

Poly Poly::shifted(unsigned k) const {
  if (c_.empty()) return *this;
  Poly r(*f_);
  r.c_.assign(k, f_->zero());
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(f_->one()), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

FieldElem Poly::eval(const FieldElem& a) const {
  FieldElem acc = f_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

Poly Poly::taylor_shift(const FieldElem& c) const {
  // Horner in the ring: p(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) + ...).
  Poly xc(*f_, {c, f_->one()});
  Poly acc(*f_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * xc + constant(c_[i]);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].str();
    bool negative = false;
    if (!f_->is_finite() && coef[0] == '-') {
      negative = true;
      coef = coef.substr(1);
    }
    const bool compound = f_->kind() == FieldKind::extension && coef.find('+') != std::string::npos;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    if (i == 0) {
      out += compound ? "(" + coef + ")" : coef;
      continue;
    }
    if (coef != "1") out += compound ? "(" + coef + ")" : coef;
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw AlgebraError("polynomial division by zero");
  const FieldSpec& f = b.field();
  std::vector<FieldElem> r = a.coeffs();
  const int db = b.degree();
  if (static_cast<int>(r.size()) - 1 < db) return {Poly(f), a.valid() ? a : Poly(f)};
  std::vector<FieldElem> q(r.size() - db, f.zero());
  const FieldElem lead_inv = b.lead().inverse();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i].is_zero()) continue;
    const FieldElem c = r[i] * lead_inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XgcdResult poly_xgcd(const Poly& a, const Poly& b) {
  const FieldSpec& f = a.valid() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElem inv = r0.lead().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

int root_multiplicity(const Poly& f, const FieldElem& a) {
  if (f.is_zero()) throw AlgebraError("root multiplicity of the zero polynomial");
  const Poly lin = Poly::linear_root(a);
  Poly g = f;
  int e = 0;
  while (g.degree() >= 1) {
    auto [q, r] = poly_divmod(g, lin);
    if (!r.is_zero()) break;
    g = std::move(q);
    ++e;
  }
  return e;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<FieldElem> candidate_roots(const Poly& f) {
  const FieldSpec& k = f.field();
  std::vector<FieldElem> out;
  if (k.is_finite()) {
    if (*k.order() > (1ull << 24)) throw AlgebraError("root finding is limited to fields with at most 2^24 elements");
    for (std::uint64_t c = 0; c < *k.order(); ++c) out.push_back(k.from_code(c));
    return out;
  }
  // Rational root theorem on the integer multiple of f.
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) ints.push_back(mpz_class(c.rational().get_num() * (lcm_den / c.rational().get_den())));
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  out.push_back(k.zero());
  const mpz_class a0 = ints[low], an = ints.back();
  const mpz_class limit("1000000000000");
  if (abs(a0) > limit || abs(an) > limit) return out;
  for (const auto& p : positive_divisors(a0))
    for (const auto& q : positive_divisors(an)) {
      mpq_class r(p, q);
      r.canonicalize();
      out.push_back(k.from_rational(r));
      out.push_back(k.from_rational(-r));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RootFactorization poly_roots(const Poly& f) {
  if (f.is_zero()) throw AlgebraError("roots of the zero polynomial");
  RootFactorization out;
  Poly g = f.monic();
  for (const auto& a : candidate_roots(f)) {
    if (g.degree() < 1) break;
    const int e = root_multiplicity(g, a);
    if (e == 0) continue;
    out.roots.emplace_back(a, e);
    g = poly_divmod(g, Poly::linear_root(a).pow(static_cast<unsigned>(e))).first;
  }
  out.residual = g.monic();
  return out;
}

std::vector<std::pair<int, Poly>> distinct_degree_factors(const Poly& f) {
  const FieldSpec& k = f.field();
  if (!k.is_finite()) throw AlgebraError("distinct-degree factorization needs a finite field");
  std::vector<std::pair<int, Poly>> out;
  Poly rest = f.monic();
  const Poly x = Poly::monomial(k.one(), 1);
  Poly h = x;
  const std::uint64_t q = *k.order();
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    // h <- h^q mod rest
    Poly acc = Poly::constant(k.one()), base = h;
    for (std::uint64_t e = q; e; e >>= 1) {
      if (e & 1) acc = poly_divmod(acc * base, rest).second;
      base = poly_divmod(base * base, rest).second;
    }
    h = acc;
    Poly g = poly_gcd(rest, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = poly_divmod(rest, g).first;
      h = poly_divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(Poly body, int val) : body_(std::move(body)), val_(val) { normalize(); }

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    val_ = 0;
    return;
  }
  std::size_t low = 0;
  const auto& c = body_.coeffs();
  while (c[low].is_zero()) ++low;
  if (low == 0) return;
  body_ = Poly(body_.field(), std::vector<FieldElem>(c.begin() + static_cast<std::ptrdiff_t>(low), c.end()));
  val_ += static_cast<int>(low);
}

LaurentPoly LaurentPoly::monomial(const FieldElem& c, int k) { return LaurentPoly(Poly::constant(c), k); }

FieldElem LaurentPoly::coeff(int k) const {
  if (k < val_) return body_.field().zero();
  return body_.coeff(static_cast<std::size_t>(k - val_));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int v = std::min(val_, o.val_);
  Poly a = body_.shifted(static_cast<unsigned>(val_ - v));
  Poly b = o.body_.shifted(static_cast<unsigned>(o.val_ - v));
  return LaurentPoly(a + b, v);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  r.body_ = -r.body_;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  return LaurentPoly(body_ * o.body_, val_ + o.val_);
}

LaurentPoly LaurentPoly::scaled(const FieldElem& c) const { return LaurentPoly(body_.scaled(c), val_); }

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw AlgebraError("Laurent polynomial is not a unit");
  return monomial(body_.lead().inverse(), -val_);
}

LaurentPoly LaurentPoly::inverted_variable() const {
  if (is_zero()) return *this;
  std::vector<FieldElem> c(body_.coeffs().rbegin(), body_.coeffs().rend());
  return LaurentPoly(Poly(body_.field(), std::move(c)), -top());
}

FieldElem LaurentPoly::eval(const FieldElem& a) const {
  if (is_zero()) return body_.valid() ? body_.field().zero() : a.field().zero();
  if (val_ < 0 && a.is_zero()) throw AlgebraError("evaluating a negative power at zero");
  return body_.eval(a) * a.pow(val_);
}

Poly LaurentPoly::at_one_plus(int shift) const {
  if (is_zero()) return body_;
  if (val_ + shift < 0) throw AlgebraError("negative exponent in substitution T = 1 + t");
  const Poly p = body_.shifted(static_cast<unsigned>(val_ + shift));
  return p.taylor_shift(body_.field().one());
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  if (val_ >= 0) return body_.shifted(static_cast<unsigned>(val_)).str(var);
  std::string body = body_.str(var);
  std::string mono = var + "^" + std::to_string(val_);
  if (body == "1") return mono;
  return "(" + body + ")*" + mono;
}

LaurentNormalForm laurent_normalize(const LaurentPoly& f) {
  if (f.is_zero()) throw AlgebraError("cannot normalize the zero Laurent polynomial");
  const FieldElem lead = f.body().lead();
  return {LaurentPoly::monomial(lead, f.valuation()), f.body().monic()};
}

}  // namespace novcup
