#include "novcup/algebra/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace novcup {

namespace {

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_tuple(nt, t - q * nt);
    std::tie(r, nr) = std::make_tuple(nr, r - q * nr);
  }
  if (r != 1) throw AlgebraError("element is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly pmul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
ModPoly pmod(ModPoly a, const ModPoly& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    trim(a);
  }
  return a;
}

ModPoly pgcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by repeated p-th powering.
ModPoly frobenius_power(const ModPoly& f, std::uint64_t p, unsigned k) {
  ModPoly x = pmod(ModPoly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) {
    ModPoly base = x, acc{1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
      base = pmod(pmul(base, base, p), f, p);
      e >>= 1;
    }
    x = acc;
  }
  return x;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool brute_force_irreducible(const ModPoly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      ModPoly g(d + 1, 0);
      std::uint64_t v = c;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

bool rabin_irreducible(const ModPoly& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  ModPoly x_pm = frobenius_power(f, p, m);
  ModPoly x = pmod(ModPoly{0, 1}, f, p);
  if (x_pm != x) return false;
  for (std::uint64_t d : prime_factors(m)) {
    ModPoly h = frobenius_power(f, p, static_cast<unsigned>(m / d));
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (pgcd(f, h, p).size() != 1) return false;
  }
  return true;
}

std::string trim_ws(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  if (f.size() < 2 || f.back() != 1) throw AlgebraError("irreducibility test expects a monic polynomial of degree >= 1");
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  long double work = 1;
  for (unsigned i = 0; i < m / 2; ++i) work *= static_cast<long double>(p);
  if (m <= 16 && work <= (1 << 20)) return brute_force_irreducible(f, p);
  return rabin_irreducible(f, p);
}

// ---------------------------------------------------------------------------
// Registry

struct FieldRegistry {
  std::mutex mu;
  std::map<std::tuple<int, std::uint64_t, unsigned>, std::unique_ptr<FieldSpec>> fields;

  static FieldRegistry& get() {
    static FieldRegistry r;
    return r;
  }

  const FieldSpec& intern(FieldKind kind, std::uint64_t p, unsigned m) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(kind), p, m);
    auto it = fields.find(key);
    if (it != fields.end()) return *it->second;
    std::vector<std::uint64_t> modulus;
    if (kind == FieldKind::extension) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < m; ++i) count *= p;
      for (std::uint64_t c = 0; c < count; ++c) {
        ModPoly f(m + 1, 0);
        std::uint64_t v = c;
        for (unsigned i = 0; i < m; ++i) {
          f[i] = v % p;
          v /= p;
        }
        f[m] = 1;
        if (f[0] == 0) continue;
        if (is_irreducible_mod_p(f, p)) {
          modulus = f;
          break;
        }
      }
    }
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(kind, p, m, std::move(modulus)));
    const FieldSpec& ref = *spec;
    fields.emplace(key, std::move(spec));
    return ref;
  }
};

FieldSpec::FieldSpec(FieldKind kind, std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : kind_(kind), p_(p), m_(m), modulus_(std::move(modulus)) {
  if (kind_ == FieldKind::rationals) return;
  q_ = 1;
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  if (kind_ == FieldKind::extension && q_ <= (1u << 16)) {
    // Find the least primitive element and tabulate its powers.
    const std::uint64_t n = q_ - 1;
    const auto factors = prime_factors(n);
    for (std::uint64_t g = 2; g < q_; ++g) {
      bool primitive = true;
      for (std::uint64_t r : factors) {
        std::uint64_t e = n / r, acc = 1, base = g;
        while (e) {
          if (e & 1) acc = undigits(poly_mul_mod(digits(acc), digits(base)));
          base = undigits(poly_mul_mod(digits(base), digits(base)));
          e >>= 1;
        }
        if (acc == 1) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      exp_.assign(2 * n, 0);
      log_.assign(q_, 0);
      std::uint64_t acc = 1;
      for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = exp_[i + n] = static_cast<std::uint32_t>(acc);
        log_[acc] = static_cast<std::uint32_t>(i);
        acc = undigits(poly_mul_mod(digits(acc), digits(g)));
      }
      break;
    }
  }
}

const FieldSpec& FieldSpec::rationals() { return FieldRegistry::get().intern(FieldKind::rationals, 0, 1); }

const FieldSpec& FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw AlgebraError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ull << 32)) throw AlgebraError("prime fields are limited to p < 2^32");
  return FieldRegistry::get().intern(FieldKind::prime, p, 1);
}

const FieldSpec& FieldSpec::extension(std::uint64_t p, unsigned m) {
  if (m == 0) throw AlgebraError("extension degree must be at least 1");
  if (!is_prime(p)) throw AlgebraError("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 1) return prime(p);
  long double q = 1;
  for (unsigned i = 0; i < m; ++i) q *= static_cast<long double>(p);
  if (q > static_cast<long double>(1ull << 31)) throw AlgebraError("extension fields are limited to 2^31 elements");
  return FieldRegistry::get().intern(FieldKind::extension, p, m);
}

const FieldSpec& field_make(FieldKind kind, std::uint64_t p, unsigned m) {
  switch (kind) {
    case FieldKind::rationals:
      return FieldSpec::rationals();
    case FieldKind::prime:
      return FieldSpec::prime(p);
    case FieldKind::extension:
      return FieldSpec::extension(p, m);
  }
  throw AlgebraError("unknown field kind");
}

const FieldSpec& FieldSpec::parse(std::string_view text) {
  const std::string s = trim_ws(text);
  if (s == "Q" || s == "q") return rationals();
  const auto caret = s.find('^');
  auto to_u64 = [&](const std::string& part) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw AlgebraError("unsupported field string '" + s + "'");
    return std::stoull(part);
  };
  if (caret == std::string::npos) return prime(to_u64(s));
  const std::uint64_t p = to_u64(s.substr(0, caret));
  const std::uint64_t m = to_u64(s.substr(caret + 1));
  if (m == 0) throw AlgebraError("extension degree must be at least 1");
  return extension(p, static_cast<unsigned>(m));
}

std::optional<std::uint64_t> FieldSpec::order() const {
  if (kind_ == FieldKind::rationals) return std::nullopt;
  return q_;
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime:
      return std::to_string(p_);
    case FieldKind::extension:
      return std::to_string(p_) + "^" + std::to_string(m_);
  }
  return "?";
}

std::vector<std::uint64_t> FieldSpec::digits(std::uint64_t code) const {
  std::vector<std::uint64_t> d(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::uint64_t FieldSpec::undigits(const std::vector<std::uint64_t>& d) const {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + d[i];
  return code;
}

std::vector<std::uint64_t> FieldSpec::poly_mul_mod(const std::vector<std::uint64_t>& a,
                                                   const std::vector<std::uint64_t>& b) const {
  ModPoly r = pmod(pmul(a, b, p_), modulus_, p_);
  r.resize(m_, 0);
  return r;
}

std::uint64_t FieldSpec::add_code(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::prime) {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::neg_code(std::uint64_t a) const {
  if (kind_ == FieldKind::prime) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint64_t r = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

std::uint64_t FieldSpec::mul_code(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::prime) return mulmod(a, b, p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return undigits(poly_mul_mod(digits(a), digits(b)));
}

std::uint64_t FieldSpec::inv_code(std::uint64_t a) const {
  if (a == 0) throw AlgebraError("division by zero");
  if (kind_ == FieldKind::prime) return invmod(a, p_);
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  // a^(q-2)
  std::uint64_t e = q_ - 2, acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul_code(acc, base);
    base = mul_code(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElem FieldSpec::zero() const { return is_finite() ? FieldElem(*this, std::uint64_t{0}) : FieldElem(*this, mpq_class(0)); }

FieldElem FieldSpec::one() const { return is_finite() ? FieldElem(*this, std::uint64_t{1}) : FieldElem(*this, mpq_class(1)); }

FieldElem FieldSpec::from_int(std::int64_t v) const {
  if (!is_finite()) return FieldElem(*this, mpq_class(static_cast<long>(v)));
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return FieldElem(*this, static_cast<std::uint64_t>(r));
}

FieldElem FieldSpec::from_rational(const mpq_class& q) const {
  if (!is_finite()) return FieldElem(*this, q);
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class nr = num % pz, dr = den % pz;
  if (nr < 0) nr += pz;
  if (dr == 0) throw AlgebraError("rational with denominator divisible by the characteristic");
  const std::uint64_t n = nr.get_ui(), d = dr.get_ui();
  return FieldElem(*this, mul_code(n, inv_code(d)));
}

FieldElem FieldSpec::from_code(std::uint64_t code) const {
  if (!is_finite() || code >= q_) throw AlgebraError("invalid element code");
  return FieldElem(*this, code);
}

std::vector<FieldElem> FieldSpec::elements() const {
  if (!is_finite()) throw AlgebraError("cannot enumerate an infinite field");
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q_; ++c) out.emplace_back(*this, c);
  return out;
}

FieldElem FieldSpec::parse_elem(std::string_view text) const {
  const std::string s = trim_ws(text);
  if (s.empty()) throw AlgebraError("empty field element");
  if (kind_ == FieldKind::rationals) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw AlgebraError("malformed rational '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw AlgebraError("zero denominator in '" + s + "'");
    return FieldElem(*this, q);
  }
  // Sum of terms c, c*t, ct^e, t^e with optional signs; for prime fields only constants.
  FieldElem acc = zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    FieldElem coeff = one();
    bool had_coeff = i > start;
    if (had_coeff) {
      mpz_class c(s.substr(start, i - start));
      mpz_class pz(static_cast<unsigned long>(p_));
      coeff = from_int(static_cast<std::int64_t>(mpz_class(c % pz).get_ui()));
    }
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t ds = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (ds == i) throw AlgebraError("malformed element '" + s + "'");
      mpz_class d(s.substr(ds, i - ds));
      mpz_class pz(static_cast<unsigned long>(p_));
      coeff = coeff / from_int(static_cast<std::int64_t>(mpz_class(d % pz).get_ui()));
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::uint64_t power = 0;
    if (i < s.size() && s[i] == 't') {
      if (kind_ != FieldKind::extension) throw AlgebraError("generator 't' used in prime field element '" + s + "'");
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (es == i) throw AlgebraError("malformed exponent in '" + s + "'");
        power = std::stoull(s.substr(es, i - es));
      }
    } else if (!had_coeff) {
      throw AlgebraError("malformed element '" + s + "'");
    }
    FieldElem term = coeff;
    if (power > 0) {
      FieldElem gen(*this, std::uint64_t{p_});  // the class of t
      term = term * gen.pow(static_cast<std::int64_t>(power));
    }
    acc = negative ? acc - term : acc + term;
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw AlgebraError("malformed element '" + s + "'");
  }
  return acc;
}

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(const FieldSpec& f, mpq_class q) : f_(&f), v_(std::move(q)) {
  std::get<mpq_class>(v_).canonicalize();
}

void FieldElem::check_same(const FieldElem& o) const {
  if (f_ != o.f_) throw AlgebraError("mixed-field arithmetic");
}

bool FieldElem::is_zero() const {
  if (std::holds_alternative<std::uint64_t>(v_)) return std::get<std::uint64_t>(v_) == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool FieldElem::is_one() const {
  if (std::holds_alternative<std::uint64_t>(v_)) return std::get<std::uint64_t>(v_) == 1;
  return std::get<mpq_class>(v_) == 1;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  if (f_->is_finite()) return FieldElem(*f_, f_->add_code(code(), o.code()));
  return FieldElem(*f_, mpq_class(rational() + o.rational()));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  if (f_->is_finite()) return FieldElem(*f_, f_->add_code(code(), f_->neg_code(o.code())));
  return FieldElem(*f_, mpq_class(rational() - o.rational()));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  if (f_->is_finite()) return FieldElem(*f_, f_->mul_code(code(), o.code()));
  return FieldElem(*f_, mpq_class(rational() * o.rational()));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
  if (f_->is_finite()) return FieldElem(*f_, f_->neg_code(code()));
  return FieldElem(*f_, mpq_class(-rational()));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero");
  if (f_->is_finite()) return FieldElem(*f_, f_->inv_code(code()));
  return FieldElem(*f_, mpq_class(1 / rational()));
}

FieldElem FieldElem::pow(std::int64_t e) const {
  FieldElem base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  FieldElem acc = f_->one();
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& o) const { return f_ == o.f_ && v_ == o.v_; }

std::strong_ordering FieldElem::operator<=>(const FieldElem& o) const {
  check_same(o);
  if (f_->is_finite()) return code() <=> o.code();
  const int c = cmp(rational(), o.rational());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string FieldElem::str() const {
  if (!f_) return "<null>";
  if (!f_->is_finite()) return rational().get_str();
  if (f_->kind() == FieldKind::prime) return std::to_string(code());
  std::uint64_t c = code();
  if (c == 0) return "0";
  std::vector<std::uint64_t> d;
  const std::uint64_t p = f_->characteristic();
  for (unsigned i = 0; i < f_->degree(); ++i) {
    d.push_back(c % p);
    c /= p;
  }
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.str(); }

std::optional<unsigned> minimal_extension_for_roots(std::uint64_t p, std::uint64_t n) {
  if (n == 0 || p % n == 0 || std::gcd(p, n) != 1) return std::nullopt;
  std::uint64_t acc = p % n;
  for (unsigned m = 1; m <= 64; ++m) {
    if (acc % n == 1 % n) return m;
    acc = mulmod(acc, p, n);
  }
  return std::nullopt;
}

std::optional<FieldElem> root_of_unity(const FieldSpec& f, std::uint64_t n) {
  if (n == 0) throw AlgebraError("root_of_unity requires n >= 1");
  if (n == 1) return std::nullopt;
  if (!f.is_finite()) {
    if (n % 2 == 0) return f.from_int(-1);
    return std::nullopt;
  }
  const std::uint64_t q = *f.order();
  const std::uint64_t d = std::gcd(n, q - 1);
  if (d == 1) return std::nullopt;
  if (q <= (1u << 20)) {
    for (std::uint64_t c = 2; c < q; ++c) {
      FieldElem a = f.from_code(c);
      if (a.pow(static_cast<std::int64_t>(n)).is_one()) return a;
    }
    return std::nullopt;
  }
  // Large fields: the solutions form the cyclic subgroup of order d.
  const auto factors = prime_factors(q - 1);
  for (std::uint64_t g = 2; g < q; ++g) {
    FieldElem cand = f.from_code(g);
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (cand.pow(static_cast<std::int64_t>((q - 1) / r)).is_one()) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    FieldElem step = cand.pow(static_cast<std::int64_t>((q - 1) / d));
    std::optional<FieldElem> best;
    FieldElem cur = step;
    for (std::uint64_t k = 1; k < d; ++k) {
      if (!best || cur < *best) best = cur;
      cur = cur * step;
    }
    return best;
  }
  return std::nullopt;
}

}  // namespace novcup
