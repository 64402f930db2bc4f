#pragma once

#include <random>
#include <vector>

#include "novcup/algebra/field.hpp"
#include "novcup/complexes/twisted.hpp"

namespace novcup::testing {

inline FieldElem random_elem(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_finite()) return f.from_code(rng() % *f.order());
  std::uniform_int_distribution<int> num(-50, 50), den(1, 30);
  return f.from_rational(mpq_class(num(rng), den(rng)));
}

inline FieldElem random_nonzero(const FieldSpec& f, std::mt19937_64& rng) {
  for (;;) {
    FieldElem a = random_elem(f, rng);
    if (!a.is_zero()) return a;
  }
}

inline Vec random_vec(const FieldSpec& f, std::size_t n, std::mt19937_64& rng) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_elem(f, rng));
  return v;
}

inline std::vector<std::size_t> betti_numbers(const TwistedComplex& c) {
  std::vector<std::size_t> b;
  for (int q = 0; q <= c.top(); ++q) b.push_back(c.betti(q));
  return b;
}

}  // namespace novcup::testing
