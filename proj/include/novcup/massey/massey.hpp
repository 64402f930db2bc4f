#pragma once

// The spectral sequence of the deformation T = 1 + t of C*(X; T^-xi (x) F):
// pages from the module structure, an independent chain-level computation of
// the Massey differentials d_r, xi-survivors and the support criterion.

#include <optional>
#include <vector>

#include "novcup/complexes/cut.hpp"
#include "novcup/pidmod/snf.hpp"

namespace novcup {

/// delta_t = sum_a t^a delta_a, truncated after `order` terms.
class SeriesComplex {
 public:
  SeriesComplex() = default;
  SeriesComplex(const FieldSpec& f, std::vector<std::size_t> dims, std::vector<std::vector<SparseMatrix>> terms);

  const FieldSpec& field() const { return *f_; }
  int top() const { return static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int q) const { return q >= 0 && q <= top() ? dims_[q] : 0; }
  int order() const { return order_; }
  /// delta_a on C^q; zero for q out of range or a >= order.
  Vec apply(int q, int a, const Vec& x) const;
  TwistedComplex center() const;

 private:
  const FieldSpec* f_ = nullptr;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<SparseMatrix>> terms_;  // terms_[q][a]
  int order_ = 0;
};

/// Taylor coefficients of each differential at T = 1.
SeriesComplex taylor_at_one(const ParamComplex& c, int order);

/// C*(X; T^-xi (x) F) over k[T, T^-1]; its first-order term is
/// delta_1 c = -xi u c, so d_1(v) = (-1)^(i+1) v u xi in cohomology.
ParamComplex massey_complex(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f);

struct SpectralPage {
  int r = 1;
  std::vector<std::size_t> dims;   // dim E_r^i
  std::vector<std::size_t> ranks;  // rank d_r^i : E_r^i -> E_r^{i+1}
  bool stable = false;             // d_s = 0 for all s >= r

  bool operator==(const SpectralPage& o) const { return r == o.r && dims == o.dims && ranks == o.ranks; }
};

/// Multiplicities m_j of the root 1 in the invariant factors (zeros omitted).
std::vector<int> multiplicities_at_one(const ModuleDecomposition& m);
/// 1 + the largest multiplicity of the root 1 over all degrees.
int stabilization_page(const std::vector<ModuleDecomposition>& mods);

/// dim E_r^i = free(i) + #{m_j(i) >= r} + #{m_j(i+1) >= r},
/// rank d_r^i = #{m_j(i+1) = r}. pages = 0 emits up to the stable page.
std::vector<SpectralPage> pages_from_modules(const std::vector<ModuleDecomposition>& mods, int pages = 0);

std::vector<SpectralPage> spectral_pages(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f,
                                         int max_page = 0);
/// Pages of the cut model, recentered at T = 1.
std::vector<SpectralPage> spectral_pages(const DeformationComplex& dc, int max_page = 0);

/// Incremental Z_r / B_r computation. Each Z_r basis vector keeps a lift
/// c_0 + t c_1 + ... + t^(r-1) c_(r-1) with delta_t(c) = 0 mod t^r; each B_r
/// vector x keeps a chain y with delta_t(y) = t^(r-1) x mod t^r.
class ChainLevelSS {
 public:
  struct Lift {
    Vec cls;               // coordinates in H^i
    std::vector<Vec> chain;
  };
  struct Boundary {
    Vec cls;
    Vec x;
    std::vector<Vec> chain;
  };

  /// Computes pages 1..pages.
  ChainLevelSS(SeriesComplex s, int pages);

  const SeriesComplex& series() const { return s_; }
  const std::vector<SpectralPage>& pages() const { return pages_; }
  const CohomologySpace& cohomology(int q) const { return h_[q]; }
  /// Basis of Z_r^q with lifts, 1 <= r <= pages + 1.
  const std::vector<Lift>& z(int r, int q) const { return z_[r - 1][q]; }
  const std::vector<Boundary>& b(int r, int q) const { return b_[r - 1][q]; }
  int computed() const { return static_cast<int>(pages_.size()); }

 private:
  SeriesComplex s_;
  std::vector<CohomologySpace> h_;
  std::vector<std::vector<std::vector<Lift>>> z_;
  std::vector<std::vector<std::vector<Boundary>>> b_;
  std::vector<SpectralPage> pages_;
};

/// Checks sum_a delta_a c_(l-a) = 0 for l < order.
bool lift_satisfies(const SeriesComplex& s, int q, const std::vector<Vec>& chain, int order);

struct DrResult {
  bool obstructed = false;
  int step = 0;     // first s < r with d_s(v) != 0 when obstructed
  Vec value;        // class of d_r(v) in H^(i+1), reduced against B_r
  bool zero = false;
};

/// d_r of the class of the cocycle v; ss must hold at least r pages.
DrResult chain_level_dr(const ChainLevelSS& ss, int degree, const Vec& v, int r);
DrResult chain_level_dr(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int degree,
                        const Vec& v, int r);

struct SurvivorBasis {
  int degree = 0;
  std::vector<Vec> classes;  // coordinates in H^degree(X; F)
  std::vector<Vec> reps;     // cocycles
  std::vector<std::vector<Vec>> certificates;
  int order = 1;             // certificates solve the chain equations mod t^order
};

SurvivorBasis survivors(const ChainLevelSS& ss, int degree);
SurvivorBasis survivors(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f, int degree);
/// Survivors in every degree, sharing one chain-level computation.
std::vector<SurvivorBasis> all_survivors(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& f);

/// The constant lift (alpha, 0) of c to the cut model, verified to be a
/// cocycle for every T. Empty when supp(c) meets V (inconclusive).
struct SupportCertificate {
  int degree = 0;
  std::vector<LaurentPoly> lift;
};
std::optional<SupportCertificate> support_criterion(const CutPresentation& cut, const SimplicialComplex& x, int degree,
                                                    const Vec& c);

}  // namespace novcup
