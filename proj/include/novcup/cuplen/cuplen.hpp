#pragma once

// Cup products with local coefficients, the cut-model product psi_t, and
// certified lower bounds for the cup-length cl_k(xi).

#include <optional>
#include <string>
#include <vector>

#include "novcup/complexes/cut.hpp"
#include "novcup/novikov/novikov.hpp"

namespace novcup {

class CupLengthError : public std::runtime_error {
 public:
  CupLengthError(const std::string& what, std::string bundle, int degree, Poly factor)
      : std::runtime_error(what), bundle(std::move(bundle)), degree(degree), factor(std::move(factor)) {}
  std::string bundle;
  int degree;
  Poly factor;
};

/// (u u v)(v0..v_{p+q}) = u(v0..vp) (x) g_F(v0 vp) v(vp..v_{p+q}), fiber index e * rank(F) + f.
Vec cup(const SimplicialComplex& x, const FlatBundle& e, int p, const Vec& u, const FlatBundle& f, int q, const Vec& v);

/// Same product for cochains with Laurent entries, where the second factor
/// lives in T^(s z) (x) F.
std::vector<LaurentPoly> cup(const SimplicialComplex& x, std::size_t rank_e, int p, const std::vector<LaurentPoly>& u,
                             const FlatBundle& f, const IntegralCocycle& z, int s, int q,
                             const std::vector<LaurentPoly>& v);

/// Cochain (alpha, beta) of the cut model: alpha on N in degree q, beta on V in degree q - 1.
struct CutCochain {
  int degree = 0;
  Vec alpha;
  Vec beta;
};

/// Concatenation in the layout of deformation_complex.
Vec flatten(const CutCochain& c);
CutCochain unflatten(const DeformationComplex& dc, int q, const Vec& v);

/// The cut presentation carrying F_0 (x) F_0' and sigma (x) sigma'.
CutPresentation tensor_cut(const CutPresentation& a, const CutPresentation& b);

/// psi_t(c, c') = (alpha u alpha', (-1)^|alpha| (1+t) i_-^* alpha u beta' + beta u sigma' i_+^* alpha').
CutCochain psi_product(const CutPresentation& a, const CutPresentation& b, const CutCochain& c, const CutCochain& c2,
                       const FieldElem& t);

struct CupFactor {
  int degree = 0;
  std::string bundle;
  Vec cocycle;
};

struct CupLengthReport {
  enum class Mode { massey, generic };
  Mode mode = Mode::massey;
  bool strict_dual = false;
  /// Certified lower bound for cl_k(xi); 0 when W_2 = 0 (no bound).
  int m = 0;
  int critical_bound = 0;
  bool has_bound = false;
  std::vector<CupFactor> witness;
  std::string product_bundle;
  int product_degree = 0;
  /// The witness product re-checked from raw cochains.
  bool verified = false;
  int dim_x = 0;
  bool xi_nonzero = false;
  /// Survivor dimensions per degree for xi and for the second factor.
  std::vector<std::size_t> survivor_dims, second_survivor_dims;
  /// Generic mode: the product is nonzero for every a except these.
  std::vector<FieldElem> excluded_roots;
  std::vector<Poly> excluded_factors;

  bool within_dimension_bound() const { return !xi_nonzero || m <= dim_x; }
};

struct CupOptions {
  bool strict_dual = false;
};

CupLengthReport cuplength_massey(const SimplicialComplex& x, const IntegralCocycle& z, const FieldSpec& f,
                                 const std::vector<FlatBundle>& extra_bundles, CupOptions opts = {});

CupLengthReport cuplength_generic(const SimplicialComplex& x, const IntegralCocycle& z, const FlatBundle& e1,
                                  const FlatBundle& e2, const std::vector<FlatBundle>& extra_bundles);

/// Classical cup-length over k by exhaustive search of products of basis
/// classes (small spaces only).
int naive_cup_length(const SimplicialComplex& x, const FieldSpec& f);

}  // namespace novcup
