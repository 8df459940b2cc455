#pragma once

#include <complex>
#include <string>
#include <vector>

namespace bmf {

using cplx = std::complex<double>;

// Univariate polynomial, coefficient of x^k at index k.
using UniPoly = std::vector<cplx>;

void trim(UniPoly& a, double eps = 0.0);
int degree(const UniPoly& a);  // -1 for the zero polynomial
UniPoly poly_add(const UniPoly& a, const UniPoly& b);
UniPoly poly_sub(const UniPoly& a, const UniPoly& b);
UniPoly poly_mul(const UniPoly& a, const UniPoly& b);
// Quotient of a division known to be exact; the remainder is dropped.
UniPoly poly_div_exact(const UniPoly& a, const UniPoly& b);
cplx poly_eval(const UniPoly& a, cplx x);
UniPoly poly_derivative(const UniPoly& a);

// Roots via eigenvalues of the companion matrix. Leading coefficient must be
// nonzero after trimming.
std::vector<cplx> poly_roots(const UniPoly& a);

struct RootCluster {
  cplx value;
  int multiplicity;
};

// Groups roots closer than tol * max(1, |r|). Clusters are returned sorted by
// (real, imaginary) of their mean.
std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double tol);

struct Term {
  int i;  // power of x
  int j;  // power of y
  cplx c;
};

// f(x, y) = sum c_ij x^i y^j.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(const std::vector<Term>& terms);

  int y_degree() const { return static_cast<int>(by_y_.size()) - 1; }
  int x_degree() const;
  // Coefficient of y^j as a polynomial in x.
  const UniPoly& y_coeff(int j) const { return by_y_[j]; }
  std::vector<Term> terms() const;

  cplx eval(cplx x, cplx y) const;
  cplx dx(cplx x, cplx y) const;
  cplx dy(cplx x, cplx y) const;
  // Coefficients of f(x0, y) in y.
  UniPoly fiber(cplx x0) const;
  std::vector<cplx> fiber_roots(cplx x0) const;

  // Divides by the leading y-coefficient. Throws InputError when that
  // coefficient depends on x or the polynomial has y-degree < 1.
  BivariatePoly monic() const;

  std::string to_string() const;

 private:
  std::vector<UniPoly> by_y_;  // by_y_[j] = coefficient of y^j
};

// Res_y(f, df/dy) as a polynomial in x, via fraction-free elimination of the
// Sylvester matrix. For monic f this is the y-discriminant up to sign.
UniPoly y_discriminant(const BivariatePoly& f);

}  // namespace bmf
