#include "bmf/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bmf/error.hpp"

namespace bmf {

void trim(UniPoly& a, double eps) {
  while (!a.empty() && std::abs(a.back()) <= eps) a.pop_back();
}

int degree(const UniPoly& a) {
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k) {
    if (a[k] != cplx(0)) return k;
  }
  return -1;
}

UniPoly poly_add(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  trim(r);
  return r;
}

UniPoly poly_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly nb(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) nb[k] = -b[k];
  return poly_add(a, nb);
}

UniPoly poly_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UniPoly poly_div_exact(const UniPoly& a_in, const UniPoly& b_in) {
  UniPoly a = a_in;
  UniPoly b = b_in;
  trim(a);
  trim(b);
  if (b.empty()) throw std::domain_error("division by the zero polynomial");
  if (a.size() < b.size()) return {};
  UniPoly q(a.size() - b.size() + 1);
  const cplx lead = b.back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    const cplx c = a[k + b.size() - 1] / lead;
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(q);
  return q;
}

cplx poly_eval(const UniPoly& a, cplx x) {
  cplx r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

UniPoly poly_derivative(const UniPoly& a) {
  UniPoly r;
  for (std::size_t k = 1; k < a.size(); ++k) r.push_back(a[k] * static_cast<double>(k));
  trim(r);
  return r;
}

std::vector<cplx> poly_roots(const UniPoly& a_in) {
  UniPoly a = a_in;
  trim(a);
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 0) throw InputError("roots of the zero polynomial");
  if (n == 0) return {};
  if (n == 1) return {-a[0] / a[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) companion(k, n - 1) = -a[k] / a[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge");
  std::vector<cplx> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  // A few Newton steps on the original polynomial sharpen simple roots.
  const UniPoly da = poly_derivative(a);
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const cplx d = poly_eval(da, r);
      if (std::abs(d) == 0.0) break;
      const cplx step = poly_eval(a, r) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 1e-3 * std::max(1.0, std::abs(r))) break;
      r -= step;
    }
  }
  return roots;
}

namespace {

bool lex_less(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double tol) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t k = 0; k < n; ++k) parent[k] = k;
  auto find = [&](std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double scale = std::max({1.0, std::abs(roots[a]), std::abs(roots[b])});
      if (std::abs(roots[a] - roots[b]) <= tol * scale) parent[find(a)] = find(b);
    }
  }
  std::map<std::size_t, std::pair<cplx, int>> acc;
  for (std::size_t k = 0; k < n; ++k) {
    auto& e = acc[find(k)];
    e.first += roots[k];
    e.second += 1;
  }
  std::vector<RootCluster> out;
  for (const auto& [root, e] : acc) out.push_back({e.first / static_cast<double>(e.second), e.second});
  std::sort(out.begin(), out.end(),
            [](const RootCluster& a, const RootCluster& b) { return lex_less(a.value, b.value); });
  return out;
}

BivariatePoly::BivariatePoly(const std::vector<Term>& terms) {
  for (const auto& t : terms) {
    if (t.i < 0 || t.j < 0) throw InputError("negative exponent in polynomial term");
    if (static_cast<int>(by_y_.size()) <= t.j) by_y_.resize(t.j + 1);
    auto& c = by_y_[t.j];
    if (static_cast<int>(c.size()) <= t.i) c.resize(t.i + 1);
    c[t.i] += t.c;
  }
  for (auto& c : by_y_) trim(c);
  while (!by_y_.empty() && by_y_.back().empty()) by_y_.pop_back();
}

int BivariatePoly::x_degree() const {
  int d = -1;
  for (const auto& c : by_y_) d = std::max(d, degree(c));
  return d;
}

std::vector<Term> BivariatePoly::terms() const {
  std::vector<Term> out;
  for (std::size_t j = 0; j < by_y_.size(); ++j) {
    for (std::size_t i = 0; i < by_y_[j].size(); ++i) {
      if (by_y_[j][i] != cplx(0)) out.push_back({static_cast<int>(i), static_cast<int>(j), by_y_[j][i]});
    }
  }
  return out;
}

cplx BivariatePoly::eval(cplx x, cplx y) const {
  cplx r = 0;
  for (auto it = by_y_.rbegin(); it != by_y_.rend(); ++it) r = r * y + poly_eval(*it, x);
  return r;
}

cplx BivariatePoly::dx(cplx x, cplx y) const {
  cplx r = 0;
  for (auto it = by_y_.rbegin(); it != by_y_.rend(); ++it) {
    r = r * y + poly_eval(poly_derivative(*it), x);
  }
  return r;
}

cplx BivariatePoly::dy(cplx x, cplx y) const {
  cplx r = 0;
  for (int j = y_degree(); j >= 1; --j) r = r * y + poly_eval(by_y_[j], x) * static_cast<double>(j);
  return r;
}

UniPoly BivariatePoly::fiber(cplx x0) const {
  UniPoly out(by_y_.size());
  for (std::size_t j = 0; j < by_y_.size(); ++j) out[j] = poly_eval(by_y_[j], x0);
  return out;
}

std::vector<cplx> BivariatePoly::fiber_roots(cplx x0) const { return poly_roots(fiber(x0)); }

BivariatePoly BivariatePoly::monic() const {
  if (y_degree() < 1) throw InputError("polynomial must have positive degree in y");
  const UniPoly& lead = by_y_.back();
  if (degree(lead) != 0) {
    throw InputError(
        "leading coefficient in y depends on x (vertical asymptotes); apply a coordinate change "
        "such as x -> x + t*y first");
  }
  BivariatePoly out = *this;
  for (auto& c : out.by_y_) {
    for (auto& v : c) v /= lead[0];
  }
  return out;
}

std::string BivariatePoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.c.real();
    if (t.c.imag() != 0.0) os << (t.c.imag() < 0 ? "-" : "+") << std::abs(t.c.imag()) << "i";
    os << ")";
    if (t.i) os << "*x^" << t.i;
    if (t.j) os << "*y^" << t.j;
  }
  return first ? "0" : os.str();
}

UniPoly y_discriminant(const BivariatePoly& f) {
  const int p = f.y_degree();
  if (p < 1) throw InputError("polynomial must have positive degree in y");
  if (p == 1) return {cplx(1)};
  // df/dy coefficients
  std::vector<UniPoly> g(p);
  for (int j = 1; j <= p; ++j) {
    g[j - 1] = f.y_coeff(j);
    for (auto& v : g[j - 1]) v *= static_cast<double>(j);
  }
  const int n = 2 * p - 1;
  // Sylvester matrix: p-1 shifted rows of f, p shifted rows of f_y.
  std::vector<std::vector<UniPoly>> m(n, std::vector<UniPoly>(n));
  for (int r = 0; r < p - 1; ++r) {
    for (int j = 0; j <= p; ++j) m[r][r + (p - j)] = f.y_coeff(j);
  }
  for (int r = 0; r < p; ++r) {
    for (int j = 0; j <= p - 1; ++j) m[p - 1 + r][r + (p - 1 - j)] = g[j];
  }
  // Bareiss elimination; divisions are exact over C[x].
  int sign = 1;
  UniPoly prev{cplx(1)};
  for (int k = 0; k < n - 1; ++k) {
    if (degree(m[k][k]) < 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (degree(m[r][k]) >= 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = poly_div_exact(poly_sub(poly_mul(m[k][k], m[i][j]), poly_mul(m[i][k], m[k][j])), prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  if (sign < 0) {
    for (auto& v : det) v = -v;
  }
  trim(det);
  return det;
}

}  // namespace bmf
