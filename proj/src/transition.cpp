#include "traintrack/transition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tt {

std::int64_t TransitionMatrix::column_sum(std::size_t col) const {
  std::int64_t s = 0;
  for (std::size_t r = 0; r < order; ++r) s += at(r, col);
  return s;
}

TransitionMatrix transition_matrix(const GraphMap& gm) {
  const Graph& g = gm.graph();
  const std::size_t n = g.edge_count();
  TransitionMatrix m;
  m.order = n;
  m.entries.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::uint32_t col = 0; col < n; ++col) {
    for (OrientedEdge x : gm.image(forward_of(col)).edges()) {
      ++m.entries[unoriented(x)][col];
    }
  }
  return m;
}

TransitionMatrix multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.order != b.order) throw MalformedInputError("matrix order mismatch");
  TransitionMatrix c;
  c.order = a.order;
  c.entries.assign(a.order, std::vector<std::int64_t>(a.order, 0));
  for (std::size_t i = 0; i < a.order; ++i) {
    for (std::size_t k = 0; k < a.order; ++k) {
      const std::int64_t aik = a.entries[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.order; ++j) {
        c.entries[i][j] += aik * b.entries[k][j];
      }
    }
  }
  return c;
}

TransitionMatrix matrix_power(const TransitionMatrix& m, std::size_t n) {
  TransitionMatrix result;
  result.order = m.order;
  result.entries.assign(m.order, std::vector<std::int64_t>(m.order, 0));
  for (std::size_t i = 0; i < m.order; ++i) result.entries[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) result = multiply(result, m);
  return result;
}

namespace {

// Polynomials over Z with __int128 coefficients, ascending degree.
using Poly = std::vector<__int128>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Exact division in Z[x]; Bareiss guarantees divisibility.
Poly exact_div(Poly num, const Poly& den) {
  if (den.empty()) throw InternalError("char_poly: division by zero polynomial");
  trim(num);
  if (num.empty()) return {};
  if (num.size() < den.size()) throw InternalError("char_poly: inexact division");
  Poly q(num.size() - den.size() + 1, 0);
  for (std::size_t step = q.size(); step-- > 0;) {
    const __int128 lead = num[step + den.size() - 1];
    if (lead % den.back() != 0) throw InternalError("char_poly: inexact division");
    const __int128 c = lead / den.back();
    q[step] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[step + i] -= c * den[i];
  }
  trim(num);
  if (!num.empty()) throw InternalError("char_poly: nonzero remainder");
  return q;
}

bool is_zero(const Poly& p) { return p.empty(); }

}  // namespace

std::vector<std::int64_t> char_poly(const TransitionMatrix& m) {
  const std::size_t n = m.order;
  if (n == 0 || n > 12) {
    throw PreconditionError("char_poly order",
                            "supported for orders 1..12, got " + std::to_string(n));
  }

  // xI - M as a polynomial matrix, then Bareiss fraction-free elimination.
  std::vector<std::vector<Poly>> p(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Poly e;
      if (m.entries[i][j] != 0) e = {-static_cast<__int128>(m.entries[i][j])};
      if (i == j) {
        e.resize(2, 0);
        e[1] += 1;
      }
      trim(e);
      p[i][j] = std::move(e);
    }
  }

  int sign = 1;
  Poly prev = {1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(p[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(p[r][k])) ++r;
      if (r == n) throw InternalError("char_poly: vanishing pivot column");
      std::swap(p[k], p[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        p[i][j] = exact_div(sub(mul(p[i][j], p[k][k]), mul(p[i][k], p[k][j])), prev);
      }
      p[i][k] = {};
    }
    prev = p[k][k];
  }

  Poly det = p[n - 1][n - 1];
  if (sign < 0) {
    for (auto& c : det) c = -c;
  }
  if (det.size() != n + 1) throw InternalError("char_poly: degree mismatch");

  std::vector<std::int64_t> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const __int128 c = det[n - i];  // descending order
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min()) {
      throw InternalError("char_poly: coefficient overflow");
    }
    coeffs[i] = static_cast<std::int64_t>(c);
  }
  if (coeffs[0] != 1) throw InternalError("char_poly: not monic");
  return coeffs;
}

double eval_poly(const std::vector<std::int64_t>& coeffs, double x) {
  double acc = 0.0;
  for (std::int64_t c : coeffs) acc = acc * x + static_cast<double>(c);
  return acc;
}

bool is_primitive(const TransitionMatrix& m) {
  const std::size_t n = m.order;
  if (n == 0) return false;
  std::vector<std::vector<bool>> b(n, std::vector<bool>(n, false)),
      p(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = m.entries[i][j] > 0;
      if (b[i][j] && m.entries[i][j] < 0) {
        throw MalformedInputError("transition matrices are non-negative");
      }
    }
  }
  p = b;
  const std::size_t wielandt = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= wielandt; ++k) {
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      for (std::size_t j = 0; j < n && all; ++j) all = p[i][j];
    }
    if (all) return true;
    // p = p * b
    std::vector<std::vector<bool>> q(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (!p[i][l]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (b[l][j]) q[i][j] = true;
        }
      }
    }
    p = std::move(q);
  }
  return false;
}

PFData pf_eigenpair(const TransitionMatrix& m, double width_target,
                    std::size_t max_iterations) {
  if (!is_primitive(m)) {
    throw PreconditionError("primitive",
                            "pf_eigenpair requires a primitive transition matrix");
  }
  const std::size_t n = m.order;
  std::vector<double> v(n, 1.0), w(n, 0.0);

  auto step = [&](double& lo, double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        acc += static_cast<double>(m.entries[i][j]) * v[j];
      }
      w[i] = acc;
      const double r = acc / v[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  };

  PFData out;
  double lo = 0.0, hi = 0.0;
  std::size_t iter = 0;
  while (iter < max_iterations) {
    step(lo, hi);
    ++iter;
    double wmax = 0.0;
    for (double x : w) wmax = std::max(wmax, x);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / wmax;
    if (hi - lo < width_target) break;
  }

  // Report the certificate for the final normalized iterate.
  step(lo, hi);
  const double lambda = 0.5 * (lo + hi);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    residual = std::max(residual, std::abs(w[i] - lambda * v[i]));
  }
  if (hi - lo >= 1e-9 || residual >= 1e-10) {
    throw InternalError("pf_eigenpair did not converge below the contract bounds");
  }
  out.lambda = lambda;
  out.mu = v;
  out.residual = residual;
  out.lo = lo;
  out.hi = hi;
  out.iterations = iter;
  return out;
}

}  // namespace tt
