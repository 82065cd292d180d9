#include "curvature2k/kahler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace c2k {

namespace {

// n^2 x n^2 view of a rank-4 array: row (i*n+j), column (k*n+l).
Matrix pair_matrix(int n, const std::vector<double>& r4) {
  Matrix m(n * n, n * n);
  std::size_t idx = 0;
  for (int row = 0; row < n * n; ++row) {
    for (int col = 0; col < n * n; ++col) m(row, col) = r4[idx++];
  }
  return m;
}

std::vector<double> rank4_from_pair_matrix(const Matrix& m) {
  std::vector<double> r4(static_cast<std::size_t>(m.rows()) * m.cols());
  std::size_t idx = 0;
  for (int row = 0; row < m.rows(); ++row) {
    for (int col = 0; col < m.cols(); ++col) r4[idx++] = m(row, col);
  }
  return r4;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return k;
}

Matrix odot(const Vector& u, const Vector& v) {
  return u * v.transpose() + v * u.transpose();
}

// J implied by an adapted frame: J f_i = f_{m+i}, J f_{m+i} = -f_i.
Matrix implied_j(const Matrix& frame) {
  const int n = static_cast<int>(frame.rows());
  const int m = n / 2;
  Matrix j = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    j += frame.col(m + i) * frame.col(i).transpose() -
         frame.col(i) * frame.col(m + i).transpose();
  }
  return j;
}

}  // namespace

Matrix standard_complex_structure(int m) {
  if (m < 1) throw std::invalid_argument("complex structure: m >= 1");
  const int n = 2 * m;
  Matrix j = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) {
    j(m + i, i) = 1.0;
    j(i, m + i) = -1.0;
  }
  return j;
}

Matrix block_complex_structure(const std::vector<int>& ms) {
  int n = 0;
  for (int m : ms) n += 2 * m;
  Matrix j = Matrix::Zero(n, n);
  int off = 0;
  for (int m : ms) {
    j.block(off, off, 2 * m, 2 * m) = standard_complex_structure(m);
    off += 2 * m;
  }
  return j;
}

void require_complex_structure(const Matrix& j, double tol) {
  const int n = static_cast<int>(j.rows());
  if (j.cols() != n || n % 2 != 0) {
    throw std::invalid_argument("complex structure must be even-dimensional");
  }
  const Matrix id = Matrix::Identity(n, n);
  if ((j * j + id).cwiseAbs().maxCoeff() > tol ||
      (j.transpose() * j - id).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("not a complex structure");
  }
}

double kahler_residual(const AlgebraicCurvature& r, const Matrix& j) {
  const int n = r.n();
  const Matrix r2 = pair_matrix(n, r.rank4());
  const Matrix k = kron(j, j);
  return (r2 - r2 * k).cwiseAbs().maxCoeff();
}

KahlerBases build_kahler_bases(int m, const Matrix& frame) {
  const int n = 2 * m;
  if (frame.rows() != n || frame.cols() != n) {
    throw std::invalid_argument("build_kahler_bases: frame must be 2m x 2m");
  }
  require_orthonormal(frame);
  KahlerBases kb;
  auto f = [&](int i) { return Vector(frame.col(i)); };
  // E-
  for (int i = 0; i < m; ++i) {
    for (int jx = i + 1; jx < m; ++jx) {
      kb.e_minus.push_back(
          0.5 * (odot(f(i), f(jx)) + odot(f(m + i), f(m + jx))));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int jx = i + 1; jx < m; ++jx) {
      kb.e_minus.push_back(
          0.5 * (odot(f(i), f(m + jx)) - odot(f(m + i), f(jx))));
    }
  }
  for (int k = 1; k <= m - 1; ++k) {
    Matrix eta = static_cast<double>(k) *
                 (odot(f(k), f(k)) + odot(f(m + k), f(m + k)));
    for (int i = 0; i < k; ++i) {
      eta -= odot(f(i), f(i)) + odot(f(m + i), f(m + i));
    }
    kb.e_minus.push_back(eta / std::sqrt(8.0 * k * (k + 1.0)));
  }
  // E+
  for (int i = 0; i < m; ++i) {
    for (int jx = i + 1; jx < m; ++jx) {
      kb.e_plus.push_back(
          0.5 * (odot(f(i), f(jx)) - odot(f(m + i), f(m + jx))));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int jx = i + 1; jx < m; ++jx) {
      kb.e_plus.push_back(
          0.5 * (odot(f(i), f(m + jx)) + odot(f(m + i), f(jx))));
    }
  }
  for (int i = 0; i < m; ++i) {
    kb.e_plus.push_back(
        (odot(f(i), f(i)) - odot(f(m + i), f(m + i))) / (2.0 * std::sqrt(2.0)));
  }
  for (int i = 0; i < m; ++i) {
    kb.e_plus.push_back(odot(f(i), f(m + i)) / std::sqrt(2.0));
  }
  return kb;
}

KahlerBases build_kahler_bases(int m) {
  return build_kahler_bases(m, Matrix::Identity(2 * m, 2 * m));
}

AlgebraicCurvature constant_hsc(int m, double c) {
  const int n = 2 * m;
  Dim d(n);
  const Matrix j = standard_complex_structure(m);
  std::vector<double> r4(static_cast<std::size_t>(n) * n * n * n);
  auto del = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int jj = 0; jj < n; ++jj) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l, ++idx) {
          r4[idx] = (c / 4.0) *
                    (del(i, k) * del(jj, l) - del(i, l) * del(jj, k) +
                     j(k, i) * j(l, jj) - j(l, i) * j(k, jj) +
                     2.0 * j(jj, i) * j(l, k));
        }
      }
    }
  }
  return AlgebraicCurvature(n, wedge_from_rank4(n, r4));
}

AlgebraicCurvature kahler_symmetrize(const AlgebraicCurvature& r,
                                     const Matrix& j, double tol,
                                     int max_rounds) {
  require_complex_structure(j);
  const int n = r.n();
  const Matrix k = kron(j, j);
  const Matrix p_plus = 0.5 * (Matrix::Identity(n * n, n * n) + k);
  AlgebraicCurvature cur = r;
  for (int round = 0; round < max_rounds; ++round) {
    const double scale = std::max(1.0, cur.wedge_matrix().norm());
    if (kahler_residual(cur, j) <= tol * scale &&
        cur.bianchi_residual() <= tol * scale) {
      return cur;
    }
    const Matrix r2 = pair_matrix(n, cur.rank4());
    const Matrix sym = p_plus * r2 * p_plus;
    cur = bianchi_project(
        n, wedge_from_rank4(n, rank4_from_pair_matrix(sym)));
  }
  throw std::runtime_error(
      "kahler_symmetrize: did not converge within max_rounds");
}

AlgebraicCurvature random_kahler(int m, std::uint64_t seed, double scale) {
  const AlgebraicCurvature sym = kahler_symmetrize(
      random_curvature(2 * m, seed), standard_complex_structure(m));
  // unit Frobenius norm keeps identity residuals comparable across seeds
  return AlgebraicCurvature(2 * m,
                            scale / sym.norm() * sym.wedge_matrix());
}

double TraceIdentityResiduals::max() const {
  return std::max(std::max(pair_sums, theta_diag),
                  std::max(plus_trace, minus_trace));
}

TraceIdentityResiduals trace_identities(const AlgebraicCurvature& r,
                                        const Matrix& frame) {
  const int n = r.n();
  if (n % 2 != 0) throw std::invalid_argument("trace_identities: odd n");
  const int m = n / 2;
  require_orthonormal(frame);
  const Matrix j = implied_j(frame);
  require_complex_structure(j);
  const double kres = kahler_residual(r, j);
  if (kres > 1e-8 * std::max(1.0, r.wedge_matrix().cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("trace_identities: input is not Kahler");
  }

  const KahlerBases kb = build_kahler_bases(m, frame);
  const double lbar = scalar(r) / (n * (n - 1.0));
  auto diag = [&](const Matrix& t) { return second_kind_form(r, t, t); };

  TraceIdentityResiduals out;
  // pair sums: phi-_{ij}, psi-_{ij} occupy slots [0, m(m-1)/2) and
  // [m(m-1)/2, m(m-1)) of e_minus in matching (i,j) order.
  const int npairs = m * (m - 1) / 2;
  {
    int p = 0;
    for (int i = 0; i < m; ++i) {
      for (int jx = i + 1; jx < m; ++jx, ++p) {
        const double lhs = diag(kb.e_minus[p]) + diag(kb.e_minus[npairs + p]);
        const double rhs =
            -2.0 * quadrilinear(r, frame.col(i), frame.col(m + i), frame.col(jx),
                        frame.col(m + jx));
        out.pair_sums = std::max(out.pair_sums, std::abs(lhs - rhs));
      }
    }
  }
  // theta diagonals: slots [2*npairs, 2*npairs+m) are theta_i, then
  // theta_{m+i}.
  {
    const int off = 2 * npairs;
    for (int i = 0; i < m; ++i) {
      const double ti = diag(kb.e_plus[off + i]);
      const double tmi = diag(kb.e_plus[off + m + i]);
      const double hsc =
          quadrilinear(r, frame.col(i), frame.col(m + i), frame.col(i),
               frame.col(m + i));
      out.theta_diag = std::max(out.theta_diag,
                                std::max(std::abs(ti - tmi),
                                         std::abs(ti - hsc)));
    }
  }
  // global traces
  {
    double plus_sum = 0.0, minus_sum = 0.0;
    for (const auto& t : kb.e_plus) plus_sum += diag(t);
    for (const auto& t : kb.e_minus) minus_sum += diag(t);
    out.plus_trace = std::abs(plus_sum - 2.0 * m * (2.0 * m - 1.0) * lbar);
    out.minus_trace =
        std::abs(minus_sum + (m - 1.0) * (2.0 * m - 1.0) * lbar);
  }
  return out;
}

HscStats hsc_stats(const AlgebraicCurvature& r, const Matrix& j, int samples,
                   std::uint64_t seed) {
  const int n = r.n();
  Rng rng(seed);
  HscStats st;
  double sum = 0.0, sum2 = 0.0;
  st.min = std::numeric_limits<double>::infinity();
  st.max = -st.min;
  for (int s = 0; s < samples; ++s) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x(i) = rng.gaussian();
    x.normalize();
    const Vector jx = j * x;
    const double v = quadrilinear(r, x, jx, x, jx);
    sum += v;
    sum2 += v * v;
    st.min = std::min(st.min, v);
    st.max = std::max(st.max, v);
  }
  st.mean = sum / samples;
  st.variance = std::max(0.0, sum2 / samples - st.mean * st.mean);
  return st;
}

KahlerDiagnostic kahler_cone_diagnostic(const AlgebraicCurvature& r,
                                        const Matrix& j, double alpha,
                                        double theta, int hsc_samples,
                                        std::uint64_t seed) {
  const int n = r.n();
  if (n % 2 != 0) throw std::invalid_argument("kahler diagnostic: odd n");
  const int m = n / 2;
  if (m < 2) throw std::invalid_argument("kahler diagnostic: m >= 2");
  require_complex_structure(j);

  KahlerDiagnostic d;
  d.b_threshold = b_m_alpha(m, alpha);
  const SecondKindOperator op = induce_second_kind(r);
  d.plus.margin = cone_margin(op.eigenvalues, alpha, theta);
  const Vector neg = (-op.eigenvalues).reverse();
  d.minus.margin = cone_margin(neg, alpha, theta);
  auto classify = [](double margin) {
    if (margin > kTolEigen) return ConeClass::interior;
    if (margin < -kTolEigen) return ConeClass::outside;
    return ConeClass::boundary;
  };
  d.plus.cls = classify(d.plus.margin);
  d.minus.cls = classify(d.minus.margin);
  d.r_norm = r.norm();
  d.hsc = hsc_stats(r, j, hsc_samples, seed);
  d.hsc_defect = d.hsc.variance;

  const bool member = in_cone(d.plus) || in_cone(d.minus);
  if (member && theta < d.b_threshold - 1e-12) {
    d.flatness_expected = true;
    d.ok = d.r_norm <= 1e-7;
  } else if (member && std::abs(theta - d.b_threshold) <= kTolEigen &&
             std::abs(alpha - (m * m - 1.0)) > kTolEigen) {
    d.constant_hsc_expected = true;
    d.ok = d.hsc_defect <= 1e-6;
  }
  return d;
}

}  // namespace c2k
