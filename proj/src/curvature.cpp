#include "curvature2k/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace c2k {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Sparse expansion of a symmetric tensor over the products e_i (.) e_j:
// T = sum_{i<j} T_ij e_i(.)e_j + sum_i (T_ii/2) e_i(.)e_i.
struct OdotTerm {
  int i, j;
  double c;
};

std::vector<OdotTerm> odot_expansion(const Matrix& t, double drop = 0.0) {
  const int n = static_cast<int>(t.rows());
  std::vector<OdotTerm> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double c = (i == j) ? 0.5 * t(i, i) : t(i, j);
      if (std::abs(c) > drop) terms.push_back({i, j, c});
    }
  }
  return terms;
}

}  // namespace

std::vector<double> rank4_from_wedge(int n, const Matrix& m) {
  std::vector<double> r4(static_cast<std::size_t>(n) * n * n * n, 0.0);
  auto at = [&](int i, int j, int k, int l) -> double& {
    return r4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int a = wedge_index(i, j, n);
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          const int b = wedge_index(k, l, n);
          const double v = m(a, b);
          at(i, j, k, l) = v;
          at(j, i, k, l) = -v;
          at(i, j, l, k) = -v;
          at(j, i, l, k) = v;
        }
      }
    }
  }
  return r4;
}

Matrix wedge_from_rank4(int n, const std::vector<double>& r4) {
  const int n2 = n * (n - 1) / 2;
  Matrix m(n2, n2);
  auto at = [&](int i, int j, int k, int l) {
    return r4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
          m(wedge_index(i, j, n), wedge_index(k, l, n)) = at(i, j, k, l);
        }
      }
    }
  }
  return m;
}

AlgebraicCurvature::AlgebraicCurvature(int n, Matrix wedge_matrix)
    : n_(n), wedge_(std::move(wedge_matrix)) {
  Dim d(n);
  if (wedge_.rows() != d.wedge2() || wedge_.cols() != d.wedge2()) {
    throw std::invalid_argument("AlgebraicCurvature: wrong matrix size");
  }
  const double s = std::max(1.0, max_abs(wedge_));
  if (max_abs(wedge_ - wedge_.transpose()) > kTolExact * s) {
    throw std::invalid_argument("AlgebraicCurvature: matrix not symmetric");
  }
  wedge_ = 0.5 * (wedge_ + wedge_.transpose());
  r4_ = rank4_from_wedge(n_, wedge_);
  if (bianchi_residual() > kTolExact * s) {
    throw std::invalid_argument(
        "AlgebraicCurvature: first Bianchi identity violated");
  }
}

double AlgebraicCurvature::bianchi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        for (int l = 0; l < n_; ++l) {
          worst = std::max(worst,
                           std::abs(r(i, j, k, l) + r(i, k, l, j) +
                                    r(i, l, j, k)));
        }
      }
    }
  }
  return worst;
}

double AlgebraicCurvature::norm() const { return wedge_.norm(); }

AlgebraicCurvature bianchi_project(int n, const Matrix& wedge_matrix) {
  Dim d(n);
  if (wedge_matrix.rows() != d.wedge2() ||
      wedge_matrix.cols() != d.wedge2()) {
    throw std::invalid_argument("bianchi_project: wrong matrix size");
  }
  if (max_abs(wedge_matrix - wedge_matrix.transpose()) >
      kTolExact * std::max(1.0, max_abs(wedge_matrix))) {
    throw std::invalid_argument("bianchi_project: matrix not symmetric");
  }
  const std::vector<double> r4 = rank4_from_wedge(n, wedge_matrix);
  auto at = [&](int i, int j, int k, int l) {
    return r4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  std::vector<double> out(r4.size());
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l, ++idx) {
          const double anti =
              (at(i, j, k, l) + at(i, k, l, j) + at(i, l, j, k)) / 3.0;
          out[idx] = at(i, j, k, l) - anti;
        }
      }
    }
  }
  return AlgebraicCurvature(n, wedge_from_rank4(n, out));
}

AlgebraicCurvature random_curvature(int n, std::uint64_t seed, double scale) {
  Dim d(n);
  Rng rng(seed);
  Matrix m(d.wedge2(), d.wedge2());
  for (int a = 0; a < d.wedge2(); ++a) {
    for (int b = a; b < d.wedge2(); ++b) {
      m(a, b) = m(b, a) = scale * rng.gaussian();
    }
  }
  return bianchi_project(n, m);
}

AlgebraicCurvature scale(const AlgebraicCurvature& r, double s) {
  return AlgebraicCurvature(r.n(), s * r.wedge_matrix());
}

AlgebraicCurvature add(const AlgebraicCurvature& a,
                       const AlgebraicCurvature& b) {
  if (a.n() != b.n()) throw std::invalid_argument("add: dimension mismatch");
  return AlgebraicCurvature(a.n(), a.wedge_matrix() + b.wedge_matrix());
}

Matrix ricci(const AlgebraicCurvature& r) {
  const int n = r.n();
  Matrix ric = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += r.r(i, k, j, k);
      ric(i, j) = s;
    }
  }
  return ric;
}

double scalar(const AlgebraicCurvature& r) { return ricci(r).trace(); }

double sectional(const AlgebraicCurvature& r, int i, int j) {
  if (i == j) throw std::invalid_argument("sectional: i == j");
  return r.r(i, j, i, j);
}

double quadrilinear(const AlgebraicCurvature& r, const Vector& a,
                    const Vector& b, const Vector& c, const Vector& d) {
  const Vector u = wedge_coords(a, b);
  const Vector v = wedge_coords(c, d);
  return u.dot(r.wedge_matrix() * v);
}

double sectional_plane(const AlgebraicCurvature& r, const Vector& u,
                       const Vector& v) {
  const Vector c = wedge_coords(u, v);
  const double area2 = 0.5 * c.squaredNorm() * 2.0;  // |u /\ v|^2
  if (area2 <= 0.0) throw std::invalid_argument("sectional_plane: degenerate");
  return c.dot(r.wedge_matrix() * c) / area2;
}

double second_kind_form(const AlgebraicCurvature& r, const Matrix& a,
                        const Matrix& b) {
  const int n = r.n();
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double rbar_ij = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) rbar_ij += r.r(i, k, l, j) * a(k, l);
      }
      s += rbar_ij * b(i, j);
    }
  }
  return s;
}

Matrix SecondKindOperator::eigentensor(int a) const {
  const auto basis = standard_basis_s20(n);
  Matrix t = Matrix::Zero(n, n);
  for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
    t += eigenvectors(b, a) * basis[b];
  }
  return t;
}

SecondKindOperator induce_second_kind(const AlgebraicCurvature& r) {
  const int n = r.n();
  const auto basis = standard_basis_s20(n);
  const int nn = static_cast<int>(basis.size());
  std::vector<std::vector<OdotTerm>> expansions;
  expansions.reserve(nn);
  for (const auto& t : basis) expansions.push_back(odot_expansion(t));

  SecondKindOperator op;
  op.n = n;
  op.matrix = Matrix::Zero(nn, nn);
  for (int a = 0; a < nn; ++a) {
    for (int b = a; b < nn; ++b) {
      double s = 0.0;
      for (const auto& ta : expansions[a]) {
        for (const auto& tb : expansions[b]) {
          // Rcirc(e_i(.)e_j, e_k(.)e_l) = 2(R_{iklj} + R_{ilkj})
          s += ta.c * tb.c * 2.0 *
               (r.r(ta.i, tb.i, tb.j, ta.j) + r.r(ta.i, tb.j, tb.i, ta.j));
        }
      }
      op.matrix(a, b) = op.matrix(b, a) = s;
    }
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.matrix);
  op.eigenvalues = es.eigenvalues();
  op.eigenvectors = es.eigenvectors();
  op.lambda_bar = op.eigenvalues.mean();
  return op;
}

void require_orthonormal(const Matrix& frame, double tol) {
  const Matrix gram = frame.transpose() * frame;
  const Matrix id = Matrix::Identity(frame.cols(), frame.cols());
  if ((gram - id).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("frame is not orthonormal");
  }
}

double isotropic_expression(const AlgebraicCurvature& r, const Matrix& frame) {
  if (r.n() < 4) throw std::invalid_argument("isotropic: requires n >= 4");
  if (frame.cols() != 4) {
    throw std::invalid_argument("isotropic: frame must have 4 vectors");
  }
  require_orthonormal(frame);
  // R_1313 + R_2424 + 2 R_1342 = <Rhat(A), A> for A = f1 /\ f3 + f4 /\ f2,
  // R_1414 + R_2323 + 2 R_1423 = <Rhat(B), B> for B = f1 /\ f4 + f2 /\ f3;
  // the Bianchi identity turns the cross terms into -2 R_1234.
  const Vector a = wedge_coords(frame.col(0), frame.col(2)) +
                   wedge_coords(frame.col(3), frame.col(1));
  const Vector b = wedge_coords(frame.col(0), frame.col(3)) +
                   wedge_coords(frame.col(1), frame.col(2));
  const Matrix& m = r.wedge_matrix();
  return a.dot(m * a) + b.dot(m * b);
}

double frame_quadratic(const AlgebraicCurvature& r, const Matrix& frame,
                       double t) {
  if (std::abs(t) > 1.0) {
    throw std::invalid_argument("frame_quadratic: t must be in [-1,1]");
  }
  if (frame.cols() != 4) {
    throw std::invalid_argument("frame_quadratic: frame must have 4 vectors");
  }
  require_orthonormal(frame);
  const Matrix& m = r.wedge_matrix();
  auto comp = [&](int a, int b, int c, int d) {
    const Vector u = wedge_coords(frame.col(a), frame.col(b));
    const Vector v = wedge_coords(frame.col(c), frame.col(d));
    return u.dot(m * v);
  };
  return comp(0, 2, 0, 2) + t * t * comp(0, 3, 0, 3) + comp(1, 2, 1, 2) +
         t * t * comp(1, 3, 1, 3) - 2.0 * t * comp(0, 1, 2, 3);
}

}  // namespace c2k
