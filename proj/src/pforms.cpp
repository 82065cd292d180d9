#include "curvature2k/pforms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace c2k {

namespace {

Matrix odot(const Vector& u, const Vector& v) {
  return u * v.transpose() + v * u.transpose();
}

}  // namespace

PFormSpace::PFormSpace(int n, int p) : n_(n), p_(p) {
  if (p < 1 || p > n - 1) {
    throw std::invalid_argument("PFormSpace: requires 1 <= p <= n-1");
  }
  std::vector<int> cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    indices_.push_back(cur);
    int k = p - 1;
    while (k >= 0 && cur[k] == n - p + k) --k;
    if (k < 0) break;
    ++cur[k];
    for (int l = k + 1; l < p; ++l) cur[l] = cur[l - 1] + 1;
  }
  for (int a = 0; a < static_cast<int>(indices_.size()); ++a) {
    rank_[indices_[a]] = a;
  }
}

std::pair<int, double> PFormSpace::locate(std::vector<int> tuple) const {
  // insertion sort, tracking the permutation sign
  double sign = 1.0;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      std::swap(tuple[j - 1], tuple[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i - 1] == tuple[i]) return {-1, 0.0};
  }
  const auto it = rank_.find(tuple);
  if (it == rank_.end()) return {-1, 0.0};
  return {it->second, sign};
}

Matrix derivation_matrix(const PFormSpace& space, const Matrix& a) {
  const int n = space.n();
  if (a.rows() != n || a.cols() != n) {
    throw std::invalid_argument("derivation_matrix: wrong tensor size");
  }
  const int dim = space.dim();
  Matrix d = Matrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const std::vector<int>& idx = space.index(col);
    for (int k = 0; k < space.p(); ++k) {
      for (int j = 0; j < n; ++j) {
        const double c = a(j, idx[k]);
        if (c == 0.0) continue;
        std::vector<int> tuple = idx;
        tuple[k] = j;
        const auto [row, sign] = space.locate(std::move(tuple));
        if (row >= 0) d(row, col) += sign * c;
      }
    }
  }
  return d;
}

Vector s_action(const PFormSpace& space, const Matrix& a,
                const Vector& omega) {
  return derivation_matrix(space, a) * omega;
}

std::pair<double, double> norm_identity(const PFormSpace& space,
                                        const Vector& omega) {
  const int n = space.n();
  const int p = space.p();
  double sum = 0.0;
  for (const Matrix& s : standard_basis_s20(n)) {
    sum += s_action(space, s, omega).squaredNorm();
  }
  const double rhs = 2.0 * n / (p * (n - p) * (n + 2.0)) * sum;
  return {omega.squaredNorm(), rhs};
}

Matrix curvature_term(const AlgebraicCurvature& r, int p) {
  const int n = r.n();
  const PFormSpace space(n, p);
  const SecondKindOperator op = induce_second_kind(r);
  Matrix ct = Matrix::Zero(space.dim(), space.dim());
  for (int a = 0; a < op.eigenvalues.size(); ++a) {
    const Matrix d = derivation_matrix(space, op.eigentensor(a));
    ct += op.eigenvalues(a) * d.transpose() * d;
  }
  const Matrix ric = ricci(r);
  ct += (n - 2.0 * p) / n * derivation_matrix(space, ric);
  ct += static_cast<double>(p) * p / (static_cast<double>(n) * n) *
        ric.trace() * Matrix::Identity(space.dim(), space.dim());
  return 0.5 * (ct + ct.transpose());
}

Matrix weitzenbock_oracle(const AlgebraicCurvature& r, int p) {
  const int n = r.n();
  const PFormSpace space(n, p);
  Eigen::SelfAdjointEigenSolver<Matrix> es(r.wedge_matrix());
  Matrix ct = Matrix::Zero(space.dim(), space.dim());
  for (int b = 0; b < es.eigenvalues().size(); ++b) {
    // eigen-two-form as a skew matrix on the lexicographic wedge basis
    Matrix omega = Matrix::Zero(n, n);
    for (int a = 0; a < es.eigenvalues().size(); ++a) {
      const auto [i, j] = wedge_pair(a, n);
      omega(i, j) += es.eigenvectors()(a, b);
      omega(j, i) -= es.eigenvectors()(a, b);
    }
    const Matrix d = derivation_matrix(space, omega);
    ct += es.eigenvalues()(b) * d.transpose() * d;
  }
  ct *= 1.5;
  return 0.5 * (ct + ct.transpose());
}

std::pair<double, double> q_quantity(const AlgebraicCurvature& r,
                                     const Matrix& frame, int p) {
  const int n = r.n();
  if (p < 1 || 2 * p > n) {
    throw std::invalid_argument("q_quantity: requires 1 <= p <= n/2");
  }
  require_orthonormal(frame);
  auto f = [&](int i) { return Vector(frame.col(i)); };
  auto a_ij = [&](int i, int j) {
    const Matrix phi = odot(f(i), f(j)) / std::sqrt(2.0);
    return second_kind_form(r, phi, phi);
  };
  auto b_k = [&](int k) {  // 0-based k, spans the trailing n-k-1 directions
    const double w = n - k - 1.0;
    Matrix psi = w * odot(f(k), f(k));
    for (int l = k + 1; l < n; ++l) psi -= odot(f(l), f(l));
    psi /= 2.0 * std::sqrt(w * (w + 1.0));
    return second_kind_form(r, psi, psi);
  };
  double q_def = 0.0;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) q_def += 2.0 * (n - p + 1.0) * a_ij(i, j);
  }
  for (int i = 0; i < p; ++i) {
    for (int j = p; j < n; ++j) q_def += (n - p) * a_ij(i, j);
  }
  for (int k = 0; k < p; ++k) q_def += (n - p) * b_k(k);

  const Matrix ric = ricci(r);
  const double lbar = ric.trace() / (n * (n - 1.0));
  double ric_sum = 0.0;
  for (int i = 0; i < p; ++i) ric_sum += f(i).dot(ric * f(i));
  const double q_id = (n - p + 2.0) * ric_sum - (n - 1.0) * p * lbar;
  return {q_def, q_id};
}

double q_lower_bound_gap(const AlgebraicCurvature& r, const Matrix& frame,
                         int p) {
  const int n = r.n();
  const double q = q_quantity(r, frame, p).first;
  const SecondKindOperator op = induce_second_kind(r);
  const double bound =
      2.0 * (n - p + 1.0) *
      partial_sum(op.eigenvalues, (n - 1.0) * p / 2.0);
  return q - bound;
}

ImplicationReport p_ricci_check(const AlgebraicCurvature& r, int p,
                                double theta, double tol) {
  const int n = r.n();
  if (p < 1 || 2 * p > n) {
    throw std::invalid_argument("p_ricci_check: requires 1 <= p <= n/2");
  }
  const SecondKindOperator op = induce_second_kind(r);
  const double alpha = (n - 1.0) * p / 2.0;
  const double hyp = cone_margin(op.eigenvalues, alpha, theta);
  Eigen::SelfAdjointEigenSolver<Matrix> es(ricci(r));
  double kyfan = 0.0;  // frame minimum of sum_{i<=p} Ric(f_i, f_i)
  for (int i = 0; i < p; ++i) kyfan += es.eigenvalues()(i);
  const double bound = (n - 1.0) * p / (n - p + 2.0) *
                       (1.0 - (n - p + 1.0) * theta) * op.lambda_bar;
  return classify_implication(hyp, kyfan - bound, tol);
}

CertificateClass betti_certificate(const AlgebraicCurvature& r, int p,
                                   double tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(curvature_term(r, p));
  const double lo = es.eigenvalues()(0);
  if (lo > tol) return CertificateClass::positive;
  if (lo >= -tol) return CertificateClass::semidefinite;
  return CertificateClass::indefinite;
}

ImplicationReport weight_principle_check(const AlgebraicCurvature& r, int p,
                                         double beta, double tol) {
  const int n = r.n();
  const PFormSpace space(n, p);
  const SecondKindOperator op = induce_second_kind(r);
  const Vector shifted =
      op.eigenvalues.array() + beta * op.lambda_bar;
  const double alpha = (n + 2.0) / 2.0;
  const double hyp = partial_sum(shifted, alpha) / alpha;
  Matrix w = Matrix::Zero(space.dim(), space.dim());
  for (int a = 0; a < op.eigenvalues.size(); ++a) {
    const Matrix d = derivation_matrix(space, op.eigentensor(a));
    w += shifted(a) * d.transpose() * d;
  }
  w = 0.5 * (w + w.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(w);
  return classify_implication(hyp, es.eigenvalues()(0), tol);
}

}  // namespace c2k
