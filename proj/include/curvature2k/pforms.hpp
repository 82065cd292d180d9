#pragma once

// Alternating p-form coefficient spaces, derivation actions of two-tensors,
// the Bochner curvature term assembled from second-kind eigentensors, its
// independent first-kind (Weitzenboeck) assembly, and the Q-quantity with
// its p-Ricci consequences.

#include <map>
#include <utility>
#include <vector>

#include "curvature2k/implications.hpp"

namespace c2k {

// Coefficients indexed by strictly increasing multi-indices of length p,
// extended alternatingly; |omega|^2 is the plain dot product.
class PFormSpace {
 public:
  PFormSpace(int n, int p);

  int n() const { return n_; }
  int p() const { return p_; }
  int dim() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& index(int a) const { return indices_[a]; }
  // Position of a (not necessarily sorted) index tuple, with sign; returns
  // {-1, 0} when the tuple has a repeated index.
  std::pair<int, double> locate(std::vector<int> tuple) const;

 private:
  int n_, p_;
  std::vector<std::vector<int>> indices_;
  std::map<std::vector<int>, int> rank_;
};

// Matrix of the derivation action omega -> sum_k omega(..., A X_k, ...) on
// the coefficient space; works for symmetric and skew A alike.
Matrix derivation_matrix(const PFormSpace& space, const Matrix& a);

Vector s_action(const PFormSpace& space, const Matrix& a,
                const Vector& omega);

// (lhs, rhs) of the basis-completeness norm identity
// |omega|^2 = 2n / (p(n-p)(n+2)) * sum_alpha |S_alpha omega|^2
// with the sum over standard_basis_s20(n).
std::pair<double, double> norm_identity(const PFormSpace& space,
                                        const Vector& omega);

// Symmetric matrix of the quadratic form
// sum_alpha lambda_alpha |S_alpha omega|^2
//   + (n-2p)/n <D_Ric omega, omega> + p^2/n^2 S |omega|^2
// over second-kind eigentensors S_alpha.
Matrix curvature_term(const AlgebraicCurvature& r, int p);

// Independent assembly from the first-kind operator: 3/2 times the
// classical Weitzenboeck curvature term, with eigen-two-forms acting as
// derivations. Must equal curvature_term on every input.
Matrix weitzenbock_oracle(const AlgebraicCurvature& r, int p);

// Q evaluated two ways in the given orthonormal frame: from its defining
// weighted sums over Rcirc diagonal entries, and from the closed identity
// Q = (n-p+2) sum_{i<=p} Ric_ii - (n-1) p lambda_bar.
std::pair<double, double> q_quantity(const AlgebraicCurvature& r,
                                     const Matrix& frame, int p);

// Q minus its spectral lower bound
// 2(n-p+1) * partial_sum(spectrum, (n-1)p/2); nonnegative for every frame.
double q_lower_bound_gap(const AlgebraicCurvature& r, const Matrix& frame,
                         int p);

// Membership in C((n-1)p/2, theta) implies
// sum of the p smallest Ricci eigenvalues >=
//   (n-1)p/(n-p+2) * (1-(n-p+1)theta) * lambda_bar;
// the frame minimum of sum_{i<=p} Ric(f_i,f_i) is the Ky Fan sum, so the
// conclusion margin is exact.
ImplicationReport p_ricci_check(const AlgebraicCurvature& r, int p,
                                double theta, double tol = kTolEigen);

enum class CertificateClass { positive, semidefinite, indefinite };

// Sign class of the smallest curvature_term eigenvalue.
CertificateClass betti_certificate(const AlgebraicCurvature& r, int p,
                                   double tol = 1e-8);

// If Rcirc + beta lambda_bar id is (n+2)/2-nonnegative then
// sum_alpha (lambda_alpha + beta lambda_bar) D_alpha^T D_alpha is positive
// semidefinite on p-forms. Hypothesis margin is the shifted cone margin at
// theta = 0; conclusion margin is the smallest eigenvalue of the sum.
ImplicationReport weight_principle_check(const AlgebraicCurvature& r, int p,
                                         double beta, double tol = kTolEigen);

}  // namespace c2k
