#pragma once

// The eigenvalue cones C(alpha, theta): membership margins, fractional
// partial sums, and the closed-form boundary thresholds for the model
// families (cylinder, Betti, complex projective space).

#include "curvature2k/curvature.hpp"
#include "curvature2k/tensor_space.hpp"

namespace c2k {

// f(A,x) = a_1 + ... + a_[x] + (x-[x]) a_{[x]+1} over the ascending list.
// Requires 1 <= x <= len and an ascending input.
double partial_sum(const Vector& ascending, double x);

struct ConeParams {
  double alpha = 1.0;  // in [1, N)
  double theta = 0.0;  // > -1
};

enum class ConeClass { interior, boundary, outside };

struct ConeVerdict {
  double margin = 0.0;  // alpha^{-1} (lambda_1+...+lambda_alpha) + theta*lbar
  ConeClass cls = ConeClass::outside;
};

// Margin from a raw ascending spectrum; lambda_bar is its mean.
double cone_margin(const Vector& ascending, double alpha, double theta);

ConeVerdict cone_membership(const SecondKindOperator& op, ConeParams p,
                            double tol = kTolEigen);

inline bool in_cone(const ConeVerdict& v) {
  return v.cls != ConeClass::outside;
}

// Boundary threshold of S^{n-1} x S^1: 1/alpha for alpha <= n, and
// 1/alpha + n(n-alpha)/((n-2) alpha) for n <= alpha < N.
double theta_cylinder(int n, double alpha);

// A_{n,p} = 2(n-1)(np+n-p^2) /
//           (2(n-1)(n-2p)(n-p+1) + (n-p)(n+2)(n-p+2)), 2 <= p <= n/2.
double a_np(int n, int p);

// Boundary threshold of CP^m: (2m-1)/(m+1) for alpha <= m^2-1, and
// (2m-1)/(m+1) * (3(m^2-1)-2alpha)/alpha up to alpha < (2m-1)(m+1).
double b_m_alpha(int m, double alpha);

// True iff membership at (a1,t1) implies membership at (a2,t2) for this
// operator; requires a1 <= a2 and t1 <= t2. Used as a test predicate.
bool cone_monotonicity_check(const SecondKindOperator& op, double a1,
                             double a2, double t1, double t2,
                             double tol = kTolEigen);

}  // namespace c2k
