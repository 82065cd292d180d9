#include "curvature2k/cones.hpp"

#include <cmath>
#include <stdexcept>

namespace c2k {

double partial_sum(const Vector& ascending, double x) {
  const int len = static_cast<int>(ascending.size());
  if (x < 1.0 || x > static_cast<double>(len)) {
    throw std::out_of_range("partial_sum: x out of [1, len]");
  }
  for (int i = 0; i + 1 < len; ++i) {
    if (ascending(i) > ascending(i + 1) + 1e-15) {
      throw std::invalid_argument("partial_sum: input not ascending");
    }
  }
  const int fl = static_cast<int>(std::floor(x));
  double s = 0.0;
  for (int i = 0; i < fl; ++i) s += ascending(i);
  if (fl < len) s += (x - fl) * ascending(fl);
  return s;
}

double cone_margin(const Vector& ascending, double alpha, double theta) {
  const int len = static_cast<int>(ascending.size());
  if (alpha < 1.0 || alpha >= static_cast<double>(len)) {
    throw std::out_of_range("cone_margin: alpha out of [1, N)");
  }
  if (theta <= -1.0) throw std::out_of_range("cone_margin: theta <= -1");
  return partial_sum(ascending, alpha) / alpha + theta * ascending.mean();
}

ConeVerdict cone_membership(const SecondKindOperator& op, ConeParams p,
                            double tol) {
  ConeVerdict v;
  v.margin = cone_margin(op.eigenvalues, p.alpha, p.theta);
  if (v.margin > tol) {
    v.cls = ConeClass::interior;
  } else if (v.margin < -tol) {
    v.cls = ConeClass::outside;
  } else {
    v.cls = ConeClass::boundary;
  }
  return v;
}

double theta_cylinder(int n, double alpha) {
  const double nn = n;
  const double big_n = (nn - 1.0) * (nn + 2.0) / 2.0;
  if (alpha < 1.0 || alpha >= big_n) {
    throw std::out_of_range("theta_cylinder: alpha out of [1, N)");
  }
  if (alpha <= nn) return 1.0 / alpha;
  return 1.0 / alpha + nn * (nn - alpha) / ((nn - 2.0) * alpha);
}

double a_np(int n, int p) {
  if (n < 5 || p < 2 || 2 * p > n) {
    throw std::out_of_range("a_np: requires n >= 5 and 2 <= p <= n/2");
  }
  const double nd = n, pd = p;
  const double num = 2.0 * (nd - 1.0) * (nd * pd + nd - pd * pd);
  const double den = 2.0 * (nd - 1.0) * (nd - 2.0 * pd) * (nd - pd + 1.0) +
                     (nd - pd) * (nd + 2.0) * (nd - pd + 2.0);
  return num / den;
}

double b_m_alpha(int m, double alpha) {
  if (m < 2) throw std::out_of_range("b_m_alpha: requires m >= 2");
  const double md = m;
  const double big_n = (2.0 * md - 1.0) * (md + 1.0);  // N(2m)
  if (alpha < 1.0 || alpha >= big_n) {
    throw std::out_of_range("b_m_alpha: alpha out of [1, (2m-1)(m+1))");
  }
  const double lead = (2.0 * md - 1.0) / (md + 1.0);
  if (alpha <= md * md - 1.0) return lead;
  return lead * (3.0 * (md * md - 1.0) - 2.0 * alpha) / alpha;
}

bool cone_monotonicity_check(const SecondKindOperator& op, double a1,
                             double a2, double t1, double t2, double tol) {
  if (a1 > a2 || t1 > t2) {
    throw std::invalid_argument("cone_monotonicity_check: need a1<=a2, t1<=t2");
  }
  const ConeVerdict v1 = cone_membership(op, {a1, t1}, tol);
  if (!in_cone(v1)) return true;  // vacuous
  return in_cone(cone_membership(op, {a2, t2}, tol));
}

}  // namespace c2k
