#pragma once

// Conditional implications: cone membership of the second-kind operator
// implies Ricci lower bounds (any n) and nonnegative isotropic curvature
// (n = 4), together with the exact frame identities those proofs rest on.

#include <cstdint>
#include <utility>

#include "curvature2k/cones.hpp"
#include "curvature2k/curvature.hpp"

namespace c2k {

enum class ImplicationVerdict { certified, violated, hypothesis_not_met };

struct ImplicationReport {
  double hypothesis_margin = 0.0;  // cone membership margin
  double conclusion_margin = 0.0;  // conclusion value minus claimed bound
  ImplicationVerdict verdict = ImplicationVerdict::hypothesis_not_met;
};

// verdict = violated only when hypothesis_margin > tol and
// conclusion_margin < -tol; hypothesis_not_met when hypothesis_margin < -tol.
ImplicationReport classify_implication(double hypothesis_margin,
                                       double conclusion_margin,
                                       double tol = kTolEigen);

// Coefficient c(n, alpha, theta) in the claim Ric >= c * lambda_bar * g:
// (n-1)/(alpha+1) * (1 - alpha*theta) for alpha <= n, and
// (n-1)(n^2 - n(alpha*theta + alpha - 1) + 2(alpha*theta - 1)) /
// (n^2 + n - 2(alpha+1)) for n <= alpha < N. Branches agree at alpha = n.
double ricci_bound(int n, double alpha, double theta);

// Membership of Rcirc in C(alpha, theta) implies
// min eig ricci(R) >= ricci_bound * lambda_bar.
ImplicationReport verify_prop_ricci(const AlgebraicCurvature& r, double alpha,
                                    double theta, double tol = kTolEigen);

struct FrameIdentity {
  double lhs1 = 0.0, rhs1 = 0.0;
  double lhs2 = 0.0, rhs2 = 0.0;
};

// The two exact identities behind the Ricci bound, for the distinguished
// basis direction e1: Rcirc(phi1,phi1) = 2/(n-1) Ric_11 - lambda_bar, and
// sum_i Rcirc(phi_i,phi_i) = Ric_11 over phi_i = e1 (.) e_i / sqrt(2).
FrameIdentity cylinder_frame_identities(const AlgebraicCurvature& r,
                                        int e1 = 0);

// n = 4: lhs = sum of Rcirc on the three tensors phi1, phi2, phi3 built
// from the frame; rhs = R_1313 + R_1414 + R_2323 + R_2424
// - (R_1212 + R_3434)/2 - 3 R_1234. Exact identity given Bianchi.
std::pair<double, double> cp2_frame_identity(const AlgebraicCurvature& r,
                                             const Matrix& frame);

// The n = 4 cone parameter for the isotropic-curvature claim: theta = 1 for
// alpha <= 3, theta = 9/alpha - 2 for 3 <= alpha < 9.
double pic_theta(double alpha);

// Sampled minimum of the isotropic expression over Haar frames, followed by
// a local rotation-descent refinement of the best frame found.
double sampled_isotropic_min(const AlgebraicCurvature& r, int frames,
                             std::uint64_t seed, bool refine = true);

// n = 4: membership in C(alpha, pic_theta(alpha)) implies nonnegative
// isotropic curvature; the conclusion margin is a sampled minimum and the
// violation threshold absorbs sampling slack.
ImplicationReport verify_prop_pic(const AlgebraicCurvature& r, double alpha,
                                  int frames = 2000, std::uint64_t seed = 1,
                                  double tol = 1e-6);

// Random tensor shifted along the sphere direction so its margin at
// (alpha, theta) equals offset exactly; concentrates sampling where the
// conditional claims are tight.
AlgebraicCurvature boundary_biased_curvature(int n, std::uint64_t seed,
                                             double alpha, double theta,
                                             double offset = 0.0);

}  // namespace c2k
