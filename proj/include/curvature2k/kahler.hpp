#pragma once

// Complex structures, the E+/E- splitting of S^2_0 on a Kahler vector
// space, the associated orthonormal tensor bases and trace identities, the
// constant-holomorphic-sectional-curvature model, and the cone diagnostic
// for Kahler curvature tensors.

#include <cstdint>
#include <vector>

#include "curvature2k/cones.hpp"
#include "curvature2k/curvature.hpp"

namespace c2k {

// Standard block complex structure on R^{2m} with the basis ordered
// (e_1..e_m, Je_1..Je_m): J e_i = e_{m+i}, J e_{m+i} = -e_i.
Matrix standard_complex_structure(int m);

// Block-diagonal complex structure for a product of complex factors of
// complex dimensions ms[0], ms[1], ...
Matrix block_complex_structure(const std::vector<int>& ms);

// Checks J^2 = -Id and orthogonality.
void require_complex_structure(const Matrix& j, double tol = kTolExact * 100);

// max |R(i,j,k,l) - R(i,j,Jk,Jl)| over all indices; zero for Kahler R.
double kahler_residual(const AlgebraicCurvature& r, const Matrix& j);

struct KahlerBases {
  // E- : phi-_{ij}, psi-_{ij} (i<j), eta_k -- m^2 - 1 tensors.
  std::vector<Matrix> e_minus;
  // E+ : phi+_{ij}, psi+_{ij} (i<j), theta_1..theta_{2m} -- m(m+1) tensors.
  std::vector<Matrix> e_plus;
};

// The printed bases in a J-adapted orthonormal frame (n x n orthogonal
// matrix whose columns satisfy frame.col(m+i) = J frame.col(i)); defaults
// to the standard frame. Jointly orthonormal, all traceless.
KahlerBases build_kahler_bases(int m, const Matrix& frame);
KahlerBases build_kahler_bases(int m);

// Curvature of constant holomorphic sectional curvature c with respect to
// standard_complex_structure(m); c = 4 gives the Fubini-Study model.
AlgebraicCurvature constant_hsc(int m, double c);

// Averages R over the symmetries generated by (Z,W) -> (JZ,JW) and
// re-Bianchi-projects until kahler_residual <= tol; throws if max_rounds
// is exhausted.
AlgebraicCurvature kahler_symmetrize(const AlgebraicCurvature& r,
                                     const Matrix& j, double tol = kTolExact,
                                     int max_rounds = 64);

// Seeded random Kahler algebraic curvature tensor on R^{2m}.
AlgebraicCurvature random_kahler(int m, std::uint64_t seed,
                                 double scale = 1.0);

struct TraceIdentityResiduals {
  double pair_sums = 0.0;    // Rcirc(phi-,phi-)+Rcirc(psi-,psi-) vs
                             // -2 R(e_i, Je_i, e_j, Je_j), all i<j
  double theta_diag = 0.0;   // Rcirc(theta_i) = Rcirc(theta_{m+i}) =
                             // R(e_i,Je_i,e_i,Je_i), all i
  double plus_trace = 0.0;   // E+ diagonal sum vs 2m(2m-1) lambda_bar
  double minus_trace = 0.0;  // E- diagonal sum vs -(m-1)(2m-1) lambda_bar
  double max() const;
};

// Evaluates the four Kahler trace identities in the given J-adapted frame.
// Rejects input whose Kahler residual exceeds 1e-8.
TraceIdentityResiduals trace_identities(const AlgebraicCurvature& r,
                                        const Matrix& frame);

struct HscStats {
  double mean = 0.0;
  double variance = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Holomorphic sectional curvature R(X,JX,X,JX) over sampled unit vectors.
HscStats hsc_stats(const AlgebraicCurvature& r, const Matrix& j, int samples,
                   std::uint64_t seed);

struct KahlerDiagnostic {
  ConeVerdict plus;          // Rcirc at (alpha, theta)
  ConeVerdict minus;         // -Rcirc at (alpha, theta)
  double b_threshold = 0.0;  // B_{m,alpha}
  double r_norm = 0.0;
  HscStats hsc;
  double hsc_defect = 0.0;   // variance of sampled HSC
  bool flatness_expected = false;     // member with theta < B_{m,alpha}
  bool constant_hsc_expected = false; // boundary member at theta = B, alpha != m^2-1
  bool ok = true;            // no expectation violated
};

KahlerDiagnostic kahler_cone_diagnostic(const AlgebraicCurvature& r,
                                        const Matrix& j, double alpha,
                                        double theta, int hsc_samples = 500,
                                        std::uint64_t seed = 1);

}  // namespace c2k
