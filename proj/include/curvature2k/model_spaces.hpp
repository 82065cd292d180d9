#pragma once

// Model-space constructors with closed-form second-kind spectra: round
// spheres, S^{n-1} x S^1, sphere products, complex projective spaces and
// their products, and flat space.

#include <string>
#include <vector>

#include "curvature2k/curvature.hpp"

namespace c2k {

enum class ModelKind {
  sphere,          // S^n(kappa1)
  cylinder,        // S^{n-1}(1) x S^1
  sphere_product,  // S^k(kappa1) x S^{n-k}(kappa2)
  cp_fubini_study, // CP^m, constant holomorphic sectional curvature c
  cp_product,      // CP^k x CP^{m-k}, both with c = 4
  flat             // R^n
};

struct ModelSpec {
  ModelKind kind = ModelKind::sphere;
  int n = 3;          // real dimension (sphere/cylinder/sphere_product/flat)
  int m = 2;          // complex dimension (cp kinds)
  int k = 1;          // first-factor size (sphere_product/cp_product)
  double kappa1 = 1.0;
  double kappa2 = 1.0;
  double c = 4.0;     // holomorphic sectional curvature (cp_fubini_study)

  int ambient_dim() const;  // real dimension of V
  std::string describe() const;
};

AlgebraicCurvature build(const ModelSpec& spec);

// Closed-form spectrum as (eigenvalue, multiplicity) pairs, ascending, with
// zero multiplicities dropped; multiplicities sum to N(ambient_dim).
std::vector<std::pair<double, int>> expected_spectrum(const ModelSpec& spec);

// Sphere product normalized so (k-1) kappa1 = (n-k-1) kappa2 and
// scalar = n(n-1) (Einstein with lambda_bar = 1); requires 2 <= k <= n-2.
ModelSpec einstein_sphere_product(int n, int k);

// The boundary cone (alpha, theta) certificate printed for each family, or
// false when none applies. alpha_hint picks alpha for the one-parameter
// families (cylinder, CP^m).
bool boundary_cone(const ModelSpec& spec, double alpha_hint, double* alpha,
                   double* theta);

// Cluster an ascending spectrum by gap threshold; returns (mean, count).
std::vector<std::pair<double, int>> cluster_spectrum(const Vector& ascending,
                                                     double gap = 1e-7);

// Computed-vs-expected comparison: clusters computed eigenvalues, merges
// coincident expected values, then requires exact multiplicities and
// eigenvalue error <= tol.
bool spectra_match(const Vector& computed,
                   const std::vector<std::pair<double, int>>& expected,
                   double tol = kTolEigen, double gap = 1e-7);

// Parses "sphere", "cylinder", "sphere-product", "cp", "cp-product", "flat".
ModelKind parse_model_kind(const std::string& name);

}  // namespace c2k
