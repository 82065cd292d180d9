#pragma once

// Algebraic curvature tensors and the operators they induce on two-forms
// (first kind) and traceless symmetric two-tensors (second kind).
//
// Sign convention, pinned once and used everywhere: the unit round sphere
// has R(i,j,i,j) = 1 for i != j, its matrix on the wedge basis is the
// identity, and its induced second-kind operator is the identity on
// S^2_0(V).

#include <cstdint>
#include <vector>

#include "curvature2k/rng.hpp"
#include "curvature2k/tensor_space.hpp"

namespace c2k {

// R stored as the symmetric N2 x N2 matrix of the first-kind operator on
// the lexicographic wedge basis, with the full rank-4 array cached for the
// four-index accessor. Immutable after construction.
class AlgebraicCurvature {
 public:
  // Validates symmetry (1e-12) and the first Bianchi identity (1e-12).
  AlgebraicCurvature(int n, Matrix wedge_matrix);

  int n() const { return n_; }
  const Matrix& wedge_matrix() const { return wedge_; }

  // R_{ijkl}; zero when i==j or k==l.
  double r(int i, int j, int k, int l) const {
    return r4_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  const std::vector<double>& rank4() const { return r4_; }

  double bianchi_residual() const;
  double norm() const;  // Frobenius norm of the wedge matrix

 private:
  int n_;
  Matrix wedge_;
  std::vector<double> r4_;
};

// Rank-4 array of a symmetric wedge matrix (no Bianchi assumption):
// R_{ijkl} = sign-extended M[(i,j)][(k,l)].
std::vector<double> rank4_from_wedge(int n, const Matrix& m);
// Inverse: read the i<j, k<l entries back into a wedge matrix.
Matrix wedge_from_rank4(int n, const std::vector<double>& r4);

// Orthogonal projection of a symmetric wedge matrix onto the Bianchi
// subspace: subtract the totally antisymmetric part
// a_{ijkl} = (R_{ijkl} + R_{iklj} + R_{iljk}) / 3.
AlgebraicCurvature bianchi_project(int n, const Matrix& wedge_matrix);

// Gaussian-entry symmetric wedge matrix, Bianchi-projected. Deterministic
// in (n, seed, scale).
AlgebraicCurvature random_curvature(int n, std::uint64_t seed,
                                    double scale = 1.0);

AlgebraicCurvature scale(const AlgebraicCurvature& r, double s);
AlgebraicCurvature add(const AlgebraicCurvature& a,
                       const AlgebraicCurvature& b);

// Ric_{ij} = sum_k R(i,k,j,k); unit sphere gives (n-1) Id.
Matrix ricci(const AlgebraicCurvature& r);
double scalar(const AlgebraicCurvature& r);
// R(i,j,i,j); requires i != j.
double sectional(const AlgebraicCurvature& r, int i, int j);
// R(a,b,c,d) for arbitrary vectors, through the wedge matrix.
double quadrilinear(const AlgebraicCurvature& r, const Vector& a,
                    const Vector& b, const Vector& c, const Vector& d);
// Sectional curvature of the plane spanned by two frame columns.
double sectional_plane(const AlgebraicCurvature& r, const Vector& u,
                       const Vector& v);

// The bilinear form of the second-kind operator, Rbar(a,b) =
// sum R(i,k,l,j) a_{kl} b_{ij}; equals Rcirc(a,b) for traceless a, b.
double second_kind_form(const AlgebraicCurvature& r, const Matrix& a,
                        const Matrix& b);

// The N x N matrix of Rcirc on standard_basis_s20, with its cached
// ascending spectrum.
struct SecondKindOperator {
  int n = 0;
  Matrix matrix;        // N x N symmetric
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // columns match eigenvalues
  double lambda_bar = 0.0;

  // Eigentensor for eigenvalue index a, as a traceless symmetric matrix.
  Matrix eigentensor(int a) const;
};

// Entries assembled from Rcirc(e_i(.)e_j, e_k(.)e_l) = 2(R_{iklj}+R_{ilkj})
// expanded bilinearly over the basis tensors.
SecondKindOperator induce_second_kind(const AlgebraicCurvature& r);

// R_{1313}+R_{1414}+R_{2323}+R_{2424}-2R_{1234} pulled back through an
// orthonormal 4-frame (n x 4 matrix with orthonormal columns).
double isotropic_expression(const AlgebraicCurvature& r, const Matrix& frame);

// R_{1313}+t^2 R_{1414}+R_{2323}+t^2 R_{2424}-2t R_{1234}, t in [-1,1].
double frame_quadratic(const AlgebraicCurvature& r, const Matrix& frame,
                       double t);

// Checks a frame's Gram matrix against the identity.
void require_orthonormal(const Matrix& frame, double tol = kTolExact * 100);

}  // namespace c2k
