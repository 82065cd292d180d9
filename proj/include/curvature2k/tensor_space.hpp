#pragma once

// Bases and inner products for two-forms, symmetric two-tensors, and
// traceless symmetric two-tensors on an n-dimensional Euclidean space.
//
// Conventions (fixed globally):
//   e_i (.) e_j = e_i(x)e_j + e_j(x)e_i        symmetric product
//   e_i /\ e_j  = e_i(x)e_j - e_j(x)e_i        wedge product
//   <A,B> = tr(A^T B)       on S^2(V)
//   <A,B> = tr(A^T B)/2     on /\^2(V)
// so {(1/sqrt2) e_i(.)e_j}_{i<j} u {(1/2) e_i(.)e_i} and {e_i /\ e_j}_{i<j}
// are orthonormal. All indices are 0-based.

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace c2k {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Dimension of V with the derived tensor-space dimensions.
struct Dim {
  int n;
  explicit Dim(int n_);

  // dim /\^2(V) = n(n-1)/2
  int wedge2() const { return n * (n - 1) / 2; }
  // dim S^2_0(V) = (n-1)(n+2)/2
  int s20() const { return (n - 1) * (n + 2) / 2; }

  static constexpr int kMaxN = 12;  // N(12) = 77; desk-scale cap
};

// Lexicographic enumeration of pairs i<j. wedge_index(0,1,n)==0.
int wedge_index(int i, int j, int n);
std::pair<int, int> wedge_pair(int a, int n);

// e_i (.) e_j as an n x n matrix (2 on the diagonal when i==j).
Matrix symmetric_product(int i, int j, int n);
// e_i /\ e_j as an antisymmetric n x n matrix; requires i != j.
Matrix wedge_product(int i, int j, int n);

double sym_inner(const Matrix& a, const Matrix& b);    // tr(a^T b)
double wedge_inner(const Matrix& a, const Matrix& b);  // tr(a^T b)/2

// h - (tr h / n) Id. Linear, idempotent, image orthogonal to Id.
Matrix project_traceless(const Matrix& h);

// Orthonormal basis of S^2_0(V), N = (n-1)(n+2)/2 tensors, in the fixed
// global order: (1/sqrt2) e_i(.)e_j for i<j lexicographically, then the
// n-1 diagonal tensors
//   psi_k = ((n-k-1) e_k(.)e_k - sum_{l>k} e_l(.)e_l) / (2 sqrt((n-k-1)(n-k)))
// for k = 0..n-2 (0-based k; with 1-based k the weights read (n-k) and
// sqrt((n-k)(n-k+1))).
std::vector<Matrix> standard_basis_s20(int n);

// {e_i /\ e_j}_{i<j} in lexicographic order (orthonormal for wedge_inner).
std::vector<Matrix> wedge_basis(int n);

// Coordinates of u /\ v in the lexicographic wedge basis.
Vector wedge_coords(const Vector& u, const Vector& v);

// Default tolerances used across the toolkit.
inline constexpr double kTolExact = 1e-12;  // exact multilinear algebra
inline constexpr double kTolEigen = 1e-9;   // eigenvalue-derived quantities

}  // namespace c2k
