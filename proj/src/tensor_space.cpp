#include "curvature2k/tensor_space.hpp"

#include <cmath>
#include <stdexcept>

namespace c2k {

Dim::Dim(int n_) : n(n_) {
  if (n < 2 || n > kMaxN) {
    throw std::invalid_argument("Dim: n must be in [2, " +
                                std::to_string(kMaxN) + "]");
  }
}

int wedge_index(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::out_of_range("wedge_index: bad pair");
  }
  if (i > j) std::swap(i, j);
  // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> wedge_pair(int a, int n) {
  if (a < 0 || a >= n * (n - 1) / 2) {
    throw std::out_of_range("wedge_pair: index out of range");
  }
  int i = 0;
  while (a >= n - 1 - i) {
    a -= n - 1 - i;
    ++i;
  }
  return {i, i + 1 + a};
}

Matrix symmetric_product(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw std::out_of_range("symmetric_product: index out of range");
  }
  Matrix m = Matrix::Zero(n, n);
  m(i, j) += 1.0;
  m(j, i) += 1.0;
  return m;
}

Matrix wedge_product(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw std::out_of_range("wedge_product: bad pair");
  }
  Matrix m = Matrix::Zero(n, n);
  m(i, j) = 1.0;
  m(j, i) = -1.0;
  return m;
}

double sym_inner(const Matrix& a, const Matrix& b) {
  return (a.transpose() * b).trace();
}

double wedge_inner(const Matrix& a, const Matrix& b) {
  return 0.5 * (a.transpose() * b).trace();
}

Matrix project_traceless(const Matrix& h) {
  const int n = static_cast<int>(h.rows());
  return h - (h.trace() / n) * Matrix::Identity(n, n);
}

std::vector<Matrix> standard_basis_s20(int n) {
  Dim d(n);
  std::vector<Matrix> basis;
  basis.reserve(d.s20());
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(inv_sqrt2 * symmetric_product(i, j, n));
    }
  }
  for (int k = 0; k < n - 1; ++k) {
    const double w = n - 1 - k;  // (n-k) with 1-based k
    Matrix m = Matrix::Zero(n, n);
    m(k, k) = 2.0 * w;
    for (int l = k + 1; l < n; ++l) m(l, l) = -2.0;
    basis.push_back(m / (2.0 * std::sqrt(w * (w + 1.0))));
  }
  return basis;
}

std::vector<Matrix> wedge_basis(int n) {
  Dim d(n);
  std::vector<Matrix> basis;
  basis.reserve(d.wedge2());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(wedge_product(i, j, n));
    }
  }
  return basis;
}

Vector wedge_coords(const Vector& u, const Vector& v) {
  const int n = static_cast<int>(u.size());
  Vector c(n * (n - 1) / 2);
  int a = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      c(a++) = u(i) * v(j) - u(j) * v(i);
    }
  }
  return c;
}

}  // namespace c2k
