#include "curvature2k/model_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "curvature2k/kahler.hpp"

namespace c2k {

namespace {

// Constant-curvature block: R_{ijkl} = kappa (d_ik d_jl - d_il d_jk) on
// indices [off, off+size); all other components untouched.
void add_sphere_block(std::vector<double>& r4, int n, int off, int size,
                      double kappa) {
  auto at = [&](int i, int j, int k, int l) -> double& {
    return r4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int i = off; i < off + size; ++i) {
    for (int j = off; j < off + size; ++j) {
      if (i == j) continue;
      at(i, j, i, j) += kappa;
      at(i, j, j, i) -= kappa;
    }
  }
}

// Embed the rank-4 array of a factor curvature at index offset off.
void add_block(std::vector<double>& r4, int n, int off,
               const AlgebraicCurvature& factor) {
  const int fn = factor.n();
  auto at = [&](int i, int j, int k, int l) -> double& {
    return r4[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };
  for (int i = 0; i < fn; ++i) {
    for (int j = 0; j < fn; ++j) {
      for (int k = 0; k < fn; ++k) {
        for (int l = 0; l < fn; ++l) {
          at(off + i, off + j, off + k, off + l) += factor.r(i, j, k, l);
        }
      }
    }
  }
}

void validate(const ModelSpec& s) {
  switch (s.kind) {
    case ModelKind::sphere:
      if (s.n < 2) throw std::invalid_argument("sphere: n >= 2");
      break;
    case ModelKind::cylinder:
      if (s.n < 3) throw std::invalid_argument("cylinder: n >= 3");
      break;
    case ModelKind::sphere_product:
      if (s.k < 2 || s.k > s.n - 2) {
        throw std::invalid_argument("sphere_product: 2 <= k <= n-2");
      }
      break;
    case ModelKind::cp_fubini_study:
      if (s.m < 1) throw std::invalid_argument("cp: m >= 1");
      break;
    case ModelKind::cp_product:
      if (s.m < 2 || s.k < 1 || s.k > s.m - 1) {
        throw std::invalid_argument("cp_product: m >= 2, 1 <= k <= m-1");
      }
      break;
    case ModelKind::flat:
      if (s.n < 2) throw std::invalid_argument("flat: n >= 2");
      break;
  }
}

}  // namespace

int ModelSpec::ambient_dim() const {
  switch (kind) {
    case ModelKind::cp_fubini_study:
    case ModelKind::cp_product:
      return 2 * m;
    default:
      return n;
  }
}

std::string ModelSpec::describe() const {
  switch (kind) {
    case ModelKind::sphere:
      return "S^" + std::to_string(n) + "(" + std::to_string(kappa1) + ")";
    case ModelKind::cylinder:
      return "S^" + std::to_string(n - 1) + " x S^1";
    case ModelKind::sphere_product:
      return "S^" + std::to_string(k) + "(" + std::to_string(kappa1) +
             ") x S^" + std::to_string(n - k) + "(" + std::to_string(kappa2) +
             ")";
    case ModelKind::cp_fubini_study:
      return "CP^" + std::to_string(m) + "(c=" + std::to_string(c) + ")";
    case ModelKind::cp_product:
      return "CP^" + std::to_string(k) + " x CP^" + std::to_string(m - k);
    case ModelKind::flat:
      return "R^" + std::to_string(n);
  }
  return "?";
}

AlgebraicCurvature build(const ModelSpec& spec) {
  validate(spec);
  const int n = spec.ambient_dim();
  Dim d(n);
  std::vector<double> r4(static_cast<std::size_t>(n) * n * n * n, 0.0);
  switch (spec.kind) {
    case ModelKind::sphere:
      add_sphere_block(r4, n, 0, n, spec.kappa1);
      break;
    case ModelKind::cylinder:
      add_sphere_block(r4, n, 0, n - 1, 1.0);  // flat S^1 block
      break;
    case ModelKind::sphere_product:
      add_sphere_block(r4, n, 0, spec.k, spec.kappa1);
      add_sphere_block(r4, n, spec.k, n - spec.k, spec.kappa2);
      break;
    case ModelKind::cp_fubini_study:
      return constant_hsc(spec.m, spec.c);
    case ModelKind::cp_product:
      add_block(r4, n, 0, constant_hsc(spec.k, 4.0));
      add_block(r4, n, 2 * spec.k, constant_hsc(spec.m - spec.k, 4.0));
      break;
    case ModelKind::flat:
      break;
  }
  return AlgebraicCurvature(n, wedge_from_rank4(n, r4));
}

std::vector<std::pair<double, int>> expected_spectrum(const ModelSpec& spec) {
  validate(spec);
  const int n = spec.ambient_dim();
  const int big_n = Dim(n).s20();
  std::map<double, int> spec_map;
  auto put = [&](double v, int mult) {
    if (mult > 0) spec_map[v] += mult;
  };
  switch (spec.kind) {
    case ModelKind::sphere:
      put(spec.kappa1, big_n);
      break;
    case ModelKind::cylinder: {
      const double nd = n;
      put(-(nd - 2.0) / nd, 1);
      put(0.0, n - 1);
      put(1.0, (n - 2) * (n + 1) / 2);
      break;
    }
    case ModelKind::sphere_product: {
      const int k = spec.k;
      const double k1 = spec.kappa1, k2 = spec.kappa2;
      put(-(k * (n - k - 1) * k2 + (n - k) * (k - 1) * k1) / n, 1);
      put(0.0, k * (n - k));
      put(k1, (k - 1) * (k + 2) / 2);
      put(k2, (n - k - 1) * (n - k + 2) / 2);
      break;
    }
    case ModelKind::cp_fubini_study:
      put(-spec.c / 2.0, spec.m * spec.m - 1);
      put(spec.c, spec.m * (spec.m + 1));
      break;
    case ModelKind::cp_product: {
      const int k = spec.k, mk = spec.m - spec.k;
      put(-2.0 - 4.0 * k * mk / static_cast<double>(spec.m), 1);
      put(-2.0, k * k + mk * mk - 2);
      put(0.0, 4 * k * mk);
      put(4.0, k * (k + 1) + mk * (mk + 1));
      break;
    }
    case ModelKind::flat:
      put(0.0, big_n);
      break;
  }
  std::vector<std::pair<double, int>> out(spec_map.begin(), spec_map.end());
  int total = 0;
  for (const auto& [v, mult] : out) total += mult;
  if (total != big_n) {
    throw std::logic_error("expected_spectrum: multiplicities do not sum to N");
  }
  return out;
}

ModelSpec einstein_sphere_product(int n, int k) {
  if (k < 2 || k > n - 2) {
    throw std::invalid_argument(
        "einstein_sphere_product: requires 2 <= k <= n-2");
  }
  ModelSpec s;
  s.kind = ModelKind::sphere_product;
  s.n = n;
  s.k = k;
  // (k-1) kappa1 = (n-k-1) kappa2 with scalar = n(n-1).
  s.kappa1 = static_cast<double>(n - 1) / (k - 1);
  s.kappa2 = static_cast<double>(n - 1) / (n - k - 1);
  return s;
}

bool boundary_cone(const ModelSpec& spec, double alpha_hint, double* alpha,
                   double* theta) {
  switch (spec.kind) {
    case ModelKind::cylinder:
      *alpha = alpha_hint;
      *theta = theta_cylinder(spec.n, alpha_hint);
      return true;
    case ModelKind::cp_fubini_study:
      if (spec.m < 2) return false;
      *alpha = alpha_hint;
      *theta = b_m_alpha(spec.m, alpha_hint);
      return true;
    case ModelKind::sphere_product: {
      // Einstein products only.
      if (std::abs((spec.k - 1) * spec.kappa1 -
                   (spec.n - spec.k - 1) * spec.kappa2) > 1e-12) {
        return false;
      }
      *alpha = (spec.n + 2) / 2.0;
      *theta = 2.0 * (spec.n - 1) / (spec.n + 2);
      return true;
    }
    case ModelKind::cp_product:
      *alpha = spec.m * spec.m - 1;
      *theta = (2.0 * spec.m - 1) / (spec.m + 1);
      return true;
    default:
      return false;
  }
}

std::vector<std::pair<double, int>> cluster_spectrum(const Vector& ascending,
                                                     double gap) {
  std::vector<std::pair<double, int>> clusters;
  for (int i = 0; i < ascending.size(); ++i) {
    if (!clusters.empty() &&
        ascending(i) - clusters.back().first <= gap) {
      // running mean keeps the cluster representative centered
      auto& [v, cnt] = clusters.back();
      v = (v * cnt + ascending(i)) / (cnt + 1);
      ++cnt;
    } else {
      clusters.push_back({ascending(i), 1});
    }
  }
  return clusters;
}

bool spectra_match(const Vector& computed,
                   const std::vector<std::pair<double, int>>& expected,
                   double tol, double gap) {
  // merge coincident expected values at the same resolution
  std::vector<std::pair<double, int>> exp_merged;
  for (const auto& [v, mult] : expected) {
    if (!exp_merged.empty() && v - exp_merged.back().first <= gap) {
      exp_merged.back().second += mult;
    } else {
      exp_merged.push_back({v, mult});
    }
  }
  const auto clusters = cluster_spectrum(computed, gap);
  if (clusters.size() != exp_merged.size()) return false;
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].second != exp_merged[i].second) return false;
    if (std::abs(clusters[i].first - exp_merged[i].first) > tol) return false;
  }
  return true;
}

ModelKind parse_model_kind(const std::string& name) {
  if (name == "sphere") return ModelKind::sphere;
  if (name == "cylinder") return ModelKind::cylinder;
  if (name == "sphere-product") return ModelKind::sphere_product;
  if (name == "cp") return ModelKind::cp_fubini_study;
  if (name == "cp-product") return ModelKind::cp_product;
  if (name == "flat") return ModelKind::flat;
  throw std::invalid_argument("unknown model kind: " + name);
}

}  // namespace c2k
