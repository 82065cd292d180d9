#include "curvature2k/harness.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "curvature2k/io.hpp"
#include "curvature2k/kahler.hpp"
#include "curvature2k/model_spaces.hpp"
#include "curvature2k/pforms.hpp"

namespace c2k {

namespace {

using nlohmann::json;

std::vector<AlgebraicCurvature> planted_models(int n) {
  std::vector<AlgebraicCurvature> out;
  ModelSpec s;
  s.kind = ModelKind::cylinder;
  s.n = n;
  out.push_back(build(s));
  if (n >= 4) out.push_back(build(einstein_sphere_product(n, n / 2)));
  if (n % 2 == 0 && n >= 4) out.push_back(constant_hsc(n / 2, 4.0));
  s.kind = ModelKind::flat;
  out.push_back(build(s));
  return out;
}

// Cone parameters that make the boundary-biased generator concentrate
// where the claim is tight.
ConeParams bias_params(const RunConfig& cfg) {
  const double big_n = Dim(cfg.n).s20();
  if (cfg.claim == "pic") return {cfg.alpha, pic_theta(cfg.alpha)};
  if (cfg.claim == "pricci") return {(cfg.n - 1.0) * cfg.p / 2.0, cfg.theta};
  if (cfg.claim == "qbound" || cfg.claim == "weight") {
    return {(cfg.n + 2.0) / 2.0, 0.0};
  }
  if (cfg.claim == "sectional-from-cone") return {big_n - 1.0, 0.0};
  return {cfg.alpha, cfg.theta};
}

double min_sampled_sectional(const AlgebraicCurvature& r,
                             std::uint64_t seed) {
  const int n = r.n();
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) lo = std::min(lo, sectional(r, i, j));
  }
  Rng rng(seed);
  for (int s = 0; s < 100; ++s) {
    Vector u(n), v(n);
    for (int i = 0; i < n; ++i) {
      u(i) = rng.gaussian();
      v(i) = rng.gaussian();
    }
    lo = std::min(lo, sectional_plane(r, u, v));
  }
  return lo;
}

double identity_residuals(const AlgebraicCurvature& r, const RunConfig& cfg,
                          std::uint64_t sample_seed) {
  const int n = r.n();
  Rng rng(derive_seed(sample_seed, 101));
  double worst = 0.0;
  const FrameIdentity fi = cylinder_frame_identities(r, 0);
  worst = std::max(worst, std::abs(fi.lhs1 - fi.rhs1));
  worst = std::max(worst, std::abs(fi.lhs2 - fi.rhs2));
  if (n == 4) {
    const auto [lhs, rhs] = cp2_frame_identity(r, haar_orthogonal(4, rng));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  const int p = std::min(std::max(cfg.p, 1), n / 2);
  if (p >= 1) {
    const auto [q_def, q_id] = q_quantity(r, haar_orthogonal(n, rng), p);
    worst = std::max(worst, std::abs(q_def - q_id));
  }
  {
    const PFormSpace space(n, std::min(std::max(cfg.p, 1), n - 1));
    Vector omega(space.dim());
    for (int i = 0; i < space.dim(); ++i) omega(i) = rng.gaussian();
    const auto [lhs, rhs] = norm_identity(space, omega);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

void persist_violation(const RunConfig& cfg, int index,
                       std::uint64_t sample_seed,
                       const AlgebraicCurvature& r,
                       const ImplicationReport& rep) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.violations_dir);
  json doc;
  doc["claim"] = cfg.claim;
  doc["sample_index"] = index;
  doc["seed"] = sample_seed;
  doc["hypothesis_margin"] = rep.hypothesis_margin;
  doc["conclusion_margin"] = rep.conclusion_margin;
  doc["tensor"] = json::parse(to_json(r));
  const fs::path path = fs::path(cfg.violations_dir) /
                        (cfg.claim + "-" + std::to_string(index) + ".json");
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

struct SampleOutcome {
  ImplicationReport report;
  bool violated = false;
};

CampaignReport run_campaign(RunConfig cfg) {
  // reject unknown claims here, before exceptions could escape a worker
  static const char* const known[] = {"ricci",  "pic",        "pricci",
                                      "qbound", "weight",     "identities",
                                      "trace",  "sectional-from-cone"};
  if (std::find_if(std::begin(known), std::end(known), [&](const char* c) {
        return cfg.claim == c;
      }) == std::end(known)) {
    throw std::invalid_argument("unknown claim: " + cfg.claim);
  }
  const std::vector<AlgebraicCurvature> plants =
      cfg.plant_models ? planted_models(cfg.n)
                       : std::vector<AlgebraicCurvature>{};
  std::vector<SampleOutcome> outcomes(cfg.samples);
  const bool strict = claim_is_strict(cfg.claim);

  auto worker = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const AlgebraicCurvature r =
          i < static_cast<int>(plants.size()) ? plants[i]
                                              : campaign_tensor(cfg, i);
      const std::uint64_t si = derive_seed(cfg.seed, i);
      SampleOutcome& o = outcomes[i];
      o.report = evaluate_claim(cfg.claim, r, cfg, si);
      o.violated = strict ? (o.report.hypothesis_margin > cfg.tol &&
                             o.report.conclusion_margin < cfg.tol)
                          : o.report.verdict == ImplicationVerdict::violated;
    }
  };

  int nthreads = cfg.threads > 0
                     ? cfg.threads
                     : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::max(1, std::min({nthreads, 8, cfg.samples}));
  if (nthreads == 1) {
    worker(0, cfg.samples);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (cfg.samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const int b = t * chunk;
      const int e = std::min(cfg.samples, b + chunk);
      if (b < e) pool.emplace_back(worker, b, e);
    }
    for (auto& th : pool) th.join();
  }

  CampaignReport rep;
  rep.claim = cfg.claim;
  rep.n = cfg.n;
  rep.samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.tol = cfg.tol;
  const double residual_base = cfg.claim == "identities" ? cfg.identity_tol
                               : cfg.claim == "trace"    ? 1e-9
                                                         : 0.0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.samples; ++i) {
    const SampleOutcome& o = outcomes[i];
    if (residual_base > 0.0) {
      rep.worst_residual = std::max(
          rep.worst_residual, residual_base - o.report.conclusion_margin);
    }
    if (o.report.verdict == ImplicationVerdict::hypothesis_not_met) continue;
    ++rep.hypothesis_met;
    worst = std::min(worst, o.report.conclusion_margin);
    if (o.violated) {
      ++rep.violations;
      const std::uint64_t si = derive_seed(cfg.seed, i);
      rep.failing_seeds.push_back(si);
      if (!cfg.violations_dir.empty()) {
        const AlgebraicCurvature r =
            i < static_cast<int>(plants.size()) ? plants[i]
                                                : campaign_tensor(cfg, i);
        persist_violation(cfg, i, si, r, o.report);
      }
    } else {
      ++rep.certified;
    }
  }
  rep.worst_conclusion_margin = rep.hypothesis_met > 0 ? worst : 0.0;
  return rep;
}

}  // namespace

AlgebraicCurvature campaign_tensor(const RunConfig& cfg, int index) {
  const std::uint64_t si = derive_seed(cfg.seed, index);
  const bool has_cone = cfg.claim != "identities" && cfg.claim != "trace";
  Rng pick(derive_seed(si, 7));
  if (has_cone && pick.uniform() < cfg.boundary_fraction) {
    const ConeParams bp = bias_params(cfg);
    const double offset = 0.05 * pick.uniform();
    return boundary_biased_curvature(cfg.n, si, bp.alpha, bp.theta, offset);
  }
  return random_curvature(cfg.n, si);
}

bool claim_is_strict(const std::string& claim) {
  return claim == "sectional-from-cone";
}

ImplicationReport evaluate_claim(const std::string& claim,
                                 const AlgebraicCurvature& r,
                                 const RunConfig& cfg,
                                 std::uint64_t sample_seed) {
  const int n = r.n();
  if (claim == "ricci") {
    return verify_prop_ricci(r, cfg.alpha, cfg.theta, cfg.tol);
  }
  if (claim == "pic") {
    return verify_prop_pic(r, cfg.alpha, cfg.iso_frames,
                           derive_seed(sample_seed, 11), 1e-6);
  }
  if (claim == "pricci") return p_ricci_check(r, cfg.p, cfg.theta, cfg.tol);
  if (claim == "qbound") {
    Rng rng(derive_seed(sample_seed, 13));
    const double gap = q_lower_bound_gap(r, haar_orthogonal(n, rng), cfg.p);
    return classify_implication(1.0, gap, cfg.tol);  // unconditional
  }
  if (claim == "weight") {
    return weight_principle_check(r, cfg.p, cfg.beta, cfg.tol);
  }
  if (claim == "identities") {
    const double worst = identity_residuals(r, cfg, sample_seed);
    return classify_implication(1.0, cfg.identity_tol - worst, 0.0);
  }
  if (claim == "trace") {
    const SecondKindOperator op = induce_second_kind(r);
    const double s = scalar(r);
    const double residual = std::abs(op.matrix.trace() -
                                     (n + 2.0) / (2.0 * n) * s) /
                            std::max(1.0, std::abs(s));
    return classify_implication(1.0, 1e-9 - residual, 0.0);
  }
  if (claim == "sectional-from-cone") {
    // deliberately false claim used to test falsifier sensitivity
    const SecondKindOperator op = induce_second_kind(r);
    const double big_n = op.eigenvalues.size();
    const double hyp = cone_margin(op.eigenvalues, big_n - 1.0, 0.0);
    const double lo =
        min_sampled_sectional(r, derive_seed(sample_seed, 17));
    return classify_implication(hyp, lo, cfg.tol);
  }
  throw std::invalid_argument("unknown claim: " + claim);
}

CampaignReport run_verify(const RunConfig& cfg) { return run_campaign(cfg); }

CampaignReport run_falsify(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.plant_models = true;
  return run_campaign(c);
}

std::string CampaignReport::to_json() const {
  json doc;
  doc["schema"] = "curvature2k/report/1";
  doc["claim"] = claim;
  doc["n"] = n;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["tol"] = tol;
  doc["hypothesis_met"] = hypothesis_met;
  doc["certified"] = certified;
  doc["violations"] = violations;
  doc["worst_conclusion_margin"] = worst_conclusion_margin;
  doc["worst_residual"] = worst_residual;
  doc["failing_seeds"] = failing_seeds;
  return doc.dump(2) + "\n";
}

std::string CampaignReport::to_tsv() const {
  std::string out;
  out += "claim\t" + claim + "\n";
  out += "n\t" + std::to_string(n) + "\n";
  out += "samples\t" + std::to_string(samples) + "\n";
  out += "seed\t" + std::to_string(seed) + "\n";
  out += "hypothesis_met\t" + std::to_string(hypothesis_met) + "\n";
  out += "certified\t" + std::to_string(certified) + "\n";
  out += "violations\t" + std::to_string(violations) + "\n";
  return out;
}

}  // namespace c2k
