#pragma once

// Seeded verification and falsification campaigns over the conditional
// claims, with deterministic reports. Samples fan out across worker
// threads; per-sample seeds are derived from the campaign seed, and the
// reduction is ordered by sample index, so reports are byte-stable.

#include <cstdint>
#include <string>
#include <vector>

#include "curvature2k/implications.hpp"

namespace c2k {

struct RunConfig {
  std::string claim = "ricci";  // ricci | pic | pricci | qbound | weight |
                                // identities | trace |
                                // sectional-from-cone (planted false control)
  int n = 4;
  int p = 2;                 // pricci / qbound / weight
  double alpha = 2.0;        // cone parameter (ricci); pic derives theta
  double theta = 0.0;
  double beta = 0.0;         // weight principle shift
  int samples = 1000;
  std::uint64_t seed = 42;
  double tol = kTolEigen;
  double identity_tol = 1e-10;
  int iso_frames = 2000;     // isotropic sampling depth (pic)
  int threads = 0;           // 0 = hardware concurrency
  double boundary_fraction = 0.5;  // share of boundary-biased samples
  bool plant_models = false;       // model tensors at stream start
  std::string violations_dir;      // empty = do not persist violations
};

struct CampaignReport {
  std::string claim;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int hypothesis_met = 0;
  int certified = 0;
  int violations = 0;
  double worst_conclusion_margin = 0.0;  // min over hypothesis-met samples
  double worst_residual = 0.0;           // identity campaigns
  std::vector<std::uint64_t> failing_seeds;

  bool ok() const { return violations == 0; }
  std::string to_json() const;
  std::string to_tsv() const;
};

// Per-sample tensor stream: a few planted model-space tensors first, then
// a deterministic mix of boundary-biased and plain random tensors.
AlgebraicCurvature campaign_tensor(const RunConfig& cfg, int index);

// One conditional claim on one tensor. strict_conclusion (the planted
// control's "positive sectional") turns the conclusion into a strict
// inequality so boundary cases count as violations.
ImplicationReport evaluate_claim(const std::string& claim,
                                 const AlgebraicCurvature& r,
                                 const RunConfig& cfg,
                                 std::uint64_t sample_seed);
bool claim_is_strict(const std::string& claim);

CampaignReport run_verify(const RunConfig& cfg);

// Same engine, but stops reporting success as proof: the report counts
// violations found and persists each one when violations_dir is set.
CampaignReport run_falsify(const RunConfig& cfg);

}  // namespace c2k
