// Command-line front end: thresholds, model spectra, cone membership,
// verification campaigns, Bochner certificates, Kahler diagnostics, and
// falsification mining. Exit codes: 0 ok, 1 check failure, 2 usage error.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <json.hpp>

#include "curvature2k/cones.hpp"
#include "curvature2k/harness.hpp"
#include "curvature2k/io.hpp"
#include "curvature2k/kahler.hpp"
#include "curvature2k/model_spaces.hpp"
#include "curvature2k/pforms.hpp"

using nlohmann::json;

namespace {

struct TensorSource {
  std::string model;
  std::string file;
  int n = 4, m = 2, k = 2;
  double kappa1 = 1.0, kappa2 = 1.0, c = 4.0;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--model", model,
                    "sphere|cylinder|sphere-product|cp|cp-product|flat");
    cmd->add_option("--file", file, "tensor JSON file");
    cmd->add_option("--n", n, "real dimension");
    cmd->add_option("--m", m, "complex dimension");
    cmd->add_option("--k", k, "first factor size");
    cmd->add_option("--kappa1", kappa1, "first factor curvature");
    cmd->add_option("--kappa2", kappa2, "second factor curvature");
    cmd->add_option("--c", c, "holomorphic sectional curvature");
  }

  std::optional<c2k::ModelSpec> spec() const {
    if (model.empty()) return std::nullopt;
    c2k::ModelSpec s;
    s.kind = c2k::parse_model_kind(model);
    s.n = n;
    s.m = m;
    s.k = k;
    s.kappa1 = kappa1;
    s.kappa2 = kappa2;
    s.c = c;
    return s;
  }

  c2k::AlgebraicCurvature load() const {
    if (!file.empty()) return c2k::load_curvature(file);
    const auto s = spec();
    if (!s) throw CLI::ValidationError("need --model or --file");
    return c2k::build(*s);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

int cmd_threshold(const std::string& table, int n, int m, bool as_json,
                  bool as_tsv) {
  std::vector<std::pair<double, double>> rows;
  if (table == "theta") {
    const double big_n = c2k::Dim(n).s20();
    for (double a = 1.0; a < big_n; a += 0.5) {
      rows.push_back({a, c2k::theta_cylinder(n, a)});
    }
  } else if (table == "a") {
    for (int p = 2; 2 * p <= n; ++p) {
      rows.push_back({static_cast<double>(p), c2k::a_np(n, p)});
    }
  } else if (table == "b") {
    const double big_n = (2.0 * m - 1.0) * (m + 1.0);
    for (double a = 1.0; a < big_n; a += 0.5) {
      rows.push_back({a, c2k::b_m_alpha(m, a)});
    }
  } else {
    throw CLI::ValidationError("--table must be theta, a, or b");
  }
  if (as_json) {
    json doc = json::array();
    for (const auto& [x, y] : rows) doc.push_back({x, y});
    std::printf("%s\n", doc.dump().c_str());
  } else {
    const char* sep = as_tsv ? "\t" : "  ";
    for (const auto& [x, y] : rows) {
      std::printf("%s%s%s\n", fmt(x).c_str(), sep, fmt(y).c_str());
    }
  }
  return 0;
}

int cmd_spectrum(const TensorSource& src, bool as_json, bool as_tsv,
                 double tol) {
  const c2k::AlgebraicCurvature r = src.load();
  const c2k::SecondKindOperator op = c2k::induce_second_kind(r);
  const auto clusters = c2k::cluster_spectrum(op.eigenvalues);
  bool matched = true;
  std::optional<std::vector<std::pair<double, int>>> expected;
  if (const auto s = src.spec()) {
    expected = c2k::expected_spectrum(*s);
    matched = c2k::spectra_match(op.eigenvalues, *expected, tol);
  }
  if (as_json) {
    json doc;
    doc["eigenvalues"] = json::array();
    for (const auto& [v, mult] : clusters) {
      doc["eigenvalues"].push_back({{"value", v}, {"multiplicity", mult}});
    }
    doc["lambda_bar"] = op.lambda_bar;
    if (expected) doc["matches_expected"] = matched;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    const char* sep = as_tsv ? "\t" : " x ";
    for (const auto& [v, mult] : clusters) {
      std::printf("%s%s%d\n", fmt(v).c_str(), sep, mult);
    }
    if (expected) {
      std::printf("expected match: %s\n", matched ? "yes" : "NO");
    }
  }
  return matched ? 0 : 1;
}

int cmd_check_cone(const TensorSource& src, double alpha, double theta,
                   double tol, bool as_json) {
  const c2k::AlgebraicCurvature r = src.load();
  const c2k::SecondKindOperator op = c2k::induce_second_kind(r);
  const c2k::ConeVerdict v = c2k::cone_membership(op, {alpha, theta}, tol);
  const char* cls = v.cls == c2k::ConeClass::interior   ? "interior"
                    : v.cls == c2k::ConeClass::boundary ? "boundary"
                                                        : "outside";
  if (as_json) {
    json doc;
    doc["alpha"] = alpha;
    doc["theta"] = theta;
    doc["tol"] = tol;
    doc["margin"] = v.margin;
    doc["class"] = cls;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("margin %s (%s)\n", fmt(v.margin).c_str(), cls);
  }
  return c2k::in_cone(v) ? 0 : 1;
}

int run_campaigns(c2k::RunConfig cfg, const std::vector<std::string>& claims,
                  bool falsify, bool as_json, bool as_tsv) {
  int violations = 0;
  for (const std::string& claim : claims) {
    cfg.claim = claim;
    const c2k::CampaignReport rep =
        falsify ? c2k::run_falsify(cfg) : c2k::run_verify(cfg);
    violations += rep.violations;
    if (as_json) {
      std::printf("%s", rep.to_json().c_str());
    } else if (as_tsv) {
      std::printf("%s", rep.to_tsv().c_str());
    } else {
      std::printf("%-22s samples %d  hypothesis met %d  violations %d\n",
                  claim.c_str(), rep.samples, rep.hypothesis_met,
                  rep.violations);
    }
  }
  return violations == 0 ? 0 : 1;
}

int cmd_bochner(const TensorSource& src, int p, std::optional<double> theta,
                bool as_json) {
  const c2k::AlgebraicCurvature r = src.load();
  const c2k::Matrix ct = c2k::curvature_term(r, p);
  Eigen::SelfAdjointEigenSolver<c2k::Matrix> es(ct);
  const c2k::CertificateClass cls = c2k::betti_certificate(r, p);
  const char* name = cls == c2k::CertificateClass::positive ? "positive"
                     : cls == c2k::CertificateClass::semidefinite
                         ? "semidefinite"
                         : "indefinite";
  std::optional<c2k::ImplicationReport> pr;
  if (theta && 2 * p <= r.n()) pr = c2k::p_ricci_check(r, p, *theta);
  if (as_json) {
    json doc;
    doc["p"] = p;
    doc["certificate"] = name;
    doc["spectrum"] = json::array();
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      doc["spectrum"].push_back(es.eigenvalues()(i));
    }
    if (pr) {
      doc["p_ricci"] = {{"hypothesis_margin", pr->hypothesis_margin},
                        {"conclusion_margin", pr->conclusion_margin}};
    }
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("curvature term spectrum (p=%d):", p);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
      std::printf(" %s", fmt(es.eigenvalues()(i)).c_str());
    }
    std::printf("\ncertificate: %s\n", name);
    if (pr) {
      std::printf("p-ricci margins: hypothesis %s, conclusion %s\n",
                  fmt(pr->hypothesis_margin).c_str(),
                  fmt(pr->conclusion_margin).c_str());
    }
  }
  return cls == c2k::CertificateClass::indefinite ? 1 : 0;
}

int cmd_kahler(const TensorSource& src, double alpha, double theta,
               int samples, std::uint64_t seed, bool as_json) {
  const c2k::AlgebraicCurvature r = src.load();
  if (r.n() % 2 != 0) throw CLI::ValidationError("kahler: n must be even");
  c2k::Matrix j;
  if (const auto s = src.spec();
      s && s->kind == c2k::ModelKind::cp_product) {
    j = c2k::block_complex_structure({s->k, s->m - s->k});
  } else {
    j = c2k::standard_complex_structure(r.n() / 2);
  }
  const c2k::KahlerDiagnostic d =
      c2k::kahler_cone_diagnostic(r, j, alpha, theta, samples, seed);
  auto cls = [](const c2k::ConeVerdict& v) {
    return v.cls == c2k::ConeClass::interior   ? "interior"
           : v.cls == c2k::ConeClass::boundary ? "boundary"
                                               : "outside";
  };
  if (as_json) {
    json doc;
    doc["alpha"] = alpha;
    doc["theta"] = theta;
    doc["b_threshold"] = d.b_threshold;
    doc["plus"] = {{"margin", d.plus.margin}, {"class", cls(d.plus)}};
    doc["minus"] = {{"margin", d.minus.margin}, {"class", cls(d.minus)}};
    doc["norm"] = d.r_norm;
    doc["hsc"] = {{"mean", d.hsc.mean},
                  {"variance", d.hsc.variance},
                  {"min", d.hsc.min},
                  {"max", d.hsc.max}};
    doc["flatness_expected"] = d.flatness_expected;
    doc["constant_hsc_expected"] = d.constant_hsc_expected;
    doc["ok"] = d.ok;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("B threshold %s\n", fmt(d.b_threshold).c_str());
    std::printf("+R: margin %s (%s)\n", fmt(d.plus.margin).c_str(),
                cls(d.plus));
    std::printf("-R: margin %s (%s)\n", fmt(d.minus.margin).c_str(),
                cls(d.minus));
    std::printf("norm %s, HSC mean %s variance %s\n", fmt(d.r_norm).c_str(),
                fmt(d.hsc.mean).c_str(), fmt(d.hsc.variance).c_str());
    std::printf("ok: %s\n", d.ok ? "yes" : "NO");
  }
  return d.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvature operator of the second kind toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, as_tsv = false;
  app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--tsv", as_tsv, "TSV output");

  // threshold
  auto* th = app.add_subcommand("threshold", "closed-form threshold tables");
  std::string table = "theta";
  int th_n = 4, th_m = 2;
  th->add_option("--table", table, "theta|a|b");
  th->add_option("--n", th_n, "dimension");
  th->add_option("--m", th_m, "complex dimension");

  // spectrum
  auto* sp = app.add_subcommand("spectrum", "second-kind operator spectrum");
  TensorSource sp_src;
  sp_src.add_options(sp);
  double sp_tol = c2k::kTolEigen;
  sp->add_option("--tol", sp_tol, "eigenvalue tolerance");

  // check-cone
  auto* cc = app.add_subcommand("check-cone", "cone membership");
  TensorSource cc_src;
  cc_src.add_options(cc);
  double cc_alpha = 1.0, cc_theta = 0.0, cc_tol = c2k::kTolEigen;
  cc->add_option("--alpha", cc_alpha, "cone alpha")->required();
  cc->add_option("--theta", cc_theta, "cone theta");
  cc->add_option("--tol", cc_tol, "boundary tolerance");

  // verify / falsify
  c2k::RunConfig cfg;
  std::string prop = "all";
  auto add_campaign_options = [&](CLI::App* cmd) {
    cmd->add_option("--prop", prop, "claim id or 'all'");
    cmd->add_option("--claim", prop, "claim id (alias of --prop)");
    cmd->add_option("--n", cfg.n, "dimension");
    cmd->add_option("--p", cfg.p, "form degree");
    cmd->add_option("--alpha", cfg.alpha, "cone alpha");
    cmd->add_option("--theta", cfg.theta, "cone theta");
    cmd->add_option("--beta", cfg.beta, "weight principle shift");
    cmd->add_option("--samples", cfg.samples, "sample count");
    cmd->add_option("--seed", cfg.seed, "campaign seed");
    cmd->add_option("--tol", cfg.tol, "margin tolerance");
    cmd->add_option("--iso-frames", cfg.iso_frames, "isotropic frames");
    cmd->add_option("--threads", cfg.threads, "worker threads");
    cmd->add_option("--out", cfg.violations_dir, "violation dump directory");
  };
  auto* vf = app.add_subcommand("verify", "verification campaign");
  add_campaign_options(vf);
  auto* fz = app.add_subcommand("falsify", "violation mining");
  add_campaign_options(fz);

  // bochner
  auto* bo = app.add_subcommand("bochner", "p-form curvature term");
  TensorSource bo_src;
  bo_src.add_options(bo);
  int bo_p = 2;
  double bo_theta = 0.0;
  bo->add_option("--p", bo_p, "form degree")->required();
  auto* bo_theta_opt =
      bo->add_option("--theta", bo_theta, "also run the p-Ricci check");

  // kahler
  auto* ka = app.add_subcommand("kahler", "Kahler cone diagnostic");
  TensorSource ka_src;
  ka_src.add_options(ka);
  double ka_alpha = 1.0, ka_theta = 0.0;
  int ka_samples = 500;
  std::uint64_t ka_seed = 1;
  ka->add_option("--alpha", ka_alpha, "cone alpha")->required();
  ka->add_option("--theta", ka_theta, "cone theta")->required();
  ka->add_option("--samples", ka_samples, "HSC sample count");
  ka->add_option("--seed", ka_seed, "HSC sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (th->parsed()) return cmd_threshold(table, th_n, th_m, as_json, as_tsv);
    if (sp->parsed()) return cmd_spectrum(sp_src, as_json, as_tsv, sp_tol);
    if (cc->parsed()) {
      return cmd_check_cone(cc_src, cc_alpha, cc_theta, cc_tol, as_json);
    }
    if (vf->parsed() || fz->parsed()) {
      std::vector<std::string> claims;
      if (prop == "all") {
        claims = {"trace", "identities", "ricci", "pricci", "qbound",
                  "weight"};
        if (cfg.n == 4) claims.push_back("pic");
      } else {
        claims = {prop};
      }
      return run_campaigns(cfg, claims, fz->parsed(), as_json, as_tsv);
    }
    if (bo->parsed()) {
      std::optional<double> theta;
      if (bo_theta_opt->count() > 0) theta = bo_theta;
      return cmd_bochner(bo_src, bo_p, theta, as_json);
    }
    if (ka->parsed()) {
      return cmd_kahler(ka_src, ka_alpha, ka_theta, ka_samples, ka_seed,
                        as_json);
    }
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
