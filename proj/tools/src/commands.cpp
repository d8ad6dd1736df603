#include "chaoswm_tools/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "chaoswm/attacks.hpp"
#include "chaoswm/chaos_verify.hpp"
#include "chaoswm/errors.hpp"
#include "chaoswm/key_file.hpp"
#include "chaoswm/metrics.hpp"
#include "chaoswm/netpbm.hpp"
#include "chaoswm/pipeline.hpp"
#include "chaoswm_tools/evaluation.hpp"

namespace chaoswm::tools {

namespace {

struct PipelineFlags {
  bool no_encrypt = false;
  std::string policy = "faithful";
  std::string plan = "default";

  void add_to(CLI::App* cmd) {
    cmd->add_flag("--no-encrypt", no_encrypt, "Watermark bits are stored unencrypted (must match at embed and extract)");
    cmd->add_option("--policy", policy, "Collision policy")
        ->check(CLI::IsMember({"faithful", "skip_duplicates"}));
    cmd->add_option("--plan", plan, "Coefficient plan: default = LSC bits 2,1,0; upper = 3,2,1")
        ->check(CLI::IsMember({"default", "upper"}));
  }

  EmbedParams params(Mode mode) const {
    EmbedParams p;
    p.plan = plan == "upper" ? CoefficientPlan::upper_lsc() : CoefficientPlan();
    p.mode = mode;
    p.encrypt = !no_encrypt;
    p.collision_policy =
        policy == "faithful" ? CollisionPolicy::kFaithful : CollisionPolicy::kSkipDuplicates;
    return p;
  }
};

std::string format_psnr(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string format_percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct EmbedArgs {
  std::string carrier, watermark, key, out;
  PipelineFlags flags;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out) {
  const auto carrier = read_pgm(a.carrier);
  const auto wm = read_pbm(a.watermark);
  const auto key = read_key_file(a.key);
  const auto result = embed_with_report(carrier, wm, key, a.flags.params(key.mode));
  write_pgm(a.out, result.image);
  out << "mode=" << to_string(key.mode) << " policy=" << a.flags.policy
      << " psnr_db=" << format_psnr(psnr(carrier, result.image))
      << " collisions=" << result.collisions << '\n';
  return kExitOk;
}

struct ExtractArgs {
  std::string image, key, out, reference;
  std::size_t width = 0, height = 0;
  PipelineFlags flags;
};

int cmd_extract(const ExtractArgs& a, std::ostream& out) {
  if (a.width == 0 || a.height == 0) throw DomainError("watermark width and height must be > 0");
  const auto image = read_pgm(a.image);
  const auto key = read_key_file(a.key);
  const auto wm = extract(image, key, a.width, a.height, a.flags.params(key.mode));
  if (!a.out.empty()) write_pbm(a.out, wm);
  if (!a.reference.empty()) {
    const auto reference = read_pbm(a.reference);
    if (reference.width != a.width || reference.height != a.height) {
      throw DimensionMismatchError("reference watermark dimensions differ from --width/--height");
    }
    const auto sim = similarity_percent(reference.bits, wm.bits);
    out << "similarity_percent=" << format_percent(sim.percent) << " equal_bits=" << sim.equal_bits
        << '/' << sim.total_bits << '\n';
    out << "verdict: " << describe(classify(sim)) << '\n';
  }
  return kExitOk;
}

struct AttackArgs {
  std::string in, out, kind;
  std::optional<double> size, angle, level, sigma;
  std::optional<std::uint64_t> seed;
  std::size_t origin_x = 0, origin_y = 0;
};

int cmd_attack(const AttackArgs& a, std::ostream& out) {
  AttackConfig config;
  config.kind = parse_attack_kind(a.kind);
  auto require = [](const std::optional<double>& v, const char* flag) {
    if (!v) throw DomainError(std::string("attack requires ") + flag);
    return *v;
  };
  switch (config.kind) {
    case AttackKind::kCrop:
      config.magnitude = require(a.size, "--size");
      config.crop_x = a.origin_x;
      config.crop_y = a.origin_y;
      break;
    case AttackKind::kRotation:
      config.magnitude = require(a.angle, "--angle");
      break;
    case AttackKind::kJpeg:
      config.magnitude = require(a.level, "--level");
      if (config.magnitude < 1 || config.magnitude != std::floor(config.magnitude)) {
        throw DomainError("--level must be an integer >= 1");
      }
      break;
    case AttackKind::kGaussian:
      config.magnitude = require(a.sigma, "--sigma");
      if (!a.seed) throw DomainError("gaussian attack requires --seed");
      config.seed = *a.seed;
      break;
  }
  const auto img = read_pgm(a.in);
  const auto attacked = apply_attack(img, config);
  write_pgm(a.out, attacked);
  out << "attack=" << a.kind << " magnitude=" << config.magnitude
      << " psnr_db=" << format_psnr(psnr(img, attacked)) << '\n';
  return kExitOk;
}

struct EvaluateArgs {
  std::string carrier, watermark, key, csv;
  PipelineFlags flags;
  std::vector<double> crop{10, 50, 100, 200}, rotation{2, 5, 10, 25}, jpeg{2, 5, 10, 20},
      gaussian{1, 2, 3, 5};
  std::uint64_t seed = 1;
  std::size_t origin_x = 0, origin_y = 0;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
  const auto carrier = read_pgm(a.carrier);
  const auto wm = read_pbm(a.watermark);
  const auto key = read_key_file(a.key);
  const auto base = a.flags.params(key.mode);

  EvaluationOptions options;
  options.plan = base.plan;
  options.encrypt = base.encrypt;
  options.collision_policy = base.collision_policy;
  options.noise_seed = a.seed;
  options.crop_x = a.origin_x;
  options.crop_y = a.origin_y;
  options.grids = {{AttackKind::kCrop, a.crop},
                   {AttackKind::kRotation, a.rotation},
                   {AttackKind::kJpeg, a.jpeg},
                   {AttackKind::kGaussian, a.gaussian}};
  for (const auto& g : options.grids) {
    for (double m : g.magnitudes) {
      if (m < 0) throw DomainError("grid magnitudes must be >= 0");
      if (g.kind == AttackKind::kJpeg && (m < 1 || m != std::floor(m))) {
        throw DomainError("jpeg grid levels must be integers >= 1");
      }
    }
  }

  const auto report = evaluate(carrier, wm, key, options);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv, std::ios::binary);
    if (!csv) throw FormatError("cannot write " + a.csv);
    write_csv(csv, report);
  }
  write_table(out, report);
  out << "\npolicy=" << a.flags.policy << " rows=" << report.rows.size() << '\n';
  return kExitOk;
}

struct ChaosArgs {
  std::size_t n = 3;
  double epsilon = 1e-3;
  double delta = 1.0;
  std::string function = "negation";
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};

int cmd_chaos_check(const ChaosArgs& a, std::ostream& out) {
  if (a.n == 0) throw DomainError("--n must be >= 1");
  if (a.n > 12) throw CapacityError("chaos-check enumerates 2^N states; N must be <= 12");
  const auto f =
      a.function == "identity" ? IterationFunction::identity() : IterationFunction::negation();
  bool all_pass = true;

  const auto graph = transition_graph_strongly_connected(f, a.n, a.seed);
  all_pass = all_pass && graph.strongly_connected;
  out << "transitivity (strongly connected transition graph, N=" << a.n << ", f=" << f.name()
      << "): " << (graph.strongly_connected ? "PASS" : "FAIL");
  if (graph.strongly_connected) {
    out << " (path " << graph.from << " -> " << graph.to << " in " << graph.path.size() - 1
        << " steps)\n";
  } else {
    out << " (state " << graph.to << " unreachable from " << graph.from << ")\n";
  }

  if (a.function != "negation") {
    out << "regularity: SKIPPED (witness construction needs f=negation)\n";
    out << "sensitivity: SKIPPED (witness construction needs f=negation)\n";
    return all_pass ? kExitOk : kExitVerificationFailed;
  }

  std::mt19937_64 rng(a.seed);
  const auto k = agreement_horizon(a.epsilon);
  auto random_point = [&] {
    PhasePoint p;
    p.state = BitVector(a.n);
    for (std::size_t i = 0; i < a.n; ++i) p.state.set(i, rng() & 1u);
    for (std::size_t i = 0; i < k + 8; ++i) p.strategy.push_back(rng() % a.n);
    return p;
  };

  std::size_t periodic_ok = 0;
  for (std::size_t s = 0; s < a.samples; ++s) {
    const auto p = random_point();
    const auto w = periodic_witness(p, a.epsilon);
    if (w.verified && distance(p, w.point, k + 8) < a.epsilon) ++periodic_ok;
  }
  const bool regular = periodic_ok == a.samples;
  all_pass = all_pass && regular;
  out << "regularity (periodic witnesses within epsilon=" << a.epsilon << "): "
      << (regular ? "PASS" : "FAIL") << " (" << periodic_ok << '/' << a.samples << ")\n";

  if (a.n < 2) {
    out << "sensitivity: SKIPPED (needs N >= 2; B^1 has no second cell to diverge on)\n";
    return all_pass ? kExitOk : kExitVerificationFailed;
  }
  std::size_t sensitive_ok = 0;
  for (std::size_t s = 0; s < a.samples; ++s) {
    const auto w = sensitivity_witness(random_point(), a.epsilon, a.delta);
    if (w.verified) ++sensitive_ok;
  }
  const bool sensitive = sensitive_ok == a.samples;
  all_pass = all_pass && sensitive;
  out << "sensitivity (delta=" << a.delta << "): " << (sensitive ? "PASS" : "FAIL") << " ("
      << sensitive_ok << '/' << a.samples << ")\n";
  return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chaotic-iteration watermarking toolkit", "chaoswm"};
  app.require_subcommand(1);

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a PBM watermark into a PGM carrier");
  embed_cmd->add_option("--carrier", embed_args.carrier, "Carrier PGM")->required();
  embed_cmd->add_option("--watermark", embed_args.watermark, "Watermark PBM")->required();
  embed_cmd->add_option("--key", embed_args.key, "Key file")->required();
  embed_cmd->add_option("--out", embed_args.out, "Output PGM")->required();
  embed_args.flags.add_to(embed_cmd);

  ExtractArgs extract_args;
  auto* extract_cmd = app.add_subcommand("extract", "Recover a watermark from a PGM");
  extract_cmd->add_option("--image", extract_args.image, "Watermarked PGM")->required();
  extract_cmd->add_option("--key", extract_args.key, "Key file")->required();
  extract_cmd->add_option("--width", extract_args.width, "Watermark width")->required();
  extract_cmd->add_option("--height", extract_args.height, "Watermark height")->required();
  extract_cmd->add_option("--out", extract_args.out, "Recovered watermark PBM");
  extract_cmd->add_option("--reference", extract_args.reference,
                          "Original watermark PBM; prints similarity and verdict");
  extract_args.flags.add_to(extract_cmd);

  AttackArgs attack_args;
  auto* attack_cmd = app.add_subcommand("attack", "Apply one attack to a PGM");
  attack_cmd->add_option("--in", attack_args.in, "Input PGM")->required();
  attack_cmd->add_option("--out", attack_args.out, "Output PGM")->required();
  attack_cmd->add_option("--kind", attack_args.kind, "crop | rotation | jpeg | gaussian")
      ->required();
  attack_cmd->add_option("--size", attack_args.size, "Crop side in pixels");
  attack_cmd->add_option("--origin-x", attack_args.origin_x, "Crop origin column");
  attack_cmd->add_option("--origin-y", attack_args.origin_y, "Crop origin row");
  attack_cmd->add_option("--angle", attack_args.angle, "Rotation angle in degrees");
  attack_cmd->add_option("--level", attack_args.level, "JPEG compression level (>= 1)");
  attack_cmd->add_option("--sigma", attack_args.sigma, "Gaussian noise standard deviation");
  attack_cmd->add_option("--seed", attack_args.seed, "Gaussian noise seed");

  EvaluateArgs eval_args;
  auto* eval_cmd = app.add_subcommand("evaluate", "Run the attack grids in both modes");
  eval_cmd->add_option("--carrier", eval_args.carrier, "Carrier PGM")->required();
  eval_cmd->add_option("--watermark", eval_args.watermark, "Watermark PBM")->required();
  eval_cmd->add_option("--key", eval_args.key, "Key file (mode is overridden)")->required();
  eval_cmd->add_option("--csv", eval_args.csv, "CSV report path");
  eval_cmd->add_option("--crop-grid", eval_args.crop, "Crop sizes")->delimiter(',');
  eval_cmd->add_option("--rotation-grid", eval_args.rotation, "Rotation angles")->delimiter(',');
  eval_cmd->add_option("--jpeg-grid", eval_args.jpeg, "JPEG levels")->delimiter(',');
  eval_cmd->add_option("--gaussian-grid", eval_args.gaussian, "Noise sigmas")->delimiter(',');
  eval_cmd->add_option("--seed", eval_args.seed, "Gaussian noise seed");
  eval_cmd->add_option("--origin-x", eval_args.origin_x, "Crop origin column");
  eval_cmd->add_option("--origin-y", eval_args.origin_y, "Crop origin row");
  eval_args.flags.add_to(eval_cmd);

  ChaosArgs chaos_args;
  auto* chaos_cmd = app.add_subcommand("chaos-check", "Desk-scale Devaney property checks");
  chaos_cmd->add_option("--n", chaos_args.n, "Cell count N (<= 12)");
  chaos_cmd->add_option("--epsilon", chaos_args.epsilon, "Neighbourhood radius");
  chaos_cmd->add_option("--delta", chaos_args.delta, "Sensitivity constant in (0, 1]");
  chaos_cmd->add_option("--function", chaos_args.function, "Iteration function")
      ->check(CLI::IsMember({"negation", "identity"}));
  chaos_cmd->add_option("--samples", chaos_args.samples, "Sampled witnesses per property");
  chaos_cmd->add_option("--seed", chaos_args.seed, "Sampling seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (embed_cmd->parsed()) return cmd_embed(embed_args, out);
    if (extract_cmd->parsed()) return cmd_extract(extract_args, out);
    if (attack_cmd->parsed()) return cmd_attack(attack_args, out);
    if (eval_cmd->parsed()) return cmd_evaluate(eval_args, out);
    if (chaos_cmd->parsed()) return cmd_chaos_check(chaos_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chaoswm::tools
