#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chaoswm/attacks.hpp"
#include "chaoswm/keystream.hpp"
#include "chaoswm/media_plane.hpp"
#include "chaoswm/pipeline.hpp"

namespace chaoswm::tools {

struct AttackGrid {
  AttackKind kind;
  std::vector<double> magnitudes;
};

/// crop 10/50/100/200, rotation 2/5/10/25, jpeg 2/5/10/20, gaussian 1/2/3/5.
std::vector<AttackGrid> default_attack_grids();

struct EvaluationOptions {
  std::vector<Mode> modes = {Mode::kUnauthenticated, Mode::kAuthenticated};
  std::vector<AttackGrid> grids = default_attack_grids();
  CoefficientPlan plan;
  bool encrypt = true;
  CollisionPolicy collision_policy = CollisionPolicy::kFaithful;
  std::uint64_t noise_seed = 1;
  std::size_t crop_x = 0;
  std::size_t crop_y = 0;
};

struct ReportRow {
  Mode mode;
  AttackKind attack;
  double magnitude;
  double similarity_percent;
  /// PSNR of the unattacked watermarked image for this mode.
  double psnr_db;
  std::size_t collisions;
  CollisionPolicy policy;
};

struct RunReport {
  std::string key_fingerprint;
  std::vector<ReportRow> rows;
};

/// Embeds once per mode (the key's mode is overridden), then runs every
/// (attack, magnitude) cell, extracts and compares with the watermark.
/// Rows are ordered by mode, then grid, then magnitude.
RunReport evaluate(const GrayImage& carrier, const Watermark& wm, const SecretKey& key,
                   const EvaluationOptions& options = {});

inline constexpr const char* kCsvHeader =
    "mode,attack,magnitude,similarity_percent,psnr_db,collisions,policy";

void write_csv(std::ostream& out, const RunReport& report);
/// Side-by-side unauthenticated | authenticated table per attack family.
void write_table(std::ostream& out, const RunReport& report);

}  // namespace chaoswm::tools
