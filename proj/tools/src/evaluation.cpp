#include "chaoswm_tools/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "chaoswm/key_file.hpp"
#include "chaoswm/metrics.hpp"

namespace chaoswm::tools {

namespace {

std::string format_number(double v, int precision) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::string format_magnitude(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

const char* magnitude_label(AttackKind kind) {
  switch (kind) {
    case AttackKind::kCrop:
      return "Size (pixels)";
    case AttackKind::kRotation:
      return "Angle (degree)";
    case AttackKind::kJpeg:
      return "Compression level";
    case AttackKind::kGaussian:
      return "Standard deviation";
  }
  return "Magnitude";
}

}  // namespace

std::vector<AttackGrid> default_attack_grids() {
  return {
      {AttackKind::kCrop, {10, 50, 100, 200}},
      {AttackKind::kRotation, {2, 5, 10, 25}},
      {AttackKind::kJpeg, {2, 5, 10, 20}},
      {AttackKind::kGaussian, {1, 2, 3, 5}},
  };
}

RunReport evaluate(const GrayImage& carrier, const Watermark& wm, const SecretKey& key,
                   const EvaluationOptions& options) {
  RunReport report;
  report.key_fingerprint = key_fingerprint(key);
  for (const Mode mode : options.modes) {
    const SecretKey mode_key = key.with_mode(mode);
    EmbedParams params{options.plan, mode, options.encrypt, options.collision_policy};
    const auto embedded = embed_with_report(carrier, wm, mode_key, params);
    const double quality = psnr(carrier, embedded.image);

    for (const auto& grid : options.grids) {
      for (const double magnitude : grid.magnitudes) {
        AttackConfig config{grid.kind, magnitude, options.noise_seed, options.crop_x,
                            options.crop_y};
        const auto attacked = apply_attack(embedded.image, config);
        const auto recovered = extract(attacked, mode_key, wm.width, wm.height, params);
        report.rows.push_back({mode, grid.kind, magnitude,
                               similarity_percent(wm.bits, recovered.bits).percent, quality,
                               embedded.collisions, options.collision_policy});
      }
    }
  }
  return report;
}

void write_csv(std::ostream& out, const RunReport& report) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << to_string(r.mode) << ',' << to_string(r.attack) << ',' << format_magnitude(r.magnitude)
        << ',' << format_number(r.similarity_percent, 2) << ',' << format_number(r.psnr_db, 2)
        << ',' << r.collisions << ',' << to_string(r.policy) << '\n';
  }
}

void write_table(std::ostream& out, const RunReport& report) {
  // attack -> mode -> rows, preserving first-seen attack order.
  std::vector<AttackKind> order;
  std::map<AttackKind, std::map<Mode, std::vector<const ReportRow*>>> cells;
  for (const auto& r : report.rows) {
    if (cells.find(r.attack) == cells.end()) order.push_back(r.attack);
    cells[r.attack][r.mode].push_back(&r);
  }

  out << "key " << report.key_fingerprint << '\n';
  for (const auto kind : order) {
    auto& by_mode = cells[kind];
    const auto& noauth = by_mode[Mode::kUnauthenticated];
    const auto& auth = by_mode[Mode::kAuthenticated];
    char line[160];
    out << '\n' << to_string(kind) << '\n';
    std::snprintf(line, sizeof line, "  %-32s | %-32s\n", "UNAUTHENTICATION", "AUTHENTICATION");
    out << line;
    std::snprintf(line, sizeof line, "  %-20s %11s | %-20s %11s\n", magnitude_label(kind),
                  "Similarity", magnitude_label(kind), "Similarity");
    out << line;
    const auto rows = std::max(noauth.size(), auth.size());
    for (std::size_t i = 0; i < rows; ++i) {
      auto cell = [](const std::vector<const ReportRow*>& v, std::size_t i, bool mag) {
        if (i >= v.size()) return std::string();
        return mag ? format_magnitude(v[i]->magnitude)
                   : format_number(v[i]->similarity_percent, 2) + "%";
      };
      std::snprintf(line, sizeof line, "  %-20s %11s | %-20s %11s\n", cell(noauth, i, true).c_str(),
                    cell(noauth, i, false).c_str(), cell(auth, i, true).c_str(),
                    cell(auth, i, false).c_str());
      out << line;
    }
  }
}

}  // namespace chaoswm::tools
