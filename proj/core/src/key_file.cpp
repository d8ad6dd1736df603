#include "chaoswm/key_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view name, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  // from_chars is correctly rounded decimal -> binary64.
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("key file: invalid number for " + std::string(name) + ": '" +
                      std::string(value) + "'");
  }
  return out;
}

}  // namespace

SecretKey parse_key(std::string_view text) {
  SecretKey key;
  bool seen_mu = false, seen_u0 = false, seen_burn = false, seen_mode = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("key file line " + std::to_string(line_no) + ": expected name=value");
    }
    const auto name = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto mark = [&](bool& seen) {
      if (seen) throw FormatError("key file: duplicate entry '" + std::string(name) + "'");
      seen = true;
    };

    if (name == "mu") {
      mark(seen_mu);
      key.mu = parse_double(name, value);
    } else if (name == "u0") {
      mark(seen_u0);
      key.u0 = parse_double(name, value);
    } else if (name == "burn_in") {
      mark(seen_burn);
      const auto* end = value.data() + value.size();
      auto [ptr, ec] = std::from_chars(value.data(), end, key.burn_in);
      if (ec != std::errc() || ptr != end) {
        throw FormatError("key file: invalid burn_in '" + std::string(value) + "'");
      }
    } else if (name == "mode") {
      mark(seen_mode);
      if (value == "auth") {
        key.mode = Mode::kAuthenticated;
      } else if (value == "noauth") {
        key.mode = Mode::kUnauthenticated;
      } else {
        throw FormatError("key file: mode must be auth or noauth");
      }
    } else {
      throw FormatError("key file: unknown entry '" + std::string(name) + "'");
    }
  }
  if (!(seen_mu && seen_u0 && seen_burn && seen_mode)) {
    throw FormatError("key file: mu, u0, burn_in and mode are all required");
  }
  try {
    key.validate();
  } catch (const DomainError& e) {
    throw FormatError(std::string("key file: ") + e.what());
  }
  return key;
}

SecretKey read_key_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open key file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_key(ss.str());
}

std::string format_key(const SecretKey& key) {
  char buf[64];
  std::string out;
  auto append_double = [&](const char* name, double v) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out += name;
    out += '=';
    out.append(buf, ptr);
    out += '\n';
  };
  append_double("mu", key.mu);
  append_double("u0", key.u0);
  out += "burn_in=" + std::to_string(key.burn_in) + "\n";
  out += "mode=" + std::string(to_string(key.mode)) + "\n";
  return out;
}

void write_key_file(const std::filesystem::path& path, const SecretKey& key) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write key file " + path.string());
  out << format_key(key);
}

std::string key_fingerprint(const SecretKey& key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_key(key)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace chaoswm
