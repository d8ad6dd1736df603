#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "chaoswm/keystream.hpp"

namespace chaoswm {

// Key file: one `name=value` per line with names mu, u0, burn_in and mode
// (auth|noauth). Blank lines and lines starting with '#' are ignored; unknown
// or repeated names are rejected with FormatError.

SecretKey parse_key(std::string_view text);
SecretKey read_key_file(const std::filesystem::path& path);
/// Shortest round-tripping decimal form, so parse_key(format_key(k)) == k.
std::string format_key(const SecretKey& key);
void write_key_file(const std::filesystem::path& path, const SecretKey& key);

/// FNV-1a 64 over format_key(key), printed as 16 hex digits.
std::string key_fingerprint(const SecretKey& key);

}  // namespace chaoswm
