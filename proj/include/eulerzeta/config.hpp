#pragma once

#include <optional>
#include <string>

namespace eulerzeta {

/// Optional settings read from a key=value file (eulerzeta.toml by default).
/// Command-line flags take precedence over anything set here.
struct Config {
  std::optional<int> digits;
  std::optional<int> lmax;
  std::optional<int> max_quad_level;
};

/// Parses "key = value" lines; '#' starts a comment. Throws
/// std::invalid_argument on unknown keys or non-integer values.
Config parse_config(const std::string& text);

/// Reads and parses `path`; a missing file yields an empty Config.
Config load_config(const std::string& path);

}  // namespace eulerzeta
