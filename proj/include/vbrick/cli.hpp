#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "vbrick/characters.hpp"
#include "vbrick/symplectic.hpp"

namespace vbrick::cli {

inline constexpr const char* kVersion = "1.0.0";

// Exit status contract shared by every subcommand:
//   0 = all requested computations and checks passed
//   1 = a mathematical inconsistency or oracle disagreement was detected
//   2 = usage or configuration error
inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

enum class Format { table, csv, json };

struct RunConfig {
  int genus_lo = 1, genus_hi = 1;
  int level_lo = 1, level_hi = 1;
  SignConvention sign{};
  Format format = Format::table;
  bool check_oracle = false;
  unsigned precision_bits = 0;  // 0 = choose automatically; otherwise >= 64
  std::uint64_t seed = 20240814;
  std::string suite = "all";
  std::optional<BrickMode> brick_mode;  // bricks: force a mode (error-path testing)

  void validate() const;  // throws std::invalid_argument
};

// "A" or "A..B" -> [A, B]
std::pair<int, int> parse_range(const std::string& text);
std::optional<BrickMode> parse_brick_mode(const std::string& text);

int cmd_dims(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bricks(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace vbrick::cli
