#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewk {

/// Runtime limits and grid bounds. Defaults are desk scale; every field can
/// be overridden by a SKEWK_* environment variable or a CLI flag.
struct Config {
  std::uint64_t max_field_size = std::uint64_t(1) << 20;  // largest |F_q| built
  std::uint32_t max_oracle_dim = 256;                     // largest F-dimension handled by the oracle
  std::string output_format = "text";                     // "text" | "json"

  // desk-grid bounds
  std::vector<std::uint64_t> grid_primes = {2, 3, 5, 7};
  std::uint32_t grid_f_max = 2;
  std::uint32_t grid_n_max = 4;
  std::uint32_t grid_group_max = 16;  // |N| bound
  // automorphism sampling: exhaustive below the dim threshold, strided sample above
  std::uint32_t grid_theta_cap = 24;
  std::uint32_t grid_theta_cap_dim = 128;
  std::uint32_t grid_threads = 0;  // 0 = hardware concurrency

  /// Defaults with SKEWK_MAX_FIELD_SIZE, SKEWK_MAX_ORACLE_DIM, SKEWK_FORMAT,
  /// SKEWK_GRID_PRIMES, SKEWK_GRID_FMAX, SKEWK_GRID_NMAX, SKEWK_GRID_GROUP_MAX,
  /// SKEWK_GRID_THETA_CAP, SKEWK_GRID_THREADS applied on top.
  static Config from_env();
};

}  // namespace skewk
