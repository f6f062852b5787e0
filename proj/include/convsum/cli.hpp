#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "convsum/qseries.hpp"

namespace convsum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kInputError = 2,
  kSolverFailure = 3,
};

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::size_t truncation = kDefaultTruncation;
  std::optional<std::filesystem::path> cache_dir;
  OutputFormat format = OutputFormat::Json;
  int search_bound = 9;
};

// Minimum truncation for commands that build a basis and solve.
inline constexpr std::size_t kMinSolverTruncation = 64;

// On-disk cache of q-expansions, one version-1 qseries JSON file per entry,
// named by a stable hash of (kind, parameters, truncation). A tab-separated
// MANIFEST maps keys back to their parameters. All writes are
// write-temp-rename.
class SeriesCache {
 public:
  explicit SeriesCache(std::filesystem::path dir);

  static std::string key(const std::string& kind, const std::string& params, std::size_t truncation);

  QSeries get_or_compute(const std::string& kind, const std::string& params, std::size_t truncation,
                         const std::function<QSeries()>& compute);

  std::filesystem::path path_for(const std::string& key) const;
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  void record_manifest(const std::string& key, const std::string& kind, const std::string& params,
                       std::size_t truncation) const;

  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Entry point shared by the executable and the tests. args[0] is the
// program name. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convsum::cli
