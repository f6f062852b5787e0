#include <unistd.h>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "convsum/cli.hpp"
#include "convsum/errors.hpp"
#include "convsum/serialize.hpp"

namespace convsum::cli {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidArgument("cannot write " + tmp.string());
    f << contents;
    if (!f.flush()) throw InvalidArgument("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

// FNV-1a, 64 bit.
std::string SeriesCache::key(const std::string& kind, const std::string& params, std::size_t truncation) {
  const std::string text = kind + '|' + params + '|' + std::to_string(truncation);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

fs::path SeriesCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

QSeries SeriesCache::get_or_compute(const std::string& kind, const std::string& params, std::size_t truncation,
                                    const std::function<QSeries()>& compute) {
  const std::string k = key(kind, params, truncation);
  const fs::path p = path_for(k);
  if (fs::exists(p)) {
    std::ifstream f(p, std::ios::binary);
    Json j = Json::parse(f, nullptr, /*allow_exceptions=*/false);
    if (!j.is_discarded()) {
      try {
        QSeries s = qseries_from_json(j);
        if (s.truncation() == truncation) {
          ++hits_;
          return s;
        }
      } catch (const Error&) {
        // Corrupt entry; recompute below.
      }
    }
  }
  ++misses_;
  QSeries s = compute();
  write_file_atomic(p, qseries_to_json(s).dump() + "\n");
  record_manifest(k, kind, params, truncation);
  return s;
}

void SeriesCache::record_manifest(const std::string& key, const std::string& kind, const std::string& params,
                                  std::size_t truncation) const {
  const fs::path manifest = dir_ / "MANIFEST";
  std::set<std::string> lines;
  {
    std::ifstream f(manifest);
    std::string line;
    while (std::getline(f, line)) {
      if (!line.empty()) lines.insert(line);
    }
  }
  lines.insert(key + '\t' + kind + '\t' + params + '\t' + std::to_string(truncation));
  std::string out;
  for (const auto& line : lines) out += line + '\n';
  write_file_atomic(manifest, out);
}

}  // namespace convsum::cli
