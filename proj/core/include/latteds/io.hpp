#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "latteds/lattice.hpp"

namespace latteds {

// Full round-trip decimal formatting (shortest form is not required; %.17g is).
std::string format_double(double v);

/** Field snapshot text format: header `N M W boundary`, then one row per site
 * `a_1 .. a_N value_1 .. value_M`, sites in lexicographic order. */
std::string snapshot_to_string(const Field& f);
Field snapshot_from_string(const std::string& text);

void write_snapshot(const std::filesystem::path& path, const Field& f);
Field read_snapshot(const std::filesystem::path& path);

// Whole-file atomic write: write to a temporary sibling, then rename.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

/** Incremental CSV writer with a fixed header row. Rows accumulate in memory
 * and land on disk atomically in flush(). */
class CsvWriter {
public:
  CsvWriter(std::filesystem::path path, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void flush();

private:
  std::filesystem::path path_;
  std::size_t columns_;
  std::string buffer_;
};

}  // namespace latteds
