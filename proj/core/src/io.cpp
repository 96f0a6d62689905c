#include "latteds/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latteds {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string snapshot_to_string(const Field& f) {
  const Window& w = f.window();
  std::string out;
  out.reserve(static_cast<std::size_t>(w.site_count()) * (f.width() + w.dim()) * 12);
  out += std::to_string(w.dim());
  out += ' ';
  out += std::to_string(f.width());
  out += ' ';
  out += std::to_string(w.radius());
  out += ' ';
  out += to_string(w.boundary());
  out += '\n';
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    const Site s = w.site_at(i);
    for (int j = 0; j < w.dim(); ++j) {
      out += std::to_string(s[j]);
      out += ' ';
    }
    for (int c = 0; c < f.width(); ++c) {
      out += format_double(f.at(i, c));
      out += c + 1 == f.width() ? '\n' : ' ';
    }
  }
  return out;
}

Field snapshot_from_string(const std::string& text) {
  std::istringstream in(text);
  int dim = 0, width = 0, radius = 0;
  std::string boundary;
  if (!(in >> dim >> width >> radius >> boundary))
    throw std::runtime_error("snapshot: malformed header (expected 'N M W boundary')");
  Window w(dim, radius, boundary_from_string(boundary));
  Field f(w, width);
  Site s{};
  for (std::int64_t i = 0; i < w.site_count(); ++i) {
    for (int j = 0; j < dim; ++j)
      if (!(in >> s[j])) throw std::runtime_error("snapshot: truncated site coordinates");
    const std::int64_t idx = w.index_of(s);
    if (idx != i) throw std::runtime_error("snapshot: sites out of lexicographic order");
    for (int c = 0; c < width; ++c)
      if (!(in >> f.at(idx, c))) throw std::runtime_error("snapshot: truncated values");
  }
  return f;
}

void write_snapshot(const std::filesystem::path& path, const Field& f) {
  atomic_write(path, snapshot_to_string(f));
}

Field read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open snapshot file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return snapshot_from_string(ss.str());
}

void atomic_write(const std::filesystem::path& path, const std::string& contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CsvWriter::CsvWriter(std::filesystem::path path, const std::vector<std::string>& columns)
    : path_(std::move(path)), columns_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    buffer_ += columns[i];
    buffer_ += i + 1 == columns.size() ? '\n' : ',';
  }
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_)
    throw std::invalid_argument("csv row width mismatch for " + path_.string());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    buffer_ += cells[i];
    buffer_ += i + 1 == cells.size() ? '\n' : ',';
  }
}

void CsvWriter::flush() { atomic_write(path_, buffer_); }

}  // namespace latteds
