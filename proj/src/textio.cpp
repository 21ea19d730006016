#include "cgolay/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <unistd.h>

namespace cgolay {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string format_pairs(std::vector<GolayPair> pairs) {
  std::vector<std::string> lines;
  lines.reserve(pairs.size());
  for (const auto& p : pairs) lines.push_back(p.to_line());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::vector<GolayPair> parse_pairs(const std::string& text, const std::string& origin) {
  std::vector<GolayPair> pairs;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      pairs.push_back(GolayPair::parse_line(line));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return pairs;
}

void write_pairs(const fs::path& path, std::vector<GolayPair> pairs) {
  write_file_atomic(path, format_pairs(std::move(pairs)));
}

std::vector<GolayPair> read_pairs(const fs::path& path) { return parse_pairs(read_file(path), path.string()); }

std::string format_counts(const std::vector<CountsRow>& rows) {
  std::string out = "n,seqs,all,inequiv\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.seqs) + ',' + std::to_string(r.all) + ',' +
           std::to_string(r.inequiv) + '\n';
  }
  return out;
}

std::vector<CountsRow> parse_counts(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "n,seqs,all,inequiv") {
    throw std::runtime_error("counts CSV missing header n,seqs,all,inequiv");
  }
  std::vector<CountsRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CountsRow r;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream ls(line);
    if (!(ls >> r.n >> c1 >> r.seqs >> c2 >> r.all >> c3 >> r.inequiv) || c1 != ',' || c2 != ',' || c3 != ',') {
      throw std::runtime_error("malformed counts row: " + line);
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cgolay
