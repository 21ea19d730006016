#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cgolay/core.hpp"

namespace cgolay {

/// Writes via a sibling temp file and rename, so readers never observe a
/// partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Pair file: one `n<TAB>A<TAB>B` line per pair, lines sorted.
std::string format_pairs(std::vector<GolayPair> pairs);
std::vector<GolayPair> parse_pairs(const std::string& text, const std::string& origin = "<memory>");
void write_pairs(const std::filesystem::path& path, std::vector<GolayPair> pairs);
std::vector<GolayPair> read_pairs(const std::filesystem::path& path);

struct CountsRow {
  std::size_t n = 0;
  std::size_t seqs = 0;
  std::size_t all = 0;
  std::size_t inequiv = 0;
  bool operator==(const CountsRow&) const = default;
};

/// CSV with header `n,seqs,all,inequiv`.
std::string format_counts(const std::vector<CountsRow>& rows);
std::vector<CountsRow> parse_counts(const std::string& text);

}  // namespace cgolay
