#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cgolay/core.hpp"
#include "cgolay/filters.hpp"
#include "cgolay/parallel.hpp"

namespace cgolay {

struct RunConfig {
  std::size_t n = 0;
  std::size_t shards = 1;
  /// 1-based. When unset, every shard is processed.
  std::optional<std::size_t> shard_index;
  std::size_t dft_pre = kDefaultPreprocessingSamples;
  std::size_t dft_stage1 = kDefaultStage1Samples;
  double epsilon = kDefaultEpsilon;
  /// Empty: run in memory only.
  std::filesystem::path out_dir;
  std::string format = "text";
  std::size_t workers = default_workers();
  /// Reuse persisted lists whose header matches this configuration.
  bool resume = true;

  void validate() const;
};

struct StageTime {
  double cpu_seconds = 0;
  double wall_seconds = 0;
};

struct EnumerationReport {
  std::size_t n = 0;
  std::size_t l_even = 0;
  std::size_t l_odd = 0;
  std::size_t l_a = 0;
  std::size_t pairs_normalized = 0;
  StageTime preprocessing;
  StageTime stage1;
  StageTime stage2;

  /// key=value lines.
  std::string to_text() const;
};

struct HalfLists {
  std::vector<MaskedSequence> even;
  std::vector<MaskedSequence> odd;
};

/// Filtered normalized halves. For n = 1 the odd list is empty.
HalfLists run_preprocessing(const RunConfig& cfg);

/// Half-open slice [begin, end) of the odd list handled by 1-based shard k of P.
std::pair<std::size_t, std::size_t> shard_range(std::size_t count, std::size_t shards, std::size_t k);

/// Joins that pass the stage-1 filters. Restricted to the configured shard's
/// slice of the odd list when cfg.shard_index is set.
std::vector<QuatSequence> run_stage1(const RunConfig& cfg, const HalfLists& lists);

/// All normalized pairs (A, B) with A from `l_a`, sorted.
std::vector<GolayPair> run_stage2(const RunConfig& cfg, const std::vector<QuatSequence>& l_a);

struct EnumerationResult {
  EnumerationReport report;
  std::vector<GolayPair> pairs;
};

/// Runs preprocessing, stage 1 and stage 2. With an output directory it
/// writes L_even.txt, L_odd.txt, L_A[.shard].txt, pairs[.shard].txt and
/// report[.shard].txt there.
EnumerationResult enumerate(const RunConfig& cfg);

/// File-name suffix for a shard: "" for an unsharded run, else ".shard-k-of-P".
std::string shard_suffix(std::size_t shards, std::optional<std::size_t> shard_index);

/// Union of every pairs*.txt file in `dir`, sorted and deduplicated.
std::vector<GolayPair> read_pair_dir(const std::filesystem::path& dir);

}  // namespace cgolay
