#include "cgolay/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "cgolay/encoding.hpp"
#include "cgolay/textio.hpp"

namespace cgolay {

namespace fs = std::filesystem;

namespace {

class StageClock {
 public:
  StageClock() : cpu_(std::clock()), wall_(std::chrono::steady_clock::now()) {}
  StageTime elapsed() const {
    return {static_cast<double>(std::clock() - cpu_) / CLOCKS_PER_SEC,
            std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_).count()};
  }

 private:
  std::clock_t cpu_;
  std::chrono::steady_clock::time_point wall_;
};

std::string list_header(const RunConfig& cfg, const std::string& what) {
  std::ostringstream h;
  h << "# " << what << " n=" << cfg.n << " dft_pre=" << cfg.dft_pre << " epsilon=" << cfg.epsilon;
  if (what == "L_A") h << " dft_stage1=" << cfg.dft_stage1;
  return h.str();
}

template <typename T, typename Fmt>
void write_list(const fs::path& path, const std::string& header, const std::vector<T>& items, Fmt fmt) {
  std::string body = header + '\n';
  for (const auto& x : items) {
    body += fmt(x);
    body += '\n';
  }
  write_file_atomic(path, body);
}

/// Lines after the header, or nullopt when the file is absent or was made
/// with a different configuration.
std::optional<std::vector<std::string>> read_list(const fs::path& path, const std::string& header) {
  if (!fs::exists(path)) return std::nullopt;
  auto lines = read_lines(path);
  if (lines.empty() || lines.front() != header) return std::nullopt;
  lines.erase(lines.begin());
  std::erase_if(lines, [](const std::string& l) { return l.empty(); });
  return lines;
}

std::vector<MaskedSequence> parse_halves(const std::vector<std::string>& lines, Parity parity) {
  std::vector<MaskedSequence> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(MaskedSequence::parse(l, parity));
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (shards == 0) throw std::invalid_argument("shards must be >= 1");
  if (shard_index && (*shard_index < 1 || *shard_index > shards)) {
    throw std::invalid_argument("shard index must lie in 1.." + std::to_string(shards));
  }
  for (auto samples : {dft_pre, dft_stage1}) {
    if (samples < 8 || !std::has_single_bit(samples)) {
      throw std::invalid_argument("sample counts must be powers of two >= 8");
    }
  }
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (format != "text") throw std::invalid_argument("unsupported output format '" + format + "'");
  if (workers == 0) throw std::invalid_argument("workers must be >= 1");
}

std::string EnumerationReport::to_text() const {
  std::ostringstream out;
  out << "n=" << n << '\n'
      << "L_even=" << l_even << '\n'
      << "L_odd=" << l_odd << '\n'
      << "L_A=" << l_a << '\n'
      << "pairs_normalized=" << pairs_normalized << '\n'
      << "cpu_seconds_preprocessing=" << preprocessing.cpu_seconds << '\n'
      << "cpu_seconds_stage1=" << stage1.cpu_seconds << '\n'
      << "cpu_seconds_stage2=" << stage2.cpu_seconds << '\n'
      << "wall_seconds_preprocessing=" << preprocessing.wall_seconds << '\n'
      << "wall_seconds_stage1=" << stage1.wall_seconds << '\n'
      << "wall_seconds_stage2=" << stage2.wall_seconds << '\n';
  return out.str();
}

std::string shard_suffix(std::size_t shards, std::optional<std::size_t> shard_index) {
  if (shards <= 1 || !shard_index) return "";
  return ".shard-" + std::to_string(*shard_index) + "-of-" + std::to_string(shards);
}

HalfLists run_preprocessing(const RunConfig& cfg) {
  cfg.validate();
  const auto sched = preprocessing_schedule(cfg.n, cfg.dft_pre, cfg.epsilon);
  const bool persist = !cfg.out_dir.empty();
  HalfLists lists;
  for (Parity parity : {Parity::even, Parity::odd}) {
    const std::string name = parity == Parity::even ? "L_even" : "L_odd";
    const fs::path path = cfg.out_dir / (name + ".txt");
    const std::string header = list_header(cfg, name);
    auto& target = parity == Parity::even ? lists.even : lists.odd;
    if (persist && cfg.resume) {
      if (auto lines = read_list(path, header)) {
        target = parse_halves(*lines, parity);
        continue;
      }
    }
    target = enumerate_half_candidates(cfg.n, parity, sched, cfg.workers);
    if (persist) write_list(path, header, target, [](const MaskedSequence& m) { return m.to_string(); });
  }
  return lists;
}

std::pair<std::size_t, std::size_t> shard_range(std::size_t count, std::size_t shards, std::size_t k) {
  if (shards == 0 || k < 1 || k > shards) throw std::invalid_argument("invalid shard");
  return {count * (k - 1) / shards, count * k / shards};
}

std::vector<QuatSequence> run_stage1(const RunConfig& cfg, const HalfLists& lists) {
  cfg.validate();
  // For n = 1 there are no odd slots: join against the all-zero odd half.
  const std::vector<MaskedSequence> zero_odd{MaskedSequence(cfg.n, Parity::odd)};
  const auto& odds = cfg.n == 1 ? zero_odd : lists.odd;

  std::size_t begin = 0;
  std::size_t end = odds.size();
  if (cfg.shard_index) std::tie(begin, end) = shard_range(odds.size(), cfg.shards, *cfg.shard_index);

  const SquaresTable table(cfg.n);
  const Stage1Grid grid(stage1_schedule(cfg.dft_stage1, cfg.epsilon));
  const JoinFilter filter(lists.even, table, grid);

  std::vector<std::vector<QuatSequence>> found(end - begin);
  parallel_for(end - begin, cfg.workers, [&](std::size_t i) {
    const auto& odd = odds[begin + i];
    filter.scan(odd, [&](std::size_t e) { found[i].push_back(join_halves(odd, lists.even[e])); });
  });
  std::vector<QuatSequence> out;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
  return out;
}

std::vector<GolayPair> run_stage2(const RunConfig& cfg, const std::vector<QuatSequence>& l_a) {
  std::vector<std::vector<GolayPair>> found(l_a.size());
  parallel_for(l_a.size(), cfg.workers, [&](std::size_t i) {
    for (auto& b : find_partners(l_a[i])) found[i].push_back({l_a[i], std::move(b)});
  });
  std::vector<GolayPair> out;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

EnumerationResult enumerate_shard(const RunConfig& cfg, const HalfLists& lists, const StageTime& pre) {
  const bool persist = !cfg.out_dir.empty();
  const std::string suffix = shard_suffix(cfg.shards, cfg.shard_index);
  EnumerationResult res;
  res.report.n = cfg.n;
  res.report.l_even = lists.even.size();
  res.report.l_odd = lists.odd.size();
  res.report.preprocessing = pre;

  std::vector<QuatSequence> l_a;
  const fs::path la_path = cfg.out_dir / ("L_A" + suffix + ".txt");
  const std::string la_header = list_header(cfg, "L_A");
  bool reused = false;
  if (persist && cfg.resume) {
    if (auto lines = read_list(la_path, la_header)) {
      for (const auto& l : *lines) l_a.push_back(QuatSequence::parse(l));
      reused = true;
    }
  }
  if (!reused) {
    StageClock clock;
    l_a = run_stage1(cfg, lists);
    res.report.stage1 = clock.elapsed();
    if (persist) write_list(la_path, la_header, l_a, [](const QuatSequence& s) { return s.to_string(); });
  }
  res.report.l_a = l_a.size();

  StageClock clock;
  res.pairs = run_stage2(cfg, l_a);
  res.report.stage2 = clock.elapsed();
  res.report.pairs_normalized = res.pairs.size();

  if (persist) {
    write_pairs(cfg.out_dir / ("pairs" + suffix + ".txt"), res.pairs);
    write_file_atomic(cfg.out_dir / ("report" + suffix + ".txt"), res.report.to_text());
  }
  return res;
}

}  // namespace

EnumerationResult enumerate(const RunConfig& cfg) {
  cfg.validate();
  if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir);

  StageClock clock;
  const HalfLists lists = run_preprocessing(cfg);
  const StageTime pre = clock.elapsed();

  if (cfg.shard_index || cfg.shards == 1) return enumerate_shard(cfg, lists, pre);

  EnumerationResult total;
  total.report.n = cfg.n;
  total.report.l_even = lists.even.size();
  total.report.l_odd = lists.odd.size();
  total.report.preprocessing = pre;
  for (std::size_t k = 1; k <= cfg.shards; ++k) {
    RunConfig shard_cfg = cfg;
    shard_cfg.shard_index = k;
    auto part = enumerate_shard(shard_cfg, lists, {});
    total.report.l_a += part.report.l_a;
    total.report.stage1.cpu_seconds += part.report.stage1.cpu_seconds;
    total.report.stage1.wall_seconds += part.report.stage1.wall_seconds;
    total.report.stage2.cpu_seconds += part.report.stage2.cpu_seconds;
    total.report.stage2.wall_seconds += part.report.stage2.wall_seconds;
    std::move(part.pairs.begin(), part.pairs.end(), std::back_inserter(total.pairs));
  }
  std::sort(total.pairs.begin(), total.pairs.end());
  total.report.pairs_normalized = total.pairs.size();
  if (!cfg.out_dir.empty()) {
    write_pairs(cfg.out_dir / "pairs.txt", total.pairs);
    write_file_atomic(cfg.out_dir / "report.txt", total.report.to_text());
  }
  return total;
}

std::vector<GolayPair> read_pair_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("pairs") && name.ends_with(".txt")) files.push_back(entry.path());
  }
  if (files.empty()) throw std::runtime_error("no pairs*.txt files in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<GolayPair> pairs;
  for (const auto& f : files) {
    auto part = read_pairs(f);
    std::move(part.begin(), part.end(), std::back_inserter(pairs));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace cgolay
