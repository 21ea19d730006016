#include <doctest.h>

#include <filesystem>
#include <random>

#include "cgolay/oracle.hpp"
#include "cgolay/pipeline.hpp"
#include "cgolay/textio.hpp"

using namespace cgolay;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = fs::temp_directory_path() / ("cgolay-test-" + std::to_string(rng()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

RunConfig config(std::size_t n) {
  RunConfig cfg;
  cfg.n = n;
  cfg.workers = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  auto cfg = config(5);
  CHECK_NOTHROW(cfg.validate());
  cfg.n = 0;
  CHECK_THROWS(cfg.validate());
  cfg = config(5);
  cfg.shards = 3;
  cfg.shard_index = 4;
  CHECK_THROWS(cfg.validate());
  cfg.shard_index = 0;
  CHECK_THROWS(cfg.validate());
  cfg = config(5);
  cfg.dft_stage1 = 100;
  CHECK_THROWS(cfg.validate());
  cfg = config(5);
  cfg.epsilon = 0;
  CHECK_THROWS(cfg.validate());
  cfg = config(5);
  cfg.format = "json";
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("preprocessing list sizes") {
  const auto l1 = run_preprocessing(config(1));
  CHECK(l1.even.size() == 1);
  CHECK(l1.odd.empty());
  const auto l5 = run_preprocessing(config(5));
  CHECK(l5.even.size() == 12);
  CHECK(l5.odd.size() == 4);
  const auto l8 = run_preprocessing(config(8));
  CHECK(l8.even.size() == 48);
  CHECK(l8.odd.size() == 64);
}

TEST_CASE("stage 1 list sizes") {
  for (auto [n, expected] : {std::pair<std::size_t, std::size_t>{1, 1}, {3, 1}, {8, 36}}) {
    const auto cfg = config(n);
    CHECK(run_stage1(cfg, run_preprocessing(cfg)).size() == expected);
  }
}

TEST_CASE("shard ranges partition the list") {
  CHECK(shard_range(10, 3, 1) == std::pair<std::size_t, std::size_t>{0, 3});
  CHECK(shard_range(10, 3, 3) == std::pair<std::size_t, std::size_t>{6, 10});
  CHECK(shard_range(2, 4, 1) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK_THROWS(shard_range(10, 3, 0));
  CHECK_THROWS(shard_range(10, 3, 4));
  for (std::size_t count : {0, 1, 7, 64}) {
    for (std::size_t p = 1; p <= 9; ++p) {
      std::size_t next = 0;
      for (std::size_t k = 1; k <= p; ++k) {
        auto [b, e] = shard_range(count, p, k);
        CHECK(b == next);
        next = e;
      }
      CHECK(next == count);
    }
  }
}

TEST_CASE("stage 1 is shard-count invariant") {
  for (std::size_t n : {8, 10}) {
    auto cfg = config(n);
    const auto lists = run_preprocessing(cfg);
    auto whole = run_stage1(cfg, lists);
    std::sort(whole.begin(), whole.end());
    for (std::size_t p : {2, 3, 7}) {
      std::vector<QuatSequence> joined;
      for (std::size_t k = 1; k <= p; ++k) {
        auto shard = cfg;
        shard.shards = p;
        shard.shard_index = k;
        for (auto& a : run_stage1(shard, lists)) joined.push_back(std::move(a));
      }
      std::sort(joined.begin(), joined.end());
      CHECK(joined == whole);
    }
  }
}

TEST_CASE("stage 2 equals the oracle") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto res = enumerate(config(n));
    CHECK(res.pairs == oracle::normalized_pairs(n));
    CHECK(res.report.pairs_normalized == res.pairs.size());
    for (const auto& p : res.pairs) CHECK(is_golay_pair(p));
  }
}

TEST_CASE("every stage-2 pair has its first member in L_A") {
  const auto cfg = config(10);
  const auto l_a = run_stage1(cfg, run_preprocessing(cfg));
  for (const auto& p : run_stage2(cfg, l_a)) CHECK(std::find(l_a.begin(), l_a.end(), p.a) != l_a.end());
}

TEST_CASE("enumerate writes files deterministically") {
  TempDir one;
  TempDir two;
  auto cfg = config(8);
  cfg.out_dir = one.path;
  const auto res = enumerate(cfg);
  cfg.out_dir = two.path;
  cfg.workers = 1;
  enumerate(cfg);

  for (const char* f : {"L_even.txt", "L_odd.txt", "L_A.txt", "pairs.txt"}) {
    REQUIRE(fs::exists(one.path / f));
    CHECK(read_file(one.path / f) == read_file(two.path / f));
  }
  CHECK(read_pairs(one.path / "pairs.txt") == res.pairs);
  CHECK(read_pair_dir(one.path) == res.pairs);

  const auto report = read_lines(one.path / "report.txt");
  for (const char* key : {"n=8", "L_even=48", "L_odd=64", "L_A=36", "pairs_normalized=78"}) {
    CHECK(std::find(report.begin(), report.end(), key) != report.end());
  }
  for (const char* key : {"cpu_seconds_stage1=", "cpu_seconds_stage2="}) {
    CHECK(std::any_of(report.begin(), report.end(), [&](const std::string& l) { return l.starts_with(key); }));
  }

  // A second run reuses the persisted lists and reproduces the pair file.
  cfg.out_dir = one.path;
  const auto before = read_file(one.path / "pairs.txt");
  enumerate(cfg);
  CHECK(read_file(one.path / "pairs.txt") == before);
}

TEST_CASE("persisted lists from another configuration are ignored") {
  TempDir dir;
  auto cfg = config(6);
  cfg.out_dir = dir.path;
  enumerate(cfg);
  write_file_atomic(dir.path / "L_A.txt", "# stale\n");
  const auto res = enumerate(cfg);
  CHECK(res.report.l_a > 0);
  CHECK(read_lines(dir.path / "L_A.txt").front() != "# stale");
}

TEST_CASE("sharded runs write per-shard files and a merged result") {
  TempDir dir;
  auto cfg = config(10);
  cfg.out_dir = dir.path;
  cfg.shards = 4;
  const auto merged = enumerate(cfg);
  for (std::size_t k = 1; k <= 4; ++k) {
    CHECK(fs::exists(dir.path / ("pairs" + shard_suffix(4, k) + ".txt")));
  }
  CHECK(shard_suffix(4, 2) == ".shard-2-of-4");
  CHECK(shard_suffix(1, 1).empty());
  CHECK(read_pairs(dir.path / "pairs.txt") == merged.pairs);
  CHECK(merged.pairs == enumerate(config(10)).pairs);

  TempDir single;
  auto one = config(10);
  one.out_dir = single.path;
  one.shards = 4;
  one.shard_index = 3;
  const auto part = enumerate(one);
  CHECK(fs::exists(single.path / "pairs.shard-3-of-4.txt"));
  CHECK_FALSE(fs::exists(single.path / "pairs.txt"));
  CHECK(std::includes(merged.pairs.begin(), merged.pairs.end(), part.pairs.begin(), part.pairs.end()));
}

TEST_CASE("read_pair_dir needs pair files") {
  TempDir dir;
  CHECK_THROWS(read_pair_dir(dir.path));
  CHECK_THROWS(read_pair_dir(dir.path / "missing"));
}
