#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cgolay/oracle.hpp"
#include "cgolay/pipeline.hpp"
#include "cgolay/postprocess.hpp"
#include "cgolay/textio.hpp"

using namespace cgolay;

namespace {

QuatSequence seq(const char* s) { return QuatSequence::parse(s); }

std::vector<GolayPair> pipeline_pairs(std::size_t n) {
  RunConfig cfg;
  cfg.n = n;
  return enumerate(cfg).pairs;
}

}  // namespace

TEST_CASE("closure sizes") {
  const auto c1 = equivalence_closure({seq("+"), seq("+")});
  CHECK(c1.size() == 16);
  CHECK(std::is_sorted(c1.begin(), c1.end()));

  const auto five = oracle::normalized_pairs(5);
  REQUIRE_FALSE(five.empty());
  const auto c5 = equivalence_closure(five.front());
  CHECK(c5.size() == 512);
  for (const auto& p : c5) CHECK(is_golay_pair(p));
  CHECK(std::binary_search(c5.begin(), c5.end(), five.front()));
  // Closure of any member is the same orbit.
  CHECK(equivalence_closure(c5[137]) == c5);
  for (const auto& p : c5) {
    for (auto op : kAllEquivalences) CHECK(std::binary_search(c5.begin(), c5.end(), apply_equivalence(op, p)));
  }
}

TEST_CASE("omega sets match the known counts") {
  CHECK(build_omegas(pipeline_pairs(8)).counts(8) == CountsRow{8, 768, 6656, 17});
  CHECK(build_omegas(pipeline_pairs(10)).counts(10) == CountsRow{10, 1536, 12288, 20});
  CHECK(build_omegas(pipeline_pairs(13)).counts(13) == CountsRow{13, 64, 512, 1});
  CHECK(build_omegas(oracle::normalized_pairs(6)).counts(6) == CountsRow{6, 256, 2048, 3});
  CHECK(build_omegas({}).counts(7) == CountsRow{7, 0, 0, 0});
}

TEST_CASE("omega sets partition the pairs") {
  const auto om = build_omegas(pipeline_pairs(8));
  REQUIRE(om.class_sizes.size() == om.inequiv.size());
  std::size_t total = 0;
  std::set<std::string> seen;
  for (std::size_t c = 0; c < om.inequiv.size(); ++c) {
    const auto orbit = equivalence_closure(om.inequiv[c]);
    CHECK(orbit.size() == om.class_sizes[c]);
    CHECK(orbit.front() == om.inequiv[c]);
    total += orbit.size();
    for (const auto& p : orbit) CHECK(seen.insert(p.to_line()).second);
  }
  CHECK(total == om.all.size());

  std::set<std::string> seqs;
  for (const auto& p : om.all) {
    seqs.insert(p.a.to_string());
    seqs.insert(p.b.to_string());
  }
  CHECK(seqs.size() == om.seqs.size());
  CHECK(std::is_sorted(om.seqs.begin(), om.seqs.end()));
}

TEST_CASE("omega sets do not depend on input order or seeds") {
  const auto base = build_omegas(pipeline_pairs(10));
  std::mt19937 rng(4);
  // Reseed from arbitrary class members in shuffled order.
  std::vector<GolayPair> seeds;
  for (const auto& rep : base.inequiv) {
    const auto orbit = equivalence_closure(rep);
    std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
    seeds.push_back(orbit[pick(rng)]);
    seeds.push_back(orbit[pick(rng)]);
  }
  std::shuffle(seeds.begin(), seeds.end(), rng);
  const auto again = build_omegas(seeds);
  CHECK(again.all == base.all);
  CHECK(again.inequiv == base.inequiv);
  CHECK(again.seqs == base.seqs);
}

TEST_CASE("invalid input pairs are rejected by name") {
  try {
    build_omegas({{seq("++"), seq("++")}});
    FAIL("expected an exception");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("++") != std::string::npos);
  }
}

TEST_CASE("crossover check") {
  CHECK_FALSE(crossover_check({seq("+++-++-+"), seq("+ii-+jj-")}));
  CHECK(is_golay_pair(seq("+++-++-+"), seq("+ii-+jj-")));
  CHECK(crossover_check({seq("++-"), seq("+i+")}));
  for (std::size_t n = 3; n <= 7; ++n) {
    for (const auto& p : oracle::normalized_pairs(n)) CHECK(crossover_check(p));
  }
}

TEST_CASE("pair files and counts round-trip") {
  const auto pairs = oracle::normalized_pairs(4);
  auto shuffled = pairs;
  std::reverse(shuffled.begin(), shuffled.end());
  shuffled.push_back(pairs.front());
  const auto text = format_pairs(shuffled);
  CHECK(parse_pairs(text) == pairs);
  CHECK(text.ends_with('\n'));
  CHECK_THROWS(parse_pairs("3\t++-\n"));

  const std::vector<CountsRow> rows{{8, 768, 6656, 17}, {10, 1536, 12288, 20}};
  const auto csv = format_counts(rows);
  CHECK(csv == "n,seqs,all,inequiv\n8,768,6656,17\n10,1536,12288,20\n");
  CHECK(parse_counts(csv) == rows);
  CHECK_THROWS(parse_counts("n,x\n"));
}
