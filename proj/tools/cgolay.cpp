// cgolay: enumerate complex Golay pairs of a given length.
//
//   cgolay enumerate --n 8 --out runs/8
//   cgolay postprocess --in runs/8 --out runs/8/post
//   cgolay counts --in runs/8
//   cgolay verify --pairs runs/8/pairs.txt
//   cgolay oracle --n 5

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "cgolay/core.hpp"
#include "cgolay/encoding.hpp"
#include "cgolay/oracle.hpp"
#include "cgolay/pipeline.hpp"
#include "cgolay/postprocess.hpp"
#include "cgolay/textio.hpp"

namespace fs = std::filesystem;
using namespace cgolay;

namespace {

// Length recorded in a run directory: report files first, then any pair line.
std::optional<std::size_t> length_of_run(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const auto name = f.filename().string();
    if (name.starts_with("report") && name.ends_with(".txt")) {
      for (const auto& line : read_lines(f)) {
        if (line.starts_with("n=")) return std::stoul(line.substr(2));
      }
    }
  }
  for (const auto& f : files) {
    const auto name = f.filename().string();
    if (name.starts_with("pairs") && name.ends_with(".txt")) {
      for (const auto& line : read_lines(f)) {
        if (!line.empty()) return GolayPair::parse_line(line).size();
      }
    }
  }
  return std::nullopt;
}

CountsRow counts_for_run(const fs::path& dir) {
  if (fs::exists(dir / "counts.csv")) {
    const auto rows = parse_counts(read_file(dir / "counts.csv"));
    if (rows.size() == 1) return rows.front();
  }
  const auto n = length_of_run(dir);
  if (!n) throw std::runtime_error("cannot tell the sequence length of " + dir.string());
  return build_omegas(read_pair_dir(dir)).counts(*n);
}

int cmd_postprocess(const fs::path& in, const fs::path& out) {
  const auto n = length_of_run(in);
  if (!n) throw std::runtime_error("cannot tell the sequence length of " + in.string());
  const auto omegas = build_omegas(read_pair_dir(in));
  write_pairs(out / "all.txt", omegas.all);
  write_pairs(out / "inequiv.txt", omegas.inequiv);
  std::string seqs;
  for (const auto& s : omegas.seqs) seqs += s.to_string() + '\n';
  write_file_atomic(out / "seqs.txt", seqs);
  std::string crossover;
  for (const auto& p : omegas.inequiv) {
    if (p.size() >= 3 && !crossover_check(p)) crossover += p.to_line() + '\n';
  }
  write_file_atomic(out / "crossover_violations.txt", crossover);
  const auto csv = format_counts({omegas.counts(*n)});
  write_file_atomic(out / "counts.csv", csv);
  std::cout << csv;
  return 0;
}

int cmd_verify(const fs::path& file) {
  std::size_t bad = 0;
  const auto pairs = read_pairs(file);
  for (const auto& p : pairs) {
    if (!is_golay_pair(p)) {
      std::cerr << "not a complex Golay pair: " << p.to_line() << '\n';
      ++bad;
    }
  }
  std::cout << pairs.size() - bad << '/' << pairs.size() << " pairs verified\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive enumeration of complex Golay pairs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::size_t shard_index = 0;
  std::string out_dir;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Run preprocessing, stage 1 and stage 2");
  enumerate_cmd->add_option("--n", cfg.n, "Sequence length")->required()->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--shards", cfg.shards, "Split the odd-half list into this many pieces")
      ->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--shard-index", shard_index, "Run only this 1-based shard");
  enumerate_cmd->add_option("--out", out_dir, "Output directory");
  enumerate_cmd->add_option("--dft-pre", cfg.dft_pre, "Preprocessing sample count");
  enumerate_cmd->add_option("--dft-stage1", cfg.dft_stage1, "Finest stage-1 sample count");
  enumerate_cmd->add_option("--epsilon", cfg.epsilon, "Spectral filter tolerance");
  enumerate_cmd->add_option("--workers", cfg.workers, "Worker threads");
  enumerate_cmd->add_flag("!--no-resume", cfg.resume, "Recompute lists even if persisted ones match");

  std::string in_dir;
  std::string post_out;
  auto* post_cmd = app.add_subcommand("postprocess", "Expand normalized pairs into all pairs and classes");
  post_cmd->add_option("--in", in_dir, "Run directory with pairs*.txt")->required();
  post_cmd->add_option("--out", post_out, "Output directory")->required();

  std::string pair_file;
  auto* verify_cmd = app.add_subcommand("verify", "Exact recheck of every pair in a pair file");
  verify_cmd->add_option("--pairs", pair_file, "Pair file")->required()->check(CLI::ExistingFile);

  std::size_t oracle_n = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force normalized pairs (n <= 8)");
  oracle_cmd->add_option("--n", oracle_n, "Sequence length")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> count_dirs;
  auto* counts_cmd = app.add_subcommand("counts", "Print n,seqs,all,inequiv for run directories");
  counts_cmd->add_option("--in", count_dirs, "Run or postprocess directory (repeatable)")->required();

  std::string dimacs_seq;
  auto* dimacs_cmd = app.add_subcommand("dimacs", "Print the static CNF of the stage-2 instance for A");
  dimacs_cmd->add_option("--a", dimacs_seq, "First sequence, e.g. ++-")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate_cmd) {
      if (shard_index != 0) cfg.shard_index = shard_index;
      cfg.out_dir = out_dir;
      const auto result = enumerate(cfg);
      std::cout << result.report.to_text();
      if (out_dir.empty()) std::cout << format_pairs(result.pairs);
      return 0;
    }
    if (*post_cmd) return cmd_postprocess(in_dir, post_out);
    if (*verify_cmd) return cmd_verify(pair_file);
    if (*oracle_cmd) {
      std::cout << format_pairs(oracle::normalized_pairs(oracle_n));
      return 0;
    }
    if (*counts_cmd) {
      std::vector<CountsRow> rows;
      for (const auto& d : count_dirs) rows.push_back(counts_for_run(d));
      std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.n < y.n; });
      std::cout << format_counts(rows);
      return 0;
    }
    if (*dimacs_cmd) {
      build_instance(QuatSequence::parse(dimacs_seq)).solver->write_dimacs(std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "cgolay: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
