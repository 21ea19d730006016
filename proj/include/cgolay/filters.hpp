#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cgolay/core.hpp"

namespace cgolay {

/// values[j] = |h(e^{2 pi i j / N})|^2 for j = 0..N-1.
struct SpectrumProfile {
  std::size_t samples = 0;
  std::vector<double> values;
};

SpectrumProfile spectrum(const QuatSequence& seq, std::size_t samples);
SpectrumProfile spectrum(const MaskedSequence& seq, std::size_t samples);

enum class SampleSet { all, odd_only };

struct FilterStage {
  std::size_t samples;
  SampleSet which;
};

/// Ordered list of sampling grids on the unit circle plus the rejection
/// tolerance: a sequence is rejected when |h(z)|^2 > 2n + epsilon.
class FilterSchedule {
 public:
  FilterSchedule(std::vector<FilterStage> stages, double epsilon);

  const std::vector<FilterStage>& stages() const { return stages_; }
  double epsilon() const { return epsilon_; }

 private:
  std::vector<FilterStage> stages_;
  double epsilon_;
};

inline constexpr std::size_t kDefaultPreprocessingSamples = std::size_t{1} << 14;
inline constexpr std::size_t kDefaultStage1Samples = std::size_t{1} << 7;
inline constexpr double kDefaultEpsilon = 1e-3;

/// N = n over all j, then N = `samples` over all j. The first pass is
/// dropped when n >= samples.
FilterSchedule preprocessing_schedule(std::size_t n, std::size_t samples = kDefaultPreprocessingSamples,
                                      double epsilon = kDefaultEpsilon);

/// N = 8, 16, ..., max_samples, odd j only at each N.
FilterSchedule stage1_schedule(std::size_t max_samples = kDefaultStage1Samples,
                               double epsilon = kDefaultEpsilon);

bool passes_hall_filter(const QuatSequence& seq, std::size_t n, const FilterSchedule& sched);
bool passes_hall_filter(const MaskedSequence& seq, std::size_t n, const FilterSchedule& sched);

/// Which (|R|, |I|) admit integers (x, y) with R^2 + I^2 + x^2 + y^2 = 2n.
class SquaresTable {
 public:
  explicit SquaresTable(std::size_t n);

  std::size_t n() const { return n_; }
  bool solvable(long re, long im) const;

 private:
  std::size_t n_;
  std::vector<bool> solvable_;  // (n+1) x (n+1), row = |R|
};

/// The four sums of i^k * A for k = 0..3, i.e. h_A evaluated at 1, i, -1, -i.
std::array<GaussianInt, 4> scaled_sums(const QuatSequence& seq);
std::array<GaussianInt, 4> scaled_sums(const MaskedSequence& seq);

bool sos_filter(const QuatSequence& seq, const SquaresTable& table);

/// Normalized halves of the given parity that survive `sched`, in
/// lexicographic exponent order. The first active slot is 1; for the even
/// half the second active slot is not -i.
std::vector<MaskedSequence> enumerate_half_candidates(std::size_t n, Parity parity,
                                                      const FilterSchedule& sched,
                                                      std::size_t workers = 1);

/// Slot-wise merge of complementary halves.
QuatSequence join_halves(const MaskedSequence& odd, const MaskedSequence& even);

/// Sample points of a progressive odd-j schedule, in checking order, as
/// indices into the finest grid.
class Stage1Grid {
 public:
  explicit Stage1Grid(const FilterSchedule& sched);

  std::size_t finest() const { return finest_; }
  double epsilon() const { return epsilon_; }
  std::size_t point_count() const { return fine_index_.size(); }
  const std::vector<std::size_t>& fine_indices() const { return fine_index_; }
  /// Start of each stage inside the progressive order; back() == point_count().
  const std::vector<std::size_t>& stage_offsets() const { return stage_offsets_; }

 private:
  std::size_t finest_;
  double epsilon_;
  std::vector<std::size_t> fine_index_;
  std::vector<std::size_t> stage_offsets_;
};

/// Complex Hall-polynomial values of one half at the stage-1 points, plus
/// its exact sums at z = i^k.
struct HalfSpectrum {
  std::vector<std::complex<double>> values;
  std::array<GaussianInt, 4> sums{};
};

HalfSpectrum half_spectrum(const MaskedSequence& half, const Stage1Grid& grid);

/// Squares filter on the four i^k sums, then the progressive |h_A(z)|^2
/// check using h_A = h_even + h_odd.
bool stage1_filter(const QuatSequence& a, const SquaresTable& table, const Stage1Grid& grid,
                   const HalfSpectrum& even, const HalfSpectrum& odd);

/// Batched stage-1 check of one odd half against every even half. Spectra
/// are held in single precision, laid out stage by stage so the first
/// (most rejecting) stage of all evens is contiguous.
class JoinFilter {
 public:
  JoinFilter(const std::vector<MaskedSequence>& evens, const SquaresTable& table, const Stage1Grid& grid);

  std::size_t even_count() const { return even_count_; }

  /// Calls emit(e) for each even index e whose join with `odd` passes.
  void scan(const MaskedSequence& odd, const std::function<void(std::size_t)>& emit) const;

 private:
  std::vector<std::vector<std::complex<float>>> stages_;  // [stage][even * width + p]
  std::vector<std::size_t> widths_;
  std::vector<std::array<std::int16_t, 8>> sums_;
  SquaresTable table_;
  Stage1Grid grid_;
  std::size_t even_count_;
  double threshold_;
};

}  // namespace cgolay
