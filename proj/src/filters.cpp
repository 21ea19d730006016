#include "cgolay/filters.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cgolay/dft.hpp"
#include "cgolay/parallel.hpp"

namespace cgolay {

namespace {

std::vector<std::complex<double>> coefficients(const QuatSequence& seq) {
  std::vector<std::complex<double>> c;
  c.reserve(seq.size());
  for (Quat q : seq) c.push_back(q.value());
  return c;
}

std::vector<std::complex<double>> coefficients(const MaskedSequence& seq) {
  std::vector<std::complex<double>> c(seq.size(), {0, 0});
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (auto q = seq.at(k)) c[k] = q->value();
  }
  return c;
}

SpectrumProfile profile_of(const std::vector<std::complex<double>>& coeffs, std::size_t samples) {
  if (samples < coeffs.size()) {
    throw std::invalid_argument("spectrum needs N >= n (N=" + std::to_string(samples) +
                                ", n=" + std::to_string(coeffs.size()) + ")");
  }
  const auto dft = polynomial_dft(coeffs, samples);
  SpectrumProfile p{samples, std::vector<double>(samples)};
  for (std::size_t j = 0; j < samples; ++j) p.values[j] = std::norm(dft[j]);
  return p;
}

bool passes(const std::vector<std::complex<double>>& coeffs, std::size_t n, const FilterSchedule& sched) {
  const double bound = 2.0 * static_cast<double>(n) + sched.epsilon();
  for (const auto& stage : sched.stages()) {
    const auto p = profile_of(coeffs, stage.samples);
    const std::size_t first = stage.which == SampleSet::odd_only ? 1 : 0;
    const std::size_t step = stage.which == SampleSet::odd_only ? 2 : 1;
    for (std::size_t j = first; j < p.samples; j += step) {
      if (p.values[j] > bound) return false;
    }
  }
  return true;
}

template <typename Get>
std::array<GaussianInt, 4> scaled_sums_impl(std::size_t n, Get get) {
  std::array<GaussianInt, 4> sums{};
  for (std::size_t m = 0; m < n; ++m) {
    const auto q = get(m);
    if (!q) continue;
    for (int k = 0; k < 4; ++k) {
      sums[k] += GaussianInt::of(*q * Quat(k * static_cast<int>(m % 4)));
    }
  }
  return sums;
}

long isqrt(long v) {
  if (v < 0) return -1;
  long r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

SpectrumProfile spectrum(const QuatSequence& seq, std::size_t samples) {
  return profile_of(coefficients(seq), samples);
}

SpectrumProfile spectrum(const MaskedSequence& seq, std::size_t samples) {
  return profile_of(coefficients(seq), samples);
}

FilterSchedule::FilterSchedule(std::vector<FilterStage> stages, double epsilon)
    : stages_(std::move(stages)), epsilon_(epsilon) {
  if (!(epsilon_ > 0)) throw std::invalid_argument("filter epsilon must be positive");
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    if (stages_[i].samples == 0) throw std::invalid_argument("filter stage with zero samples");
    if (i > 0 && stages_[i].samples <= stages_[i - 1].samples) {
      throw std::invalid_argument("filter sample counts must be strictly increasing");
    }
  }
}

FilterSchedule preprocessing_schedule(std::size_t n, std::size_t samples, double epsilon) {
  std::vector<FilterStage> stages;
  if (n < samples) stages.push_back({n, SampleSet::all});
  stages.push_back({std::max(samples, n), SampleSet::all});
  return FilterSchedule(std::move(stages), epsilon);
}

FilterSchedule stage1_schedule(std::size_t max_samples, double epsilon) {
  if (max_samples < 8 || !std::has_single_bit(max_samples)) {
    throw std::invalid_argument("stage-1 sample count must be a power of two >= 8");
  }
  std::vector<FilterStage> stages;
  for (std::size_t m = 8; m <= max_samples; m *= 2) stages.push_back({m, SampleSet::odd_only});
  return FilterSchedule(std::move(stages), epsilon);
}

bool passes_hall_filter(const QuatSequence& seq, std::size_t n, const FilterSchedule& sched) {
  return passes(coefficients(seq), n, sched);
}

bool passes_hall_filter(const MaskedSequence& seq, std::size_t n, const FilterSchedule& sched) {
  return passes(coefficients(seq), n, sched);
}

SquaresTable::SquaresTable(std::size_t n) : n_(n), solvable_((n + 1) * (n + 1), false) {
  if (n == 0) throw std::invalid_argument("squares table needs n >= 1");
  const long target = 2 * static_cast<long>(n);
  for (long r = 0; r <= static_cast<long>(n); ++r) {
    for (long i = 0; i <= static_cast<long>(n); ++i) {
      const long rest = target - r * r - i * i;
      if (rest < 0) continue;
      const long xmax = isqrt(rest);
      for (long x = 0; x <= xmax; ++x) {
        const long y2 = rest - x * x;
        const long y = isqrt(y2);
        if (y * y == y2) {
          solvable_[static_cast<std::size_t>(r) * (n + 1) + static_cast<std::size_t>(i)] = true;
          break;
        }
      }
    }
  }
}

bool SquaresTable::solvable(long re, long im) const {
  const auto r = static_cast<std::size_t>(std::labs(re));
  const auto i = static_cast<std::size_t>(std::labs(im));
  if (r > n_ || i > n_) return false;
  return solvable_[r * (n_ + 1) + i];
}

std::array<GaussianInt, 4> scaled_sums(const QuatSequence& seq) {
  return scaled_sums_impl(seq.size(), [&](std::size_t m) { return std::optional<Quat>(seq[m]); });
}

std::array<GaussianInt, 4> scaled_sums(const MaskedSequence& seq) {
  return scaled_sums_impl(seq.size(), [&](std::size_t m) { return seq.at(m); });
}

bool sos_filter(const QuatSequence& seq, const SquaresTable& table) {
  for (const auto& s : scaled_sums(seq)) {
    if (!table.solvable(s.re, s.im)) return false;
  }
  return true;
}

std::vector<MaskedSequence> enumerate_half_candidates(std::size_t n, Parity parity,
                                                      const FilterSchedule& sched, std::size_t workers) {
  if (n == 0) throw std::invalid_argument("half candidates need n >= 1");
  std::vector<std::size_t> active;
  for (std::size_t k = (parity == Parity::even ? 0 : 1); k < n; k += 2) active.push_back(k);
  if (active.empty()) return {};

  // Digit d (most significant first) ranges over radix[d] exponents.
  std::vector<int> radix(active.size(), 4);
  radix[0] = 1;
  if (parity == Parity::even && active.size() >= 2) radix[1] = 3;
  std::size_t total = 1;
  for (int r : radix) total *= static_cast<std::size_t>(r);

  auto build = [&](std::size_t index) {
    MaskedSequence m(n, parity);
    for (std::size_t d = active.size(); d-- > 0;) {
      const auto r = static_cast<std::size_t>(radix[d]);
      m.set(active[d], Quat(static_cast<int>(index % r)));
      index /= r;
    }
    return m;
  };

  std::vector<char> keep(total, 0);
  parallel_for(total, workers, [&](std::size_t idx) { keep[idx] = passes_hall_filter(build(idx), n, sched); });

  std::vector<MaskedSequence> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (keep[idx]) out.push_back(build(idx));
  }
  return out;
}

QuatSequence join_halves(const MaskedSequence& odd, const MaskedSequence& even) {
  if (odd.size() != even.size()) throw std::invalid_argument("joined halves differ in length");
  if (odd.parity() != Parity::odd || even.parity() != Parity::even) {
    throw std::invalid_argument("join needs one odd and one even half");
  }
  std::vector<Quat> out;
  out.reserve(odd.size());
  for (std::size_t k = 0; k < odd.size(); ++k) {
    const auto x = odd.at(k);
    const auto y = even.at(k);
    if (x.has_value() == y.has_value()) {
      throw std::invalid_argument("halves overlap or leave a gap at index " + std::to_string(k));
    }
    out.push_back(x ? *x : *y);
  }
  return QuatSequence(std::move(out));
}

Stage1Grid::Stage1Grid(const FilterSchedule& sched) : finest_(0), epsilon_(sched.epsilon()) {
  if (sched.stages().empty()) throw std::invalid_argument("stage-1 schedule has no stages");
  for (const auto& st : sched.stages()) {
    if (st.which != SampleSet::odd_only || !std::has_single_bit(st.samples)) {
      throw std::invalid_argument("stage-1 stages must be odd-j grids with power-of-two sizes");
    }
  }
  finest_ = sched.stages().back().samples;
  for (const auto& st : sched.stages()) {
    stage_offsets_.push_back(fine_index_.size());
    const std::size_t stride = finest_ / st.samples;
    for (std::size_t j = 1; j < st.samples; j += 2) fine_index_.push_back(j * stride);
  }
  stage_offsets_.push_back(fine_index_.size());
}

HalfSpectrum half_spectrum(const MaskedSequence& half, const Stage1Grid& grid) {
  const auto coeffs = coefficients(half);
  const auto dft = polynomial_dft(coeffs, std::max(grid.finest(), coeffs.size()));
  HalfSpectrum hs;
  hs.values.reserve(grid.point_count());
  if (dft.size() == grid.finest()) {
    for (std::size_t idx : grid.fine_indices()) hs.values.push_back(dft[idx]);
  } else {
    // Sequence longer than the grid: evaluate directly.
    for (std::size_t idx : grid.fine_indices()) {
      const double angle = 2.0 * 3.14159265358979323846 * static_cast<double>(idx) /
                           static_cast<double>(grid.finest());
      hs.values.push_back(hall_eval(half, std::polar(1.0, angle)));
    }
  }
  hs.sums = scaled_sums(half);
  return hs;
}

bool stage1_filter(const QuatSequence& a, const SquaresTable& table, const Stage1Grid& grid,
                   const HalfSpectrum& even, const HalfSpectrum& odd) {
  if (!sos_filter(a, table)) return false;
  const double bound = 2.0 * static_cast<double>(a.size()) + grid.epsilon();
  for (std::size_t p = 0; p < grid.point_count(); ++p) {
    if (std::norm(even.values[p] + odd.values[p]) > bound) return false;
  }
  return true;
}

JoinFilter::JoinFilter(const std::vector<MaskedSequence>& evens, const SquaresTable& table,
                       const Stage1Grid& grid)
    : table_(table),
      grid_(grid),
      even_count_(evens.size()),
      threshold_(2.0 * static_cast<double>(table.n()) + grid.epsilon()) {
  const auto& offsets = grid_.stage_offsets();
  for (std::size_t s = 0; s + 1 < offsets.size(); ++s) {
    widths_.push_back(offsets[s + 1] - offsets[s]);
    stages_.emplace_back(evens.size() * widths_.back());
  }
  sums_.resize(evens.size());
  for (std::size_t e = 0; e < evens.size(); ++e) {
    const auto hs = half_spectrum(evens[e], grid_);
    for (std::size_t s = 0; s < widths_.size(); ++s) {
      for (std::size_t p = 0; p < widths_[s]; ++p) {
        stages_[s][e * widths_[s] + p] = std::complex<float>(hs.values[offsets[s] + p]);
      }
    }
    for (int k = 0; k < 4; ++k) {
      sums_[e][2 * k] = static_cast<std::int16_t>(hs.sums[k].re);
      sums_[e][2 * k + 1] = static_cast<std::int16_t>(hs.sums[k].im);
    }
  }
}

void JoinFilter::scan(const MaskedSequence& odd, const std::function<void(std::size_t)>& emit) const {
  const auto hs = half_spectrum(odd, grid_);
  const auto& offsets = grid_.stage_offsets();
  std::vector<std::complex<float>> odd_values(hs.values.begin(), hs.values.end());
  const auto bound = static_cast<float>(threshold_);

  for (std::size_t e = 0; e < even_count_; ++e) {
    const auto& es = sums_[e];
    bool ok = true;
    for (int k = 0; k < 4 && ok; ++k) {
      ok = table_.solvable(es[2 * k] + hs.sums[k].re, es[2 * k + 1] + hs.sums[k].im);
    }
    for (std::size_t s = 0; ok && s < widths_.size(); ++s) {
      const std::complex<float>* ev = stages_[s].data() + e * widths_[s];
      const std::complex<float>* ov = odd_values.data() + offsets[s];
      for (std::size_t p = 0; p < widths_[s]; ++p) {
        const float re = ev[p].real() + ov[p].real();
        const float im = ev[p].imag() + ov[p].imag();
        if (re * re + im * im > bound) {
          ok = false;
          break;
        }
      }
    }
    if (ok) emit(e);
  }
}

}  // namespace cgolay
