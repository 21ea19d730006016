#include "cgolay/dft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cgolay {

namespace {

// The FFTW planner is not thread-safe; only fftw_execute* is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Plan {
 public:
  explicit Plan(std::size_t n) : n_(n) {
    in_ = fftw_alloc_complex(n);
    out_ = fftw_alloc_complex(n);
    if (!in_ || !out_) throw std::bad_alloc();
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
    if (!plan_) throw std::runtime_error("FFTW could not plan a transform of size " + std::to_string(n));
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(in_);
    fftw_free(out_);
  }

  std::vector<std::complex<double>> run(std::span<const std::complex<double>> coeffs) {
    auto* in = reinterpret_cast<std::complex<double>*>(in_);
    std::fill(in, in + n_, std::complex<double>{0, 0});
    std::copy(coeffs.begin(), coeffs.end(), in);
    fftw_execute(plan_);
    const auto* out = reinterpret_cast<const std::complex<double>*>(out_);
    return {out, out + n_};
  }

 private:
  std::size_t n_;
  fftw_complex* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

}  // namespace

std::vector<std::complex<double>> polynomial_dft(std::span<const std::complex<double>> coeffs,
                                                 std::size_t samples) {
  if (samples == 0 || samples < coeffs.size()) {
    throw std::invalid_argument("DFT size " + std::to_string(samples) + " smaller than input length " +
                                std::to_string(coeffs.size()));
  }
  thread_local std::map<std::size_t, std::unique_ptr<Plan>> plans;
  auto& plan = plans[samples];
  if (!plan) plan = std::make_unique<Plan>(samples);
  return plan->run(coeffs);
}

}  // namespace cgolay
