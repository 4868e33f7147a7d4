#include "uncertlab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace uncertlab::detail {

namespace {

// Plan creation is not thread safe in FFTW; executing a cached plan on
// new arrays is. Plans are created FFTW_UNALIGNED so caller buffers need
// no special alignment, and FFTW_ESTIMATE keeps planning deterministic.
class PlanCache {
 public:
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    fftw_complex* scratch = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch,
                                      sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void fft_inplace(std::span<Complex> data, bool inverse) {
  if (data.empty()) return;
  fftw_plan plan = cache().get(data.size(), inverse ? FFTW_BACKWARD : FFTW_FORWARD);
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, raw, raw);
}

}  // namespace uncertlab::detail
