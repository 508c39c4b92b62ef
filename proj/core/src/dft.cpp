#include "dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace ggf::detail {

namespace {

// FFTW's planner is not thread-safe; plan execution on caller-owned arrays is.
// Plans are created once per (L, sign) with FFTW_UNALIGNED so they can be
// replayed on any buffer via the new-array interface.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int L, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(L, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<cplx> scratch_in(L), scratch_out(L);
    fftw_plan plan = fftw_plan_dft_1d(
        L, reinterpret_cast<fftw_complex*>(scratch_in.data()),
        reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

void run(int L, int sign, const cplx* in, cplx* out) {
  fftw_plan plan = PlanCache::instance().get(L, sign);
  // fftw_execute_dft does not modify the input array for 1d c2c transforms
  // when in != out, but the API takes non-const pointers.
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void dft_forward(int L, const cplx* in, cplx* out) { run(L, FFTW_FORWARD, in, out); }

void dft_backward(int L, const cplx* in, cplx* out) { run(L, FFTW_BACKWARD, in, out); }

std::vector<cplx> unit_roots(int L) {
  std::vector<cplx> roots(L);
  for (int j = 0; j < L; ++j) {
    roots[j] = std::polar(1.0, 2.0 * M_PI * j / L);
  }
  return roots;
}

}  // namespace ggf::detail
