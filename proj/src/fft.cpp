#include "olct/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace olct {

namespace {

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft is.
// Plans are created once per (length, direction) with FFTW_UNALIGNED so they
// can run on any caller buffer.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(std::vector<std::complex<double>>& data, int sign) {
        const std::size_t n = data.size();
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(n, sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<std::complex<double>> scratch(n);
                auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
                plan = fftw_plan_dft_1d(static_cast<int>(n), ptr, ptr, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
        fftw_execute_dft(plan, ptr, ptr);
    }

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

} // namespace

void fft_forward(std::vector<std::complex<double>>& data) {
    if (data.size() < 2) return;
    PlanCache::instance().execute(data, FFTW_FORWARD);
}

void fft_inverse(std::vector<std::complex<double>>& data) {
    if (data.size() < 2) return;
    PlanCache::instance().execute(data, FFTW_BACKWARD);
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace olct
