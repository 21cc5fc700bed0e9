#pragma once

#include <cmath>
#include <cstdint>

namespace arlat {

// Counter-based splittable generator: every consumer derives an independent
// stream from (seed, stream); identical results regardless of call order.
class SplitStream {
  public:
    SplitStream(uint64_t seed, uint64_t stream) : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform in (0, 1]
    double next_unit() {
        uint64_t u = next_u64() >> 11;  // 53 bits
        return (static_cast<double>(u) + 1.0) * 0x1p-53;
    }

    // standard normal via Box-Muller; deterministic two-at-a-time
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_unit();
        double u2 = next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    uint64_t state_;
    double spare_ = 0;
    bool have_spare_ = false;
};

}  // namespace arlat
