#include "dualtest/random.hpp"

#include <cmath>
#include <numbers>

namespace dualtest {

namespace {
constexpr double two_pow_minus_53 = 1.0 / 9007199254740992.0;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * two_pow_minus_53; }

double Rng::uniform_open_closed() { return static_cast<double>((engine_() >> 11) + 1) * two_pow_minus_53; }

std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t draw = engine_();
    while (draw >= limit) {
        draw = engine_();
    }
    return draw % bound;
}

double Rng::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform_open_closed();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

}  // namespace dualtest
