#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

#include "nradius/matrix.hpp"

namespace nradius {

// Counter-free splittable generator. Streams are derived from (master seed,
// label, index), so any matrix in an ensemble can be regenerated in isolation
// and results do not depend on sampling order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static std::uint64_t hash_label(std::string_view label) {
        std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
        for (unsigned char c : label) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    static RandomStream derive(std::uint64_t master_seed, std::string_view label,
                               std::uint64_t index) {
        std::uint64_t s = mix(master_seed ^ hash_label(label));
        s = mix(s ^ (index * 0x9E3779B97F4A7C15ull));
        return RandomStream(s);
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Box-Muller; second value of each pair is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        const double ang = 2.0 * std::numbers::pi * u2;
        spare_ = mag * std::sin(ang);
        has_spare_ = true;
        return mag * std::cos(ang);
    }

    // Standard complex gaussian: E|z|^2 = 1.
    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0);
    }

    CVector gaussian_vector(std::size_t dim) {
        CVector v(dim);
        for (auto& z : v) z = complex_gaussian();
        return v;
    }

    CVector unit_vector(std::size_t dim) { return normalized(gaussian_vector(dim)); }

private:
    std::uint64_t state_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace nradius
