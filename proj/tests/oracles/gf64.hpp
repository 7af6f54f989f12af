// Minimal GF(2^6) built on the primitive polynomial x^6 + x + 1, for checking norms.
#pragma once

#include <array>
#include <stdexcept>

namespace oracle {

class GF64 {
   public:
    GF64() {
        int x = 1;
        for (int i = 0; i < 63; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x <<= 1;
            if (x & 64) x ^= 64 | 3;  // x^6 = x + 1
        }
        if (x != 1) throw std::logic_error("modulus is not primitive");
    }
    int mul(int a, int b) const { return (a && b) ? exp_[(log_[a] + log_[b]) % 63] : 0; }
    int inv(int a) const { return exp_[(63 - log_[a]) % 63]; }
    int power_of_generator(int e) const { return exp_[((e % 63) + 63) % 63]; }
    int log(int a) const { return log_[a]; }

   private:
    std::array<int, 63> exp_{};
    std::array<int, 64> log_{};
};

}  // namespace oracle
