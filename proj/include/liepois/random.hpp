#pragma once

#include <cstdint>

#include "liepois/linearizer.hpp"
#include "liepois/tensor_series.hpp"

namespace liepois {

// Seeded splitmix64. The standard <random> distributions are
// implementation-defined, and certificates must be byte-identical across
// platforms for a fixed seed, so the draws are done by hand.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    uint64_t next_below(uint64_t n) { return next_u64() % n; }

    // numerators in [-3,3], denominators in {1,2,3}
    Rational small_rational() {
        long long num = static_cast<long long>(next_below(7)) - 3;
        long long den = static_cast<long long>(next_below(3)) + 1;
        return Rational(num, den);
    }
    Rational small_nonzero_rational() {
        Rational r = small_rational();
        while (r.is_zero()) r = small_rational();
        return r;
    }

    // random k=0 series of pure polynomial degree d
    TensorSeries random_function(unsigned dim, int degree, int N) {
        TensorSeries out(dim, 0, N);
        for (const auto& m : Linearizer::monomials(dim, degree))
            out.add_term({}, m, small_rational());
        return out;
    }
    // random rank-1 series with all degrees 1..maxdeg
    TensorSeries random_field(unsigned dim, int maxdeg, int N) {
        TensorSeries out(dim, 1, N);
        for (int d = 1; d <= maxdeg; ++d)
            for (const auto& m : Linearizer::monomials(dim, d))
                for (unsigned a = 0; a < dim; ++a)
                    out.add_term({static_cast<uint8_t>(a)}, m, small_rational());
        return out;
    }

private:
    uint64_t state_;
};

}  // namespace liepois
