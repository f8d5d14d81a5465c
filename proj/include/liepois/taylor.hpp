#pragma once

#include <stdexcept>
#include <vector>

#include "liepois/rational.hpp"

namespace liepois {

// Bernoulli numbers B_0 = 1, B_1 = -1/2, B_2 = 1/6, ... (B_1 = -1/2 convention),
// via the defining recurrence sum_{j<=m} C(m+1,j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(int upto) {
    std::vector<Rational> b(upto + 1, Rational(0));
    std::vector<std::vector<Rational>> binom(upto + 2,
                                             std::vector<Rational>(upto + 2, Rational(0)));
    for (int n = 0; n <= upto + 1; ++n) {
        binom[n][0] = Rational(1);
        for (int k = 1; k <= n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : Rational(0));
    }
    b[0] = Rational(1);
    for (int m = 1; m <= upto; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) acc += binom[m + 1][j] * b[j];
        b[m] = -acc / binom[m + 1][m];
    }
    return b;
}

inline Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

// Taylor coefficients c_0..c_N of the named analytic kernels, exact rationals.
// All are regular at 0 (poles are cancelled in closed form before expansion).

// phi(z) = -1/z + (1/2)coth(z/2) = sum_{n>=1} B_{2n} z^{2n-1} / (2n)!
inline std::vector<Rational> phi_coefficients(int N) {
    if (N < 0) throw std::invalid_argument("phi_coefficients: negative degree");
    std::vector<Rational> c(N + 1, Rational(0));
    auto b = bernoulli_numbers(N + 1);
    for (int n = 1; 2 * n - 1 <= N; ++n) c[2 * n - 1] = b[2 * n] / factorial(2 * n);
    return c;
}

// f(z) = z e^z / sinh z = 1 + z + sum_{n>=1} B_{2n} (2z)^{2n} / (2n)!
inline std::vector<Rational> dexp_pairing_coefficients(int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = Rational(1);
    if (N >= 1) c[1] = Rational(1);
    auto b = bernoulli_numbers(N + 1);
    for (int n = 1; 2 * n <= N; ++n)
        c[2 * n] = b[2 * n] * Rational(2).pow(2 * n) / factorial(2 * n);
    return c;
}

// psi_nu(z) = -nu coth(nu z) + (1/2)coth(z/2)
//           = sum_{n>=1} B_{2n} (1 - (2 nu)^{2n}) z^{2n-1} / (2n)!
// The 1/z poles of the two coth terms cancel; nu = 0 degenerates to phi.
inline std::vector<Rational> psi_nu_coefficients(const Rational& nu, int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    auto b = bernoulli_numbers(N + 1);
    Rational two_nu = Rational(2) * nu;
    for (int n = 1; 2 * n - 1 <= N; ++n)
        c[2 * n - 1] = b[2 * n] * (Rational(1) - two_nu.pow(2 * n)) / factorial(2 * n);
    return c;
}

// w(z) = (z/2) coth(z/2) = 1 + sum_{n>=1} B_{2n} z^{2n} / (2n)!
inline std::vector<Rational> half_coth_half_coefficients(int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = Rational(1);
    auto b = bernoulli_numbers(N + 1);
    for (int n = 1; 2 * n <= N; ++n) c[2 * n] = b[2 * n] / factorial(2 * n);
    return c;
}

// dexp kernels: (1 - e^{-z})/z and (e^z - 1)/z
inline std::vector<Rational> dexp_left_coefficients(int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (int n = 0; n <= N; ++n) {
        c[n] = Rational(1) / factorial(n + 1);
        if (n % 2 == 1) c[n] = -c[n];
    }
    return c;
}
inline std::vector<Rational> dexp_right_coefficients(int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (int n = 0; n <= N; ++n) c[n] = Rational(1) / factorial(n + 1);
    return c;
}

// inverse of the left dexp kernel: z/(1 - e^{-z}) = 1 + z/2 + sum B_{2n} z^{2n}/(2n)!
inline std::vector<Rational> dexp_left_inverse_coefficients(int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = Rational(1);
    if (N >= 1) c[1] = Rational(1, 2);
    auto b = bernoulli_numbers(N + 1);
    for (int n = 1; 2 * n <= N; ++n) c[2 * n] = b[2 * n] / factorial(2 * n);
    return c;
}

// exp and log (about 1) coefficient lists, for operator series
inline std::vector<Rational> exp_coefficients(int N, bool negate_argument = false) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (int n = 0; n <= N; ++n) {
        c[n] = Rational(1) / factorial(n);
        if (negate_argument && n % 2 == 1) c[n] = -c[n];
    }
    return c;
}

// pointwise product of two truncated coefficient lists
inline std::vector<Rational> convolve_coefficients(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b, int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (int i = 0; i <= N && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j <= N && j < static_cast<int>(b.size()); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace liepois
