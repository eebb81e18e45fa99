#ifndef PWKT_TESTS_TEST_UTIL_HPP
#define PWKT_TESTS_TEST_UTIL_HPP

#include <random>

#include "pwkt/exactlin.hpp"

namespace pwkt::testutil {

inline std::mt19937 test_rng(unsigned seed = 20260816u) { return std::mt19937(seed); }

inline Rational random_rational(std::mt19937& rng, int num_max = 5, int den_max = 4) {
    std::uniform_int_distribution<int> num(-num_max, num_max);
    std::uniform_int_distribution<int> den(1, den_max);
    return rat(num(rng), den(rng));
}

inline MatrixQ random_matrix(std::mt19937& rng, int rows, int cols) {
    MatrixQ m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
    return m;
}

inline Poly4 random_poly(std::mt19937& rng, int max_deg = 3, int nterms = 6) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly4 p;
    for (int t = 0; t < nterms; ++t) {
        Poly4 mono = Poly4::constant(random_rational(rng));
        for (int i = 1; i <= 4; ++i) mono = mono * Poly4::var(i, deg(rng));
        p += mono;
    }
    return p;
}

}  // namespace pwkt::testutil

#endif
