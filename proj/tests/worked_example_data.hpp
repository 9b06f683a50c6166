#pragma once

// Matrices of the q = 1, r = mu = nu = 3 worked example, frozen as literals.
// "Z" marks an entry z, "mZ" -z, and "m3Z" -3z.

#include "hankelmonde/generators.hpp"

#include <initializer_list>

namespace hankelmonde {

/// Constant integer matrix from a row-major literal.
inline PolyMatrix ints_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    PolyMatrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) {
            m(i, j++) = Poly(v);
        }
        ++i;
    }
    return m;
}

namespace worked {

inline Poly entry(long code) {
    const Poly z = Poly::z();
    switch (code) {
    case 100: return z;
    case -100: return -z;
    case -300: return z * Rational(-3);
    case 600: return z * Rational(6);
    default: return Poly(code);
    }
}

inline PolyMatrix literal(std::initializer_list<std::initializer_list<long>> rows) {
    PolyMatrix m = ints_matrix(rows);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            m(i, j) = entry(m(i, j).coeff(0).get_num().get_si());
        }
    }
    return m;
}

constexpr long Z = 100, mZ = -100, m3Z = -300, Z6 = 600;

inline PolyMatrix kbar0() {
    return literal({{mZ, 0, 0, -1, mZ, 0, 0, 0},
                    {1, mZ, 0, 0, -1, 0, 0, 0},
                    {0, 1, 0, 0, 0, 0, 0, 0},
                    {0, 0, 1, 0, 0, 0, -1, mZ},
                    {0, 0, 0, 1, 0, 0, 0, -1},
                    {0, 0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 0, 1}});
}

inline PolyMatrix kbar1() {
    return literal({{mZ, 0, 0, -1, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0, 0},
                    {0, 1, 0, 0, 0, -1, mZ},
                    {0, 0, 1, 0, 0, 0, -1},
                    {0, 0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 0, 1}});
}

inline PolyMatrix kbar2() {
    return literal({{0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 0, -1, mZ},
                    {0, 1, 0, 0, 0, -1},
                    {0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 1, 0, 0},
                    {0, 0, 0, 0, 1, 0},
                    {0, 0, 0, 0, 0, 1}});
}

/// (D_3^{-1} x I_3) Kbar_0 Kbar_1 Kbar_2; the last three rows carry 1/2.
inline PolyMatrix scaled_product() {
    PolyMatrix m = literal({{0, -1, 0, 0, 0, 2},
                            {0, 0, -2, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0},
                            {1, 0, 0, 0, -3, m3Z},
                            {0, 1, 0, 0, 0, -3},
                            {0, 0, 1, 0, 0, 0},
                            {0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 1}});
    for (std::size_t i = 6; i < 9; ++i) {
        m(i, i - 3) = Poly(Rational(1, 2));
    }
    return m;
}

inline PolyMatrix reparam() {
    return literal({{1, 0, 0, 0, 5, Z6},
                    {0, 1, 0, 0, 0, 4},
                    {0, 0, 1, 0, 0, 0},
                    {0, 0, 0, 2, 0, 0},
                    {0, 0, 0, 0, 2, 0},
                    {0, 0, 0, 0, 0, 2}});
}

/// The z-free kernel basis.
inline PolyMatrix khat() {
    return ints_matrix({{0, -1, 0, 0, 0, 0},
                 {0, 0, -2, 0, 0, 0},
                 {0, 0, 0, 0, 0, 0},
                 {1, 0, 0, 0, -1, 0},
                 {0, 1, 0, 0, 0, -2},
                 {0, 0, 1, 0, 0, 0},
                 {0, 0, 0, 1, 0, 0},
                 {0, 0, 0, 0, 1, 0},
                 {0, 0, 0, 0, 0, 1}});
}

} // namespace worked
} // namespace hankelmonde
