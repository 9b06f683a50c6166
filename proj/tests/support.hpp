#pragma once

// Shared helpers for the unit tests: literal builders and small seeded
// generators for property tests.

#include "hankelmonde/generators.hpp"

#include <doctest.h>

#include <cstdint>
#include <initializer_list>
#include <random>

namespace hankelmonde::test {

/// Constant integer matrix from a row-major literal.
inline PolyMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    PolyMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        REQUIRE(row.size() == nc);
        std::size_t j = 0;
        for (long v : row) {
            m(i, j++) = Poly(v);
        }
        ++i;
    }
    return m;
}

inline Rational q(long n, long d = 1) {
    Rational x(n, d);
    x.canonicalize();
    return x;
}

inline Poly zp(std::size_t k) { return Poly::monomial(Rational(1), k); }

/// Seeded source of random rationals, polynomials and matrices.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational() {
        Rational x(integer(-9, 9), integer(1, 5));
        x.canonicalize();
        return x;
    }

    /// Degree up to max_deg; roughly one coefficient in four is zero.
    Poly poly(long max_deg) {
        const long deg = integer(-1, max_deg);
        std::vector<Rational> c;
        for (long i = 0; i <= deg; ++i) {
            c.push_back(integer(0, 3) == 0 ? Rational(0) : rational());
        }
        return Poly(std::move(c));
    }

    PolyMatrix matrix(std::size_t rows, std::size_t cols, long max_deg) {
        PolyMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = poly(max_deg);
            }
        }
        return m;
    }

    Params params(unsigned max) {
        auto pick = [&] { return static_cast<unsigned>(integer(1, max)); };
        const unsigned a = pick(), b = pick(), c = pick(), d = pick();
        return {a, b, c, d};
    }

  private:
    std::mt19937_64 rng_;
};

template <typename F>
void for_each_params(unsigned max, F&& f) {
    for (unsigned a = 1; a <= max; ++a)
        for (unsigned b = 1; b <= max; ++b)
            for (unsigned c = 1; c <= max; ++c)
                for (unsigned d = 1; d <= max; ++d)
                    f(Params{a, b, c, d});
}

} // namespace hankelmonde::test
