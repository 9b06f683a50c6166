#pragma once

// Brute-force exact linear algebra used to cross-check the closed forms.
// Nothing here knows about the structured matrices; it only sees numbers.

#include "hankelmonde/poly_matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hankelmonde {

struct RankCertificate {
    std::vector<Rational> sample_points;
    std::vector<std::size_t> ranks;
    /// Set only when every sampled rank coincides.
    std::optional<std::size_t> agreed_rank;
};

/// `count` distinct rationals n/d with |n| <= 100 and 1 <= d <= 10, drawn
/// from a generator seeded with `seed`. Same seed, same points.
std::vector<Rational> sample_points(std::size_t count, std::uint64_t seed);

/// Rank of a constant matrix by fraction-free elimination. Throws
/// InvalidArgument if some entry is not constant.
std::size_t rank_constant(const PolyMatrix& m);

std::size_t rank_at(const PolyMatrix& m, const Rational& z0);

/// Columns form a basis of the right nullspace of m(z0); the column count is
/// cols - rank_at(m, z0).
PolyMatrix nullspace_at(const PolyMatrix& m, const Rational& z0);

/// True iff every entry is the zero polynomial. Also evaluates the matrix at
/// max_degree + 1 distinct points and throws std::logic_error if the two
/// answers disagree.
bool is_zero_poly_matrix(const PolyMatrix& m);

/// Zero test by evaluation at max_degree + 1 distinct points only.
bool vanishes_at_enough_points(const PolyMatrix& m);

/// Column spans of a(z0) and b(z0) coincide. Throws ShapeMismatch on differing row counts.
bool spans_equal_at(const PolyMatrix& a, const PolyMatrix& b, const Rational& z0);

/// Column span of b(z0) lies inside the column span of a(z0).
bool span_contains_at(const PolyMatrix& a, const PolyMatrix& b, const Rational& z0);

/// Determinant of a square constant matrix by Bareiss elimination.
/// Throws NonSquare, or InvalidArgument for non-constant entries.
Rational det_fraction_free(const PolyMatrix& m);

Rational det_at(const PolyMatrix& m, const Rational& z0);

RankCertificate certify_rank(const PolyMatrix& m, const std::vector<Rational>& points);

} // namespace hankelmonde
