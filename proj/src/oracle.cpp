#include "hankelmonde/oracle.hpp"

#include "hankelmonde/errors.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace hankelmonde {

namespace {

using IntRows = std::vector<std::vector<Integer>>;
using RatRows = std::vector<std::vector<Rational>>;

RatRows to_rationals(const PolyMatrix& m) {
    RatRows out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Poly& p = m(i, j);
            if (p.degree() > 0) {
                throw InvalidArgument("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not constant; evaluate first");
            }
            out[i][j] = p.coeff(0);
        }
    }
    return out;
}

// Clears denominators row by row. Returns the product of the row multipliers.
Integer to_integers(const RatRows& a, IntRows& out) {
    out.assign(a.size(), {});
    Integer scale(1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer l(1);
        for (const auto& x : a[i]) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        out[i].reserve(a[i].size());
        for (const auto& x : a[i]) {
            out[i].push_back(x.get_num() * (l / x.get_den()));
        }
        scale *= l;
    }
    return scale;
}

struct BareissResult {
    std::size_t rank = 0;
    Integer last_pivot{1};
    int sign = 1;
};

// Fraction-free row echelon form in place. Every division is exact.
BareissResult bareiss(IntRows& a, std::size_t cols) {
    BareissResult res;
    const std::size_t rows = a.size();
    Integer prev(1);
    for (std::size_t c = 0; c < cols && res.rank < rows; ++c) {
        std::size_t piv = res.rank;
        while (piv < rows && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        if (piv != res.rank) {
            std::swap(a[piv], a[res.rank]);
            res.sign = -res.sign;
        }
        const auto& prow = a[res.rank];
        for (std::size_t i = res.rank + 1; i < rows; ++i) {
            auto& row = a[i];
            for (std::size_t j = c + 1; j < cols; ++j) {
                row[j] = prow[c] * row[j] - row[c] * prow[j];
                mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
        }
        prev = prow[c];
        res.last_pivot = prev;
        ++res.rank;
    }
    return res;
}

std::size_t rank_of(const RatRows& a, std::size_t cols) {
    IntRows ints;
    to_integers(a, ints);
    return bareiss(ints, cols).rank;
}

RatRows hconcat(const RatRows& a, const RatRows& b) {
    RatRows out = a;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].insert(out[i].end(), b[i].begin(), b[i].end());
    }
    return out;
}

} // namespace

std::vector<Rational> sample_points(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 10);
    std::set<Rational> seen;
    std::vector<Rational> points;
    while (points.size() < count) {
        Rational x(num(gen), den(gen));
        x.canonicalize();
        if (seen.insert(x).second) {
            points.push_back(x);
        }
    }
    return points;
}

std::size_t rank_constant(const PolyMatrix& m) { return rank_of(to_rationals(m), m.cols()); }

std::size_t rank_at(const PolyMatrix& m, const Rational& z0) { return rank_constant(m.eval(z0)); }

PolyMatrix nullspace_at(const PolyMatrix& m, const Rational& z0) {
    RatRows a = to_rationals(m.eval(z0));
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Gauss-Jordan to reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(a[piv], a[r]);
        const Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) {
                continue;
            }
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                a[i][j] -= f * a[r][j];
            }
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) {
        is_pivot[c] = true;
    }
    PolyMatrix basis(cols, cols - pivot_cols.size());
    std::size_t k = 0;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) {
            continue;
        }
        basis(f, k) = Poly(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            basis(pivot_cols[i], k) = Poly(-a[i][f]);
        }
        ++k;
    }
    return basis;
}

bool vanishes_at_enough_points(const PolyMatrix& m) {
    const long d = m.max_degree();
    for (long t = 0; t <= d; ++t) {
        if (!m.eval(Rational(t)).is_zero()) {
            return false;
        }
    }
    return true;
}

bool is_zero_poly_matrix(const PolyMatrix& m) {
    const bool direct = m.is_zero();
    if (direct != vanishes_at_enough_points(m)) {
        throw std::logic_error("zero test disagrees with evaluation at degree + 1 points");
    }
    return direct;
}

bool span_contains_at(const PolyMatrix& a, const PolyMatrix& b, const Rational& z0) {
    if (a.rows() != b.rows()) {
        throw ShapeMismatch("span comparison of vectors of length " + std::to_string(a.rows()) + " and " +
                            std::to_string(b.rows()));
    }
    const RatRows ea = to_rationals(a.eval(z0));
    const RatRows eb = to_rationals(b.eval(z0));
    return rank_of(ea, a.cols()) == rank_of(hconcat(ea, eb), a.cols() + b.cols());
}

bool spans_equal_at(const PolyMatrix& a, const PolyMatrix& b, const Rational& z0) {
    if (a.rows() != b.rows()) {
        throw ShapeMismatch("span comparison of vectors of length " + std::to_string(a.rows()) + " and " +
                            std::to_string(b.rows()));
    }
    const RatRows ea = to_rationals(a.eval(z0));
    const RatRows eb = to_rationals(b.eval(z0));
    const std::size_t ra = rank_of(ea, a.cols());
    const std::size_t rb = rank_of(eb, b.cols());
    return ra == rb && ra == rank_of(hconcat(ea, eb), a.cols() + b.cols());
}

Rational det_fraction_free(const PolyMatrix& m) {
    if (m.rows() != m.cols()) {
        throw NonSquare("determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    }
    if (m.rows() == 0) {
        return 1;
    }
    IntRows ints;
    const Integer scale = to_integers(to_rationals(m), ints);
    const BareissResult res = bareiss(ints, m.cols());
    if (res.rank < m.rows()) {
        return 0;
    }
    Rational det(res.last_pivot * res.sign, scale);
    det.canonicalize();
    return det;
}

Rational det_at(const PolyMatrix& m, const Rational& z0) { return det_fraction_free(m.eval(z0)); }

RankCertificate certify_rank(const PolyMatrix& m, const std::vector<Rational>& points) {
    RankCertificate cert;
    cert.sample_points = points;
    for (const auto& z0 : points) {
        cert.ranks.push_back(rank_at(m, z0));
    }
    if (!cert.ranks.empty()) {
        bool same = true;
        for (auto r : cert.ranks) {
            same = same && r == cert.ranks.front();
        }
        if (same) {
            cert.agreed_rank = cert.ranks.front();
        }
    }
    return cert;
}

} // namespace hankelmonde
