#pragma once

#include "hankelmonde/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hankelmonde {

/// Dense univariate polynomial in z over the rationals.
///
/// Coefficients are stored in ascending degree with trailing zeros trimmed,
/// so the zero polynomial is the empty coefficient list and any other value
/// has a nonzero leading coefficient. Values are immutable from the outside;
/// every operation returns a fresh polynomial.
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c); // NOLINT(google-explicit-constructor)
    Poly(long c);            // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    /// c * z^degree
    static Poly monomial(const Rational& c, std::size_t degree);
    /// The polynomial z.
    static Poly z();

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of z^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    Rational operator()(const Rational& z0) const;

    /// (d/dz)^k of this polynomial.
    Poly derivative(std::size_t k = 1) const;
    /// p(c z).
    Poly scale_argument(const Rational& c) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    /// this += a * b, without a temporary product polynomial.
    void add_product(const Poly& a, const Poly& b);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// (d/dz)^k p.
Poly poly_derivative(const Poly& p, std::size_t k);

/// Human-readable form such as "1 - 3/2*z + z^2".
std::string to_string(const Poly& p);

} // namespace hankelmonde
