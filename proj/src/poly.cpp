#include "hankelmonde/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hankelmonde {

Poly::Poly(const Rational& c) {
    if (c != 0) {
        coeffs_.push_back(c);
    }
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    Poly p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

Poly Poly::z() { return monomial(Rational(1), 1); }

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::operator()(const Rational& z0) const {
    // Horner
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= z0;
        acc += *it;
    }
    return acc;
}

Poly Poly::derivative(std::size_t k) const {
    if (k == 0) {
        return *this;
    }
    if (k >= coeffs_.size()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - k);
    for (std::size_t i = 0; i < out.size(); ++i) {
        // falling factorial (i+k)(i+k-1)...(i+1)
        Integer f(1);
        for (std::size_t t = i + 1; t <= i + k; ++t) {
            f *= static_cast<unsigned long>(t);
        }
        out[i] = coeffs_[i + k] * Rational(f);
    }
    return Poly(std::move(out));
}

Poly Poly::scale_argument(const Rational& c) const {
    Poly p = *this;
    Rational power(1);
    for (auto& a : p.coeffs_) {
        a *= power;
        power *= c;
    }
    p.trim();
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& a : p.coeffs_) {
        a = -a;
    }
    return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) {
        a *= s;
    }
    return *this;
}

void Poly::add_product(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (coeffs_.size() < n) {
        coeffs_.resize(n);
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    trim();
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    p.add_product(a, b);
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Poly poly_derivative(const Poly& p, std::size_t k) { return p.derivative(k); }

std::string to_string(const Poly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        Rational a = c[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            a = abs(a);
        }
        first = false;
        if (i == 0) {
            os << to_string(a);
            continue;
        }
        if (a != 1) {
            os << to_string(a) << "*";
        }
        os << "z";
        if (i > 1) {
            os << "^" << i;
        }
    }
    return os.str();
}

} // namespace hankelmonde
