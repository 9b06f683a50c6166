#include "hankelmonde/rational.hpp"

#include "hankelmonde/errors.hpp"

#include <cctype>
#include <string>

namespace hankelmonde {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
        throw ParseError("not a rational literal: '" + std::string(text) + "'");
    }
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational x(n, d);
    x.canonicalize();
    return x;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Integer multinomial(unsigned k, unsigned i, unsigned j) {
    if (i + j > k) {
        return 0;
    }
    return binomial(k, i) * binomial(k - i, j);
}

} // namespace hankelmonde
