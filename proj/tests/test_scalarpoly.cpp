#include "support.hpp"

#include "hankelmonde/errors.hpp"

using namespace hankelmonde;
using namespace hankelmonde::test;

TEST_CASE("parse_rational canonicalizes and rejects junk") {
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-7") == q(-7));
    CHECK(parse_rational("+2/6") == q(1, 3));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("8/4")) == "2");
    for (const char* bad : {"", "1/0", "1/-2", "abc", "1.5", "1//2", "/3", "3/", "- 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
}

TEST_CASE("factorial, binomial and multinomial tables") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(multinomial(4, 1, 2) == 12);
    CHECK(multinomial(2, 2, 1) == 0);
    // Pascal recursion as an independent check of binomial.
    for (unsigned n = 1; n < 12; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}

TEST_CASE("Poly keeps the canonical trimmed representation") {
    CHECK(Poly().is_zero());
    CHECK(Poly({q(1), q(0), q(0)}).degree() == 0);
    CHECK(Poly({q(0), q(0)}).is_zero());
    CHECK((zp(2) - zp(2)).is_zero());
    CHECK(Poly({q(0), q(0)}).coeffs().empty());
    CHECK(to_string(Poly({q(1), q(-3, 2), q(1)})) == "1 - 3/2*z + z^2");
}

TEST_CASE("poly_derivative examples") {
    CHECK(poly_derivative(zp(2), 1) == Poly({q(0), q(2)}));
    CHECK(poly_derivative(zp(2), 3).is_zero());
    CHECK(poly_derivative(Poly({q(1), q(1), q(0), q(1)}), 2) == Poly({q(0), q(6)}));
}

TEST_CASE("poly_derivative composes additively in k") {
    Gen g(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly p = g.poly(7);
        const auto k1 = static_cast<std::size_t>(g.integer(0, 4));
        const auto k2 = static_cast<std::size_t>(g.integer(0, 4));
        CHECK(poly_derivative(poly_derivative(p, k1), k2) == poly_derivative(p, k1 + k2));
    }
}

TEST_CASE("Poly arithmetic agrees with evaluation") {
    Gen g(12);
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = g.poly(5);
        const Poly b = g.poly(5);
        const Rational z0 = g.rational();
        CHECK((a * b)(z0) == a(z0) * b(z0));
        CHECK((a + b)(z0) == a(z0) + b(z0));
        CHECK((a - b)(z0) == a(z0) - b(z0));
        CHECK(a.scale_argument(q(-1))(z0) == a(-z0));
        Poly acc = a;
        acc.add_product(a, b);
        CHECK(acc == a + a * b);
    }
}

TEST_CASE("mat_mul examples") {
    Gen g(13);
    const PolyMatrix x = g.matrix(2, 3, 2);
    CHECK(mat_mul(PolyMatrix::identity(2), x) == x);
    CHECK(mat_mul(PolyMatrix(2, 0), PolyMatrix(0, 3)) == PolyMatrix(2, 3));
    PolyMatrix f(2, 1);
    f(0, 0) = Poly({q(0), q(-1)});
    f(1, 0) = Poly(1L);
    CHECK(mat_mul(f.transpose(), f) == PolyMatrix{{Poly({q(1), q(0), q(1)})}});
    CHECK_THROWS_AS(mat_mul(PolyMatrix(2, 3), PolyMatrix(2, 3)), ShapeMismatch);
}

TEST_CASE("mat_mul is associative and commutes with evaluation") {
    Gen g(14);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n1 = static_cast<std::size_t>(g.integer(0, 3));
        const auto n2 = static_cast<std::size_t>(g.integer(0, 3));
        const auto n3 = static_cast<std::size_t>(g.integer(0, 3));
        const auto n4 = static_cast<std::size_t>(g.integer(0, 3));
        const PolyMatrix a = g.matrix(n1, n2, 3);
        const PolyMatrix b = g.matrix(n2, n3, 3);
        const PolyMatrix c = g.matrix(n3, n4, 3);
        CHECK((a * b) * c == a * (b * c));
        const Rational z0 = g.rational();
        CHECK((a * b).eval(z0) == a.eval(z0) * b.eval(z0));
    }
}

TEST_CASE("kron examples and the mixed-product property") {
    CHECK(kron(PolyMatrix::identity(2), ints({{5}})) == ints({{5, 0}, {0, 5}}));
    CHECK(kron(shift_matrix(2), PolyMatrix::identity(1)) == shift_matrix(2));
    CHECK(kron(factorial_diag(2), PolyMatrix::identity(2)) == PolyMatrix::identity(4));
    Gen g(15);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ar = static_cast<std::size_t>(g.integer(1, 3));
        const auto ac = static_cast<std::size_t>(g.integer(1, 3));
        const auto br = static_cast<std::size_t>(g.integer(1, 3));
        const auto bc = static_cast<std::size_t>(g.integer(1, 3));
        const auto cc = static_cast<std::size_t>(g.integer(1, 2));
        const auto dc = static_cast<std::size_t>(g.integer(1, 2));
        const PolyMatrix a = g.matrix(ar, ac, 2);
        const PolyMatrix b = g.matrix(br, bc, 2);
        const PolyMatrix c = g.matrix(ac, cc, 2);
        const PolyMatrix d = g.matrix(bc, dc, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("shift_matrix and factorial_diag") {
    CHECK(shift_matrix(1) == ints({{0}}));
    CHECK(shift_matrix(2) == ints({{0, 1}, {0, 0}}));
    for (std::size_t k = 1; k <= 6; ++k) {
        CHECK(shift_matrix(k).power(static_cast<unsigned>(k)).is_zero());
        if (k > 1) {
            CHECK_FALSE(shift_matrix(k).power(static_cast<unsigned>(k - 1)).is_zero());
        }
    }
    CHECK(factorial_diag(1) == ints({{1}}));
    CHECK(factorial_diag(3) == ints({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    const PolyMatrix d5 = factorial_diag(5);
    const long table[] = {1, 1, 2, 6, 24};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(d5(i, i) == Poly(table[i]));
    }
    CHECK(factorial_diag(5) * inverse_factorial_diag(5) == PolyMatrix::identity(5));
}

TEST_CASE("eval_matrix examples") {
    const PolyMatrix c = ints({{1, 2}, {3, 4}});
    CHECK(eval_matrix(c, q(7, 3)) == c);
    CHECK(eval_matrix(PolyMatrix{{zp(1), zp(2)}}, q(2)) == ints({{2, 4}}));
    CHECK(eval_matrix(make_U(2), q(0)) == PolyMatrix::identity(2));
}

TEST_CASE("blocks, stacking and bounds") {
    Gen g(16);
    const PolyMatrix a = g.matrix(2, 3, 2);
    const PolyMatrix b = g.matrix(2, 1, 2);
    const PolyMatrix h = hstack({a, b});
    CHECK(h.block(0, 0, 2, 3) == a);
    CHECK(h.block(0, 3, 2, 1) == b);
    const PolyMatrix v = vstack({a, PolyMatrix(0, 3), a});
    CHECK(v.rows() == 4);
    CHECK(v.block(2, 0, 2, 3) == a);
    const PolyMatrix bd = block_diag({a, PolyMatrix(1, 0), b});
    CHECK(bd.rows() == 5);
    CHECK(bd.cols() == 4);
    CHECK(bd.block(3, 3, 2, 1) == b);
    CHECK(bd.block(2, 0, 1, 4).is_zero());
    CHECK_THROWS_AS(a.at(2, 0), IndexOutOfRange);
    CHECK_THROWS_AS(hstack({a, PolyMatrix(3, 1)}), ShapeMismatch);
    CHECK_THROWS_AS(PolyMatrix(2, 3).power(2), NonSquare);
    CHECK(chain({a.transpose(), a, PolyMatrix::identity(3)}) == a.transpose() * a);
}

TEST_CASE("derivative and argument scaling of matrices") {
    Gen g(17);
    for (int trial = 0; trial < 30; ++trial) {
        const PolyMatrix a = g.matrix(2, 2, 4);
        const PolyMatrix b = g.matrix(2, 2, 4);
        // product rule
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK(a.scale_argument(q(-1)).scale_argument(q(-1)) == a);
    }
}
