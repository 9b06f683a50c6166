#include "support.hpp"
#include "worked_example_data.hpp"

#include "hankelmonde/errors.hpp"
#include "hankelmonde/oracle.hpp"
#include "hankelmonde/rightinv.hpp"

using namespace hankelmonde;
using namespace hankelmonde::test;

namespace {

/// Coefficient matrices of m stacked by degree: constant x satisfies m(z) x = 0
/// for all z iff stack * x = 0.
PolyMatrix coefficient_stack(const PolyMatrix& m) {
    std::vector<PolyMatrix> blocks;
    for (long d = 0; d <= std::max(0L, m.max_degree()); ++d) {
        PolyMatrix c(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                c(i, j) = Poly(m(i, j).coeff(static_cast<std::size_t>(d)));
            }
        }
        blocks.push_back(c);
    }
    return vstack(blocks);
}

/// The bidiagonal construction: x_0 .. x_{q-2} = 0 and y_m = C(m+q-1, q-1) x_{m+q-1}
/// running through (-T; I) column blocks. Only valid for q = 1.
PolyMatrix bidiagonal_constant_kernel(unsigned q, unsigned r, unsigned nu) {
    PolyMatrix t(r, r);
    for (unsigned i = 0; i + 1 < r; ++i) {
        t(i, i + 1) = Poly(static_cast<long>(i + 1));
    }
    PolyMatrix basis(std::size_t{nu} * r, std::size_t{nu - q} * r);
    for (unsigned c = 0; c + q < nu; ++c) {
        const unsigned top = c + q - 1;
        const unsigned bottom = c + q;
        basis.set_block(std::size_t{top} * r, std::size_t{c} * r,
                        t * Rational(-1) * (Rational(1) / Rational(binomial(top, q - 1))));
        basis.set_block(std::size_t{bottom} * r, std::size_t{c} * r,
                        eye(r) * (Rational(1) / Rational(binomial(bottom, q - 1))));
    }
    return basis;
}

} // namespace

TEST_CASE("B^k examples") {
    CHECK(make_Bk(2, 2, 0) == ints({{2, 0}, {0, 0}}));
    CHECK(make_Bk(2, 2, 1) == ints({{0, 1}, {-1, 0}}));
    CHECK(make_Bk(2, 1, 1) == ints({{0, 1}}));
    CHECK(make_Bk(3, 2, 3).is_zero());
    CHECK(make_B0(2, 2, 2) == ints({{2, 0}, {0, 0}, {0, 1}, {-1, 0}}));
    CHECK_THROWS_AS(make_Bk(0, 2, 0), InvalidArgument);
}

TEST_CASE("A0 B0 = I") {
    CHECK(verify_a0b(2, 2, 2));
    CHECK(verify_a0b(1, 1, 1));
    CHECK(verify_a0b(3, 3, 4));
    CHECK_THROWS_AS(verify_a0b(3, 2, 2), CaseViolation);
    // B^k has only r rows, so for r < q the anti-diagonal terms with k - i >= r
    // are cut off: at (3,2,4) entry (0,0) of A0 B0 is 3 - 3 = 0.
    CHECK_FALSE(verify_a0b(3, 2, 4));
    CHECK((make_calA0(3, 2, 4) * make_B0(3, 2, 4))(0, 0) == Poly(0L));
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (unsigned nu = q; nu <= 6; ++nu) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(nu);
                CHECK(verify_a0b(q, r, nu) == (r >= q));
            }
        }
    }
    for (unsigned q = 1; q <= 8; ++q) {
        for (unsigned i = 0; i < q; ++i) {
            CHECK(a0b_diagonal_sum(q, i) == 1);
        }
    }
}

TEST_CASE("X^k trichotomy") {
    CHECK(make_Xk(4, 2, 2) == ints({{0, 0, 0, 0}, {-4, 0, 0, 0}}));
    for (unsigned q = 1; q <= 5; ++q) {
        for (unsigned r = 1; r <= 5; ++r) {
            for (unsigned k = 0; k <= 7; ++k) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(k);
                const PolyMatrix x = make_Xk(q, r, k);
                const bool zero = k >= q || k + 1 <= r;
                CHECK(x.is_zero() == zero);
                if (!zero) {
                    PolyMatrix expected(r, q);
                    const Integer c = binomial(q, k + 1);
                    expected(r - 1, k - r) = Poly(Rational((r - 1) % 2 == 0 ? c : Integer(-c)));
                    CHECK(x == expected);
                }
            }
        }
    }
}

TEST_CASE("H_k: constancy and differential equation") {
    CHECK(make_Hk(2, 1, 1) == PolyMatrix{{zp(1), Poly(1L)}});
    for (unsigned q = 1; q <= 5; ++q) {
        const PolyMatrix u = make_U_tilde(q);
        const PolyMatrix shat_q = make_S_hat(q);
        CHECK(u.derivative() == u * factorial_diag(q) * shift_matrix(q).transpose() * inverse_factorial_diag(q));
        CHECK(u.derivative() == u * shat_q.transpose());
        CHECK(nilpotent_exp(shat_q.transpose()) == u);
    }
    for (unsigned r = 1; r <= 5; ++r) {
        const PolyMatrix w = make_W_tilde(r);
        CHECK(w.derivative() == make_S_hat(r) * w);
        CHECK(nilpotent_exp(make_S_hat(r)) == w);
    }
    for (unsigned q = 1; q <= 5; ++q) {
        for (unsigned r = 1; r <= 5; ++r) {
            for (unsigned k = 0; k <= 7; ++k) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(k);
                const PolyMatrix h = make_Hk(q, r, k);
                const PolyMatrix sr = make_S_hat(r);
                const PolyMatrix sq = make_S_hat(q);
                CHECK(h.derivative() == sr * h + h * sq.transpose());
                CHECK(h == nilpotent_exp(sr) * h.eval(0) * nilpotent_exp(sq.transpose()));
                const bool constant = k >= q || k + 1 <= r;
                CHECK(h.is_constant() == constant);
                if (constant) {
                    CHECK(h == inverse_factorial_diag(r) * make_Bk(q, r, k) * inverse_factorial_diag(q));
                }
            }
        }
    }
}

TEST_CASE("the right factor D_q S_q D_q^{-1} transposed breaks the H_k equation for q >= 3") {
    const unsigned q = 3, r = 1;
    const PolyMatrix wrong = (factorial_diag(q) * shift_matrix(q) * inverse_factorial_diag(q)).transpose();
    bool any_failure = false;
    for (unsigned k = r; k < q; ++k) {
        const PolyMatrix h = make_Hk(q, r, k);
        any_failure = any_failure || h.derivative() != make_S_hat(r) * h + h * wrong;
    }
    CHECK(any_failure);
    // q <= 2: both orientations agree
    for (unsigned small = 1; small <= 2; ++small) {
        CHECK((factorial_diag(small) * shift_matrix(small) * inverse_factorial_diag(small)) == make_S_hat(small));
    }
}

TEST_CASE("constant right inverse C of calM0") {
    const RightInverseResult a = make_C_constant(2, 2, 2);
    CHECK(a.inverse == ints({{2, 0}, {0, 0}, {0, 1}, {-1, 0}}));
    CHECK(a.is_constant);
    CHECK(a.affine_freedom_dim == 0);
    const RightInverseResult b = make_C_constant(1, 2, 2);
    CHECK(b.affine_freedom_dim == 2);
    CHECK(make_calM0(1, 2, 2) * b.inverse == eye(1));
    CHECK(make_C_constant(1, 1, 1).inverse == ints({{1}}));

    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (unsigned nu = 1; nu <= 4; ++nu) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(nu);
                if (r >= q && nu >= q) {
                    const RightInverseResult c = make_C_constant(q, r, nu);
                    CHECK(c.is_constant);
                    CHECK(c.affine_freedom_dim == std::size_t{nu - q} * r * q);
                    CHECK(make_calM0(q, r, nu) * c.inverse == eye(q));
                    // derivatives of calM0 C = I: higher block rows of calM vanish on C
                    for (unsigned mu = 1; mu <= 4; ++mu) {
                        const PolyMatrix expected = vstack({eye(q), PolyMatrix(std::size_t{mu - 1} * q, q)});
                        CHECK(make_calM({q, r, mu, nu}) * c.inverse == expected);
                    }
                } else {
                    CHECK_THROWS_AS(make_C_constant(q, r, nu), CaseViolation);
                }
                CHECK(constant_right_inverse_exists(make_calM0(q, r, nu)) == (r >= q && nu >= q));
            }
        }
    }
    CHECK_FALSE(constant_right_inverse_exists(make_calM({2, 3, 2, 3})));
}

TEST_CASE("constant kernel basis") {
    CHECK(constant_kernel_basis(2, 2, 2).cols() == 0);
    CHECK(constant_kernel_basis(3, 2, 2).rows() == 4);
    CHECK_THROWS_AS(constant_kernel_basis(0, 2, 2), InvalidArgument);
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (unsigned nu = 1; nu <= 6; ++nu) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(nu);
                const PolyMatrix k = constant_kernel_basis(q, r, nu);
                const std::size_t dim = nu > q ? std::size_t{nu - q} * r : 0;
                CHECK(k.cols() == dim);
                CHECK(k.is_constant());
                CHECK(rank_constant(k) == dim);
                CHECK((make_calM0(q, r, nu) * k).is_zero());
                for (unsigned mu = r; mu <= r + 1; ++mu) {
                    CHECK((make_calM({q, r, mu, nu}) * k).is_zero());
                }
                // every z-independent kernel vector is in the span
                const PolyMatrix all = nullspace_at(coefficient_stack(make_calM0(q, r, nu)), Rational(0));
                CHECK(all.cols() == dim);
                if (dim > 0) {
                    CHECK(spans_equal_at(k, all, Rational(0)));
                }
            }
        }
    }
}

TEST_CASE("constant kernel basis against the worked example") {
    const PolyMatrix k = constant_kernel_basis(1, 3, 3);
    CHECK(spans_equal_at(k, worked::khat(), Rational(0)));
    CHECK(spans_equal_at(k, bidiagonal_constant_kernel(1, 3, 3), Rational(0)));
}

TEST_CASE("the bidiagonal constant kernel construction fails for q = 2") {
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned nu = 2; nu <= 4; ++nu) {
            CHECK((make_calM0(1, r, nu) * bidiagonal_constant_kernel(1, r, nu)).is_zero());
        }
    }
    CHECK_FALSE((make_calM0(2, 3, 3) * bidiagonal_constant_kernel(2, 3, 3)).is_zero());
}

TEST_CASE("differences of constant right inverses lie in the constant kernel") {
    Gen gen(99);
    for (unsigned q = 1; q <= 3; ++q) {
        for (unsigned r = q; r <= 4; ++r) {
            for (unsigned nu = q; nu <= 4; ++nu) {
                const PolyMatrix c = make_C_constant(q, r, nu).inverse;
                const PolyMatrix stack = coefficient_stack(make_calM0(q, r, nu));
                const PolyMatrix free_dirs = nullspace_at(stack, Rational(0));
                // another constant right inverse: C + N Y for random Y
                const PolyMatrix other = c + free_dirs * gen.matrix(free_dirs.cols(), q, 0);
                CHECK(make_calM0(q, r, nu) * other == eye(q));
                const PolyMatrix k = constant_kernel_basis(q, r, nu);
                const PolyMatrix diff = c - other;
                CHECK(rank_constant(hstack({k, diff})) == rank_constant(k));
            }
        }
    }
}

TEST_CASE("general right inverse of calM") {
    const RightInverseResult a = make_M_right_inverse({2, 2, 1, 2});
    CHECK(a.inverse == PolyMatrix{{Poly(1L), Poly(0L)}, {Poly(0L), Poly(0L)}, {-zp(1), Poly(1L)}, {Poly(0L), Poly(0L)}});
    CHECK_FALSE(a.is_constant);
    CHECK(a.affine_freedom_dim == 4);
    CHECK_THROWS_AS(make_M_right_inverse({1, 1, 2, 4}), CaseViolation);
    CHECK_THROWS_AS(make_M_right_inverse({3, 4, 1, 2}), CaseViolation);
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (unsigned mu = 1; mu <= 4; ++mu) {
                for (unsigned nu = 1; nu <= 4; ++nu) {
                    const Params p{q, r, mu, nu};
                    CAPTURE(to_string(p));
                    if (nu >= q && mu <= r) {
                        const RightInverseResult res = make_M_right_inverse(p);
                        CHECK(make_calM(p) * res.inverse == eye(std::size_t{mu} * q));
                        CHECK(res.affine_freedom_dim == (std::size_t{nu} * r - std::size_t{mu} * q) * mu * q);
                    } else {
                        CHECK_THROWS_AS(make_M_right_inverse(p), CaseViolation);
                    }
                }
            }
        }
    }
}

TEST_CASE("simple right inverse of calM0") {
    CHECK(make_simple_M0_right_inverse(2, 2, 2) == make_M_right_inverse({2, 2, 1, 2}).inverse);
    CHECK(make_simple_M0_right_inverse(1, 1, 2) == ints({{1}, {0}}));
    const PolyMatrix c = make_simple_M0_right_inverse(2, 3, 3);
    CHECK(c.rows() == 9);
    CHECK(c(3, 0) == -zp(1));
    CHECK_THROWS_AS(make_simple_M0_right_inverse(3, 1, 2), CaseViolation);
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned r = 1; r <= 4; ++r) {
            for (unsigned nu = q; nu <= 5; ++nu) {
                CHECK(make_calM0(q, r, nu) * make_simple_M0_right_inverse(q, r, nu) == eye(q));
            }
        }
    }
}
