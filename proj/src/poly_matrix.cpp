#include "hankelmonde/poly_matrix.hpp"

#include "hankelmonde/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hankelmonde {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

} // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ShapeMismatch("ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Poly(1);
    }
    return m;
}

PolyMatrix PolyMatrix::from_entries(std::size_t rows, std::size_t cols, std::vector<Poly> entries) {
    if (entries.size() != rows * cols) {
        throw ShapeMismatch("expected " + std::to_string(rows * cols) + " entries for a " + shape(rows, cols) +
                            " matrix, got " + std::to_string(entries.size()));
    }
    PolyMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.entries_ = std::move(entries);
    return m;
}

const Poly& PolyMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw IndexOutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                              shape(rows_, cols_));
    }
    return (*this)(i, j);
}

Poly& PolyMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) {
        throw IndexOutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                              shape(rows_, cols_));
    }
    return (*this)(i, j);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

PolyMatrix PolyMatrix::derivative(std::size_t k) const {
    PolyMatrix d = *this;
    for (auto& p : d.entries_) {
        p = p.derivative(k);
    }
    return d;
}

PolyMatrix PolyMatrix::eval(const Rational& z0) const {
    PolyMatrix e = *this;
    for (auto& p : e.entries_) {
        p = Poly(p(z0));
    }
    return e;
}

PolyMatrix PolyMatrix::scale_argument(const Rational& c) const {
    PolyMatrix e = *this;
    for (auto& p : e.entries_) {
        p = p.scale_argument(c);
    }
    return e;
}

long PolyMatrix::max_degree() const noexcept {
    long d = -1;
    for (const auto& p : entries_) {
        d = std::max(d, p.degree());
    }
    return d;
}

bool PolyMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_constant() const noexcept { return max_degree() <= 0; }

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw IndexOutOfRange("block " + shape(nr, nc) + " at (" + std::to_string(r0) + "," + std::to_string(c0) +
                              ") outside " + shape(rows_, cols_));
    }
    PolyMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
            b(i, j) = (*this)(r0 + i, c0 + j);
        }
    }
    return b;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) {
        throw IndexOutOfRange("block " + shape(m.rows_, m.cols_) + " at (" + std::to_string(r0) + "," +
                              std::to_string(c0) + ") outside " + shape(rows_, cols_));
    }
    for (std::size_t i = 0; i < m.rows_; ++i) {
        for (std::size_t j = 0; j < m.cols_; ++j) {
            (*this)(r0 + i, c0 + j) = m(i, j);
        }
    }
}

PolyMatrix PolyMatrix::power(unsigned n) const {
    if (rows_ != cols_) {
        throw NonSquare("power of a " + shape(rows_, cols_) + " matrix");
    }
    PolyMatrix result = identity(rows_);
    for (unsigned i = 0; i < n; ++i) {
        result = result * *this;
    }
    return result;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ShapeMismatch("sum of " + shape(rows_, cols_) + " and " + shape(rhs.rows_, rhs.cols_));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw ShapeMismatch("difference of " + shape(rows_, cols_) + " and " + shape(rhs.rows_, rhs.cols_));
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Rational& s) {
    for (auto& p : entries_) {
        p *= s;
    }
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Poly& s) {
    for (auto& p : entries_) {
        if (!p.is_zero()) {
            p = p * s;
        }
    }
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw ShapeMismatch("product of " + shape(a.rows_, a.cols_) + " and " + shape(b.rows_, b.cols_));
    }
    PolyMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Poly& aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Poly& bkj = b(k, j);
                if (!bkj.is_zero()) {
                    c(i, j).add_product(aik, bkj);
                }
            }
        }
    }
    return c;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) { return a * b; }

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Poly& aij = a(i, j);
            if (aij.is_zero()) {
                continue;
            }
            for (std::size_t s = 0; s < b.rows(); ++s) {
                for (std::size_t t = 0; t < b.cols(); ++t) {
                    if (!b(s, t).is_zero()) {
                        k(i * b.rows() + s, j * b.cols() + t) = aij * b(s, t);
                    }
                }
            }
        }
    }
    return k;
}

PolyMatrix shift_matrix(std::size_t k) {
    PolyMatrix s(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        s(i, i + 1) = Poly(1);
    }
    return s;
}

PolyMatrix factorial_diag(std::size_t k) {
    PolyMatrix d(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        d(i, i) = Poly(Rational(factorial(static_cast<unsigned>(i))));
    }
    return d;
}

PolyMatrix inverse_factorial_diag(std::size_t k) {
    PolyMatrix d(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        d(i, i) = Poly(Rational(1) / Rational(factorial(static_cast<unsigned>(i))));
    }
    return d;
}

PolyMatrix eval_matrix(const PolyMatrix& m, const Rational& z0) { return m.eval(z0); }

PolyMatrix hstack(const std::vector<PolyMatrix>& parts) {
    if (parts.empty()) {
        return {};
    }
    std::size_t cols = 0;
    const std::size_t rows = parts.front().rows();
    for (const auto& p : parts) {
        if (p.rows() != rows) {
            throw ShapeMismatch("hstack of matrices with " + std::to_string(rows) + " and " +
                                std::to_string(p.rows()) + " rows");
        }
        cols += p.cols();
    }
    PolyMatrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        out.set_block(0, c0, p);
        c0 += p.cols();
    }
    return out;
}

PolyMatrix vstack(const std::vector<PolyMatrix>& parts) {
    if (parts.empty()) {
        return {};
    }
    std::size_t rows = 0;
    const std::size_t cols = parts.front().cols();
    for (const auto& p : parts) {
        if (p.cols() != cols) {
            throw ShapeMismatch("vstack of matrices with " + std::to_string(cols) + " and " +
                                std::to_string(p.cols()) + " columns");
        }
        rows += p.rows();
    }
    PolyMatrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
        out.set_block(r0, 0, p);
        r0 += p.rows();
    }
    return out;
}

PolyMatrix block_diag(const std::vector<PolyMatrix>& parts) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto& p : parts) {
        rows += p.rows();
        cols += p.cols();
    }
    PolyMatrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& p : parts) {
        out.set_block(r0, c0, p);
        r0 += p.rows();
        c0 += p.cols();
    }
    return out;
}

PolyMatrix chain(std::initializer_list<PolyMatrix> factors) {
    if (factors.size() == 0) {
        throw InvalidArgument("empty product chain");
    }
    auto it = factors.begin();
    PolyMatrix acc = *it;
    for (++it; it != factors.end(); ++it) {
        acc = acc * *it;
    }
    return acc;
}

std::string to_string(const PolyMatrix& m) {
    std::ostringstream os;
    os << m.rows() << "x" << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            os << (j ? ", " : "") << to_string(m(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace hankelmonde
