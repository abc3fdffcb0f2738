#include "vfcert/linalg.hpp"

#include <stdexcept>

namespace vfcert {

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return QMatrix(0, 0);
    QMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("QMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: size mismatch in product");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMatrix: size mismatch in sum");
    QMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("QMatrix: size mismatch in difference");
    QMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational QMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<std::size_t> QMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Rational inv = at(row, col).reciprocal();
        for (std::size_t j = 0; j < cols_; ++j) at(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || at(i, col).is_zero()) continue;
            Rational f = at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix copy(*this);
    return copy.rref().size();
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of non-square matrix");
    QMatrix aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Rational(1);
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    QMatrix inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    QMatrix r(m);
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[f] = Rational(1);
        for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r.at(row, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Poly char_poly(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
    std::size_t n = m.rows();
    std::vector<std::string> tvar{"t"};
    // Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I
    std::vector<Rational> c(n + 1, Rational(0));
    c[0] = Rational(1);
    QMatrix M = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix AM = m * M;
        c[k] = -(AM.trace() / Rational(static_cast<long>(k)));
        if (k < n) {
            M = AM;
            for (std::size_t i = 0; i < n; ++i) M.at(i, i) += c[k];
        }
    }
    Poly p(tvar);
    for (std::size_t k = 0; k <= n; ++k)
        p.add_term(Monomial(std::vector<std::uint32_t>{static_cast<std::uint32_t>(n - k)}), c[k]);
    return p;
}

}  // namespace vfcert
