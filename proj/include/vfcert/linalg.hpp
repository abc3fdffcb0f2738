#ifndef VFCERT_LINALG_HPP
#define VFCERT_LINALG_HPP

#include <optional>
#include <vector>

#include "vfcert/poly.hpp"
#include "vfcert/rational.hpp"

namespace vfcert {

/// Dense exact rational matrix, row major.
class QMatrix {
  public:
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix scaled(const Rational& c) const;
    QMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    /// Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    std::optional<QMatrix> inverse() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Basis of the right kernel in reduced echelon convention: one vector per
/// free column, with entry 1 at that column. Empty iff the kernel is trivial.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// Monic characteristic polynomial det(tI - m) over the variable "t",
/// computed exactly by Faddeev-LeVerrier.
Poly char_poly(const QMatrix& m);

}  // namespace vfcert

#endif
