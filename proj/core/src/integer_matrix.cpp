#include "birack/integer_matrix.hpp"

#include <sstream>
#include <utility>

#include "birack/error.hpp"

namespace birack {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error(ErrorKind::OutOfRange, "ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::size_t IntegerMatrix::nonzeros() const {
    std::size_t count = 0;
    for (const auto& v : data_)
        if (!v.is_zero()) ++count;
    return count;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::OutOfRange, "matrix product dimension mismatch");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const BigInt& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k.is_zero()) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const BigInt& s = (*this)(src, c);
        if (!s.is_zero()) (*this)(dst, c) += k * s;
    }
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k.is_zero()) return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const BigInt& s = (*this)(r, src);
        if (!s.is_zero()) (*this)(r, dst) += k * s;
    }
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntegerMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
        out << '\n';
    }
    return out.str();
}

}  // namespace birack
