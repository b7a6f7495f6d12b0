#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace birack {

// Expression templates off: simpler call sites, and no loss for the small values that dominate.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

// Dense row-major matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntegerMatrix transpose() const;
    bool is_zero() const;
    std::size_t nonzeros() const;

    // Skips zero entries of the left factor, so sparse boundary matrices multiply cheaply.
    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row dst += k * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    // col dst += k * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

}  // namespace birack
