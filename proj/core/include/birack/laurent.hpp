#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace birack {

// sum c_k u^k with integer exponents of either sign; zero terms are never stored.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(std::int64_t coeff, int exponent);

    const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t coefficient(int exponent) const;

    void add_term(std::int64_t coeff, int exponent);
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    std::int64_t at_one() const noexcept;

    // u -> u^{-1}
    LaurentPolynomial bar() const;

    // Ascending exponents: "8+8u", "7+6u^-1", "6u^-2+19", "0". Unit coefficients
    // are dropped except on the constant term.
    std::string to_string() const;

    // Inverse of to_string; also tolerates spaces, '*' and U+2212.
    static LaurentPolynomial parse(const std::string& text);

private:
    std::map<int, std::int64_t> terms_;
};

}  // namespace birack
