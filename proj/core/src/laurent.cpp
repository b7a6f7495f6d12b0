#include "birack/laurent.hpp"

#include <cctype>
#include <sstream>

#include "birack/error.hpp"

namespace birack {

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
    LaurentPolynomial p;
    p.add_term(coeff, exponent);
    return p;
}

std::int64_t LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(std::int64_t coeff, int exponent) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, coeff);
    if (!fresh && (it->second += coeff) == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(c, e);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(-c, e);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(c1 * c2, e1 + e2);
    return *this = std::move(out);
}

std::int64_t LaurentPolynomial::at_one() const noexcept {
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

LaurentPolynomial LaurentPolynomial::bar() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (c < 0) out << '-';
        else if (!first) out << '+';
        const std::int64_t a = c < 0 ? -c : c;
        if (e == 0 || a != 1) out << a;
        if (e != 0) {
            out << 'u';
            if (e != 1) out << '^' << e;
        }
        first = false;
    }
    return out.str();
}

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "\xE2\x88\x92") == 0) {
            s += '-';
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '*') {
            s += text[i];
        }
    }
    auto fail = [&] { return Error(ErrorKind::ParseError, "not a Laurent polynomial in u: '" + text + "'"); };
    LaurentPolynomial p;
    if (s == "0") return p;
    std::size_t i = 0;
    auto read_int = [&](long long& v) {
        const std::size_t start = i;
        long long acc = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) acc = acc * 10 + (s[i++] - '0');
        if (i > start) v = acc;
        return i > start;
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') sign = s[i++] == '-' ? -1 : 1;
        else if (i != 0) throw fail();
        long long coeff = 1;
        const bool has_coeff = read_int(coeff);
        int exponent = 0;
        if (i < s.size() && s[i] == 'u') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                const bool braced = i < s.size() && s[i] == '{';
                if (braced) ++i;
                int esign = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) esign = s[i++] == '-' ? -1 : 1;
                long long e = 0;
                if (!read_int(e)) throw fail();
                if (braced && (i >= s.size() || s[i++] != '}')) throw fail();
                exponent = static_cast<int>(esign * e);
            }
        } else if (!has_coeff) {
            throw fail();
        }
        p.add_term(sign * coeff, exponent);
    }
    return p;
}

}  // namespace birack
