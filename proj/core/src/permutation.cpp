#include "birack/permutation.hpp"

#include <numeric>

#include "birack/error.hpp"

namespace birack {

bool Permutation::is_permutation(std::span<const Element> images) noexcept {
    const auto n = images.size();
    std::vector<bool> seen(n, false);
    for (Element v : images) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)]) return false;
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
    if (!is_permutation(images_)) {
        throw Error(ErrorKind::NonBijectiveColumn, "image list is not a permutation of 1.." +
                                                       std::to_string(images_.size()));
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Element> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::inverse() const {
    std::vector<Element> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<Element>(i + 1);
    }
    return Permutation(std::move(inv), Unchecked{});
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw Error(ErrorKind::OutOfRange, "composing permutations of different degree");
    std::vector<Element> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p(q.images_[i]);
    return Permutation(std::move(out), Permutation::Unchecked{});
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<Element>(i + 1)) return false;
    }
    return true;
}

std::size_t Permutation::order() const {
    // lcm of cycle lengths
    std::size_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
            seen[x] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation Permutation::power(std::size_t k) const {
    Permutation result = identity(size());
    for (std::size_t i = 0; i < k; ++i) result = *this * result;
    return result;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == static_cast<Element>(start + 1)) continue;
        out += '(';
        bool first = true;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x + 1);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace birack
