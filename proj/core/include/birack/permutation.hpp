#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace birack {

// Elements of a finite birack are the integers 1..n.
using Element = int;

// A bijection of {1..n}, stored as its image list.
class Permutation {
public:
    Permutation() = default;

    // Throws Error(NonBijectiveColumn) unless `images` is a permutation of 1..n.
    explicit Permutation(std::vector<Element> images);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }

    Element operator()(Element x) const { return images_[static_cast<std::size_t>(x - 1)]; }

    std::span<const Element> images() const noexcept { return images_; }

    Permutation inverse() const;

    // (p * q)(x) = p(q(x))
    friend Permutation operator*(const Permutation& p, const Permutation& q);

    bool is_identity() const noexcept;

    // Smallest k >= 1 with p^k = id.
    std::size_t order() const;

    Permutation power(std::size_t k) const;

    // Disjoint-cycle notation without fixed points, e.g. "(1 4)(2 3)"; "()" for id.
    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

    static bool is_permutation(std::span<const Element> images) noexcept;

private:
    struct Unchecked {};
    Permutation(std::vector<Element> images, Unchecked) : images_(std::move(images)) {}

    std::vector<Element> images_;
};

}  // namespace birack
