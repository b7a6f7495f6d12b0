#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "birack/algebra.hpp"
#include "birack/integer_matrix.hpp"
#include "birack/smith.hpp"

namespace birack {

using Tuple = std::vector<Element>;

// Element of C_n = Z[X^n]. Zero coefficients are never stored.
class Chain {
public:
    Chain() = default;
    explicit Chain(std::size_t degree) : degree_(degree) {}

    std::size_t degree() const noexcept { return degree_; }
    const std::map<Tuple, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const Tuple& t, std::int64_t coeff);
    Chain& operator+=(const Chain& other);

    std::string to_string() const;

    friend bool operator==(const Chain&, const Chain&) = default;
    friend auto operator<=>(const Chain& a, const Chain& b) { return a.terms_ <=> b.terms_; }

private:
    std::size_t degree_ = 0;
    std::map<Tuple, std::int64_t> terms_;
};

// k is 1-based. partial_prime deletes entry k; partial_dprime deletes it and acts
// by beta_{x_k} on the entries before k and by alpha_{x_k} on those after.
Tuple partial_prime(std::size_t k, const Tuple& t);
Tuple partial_dprime(const AugmentedBirack& b, std::size_t k, const Tuple& t);

enum class BoundaryPart { Full, PrimeOnly, DoublePrimeOnly };

// sum_k (-1)^k (d'_k - d''_k), or one of the two halves alone.
Chain boundary(const AugmentedBirack& b, const Chain& c, BoundaryPart part = BoundaryPart::Full);

// d_{n-1} d_n = 0 checked generator by generator on C_n; returns the first
// tuple whose double boundary is nonzero.
std::optional<Tuple> double_boundary_failure(const AugmentedBirack& b, std::size_t degree,
                                             BoundaryPart part = BoundaryPart::Full);

// Lexicographic tuple basis of C_n; position of a tuple and its inverse.
std::size_t basis_size(std::size_t set_size, std::size_t degree);
std::size_t tuple_index(std::size_t set_size, const Tuple& t);
Tuple tuple_at(std::size_t set_size, std::size_t degree, std::size_t index);

// Largest admissible |X|^n; 20000 unless BIRACK_MAX_BASIS overrides it.
std::size_t max_basis_size();

// d_n : C_n -> C_{n-1} with C_0 = Z on the empty tuple (so d_1 = 0) and d_0 : C_0 -> 0.
IntegerMatrix boundary_matrix(const AugmentedBirack& b, std::size_t degree,
                              BoundaryPart part = BoundaryPart::Full);

// The same map in sparse form; this is what the homology routines reduce.
SparseIntegerMatrix sparse_boundary_matrix(const AugmentedBirack& b, std::size_t degree,
                                           BoundaryPart part = BoundaryPart::Full);

// Finitely generated abelian group Z^free_rank + sum Z_{t_i}, t_1 | t_2 | ...
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    std::string to_string() const;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Normalizes a list of cyclic orders (0 meaning Z, 1 dropped) to invariant factors.
HomologyGroup group_from_cyclic_orders(const std::vector<BigInt>& orders);

HomologyGroup homology_group(const AugmentedBirack& b, std::size_t degree);

// Over Z by the transposed complex; with a modulus m, H^n(C; Z_m) through the
// universal coefficient theorem applied to H_n and H_{n-1}.
HomologyGroup cohomology_group(const AugmentedBirack& b, std::size_t degree,
                               std::optional<std::int64_t> modulus = std::nullopt);

// sum_{k=1}^N (x_1, ..., pi^k(x_j), pi^{k-1}(x_j), ..., x_n) over all positions j
// and all fillings; duplicates removed, sorted.
std::vector<Chain> degenerate_generators(const AugmentedBirack& b, std::size_t degree);

// Columns are the degenerate generators of the given degree in C_degree coordinates.
IntegerMatrix degenerate_matrix(const AugmentedBirack& b, std::size_t degree);

// Checks that d(g) is an integer combination of degree-1 lower degenerate
// generators for every degenerate generator g. Returns the generators that fail.
std::vector<Chain> degenerate_closure_failures(const AugmentedBirack& b, std::size_t degree);

// Integer function on X x X, stored row-major: value(i, j) at (i-1)*n + (j-1).
class Cochain2 {
public:
    Cochain2() = default;
    explicit Cochain2(std::size_t n) : n_(n), values_(n * n, 0) {}
    Cochain2(std::size_t n, std::vector<std::int64_t> values);

    // Characteristic function of the pair (i, j).
    static Cochain2 chi(std::size_t n, Element i, Element j);

    std::size_t size() const noexcept { return n_; }
    std::int64_t operator()(Element i, Element j) const { return values_[flat(i, j)]; }
    std::int64_t& at(Element i, Element j) { return values_[flat(i, j)]; }
    const std::vector<std::int64_t>& values() const noexcept { return values_; }

    bool is_zero() const noexcept;
    std::int64_t evaluate(const Chain& c) const;

    Cochain2& operator+=(const Cochain2& o);
    friend Cochain2 operator+(Cochain2 a, const Cochain2& b) { return a += b; }
    friend Cochain2 operator*(std::int64_t k, Cochain2 a);
    friend bool operator==(const Cochain2&, const Cochain2&) = default;

    // "chi(2,1)+chi(2,4)+2*chi(3,1)"; "0" when zero.
    std::string to_string() const;

private:
    std::size_t flat(Element i, Element j) const;

    std::size_t n_ = 0;
    std::vector<std::int64_t> values_;
};

// Lines "i j c" meaning c * chi(i, j); repeated pairs accumulate; '#' comments.
Cochain2 parse_cochain_text(std::string_view text, std::size_t n);
Cochain2 read_cochain_file(const std::string& path, std::size_t n);
std::string render_cochain_text(const Cochain2& phi);

using Cochain1 = std::vector<std::int64_t>;

// phi(x, y) = psi(y) - psi(alpha_x(y)) - psi(x) + psi(beta_y(x))
Cochain2 evaluate_coboundary(const AugmentedBirack& b, const Cochain1& psi);

// The six-term identity for phi o d_3 = 0, written out pointwise; the first
// failing triple is returned.
std::optional<Tuple> cocycle_condition_failure(const AugmentedBirack& b, const Cochain2& phi);
bool is_2_cocycle(const AugmentedBirack& b, const Cochain2& phi);
bool vanishes_on_degenerates(const AugmentedBirack& b, const Cochain2& phi);
bool is_reduced_2_cocycle(const AugmentedBirack& b, const Cochain2& phi);

struct ReducedCocycles {
    std::optional<std::int64_t> modulus;
    std::vector<Cochain2> basis;          // lattice basis over Z, generators over Z_m
    std::vector<Cochain2> coboundaries;   // d psi for psi = chi_1, ..., chi_n
    HomologyGroup cocycle_group;          // the solution space as an abstract group
    std::optional<HomologyGroup> quotient;  // cocycles modulo coboundaries (over Z only)
};

// {phi : phi o d_3 = 0 and phi(g) = 0 on every degenerate 2-generator}.
ReducedCocycles reduced_2_cocycles(const AugmentedBirack& b,
                                   std::optional<std::int64_t> modulus = std::nullopt);

// Membership of phi in the solution space (mod m when a modulus is given).
bool in_reduced_cocycle_space(const AugmentedBirack& b, const Cochain2& phi,
                              std::optional<std::int64_t> modulus = std::nullopt);

}  // namespace birack
