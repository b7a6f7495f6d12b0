#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birack/permutation.hpp"

namespace birack {

// table[x - 1] is the map indexed by element x (alpha_x, beta_x, ...).
using PermutationTable = std::vector<Permutation>;

// 2n x n integer matrix: upper block (i, j) = alpha_j(i), lower block (i, j) = beta_j(i).
using BirackMatrix = std::vector<std::vector<int>>;

struct AxiomViolation {
    int axiom;                      // 1, 2 or 3
    int clause;                     // which identity inside the axiom, 1-based
    std::vector<Element> witness;   // (x) or (x, y) or (x, y, z)
    std::string detail;
};

struct AxiomReport {
    std::size_t size = 0;
    bool axiom1 = true;
    bool axiom2 = true;
    bool axiom3 = true;
    bool kink_map_missing = false;
    bool kink_map_not_unique = false;
    std::vector<AxiomViolation> violations;
    std::optional<Permutation> kink_map;
    std::optional<PermutationTable> alpha_bar;
    std::optional<PermutationTable> beta_bar;

    bool ok() const noexcept { return axiom1 && axiom2 && axiom3; }
};

// Exhaustive O(n^3) verification. Axiom (ii) is tested by inverting the global
// sideways map S(x, y) = (alpha_x(y), beta_y(x)) on all n^2 pairs; component-wise
// bijectivity of alpha_x, beta_y is not enough for S to be invertible.
AxiomReport check_axioms(const PermutationTable& alpha, const PermutationTable& beta);

// Raw rows: rows[x - 1] lists alpha_x(1..n). Malformed rows raise NonBijectiveColumn.
AxiomReport check_axioms(const std::vector<std::vector<Element>>& alpha_rows,
                         const std::vector<std::vector<Element>>& beta_rows);

// For each x, the unique y with alpha_y(x) = beta_x(y).
Permutation derive_kink_map(const PermutationTable& alpha, const PermutationTable& beta);

// Finite augmented birack on {1..n}. Immutable after construction; all derived
// maps are computed once and cached.
class AugmentedBirack {
public:
    static AugmentedBirack from_tables(PermutationTable alpha, PermutationTable beta);
    static AugmentedBirack from_matrix(const BirackMatrix& matrix);

    std::size_t size() const noexcept { return n_; }

    const Permutation& alpha(Element x) const { return alpha_[index(x)]; }
    const Permutation& beta(Element x) const { return beta_[index(x)]; }
    const Permutation& alpha_bar(Element x) const { return alpha_bar_[index(x)]; }
    const Permutation& beta_bar(Element x) const { return beta_bar_[index(x)]; }

    // Unchecked fast paths used in inner loops: alpha_x(y), beta_x(y), ...
    Element alpha(Element x, Element y) const noexcept { return alpha_tab_[flat(x, y)]; }
    Element beta(Element x, Element y) const noexcept { return beta_tab_[flat(x, y)]; }
    Element alpha_inv(Element x, Element y) const noexcept { return alpha_inv_tab_[flat(x, y)]; }
    Element beta_inv(Element x, Element y) const noexcept { return beta_inv_tab_[flat(x, y)]; }
    Element alpha_bar(Element x, Element y) const noexcept { return alpha_bar_tab_[flat(x, y)]; }
    Element beta_bar(Element x, Element y) const noexcept { return beta_bar_tab_[flat(x, y)]; }

    const PermutationTable& alpha_table() const noexcept { return alpha_; }
    const PermutationTable& beta_table() const noexcept { return beta_; }

    const Permutation& kink_map() const noexcept { return pi_; }
    std::size_t characteristic() const noexcept { return characteristic_; }
    bool is_biquandle() const noexcept { return characteristic_ == 1; }

    // S(x, y) = (alpha_x(y), beta_y(x))
    std::pair<Element, Element> sideways(Element x, Element y) const;
    // S^{-1}(y, x) = (beta_bar_y(x), alpha_bar_x(y))
    std::pair<Element, Element> sideways_inverse(Element y, Element x) const;
    // B(x, y) = (beta_x^{-1}(y), alpha_{beta_x^{-1}(y)}(x))
    std::pair<Element, Element> birack_map(Element x, Element y) const;

    BirackMatrix to_matrix() const;

private:
    AugmentedBirack() = default;

    std::size_t index(Element x) const;
    std::size_t flat(Element x, Element y) const noexcept {
        return static_cast<std::size_t>(x - 1) * n_ + static_cast<std::size_t>(y - 1);
    }

    std::size_t n_ = 0;
    PermutationTable alpha_, beta_, alpha_bar_, beta_bar_;
    Permutation pi_;
    std::size_t characteristic_ = 1;
    std::vector<Element> alpha_tab_, beta_tab_, alpha_inv_tab_, beta_inv_tab_, alpha_bar_tab_, beta_bar_tab_;
};

// (t, s, r)-birack on Z_n: alpha_x(y) = r y, beta_y(x) = t x - t s y. Residue 0 is
// represented by the element n.
AugmentedBirack tsr_birack(int modulus, int t, int s, int r);

// Splits a matrix into its alpha and beta tables; throws NonBijectiveColumn.
std::pair<PermutationTable, PermutationTable> matrix_to_tables(const BirackMatrix& matrix);

// Text format: first non-comment line n, then 2n rows of n integers; '#' starts a comment.
BirackMatrix parse_birack_matrix(std::string_view text);
BirackMatrix read_birack_matrix(const std::string& path);
AugmentedBirack parse_birack_text(std::string_view text);
AugmentedBirack read_birack_file(const std::string& path);
std::string render_birack_text(const AugmentedBirack& b);

}  // namespace birack
