#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <optional>
#include <vector>

#include "birack/integer_matrix.hpp"

namespace birack {

// D = U * M * V with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank, all d_i > 0.
// When requested, the inverses of U and V are accumulated alongside so that
// unimodularity can be certified by a product instead of a determinant.
struct SmithDecomposition {
    IntegerMatrix D;
    IntegerMatrix U;
    IntegerMatrix V;
    IntegerMatrix U_inverse;
    IntegerMatrix V_inverse;
    std::size_t rank = 0;
    bool has_inverses = false;

    std::vector<BigInt> invariant_factors() const;
};

struct SmithOptions {
    bool transforms = true;
    bool inverses = false;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m, SmithOptions options = {});

// Nonzero invariant factors only; skips all transform bookkeeping.
std::vector<BigInt> invariant_factors(const IntegerMatrix& m);

struct SmithValidation {
    bool product = false;        // D == U M V
    bool diagonal = false;       // off-diagonal entries vanish, diagonal nonnegative
    bool divisibility = false;   // d_i | d_{i+1}, zeros trailing
    bool u_unimodular = false;
    bool v_unimodular = false;

    bool ok() const noexcept { return product && diagonal && divisibility && u_unimodular && v_unimodular; }
};

// Unimodularity is certified by U * U^{-1} = I when inverses were tracked, and
// by an exact fraction-free determinant otherwise.
SmithValidation validate_smith(const IntegerMatrix& m, const SmithDecomposition& s);

// Column-sparse integer matrix with machine-word entries; boundary matrices have
// a bounded number of small entries per column.
struct SparseIntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // columns[j] lists (row, value) with value != 0, rows strictly increasing.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

    IntegerMatrix to_dense() const;
    SparseIntegerMatrix transpose() const;
    std::size_t nonzeros() const;
};

// Same result as invariant_factors(m.to_dense()). Elimination runs on sparse
// rows with 64-bit entries; whatever is left once an operation would overflow
// goes through the dense reduction.
std::vector<BigInt> invariant_factors(const SparseIntegerMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntegerMatrix& m);

// The lattice spanned by the columns of a matrix. One decomposition serves any
// number of membership queries.
class IntegerSpan {
public:
    explicit IntegerSpan(const IntegerMatrix& generators);

    std::size_t ambient_dimension() const noexcept { return snf_.U.rows(); }
    std::size_t generator_count() const noexcept { return snf_.V.rows(); }

    // Coefficients c with generators * c = v, or nullopt when v is outside the span.
    std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& v) const;
    bool contains(const std::vector<BigInt>& v) const { return solve(v).has_value(); }

private:
    SmithDecomposition snf_;
};

// Integer kernel {x : m x = 0} as the columns of a matrix (a lattice basis).
IntegerMatrix integer_kernel(const IntegerMatrix& m);

}  // namespace birack
