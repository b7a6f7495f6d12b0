#include "birack/smith.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "birack/error.hpp"

namespace birack {

namespace {

using boost::multiprecision::abs;

class Reducer {
public:
    Reducer(const IntegerMatrix& m, SmithOptions opt) : d_(m), opt_(opt) {
        if (opt_.transforms) {
            u_ = IntegerMatrix::identity(m.rows());
            v_ = IntegerMatrix::identity(m.cols());
            if (opt_.inverses) {
                uinv_ = IntegerMatrix::identity(m.rows());
                vinv_ = IntegerMatrix::identity(m.cols());
            }
        }
    }

    std::size_t run() {
        const std::size_t limit = std::min(d_.rows(), d_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            auto pivot = min_abs_in_block(t);
            if (!pivot) break;
            move_to(t, pivot->first, pivot->second);
            for (;;) {
                if (!clear_line(t)) {
                    auto p = min_abs_on_lines(t);
                    move_to(t, p.first, p.second);
                    continue;
                }
                auto bad = non_divisible(t);
                if (!bad) break;
                row_add(t, *bad, BigInt(1));
            }
            if (d_(t, t) < 0) row_negate(t);
        }
        return t;
    }

    IntegerMatrix d_, u_, v_, uinv_, vinv_;

private:
    std::optional<std::pair<std::size_t, std::size_t>> min_abs_in_block(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs;
        for (std::size_t i = t; i < d_.rows(); ++i) {
            for (std::size_t j = t; j < d_.cols(); ++j) {
                const BigInt& v = d_(i, j);
                if (v.is_zero()) continue;
                BigInt a = abs(v);
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = std::move(a);
                    if (best_abs == 1) return best;
                }
            }
        }
        return best;
    }

    std::pair<std::size_t, std::size_t> min_abs_on_lines(std::size_t t) const {
        std::pair<std::size_t, std::size_t> best{t, t};
        BigInt best_abs = abs(d_(t, t));
        auto consider = [&](std::size_t i, std::size_t j) {
            const BigInt& v = d_(i, j);
            if (v.is_zero()) return;
            BigInt a = abs(v);
            if (best_abs.is_zero() || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        };
        for (std::size_t i = t + 1; i < d_.rows(); ++i) consider(i, t);
        for (std::size_t j = t + 1; j < d_.cols(); ++j) consider(t, j);
        return best;
    }

    // Divides out column t below and row t right of the pivot; true when both are clear.
    bool clear_line(std::size_t t) {
        bool clear = true;
        const BigInt pivot = d_(t, t);
        for (std::size_t i = t + 1; i < d_.rows(); ++i) {
            if (d_(i, t).is_zero()) continue;
            const BigInt q = d_(i, t) / pivot;
            if (!q.is_zero()) row_add(i, t, -q);
            if (!d_(i, t).is_zero()) clear = false;
        }
        for (std::size_t j = t + 1; j < d_.cols(); ++j) {
            if (d_(t, j).is_zero()) continue;
            const BigInt q = d_(t, j) / pivot;
            if (!q.is_zero()) col_add(j, t, -q);
            if (!d_(t, j).is_zero()) clear = false;
        }
        return clear;
    }

    std::optional<std::size_t> non_divisible(std::size_t t) const {
        const BigInt& pivot = d_(t, t);
        if (abs(pivot) == 1) return std::nullopt;
        for (std::size_t i = t + 1; i < d_.rows(); ++i)
            for (std::size_t j = t + 1; j < d_.cols(); ++j)
                if (!d_(i, j).is_zero() && !(d_(i, j) % pivot).is_zero()) return i;
        return std::nullopt;
    }

    void move_to(std::size_t t, std::size_t i, std::size_t j) {
        if (i != t) row_swap(t, i);
        if (j != t) col_swap(t, j);
    }

    void row_swap(std::size_t a, std::size_t b) {
        d_.swap_rows(a, b);
        if (!opt_.transforms) return;
        u_.swap_rows(a, b);
        if (opt_.inverses) uinv_.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        d_.swap_cols(a, b);
        if (!opt_.transforms) return;
        v_.swap_cols(a, b);
        if (opt_.inverses) vinv_.swap_rows(a, b);
    }
    // row dst += k row src
    void row_add(std::size_t dst, std::size_t src, const BigInt& k) {
        d_.add_row_multiple(dst, src, k);
        if (!opt_.transforms) return;
        u_.add_row_multiple(dst, src, k);
        if (opt_.inverses) uinv_.add_col_multiple(src, dst, -k);
    }
    // col dst += k col src
    void col_add(std::size_t dst, std::size_t src, const BigInt& k) {
        d_.add_col_multiple(dst, src, k);
        if (!opt_.transforms) return;
        v_.add_col_multiple(dst, src, k);
        if (opt_.inverses) vinv_.add_row_multiple(src, dst, -k);
    }
    void row_negate(std::size_t i) {
        d_.negate_row(i);
        if (!opt_.transforms) return;
        u_.negate_row(i);
        if (opt_.inverses) uinv_.negate_col(i);
    }

    SmithOptions opt_;
};

}  // namespace

std::vector<BigInt> SmithDecomposition::invariant_factors() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m, SmithOptions options) {
    if (options.inverses) options.transforms = true;
    Reducer r(m, options);
    SmithDecomposition s;
    s.rank = r.run();
    s.D = std::move(r.d_);
    s.U = std::move(r.u_);
    s.V = std::move(r.v_);
    s.U_inverse = std::move(r.uinv_);
    s.V_inverse = std::move(r.vinv_);
    s.has_inverses = options.inverses;
    return s;
}

std::vector<BigInt> invariant_factors(const IntegerMatrix& m) {
    return smith_normal_form(m, SmithOptions{false, false}).invariant_factors();
}

BigInt determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::OutOfRange, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k).is_zero()) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

SmithValidation validate_smith(const IntegerMatrix& m, const SmithDecomposition& s) {
    SmithValidation v;
    if (s.U.rows() != m.rows() || s.V.rows() != m.cols()) return v;
    v.product = (s.U * m * s.V) == s.D;

    v.diagonal = true;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && !s.D(i, j).is_zero()) v.diagonal = false;
    for (std::size_t i = 0; i < std::min(s.D.rows(), s.D.cols()); ++i)
        if (s.D(i, i) < 0) v.diagonal = false;

    v.divisibility = true;
    const std::size_t diag = std::min(s.D.rows(), s.D.cols());
    for (std::size_t i = 0; i < diag; ++i) {
        const bool zero = s.D(i, i).is_zero();
        if (zero != (i >= s.rank)) v.divisibility = false;
        if (i + 1 < s.rank && !(s.D(i + 1, i + 1) % s.D(i, i)).is_zero()) v.divisibility = false;
    }

    auto unimodular = [](const IntegerMatrix& a, const IntegerMatrix& inv, bool have_inverse) {
        if (have_inverse) return a * inv == IntegerMatrix::identity(a.rows());
        const BigInt det = determinant(a);
        return det == 1 || det == -1;
    };
    v.u_unimodular = unimodular(s.U, s.U_inverse, s.has_inverses);
    v.v_unimodular = unimodular(s.V, s.V_inverse, s.has_inverses);
    return v;
}

IntegerSpan::IntegerSpan(const IntegerMatrix& generators) : snf_(smith_normal_form(generators)) {}

std::optional<std::vector<BigInt>> IntegerSpan::solve(const std::vector<BigInt>& v) const {
    const std::size_t rows = snf_.U.rows();
    if (v.size() != rows) throw Error(ErrorKind::OutOfRange, "span query has the wrong dimension");
    // D (V^{-1} c) = U v
    std::vector<BigInt> w(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt acc = 0;
        for (std::size_t k = 0; k < rows; ++k) {
            if (!v[k].is_zero() && !snf_.U(i, k).is_zero()) acc += snf_.U(i, k) * v[k];
        }
        w[i] = std::move(acc);
    }
    std::vector<BigInt> y(snf_.V.rows());
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < snf_.rank) {
            if (!(w[i] % snf_.D(i, i)).is_zero()) return std::nullopt;
            y[i] = w[i] / snf_.D(i, i);
        } else if (!w[i].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<BigInt> c(snf_.V.rows());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t k = 0; k < snf_.rank; ++k)
            if (!y[k].is_zero()) c[i] += snf_.V(i, k) * y[k];
    return c;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
    const SmithDecomposition s = smith_normal_form(m);
    IntegerMatrix k(m.cols(), m.cols() - s.rank);
    for (std::size_t j = s.rank; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) k(i, j - s.rank) = s.V(i, j);
    return k;
}

}  // namespace birack

namespace birack {

IntegerMatrix SparseIntegerMatrix::to_dense() const {
    IntegerMatrix d(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, v] : columns[j]) d(i, j) = v;
    return d;
}

SparseIntegerMatrix SparseIntegerMatrix::transpose() const {
    SparseIntegerMatrix t{cols, rows, std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>(rows)};
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [i, v] : columns[j]) t.columns[i].emplace_back(j, v);
    return t;
}

std::size_t SparseIntegerMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;

// dst - k * src into out; false on 64-bit overflow. Columns present in the
// result but absent from dst are appended to fresh.
bool merge_rows(const SparseRow& dst, const SparseRow& src, std::int64_t k, SparseRow& out,
                std::vector<std::size_t>& fresh) {
    out.clear();
    fresh.clear();
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(dst[a++]);
            continue;
        }
        std::int64_t v = 0;
        if (__builtin_mul_overflow(k, src[b].second, &v) || v == std::numeric_limits<std::int64_t>::min()) return false;
        v = -v;
        const std::size_t col = src[b].first;
        const bool shared = a < dst.size() && dst[a].first == col;
        if (shared && __builtin_add_overflow(v, dst[a++].second, &v)) return false;
        ++b;
        if (v == 0) continue;
        if (!shared) fresh.push_back(col);
        out.emplace_back(col, v);
    }
    return true;
}

struct Overflow {};

// Row-oriented sparse elimination. Pivots that divide their whole row and
// column are split off as diagonal blocks; otherwise one Euclid step shrinks
// the smallest entry. The cokernel of the input is Z^(cols - rank) plus the
// sum of Z_d over recorded pivots d plus whatever the remainder contributes.
class SparseReducer {
public:
    explicit SparseReducer(const SparseIntegerMatrix& m)
        : rows_(m.rows), col_rows_(m.cols), row_alive_(m.rows, true), col_alive_(m.cols, true) {
        for (std::size_t j = 0; j < m.cols; ++j)
            for (const auto& [i, v] : m.columns[j]) {
                rows_[i].emplace_back(j, v);
                col_rows_[j].push_back(i);
            }
    }

    void run() {
        try {
            for (;;) {
                eliminate_units();
                if (!reduce_smallest()) break;
            }
        } catch (const Overflow&) {
        }
    }

    std::size_t units = 0;
    std::vector<std::int64_t> pivots;  // |pivot| > 1

    IntegerMatrix remainder() const {
        std::vector<std::size_t> live_rows, col_index(col_rows_.size(), col_rows_.size());
        std::size_t live_cols = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_alive_[r] || rows_[r].empty()) continue;
            live_rows.push_back(r);
            for (const auto& [c, v] : rows_[r])
                if (col_index[c] == col_rows_.size()) col_index[c] = live_cols++;
        }
        IntegerMatrix rest(live_rows.size(), live_cols);
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows_[live_rows[i]]) rest(i, col_index[c]) = v;
        return rest;
    }

private:
    std::int64_t entry(std::size_t r, std::size_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, std::numeric_limits<std::int64_t>::min()));
        return it != row.end() && it->first == c ? it->second : 0;
    }

    // Live rows with a nonzero in column c; prunes stale entries.
    const std::vector<std::size_t>& column(std::size_t c) {
        auto& list = col_rows_[c];
        std::erase_if(list, [&](std::size_t r) { return !row_alive_[r] || entry(r, c) == 0; });
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        return list;
    }

    // row r -= k * row p
    void row_op(std::size_t r, std::size_t p, std::int64_t k) {
        if (!merge_rows(rows_[r], rows_[p], k, scratch_, fresh_)) throw Overflow{};
        rows_[r].swap(scratch_);
        // A column list may hold r already from before a cancellation; column() prunes
        // stale entries, and duplicates are removed there as well.
        for (std::size_t c : fresh_) col_rows_[c].push_back(r);
    }

    // col j -= k * col c; all-or-nothing, so an overflow leaves the matrix intact.
    void col_op(std::size_t j, std::size_t c, std::int64_t k) {
        const std::vector<std::size_t> targets = column(c);
        std::vector<std::int64_t> updated(targets.size());
        for (std::size_t t = 0; t < targets.size(); ++t) {
            std::int64_t delta = 0;
            if (__builtin_mul_overflow(k, entry(targets[t], c), &delta) ||
                __builtin_sub_overflow(entry(targets[t], j), delta, &updated[t]))
                throw Overflow{};
        }
        for (std::size_t t = 0; t < targets.size(); ++t) {
            auto& row = rows_[targets[t]];
            auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(j, std::numeric_limits<std::int64_t>::min()));
            if (it != row.end() && it->first == j) {
                if (updated[t] == 0) row.erase(it);
                else it->second = updated[t];
            } else if (updated[t] != 0) {
                row.insert(it, {j, updated[t]});
                col_rows_[j].push_back(targets[t]);
            }
        }
    }

    // Clears column c with row p, whose entry there divides every other one,
    // then retires row p and column c.
    void split_off(std::size_t p, std::size_t c) {
        const std::int64_t pv = entry(p, c);
        const std::vector<std::size_t> targets = column(c);
        for (std::size_t r : targets)
            if (r != p) row_op(r, p, entry(r, c) / pv);
        row_alive_[p] = false;
        col_alive_[c] = false;
        if (pv == 1 || pv == -1) ++units;
        else pivots.push_back(pv < 0 ? -pv : pv);
    }

    void eliminate_units() {
        for (bool progress = true; progress;) {
            progress = false;
            std::vector<std::size_t> order;
            for (std::size_t r = 0; r < rows_.size(); ++r)
                if (row_alive_[r] && !rows_[r].empty()) order.push_back(r);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t x, std::size_t y) { return rows_[x].size() < rows_[y].size(); });
            for (std::size_t p : order) {
                if (!row_alive_[p] || rows_[p].empty()) continue;
                // Unit entry of row p in the column touching the fewest rows.
                std::size_t pc = col_rows_.size(), best = 0;
                for (const auto& [c, v] : rows_[p]) {
                    if (v != 1 && v != -1) continue;
                    const std::size_t len = column(c).size();
                    if (pc == col_rows_.size() || len < best) {
                        pc = c;
                        best = len;
                    }
                }
                if (pc == col_rows_.size()) continue;
                split_off(p, pc);
                progress = true;
            }
        }
    }

    // False once the live matrix is empty.
    bool reduce_smallest() {
        std::size_t p = rows_.size(), c = 0;
        std::int64_t best = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_alive_[r]) continue;
            for (const auto& [j, v] : rows_[r]) {
                const std::int64_t a = v < 0 ? -v : v;
                if (p == rows_.size() || a < best) {
                    p = r;
                    c = j;
                    best = a;
                }
            }
        }
        if (p == rows_.size()) return false;
        const std::int64_t pv = entry(p, c);
        for (std::size_t r : std::vector<std::size_t>(column(c))) {
            if (r != p && entry(r, c) % pv != 0) {
                row_op(r, p, entry(r, c) / pv);
                return true;
            }
        }
        for (const auto& [j, v] : SparseRow(rows_[p])) {
            if (j != c && v % pv != 0) {
                col_op(j, c, v / pv);
                return true;
            }
        }
        split_off(p, c);
        return true;
    }

    std::vector<SparseRow> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<bool> row_alive_, col_alive_;
    SparseRow scratch_;
    std::vector<std::size_t> fresh_;
};

}  // namespace

std::vector<BigInt> invariant_factors(const SparseIntegerMatrix& m) {
    SparseReducer reducer(m);
    reducer.run();
    // Recombine the split-off blocks with the remainder into one divisibility chain.
    std::vector<BigInt> nontrivial;
    for (auto v : reducer.pivots) nontrivial.emplace_back(v);
    std::size_t ones = reducer.units;
    for (auto& f : invariant_factors(reducer.remainder())) {
        if (f == 1) ++ones;
        else nontrivial.push_back(std::move(f));
    }
    IntegerMatrix diag(nontrivial.size(), nontrivial.size());
    for (std::size_t i = 0; i < nontrivial.size(); ++i) diag(i, i) = nontrivial[i];
    std::vector<BigInt> out(ones, BigInt(1));
    for (auto& f : invariant_factors(diag)) out.push_back(std::move(f));
    return out;
}

}  // namespace birack
