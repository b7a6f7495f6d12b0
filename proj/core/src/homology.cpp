#include "birack/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "birack/error.hpp"
#include "birack/smith.hpp"

namespace birack {

void Chain::add(const Tuple& t, std::int64_t coeff) {
    if (coeff == 0) return;
    if (t.size() != degree_) throw Error(ErrorKind::OutOfRange, "tuple length does not match chain degree");
    auto [it, inserted] = terms_.try_emplace(t, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Chain& Chain::operator+=(const Chain& other) {
    for (const auto& [t, c] : other.terms_) add(t, c);
    return *this;
}

std::string Chain::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (c < 0) out << (first ? "-" : " - ");
        else if (!first) out << " + ";
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) out << a;
        out << '(';
        for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
        out << ')';
        first = false;
    }
    return out.str();
}

Tuple partial_prime(std::size_t k, const Tuple& t) {
    if (k < 1 || k > t.size()) throw Error(ErrorKind::OutOfRange, "face index out of range");
    Tuple out;
    out.reserve(t.size() - 1);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != k - 1) out.push_back(t[i]);
    return out;
}

Tuple partial_dprime(const AugmentedBirack& b, std::size_t k, const Tuple& t) {
    if (k < 1 || k > t.size()) throw Error(ErrorKind::OutOfRange, "face index out of range");
    const Element xk = t[k - 1];
    Tuple out;
    out.reserve(t.size() - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) out.push_back(b.beta(xk, t[i]));
    for (std::size_t i = k; i < t.size(); ++i) out.push_back(b.alpha(xk, t[i]));
    return out;
}

namespace {

using boost::multiprecision::abs;

void check_elements(const AugmentedBirack& b, const Tuple& t) {
    for (Element x : t)
        if (x < 1 || static_cast<std::size_t>(x) > b.size())
            throw Error(ErrorKind::OutOfRange, "tuple entry " + std::to_string(x) + " outside 1.." + std::to_string(b.size()));
}

// Adds the boundary of coeff * t into out.
void add_boundary(const AugmentedBirack& b, const Tuple& t, std::int64_t coeff, BoundaryPart part, Chain& out) {
    for (std::size_t k = 1; k <= t.size(); ++k) {
        const std::int64_t sign = (k % 2 == 0) ? coeff : -coeff;
        if (part != BoundaryPart::DoublePrimeOnly) out.add(partial_prime(k, t), sign);
        if (part != BoundaryPart::PrimeOnly) out.add(partial_dprime(b, k, t), -sign);
    }
}

std::vector<BigInt> coordinates(std::size_t n, const Chain& c) {
    std::vector<BigInt> v(basis_size(n, c.degree()));
    for (const auto& [t, coeff] : c.terms()) v[tuple_index(n, t)] = coeff;
    return v;
}

std::vector<BigInt> torsion_of(const std::vector<BigInt>& factors) {
    std::vector<BigInt> out;
    for (const auto& f : factors)
        if (f > 1) out.push_back(f);
    return out;
}

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Rows are lattice vectors; brings them to Hermite normal form (positive pivots,
// entries above each pivot reduced into [0, pivot)). Zero rows are dropped.
IntegerMatrix hermite_rows(IntegerMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        for (;;) {
            std::size_t best = m.rows();
            for (std::size_t i = r; i < m.rows(); ++i) {
                if (m(i, c).is_zero()) continue;
                if (best == m.rows() || abs(m(i, c)) < abs(m(best, c))) best = i;
            }
            if (best == m.rows()) break;
            m.swap_rows(r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < m.rows(); ++i) {
                if (m(i, c).is_zero()) continue;
                m.add_row_multiple(i, r, -(m(i, c) / m(r, c)));
                if (!m(i, c).is_zero()) done = false;
            }
            if (done) break;
        }
        if (r < m.rows() && !m(r, c).is_zero()) {
            if (m(r, c) < 0) m.negate_row(r);
            for (std::size_t i = 0; i < r; ++i) {
                BigInt q = m(i, c) / m(r, c);
                if (m(i, c) < 0 && !(m(i, c) % m(r, c)).is_zero()) q -= 1;
                if (!q.is_zero()) m.add_row_multiple(i, r, -q);
            }
            ++r;
        }
    }
    IntegerMatrix out(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

Cochain2 cochain_from_row(std::size_t n, const IntegerMatrix& m, std::size_t row) {
    std::vector<std::int64_t> values(n * n);
    for (std::size_t j = 0; j < n * n; ++j) values[j] = static_cast<std::int64_t>(m(row, j));
    return Cochain2(n, std::move(values));
}

}  // namespace

namespace {

std::size_t checked_rank(const AugmentedBirack& b, std::size_t degree) {
    const std::size_t cols = basis_size(b.size(), degree);
    if (cols > max_basis_size())
        throw Error(ErrorKind::ResourceLimit, "C_" + std::to_string(degree) + " has rank " + std::to_string(cols) +
                                                  ", above the limit " + std::to_string(max_basis_size()) +
                                                  " (set BIRACK_MAX_BASIS to raise it)");
    return cols;
}

}  // namespace

Chain boundary(const AugmentedBirack& b, const Chain& c, BoundaryPart part) {
    Chain out(c.degree() == 0 ? 0 : c.degree() - 1);
    if (c.degree() == 0) return out;
    for (const auto& [t, coeff] : c.terms()) {
        check_elements(b, t);
        add_boundary(b, t, coeff, part, out);
    }
    return out;
}

std::optional<Tuple> double_boundary_failure(const AugmentedBirack& b, std::size_t degree, BoundaryPart part) {
    if (degree < 2) return std::nullopt;
    const std::size_t count = checked_rank(b, degree);
    for (std::size_t idx = 0; idx < count; ++idx) {
        Chain c(degree);
        c.add(tuple_at(b.size(), degree, idx), 1);
        if (!boundary(b, boundary(b, c, part), part).is_zero()) return c.terms().begin()->first;
    }
    return std::nullopt;
}

std::size_t basis_size(std::size_t set_size, std::size_t degree) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (set_size != 0 && total > std::numeric_limits<std::size_t>::max() / set_size)
            throw Error(ErrorKind::ResourceLimit, "chain group rank overflows");
        total *= set_size;
    }
    return total;
}

std::size_t tuple_index(std::size_t set_size, const Tuple& t) {
    std::size_t index = 0;
    for (Element x : t) index = index * set_size + static_cast<std::size_t>(x - 1);
    return index;
}

Tuple tuple_at(std::size_t set_size, std::size_t degree, std::size_t index) {
    Tuple t(degree);
    for (std::size_t i = degree; i-- > 0;) {
        t[i] = static_cast<Element>(index % set_size) + 1;
        index /= set_size;
    }
    return t;
}

std::size_t max_basis_size() {
    if (const char* env = std::getenv("BIRACK_MAX_BASIS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 20000;
}

SparseIntegerMatrix sparse_boundary_matrix(const AugmentedBirack& b, std::size_t degree, BoundaryPart part) {
    const std::size_t n = b.size();
    if (degree == 0) return {0, 1, {{}}};
    const std::size_t cols = checked_rank(b, degree);
    SparseIntegerMatrix m{basis_size(n, degree - 1), cols, {}};
    m.columns.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        Chain col(degree - 1);
        add_boundary(b, tuple_at(n, degree, j), 1, part, col);
        auto& out = m.columns[j];
        for (const auto& [t, c] : col.terms()) out.emplace_back(tuple_index(n, t), c);
        std::sort(out.begin(), out.end());
    }
    return m;
}

IntegerMatrix boundary_matrix(const AugmentedBirack& b, std::size_t degree, BoundaryPart part) {
    if (degree > 0) {
        // Dense storage is quadratic; refuse sizes that would not fit comfortably in memory.
        constexpr std::size_t dense_limit = 4'000'000;
        const std::size_t cols = checked_rank(b, degree);
        const std::size_t rows = basis_size(b.size(), degree - 1);
        if (rows > dense_limit / cols)
            throw Error(ErrorKind::ResourceLimit, "dense d_" + std::to_string(degree) + " would have " +
                                                      std::to_string(rows) + "x" + std::to_string(cols) + " entries");
    }
    return sparse_boundary_matrix(b, degree, part).to_dense();
}

std::string HomologyGroup::to_string() const {
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        out << (first ? "" : " + ") << "Z_" << t;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

HomologyGroup group_from_cyclic_orders(const std::vector<BigInt>& orders) {
    HomologyGroup g;
    std::vector<BigInt> finite;
    for (const auto& o : orders) {
        if (o.is_zero()) ++g.free_rank;
        else if (abs(o) > 1) finite.push_back(abs(o));
    }
    IntegerMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
    g.torsion = torsion_of(invariant_factors(diag));
    return g;
}

HomologyGroup homology_group(const AugmentedBirack& b, std::size_t degree) {
    const auto fn = invariant_factors(sparse_boundary_matrix(b, degree));
    const auto f1 = invariant_factors(sparse_boundary_matrix(b, degree + 1));
    HomologyGroup g;
    g.free_rank = basis_size(b.size(), degree) - fn.size() - f1.size();
    g.torsion = torsion_of(f1);
    return g;
}

HomologyGroup cohomology_group(const AugmentedBirack& b, std::size_t degree, std::optional<std::int64_t> modulus) {
    // delta^{n-1} = d_n^T, delta^n = d_{n+1}^T
    const auto fn = invariant_factors(sparse_boundary_matrix(b, degree).transpose());
    const auto fn1 = invariant_factors(sparse_boundary_matrix(b, degree + 1).transpose());
    const std::size_t dim = basis_size(b.size(), degree);
    if (!modulus) {
        HomologyGroup g;
        g.free_rank = dim - fn.size() - fn1.size();
        g.torsion = torsion_of(fn);
        return g;
    }
    if (*modulus < 2) throw Error(ErrorKind::OutOfRange, "coefficient modulus must be at least 2");
    const BigInt m = *modulus;
    // Hom(H_n, Z_m) + Ext(H_{n-1}, Z_m); H_n has free part dim - rank d_n - rank d_{n+1}
    // and torsion from d_{n+1}, H_{n-1} has torsion from d_n.
    std::vector<BigInt> orders(dim - fn.size() - fn1.size(), m);
    for (const auto& d : fn1) orders.push_back(gcd_big(d, m));
    for (const auto& d : fn) orders.push_back(gcd_big(d, m));
    return group_from_cyclic_orders(orders);
}

std::vector<Chain> degenerate_generators(const AugmentedBirack& b, std::size_t degree) {
    if (degree < 2) return {};
    const std::size_t n = b.size();
    const std::size_t big_n = b.characteristic();
    const Permutation& pi = b.kink_map();
    std::set<Chain> unique;
    const std::size_t fillings = basis_size(n, degree - 1);
    for (std::size_t j = 0; j + 1 < degree; ++j) {
        for (std::size_t idx = 0; idx < fillings; ++idx) {
            const Tuple free = tuple_at(n, degree - 1, idx);
            Chain g(degree);
            Element prev = free[j];
            for (std::size_t k = 1; k <= big_n; ++k) {
                const Element next = pi(prev);
                Tuple t(free.begin(), free.begin() + static_cast<std::ptrdiff_t>(j));
                t.push_back(next);
                t.push_back(prev);
                t.insert(t.end(), free.begin() + static_cast<std::ptrdiff_t>(j) + 1, free.end());
                g.add(t, 1);
                prev = next;
            }
            unique.insert(std::move(g));
        }
    }
    return {unique.begin(), unique.end()};
}

IntegerMatrix degenerate_matrix(const AugmentedBirack& b, std::size_t degree) {
    const auto gens = degenerate_generators(b, degree);
    IntegerMatrix m(basis_size(b.size(), degree), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (const auto& [t, c] : gens[j].terms()) m(tuple_index(b.size(), t), j) = c;
    return m;
}

std::vector<Chain> degenerate_closure_failures(const AugmentedBirack& b, std::size_t degree) {
    std::vector<Chain> failures;
    const auto gens = degenerate_generators(b, degree);
    if (gens.empty()) return failures;
    const IntegerSpan lower(degenerate_matrix(b, degree - 1));
    for (const auto& g : gens) {
        if (!lower.contains(coordinates(b.size(), boundary(b, g)))) failures.push_back(g);
    }
    return failures;
}

Cochain2::Cochain2(std::size_t n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != n * n) throw Error(ErrorKind::OutOfRange, "cochain table must have n^2 entries");
}

Cochain2 Cochain2::chi(std::size_t n, Element i, Element j) {
    Cochain2 c(n);
    c.at(i, j) = 1;
    return c;
}

std::size_t Cochain2::flat(Element i, Element j) const {
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n_ || static_cast<std::size_t>(j) > n_)
        throw Error(ErrorKind::OutOfRange, "cochain argument (" + std::to_string(i) + "," + std::to_string(j) +
                                               ") outside 1.." + std::to_string(n_));
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
}

bool Cochain2::is_zero() const noexcept {
    for (auto v : values_)
        if (v != 0) return false;
    return true;
}

std::int64_t Cochain2::evaluate(const Chain& c) const {
    if (c.degree() != 2) throw Error(ErrorKind::OutOfRange, "a 2-cochain evaluates 2-chains only");
    std::int64_t total = 0;
    for (const auto& [t, coeff] : c.terms()) total += coeff * (*this)(t[0], t[1]);
    return total;
}

Cochain2& Cochain2::operator+=(const Cochain2& o) {
    if (o.n_ != n_) throw Error(ErrorKind::OutOfRange, "cochains over different sets");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

Cochain2 operator*(std::int64_t k, Cochain2 a) {
    for (auto& v : a.values_) v *= k;
    return a;
}

std::string Cochain2::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 1; i <= n_; ++i) {
        for (std::size_t j = 1; j <= n_; ++j) {
            const std::int64_t c = values_[(i - 1) * n_ + (j - 1)];
            if (c == 0) continue;
            if (c < 0) out << '-';
            else if (!first) out << '+';
            const std::int64_t a = c < 0 ? -c : c;
            if (a != 1) out << a << '*';
            out << "chi(" << i << ',' << j << ')';
            first = false;
        }
    }
    return first ? "0" : out.str();
}

Cochain2 parse_cochain_text(std::string_view text, std::size_t n) {
    Cochain2 phi(n);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        long long i = 0, j = 0, c = 0;
        std::istringstream head(first);
        std::string trailing;
        if (!(head >> i) || !(fields >> j >> c) || (fields >> trailing))
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected 'i j c'");
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": pair (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") outside 1.." + std::to_string(n));
        phi.at(static_cast<Element>(i), static_cast<Element>(j)) += c;
    }
    return phi;
}

Cochain2 read_cochain_file(const std::string& path, std::size_t n) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_cochain_text(buf.str(), n);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

std::string render_cochain_text(const Cochain2& phi) {
    std::ostringstream out;
    for (std::size_t i = 1; i <= phi.size(); ++i)
        for (std::size_t j = 1; j <= phi.size(); ++j) {
            const auto c = phi(static_cast<Element>(i), static_cast<Element>(j));
            if (c != 0) out << i << ' ' << j << ' ' << c << '\n';
        }
    return out.str();
}

Cochain2 evaluate_coboundary(const AugmentedBirack& b, const Cochain1& psi) {
    const std::size_t n = b.size();
    if (psi.size() != n) throw Error(ErrorKind::OutOfRange, "1-cochain must have one value per element");
    auto v = [&](Element x) { return psi[static_cast<std::size_t>(x - 1)]; };
    Cochain2 phi(n);
    for (Element x = 1; x <= static_cast<Element>(n); ++x)
        for (Element y = 1; y <= static_cast<Element>(n); ++y)
            phi.at(x, y) = v(y) - v(b.alpha(x, y)) - v(x) + v(b.beta(y, x));
    return phi;
}

std::optional<Tuple> cocycle_condition_failure(const AugmentedBirack& b, const Cochain2& phi) {
    const auto n = static_cast<Element>(b.size());
    if (phi.size() != b.size()) throw Error(ErrorKind::OutOfRange, "cochain and birack sizes differ");
    for (Element x = 1; x <= n; ++x)
        for (Element y = 1; y <= n; ++y)
            for (Element z = 1; z <= n; ++z) {
                const auto lhs = phi(y, z) + phi(b.beta(y, x), b.alpha(y, z)) + phi(x, y);
                const auto rhs = phi(b.alpha(x, y), b.alpha(x, z)) + phi(x, z) + phi(b.beta(z, x), b.beta(z, y));
                if (lhs != rhs) return Tuple{x, y, z};
            }
    return std::nullopt;
}

bool is_2_cocycle(const AugmentedBirack& b, const Cochain2& phi) {
    return !cocycle_condition_failure(b, phi).has_value();
}

bool vanishes_on_degenerates(const AugmentedBirack& b, const Cochain2& phi) {
    for (const auto& g : degenerate_generators(b, 2))
        if (phi.evaluate(g) != 0) return false;
    return true;
}

bool is_reduced_2_cocycle(const AugmentedBirack& b, const Cochain2& phi) {
    return is_2_cocycle(b, phi) && vanishes_on_degenerates(b, phi);
}

bool in_reduced_cocycle_space(const AugmentedBirack& b, const Cochain2& phi, std::optional<std::int64_t> modulus) {
    if (!modulus) return is_reduced_2_cocycle(b, phi);
    const std::int64_t m = *modulus;
    if (m < 2) throw Error(ErrorKind::OutOfRange, "coefficient modulus must be at least 2");
    const std::size_t n = b.size();
    for (std::size_t idx = 0; idx < basis_size(n, 3); ++idx) {
        Chain c(3);
        c.add(tuple_at(n, 3, idx), 1);
        if (mod_floor(phi.evaluate(boundary(b, c)), m) != 0) return false;
    }
    for (const auto& g : degenerate_generators(b, 2))
        if (mod_floor(phi.evaluate(g), m) != 0) return false;
    return true;
}

ReducedCocycles reduced_2_cocycles(const AugmentedBirack& b, std::optional<std::int64_t> modulus) {
    const std::size_t n = b.size();
    const std::size_t pairs = n * n;
    if (modulus && *modulus < 2) throw Error(ErrorKind::OutOfRange, "coefficient modulus must be at least 2");

    // One row per linear condition on phi: the transpose of d_3, then the degenerate generators.
    const IntegerMatrix d3 = boundary_matrix(b, 3);
    const auto gens = degenerate_generators(b, 2);
    IntegerMatrix conditions(d3.cols() + gens.size(), pairs);
    for (std::size_t i = 0; i < d3.rows(); ++i)
        for (std::size_t j = 0; j < d3.cols(); ++j)
            if (!d3(i, j).is_zero()) conditions(j, i) = d3(i, j);
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (const auto& [t, c] : gens[g].terms()) conditions(d3.cols() + g, tuple_index(n, t)) = c;

    ReducedCocycles out;
    out.modulus = modulus;
    for (Element x = 1; x <= static_cast<Element>(n); ++x) {
        Cochain1 psi(n, 0);
        psi[static_cast<std::size_t>(x - 1)] = 1;
        out.coboundaries.push_back(evaluate_coboundary(b, psi));
    }

    const SmithDecomposition snf = smith_normal_form(conditions);
    if (!modulus) {
        IntegerMatrix kernel_rows(pairs - snf.rank, pairs);
        for (std::size_t j = snf.rank; j < pairs; ++j)
            for (std::size_t i = 0; i < pairs; ++i) kernel_rows(j - snf.rank, i) = snf.V(i, j);
        const IntegerMatrix basis = hermite_rows(kernel_rows);
        for (std::size_t r = 0; r < basis.rows(); ++r) out.basis.push_back(cochain_from_row(n, basis, r));
        out.cocycle_group.free_rank = basis.rows();

        // Coordinates of each coboundary in the cocycle basis, then Z^k / span.
        const IntegerSpan lattice(basis.transpose());
        IntegerMatrix coords(basis.rows(), out.coboundaries.size());
        for (std::size_t c = 0; c < out.coboundaries.size(); ++c) {
            std::vector<BigInt> v(out.coboundaries[c].values().begin(), out.coboundaries[c].values().end());
            const auto sol = lattice.solve(v);
            if (!sol) throw Error(ErrorKind::NotReducedCocycle, "coboundary outside the reduced cocycle lattice");
            for (std::size_t r = 0; r < basis.rows(); ++r) coords(r, c) = (*sol)[r];
        }
        const auto factors = invariant_factors(coords);
        HomologyGroup q;
        q.free_rank = basis.rows() - factors.size();
        q.torsion = torsion_of(factors);
        out.quotient = q;
        return out;
    }

    const std::int64_t m = *modulus;
    std::vector<BigInt> orders;
    std::vector<std::vector<std::int64_t>> rows;
    auto push_column = [&](std::size_t j, const BigInt& scale) {
        std::vector<std::int64_t> row(pairs);
        bool nonzero = false;
        for (std::size_t i = 0; i < pairs; ++i) {
            const BigInt v = (snf.V(i, j) * scale) % m;
            row[i] = mod_floor(static_cast<std::int64_t>(v), m);
            nonzero = nonzero || row[i] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    };
    for (std::size_t j = 0; j < pairs; ++j) {
        if (j < snf.rank) {
            const BigInt g = gcd_big(snf.D(j, j), m);
            if (g == 1) continue;
            orders.push_back(g);
            push_column(j, BigInt(m) / g);
        } else {
            orders.push_back(BigInt(m));
            push_column(j, BigInt(1));
        }
    }
    for (auto& row : rows) out.basis.emplace_back(n, std::move(row));
    for (auto& c : out.coboundaries)
        for (Element x = 1; x <= static_cast<Element>(n); ++x)
            for (Element y = 1; y <= static_cast<Element>(n); ++y) c.at(x, y) = mod_floor(c(x, y), m);
    out.cocycle_group = group_from_cyclic_orders(orders);
    return out;
}

}  // namespace birack
