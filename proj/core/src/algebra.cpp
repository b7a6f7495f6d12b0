#include "birack/algebra.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <tuple>

#include "birack/error.hpp"

namespace birack {

namespace {

std::string tuple_string(std::initializer_list<Element> xs) {
    std::string out = "(";
    bool first = true;
    for (Element x : xs) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    }
    return out + ")";
}

void require_square(const PermutationTable& alpha, const PermutationTable& beta) {
    const auto n = alpha.size();
    if (n == 0) throw Error(ErrorKind::OutOfRange, "birack must have at least one element");
    if (beta.size() != n) throw Error(ErrorKind::OutOfRange, "alpha and beta tables differ in size");
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i].size() != n || beta[i].size() != n) {
            throw Error(ErrorKind::OutOfRange, "table row " + std::to_string(i + 1) + " has wrong length");
        }
    }
}

// Kink-map candidates for x: all y with alpha_y(x) = beta_x(y).
std::vector<Element> kink_candidates(const PermutationTable& alpha, const PermutationTable& beta, Element x) {
    std::vector<Element> out;
    const auto n = static_cast<Element>(alpha.size());
    for (Element y = 1; y <= n; ++y) {
        if (alpha[static_cast<std::size_t>(y - 1)](x) == beta[static_cast<std::size_t>(x - 1)](y)) out.push_back(y);
    }
    return out;
}

PermutationTable rows_to_table(const std::vector<std::vector<Element>>& rows, const char* name) {
    PermutationTable table;
    table.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size() || !Permutation::is_permutation(rows[i])) {
            throw Error(ErrorKind::NonBijectiveColumn,
                        std::string(name) + "_" + std::to_string(i + 1) + " is not a permutation of 1.." +
                            std::to_string(rows.size()));
        }
        table.emplace_back(rows[i]);
    }
    return table;
}

}  // namespace

AxiomReport check_axioms(const std::vector<std::vector<Element>>& alpha_rows,
                         const std::vector<std::vector<Element>>& beta_rows) {
    return check_axioms(rows_to_table(alpha_rows, "alpha"), rows_to_table(beta_rows, "beta"));
}

AxiomReport check_axioms(const PermutationTable& alpha, const PermutationTable& beta) {
    require_square(alpha, beta);
    const auto n = alpha.size();
    const auto ne = static_cast<Element>(n);
    AxiomReport report;
    report.size = n;

    auto a = [&](Element x, Element y) { return alpha[static_cast<std::size_t>(x - 1)](y); };
    auto b = [&](Element x, Element y) { return beta[static_cast<std::size_t>(x - 1)](y); };
    auto fail = [&](int axiom, int clause, std::vector<Element> witness, std::string detail) {
        if (axiom == 1) report.axiom1 = false;
        if (axiom == 2) report.axiom2 = false;
        if (axiom == 3) report.axiom3 = false;
        report.violations.push_back({axiom, clause, std::move(witness), std::move(detail)});
    };

    // Axiom (ii): the sideways map must be a bijection of X x X.
    std::vector<int> preimage(n * n, -1);
    bool sideways_bijective = true;
    for (Element x = 1; x <= ne; ++x) {
        for (Element y = 1; y <= ne; ++y) {
            const Element u = a(x, y);
            const Element v = b(y, x);
            auto& slot = preimage[static_cast<std::size_t>(u - 1) * n + static_cast<std::size_t>(v - 1)];
            if (slot >= 0) {
                sideways_bijective = false;
                const Element px = static_cast<Element>(slot / static_cast<int>(n)) + 1;
                const Element py = static_cast<Element>(slot % static_cast<int>(n)) + 1;
                fail(2, 0, {x, y},
                     "sideways map sends " + tuple_string({px, py}) + " and " + tuple_string({x, y}) + " to " +
                         tuple_string({u, v}));
            } else {
                slot = static_cast<int>(static_cast<std::size_t>(x - 1) * n + static_cast<std::size_t>(y - 1));
            }
        }
    }

    if (sideways_bijective) {
        // S^{-1}(u, v) = (beta_bar_u(v), alpha_bar_v(u))
        std::vector<std::vector<Element>> abar(n, std::vector<Element>(n)), bbar(n, std::vector<Element>(n));
        for (Element u = 1; u <= ne; ++u) {
            for (Element v = 1; v <= ne; ++v) {
                const int slot = preimage[static_cast<std::size_t>(u - 1) * n + static_cast<std::size_t>(v - 1)];
                const Element x = static_cast<Element>(slot / static_cast<int>(n)) + 1;
                const Element y = static_cast<Element>(slot % static_cast<int>(n)) + 1;
                bbar[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = x;
                abar[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(u - 1)] = y;
            }
        }
        bool bars_ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!Permutation::is_permutation(abar[i])) {
                bars_ok = false;
                fail(2, 0, {static_cast<Element>(i + 1)}, "alpha_bar_" + std::to_string(i + 1) + " is not a bijection");
            }
            if (!Permutation::is_permutation(bbar[i])) {
                bars_ok = false;
                fail(2, 0, {static_cast<Element>(i + 1)}, "beta_bar_" + std::to_string(i + 1) + " is not a bijection");
            }
        }
        if (bars_ok) {
            PermutationTable at, bt;
            for (std::size_t i = 0; i < n; ++i) {
                at.emplace_back(abar[i]);
                bt.emplace_back(bbar[i]);
            }
            auto ab = [&](Element x, Element y) { return at[static_cast<std::size_t>(x - 1)](y); };
            auto bb = [&](Element x, Element y) { return bt[static_cast<std::size_t>(x - 1)](y); };
            for (Element x = 1; x <= ne; ++x) {
                for (Element y = 1; y <= ne; ++y) {
                    if (ab(b(x, y), a(y, x)) != x) fail(2, 1, {x, y}, "alpha_bar_{beta_x(y)} alpha_y(x) != x");
                    if (bb(a(x, y), b(y, x)) != x) fail(2, 2, {x, y}, "beta_bar_{alpha_x(y)} beta_y(x) != x");
                    if (a(bb(x, y), ab(y, x)) != x) fail(2, 3, {x, y}, "alpha_{beta_bar_x(y)} alpha_bar_y(x) != x");
                    if (b(ab(x, y), bb(y, x)) != x) fail(2, 4, {x, y}, "beta_{alpha_bar_x(y)} beta_bar_y(x) != x");
                }
            }
            report.alpha_bar = std::move(at);
            report.beta_bar = std::move(bt);
        }
    }

    // Axiom (iii), compared pointwise in z.
    for (Element x = 1; x <= ne; ++x) {
        for (Element y = 1; y <= ne; ++y) {
            const Element axy = a(x, y);
            const Element byx = b(y, x);
            for (Element z = 1; z <= ne; ++z) {
                if (a(axy, a(x, z)) != a(byx, a(y, z)))
                    fail(3, 1, {x, y, z}, "alpha_{alpha_x(y)} alpha_x != alpha_{beta_y(x)} alpha_y at z");
                if (b(axy, a(x, z)) != a(byx, b(y, z)))
                    fail(3, 2, {x, y, z}, "beta_{alpha_x(y)} alpha_x != alpha_{beta_y(x)} beta_y at z");
                if (b(axy, b(x, z)) != b(byx, b(y, z)))
                    fail(3, 3, {x, y, z}, "beta_{alpha_x(y)} beta_x != beta_{beta_y(x)} beta_y at z");
            }
        }
    }

    // Axiom (i): a unique kink-map value per x, forming a permutation.
    std::vector<Element> pi(n, 0);
    bool pi_defined = true;
    for (Element x = 1; x <= ne; ++x) {
        const auto candidates = kink_candidates(alpha, beta, x);
        if (candidates.empty()) {
            report.kink_map_missing = true;
            pi_defined = false;
            fail(1, 1, {x}, "no y with alpha_y(x) = beta_x(y)");
        } else if (candidates.size() > 1) {
            report.kink_map_not_unique = true;
            pi_defined = false;
            fail(1, 1, {x}, std::to_string(candidates.size()) + " solutions of alpha_y(x) = beta_x(y)");
        } else {
            pi[static_cast<std::size_t>(x - 1)] = candidates.front();
        }
    }
    if (pi_defined) {
        if (!Permutation::is_permutation(pi)) {
            fail(1, 1, {}, "kink map is not a bijection");
        } else {
            Permutation p(pi);
            if (report.alpha_bar && report.beta_bar) {
                for (Element x = 1; x <= ne; ++x) {
                    const Element px = p(x);
                    if ((*report.beta_bar)[static_cast<std::size_t>(px - 1)](x) !=
                        (*report.alpha_bar)[static_cast<std::size_t>(x - 1)](px)) {
                        fail(1, 2, {x}, "beta_bar_{pi(x)}(x) != alpha_bar_x(pi(x))");
                    }
                }
            }
            report.kink_map = std::move(p);
        }
    }
    return report;
}

Permutation derive_kink_map(const PermutationTable& alpha, const PermutationTable& beta) {
    require_square(alpha, beta);
    const auto ne = static_cast<Element>(alpha.size());
    std::vector<Element> pi;
    for (Element x = 1; x <= ne; ++x) {
        const auto candidates = kink_candidates(alpha, beta, x);
        if (candidates.empty())
            throw Error(ErrorKind::KinkMapMissing, "no y with alpha_y(" + std::to_string(x) + ") = beta_x(y)");
        if (candidates.size() > 1)
            throw Error(ErrorKind::KinkMapNotUnique,
                        std::to_string(candidates.size()) + " solutions for x = " + std::to_string(x));
        pi.push_back(candidates.front());
    }
    if (!Permutation::is_permutation(pi)) throw Error(ErrorKind::AxiomViolation, "axiom (i): kink map is not a bijection");
    return Permutation(std::move(pi));
}

AugmentedBirack AugmentedBirack::from_tables(PermutationTable alpha, PermutationTable beta) {
    AxiomReport report = check_axioms(alpha, beta);
    if (report.kink_map_missing) {
        const auto& v = report.violations;
        for (const auto& viol : v) {
            if (viol.axiom == 1 && viol.clause == 1 && !viol.witness.empty())
                throw Error(ErrorKind::KinkMapMissing, "x = " + std::to_string(viol.witness[0]) + ": " + viol.detail);
        }
    }
    if (report.kink_map_not_unique) {
        for (const auto& viol : report.violations) {
            if (viol.axiom == 1 && viol.clause == 1 && !viol.witness.empty())
                throw Error(ErrorKind::KinkMapNotUnique, "x = " + std::to_string(viol.witness[0]) + ": " + viol.detail);
        }
    }
    if (!report.ok()) {
        const auto& first = report.violations.front();
        std::string witness;
        for (Element e : first.witness) witness += (witness.empty() ? "" : ",") + std::to_string(e);
        throw Error(ErrorKind::AxiomViolation, "axiom (" + std::string(first.axiom == 1 ? "i" : first.axiom == 2 ? "ii" : "iii") +
                                                   ") fails at (" + witness + "): " + first.detail + " [" +
                                                   std::to_string(report.violations.size()) + " violation(s)]");
    }

    AugmentedBirack b;
    b.n_ = alpha.size();
    b.alpha_ = std::move(alpha);
    b.beta_ = std::move(beta);
    b.alpha_bar_ = std::move(*report.alpha_bar);
    b.beta_bar_ = std::move(*report.beta_bar);
    b.pi_ = std::move(*report.kink_map);
    b.characteristic_ = b.pi_.order();

    const auto n = b.n_;
    b.alpha_tab_.resize(n * n);
    b.beta_tab_.resize(n * n);
    b.alpha_inv_tab_.resize(n * n);
    b.beta_inv_tab_.resize(n * n);
    b.alpha_bar_tab_.resize(n * n);
    b.beta_bar_tab_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        const Permutation ainv = b.alpha_[x].inverse();
        const Permutation binv = b.beta_[x].inverse();
        for (std::size_t y = 0; y < n; ++y) {
            const auto ey = static_cast<Element>(y + 1);
            b.alpha_tab_[x * n + y] = b.alpha_[x](ey);
            b.beta_tab_[x * n + y] = b.beta_[x](ey);
            b.alpha_inv_tab_[x * n + y] = ainv(ey);
            b.beta_inv_tab_[x * n + y] = binv(ey);
            b.alpha_bar_tab_[x * n + y] = b.alpha_bar_[x](ey);
            b.beta_bar_tab_[x * n + y] = b.beta_bar_[x](ey);
        }
    }
    return b;
}

std::pair<PermutationTable, PermutationTable> matrix_to_tables(const BirackMatrix& matrix) {
    if (matrix.empty() || matrix.size() % 2 != 0)
        throw Error(ErrorKind::ParseError, "birack matrix must have 2n rows");
    const auto n = matrix.size() / 2;
    for (std::size_t i = 0; i < matrix.size(); ++i) {
        if (matrix[i].size() != n)
            throw Error(ErrorKind::ParseError,
                        "matrix row " + std::to_string(i + 1) + " has " + std::to_string(matrix[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    PermutationTable alpha, beta;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Element> acol(n), bcol(n);
        for (std::size_t i = 0; i < n; ++i) {
            acol[i] = matrix[i][j];
            bcol[i] = matrix[n + i][j];
        }
        if (!Permutation::is_permutation(acol))
            throw Error(ErrorKind::NonBijectiveColumn, "alpha_" + std::to_string(j + 1) + " (upper column " +
                                                           std::to_string(j + 1) + ") is not a permutation");
        if (!Permutation::is_permutation(bcol))
            throw Error(ErrorKind::NonBijectiveColumn, "beta_" + std::to_string(j + 1) + " (lower column " +
                                                           std::to_string(j + 1) + ") is not a permutation");
        alpha.emplace_back(std::move(acol));
        beta.emplace_back(std::move(bcol));
    }
    return {std::move(alpha), std::move(beta)};
}

AugmentedBirack AugmentedBirack::from_matrix(const BirackMatrix& matrix) {
    auto [alpha, beta] = matrix_to_tables(matrix);
    return from_tables(std::move(alpha), std::move(beta));
}

std::size_t AugmentedBirack::index(Element x) const {
    if (x < 1 || static_cast<std::size_t>(x) > n_)
        throw Error(ErrorKind::OutOfRange, "element " + std::to_string(x) + " outside 1.." + std::to_string(n_));
    return static_cast<std::size_t>(x - 1);
}

std::pair<Element, Element> AugmentedBirack::sideways(Element x, Element y) const {
    index(x);
    index(y);
    return {alpha(x, y), beta(y, x)};
}

std::pair<Element, Element> AugmentedBirack::sideways_inverse(Element y, Element x) const {
    index(x);
    index(y);
    return {beta_bar(y, x), alpha_bar(x, y)};
}

std::pair<Element, Element> AugmentedBirack::birack_map(Element x, Element y) const {
    index(x);
    index(y);
    const Element w = beta_inv(x, y);
    return {w, alpha(w, x)};
}

BirackMatrix AugmentedBirack::to_matrix() const {
    BirackMatrix m(2 * n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m[i][j] = alpha_[j](static_cast<Element>(i + 1));
            m[n_ + i][j] = beta_[j](static_cast<Element>(i + 1));
        }
    }
    return m;
}

namespace {

long long mod(long long a, long long m) {
    const long long r = a % m;
    return r < 0 ? r + m : r;
}

std::optional<long long> mod_inverse(long long a, long long m) {
    if (m == 1) return 0;
    long long g = m, x = 0, x1 = 1, r = mod(a, m);
    while (r != 0) {
        const long long q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) return std::nullopt;
    return mod(x, m);
}

Element residue_to_element(long long r, long long m) { return r == 0 ? static_cast<Element>(m) : static_cast<Element>(r); }

}  // namespace

AugmentedBirack tsr_birack(int modulus, int t, int s, int r) {
    if (modulus < 1) throw Error(ErrorKind::OutOfRange, "modulus must be positive");
    const long long m = modulus;
    const auto tinv = mod_inverse(t, m);
    if (!tinv) throw Error(ErrorKind::NotAUnit, "t = " + std::to_string(t) + " is not invertible mod " + std::to_string(m));
    if (!mod_inverse(r, m))
        throw Error(ErrorKind::NotAUnit, "r = " + std::to_string(r) + " is not invertible mod " + std::to_string(m));
    const long long lhs = mod(static_cast<long long>(s) * s, m);
    const long long rhs = mod((1 - *tinv * r) % m * s, m);
    if (lhs != rhs)
        throw Error(ErrorKind::RelationFails, "s^2 = " + std::to_string(lhs) + " but (1 - t^-1 r) s = " +
                                                  std::to_string(rhs) + " mod " + std::to_string(m));
    PermutationTable alpha, beta;
    for (long long x = 1; x <= m; ++x) {
        std::vector<Element> arow, brow;
        for (long long y = 1; y <= m; ++y) {
            // alpha_x(y) = r y ; beta_x(y) = t y - t s x
            arow.push_back(residue_to_element(mod(r * y, m), m));
            brow.push_back(residue_to_element(mod(t * y - t * s % m * x, m), m));
        }
        alpha.emplace_back(std::move(arow));
        beta.emplace_back(std::move(brow));
    }
    return AugmentedBirack::from_tables(std::move(alpha), std::move(beta));
}

BirackMatrix parse_birack_matrix(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<int>>> rows;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> values;
        std::string token;
        while (ls >> token) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                values.push_back(v);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad integer '" + token + "'");
            }
        }
        if (!values.empty()) rows.emplace_back(line_no, std::move(values));
    }
    if (rows.empty()) throw Error(ErrorKind::ParseError, "empty birack file");
    if (rows.front().second.size() != 1 || rows.front().second[0] < 1)
        throw Error(ErrorKind::ParseError, "line " + std::to_string(rows.front().first) + ": expected the size n");
    const auto n = static_cast<std::size_t>(rows.front().second[0]);
    if (rows.size() != 2 * n + 1)
        throw Error(ErrorKind::ParseError,
                    "expected " + std::to_string(2 * n) + " matrix rows, found " + std::to_string(rows.size() - 1));
    BirackMatrix m;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& [ln, values] = rows[i];
        if (values.size() != n)
            throw Error(ErrorKind::ParseError, "line " + std::to_string(ln) + ": expected " + std::to_string(n) +
                                                   " entries, found " + std::to_string(values.size()));
        for (int v : values) {
            if (v < 1 || static_cast<std::size_t>(v) > n)
                throw Error(ErrorKind::ParseError, "line " + std::to_string(ln) + ": entry " + std::to_string(v) +
                                                       " outside 1.." + std::to_string(n));
        }
        m.push_back(values);
    }
    return m;
}

AugmentedBirack parse_birack_text(std::string_view text) { return AugmentedBirack::from_matrix(parse_birack_matrix(text)); }

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

BirackMatrix read_birack_matrix(const std::string& path) {
    const std::string text = slurp(path);
    try {
        return parse_birack_matrix(text);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

AugmentedBirack read_birack_file(const std::string& path) {
    const std::string text = slurp(path);
    try {
        return parse_birack_text(text);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

std::string render_birack_text(const AugmentedBirack& b) {
    std::string out = std::to_string(b.size()) + "\n";
    const auto m = b.to_matrix();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == b.size()) out += "# beta\n";
        for (std::size_t j = 0; j < m[i].size(); ++j) out += (j ? " " : "") + std::to_string(m[i][j]);
        out += "\n";
    }
    return out;
}

}  // namespace birack
