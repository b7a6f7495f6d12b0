#include "support.hpp"

#include <birack/laurent.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace fixtures {

std::string data_path(const std::string& relative) { return std::string(BIRACK_TEST_DATA) + "/" + relative; }

birack::AugmentedBirack four_element() { return birack::read_birack_file(data_path("biracks/four_element.txt")); }
birack::AugmentedBirack five_element() { return birack::read_birack_file(data_path("biracks/five_element.txt")); }
birack::AugmentedBirack tsr_3122() { return birack::read_birack_file(data_path("biracks/tsr_3_1_2_2.txt")); }

birack::Cochain2 four_phi() {
    return birack::Cochain2::chi(4, 2, 1) + birack::Cochain2::chi(4, 2, 4) + birack::Cochain2::chi(4, 3, 1) +
           birack::Cochain2::chi(4, 3, 4);
}

birack::Cochain2 five_phi() {
    return birack::Cochain2::chi(5, 1, 4) + birack::Cochain2::chi(5, 1, 5) + birack::Cochain2::chi(5, 5, 4);
}

birack::LinkDiagram diagram(const std::string& relative) { return birack::read_diagram_file(data_path(relative)); }

}  // namespace fixtures

namespace oracle {

using birack::BigInt;
using birack::Crossing;
using birack::Semiarc;

namespace {

Element at(const std::vector<std::vector<Element>>& rows, Element x, Element y) {
    return rows[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)];
}

std::size_t encode(std::size_t n, const std::vector<Element>& t) {
    std::size_t k = 0;
    for (Element x : t) k = k * n + static_cast<std::size_t>(x - 1);
    return k;
}

std::vector<std::vector<Element>> rows_of(const AugmentedBirack& b, bool alpha) {
    const auto n = static_cast<Element>(b.size());
    std::vector<std::vector<Element>> rows(b.size(), std::vector<Element>(b.size()));
    for (Element x = 1; x <= n; ++x)
        for (Element y = 1; y <= n; ++y)
            rows[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = alpha ? b.alpha(x, y) : b.beta(x, y);
    return rows;
}

AugmentedBirack from_rows(const std::vector<std::vector<Element>>& alpha, const std::vector<std::vector<Element>>& beta) {
    const std::size_t n = alpha.size();
    birack::BirackMatrix m(2 * n, std::vector<int>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            m[i][j] = alpha[j][i];
            m[n + i][j] = beta[j][i];
        }
    return AugmentedBirack::from_matrix(m);
}

}  // namespace

bool crossing_holds(const Crossing& c, const AugmentedBirack& b, const Labeling& f) {
    auto l = [&](Semiarc e) { return f[static_cast<std::size_t>(e)]; };
    if (c.sign > 0)
        return b.alpha(l(c.under_out), l(c.over_in)) == l(c.over_out) && b.beta(l(c.over_in), l(c.under_out)) == l(c.under_in);
    return b.alpha(l(c.under_in), l(c.over_out)) == l(c.over_in) && b.beta(l(c.over_out), l(c.under_in)) == l(c.under_out);
}

std::vector<Labeling> brute_force_labelings(const LinkDiagram& d, const AugmentedBirack& b) {
    const std::size_t e = d.semiarc_count();
    const auto n = static_cast<Element>(b.size());
    std::vector<Labeling> out;
    Labeling f(e, 1);
    while (true) {
        if (std::all_of(d.crossings().begin(), d.crossings().end(), [&](const Crossing& c) { return crossing_holds(c, b, f); }))
            out.push_back(f);
        std::size_t i = e;
        while (i > 0 && f[i - 1] == n) f[--i] = 1;
        if (i == 0) break;
        ++f[i - 1];
    }
    return out;
}

std::size_t rational_rank(const IntegerMatrix& m) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < a.size(); ++col) {
        std::size_t p = rank;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const BigInt x = a[rank][col], y = a[i][col];
            BigInt g = 0;
            for (std::size_t j = col; j < m.cols(); ++j) {
                a[i][j] = x * a[i][j] - y * a[rank][j];
                g = gcd(g, a[i][j]);
            }
            if (g > 1)
                for (std::size_t j = col; j < m.cols(); ++j) a[i][j] /= g;
        }
        ++rank;
    }
    return rank;
}

bool satisfies_axioms(const std::vector<std::vector<Element>>& alpha, const std::vector<std::vector<Element>>& beta) {
    const auto n = static_cast<Element>(alpha.size());
    // (i): a unique solution y of alpha_y(x) = beta_x(y), and the solutions form a bijection
    std::set<Element> images;
    for (Element x = 1; x <= n; ++x) {
        int found = 0;
        for (Element y = 1; y <= n; ++y)
            if (at(alpha, y, x) == at(beta, x, y)) {
                ++found;
                images.insert(y);
            }
        if (found != 1) return false;
    }
    if (images.size() != alpha.size()) return false;
    // (ii): (x, y) -> (alpha_x(y), beta_y(x)) is a bijection of pairs
    std::set<std::pair<Element, Element>> pairs;
    for (Element x = 1; x <= n; ++x)
        for (Element y = 1; y <= n; ++y) pairs.emplace(at(alpha, x, y), at(beta, y, x));
    if (pairs.size() != alpha.size() * alpha.size()) return false;
    // (iii)
    for (Element x = 1; x <= n; ++x)
        for (Element y = 1; y <= n; ++y) {
            const Element ax = at(alpha, x, y), by = at(beta, y, x);
            for (Element z = 1; z <= n; ++z) {
                if (at(alpha, ax, at(alpha, x, z)) != at(alpha, by, at(alpha, y, z))) return false;
                if (at(beta, ax, at(alpha, x, z)) != at(alpha, by, at(beta, y, z))) return false;
                if (at(beta, ax, at(beta, x, z)) != at(beta, by, at(beta, y, z))) return false;
            }
        }
    return true;
}

IntegerMatrix rack_boundary(const AugmentedBirack& b, std::size_t degree) {
    const std::size_t n = b.size();
    std::size_t rows = 1, cols = 1;
    for (std::size_t i = 1; i < degree; ++i) rows *= n;
    cols = rows * n;
    IntegerMatrix m(degree == 0 ? 0 : rows, cols);
    if (degree <= 1) return m;
    std::vector<Element> t(degree, 1);
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t k = 1; k <= degree; ++k) {
            const long sign = (k % 2 == 0) ? 1 : -1;
            std::vector<Element> face, acted;
            for (std::size_t i = 0; i < degree; ++i) {
                if (i + 1 == k) continue;
                face.push_back(t[i]);
                acted.push_back(i + 1 < k ? b.beta(t[k - 1], t[i]) : t[i]);
            }
            m(encode(n, face), c) += sign;
            m(encode(n, acted), c) -= sign;
        }
        std::size_t i = degree;
        while (i > 0 && t[i - 1] == static_cast<Element>(n)) t[--i] = 1;
        if (i > 0) ++t[i - 1];
    }
    return m;
}

bool six_term_identity(const AugmentedBirack& b, const birack::Cochain2& phi) {
    const auto n = static_cast<Element>(b.size());
    for (Element x = 1; x <= n; ++x)
        for (Element y = 1; y <= n; ++y)
            for (Element z = 1; z <= n; ++z) {
                const auto lhs = phi(y, z) + phi(b.beta(y, x), b.alpha(y, z)) + phi(x, y);
                const auto rhs = phi(b.alpha(x, y), b.alpha(x, z)) + phi(x, z) + phi(b.beta(z, x), b.beta(z, y));
                if (lhs != rhs) return false;
            }
    return true;
}

AugmentedBirack conjugate(const AugmentedBirack& b, const std::vector<Element>& g) {
    const std::size_t n = b.size();
    std::vector<Element> ginv(n);
    for (std::size_t i = 0; i < n; ++i) ginv[static_cast<std::size_t>(g[i] - 1)] = static_cast<Element>(i + 1);
    auto G = [&](Element x) { return g[static_cast<std::size_t>(x - 1)]; };
    auto Gi = [&](Element x) { return ginv[static_cast<std::size_t>(x - 1)]; };
    std::vector<std::vector<Element>> alpha(n, std::vector<Element>(n)), beta = alpha;
    for (Element x = 1; x <= static_cast<Element>(n); ++x)
        for (Element y = 1; y <= static_cast<Element>(n); ++y) {
            alpha[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = G(b.alpha(Gi(x), Gi(y)));
            beta[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = G(b.beta(Gi(x), Gi(y)));
        }
    return from_rows(alpha, beta);
}

std::vector<AugmentedBirack> random_biracks(std::size_t count, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<AugmentedBirack> out;
    auto random_perm = [&](std::size_t n) {
        std::vector<Element> p(n);
        std::iota(p.begin(), p.end(), 1);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    };
    std::set<birack::BirackMatrix> seen;
    auto keep = [&](AugmentedBirack c) {
        if (seen.insert(c.to_matrix()).second) out.push_back(std::move(c));
    };
    auto try_rows = [&](const std::vector<std::vector<Element>>& a, const std::vector<std::vector<Element>>& bt) {
        if (satisfies_axioms(a, bt)) keep(from_rows(a, bt));
    };

    // rejection sampling, sizes 2 and 3
    for (std::size_t n : {2u, 3u}) {
        std::size_t found = 0;
        for (int attempt = 0; attempt < 20000 && found < count / 4; ++attempt) {
            std::vector<std::vector<Element>> a(n), bt(n);
            for (std::size_t x = 0; x < n; ++x) {
                a[x] = random_perm(n);
                bt[x] = random_perm(n);
            }
            const std::size_t before = out.size();
            try_rows(a, bt);
            found += out.size() - before;
        }
    }
    // constant actions alpha_x = s, beta_y = t with st = ts, size 4
    for (std::size_t k = 0; k < count / 4; ++k) {
        const auto s = random_perm(4);
        std::vector<Element> t(4);
        do {
            t = random_perm(4);
        } while ([&] {
            for (int z = 0; z < 4; ++z)
                if (s[static_cast<std::size_t>(t[static_cast<std::size_t>(z)] - 1)] !=
                    t[static_cast<std::size_t>(s[static_cast<std::size_t>(z)] - 1)])
                    return true;
            return false;
        }());
        try_rows(std::vector<std::vector<Element>>(4, s), std::vector<std::vector<Element>>(4, t));
    }
    // (t, s, r) over Z_4 with t, r units, relabeled at random
    while (out.size() < count) {
        const int t = (rng() % 2) ? 1 : 3, r = (rng() % 2) ? 1 : 3, s = static_cast<int>(rng() % 4);
        // s^2 = (1 - t^-1 r) s; t is its own inverse mod 4
        if ((s * s - (1 - t * r) * s) % 4 != 0) continue;
        const AugmentedBirack c = conjugate(birack::tsr_birack(4, t, s, r), random_perm(4));
        if (satisfies_axioms(rows_of(c, true), rows_of(c, false))) keep(c);
    }
    return out;
}

LinkDiagram r2_move(const LinkDiagram& d, Semiarc over, Semiarc under, int s, bool parallel) {
    const auto e = static_cast<Semiarc>(d.semiarc_count());
    const Semiarc a1 = e, a2 = e + 1, b1 = e + 2, b2 = e + 3;
    std::vector<Crossing> xs = d.crossings();
    for (Crossing& c : xs) {
        if (c.over_in == over) c.over_in = a2;
        if (c.under_in == over) c.under_in = a2;
        if (c.over_in == under) c.over_in = b2;
        if (c.under_in == under) c.under_in = b2;
    }
    if (parallel) {
        xs.push_back({s, over, a1, under, b1});
        xs.push_back({-s, a1, a2, b1, b2});
    } else {
        xs.push_back({s, over, a1, b1, b2});
        xs.push_back({-s, a1, a2, under, b1});
    }
    return LinkDiagram(std::move(xs), d.loops());
}

LinkDiagram negative_kink(const LinkDiagram& d, Semiarc a) {
    const auto e = static_cast<Semiarc>(d.semiarc_count());
    const Semiarc b = e, c = e + 1;
    std::vector<Crossing> xs = d.crossings();
    for (Crossing& x : xs) {
        if (x.over_in == a) x.over_in = c;
        if (x.under_in == a) x.under_in = c;
    }
    xs.push_back({-1, b, c, a, b});
    return LinkDiagram(std::move(xs), d.loops());
}

std::string random_gauss_code(std::mt19937& rng, int crossings, int components) {
    std::vector<std::string> tokens;
    for (int i = 1; i <= crossings; ++i) {
        const char sign = (rng() % 2) ? '+' : '-';
        const bool over_first = rng() % 2;
        tokens.push_back(std::string(over_first ? "O" : "U") + std::to_string(i) + sign);
        tokens.push_back(std::string(over_first ? "U" : "O") + std::to_string(i) + sign);
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    std::string out;
    if (components == 2 && tokens.size() >= 2) {
        // the cut leaves each line nonempty
        const std::size_t cut = 1 + rng() % (tokens.size() - 1);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i == cut) out += '\n';
            out += tokens[i];
        }
    } else {
        for (const auto& t : tokens) out += t;
    }
    return out + "\n";
}

}  // namespace oracle
