// Prints one PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// a criterion fails for any reason other than missing input data; such gaps
// are still printed as FAIL.
#include "support.hpp"

#include <birack/laurent.hpp>
#include <birack/smith.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

using namespace birack;

namespace {

struct Outcome {
    bool pass = true;
    bool missing_data = false;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            note << " [" << what << "]";
        }
    }
};

LaurentPolynomial poly(const LinkDiagram& d, const AugmentedBirack& b, const Cochain2& phi) {
    return *cocycle_invariant(d, b, phi).poly;
}

bool poly_is(const LinkDiagram& d, const AugmentedBirack& b, const Cochain2& phi, const std::string& expected) {
    return poly(d, b, phi) == LaurentPolynomial::parse(expected);
}

std::vector<AugmentedBirack> criterion7_biracks() {
    std::vector<AugmentedBirack> out{fixtures::four_element(), fixtures::five_element(), fixtures::tsr_3122()};
    for (auto& b : oracle::random_biracks(24, 20261015)) out.push_back(std::move(b));
    return out;
}

std::vector<std::string> all_bundled() {
    std::vector<std::string> out;
    for (const char* dir : {"links", "knots", "virtual"})
        for (const auto& e : std::filesystem::directory_iterator(fixtures::data_path(dir)))
            out.push_back(std::string(dir) + "/" + e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

void c1(Outcome& o) {
    const auto b = fixtures::four_element();
    o.expect(check_axioms(b.alpha_table(), b.beta_table()).ok(), "axioms");
    o.expect(b.kink_map().cycle_string() == "(1 4)(2 3)", "pi = " + b.kink_map().cycle_string());
    o.expect(b.characteristic() == 2, "N");
    o.note << " pi=" << b.kink_map().cycle_string() << " N=" << b.characteristic();
}

void c2(Outcome& o) {
    const auto r = counting_invariant(fixtures::diagram("links/L2a1.xl"), fixtures::four_element());
    const std::vector<std::pair<std::vector<int>, std::size_t>> expected{{{0, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 0}, {{1, 1}, 16}};
    o.expect(r.per_framing.size() == 4, "tile size");
    for (std::size_t i = 0; i < std::min<std::size_t>(4, r.per_framing.size()); ++i) {
        o.expect(r.per_framing[i].framing == expected[i].first, "framing order");
        o.expect(r.per_framing[i].count == expected[i].second, "count at framing " + std::to_string(i));
    }
    o.expect(r.phi_z == 16, "Phi^Z");
    o.note << " Phi^Z=" << r.phi_z;
}

void c3(Outcome& o) {
    const auto b = fixtures::four_element();
    const auto phi = fixtures::four_phi();
    o.expect(is_reduced_2_cocycle(b, phi) && oracle::six_term_identity(b, phi), "phi reduced");
    o.expect(poly_is(fixtures::diagram("links/L2a1.xl"), b, phi, "8+8u"), "L2a1");
    o.expect(poly_is(fixtures::diagram("links/L0a1.xl"), b, phi, "16"), "L0a1");
    o.expect(poly_is(fixtures::diagram("links/L4a1.xl"), b, phi, "8+8u^2"), "L4a1");
}

void c4(Outcome& o) {
    const auto b = fixtures::five_element();
    const auto phi = fixtures::five_phi();
    const std::vector<std::pair<std::string, std::string>> table{
        {"L2a1", "7+6u"}, {"L4a1", "19+6u^2"}, {"L5a1", "25"},
        {"L6a4", "125"},  {"L6a2", "7+6u^3"},  {"L6a5", "29+36u+18u^2+6u^3"}};
    for (const auto& [name, expected] : table)
        o.expect(poly_is(fixtures::diagram("links/" + name + ".xl"), b, phi, expected), name);
}

void c5(Outcome& o) {
    const auto b = fixtures::five_element();
    const auto phi = fixtures::five_phi();
    o.expect(poly_is(fixtures::diagram("virtual/2.1.gauss"), b, phi, "2+3u"), "2.1");
    o.expect(poly_is(fixtures::diagram("knots/3_1.gauss"), b, phi, "5"), "3_1");
    o.expect(poly_is(fixtures::diagram("knots/4_1.gauss"), b, phi, "5"), "4_1");
    bool gap = false;
    for (const auto& [name, expected] : {std::pair<std::string, std::string>{"3.1", "5"}, {"3.2", "2+3u^-1"}}) {
        const std::string file = "virtual/" + name + ".gauss";
        if (!std::filesystem::exists(fixtures::data_path(file))) {
            gap = true;
            continue;
        }
        o.expect(poly_is(fixtures::diagram(file), b, phi, expected), name);
    }
    if (gap) {
        // excused only when everything that could be computed agreed
        o.missing_data = o.pass;
        o.pass = false;
        o.note << " [3.1, 3.2: Gauss codes not bundled, data unavailable]";
    }
}

void c6(Outcome& o) {
    const auto b = fixtures::five_element();
    const auto phi = fixtures::five_phi();
    const auto h = fixtures::diagram("links/hopf_positive.xl");
    const auto p = poly(h, b, phi), q = poly(reverse_component(h, 1), b, phi);
    o.expect(p == LaurentPolynomial::parse("7+6u"), "positive Hopf");
    o.expect(q == LaurentPolynomial::parse("7+6u^-1"), "reversed");
    o.note << " " << p.to_string() << " -> " << q.to_string();
}

void c7(Outcome& o) {
    const auto biracks = criterion7_biracks();
    std::size_t random_small = 0;
    for (std::size_t i = 3; i < biracks.size(); ++i) random_small += biracks[i].size() <= 4;
    o.expect(random_small >= 20, "fewer than 20 random biracks");
    for (const auto& b : biracks)
        for (std::size_t n = 2; n <= 4; ++n)
            o.expect((boundary_matrix(b, n - 1) * boundary_matrix(b, n)).is_zero(),
                     "n=" + std::to_string(n) + " on " + std::to_string(b.size()) + "-element birack");
    o.note << " " << biracks.size() << " biracks (" << random_small << " random)";
}

void c8(Outcome& o) {
    const auto biracks = criterion7_biracks();
    for (const auto& b : biracks)
        for (std::size_t n : {2u, 3u})
            o.expect(degenerate_closure_failures(b, n).empty(), "degree " + std::to_string(n));
}

void c9(Outcome& o) {
    const std::vector<std::pair<AugmentedBirack, Cochain2>> cases{{fixtures::four_element(), fixtures::four_phi()},
                                                                  {fixtures::five_element(), fixtures::five_phi()}};
    const auto names = all_bundled();
    for (const auto& [b, phi] : cases) {
        std::vector<LaurentPolynomial> reference;
        for (const auto& f : names) reference.push_back(poly(fixtures::diagram(f), b, phi));
        const std::vector<LinkDiagram> small{fixtures::diagram("links/L2a1.xl"),
                                             add_positive_kink(fixtures::diagram("knots/unknot.xl"), 0)};
        for (Element x = 1; x <= static_cast<Element>(b.size()); ++x) {
            Cochain1 psi(b.size(), 0);
            psi[static_cast<std::size_t>(x - 1)] = 1;
            const auto delta = evaluate_coboundary(b, psi);
            for (const auto& d : small)
                for (const auto& f : enumerate_labelings(d, b))
                    o.expect(boltzmann_weight(d, b, f, delta) == 0, "BW of a coboundary");
            for (std::size_t i = 0; i < names.size(); ++i)
                o.expect(poly(fixtures::diagram(names[i]), b, phi + delta) == reference[i], names[i]);
        }
    }
    o.note << " " << names.size() << " diagrams";
}

void c10(Outcome& o) {
    for (const auto& b : {fixtures::four_element(), fixtures::five_element()}) {
        const int n = static_cast<int>(b.characteristic());
        for (const char* f : {"links/L2a1.xl", "knots/unknot.xl"}) {
            const auto d = fixtures::diagram(f);
            const auto base = d.framing();
            // every w in the tile against w + N e_i
            std::vector<int> k(d.component_count(), 0);
            for (bool more = true; more;) {
                auto w = base;
                for (std::size_t i = 0; i < w.size(); ++i) w[i] += k[i];
                const std::size_t c = count_labelings(with_framing(d, w), b);
                for (std::size_t i = 0; i < w.size(); ++i) {
                    auto shifted = w;
                    shifted[i] += n;
                    o.expect(count_labelings(with_framing(d, shifted), b) == c, f);
                }
                more = false;
                for (std::size_t i = 0; i < k.size() && !more; ++i) {
                    if (++k[i] < n) more = true;
                    else k[i] = 0;
                }
            }
        }
    }
}

void c11(Outcome& o) {
    std::vector<LinkDiagram> ds;
    for (const auto& f : all_bundled()) {
        const auto d = fixtures::diagram(f);
        if (d.semiarc_count() <= 6) ds.push_back(d);
        for (std::size_t c = 0; c < d.component_count(); ++c) {
            const auto k = add_positive_kink(d, c);
            if (k.semiarc_count() <= 6) ds.push_back(k);
        }
    }
    const auto u = fixtures::diagram("knots/unknot.xl");
    ds.push_back(add_positive_kink(add_positive_kink(u, 0), 0));
    ds.push_back(oracle::negative_kink(add_positive_kink(u, 0), 0));
    std::mt19937 rng(2718);
    for (int i = 0; i < 60; ++i) ds.push_back(parse_gauss(oracle::random_gauss_code(rng, 1 + i % 3, 1 + i % 2)));

    std::vector<AugmentedBirack> biracks{fixtures::four_element(), fixtures::tsr_3122()};
    for (auto& b : oracle::random_biracks(12, 99)) biracks.push_back(std::move(b));
    std::size_t pairs = 0;
    for (const auto& d : ds)
        for (const auto& b : biracks) {
            if (b.size() > 4) continue;
            ++pairs;
            o.expect(enumerate_labelings(d, b) == oracle::brute_force_labelings(d, b), "mismatch");
        }
    o.note << " " << ds.size() << " diagrams, " << pairs << " pairs";
}

void c12(Outcome& o) {
    std::size_t matrices = 0;
    for (const auto& b : criterion7_biracks())
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto m = boundary_matrix(b, n);
            const auto s = smith_normal_form(m);
            const auto v = validate_smith(m, s);
            ++matrices;
            o.expect(v.ok(), "degree " + std::to_string(n) + " on " + std::to_string(b.size()) + "-element birack");
        }
    o.note << " " << matrices << " matrices";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"4-element birack: axioms, kink map, characteristic", c1},
        {"Hopf link counting invariant, 4-element birack", c2},
        {"4-element cocycle invariants", c3},
        {"5-element classical link table", c4},
        {"5-element virtual and classical knots", c5},
        {"orientation reversal on the positive Hopf link", c6},
        {"boundary squares to zero", c7},
        {"degenerate subcomplex is closed", c8},
        {"coboundaries are invisible", c9},
        {"framing periodicity", c10},
        {"solver equals exhaustive search", c11},
        {"Smith decompositions validate", c12},
    };
    int status = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.missing_data = false;
            o.note << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu: %s  %s%s (%.2fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.note.str().c_str(), secs);
        if (!o.pass && !o.missing_data) status = 1;
    }
    std::fflush(stdout);
    return status;
}
