// birack-tool: axioms, (co)homology, reduced cocycles and link invariants for
// finite augmented biracks.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "birack/algebra.hpp"
#include "birack/diagram.hpp"
#include "birack/error.hpp"
#include "birack/homology.hpp"
#include "birack/invariants.hpp"
#include "birack/smith.hpp"

using json = nlohmann::ordered_json;
using namespace birack;

namespace {

constexpr int kExitFailure = 1;  // the input was read but a check failed
constexpr int kExitError = 2;    // the input could not be processed

struct Globals {
    bool json = false;
    std::size_t max_basis = 0;
};

std::string big(const BigInt& v) { return v.str(); }

json group_json(const HomologyGroup& g) {
    json t = json::array();
    for (const auto& v : g.torsion) t.push_back(big(v));
    return {{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

json cochain_json(const Cochain2& phi) {
    json terms = json::array();
    for (std::size_t i = 1; i <= phi.size(); ++i)
        for (std::size_t j = 1; j <= phi.size(); ++j)
            if (auto c = phi(static_cast<Element>(i), static_cast<Element>(j))) terms.push_back({i, j, c});
    return {{"terms", terms}, {"text", phi.to_string()}};
}

std::string framing_text(const std::vector<int>& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

std::vector<int> parse_framing(const std::string& text) {
    std::vector<int> w;
    std::string cleaned;
    for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == '[' || ch == ']') ? ' ' : (ch == ',' ? ' ' : ch);
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            w.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadFraming, "cannot read framing vector '" + text + "'");
        }
    }
    if (w.empty()) throw Error(ErrorKind::BadFraming, "empty framing vector");
    return w;
}

LinkDiagram load_diagram(const std::string& path, const std::string& format) {
    if (format.empty()) return read_diagram_file(path);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        if (format == "gauss") return parse_gauss(buf.str());
        if (format == "pd") return parse_pd(buf.str());
        return parse_crossing_list(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

// 1-based component index from the command line.
std::size_t component_arg(const LinkDiagram& d, int k) {
    if (k < 1 || static_cast<std::size_t>(k) > d.component_count())
        throw Error(ErrorKind::BadComponent, "component " + std::to_string(k) + " does not exist (" +
                                                 std::to_string(d.component_count()) + " components)");
    return static_cast<std::size_t>(k - 1);
}

int cmd_check(const Globals& g, const std::string& path) {
    const BirackMatrix m = read_birack_matrix(path);
    PermutationTable alpha, beta;
    try {
        std::tie(alpha, beta) = matrix_to_tables(m);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
    const AxiomReport r = check_axioms(alpha, beta);
    std::optional<std::size_t> big_n;
    if (r.kink_map) big_n = r.kink_map->order();

    if (g.json) {
        json violations = json::array();
        for (const auto& v : r.violations)
            violations.push_back({{"axiom", v.axiom}, {"clause", v.clause}, {"witness", v.witness}, {"detail", v.detail}});
        json out = {{"size", r.size},
                    {"axiom1", r.axiom1},
                    {"axiom2", r.axiom2},
                    {"axiom3", r.axiom3},
                    {"ok", r.ok()},
                    {"kink_map_missing", r.kink_map_missing},
                    {"kink_map_not_unique", r.kink_map_not_unique},
                    {"violations", violations}};
        if (r.kink_map) {
            out["pi"] = r.kink_map->cycle_string();
            out["pi_images"] = std::vector<Element>(r.kink_map->images().begin(), r.kink_map->images().end());
            out["N"] = *big_n;
        }
        std::cout << out.dump(2) << '\n';
        return r.ok() ? 0 : kExitFailure;
    }

    const char* names[] = {"(i)", "(ii)", "(iii)"};
    const bool pass[] = {r.axiom1, r.axiom2, r.axiom3};
    for (int a = 0; a < 3; ++a) std::cout << "axiom " << names[a] << ": " << (pass[a] ? "pass" : "FAIL") << '\n';
    constexpr std::size_t shown = 10;
    for (std::size_t i = 0; i < r.violations.size() && i < shown; ++i)
        std::cout << "  " << r.violations[i].detail << '\n';
    if (r.violations.size() > shown) std::cout << "  ... " << r.violations.size() - shown << " more\n";
    if (r.ok()) {
        std::cout << "axioms OK; pi=" << r.kink_map->cycle_string() << "; N=" << *big_n << '\n';
        return 0;
    }
    std::cout << "axioms FAILED\n";
    return kExitFailure;
}

int cmd_homology(const Globals& g, const std::string& path, int degree, bool reduced, std::optional<long long> modulus,
                 const std::string& contains) {
    if (degree < 0) throw Error(ErrorKind::OutOfRange, "--n must be nonnegative");
    const AugmentedBirack b = read_birack_file(path);
    const auto n = static_cast<std::size_t>(degree);

    const bool squares_to_zero = !double_boundary_failure(b, n + 1).has_value();

    json out = {{"degree", n}, {"boundary_squared_zero", squares_to_zero}};
    std::ostringstream text;
    text << "d_" << n << " d_" << n + 1 << " = 0: " << (squares_to_zero ? "yes" : "NO") << '\n';
    if (!modulus) {
        const HomologyGroup h = homology_group(b, n);
        out["homology"] = group_json(h);
        text << "H_" << n << " = " << h.to_string() << '\n';
    }
    const HomologyGroup c = cohomology_group(b, n, modulus);
    out["cohomology"] = group_json(c);
    text << "H^" << n << (modulus ? "(Z_" + std::to_string(*modulus) + ")" : std::string()) << " = " << c.to_string()
         << '\n';

    if (reduced || !contains.empty()) {
        const ReducedCocycles rc = reduced_2_cocycles(b, modulus);
        json basis = json::array();
        for (const auto& phi : rc.basis) basis.push_back(cochain_json(phi));
        out["reduced_2_cocycles"] = {{"group", group_json(rc.cocycle_group)}, {"basis", basis}};
        text << "reduced 2-cocycles: " << rc.cocycle_group.to_string() << " (" << rc.basis.size() << " generators)\n";
        for (const auto& phi : rc.basis) text << "  " << phi.to_string() << '\n';
        if (rc.quotient) {
            out["reduced_2_cocycles"]["modulo_coboundaries"] = group_json(*rc.quotient);
            text << "modulo coboundaries: " << rc.quotient->to_string() << '\n';
        }
    }
    int status = squares_to_zero ? 0 : kExitFailure;
    if (!contains.empty()) {
        const Cochain2 phi = read_cochain_file(contains, b.size());
        const bool member = in_reduced_cocycle_space(b, phi, modulus);
        out["contains"] = {{"cochain", cochain_json(phi)}, {"member", member}};
        text << phi.to_string() << (member ? " is" : " is NOT") << " a reduced 2-cocycle\n";
        if (!member) status = kExitFailure;
    }
    if (g.json) std::cout << out.dump(2) << '\n';
    else std::cout << text.str();
    return status;
}

int cmd_cocycles(const Globals& g, const std::string& path, std::optional<long long> modulus) {
    const AugmentedBirack b = read_birack_file(path);
    const ReducedCocycles rc = reduced_2_cocycles(b, modulus);
    if (g.json) {
        json basis = json::array(), cob = json::array();
        for (const auto& phi : rc.basis) basis.push_back(cochain_json(phi));
        for (const auto& phi : rc.coboundaries) cob.push_back(cochain_json(phi));
        json out = {{"modulus", modulus ? json(*modulus) : json(nullptr)},
                    {"group", group_json(rc.cocycle_group)},
                    {"basis", basis},
                    {"coboundaries", cob}};
        if (rc.quotient) out["modulo_coboundaries"] = group_json(*rc.quotient);
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "reduced 2-cocycles" << (modulus ? " mod " + std::to_string(*modulus) : std::string()) << ": "
              << rc.cocycle_group.to_string() << '\n';
    for (const auto& phi : rc.basis) std::cout << "  " << phi.to_string() << '\n';
    std::cout << "coboundaries of chi_1..chi_" << b.size() << ":\n";
    for (const auto& phi : rc.coboundaries) std::cout << "  " << phi.to_string() << '\n';
    if (rc.quotient) std::cout << "modulo coboundaries: " << rc.quotient->to_string() << '\n';
    return 0;
}

struct InvariantArgs {
    std::string birack, link, phi, framed, format;
    int reverse = 0;
    bool mirror = false;
    bool strict = false;
    std::size_t threads = 1;
};

int cmd_invariant(const Globals& g, const InvariantArgs& a) {
    const AugmentedBirack b = read_birack_file(a.birack);
    LinkDiagram d = load_diagram(a.link, a.format);
    if (a.mirror) d = mirror(d);
    if (a.reverse != 0) d = reverse_component(d, component_arg(d, a.reverse));
    std::optional<Cochain2> phi;
    if (!a.phi.empty()) phi = read_cochain_file(a.phi, b.size());

    InvariantResult r;
    if (!a.framed.empty()) {
        r = framed_invariants(d, b, phi, parse_framing(a.framed));
    } else {
        InvariantOptions opt;
        opt.threads = a.threads;
        opt.strict = a.strict;
        r = phi ? cocycle_invariant(d, b, *phi, opt) : counting_invariant(d, b, opt);
    }

    if (g.json) {
        json per = json::array(), poly = json::array(), multiset = json::array();
        for (const auto& fc : r.per_framing) per.push_back({{"framing", fc.framing}, {"count", fc.count}});
        if (r.poly)
            for (const auto& [e, c] : r.poly->terms()) poly.push_back({e, c});
        for (const auto& [w, m] : r.multiset) multiset.push_back({w, m});
        json out = {{"per_framing", per},
                    {"phi_Z", r.phi_z},
                    {"poly", r.poly ? poly : json(nullptr)},
                    {"poly_text", r.poly ? json(r.poly->to_string()) : json(nullptr)},
                    {"multiset", multiset},
                    {"warnings", r.warnings}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << "per-framing counts:\n";
    for (const auto& fc : r.per_framing) std::cout << "  " << framing_text(fc.framing) << ": " << fc.count << '\n';
    std::cout << "Phi^Z = " << r.phi_z << '\n';
    if (r.poly) {
        std::cout << "Phi_phi = " << r.poly->to_string() << '\n';
        std::cout << "multiset = {";
        bool first = true;
        for (const auto& [w, m] : r.multiset) {
            std::cout << (first ? "" : ", ") << w << " x" << m;
            first = false;
        }
        std::cout << "}\n";
    }
    return 0;
}

int cmd_convert(const Globals& g, const std::string& link, const std::string& format, const std::string& to,
                bool do_mirror, int reverse) {
    LinkDiagram d = load_diagram(link, format);
    if (do_mirror) d = mirror(d);
    if (reverse != 0) d = reverse_component(d, component_arg(d, reverse));
    const std::string body = to == "gauss" ? render_gauss(d) : render_crossing_list(d);
    if (g.json) {
        std::cout << json{{"components", d.component_count()}, {"framing", d.framing()}, {"text", body}}.dump(2) << '\n';
        return 0;
    }
    std::cout << body;
    return 0;
}

void print_error(const Globals& g, const std::string& kind, const std::string& message) {
    if (g.json) std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
    else std::cerr << "error: " << kind << ": " << message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite augmented biracks: axioms, homology, cocycles, link invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--max-basis", g.max_basis, "largest chain-group rank to build (overrides BIRACK_MAX_BASIS)");

    std::string birack_path;
    auto* check = app.add_subcommand("check", "verify the birack axioms and report pi and N");
    check->add_option("birack", birack_path, "birack matrix file")->required();

    int degree = 2;
    bool reduced = false;
    std::optional<long long> modulus;
    std::string contains;
    auto* homology = app.add_subcommand("homology", "homology and cohomology in one degree");
    homology->add_option("birack", birack_path, "birack matrix file")->required();
    homology->add_option("--n", degree, "degree")->required();
    homology->add_flag("--reduced", reduced, "also solve for reduced 2-cocycles");
    homology->add_option("--mod", modulus, "coefficients in Z_m")->check(CLI::Range(2LL, 1LL << 31));
    homology->add_option("--contains", contains, "test a cochain file for membership in the reduced cocycles");

    auto* cocycles = app.add_subcommand("cocycles", "basis of reduced 2-cocycles");
    cocycles->add_option("birack", birack_path, "birack matrix file")->required();
    cocycles->add_option("--mod", modulus, "coefficients in Z_m")->check(CLI::Range(2LL, 1LL << 31));

    InvariantArgs inv;
    auto* invariant = app.add_subcommand("invariant", "counting and cocycle invariants of a link diagram");
    invariant->add_option("birack", inv.birack, "birack matrix file")->required();
    invariant->add_option("link", inv.link, "diagram file (.xl crossing list, .gauss, .pd)")->required();
    invariant->add_option("--phi", inv.phi, "2-cochain file 'i j c'");
    invariant->add_option("--framed", inv.framed, "single framing vector, e.g. 1,1");
    invariant->add_option("--reverse", inv.reverse, "reverse this component (1-based) first");
    invariant->add_flag("--mirror", inv.mirror, "mirror the diagram first");
    invariant->add_option("--format", inv.format, "input format")->check(CLI::IsMember({"xl", "gauss", "pd"}));
    invariant->add_option("--threads", inv.threads, "parallel framing-tile workers")->check(CLI::Range(1, 256));
    invariant->add_flag("--strict", inv.strict, "fail instead of warning on a non-reduced cocycle");

    std::string link, format, to = "xl";
    bool do_mirror = false;
    int reverse = 0;
    auto* convert = app.add_subcommand("convert", "rewrite a diagram as a crossing list or Gauss code");
    convert->add_option("link", link, "diagram file")->required();
    convert->add_option("--format", format, "input format")->check(CLI::IsMember({"xl", "gauss", "pd"}));
    convert->add_option("--to", to, "output format")->check(CLI::IsMember({"xl", "gauss"}));
    convert->add_flag("--mirror", do_mirror, "mirror the diagram");
    convert->add_option("--reverse", reverse, "reverse this component (1-based)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    if (g.max_basis > 0) setenv("BIRACK_MAX_BASIS", std::to_string(g.max_basis).c_str(), 1);

    try {
        if (*check) return cmd_check(g, birack_path);
        if (*homology) return cmd_homology(g, birack_path, degree, reduced, modulus, contains);
        if (*cocycles) return cmd_cocycles(g, birack_path, modulus);
        if (*invariant) return cmd_invariant(g, inv);
        if (*convert) return cmd_convert(g, link, format, to, do_mirror, reverse);
    } catch (const Error& e) {
        print_error(g, std::string(to_string(e.kind())), e.detail());
        return kExitError;
    } catch (const std::exception& e) {
        print_error(g, "InternalError", e.what());
        return kExitError;
    }
    return kExitError;
}
