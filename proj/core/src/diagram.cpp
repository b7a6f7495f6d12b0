#include "birack/diagram.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "birack/error.hpp"

namespace birack {

namespace {

std::string line_prefix(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

std::string strip_comment(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    return line;
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<Semiarc> loops)
    : crossings_(std::move(crossings)), loops_(std::move(loops)) {
    Semiarc max_id = -1;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const Crossing& c = crossings_[i];
        if (c.sign != 1 && c.sign != -1)
            throw Error(ErrorKind::BadSign, "crossing " + std::to_string(i + 1) + " has sign " + std::to_string(c.sign));
        for (Semiarc e : {c.over_in, c.over_out, c.under_in, c.under_out}) {
            if (e < 0) throw Error(ErrorKind::DanglingSemiarc, "negative semiarc id " + std::to_string(e));
            max_id = std::max(max_id, e);
        }
    }
    for (Semiarc e : loops_) {
        if (e < 0) throw Error(ErrorKind::DanglingSemiarc, "negative semiarc id " + std::to_string(e));
        max_id = std::max(max_id, e);
    }
    const auto count = static_cast<std::size_t>(max_id + 1);
    successor_.assign(count, -1);
    std::vector<int> entering(count, -1);
    std::vector<bool> has_head(count, false);

    auto head = [&](Semiarc e, int crossing) {
        if (has_head[static_cast<std::size_t>(e)])
            throw Error(ErrorKind::DuplicateEndpoint, "semiarc " + std::to_string(e) + " ends at two places");
        has_head[static_cast<std::size_t>(e)] = true;
        entering[static_cast<std::size_t>(e)] = crossing;
    };
    std::vector<bool> has_tail(count, false);
    auto tail = [&](Semiarc e) {
        if (has_tail[static_cast<std::size_t>(e)])
            throw Error(ErrorKind::DuplicateEndpoint, "semiarc " + std::to_string(e) + " starts at two places");
        has_tail[static_cast<std::size_t>(e)] = true;
    };
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const Crossing& c = crossings_[i];
        head(c.over_in, static_cast<int>(i));
        head(c.under_in, static_cast<int>(i));
        tail(c.over_out);
        tail(c.under_out);
        successor_[static_cast<std::size_t>(c.over_in)] = c.over_out;
        successor_[static_cast<std::size_t>(c.under_in)] = c.under_out;
    }
    for (Semiarc e : loops_) {
        head(e, -1);
        tail(e);
        successor_[static_cast<std::size_t>(e)] = e;
    }
    for (std::size_t e = 0; e < count; ++e) {
        if (!has_head[e]) throw Error(ErrorKind::DanglingSemiarc, "semiarc " + std::to_string(e) + " never enters a crossing");
        if (!has_tail[e]) throw Error(ErrorKind::DanglingSemiarc, "semiarc " + std::to_string(e) + " never leaves a crossing");
    }
    std::sort(loops_.begin(), loops_.end());

    component_of_.assign(count, 0);
    std::vector<bool> seen(count, false);
    for (std::size_t e = 0; e < count; ++e) {
        if (seen[e]) continue;
        std::vector<Semiarc> cycle;
        auto x = static_cast<Semiarc>(e);
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = true;
            component_of_[static_cast<std::size_t>(x)] = components_.size();
            cycle.push_back(x);
            x = successor_[static_cast<std::size_t>(x)];
        }
        components_.push_back(std::move(cycle));
    }
}

std::size_t LinkDiagram::component_of(Semiarc e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= component_of_.size())
        throw Error(ErrorKind::OutOfRange, "no semiarc " + std::to_string(e));
    return component_of_[static_cast<std::size_t>(e)];
}

Semiarc LinkDiagram::successor(Semiarc e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= successor_.size())
        throw Error(ErrorKind::OutOfRange, "no semiarc " + std::to_string(e));
    return successor_[static_cast<std::size_t>(e)];
}

std::vector<int> LinkDiagram::framing() const {
    std::vector<int> w(components_.size(), 0);
    for (const Crossing& c : crossings_) {
        const std::size_t over = component_of(c.over_in);
        if (over == component_of(c.under_in)) w[over] += c.sign;
    }
    return w;
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const Crossing& c : crossings_) w += c.sign;
    return w;
}

LinkDiagram parse_crossing_list(std::string_view text) {
    std::vector<Crossing> crossings;
    std::vector<Semiarc> loops;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(strip_comment(line));
        std::string tag;
        if (!(fields >> tag)) continue;
        std::string extra;
        if (tag == "X" || tag == "x") {
            Crossing c;
            if (!(fields >> c.sign >> c.over_in >> c.over_out >> c.under_in >> c.under_out) || (fields >> extra))
                throw Error(ErrorKind::ParseError, line_prefix(line_no) + "expected 'X sign o_in o_out u_in u_out'");
            if (c.sign != 1 && c.sign != -1)
                throw Error(ErrorKind::BadSign, line_prefix(line_no) + "sign must be +1 or -1");
            crossings.push_back(c);
        } else if (tag == "loop") {
            Semiarc e = 0;
            if (!(fields >> e) || (fields >> extra))
                throw Error(ErrorKind::ParseError, line_prefix(line_no) + "expected 'loop <id>'");
            loops.push_back(e);
        } else {
            throw Error(ErrorKind::ParseError, line_prefix(line_no) + "unknown record '" + tag + "'");
        }
    }
    return LinkDiagram(std::move(crossings), std::move(loops));
}

std::string render_crossing_list(const LinkDiagram& d) {
    std::ostringstream out;
    for (const Crossing& c : d.crossings())
        out << "X " << (c.sign > 0 ? "+1" : "-1") << ' ' << c.over_in << ' ' << c.over_out << ' ' << c.under_in << ' '
            << c.under_out << '\n';
    for (Semiarc e : d.loops()) out << "loop " << e << '\n';
    return out.str();
}

namespace {

struct GaussToken {
    bool over;
    std::string label;
    int sign;
};

std::vector<GaussToken> tokenize_gauss(const std::string& line, std::size_t line_no) {
    std::vector<GaussToken> tokens;
    std::size_t i = 0;
    const std::string minus = "\xE2\x88\x92";
    while (i < line.size()) {
        const char ch = line[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
            ++i;
            continue;
        }
        if (ch != 'O' && ch != 'U' && ch != 'o' && ch != 'u')
            throw Error(ErrorKind::ParseError, line_prefix(line_no) + "expected O or U at column " + std::to_string(i + 1));
        GaussToken t{ch == 'O' || ch == 'o', {}, 0};
        ++i;
        while (i < line.size() && std::isalnum(static_cast<unsigned char>(line[i]))) t.label += line[i++];
        if (t.label.empty())
            throw Error(ErrorKind::ParseError, line_prefix(line_no) + "missing crossing label at column " + std::to_string(i + 1));
        if (i < line.size() && line[i] == '+') {
            t.sign = 1;
            ++i;
        } else if (i < line.size() && line[i] == '-') {
            t.sign = -1;
            ++i;
        } else if (line.compare(i, minus.size(), minus) == 0) {
            t.sign = -1;
            i += minus.size();
        } else {
            throw Error(ErrorKind::ParseError, line_prefix(line_no) + "missing sign after crossing " + t.label);
        }
        tokens.push_back(std::move(t));
    }
    return tokens;
}

}  // namespace

LinkDiagram parse_gauss(std::string_view text) {
    struct Ends {
        std::optional<std::pair<Semiarc, Semiarc>> over, under;
        int over_sign = 0, under_sign = 0;
    };
    std::map<std::string, Ends> by_label;
    std::vector<std::string> order;
    std::vector<Semiarc> loops;
    Semiarc offset = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = strip_comment(raw);
        std::istringstream probe(line);
        std::string first;
        if (!(probe >> first)) continue;
        if (first == "loop") {
            loops.push_back(offset++);
            continue;
        }
        const auto tokens = tokenize_gauss(line, line_no);
        const auto m = static_cast<Semiarc>(tokens.size());
        for (Semiarc p = 0; p < m; ++p) {
            const GaussToken& t = tokens[static_cast<std::size_t>(p)];
            const std::pair<Semiarc, Semiarc> ends{offset + (p + m - 1) % m, offset + p};
            auto [it, fresh] = by_label.try_emplace(t.label);
            if (fresh) order.push_back(t.label);
            Ends& e = it->second;
            auto& slot = t.over ? e.over : e.under;
            if (slot)
                throw Error(ErrorKind::UnmatchedCrossingLabel,
                            line_prefix(line_no) + "crossing " + t.label + " has two " + (t.over ? "O" : "U") + " tokens");
            slot = ends;
            (t.over ? e.over_sign : e.under_sign) = t.sign;
        }
        offset += m;
    }

    std::vector<Crossing> crossings;
    for (const auto& label : order) {
        const Ends& e = by_label.at(label);
        if (!e.over || !e.under)
            throw Error(ErrorKind::UnmatchedCrossingLabel, "crossing " + label + " is missing its " + (e.over ? "U" : "O") + " token");
        if (e.over_sign != e.under_sign)
            throw Error(ErrorKind::SignMismatch, "crossing " + label + " has different signs on its O and U tokens");
        crossings.push_back({e.over_sign, e.over->first, e.over->second, e.under->first, e.under->second});
    }
    return LinkDiagram(std::move(crossings), std::move(loops));
}

std::string render_gauss(const LinkDiagram& d) {
    // Crossing i is labelled i + 1; each component starts at the crossing its
    // lowest semiarc enters.
    std::vector<std::pair<int, bool>> head_of(d.semiarc_count(), {-1, false});
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        const Crossing& c = d.crossings()[i];
        head_of[static_cast<std::size_t>(c.over_in)] = {static_cast<int>(i), true};
        head_of[static_cast<std::size_t>(c.under_in)] = {static_cast<int>(i), false};
    }
    std::ostringstream out;
    for (const auto& comp : d.components()) {
        if (head_of[static_cast<std::size_t>(comp.front())].first < 0) {
            out << "loop\n";
            continue;
        }
        for (Semiarc e : comp) {
            const auto [i, over] = head_of[static_cast<std::size_t>(e)];
            out << (over ? 'O' : 'U') << (i + 1) << (d.crossings()[static_cast<std::size_t>(i)].sign > 0 ? '+' : '-');
        }
        out << '\n';
    }
    return out.str();
}

LinkDiagram parse_pd(std::string_view text) {
    std::vector<long long> numbers;
    for (std::size_t i = 0; i < text.size();) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
            numbers.push_back(v);
        } else if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            ++i;
        }
    }
    if (numbers.empty() || numbers.size() % 4 != 0)
        throw Error(ErrorKind::ParseError, "PD code needs a positive multiple of four edge labels, got " + std::to_string(numbers.size()));

    std::map<long long, Semiarc> id;
    for (long long v : numbers) id.emplace(v, 0);
    Semiarc next = 0;
    for (auto& [label, e] : id) e = next++;

    const std::size_t count = numbers.size() / 4;
    std::vector<std::array<Semiarc, 4>> x(count);
    for (std::size_t c = 0; c < count; ++c)
        for (std::size_t k = 0; k < 4; ++k) x[c][k] = id.at(numbers[4 * c + k]);

    // source[e] / target[e]: crossing where e starts / ends, -1 while unknown.
    std::vector<int> source(id.size(), -1), target(id.size(), -1);
    auto set_end = [](std::vector<int>& v, Semiarc e, int c, const char* what) {
        if (v[static_cast<std::size_t>(e)] >= 0 && v[static_cast<std::size_t>(e)] != c)
            throw Error(ErrorKind::DuplicateEndpoint, "PD edge " + std::to_string(e) + " has two " + what);
        v[static_cast<std::size_t>(e)] = c;
    };
    for (std::size_t c = 0; c < count; ++c) {
        set_end(target, x[c][0], static_cast<int>(c), "heads");
        set_end(source, x[c][2], static_cast<int>(c), "tails");
    }
    std::vector<int> over_forward(count, 0);  // +1: j -> l, -1: l -> j
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t c = 0; c < count; ++c) {
            if (over_forward[c] != 0) continue;
            const auto ci = static_cast<int>(c);
            const Semiarc j = x[c][1], l = x[c][3];
            auto known_elsewhere = [&](const std::vector<int>& v, Semiarc e) {
                return v[static_cast<std::size_t>(e)] >= 0 && v[static_cast<std::size_t>(e)] != ci;
            };
            if (known_elsewhere(source, j) || known_elsewhere(target, l)) over_forward[c] = 1;
            else if (known_elsewhere(source, l) || known_elsewhere(target, j)) over_forward[c] = -1;
            else continue;
            const Semiarc in = over_forward[c] > 0 ? j : l;
            const Semiarc out = over_forward[c] > 0 ? l : j;
            set_end(target, in, ci, "heads");
            set_end(source, out, ci, "tails");
            changed = true;
        }
    }
    std::vector<Crossing> crossings;
    for (std::size_t c = 0; c < count; ++c) {
        if (over_forward[c] == 0)
            throw Error(ErrorKind::AmbiguousOrientation,
                        "cannot orient the over-strand at PD crossing " + std::to_string(c + 1));
        const Semiarc j = x[c][1], l = x[c][3];
        if (over_forward[c] > 0) crossings.push_back({-1, j, l, x[c][0], x[c][2]});
        else crossings.push_back({1, l, j, x[c][0], x[c][2]});
    }
    return LinkDiagram(std::move(crossings));
}

LinkDiagram read_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    try {
        if (ends_with(".gauss")) return parse_gauss(text);
        if (ends_with(".pd")) return parse_pd(text);
        return parse_crossing_list(text);
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

LinkDiagram add_positive_kink(const LinkDiagram& d, std::size_t component) {
    if (component >= d.component_count())
        throw Error(ErrorKind::BadComponent, "component " + std::to_string(component + 1) + " does not exist (" +
                                                 std::to_string(d.component_count()) + " components)");
    const Semiarc a = d.components()[component].front();
    const auto b = static_cast<Semiarc>(d.semiarc_count());
    std::vector<Crossing> crossings = d.crossings();
    std::vector<Semiarc> loops;
    Semiarc c = b + 1;
    if (std::binary_search(d.loops().begin(), d.loops().end(), a)) {
        c = a;
        for (Semiarc e : d.loops())
            if (e != a) loops.push_back(e);
    } else {
        loops = d.loops();
        for (Crossing& x : crossings) {
            if (x.over_in == a) x.over_in = c;
            if (x.under_in == a) x.under_in = c;
        }
    }
    crossings.push_back({1, a, b, b, c});
    return LinkDiagram(std::move(crossings), std::move(loops));
}

LinkDiagram reverse_component(const LinkDiagram& d, std::size_t component) {
    if (component >= d.component_count())
        throw Error(ErrorKind::BadComponent, "component " + std::to_string(component + 1) + " does not exist (" +
                                                 std::to_string(d.component_count()) + " components)");
    std::vector<Crossing> crossings = d.crossings();
    for (Crossing& x : crossings) {
        const bool over = d.component_of(x.over_in) == component;
        const bool under = d.component_of(x.under_in) == component;
        if (over) std::swap(x.over_in, x.over_out);
        if (under) std::swap(x.under_in, x.under_out);
        if (over != under) x.sign = -x.sign;
    }
    return LinkDiagram(std::move(crossings), d.loops());
}

LinkDiagram mirror(const LinkDiagram& d) {
    std::vector<Crossing> crossings;
    for (const Crossing& x : d.crossings()) crossings.push_back({-x.sign, x.under_in, x.under_out, x.over_in, x.over_out});
    return LinkDiagram(std::move(crossings), d.loops());
}

}  // namespace birack
