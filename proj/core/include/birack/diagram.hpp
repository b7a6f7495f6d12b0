#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace birack {

using Semiarc = int;

// Labels around a crossing with both strands oriented upward:
//   positive: S(u_out, o_in) = (o_out, u_in)
//   negative: S(u_in, o_out) = (o_in, u_out)
struct Crossing {
    int sign = 1;
    Semiarc over_in = 0;
    Semiarc over_out = 0;
    Semiarc under_in = 0;
    Semiarc under_out = 0;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Oriented link diagram at semiarc granularity. Semiarcs are 0..E-1; every
// semiarc enters exactly one crossing and leaves exactly one, except loops,
// which are whole crossingless components. Virtual crossings are not represented.
class LinkDiagram {
public:
    LinkDiagram() = default;

    // Validates closure; throws DanglingSemiarc, DuplicateEndpoint or BadSign.
    LinkDiagram(std::vector<Crossing> crossings, std::vector<Semiarc> loops = {});

    std::size_t semiarc_count() const noexcept { return successor_.size(); }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<Semiarc>& loops() const noexcept { return loops_; }

    std::size_t component_count() const noexcept { return components_.size(); }
    // Each component is listed along its orientation, starting from its lowest
    // semiarc; components are ordered by that lowest id.
    const std::vector<std::vector<Semiarc>>& components() const noexcept { return components_; }
    std::size_t component_of(Semiarc e) const;
    Semiarc successor(Semiarc e) const;

    // Signed count of self-crossings, per component.
    std::vector<int> framing() const;
    int writhe() const;

    friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
        return a.crossings_ == b.crossings_ && a.loops_ == b.loops_;
    }

private:
    std::vector<Crossing> crossings_;
    std::vector<Semiarc> loops_;
    std::vector<Semiarc> successor_;
    std::vector<std::size_t> component_of_;
    std::vector<std::vector<Semiarc>> components_;
};

// Lines "X <sign> <o_in> <o_out> <u_in> <u_out>" and "loop <id>"; '#' comments.
LinkDiagram parse_crossing_list(std::string_view text);
std::string render_crossing_list(const LinkDiagram& d);

// One component per line as a signed Gauss code, e.g. "O1+U2+O3+U1+O2+U3+";
// a line "loop" is a crossingless component. Signs may be '+', '-' or U+2212.
// The semiarc after token p of a component is numbered p (plus the offset of
// the earlier components).
LinkDiagram parse_gauss(std::string_view text);
std::string render_gauss(const LinkDiagram& d);

// PD code X[i,j,k,l] read counterclockwise from the incoming under-edge; any
// bracket style is accepted. The over strand's direction is inferred from the
// neighbouring crossings; codes where it stays undetermined are rejected.
LinkDiagram parse_pd(std::string_view text);

LinkDiagram read_diagram_file(const std::string& path);

// Splits the lowest semiarc a of the component into a, E, E+1 with a positive
// curl X(+1, a, E, E, E+1); the label after the curl is pi of the label before.
LinkDiagram add_positive_kink(const LinkDiagram& d, std::size_t component);

// Reverses one component. Mixed crossings change sign, self-crossings keep it;
// over/under is unchanged.
LinkDiagram reverse_component(const LinkDiagram& d, std::size_t component);

// Exchanges over and under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);

}  // namespace birack
