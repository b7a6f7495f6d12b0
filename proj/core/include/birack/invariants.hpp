#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birack/algebra.hpp"
#include "birack/diagram.hpp"
#include "birack/homology.hpp"
#include "birack/laurent.hpp"

namespace birack {

// labeling[e] is the element on semiarc e.
using Labeling = std::vector<Element>;

// Calls visit once per labeling, in the solver's (deterministic) search order.
// Returning false from visit stops the enumeration early.
void for_each_labeling(const LinkDiagram& d, const AugmentedBirack& b,
                       const std::function<bool(const Labeling&)>& visit);

// Sorted lexicographically.
std::vector<Labeling> enumerate_labelings(const LinkDiagram& d, const AugmentedBirack& b);
std::size_t count_labelings(const LinkDiagram& d, const AugmentedBirack& b);

// Index of the first crossing whose relation f violates, if any.
std::optional<std::size_t> first_violated_crossing(const LinkDiagram& d, const AugmentedBirack& b, const Labeling& f);

// sum over crossings of +phi(u_out, o_in) (positive) or -phi(u_in, o_out) (negative).
// Throws InvalidLabeling on a malformed labeling; the birack overload also
// checks the crossing relations.
std::int64_t boltzmann_weight(const LinkDiagram& d, const Labeling& f, const Cochain2& phi);
std::int64_t boltzmann_weight(const LinkDiagram& d, const AugmentedBirack& b, const Labeling& f, const Cochain2& phi);

// Per-crossing contributions in crossing order, for tracing.
std::vector<std::int64_t> crossing_weights(const LinkDiagram& d, const Labeling& f, const Cochain2& phi);

struct FramingCount {
    std::vector<int> framing;
    std::size_t count = 0;
};

struct InvariantResult {
    std::vector<FramingCount> per_framing;   // ordered by framing vector
    std::size_t phi_z = 0;
    std::optional<LaurentPolynomial> poly;   // present when a cocycle was given
    std::map<std::int64_t, std::size_t> multiset;  // Boltzmann weight -> multiplicity
    std::vector<std::string> warnings;
};

struct InvariantOptions {
    std::size_t threads = 1;
    std::size_t max_tile = 1u << 16;  // bound on N^c
    bool strict = false;              // throw NotReducedCocycle instead of warning
};

// d with its component i carrying framing target[i], reached by adding
// target[i] - framing(d)[i] positive kinks. Throws BadFraming when some target
// lies below the diagram's own framing.
LinkDiagram with_framing(const LinkDiagram& d, const std::vector<int>& target);

// Sums over base framing + k, k in {0..N-1}^c.
InvariantResult counting_invariant(const LinkDiagram& d, const AugmentedBirack& b, const InvariantOptions& opt = {});
InvariantResult cocycle_invariant(const LinkDiagram& d, const AugmentedBirack& b, const Cochain2& phi,
                                  const InvariantOptions& opt = {});

// One framing only; phi may be omitted for a plain count. A phi that fails the
// 2-cocycle condition is reported as a warning.
InvariantResult framed_invariants(const LinkDiagram& d, const AugmentedBirack& b, const std::optional<Cochain2>& phi,
                                  const std::vector<int>& framing);

}  // namespace birack
