#pragma once

#include <birack/algebra.hpp>
#include <birack/diagram.hpp>
#include <birack/homology.hpp>
#include <birack/integer_matrix.hpp>
#include <birack/invariants.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

std::string data_path(const std::string& relative);

birack::AugmentedBirack four_element();
birack::AugmentedBirack five_element();
birack::AugmentedBirack tsr_3122();
birack::Cochain2 four_phi();
birack::Cochain2 five_phi();
birack::LinkDiagram diagram(const std::string& relative);

}  // namespace fixtures

// Independent reference implementations. Nothing here calls into the code it checks.
namespace oracle {

using birack::AugmentedBirack;
using birack::Element;
using birack::IntegerMatrix;
using birack::Labeling;
using birack::LinkDiagram;

// The crossing relation spelled out from the table entries.
bool crossing_holds(const birack::Crossing& c, const AugmentedBirack& b, const Labeling& f);

// Every map {semiarcs} -> X, filtered; lexicographic.
std::vector<Labeling> brute_force_labelings(const LinkDiagram& d, const AugmentedBirack& b);

// Rank over Q by fraction-free elimination.
std::size_t rational_rank(const IntegerMatrix& m);

// Axioms checked straight from the rows of the table (no sideways inverse cache).
bool satisfies_axioms(const std::vector<std::vector<Element>>& alpha,
                      const std::vector<std::vector<Element>>& beta);

// Boundary of rack homology, for biracks with every alpha_x the identity:
// d(x) = sum_k (-1)^k [ (.. x_k omitted ..) - (beta_{x_k} on x_1..x_{k-1}, x_k omitted, rest) ].
IntegerMatrix rack_boundary(const AugmentedBirack& b, std::size_t degree);

// phi(y,z) + phi(beta_y x, alpha_y z) + phi(x,y) == phi(alpha_x y, alpha_x z) + phi(x,z) + phi(beta_z x, beta_z y)
bool six_term_identity(const AugmentedBirack& b, const birack::Cochain2& phi);

// g . b : alpha'_x(y) = g alpha_{g^-1 x}(g^-1 y), same for beta.
AugmentedBirack conjugate(const AugmentedBirack& b, const std::vector<Element>& g);

// Validated biracks of size 2..4 drawn from rejection sampling (n <= 3),
// conjugated (t,s,r)-biracks over Z_4, and commuting constant actions.
std::vector<AugmentedBirack> random_biracks(std::size_t count, std::uint32_t seed);

// Reidemeister II: strand through `over` passes over the strand through `under`
// twice, signs (s, -s). `parallel` chooses the orientation of the second strand.
LinkDiagram r2_move(const LinkDiagram& d, birack::Semiarc over, birack::Semiarc under, int s, bool parallel);

// Negative curl on semiarc a: a -> under, comes back over.
LinkDiagram negative_kink(const LinkDiagram& d, birack::Semiarc a);

// Random signed Gauss code with `crossings` crossings spread over 1 or 2 components.
std::string random_gauss_code(std::mt19937& rng, int crossings, int components);

}  // namespace oracle
