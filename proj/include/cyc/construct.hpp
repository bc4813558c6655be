#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyc/group.hpp"

namespace cyc {

// --- Standard families -----------------------------------------------------
// Element labeling for every family is fixed and documented in
// docs/FORMATS.md; tables depend only on the parameters, so identical calls
// give identical groups.

// Z(n), n >= 1: residues 0..n-1 under addition.
Group cyclic(std::size_t n);

// EA(p,k) = (Z_p)^k, p prime, k >= 0: index = base-p digit string, digit i
// weighted p^i; componentwise addition.
Group elem_abelian(std::size_t p, std::size_t k);

// D(2n), order 2n >= 2: indices 0..n-1 are rotations a^i, n+i is b*a^i.
Group dihedral(std::size_t order);

// Dic(4m), order 4m >= 4: indices 0..2m-1 are a^i (|a| = 2m), 2m+i is b*a^i,
// with b^2 = a^m and b a b^-1 = a^-1.
Group dicyclic(std::size_t order);

// Q(2^k) = Dic(2^k), order a power of two, >= 8.
Group quaternion_generalized(std::size_t order);

// M(2^k), k >= 4: order 2^k with presentation a^(2^(k-1)) = b^2 = e,
// b a b^-1 = a^(1 + 2^(k-2)). Indices 0..2^(k-1)-1 are a^i, then b*a^i.
Group modular_maximal_cyclic(std::size_t order);

// Heis(p), p prime: upper unitriangular 3x3 matrices over Z_p. Element
// (a,b,c) has index a*p^2 + b*p + c; (a,b,c)(a',b',c') =
// (a+a', b+b', c+c'+a*b').
Group heisenberg_mod_p(std::size_t p);

// --- Products ----------------------------------------------------------------

// A x B with pair (a,b) at index a*|B| + b.
Group direct_product(const Group& a, const Group& b);

// How H acts on N in a semidirect product: images of chosen H-generators as
// permutations of N's element indices, or one of the two shorthands.
struct ActionSpec {
  // (H element index, permutation of N's indices as an image vector).
  std::vector<std::pair<elem, std::vector<elem>>> generator_images;
  bool inversion = false;  // "inv": H element 1 acts by n -> n^-1
  bool trivial = false;    // "trivial": every H element acts as identity
};

// N x| H. Pair (n,h) sits at index n*|H| + h and
// (n1,h1)(n2,h2) = (n1 * alpha_{h1}(n2), h1 h2). Each named generator image
// must be an automorphism of N (ActionNotAutomorphism); the images must
// extend to a homomorphism H -> Aut(N) (ActionNotHomomorphism); the named
// generators must generate H (GeneratorsDontGenerate).
Group semidirect(const Group& n, const Group& h, const ActionSpec& action);

// Closure of permutation generators on points 0..degree-1 under composition
// (sigma*tau)(x) = sigma(tau(x)). The identity gets index 0 and elements are
// numbered in breadth-first discovery order, multiplying on the right by the
// generators in the order given. Throws NotAPermutation for malformed
// generators and ClosureTooLarge when the closure exceeds `order_cap`.
Group from_permutations(std::size_t degree,
                        const std::vector<std::vector<elem>>& generators,
                        std::size_t order_cap = kDefaultOrderCap);

}  // namespace cyc
