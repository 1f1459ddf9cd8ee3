#pragma once

// Brute force reference implementations and random corpus generators shared
// by the unit and acceptance suites. Everything here trades speed for
// obviousness; nothing below reuses the code paths under test.

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "dirlim/congruence.hpp"
#include "dirlim/core.hpp"
#include "dirlim/dirsys.hpp"
#include "dirlim/eset.hpp"

namespace oracles {

using Rng = std::mt19937_64;

// Congruence closure by saturating one boolean relation matrix per object:
// symmetry and transitivity by repeated sweeps, functoriality by pushing
// every related pair through every action map, until nothing changes.
// Class ids match the library's numbering (first occurrence, elements
// ascending) so families compare with ==.
dirlim::CongruenceFamily closure_by_matrix(const dirlim::ESet& x,
                                           const dirlim::RelationFamily& r);

// The limit as a filtered cartesian product over all carriers. Throws
// dirlim::GuardError if the product exceeds cap.
std::vector<dirlim::LimitElement> limit_by_product(const dirlim::ESet& x, std::size_t cap);

// Partitions of {0..n-1} as restricted growth strings, lexicographic.
std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n);

// All monoids on {0..n-1} with identity 0, one canonical representative per
// isomorphism class. Exhaustive backtracking over association-consistent
// tables; n <= 5.
std::vector<dirlim::FiniteMonoid> monoid_catalog(std::uint32_t n);

// All posets on n unlabeled elements, one canonical representative each,
// built by repeatedly adjoining a maximal element over every downset; n <= 7.
std::vector<dirlim::Poset> poset_catalog(std::uint32_t n);

// --- random corpus ---------------------------------------------------------

// Random poset: a DAG on <= max_n nodes, transitively closed.
dirlim::Poset random_poset(Rng& rng, std::uint32_t max_n);

// Random finite category: a poset category on <= 4 objects or a monoid
// category of size <= 5, matching the corpus bounds (<= 4 objects,
// <= 10 morphisms).
std::shared_ptr<const dirlim::FiniteCategory> random_category(Rng& rng);

// Random functor on cat: a union of representable functors quotiented until
// every carrier has at most max_carrier elements. Always valid by
// construction.
dirlim::ESet random_eset(std::shared_ptr<const dirlim::FiniteCategory> cat, Rng& rng,
                         std::uint32_t max_carrier);

// Up to count random pairs, each within one object's carrier.
dirlim::RelationFamily random_pairs(const dirlim::ESet& x, Rng& rng, std::uint32_t count);

// Random finite directed system: a random index poset with a forced top,
// members the quotients of one random functor by a chain of congruences that
// only grows up the index, connects the induced projections.
dirlim::FiniteDirectedSystem random_system(Rng& rng);

}  // namespace oracles
