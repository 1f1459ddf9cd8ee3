#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dirlim/congruence.hpp"
#include "dirlim/core.hpp"

namespace dirlim {

// Least subset of M containing the seed and 1, closed under products and
// under right division: if ab lands in the set and b is in it, so is a.
// Sorted element ids.
std::vector<ElemId> right_division_closure(const FiniteMonoid& m,
                                           const std::vector<ElemId>& seed);

// Smallest seed whose right-division closure is all of M, searched by size
// then lexicographically. The whole of M always works, so beyond the budget
// a greedy completion is returned, labeled non-minimal.
struct MultdivWitness {
  std::vector<ElemId> seed;
  bool exact = true;
  bool budget_exhausted = false;
};
MultdivWitness multdiv_holds(const FiniteMonoid& m, std::size_t budget);

// The finiteness conditions that coincide for finite monoids, each with its
// witness: a smallest generating set, the right zeros, a smallest left
// ideal with its generator, a smallest submonoid M0 whose interacting set
// {a : a M0 meets M0} generates M, and the division witness above.
struct MonoidBattery {
  std::vector<ElemId> generating_set;
  bool generating_exact = true;

  std::vector<ElemId> right_zeros;

  ElemId ideal_generator = kNone;
  std::vector<ElemId> smallest_left_ideal;

  std::vector<ElemId> m0_generators;
  std::vector<ElemId> m0;
  std::vector<ElemId> m0_interacting;
  bool m0_exact = true;

  MultdivWitness multdiv;
};
MonoidBattery condition_battery(const FiniteMonoid& m, std::size_t budget);

// Left congruences are exactly the functor congruences of the left regular
// action, so element ids index the classes directly.
CongruenceFamily left_congruence_closure(const FiniteMonoid& m,
                                         const std::vector<std::pair<ElemId, ElemId>>& pairs);

// All left congruences as class_of vectors in restricted-growth form,
// lexicographic order. Guarded to |M| <= 6.
std::vector<std::vector<std::uint32_t>> left_congruences_enumerate(const FiniteMonoid& m);
std::size_t left_congruence_count(const FiniteMonoid& m);

// Classes fixed by every left translation in the quotient of the left
// regular action by c.
std::vector<std::uint32_t> quotient_fixed_classes(const FiniteMonoid& m,
                                                  const CongruenceFamily& c);

// For a subset N: checks that N is a submonoid closed under right division,
// builds the left congruence generated by N x N, and compares its class of
// 1 with N. The two agree exactly when the check passes.
struct ClassOfOneReport {
  bool n_is_division_closed_submonoid = true;
  std::string failure;  // first violated clause, empty when none
  std::vector<ElemId> class_of_one;
  bool class_equals_n = false;
};
ClassOfOneReport class_of_one_correspondence(const FiniteMonoid& m,
                                             const std::vector<ElemId>& n);

// --- the same notions on the morphisms of a finite category ---

// Least wide set of morphisms containing the seed, closed under composition
// and right division. Sorted morphism ids; identities always included.
std::vector<MorId> division_closed_closure(const FiniteCategory& cat,
                                           const std::vector<MorId>& seed);

// Smallest seed (identities excluded from candidates) whose closure is every
// morphism; greedy completion beyond the budget.
struct CategoryDivisionWitness {
  std::vector<MorId> seed;
  bool exact = true;
  bool budget_exhausted = false;
};
CategoryDivisionWitness emultdiv_check(const FiniteCategory& cat, std::size_t budget);

// Given objects A and a section s0 picking exactly one morphism from A into
// each object outside A, find the smallest S1 with closure(s0 + S1) = all
// morphisms. Validates the shape of s0.
CategoryDivisionWitness s0s1_check(const FiniteCategory& cat, const std::vector<ObjId>& a,
                                   const std::vector<MorId>& s0, std::size_t budget);

// A wide, composition- and right-division-closed selection of morphisms
// corresponds to a congruence on the union of all hom functors: relate
// selected morphisms with a common codomain, close up, and the selection is
// recovered as the morphisms falling in the class of their codomain's
// identity. Reports the selection laws and whether recovery round-trips.
struct SelectionReport {
  bool selection_closed = true;
  std::string failure;
  bool recovery_matches = false;
  std::vector<MorId> recovered;
};
SelectionReport division_closed_subcategory_correspondence(const FiniteCategory& cat,
                                                           const std::vector<bool>& selected);

}  // namespace dirlim
