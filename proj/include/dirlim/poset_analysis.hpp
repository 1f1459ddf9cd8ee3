#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dirlim/core.hpp"

namespace dirlim {

struct GatherQuery {
  std::vector<ElemId> a;  // the reference set A
  std::vector<ElemId> b;  // the proposed gathering set B
  ElemId under;           // the element E
};

// The partition R(A, B, E) on A ∩ down(E): the equivalence generated by
// relating all of A ∩ down(F) for each F in B ∩ down(E). B gathers A under
// E when at most one class remains. Note E may itself belong to B, and a
// query with |A ∩ down(E)| <= 1 gathers vacuously.
struct GatherResult {
  bool gathers = false;
  bool vacuous = false;                 // |A ∩ down(E)| <= 1
  std::vector<ElemId> a_down;           // A ∩ down(E), ascending
  std::vector<std::uint32_t> class_of;  // per entry of a_down
  std::uint32_t n_classes = 0;
};
GatherResult gathers(const Poset& j, const GatherQuery& q);

// Elements E such that J - {E} fails to gather A under E.
std::vector<ElemId> critical_elements(const Poset& j, const std::vector<ElemId>& a);

// Every element sits above a minimal one; trivially true on finite posets.
// Records the least such witness per element.
struct AboveFinReport {
  bool holds = true;
  std::vector<ElemId> minimal;
  std::vector<ElemId> witness_below;  // per poset element
};
AboveFinReport abovefin_check(const Poset& j);

// Exhaustively checks that every downward-directed family of nonempty
// downsets has nonempty intersection. Exists to exercise the enumeration
// machinery on finite inputs, where the property always holds.
// Guards: |J| <= 12 and at most 16 nonempty downsets.
bool capne_oracle(const Poset& j);

// The four joint conditions, evaluated on the preorder skeleton of a
// category: A = minimal elements finite; every element above A; the
// critical set B finite; B gathers A under every element.
struct TgathReport {
  Poset skeleton;
  std::vector<ElemId> a;
  std::vector<ElemId> b;
  bool every_element_above_a = true;
  bool b_gathers_everywhere = true;
  std::vector<ElemId> below_witness;  // per skeleton element, least member of A below

  bool all_hold() const { return every_element_above_a && b_gathers_everywhere; }
};
TgathReport tgath_check(const FiniteCategory& cat);

// Smallest B gathering A under every element, by size then lexicographic
// order. Every such B contains the critical set, so the search extends it.
// Beyond the budget a greedy completion is returned, labeled non-minimal.
struct MinimalGatheringSet {
  std::vector<ElemId> set;
  bool exact = true;
  bool budget_exhausted = false;
};
MinimalGatheringSet minimal_gathering_set(const Poset& j, const std::vector<ElemId>& a,
                                          std::size_t budget);

// Runs minimal_gathering_set over a growing family of posets and compares
// the answers by element name. A drifting answer is heuristic evidence of
// instability, not a proof; a stable one is not a proof of stability.
struct InstabilityProbe {
  std::vector<std::uint32_t> ks;
  std::vector<std::vector<std::string>> sets;  // per k, named
  bool stable = true;
};
InstabilityProbe horizon_instability_probe(
    const std::function<Poset(std::uint32_t)>& family, std::uint32_t k_from,
    std::uint32_t k_to, std::size_t budget);

// Graphviz rendering of the covering relation, highlighting the minimal
// elements, the critical elements and a chosen gathering set.
std::string poset_dot(const Poset& j, const std::vector<ElemId>& minimal,
                      const std::vector<ElemId>& critical,
                      const std::vector<ElemId>& gathering);

}  // namespace dirlim
