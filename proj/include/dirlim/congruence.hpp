#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dirlim/eset.hpp"

namespace dirlim {

// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False when already joined.
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    ++merges_;
    return true;
  }

  std::uint32_t merges() const { return merges_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::uint32_t merges_ = 0;
};

// Unordered pairs of carrier indices, one list per object.
struct RelationFamily {
  std::vector<std::vector<std::pair<ElemId, ElemId>>> pairs;

  static RelationFamily empty(std::uint32_t n_objects) {
    return RelationFamily{std::vector<std::vector<std::pair<ElemId, ElemId>>>(n_objects)};
  }
  std::size_t total_pairs() const {
    std::size_t t = 0;
    for (const auto& p : pairs) t += p.size();
    return t;
  }
};

// An equivalence relation per object, closed under every action map.
// Classes are numbered by least member, in object then element order.
struct CongruenceFamily {
  std::vector<std::vector<ElemId>> class_of;
  std::vector<std::uint32_t> n_classes;

  std::uint32_t classes_at(ObjId e) const { return n_classes[e]; }
  std::size_t total_classes() const {
    std::size_t t = 0;
    for (auto c : n_classes) t += c;
    return t;
  }
};

/// Least congruence containing the given pairs: equivalence closure per
// object plus, whenever s ~ t, action(a)(s) ~ action(a)(t) for every a out
// of their object. Union-find with a worklist of newly merged pairs; cost is
// near-linear in carriers, actions and pairs.
CongruenceFamily congruence_closure(const ESet& x, const RelationFamily& r);

// True when every object has at most one class.
bool is_improper(const CongruenceFamily& c);

// Checks that a partition family is closed under all action maps.
bool satisfies_congruence_laws(const ESet& x, const CongruenceFamily& c);

// Partition family -> congruence, validating shapes. Class ids may be
// arbitrary; they are renumbered canonically.
CongruenceFamily congruence_from_classes(const ESet& x,
                                         std::vector<std::vector<ElemId>> class_of);

struct MinimalGenerators {
  RelationFamily family;
  std::size_t total_pairs = 0;
  // True when found by the exhaustive size-then-lexicographic search.
  // False = greedy upper bound after the budget ran out.
  bool exact = true;
  bool budget_exhausted = false;
};

// Smallest RelationFamily whose closure is improper, searching subsets of
// candidate pairs by total size and then lexicographically (object order,
// then element order). budget caps the exact search size; beyond it a
// greedy non-minimal witness is returned. Always succeeds once the budget
// reaches the total carrier size.
MinimalGenerators minimal_improper_generators(const ESet& x, std::size_t budget);

// Finite presentation data for the one-point functor: base objects A (one
// representative per minimal class of the preorder skeleton, least object
// id first) and a minimal improper generating family on the union of hom
// functors over A.
struct TrivialPresentation {
  std::vector<ObjId> base_objects;
  UnionHom hom_union;
  MinimalGenerators generators;
};
TrivialPresentation trivial_eset_finitely_presented(
    std::shared_ptr<const FiniteCategory> cat);

// Quotient functor together with the projection. Rejects a partition
// family that is not closed under the actions.
struct Quotient {
  ESet eset;
  ESetMorphism projection;
};
Quotient quotient(const ESet& x, const CongruenceFamily& c);

}  // namespace dirlim
