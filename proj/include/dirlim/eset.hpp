#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dirlim/core.hpp"

namespace dirlim {

// A set-valued functor on a finite category: one finite carrier per object,
// one map per morphism. Carriers are index sets; names are optional and
// only used for display and wire formats.
class ESet {
 public:
  // actions[a] maps carrier(dom a) -> carrier(cod a) by index.
  // Validates identity actions and action(compose(a,b)) = action(a) o action(b).
  static ESet validated(std::shared_ptr<const FiniteCategory> cat,
                        std::vector<std::vector<std::string>> carrier_names,
                        std::vector<std::vector<ElemId>> actions);
  static ESet validated(std::shared_ptr<const FiniteCategory> cat,
                        std::vector<std::uint32_t> carrier_sizes,
                        std::vector<std::vector<ElemId>> actions);
  // Skips the functor-law scan. Reserved for synthetic benchmark inputs
  // whose construction guarantees the laws.
  static ESet unchecked(std::shared_ptr<const FiniteCategory> cat,
                        std::vector<std::uint32_t> carrier_sizes,
                        std::vector<std::vector<ElemId>> actions);

  const FiniteCategory& category() const { return *cat_; }
  const std::shared_ptr<const FiniteCategory>& category_ptr() const { return cat_; }

  std::uint32_t carrier_size(ObjId e) const { return sizes_[e]; }
  std::size_t total_size() const { return offsets_.empty() ? 0 : offsets_.back(); }
  // Global index of (e, x) in the disjoint union of carriers.
  std::size_t offset(ObjId e) const { return e == 0 ? 0 : offsets_[e - 1]; }

  const std::vector<ElemId>& action(MorId a) const { return actions_[a]; }
  ElemId apply(MorId a, ElemId x) const { return actions_[a][x]; }

  bool has_names() const { return !names_.empty(); }
  std::string element_name(ObjId e, ElemId x) const;
  std::optional<ElemId> element_index(ObjId e, const std::string& name) const;

 private:
  ESet() = default;
  void index_offsets();

  std::shared_ptr<const FiniteCategory> cat_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::size_t> offsets_;  // inclusive prefix sums of sizes_
  std::vector<std::vector<std::string>> names_;  // empty when anonymous
  std::vector<std::vector<ElemId>> actions_;
};

// One coordinate per object, satisfying x_F = action(a)(x_E) for every
// morphism a : E -> F. Over the empty category this is the empty tuple.
struct LimitElement {
  std::vector<ElemId> coord;
  auto operator<=>(const LimitElement&) const = default;
};

// All limit elements, sorted lexicographically by coordinates. Enumerates
// by backtracking with forced-coordinate propagation; the full cartesian
// product is never materialized.
std::vector<LimitElement> limit(const ESet& x);

// A natural transformation between functors on the same category,
// stored componentwise by index.
struct ESetMorphism {
  std::vector<std::vector<ElemId>> component;
};

// Validates component shapes and naturality squares.
ESetMorphism validated_morphism(const ESet& src, const ESet& tgt,
                                std::vector<std::vector<ElemId>> component);

// Image of a limit element under a natural transformation; lands in the
// limit of the target.
LimitElement map_limit_element(const ESetMorphism& f, const LimitElement& x);

// The covariant hom functor E(base, -): carrier at F is hom(base, F) and a
// morphism a acts by postcomposition. For a one-object monoid category this
// is the left regular action.
ESet hom_functor(std::shared_ptr<const FiniteCategory> cat, ObjId base);

// Coordinatewise disjoint union of hom functors over a nonempty list of
// base objects. morphism_of records, per object and element, the morphism
// the element came from.
struct UnionHom {
  ESet eset;
  std::vector<std::vector<MorId>> morphism_of;
};
UnionHom union_hom(std::shared_ptr<const FiniteCategory> cat,
                   const std::vector<ObjId>& bases);

// All carriers are the one-point set.
ESet trivial_eset(std::shared_ptr<const FiniteCategory> cat);

// Smallest subfunctor containing the seed elements.
struct SubESet {
  ESet eset;
  std::vector<std::vector<ElemId>> original_index;  // sub index -> parent index
};
SubESet generated_subeset(const ESet& x,
                          const std::vector<std::pair<ObjId, ElemId>>& seeds);

}  // namespace dirlim
