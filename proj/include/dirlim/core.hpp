#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dirlim {

// Raised when a structure fails its validation step.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input file or wire payload is malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input exceeds a documented size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
using ElemId = std::uint32_t;

inline constexpr std::uint32_t kNone = UINT32_MAX;

struct MorphismDecl {
  std::string name;
  ObjId dom = 0;
  ObjId cod = 0;
};

// A finite category with tagged morphisms. Hom-sets are disjoint by
// construction: every morphism carries its own (dom, cod) pair.
//
// Composition convention: compose(a, b) means "a after b", so for
// b : E -> F and a : F -> G the composite a*b : E -> G.
class FiniteCategory {
 public:
  // Validates totality of composition on composable pairs, dom/cod tags of
  // composites, existence of identities, and associativity on all
  // composable triples. The empty category (no objects) is permitted.
  static FiniteCategory validated(
      std::vector<std::string> objects, std::vector<MorphismDecl> morphisms,
      const std::map<std::pair<MorId, MorId>, MorId>& compose);

  std::uint32_t n_objects() const { return static_cast<std::uint32_t>(objects_.size()); }
  std::uint32_t n_morphisms() const { return static_cast<std::uint32_t>(morphisms_.size()); }

  const std::string& object_name(ObjId e) const { return objects_[e]; }
  const std::string& morphism_name(MorId a) const { return morphisms_[a].name; }
  ObjId dom(MorId a) const { return morphisms_[a].dom; }
  ObjId cod(MorId a) const { return morphisms_[a].cod; }
  MorId identity(ObjId e) const { return identity_[e]; }
  bool is_identity(MorId a) const { return identity_[morphisms_[a].dom] == a && morphisms_[a].dom == morphisms_[a].cod; }

  // Morphism ids in hom(e, f), in declaration order.
  const std::vector<MorId>& hom(ObjId e, ObjId f) const { return hom_[e * n_objects() + f]; }
  // All morphisms with domain e (identity included).
  const std::vector<MorId>& from(ObjId e) const { return from_[e]; }
  // All morphisms with codomain e (identity included).
  const std::vector<MorId>& into(ObjId e) const { return into_[e]; }

  bool composable(MorId a, MorId b) const { return dom(a) == cod(b); }
  // Precondition: composable(a, b).
  MorId compose(MorId a, MorId b) const { return compose_[a * n_morphisms() + b]; }

  std::optional<ObjId> object_index(const std::string& name) const;
  std::optional<MorId> morphism_index(const std::string& name) const;

 private:
  FiniteCategory() = default;

  std::vector<std::string> objects_;
  std::vector<MorphismDecl> morphisms_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> hom_;   // n_objects^2 buckets
  std::vector<std::vector<MorId>> from_;  // per object
  std::vector<std::vector<MorId>> into_;  // per object
  std::vector<MorId> compose_;            // n_morphisms^2, kNone when not composable
};

// A finite poset. leq is stored as a full relation matrix.
class Poset {
 public:
  // Validates reflexivity, antisymmetry and transitivity. Empty permitted.
  static Poset validated(std::vector<std::string> elements,
                         std::vector<std::vector<bool>> leq);

  std::uint32_t n() const { return static_cast<std::uint32_t>(elements_.size()); }
  const std::string& name(ElemId x) const { return elements_[x]; }
  const std::vector<std::string>& names() const { return elements_; }
  bool leq(ElemId x, ElemId y) const { return leq_[x][y]; }

  std::vector<ElemId> down(ElemId x) const;  // all y with y <= x
  std::vector<ElemId> up(ElemId x) const;    // all y with x <= y
  std::vector<ElemId> minimal_elements() const;
  std::vector<ElemId> maximal_elements() const;

  // Every pair has an upper bound. The empty poset is not directed.
  bool is_directed() const;
  std::optional<ElemId> greatest_element() const;

  // Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<ElemId, ElemId>> covers() const;

  std::optional<ElemId> index_of(const std::string& name) const;

 private:
  Poset() = default;
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

// A finite monoid given by its multiplication table.
class FiniteMonoid {
 public:
  // table[a][b] = a*b as element index. Validates the identity and
  // associativity over all triples.
  static FiniteMonoid validated(std::vector<std::string> elements,
                                std::vector<std::vector<ElemId>> table,
                                ElemId one);

  std::uint32_t n() const { return n_; }
  const std::string& name(ElemId a) const { return elements_[a]; }
  const std::vector<std::string>& names() const { return elements_; }
  ElemId one() const { return one_; }
  ElemId mult(ElemId a, ElemId b) const { return table_[a * n_ + b]; }

  FiniteMonoid opposite() const;
  bool is_group() const;

  // Least submonoid containing gens; sorted element ids.
  std::vector<ElemId> generated_submonoid(const std::vector<ElemId>& gens) const;
  // The left ideal M*a; sorted element ids.
  std::vector<ElemId> left_ideal(ElemId a) const;

  std::optional<ElemId> index_of(const std::string& name) const;

 private:
  FiniteMonoid() = default;
  std::uint32_t n_ = 0;
  std::vector<std::string> elements_;
  std::vector<ElemId> table_;  // flat n*n
  ElemId one_ = 0;
};

// A finite group: a monoid whose every element has a two-sided inverse.
class FiniteGroup {
 public:
  static FiniteGroup validated(FiniteMonoid m);

  const FiniteMonoid& monoid() const { return m_; }
  ElemId inverse(ElemId a) const { return inverse_[a]; }

 private:
  FiniteGroup() = default;
  FiniteMonoid m_;
  std::vector<ElemId> inverse_;
};

// Result of collapsing a category to its preorder skeleton: objects E, F are
// identified when morphisms run both ways between them.
struct PreorderQuotient {
  Poset poset;
  std::vector<ElemId> class_of;  // object id -> poset element
};

// One object per mutual-reachability class, ordered by morphism existence.
PreorderQuotient preorder_quotient(const FiniteCategory& cat);

// The category with one morphism E -> F for each pair E <= F.
FiniteCategory poset_to_category(const Poset& p);

// The one-object category whose morphisms are the monoid elements;
// compose(a, b) = mult(a, b), so functors are left monoid actions.
FiniteCategory monoid_to_category(const FiniteMonoid& m);

inline FiniteCategory group_to_category(const FiniteGroup& g) {
  return monoid_to_category(g.monoid());
}

}  // namespace dirlim
