#include <algorithm>
#include <memory>

#include "dirlim/division.hpp"
#include "dirlim/gallery.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dirlim;

TEST_CASE("right division closure on the max chain grows downward from the top") {
  FiniteMonoid m = maxchain_monoid(3);
  // seed {3}: a*b = 3 with b = 3 allows every a, so everything divides in
  auto cl = right_division_closure(m, {3});
  CHECK(cl == std::vector<ElemId>{0, 1, 2, 3});
  // seed {1}: products stay in {0,1}; only 0 and 1 divide into it
  CHECK(right_division_closure(m, {1}) == std::vector<ElemId>{0, 1});
}

TEST_CASE("multdiv witness is the right zero for the max chain") {
  FiniteMonoid m = maxchain_monoid(4);
  MultdivWitness w = multdiv_holds(m, 100000);
  REQUIRE(w.exact);
  CHECK(w.seed == std::vector<ElemId>{4});
}

TEST_CASE("brute force check that every finite monoid satisfies the division condition") {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (const FiniteMonoid& m : oracles::monoid_catalog(n)) {
      MultdivWitness w = multdiv_holds(m, 100000);
      REQUIRE(w.exact);
      CHECK(right_division_closure(m, w.seed).size() == m.n());
    }
}

TEST_CASE("condition battery witnesses are mutually consistent") {
  oracles::Rng rng(53);
  auto catalog4 = oracles::monoid_catalog(4);
  for (const FiniteMonoid& m : catalog4) {
    MonoidBattery b = condition_battery(m, 100000);
    // the generating set generates
    CHECK(m.generated_submonoid(b.generating_set).size() == m.n());
    // right zeros really absorb on the right
    for (ElemId z : b.right_zeros)
      for (ElemId a = 0; a < m.n(); ++a) CHECK(m.mult(a, z) == z);
    // the smallest left ideal is the ideal of its generator
    CHECK(m.left_ideal(b.ideal_generator) == b.smallest_left_ideal);
    for (ElemId a = 0; a < m.n(); ++a)
      CHECK(m.left_ideal(a).size() >= b.smallest_left_ideal.size());
    // M0 interacts its way to everything
    CHECK(m.generated_submonoid(b.m0_interacting).size() == m.n());
    // the division seed closes to the whole monoid
    CHECK(right_division_closure(m, b.multdiv.seed).size() == m.n());
  }
}

TEST_CASE("left congruence counts: max chain doubles, right zeros follow the partitions") {
  // every interval partition of the chain is a left congruence: 2^k of them
  for (std::uint32_t k = 1; k <= 4; ++k)
    CHECK(left_congruence_count(maxchain_monoid(k)) == (std::size_t{1} << k));

  // for the opposite of the right zero monoid the condition is vacuous:
  // all partitions of 1+s elements qualify
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
  for (std::uint32_t s = 1; s <= 4; ++s) {
    CHECK(left_congruence_count(rightzero_monoid(s).opposite()) == bell[s + 1]);
    CHECK(oracles::partitions(s + 1).size() == bell[s + 1]);
  }
}

TEST_CASE("left congruence enumeration matches a direct filter of all partitions") {
  for (std::uint32_t n = 1; n <= 4; ++n)
    for (const FiniteMonoid& m : oracles::monoid_catalog(n)) {
      auto enumerated = left_congruences_enumerate(m);
      std::size_t direct = 0;
      for (const auto& part : oracles::partitions(m.n())) {
        bool ok = true;
        for (ElemId i = 0; i < m.n() && ok; ++i)
          for (ElemId j = 0; j < m.n() && ok; ++j) {
            if (part[i] != part[j]) continue;
            for (ElemId u = 0; u < m.n(); ++u)
              if (part[m.mult(u, i)] != part[m.mult(u, j)]) {
                ok = false;
                break;
              }
          }
        if (ok) ++direct;
      }
      CHECK(enumerated.size() == direct);
    }
}

TEST_CASE("left congruence closure equals congruence closure of the regular action") {
  oracles::Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    auto catalog = oracles::monoid_catalog(1 + rng() % 4);
    const FiniteMonoid& m = catalog[rng() % catalog.size()];
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (std::uint32_t k = 0; k < 1 + rng() % 3; ++k)
      pairs.push_back({static_cast<ElemId>(rng() % m.n()), static_cast<ElemId>(rng() % m.n())});
    CongruenceFamily got = left_congruence_closure(m, pairs);

    auto cat = std::make_shared<const FiniteCategory>(monoid_to_category(m));
    ESet h = hom_functor(cat, 0);
    RelationFamily r = RelationFamily::empty(1);
    r.pairs[0] = pairs;
    CongruenceFamily want = congruence_closure(h, r);
    CHECK(got.class_of == want.class_of);
  }
}

TEST_CASE("adjoining (a, 1) to a congruence with a fixed class of a collapses everything") {
  oracles::Rng rng(61);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 120; ++trial) {
    auto catalog = oracles::monoid_catalog(2 + rng() % 3);
    const FiniteMonoid& m = catalog[rng() % catalog.size()];
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (std::uint32_t k = 0; k < rng() % 3; ++k)
      pairs.push_back({static_cast<ElemId>(rng() % m.n()), static_cast<ElemId>(rng() % m.n())});
    CongruenceFamily c = left_congruence_closure(m, pairs);
    auto fixed = quotient_fixed_classes(m, c);
    if (fixed.empty()) continue;
    ++tested;
    ElemId a = kNone;
    for (ElemId x = 0; x < m.n(); ++x)
      if (c.class_of[0][x] == fixed.front()) {
        a = x;
        break;
      }
    auto adjoined = pairs;
    adjoined.push_back({a, m.one()});
    CHECK(is_improper(left_congruence_closure(m, adjoined)));
  }
  CHECK(tested >= 100);
}

TEST_CASE("class of one correspondence accepts division closed submonoids only") {
  FiniteMonoid m = maxchain_monoid(3);
  // {0,1} is a submonoid closed under right division
  ClassOfOneReport good = class_of_one_correspondence(m, {0, 1});
  CHECK(good.n_is_division_closed_submonoid);
  CHECK(good.class_equals_n);
  CHECK(good.class_of_one == std::vector<ElemId>{0, 1});

  // {0, 2} fails right division: 1*2 = 2 in N, 2 in N, but 1 not in N
  ClassOfOneReport bad = class_of_one_correspondence(m, {0, 2});
  CHECK_FALSE(bad.n_is_division_closed_submonoid);
  CHECK_FALSE(bad.failure.empty());
}

TEST_CASE("the class of one of any left congruence is division closed (random check)") {
  oracles::Rng rng(67);
  for (int trial = 0; trial < 150; ++trial) {
    auto catalog = oracles::monoid_catalog(2 + rng() % 4);
    const FiniteMonoid& m = catalog[rng() % catalog.size()];
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (std::uint32_t k = 0; k < rng() % 4; ++k)
      pairs.push_back({static_cast<ElemId>(rng() % m.n()), static_cast<ElemId>(rng() % m.n())});
    CongruenceFamily c = left_congruence_closure(m, pairs);
    std::vector<ElemId> n;
    for (ElemId x = 0; x < m.n(); ++x)
      if (c.class_of[0][x] == c.class_of[0][m.one()]) n.push_back(x);
    ClassOfOneReport rep = class_of_one_correspondence(m, n);
    CHECK(rep.n_is_division_closed_submonoid);
    CHECK(rep.class_equals_n);
  }
}

TEST_CASE("category level closure and the selection correspondence") {
  FiniteCategory cat = poset_to_category(two_bottom_chain(2));
  // identities alone are division closed; the correspondence recovers them
  std::vector<bool> only_ids(cat.n_morphisms(), false);
  for (ObjId e = 0; e < cat.n_objects(); ++e) only_ids[cat.identity(e)] = true;
  SelectionReport rep = division_closed_subcategory_correspondence(cat, only_ids);
  CHECK(rep.selection_closed);
  CHECK(rep.recovery_matches);

  // dropping one identity breaks wideness
  std::vector<bool> narrow = only_ids;
  narrow[cat.identity(0)] = false;
  SelectionReport bad = division_closed_subcategory_correspondence(cat, narrow);
  CHECK_FALSE(bad.selection_closed);

  // the full selection is closed and recovered too
  std::vector<bool> everything(cat.n_morphisms(), true);
  SelectionReport full = division_closed_subcategory_correspondence(cat, everything);
  CHECK(full.selection_closed);
  CHECK(full.recovery_matches);
}

TEST_CASE("category division witness covers every morphism") {
  FiniteCategory cat = poset_to_category(two_bottom_chain(2));
  CategoryDivisionWitness w = emultdiv_check(cat, 100000);
  auto closed = division_closed_closure(cat, w.seed);
  CHECK(closed.size() == cat.n_morphisms());

  // a section from the bottoms plus one completion set
  ObjId a0 = *cat.object_index("0a"), b0 = *cat.object_index("0b");
  std::vector<MorId> s0;
  for (ObjId e = 0; e < cat.n_objects(); ++e) {
    if (e == a0 || e == b0) continue;
    s0.push_back(cat.hom(a0, e).front());
  }
  CategoryDivisionWitness sw = s0s1_check(cat, {a0, b0}, s0, 100000);
  std::vector<MorId> both = sw.seed;
  both.insert(both.end(), s0.begin(), s0.end());
  CHECK(division_closed_closure(cat, both).size() == cat.n_morphisms());
}
