#include <map>
#include <memory>

#include "dirlim/dirsys.hpp"
#include "dirlim/gallery.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dirlim;

namespace {

// two stages over the trivial one object category: {p,q} -> {r} collapsing
FiniteDirectedSystem tiny_collapse() {
  std::vector<MorphismDecl> decls{{"1", 0, 0}};
  std::map<std::pair<MorId, MorId>, MorId> comp;
  comp[{0, 0}] = 0;
  auto cat = std::make_shared<const FiniteCategory>(
      FiniteCategory::validated({"*"}, decls, comp));
  Poset index = Poset::validated({"lo", "hi"}, {{true, true}, {false, true}});
  ESet lo = ESet::validated(cat, std::vector<std::uint32_t>{2},
                            std::vector<std::vector<ElemId>>{{0, 1}});
  ESet hi = ESet::validated(cat, std::vector<std::uint32_t>{1},
                            std::vector<std::vector<ElemId>>{{0}});
  std::map<std::pair<ElemId, ElemId>, std::vector<std::vector<ElemId>>> connects;
  connects[{0, 1}] = {{0, 0}};
  return FiniteDirectedSystem::validated(std::move(index), {lo, hi}, connects);
}

}  // namespace

TEST_CASE("system validation enforces the cocycle rule") {
  auto cat = std::make_shared<const FiniteCategory>(
      poset_to_category(Poset::validated({"x"}, {{true}})));
  Poset index = Poset::validated(
      {"a", "b", "c"},
      {{true, true, true}, {false, true, true}, {false, false, true}});
  ESet two = ESet::validated(cat, std::vector<std::uint32_t>{2},
                             std::vector<std::vector<ElemId>>{{0, 1}});
  std::map<std::pair<ElemId, ElemId>, std::vector<std::vector<ElemId>>> connects;
  connects[{0, 1}] = {{1, 0}};  // swap
  connects[{1, 2}] = {{1, 0}};  // swap
  connects[{0, 2}] = {{1, 0}};  // should be the double swap = identity
  CHECK_THROWS_AS(FiniteDirectedSystem::validated(index, {two, two, two}, connects),
                  ValidationError);
  connects[{0, 2}] = {{0, 1}};
  CHECK(FiniteDirectedSystem::validated(index, {two, two, two}, connects).top() == 2);
}

TEST_CASE("system validation requires a directed index") {
  auto cat = std::make_shared<const FiniteCategory>(
      poset_to_category(Poset::validated({"x"}, {{true}})));
  Poset anti = Poset::validated({"a", "b"}, {{true, false}, {false, true}});
  ESet one = trivial_eset(cat);
  CHECK_THROWS_AS(
      FiniteDirectedSystem::validated(anti, {one, one}, {}),
      ValidationError);
}

TEST_CASE("colimit is the member at the top and insertions equalize") {
  FiniteDirectedSystem s = tiny_collapse();
  FiniteColimit c = colimit_eset(s);
  CHECK(c.top == 1);
  CHECK(c.eset.carrier_size(0) == 1);

  ColimitEquality eq = insertion_equal(s, 0, 0, 0, 0, 1);
  CHECK(eq.equal);
  CHECK(eq.certified_at == 1);  // p and q only merge at the top
  ColimitEquality same = insertion_equal(s, 0, 0, 0, 0, 0);
  CHECK(same.equal);
  CHECK(same.certified_at == 0);
}

TEST_CASE("comparison map on the collapse system is bijective and exact") {
  IotaReport r = iota(tiny_collapse());
  CHECK(r.exact);
  CHECK(r.domain_size == 1);  // two limit points merge in the colimit of limits
  CHECK(r.codomain_size == 1);
  CHECK(r.injectivity.is_proven());
  CHECK(r.surjectivity.is_proven());
}

TEST_CASE("comparison map is bijective on the random finite corpus") {
  oracles::Rng rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    FiniteDirectedSystem s = oracles::random_system(rng);
    IotaReport r = iota(s);
    CHECK(r.exact);
    CHECK(r.injectivity.is_proven());
    CHECK(r.surjectivity.is_proven());
    CHECK(r.domain_size == r.codomain_size);
  }
}

TEST_CASE("lazy system validates its presentation lazily") {
  LazySystem dy = dyadic_group_system(3);
  CHECK(dy.n_objects() == 1);
  CHECK_FALSE(dy.has_window());
  CHECK(dy.n_probes() == 3);
  CHECK(dy.stage(0).sizes[0] == 8);
  CHECK(dy.stage(3).sizes[0] == 1);
  // step from stage 0 to 1 reduces residues mod 4
  const auto& st = dy.step(0, 0);
  CHECK(st.size() == 8);
  CHECK(st[5] == 1);
}

TEST_CASE("horizon colimit of the dyadic system collapses to the final residue") {
  LazySystem dy = dyadic_group_system(3);
  HorizonColimit c = colimit_at_horizon(dy, 3);
  CHECK(c.n_classes(0) == 1);  // everything eventually lands in the point stage
  Verdict eq = horizon_equal(dy, 3, 0, 0, 3, 0, 5);
  CHECK(eq.is_proven());
  // within a too-short horizon the pushes stay distinct
  Verdict uneq = horizon_equal(dy, 1, 0, 0, 1, 0, 3);
  CHECK(uneq.is_unknown());
}

TEST_CASE("dyadic comparison map: empty domain, singleton codomain, refuted surjectivity") {
  for (std::uint32_t h : {1u, 3u, 6u}) {
    LazySystem dy = dyadic_group_system(h);
    IotaReport r = iota_at_horizon(dy, h);
    CHECK_FALSE(r.exact);
    CHECK(r.domain_size == 0);
    CHECK(r.codomain_size == 1);
    CHECK(r.surjectivity.is_refuted());
    CHECK_FALSE(r.injectivity.is_refuted());
  }
}

TEST_CASE("dyadic codomain is empty below the final horizon") {
  LazySystem dy = dyadic_group_system(4);
  IotaReport r = iota_at_horizon(dy, 3);
  CHECK(r.codomain_size == 0);
  CHECK_FALSE(r.surjectivity.is_refuted());
  CHECK(r.surjectivity.is_unknown());
}

TEST_CASE("plus minus truncation refutes injectivity exactly beyond its horizon") {
  const std::uint32_t h = 3;
  LazySystem pm = pinje_system(true, h);
  IotaReport at_h = iota_at_horizon(pm, h);
  CHECK(at_h.domain_size == 2);
  CHECK(at_h.injectivity.is_unknown());

  IotaReport beyond = iota_at_horizon(pm, h + 1);
  CHECK(beyond.domain_size == 2);
  CHECK(beyond.codomain_size == 1);
  CHECK(beyond.injectivity.is_refuted());
  CHECK(beyond.injectivity.witness.find("x+") != std::string::npos);
  CHECK(beyond.injectivity.witness.find("x-") != std::string::npos);
  CHECK_FALSE(beyond.surjectivity.is_refuted());
}

TEST_CASE("empty variant refutes surjectivity beyond its horizon") {
  const std::uint32_t h = 3;
  LazySystem em = pinje_system(false, h);
  IotaReport at_h = iota_at_horizon(em, h);
  CHECK(at_h.domain_size == 0);
  CHECK(at_h.codomain_size == 0);
  CHECK_FALSE(at_h.surjectivity.is_refuted());

  IotaReport beyond = iota_at_horizon(em, h + 1);
  CHECK(beyond.domain_size == 0);
  CHECK(beyond.codomain_size == 1);
  CHECK(beyond.surjectivity.is_refuted());
}

TEST_CASE("refutations persist at later horizons") {
  LazySystem pm = pinje_system(true, 2);
  for (std::uint32_t t = 3; t <= 5; ++t)
    CHECK(iota_at_horizon(pm, t).injectivity.is_refuted());
  LazySystem dy = dyadic_group_system(2);
  for (std::uint32_t t = 2; t <= 5; ++t)
    CHECK(iota_at_horizon(dy, t).surjectivity.is_refuted());
}

TEST_CASE("stabilization stages match the probe exponents") {
  const std::uint32_t h = 5;
  LazySystem dy = dyadic_group_system(h);
  std::vector<std::uint32_t> all;
  for (std::uint32_t p = 0; p < dy.n_probes(); ++p) all.push_back(p);
  Stabilization st = stabilization_stage(dy, all, 0, 0, h);
  REQUIRE(st.verdict.is_proven());
  CHECK(st.verdict.stage == h);
  for (std::uint32_t p = 0; p < h; ++p) CHECK(st.probe_stage[p] == p + 1);

  auto per = eventual_fixedness_certificate(dy, all, 0, 0, h);
  for (std::uint32_t p = 0; p < h; ++p) {
    REQUIRE(per[p].is_proven());
    CHECK(per[p].stage == p + 1);
  }

  // a horizon too short to see the last probe settle stays unknown
  Stabilization cut = stabilization_stage(dy, all, 0, 0, h - 1);
  CHECK(cut.verdict.is_unknown());
}

TEST_CASE("from_window_stages computes and steps limit points of the window") {
  // constant system: the two bottom chain hom union at every stage,
  // with identity steps; limit points step to themselves
  auto cat = std::make_shared<const FiniteCategory>(poset_to_category(two_bottom_chain(1)));
  ESet h0 = trivial_eset(cat);
  LazySystem s = LazySystem::from_window_stages(
      "constant", cat, {},
      [h0](std::uint32_t) { return h0; },
      [&](std::uint32_t, ObjId) {
        return std::vector<ElemId>{0};
      });
  CHECK(s.stage(0).limits.size() == 1);
  IotaReport r = iota_at_horizon(s, 4);
  CHECK(r.domain_size == 1);
  CHECK(r.codomain_size == 1);
  CHECK_FALSE(r.injectivity.is_refuted());
  CHECK_FALSE(r.surjectivity.is_refuted());
}
