#include "dirlim/gallery.hpp"
#include "doctest.h"

using namespace dirlim;

TEST_CASE("every gallery item passes its expectations at default parameters") {
  for (const std::string& name : gallery_names()) {
    CAPTURE(name);
    GalleryReport rep = run_gallery_item(name, {});
    for (const auto& e : rep.expectations) {
      CAPTURE(e.label);
      CAPTURE(e.detail);
      CHECK(e.passed);
    }
  }
}

TEST_CASE("gallery rejects unknown items and parameters") {
  CHECK_THROWS_AS(run_gallery_item("nonsense", {}), ValidationError);
  CHECK_THROWS_AS(run_gallery_item("maxchain", {{"zz", 3}}), ValidationError);
  CHECK_THROWS_AS(run_gallery_item("dyadic", {{"h", 99}}), GuardError);
}

TEST_CASE("gallery items accept overridden parameters") {
  GalleryReport rep = run_gallery_item("maxchain", {{"k", 4}});
  CHECK(rep.params.at("k") == 4);
  CHECK(rep.all_passed());

  GalleryReport dy = run_gallery_item("dyadic", {{"h", 3}});
  CHECK(dy.all_passed());

  GalleryReport pm = run_gallery_item("pinje-plusminus", {{"h", 2}});
  CHECK(pm.all_passed());
}

TEST_CASE("word monoid normal forms respect the rewrite rules") {
  WordMonoid m = monoid_xy(3);
  // generators: x0..x3 are 0..3, y is 4
  std::vector<std::uint32_t> w{2, 4};  // x2 y
  CHECK(m.normal_form(w) == std::vector<std::uint32_t>{0, 4});
  // rewriting happens anywhere in the word
  std::vector<std::uint32_t> deep{1, 3, 4, 4};  // x1 x3 y y
  CHECK(m.normal_form(deep) == std::vector<std::uint32_t>{1, 0, 4, 4});
  CHECK(m.spell({0, 4}) == "x0.y");
  CHECK(m.spell({}) == "1");

  WordMonoid big = monoid_xyzw(2);
  // x1 y1 z -> z (x ids 0..2, y ids 3..5, z = 6, w = 7)
  CHECK(big.normal_form({1, 4, 6}) == std::vector<std::uint32_t>{6});
  CHECK(big.normal_form({4, 7}) == std::vector<std::uint32_t>{7});
  // overlapping copies reduce to a single z
  CHECK(big.normal_form({1, 4, 1, 4, 6}) == std::vector<std::uint32_t>{6});
}

TEST_CASE("word closure rounds reach the generators in the documented order") {
  WordMonoid m = monoid_xyzw(4);
  const std::uint32_t k = 4;
  std::vector<std::vector<std::uint32_t>> seeds{{2 * k + 2}, {2 * k + 3}};  // z and w
  WordClosureReport rep = word_division_closure_rounds(m, seeds, 6, 4);
  CHECK(rep.all_generators_reached);
  CHECK(rep.rounds_run <= 3);
  for (std::uint32_t i = 0; i <= k; ++i) {
    CHECK(rep.generator_round[k + 1 + i] == 1);  // yi divides w
    CHECK(rep.generator_round[i] == 2);          // xi divides xi yi, found via z
  }
  CHECK(rep.generator_round[2 * k + 2] == 0);
  CHECK(rep.generator_round[2 * k + 3] == 0);
}

TEST_CASE("builders reject out of range parameters") {
  CHECK_THROWS_AS(maxchain_monoid(0), ValidationError);
  CHECK_THROWS_AS(field_mult_monoid(4), ValidationError);
  CHECK_THROWS_AS(dyadic_group_system(0), GuardError);
  CHECK_THROWS_AS(dyadic_group_system(21), GuardError);
  CHECK_THROWS_AS(pinje_system(true, 16), GuardError);
}
