#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dirlim/core.hpp"
#include "dirlim/dirsys.hpp"

namespace dirlim {

// --- finite structures ---

// {0, ..., k} under max; 0 is the identity and k the unique right zero.
FiniteMonoid maxchain_monoid(std::uint32_t k);

// The identity plus s right zeros z1..zs.
FiniteMonoid rightzero_monoid(std::uint32_t s);

// (Z/p, *) for a prime p <= 97.
FiniteMonoid field_mult_monoid(std::uint32_t p);

// Two incomparable bottoms 0a, 0b under the chain 1 < 2 < ... < k.
Poset two_bottom_chain(std::uint32_t k);

// The same two bottoms under the descending tail 1+1/k < ... < 1+1/1,
// a truncation whose least tail element moves as k grows.
Poset two_bottom_chain_deleted(std::uint32_t k);

// --- lazily presented systems ---

// Stages are the quotients Z[1/2]/<2^-n> seen through dyadic residues with
// exponent at most h; probes are the translations by 1/2^m for m <= h.
// Every stage declares no limit points: no residue is fixed by all probes
// until the quotients themselves become trivial.
LazySystem dyadic_group_system(std::uint32_t h);

// Stages over the chain window 0 > -1 > ... > -h. Carriers at -e hold
// {+1,-1} (or nothing, in the empty variant) until stage e+1 collapses them
// to {0}. The plus/minus variant declares the two limit points x+ and x-;
// the empty variant declares none.
LazySystem pinje_system(bool plus_minus, std::uint32_t h);

// --- word-level monoid presentations ---

// A monoid given by generators and rewrite rules that strictly reduce a
// well-founded measure and have no overlapping left sides, so exhaustive
// leftmost rewriting computes normal forms.
struct WordMonoid {
  std::vector<std::string> generators;
  std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> rules;

  std::vector<std::uint32_t> normal_form(std::vector<std::uint32_t> w) const;
  std::string spell(const std::vector<std::uint32_t>& w) const;
};

// Generators x0..xk, y with xi y -> x0 y for i >= 1.
WordMonoid monoid_xy(std::uint32_t k);

// Generators x0..xk, y0..yk, z, w with xi yi z -> z and yi w -> w.
WordMonoid monoid_xyzw(std::uint32_t k);

// Rounds of closing a seed set under products and right division inside a
// bounded word universe (the empty word, generators, and normal forms of
// generator pairs, capped by length). Each round sweeps once from the
// previous set; the round at which each generator first appears is
// recorded.
struct WordClosureReport {
  std::vector<std::uint32_t> generator_round;
  std::uint32_t rounds_run = 0;
  bool all_generators_reached = false;
};
WordClosureReport word_division_closure_rounds(
    const WordMonoid& m, const std::vector<std::vector<std::uint32_t>>& seeds,
    std::uint32_t max_rounds, std::size_t length_cap);

// --- registry ---

struct ExpectationResult {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct GalleryReport {
  std::string item;
  std::map<std::string, std::uint32_t> params;
  std::vector<ExpectationResult> expectations;

  bool all_passed() const {
    for (const auto& e : expectations)
      if (!e.passed) return false;
    return true;
  }
};

std::vector<std::string> gallery_names();

// Runs one item with its default parameters overridden by params; throws
// ValidationError for unknown items or parameters out of range.
GalleryReport run_gallery_item(const std::string& name,
                               std::map<std::string, std::uint32_t> params);

}  // namespace dirlim
