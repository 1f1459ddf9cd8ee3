#include "dirlim/gallery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dirlim/congruence.hpp"
#include "dirlim/division.hpp"
#include "dirlim/poset_analysis.hpp"

namespace dirlim {

FiniteMonoid maxchain_monoid(std::uint32_t k) {
  if (k < 1 || k > 40) throw ValidationError("maxchain_monoid: k must be in [1, 40]");
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i <= k; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<ElemId>> table(k + 1, std::vector<ElemId>(k + 1));
  for (ElemId a = 0; a <= k; ++a)
    for (ElemId b = 0; b <= k; ++b) table[a][b] = std::max(a, b);
  return FiniteMonoid::validated(names, table, 0);
}

FiniteMonoid rightzero_monoid(std::uint32_t s) {
  if (s < 1 || s > 40) throw ValidationError("rightzero_monoid: s must be in [1, 40]");
  std::vector<std::string> names{"1"};
  for (std::uint32_t i = 1; i <= s; ++i) names.push_back("z" + std::to_string(i));
  const std::uint32_t n = s + 1;
  std::vector<std::vector<ElemId>> table(n, std::vector<ElemId>(n));
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = 0; b < n; ++b) table[a][b] = b == 0 ? a : b;
  return FiniteMonoid::validated(names, table, 0);
}

FiniteMonoid field_mult_monoid(std::uint32_t p) {
  if (p < 2 || p > 97) throw ValidationError("field_mult_monoid: p must be in [2, 97]");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw ValidationError("field_mult_monoid: p must be prime");
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < p; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<ElemId>> table(p, std::vector<ElemId>(p));
  for (ElemId a = 0; a < p; ++a)
    for (ElemId b = 0; b < p; ++b) table[a][b] = (a * b) % p;
  return FiniteMonoid::validated(names, table, 1);
}

Poset two_bottom_chain(std::uint32_t k) {
  if (k < 1 || k > 30) throw ValidationError("two_bottom_chain: k must be in [1, 30]");
  std::vector<std::string> names{"0a", "0b"};
  for (std::uint32_t i = 1; i <= k; ++i) names.push_back(std::to_string(i));
  const std::uint32_t n = k + 2;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElemId x = 0; x < n; ++x) leq[x][x] = true;
  for (ElemId bottom : {0u, 1u})
    for (ElemId x = 2; x < n; ++x) leq[bottom][x] = true;
  for (ElemId x = 2; x < n; ++x)
    for (ElemId y = x; y < n; ++y) leq[x][y] = true;
  return Poset::validated(names, leq);
}

Poset two_bottom_chain_deleted(std::uint32_t k) {
  if (k < 1 || k > 30) throw ValidationError("two_bottom_chain_deleted: k must be in [1, 30]");
  std::vector<std::string> names{"0a", "0b"};
  // ascending: 1+1/k < 1+1/(k-1) < ... < 1+1/1
  for (std::uint32_t j = k; j >= 1; --j) names.push_back("1+1/" + std::to_string(j));
  const std::uint32_t n = k + 2;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElemId x = 0; x < n; ++x) leq[x][x] = true;
  for (ElemId bottom : {0u, 1u})
    for (ElemId x = 2; x < n; ++x) leq[bottom][x] = true;
  for (ElemId x = 2; x < n; ++x)
    for (ElemId y = x; y < n; ++y) leq[x][y] = true;
  return Poset::validated(names, leq);
}

LazySystem dyadic_group_system(std::uint32_t h) {
  if (h < 1 || h > 20) throw GuardError("dyadic_group_system: h must be in [1, 20]");

  LazySystem::Presentation p;
  p.name = "dyadic(" + std::to_string(h) + ")";
  p.objects = {"G"};
  for (std::uint32_t m = 0; m <= h; ++m) p.probes.push_back("1/2^" + std::to_string(m));

  auto size_at = [h](std::uint32_t n) -> std::uint32_t {
    return n >= h ? 1u : (1u << (h - n));
  };

  p.stage_fn = [h, size_at](std::uint32_t n) {
    LazyStage st;
    const std::uint32_t size = size_at(n);
    st.sizes = {size};
    st.probe_actions.resize(h + 1);
    for (std::uint32_t m = 0; m <= h; ++m) {
      // residue v stands for v/2^h; the probe adds 2^(h-m)/2^h = 1/2^m
      const std::uint32_t add = (1u << (h - m)) % size;
      auto& act = st.probe_actions[m];
      act.resize(size);
      for (std::uint32_t v = 0; v < size; ++v) act[v] = (v + add) % size;
    }
    return st;  // no limit points at any stage
  };
  p.step_fn = [size_at](std::uint32_t n, ObjId) {
    std::vector<ElemId> out(size_at(n));
    for (std::uint32_t v = 0; v < out.size(); ++v) out[v] = v % size_at(n + 1);
    return out;
  };
  p.limit_step_fn = [](std::uint32_t) { return std::vector<ElemId>{}; };
  return LazySystem(std::move(p));
}

LazySystem pinje_system(bool plus_minus, std::uint32_t h) {
  if (h < 1 || h > 15) throw GuardError("pinje_system: h must be in [1, 15]");

  std::vector<std::string> objects;
  for (std::uint32_t e = 0; e <= h; ++e)
    objects.push_back(e == 0 ? "0" : "-" + std::to_string(e));

  // object id e stands for -e, so -e <= -f exactly when e >= f
  const std::uint32_t n = h + 1;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (ElemId i = 0; i < n; ++i)
    for (ElemId j = 0; j < n; ++j) leq[i][j] = i >= j;
  Poset chain = Poset::validated(objects, leq);
  auto window = std::make_shared<const FiniteCategory>(poset_to_category(chain));

  LazySystem::Presentation p;
  p.name = std::string(plus_minus ? "pinje-plusminus(" : "pinje-empty(") + std::to_string(h) + ")";
  p.objects = objects;
  p.window = window;

  auto live = [h](std::uint32_t e, std::uint32_t s) { return e >= s; };  // carrier still wide

  p.stage_fn = [window, plus_minus, h, live](std::uint32_t s) {
    LazyStage st;
    const std::uint32_t n = h + 1;
    st.sizes.resize(n);
    st.names.resize(n);
    for (std::uint32_t e = 0; e < n; ++e) {
      if (live(e, s)) {
        if (plus_minus) {
          st.sizes[e] = 2;
          st.names[e] = {"+1", "-1"};
        } else {
          st.sizes[e] = 0;
          st.names[e] = {};
        }
      } else {
        st.sizes[e] = 1;
        st.names[e] = {"0"};
      }
    }
    st.window_actions.resize(window->n_morphisms());
    for (MorId a = 0; a < window->n_morphisms(); ++a) {
      const std::uint32_t i = window->dom(a), j = window->cod(a);  // i >= j
      auto& act = st.window_actions[a];
      if (live(i, s)) {
        if (plus_minus) act = live(j, s) ? std::vector<ElemId>{0, 1} : std::vector<ElemId>{0, 0};
        // empty variant: empty carrier, empty action
      } else {
        act = {0};  // j <= i < s, both collapsed
      }
    }
    if (plus_minus) {
      LazyStage::LimitPoint plus{"x+", std::vector<ElemId>(n, 0)};
      LazyStage::LimitPoint minus{"x-", {}};
      minus.coord.resize(n);
      for (std::uint32_t e = 0; e < n; ++e) minus.coord[e] = live(e, s) ? 1 : 0;
      st.limits = {plus, minus};
    }
    return st;
  };
  p.step_fn = [plus_minus, live](std::uint32_t s, ObjId e) {
    if (live(e, s + 1)) return plus_minus ? std::vector<ElemId>{0, 1} : std::vector<ElemId>{};
    if (live(e, s)) return plus_minus ? std::vector<ElemId>{0, 0} : std::vector<ElemId>{};
    return std::vector<ElemId>{0};
  };
  p.limit_step_fn = [plus_minus](std::uint32_t) {
    return plus_minus ? std::vector<ElemId>{0, 1} : std::vector<ElemId>{};
  };
  return LazySystem(std::move(p));
}

// --- word monoids ---

std::vector<std::uint32_t> WordMonoid::normal_form(std::vector<std::uint32_t> w) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, rhs] : rules) {
      for (std::size_t i = 0; i + lhs.size() <= w.size(); ++i) {
        if (std::equal(lhs.begin(), lhs.end(), w.begin() + i)) {
          std::vector<std::uint32_t> next(w.begin(), w.begin() + i);
          next.insert(next.end(), rhs.begin(), rhs.end());
          next.insert(next.end(), w.begin() + i + lhs.size(), w.end());
          w = std::move(next);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return w;
}

std::string WordMonoid::spell(const std::vector<std::uint32_t>& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::uint32_t g : w) {
    if (!out.empty()) out += ".";
    out += generators.at(g);
  }
  return out;
}

WordMonoid monoid_xy(std::uint32_t k) {
  if (k < 1 || k > 50) throw ValidationError("monoid_xy: k must be in [1, 50]");
  WordMonoid m;
  for (std::uint32_t i = 0; i <= k; ++i) m.generators.push_back("x" + std::to_string(i));
  m.generators.push_back("y");
  const std::uint32_t y = k + 1;
  for (std::uint32_t i = 1; i <= k; ++i) m.rules.push_back({{i, y}, {0u, y}});
  return m;
}

WordMonoid monoid_xyzw(std::uint32_t k) {
  if (k < 1 || k > 50) throw ValidationError("monoid_xyzw: k must be in [1, 50]");
  WordMonoid m;
  for (std::uint32_t i = 0; i <= k; ++i) m.generators.push_back("x" + std::to_string(i));
  for (std::uint32_t i = 0; i <= k; ++i) m.generators.push_back("y" + std::to_string(i));
  m.generators.push_back("z");
  m.generators.push_back("w");
  const std::uint32_t z = 2 * k + 2, w = 2 * k + 3;
  for (std::uint32_t i = 0; i <= k; ++i) {
    m.rules.push_back({{i, k + 1 + i, z}, {z}});
    m.rules.push_back({{k + 1 + i, w}, {w}});
  }
  return m;
}

WordClosureReport word_division_closure_rounds(
    const WordMonoid& m, const std::vector<std::vector<std::uint32_t>>& seeds,
    std::uint32_t max_rounds, std::size_t length_cap) {
  using Word = std::vector<std::uint32_t>;

  // universe: empty word, generators, normal forms of generator pairs
  std::set<Word> universe;
  universe.insert({});
  for (std::uint32_t g = 0; g < m.generators.size(); ++g) universe.insert({g});
  for (std::uint32_t g = 0; g < m.generators.size(); ++g)
    for (std::uint32_t g2 = 0; g2 < m.generators.size(); ++g2) {
      Word nf = m.normal_form({g, g2});
      if (nf.size() <= length_cap) universe.insert(nf);
    }

  std::map<Word, std::uint32_t> round_of;
  round_of[{}] = 0;
  for (const Word& s : seeds) {
    Word nf = m.normal_form(s);
    if (!universe.count(nf))
      throw ValidationError("word closure: seed leaves the bounded universe");
    round_of[nf] = 0;
  }

  WordClosureReport rep;
  auto concat_nf = [&](const Word& a, const Word& b) {
    Word ab(a);
    ab.insert(ab.end(), b.begin(), b.end());
    return m.normal_form(std::move(ab));
  };

  for (std::uint32_t r = 1; r <= max_rounds; ++r) {
    std::set<Word> added;
    std::vector<Word> current;
    for (const auto& [word, rr] : round_of)
      if (rr < r) current.push_back(word);

    for (const Word& u : current)
      for (const Word& v : current) {
        Word nf = concat_nf(u, v);
        if (universe.count(nf) && !round_of.count(nf)) added.insert(nf);
      }
    for (const Word& u : universe) {
      if (round_of.count(u)) continue;
      for (const Word& v : current) {
        Word nf = concat_nf(u, v);
        if (round_of.count(nf) && round_of[nf] < r) {
          added.insert(u);
          break;
        }
      }
    }
    if (added.empty()) break;
    for (const Word& word : added) round_of[word] = r;
    rep.rounds_run = r;
  }

  rep.generator_round.assign(m.generators.size(), kNone);
  rep.all_generators_reached = true;
  for (std::uint32_t g = 0; g < m.generators.size(); ++g) {
    auto it = round_of.find(Word{g});
    if (it != round_of.end())
      rep.generator_round[g] = it->second;
    else
      rep.all_generators_reached = false;
  }
  return rep;
}

// --- registry ---

namespace {

void expect(GalleryReport& rep, const std::string& label, bool ok, std::string detail) {
  rep.expectations.push_back({label, ok, std::move(detail)});
}

std::string join_names(const std::vector<std::string>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out + "}";
}

std::uint32_t param(const std::map<std::string, std::uint32_t>& params, const std::string& key,
                    std::uint32_t fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void check_params(const std::map<std::string, std::uint32_t>& params,
                  const std::set<std::string>& known) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (!known.count(key))
      throw ValidationError("gallery: unknown parameter '" + key + "'");
  }
}

GalleryReport run_maxchain(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"k"});
  const std::uint32_t k = param(params, "k", 3);
  GalleryReport rep{"maxchain", {{"k", k}}, {}};
  FiniteMonoid m = maxchain_monoid(k);

  auto battery = condition_battery(m, 3);
  expect(rep, "right zeros are exactly {" + std::to_string(k) + "}",
         battery.right_zeros == std::vector<ElemId>{k},
         "found " + std::to_string(battery.right_zeros.size()) + " right zeros");
  expect(rep, "division seed is the top element",
         battery.multdiv.exact && battery.multdiv.seed == std::vector<ElemId>{k},
         "seed size " + std::to_string(battery.multdiv.seed.size()));
  expect(rep, "smallest left ideal is the top singleton",
         battery.smallest_left_ideal == std::vector<ElemId>{k}, "");

  if (k <= 5) {
    std::size_t count = left_congruence_count(m);
    expect(rep, "left congruences are the interval partitions, 2^k of them",
           count == (std::size_t{1} << k), "counted " + std::to_string(count));
  }

  // a fixed class [k-1, k], forced onto 1, collapses everything
  CongruenceFamily base = left_congruence_closure(m, {{k - 1, k}});
  auto fixed = quotient_fixed_classes(m, base);
  bool base_fixed =
      std::find(fixed.begin(), fixed.end(), base.class_of[0][k - 1]) != fixed.end();
  CongruenceFamily forced = left_congruence_closure(m, {{k - 1, k}, {0, k - 1}});
  expect(rep, "forcing a fixed class onto the identity collapses the monoid",
         base_fixed && is_improper(forced),
         "classes after forcing: " + std::to_string(forced.n_classes[0]));
  return rep;
}

GalleryReport run_rightzero(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"s"});
  const std::uint32_t s = param(params, "s", 3);
  GalleryReport rep{"rightzero", {{"s", s}}, {}};
  FiniteMonoid m = rightzero_monoid(s);

  auto battery = condition_battery(m, 2);
  std::vector<ElemId> zeros;
  for (ElemId z = 1; z <= s; ++z) zeros.push_back(z);
  expect(rep, "every z is a right zero", battery.right_zeros == zeros,
         std::to_string(battery.right_zeros.size()) + " of " + std::to_string(s));
  expect(rep, "any single zero is a division seed",
         battery.multdiv.exact && battery.multdiv.seed.size() == 1, "");

  auto gens = minimal_improper_generators(
      hom_functor(std::make_shared<const FiniteCategory>(monoid_to_category(m)), 0), 8);
  expect(rep, "one pair collapses the left regular action",
         gens.exact && gens.total_pairs == 1, "needed " + std::to_string(gens.total_pairs));

  if (s <= 4) {
    // in the opposite monoid, translation by anything not 1 is constant,
    // so every partition passes
    std::size_t count = left_congruence_count(m.opposite());
    std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203};
    expect(rep, "opposite monoid admits every partition, Bell(s+1) of them",
           count == bell[s + 1], "counted " + std::to_string(count));
  }
  return rep;
}

GalleryReport run_field_mult(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"p"});
  const std::uint32_t p = param(params, "p", 3);
  GalleryReport rep{"field-mult", {{"p", p}}, {}};
  FiniteMonoid m = field_mult_monoid(p);

  auto battery = condition_battery(m, 2);
  expect(rep, "zero is the only right zero", battery.right_zeros == std::vector<ElemId>{0}, "");
  expect(rep, "not a group", !m.is_group(), "");
  expect(rep, "the absorbing element alone is a division seed",
         battery.multdiv.exact && battery.multdiv.seed == std::vector<ElemId>{0}, "");
  if (p == 3) {
    std::size_t count = left_congruence_count(m);
    expect(rep, "three left congruences for p=3", count == 3,
           "counted " + std::to_string(count));
  }
  return rep;
}

GalleryReport run_two_bottom_chain(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"k"});
  const std::uint32_t k = param(params, "k", 2);
  GalleryReport rep{"two-bottom-chain", {{"k", k}}, {}};
  Poset j = two_bottom_chain(k);
  auto a = j.minimal_elements();

  auto crit = critical_elements(j, a);
  expect(rep, "the join point 1 is the unique critical element",
         crit == std::vector<ElemId>{2}, std::to_string(crit.size()) + " critical");

  auto mg = minimal_gathering_set(j, a, 4);
  expect(rep, "{1} is the minimal gathering set", mg.exact && mg.set == std::vector<ElemId>{2},
         "");

  auto cat = std::make_shared<const FiniteCategory>(poset_to_category(j));
  auto pres = trivial_eset_finitely_presented(cat);
  expect(rep, "the terminal functor needs exactly one relation",
         pres.generators.exact && pres.generators.total_pairs == 1,
         std::to_string(pres.generators.total_pairs) + " pairs");

  auto tg = tgath_check(*cat);
  expect(rep, "finiteness conditions all hold", tg.all_hold(), "");

  if (k <= 10) {  // stays inside the oracle's size guards
    expect(rep, "directed downset families meet", capne_oracle(j), "");
  }
  return rep;
}

GalleryReport run_two_bottom_chain_deleted(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"k"});
  const std::uint32_t k = param(params, "k", 3);
  GalleryReport rep{"two-bottom-chain-deleted", {{"k", k}}, {}};
  Poset j = two_bottom_chain_deleted(k);
  auto a = j.minimal_elements();

  auto mg = minimal_gathering_set(j, a, 4);
  bool names_match = mg.set.size() == 1 && j.name(mg.set[0]) == "1+1/" + std::to_string(k);
  expect(rep, "the least tail element gathers alone", mg.exact && names_match,
         join_names([&] {
           std::vector<std::string> v;
           for (ElemId e : mg.set) v.push_back(j.name(e));
           return v;
         }()));

  if (k <= 28) {
    auto probe = horizon_instability_probe(
        [](std::uint32_t kk) { return two_bottom_chain_deleted(kk); }, k, k + 2, 4);
    expect(rep, "the gathering set drifts as the tail extends (heuristic)", !probe.stable,
           "sets " + join_names(probe.sets.front()) + " .. " + join_names(probe.sets.back()));
  }
  return rep;
}

GalleryReport run_dyadic(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"h"});
  const std::uint32_t h = param(params, "h", 6);
  GalleryReport rep{"dyadic", {{"h", h}}, {}};
  LazySystem s = dyadic_group_system(h);

  IotaReport at_h = iota_at_horizon(s, h);
  expect(rep, "no stage has limit points, so the domain is empty", at_h.domain_size == 0,
         std::to_string(at_h.domain_size));
  expect(rep, "all residues merge by the horizon, leaving one fixed class",
         at_h.codomain_size == 1, std::to_string(at_h.codomain_size));
  expect(rep, "the comparison map misses the fixed class", at_h.surjectivity.is_refuted(),
         at_h.surjectivity.describe());
  expect(rep, "no injectivity failure", !at_h.injectivity.is_refuted(),
         at_h.injectivity.describe());

  if (h >= 2) {
    IotaReport below = iota_at_horizon(s, h - 1);
    expect(rep, "below the horizon no class is probe-fixed yet", below.codomain_size == 0,
           std::to_string(below.codomain_size));
  }
  bool monotone = true;
  for (std::uint32_t t = h; t <= h + 2; ++t)
    monotone = monotone && iota_at_horizon(s, t).surjectivity.is_refuted();
  expect(rep, "the refutation persists at later horizons", monotone, "");

  std::vector<std::uint32_t> probes;
  for (std::uint32_t m = 0; m <= h; ++m) probes.push_back(m);
  auto certs = eventual_fixedness_certificate(s, probes, 0, 0, h);
  bool stages_match = true;
  for (std::uint32_t m = 0; m <= h; ++m)
    stages_match = stages_match && certs[m].is_proven() && certs[m].stage == m;
  expect(rep, "translation by 1/2^m becomes trivial at stage m exactly", stages_match, "");

  auto stab = stabilization_stage(s, {1}, 0, 0, h);
  expect(rep, "stabilization under the half-translation happens at stage 1",
         stab.verdict.is_proven() && stab.verdict.stage == 1, stab.verdict.describe());
  return rep;
}

GalleryReport run_pinje(bool plus_minus, std::map<std::string, std::uint32_t> params) {
  check_params(params, {"h"});
  const std::uint32_t h = param(params, "h", 4);
  GalleryReport rep{plus_minus ? "pinje-plusminus" : "pinje-empty", {{"h", h}}, {}};
  LazySystem s = pinje_system(plus_minus, h);

  IotaReport before = iota_at_horizon(s, h);
  IotaReport after = iota_at_horizon(s, h + 1);

  if (plus_minus) {
    expect(rep, "the two limit points persist at every stage",
           before.domain_size == 2 && after.domain_size == 2,
           std::to_string(after.domain_size));
    expect(rep, "all window components merge one stage past the window depth",
           after.codomain_size == 1, std::to_string(after.codomain_size));
    expect(rep, "within the window depth the points stay separated",
           !before.injectivity.is_refuted(), before.injectivity.describe());
    expect(rep, "one stage later the comparison map conflates x+ and x-",
           after.injectivity.is_refuted() &&
               after.injectivity.witness.find("x+") != std::string::npos &&
               after.injectivity.witness.find("x-") != std::string::npos,
           after.injectivity.describe());
    bool monotone = true;
    for (std::uint32_t t = h + 1; t <= h + 3; ++t)
      monotone = monotone && iota_at_horizon(s, t).injectivity.is_refuted();
    expect(rep, "the refutation persists at later horizons", monotone, "");
  } else {
    expect(rep, "no stage has limit points, so the domain is empty",
           before.domain_size == 0 && after.domain_size == 0, "");
    expect(rep, "the window empties out but the colimit limit does not",
           before.codomain_size == 0 && after.codomain_size == 1,
           std::to_string(after.codomain_size));
    expect(rep, "the comparison map misses the surviving tuple",
           after.surjectivity.is_refuted(), after.surjectivity.describe());
    bool monotone = true;
    for (std::uint32_t t = h + 1; t <= h + 3; ++t)
      monotone = monotone && iota_at_horizon(s, t).surjectivity.is_refuted();
    expect(rep, "the refutation persists at later horizons", monotone, "");
  }
  return rep;
}

GalleryReport run_monoid_xy(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"k"});
  const std::uint32_t k = param(params, "k", 10);
  GalleryReport rep{"monoid-xy", {{"k", k}}, {}};
  WordMonoid m = monoid_xy(k);
  const std::uint32_t y = k + 1;

  bool collapse = true;
  for (std::uint32_t i = 0; i <= k; ++i)
    collapse = collapse && m.normal_form({i, y}) == std::vector<std::uint32_t>{0, y};
  expect(rep, "x_i y collapses to x_0 y for every i", collapse, "");

  // the submonoid generated by {y, x0 y} interacts with every generator:
  // multiplying any generator into it lands back inside
  std::vector<std::vector<std::uint32_t>> seed_products;
  std::vector<std::vector<std::uint32_t>> seeds{{y}, {0u, y}};
  seed_products.push_back({});
  for (const auto& a : seeds) {
    seed_products.push_back(a);
    for (const auto& b : seeds) {
      auto ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      seed_products.push_back(m.normal_form(ab));
    }
  }
  auto inside = [&](const std::vector<std::uint32_t>& w) {
    return std::find(seed_products.begin(), seed_products.end(), w) != seed_products.end();
  };
  bool interacts = true;
  for (std::uint32_t g = 0; g <= k + 1; ++g) {
    auto gy = m.normal_form({g, y});
    interacts = interacts && inside(gy);
  }
  expect(rep, "a two-element seed absorbs every generator on the right by y", interacts, "");

  // prefixes of x_i x_0 y never end in y, so they avoid the left ideal of y
  bool avoid = true;
  for (std::uint32_t i = 1; i <= k; ++i) {
    std::vector<std::uint32_t> word = m.normal_form({i, 0u, y});
    for (std::size_t cut = 1; cut < word.size(); ++cut) {
      std::vector<std::uint32_t> prefix(word.begin(), word.begin() + cut);
      auto nf = m.normal_form(prefix);
      avoid = avoid && (nf.empty() || nf.back() != y);
    }
  }
  expect(rep, "proper left factors of x_i x_0 y stay out of the ideal of y", avoid, "");
  return rep;
}

GalleryReport run_monoid_xyzw(std::map<std::string, std::uint32_t> params) {
  check_params(params, {"k"});
  const std::uint32_t k = param(params, "k", 10);
  GalleryReport rep{"monoid-xyzw", {{"k", k}}, {}};
  WordMonoid m = monoid_xyzw(k);
  const std::uint32_t z = 2 * k + 2, w = 2 * k + 3;

  auto closure = word_division_closure_rounds(m, {{z}, {w}}, 4, 2);
  expect(rep, "two absorbing seeds recover every generator",
         closure.all_generators_reached, "rounds run: " + std::to_string(closure.rounds_run));

  bool rounds_ok = closure.generator_round[z] == 0 && closure.generator_round[w] == 0;
  for (std::uint32_t i = 0; i <= k && rounds_ok; ++i)
    rounds_ok = closure.generator_round[k + 1 + i] == 1;  // y_i divides w
  for (std::uint32_t i = 0; i <= k && rounds_ok; ++i)
    rounds_ok = closure.generator_round[i] == 2;  // x_i divides x_i y_i
  expect(rep, "the y generators arrive a round before the x generators", rounds_ok, "");
  expect(rep, "three rounds suffice at any size", closure.rounds_run <= 3,
         std::to_string(closure.rounds_run));
  return rep;
}

}  // namespace

std::vector<std::string> gallery_names() {
  return {"maxchain",     "rightzero",    "field-mult",
          "two-bottom-chain", "two-bottom-chain-deleted", "dyadic",
          "pinje-plusminus",  "pinje-empty",              "monoid-xy",
          "monoid-xyzw"};
}

GalleryReport run_gallery_item(const std::string& name,
                               std::map<std::string, std::uint32_t> params) {
  if (name == "maxchain") return run_maxchain(std::move(params));
  if (name == "rightzero") return run_rightzero(std::move(params));
  if (name == "field-mult") return run_field_mult(std::move(params));
  if (name == "two-bottom-chain") return run_two_bottom_chain(std::move(params));
  if (name == "two-bottom-chain-deleted") return run_two_bottom_chain_deleted(std::move(params));
  if (name == "dyadic") return run_dyadic(std::move(params));
  if (name == "pinje-plusminus") return run_pinje(true, std::move(params));
  if (name == "pinje-empty") return run_pinje(false, std::move(params));
  if (name == "monoid-xy") return run_monoid_xy(std::move(params));
  if (name == "monoid-xyzw") return run_monoid_xyzw(std::move(params));
  throw ValidationError("gallery: unknown item '" + name + "'");
}

}  // namespace dirlim
