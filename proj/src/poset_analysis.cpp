#include "dirlim/poset_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dirlim/congruence.hpp"

namespace dirlim {

namespace {

std::vector<ElemId> checked_subset(const Poset& j, const std::vector<ElemId>& raw,
                                   const char* what) {
  std::vector<ElemId> out(raw);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (ElemId e : out)
    if (e >= j.n())
      throw ValidationError(std::string(what) + ": element id " + std::to_string(e) +
                            " out of range");
  return out;
}

}  // namespace

GatherResult gathers(const Poset& j, const GatherQuery& q) {
  auto a = checked_subset(j, q.a, "gathers: A");
  auto b = checked_subset(j, q.b, "gathers: B");
  if (q.under >= j.n()) throw ValidationError("gathers: E out of range");

  GatherResult r;
  for (ElemId x : a)
    if (j.leq(x, q.under)) r.a_down.push_back(x);

  std::vector<std::uint32_t> pos(j.n(), kNone);
  for (std::uint32_t i = 0; i < r.a_down.size(); ++i) pos[r.a_down[i]] = i;

  UnionFind uf(r.a_down.size());
  for (ElemId f : b) {
    if (!j.leq(f, q.under)) continue;
    std::uint32_t prev = kNone;
    for (ElemId x : r.a_down) {
      if (!j.leq(x, f)) continue;
      if (prev != kNone) uf.unite(prev, pos[x]);
      prev = pos[x];
    }
  }

  std::map<std::uint32_t, std::uint32_t> renumber;
  r.class_of.resize(r.a_down.size());
  for (std::uint32_t i = 0; i < r.a_down.size(); ++i) {
    std::uint32_t root = uf.find(i);
    auto [it, fresh] = renumber.insert({root, static_cast<std::uint32_t>(renumber.size())});
    r.class_of[i] = it->second;
    (void)fresh;
  }
  r.n_classes = static_cast<std::uint32_t>(renumber.size());
  r.vacuous = r.a_down.size() <= 1;
  r.gathers = r.n_classes <= 1;
  return r;
}

std::vector<ElemId> critical_elements(const Poset& j, const std::vector<ElemId>& a) {
  auto av = checked_subset(j, a, "critical_elements: A");
  std::vector<ElemId> out;
  std::vector<ElemId> rest;
  for (ElemId e = 0; e < j.n(); ++e) {
    rest.clear();
    for (ElemId f = 0; f < j.n(); ++f)
      if (f != e) rest.push_back(f);
    if (!gathers(j, {av, rest, e}).gathers) out.push_back(e);
  }
  return out;
}

AboveFinReport abovefin_check(const Poset& j) {
  AboveFinReport rep;
  rep.minimal = j.minimal_elements();
  rep.witness_below.resize(j.n(), kNone);
  for (ElemId x = 0; x < j.n(); ++x) {
    for (ElemId m : rep.minimal) {
      if (j.leq(m, x)) {
        rep.witness_below[x] = m;
        break;
      }
    }
    if (rep.witness_below[x] == kNone) rep.holds = false;  // unreachable on posets
  }
  return rep;
}

bool capne_oracle(const Poset& j) {
  if (j.n() > 12) throw GuardError("capne_oracle: poset larger than 12 elements");
  const std::uint32_t n = j.n();

  std::vector<std::uint32_t> downmask(n, 0);
  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y)
      if (j.leq(y, x)) downmask[x] |= (1u << y);

  std::vector<std::uint32_t> downsets;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool closed = true;
    for (ElemId x = 0; x < n && closed; ++x)
      if ((mask >> x) & 1u) closed = (downmask[x] & ~mask) == 0;
    if (closed) downsets.push_back(mask);
  }
  if (downsets.size() > 16)
    throw GuardError("capne_oracle: more than 16 nonempty downsets (" +
                     std::to_string(downsets.size()) + ")");

  const std::uint32_t d = static_cast<std::uint32_t>(downsets.size());
  for (std::uint32_t fam = 1; fam < (1u << d); ++fam) {
    bool directed = true;
    for (std::uint32_t i = 0; i < d && directed; ++i) {
      if (!((fam >> i) & 1u)) continue;
      for (std::uint32_t k = i + 1; k < d && directed; ++k) {
        if (!((fam >> k) & 1u)) continue;
        std::uint32_t meet = downsets[i] & downsets[k];
        bool bounded = false;
        for (std::uint32_t l = 0; l < d && !bounded; ++l)
          if (((fam >> l) & 1u) && (downsets[l] & ~meet) == 0) bounded = true;
        directed = bounded;
      }
    }
    if (!directed) continue;
    std::uint32_t inter = (1u << n) - 1;
    for (std::uint32_t i = 0; i < d; ++i)
      if ((fam >> i) & 1u) inter &= downsets[i];
    if (inter == 0) return false;
  }
  return true;
}

TgathReport tgath_check(const FiniteCategory& cat) {
  TgathReport rep;
  rep.skeleton = preorder_quotient(cat).poset;
  const Poset& j = rep.skeleton;
  rep.a = j.minimal_elements();
  rep.b = critical_elements(j, rep.a);
  rep.below_witness.resize(j.n(), kNone);
  for (ElemId x = 0; x < j.n(); ++x) {
    for (ElemId m : rep.a)
      if (j.leq(m, x)) {
        rep.below_witness[x] = m;
        break;
      }
    if (rep.below_witness[x] == kNone) rep.every_element_above_a = false;
  }
  for (ElemId e = 0; e < j.n(); ++e)
    if (!gathers(j, {rep.a, rep.b, e}).gathers) rep.b_gathers_everywhere = false;
  return rep;
}

namespace {

bool gathers_everywhere(const Poset& j, const std::vector<ElemId>& a,
                        const std::vector<ElemId>& b) {
  for (ElemId e = 0; e < j.n(); ++e)
    if (!gathers(j, {a, b, e}).gathers) return false;
  return true;
}

std::vector<ElemId> merged(const std::vector<ElemId>& base, const std::vector<ElemId>& extra) {
  std::vector<ElemId> out(base);
  out.insert(out.end(), extra.begin(), extra.end());
  std::sort(out.begin(), out.end());
  return out;
}

// combinations of `rest` of the given size, lexicographic, first hit wins
bool search_extension(const Poset& j, const std::vector<ElemId>& a,
                      const std::vector<ElemId>& core, const std::vector<ElemId>& rest,
                      std::size_t size, std::vector<ElemId>& picked, std::size_t from) {
  if (picked.size() == size) return gathers_everywhere(j, a, merged(core, picked));
  for (std::size_t i = from; i < rest.size(); ++i) {
    picked.push_back(rest[i]);
    if (search_extension(j, a, core, rest, size, picked, i + 1)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

MinimalGatheringSet minimal_gathering_set(const Poset& j, const std::vector<ElemId>& a,
                                          std::size_t budget) {
  auto av = checked_subset(j, a, "minimal_gathering_set: A");
  MinimalGatheringSet out;

  // every gathering set contains the critical elements, so extend from there
  std::vector<ElemId> core = critical_elements(j, av);
  if (gathers_everywhere(j, av, core)) {
    out.set = core;
    return out;
  }

  std::vector<ElemId> rest;
  for (ElemId e = 0; e < j.n(); ++e)
    if (!std::binary_search(core.begin(), core.end(), e)) rest.push_back(e);

  for (std::size_t size = 1; core.size() + size <= budget && size <= rest.size(); ++size) {
    std::vector<ElemId> picked;
    if (search_extension(j, av, core, rest, size, picked, 0)) {
      out.set = merged(core, picked);
      return out;
    }
  }

  // greedy completion, reported as such
  out.exact = false;
  out.budget_exhausted = true;
  std::vector<ElemId> b = core;
  while (!gathers_everywhere(j, av, b)) {
    ElemId best = kNone;
    std::uint32_t best_fail = kNone;
    for (ElemId e : rest) {
      if (std::binary_search(b.begin(), b.end(), e)) continue;
      auto candidate = merged(b, {e});
      std::uint32_t fail = 0;
      for (ElemId under = 0; under < j.n(); ++under)
        if (!gathers(j, {av, candidate, under}).gathers) ++fail;
      if (fail < best_fail) {
        best_fail = fail;
        best = e;
      }
    }
    b = merged(b, {best});
  }
  out.set = b;
  return out;
}

InstabilityProbe horizon_instability_probe(
    const std::function<Poset(std::uint32_t)>& family, std::uint32_t k_from,
    std::uint32_t k_to, std::size_t budget) {
  if (k_to < k_from) throw ValidationError("horizon_instability_probe: empty range");
  InstabilityProbe probe;
  for (std::uint32_t k = k_from; k <= k_to; ++k) {
    Poset p = family(k);
    auto mg = minimal_gathering_set(p, p.minimal_elements(), budget);
    std::vector<std::string> names;
    for (ElemId e : mg.set) names.push_back(p.name(e));
    probe.ks.push_back(k);
    probe.sets.push_back(std::move(names));
  }
  for (const auto& s : probe.sets)
    if (s != probe.sets.front()) probe.stable = false;
  return probe;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string poset_dot(const Poset& j, const std::vector<ElemId>& minimal,
                      const std::vector<ElemId>& critical,
                      const std::vector<ElemId>& gathering) {
  std::set<ElemId> mins(minimal.begin(), minimal.end());
  std::set<ElemId> crit(critical.begin(), critical.end());
  std::set<ElemId> gath(gathering.begin(), gathering.end());
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=ellipse, style=filled, fillcolor=white];\n";
  for (ElemId e = 0; e < j.n(); ++e) {
    os << "  n" << e << " [label=\"" << dot_escape(j.name(e)) << "\"";
    if (crit.count(e))
      os << ", fillcolor=orange";
    else if (gath.count(e))
      os << ", fillcolor=lightblue";
    else if (mins.count(e))
      os << ", fillcolor=palegreen";
    if (gath.count(e)) os << ", penwidth=2";
    os << "];\n";
  }
  for (auto [lo, hi] : j.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dirlim
