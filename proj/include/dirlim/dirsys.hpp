#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dirlim/eset.hpp"

namespace dirlim {

// Outcome of a semi-decidable question explored up to a finite horizon.
// Proven carries the certifying stage; a refutation carries a concrete
// witness and is final; Unknown only reports how far the search went.
struct Verdict {
  enum class Outcome { Proven, RefutedWithinHorizon, Unknown };
  Outcome outcome = Outcome::Unknown;
  std::uint32_t stage = kNone;    // certifying stage when proven
  std::uint32_t horizon = kNone;  // horizon searched otherwise
  std::string witness;

  static Verdict proven(std::uint32_t stage_at) {
    Verdict v;
    v.outcome = Outcome::Proven;
    v.stage = stage_at;
    return v;
  }
  static Verdict refuted(std::uint32_t horizon_at, std::string why) {
    Verdict v;
    v.outcome = Outcome::RefutedWithinHorizon;
    v.horizon = horizon_at;
    v.witness = std::move(why);
    return v;
  }
  static Verdict unknown(std::uint32_t horizon_at) {
    Verdict v;
    v.outcome = Outcome::Unknown;
    v.horizon = horizon_at;
    return v;
  }
  bool is_proven() const { return outcome == Outcome::Proven; }
  bool is_refuted() const { return outcome == Outcome::RefutedWithinHorizon; }
  bool is_unknown() const { return outcome == Outcome::Unknown; }
  std::string describe() const;
};

// ---------------------------------------------------------------------------
// Finite directed systems: finitely many member functors over one category,
// indexed by a finite nonempty directed poset, with connecting morphisms
// satisfying connect(i,i) = id and connect(j,k) . connect(i,j) = connect(i,k).
// ---------------------------------------------------------------------------

class FiniteDirectedSystem {
 public:
  static FiniteDirectedSystem validated(
      Poset index, std::vector<ESet> members,
      const std::map<std::pair<ElemId, ElemId>, std::vector<std::vector<ElemId>>>& connects);

  const Poset& index() const { return index_; }
  const ESet& member(ElemId i) const { return members_.at(i); }
  const ESetMorphism& connect(ElemId i, ElemId j) const;
  ElemId top() const { return top_; }
  const FiniteCategory& category() const { return members_.front().category(); }

 private:
  FiniteDirectedSystem() = default;
  Poset index_;
  std::vector<ESet> members_;
  std::vector<ESetMorphism> connects_;
  std::vector<std::uint32_t> slot_;  // i * n + j -> index into connects_
  ElemId top_ = kNone;
};

// A finite directed index has a greatest element, so the colimit is the
// member there and the insertions are the connecting morphisms into it.
struct FiniteColimit {
  ElemId top;
  ESet eset;
};
FiniteColimit colimit_eset(const FiniteDirectedSystem& s);

// Do x at stage i and y at stage j become equal in the colimit? Equivalent
// to their images agreeing at some common later stage; the least certifying
// stage (in index id order) is reported.
struct ColimitEquality {
  bool equal = false;
  ElemId certified_at = kNone;
};
ColimitEquality insertion_equal(const FiniteDirectedSystem& s, ElemId i, ObjId e, ElemId x,
                                ElemId j, ElemId y);

// The canonical comparison from the colimit of member limits into the limit
// of the colimit functor, with exact injectivity/surjectivity verdicts.
struct IotaReport {
  bool exact = false;  // finite systems: yes; truncated ones: no
  std::uint32_t horizon = kNone;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::string> domain_names;
  std::vector<std::string> codomain_names;
  std::vector<std::uint32_t> image;  // per domain class, codomain index
  Verdict injectivity;
  Verdict surjectivity;
};
IotaReport iota(const FiniteDirectedSystem& s);

// ---------------------------------------------------------------------------
// Lazily presented systems: an infinite chain of stages over a fixed finite
// window of objects, produced on demand by deterministic callbacks and
// explored up to finite horizons. Stage data is validated on first use and
// cached; the cache is synchronized and stages are immutable once built.
//
// Two presentation styles:
//   - a materialized window category, whose actions each stage carries;
//   - a single object with named probe endomorphisms only, for systems
//     whose full category is too large to materialize.
//
// Each stage also declares the limit points of the *full* stage functor,
// as abstract named points with coordinate shadows on the window. These
// come from the presenter's knowledge of the system; a finite truncation
// cannot derive them, and everything downstream that consumes them reports
// through Verdicts rather than claiming exactness.
// ---------------------------------------------------------------------------

struct LazyStage {
  std::vector<std::uint32_t> sizes;                  // per window object
  std::vector<std::vector<std::string>> names;       // optional, per object
  std::vector<std::vector<ElemId>> window_actions;   // per window morphism
  std::vector<std::vector<ElemId>> probe_actions;    // per probe, object 0 only

  struct LimitPoint {
    std::string name;
    std::vector<ElemId> coord;  // one per window object
  };
  std::vector<LimitPoint> limits;
};

class LazySystem {
 public:
  struct Presentation {
    std::string name;
    std::vector<std::string> objects;
    std::shared_ptr<const FiniteCategory> window;  // null for probe-only systems
    std::vector<std::string> probes;               // requires a single object
    std::function<LazyStage(std::uint32_t)> stage_fn;
    // carrier map from stage n to stage n+1, per object
    std::function<std::vector<ElemId>(std::uint32_t, ObjId)> step_fn;
    // limit point map from stage n to stage n+1
    std::function<std::vector<ElemId>(std::uint32_t)> limit_step_fn;
  };

  explicit LazySystem(Presentation p);

  const std::string& name() const { return pres_.name; }
  std::uint32_t n_objects() const { return static_cast<std::uint32_t>(pres_.objects.size()); }
  const std::string& object_name(ObjId e) const { return pres_.objects.at(e); }
  bool has_window() const { return pres_.window != nullptr; }
  const FiniteCategory& window() const { return *pres_.window; }
  const std::shared_ptr<const FiniteCategory>& window_ptr() const { return pres_.window; }
  std::uint32_t n_probes() const { return static_cast<std::uint32_t>(pres_.probes.size()); }
  const std::string& probe_name(std::uint32_t p) const { return pres_.probes.at(p); }

  const LazyStage& stage(std::uint32_t n) const;
  const ESet& window_eset(std::uint32_t n) const;  // window systems only
  const std::vector<ElemId>& step(std::uint32_t n, ObjId e) const;
  const std::vector<ElemId>& limit_step(std::uint32_t n) const;
  const std::vector<ElemId>& probe_action(std::uint32_t n, std::uint32_t p) const;

  std::string element_label(std::uint32_t n, ObjId e, ElemId x) const;

  // convenience: a window presentation whose limit points are computed from
  // the window functor itself (appropriate when the window is the whole
  // category of the system being presented)
  static LazySystem from_window_stages(
      std::string name, std::shared_ptr<const FiniteCategory> window,
      std::vector<std::string> probes, std::function<ESet(std::uint32_t)> stage_eset,
      std::function<std::vector<ElemId>(std::uint32_t, ObjId)> step_fn);

 private:
  struct Entry {
    LazyStage data;
    std::optional<ESet> window_eset;
    std::vector<std::vector<ElemId>> steps;  // per object, to the next stage
    std::vector<ElemId> limit_step;
    std::vector<std::vector<ElemId>> probe_acts;  // resolved, per probe
    bool step_ready = false;
  };

  void ensure_stage(std::uint32_t n) const;
  void ensure_step(std::uint32_t n) const;

  Presentation pres_;
  mutable std::mutex mu_;
  mutable std::deque<Entry> cache_;
};

// Colimit classes per window object over stages 0..horizon, merged along the
// step maps. Class representatives are least in (stage, element) order and
// classes are listed in representative order.
struct HorizonColimit {
  std::uint32_t horizon = 0;
  struct Member {
    std::uint32_t stage;
    ElemId elem;
    auto operator<=>(const Member&) const = default;
  };
  std::vector<std::vector<std::vector<Member>>> classes;  // per object
  std::vector<std::vector<std::vector<std::uint32_t>>> class_of;  // [obj][stage][elem]

  std::size_t n_classes(ObjId e) const { return classes.at(e).size(); }
  const Member& rep(ObjId e, std::uint32_t c) const { return classes.at(e).at(c).front(); }
};
HorizonColimit colimit_at_horizon(const LazySystem& s, std::uint32_t horizon);

// Least stage k <= horizon at which the pushes of (i, x) and (j, y) agree,
// i.e. equality in the colimit certified within the horizon.
Verdict horizon_equal(const LazySystem& s, std::uint32_t horizon, ObjId e, std::uint32_t i,
                      ElemId x, std::uint32_t j, ElemId y);

// The comparison map at a horizon: domain classes come from the declared
// per-stage limit points merged along limit steps; each maps coordinatewise
// into horizon-colimit classes; the codomain is the limit of the colimit
// window functor, or the probe-fixed colimit classes for probe-only systems.
// Refutations within the horizon are final for the systems that declare
// exact limit points; everything else stays Unknown.
IotaReport iota_at_horizon(const LazySystem& s, std::uint32_t horizon);

// Least stage at which the push of an element becomes fixed by every listed
// probe, with the per-probe stages. Fixedness persists along steps, so the
// overall stage is the maximum of the per-probe ones.
struct Stabilization {
  Verdict verdict;
  std::vector<std::uint32_t> probe_stage;  // per requested probe, kNone if not found
};
Stabilization stabilization_stage(const LazySystem& s, const std::vector<std::uint32_t>& probes,
                                  std::uint32_t from_stage, ElemId x, std::uint32_t horizon);

// Per-probe verdicts for eventual fixedness of one element's orbit.
std::vector<Verdict> eventual_fixedness_certificate(const LazySystem& s,
                                                    const std::vector<std::uint32_t>& probes,
                                                    std::uint32_t from_stage, ElemId x,
                                                    std::uint32_t horizon);

}  // namespace dirlim
