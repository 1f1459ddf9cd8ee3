#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "dirlim/congruence.hpp"
#include "dirlim/core.hpp"
#include "dirlim/dirsys.hpp"
#include "dirlim/division.hpp"
#include "dirlim/eset.hpp"
#include "dirlim/gallery.hpp"
#include "dirlim/poset_analysis.hpp"

namespace dirlim {

using json = nlohmann::json;

// Wire formats name everything; indices never appear on the wire. Parsers
// throw ParseError with the offending key, then hand off to the validating
// constructors.

json category_to_json(const FiniteCategory& cat);
FiniteCategory category_from_json(const json& j);

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const json& j);

json eset_to_json(const ESet& x);
ESet eset_from_json(std::shared_ptr<const FiniteCategory> cat, const json& j);

json relation_family_to_json(const ESet& x, const RelationFamily& r);
RelationFamily relation_family_from_json(const ESet& x, const json& j);

json congruence_to_json(const ESet& x, const CongruenceFamily& c);

json system_to_json(const FiniteDirectedSystem& s);
FiniteDirectedSystem system_from_json(const json& j);

json limit_elements_to_json(const ESet& x, const std::vector<LimitElement>& lims);
json verdict_to_json(const Verdict& v);
json iota_report_to_json(const IotaReport& rep);
json battery_to_json(const FiniteMonoid& m, const MonoidBattery& b);
json gather_to_json(const Poset& p, const GatherResult& g);
json tgath_to_json(const TgathReport& t);
json gallery_report_to_json(const GalleryReport& rep);
json stabilization_to_json(const Stabilization& s);

}  // namespace dirlim
