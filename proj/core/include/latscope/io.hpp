#pragma once

#include <json.hpp>

#include "latscope/crystal.hpp"
#include "latscope/pattern.hpp"

namespace latscope::io {

using nlohmann::json;

/// All numeric values in the wire format are exact literals such as
/// "1/2", "1/2*r3", "1 - 1/2*r6" (see QF::parse).

json qf_to_json(const QF& x);
QF qf_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

/// {"dim": n, "gens": [[...], ...]}
json module_to_json(const ZModule& m);
ZModule module_from_json(const json& j);

/// Same object extended with "reps": [{"delta": [[...]], "v": [...]}].
/// A missing "reps" field means the trivial point group.
json group_to_json(const CrystalGroup& g);
CrystalGroup group_from_json(const json& j);

/// {"group": {...}, "waves": [{"k": [...], "re": x, "im": y}, ...]}
struct PatternSpec {
  CrystalGroup group;
  std::vector<Wave> waves;
};
json pattern_to_json(const PatternSpec& p);
PatternSpec pattern_from_json(const json& j);

json load_file(const std::string& path);

}  // namespace latscope::io
