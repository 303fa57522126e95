#include "latscope/io.hpp"

#include <fstream>
#include <stdexcept>

namespace latscope::io {

json qf_to_json(const QF& x) { return x.str(); }

QF qf_from_json(const json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected an exact literal string, got " +
                                j.dump());
  return QF::parse(j.get<std::string>());
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(qf_to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a vector array");
  Vec v;
  for (const auto& e : j) v.push_back(qf_from_json(e));
  return v;
}

json mat_to_json(const Mat& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(vec_to_json(row));
  return a;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix array");
  Mat m;
  for (const auto& row : j) m.push_back(vec_from_json(row));
  return m;
}

json module_to_json(const ZModule& m) {
  json j;
  j["dim"] = m.dim();
  json gens = json::array();
  for (const auto& g : m.gens()) gens.push_back(vec_to_json(g));
  j["gens"] = gens;
  return j;
}

ZModule module_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("gens"))
    throw std::invalid_argument("module needs \"dim\" and \"gens\"");
  const int dim = j.at("dim").get<int>();
  if (dim <= 0) throw std::invalid_argument("dim must be positive");
  std::vector<Vec> gens;
  for (const auto& g : j.at("gens")) {
    Vec v = vec_from_json(g);
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("generator length does not match dim");
    gens.push_back(std::move(v));
  }
  return ZModule::from_generators(gens, dim);
}

json group_to_json(const CrystalGroup& g) {
  json j = module_to_json(g.lattice());
  json reps = json::array();
  for (const auto& rep : g.reps()) {
    json r;
    r["delta"] = mat_to_json(rep.delta);
    r["v"] = vec_to_json(rep.v);
    reps.push_back(r);
  }
  j["reps"] = reps;
  return j;
}

CrystalGroup group_from_json(const json& j) {
  ZModule L = module_from_json(j);
  std::vector<OrthoElem> reps;
  if (j.contains("reps")) {
    for (const auto& r : j.at("reps")) {
      OrthoElem e;
      e.delta = mat_from_json(r.at("delta"));
      e.v = vec_from_json(r.at("v"));
      reps.push_back(std::move(e));
    }
  } else {
    reps.push_back({identity_mat(L.dim()), Vec(L.dim(), QF(0))});
  }
  return CrystalGroup::make(L, std::move(reps));
}

json pattern_to_json(const PatternSpec& p) {
  json j;
  j["group"] = group_to_json(p.group);
  json waves = json::array();
  for (const auto& w : p.waves) {
    json e;
    e["k"] = vec_to_json(w.k);
    e["re"] = w.coeff.real();
    e["im"] = w.coeff.imag();
    waves.push_back(e);
  }
  j["waves"] = waves;
  return j;
}

PatternSpec pattern_from_json(const json& j) {
  PatternSpec p;
  p.group = group_from_json(j.at("group"));
  for (const auto& e : j.at("waves")) {
    Wave w;
    w.k = vec_from_json(e.at("k"));
    w.coeff = {e.value("re", 0.0), e.value("im", 0.0)};
    p.waves.push_back(std::move(w));
  }
  return p;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return json::parse(in);
}

}  // namespace latscope::io
