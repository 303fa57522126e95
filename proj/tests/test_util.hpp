#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "latscope/classify.hpp"
#include "latscope/crystal.hpp"
#include "latscope/zmodule.hpp"

namespace latscope::testutil {

inline QF q(const std::string& s) { return QF::parse(s); }

inline Vec vec(std::initializer_list<std::string> xs) {
  Vec v;
  for (const auto& s : xs) v.push_back(QF::parse(s));
  return v;
}

inline ZModule mod2(std::initializer_list<std::initializer_list<std::string>>
                        rows) {
  std::vector<Vec> gens;
  int dim = 0;
  for (const auto& r : rows) {
    Vec v;
    for (const auto& s : r) v.push_back(QF::parse(s));
    dim = static_cast<int>(v.size());
    gens.push_back(std::move(v));
  }
  return ZModule::from_generators(gens, dim);
}

/// The running two-dimensional example {(5,4), (0,7)}.
inline ZModule l54() { return mod2({{"5", "4"}, {"0", "7"}}); }

/// Three-dimensional lattice projecting onto the hexagonal lattice with a
/// skew third generator (no vertical vector, trivial vertical reflection).
inline ZModule lt() {
  return mod2({{"1", "0", "0"}, {"1/2", "1/2*r3", "0"}, {"1", "1", "1"}});
}

/// Three-dimensional lattice with an irrational horizontal offset on the
/// vertical generator; its vertical reflection is a symmetry.
inline ZModule ls() {
  return mod2({{"1", "0", "0"}, {"1/2", "1/2*r3", "0"}, {"1/2*r2", "0", "1"}});
}

inline CrystalGroup trivial_group(const ZModule& l) {
  return CrystalGroup::make(
      l, {{identity_mat(l.dim()), Vec(l.dim(), QF(0))}});
}

/// Group with the identity plus the listed extra representatives.
inline CrystalGroup group_with(const ZModule& l,
                               std::vector<OrthoElem> extra) {
  std::vector<OrthoElem> reps = {
      {identity_mat(l.dim()), Vec(l.dim(), QF(0))}};
  for (auto& e : extra) reps.push_back(std::move(e));
  return CrystalGroup::make(l, std::move(reps));
}

}  // namespace latscope::testutil
