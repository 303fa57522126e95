#pragma once

#include <vector>

#include "latscope/zmodule.hpp"

namespace latscope {

/// All orthogonal transformations mapping the lattice onto itself,
/// as exact matrices acting on column vectors.  Requires is_lattice().
std::vector<Mat> holohedry(const ZModule& L);

}  // namespace latscope
