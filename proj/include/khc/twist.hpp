#pragma once

#include "khc/system.hpp"

namespace khc {

/// Tensor product with a unitary rank-one local system. Hodge numbers are
/// kept (then shifted by the line's level_offset), local stores rotate by
/// the line's angles with the lambda = 1 bookkeeping of a minimal
/// extension, and the degrees pick up h^p * deg L^0 plus the residue
/// wrap-around terms.
HodgeSystem tensor_line(const RankOneLine& line, const HodgeSystem& s);

/// Monodromy-level counterpart (levels and degrees absent).
MonodromySystem tensor_line(const RankOneLine& line, const MonodromySystem& s);

}  // namespace khc
