#pragma once

#include "khc/system.hpp"

#include <optional>

namespace khc {

enum class H1Variant { Projective, Affine };

struct H1Result {
  std::map<int, int> hodge;  // p -> h^p(H^1), zero entries omitted
  int total = 0;
  H1Variant variant = H1Variant::Affine;
};

/// Hodge numbers of H^1 of the minimal extension. The caller asserts the
/// underlying system irreducible and non-constant; only arithmetic
/// consistency is checked here. The affine variant drops the subtraction
/// of the unipotent primitive count at infinity.
H1Result h1_hodge(const HodgeSystem& s, H1Variant variant);

/// dim H^1 of the minimal extension on the projective line:
/// (r-1)*rank - sum over all r+1 points of nu_{1,prim}.
int dim_h1_middle(const MonodromySystem& s);

/// Middle convolution at the monodromy level, chi != 1 (regular case).
MonodromySystem mc_local(const MonodromySystem& s, const Angle& chi);

/// Middle convolution with full Hodge data. Requires scalar, nontrivial
/// monodromy at infinity; chi, when given, must match that scalar.
HodgeSystem mc_hodge(const HodgeSystem& s, std::optional<Angle> chi = std::nullopt);

}  // namespace khc
