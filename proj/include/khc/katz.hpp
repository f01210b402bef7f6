#pragma once

#include "khc/system.hpp"

#include <vector>

namespace khc {

/// Dimension of the centralizer of a local monodromy with the given
/// nearby-cycle spectrum:
///   sum over lambda, k, l of nu_{lambda,l} * nu_{lambda,k} * min(k+1, l+1).
long long centralizer_dim(const BlockSpectrum& nu);

/// (1-r) * rank^2 + sum over all r+1 points of the centralizer dimensions;
/// the value 2 means cohomologically rigid.
long long rigidity_index(const MonodromySystem& s);
long long rigidity_index(const HodgeSystem& s);

/// The rank-one twist of the reduction step: at each finite point pick the
/// eigenvalue with the most Jordan blocks (ties to the smallest angle) and
/// twist it to 1. Throws NotAllowed when the twist would trivialize the
/// monodromy at infinity.
RankOneLine choose_allowed_line(const MonodromySystem& s);

struct KatzStep {
  RankOneLine line;
  Angle chi;
  int before_rank = 0;
  int after_rank = 0;
  Value snapshot;
};

struct KatzTrace {
  std::vector<KatzStep> steps;
  Value terminal;
};

/// Runs the reduction loop (twist by the allowed line, then middle
/// convolution by the new infinity scalar) until rank one. Requires
/// rigidity index 2 and scalar monodromy at infinity (angle 0 allowed for
/// the input; the first twist must then make it nontrivial).
KatzTrace katz_reduce(const Value& start);
KatzTrace katz_reduce(const HodgeSystem& s);
KatzTrace katz_reduce(const MonodromySystem& s);

}  // namespace khc
