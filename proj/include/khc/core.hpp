#pragma once

#include "khc/system.hpp"

namespace khc {

/// Nearby-cycle data of a minimal extension at a finite point, recovered
/// from the vanishing-cycle store and the Hodge numbers:
///   nu^p_{lambda,l} = mu^p_{lambda,l}            for lambda != 1,
///   nu^p_{1,l}      = mu^p_{1,l-1}               for l >= 1,
///   nu^p_{1,0}      = h^p - mu^p - mu^{p+1}_{1,coprim}.
/// Throws NegativeMultiplicity when the last line goes negative.
HodgeBlockData recover_nu(const HodgeBlockData& mu, const std::map<int, int>& h);

/// Monodromy-level version: nu_{1,0} = rank - mu - mu_{1,prim}.
BlockSpectrum recover_nu(const BlockSpectrum& mu, int rank);

/// Inverse direction: copies lambda != 1, shifts (p,1,l+1) down to (p,1,l),
/// and drops the (p,1,0) entries.
HodgeBlockData mu_from_nu(const HodgeBlockData& nu);
BlockSpectrum mu_from_nu(const BlockSpectrum& nu);

/// Every eigenvalue angle shifted by +delta (mod 1); levels and sizes kept.
HodgeBlockData rotated(const HodgeBlockData& data, const Angle& delta);
BlockSpectrum rotated(const BlockSpectrum& data, const Angle& delta);

struct PrimCoprimTotal {
  int prim = 0;
  int coprim = 0;
  int total = 0;
};

/// Block counts at (p, lambda): prim counts tops, coprim counts bottoms,
/// total is the dimension contributed to level p.
PrimCoprimTotal prim_coprim(const HodgeBlockData& data, const Angle& lambda, int p);

/// Rank-one system from finite-point angles; all data sit at one level.
/// Points not mentioned in `finite_angles` carry angle 0.
HodgeSystem make_line(const std::vector<std::string>& points,
                      const std::map<std::string, Angle>& finite_angles, int level = 0);
HodgeSystem make_line(const std::vector<std::string>& points, const RankOneLine& line);

/// Uniform shift of every Hodge level by +k; monodromy unchanged.
HodgeSystem tate_twist(const HodgeSystem& s, int k);

/// Replaces every angle a by (1-a) mod 1; block structure preserved.
MonodromySystem dual_monodromy(const MonodromySystem& s);

/// Sums multiplicities over the levels.
MonodromySystem forget_hodge(const HodgeSystem& s);
BlockSpectrum forget_levels(const HodgeBlockData& data);

/// Reads a rank-one system back as a RankOneLine (level_offset = its level).
/// Throws ShapeMismatch when the rank is not one.
RankOneLine line_of(const HodgeSystem& s);
RankOneLine line_of(const MonodromySystem& s);

}  // namespace khc
