#include "khc/core.hpp"

#include "khc/errors.hpp"

#include <set>
#include <string>

namespace khc {

HodgeBlockData recover_nu(const HodgeBlockData& mu, const std::map<int, int>& h) {
  HodgeBlockData nu(StoreKind::Nu);
  const Angle one;
  std::set<int> levels;
  for (const auto& [p, hp] : h) levels.insert(p);
  for (const auto& [key, mult] : mu.entries()) {
    if (key.angle == one) {
      nu.add({key.level, one, key.ell + 1}, mult);
    } else {
      nu.add(key, mult);
    }
    // A block touching level q can force nu_{1,0} bookkeeping at q and q-1.
    for (int q = key.level - key.ell - 1; q <= key.level; ++q) levels.insert(q);
  }
  for (int p : levels) {
    auto it = h.find(p);
    int hp = it == h.end() ? 0 : it->second;
    int val = hp - mu.level_dim(p) - mu.coprim(p + 1, one);
    if (val < 0)
      throw CalcError(ErrC::NegativeMultiplicity,
                      "nu_{1,0} at level " + std::to_string(p) + " would be " +
                          std::to_string(val));
    if (val > 0) nu.add({p, one, 0}, val);
  }
  return nu;
}

BlockSpectrum recover_nu(const BlockSpectrum& mu, int rank) {
  BlockSpectrum nu(StoreKind::Nu);
  const Angle one;
  for (const auto& [key, mult] : mu.entries()) {
    if (key.angle == one) {
      nu.add({one, key.ell + 1}, mult);
    } else {
      nu.add(key, mult);
    }
  }
  int val = rank - mu.dimension() - mu.prim(one);
  if (val < 0)
    throw CalcError(ErrC::NegativeMultiplicity,
                    "nu_{1,0} would be " + std::to_string(val));
  if (val > 0) nu.add({one, 0}, val);
  return nu;
}

HodgeBlockData mu_from_nu(const HodgeBlockData& nu) {
  HodgeBlockData mu(StoreKind::Mu);
  const Angle one;
  for (const auto& [key, mult] : nu.entries()) {
    if (key.angle == one) {
      if (key.ell >= 1) mu.add({key.level, one, key.ell - 1}, mult);
    } else {
      mu.add(key, mult);
    }
  }
  return mu;
}

BlockSpectrum mu_from_nu(const BlockSpectrum& nu) {
  BlockSpectrum mu(StoreKind::Mu);
  const Angle one;
  for (const auto& [key, mult] : nu.entries()) {
    if (key.angle == one) {
      if (key.ell >= 1) mu.add({one, key.ell - 1}, mult);
    } else {
      mu.add(key, mult);
    }
  }
  return mu;
}

HodgeBlockData rotated(const HodgeBlockData& data, const Angle& delta) {
  HodgeBlockData out(data.kind());
  for (const auto& [key, mult] : data.entries())
    out.add({key.level, key.angle + delta, key.ell}, mult);
  return out;
}

BlockSpectrum rotated(const BlockSpectrum& data, const Angle& delta) {
  BlockSpectrum out(data.kind());
  for (const auto& [key, mult] : data.entries()) out.add({key.angle + delta, key.ell}, mult);
  return out;
}

PrimCoprimTotal prim_coprim(const HodgeBlockData& data, const Angle& lambda, int p) {
  return {data.prim(p, lambda), data.coprim(p, lambda), data.total(p, lambda)};
}

HodgeSystem make_line(const std::vector<std::string>& points,
                      const std::map<std::string, Angle>& finite_angles, int level) {
  if (points.empty())
    throw CalcError(ErrC::ShapeMismatch, "a rank-one line needs at least one finite point");
  for (const auto& [point, a] : finite_angles) {
    if (std::find(points.begin(), points.end(), point) == points.end())
      throw CalcError(ErrC::UnknownPoint, "line angle at undeclared point '" + point + "'");
  }

  HodgeSystem s;
  s.points = points;
  RankOneLine line{finite_angles, level};
  bool real_angles = true;
  for (const auto& point : points) {
    HodgeBlockData mu(StoreKind::Mu);
    Angle a = line.angle_at(point);
    if (!a.is_zero()) mu.add({level, a, 0}, 1);
    if (!a.is_zero() && a != Angle(1, 2)) real_angles = false;
    s.local.emplace(point, std::move(mu));
  }
  s.infinity.add({level, line.infinity_angle(), 0}, 1);
  s.hodge[level] = 1;
  s.degrees[level] = line.degree();
  s.pairing = real_angles ? Pairing::Symmetric : Pairing::Unknown;
  s.validate();
  return s;
}

HodgeSystem make_line(const std::vector<std::string>& points, const RankOneLine& line) {
  return make_line(points, line.finite_angles, line.level_offset);
}

HodgeSystem tate_twist(const HodgeSystem& s, int k) {
  HodgeSystem out;
  out.points = s.points;
  out.pairing = s.pairing;
  for (const auto& [point, mu] : s.local) {
    HodgeBlockData shifted(StoreKind::Mu);
    for (const auto& [key, mult] : mu.entries()) shifted.add({key.level + k, key.angle, key.ell}, mult);
    out.local.emplace(point, std::move(shifted));
  }
  for (const auto& [key, mult] : s.infinity.entries())
    out.infinity.add({key.level + k, key.angle, key.ell}, mult);
  for (const auto& [p, hp] : s.hodge) out.hodge[p + k] = hp;
  for (const auto& [p, d] : s.degrees) out.degrees[p + k] = d;
  out.validate();
  return out;
}

MonodromySystem dual_monodromy(const MonodromySystem& s) {
  MonodromySystem out;
  out.points = s.points;
  out.rank = s.rank;
  for (const auto& [point, mu] : s.local) {
    BlockSpectrum dual(StoreKind::Mu);
    for (const auto& [key, mult] : mu.entries()) dual.add({key.angle.inverse(), key.ell}, mult);
    out.local.emplace(point, std::move(dual));
  }
  out.infinity = BlockSpectrum(StoreKind::Nu);
  for (const auto& [key, mult] : s.infinity.entries())
    out.infinity.add({key.angle.inverse(), key.ell}, mult);
  out.validate();
  return out;
}

BlockSpectrum forget_levels(const HodgeBlockData& data) {
  BlockSpectrum out(data.kind());
  for (const auto& [key, mult] : data.entries()) out.add({key.angle, key.ell}, mult);
  return out;
}

MonodromySystem forget_hodge(const HodgeSystem& s) {
  MonodromySystem out;
  out.points = s.points;
  out.rank = s.rank();
  for (const auto& [point, mu] : s.local) out.local.emplace(point, forget_levels(mu));
  out.infinity = forget_levels(s.infinity);
  out.validate();
  return out;
}

RankOneLine line_of(const HodgeSystem& s) {
  if (s.rank() != 1)
    throw CalcError(ErrC::ShapeMismatch,
                    "expected a rank-one system, got rank " + std::to_string(s.rank()));
  RankOneLine line;
  line.level_offset = s.hodge.begin()->first;
  for (const auto& [point, mu] : s.local) {
    if (mu.empty()) continue;
    line.finite_angles.emplace(point, mu.entries().begin()->first.angle);
  }
  return line;
}

RankOneLine line_of(const MonodromySystem& s) {
  if (s.rank != 1)
    throw CalcError(ErrC::ShapeMismatch,
                    "expected a rank-one system, got rank " + std::to_string(s.rank));
  RankOneLine line;
  for (const auto& [point, mu] : s.local) {
    if (mu.empty()) continue;
    line.finite_angles.emplace(point, mu.entries().begin()->first.angle);
  }
  return line;
}

}  // namespace khc
