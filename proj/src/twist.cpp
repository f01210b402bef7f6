#include "khc/twist.hpp"

#include "khc/core.hpp"
#include "khc/errors.hpp"

#include <algorithm>

namespace khc {

namespace {

void require_points_subset(const RankOneLine& line, const std::vector<std::string>& points) {
  for (const auto& [point, a] : line.finite_angles)
    if (std::find(points.begin(), points.end(), point) == points.end())
      throw CalcError(ErrC::UnknownPoint, "line twists undeclared point '" + point + "'");
}

bool half_integral(const RankOneLine& line) {
  const Angle half(1, 2);
  for (const auto& [point, a] : line.finite_angles)
    if (!a.is_zero() && a != half) return false;
  return true;
}

}  // namespace

HodgeSystem tensor_line(const RankOneLine& line, const HodgeSystem& s) {
  require_points_subset(line, s.points);

  HodgeSystem out;
  out.points = s.points;
  out.hodge = s.hodge;

  std::map<std::string, HodgeBlockData> nearby;
  for (const auto& point : s.points) nearby.emplace(point, recover_nu(s.local_at(point), s.hodge));

  for (const auto& point : s.points) {
    Angle a = line.angle_at(point);
    if (a.is_zero()) {
      out.local.emplace(point, s.local_at(point));
    } else {
      out.local.emplace(point, mu_from_nu(rotated(nearby.at(point), a)));
    }
  }
  Angle a_inf = line.infinity_angle();
  out.infinity = rotated(s.infinity, a_inf);

  // delta^p(out) = delta^p + h^p deg L^0 + sum over points of the nearby
  // dimensions whose angles fall in [1 - a_i, 1).
  long long deg_line = line.degree();
  for (const auto& [p, d] : s.degrees) {
    long long v = d + static_cast<long long>(s.h(p)) * deg_line;
    for (std::size_t i = 0; i <= s.points.size(); ++i) {
      bool at_infinity = i == s.points.size();
      Angle a = at_infinity ? a_inf : line.angle_at(s.points[i]);
      if (a.is_zero()) continue;
      const HodgeBlockData& nu = at_infinity ? s.infinity : nearby.at(s.points[i]);
      Rational cutoff = Rational(1) - a.value();
      for (const Angle& b : nu.angles())
        if (b.value() >= cutoff) v += nu.total(p, b);
    }
    out.degrees[p] = v;
  }

  out.pairing = (half_integral(line) && s.pairing != Pairing::Unknown) ? s.pairing
                                                                       : Pairing::Unknown;
  out.validate();
  return line.level_offset == 0 ? out : tate_twist(out, line.level_offset);
}

MonodromySystem tensor_line(const RankOneLine& line, const MonodromySystem& s) {
  require_points_subset(line, s.points);

  MonodromySystem out;
  out.points = s.points;
  out.rank = s.rank;
  for (const auto& point : s.points) {
    Angle a = line.angle_at(point);
    if (a.is_zero()) {
      out.local.emplace(point, s.local_at(point));
    } else {
      out.local.emplace(point, mu_from_nu(rotated(recover_nu(s.local_at(point), s.rank), a)));
    }
  }
  out.infinity = rotated(s.infinity, line.infinity_angle());
  out.validate();
  return out;
}

}  // namespace khc
