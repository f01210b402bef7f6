#pragma once

#include "khc/bilinear.hpp"
#include "khc/conv.hpp"
#include "khc/core.hpp"
#include "khc/errors.hpp"
#include "khc/twist.hpp"

#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace khc::testing {

struct MuEntry {
  std::string point;
  int p;
  long long num;
  long long den;
  int ell;
  int mult;
};

struct NuEntry {
  int p;
  long long num;
  long long den;
  int ell;
  int mult;
};

/// Compact HodgeSystem literal for expected values in tests.
inline HodgeSystem make_system(std::vector<std::string> points,
                               std::vector<std::tuple<int, int, long long>> levels,
                               std::vector<MuEntry> local, std::vector<NuEntry> infinity,
                               Pairing pairing = Pairing::Unknown) {
  HodgeSystem s;
  s.points = std::move(points);
  for (const auto& point : s.points) s.local.emplace(point, HodgeBlockData(StoreKind::Mu));
  for (auto [p, h, d] : levels) {
    s.hodge[p] = h;
    s.degrees[p] = d;
  }
  for (const MuEntry& e : local)
    s.local.at(e.point).add({e.p, Angle(e.num, e.den), e.ell}, e.mult);
  for (const NuEntry& e : infinity) s.infinity.add({e.p, Angle(e.num, e.den), e.ell}, e.mult);
  s.pairing = pairing;
  s.validate();
  return s;
}

/// Random walk over the operations, starting from random rank-one lines.
/// Every value it yields went through validate(), so the stream doubles as
/// a generator of valid systems for property tests.
class RandomPipeline {
public:
  explicit RandomPipeline(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  Angle random_angle() {
    static const long long dens[] = {1, 2, 3, 4, 6};
    long long den = dens[rng_() % 5];
    return Angle(static_cast<long long>(rng_() % static_cast<std::uint64_t>(den)), den);
  }

  HodgeSystem random_line_system(const std::vector<std::string>& points) {
    std::map<std::string, Angle> angles;
    for (const auto& point : points)
      if (rng_() % 4 != 0) angles.emplace(point, random_angle());
    return make_line(points, angles, static_cast<int>(rng_() % 3));
  }

  /// One random operation; returns false when the step was skipped
  /// because a precondition did not hold.
  bool random_step(HodgeSystem& s) {
    switch (rng_() % 8) {
      case 0:
      case 1:
      case 2: {  // twist by a random line
        RankOneLine line;
        for (const auto& point : s.points)
          if (rng_() % 2) line.finite_angles.emplace(point, random_angle());
        s = tensor_line(line, s);
        return true;
      }
      case 3:
      case 4: {  // middle convolution when the infinity scalar allows it
        auto scalar = s.infinity_scalar();
        if (!scalar || scalar->is_zero() || s.rank() > 24) return false;
        try {
          s = mc_hodge(s);
        } catch (const CalcError& e) {
          if (e.internal()) throw;
          return false;  // structurally valid but not realizable
        }
        return true;
      }
      case 5: {
        s = tate_twist(s, static_cast<int>(rng_() % 5) - 2);
        return true;
      }
      case 6: {  // symmetric square on small multiplicity-free systems
        if (!s.multiplicity_free() || s.rank() > 4) return false;
        s = sym2(s);
        return true;
      }
      default: {
        if (!s.multiplicity_free() || s.rank() > 5 || s.rank() < 2) return false;
        s = wedge2(s);
        return true;
      }
    }
  }

private:
  std::mt19937_64 rng_;
};

/// The residue-degree identity, recomputed from scratch.
inline bool residue_identity_holds(const HodgeSystem& s) {
  Rational residue = s.infinity.residue_weight();
  for (const auto& point : s.points)
    residue += recover_nu(s.local_at(point), s.hodge).residue_weight();
  long long delta_sum = 0;
  for (const auto& [p, d] : s.degrees) delta_sum += d;
  return Rational(delta_sum) == -residue && delta_sum <= 0;
}

}  // namespace khc::testing
