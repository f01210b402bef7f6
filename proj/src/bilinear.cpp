#include "khc/bilinear.hpp"

#include "khc/core.hpp"
#include "khc/errors.hpp"

#include <string>

namespace khc {

std::vector<FilteredBlock> block_tensor(const FilteredBlock& b1, const FilteredBlock& b2) {
  std::vector<FilteredBlock> out;
  int kmax = std::min(b1.size, b2.size) - 1;
  for (int k = 0; k <= kmax; ++k)
    out.push_back({b1.angle + b2.angle, b1.size + b2.size - 1 - 2 * k, b1.top + b2.top - k});
  return out;
}

std::vector<FilteredBlock> block_sym2(const FilteredBlock& b) {
  std::vector<FilteredBlock> out;
  for (int k = 0; k <= b.size - 1; k += 2)
    out.push_back({b.angle + b.angle, 2 * b.size - 1 - 2 * k, 2 * b.top - k});
  return out;
}

std::vector<FilteredBlock> block_wedge2(const FilteredBlock& b) {
  std::vector<FilteredBlock> out;
  for (int k = 1; k <= b.size - 1; k += 2)
    out.push_back({b.angle + b.angle, 2 * b.size - 1 - 2 * k, 2 * b.top - k});
  return out;
}

std::vector<FilteredBlock> blocks_of(const HodgeBlockData& nu) {
  std::vector<FilteredBlock> out;
  for (const auto& [key, mult] : nu.entries())
    for (int i = 0; i < mult; ++i) out.push_back({key.angle, key.ell + 1, key.level});
  return out;
}

HodgeBlockData nu_from_blocks(const std::vector<FilteredBlock>& blocks) {
  HodgeBlockData nu(StoreKind::Nu);
  for (const FilteredBlock& b : blocks) nu.add({b.top, b.angle, b.size - 1}, 1);
  return nu;
}

const Angle& LevelAngleProfile::at(int level, std::size_t point_index) const {
  auto it = at_level.find(level);
  if (it == at_level.end() || point_index >= it->second.size())
    throw CalcError(ErrC::UnknownPoint,
                    "no profile entry at level " + std::to_string(level));
  return it->second[point_index];
}

LevelAngleProfile level_angle_profile(const HodgeSystem& s) {
  if (!s.multiplicity_free())
    throw CalcError(ErrC::NotMultiplicityFree,
                    "level-angle profile needs h^p <= 1 for every p");
  LevelAngleProfile prof;
  prof.points = s.points;
  std::size_t columns = s.points.size() + 1;
  for (const auto& [p, hp] : s.hodge) prof.at_level[p] = std::vector<Angle>(columns);

  auto fill = [&](const HodgeBlockData& nu, std::size_t column) {
    for (const auto& [key, mult] : nu.entries())
      for (int lev = key.level - key.ell; lev <= key.level; ++lev)
        prof.at_level.at(lev)[column] = key.angle;
  };
  for (std::size_t i = 0; i < s.points.size(); ++i)
    fill(recover_nu(s.local_at(s.points[i]), s.hodge), i);
  fill(s.infinity, s.points.size());
  return prof;
}

namespace {

std::vector<FilteredBlock> square_blocks(const std::vector<FilteredBlock>& blocks,
                                         bool symmetric) {
  std::vector<FilteredBlock> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      for (FilteredBlock b : block_tensor(blocks[i], blocks[j])) out.push_back(b);
    auto diag = symmetric ? block_sym2(blocks[i]) : block_wedge2(blocks[i]);
    out.insert(out.end(), diag.begin(), diag.end());
  }
  return out;
}

HodgeSystem square_system(const HodgeSystem& s, bool symmetric) {
  if (!s.multiplicity_free())
    throw CalcError(ErrC::NotMultiplicityFree,
                    "degrees of a square need a multiplicity-free input");
  int n = s.rank();
  int out_rank = symmetric ? n * (n + 1) / 2 : n * (n - 1) / 2;
  if (out_rank < 1)
    throw CalcError(ErrC::ShapeMismatch, "the square has rank 0");

  HodgeSystem out;
  out.points = s.points;

  std::vector<int> levels;
  for (const auto& [p, hp] : s.hodge) levels.push_back(p);
  LevelAngleProfile prof = level_angle_profile(s);
  std::size_t columns = s.points.size() + 1;

  auto shift_count = [&](int pj, int pk) {
    long long c = 0;
    for (std::size_t x = 0; x < columns; ++x)
      if (prof.at(pj, x).value() + prof.at(pk, x).value() >= 1) ++c;
    return c;
  };

  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (std::size_t j = i + 1; j < levels.size(); ++j) {
      out.hodge[levels[i] + levels[j]] += 1;
      out.degrees[levels[i] + levels[j]] +=
          s.delta(levels[i]) + s.delta(levels[j]) + shift_count(levels[i], levels[j]);
    }
    if (symmetric) {
      out.hodge[2 * levels[i]] += 1;
      out.degrees[2 * levels[i]] += 2 * s.delta(levels[i]) + shift_count(levels[i], levels[i]);
    }
  }

  for (const auto& point : s.points) {
    auto blocks = square_blocks(blocks_of(recover_nu(s.local_at(point), s.hodge)), symmetric);
    out.local.emplace(point, mu_from_nu(nu_from_blocks(blocks)));
  }
  out.infinity = nu_from_blocks(square_blocks(blocks_of(s.infinity), symmetric));

  if (symmetric) {
    out.pairing = s.pairing == Pairing::Skew ? Pairing::Symmetric : Pairing::Unknown;
  } else {
    out.pairing = Pairing::Unknown;
  }
  out.validate();
  return out;
}

}  // namespace

HodgeSystem sym2(const HodgeSystem& s) { return square_system(s, true); }
HodgeSystem wedge2(const HodgeSystem& s) { return square_system(s, false); }

HodgeSystem wedge2_reduced(const HodgeSystem& s) {
  if (s.rank() != 4)
    throw CalcError(ErrC::ShapeMismatch, "the reduced square is defined for rank 4");
  if (s.pairing != Pairing::Skew)
    throw CalcError(ErrC::ShapeMismatch, "the reduced square needs a skew pairing");
  if (!s.multiplicity_free() || s.hodge.size() != 4)
    throw CalcError(ErrC::ShapeMismatch, "the reduced square needs h^p = 1 on four levels");
  std::vector<int> levels;
  for (const auto& [p, hp] : s.hodge) levels.push_back(p);
  if (levels[0] + levels[3] != levels[1] + levels[2])
    throw CalcError(ErrC::ShapeMismatch, "level spacing is not symmetric");
  int p_e = levels[0] + levels[3];

  HodgeSystem out = wedge2(s);
  const Angle one;
  const BlockKey trivial{p_e, one, 0};
  for (const auto& point : out.points) {
    HodgeBlockData nu = recover_nu(out.local_at(point), out.hodge);
    if (nu.at(trivial) < 1)
      throw CalcError(ErrC::MissingTrivialBlock,
                      "no trivial line at level " + std::to_string(p_e) + " at '" + point + "'");
  }
  out.infinity.remove_one(trivial);

  auto h_it = out.hodge.find(p_e);
  if (h_it == out.hodge.end())
    throw CalcError(ErrC::MissingTrivialBlock, "no Hodge number at the trivial line's level");
  if (--h_it->second == 0) {
    if (out.degrees.at(p_e) != 0)
      throw CalcError(ErrC::Inconsistent, "removing the trivial line left a nonzero degree");
    out.hodge.erase(h_it);
    out.degrees.erase(p_e);
  }
  out.pairing = Pairing::Symmetric;
  out.validate();
  return out;
}

std::map<int, long long> solve_degrees_h1vanishing(
    const std::vector<std::string>& points,
    const std::map<std::string, HodgeBlockData>& local_mu, const HodgeBlockData& infinity_nu,
    const std::map<int, int>& h, const std::map<int, int>& known_h1) {
  if (h.empty()) throw CalcError(ErrC::Inconsistent, "no Hodge numbers to solve against");
  const Angle one;
  int lo = h.begin()->first, hi = h.rbegin()->first;
  auto h_at = [&](int p) {
    auto it = h.find(p);
    return it == h.end() ? 0 : it->second;
  };
  auto h1_at = [&](int p) {
    auto it = known_h1.find(p);
    return it == known_h1.end() ? 0 : it->second;
  };
  for (const auto& [p, v] : known_h1)
    if (v != 0 && (p < lo || p > hi + 1))
      throw CalcError(ErrC::Inconsistent,
                      "h^" + std::to_string(p) + "(H^1) lies outside the solvable range");

  std::map<int, long long> degrees;
  long long delta_p = 0;  // delta at the current level p, starting above the top
  for (int p = hi + 1; p >= lo; --p) {
    long long s = 0;
    for (const auto& point : points) {
      const HodgeBlockData& mu = local_mu.at(point);
      s += mu.total_excluding(p - 1, one) + mu.total(p, one);
    }
    long long delta_prev = h1_at(p) + delta_p + h_at(p) + infinity_nu.prim(p - 1, one) - s;
    if (p == lo) {
      if (delta_prev != 0)
        throw CalcError(ErrC::Inconsistent,
                        "the bottom equation leaves delta = " + std::to_string(delta_prev));
    } else {
      if (h_at(p - 1) == 0 && delta_prev != 0)
        throw CalcError(ErrC::Inconsistent,
                        "nonzero degree at the empty level " + std::to_string(p - 1));
      if (h_at(p - 1) > 0) degrees[p - 1] = delta_prev;
      delta_p = delta_prev;
    }
  }
  return degrees;
}

}  // namespace khc
