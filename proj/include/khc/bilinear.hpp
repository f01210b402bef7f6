#pragma once

#include "khc/system.hpp"

#include <vector>

namespace khc {

/// One Jordan block with its filtration placement: eigenvalue angle, size
/// (= ell + 1) and top level; the block occupies levels top .. top-size+1.
struct FilteredBlock {
  Angle angle;
  int size = 1;
  int top = 0;

  friend bool operator==(const FilteredBlock& a, const FilteredBlock& b) {
    return a.angle == b.angle && a.size == b.size && a.top == b.top;
  }
  friend bool operator<(const FilteredBlock& a, const FilteredBlock& b) {
    if (a.top != b.top) return a.top < b.top;
    if (a.angle != b.angle) return a.angle < b.angle;
    return a.size < b.size;
  }
};

/// Clebsch-Gordan decomposition of the tensor product of two filtered
/// Jordan blocks: components k = 0 .. min(s1,s2)-1 with angle a1+a2,
/// size s1+s2-1-2k and top t1+t2-k.
std::vector<FilteredBlock> block_tensor(const FilteredBlock& b1, const FilteredBlock& b2);

/// Even-k (Sym^2) and odd-k (Lambda^2) halves of the self tensor product.
std::vector<FilteredBlock> block_sym2(const FilteredBlock& b);
std::vector<FilteredBlock> block_wedge2(const FilteredBlock& b);

/// Expands a nearby-cycle store into its block multiset and back.
std::vector<FilteredBlock> blocks_of(const HodgeBlockData& nu);
HodgeBlockData nu_from_blocks(const std::vector<FilteredBlock>& blocks);

/// Unique eigenvalue angle per (level, point) of a multiplicity-free
/// system; the last column is the point at infinity.
struct LevelAngleProfile {
  std::vector<std::string> points;                // finite points
  std::map<int, std::vector<Angle>> at_level;     // p -> r+1 angles

  const Angle& at(int level, std::size_t point_index) const;
};

LevelAngleProfile level_angle_profile(const HodgeSystem& s);

/// Symmetric and exterior squares. Local data and Hodge numbers come from
/// the blockwise Clebsch-Gordan rules; degrees use the level-pair shift
/// rule and therefore require a multiplicity-free input.
HodgeSystem sym2(const HodgeSystem& s);
HodgeSystem wedge2(const HodgeSystem& s);

/// Exterior square of a rank-4 symplectic system with the trivial line
/// removed (the Sp4 ~ SO5 reduction). Requires skew pairing, h^p = 1 on
/// four levels p0 < p1 < p2 < p3 with p0 + p3 = p1 + p2.
HodgeSystem wedge2_reduced(const HodgeSystem& s);

/// Solves the projective H^1 formula for the degrees, top level downward,
/// given the local stores, Hodge numbers and the (known) h^p(H^1).
std::map<int, long long> solve_degrees_h1vanishing(
    const std::vector<std::string>& points,
    const std::map<std::string, HodgeBlockData>& local_mu, const HodgeBlockData& infinity_nu,
    const std::map<int, int>& h, const std::map<int, int>& known_h1);

}  // namespace khc
