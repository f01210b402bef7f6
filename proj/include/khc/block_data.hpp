#pragma once

#include "khc/angle.hpp"

#include <map>
#include <set>
#include <vector>

namespace khc {

// Whether a store counts vanishing cycles (mu, used at finite points of a
// minimal extension) or nearby cycles (nu, used at infinity and for data
// recovered at finite points).
enum class StoreKind { Mu, Nu };

/// Key of one Jordan-block family: primitive Hodge level p, eigenvalue
/// angle, and ell = block size - 1. A block with key (p, a, ell) occupies
/// the consecutive levels p, p-1, ..., p-ell.
struct BlockKey {
  int level = 0;
  Angle angle;
  int ell = 0;

  friend bool operator==(const BlockKey& x, const BlockKey& y) {
    return x.level == y.level && x.angle == y.angle && x.ell == y.ell;
  }
  friend bool operator<(const BlockKey& x, const BlockKey& y) {
    if (x.level != y.level) return x.level < y.level;
    if (x.angle != y.angle) return x.angle < y.angle;
    return x.ell < y.ell;
  }
};

/// Sparse multiset of level-refined Jordan-block data: (p, angle, ell) ->
/// multiplicity. Zero multiplicities are never stored.
class HodgeBlockData {
public:
  explicit HodgeBlockData(StoreKind kind = StoreKind::Mu) : kind_(kind) {}

  StoreKind kind() const { return kind_; }
  bool empty() const { return entries_.empty(); }
  const std::map<BlockKey, int>& entries() const { return entries_; }

  void add(const BlockKey& key, int mult);
  void remove_one(const BlockKey& key);  // throws MissingTrivialBlock
  int at(const BlockKey& key) const;

  /// Total dimension: sum of (ell+1) * mult.
  int dimension() const;
  /// Dimension carried by level p across all blocks (nu^p resp. mu^p).
  int level_dim(int p) const;
  /// Dimension carried by level p and eigenvalue `a` (nu^p_lambda style).
  int total(int p, const Angle& a) const;
  /// Dimension carried by level p over all eigenvalues != `a`.
  int total_excluding(int p, const Angle& a) const;
  /// Number of blocks with primitive level p and eigenvalue `a`.
  int prim(int p, const Angle& a) const;
  /// Number of blocks with bottom level p and eigenvalue `a`.
  int coprim(int p, const Angle& a) const;
  /// Number of blocks with eigenvalue `a`, any level and size.
  int prim_all_levels(const Angle& a) const;

  std::set<Angle> angles() const;
  bool has_level(int p) const { return level_dim(p) > 0; }
  int min_level() const;  // lowest occupied level; 0 when empty
  int max_level() const;

  /// Sum of angle * size * mult over all blocks (residue contribution).
  Rational residue_weight() const;

  friend bool operator==(const HodgeBlockData& x, const HodgeBlockData& y) {
    return x.kind_ == y.kind_ && x.entries_ == y.entries_;
  }

private:
  StoreKind kind_;
  std::map<BlockKey, int> entries_;
};

/// Monodromy-level block key: levels erased.
struct SpecKey {
  Angle angle;
  int ell = 0;

  friend bool operator==(const SpecKey& x, const SpecKey& y) {
    return x.angle == y.angle && x.ell == y.ell;
  }
  friend bool operator<(const SpecKey& x, const SpecKey& y) {
    if (x.angle != y.angle) return x.angle < y.angle;
    return x.ell < y.ell;
  }
};

/// Plain Jordan spectrum (angle, ell) -> multiplicity.
class BlockSpectrum {
public:
  explicit BlockSpectrum(StoreKind kind = StoreKind::Mu) : kind_(kind) {}

  StoreKind kind() const { return kind_; }
  bool empty() const { return entries_.empty(); }
  const std::map<SpecKey, int>& entries() const { return entries_; }

  void add(const SpecKey& key, int mult);
  int at(const SpecKey& key) const;

  int dimension() const;
  int total(const Angle& a) const;  // dimension of the eigenvalue-a part
  int prim(const Angle& a) const;   // number of blocks with eigenvalue a
  std::set<Angle> angles() const;
  Rational residue_weight() const;

  friend bool operator==(const BlockSpectrum& x, const BlockSpectrum& y) {
    return x.kind_ == y.kind_ && x.entries_ == y.entries_;
  }

private:
  StoreKind kind_;
  std::map<SpecKey, int> entries_;
};

}  // namespace khc
