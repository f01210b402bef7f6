#include "khc/block_data.hpp"

#include "khc/errors.hpp"

#include <limits>

namespace khc {

void HodgeBlockData::add(const BlockKey& key, int mult) {
  if (mult == 0) return;
  if (mult < 0) throw CalcError(ErrC::NegativeMultiplicity, "negative block multiplicity");
  entries_[key] += mult;
}

void HodgeBlockData::remove_one(const BlockKey& key) {
  auto it = entries_.find(key);
  if (it == entries_.end())
    throw CalcError(ErrC::MissingTrivialBlock,
                    "no block (p=" + std::to_string(key.level) + ", " + key.angle.str() +
                        ", ell=" + std::to_string(key.ell) + ") to remove");
  if (--it->second == 0) entries_.erase(it);
}

int HodgeBlockData::at(const BlockKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

int HodgeBlockData::dimension() const {
  int sum = 0;
  for (const auto& [key, mult] : entries_) sum += (key.ell + 1) * mult;
  return sum;
}

int HodgeBlockData::level_dim(int p) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.level - key.ell <= p && p <= key.level) sum += mult;
  return sum;
}

int HodgeBlockData::total(int p, const Angle& a) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.angle == a && key.level - key.ell <= p && p <= key.level) sum += mult;
  return sum;
}

int HodgeBlockData::total_excluding(int p, const Angle& a) const {
  return level_dim(p) - total(p, a);
}

int HodgeBlockData::prim(int p, const Angle& a) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.level == p && key.angle == a) sum += mult;
  return sum;
}

int HodgeBlockData::coprim(int p, const Angle& a) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.level - key.ell == p && key.angle == a) sum += mult;
  return sum;
}

int HodgeBlockData::prim_all_levels(const Angle& a) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.angle == a) sum += mult;
  return sum;
}

std::set<Angle> HodgeBlockData::angles() const {
  std::set<Angle> out;
  for (const auto& [key, mult] : entries_) out.insert(key.angle);
  return out;
}

int HodgeBlockData::min_level() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [key, mult] : entries_) m = std::min(m, key.level - key.ell);
  return entries_.empty() ? 0 : m;
}

int HodgeBlockData::max_level() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [key, mult] : entries_) m = std::max(m, key.level);
  return entries_.empty() ? 0 : m;
}

Rational HodgeBlockData::residue_weight() const {
  Rational sum(0);
  for (const auto& [key, mult] : entries_)
    sum += key.angle.value() * Rational((key.ell + 1) * static_cast<long long>(mult));
  return sum;
}

void BlockSpectrum::add(const SpecKey& key, int mult) {
  if (mult == 0) return;
  if (mult < 0) throw CalcError(ErrC::NegativeMultiplicity, "negative block multiplicity");
  entries_[key] += mult;
}

int BlockSpectrum::at(const SpecKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

int BlockSpectrum::dimension() const {
  int sum = 0;
  for (const auto& [key, mult] : entries_) sum += (key.ell + 1) * mult;
  return sum;
}

int BlockSpectrum::total(const Angle& a) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.angle == a) sum += (key.ell + 1) * mult;
  return sum;
}

int BlockSpectrum::prim(const Angle& a) const {
  int sum = 0;
  for (const auto& [key, mult] : entries_)
    if (key.angle == a) sum += mult;
  return sum;
}

std::set<Angle> BlockSpectrum::angles() const {
  std::set<Angle> out;
  for (const auto& [key, mult] : entries_) out.insert(key.angle);
  return out;
}

Rational BlockSpectrum::residue_weight() const {
  Rational sum(0);
  for (const auto& [key, mult] : entries_)
    sum += key.angle.value() * Rational((key.ell + 1) * static_cast<long long>(mult));
  return sum;
}

}  // namespace khc
