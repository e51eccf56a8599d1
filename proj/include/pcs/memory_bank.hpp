#pragma once

#include <cstddef>
#include <vector>

#include "pcs/geometry.hpp"

namespace pcs {

enum class Domain { source, target };

// Per-domain store of one embedding per sample, blended with momentum m
// after each batch.  Vectors stay unit-norm at all times.
class MemoryBank {
 public:
  // Throws EmptyBank when features is empty, NonUnitInput when any feature
  // deviates from unit norm by more than 1e-6.
  MemoryBank(Mat features, double momentum, Domain tag, bool renormalize = true);

  // v <- normalize(m * v + (1 - m) * f); returns the new stored value.
  // With renormalize disabled the raw blend is stored instead.
  Vec momentum_update(size_t index, const Vec& f);

  Mat lookup(const std::vector<size_t>& indices) const;

  // Replaces the stored vector outright (epoch-start refresh path).
  void replace(size_t index, const Vec& f);

  size_t size() const { return vectors_.size(); }
  size_t dim() const { return vectors_.front().size(); }
  double momentum() const { return momentum_; }
  Domain domain() const { return tag_; }
  const Vec& vector(size_t index) const;
  const Mat& vectors() const { return vectors_; }

 private:
  void check_index(size_t index) const;

  Mat vectors_;
  double momentum_;
  Domain tag_;
  bool renormalize_;
};

}  // namespace pcs
