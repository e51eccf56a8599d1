#include "pcs/memory_bank.hpp"

#include <cmath>
#include <string>

#include "pcs/errors.hpp"

namespace pcs {

MemoryBank::MemoryBank(Mat features, double momentum, Domain tag, bool renormalize)
    : vectors_(std::move(features)),
      momentum_(momentum),
      tag_(tag),
      renormalize_(renormalize) {
  if (vectors_.empty()) throw EmptyBank("memory bank needs at least one vector");
  if (momentum_ < 0.0 || momentum_ > 1.0) {
    throw InvalidConfig("bank momentum must lie in [0, 1], got " + std::to_string(momentum_));
  }
  const size_t d = vectors_.front().size();
  for (size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != d) {
      throw ShapeMismatch("bank vector " + std::to_string(i) + " has dim " +
                          std::to_string(vectors_[i].size()) + ", expected " +
                          std::to_string(d));
    }
    if (!is_unit(vectors_[i])) {
      throw NonUnitInput("bank vector " + std::to_string(i) + " has norm " +
                         std::to_string(l2_norm(vectors_[i])));
    }
  }
}

void MemoryBank::check_index(size_t index) const {
  if (index >= vectors_.size()) {
    throw IndexOutOfRange("bank index " + std::to_string(index) + " >= " +
                          std::to_string(vectors_.size()));
  }
}

Vec MemoryBank::momentum_update(size_t index, const Vec& f) {
  check_index(index);
  Vec& v = vectors_[index];
  if (f.size() != v.size()) throw ShapeMismatch("momentum_update: feature dim mismatch");
  Vec blend(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    blend[i] = momentum_ * v[i] + (1.0 - momentum_) * f[i];
  }
  v = renormalize_ ? l2_normalize(blend) : blend;
  return v;
}

Mat MemoryBank::lookup(const std::vector<size_t>& indices) const {
  Mat out;
  out.reserve(indices.size());
  for (size_t idx : indices) {
    check_index(idx);
    out.push_back(vectors_[idx]);
  }
  return out;
}

void MemoryBank::replace(size_t index, const Vec& f) {
  check_index(index);
  if (!is_unit(f)) throw NonUnitInput("replace: feature is not unit norm");
  vectors_[index] = f;
}

const Vec& MemoryBank::vector(size_t index) const {
  check_index(index);
  return vectors_[index];
}

}  // namespace pcs
