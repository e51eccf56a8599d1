#include "pcs/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "pcs/errors.hpp"

namespace pcs {

double l2_norm(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw ShapeMismatch("dot: size " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
  }
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec l2_normalize(const Vec& v) {
  const double n = l2_norm(v);
  if (n <= kDegenerateNormEps) {
    throw DegenerateVector("l2_normalize: norm " + std::to_string(n));
  }
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
  return out;
}

double cosine_sim(const Vec& a, const Vec& b) {
  return std::clamp(dot(a, b), -1.0, 1.0);
}

Vec tempered_softmax(const Vec& scores, double temp) {
  if (!(temp > 0.0)) {
    throw InvalidTemperature("tempered_softmax: temp " + std::to_string(temp));
  }
  double max_score = scores.front();
  for (double s : scores) max_score = std::max(max_score, s);
  Vec out(scores.size());
  double sum = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    out[i] = std::exp((scores[i] - max_score) / temp);
    sum += out[i];
  }
  for (double& p : out) p /= sum;
  return out;
}

double entropy(const Vec& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

bool is_unit(const Vec& v, double tol) {
  return std::abs(l2_norm(v) - 1.0) <= tol;
}

}  // namespace pcs
