#pragma once

#include <vector>

namespace pcs {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

// Norms below this are treated as degenerate (not normalizable).
constexpr double kDegenerateNormEps = 1e-12;

double l2_norm(const Vec& v);
double dot(const Vec& a, const Vec& b);

// v / ||v||.  Throws DegenerateVector when ||v|| <= kDegenerateNormEps.
Vec l2_normalize(const Vec& v);

// Dot product of two unit vectors, clamped to [-1, 1].
double cosine_sim(const Vec& a, const Vec& b);

// softmax(scores / temp), computed with max subtraction.
// Throws InvalidTemperature when temp <= 0.
Vec tempered_softmax(const Vec& scores, double temp);

// Shannon entropy with natural log; 0 * log 0 counts as 0.
double entropy(const Vec& probs);

bool is_unit(const Vec& v, double tol = 1e-6);

}  // namespace pcs
