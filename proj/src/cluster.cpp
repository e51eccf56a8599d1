#include "pcs/cluster.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "pcs/errors.hpp"

namespace pcs {

namespace {

// kmeans++ seeding under cosine distance 1 - cos, deterministic per seed.
Mat plusplus_centers(const Mat& vectors, int k, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const size_t n = vectors.size();
  std::vector<size_t> chosen;
  chosen.reserve(k);
  std::vector<bool> taken(n, false);

  std::uniform_int_distribution<size_t> first(0, n - 1);
  chosen.push_back(first(rng));
  taken[chosen.back()] = true;

  std::vector<double> dist(n);
  for (size_t i = 0; i < n; ++i) {
    dist[i] = 1.0 - cosine_sim(vectors[i], vectors[chosen.back()]);
  }

  while (chosen.size() < static_cast<size_t>(k)) {
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) total += dist[i] * dist[i];
    size_t pick;
    if (total <= 0.0) {
      // All remaining mass is on already-covered points; fall back to the
      // first untaken index so centers stay distinct when possible.
      pick = 0;
      while (pick < n && taken[pick]) ++pick;
      if (pick == n) pick = first(rng);
    } else {
      std::vector<double> weights(n);
      for (size_t i = 0; i < n; ++i) weights[i] = dist[i] * dist[i];
      std::discrete_distribution<size_t> dd(weights.begin(), weights.end());
      pick = dd(rng);
    }
    chosen.push_back(pick);
    taken[pick] = true;
    for (size_t i = 0; i < n; ++i) {
      dist[i] = std::min(dist[i], 1.0 - cosine_sim(vectors[i], vectors[pick]));
    }
  }

  Mat centers;
  centers.reserve(k);
  for (size_t idx : chosen) centers.push_back(vectors[idx]);
  return centers;
}

int nearest_center(const Mat& centers, const Vec& v) {
  int best = 0;
  double best_sim = cosine_sim(centers[0], v);
  for (size_t j = 1; j < centers.size(); ++j) {
    const double s = cosine_sim(centers[j], v);
    if (s > best_sim) {
      best_sim = s;
      best = static_cast<int>(j);
    }
  }
  return best;
}

double model_inertia(const Mat& vectors, const Mat& centers,
                     const std::vector<int>& assignments) {
  double total = 0.0;
  for (size_t i = 0; i < vectors.size(); ++i) {
    total += 1.0 - cosine_sim(vectors[i], centers[assignments[i]]);
  }
  return total;
}

}  // namespace

ClusterSchedule ClusterSchedule::defaults(int n_c, int m, uint64_t base_seed,
                                          size_t n_vectors) {
  ClusterSchedule s;
  const int half = m / 2;
  for (int i = 0; i < m; ++i) {
    int k = (i < half) ? n_c : 2 * n_c;
    k = std::min<int>(k, static_cast<int>(n_vectors));
    s.counts.push_back(std::max(1, k));
    s.seeds.push_back(base_seed + static_cast<uint64_t>(i));
  }
  return s;
}

ClusterModel spherical_kmeans_with_init(const Mat& vectors, Mat initial_centers,
                                        int max_iter, double tol) {
  const size_t n = vectors.size();
  const int k = static_cast<int>(initial_centers.size());
  if (k < 1 || static_cast<size_t>(k) > n) {
    throw TooManyClusters("k = " + std::to_string(k) + " for N = " + std::to_string(n));
  }

  Mat centers = std::move(initial_centers);
  std::vector<int> assignments(n, -1);
  double prev_inertia = std::numeric_limits<double>::infinity();
  double inertia = prev_inertia;

  for (int iter = 0; iter < max_iter; ++iter) {
    // Assignment step.
    size_t changes = 0;
    for (size_t i = 0; i < n; ++i) {
      const int a = nearest_center(centers, vectors[i]);
      if (a != assignments[i]) ++changes;
      assignments[i] = a;
    }

    // Repair empty clusters by stealing the worst-fit point.
    std::vector<size_t> counts(k, 0);
    for (int a : assignments) ++counts[a];
    for (int j = 0; j < k; ++j) {
      if (counts[j] > 0) continue;
      size_t worst = 0;
      double worst_sim = std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < n; ++i) {
        if (counts[assignments[i]] <= 1) continue;  // don't empty another cluster
        const double s = cosine_sim(vectors[i], centers[assignments[i]]);
        if (s < worst_sim) {
          worst_sim = s;
          worst = i;
        }
      }
      --counts[assignments[worst]];
      assignments[worst] = j;
      ++counts[j];
      centers[j] = vectors[worst];
      ++changes;
    }

    // Update step: renormalized cluster means.
    const size_t d = vectors.front().size();
    Mat sums(k, Vec(d, 0.0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t c = 0; c < d; ++c) sums[assignments[i]][c] += vectors[i][c];
    }
    for (int j = 0; j < k; ++j) {
      centers[j] = l2_normalize(sums[j]);
    }

    inertia = model_inertia(vectors, centers, assignments);
    if (inertia > prev_inertia + 1e-9) {
      throw PcsError("spherical_kmeans: inertia increased from " +
                     std::to_string(prev_inertia) + " to " + std::to_string(inertia));
    }
    const double improvement = prev_inertia - inertia;
    prev_inertia = inertia;
    if (changes == 0) break;
    if (iter > 0 && improvement < tol) break;
  }

  ClusterModel model;
  model.prototypes = std::move(centers);
  model.assignments = std::move(assignments);
  model.k = k;
  model.inertia = inertia;
  return model;
}

ClusterModel spherical_kmeans(const Mat& vectors, int k, uint64_t seed, int max_iter,
                              double tol) {
  if (vectors.empty()) throw TooManyClusters("cannot cluster an empty set");
  if (k < 1 || static_cast<size_t>(k) > vectors.size()) {
    throw TooManyClusters("k = " + std::to_string(k) + " for N = " +
                          std::to_string(vectors.size()));
  }
  if (max_iter < 1) throw InvalidConfig("max_iter must be >= 1");
  return spherical_kmeans_with_init(vectors, plusplus_centers(vectors, k, seed),
                                    max_iter, tol);
}

std::vector<ClusterModel> multi_cluster(const Mat& vectors, const ClusterSchedule& schedule,
                                        double phi, std::optional<Domain> domain,
                                        int max_iter, double tol) {
  if (schedule.counts.empty() || schedule.counts.size() != schedule.seeds.size()) {
    throw InvalidConfig("cluster schedule needs matching counts and seeds");
  }
  std::vector<ClusterModel> models;
  models.reserve(schedule.size());
  for (size_t m = 0; m < schedule.size(); ++m) {
    ClusterModel model =
        spherical_kmeans(vectors, schedule.counts[m], schedule.seeds[m], max_iter, tol);
    model.phi = phi;
    model.domain = domain;
    models.push_back(std::move(model));
  }
  return models;
}

int assign(const ClusterModel& model, const Vec& f) {
  return nearest_center(model.prototypes, f);
}

}  // namespace pcs
