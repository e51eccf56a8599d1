#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcs/geometry.hpp"
#include "pcs/memory_bank.hpp"

namespace pcs {

// One fitted spherical k-means model over a bank snapshot.
struct ClusterModel {
  Mat prototypes;                // k unit vectors
  std::vector<int> assignments;  // one per input vector, in [0, k)
  int k = 0;
  double phi = 0.1;              // concentration temperature used downstream
  double inertia = 0.0;          // sum of 1 - cos(v, prototype[assignment])
  std::optional<Domain> domain;  // which bank the fit came from, when known
};

struct ClusterSchedule {
  std::vector<int> counts;
  std::vector<uint64_t> seeds;

  size_t size() const { return counts.size(); }

  // Half of the fits use n_c clusters, the rest 2 * n_c, capped at the
  // number of vectors available.
  static ClusterSchedule defaults(int n_c, int m, uint64_t base_seed, size_t n_vectors);
};

// Lloyd iterations on the unit sphere with cosine distance (1 - cos).
// Prototypes are renormalized cluster means; empty clusters are repaired by
// stealing the worst-fit point as a singleton center.  Deterministic for a
// fixed seed.  Throws TooManyClusters when k > N.
ClusterModel spherical_kmeans(const Mat& vectors, int k, uint64_t seed,
                              int max_iter = 100, double tol = 1e-6);

// Same fit but starting from caller-provided centers (kmeans++ is skipped).
ClusterModel spherical_kmeans_with_init(const Mat& vectors, Mat initial_centers,
                                        int max_iter = 100, double tol = 1e-6);

std::vector<ClusterModel> multi_cluster(const Mat& vectors, const ClusterSchedule& schedule,
                                        double phi, std::optional<Domain> domain = std::nullopt,
                                        int max_iter = 100, double tol = 1e-6);

// Index of the most-similar prototype; ties go to the lowest index.
int assign(const ClusterModel& model, const Vec& f);

}  // namespace pcs
