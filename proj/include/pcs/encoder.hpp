#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pcs/geometry.hpp"

namespace pcs {

enum class Activation { relu, none };

struct LayerSpec {
  int out_dim = 0;
  Activation act = Activation::none;
};

struct Layer {
  Mat weights;  // out_dim x in_dim
  Vec biases;   // out_dim
  Activation act = Activation::none;
  double lr_mult = 1.0;
};

struct ForwardCache {
  std::vector<Vec> inputs;   // input seen by each layer
  std::vector<Vec> preacts;  // W x + b per layer
  Vec raw;                   // network output before normalization
  double raw_norm = 0.0;
  Vec feature;               // l2-normalized output
  uint64_t version = 0;      // parameter version at forward time
};

struct EncoderGrads {
  std::vector<Mat> weight_grads;
  std::vector<Vec> bias_grads;
  Vec input_grad;

  void accumulate(const EncoderGrads& other);
  void scale(double s);
  double flat_at(size_t i) const;  // same ordering as Encoder parameters
};

// Small feed-forward encoder ending in an l2 normalization layer.
class Encoder {
 public:
  Encoder(int input_dim, std::vector<Layer> layers);

  // input -> hidden_dim (relu) -> feature_dim (none) -> l2, parameters
  // uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)].
  static Encoder make_default(int input_dim, int hidden_dim, int feature_dim,
                              uint64_t seed);
  static Encoder make_random(int input_dim, const std::vector<LayerSpec>& specs,
                             uint64_t seed);

  // Unit feature plus the cache needed by backward.  Throws DegenerateVector
  // when the raw output norm is <= 1e-12.
  ForwardCache forward(const Vec& x) const;

  // Gradients of (upstream . feature) w.r.t. every parameter and the input.
  // The normalization layer contributes (I - f f^T) / ||raw||.
  EncoderGrads backward(const ForwardCache& cache, const Vec& upstream) const;

  EncoderGrads zero_grads() const;

  int input_dim() const { return input_dim_; }
  int feature_dim() const;
  const std::vector<Layer>& layers() const { return layers_; }
  std::vector<Layer>& mutable_layers();  // bumps the parameter version

  size_t parameter_count() const;
  double parameter(size_t i) const;
  void set_parameter(size_t i, double value);
  uint64_t version() const { return version_; }

 private:
  int input_dim_;
  std::vector<Layer> layers_;
  uint64_t version_ = 0;
};

struct SgdConfig {
  double lr = 0.01;
  double momentum = 0.9;
  double weight_decay = 5e-4;
};

// velocity <- momentum * velocity + grad + weight_decay * param
// param    <- param - lr * lr_mult * velocity
void sgd_step(Vec& param, const Vec& grad, Vec& velocity, const SgdConfig& cfg,
              double lr_mult = 1.0);

// Momentum buffers for every encoder parameter.
class EncoderSgd {
 public:
  EncoderSgd(const Encoder& encoder, SgdConfig cfg);
  void step(Encoder& encoder, const EncoderGrads& grads);
  const SgdConfig& config() const { return cfg_; }

 private:
  SgdConfig cfg_;
  std::vector<Mat> weight_vel_;
  std::vector<Vec> bias_vel_;
};

struct ScalarLoss {
  std::function<double(const Encoder&)> value;
  std::function<EncoderGrads(const Encoder&)> gradient;
};

// Max relative error |a - n| / max(|a|, |n|, 1e-8) between the analytic
// gradient and central differences.  Throws InvalidStep when eps <= 0.
double finite_diff_check(const Encoder& encoder, const ScalarLoss& loss, double eps);

}  // namespace pcs
