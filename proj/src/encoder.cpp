#include "pcs/encoder.hpp"

#include <cmath>
#include <random>
#include <string>

#include "pcs/errors.hpp"
#include "pcs/seeding.hpp"

namespace pcs {

void EncoderGrads::accumulate(const EncoderGrads& other) {
  if (weight_grads.size() != other.weight_grads.size()) {
    throw GradientShapeMismatch("accumulate: layer count differs");
  }
  for (size_t l = 0; l < weight_grads.size(); ++l) {
    for (size_t r = 0; r < weight_grads[l].size(); ++r) {
      for (size_t c = 0; c < weight_grads[l][r].size(); ++c) {
        weight_grads[l][r][c] += other.weight_grads[l][r][c];
      }
      bias_grads[l][r] += other.bias_grads[l][r];
    }
  }
  if (input_grad.size() == other.input_grad.size()) {
    for (size_t i = 0; i < input_grad.size(); ++i) input_grad[i] += other.input_grad[i];
  }
}

void EncoderGrads::scale(double s) {
  for (auto& wl : weight_grads) {
    for (auto& row : wl) {
      for (double& v : row) v *= s;
    }
  }
  for (auto& bl : bias_grads) {
    for (double& v : bl) v *= s;
  }
  for (double& v : input_grad) v *= s;
}

double EncoderGrads::flat_at(size_t i) const {
  size_t offset = i;
  for (size_t l = 0; l < weight_grads.size(); ++l) {
    const size_t n_w = weight_grads[l].size() * weight_grads[l].front().size();
    if (offset < n_w) {
      const size_t cols = weight_grads[l].front().size();
      return weight_grads[l][offset / cols][offset % cols];
    }
    offset -= n_w;
    if (offset < bias_grads[l].size()) return bias_grads[l][offset];
    offset -= bias_grads[l].size();
  }
  throw IndexOutOfRange("EncoderGrads::flat_at " + std::to_string(i));
}

Encoder::Encoder(int input_dim, std::vector<Layer> layers)
    : input_dim_(input_dim), layers_(std::move(layers)) {
  if (input_dim_ < 1 || layers_.empty()) {
    throw InvalidConfig("encoder needs input_dim >= 1 and at least one layer");
  }
  int in = input_dim_;
  for (size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    if (layer.weights.empty() || layer.weights.front().size() != static_cast<size_t>(in) ||
        layer.biases.size() != layer.weights.size()) {
      throw ShapeMismatch("encoder layer " + std::to_string(l) + " does not chain");
    }
    in = static_cast<int>(layer.weights.size());
  }
}

Encoder Encoder::make_random(int input_dim, const std::vector<LayerSpec>& specs,
                             uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Layer> layers;
  int in = input_dim;
  for (const LayerSpec& spec : specs) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(in));
    std::uniform_real_distribution<double> u(-bound, bound);
    Layer layer;
    layer.act = spec.act;
    layer.weights.assign(spec.out_dim, Vec(in));
    layer.biases.assign(spec.out_dim, 0.0);
    for (int r = 0; r < spec.out_dim; ++r) {
      for (int c = 0; c < in; ++c) layer.weights[r][c] = u(rng);
      layer.biases[r] = u(rng);
    }
    in = spec.out_dim;
    layers.push_back(std::move(layer));
  }
  return Encoder(input_dim, std::move(layers));
}

Encoder Encoder::make_default(int input_dim, int hidden_dim, int feature_dim,
                              uint64_t seed) {
  return make_random(input_dim,
                     {{hidden_dim, Activation::relu}, {feature_dim, Activation::none}},
                     seed);
}

int Encoder::feature_dim() const {
  return static_cast<int>(layers_.back().weights.size());
}

std::vector<Layer>& Encoder::mutable_layers() {
  ++version_;
  return layers_;
}

ForwardCache Encoder::forward(const Vec& x) const {
  if (x.size() != static_cast<size_t>(input_dim_)) {
    throw ShapeMismatch("forward: input dim " + std::to_string(x.size()) + ", expected " +
                        std::to_string(input_dim_));
  }
  ForwardCache cache;
  cache.version = version_;
  Vec cur = x;
  for (const Layer& layer : layers_) {
    cache.inputs.push_back(cur);
    Vec z(layer.weights.size());
    for (size_t r = 0; r < layer.weights.size(); ++r) {
      double s = layer.biases[r];
      for (size_t c = 0; c < cur.size(); ++c) s += layer.weights[r][c] * cur[c];
      z[r] = s;
    }
    cache.preacts.push_back(z);
    if (layer.act == Activation::relu) {
      for (double& v : z) v = v > 0.0 ? v : 0.0;
    }
    cur = std::move(z);
  }
  cache.raw = cur;
  cache.raw_norm = l2_norm(cache.raw);
  if (cache.raw_norm <= kDegenerateNormEps) {
    throw DegenerateVector("forward: raw output norm " + std::to_string(cache.raw_norm));
  }
  cache.feature.resize(cache.raw.size());
  for (size_t i = 0; i < cache.raw.size(); ++i) {
    cache.feature[i] = cache.raw[i] / cache.raw_norm;
  }
  return cache;
}

EncoderGrads Encoder::zero_grads() const {
  EncoderGrads g;
  for (const Layer& layer : layers_) {
    g.weight_grads.emplace_back(layer.weights.size(), Vec(layer.weights.front().size(), 0.0));
    g.bias_grads.emplace_back(layer.biases.size(), 0.0);
  }
  g.input_grad.assign(input_dim_, 0.0);
  return g;
}

EncoderGrads Encoder::backward(const ForwardCache& cache, const Vec& upstream) const {
  if (cache.version != version_ || cache.inputs.size() != layers_.size()) {
    throw CacheMismatch("backward: cache does not match this encoder");
  }
  if (upstream.size() != cache.feature.size()) {
    throw ShapeMismatch("backward: upstream dim mismatch");
  }

  EncoderGrads grads = zero_grads();

  // Through the l2 layer: (I - f f^T) upstream / ||raw||.
  const double fg = dot(cache.feature, upstream);
  Vec delta(upstream.size());
  for (size_t i = 0; i < delta.size(); ++i) {
    delta[i] = (upstream[i] - cache.feature[i] * fg) / cache.raw_norm;
  }

  for (size_t l = layers_.size(); l-- > 0;) {
    const Layer& layer = layers_[l];
    if (layer.act == Activation::relu) {
      for (size_t r = 0; r < delta.size(); ++r) {
        if (cache.preacts[l][r] <= 0.0) delta[r] = 0.0;
      }
    }
    const Vec& in = cache.inputs[l];
    for (size_t r = 0; r < layer.weights.size(); ++r) {
      for (size_t c = 0; c < in.size(); ++c) {
        grads.weight_grads[l][r][c] = delta[r] * in[c];
      }
      grads.bias_grads[l][r] = delta[r];
    }
    Vec prev(in.size(), 0.0);
    for (size_t r = 0; r < layer.weights.size(); ++r) {
      for (size_t c = 0; c < in.size(); ++c) prev[c] += layer.weights[r][c] * delta[r];
    }
    delta = std::move(prev);
  }
  grads.input_grad = delta;
  return grads;
}

size_t Encoder::parameter_count() const {
  size_t n = 0;
  for (const Layer& layer : layers_) {
    n += layer.weights.size() * layer.weights.front().size() + layer.biases.size();
  }
  return n;
}

double Encoder::parameter(size_t i) const {
  size_t offset = i;
  for (const Layer& layer : layers_) {
    const size_t n_w = layer.weights.size() * layer.weights.front().size();
    if (offset < n_w) {
      const size_t cols = layer.weights.front().size();
      return layer.weights[offset / cols][offset % cols];
    }
    offset -= n_w;
    if (offset < layer.biases.size()) return layer.biases[offset];
    offset -= layer.biases.size();
  }
  throw IndexOutOfRange("Encoder::parameter " + std::to_string(i));
}

void Encoder::set_parameter(size_t i, double value) {
  ++version_;
  size_t offset = i;
  for (Layer& layer : layers_) {
    const size_t n_w = layer.weights.size() * layer.weights.front().size();
    if (offset < n_w) {
      const size_t cols = layer.weights.front().size();
      layer.weights[offset / cols][offset % cols] = value;
      return;
    }
    offset -= n_w;
    if (offset < layer.biases.size()) {
      layer.biases[offset] = value;
      return;
    }
    offset -= layer.biases.size();
  }
  throw IndexOutOfRange("Encoder::set_parameter " + std::to_string(i));
}

void sgd_step(Vec& param, const Vec& grad, Vec& velocity, const SgdConfig& cfg,
              double lr_mult) {
  if (param.size() != grad.size() || param.size() != velocity.size()) {
    throw ShapeMismatch("sgd_step: param/grad/velocity sizes differ");
  }
  for (size_t i = 0; i < param.size(); ++i) {
    velocity[i] = cfg.momentum * velocity[i] + grad[i] + cfg.weight_decay * param[i];
    param[i] -= cfg.lr * lr_mult * velocity[i];
  }
}

EncoderSgd::EncoderSgd(const Encoder& encoder, SgdConfig cfg) : cfg_(cfg) {
  for (const Layer& layer : encoder.layers()) {
    weight_vel_.emplace_back(layer.weights.size(), Vec(layer.weights.front().size(), 0.0));
    bias_vel_.emplace_back(layer.biases.size(), 0.0);
  }
}

void EncoderSgd::step(Encoder& encoder, const EncoderGrads& grads) {
  auto& layers = encoder.mutable_layers();
  if (grads.weight_grads.size() != layers.size()) {
    throw ShapeMismatch("EncoderSgd::step: gradient layer count differs");
  }
  for (size_t l = 0; l < layers.size(); ++l) {
    Layer& layer = layers[l];
    for (size_t r = 0; r < layer.weights.size(); ++r) {
      sgd_step(layer.weights[r], grads.weight_grads[l][r], weight_vel_[l][r], cfg_,
               layer.lr_mult);
    }
    sgd_step(layer.biases, grads.bias_grads[l], bias_vel_[l], cfg_, layer.lr_mult);
  }
}

double finite_diff_check(const Encoder& encoder, const ScalarLoss& loss, double eps) {
  if (!(eps > 0.0)) throw InvalidStep("finite_diff_check: eps must be > 0");
  const EncoderGrads analytic = loss.gradient(encoder);
  Encoder probe = encoder;
  double worst = 0.0;
  for (size_t i = 0; i < encoder.parameter_count(); ++i) {
    const double orig = encoder.parameter(i);
    probe.set_parameter(i, orig + eps);
    const double up = loss.value(probe);
    probe.set_parameter(i, orig - eps);
    const double down = loss.value(probe);
    probe.set_parameter(i, orig);
    const double numeric = (up - down) / (2.0 * eps);
    const double a = analytic.flat_at(i);
    const double err = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), 1e-8});
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace pcs
