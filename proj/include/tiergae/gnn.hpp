// Copyright 2026 The tiergae Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tiergae/autodiff.hpp"
#include "tiergae/matrix.hpp"
#include "tiergae/rng.hpp"

namespace tiergae {

// Symmetric GCN normalization D̃^{-1/2} (A + I) D̃^{-1/2} of a square,
// symmetric, nonnegative adjacency. Without self loops, rows with zero
// degree stay zero. Throws Error(kNegativeWeight) / Error(kShapeMismatch).
Matrix gcn_norm(const Matrix& a, bool add_self_loops = true);

enum class Activation { kRelu, kIdentity };

// One graph convolution: act(Â · H · W + b).
struct GcnLayer {
  Param weight;  // d_in × d_out
  Param bias;    // 1 × d_out
  Activation activation = Activation::kRelu;

  std::size_t in_dim() const { return weight.value.rows(); }
  std::size_t out_dim() const { return weight.value.cols(); }

  Var forward(Tape& tape, Var h, Var a_norm);
};

struct EncoderDims {
  std::size_t input = 0;
  std::size_t hidden = 32;
  std::size_t output = 16;
  int layers = 2;  // K
};

inline constexpr int kMinLayers = 2;
inline constexpr int kMaxLayers = 6;

// K stacked GCN layers: relu on hidden layers, identity on the output layer.
class GnnEncoder {
 public:
  GnnEncoder() = default;
  // Throws Error(kInvalidConfig) when K is outside [2, 6] and
  // Error(kShapeMismatch) when layer widths do not chain.
  explicit GnnEncoder(std::vector<GcnLayer> layers);

  // Glorot-uniform weights, zero biases. Parameters are named
  // "<prefix>.layer<k>.weight" / "<prefix>.layer<k>.bias".
  static GnnEncoder glorot(const std::string& prefix, const EncoderDims& dims, Rng& rng);

  Var encode(Tape& tape, Var x, Var a_norm);
  // Inference on a private tape.
  Matrix encode(const Matrix& x, const Matrix& a_norm);

  int depth() const noexcept { return static_cast<int>(layers_.size()); }
  std::size_t input_dim() const { return layers_.front().in_dim(); }
  std::size_t output_dim() const { return layers_.back().out_dim(); }
  std::vector<GcnLayer>& layers() noexcept { return layers_; }
  const std::vector<GcnLayer>& layers() const noexcept { return layers_; }
  std::vector<Param*> params();

 private:
  std::vector<GcnLayer> layers_;
};

}  // namespace tiergae
