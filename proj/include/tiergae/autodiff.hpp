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
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "tiergae/matrix.hpp"

namespace tiergae {

// A named trainable matrix with its accumulated gradient.
struct Param {
  Param() = default;
  Param(std::string n, Matrix v) : name(std::move(n)), value(std::move(v)),
                                   grad(value.rows(), value.cols()) {}

  void zero_grad() { grad = Matrix(value.rows(), value.cols()); }

  std::string name;
  Matrix value;
  Matrix grad;
};

void zero_grads(const std::vector<Param*>& params);

class Tape;

// Handle to a node recorded on a Tape. Cheap to copy; only valid while the
// owning Tape is alive.
struct Var {
  Tape* tape = nullptr;
  std::size_t id = 0;

  const Matrix& value() const;
  const Matrix& grad() const;
  std::size_t rows() const { return value().rows(); }
  std::size_t cols() const { return value().cols(); }
};

enum class OpKind {
  kConstant,
  kParam,
  kMatmul,
  kTranspose,
  kAdd,
  kSub,
  kMul,
  kScalarMul,
  kSigmoid,
  kRelu,
  kExp,
  kLog,
  kSum,
  kMean,
  kClamp,
};

// Append-only record of a differentiable computation over dense matrices.
// Node ids are assigned in creation order, so inputs always precede their
// outputs and a single reverse sweep is a valid topological traversal.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Matrix value);
  // Records a leaf reading p.value; backward() accumulates into p.grad.
  Var param(Param& p);

  // Computes d(loss)/d(node) for every node reachable from loss and adds the
  // leaf gradients into the bound Params. Node gradients from a previous call
  // are discarded first; Param gradients are accumulated, never reset.
  // Throws Error(kNonScalarLoss) unless loss is 1×1.
  void backward(Var loss);

  std::size_t size() const noexcept { return nodes_.size(); }
  OpKind kind(Var v) const { return nodes_.at(v.id).kind; }
  const Matrix& value(Var v) const { return nodes_.at(v.id).value; }
  // Zero matrix for nodes the last backward() did not reach.
  const Matrix& grad(Var v) const;

 private:
  friend Var record(Tape&, OpKind, std::vector<std::size_t>, Matrix, double, double);

  struct Node {
    OpKind kind;
    std::vector<std::size_t> inputs;
    Matrix value;
    mutable Matrix grad;
    // Scalar factor for kScalarMul; clamp bounds for kClamp.
    double lo = 0.0;
    double hi = 0.0;
    Param* param = nullptr;
  };

  Var push(Node node);
  void accumulate(std::size_t id, const Matrix& g);

  std::deque<Node> nodes_;  // deque so value() references survive later records
};

// Recorded operations. Binary ops require both operands on the same tape.
Var matmul(Var a, Var b);
Var transpose(Var a);
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var elementwise_mul(Var a, Var b);
Var scalar_mul(double c, Var a);
Var sigmoid(Var a);
Var relu(Var a);
Var exp(Var a);
// Throws Error(kDomainError) on any non-positive entry.
Var log(Var a);
Var sum(Var a);
Var mean(Var a);
// Elementwise clamp to [lo, hi]; gradient passes only where lo <= a <= hi.
Var clamp(Var a, double lo, double hi);

double sigmoid(double x);

struct AdamConfig {
  double lr = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Adam with bias correction. Moment estimates persist across step() calls
// and are keyed by position in the parameter list given at construction.
class Adam {
 public:
  Adam(std::vector<Param*> params, AdamConfig config);

  // Applies one update from the current grads; increments the step count t.
  void step();
  std::int64_t steps() const noexcept { return t_; }
  const AdamConfig& config() const noexcept { return config_; }

 private:
  std::vector<Param*> params_;
  AdamConfig config_;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
  std::int64_t t_ = 0;
};

}  // namespace tiergae
