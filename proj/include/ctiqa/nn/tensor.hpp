// Copyright 2026 The ctiqa Authors.
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

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ctiqa::nn {

using Shape = std::vector<std::int64_t>;

std::int64_t numel(const Shape& shape);
std::string to_string(const Shape& shape);

namespace detail {

// One vertex of the gradient tape. Leaves have no parents and no backward
// function. Interior nodes exist only when at least one input requires grad.
template <typename T>
struct Node {
  Shape shape;
  std::vector<T> value;
  std::vector<T> grad;
  bool requires_grad = false;
  const char* op = "leaf";
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward;

  std::vector<T>& grad_buffer() {
    if (grad.size() != value.size()) grad.assign(value.size(), T(0));
    return grad;
  }
};

}  // namespace detail

// Dense row-major N-d array with an optional gradient slot. A Tensor is a
// cheap handle: copies share storage and tape position, which is how model
// parameters and the optimizer see the same values.
template <typename T>
class Tensor {
 public:
  using value_type = T;

  Tensor() = default;
  Tensor(Shape shape, std::vector<T> values, bool requires_grad = false);

  static Tensor zeros(const Shape& shape, bool requires_grad = false);
  static Tensor full(const Shape& shape, T value, bool requires_grad = false);
  static Tensor scalar(T value);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t rank() const { return shape().size(); }
  // Extent of `axis`; negative axes count from the back.
  std::int64_t dim(int axis) const;
  std::int64_t numel() const;

  std::span<const T> data() const;
  // Writable view for leaves (parameters, inputs). Writing into an interior
  // node would desynchronize the tape.
  std::span<T> mutable_data();

  bool requires_grad() const;
  // Gradient of the last backward(); empty when never reached.
  std::span<const T> grad() const;
  std::span<T> mutable_grad();
  void zero_grad();

  T item() const;
  // Reverse pass from this scalar. Accumulates into every reachable leaf
  // that requires grad, then releases the interior of the tape.
  void backward() const;
  // Same values, cut from the tape.
  Tensor detach() const;

  const std::shared_ptr<detail::Node<T>>& node() const { return node_; }
  static Tensor from_node(std::shared_ptr<detail::Node<T>> node);

 private:
  std::shared_ptr<detail::Node<T>> node_;
};

// While alive, primitives on this thread record no tape even when inputs
// require grad. Nests.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

// Builds a primitive's output: checks finiteness (NonFinite names `op`) and,
// when any input requires grad, links the node into the tape.
template <typename T>
Tensor<T> make_result(const char* op, Shape shape, std::vector<T> values,
                      std::vector<Tensor<T>> inputs,
                      std::function<void(detail::Node<T>&)> backward);

// Throws NonFinite when any value is NaN or infinite.
template <typename T>
void check_finite(std::span<const T> values, const char* what);

extern template class Tensor<float>;
extern template class Tensor<double>;

}  // namespace ctiqa::nn
