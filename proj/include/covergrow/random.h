// Copyright 2026 The CoverGrow Authors
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

#ifndef COVERGROW_RANDOM_H_
#define COVERGROW_RANDOM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "covergrow/graph.h"

namespace covergrow {

// Seeded 64-bit generator: xoshiro256** 1.0 (Blackman & Vigna), with its
// 256-bit state filled by four SplitMix64 outputs starting from `seed`.
// The stream is fully determined by the seed, so test vectors are portable.
//
// Single owner; copy it to fork an identical stream.
class RandomSource {
 public:
  using result_type = std::uint64_t;

  explicit RandomSource(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double NextDouble();
  // Uniform on {0, ..., bound - 1}; bound > 0. Unbiased (Lemire).
  std::uint64_t UniformBelow(std::uint64_t bound);
  // Exp(1) by inversion.
  double StandardExponential();
  bool Bernoulli(double p) { return NextDouble() < p; }

  // UniformRandomBitGenerator.
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextU64(); }

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_;
};

// An ordering of the item ids 0 .. n-1, each exactly once.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidInput unless `order` is a bijection on 0 .. size-1.
  explicit Permutation(std::vector<NodeId> order);

  static Permutation Identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  std::span<const NodeId> order() const { return order_; }
  NodeId operator[](std::size_t i) const { return order_[i]; }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  // rank[item] = position of item in the order.
  std::vector<std::size_t> Ranks() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<NodeId> order_;
};

// Random order distributed as sequential sampling without replacement, each
// step drawing a remaining item with probability proportional to its weight.
// Realized by sorting exponential-race keys Exp(1) / w. Zero-weight items come
// after every positive-weight item, in uniformly random relative order.
// O(n log n). Throws InvalidInput on an empty list or a negative weight.
Permutation WeightedShuffle(std::span<const double> weights, RandomSource& rng);

// Uniform over all n! orders (Fisher-Yates). Throws InvalidInput for n = 0.
Permutation UniformShuffle(std::size_t n, RandomSource& rng);

}  // namespace covergrow

#endif  // COVERGROW_RANDOM_H_
