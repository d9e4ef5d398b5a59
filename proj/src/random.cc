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

#include "covergrow/random.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "covergrow/error.h"

namespace covergrow {
namespace {

std::uint64_t SplitMix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
  std::uint64_t x = seed;
  for (auto& word : state_) word = SplitMix64(x);
}

std::uint64_t RandomSource::NextU64() {
  const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

double RandomSource::NextDouble() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("UniformBelow requires bound > 0");
  unsigned __int128 product =
      static_cast<unsigned __int128>(NextU64()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(NextU64()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double RandomSource::StandardExponential() {
  // 1 - u lies in (0, 1], so the result is finite and >= 0.
  return -std::log1p(-NextDouble());
}

Permutation::Permutation(std::vector<NodeId> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (NodeId v : order_) {
    if (v >= order_.size() || seen[v]) {
      throw InvalidInput("not a permutation of 0.." +
                         std::to_string(order_.size()) + "-1: item " +
                         std::to_string(v) +
                         (v >= order_.size() ? " out of range" : " repeated"));
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  return Permutation(std::move(order));
}

std::vector<std::size_t> Permutation::Ranks() const {
  std::vector<std::size_t> rank(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) rank[order_[i]] = i;
  return rank;
}

Permutation WeightedShuffle(std::span<const double> weights, RandomSource& rng) {
  if (weights.empty()) throw InvalidInput("weighted shuffle of an empty list");
  struct Key {
    double race;
    std::uint64_t tie;  // orders the zero-weight tail
    NodeId item;
  };
  std::vector<Key> keys(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || std::isinf(w)) {
      throw InvalidInput("weight " + std::to_string(i) +
                         " must be finite and >= 0");
    }
    keys[i].item = static_cast<NodeId>(i);
    if (w > 0.0) {
      keys[i].race = rng.StandardExponential() / w;
      keys[i].tie = 0;
    } else {
      keys[i].race = std::numeric_limits<double>::infinity();
      keys[i].tie = rng.NextU64();
    }
  }
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.race != b.race) return a.race < b.race;
    if (a.tie != b.tie) return a.tie < b.tie;
    return a.item < b.item;
  });
  std::vector<NodeId> order(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) order[i] = keys[i].item;
  return Permutation(std::move(order));
}

Permutation UniformShuffle(std::size_t n, RandomSource& rng) {
  if (n == 0) throw InvalidInput("uniform shuffle of zero items");
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.UniformBelow(i + 1)]);
  }
  return Permutation(std::move(order));
}

}  // namespace covergrow
