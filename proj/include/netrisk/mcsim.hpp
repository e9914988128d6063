#pragma once

#include <cstdint>
#include <span>

#include "netrisk/betweenness.hpp"
#include "netrisk/network.hpp"
#include "netrisk/types.hpp"

namespace netrisk {

struct CascadeConfig {
  std::int64_t trials = 100000;
  std::uint64_t seed = 0;
};

struct CascadeEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(trials)
  std::int64_t trials = 0;
};

// Monte Carlo oracle for the network expected loss. Per trial: each country i
// defaults independently with probability dp[i]; each defaulted i then
// transmits once to every j with a mask-1 channel (adjacency augmented with
// self-loops), independently with probability q_ij; the trial loss adds
// loss[j] once per realized transmission, self-loop included. A node hit by
// k transmissions contributes k * loss[j], so the estimator's expectation is
// exactly sum_j sum_i dp[i] * q_ij * mask_ij * loss[j], the analytic NEL.
//
// Trial t draws from a SplitMix64 stream seeded by mixing (seed, t), so runs
// are reproducible and Exec::parallel is bit-identical to Exec::serial.
CascadeEstimate simulate_expected_loss(const ExposureNetwork& network,
                                       const TransitionTable& transitions,
                                       std::span<const double> dp,
                                       std::span<const double> loss,
                                       const CascadeConfig& config,
                                       Exec exec = Exec::parallel);

namespace detail {

// SplitMix64 (Steele, Lea & Flood). Small splittable generator; one instance
// per trial, seeded from (seed, trial index).
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return mix64(seed + 0x9E3779B97F4A7C15ull * (trial + 1));
}

}  // namespace detail

}  // namespace netrisk
