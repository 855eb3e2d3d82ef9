// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace brt {

enum class ErrorCode {
  invalid_argument,
  invalid_spec,   // hypergeometric parameters that define no series
  divergent,      // series or integral outside its convergence region
  singular,       // zero denominator in a rational closed form
  size_limit,     // brute-force routine asked for too large an instance
  base_point,     // test function vanishes at the evaluation point
  variance,       // Monte Carlo estimator would have unbounded variance
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace brt
