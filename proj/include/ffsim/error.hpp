//------------------------------------------------------------------------------
// ffsim: microscopic nuclear spin flip-flop simulator
// SPDX-License-Identifier: Apache-2.0
//------------------------------------------------------------------------------
#pragma once

#include <stdexcept>
#include <string>

namespace ffsim {

/// Base class for all ffsim errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input: bad config value, malformed file, out-of-range
/// argument. Mapped to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: eigensolver non-convergence, label crossing,
/// non-finite intermediate. Mapped to CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A doped-ensemble draw produced zero ions.
class EmptyEnsembleError : public InputError {
 public:
  using InputError::InputError;
};

/// Ascending-energy labeling became ambiguous (hyperfine pairs interleave).
class LabelCrossingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace ffsim
