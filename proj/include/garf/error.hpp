#pragma once

#include <stdexcept>
#include <string>

namespace garf {

/// Caller violated an operation's precondition (shape mismatch,
/// non-scalar loss, mismatched architectures, ...).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Bad or unreadable file contents (PNG, checkpoint, pose file).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid or incomplete experiment configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical failure during optimization (non-finite loss or gradient).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Geometric degeneracy: point at infinity under a warp, collinear
/// camera centers, patch footprint that cannot be placed.
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace garf
