#pragma once

#include <stdexcept>
#include <string>

namespace holoforge {

// Error classes map 1:1 onto CLI exit codes; see tools/holoforge.cpp.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedGateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAvailableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace holoforge
