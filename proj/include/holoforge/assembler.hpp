#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holoforge/seed_codes.hpp"
#include "holoforge/tiling.hpp"

namespace holoforge {

inline constexpr long long kDefaultBuildCap = 20000;

// Declarative build recipe for a heterogeneous holographic code.
struct HeteroCodeSpec {
  std::string seed_center = "qrm";
  std::string seed_alternate = "steane";
  int layers = 1;  // inflation steps beyond the center
  bool black_hole = false;
  std::string leg_ordering = "paper_default";  // or "reflected_steane"

  std::string id() const;
};

HeteroCodeSpec spec_from_json(const std::string& json_text);
std::string spec_to_json(const HeteroCodeSpec& spec);

// Where a leg of the final network lives.
struct LegRef {
  int layer = 0;
  std::size_t vertex = 0;
  std::size_t tensor_leg = 0;  // physical index on the seed tensor, or n for its logical leg
};

struct AssembledCode {
  StabilizerCode code;
  TilingLayout layout;
  std::vector<LegRef> leg_map;      // physical qubit index -> boundary open leg
  std::vector<LegRef> logical_map;  // logical index -> bulk leg
};

// Contracts paired legs of two stabilizer states by Bell matching and
// Gaussian elimination. Throws ContractionError on a -I inconsistency or a
// rank-deficient result.
EncodingState contract_legs(const EncodingState& a, const EncodingState& b,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

struct AssembleOptions {
  long long build_cap = kDefaultBuildCap;
  // Full rank check after every layer (costly; meant for small test builds).
  bool verify_isometry = false;
  // Black-hole variant: how many central layers are removed.
  int hole_radius = 1;
};

AssembledCode assemble(const HeteroCodeSpec& spec, const AssembleOptions& opts = {});

// Convenience wrapper forcing the black-hole variant.
AssembledCode black_hole(HeteroCodeSpec spec, const AssembleOptions& opts = {});

struct DistanceResult {
  int value = 0;
  bool exact = false;  // false means "d >= value"
  std::optional<PauliOperator> witness;
};

// Exhaustive search over Paulis of weight <= weight_cap for normalizer
// elements with nontrivial logical action.
DistanceResult compute_distance(const StabilizerCode& code, int weight_cap);

// Randomized descent over stabilizer multiplications; independent upper-bound
// oracle for compute_distance.
std::size_t randomized_min_logical_weight(const StabilizerCode& code, int iterations,
                                          uint64_t seed);

}  // namespace holoforge
