#pragma once

#include <array>
#include <string>
#include <vector>

#include "holoforge/statevector.hpp"
#include "holoforge/symplectic.hpp"

namespace holoforge {

struct StabilizerCode {
  std::string name;
  std::size_t n = 0;
  std::size_t k = 0;
  int distance = -1;  // -1 when unknown
  SymplecticMatrix generators;
  std::vector<PauliOperator> logical_x;
  std::vector<PauliOperator> logical_z;

  // Checks generator commutation, rank n-k, logical pairings, and that no
  // logical representative lies in the stabilizer span. Throws on failure.
  void validate() const;
};

// Stabilizer state on n+k legs obtained by attaching one reference leg per
// logical qubit; physical legs come first, logical legs follow.
struct EncodingState {
  std::size_t total_legs = 0;
  SymplecticMatrix stabilizers;
  std::vector<std::size_t> logical_leg_indices;
};

StabilizerCode steane();
StabilizerCode qrm();
StabilizerCode five_qubit();

StabilizerCode seed_by_name(const std::string& id);

// Physical leg arrangement exposing the Steane block reflection symmetry.
inline constexpr std::array<std::size_t, 7> kSteaneReflectedOrder = {4, 1, 2, 0, 5, 3, 6};

EncodingState to_encoding_state(const StabilizerCode& code);

// Inverse of to_encoding_state for an arbitrary choice of logical legs.
// logical_legs lists the legs, in logical-qubit order.
StabilizerCode code_from_encoding_state(const EncodingState& state, const std::string& name);

// The [[n-1, 2, d-1]] child code: physical leg `leg` becomes logical qubit 1
// (the seed logical stays qubit 0). Logical representatives are lowest-weight
// with a lexicographic tie-break.
StabilizerCode shorten(const StabilizerCode& code, std::size_t leg);

bool is_css(const StabilizerCode& code);
bool is_self_dual(const StabilizerCode& code);

// Lowest-weight element of rep * <stabilizers>; ties broken lexicographically
// on the interleaved (x0,z0,x1,z1,...) bit pattern. Resulting phase is
// normalized to +1. Enumerates the full coset, so row count is capped.
PauliOperator min_weight_rep(const PauliOperator& rep, const SymplecticMatrix& stabilizers);

// Dense logical basis states |z>_L for z = 0..2^k-1, built from projectors
// and the logical X representatives. Requires n <= 16.
std::vector<Amplitudes> logical_basis_states(const StabilizerCode& code);

std::string code_to_text(const StabilizerCode& code);
StabilizerCode code_from_text(const std::string& text);

}  // namespace holoforge
