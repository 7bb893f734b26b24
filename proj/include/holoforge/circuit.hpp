#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "holoforge/errors.hpp"

namespace holoforge {

enum class GateId : uint8_t { X, Y, Z, H, S, Sdg, T, Tdg, SH, CX, CZ, CCZ };

int gate_arity(GateId id);
bool gate_is_clifford(GateId id);
const char* gate_name(GateId id);
GateId gate_from_name(const std::string& name);

struct Gate {
  GateId id;
  std::array<uint32_t, 3> q{0, 0, 0};

  Gate(GateId g, uint32_t q0) : id(g), q{q0, 0, 0} {}
  Gate(GateId g, uint32_t q0, uint32_t q1) : id(g), q{q0, q1, 0} {}
  Gate(GateId g, uint32_t q0, uint32_t q1, uint32_t q2) : id(g), q{q0, q1, q2} {}

  bool operator==(const Gate& o) const = default;
};

// Ordered gate list with optional stage marks splitting it into pieces.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<std::size_t>& stage_marks() const { return stage_marks_; }
  std::size_t stage_count() const { return stage_marks_.size() + 1; }

  void add(Gate g);
  void add(GateId id, uint32_t q0) { add(Gate(id, q0)); }
  void add(GateId id, uint32_t q0, uint32_t q1) { add(Gate(id, q0, q1)); }
  void add(GateId id, uint32_t q0, uint32_t q1, uint32_t q2) { add(Gate(id, q0, q1, q2)); }

  // Marks a stage boundary at the current position.
  void mark_stage();

  // Gate index range [begin, end) of stage s.
  std::pair<std::size_t, std::size_t> stage_range(std::size_t s) const;

  // Gates of one stage as a standalone circuit.
  Circuit stage(std::size_t s) const;

  bool is_clifford() const;

  std::string str() const;
  static Circuit parse(const std::string& text, std::size_t n);

  bool operator==(const Circuit& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
  std::vector<std::size_t> stage_marks_;
};

}  // namespace holoforge
