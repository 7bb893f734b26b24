#pragma once

#include <optional>
#include <vector>

#include "holoforge/pauli.hpp"

namespace holoforge {

// A list of phased Pauli rows viewed as a GF(2) matrix with 2n columns.
// Column order is x_0..x_{n-1}, z_0..z_{n-1}.
class SymplecticMatrix {
 public:
  SymplecticMatrix() = default;
  explicit SymplecticMatrix(std::size_t n) : n_(n) {}
  SymplecticMatrix(std::size_t n, std::vector<PauliOperator> rows) : n_(n), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.num_qubits() != n_) throw DimensionError("symplectic row width mismatch");
  }

  std::size_t num_qubits() const { return n_; }
  std::size_t row_count() const { return rows_.size(); }
  const PauliOperator& row(std::size_t i) const { return rows_[i]; }
  const std::vector<PauliOperator>& rows() const { return rows_; }

  void append(PauliOperator p) {
    if (p.num_qubits() != n_) throw DimensionError("symplectic row width mismatch");
    rows_.push_back(std::move(p));
  }

  std::size_t rank() const;

  // Reduced row echelon form (Gauss-Jordan), phases carried through row
  // additions. Rows that reduce to the identity word are dropped.
  SymplecticMatrix rowreduced() const;

  bool all_commute() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> rows_;
};

// Precomputed reduction of a matrix for repeated span queries.
class SpanSolver {
 public:
  explicit SpanSolver(const SymplecticMatrix& m);

  // Coefficient vector over the original rows expressing p's (x|z) bits, or
  // nullopt. With exact_phase the product of the selected original rows must
  // equal p including phase.
  std::optional<BitVec> solve(const PauliOperator& p, bool exact_phase = false) const;

  bool contains(const PauliOperator& p, bool exact_phase = false) const {
    return solve(p, exact_phase).has_value();
  }

  std::size_t rank() const { return reduced_.size(); }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> original_;
  std::vector<PauliOperator> reduced_;
  std::vector<BitVec> combos_;        // combos_[i]: reduced_[i] over original rows
  std::vector<std::size_t> pivots_;   // pivot column of reduced_[i]
};

std::optional<BitVec> in_span(const PauliOperator& p, const SymplecticMatrix& m,
                              bool exact_phase = false);

// Signed group equality: identical RREF rows including phases.
bool signed_group_equal(const SymplecticMatrix& a, const SymplecticMatrix& b);

}  // namespace holoforge
