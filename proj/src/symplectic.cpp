#include "holoforge/symplectic.hpp"

namespace holoforge {

namespace {

inline bool column_bit(const PauliOperator& p, std::size_t col) {
  std::size_t n = p.num_qubits();
  return col < n ? p.x_bits().get(col) : p.z_bits().get(col - n);
}

}  // namespace

SymplecticMatrix SymplecticMatrix::rowreduced() const {
  std::vector<PauliOperator> rows = rows_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < 2 * n_ && r < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (column_bit(rows[i], col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && column_bit(rows[i], col)) rows[i] *= rows[r];
    }
    ++r;
  }
  rows.resize(r);
  return SymplecticMatrix(n_, std::move(rows));
}

std::size_t SymplecticMatrix::rank() const { return rowreduced().row_count(); }

bool SymplecticMatrix::all_commute() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = i + 1; j < rows_.size(); ++j)
      if (!rows_[i].commutes_with(rows_[j])) return false;
  return true;
}

SpanSolver::SpanSolver(const SymplecticMatrix& m) : n_(m.num_qubits()), original_(m.rows()) {
  std::vector<PauliOperator> rows = original_;
  std::vector<BitVec> combos(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    combos[i] = BitVec(rows.size());
    combos[i].set(i, true);
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < 2 * n_ && r < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (column_bit(rows[i], col)) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    std::swap(combos[r], combos[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && column_bit(rows[i], col)) {
        rows[i] *= rows[r];
        combos[i] ^= combos[r];
      }
    }
    pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  combos.resize(r);
  reduced_ = std::move(rows);
  combos_ = std::move(combos);
}

std::optional<BitVec> SpanSolver::solve(const PauliOperator& p, bool exact_phase) const {
  if (p.num_qubits() != n_) throw DimensionError("in_span: width mismatch");
  PauliOperator res = p;
  BitVec combo(original_.size());
  for (std::size_t i = 0; i < reduced_.size(); ++i) {
    if (column_bit(res, pivots_[i])) {
      res *= reduced_[i];
      combo ^= combos_[i];
    }
  }
  if (!res.is_identity_word()) return std::nullopt;
  if (exact_phase) {
    PauliOperator prod = PauliOperator::identity(n_);
    for (std::size_t i = 0; i < original_.size(); ++i)
      if (combo.get(i)) prod *= original_[i];
    if (!(prod == p)) return std::nullopt;
  }
  return combo;
}

std::optional<BitVec> in_span(const PauliOperator& p, const SymplecticMatrix& m, bool exact_phase) {
  return SpanSolver(m).solve(p, exact_phase);
}

bool signed_group_equal(const SymplecticMatrix& a, const SymplecticMatrix& b) {
  if (a.num_qubits() != b.num_qubits()) return false;
  SymplecticMatrix ra = a.rowreduced();
  SymplecticMatrix rb = b.rowreduced();
  if (ra.row_count() != rb.row_count()) return false;
  for (std::size_t i = 0; i < ra.row_count(); ++i)
    if (!(ra.row(i) == rb.row(i))) return false;
  return true;
}

}  // namespace holoforge
