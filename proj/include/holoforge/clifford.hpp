#pragma once

#include "holoforge/circuit.hpp"
#include "holoforge/pauli.hpp"
#include "holoforge/symplectic.hpp"

namespace holoforge {

// Heisenberg evolution c p c^dagger with exact phase. Clifford gates only.
PauliOperator conjugate(const PauliOperator& p, const Circuit& c);

// Conjugates every row.
SymplecticMatrix conjugate(const SymplecticMatrix& m, const Circuit& c);

}  // namespace holoforge
