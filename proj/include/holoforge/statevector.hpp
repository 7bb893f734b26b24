#pragma once

#include <complex>
#include <vector>

#include "holoforge/circuit.hpp"
#include "holoforge/pauli.hpp"

namespace holoforge {

// Dense amplitude vector; qubit q is bit q of the index.
using Amplitudes = std::vector<std::complex<double>>;

inline constexpr std::size_t kStatevectorQubitCap = 16;

Amplitudes zero_state(std::size_t n);
Amplitudes basis_state(std::size_t n, uint64_t index);

// Exact dense-statevector application, deterministic gate order.
Amplitudes simulate(const Circuit& c, Amplitudes input);

void apply_gate_inplace(Amplitudes& v, const Gate& g);
void apply_pauli_inplace(Amplitudes& v, const PauliOperator& p);

double norm(const Amplitudes& v);
std::complex<double> inner(const Amplitudes& a, const Amplitudes& b);

// max_phi |<a|e^{i phi} b>| == 1 test within tol; vectors assumed normalized.
bool equal_up_to_global_phase(const Amplitudes& a, const Amplitudes& b, double tol = 1e-9);

}  // namespace holoforge
