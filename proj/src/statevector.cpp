#include "holoforge/statevector.hpp"

#include <cmath>

namespace holoforge {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void apply_1q(Amplitudes& v, uint32_t q, const std::complex<double> m[2][2]) {
  const uint64_t bit = uint64_t(1) << q;
  for (uint64_t i = 0; i < v.size(); ++i) {
    if (i & bit) continue;
    auto a = v[i], b = v[i | bit];
    v[i] = m[0][0] * a + m[0][1] * b;
    v[i | bit] = m[1][0] * a + m[1][1] * b;
  }
}

void apply_phase_1q(Amplitudes& v, uint32_t q, std::complex<double> ph) {
  const uint64_t bit = uint64_t(1) << q;
  for (uint64_t i = 0; i < v.size(); ++i)
    if (i & bit) v[i] *= ph;
}

}  // namespace

Amplitudes zero_state(std::size_t n) { return basis_state(n, 0); }

Amplitudes basis_state(std::size_t n, uint64_t index) {
  if (n > kStatevectorQubitCap) throw CapacityError("statevector capacity is 16 qubits");
  Amplitudes v(uint64_t(1) << n, 0.0);
  v[index] = 1.0;
  return v;
}

void apply_gate_inplace(Amplitudes& v, const Gate& g) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.id) {
    case GateId::X: {
      const std::complex<double> m[2][2] = {{0, 1}, {1, 0}};
      apply_1q(v, g.q[0], m);
      break;
    }
    case GateId::Y: {
      const std::complex<double> m[2][2] = {{0, -kI}, {kI, 0}};
      apply_1q(v, g.q[0], m);
      break;
    }
    case GateId::Z:
      apply_phase_1q(v, g.q[0], -1.0);
      break;
    case GateId::H: {
      const std::complex<double> m[2][2] = {{s, s}, {s, -s}};
      apply_1q(v, g.q[0], m);
      break;
    }
    case GateId::S:
      apply_phase_1q(v, g.q[0], kI);
      break;
    case GateId::Sdg:
      apply_phase_1q(v, g.q[0], -kI);
      break;
    case GateId::T:
      apply_phase_1q(v, g.q[0], std::polar(1.0, M_PI / 4));
      break;
    case GateId::Tdg:
      apply_phase_1q(v, g.q[0], std::polar(1.0, -M_PI / 4));
      break;
    case GateId::SH: {
      const std::complex<double> m[2][2] = {{s, s}, {kI * s, -kI * s}};
      apply_1q(v, g.q[0], m);
      break;
    }
    case GateId::CX: {
      const uint64_t c = uint64_t(1) << g.q[0], t = uint64_t(1) << g.q[1];
      for (uint64_t i = 0; i < v.size(); ++i)
        if ((i & c) && !(i & t)) std::swap(v[i], v[i | t]);
      break;
    }
    case GateId::CZ: {
      const uint64_t c = uint64_t(1) << g.q[0], t = uint64_t(1) << g.q[1];
      for (uint64_t i = 0; i < v.size(); ++i)
        if ((i & c) && (i & t)) v[i] = -v[i];
      break;
    }
    case GateId::CCZ: {
      const uint64_t a = uint64_t(1) << g.q[0], b = uint64_t(1) << g.q[1],
                     c = uint64_t(1) << g.q[2];
      for (uint64_t i = 0; i < v.size(); ++i)
        if ((i & a) && (i & b) && (i & c)) v[i] = -v[i];
      break;
    }
  }
}

Amplitudes simulate(const Circuit& c, Amplitudes input) {
  if (c.num_qubits() > kStatevectorQubitCap) throw CapacityError("statevector capacity is 16 qubits");
  if (input.size() != (uint64_t(1) << c.num_qubits()))
    throw DimensionError("simulate: amplitude vector size mismatch");
  for (const Gate& g : c.gates()) apply_gate_inplace(input, g);
  return input;
}

void apply_pauli_inplace(Amplitudes& v, const PauliOperator& p) {
  static const std::complex<double> kPhases[4] = {1.0, kI, -1.0, -kI};
  const std::complex<double> global = kPhases[p.phase()];
  uint64_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    if (p.x(q)) xmask |= uint64_t(1) << q;
    if (p.z(q)) zmask |= uint64_t(1) << q;
  }
  Amplitudes out(v.size());
  for (uint64_t i = 0; i < v.size(); ++i) {
    // X^x Z^z |i> = (-1)^{<z,i>} |i ^ x>
    double sgn = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
    out[i ^ xmask] = global * sgn * v[i];
  }
  v = std::move(out);
}

double norm(const Amplitudes& v) {
  double s = 0;
  for (auto a : v) s += std::norm(a);
  return std::sqrt(s);
}

std::complex<double> inner(const Amplitudes& a, const Amplitudes& b) {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

bool equal_up_to_global_phase(const Amplitudes& a, const Amplitudes& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::abs(std::abs(inner(a, b)) - 1.0) < tol;
}

}  // namespace holoforge
