#include "holoforge/clifford.hpp"

namespace holoforge {

namespace {

inline void add_phase(PauliOperator& p, unsigned delta) { p.set_phase((p.phase() + delta) & 3); }

void conj_h(PauliOperator& p, uint32_t q) {
  bool x = p.x(q), z = p.z(q);
  p.x_bits().set(q, z);
  p.z_bits().set(q, x);
  if (x && z) add_phase(p, 2);
}

void conj_s(PauliOperator& p, uint32_t q) {
  if (p.x(q)) {
    p.z_bits().flip(q);
    add_phase(p, 1);
  }
}

void conj_sdg(PauliOperator& p, uint32_t q) {
  if (p.x(q)) {
    p.z_bits().flip(q);
    add_phase(p, 3);
  }
}

void conj_gate(PauliOperator& p, const Gate& g) {
  switch (g.id) {
    case GateId::X:
      if (p.z(g.q[0])) add_phase(p, 2);
      break;
    case GateId::Y:
      if (p.x(g.q[0]) ^ p.z(g.q[0])) add_phase(p, 2);
      break;
    case GateId::Z:
      if (p.x(g.q[0])) add_phase(p, 2);
      break;
    case GateId::H:
      conj_h(p, g.q[0]);
      break;
    case GateId::S:
      conj_s(p, g.q[0]);
      break;
    case GateId::Sdg:
      conj_sdg(p, g.q[0]);
      break;
    case GateId::SH:
      conj_h(p, g.q[0]);
      conj_s(p, g.q[0]);
      break;
    case GateId::CX: {
      uint32_t c = g.q[0], t = g.q[1];
      if (p.x(c)) p.x_bits().flip(t);
      if (p.z(t)) p.z_bits().flip(c);
      break;
    }
    case GateId::CZ: {
      uint32_t a = g.q[0], b = g.q[1];
      if (p.x(a) && p.x(b)) add_phase(p, 2);
      if (p.x(b)) p.z_bits().flip(a);
      if (p.x(a)) p.z_bits().flip(b);
      break;
    }
    default:
      throw UnsupportedGateError(std::string("conjugate: non-Clifford gate ") + gate_name(g.id));
  }
}

}  // namespace

PauliOperator conjugate(const PauliOperator& p, const Circuit& c) {
  if (p.num_qubits() != c.num_qubits()) throw DimensionError("conjugate: width mismatch");
  PauliOperator r = p;
  for (const Gate& g : c.gates()) conj_gate(r, g);
  return r;
}

SymplecticMatrix conjugate(const SymplecticMatrix& m, const Circuit& c) {
  SymplecticMatrix out(m.num_qubits());
  for (const auto& row : m.rows()) out.append(conjugate(row, c));
  return out;
}

}  // namespace holoforge
