#include "holoforge/seed_codes.hpp"

#include <algorithm>
#include <sstream>

namespace holoforge {

namespace {

SymplecticMatrix parse_rows(std::size_t n, const std::vector<std::string>& rows) {
  SymplecticMatrix m(n);
  for (const auto& s : rows) m.append(PauliOperator::parse(s));
  return m;
}

// Interleaved-bit lexicographic order used for representative tie-breaks.
bool pattern_less(const PauliOperator& a, const PauliOperator& b) {
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    int la = (a.x(q) ? 1 : 0) | (a.z(q) ? 2 : 0);
    int lb = (b.x(q) ? 1 : 0) | (b.z(q) ? 2 : 0);
    if (la != lb) return la < lb;
  }
  return false;
}

}  // namespace

void StabilizerCode::validate() const {
  if (generators.num_qubits() != n) throw VerificationError(name + ": generator width mismatch");
  if (logical_x.size() != k || logical_z.size() != k)
    throw VerificationError(name + ": logical operator count mismatch");
  if (!generators.all_commute()) throw VerificationError(name + ": generators do not commute");
  if (generators.rank() != n - k) throw VerificationError(name + ": generator rank != n-k");
  for (const auto& row : generators.rows())
    if (!row.is_hermitian() || (row.phase() & 1))
      throw VerificationError(name + ": non-Hermitian generator");
  SpanSolver span(generators);
  for (std::size_t i = 0; i < k; ++i) {
    if (logical_x[i].commutes_with(logical_z[i]))
      throw VerificationError(name + ": logical pair " + std::to_string(i) + " commutes");
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && !logical_x[i].commutes_with(logical_z[j]))
        throw VerificationError(name + ": cross logical pair anticommutes");
      if (j != i && !logical_x[i].commutes_with(logical_x[j]))
        throw VerificationError(name + ": logical X pair anticommutes");
      if (j != i && !logical_z[i].commutes_with(logical_z[j]))
        throw VerificationError(name + ": logical Z pair anticommutes");
    }
    for (const auto& g : generators.rows()) {
      if (!logical_x[i].commutes_with(g) || !logical_z[i].commutes_with(g))
        throw VerificationError(name + ": logical anticommutes with stabilizer");
    }
    if (span.contains(logical_x[i]) || span.contains(logical_z[i]))
      throw VerificationError(name + ": logical lies in stabilizer span");
  }
}

StabilizerCode steane() {
  StabilizerCode c;
  c.name = "steane";
  c.n = 7;
  c.k = 1;
  c.distance = 3;
  c.generators = parse_rows(7, {"XIXIXIX", "XXIIIXX", "XIIXXXI", "ZIZIZIZ", "ZZIIIZZ", "ZIIZZZI"});
  c.logical_x = {PauliOperator::parse("IIXXXII")};
  c.logical_z = {PauliOperator::parse("IIZZZII")};
  return c;
}

StabilizerCode qrm() {
  StabilizerCode c;
  c.name = "qrm";
  c.n = 15;
  c.k = 1;
  c.distance = 3;
  c.generators = parse_rows(15, {
                                    "XIXIXIXIXIXIXIX",
                                    "XIIXXXXXXXIIIII",
                                    "XXXXXXIIIIIIIXX",
                                    "IIIIXXIIXIIXXXX",
                                    "ZIZIZIZIZIZIZIZ",
                                    "ZIIZZZZZZZIIIII",
                                    "ZZZZZZIIIIIIIZZ",
                                    "IIIIZZIIZIIZZZZ",
                                    "ZIZIIIZIIIZIIII",
                                    "ZIIZIIZZIIIIIII",
                                    "ZZZZIIIIIIIIIII",
                                    "ZIIIZIZIZIIIIII",
                                    "ZIZIZIIIIIIIIIZ",
                                    "ZIIZZZIIIIIIIII",
                                });
  c.logical_x = {PauliOperator::parse("IIIIIIXXXXXXXII")};
  c.logical_z = {PauliOperator::parse("IZIIIIIIIIIZIZI")};
  return c;
}

StabilizerCode five_qubit() {
  StabilizerCode c;
  c.name = "five_qubit";
  c.n = 5;
  c.k = 1;
  c.distance = 3;
  c.generators = parse_rows(5, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
  c.logical_x = {PauliOperator::parse("XXXXX")};
  c.logical_z = {PauliOperator::parse("ZZZZZ")};
  return c;
}

StabilizerCode seed_by_name(const std::string& id) {
  if (id == "steane") return steane();
  if (id == "qrm") return qrm();
  if (id == "five_qubit" || id == "happy") return five_qubit();
  throw ParseError("unknown seed code \"" + id + "\"");
}

EncodingState to_encoding_state(const StabilizerCode& code) {
  EncodingState st;
  st.total_legs = code.n + code.k;
  SymplecticMatrix m(st.total_legs);
  auto extend = [&](const PauliOperator& p, std::size_t leg, int letter) {
    PauliOperator e(st.total_legs);
    e.set_phase(p.phase());
    for (std::size_t q = 0; q < code.n; ++q) e.set_letter(q, p.letter(q));
    if (letter >= 0) e.set_letter(leg, letter);
    return e;
  };
  for (const auto& g : code.generators.rows()) m.append(extend(g, 0, -1));
  for (std::size_t i = 0; i < code.k; ++i) {
    st.logical_leg_indices.push_back(code.n + i);
    m.append(extend(code.logical_x[i], code.n + i, 1));
    m.append(extend(code.logical_z[i], code.n + i, 2));
  }
  st.stabilizers = std::move(m);
  if (st.stabilizers.rank() != st.total_legs)
    throw VerificationError("encoding state is not a rank-" + std::to_string(st.total_legs) +
                            " stabilizer state");
  return st;
}

StabilizerCode code_from_encoding_state(const EncodingState& state, const std::string& name) {
  const std::size_t total = state.total_legs;
  const std::size_t k = state.logical_leg_indices.size();
  const std::size_t n = total - k;

  std::vector<bool> is_logical(total, false);
  for (std::size_t l : state.logical_leg_indices) is_logical[l] = true;
  std::vector<std::size_t> physical;
  for (std::size_t q = 0; q < total; ++q)
    if (!is_logical[q]) physical.push_back(q);

  // Column order: logical-leg x/z first so stabilizer rows are the ones with
  // no pivot in the logical block.
  std::vector<std::size_t> cols;  // encoded: q for x, total+q for z
  for (std::size_t l : state.logical_leg_indices) {
    cols.push_back(l);
    cols.push_back(total + l);
  }
  for (std::size_t q : physical) {
    cols.push_back(q);
    cols.push_back(total + q);
  }

  auto bit = [&](const PauliOperator& p, std::size_t col) {
    return col < total ? p.x_bits().get(col) : p.z_bits().get(col - total);
  };

  std::vector<PauliOperator> rows = state.stabilizers.rows();
  std::size_t r = 0;
  std::vector<std::pair<std::size_t, std::size_t>> logical_pivots;  // (row, col index in cols)
  for (std::size_t ci = 0; ci < cols.size() && r < rows.size(); ++ci) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (bit(rows[i], cols[ci])) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && bit(rows[i], cols[ci])) rows[i] *= rows[r];
    if (ci < 2 * k) logical_pivots.emplace_back(r, ci);
    ++r;
  }

  StabilizerCode code;
  code.name = name;
  code.n = n;
  code.k = k;
  code.generators = SymplecticMatrix(n);
  for (std::size_t i = logical_pivots.size(); i < r; ++i)
    code.generators.append(rows[i].restricted(physical));

  // Solve for rows acting as a single X (resp. Z) on one logical leg within
  // the span of the logical-pivot rows.
  auto solve_logical = [&](std::size_t leg_index, bool want_z) {
    // Target bits over the 2k logical columns.
    std::vector<bool> target(2 * k, false);
    target[2 * leg_index + (want_z ? 1 : 0)] = true;
    PauliOperator acc = PauliOperator::identity(total);
    std::vector<bool> current(2 * k, false);
    // logical_pivots rows are in echelon form over the logical columns.
    for (auto [row, ci] : logical_pivots) {
      if (target[ci] != current[ci]) {
        acc *= rows[row];
        for (std::size_t c = 0; c < 2 * k; ++c)
          current[c] = current[c] ^ bit(rows[row], cols[c]);
      }
    }
    if (current != target)
      throw VerificationError(name + ": encoding state has no logical action on leg " +
                              std::to_string(state.logical_leg_indices[leg_index]));
    PauliOperator rep = acc.restricted(physical);
    if (rep.phase() & 1) throw VerificationError(name + ": non-Hermitian logical representative");
    rep.set_phase(0);
    return rep;
  };

  for (std::size_t i = 0; i < k; ++i) {
    code.logical_x.push_back(solve_logical(i, false));
    code.logical_z.push_back(solve_logical(i, true));
  }
  return code;
}

StabilizerCode shorten(const StabilizerCode& code, std::size_t leg) {
  if (code.k != 1) throw DimensionError("shorten expects a k=1 code");
  if (leg >= code.n) throw DimensionError("shorten: leg out of range");
  EncodingState st = to_encoding_state(code);
  st.logical_leg_indices = {code.n, leg};
  StabilizerCode child =
      code_from_encoding_state(st, code.name + "_child" + std::to_string(leg));
  child.distance = code.distance > 0 ? code.distance - 1 : -1;
  SymplecticMatrix reduced = child.generators.rowreduced();
  for (auto* side : {&child.logical_x, &child.logical_z})
    for (auto& rep : *side) rep = min_weight_rep(rep, reduced);
  child.validate();
  return child;
}

bool is_css(const StabilizerCode& code) {
  for (const auto& row : code.generators.rowreduced().rows())
    if (row.x_bits().any() && row.z_bits().any()) return false;
  return true;
}

bool is_self_dual(const StabilizerCode& code) {
  if (!is_css(code)) return false;
  SymplecticMatrix x_as_z(code.n), z_as_z(code.n);
  for (const auto& row : code.generators.rows()) {
    if (row.x_bits().any()) {
      PauliOperator p(code.n);
      for (std::size_t q = 0; q < code.n; ++q) p.z_bits().set(q, row.x_bits().get(q));
      x_as_z.append(p);
    } else {
      PauliOperator p(code.n);
      p.z_bits() = row.z_bits();
      z_as_z.append(p);
    }
  }
  return signed_group_equal(x_as_z, z_as_z);
}

PauliOperator min_weight_rep(const PauliOperator& rep, const SymplecticMatrix& stabilizers) {
  const std::size_t m = stabilizers.row_count();
  if (m > 24) throw CapacityError("min_weight_rep: coset too large to enumerate");
  PauliOperator best = rep;
  PauliOperator cur = rep;
  // Gray-code walk over all 2^m coset elements.
  for (uint64_t i = 1; i < (uint64_t(1) << m); ++i) {
    cur *= stabilizers.row(std::countr_zero(i));
    if (cur.weight() < best.weight() ||
        (cur.weight() == best.weight() && pattern_less(cur, best)))
      best = cur;
  }
  if (best.phase() == 2) best.set_phase(0);
  return best;
}

std::vector<Amplitudes> logical_basis_states(const StabilizerCode& code) {
  if (code.n > kStatevectorQubitCap) throw CapacityError("logical_basis_states: n > 16");
  const uint64_t dim = uint64_t(1) << code.n;
  Amplitudes zero_logical;
  for (uint64_t seed = 0; seed < dim; ++seed) {
    Amplitudes v = basis_state(code.n, seed);
    auto project = [&](const PauliOperator& p) {
      Amplitudes pv = v;
      apply_pauli_inplace(pv, p);
      for (uint64_t i = 0; i < dim; ++i) v[i] = 0.5 * (v[i] + pv[i]);
    };
    for (const auto& g : code.generators.rows()) project(g);
    for (const auto& z : code.logical_z) project(z);
    double nv = norm(v);
    if (nv > 1e-9) {
      for (auto& a : v) a /= nv;
      zero_logical = std::move(v);
      break;
    }
  }
  if (zero_logical.empty()) throw VerificationError(code.name + ": empty code space");

  std::vector<Amplitudes> basis(uint64_t(1) << code.k);
  for (uint64_t z = 0; z < basis.size(); ++z) {
    Amplitudes v = zero_logical;
    for (std::size_t i = 0; i < code.k; ++i)
      if ((z >> i) & 1) apply_pauli_inplace(v, code.logical_x[i]);
    basis[z] = std::move(v);
  }
  return basis;
}

std::string code_to_text(const StabilizerCode& code) {
  std::ostringstream os;
  os << "CODE " << code.name << ' ' << code.n << ' ' << code.k << ' ';
  if (code.distance > 0)
    os << code.distance;
  else
    os << '?';
  os << '\n';
  for (const auto& g : code.generators.rows()) os << "S " << g.str() << '\n';
  for (std::size_t i = 0; i < code.k; ++i) {
    os << "LX " << i << ' ' << code.logical_x[i].str() << '\n';
    os << "LZ " << i << ' ' << code.logical_z[i].str() << '\n';
  }
  return os.str();
}

StabilizerCode code_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  StabilizerCode code;
  if (!(is >> tag) || tag != "CODE") throw ParseError("code text must start with CODE");
  std::string d;
  if (!(is >> code.name >> code.n >> code.k >> d)) throw ParseError("bad CODE header");
  code.distance = d == "?" ? -1 : std::stoi(d);
  code.generators = SymplecticMatrix(code.n);
  code.logical_x.resize(code.k);
  code.logical_z.resize(code.k);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    ls >> tag;
    if (tag == "S") {
      std::string p;
      ls >> p;
      code.generators.append(PauliOperator::parse(p));
    } else if (tag == "LX" || tag == "LZ") {
      std::size_t i;
      std::string p;
      if (!(ls >> i >> p) || i >= code.k) throw ParseError("bad logical line \"" + line + "\"");
      (tag == "LX" ? code.logical_x : code.logical_z)[i] = PauliOperator::parse(p);
    } else {
      throw ParseError("bad code line \"" + line + "\"");
    }
  }
  return code;
}

}  // namespace holoforge
