#include "holoforge/assembler.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

namespace holoforge {

namespace {

// Mutable stabilizer-state matrix over a fixed global leg namespace.
class StateBuilder {
 public:
  explicit StateBuilder(std::size_t total_legs) : legs_(total_legs), live_(total_legs, true) {}

  std::vector<PauliOperator>& rows() { return rows_; }

  void add_state(const EncodingState& st, const std::vector<std::size_t>& leg_ids) {
    for (const auto& row : st.stabilizers.rows()) {
      PauliOperator wide(legs_);
      wide.set_phase(row.phase());
      for (std::size_t l = 0; l < st.total_legs; ++l)
        if (row.letter(l)) wide.set_letter(leg_ids[l], row.letter(l));
      rows_.push_back(std::move(wide));
    }
  }

  // Bell-matches legs i and j and eliminates them. Consumes two generators.
  void contract_pair(std::size_t i, std::size_t j) {
    if (i == j || !live_[i] || !live_[j]) throw ContractionError("bad contraction pair");
    auto phi = [&](const PauliOperator& p) -> unsigned {
      return unsigned(p.x(i) ^ p.x(j)) | (unsigned(p.z(i) ^ p.z(j)) << 1);
    };

    std::size_t pivot_row[2] = {0, 0};
    unsigned pivot_phi[2] = {0, 0};
    std::size_t found = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      unsigned f = phi(rows_[r]);
      if (!f) continue;
      // Reduce against known pivots; phi values live in GF(2)^2.
      for (std::size_t p = 0; p < found && f; ++p) {
        if (f == pivot_phi[p]) {
          rows_[r] *= rows_[pivot_row[p]];
          f = 0;
        }
      }
      if (f && found == 2) {
        // pivot_phi[0] ^ pivot_phi[1] is the only remaining nonzero value.
        rows_[r] *= rows_[pivot_row[0]];
        rows_[r] *= rows_[pivot_row[1]];
        f = 0;
      }
      if (f) {
        pivot_row[found] = r;
        pivot_phi[found] = f;
        ++found;
      }
    }

    // Project surviving rows: matched restrictions (II, XX, ZZ, YY words)
    // carry no extra sign in the folded-i convention, so only bits change.
    bool deficient = found < 2;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if ((found > 0 && r == pivot_row[0]) || (found > 1 && r == pivot_row[1])) continue;
      rows_[r].x_bits().set(i, false);
      rows_[r].x_bits().set(j, false);
      rows_[r].z_bits().set(i, false);
      rows_[r].z_bits().set(j, false);
      if (rows_[r].is_identity_word()) {
        if (rows_[r].phase() == 2)
          throw ContractionError("inconsistent contraction: group contains -I");
        deficient = true;
      }
    }
    if (deficient)
      throw ContractionError("rank-deficient contraction: state is not an isometry");

    for (std::size_t p = found; p-- > 0;) rows_.erase(rows_.begin() + pivot_row[p]);
    live_[i] = false;
    live_[j] = false;
  }

  std::vector<std::size_t> live_legs() const {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < legs_; ++l)
      if (live_[l]) out.push_back(l);
    return out;
  }

  // Rows restricted to the given leg order.
  SymplecticMatrix restricted(const std::vector<std::size_t>& order) const {
    SymplecticMatrix m(order.size());
    for (const auto& row : rows_) m.append(row.restricted(order));
    return m;
  }

 private:
  std::size_t legs_ = 0;
  std::vector<bool> live_;
  std::vector<PauliOperator> rows_;
};

struct SeedSlot {
  StabilizerCode code;
  EncodingState state;
  std::vector<std::size_t> arrangement;  // fan order of physical legs
};

}  // namespace

std::string HeteroCodeSpec::id() const {
  std::string s = seed_center + "_" + seed_alternate + "_L" + std::to_string(layers);
  if (black_hole) s += "_bh";
  if (leg_ordering == "reflected_steane") s += "_refl";
  return s;
}

HeteroCodeSpec spec_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("spec JSON: ") + e.what());
  }
  HeteroCodeSpec spec;
  try {
    spec.seed_center = j.at("center").get<std::string>();
    spec.seed_alternate = j.at("alternate").get<std::string>();
    spec.layers = j.at("layers").get<int>();
    spec.black_hole = j.value("black_hole", false);
    spec.leg_ordering = j.value("leg_ordering", std::string("paper_default"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spec JSON: ") + e.what());
  }
  if (spec.leg_ordering != "paper_default" && spec.leg_ordering != "reflected_steane")
    throw ParseError("spec JSON: unknown leg_ordering \"" + spec.leg_ordering + "\"");
  return spec;
}

std::string spec_to_json(const HeteroCodeSpec& spec) {
  nlohmann::json j;
  j["center"] = spec.seed_center;
  j["alternate"] = spec.seed_alternate;
  j["layers"] = spec.layers;
  j["black_hole"] = spec.black_hole;
  j["leg_ordering"] = spec.leg_ordering;
  return j.dump();
}

EncodingState contract_legs(const EncodingState& a, const EncodingState& b,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  StateBuilder builder(a.total_legs + b.total_legs);
  std::vector<std::size_t> ids_a(a.total_legs), ids_b(b.total_legs);
  for (std::size_t l = 0; l < a.total_legs; ++l) ids_a[l] = l;
  for (std::size_t l = 0; l < b.total_legs; ++l) ids_b[l] = a.total_legs + l;
  builder.add_state(a, ids_a);
  builder.add_state(b, ids_b);
  for (auto [la, lb] : pairs) {
    if (la >= a.total_legs || lb >= b.total_legs)
      throw DimensionError("contract_legs: leg out of range");
    builder.contract_pair(la, a.total_legs + lb);
  }
  EncodingState out;
  std::vector<std::size_t> live = builder.live_legs();
  out.total_legs = live.size();
  out.stabilizers = builder.restricted(live);
  return out;
}

AssembledCode assemble(const HeteroCodeSpec& spec, const AssembleOptions& opts) {
  SeedSlot seeds[2];
  seeds[0].code = seed_by_name(spec.seed_center);
  seeds[1].code = seed_by_name(spec.seed_alternate);
  for (auto& s : seeds) {
    s.state = to_encoding_state(s.code);
    s.arrangement.resize(s.code.n);
    for (std::size_t l = 0; l < s.code.n; ++l) s.arrangement[l] = l;
    if (spec.leg_ordering == "reflected_steane" && s.code.name == "steane")
      s.arrangement.assign(kSteaneReflectedOrder.begin(), kSteaneReflectedOrder.end());
  }

  const int q1 = int(seeds[0].code.n) + 1;
  const int q2 = int(seeds[1].code.n) + 1;
  TilingLayout layout = inflate(make_center_layout(q1, q2), spec.layers);
  long long n_phys = count_physical(layout);
  if (n_phys > opts.build_cap)
    throw CapacityError("assembly of " + std::to_string(n_phys) +
                        " physical qubits exceeds the build cap of " +
                        std::to_string(opts.build_cap));

  const int hole = spec.black_hole ? opts.hole_radius : 0;
  if (hole < 0 || (spec.black_hole && hole < 1))
    throw GeometryError("black-hole radius must be at least 1");
  if (spec.layers < hole)
    throw GeometryError("black-hole build needs at least as many layers as the hole radius");

  auto seed_of_layer = [&](int layer) -> SeedSlot& { return seeds[layer % 2]; };

  // Global leg ids: physical legs first within each block, logical leg last.
  std::vector<std::vector<std::size_t>> block(layout.layer_count());
  std::size_t total = 0;
  for (int l = hole; l < layout.layer_count(); ++l) {
    block[l].resize(layout.layers[l].word.size());
    for (std::size_t v = 0; v < layout.layers[l].word.size(); ++v) {
      block[l][v] = total;
      total += seed_of_layer(l).code.n + 1;
    }
  }

  StateBuilder builder(total);
  for (int l = hole; l < layout.layer_count(); ++l) {
    SeedSlot& s = seed_of_layer(l);
    for (std::size_t v = 0; v < layout.layers[l].word.size(); ++v) {
      std::vector<std::size_t> ids(s.code.n + 1);
      for (std::size_t leg = 0; leg <= s.code.n; ++leg) ids[leg] = block[l][v] + leg;
      builder.add_state(s.state, ids);
    }
  }

  // Fan slot -> physical tensor leg, honoring the block arrangement.
  auto slot_leg = [&](int layer, std::size_t vertex, std::size_t slot) -> std::size_t {
    SeedSlot& s = seed_of_layer(layer);
    bool is_b = layer > 0 && layout.layers[layer].word[vertex].letter == LetterType::B;
    std::size_t leg = s.arrangement[is_b ? slot + 1 : slot];
    return block[layer][vertex] + leg;
  };

  for (int l = hole + 1; l < layout.layer_count(); ++l) {
    SeedSlot& s = seed_of_layer(l);
    for (std::size_t v = 0; v < layout.layers[l].word.size(); ++v) {
      const TileVertex& vert = layout.layers[l].word[v];
      std::size_t logical_leg = block[l][v] + s.code.n;
      builder.contract_pair(slot_leg(l - 1, vert.left.parent_index, vert.left.parent_slot),
                            logical_leg);
      if (vert.letter == LetterType::B) {
        std::size_t promoted = block[l][v] + s.arrangement[0];
        builder.contract_pair(slot_leg(l - 1, vert.right.parent_index, vert.right.parent_slot),
                              promoted);
      }
    }
    if (opts.verify_isometry) {
      std::vector<std::size_t> live = builder.live_legs();
      if (builder.restricted(live).rank() != live.size())
        throw ContractionError("isometry check failed after layer " + std::to_string(l));
    }
  }

  // Boundary qubits in cyclic word order, then bulk logical legs.
  AssembledCode out;
  out.layout = layout;
  std::vector<std::size_t> order;
  const int last = layout.layer_count() - 1;
  SeedSlot& ls = seed_of_layer(last);
  for (std::size_t v = 0; v < layout.layers[last].word.size(); ++v) {
    bool is_b = last > 0 && layout.layers[last].word[v].letter == LetterType::B;
    for (std::size_t f = is_b ? 1 : 0; f < ls.code.n; ++f) {
      std::size_t leg = ls.arrangement[f];
      order.push_back(block[last][v] + leg);
      out.leg_map.push_back(LegRef{last, v, leg});
    }
  }
  const std::size_t n_final = order.size();

  if (hole == 0) {
    order.push_back(block[0][0] + seeds[0].code.n);
    out.logical_map.push_back(LegRef{0, 0, seeds[0].code.n});
  } else {
    SeedSlot& hs = seed_of_layer(hole);
    for (std::size_t v = 0; v < layout.layers[hole].word.size(); ++v) {
      order.push_back(block[hole][v] + hs.code.n);
      out.logical_map.push_back(LegRef{hole, v, hs.code.n});
      if (layout.layers[hole].word[v].letter == LetterType::B) {
        order.push_back(block[hole][v] + hs.arrangement[0]);
        out.logical_map.push_back(LegRef{hole, v, hs.arrangement[0]});
      }
    }
  }

  std::vector<std::size_t> live = builder.live_legs();
  if (live.size() != order.size())
    throw ContractionError("leg bookkeeping mismatch after assembly");

  EncodingState st;
  st.total_legs = order.size();
  st.stabilizers = builder.restricted(order);
  for (std::size_t i = n_final; i < order.size(); ++i) st.logical_leg_indices.push_back(i);
  out.code = code_from_encoding_state(st, spec.id());
  if (spec.layers == 0) out.code.distance = seeds[0].code.distance;
  return out;
}

AssembledCode black_hole(HeteroCodeSpec spec, const AssembleOptions& opts) {
  spec.black_hole = true;
  return assemble(spec, opts);
}

DistanceResult compute_distance(const StabilizerCode& code, int weight_cap) {
  if (weight_cap < 1) throw DimensionError("compute_distance: weight cap must be >= 1");
  const std::size_t n = code.n;
  const std::size_t gens = code.generators.row_count();
  const std::size_t rows = gens + 2 * code.k;

  // Per-qubit anticommutation masks against all generators and logicals.
  std::vector<std::array<BitVec, 4>> mask(n);
  auto fill = [&](std::size_t row_bit, const PauliOperator& p) {
    for (std::size_t q = 0; q < n; ++q) {
      bool x = p.x(q), z = p.z(q);
      if (z) mask[q][1].set(row_bit, !mask[q][1].get(row_bit));            // vs X
      if (x) mask[q][2].set(row_bit, !mask[q][2].get(row_bit));            // vs Z
      if (x ^ z) mask[q][3].set(row_bit, !mask[q][3].get(row_bit));        // vs Y
    }
  };
  for (std::size_t q = 0; q < n; ++q)
    for (int l = 1; l < 4; ++l) mask[q][l] = BitVec(rows);
  for (std::size_t i = 0; i < gens; ++i) fill(i, code.generators.row(i));
  for (std::size_t i = 0; i < code.k; ++i) {
    fill(gens + 2 * i, code.logical_x[i]);
    fill(gens + 2 * i + 1, code.logical_z[i]);
  }

  auto gens_clear = [&](const BitVec& syn) {
    for (std::size_t w = 0; w < syn.word_count(); ++w) {
      uint64_t bits = syn.word(w);
      std::size_t base = w << 6;
      if (base + 64 <= gens) {
        if (bits) return false;
      } else {
        for (std::size_t b = 0; b < 64 && base + b < gens; ++b)
          if ((bits >> b) & 1) return false;
        return true;
      }
    }
    return true;
  };
  auto logicals_hit = [&](const BitVec& syn) {
    for (std::size_t i = gens; i < rows; ++i)
      if (syn.get(i)) return true;
    return false;
  };

  std::vector<std::size_t> pos;
  std::vector<int> letters;
  std::optional<PauliOperator> witness;

  // Depth-first over ordered position subsets, three letters per position.
  auto search = [&](auto&& self, std::size_t start, int depth, BitVec& syn) -> bool {
    if (depth == 0) {
      if (gens_clear(syn) && logicals_hit(syn)) {
        PauliOperator w(n);
        for (std::size_t idx = 0; idx < pos.size(); ++idx) w.set_letter(pos[idx], letters[idx]);
        witness = w;
        return true;
      }
      return false;
    }
    for (std::size_t q = start; q + depth <= n; ++q) {
      pos.push_back(q);
      for (int l = 1; l < 4; ++l) {
        letters.push_back(l);
        syn ^= mask[q][l];
        if (self(self, q + 1, depth - 1, syn)) return true;
        syn ^= mask[q][l];
        letters.pop_back();
      }
      pos.pop_back();
    }
    return false;
  };

  for (int w = 1; w <= weight_cap; ++w) {
    BitVec syn(rows);
    pos.clear();
    letters.clear();
    if (search(search, 0, w, syn)) return DistanceResult{w, true, witness};
  }
  return DistanceResult{weight_cap + 1, false, std::nullopt};
}

std::size_t randomized_min_logical_weight(const StabilizerCode& code, int iterations,
                                          uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& gens = code.generators.rows();
  std::size_t best = code.n + 1;

  std::vector<PauliOperator> starts;
  for (std::size_t i = 0; i < code.k; ++i) {
    starts.push_back(code.logical_x[i]);
    starts.push_back(code.logical_z[i]);
    starts.push_back(code.logical_x[i] * code.logical_z[i]);
  }

  for (int it = 0; it < iterations; ++it) {
    PauliOperator cur = starts[rng() % starts.size()];
    // Random scramble, then greedy descent over generator multiplications.
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (rng() & 1) cur *= gens[g];
    bool improved = true;
    while (improved) {
      improved = false;
      for (const auto& g : gens) {
        PauliOperator cand = cur * g;
        if (cand.weight() < cur.weight()) {
          cur = cand;
          improved = true;
        }
      }
    }
    best = std::min(best, cur.weight());
  }
  return best;
}

}  // namespace holoforge
