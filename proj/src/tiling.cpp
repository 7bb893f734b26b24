#include "holoforge/tiling.hpp"

#include <cmath>
#include <sstream>

namespace holoforge {

namespace {

void check_hyperbolic(int q1, int q2, int p) {
  if (p != 4) throw GeometryError("only loop length p = 4 (and the TTN limit) is supported");
  if (q1 < 3 || q2 < 3) throw GeometryError("tile degree must be at least 3");
  // 1/q1 + 1/q2 + 2/p < 1
  if (q2 * p + q1 * p + 2 * q1 * q2 >= q1 * q2 * p)
    throw GeometryError("tiling {" + std::to_string(q1) + ",2," + std::to_string(q2) +
                        "} is not hyperbolic");
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw CapacityError("tiling growth count overflows");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw CapacityError("tiling growth count overflows");
  return r;
}

}  // namespace

std::size_t TilingLayout::child_slot_count(int layer, std::size_t vertex) const {
  int q = vertex_degree(layers[layer].seed_type);
  if (layer == 0) return q - 1;  // center: all physical legs are child slots
  return layers[layer].word[vertex].letter == LetterType::A ? q - 1 : q - 2;
}

std::size_t TilingLayout::open_leg_count(int layer, std::size_t vertex) const {
  std::size_t slots = child_slot_count(layer, vertex);
  if (layer + 1 == layer_count()) return slots;
  // An inflated layer consumes every slot below it.
  return 0;
}

TilingLayout make_center_layout(int q1, int q2, int p) {
  check_hyperbolic(q1, q2, p);
  TilingLayout layout;
  layout.q1 = q1;
  layout.q2 = q2;
  TilingLayer center;
  center.seed_type = 1;
  center.word.push_back(TileVertex{LetterType::A, {}, {}});
  layout.layers.push_back(std::move(center));
  return layout;
}

TilingLayout inflate(const TilingLayout& layout, int steps) {
  if (steps < 0) throw GeometryError("inflate: negative step count");
  check_hyperbolic(layout.q1, layout.q2, 4);
  TilingLayout out = layout;
  for (int s = 0; s < steps; ++s) {
    const int prev_index = out.layer_count() - 1;
    const TilingLayer& prev = out.layers[prev_index];
    TilingLayer next;
    next.seed_type = prev.seed_type == 1 ? 2 : 1;

    if (prev_index == 0) {
      // o -> (a)^{q-1}: every center slot feeds an a-vertex, no reconnections.
      std::size_t slots = out.child_slot_count(0, 0);
      for (std::size_t slot = 0; slot < slots; ++slot)
        next.word.push_back(TileVertex{LetterType::A, {0, slot}, {}});
    } else {
      // a -> (a')^{q-3} b', b -> (a')^{q-4} b'; each b' reconnects vertex j
      // with its cyclic successor, taking the last slot of j and slot 0 of j+1.
      const std::size_t w = prev.word.size();
      for (std::size_t j = 0; j < w; ++j) {
        std::size_t slots = out.child_slot_count(prev_index, j);
        for (std::size_t slot = 1; slot + 1 < slots; ++slot)
          next.word.push_back(TileVertex{LetterType::A, {j, slot}, {}});
        next.word.push_back(
            TileVertex{LetterType::B, {j, slots - 1}, {(j + 1) % w, 0}});
      }
    }
    out.layers.push_back(std::move(next));
  }
  return out;
}

GrowthMatrix growth_matrix(int q1, int q2) {
  check_hyperbolic(q1, q2, 4);
  GrowthMatrix m;
  m.q1 = q1;
  m.q2 = q2;
  m.entries[0][0] = (long long)(q1 - 2) * (q2 - 3) - 1;
  m.entries[0][1] = (long long)(q1 - 3) * (q2 - 3) - 1;
  m.entries[1][0] = q1 - 2;
  m.entries[1][1] = q1 - 3;
  return m;
}

std::pair<double, double> GrowthMatrix::eigenvalues() const {
  double tr = double(entries[0][0] + entries[1][1]);
  double det = double(entries[0][0]) * double(entries[1][1]) -
               double(entries[0][1]) * double(entries[1][0]);
  double disc = std::sqrt(tr * tr - 4 * det);
  return {(tr + disc) / 2, (tr - disc) / 2};
}

long long count_physical(const TilingLayout& layout) {
  const int last = layout.layer_count() - 1;
  long long total = 0;
  for (std::size_t v = 0; v < layout.layers[last].word.size(); ++v)
    total = checked_add(total, (long long)layout.open_leg_count(last, v));
  return total;
}

long long count_physical_closed_form(int q1, int q2, int double_steps, GrowthStart start) {
  check_hyperbolic(q1, q2, 4);
  if (double_steps < 0) throw GeometryError("negative double-step count");
  long long na, nb;
  int q_boundary;
  GrowthMatrix m;
  int power;
  if (start == GrowthStart::kCenter) {
    // Step i counts the boundary at layer 2i (center-type letters).
    if (double_steps == 0) return q1 - 1;
    na = checked_mul(q1 - 1, q2 - 3);
    nb = q1 - 1;
    power = double_steps - 1;
    m = growth_matrix(q1, q2);
    q_boundary = q1;
  } else {
    // Step j counts the boundary at layer 2j+1 (alternate-type letters).
    na = q1 - 1;
    nb = 0;
    power = double_steps;
    m = growth_matrix(q2, q1);
    q_boundary = q2;
  }
  for (int i = 0; i < power; ++i) {
    long long na2 = checked_add(checked_mul(m.entries[0][0], na), checked_mul(m.entries[0][1], nb));
    long long nb2 = checked_add(checked_mul(m.entries[1][0], na), checked_mul(m.entries[1][1], nb));
    na = na2;
    nb = nb2;
  }
  return checked_add(checked_mul(na, q_boundary - 1), checked_mul(nb, q_boundary - 2));
}

long long count_physical_ttn(int q1, int q2, int layers) {
  check_hyperbolic(q1, q2, 4);
  long long n = q1 - 1;
  for (int l = 1; l <= layers; ++l) {
    int q = (l % 2 == 1) ? q2 : q1;
    n = checked_mul(n, q - 1);
  }
  return n;
}

std::vector<std::pair<double, double>> layer_frequencies(const TilingLayout& layout) {
  std::vector<std::pair<double, double>> out;
  for (const auto& layer : layout.layers) {
    double na = 0, nb = 0;
    for (const auto& v : layer.word) (v.letter == LetterType::A ? na : nb) += 1;
    out.emplace_back(na / (na + nb), nb / (na + nb));
  }
  return out;
}

std::pair<double, double> asymptotic_frequencies(int q_layer, int q_other) {
  GrowthMatrix m = growth_matrix(q_layer, q_other);
  double lambda = m.eigenvalues().first;
  // Perron eigenvector (x, y): x / y = M01 / (lambda - M00).
  double x = double(m.entries[0][1]);
  double y = lambda - double(m.entries[0][0]);
  return {x / (x + y), y / (x + y)};
}

std::string layout_to_text(const TilingLayout& layout) {
  std::ostringstream os;
  os << "TILING " << layout.q1 << " 2 " << layout.q2 << '\n';
  for (int l = 0; l < layout.layer_count(); ++l) {
    const auto& layer = layout.layers[l];
    os << "L" << l << " type" << layer.seed_type << ' ';
    for (std::size_t v = 0; v < layer.word.size(); ++v)
      os << (layer.word[v].letter == LetterType::A ? 'a' : 'b');
    os << '\n';
  }
  return os.str();
}

}  // namespace holoforge
