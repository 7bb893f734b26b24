#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "holoforge/errors.hpp"

namespace holoforge {

// Boundary letters of the substitution system: a-vertices hang off one parent
// edge, b-vertices reconnect two adjacent branches.
enum class LetterType : uint8_t { A, B };

struct ParentEdge {
  std::size_t parent_index = 0;  // vertex position in the previous layer word
  std::size_t parent_slot = 0;   // fan slot consumed on that parent
};

struct TileVertex {
  LetterType letter = LetterType::A;
  ParentEdge left;
  ParentEdge right;  // only meaningful for B vertices
};

struct TilingLayer {
  int seed_type = 1;  // 1 = center seed family, 2 = alternate
  std::vector<TileVertex> word;
};

// Alternating {q1, p/2, q2} tiling grown by edge inflation; layer 0 is the
// single center vertex carrying the bulk logical leg.
struct TilingLayout {
  int q1 = 0;
  int q2 = 0;
  std::vector<TilingLayer> layers;

  int vertex_degree(int seed_type) const { return seed_type == 1 ? q1 : q2; }
  int layer_count() const { return static_cast<int>(layers.size()); }

  // Fan slots available for children of a vertex.
  std::size_t child_slot_count(int layer, std::size_t vertex) const;
  // Open legs once the layer below (if any) has consumed parent slots.
  std::size_t open_leg_count(int layer, std::size_t vertex) const;
};

struct GrowthMatrix {
  long long entries[2][2] = {{0, 0}, {0, 0}};
  int q1 = 0;
  int q2 = 0;

  std::pair<double, double> eigenvalues() const;  // (larger, smaller)
};

// Layout with only the center vertex. Only loop length p = 4 is supported.
TilingLayout make_center_layout(int q1, int q2, int p = 4);

TilingLayout inflate(const TilingLayout& layout, int steps);

GrowthMatrix growth_matrix(int q1, int q2);

// Open boundary legs of the last layer (the physical qubit count).
long long count_physical(const TilingLayout& layout);

enum class GrowthStart {
  kCenter,     // sequence 15, 1335, ... for (16,8): boundary of the center type
  kFirstRing,  // sequence 105, 8625, ... : boundary of the alternate type
};

// Exact integer boundary size after `double_steps` double inflation steps.
long long count_physical_closed_form(int q1, int q2, int double_steps, GrowthStart start);

// TTN (p -> infinity) boundary size after `layers` single steps.
long long count_physical_ttn(int q1, int q2, int layers);

// Fraction of (a, b) vertices per layer, layer 0 included as (1, 0).
std::vector<std::pair<double, double>> layer_frequencies(const TilingLayout& layout);

// Perron-eigenvector limit of the (a, b) fractions for layers whose vertex
// degree is q_layer (the other degree alternates in between).
std::pair<double, double> asymptotic_frequencies(int q_layer, int q_other);

std::string layout_to_text(const TilingLayout& layout);

}  // namespace holoforge
