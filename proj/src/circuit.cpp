#include "holoforge/circuit.hpp"

#include <sstream>

namespace holoforge {

namespace {
struct GateInfo {
  const char* name;
  int arity;
  bool clifford;
};
constexpr GateInfo kGateInfo[] = {
    {"X", 1, true},  {"Y", 1, true},   {"Z", 1, true},  {"H", 1, true},
    {"S", 1, true},  {"SDG", 1, true}, {"T", 1, false}, {"TDG", 1, false},
    {"SH", 1, true}, {"CX", 2, true},  {"CZ", 2, true}, {"CCZ", 3, false},
};
}  // namespace

int gate_arity(GateId id) { return kGateInfo[static_cast<int>(id)].arity; }
bool gate_is_clifford(GateId id) { return kGateInfo[static_cast<int>(id)].clifford; }
const char* gate_name(GateId id) { return kGateInfo[static_cast<int>(id)].name; }

GateId gate_from_name(const std::string& name) {
  for (int i = 0; i < 12; ++i)
    if (name == kGateInfo[i].name) return static_cast<GateId>(i);
  throw ParseError("unknown gate \"" + name + "\"");
}

void Circuit::add(Gate g) {
  int a = gate_arity(g.id);
  for (int i = 0; i < a; ++i) {
    if (g.q[i] >= n_) throw DimensionError("gate target out of range");
    for (int j = i + 1; j < a; ++j)
      if (g.q[i] == g.q[j]) throw DimensionError("repeated gate target");
  }
  gates_.push_back(g);
}

void Circuit::mark_stage() {
  if (!stage_marks_.empty() && stage_marks_.back() >= gates_.size())
    throw DimensionError("stage marks must be strictly increasing");
  stage_marks_.push_back(gates_.size());
}

std::pair<std::size_t, std::size_t> Circuit::stage_range(std::size_t s) const {
  std::size_t begin = s == 0 ? 0 : stage_marks_[s - 1];
  std::size_t end = s < stage_marks_.size() ? stage_marks_[s] : gates_.size();
  return {begin, end};
}

Circuit Circuit::stage(std::size_t s) const {
  auto [begin, end] = stage_range(s);
  Circuit c(n_);
  for (std::size_t i = begin; i < end; ++i) c.add(gates_[i]);
  return c;
}

bool Circuit::is_clifford() const {
  for (const Gate& g : gates_)
    if (!gate_is_clifford(g.id)) return false;
  return true;
}

std::string Circuit::str() const {
  std::ostringstream os;
  std::size_t mark = 0;
  for (std::size_t i = 0; i <= gates_.size(); ++i) {
    while (mark < stage_marks_.size() && stage_marks_[mark] == i) {
      os << "---\n";
      ++mark;
    }
    if (i == gates_.size()) break;
    const Gate& g = gates_[i];
    os << gate_name(g.id);
    for (int t = 0; t < gate_arity(g.id); ++t) os << ' ' << g.q[t];
    os << '\n';
  }
  return os.str();
}

Circuit Circuit::parse(const std::string& text, std::size_t n) {
  Circuit c(n);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line == "---") {
      c.mark_stage();
      continue;
    }
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    GateId id = gate_from_name(name);
    Gate g(id, 0);
    for (int t = 0; t < gate_arity(id); ++t) {
      long v = -1;
      if (!(ls >> v) || v < 0) throw ParseError("bad gate line \"" + line + "\"");
      g.q[t] = static_cast<uint32_t>(v);
    }
    c.add(g);
  }
  return c;
}

}  // namespace holoforge
