#include "holoforge/pauli.hpp"

namespace holoforge {

PauliOperator PauliOperator::parse(const std::string& text) {
  std::size_t i = 0;
  uint8_t sign = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') sign = 2;
    ++i;
  }
  if (i < text.size() && text[i] == 'i') {
    sign = (sign + 1) & 3;
    ++i;
  }
  std::string word = text.substr(i);
  PauliOperator p(word.size());
  uint8_t phase = sign;
  for (std::size_t q = 0; q < word.size(); ++q) {
    switch (word[q]) {
      case 'I': break;
      case 'X': p.x_.set(q, true); break;
      case 'Z': p.z_.set(q, true); break;
      case 'Y':
        p.x_.set(q, true);
        p.z_.set(q, true);
        phase = (phase + 1) & 3;  // Y = iXZ
        break;
      default:
        throw ParseError("bad Pauli character '" + std::string(1, word[q]) + "' in \"" + text + "\"");
    }
  }
  p.phase_ = phase;
  return p;
}

std::size_t PauliOperator::weight() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.word_count(); ++w) c += std::popcount(x_.word(w) | z_.word(w));
  return c;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& o) {
  if (n_ != o.n_) throw DimensionError("pauli_mul: operand lengths differ");
  // Reordering Z^{z1} past X^{x2} contributes (-1)^{|z1 & x2|}.
  phase_ = (phase_ + o.phase_ + 2 * (BitVec::and_popcount(z_, o.x_) & 1)) & 3;
  x_ ^= o.x_;
  z_ ^= o.z_;
  return *this;
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator r = *this;
  r.phase_ = (uint8_t)((4 - phase_ + 2 * (BitVec::and_popcount(x_, z_) & 1)) & 3);
  return r;
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
  if (n_ != o.n_) throw DimensionError("commutes: operand lengths differ");
  return !(BitVec::and_parity(x_, o.z_) ^ BitVec::and_parity(z_, o.x_));
}

PauliOperator PauliOperator::permuted(const std::vector<std::size_t>& perm) const {
  PauliOperator r(n_);
  r.phase_ = phase_;
  for (std::size_t q = 0; q < n_; ++q) {
    r.x_.set(q, x_.get(perm[q]));
    r.z_.set(q, z_.get(perm[q]));
  }
  return r;
}

PauliOperator PauliOperator::restricted(const std::vector<std::size_t>& keep) const {
  PauliOperator r(keep.size());
  r.phase_ = phase_;
  for (std::size_t q = 0; q < keep.size(); ++q) {
    r.x_.set(q, x_.get(keep[q]));
    r.z_.set(q, z_.get(keep[q]));
  }
  return r;
}

std::string PauliOperator::str() const {
  // Undo the folded i per Y before printing the sign.
  uint8_t out_phase = (uint8_t)((phase_ + 4 - (BitVec::and_popcount(x_, z_) & 3)) & 3);
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string s = prefix[out_phase];
  static const char letters[4] = {'I', 'X', 'Z', 'Y'};
  for (std::size_t q = 0; q < n_; ++q) s += letters[letter(q)];
  return s;
}

PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b) { return a * b; }

bool commutes(const PauliOperator& a, const PauliOperator& b) { return a.commutes_with(b); }

}  // namespace holoforge
