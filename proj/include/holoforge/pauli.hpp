#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "holoforge/errors.hpp"

namespace holoforge {

// Packed GF(2) bit vector. Qubit q lives at word q/64, bit q%64.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  uint64_t word(std::size_t w) const { return words_[w]; }
  uint64_t& word(std::size_t w) { return words_[w]; }
  const uint64_t* data() const { return words_.data(); }
  uint64_t* data() { return words_.data(); }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

  void operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, or size() if none.
  std::size_t lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
    return nbits_;
  }

  bool operator==(const BitVec& o) const = default;

  // popcount(a & b) parity, used by the symplectic form.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    uint64_t acc = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
    return std::popcount(acc) & 1;
  }

  static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) c += std::popcount(a.words_[w] & b.words_[w]);
    return c;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

// Phased n-qubit Pauli: i^phase * prod_q X_q^{x[q]} Z_q^{z[q]}, phase in Z_4.
// The single global convention is Y = i X Z, so the qubit word X^1 Z^1 prints
// as Y together with one factor of i absorbed into `phase`.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : n_(n), x_(n), z_(n), phase_(0) {}
  PauliOperator(std::size_t n, BitVec x, BitVec z, uint8_t phase)
      : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {}

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }

  // Parses e.g. "XZZXI", "-YZXIZ", "iXY", "-iZ".
  static PauliOperator parse(const std::string& text);

  std::size_t num_qubits() const { return n_; }
  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  BitVec& x_bits() { return x_; }
  BitVec& z_bits() { return z_; }
  uint8_t phase() const { return phase_; }
  void set_phase(uint8_t p) { phase_ = p & 3; }

  bool x(std::size_t q) const { return x_.get(q); }
  bool z(std::size_t q) const { return z_.get(q); }

  // 0=I 1=X 2=Z 3=Y at qubit q.
  int letter(std::size_t q) const { return (x(q) ? 1 : 0) | (z(q) ? 2 : 0); }
  void set_letter(std::size_t q, int l) {
    x_.set(q, l & 1);
    z_.set(q, (l >> 1) & 1);
  }

  bool is_identity_word() const { return !x_.any() && !z_.any(); }
  std::size_t weight() const;

  // Hermitian iff the i-exponent parity matches the Y count parity.
  bool is_hermitian() const { return (phase_ & 1) == (BitVec::and_popcount(x_, z_) & 1); }

  PauliOperator& operator*=(const PauliOperator& o);
  friend PauliOperator operator*(PauliOperator a, const PauliOperator& b) { return a *= b; }

  PauliOperator adjoint() const;

  bool commutes_with(const PauliOperator& o) const;

  // Applies qubit relabeling: qubit q of the result is qubit perm[q] of *this.
  PauliOperator permuted(const std::vector<std::size_t>& perm) const;

  // Keeps qubits listed in `keep` (in order); phase is preserved.
  PauliOperator restricted(const std::vector<std::size_t>& keep) const;

  bool operator==(const PauliOperator& o) const = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  BitVec x_, z_;
  uint8_t phase_ = 0;
};

PauliOperator pauli_mul(const PauliOperator& a, const PauliOperator& b);
bool commutes(const PauliOperator& a, const PauliOperator& b);

}  // namespace holoforge
