#pragma once
// Dense GF(2) linear algebra: bit matrices, PLU decomposition, and synthesis
// of linear maps as CNOT/REWIRE networks.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"

namespace qre {

class SingularMatrix : public std::runtime_error {
 public:
  explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
        bits_(static_cast<size_t>(rows) * static_cast<size_t>((cols + 63) / 64), 0) {}

  static GF2Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (word(r, c / 64) >> (c % 64)) & 1;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = word(r, c / 64);
    if (v) w |= (uint64_t(1) << (c % 64));
    else w &= ~(uint64_t(1) << (c % 64));
  }

  const uint64_t* row(int r) const { return &bits_[static_cast<size_t>(r) * wpr_]; }
  uint64_t* row(int r) { return &bits_[static_cast<size_t>(r) * wpr_]; }
  int words_per_row() const { return wpr_; }

  void xor_row(int dst, int src);           // row[dst] ^= row[src]
  void swap_rows(int a, int b);

  bool operator==(const GF2Matrix& o) const = default;

  GF2Matrix mul(const GF2Matrix& o) const;
  // y = M x for a column bit-vector x (x.size() == cols()).
  std::vector<uint8_t> apply(const std::vector<uint8_t>& x) const;
  GF2Matrix inverse() const;  // throws SingularMatrix
  bool invertible() const;
  int rank() const;

  // One lowercase-hex string per row; first hex digit covers columns 0..3 with
  // column 0 as its most significant bit.
  std::string to_hex_row(int r) const;
  void set_hex_row(int r, const std::string& hex);

 private:
  uint64_t word(int r, int w) const { return bits_[static_cast<size_t>(r) * wpr_ + w]; }
  uint64_t& word(int r, int w) { return bits_[static_cast<size_t>(r) * wpr_ + w]; }

  int rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<uint64_t> bits_;
};

struct PLU {
  std::vector<int> perm;  // row k of L*U is row perm[k] of A
  GF2Matrix l, u;
};

// Deterministic PLU with the topmost available pivot row. Throws
// SingularMatrix if A is singular. Invariant: A[perm[k]] == (L*U)[k].
PLU plu_decompose(const GF2Matrix& a);

// Emits x <- A x in place on `wires` (|wires| == n): U rows ascending, then L
// rows descending, then the row permutation as REWIREs via cycle
// decomposition. Throws SingularMatrix for singular A.
void synth_inplace(const GF2Matrix& a, Circuit& c, const std::vector<int>& wires);

// Emits out ^= M in (one CNOT per 1-entry).
void synth_outofplace(const GF2Matrix& m, Circuit& c,
                      const std::vector<int>& in, const std::vector<int>& out);

}  // namespace qre
