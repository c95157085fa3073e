#include "gf2.hpp"

#include <bit>
#include <numeric>

namespace qre {

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void GF2Matrix::xor_row(int dst, int src) {
  uint64_t* d = row(dst);
  const uint64_t* s = row(src);
  for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

void GF2Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  uint64_t* ra = row(a);
  uint64_t* rb = row(b);
  for (int w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
}

GF2Matrix GF2Matrix::mul(const GF2Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("GF2Matrix::mul shape mismatch");
  GF2Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    const uint64_t* a = row(i);
    uint64_t* out = r.row(i);
    for (int w = 0; w < wpr_; ++w) {
      uint64_t bits = a[w];
      while (bits) {
        int j = 64 * w + std::countr_zero(bits);
        bits &= bits - 1;
        const uint64_t* b = o.row(j);
        for (int v = 0; v < o.wpr_; ++v) out[v] ^= b[v];
      }
    }
  }
  return r;
}

std::vector<uint8_t> GF2Matrix::apply(const std::vector<uint8_t>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("GF2Matrix::apply size mismatch");
  std::vector<uint64_t> packed(static_cast<size_t>(wpr_), 0);
  for (int j = 0; j < cols_; ++j)
    if (x[static_cast<size_t>(j)]) packed[static_cast<size_t>(j / 64)] |= uint64_t(1) << (j % 64);
  std::vector<uint8_t> y(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    const uint64_t* r = row(i);
    uint64_t acc = 0;
    for (int w = 0; w < wpr_; ++w) acc ^= r[w] & packed[static_cast<size_t>(w)];
    y[static_cast<size_t>(i)] = static_cast<uint8_t>(std::popcount(acc) & 1);
  }
  return y;
}

GF2Matrix GF2Matrix::inverse() const {
  if (rows_ != cols_) throw SingularMatrix("inverse of non-square matrix");
  GF2Matrix a = *this;
  GF2Matrix inv = identity(rows_);
  for (int k = 0; k < rows_; ++k) {
    int piv = -1;
    for (int r = k; r < rows_; ++r)
      if (a.get(r, k)) { piv = r; break; }
    if (piv < 0) throw SingularMatrix("matrix is singular");
    a.swap_rows(k, piv);
    inv.swap_rows(k, piv);
    for (int r = 0; r < rows_; ++r) {
      if (r != k && a.get(r, k)) {
        a.xor_row(r, k);
        inv.xor_row(r, k);
      }
    }
  }
  return inv;
}

int GF2Matrix::rank() const {
  GF2Matrix a = *this;
  int rk = 0;
  for (int c = 0; c < cols_ && rk < rows_; ++c) {
    int piv = -1;
    for (int r = rk; r < rows_; ++r)
      if (a.get(r, c)) { piv = r; break; }
    if (piv < 0) continue;
    a.swap_rows(rk, piv);
    for (int r = rk + 1; r < rows_; ++r)
      if (a.get(r, c)) a.xor_row(r, rk);
    ++rk;
  }
  return rk;
}

bool GF2Matrix::invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

std::string GF2Matrix::to_hex_row(int r) const {
  int digits = (cols_ + 3) / 4;
  std::string s(static_cast<size_t>(digits), '0');
  for (int c = 0; c < cols_; ++c) {
    if (get(r, c)) {
      int d = c / 4;
      int v = s[static_cast<size_t>(d)] <= '9' ? s[static_cast<size_t>(d)] - '0'
                                               : s[static_cast<size_t>(d)] - 'a' + 10;
      v |= 8 >> (c % 4);
      s[static_cast<size_t>(d)] = static_cast<char>(v < 10 ? '0' + v : 'a' + v - 10);
    }
  }
  return s;
}

void GF2Matrix::set_hex_row(int r, const std::string& hex) {
  if (static_cast<int>(hex.size()) != (cols_ + 3) / 4)
    throw std::invalid_argument("hex row has wrong length");
  for (int c = 0; c < cols_; ++c) {
    char ch = hex[static_cast<size_t>(c / 4)];
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw std::invalid_argument("bad hex digit in matrix row");
    set(r, c, (v >> (3 - c % 4)) & 1);
  }
}

PLU plu_decompose(const GF2Matrix& a) {
  if (a.rows() != a.cols()) throw SingularMatrix("PLU of non-square matrix");
  int n = a.rows();
  PLU res;
  res.u = a;
  res.l = GF2Matrix::identity(n);
  res.perm.resize(static_cast<size_t>(n));
  std::iota(res.perm.begin(), res.perm.end(), 0);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (res.u.get(r, k)) { piv = r; break; }
    if (piv < 0) throw SingularMatrix("matrix is singular");
    if (piv != k) {
      res.u.swap_rows(k, piv);
      std::swap(res.perm[static_cast<size_t>(k)], res.perm[static_cast<size_t>(piv)]);
      // Swap the already-built strictly-lower part of L.
      for (int c = 0; c < k; ++c) {
        bool t = res.l.get(k, c);
        res.l.set(k, c, res.l.get(piv, c));
        res.l.set(piv, c, t);
      }
    }
    for (int r = k + 1; r < n; ++r) {
      if (res.u.get(r, k)) {
        res.u.xor_row(r, k);
        res.l.set(r, k, true);
      }
    }
  }
  return res;
}

void synth_inplace(const GF2Matrix& a, Circuit& c, const std::vector<int>& wires) {
  int n = a.rows();
  if (a.cols() != n || static_cast<int>(wires.size()) != n)
    throw std::invalid_argument("synth_inplace shape mismatch");
  PLU plu = plu_decompose(a);
  // x <- U x: row i depends only on rows > i, so process ascending.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (plu.u.get(i, j))
        c.cnot(wires[static_cast<size_t>(j)], wires[static_cast<size_t>(i)]);
  // x <- L x: row i depends only on rows < i, so process descending.
  for (int i = n - 1; i >= 0; --i)
    for (int j = 0; j < i; ++j)
      if (plu.l.get(i, j))
        c.cnot(wires[static_cast<size_t>(j)], wires[static_cast<size_t>(i)]);
  // Value at position k must end at position perm[k].
  std::vector<int> q = plu.perm;
  for (int i = 0; i < n; ++i) {
    while (q[static_cast<size_t>(i)] != i) {
      int j = q[static_cast<size_t>(i)];
      c.rewire(wires[static_cast<size_t>(i)], wires[static_cast<size_t>(j)]);
      std::swap(q[static_cast<size_t>(i)], q[static_cast<size_t>(j)]);
    }
  }
}

void synth_outofplace(const GF2Matrix& m, Circuit& c,
                      const std::vector<int>& in, const std::vector<int>& out) {
  if (static_cast<int>(in.size()) != m.cols() ||
      static_cast<int>(out.size()) != m.rows())
    throw std::invalid_argument("synth_outofplace shape mismatch");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(i, j))
        c.cnot(in[static_cast<size_t>(j)], out[static_cast<size_t>(i)]);
}

}  // namespace qre
