#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hoco/core.hpp"

// Matrices over the prime field F_p. A morphism m -> n is an n x m matrix
// acting on column vectors, so the diagrammatic composite a.b ("a then b")
// is the product Mat(b) * Mat(a).
namespace hoco::matfp {

struct MatFp {
  unsigned p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<unsigned> e;  // row-major, entries in [0, p)

  unsigned at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
  unsigned& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }

  friend bool operator==(const MatFp&, const MatFp&) = default;
};

inline std::string describe(const MatFp& m) {
  std::string s = "{\"cols\":" + std::to_string(m.cols) + ",\"e\":[";
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (r) s += ',';
    s += '[';
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) s += ',';
      s += std::to_string(m.at(r, c));
    }
    s += ']';
  }
  s += "],\"p\":" + std::to_string(m.p) + ",\"rows\":" + std::to_string(m.rows) + "}";
  return s;
}

inline void check_valid(const MatFp& m) {
  if (m.p < 2) throw Error("matrix modulus must be a prime >= 2: " + describe(m));
  if (m.e.size() != m.rows * m.cols)
    throw Error("matrix has " + std::to_string(m.e.size()) + " entries for shape " +
                std::to_string(m.rows) + "x" + std::to_string(m.cols));
  for (unsigned v : m.e)
    if (v >= m.p) throw Error("matrix entry " + std::to_string(v) + " not reduced mod " + std::to_string(m.p));
}

inline MatFp zeros(unsigned p, std::size_t rows, std::size_t cols) {
  return MatFp{p, rows, cols, std::vector<unsigned>(rows * cols, 0)};
}

inline MatFp mat_identity(unsigned p, std::size_t n) {
  MatFp m = zeros(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline MatFp mat(unsigned p, const std::vector<std::vector<unsigned>>& rows_in) {
  MatFp m;
  m.p = p;
  m.rows = rows_in.size();
  m.cols = rows_in.empty() ? 0 : rows_in.front().size();
  for (const auto& row : rows_in) {
    if (row.size() != m.cols) throw Error("ragged matrix literal");
    for (unsigned v : row) m.e.push_back(v % p);
  }
  return m;
}

inline unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime and a != 0 mod p.
  long long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw Error("no inverse for " + std::to_string(a) + " mod " + std::to_string(p));
  return static_cast<unsigned>(((t % p) + p) % p);
}

inline MatFp mul(const MatFp& a, const MatFp& b) {
  if (a.p != b.p) throw Error("matrix modulus mismatch: " + describe(a) + " vs " + describe(b));
  if (a.cols != b.rows)
    throw Error("cannot multiply " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                " by " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
  MatFp r = zeros(a.p, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      unsigned aik = a.at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        r.at(i, j) = (r.at(i, j) + aik * b.at(k, j)) % a.p;
    }
  return r;
}

inline MatFp add(const MatFp& a, const MatFp& b) {
  if (a.p != b.p || a.rows != b.rows || a.cols != b.cols)
    throw Error("matrix shape mismatch in add: " + describe(a) + " vs " + describe(b));
  MatFp r = a;
  for (std::size_t k = 0; k < r.e.size(); ++k) r.e[k] = (r.e[k] + b.e[k]) % r.p;
  return r;
}

inline MatFp neg(const MatFp& a) {
  MatFp r = a;
  for (unsigned& v : r.e) v = (a.p - v) % a.p;
  return r;
}

inline MatFp sub(const MatFp& a, const MatFp& b) { return add(a, neg(b)); }

inline MatFp transpose(const MatFp& a) {
  MatFp r = zeros(a.p, a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
  return r;
}

inline MatFp hstack(const MatFp& a, const MatFp& b) {
  if (a.p != b.p || a.rows != b.rows) throw Error("hstack shape mismatch");
  MatFp r = zeros(a.p, a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) r.at(i, a.cols + j) = b.at(i, j);
  }
  return r;
}

inline MatFp vstack(const MatFp& a, const MatFp& b) {
  if (a.p != b.p || a.cols != b.cols) throw Error("vstack shape mismatch");
  MatFp r = zeros(a.p, a.rows + b.rows, a.cols);
  std::copy(a.e.begin(), a.e.end(), r.e.begin());
  std::copy(b.e.begin(), b.e.end(), r.e.begin() + static_cast<std::ptrdiff_t>(a.e.size()));
  return r;
}

inline MatFp block(const MatFp& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
  if (r0 + nr > a.rows || c0 + nc > a.cols) throw Error("block out of range");
  MatFp r = zeros(a.p, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = a.at(r0 + i, c0 + j);
  return r;
}

inline MatFp direct_sum(const MatFp& a, const MatFp& b) {
  if (a.p != b.p) throw Error("matrix modulus mismatch in direct_sum");
  MatFp r = zeros(a.p, a.rows + b.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) r.at(a.rows + i, a.cols + j) = b.at(i, j);
  return r;
}

// Canonical block morphisms for the decomposition n0 (+) n.
inline MatFp proj1(unsigned p, std::size_t n0, std::size_t n) {
  return hstack(mat_identity(p, n0), zeros(p, n0, n));  // (n0+n) -> n0
}
inline MatFp proj2(unsigned p, std::size_t n0, std::size_t n) {
  return hstack(zeros(p, n, n0), mat_identity(p, n));  // (n0+n) -> n
}
inline MatFp inj1(unsigned p, std::size_t n0, std::size_t n) {
  return vstack(mat_identity(p, n0), zeros(p, n, n0));  // n0 -> (n0+n)
}
inline MatFp inj2(unsigned p, std::size_t n0, std::size_t n) {
  return vstack(zeros(p, n0, n), mat_identity(p, n));  // n -> (n0+n)
}

// In-place row reduction to reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(MatFp& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(sel, j));
    unsigned inv = inv_mod(m.at(row, col), m.p);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = (m.at(row, j) * inv) % m.p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      unsigned factor = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j)
        m.at(i, j) = (m.at(i, j) + (m.p - factor) * m.at(row, j)) % m.p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(MatFp m) { return rref(m).size(); }

// Canonical kernel basis: RREF pivots ascending, then one basis column per
// free column in index order (the free coordinate set to 1). Returned as a
// cols x nullity matrix, i.e. the kernel inclusion Ker(m) -> dom(m).
inline MatFp kernel_basis(const MatFp& m) {
  MatFp r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatFp k = zeros(m.p, m.cols, free_cols.size());
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t j = free_cols[idx];
    k.at(j, idx) = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t)
      k.at(pivots[t], idx) = (m.p - r.at(t, j)) % m.p;
  }
  return k;
}

// Unique solution X of A*X = B (requires A of full column rank and the system
// consistent); used where a universal property guarantees both.
inline MatFp solve_unique(const MatFp& a, const MatFp& b) {
  if (a.p != b.p || a.rows != b.rows) throw Error("solve shape mismatch");
  MatFp aug = hstack(a, b);
  std::vector<std::size_t> pivots = rref(aug);
  for (std::size_t c : pivots)
    if (c >= a.cols) throw Error("linear system inconsistent");
  if (pivots.size() < a.cols) throw Error("linear system underdetermined");
  MatFp x = zeros(a.p, a.cols, b.cols);
  for (std::size_t t = 0; t < pivots.size(); ++t)
    for (std::size_t j = 0; j < b.cols; ++j) x.at(pivots[t], j) = aug.at(t, a.cols + j);
  return x;
}

// Unique solution X of X*A = B.
inline MatFp solve_unique_right(const MatFp& a, const MatFp& b) {
  return transpose(solve_unique(transpose(a), transpose(b)));
}

// Affine system over the entries of an unknown xr x xc matrix X, built from
// constraints of the form L * X * R = B.
struct LinearSystem {
  unsigned p;
  std::size_t xr, xc;
  std::vector<std::vector<unsigned>> rows;  // coefficient rows, xr*xc wide
  std::vector<unsigned> rhs;

  LinearSystem(unsigned p_, std::size_t xr_, std::size_t xc_) : p(p_), xr(xr_), xc(xc_) {}

  void add(const MatFp& l, const MatFp& r, const MatFp& b) {
    if (l.cols != xr || r.rows != xc || b.rows != l.rows || b.cols != r.cols)
      throw Error("linear constraint shape mismatch");
    for (std::size_t i = 0; i < l.rows; ++i)
      for (std::size_t j = 0; j < r.cols; ++j) {
        std::vector<unsigned> row(xr * xc, 0);
        for (std::size_t k = 0; k < xr; ++k) {
          unsigned lik = l.at(i, k);
          if (!lik) continue;
          for (std::size_t m = 0; m < xc; ++m)
            row[k * xc + m] = (row[k * xc + m] + lik * r.at(m, j)) % p;
        }
        rows.push_back(std::move(row));
        rhs.push_back(b.at(i, j));
      }
  }

  // All solutions as matrices, sorted lexicographically by row-major entries.
  std::vector<MatFp> enumerate() const {
    const std::size_t n = xr * xc;
    MatFp aug = zeros(p, rows.size(), n + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = rows[i][j];
      aug.at(i, n) = rhs[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return {};  // inconsistent
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);

    std::vector<unsigned> particular(n, 0);
    for (std::size_t t = 0; t < pivots.size(); ++t) particular[pivots[t]] = aug.at(t, n);

    std::vector<MatFp> out;
    std::vector<unsigned> coeff(free_cols.size(), 0);
    while (true) {
      std::vector<unsigned> v = particular;
      for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        unsigned a = coeff[idx];
        if (!a) continue;
        std::size_t j = free_cols[idx];
        v[j] = (v[j] + a) % p;
        for (std::size_t t = 0; t < pivots.size(); ++t)
          v[pivots[t]] = (v[pivots[t]] + a * (p - aug.at(t, j))) % p;
      }
      out.push_back(MatFp{p, xr, xc, std::move(v)});
      std::size_t k = free_cols.size();
      bool done = true;
      while (k > 0) {
        --k;
        if (++coeff[k] < p) {
          done = false;
          break;
        }
        coeff[k] = 0;
      }
      if (done) break;
    }
    std::sort(out.begin(), out.end(),
              [](const MatFp& a, const MatFp& b) { return a.e < b.e; });
    return out;
  }
};

using MatPushout = PushoutData<std::size_t, MatFp>;

// Canonical quotient q: F^n ->> F^n / col(m). Rows of RREF(m^T) give the
// reduced column-space basis v_t with pivot coordinates p_t; the quotient
// keeps the non-pivot coordinates, sending x[j] to x[j] - sum_t x[p_t]*v_t[j].
inline MatFp cokernel_quotient(const MatFp& m) {
  MatFp bt = transpose(m);
  std::vector<std::size_t> pivots = rref(bt);
  std::vector<bool> is_pivot(m.rows, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < m.rows; ++j)
    if (!is_pivot[j]) kept.push_back(j);
  MatFp q = zeros(m.p, kept.size(), m.rows);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    q.at(r, kept[r]) = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t)
      q.at(r, pivots[t]) = (m.p - bt.at(t, kept[r])) % m.p;
  }
  return q;
}

// All n x m matrices over F_p in lexicographic row-major order.
inline std::vector<MatFp> enumerate_mats(unsigned p, std::size_t rows, std::size_t cols) {
  std::vector<MatFp> out;
  MatFp m = zeros(p, rows, cols);
  if (m.e.empty()) {
    out.push_back(m);
    return out;
  }
  while (true) {
    out.push_back(m);
    std::size_t k = m.e.size();
    while (k > 0) {
      --k;
      if (++m.e[k] < p) break;
      m.e[k] = 0;
      if (k == 0) return out;
    }
  }
}

// Category handle: objects are dimensions, morphisms matrices over F_p. The
// zero space is both initial and terminal.
struct MatCat {
  unsigned p = 2;

  using Obj = std::size_t;
  using Map = MatFp;
  using Pushout = MatPushout;

  Obj dom(const Map& f) const { return f.cols; }
  Obj cod(const Map& f) const { return f.rows; }
  bool obj_eq(Obj a, Obj b) const { return a == b; }
  bool eq(const Map& f, const Map& g) const { return f == g; }
  Map identity(Obj n) const { return mat_identity(p, n); }
  Map compose(const Map& f, const Map& g) const { return mul(g, f); }

  Obj initial() const { return 0; }
  Map initial_arrow(Obj n) const { return zeros(p, n, 0); }
  Obj terminal() const { return 0; }
  Map terminal_arrow(Obj n) const { return zeros(p, 0, n); }

  Pushout pushout(const Map& f, const Map& g) const {
    if (f.cols != g.cols)
      throw Error("pushout span domains differ: " + describe(f) + " vs " + describe(g));
    MatFp stacked = vstack(f, neg(g));
    MatFp q = cokernel_quotient(stacked);
    Pushout po;
    po.apex = q.rows;
    po.leg_b = block(q, 0, 0, q.rows, f.rows);
    po.leg_c = block(q, 0, f.rows, q.rows, g.rows);
    return po;
  }

  Map copair(const Pushout& po, const Map& x, const Map& y) const {
    if (x.rows != y.rows) throw Error("copair targets differ");
    if (x.cols != po.leg_b.cols || y.cols != po.leg_c.cols)
      throw Error("copair legs do not match the pushout");
    MatFp q = hstack(po.leg_b, po.leg_c);
    MatFp b = hstack(x, y);
    MatFp qt = transpose(q), bt = transpose(b);
    MatFp aug = hstack(qt, bt);
    std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t c : pivots)
      if (c >= qt.cols) throw Error("copair: cocone does not commute");
    MatFp xt = zeros(p, qt.cols, bt.cols);
    for (std::size_t t = 0; t < pivots.size(); ++t)
      for (std::size_t j = 0; j < bt.cols; ++j) xt.at(pivots[t], j) = aug.at(t, qt.cols + j);
    return transpose(xt);
  }

  std::vector<Obj> objects(std::size_t bound) const {
    std::vector<Obj> out(bound + 1);
    std::iota(out.begin(), out.end(), std::size_t{0});
    return out;
  }
  std::vector<Map> hom(Obj m, Obj n) const { return enumerate_mats(p, n, m); }

  std::string describe_obj(Obj n) const { return std::to_string(n); }
  std::string describe_map(const Map& f) const { return describe(f); }
};

}  // namespace hoco::matfp
