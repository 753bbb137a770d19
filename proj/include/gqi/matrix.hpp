#pragma once
// Dense complex matrix oracle: Pauli matrices, kron, expm, Hermitian eigen.
// Self-contained; sizes here never exceed 16x16.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gqi {

using cplx = std::complex<double>;

struct CMat {
  int rows = 0, cols = 0;
  std::vector<cplx> a;  // row-major

  CMat() = default;
  CMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  CMat(int r, int c, std::vector<cplx> v) : rows(r), cols(c), a(std::move(v)) {
    if (a.size() != size_t(r) * c) throw std::invalid_argument("bad data size");
  }
  cplx& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const cplx& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  static CMat identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static CMat zero(int r, int c) { return CMat(r, c); }

  double norm_inf() const {  // max |entry|
    double m = 0;
    for (auto& z : a) m = std::max(m, std::abs(z));
    return m;
  }
  double norm_1() const {  // sum of |entries| (crude but monotone)
    double m = 0;
    for (auto& z : a) m += std::abs(z);
    return m;
  }
};

inline CMat operator+(const CMat& x, const CMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("dimension mismatch");
  CMat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
  return r;
}
inline CMat operator-(const CMat& x, const CMat& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("dimension mismatch");
  CMat r = x;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
  return r;
}
inline CMat operator*(const CMat& x, cplx c) {
  CMat r = x;
  for (auto& z : r.a) z *= c;
  return r;
}
inline CMat operator*(cplx c, const CMat& x) { return x * c; }

inline CMat operator*(const CMat& x, const CMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch");
  CMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      cplx xv = x(i, k);
      if (xv == cplx{}) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += xv * y(k, j);
    }
  return r;
}

inline CMat dagger(const CMat& x) {
  CMat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = std::conj(x(i, j));
  return r;
}

inline CMat transpose(const CMat& x) {
  CMat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

inline cplx trace(const CMat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("trace of non-square");
  cplx t = 0;
  for (int i = 0; i < x.rows; ++i) t += x(i, i);
  return t;
}

inline CMat kron(const CMat& x, const CMat& y) {
  CMat r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r(i * y.rows + k, j * y.cols + l) = x(i, j) * y(k, l);
  return r;
}

inline CMat commutator_half_mat(const CMat& x, const CMat& y) {
  return (x * y - y * x) * cplx(0.5);
}

inline CMat pauli(int k) {
  switch (k) {
    case 0: return CMat(2, 2, {1, 0, 0, 1});
    case 1: return CMat(2, 2, {0, 1, 1, 0});
    case 2: return CMat(2, 2, {0, {0, -1}, {0, 1}, 0});
    case 3: return CMat(2, 2, {1, 0, 0, -1});
  }
  throw std::invalid_argument("pauli label out of range");
}

inline CMat expm(const CMat& x, double tol = 1e-14) {
  if (x.rows != x.cols) throw std::invalid_argument("expm of non-square");
  CMat s = x;
  int squarings = 0;
  while (s.norm_1() > 0.5 && squarings < 64) {
    s = s * cplx(0.5);
    ++squarings;
  }
  CMat sum = CMat::identity(x.rows);
  CMat term = CMat::identity(x.rows);
  int n = 0;
  while (term.norm_1() > tol) {
    if (++n > 200) throw std::runtime_error("expm series did not converge");
    term = term * s * cplx(1.0 / n);
    sum = sum + term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

inline cplx det(const CMat& x) {  // LU with partial pivoting
  if (x.rows != x.cols) throw std::invalid_argument("det of non-square");
  CMat m = x;
  int n = m.rows;
  cplx d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    if (std::abs(m(piv, k)) < 1e-300) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      d = -d;
    }
    d *= m(k, k);
    for (int i = k + 1; i < n; ++i) {
      cplx f = m(i, k) / m(k, k);
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

struct EigResult {
  std::vector<double> values;  // ascending
  CMat vectors;                // columns; a = V diag(values) V^dagger
};

// Cyclic complex Jacobi for Hermitian matrices.
inline EigResult eig_hermitian(const CMat& input, double herm_tol = 1e-10) {
  int n = input.rows;
  if (n != input.cols) throw std::invalid_argument("eig of non-square");
  if ((input - dagger(input)).norm_inf() > herm_tol)
    throw std::invalid_argument("eig_hermitian: input not Hermitian");
  CMat m = (input + dagger(input)) * cplx(0.5);
  CMat v = CMat::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off < 1e-14 * std::max(1.0, m.norm_inf())) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        cplx g = m(p, q);
        double ag = std::abs(g);
        if (ag < 1e-300) continue;
        cplx phase = g / ag;  // g = |g| e^{i phi}
        double app = m(p, p).real(), aqq = m(q, q).real();
        double tau = (aqq - app) / (2.0 * ag);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        // columns: [p q] <- [p q] * [[c, s*phase],[-s*conj(phase), c]]
        for (int i = 0; i < n; ++i) {
          cplx mp = m(i, p), mq = m(i, q);
          m(i, p) = c * mp - s * std::conj(phase) * mq;
          m(i, q) = s * phase * mp + c * mq;
          cplx vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * std::conj(phase) * vq;
          v(i, q) = s * phase * vp + c * vq;
        }
        for (int j = 0; j < n; ++j) {
          cplx mp = m(p, j), mq = m(q, j);
          m(p, j) = c * mp - s * phase * mq;
          m(q, j) = s * std::conj(phase) * mp + c * mq;
        }
      }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });
  EigResult r;
  r.values.resize(n);
  r.vectors = CMat(n, n);
  for (int k = 0; k < n; ++k) {
    r.values[k] = m(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) r.vectors(i, k) = v(i, order[k]);
  }
  return r;
}

// Singular values of a real matrix by one-sided (Hestenes) Jacobi;
// accurate for tiny trailing values, which plain J^T J squaring is not.
inline std::vector<double> singular_values(const std::vector<std::vector<double>>& j) {
  size_t rows = j.size(), cols = rows ? j[0].size() : 0;
  std::vector<std::vector<double>> u(cols, std::vector<double>(rows));
  for (size_t c = 0; c < cols; ++c)
    for (size_t r = 0; r < rows; ++r) u[c][r] = j[r][c];  // column copies
  auto dot = [&](size_t x, size_t y) {
    double s = 0;
    for (size_t r = 0; r < rows; ++r) s += u[x][r] * u[y][r];
    return s;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (size_t p = 0; p < cols; ++p)
      for (size_t q = p + 1; q < cols; ++q) {
        double app = dot(p, p), aqq = dot(q, q), apq = dot(p, q);
        if (std::abs(apq) <= 1e-30 + 1e-15 * std::sqrt(app * aqq)) continue;
        rotated = true;
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
        for (size_t r = 0; r < rows; ++r) {
          double xp = u[p][r], xq = u[q][r];
          u[p][r] = c * xp - s * xq;
          u[q][r] = s * xp + c * xq;
        }
      }
    if (!rotated) break;
  }
  std::vector<double> sv(cols);
  for (size_t c = 0; c < cols; ++c) sv[c] = std::sqrt(dot(c, c));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

// Deterministic PRNG (splitmix64) + Box-Muller, so reports are byte-identical
// across standard libraries.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
  uint64_t next_u64() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() {  // [0,1)
    return double(next_u64() >> 11) * 0x1.0p-53;
  }
  double normal() {
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }
};

}  // namespace gqi
