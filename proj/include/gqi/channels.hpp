#pragma once
// Kraus sums M_k rho = rho + (1/4) e_k (rho - 1/4) e_k over the six basis
// vectors of G(6,0), their lift to 16x16 superoperators on vectorized 4x4
// matrices, and Choi-spectrum checks.

#include <array>
#include <stdexcept>
#include <vector>

#include "gqi/matrix.hpp"
#include "gqi/multivector.hpp"
#include "gqi/twoqubit.hpp"

namespace gqi {

inline Multivector basis_vector(int k) {  // k in 1..6: e1..e3, f1..f3
  if (k < 1 || k > 6) throw std::invalid_argument("basis vector index");
  return Multivector::blade(kG60, {k}, 1.0);
}

inline Multivector kraus_apply(int k, const Multivector& rho) {
  if (std::abs(scalar_part(rho) - 0.25) > 1e-10)
    throw std::invalid_argument("kraus_apply: input not trace-normalized");
  Multivector e = basis_vector(k);
  Multivector hat = rho + Multivector::scalar(kG60, -0.25);
  return rho + (e * hat * e) * 0.25;
}

// linear form (subtracts the scalar part instead of the constant 1/4);
// agrees with kraus_apply on trace-normalized inputs
inline Multivector kraus_linear(int k, const Multivector& x) {
  Multivector e = basis_vector(k);
  Multivector hat = x + Multivector::scalar(kG60, -scalar_part(x));
  return x + (e * hat * e) * 0.25;
}

// column-stacking: vec(M) index = 4*col + row
inline std::vector<cplx> vec_of(const CMat& m) {
  std::vector<cplx> v(16);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) v[4 * j + i] = m(i, j);
  return v;
}

inline CMat unvec(const std::vector<cplx>& v) {
  CMat m(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) m(i, j) = v[4 * j + i];
  return m;
}

// 16x16 matrix of the channel on vectorized 4x4 matrices, built from the
// images of the Hermitian Pauli basis and extended complex-linearly
inline CMat superoperator_of(int k) {
  std::array<CMat, 16> pimg;  // image of sigma_a x sigma_b
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CMat p = kron(pauli(a), pauli(b));
      pimg[a * 4 + b] = even_to_matrix(kraus_linear(k, matrix_to_even(p)));
    }
  CMat s(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {  // input E_ij
      CMat out(4, 4);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          // coefficient of sigma_a x sigma_b in E_ij: tr(P E_ij)/4 = P(j,i)/4
          cplx c = kron(pauli(a), pauli(b))(j, i) * 0.25;
          out = out + pimg[a * 4 + b] * c;
        }
      auto v = vec_of(out);
      for (int r = 0; r < 16; ++r) s(r, 4 * j + i) = v[r];
    }
  return s;
}

inline CMat apply_superoperator(const CMat& s, const CMat& rho) {
  std::vector<cplx> v = vec_of(rho), w(16, cplx{});
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) w[r] += s(r, c) * v[c];
  return unvec(w);
}

inline CMat choi_of(const CMat& s) {
  CMat c(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)  // Phi(E_ij) sits in block (i,j)
      for (int kk = 0; kk < 4; ++kk)
        for (int l = 0; l < 4; ++l)
          c(4 * i + kk, 4 * j + l) = s(4 * l + kk, 4 * j + i);
  return c;
}

struct ChoiReport {
  double min_eig = 0;
  bool trace_preserving = false;
  bool boundary = false;
  bool completely_positive = false;
  double hermiticity_dev = 0;
  std::vector<double> eigenvalues;  // ascending
};

inline ChoiReport choi_check(const CMat& s) {
  CMat c = choi_of(s);
  ChoiReport rep;
  rep.hermiticity_dev = (c - dagger(c)).norm_inf();
  if (rep.hermiticity_dev > 1e-10)
    throw std::runtime_error("choi_check: Choi matrix not Hermitian");
  auto e = eig_hermitian(c);
  rep.eigenvalues = e.values;
  rep.min_eig = e.values.front();
  rep.completely_positive = rep.min_eig >= -1e-9;
  double tp_dev = 0;  // Tr_out(Choi) = I
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx t = 0;
      for (int kk = 0; kk < 4; ++kk) t += c(4 * i + kk, 4 * j + kk);
      tp_dev = std::max(tp_dev, std::abs(t - (i == j ? cplx{1} : cplx{0})));
    }
  rep.trace_preserving = tp_dev < 1e-10;
  int near_zero = 0, others_ok = 1;
  for (double v : e.values) {
    if (std::abs(v) <= 1e-9)
      ++near_zero;
    else if (v < -1e-9)
      others_ok = 0;
  }
  rep.boundary = near_zero > 0 && others_ok;
  return rep;
}

}  // namespace gqi
