#pragma once
// Two-qubit layer in G(6,0): the fifteen bivector generators G_ij, the
// even-subalgebra <-> 4x4 matrix translation, state ideals, density
// operators, Schmidt parametrization, purity moments, entanglement entropy.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gqi/matrix.hpp"
#include "gqi/multivector.hpp"

namespace gqi {

struct GeneratorIndex {
  int i = 0, j = 0;  // in {0..3}^2 minus (0,0)
  friend bool operator==(GeneratorIndex a, GeneratorIndex b) {
    return a.i == b.i && a.j == b.j;
  }
  friend bool operator<(GeneratorIndex a, GeneratorIndex b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  }
};

inline const std::vector<GeneratorIndex>& generator_indices() {
  static const std::vector<GeneratorIndex> v = [] {
    std::vector<GeneratorIndex> r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i || j) r.push_back({i, j});
    return r;
  }();
  return v;
}

struct GeneratorConvention {
  bool delta_sign = false;  // extra (-1)^{delta_ij} factor on G_ii
};

// G_{10} = e2e3 (cyclic), G_{0j} likewise in the f's, G_{ij} = e_i f_j.
inline Multivector generator_bivector(GeneratorIndex g,
                                      GeneratorConvention conv = {}) {
  if (g.i < 0 || g.i > 3 || g.j < 0 || g.j > 3 || (g.i == 0 && g.j == 0))
    throw std::invalid_argument("invalid generator index");
  static const int cyc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
  if (g.j == 0) {
    int a = cyc[g.i][0], b = cyc[g.i][1];
    double sgn = a < b ? 1.0 : -1.0;
    return Multivector::blade(kG60, {std::min(a, b), std::max(a, b)}, sgn);
  }
  if (g.i == 0) {
    int a = cyc[g.j][0] + 3, b = cyc[g.j][1] + 3;
    double sgn = a < b ? 1.0 : -1.0;
    return Multivector::blade(kG60, {std::min(a, b), std::max(a, b)}, sgn);
  }
  double sgn = (conv.delta_sign && g.i == g.j) ? -1.0 : 1.0;
  return Multivector::blade(kG60, {g.i, g.j + 3}, sgn);
}

inline CMat generator_matrix(GeneratorIndex g) {
  if (g.i < 0 || g.i > 3 || g.j < 0 || g.j > 3 || (g.i == 0 && g.j == 0))
    throw std::invalid_argument("invalid generator index");
  return kron(pauli(g.i), pauli(g.j)) * cplx(0, 1);
}

inline Multivector G(int i, int j, GeneratorConvention conv = {}) {
  return generator_bivector({i, j}, conv);
}

// ---- even subalgebra <-> 4x4 matrices -------------------------------------

namespace detail {
// signed generator for an ascending 0-based bit pair (a<b) naming blade
// e_{a+1} e_{b+1} (bits 0..2 = e1..e3, bits 3..5 = f1..f3)
inline std::pair<GeneratorIndex, double> pair_generator(int a, int b) {
  if (b < 3) {  // e-e pair
    if (a == 0 && b == 1) return {{3, 0}, 1.0};
    if (a == 0 && b == 2) return {{2, 0}, -1.0};
    return {{1, 0}, 1.0};  // (1,2)
  }
  if (a >= 3) {  // f-f pair
    if (a == 3 && b == 4) return {{0, 3}, 1.0};
    if (a == 3 && b == 5) return {{0, 2}, -1.0};
    return {{0, 1}, 1.0};  // (4,5)
  }
  return {{a + 1, b - 2}, 1.0};  // e_i f_j
}

inline CMat mat_of_even_blade(uint32_t mask) {
  CMat m = CMat::identity(4);
  std::vector<int> bits;
  for (int j = 0; j < 6; ++j)
    if (mask >> j & 1u) bits.push_back(j);
  for (size_t k = 0; k < bits.size(); k += 2) {
    auto [g, sgn] = pair_generator(bits[k], bits[k + 1]);
    m = m * (generator_matrix(g) * cplx(sgn));
  }
  return m;
}

inline const std::array<CMat, 64>& even_blade_images() {
  static const std::array<CMat, 64> imgs = [] {
    std::array<CMat, 64> r;
    for (uint32_t m = 0; m < 64; ++m)
      if (!(grade_of(m) & 1)) r[m] = mat_of_even_blade(m);
    return r;
  }();
  return imgs;
}
}  // namespace detail

// Linear bijection between the 32-dimensional real even subalgebra of G(6,0)
// and the 4x4 complex matrices, fixed by factoring even blades into ordered
// bivector-generator pairs (a multiplicative correspondence).
inline CMat even_to_matrix(const Multivector& x) {
  if (!(x.sig == kG60)) throw std::invalid_argument("expected G(6,0) element");
  if (!x.is_even()) throw std::invalid_argument("odd-grade content present");
  CMat m(4, 4);
  for (auto& [mask, c] : x.terms) m = m + detail::even_blade_images()[mask] * cplx(c);
  return m;
}

inline Multivector matrix_to_even(const CMat& m) {
  if (m.rows != 4 || m.cols != 4) throw std::invalid_argument("expected 4x4");
  // Each Pauli pair sigma_a x sigma_b is hit by exactly two even blades, one
  // with a real weight and one with an imaginary weight; split accordingly.
  struct Entry {
    uint32_t mask;
    cplx w;  // image = w * sigma_a x sigma_b
  };
  static const auto table = [] {
    std::array<std::vector<Entry>, 16> t;
    for (uint32_t mask = 0; mask < 64; ++mask) {
      if (grade_of(mask) & 1) continue;
      const CMat& img = detail::even_blade_images()[mask];
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          CMat p = kron(pauli(a), pauli(b));
          cplx w = trace(dagger(p) * img) * 0.25;
          if (std::abs(w) > 0.5) t[a * 4 + b].push_back({mask, w});
        }
    }
    return t;
  }();
  Multivector out(kG60);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      cplx c = trace(dagger(kron(pauli(a), pauli(b))) * m) * 0.25;
      for (const auto& e : table[a * 4 + b]) {
        double coeff = std::abs(e.w.real()) > 0.5
                           ? c.real() / e.w.real()
                           : c.imag() / e.w.imag();
        out.set(e.mask, out.coeff(e.mask) + coeff);
      }
    }
  return out;
}

// ---- isomorphism verification ---------------------------------------------

struct IsoReport {
  bool pass = false;
  double max_bracket_dev = 0;     // 225-pair commutator sweep
  double max_family_dev = 0;      // the six relation families, verbatim
  double max_local_product_dev = 0;  // geometric vs matrix product, local 3-D
  std::string note;
};

inline double bracket_sweep(GeneratorConvention conv) {
  double maxdev = 0;
  const auto& gi = generator_indices();
  std::vector<Multivector> gens;
  std::vector<CMat> mats;
  for (auto g : gi) {
    gens.push_back(generator_bivector(g, conv));
    mats.push_back(generator_matrix(g));
  }
  for (size_t a = 0; a < gi.size(); ++a)
    for (size_t b = 0; b < gi.size(); ++b) {
      Multivector lhs = commutator_half(gens[a], gens[b]);
      CMat m = commutator_half_mat(mats[a], mats[b]);
      // express the matrix bracket in the generator basis and pull back
      Multivector rhs(kG60);
      CMat rec(4, 4);
      for (size_t k = 0; k < gi.size(); ++k) {
        double co = (trace(dagger(mats[k]) * m) * 0.25).real();
        if (std::abs(co) > 1e-14) {
          rhs = rhs + gens[k] * co;
          rec = rec + mats[k] * cplx(co);
        }
      }
      maxdev = std::max(maxdev, (lhs - rhs).norm_inf());
      maxdev = std::max(maxdev, (rec - m).norm_inf());
    }
  return maxdev;
}

inline IsoReport verify_isomorphism(GeneratorConvention conv = {}) {
  IsoReport rep;
  rep.max_bracket_dev = bracket_sweep(conv);
  auto dev = [&](const Multivector& x, const Multivector& y) {
    rep.max_family_dev = std::max(rep.max_family_dev, (x - y).norm_inf());
  };
  auto Gc = [&](int i, int j) { return generator_bivector({i, j}, conv); };
  Multivector zero(kG60);
  // the six stated relation families (cyclic i,j,k and l a free index)
  for (int c = 0; c < 3; ++c) {
    int i = 1 + c, j = 1 + (c + 1) % 3, k = 1 + (c + 2) % 3;
    dev(commutator_half(Gc(i, 0), Gc(j, 0)), -Gc(k, 0));
    dev(commutator_half(Gc(0, i), Gc(0, j)), -Gc(0, k));
    for (int l = 1; l <= 3; ++l) {
      dev(commutator_half(Gc(i, 0), Gc(j, l)), -Gc(k, l));
      dev(commutator_half(Gc(0, i), Gc(l, j)), -Gc(l, k));
      dev(commutator_half(Gc(i, l), Gc(j, l)), -Gc(k, 0));
      dev(commutator_half(Gc(l, i), Gc(l, j)), -Gc(0, k));
    }
    for (int l = 1; l <= 3; ++l)
      for (int m = 1; m <= 3; ++m)
        if (l != m) dev(commutator_half(Gc(i, l), Gc(j, m)), zero);
  }
  for (auto a : generator_indices())
    for (auto b : generator_indices())  // disjoint-support pairs commute
      if (a.i != b.i && a.j != b.j && a.i && a.j && b.i && b.j)
        dev(commutator_half(Gc(a.i, a.j), Gc(b.i, b.j)), zero);
  // geometric product agrees with the matrix product inside each local family
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CMat lhs = even_to_matrix(Gc(i, 0) * Gc(j, 0));
      CMat rhs = generator_matrix({i, 0}) * generator_matrix({j, 0});
      rep.max_local_product_dev =
          std::max(rep.max_local_product_dev, (lhs - rhs).norm_inf());
      lhs = even_to_matrix(Gc(0, i) * Gc(0, j));
      rhs = generator_matrix({0, i}) * generator_matrix({0, j});
      rep.max_local_product_dev =
          std::max(rep.max_local_product_dev, (lhs - rhs).norm_inf());
    }
  rep.pass = rep.max_bracket_dev < 1e-12 && rep.max_family_dev < 1e-12 &&
             rep.max_local_product_dev < 1e-12;
  rep.note = conv.delta_sign ? "with (-1)^{delta_ij} factor"
                             : "without (-1)^{delta_ij} factor";
  return rep;
}

// ---- states ---------------------------------------------------------------

// Commuting idempotents picking out the reference state |00>:
// P31 = (1 + I G30)/2, P32 = (1 + I G03)/2 (sign fixed by requiring the
// matrix image of their product to be diag(1,0,0,0)).
inline const Multivector& idempotent_p31() {
  static const Multivector p =
      (Multivector::scalar(kG60, 1.0) + pseudoscalar(kG60) * G(3, 0)) * 0.5;
  return p;
}
inline const Multivector& idempotent_p32() {
  static const Multivector p =
      (Multivector::scalar(kG60, 1.0) + pseudoscalar(kG60) * G(0, 3)) * 0.5;
  return p;
}
inline const Multivector& reference_projector() {  // P31 * P32
  static const Multivector p = idempotent_p31() * idempotent_p32();
  return p;
}

struct SchmidtParams {
  double rho = 1.0;  // magnitude
  double phi = 0, phi1 = 0, phi2 = 0;  // global phase, azimuthal angles
  double theta1 = 0, theta2 = 0;       // altitudinal angles
  double tau = 0, sigma = 0;           // sum-phase, entanglement angle
};

// Parameters printed alongside the singlet example; they do not reproduce
// the singlet ideal (see singlet_parameter_discrepancy).
inline SchmidtParams singlet_params_printed() {
  SchmidtParams p;
  p.theta2 = M_PI;
  p.sigma = -M_PI / 2;
  return p;
}

// Corrected parameters that do produce Psi = (G20 - G02)/sqrt(2) exactly
// under the conventions above.
inline SchmidtParams singlet_params_corrected() {
  SchmidtParams p;
  p.phi = -3 * M_PI / 4;
  p.phi2 = M_PI;
  p.theta2 = M_PI;
  p.tau = -M_PI / 4;
  p.sigma = -M_PI / 2;
  return p;
}

struct StateIdeal {
  Multivector psi;      // Psi * P31 * P32, element of the even subalgebra
  Multivector rotor;    // the Psi factor alone (rho=1 => unit rotor)
  double magnitude = 1.0;
};

// Psi = rho e^{-I phi} exp(-phi1/2 G30 - phi2/2 G03)
//           exp(-theta1/2 G20 - theta2/2 G02)
//           exp(-tau/2 (G30+G03)) exp(-sigma/2 G22) P31 P32
inline StateIdeal state_from_schmidt(const SchmidtParams& p) {
  Multivector I = pseudoscalar(kG60);
  Multivector r = exp_even(I * -p.phi);
  r = r * exp_even(G(3, 0) * (-p.phi1 / 2) + G(0, 3) * (-p.phi2 / 2));
  r = r * exp_even(G(2, 0) * (-p.theta1 / 2) + G(0, 2) * (-p.theta2 / 2));
  r = r * exp_even((G(3, 0) + G(0, 3)) * (-p.tau / 2));
  r = r * exp_even(G(2, 2) * (-p.sigma / 2));
  StateIdeal s;
  s.rotor = r;
  s.magnitude = p.rho;
  s.psi = (r * p.rho) * reference_projector();
  return s;
}

// rho = Psi P31 P32 ~Psi = psi * reverse(psi) (the projector is
// reversion-symmetric and idempotent).
inline Multivector density_from_state(const StateIdeal& s) {
  if (std::abs(s.magnitude - 1.0) > 1e-10)
    throw std::invalid_argument("density_from_state expects rho = 1");
  return s.psi * reverse(s.psi);
}

inline Multivector singlet_ideal() {
  return (G(2, 0) - G(0, 2)) * (1.0 / std::sqrt(2.0)) * reference_projector();
}

inline Multivector singlet_density_printed() {
  Multivector I = pseudoscalar(kG60);
  return (Multivector::scalar(kG60, 1.0) - I * G(1, 1) - I * G(2, 2) -
          I * G(3, 3)) *
         0.25;
}

struct PurityMoments {
  double m2 = 0, m3 = 0, m4 = 0;
  bool within_bounds() const {
    return m2 <= 3.0 / 16 + 1e-12 && m3 <= 3.0 / 32 + 1e-12 &&
           m4 <= 15.0 / 128 + 1e-12;
  }
};

inline PurityMoments purity_moments(const Multivector& rho) {
  if (std::abs(scalar_part(rho) - 0.25) > 1e-10)
    throw std::invalid_argument("purity_moments expects trace-normalized rho");
  Multivector hat = rho - Multivector::scalar(kG60, 0.25);
  Multivector h2 = hat * hat;
  PurityMoments m;
  m.m2 = scalar_part(h2);
  m.m3 = scalar_part(h2 * hat);
  m.m4 = scalar_part(h2 * h2);
  return m;
}

inline double xlogx(double x) { return x > 0 ? x * std::log(x) : 0.0; }

// Entropy formula as displayed: -cos(s/2)log cos(s/2) - sin(s/2)log sin(s/2).
inline double entanglement_entropy_displayed(const SchmidtParams& p,
                                             bool base2 = false) {
  double c = std::abs(std::cos(p.sigma / 2)), s = std::abs(std::sin(p.sigma / 2));
  double e = -xlogx(c) - xlogx(s);
  return base2 ? e / std::log(2.0) : e;
}

// Standard von Neumann entropy of the reduced state of the matrix image.
inline double entanglement_entropy_standard(const SchmidtParams& p,
                                            bool base2 = false) {
  StateIdeal s = state_from_schmidt(p);
  CMat m = even_to_matrix(s.psi * (1.0 / std::max(p.rho, 1e-300)));
  // first column is the Hilbert-space state
  std::array<cplx, 4> v{m(0, 0), m(1, 0), m(2, 0), m(3, 0)};
  CMat red(2, 2);  // partial trace over the second qubit
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        red(i, j) += v[i * 2 + k] * std::conj(v[j * 2 + k]);
  auto eig = eig_hermitian(red);
  double e = 0;
  for (double l : eig.values) e -= xlogx(std::max(l, 0.0));
  return base2 ? e / std::log(2.0) : e;
}

}  // namespace gqi
