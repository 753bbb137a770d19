#pragma once
// Graph model of the bivector basis, Cartan splits and subalgebras,
// factorization verification for Q / Q' / SWAP, KAK decomposition of SU(4),
// conjugation tables, and the 7-set generator-sequence rank check.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gqi/matrix.hpp"
#include "gqi/multivector.hpp"
#include "gqi/twoqubit.hpp"

namespace gqi {

// ---- reference unitaries ---------------------------------------------------

inline CMat bell_map_q() {  // columns are Bell states
  const double r = 1.0 / std::sqrt(2.0);
  cplx i{0, 1};
  return CMat(4, 4,
              {r, 0, 0, r * i,  //
               0, r * i, r, 0,  //
               0, r * i, -r, 0,  //
               r, 0, 0, -r * i});
}

inline CMat bell_map_qprime() {
  const double r = 1.0 / std::sqrt(2.0);
  return CMat(4, 4,
              {r, 0, 0, r,   //
               0, r, r, 0,   //
               0, -r, r, 0,  //
               -r, 0, 0, r});
}

inline CMat swap_matrix() {
  CMat m(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

// ---- generator graph / Cartan splits ---------------------------------------

// vertex numbering 0..5 = e1,e2,e3,f1,f2,f3
inline std::pair<int, int> generator_edge(GeneratorIndex g) {
  static const int cyc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
  if (g.j == 0) return {cyc[g.i][0] - 1, cyc[g.i][1] - 1};
  if (g.i == 0) return {cyc[g.j][0] + 2, cyc[g.j][1] + 2};
  return {g.i - 1, g.j + 2};
}

struct CartanSplit {
  uint32_t side_a = 0;                  // vertex subset (bitmask over 0..5)
  std::vector<GeneratorIndex> g, m;     // within-side and crossing edges
};

inline CartanSplit split_from_bipartition(uint32_t side_a) {
  side_a &= 63u;
  if (side_a == 0 || side_a == 63u)
    throw std::invalid_argument("trivial bipartition");
  CartanSplit s;
  s.side_a = side_a;
  for (auto gi : generator_indices()) {
    auto [u, v] = generator_edge(gi);
    bool au = side_a >> u & 1u, av = side_a >> v & 1u;
    (au == av ? s.g : s.m).push_back(gi);
  }
  return s;
}

// max coefficient of c outside the span of the given basis generators
inline double span_residual(const Multivector& c,
                            const std::vector<GeneratorIndex>& basis) {
  std::set<uint32_t> masks;
  for (auto g : basis)
    for (auto& [k, v] : generator_bivector(g).terms) masks.insert(k);
  double r = 0;
  for (auto& [k, v] : c.terms)
    if (!masks.count(k)) r = std::max(r, std::abs(v));
  return r;
}

// residual of [g,g] subset g, [g,m] subset m, [m,m] subset g
inline double cartan_conditions_residual(const CartanSplit& s) {
  double r = 0;
  auto biv = [](GeneratorIndex g) { return generator_bivector(g); };
  for (auto a : s.g)
    for (auto b : s.g)
      r = std::max(r, span_residual(commutator_half(biv(a), biv(b)), s.g));
  for (auto a : s.g)
    for (auto b : s.m)
      r = std::max(r, span_residual(commutator_half(biv(a), biv(b)), s.m));
  for (auto a : s.m)
    for (auto b : s.m)
      r = std::max(r, span_residual(commutator_half(biv(a), biv(b)), s.g));
  return r;
}

// maximal pairwise-commuting subsets of the crossing set (matchings)
inline std::vector<std::vector<GeneratorIndex>> cartan_subalgebras(
    const CartanSplit& s) {
  int n = int(s.m.size());
  auto disjoint = [&](int a, int b) {
    auto [u1, v1] = generator_edge(s.m[a]);
    auto [u2, v2] = generator_edge(s.m[b]);
    return u1 != u2 && u1 != v2 && v1 != u2 && v1 != v2;
  };
  std::vector<std::vector<GeneratorIndex>> out;
  for (uint32_t sub = 1; sub < (1u << n); ++sub) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (sub >> a & 1u)
        for (int b = a + 1; b < n && ok; ++b)
          if ((sub >> b & 1u) && !disjoint(a, b)) ok = false;
    if (!ok) continue;
    bool maximal = true;  // no further crossing edge commutes with all chosen
    for (int c = 0; c < n && maximal; ++c) {
      if (sub >> c & 1u) continue;
      bool fits = true;
      for (int a = 0; a < n && fits; ++a)
        if ((sub >> a & 1u) && !disjoint(a, c)) fits = false;
      if (fits) maximal = false;
    }
    if (!maximal) continue;
    std::vector<GeneratorIndex> h;
    for (int a = 0; a < n; ++a)
      if (sub >> a & 1u) h.push_back(s.m[a]);
    out.push_back(h);
  }
  return out;
}

// ---- factorizations ---------------------------------------------------------

struct Factor {
  std::vector<std::pair<GeneratorIndex, double>> terms;
};

struct Factorization {
  std::vector<Factor> factors;  // listed left-to-right; applied right-to-left
  double phase = 0.0;           // matrix-side global phase e^{i phase}
};

inline Multivector factor_exponent(const Factor& f) {
  Multivector b(kG60);
  for (auto& [g, c] : f.terms) b = b + generator_bivector(g) * c;
  return b;
}

struct ComposedFactorization {
  Multivector rotor{kG60};
  CMat matrix;  // e^{i phase} * even_to_matrix(rotor)
};

inline ComposedFactorization compose_factorization(const Factorization& f) {
  ComposedFactorization out;
  out.rotor = Multivector::scalar(kG60, 1.0);
  for (const auto& fac : f.factors)
    out.rotor = out.rotor * exp_even(factor_exponent(fac));
  out.matrix = even_to_matrix(out.rotor) * std::polar(1.0, f.phase);
  return out;
}

struct PhaseMatch {
  bool equivalent = false;
  double phase = 0.0;
  double residual = 0.0;
};

inline PhaseMatch phase_equivalent(const CMat& u, const CMat& v,
                                   double tol = 1e-10) {
  for (const CMat* m : {&u, &v})
    if ((dagger(*m) * *m - CMat::identity(m->rows)).norm_inf() > 1e-6)
      throw std::invalid_argument("phase_equivalent: non-unitary input");
  cplx t = trace(dagger(v) * u);
  double alpha = std::abs(t) > 1e-14 ? std::arg(t) : 0.0;
  PhaseMatch r;
  r.phase = alpha;
  r.residual = (u - v * std::polar(1.0, alpha)).norm_inf();
  r.equivalent = r.residual < tol;
  return r;
}

// Eq.-cartanQ as printed, with theta = 4 pi / sqrt(27).
inline Factorization cartan_q_factorization() {
  const double th = 4.0 * M_PI / std::sqrt(27.0);
  const double p8 = M_PI / std::sqrt(8.0);
  Factorization f;
  f.factors = {
      {{{{0, 1}, -th}, {{0, 2}, th}, {{0, 3}, -th}}},
      {{{{1, 0}, th}, {{2, 0}, -th}, {{3, 0}, th}}},
      {{{{3, 3}, M_PI / 4}}},
      {{{{2, 0}, p8}, {{3, 0}, -p8}}},
      {{{{0, 1}, -th}, {{0, 2}, -th}, {{0, 3}, -th}}},
  };
  return f;
}

// Eq.-cartanQQ, "drop the stray i" reading.
inline Factorization cartan_qq_factorization_noi() {
  const double th = 4.0 * M_PI / std::sqrt(27.0);
  Factorization f;
  f.factors = {
      {{{{0, 1}, -th}, {{0, 2}, -th}, {{0, 3}, -th}}},
      {{{{1, 0}, th}, {{2, 0}, th}, {{3, 0}, th}}},
      {{{{3, 3}, M_PI / 4}}},
      {{{{0, 1}, th}, {{0, 2}, th}, {{0, 3}, th}}},
      {{{{1, 0}, -th}, {{2, 0}, -th}, {{3, 0}, -th}}},
  };
  return f;
}

// Eq.-cartanQQ, "i = pseudoscalar" reading (the exponent of the second factor
// becomes I*theta*(G10+G20+G30), still even).
inline ComposedFactorization compose_cartan_qq_pseudoscalar() {
  const double th = 4.0 * M_PI / std::sqrt(27.0);
  Multivector I = pseudoscalar(kG60);
  ComposedFactorization out;
  out.rotor = exp_even((G(0, 1) + G(0, 2) + G(0, 3)) * -th);
  out.rotor = out.rotor * exp_even(I * ((G(1, 0) + G(2, 0) + G(3, 0)) * th));
  out.rotor = out.rotor * exp_even(G(3, 3) * (M_PI / 4));
  out.rotor = out.rotor * exp_even((G(0, 1) + G(0, 2) + G(0, 3)) * th);
  out.rotor = out.rotor * exp_even((G(1, 0) + G(2, 0) + G(3, 0)) * -th);
  out.matrix = even_to_matrix(out.rotor);
  return out;
}

inline Factorization swap_factorization() {
  Factorization f;
  f.factors = {{{{{1, 1}, M_PI / 4}, {{2, 2}, M_PI / 4}, {{3, 3}, M_PI / 4}}}};
  return f;
}

// ---- conjugation tables ------------------------------------------------------

enum class ConjugationDirection {
  u_g_udag,  // u G u^dagger (this is what the printed tables contain)
  udag_g_u,
};

struct TableEntry {
  GeneratorIndex from;
  GeneratorIndex to;
  int sign = 0;       // 0 marks a non-monomial image
  double residual = 0;  // distance from the matched signed generator
};

inline std::vector<TableEntry> conjugation_table(
    const CMat& u, ConjugationDirection dir = ConjugationDirection::u_g_udag,
    double tol = 1e-9) {
  if ((dagger(u) * u - CMat::identity(4)).norm_inf() > 1e-9)
    throw std::invalid_argument("conjugation_table: non-unitary input");
  std::vector<TableEntry> out;
  for (auto g : generator_indices()) {
    CMat x = dir == ConjugationDirection::u_g_udag
                 ? u * generator_matrix(g) * dagger(u)
                 : dagger(u) * generator_matrix(g) * u;
    TableEntry e;
    e.from = g;
    double best = 1e30;
    for (auto h : generator_indices()) {
      double co = (trace(dagger(generator_matrix(h)) * x) * 0.25).real();
      for (int s : {1, -1}) {
        double res = (x - generator_matrix(h) * cplx(s)).norm_inf();
        if (res < best) {
          best = res;
          e.to = h;
          e.sign = s;
        }
      }
      (void)co;
    }
    e.residual = best;
    if (best > tol) e.sign = 0;
    out.push_back(e);
  }
  return out;
}

// printed table contents (maps G_ij to sign * G_{to})
inline const std::map<std::pair<int, int>, std::tuple<int, int, int>>&
reference_table_q() {
  static const std::map<std::pair<int, int>, std::tuple<int, int, int>> t = {
      {{0, 1}, {2, 3, 1}},  {{0, 2}, {0, 1, -1}}, {{0, 3}, {2, 2, -1}},
      {{1, 0}, {3, 1, 1}},  {{1, 1}, {1, 2, -1}}, {{1, 2}, {3, 0, -1}},
      {{1, 3}, {1, 3, -1}}, {{2, 0}, {2, 0, -1}}, {{2, 1}, {0, 3, -1}},
      {{2, 2}, {2, 1, 1}},  {{2, 3}, {0, 2, 1}},  {{3, 0}, {1, 1, 1}},
      {{3, 1}, {3, 2, 1}},  {{3, 2}, {1, 0, -1}}, {{3, 3}, {3, 3, 1}},
  };
  return t;
}

inline const std::map<std::pair<int, int>, std::tuple<int, int, int>>&
reference_table_qprime() {
  static const std::map<std::pair<int, int>, std::tuple<int, int, int>> t = {
      {{0, 1}, {0, 1, 1}},  {{0, 2}, {2, 3, -1}}, {{0, 3}, {2, 2, 1}},
      {{1, 0}, {3, 1, 1}},  {{1, 1}, {3, 0, 1}},  {{1, 2}, {1, 2, 1}},
      {{1, 3}, {1, 3, 1}},  {{2, 0}, {2, 0, 1}},  {{2, 1}, {2, 1, 1}},
      {{2, 2}, {0, 3, -1}}, {{2, 3}, {0, 2, 1}},  {{3, 0}, {1, 1, -1}},
      {{3, 1}, {1, 0, -1}}, {{3, 2}, {3, 2, 1}},  {{3, 3}, {3, 3, 1}},
  };
  return t;
}

struct TableDiff {
  int mismatches = 0;
  std::vector<std::string> lines;
};

inline TableDiff diff_against_reference(
    const std::vector<TableEntry>& computed,
    const std::map<std::pair<int, int>, std::tuple<int, int, int>>& ref) {
  TableDiff d;
  for (const auto& e : computed) {
    auto it = ref.find({e.from.i, e.from.j});
    if (it == ref.end()) continue;
    auto [ti, tj, ts] = it->second;
    if (e.sign != ts || e.to.i != ti || e.to.j != tj) {
      ++d.mismatches;
      d.lines.push_back("G" + std::to_string(e.from.i) +
                        std::to_string(e.from.j) + ": computed " +
                        (e.sign < 0 ? "-" : "+") + "G" + std::to_string(e.to.i) +
                        std::to_string(e.to.j) + ", reference " +
                        (ts < 0 ? "-" : "+") + "G" + std::to_string(ti) +
                        std::to_string(tj));
    }
  }
  return d;
}

// ---- KAK decomposition -------------------------------------------------------

struct KakResult {
  Factorization factorization;  // [local K1, middle, local K2], plus phase
  std::array<double, 3> middle = {0, 0, 0};            // raw c1,c2,c3
  std::array<double, 3> middle_canonical = {0, 0, 0};  // folded & sorted
  double residual = 0;  // reconstruction residual up to global phase
};

namespace detail {

// su(2) log: A in SU(2) as exp(i sum a_k sigma_k)
inline std::array<double, 3> su2_log(const CMat& a) {
  double c0 = (trace(a) * 0.5).real();
  std::array<double, 3> x{};
  for (int k = 1; k <= 3; ++k) x[k - 1] = (trace(pauli(k) * a) * cplx(0.5)).imag();
  double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  if (n < 1e-14) return {0, 0, 0};
  double w = std::atan2(n, c0);
  return {w * x[0] / n, w * x[1] / n, w * x[2] / n};
}

// nearest Kronecker factorization of a local unitary L = e^{i beta} A x B
struct LocalSplit {
  CMat a, b;     // in SU(2)
  double beta;   // residual phase
  double error;  // |L - e^{i beta} A x B|
};

inline LocalSplit kron_factor(const CMat& l) {
  CMat w(4, 4);  // w(2i+j, 2k+l) = L(2i+k, 2j+l), rank 1 for A x B
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 2; ++m) w(i * 2 + j, k * 2 + m) = l(2 * i + k, 2 * j + m);
  int pr = 0, pc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(w(i, j)) > std::abs(w(pr, pc))) {
        pr = i;
        pc = j;
      }
  CMat a(2, 2), b(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = w(i * 2 + j, pc);
      b(i, j) = w(pr, i * 2 + j) / w(pr, pc);
    }
  // scale into SU(2): divide each by sqrt(det)
  auto to_su2 = [](CMat& m) {
    cplx d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    cplx s = std::sqrt(d);
    for (auto& z : m.a) z /= s;
    return d;
  };
  to_su2(a);
  to_su2(b);
  LocalSplit out;
  PhaseMatch pm = phase_equivalent(l, kron(a, b), 1e-6);
  out.a = a;
  out.b = b;
  out.beta = pm.phase;
  out.error = pm.residual;
  return out;
}

inline Factor local_factor_from_matrices(const CMat& a, const CMat& b) {
  auto xa = su2_log(a), xb = su2_log(b);
  Factor f;
  for (int k = 1; k <= 3; ++k)
    if (std::abs(xa[k - 1]) > 1e-14) f.terms.push_back({{k, 0}, xa[k - 1]});
  for (int k = 1; k <= 3; ++k)
    if (std::abs(xb[k - 1]) > 1e-14) f.terms.push_back({{0, k}, xb[k - 1]});
  return f;
}

inline double wrap_pi(double x) {  // into (-pi, pi]
  x = std::fmod(x, 2 * M_PI);
  if (x <= -M_PI) x += 2 * M_PI;
  if (x > M_PI) x -= 2 * M_PI;
  return x;
}

}  // namespace detail

inline std::array<double, 3> canonical_middle(std::array<double, 3> c) {
  for (double& x : c) {
    x = std::abs(x - std::round(x / (M_PI / 2)) * (M_PI / 2));
    if (x > M_PI / 4 + 1e-12) x = M_PI / 2 - x;  // guard rounding at the edge
  }
  std::sort(c.rbegin(), c.rend());
  return c;
}

inline KakResult kak_decompose(const CMat& u_in) {
  if (u_in.rows != 4 || u_in.cols != 4)
    throw std::invalid_argument("kak_decompose expects 4x4");
  if ((dagger(u_in) * u_in - CMat::identity(4)).norm_inf() > 1e-9)
    throw std::invalid_argument("kak_decompose: non-unitary input");
  // project onto SU(4), remembering the removed phase
  cplx d = det(u_in);
  double extra_phase = std::arg(d) / 4.0;
  CMat u = u_in * std::polar(1.0, -extra_phase);

  const CMat q = bell_map_q();  // magic basis: conjugated locals become real
  CMat U = dagger(q) * u * q;
  CMat M = transpose(U) * U;  // symmetric unitary
  // M = R + iS with R,S commuting real symmetric; joint real eigenbasis
  CMat R(4, 4), S(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      R(i, j) = (M(i, j) + std::conj(M(j, i))) * 0.5;  // real part, symmetrized
      S(i, j) = cplx((M(i, j).imag() + M(j, i).imag()) * 0.5, 0.0);
    }
  auto er = eig_hermitian(R);
  CMat O(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) O(i, j) = er.vectors(i, j).real();
  // within degenerate clusters of R, diagonalize the S block
  for (int lo = 0; lo < 4;) {
    int hi = lo + 1;
    while (hi < 4 && std::abs(er.values[hi] - er.values[lo]) < 1e-7) ++hi;
    int w = hi - lo;
    if (w > 1) {
      CMat block(w, w);
      for (int a = 0; a < w; ++a)
        for (int b = 0; b < w; ++b) {
          cplx s = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
              s += O(i, lo + a) * S(i, j) * O(j, lo + b);
          block(a, b) = cplx(s.real(), 0.0);
        }
      auto eb = eig_hermitian(block);
      CMat rotated(4, w);
      for (int i = 0; i < 4; ++i)
        for (int b = 0; b < w; ++b) {
          double s = 0;
          for (int a = 0; a < w; ++a)
            s += O(i, lo + a).real() * eb.vectors(a, b).real();
          rotated(i, b) = s;
        }
      for (int i = 0; i < 4; ++i)
        for (int b = 0; b < w; ++b) O(i, lo + b) = rotated(i, b);
    }
    lo = hi;
  }
  {  // det(O) = +1
    CMat Or(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) Or(i, j) = O(i, j);
    if (det(Or).real() < 0)
      for (int i = 0; i < 4; ++i) O(i, 0) = -O(i, 0);
  }
  // eigenphases of M: lambda_k = (O^T M O)_kk = e^{2 i theta_k}
  std::array<double, 4> theta{};
  CMat OtMO = transpose(O) * M * O;
  for (int k = 0; k < 4; ++k) theta[k] = std::arg(OtMO(k, k)) / 2.0;
  auto build_k1 = [&](const std::array<double, 4>& th) {
    CMat dm(4, 4);
    for (int k = 0; k < 4; ++k) dm(k, k) = std::polar(1.0, -th[k]);
    return U * O * dm;
  };
  CMat K1 = build_k1(theta);
  if (det(K1).real() < 0) {  // fix the theta branch so K1 lands in SO(4)
    theta[0] += M_PI;
    K1 = build_k1(theta);
  }
  double gamma = (theta[0] + theta[1] + theta[2] + theta[3]) / 4.0;
  std::array<double, 4> tp{};
  for (int k = 0; k < 4; ++k) tp[k] = theta[k] - gamma;
  std::array<double, 3> c = {(tp[0] + tp[1]) / 2.0, -(tp[0] + tp[2]) / 2.0,
                             -(tp[1] + tp[2]) / 2.0};

  CMat K2 = transpose(O);
  CMat L1 = q * K1 * dagger(q);
  CMat L2 = q * K2 * dagger(q);
  auto s1 = detail::kron_factor(L1);
  auto s2 = detail::kron_factor(L2);

  KakResult out;
  out.middle = c;
  out.middle_canonical = canonical_middle(c);
  Factor mid;
  for (int k = 1; k <= 3; ++k)
    if (std::abs(c[k - 1]) > 1e-14) mid.terms.push_back({{k, k}, c[k - 1]});
  out.factorization.factors = {
      detail::local_factor_from_matrices(s1.a, s1.b), mid,
      detail::local_factor_from_matrices(s2.a, s2.b)};
  ComposedFactorization comp = compose_factorization(out.factorization);
  PhaseMatch pm = phase_equivalent(u_in, comp.matrix, 1e-6);
  out.factorization.phase = detail::wrap_pi(pm.phase);
  out.residual = pm.residual;
  return out;
}

inline CMat random_su4(Rng& rng) {  // Haar-ish via Gram-Schmidt of Gaussians
  CMat m(4, 4);
  for (auto& z : m.a) z = cplx(rng.normal(), rng.normal());
  for (int c = 0; c < 4; ++c) {
    for (int p = 0; p < c; ++p) {
      cplx dot = 0;
      for (int i = 0; i < 4; ++i) dot += std::conj(m(i, p)) * m(i, c);
      for (int i = 0; i < 4; ++i) m(i, c) -= dot * m(i, p);
    }
    double n = 0;
    for (int i = 0; i < 4; ++i) n += std::norm(m(i, c));
    n = std::sqrt(n);
    for (int i = 0; i < 4; ++i) m(i, c) /= n;
  }
  cplx d = det(m);
  return m * std::polar(1.0, -std::arg(d) / 4.0);
}

// ---- 7-set sequence rank check ----------------------------------------------

struct SequenceReport {
  double commuting_dev = 0;   // max pairwise bracket within a set
  int rank = 0;               // singular values above 1e-8
  double sigma15 = 0, sigma16 = 0, min_gap = 0;
  bool pass = false;
};

// The seven printed sets carry 16 multipliers: the middle set's G33
// coefficient is the sum of two independent parameters (the two copies the
// display merged), which is exactly the ineffective direction.
inline const std::vector<std::vector<GeneratorIndex>>& sequence_sets() {
  static const std::vector<std::vector<GeneratorIndex>> sets = {
      {{2, 2}, {3, 3}}, {{1, 0}, {0, 1}}, {{1, 1}, {2, 2}},
      {{3, 0}, {0, 3}, {3, 3}, {3, 3}},   {{1, 1}, {2, 2}},
      {{1, 0}, {0, 1}}, {{2, 2}, {3, 3}},
  };
  return sets;
}

inline CMat sequence_compose(const std::array<double, 16>& t) {
  CMat m = CMat::identity(4);
  size_t idx = 0;
  for (const auto& set : sequence_sets()) {
    Multivector b(kG60);
    for (auto g : set) b = b + generator_bivector(g) * t[idx++];
    m = m * even_to_matrix(exp_even(b));
  }
  return m;
}

inline SequenceReport sequence_fill_check(Rng& rng, int points = 10) {
  SequenceReport rep;
  for (const auto& set : sequence_sets())
    for (size_t a = 0; a < set.size(); ++a)
      for (size_t b = a + 1; b < set.size(); ++b)
        rep.commuting_dev = std::max(
            rep.commuting_dev,
            commutator_half(generator_bivector(set[a]),
                            generator_bivector(set[b]))
                .norm_inf());
  rep.min_gap = 1e300;
  rep.rank = 16;
  const double h = 1e-5;
  for (int pt = 0; pt < points; ++pt) {
    std::array<double, 16> t0{};
    for (double& x : t0) x = 0.4 * rng.normal();
    std::vector<std::vector<double>> jac(32, std::vector<double>(16));
    for (int p = 0; p < 16; ++p) {
      auto tp = t0, tm = t0;
      tp[p] += h;
      tm[p] -= h;
      CMat d = (sequence_compose(tp) - sequence_compose(tm)) * cplx(1.0 / (2 * h));
      for (int k = 0; k < 16; ++k) {
        jac[k][p] = d.a[k].real();
        jac[16 + k][p] = d.a[k].imag();
      }
    }
    auto sv = singular_values(jac);
    int rank = 0;
    for (double s : sv)
      if (s > 1e-8) ++rank;
    rep.rank = std::min(rep.rank, rank);
    rep.sigma15 = sv[14];
    rep.sigma16 = sv[15];
    rep.min_gap = std::min(rep.min_gap, sv[14] / std::max(sv[15], 1e-300));
  }
  rep.pass = rep.rank == 15 && rep.commuting_dev < 1e-14 && rep.min_gap >= 1e3;
  return rep;
}

}  // namespace gqi
