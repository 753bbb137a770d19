#pragma once
// Sparse real Clifford algebra G(p,q) over bitmask basis blades.

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqi {

inline constexpr double kPrune = 1e-15;  // drop float residue after products

struct Signature {
  int p = 0;
  int q = 0;
  constexpr int dim() const { return p + q; }
  friend constexpr bool operator==(Signature a, Signature b) {
    return a.p == b.p && a.q == b.q;
  }
};

inline constexpr Signature kG30{3, 0};
inline constexpr Signature kG60{6, 0};

// Product of two basis blades: canonical mask plus the sign accumulated from
// interleave-sorting the factors and squaring out repeated vectors.
inline std::pair<uint32_t, int> blade_product(uint32_t a, uint32_t b,
                                              Signature sig) {
  if (sig.dim() > 16) throw std::invalid_argument("signature dimension > 16");
  uint32_t full = (sig.dim() >= 32) ? ~0u : ((1u << sig.dim()) - 1u);
  if ((a & ~full) || (b & ~full))
    throw std::invalid_argument("blade outside signature dimension");
  int swaps = 0;
  for (int j = 0; j < sig.dim(); ++j)
    if (b >> j & 1u) swaps += std::popcount(a >> (j + 1));
  int sign = (swaps & 1) ? -1 : 1;
  uint32_t common = a & b;
  for (int j = sig.p; j < sig.dim(); ++j)
    if (common >> j & 1u) sign = -sign;
  return {a ^ b, sign};
}

inline int grade_of(uint32_t mask) { return std::popcount(mask); }

class Multivector {
 public:
  Signature sig{};
  std::map<uint32_t, double> terms;  // canonical ascending-mask order

  Multivector() = default;
  explicit Multivector(Signature s) : sig(s) {}
  Multivector(Signature s, std::map<uint32_t, double> t)
      : sig(s), terms(std::move(t)) {
    prune();
  }

  static Multivector scalar(Signature s, double c) {
    Multivector m(s);
    m.set(0, c);
    return m;
  }
  // 1-based vector indices, ascending
  static Multivector blade(Signature s, std::vector<int> idx, double c = 1.0) {
    uint32_t mask = 0;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 1 || idx[k] > s.dim())
        throw std::invalid_argument("blade index out of range");
      if (k > 0 && idx[k] <= idx[k - 1])
        throw std::invalid_argument("blade indices must ascend");
      mask |= 1u << (idx[k] - 1);
    }
    Multivector m(s);
    m.set(mask, c);
    return m;
  }

  void set(uint32_t mask, double c) {
    if (std::abs(c) > kPrune)
      terms[mask] = c;
    else
      terms.erase(mask);
  }
  double coeff(uint32_t mask) const {
    auto it = terms.find(mask);
    return it == terms.end() ? 0.0 : it->second;
  }
  void prune() {
    for (auto it = terms.begin(); it != terms.end();)
      it = (std::abs(it->second) > kPrune) ? std::next(it) : terms.erase(it);
  }

  double norm_inf() const {
    double m = 0;
    for (auto& [k, v] : terms) m = std::max(m, std::abs(v));
    return m;
  }
  double norm_1() const {
    double m = 0;
    for (auto& [k, v] : terms) m += std::abs(v);
    return m;
  }

  bool is_even() const {
    for (auto& [k, v] : terms)
      if (grade_of(k) & 1) return false;
    return true;
  }

  friend Multivector operator+(const Multivector& a, const Multivector& b) {
    require_same(a, b);
    Multivector r = a;
    for (auto& [k, v] : b.terms) r.set(k, r.coeff(k) + v);
    return r;
  }
  friend Multivector operator-(const Multivector& a, const Multivector& b) {
    require_same(a, b);
    Multivector r = a;
    for (auto& [k, v] : b.terms) r.set(k, r.coeff(k) - v);
    return r;
  }
  friend Multivector operator*(const Multivector& a, double c) {
    Multivector r(a.sig);
    for (auto& [k, v] : a.terms) r.set(k, v * c);
    return r;
  }
  friend Multivector operator*(double c, const Multivector& a) { return a * c; }
  friend Multivector operator-(const Multivector& a) { return a * -1.0; }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    require_same(a, b);
    Multivector r(a.sig);
    for (auto& [ka, va] : a.terms)
      for (auto& [kb, vb] : b.terms) {
        auto [m, sg] = blade_product(ka, kb, a.sig);
        auto it = r.terms.find(m);
        if (it == r.terms.end())
          r.terms[m] = sg * va * vb;
        else
          it->second += sg * va * vb;
      }
    r.prune();
    return r;
  }

  static void require_same(const Multivector& a, const Multivector& b) {
    if (!(a.sig == b.sig)) throw std::invalid_argument("signature mismatch");
  }

  std::string str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : terms) {
      if (!first) os << " + ";
      first = false;
      os << v;
      if (k) {
        os << "*";
        for (int j = 0; j < sig.dim(); ++j)
          if (k >> j & 1u) {
            if (sig == kG60)
              os << (j < 3 ? "e" : "f") << (j < 3 ? j + 1 : j - 2);
            else
              os << "e" << j + 1;
          }
      }
    }
    return os.str();
  }
};

inline Multivector grade_project(const Multivector& a, int r) {
  Multivector out(a.sig);
  for (auto& [k, v] : a.terms)
    if (grade_of(k) == r) out.set(k, v);
  return out;
}

inline double scalar_part(const Multivector& a) { return a.coeff(0); }

inline Multivector reverse(const Multivector& a) {
  Multivector out(a.sig);
  for (auto& [k, v] : a.terms) {
    int r = grade_of(k);
    out.set(k, ((r * (r - 1) / 2) & 1) ? -v : v);
  }
  return out;
}

inline Multivector grade_involute(const Multivector& a) {
  Multivector out(a.sig);
  for (auto& [k, v] : a.terms) out.set(k, (grade_of(k) & 1) ? -v : v);
  return out;
}

// A_r ∧ B_s = <A_r B_s>_{r+s}: for basis blades this keeps disjoint masks.
inline Multivector outer_product(const Multivector& a, const Multivector& b) {
  Multivector::require_same(a, b);
  Multivector r(a.sig);
  for (auto& [ka, va] : a.terms)
    for (auto& [kb, vb] : b.terms) {
      if (ka & kb) continue;
      auto [m, sg] = blade_product(ka, kb, a.sig);
      r.set(m, r.coeff(m) + sg * va * vb);
    }
  r.prune();
  return r;
}

// A_r · B_s = <A_r B_s>_{|r-s|}, with scalar operands contracting to 0.
inline Multivector inner_product(const Multivector& a, const Multivector& b) {
  Multivector::require_same(a, b);
  Multivector r(a.sig);
  for (auto& [ka, va] : a.terms)
    for (auto& [kb, vb] : b.terms) {
      int ra = grade_of(ka), rb = grade_of(kb);
      if (ra == 0 || rb == 0) continue;
      auto [m, sg] = blade_product(ka, kb, a.sig);
      if (grade_of(m) != std::abs(ra - rb)) continue;
      r.set(m, r.coeff(m) + sg * va * vb);
    }
  r.prune();
  return r;
}

inline Multivector commutator_half(const Multivector& a,
                                   const Multivector& b) {
  return (a * b - b * a) * 0.5;
}

inline Multivector pseudoscalar(Signature sig) {
  Multivector m(sig);
  m.set((1u << sig.dim()) - 1u, 1.0);
  return m;
}

// exp of an even element by scaling-and-squaring power series.
inline Multivector exp_even(const Multivector& b, double tol = 1e-14) {
  if (!b.is_even())
    throw std::invalid_argument("exp_even requires an even-grade argument");
  int squarings = 0;
  Multivector x = b;
  while (x.norm_1() > 0.5 && squarings < 64) {
    x = x * 0.5;
    ++squarings;
  }
  Multivector sum = Multivector::scalar(b.sig, 1.0);
  Multivector term = Multivector::scalar(b.sig, 1.0);
  int n = 0;
  while (term.norm_1() > tol) {
    if (++n > 200) throw std::runtime_error("exp_even series did not converge");
    term = term * x * (1.0 / n);
    sum = sum + term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

inline Multivector rotor_conjugate(const Multivector& r,
                                   const Multivector& x) {
  return r * x * reverse(r);
}

struct DualReport {
  double g3_dev = 0;  // I^2 = -1, I*(I e_l) = -e_l, cross product duality
  double g6_dev = 0;  // I central in the even subalgebra, grade 2<->4 swap
  bool pass = false;
};

inline DualReport dual_relations_check() {
  DualReport rep;
  Signature g3{3, 0};
  Multivector I3 = pseudoscalar(g3);
  rep.g3_dev = (I3 * I3 + Multivector::scalar(g3, 1.0)).norm_inf();
  for (int l = 1; l <= 3; ++l) {
    Multivector el = Multivector::blade(g3, {l}, 1.0);
    rep.g3_dev = std::max(rep.g3_dev, (I3 * (I3 * el) + el).norm_inf());
  }
  uint64_t state = 0x9e3779b97f4a7c15ull;  // splitmix64 stream
  auto rnd = [&state]() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return double(z >> 11) * 0x1.0p-52 - 1.0;  // [-1,1)
  };
  for (int t = 0; t < 100; ++t) {
    double a[3], b[3];
    for (auto* p : {a, b})
      for (int i = 0; i < 3; ++i) p[i] = rnd();
    Multivector av(g3), bv(g3), want(g3);
    double cx[3] = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
    for (int i = 0; i < 3; ++i) {
      av.set(1u << i, a[i]);
      bv.set(1u << i, b[i]);
      want.set(1u << i, cx[i]);
    }
    rep.g3_dev = std::max(
        rep.g3_dev,
        (reverse(I3) * outer_product(av, bv) - want).norm_inf());
  }
  Signature g6{6, 0};
  Multivector I6 = pseudoscalar(g6);
  rep.g6_dev = (I6 * I6 + Multivector::scalar(g6, 1.0)).norm_inf();
  for (uint32_t mask = 0; mask < 64u; ++mask) {
    int g = __builtin_popcount(mask);
    if (g & 1) continue;
    Multivector blade(g6);
    blade.set(mask, 1.0);
    rep.g6_dev =
        std::max(rep.g6_dev, (I6 * blade - blade * I6).norm_inf());
    if (g == 2 || g == 4) {  // multiplication by I swaps grades 2 and 4
      Multivector prod = I6 * blade;
      rep.g6_dev = std::max(
          rep.g6_dev, (prod - grade_project(prod, 6 - g)).norm_inf());
    }
  }
  rep.pass = rep.g3_dev < 1e-12 && rep.g6_dev < 1e-12;
  return rep;
}

}  // namespace gqi
