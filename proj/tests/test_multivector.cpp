#include <catch2/catch_amalgamated.hpp>

#include "gqi/matrix.hpp"  // Rng
#include "gqi/multivector.hpp"

using namespace gqi;

namespace {
Multivector rand_mv(Signature sig, Rng& rng) {
  Multivector m(sig);
  for (uint32_t mask = 0; mask < (1u << sig.dim()); ++mask)
    m.set(mask, rng.normal());
  return m;
}
}  // namespace

TEST_CASE("basis vector squares follow the signature") {
  Signature g30{3, 0}, g03{0, 3}, g21{2, 1};
  for (int k = 1; k <= 3; ++k) {
    auto e = Multivector::blade(g30, {k}, 1.0);
    REQUIRE((e * e - Multivector::scalar(g30, 1.0)).norm_inf() == 0.0);
    auto f = Multivector::blade(g03, {k}, 1.0);
    REQUIRE((f * f + Multivector::scalar(g03, 1.0)).norm_inf() == 0.0);
  }
  auto e3 = Multivector::blade(g21, {3}, 1.0);
  REQUIRE((e3 * e3 + Multivector::scalar(g21, 1.0)).norm_inf() == 0.0);
}

TEST_CASE("anticommutation and blade formation") {
  Signature sig{3, 0};
  auto e1 = Multivector::blade(sig, {1}, 1.0);
  auto e2 = Multivector::blade(sig, {2}, 1.0);
  REQUIRE(((e1 * e2) + (e2 * e1)).norm_inf() == 0.0);
  REQUIRE(((e1 * e2) - Multivector::blade(sig, {1, 2}, 1.0)).norm_inf() == 0.0);
}

TEST_CASE("involution signs by grade") {
  Signature sig{6, 0};
  Rng rng(7);
  for (int r = 0; r <= 6; ++r) {
    Multivector m(sig);
    for (uint32_t mask = 0; mask < 64; ++mask)
      if (__builtin_popcount(mask) == r) m.set(mask, rng.normal());
    double rs = (r * (r - 1) / 2) % 2 ? -1.0 : 1.0;
    double gs = r % 2 ? -1.0 : 1.0;
    REQUIRE((reverse(m) - m * rs).norm_inf() == 0.0);
    REQUIRE((grade_involute(m) - m * gs).norm_inf() == 0.0);
  }
}

TEST_CASE("associativity on random triples") {
  Rng rng(11);
  for (Signature sig : {Signature{3, 0}, Signature{6, 0}, Signature{2, 2}}) {
    for (int t = 0; t < 50; ++t) {
      auto a = rand_mv(sig, rng), b = rand_mv(sig, rng), c = rand_mv(sig, rng);
      double scale =
          std::max(a.norm_inf() * b.norm_inf() * c.norm_inf(), 1.0);
      REQUIRE(((a * b) * c - a * (b * c)).norm_inf() / scale < 1e-13);
    }
  }
}

TEST_CASE("vector times multivector splits into inner plus outer") {
  Rng rng(13);
  Signature sig{6, 0};
  for (int t = 0; t < 100; ++t) {
    Multivector v(sig);
    for (int i = 0; i < 6; ++i) v.set(1u << i, rng.normal());
    auto b = rand_mv(sig, rng);
    REQUIRE((v * b - (inner_product(v, b) + outer_product(v, b))).norm_inf() <
            1e-13);
  }
}

TEST_CASE("outer product is alternating, inner contraction is nilpotent") {
  Rng rng(17);
  Signature sig{6, 0};
  for (int t = 0; t < 100; ++t) {
    Multivector v(sig);
    for (int i = 0; i < 6; ++i) v.set(1u << i, rng.normal());
    REQUIRE(outer_product(v, v).norm_inf() < 1e-14);
    auto b = rand_mv(sig, rng);
    REQUIRE(inner_product(v, inner_product(v, b)).norm_inf() < 1e-13);
  }
}

TEST_CASE("reversion is an antiautomorphism") {
  Rng rng(19);
  Signature sig{6, 0};
  for (int t = 0; t < 50; ++t) {
    auto a = rand_mv(sig, rng), b = rand_mv(sig, rng);
    double scale = std::max(a.norm_inf() * b.norm_inf(), 1.0);
    REQUIRE((reverse(a * b) - reverse(b) * reverse(a)).norm_inf() / scale <
            1e-13);
  }
}

TEST_CASE("pseudoscalar squares") {
  REQUIRE((pseudoscalar({3, 0}) * pseudoscalar({3, 0}) +
           Multivector::scalar({3, 0}, 1.0))
              .norm_inf() == 0.0);
  REQUIRE((pseudoscalar({6, 0}) * pseudoscalar({6, 0}) +
           Multivector::scalar({6, 0}, 1.0))
              .norm_inf() == 0.0);
}

TEST_CASE("bivector exponential gives circular functions") {
  Signature sig{3, 0};
  auto b = Multivector::blade(sig, {1, 2}, 1.0);
  for (double th : {0.1, 1.0, 2.5, -3.0}) {
    auto r = exp_even(b * th);
    auto want = Multivector::scalar(sig, std::cos(th)) + b * std::sin(th);
    REQUIRE((r - want).norm_inf() < 1e-14);
  }
}

TEST_CASE("rotor conjugation rotates vectors") {
  Signature sig{3, 0};
  auto e2 = Multivector::blade(sig, {2}, 1.0);
  auto e3 = Multivector::blade(sig, {3}, 1.0);
  for (int t = 0; t < 20; ++t) {
    double th = 2 * M_PI * (t + 0.5) / 20.0;
    auto r = exp_even(Multivector::blade(sig, {2, 3}, th / 2));
    auto got = rotor_conjugate(r, e3);
    auto want = e3 * std::cos(th) + e2 * std::sin(th);
    REQUIRE((got - want).norm_inf() < 1e-13);
  }
}

TEST_CASE("cross product is the dual of the wedge") {
  Signature sig{3, 0};
  Rng rng(23);
  auto I = pseudoscalar(sig);
  for (int t = 0; t < 100; ++t) {
    double a[3], b[3];
    for (auto* p : {a, b})
      for (int i = 0; i < 3; ++i) p[i] = rng.normal();
    Multivector av(sig), bv(sig);
    for (int i = 0; i < 3; ++i) {
      av.set(1u << i, a[i]);
      bv.set(1u << i, b[i]);
    }
    double cx[3] = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                    a[0] * b[1] - a[1] * b[0]};
    Multivector want(sig);
    for (int i = 0; i < 3; ++i) want.set(1u << i, cx[i]);
    REQUIRE((reverse(I) * outer_product(av, bv) - want).norm_inf() < 1e-13);
  }
}

TEST_CASE("worked product identities") {
  Signature g3{3, 0};
  auto e1 = Multivector::blade(g3, {1}, 1.0);
  auto e2 = Multivector::blade(g3, {2}, 1.0);
  auto e23 = Multivector::blade(g3, {2, 3}, 1.0);
  auto e31 = Multivector::blade(g3, {1, 3}, -1.0);  // e3e1
  REQUIRE(((e23 * e23) + Multivector::scalar(g3, 1.0)).norm_inf() == 0.0);
  REQUIRE(((e23 * e31) + Multivector::blade(g3, {1, 2}, 1.0)).norm_inf() ==
          0.0);
  REQUIRE((inner_product(e1, e1) - Multivector::scalar(g3, 1.0)).norm_inf() ==
          0.0);
  REQUIRE((inner_product(e1, Multivector::blade(g3, {1, 2}, 1.0)) - e2)
              .norm_inf() == 0.0);
  REQUIRE(inner_product(Multivector::scalar(g3, 5.0), e1).norm_inf() == 0.0);
  REQUIRE((outer_product(e1 + e2, e2) -
           Multivector::blade(g3, {1, 2}, 1.0))
              .norm_inf() == 0.0);
  // outer product of two vectors matches the half-commutator
  REQUIRE((outer_product(e1 + e2, e2) - commutator_half(e1 + e2, e2))
              .norm_inf() == 0.0);
  auto mixed = Multivector::blade(g3, {1, 2}, 1.0) +
               Multivector::scalar(g3, 3.0);
  REQUIRE((grade_project(mixed, 0) - Multivector::scalar(g3, 3.0)).norm_inf() ==
          0.0);
  REQUIRE((grade_project(mixed, 2) - Multivector::blade(g3, {1, 2}, 1.0))
              .norm_inf() == 0.0);
  REQUIRE(grade_project(e1 * Multivector::blade(g3, {1, 2}, 1.0), 3)
              .norm_inf() == 0.0);
}

TEST_CASE("rotor double cover and norm preservation") {
  Signature g3{3, 0};
  auto e3 = Multivector::blade(g3, {3}, 1.0);
  auto r2pi = exp_even(Multivector::blade(g3, {2, 3}, M_PI));  // R(2 pi)
  REQUIRE((r2pi + Multivector::scalar(g3, 1.0)).norm_inf() < 1e-12);
  REQUIRE((rotor_conjugate(r2pi, e3) - e3).norm_inf() < 1e-12);
  Rng rng(83);
  Multivector x(g3);
  for (uint32_t m = 0; m < 8; ++m) x.set(m, rng.normal());
  auto r = exp_even(Multivector::blade(g3, {1, 2}, 0.61));
  auto y = rotor_conjugate(r, x);
  REQUIRE(std::abs(scalar_part(y * reverse(y)) -
                   scalar_part(x * reverse(x))) < 1e-13);
}

TEST_CASE("dual relations report") {
  DualReport rep = dual_relations_check();
  REQUIRE(rep.g3_dev < 1e-13);
  REQUIRE(rep.g6_dev < 1e-13);
  REQUIRE(rep.pass);
}

TEST_CASE("exp_even rejects odd input") {
  Signature sig{3, 0};
  REQUIRE_THROWS(exp_even(Multivector::blade(sig, {1}, 1.0)));
}

TEST_CASE("grade projection partitions a multivector") {
  Rng rng(29);
  Signature sig{6, 0};
  auto a = rand_mv(sig, rng);
  Multivector sum(sig);
  for (int r = 0; r <= 6; ++r) sum = sum + grade_project(a, r);
  REQUIRE((sum - a).norm_inf() == 0.0);
}
