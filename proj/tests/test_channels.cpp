#include <catch2/catch_amalgamated.hpp>

#include "gqi/channels.hpp"

using namespace gqi;

namespace {
Multivector random_density(Rng& rng) {
  CMat a(4, 4);
  for (auto& z : a.a) z = cplx(rng.normal(), rng.normal());
  CMat w = a * dagger(a);
  return matrix_to_even(w * (1.0 / trace(w).real()));
}
}  // namespace

TEST_CASE("trace preservation is exact in the algebra") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    Multivector rho = random_density(rng);
    for (int k = 1; k <= 6; ++k)
      REQUIRE(std::abs(scalar_part(kraus_apply(k, rho)) - 0.25) < 1e-15);
  }
  REQUIRE_THROWS(kraus_apply(1, Multivector::scalar(kG60, 1.0)));
}

TEST_CASE("hermiticity preservation") {
  Rng rng(67);
  for (int t = 0; t < 20; ++t) {
    Multivector rho = random_density(rng);
    for (int k = 1; k <= 6; ++k) {
      Multivector out = kraus_apply(k, rho);
      REQUIRE((reverse(out) - out).norm_inf() < 1e-13);
    }
  }
}

TEST_CASE("fixed points") {
  // M_k rho = rho forces e_k rhohat e_k = 0, i.e. rhohat = 0: the maximally
  // mixed state is the only fixed point of every M_k
  Multivector mixed = Multivector::scalar(kG60, 0.25);
  for (int k = 1; k <= 6; ++k)
    REQUIRE((kraus_apply(k, mixed) - mixed).norm_inf() == 0.0);
  // on the product idempotent, conjugation by e3 negates the IG30 and IG03
  // components (their blades contain e3) and fixes IG33, so the deviation
  // from a fixed point is exactly 1/16
  Multivector I = pseudoscalar(kG60);
  Multivector rho = reference_projector();
  Multivector expected =
      (I * G(3, 0) * -1.0 + I * G(0, 3) * -1.0 + I * G(3, 3)) * (1.0 / 16.0);
  Multivector delta = kraus_apply(3, rho) - rho;
  REQUIRE((delta - expected).norm_inf() < 1e-16);
  REQUIRE(std::abs(delta.norm_inf() - 1.0 / 16.0) < 1e-16);
}

TEST_CASE("superoperator agrees with the algebra-side map") {
  Rng rng(71);
  for (int k = 1; k <= 6; ++k) {
    CMat s = superoperator_of(k);
    for (int t = 0; t < 20; ++t) {
      Multivector rho = random_density(rng);
      CMat lhs = apply_superoperator(s, even_to_matrix(rho));
      CMat rhs = even_to_matrix(kraus_apply(k, rho));
      REQUIRE((lhs - rhs).norm_inf() < 1e-12);
    }
  }
}

TEST_CASE("superoperator is complex linear") {
  Rng rng(73);
  CMat s = superoperator_of(2);
  for (int t = 0; t < 20; ++t) {
    CMat x(4, 4), y(4, 4);
    for (auto& z : x.a) z = cplx(rng.normal(), rng.normal());
    for (auto& z : y.a) z = cplx(rng.normal(), rng.normal());
    cplx a(rng.normal(), rng.normal());
    CMat lhs = apply_superoperator(s, x * a + y);
    CMat rhs = apply_superoperator(s, x) * a + apply_superoperator(s, y);
    REQUIRE((lhs - rhs).norm_inf() < 1e-12);
  }
}

TEST_CASE("composition of superoperators matches composed maps") {
  Rng rng(79);
  CMat s12 = superoperator_of(1) * superoperator_of(2);
  for (int t = 0; t < 10; ++t) {
    Multivector rho = random_density(rng);
    CMat lhs = apply_superoperator(s12, even_to_matrix(rho));
    CMat rhs = even_to_matrix(kraus_apply(1, kraus_apply(2, rho)));
    REQUIRE((lhs - rhs).norm_inf() < 1e-12);
  }
}

TEST_CASE("identity channel Choi matrix is a rank-1 projector times 4") {
  ChoiReport rep = choi_check(CMat::identity(16));
  REQUIRE(rep.trace_preserving);
  REQUIRE(rep.boundary);
  REQUIRE(std::abs(rep.min_eig) < 1e-12);
  REQUIRE(std::abs(rep.eigenvalues.back() - 4.0) < 1e-12);
}

TEST_CASE("Choi spectrum of each Kraus sum is {59/16, 3/16 x10, -5/16 x5}") {
  for (int k = 1; k <= 6; ++k) {
    ChoiReport rep = choi_check(superoperator_of(k));
    REQUIRE(rep.trace_preserving);
    REQUIRE(rep.hermiticity_dev < 1e-12);
    REQUIRE_FALSE(rep.completely_positive);  // documented negative finding
    REQUIRE_FALSE(rep.boundary);
    for (int i = 0; i < 5; ++i)
      REQUIRE(std::abs(rep.eigenvalues[i] + 5.0 / 16.0) < 1e-12);
    for (int i = 5; i < 15; ++i)
      REQUIRE(std::abs(rep.eigenvalues[i] - 3.0 / 16.0) < 1e-12);
    REQUIRE(std::abs(rep.eigenvalues[15] - 59.0 / 16.0) < 1e-12);
  }
}

TEST_CASE("pairwise compositions stay trace-preserving") {
  std::array<CMat, 7> sops;
  for (int k = 1; k <= 6; ++k) sops[k] = superoperator_of(k);
  double worst = 0;
  for (int k1 = 1; k1 <= 6; ++k1)
    for (int k2 = 1; k2 <= 6; ++k2) {
      ChoiReport rep = choi_check(sops[k1] * sops[k2]);
      REQUIRE(rep.trace_preserving);
      worst = std::min(worst, rep.min_eig);
    }
  // none of the 36 compositions is completely positive either
  REQUIRE(std::abs(worst + 41.0 / 64.0) < 1e-10);
}

TEST_CASE("convex midpoint of two Kraus sums is trace-preserving") {
  CMat mid = (superoperator_of(1) + superoperator_of(4)) * cplx(0.5);
  ChoiReport rep = choi_check(mid);
  REQUIRE(rep.trace_preserving);
}
