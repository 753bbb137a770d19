#include <catch2/catch_amalgamated.hpp>

#include "gqi/cartan.hpp"
#include "gqi/matrix.hpp"
#include "gqi/twoqubit.hpp"

using namespace gqi;

TEST_CASE("pauli algebra") {
  cplx i{0, 1};
  REQUIRE((pauli(1) * pauli(2) - pauli(3) * i).norm_inf() == 0.0);
  REQUIRE((pauli(2) * pauli(3) - pauli(1) * i).norm_inf() == 0.0);
  REQUIRE((pauli(3) * pauli(1) - pauli(2) * i).norm_inf() == 0.0);
  for (int k = 1; k <= 3; ++k) {
    REQUIRE((pauli(k) * pauli(k) - CMat::identity(2)).norm_inf() == 0.0);
    REQUIRE(std::abs(trace(pauli(k))) == 0.0);
    REQUIRE((pauli(k) - dagger(pauli(k))).norm_inf() == 0.0);
  }
}

TEST_CASE("kron basics") {
  CMat a = pauli(1), b = pauli(3);
  CMat k = kron(a, b);
  REQUIRE(k.rows == 4);
  REQUIRE(std::abs(k(0, 2) - cplx{1}) == 0.0);
  REQUIRE(std::abs(k(1, 3) + cplx{1}) == 0.0);
  REQUIRE((kron(CMat::identity(2), CMat::identity(2)) - CMat::identity(4))
              .norm_inf() == 0.0);
}

TEST_CASE("matrix exponential closed forms") {
  REQUIRE((expm(CMat(4, 4)) - CMat::identity(4)).norm_inf() == 0.0);
  cplx i{0, 1};
  REQUIRE((expm(pauli(3) * (i * M_PI)) + CMat::identity(2)).norm_inf() < 1e-14);
  // A = mat(G21) squares to -I, so expm((pi/4) A) = cos(pi/4) + sin(pi/4) A
  CMat a = generator_matrix({2, 1});
  REQUIRE((a * a + CMat::identity(4)).norm_inf() < 1e-15);
  CMat closed =
      CMat::identity(4) * cplx(std::cos(M_PI / 4)) + a * cplx(std::sin(M_PI / 4));
  REQUIRE((expm(a * cplx(M_PI / 4)) - closed).norm_inf() < 1e-14);
  REQUIRE((expm(a * cplx(M_PI / 4)) - bell_map_qprime()).norm_inf() < 1e-14);
}

TEST_CASE("hermitian eigensolver reconstructs and orders") {
  Rng rng(31);
  for (int n : {2, 4, 16}) {
    CMat a(n, n);
    for (auto& z : a.a) z = cplx(rng.normal(), rng.normal());
    CMat h = a + dagger(a);
    auto e = eig_hermitian(h);
    for (size_t k = 1; k < e.values.size(); ++k)
      REQUIRE(e.values[k] >= e.values[k - 1]);
    CMat d(n, n);
    for (int k = 0; k < n; ++k) d(k, k) = e.values[k];
    REQUIRE((e.vectors * d * dagger(e.vectors) - h).norm_inf() < 1e-9);
    REQUIRE((dagger(e.vectors) * e.vectors - CMat::identity(n)).norm_inf() <
            1e-10);
  }
  auto e = eig_hermitian(CMat::identity(4));  // degenerate spectrum
  for (double v : e.values) REQUIRE(std::abs(v - 1.0) < 1e-14);
  REQUIRE_THROWS(eig_hermitian(pauli(1) * cplx(0, 1)));
}

TEST_CASE("determinant") {
  REQUIRE(std::abs(det(CMat::identity(4)) - cplx{1}) < 1e-14);
  REQUIRE(std::abs(det(swap_matrix()) + cplx{1}) < 1e-14);
  REQUIRE(std::abs(det(pauli(2)) + cplx{1}) < 1e-14);
}

TEST_CASE("one-sided jacobi singular values") {
  std::vector<std::vector<double>> m = {{3, 0}, {0, 0}, {0, -2}};
  auto sv = singular_values(m);
  REQUIRE(sv.size() == 2);
  REQUIRE(std::abs(sv[0] - 3.0) < 1e-12);
  REQUIRE(std::abs(sv[1] - 2.0) < 1e-12);
  // orthogonal invariance: sv of a rotated diagonal stay put
  Rng rng(37);
  double c = std::cos(0.7), s = std::sin(0.7);
  std::vector<std::vector<double>> r = {{2 * c, -5 * s}, {2 * s, 5 * c}};
  auto sv2 = singular_values(r);
  REQUIRE(std::abs(sv2[0] - 5.0) < 1e-12);
  REQUIRE(std::abs(sv2[1] - 2.0) < 1e-12);
}

TEST_CASE("rng is deterministic") {
  Rng a(42), b(42);
  for (int t = 0; t < 100; ++t) REQUIRE(a.normal() == b.normal());
}
