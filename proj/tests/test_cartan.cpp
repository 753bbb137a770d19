#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gqi/cartan.hpp"

using namespace gqi;

TEST_CASE("all 31 bipartitions satisfy the Cartan bracket conditions") {
  for (uint32_t mask = 1; mask < 63; mask += 2) {
    CartanSplit s = split_from_bipartition(mask);
    REQUIRE(s.g.size() + s.m.size() == 15);
    REQUIRE(cartan_conditions_residual(s) < 1e-14);
  }
  REQUIRE_THROWS(split_from_bipartition(0));
  REQUIRE_THROWS(split_from_bipartition(63));
}

TEST_CASE("local bipartition: 6+9 split with six maximal matchings") {
  CartanSplit s = split_from_bipartition(0b000111);
  REQUIRE(s.g.size() == 6);
  REQUIRE(s.m.size() == 9);
  auto subs = cartan_subalgebras(s);
  REQUIRE(subs.size() == 6);  // perfect matchings of K_{3,3}
  bool has_diag = false;
  for (const auto& h : subs) {
    REQUIRE(h.size() == 3);
    std::set<std::pair<int, int>> got;
    for (auto g : h) got.insert({g.i, g.j});
    if (got == std::set<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}})
      has_diag = true;
  }
  REQUIRE(has_diag);
}

TEST_CASE("the {e1,f1} bipartition gives a seven-dimensional g") {
  CartanSplit s = split_from_bipartition(0b001001);
  REQUIRE(s.g.size() == 7);
  REQUIRE(s.m.size() == 8);
}

TEST_CASE("swap factorization reproduces the SWAP gate up to phase") {
  auto c = compose_factorization(swap_factorization());
  // the closed form (1 + I G11 + I G22 + I G33)/2 maps exactly to SWAP; the
  // exponential reproduces it only after the central factor exp(I pi/4)
  Multivector I = pseudoscalar(kG60);
  Multivector closed = (Multivector::scalar(kG60, 1.0) + I * G(1, 1) +
                        I * G(2, 2) + I * G(3, 3)) *
                       0.5;
  REQUIRE((even_to_matrix(closed) - swap_matrix()).norm_inf() < 1e-15);
  REQUIRE((c.rotor * exp_even(I * (M_PI / 4)) - closed).norm_inf() < 1e-14);
  REQUIRE(std::abs((c.rotor - closed).norm_inf() - 1.0 / std::sqrt(8.0)) <
          1e-12);
  PhaseMatch pm = phase_equivalent(c.matrix, swap_matrix(), 1e-10);
  REQUIRE(pm.equivalent);
  REQUIRE(std::abs(detail::wrap_pi(pm.phase) - M_PI / 4) < 1e-12);
}

TEST_CASE("single-exponential factorization of Q'") {
  REQUIRE((even_to_matrix(exp_even(G(2, 1) * (M_PI / 4))) -
           bell_map_qprime())
              .norm_inf() < 1e-13);
}

TEST_CASE("long compositions: documented verdicts") {
  // the five-factor composition aimed at Q does not reproduce Q
  auto cq = compose_factorization(cartan_q_factorization());
  PhaseMatch pq = phase_equivalent(cq.matrix, bell_map_q(), 1e-10);
  REQUIRE_FALSE(pq.equivalent);
  // the five-factor composition aimed at Q' reproduces it exactly
  auto cqq = compose_factorization(cartan_qq_factorization_noi());
  PhaseMatch pqq = phase_equivalent(cqq.matrix, bell_map_qprime(), 1e-10);
  REQUIRE(pqq.residual < 1e-12);
  REQUIRE(pqq.equivalent);
  // the alternative reading with a pseudoscalar factor does not
  REQUIRE((compose_cartan_qq_pseudoscalar().matrix - bell_map_qprime())
              .norm_inf() > 1.0);
}

TEST_CASE("conjugation tables are monomial and match the shipped references") {
  auto tq = conjugation_table(bell_map_q());
  auto tqp = conjugation_table(bell_map_qprime());
  for (const auto* t : {&tq, &tqp})
    for (const auto& e : *t) {
      REQUIRE(e.sign != 0);
      REQUIRE(e.residual < 1e-12);
    }
  REQUIRE(diff_against_reference(tq, reference_table_q()).mismatches == 0);
  REQUIRE(diff_against_reference(tqp, reference_table_qprime()).mismatches == 0);
  // the opposite conjugation direction does NOT match the shipped tables
  auto tq_rev =
      conjugation_table(bell_map_q(), ConjugationDirection::udag_g_u);
  REQUIRE(diff_against_reference(tq_rev, reference_table_q()).mismatches > 0);
}

TEST_CASE("phase_equivalent") {
  CMat u = bell_map_q();
  PhaseMatch pm = phase_equivalent(u * std::polar(1.0, 0.37), u);
  REQUIRE(pm.equivalent);
  REQUIRE(std::abs(pm.phase - 0.37) < 1e-12);
  REQUIRE_FALSE(phase_equivalent(u, swap_matrix()).equivalent);
}

TEST_CASE("kak reconstructs random SU(4) elements") {
  Rng rng(53);
  for (int t = 0; t < 25; ++t) {
    CMat u = random_su4(rng);
    KakResult k = kak_decompose(u);
    REQUIRE(k.residual < 1e-9);
    for (double c : k.middle_canonical) {
      REQUIRE(c >= -1e-12);
      REQUIRE(c <= M_PI / 4 + 1e-12);
    }
  }
}

TEST_CASE("kak canonical classes of named gates") {
  auto swap = kak_decompose(swap_matrix());
  for (double c : swap.middle_canonical)
    REQUIRE(std::abs(c - M_PI / 4) < 1e-9);
  CMat cnot(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  auto kc = kak_decompose(cnot);
  REQUIRE(std::abs(kc.middle_canonical[0] - M_PI / 4) < 1e-9);
  REQUIRE(std::abs(kc.middle_canonical[1]) < 1e-9);
  REQUIRE(std::abs(kc.middle_canonical[2]) < 1e-9);
  REQUIRE(kc.residual < 1e-9);
  auto kid = kak_decompose(CMat::identity(4));
  for (double c : kid.middle_canonical) REQUIRE(std::abs(c) < 1e-9);
}

TEST_CASE("sequence rank check finds exactly one ineffective direction") {
  Rng rng(59);
  SequenceReport rep = sequence_fill_check(rng, 3);
  REQUIRE(rep.commuting_dev < 1e-14);
  REQUIRE(rep.rank == 15);
  REQUIRE(rep.min_gap >= 1e3);
}
