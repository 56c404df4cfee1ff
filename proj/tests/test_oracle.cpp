#include <powideal/fatpoints.hpp>
#include <powideal/hilbert.hpp>
#include <powideal/oracle.hpp>

#include <gtest/gtest.h>

#include <vector>

using namespace powideal;

namespace {

SparseIntPoly sum_of_variables(long vars) {
  SparseIntPoly s(vars);
  for (long v = 0; v < vars; ++v) s += SparseIntPoly::variable_power(vars, v, 1);
  return s;
}

CycPoly to_cyc(const SparseIntPoly& f, long k) {
  const auto& field = CyclotomicField::get(k);
  CycPoly out;
  for (const auto& [e, c] : f.terms()) out.emplace(e, field.from_integer(c));
  return out;
}

void add_into(CycPoly& acc, const CycPoly& f, const CycNumber& scale) {
  for (const auto& [e, c] : f) {
    auto [it, fresh] = acc.try_emplace(e, c * scale);
    if (!fresh) it->second += c * scale;
  }
}

void drop_zeros(CycPoly& f) {
  std::erase_if(f, [](const auto& kv) { return is_zero(kv.second); });
}

// Monomials of degree m in n+1 variables not divisible by any
// x_1^{k i_1} ... x_n^{k i_n} with i_1 + ... + i_n = d, by enumeration.
long brute_initial_count(long n, long k, long d, long m) {
  long count = 0;
  for (const auto& e : monomials_of_degree(n + 1, m)) {
    long floors = 0;
    for (long v = 1; v <= n; ++v) floors += e[v] / k;
    if (floors < d) ++count;
  }
  return count;
}

}  // namespace

TEST(GradedPieceBasis, MatchesDimension) {
  for (long k = 2; k <= 4; ++k)
    for (long n = 0; n <= 3; ++n) {
      const Params p(n, k, 1);
      for (long i = 0; i <= 8; ++i)
        for (const auto& h : enumerate_multicycles(k, n + 1)) {
          const auto basis = graded_piece_basis(k, i, h);
          EXPECT_EQ(BigInt(basis.size()), dim_graded_piece(p, i, h));
          for (const auto& e : basis) EXPECT_EQ(Multicycle::of_exponents(k, e), h);
        }
    }
}

TEST(PsiGen, WorkedExamples) {
  const Params p(2, 2, 4);
  EXPECT_EQ(psi_gen(p, Multicycle(2, {0, 0, 0})),
            SparseIntPoly::parse(3, "x0^4 + 6*x0^2*x1^2 + 6*x0^2*x2^2 + x1^4 + 6*x1^2*x2^2 + x2^4"));
  EXPECT_TRUE(psi_gen(p, Multicycle(2, {1, 0, 0})).is_zero());
  EXPECT_EQ(psi_gen(p, Multicycle(2, {1, 1, 0})), SparseIntPoly::parse(3, "4*x0^3*x1 + 12*x0*x1*x2^2 + 4*x0*x1^3"));
  EXPECT_EQ(psi_gen(p, Multicycle(2, {0, 1, 1})), SparseIntPoly::parse(3, "4*x1^3*x2 + 12*x0^2*x1*x2 + 4*x1*x2^3"));
  EXPECT_THROW(psi_gen(p, Multicycle(3, {0, 0, 0})), std::invalid_argument);
}

TEST(PsiGen, ComponentsSumToFullPower) {
  for (long n = 0; n <= 3; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; (k - 1) * d <= 12; ++d) {
        const Params p(n, k, d);
        SparseIntPoly total(n + 1);
        for (const auto& g : enumerate_multicycles(k, n + 1)) {
          const auto psi = psi_gen(p, g);
          EXPECT_EQ(psi.is_zero(), !in_G(p, p.D(), g)) << p.to_string() << g.to_string();
          if (!psi.is_zero()) {
            EXPECT_EQ(psi.homogeneous_degree(), p.D());
            for (const auto& [e, c] : psi.terms()) EXPECT_EQ(Multicycle::of_exponents(k, e), g);
          }
          total += psi;
        }
        EXPECT_EQ(total, sum_of_variables(n + 1).pow(p.D())) << p.to_string();
        EXPECT_EQ(BigInt(psi_family(p).size()), gens_count(p));
      }
}

TEST(PhiGen, TrivialCharacterHasUnitCoefficients) {
  for (long n = 1; n <= 3; ++n) {
    const Params p(n, 2, 3);
    const auto comps = phi_gen(p, Multicycle::zero(2, n + 1));
    EXPECT_EQ(BigInt(comps.size()), gens_count(p));
    for (const auto& [h, c] : comps) EXPECT_EQ(c, CyclotomicField::get(2).one());
  }
  EXPECT_THROW(phi_gen(Params(2, 3, 2), Multicycle(3, {1, 0, 0})), std::invalid_argument);
}

TEST(PhiGen, ForwardTransformMatchesDirectExpansion) {
  for (long n = 1; n <= 2; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; d <= 3; ++d) {
        const Params p(n, k, d);
        for (const auto& g : enumerate_multicycles(k, n + 1)) {
          if (g[0] != 0) continue;
          CycPoly via_psi;
          for (const auto& [h, c] : phi_gen(p, g)) add_into(via_psi, to_cyc(psi_gen(p, h), k), c);
          drop_zeros(via_psi);
          auto direct = phi_expanded(p, g);
          drop_zeros(direct);
          EXPECT_EQ(via_psi, direct) << p.to_string() << g.to_string();
        }
      }
}

TEST(PhiGen, InverseTransformRecoversPsi) {
  for (long n = 1; n <= 2; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; d <= 3; ++d) {
        const Params p(n, k, d);
        const auto& field = CyclotomicField::get(k);
        const Rational scale = Rational(1) / Rational(ipow(BigInt(k), n + 1));
        for (const auto& g : enumerate_multicycles(k, n + 1)) {
          CycPoly acc;
          for (const auto& h : enumerate_multicycles(k, n + 1))
            add_into(acc, phi_expanded(p, h), field.xi_pow(-dot(g, h)) * scale);
          drop_zeros(acc);
          EXPECT_EQ(acc, to_cyc(psi_gen(p, g), k)) << p.to_string() << g.to_string();
        }
      }
}

TEST(PhiGen, AveragingOverCharactersGivesPsiZero) {
  const Params p(2, 2, 4);
  const auto& field = CyclotomicField::get(2);
  CycPoly acc;
  for (const auto& g : enumerate_multicycles(2, 3)) add_into(acc, phi_expanded(p, g), field.one() * Rational(1, 8));
  drop_zeros(acc);
  EXPECT_EQ(acc, to_cyc(psi_gen(p, Multicycle::zero(2, 3)), 2));
}

TEST(HfOracle, Examples) {
  EXPECT_EQ(hf_oracle(Params(3, 2, 5), 7), 40);
  EXPECT_EQ(hf_oracle(Params(2, 2, 2), 2), 2);
  EXPECT_EQ(hf_oracle(Params(2, 4, 8), 28), 195);
  EXPECT_EQ(hf_oracle(Params(2, 3, 2), 1), 3);
  EXPECT_EQ(hf_oracle(Params(2, 3, 2), -1), 0);
}

TEST(HfOracle, AgreesWithProvedFormula) {
  for (long n = 1; n <= 3; ++n)
    for (long d = 1; d <= 6; ++d) {
      const Params p(n, 2, d);
      const PowerIdealOracle oracle(p);
      for (long i = 0; i <= 2 * d - 1; ++i) ASSERT_EQ(oracle.hf(i), hf_proved_k2(p, i)) << p.to_string() << " " << i;
    }
}

TEST(HfOracle, AgreesWithConjecturedFormulaAtSmallScale) {
  for (long k = 3; k <= 4; ++k)
    for (long d = 1; d <= 4; ++d) {
      const Params p(2, k, d);
      const PowerIdealOracle oracle(p);
      for (long i = 0; i <= p.kd(); ++i) EXPECT_EQ(oracle.hf(i), hf_conjectured(p, i)) << p.to_string() << " " << i;
    }
}

TEST(HfOracle, ParallelBlocksGiveTheSameAnswer) {
  const Params p(3, 3, 3);
  const PowerIdealOracle serial(p, {kDefaultMaxBlockEntries, 1});
  const PowerIdealOracle parallel(p, {kDefaultMaxBlockEntries, 4});
  for (long i = p.D(); i < p.kd(); ++i) EXPECT_EQ(serial.hf(i), parallel.hf(i)) << i;
}

TEST(HfOracle, GuardRefusesLargeBlocks) {
  EXPECT_THROW(hf_oracle(Params(3, 2, 6), 7, {10, 1}), GuardRefusal);
  EXPECT_EQ(hf_oracle(Params(3, 2, 6), 7, {0, 1}), hf_proved_k2(Params(3, 2, 6), 7));
  // below D nothing is built
  EXPECT_EQ(hf_oracle(Params(3, 2, 6), 3, {1, 1}), 20);
}

TEST(FatOracle, Examples) {
  EXPECT_EQ(fat_oracle(2, 2, 1, 2), 4);
  EXPECT_EQ(fat_oracle(2, 2, 1, 0), 1);
  EXPECT_EQ(fat_oracle(2, 3, 1, 3), 8);
  EXPECT_EQ(fat_oracle(2, 3, 1, 4), 9);
  EXPECT_EQ(fat_oracle(0, 3, 2, 5), 1);
  EXPECT_EQ(fat_oracle(2, 2, 1, -1), 0);
}

TEST(FatOracle, AgreesWithSeries) {
  for (long k = 2; k <= 3; ++k)
    for (long n = 1; n <= 2; ++n)
      for (long d = 1; d <= 3; ++d)
        for (long m = 0; m <= k * d + k * n; ++m)
          ASSERT_EQ(fat_oracle(n, k, d, m), fat_hf(n, k, d, m)) << n << " " << k << " " << d << " " << m;
}

TEST(FatOracle, GuardRefuses) {
  EXPECT_THROW(fat_oracle(2, 3, 3, 12, {100, 1}), GuardRefusal);
}

TEST(InitialIdeal, Examples) {
  EXPECT_EQ(initial_ideal_hf(2, 2, 1, 2), 4);
  EXPECT_EQ(initial_ideal_hf(1, 3, 2, 6), 6);
  EXPECT_EQ(initial_ideal_hf(2, 2, 2, 40), 12);
  EXPECT_EQ(initial_ideal_hf(2, 2, 2, -3), 0);
}

TEST(InitialIdeal, MatchesEnumerationAndFatSeries) {
  for (long n = 0; n <= 4; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; d <= 6; ++d)
        for (long m = 0; m <= k * d + k * n; ++m) {
          const BigInt v = initial_ideal_hf(n, k, d, m);
          ASSERT_EQ(v, fat_hf(n, k, d, m)) << n << " " << k << " " << d << " " << m;
          if (n <= 3 && m <= 14) ASSERT_EQ(v, brute_initial_count(n, k, d, m));
        }
}

TEST(PhiRank, Examples) {
  EXPECT_EQ(phi_rank(Params(3, 2, 5)), 8);
  EXPECT_EQ(phi_rank(Params(3, 2, 2)), 7);
  EXPECT_EQ(phi_rank(Params(2, 4, 3)), 16);
  EXPECT_EQ(phi_rank(Params(1, 2, 1)), 2);
  EXPECT_EQ(phi_rank(Params(0, 3, 2)), 1);
}

TEST(PhiRank, EqualsGeneratorCount) {
  for (long n = 0; n <= 3; ++n)
    for (long k = 2; k <= 4; ++k)
      for (long d = 1; d <= 4; ++d) {
        const Params p(n, k, d);
        EXPECT_EQ(phi_rank(p, {0, 1}), gens_count(p)) << p.to_string();
        if (k == 2) EXPECT_EQ(phi_independent_k2(p), phi_rank(p, {0, 1}) == ipow(BigInt(2), n)) << p.to_string();
      }
}

TEST(SocleDims, CompleteIntersectionIsGorenstein) {
  const auto s = socle_dims(Params(1, 2, 3));
  EXPECT_EQ(s, (std::vector<BigInt>{0, 0, 0, 0, 1, 0}));
}

TEST(SocleDims, ThreeVariables) {
  const auto s2 = socle_dims(Params(2, 2, 2));
  EXPECT_EQ(s2, (std::vector<BigInt>{0, 0, 2, 0}));
  const Params p(2, 2, 3);
  const auto s3 = socle_dims(p);
  ASSERT_EQ(s3.size(), 6u);
  for (long i = 0; i < 6; ++i) EXPECT_LE(s3[i], hf_proved_k2(p, i));
  EXPECT_EQ(s3[4], hf_proved_k2(p, 4));  // the top degree is always socle
  EXPECT_EQ(s3[5], 0);
  EXPECT_THROW(socle_dims(Params(2, 3, 2)), std::invalid_argument);
}
