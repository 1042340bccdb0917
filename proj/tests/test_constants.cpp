#include "ends/constants.hpp"
#include "ends/errors.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ends;

TEST(DeriveCertified, UnitDelta) {
  const ConstantsLedger l = derive_certified(1, 0, 1, 1, 0);
  EXPECT_EQ(l.mode, LedgerMode::certified);
  EXPECT_EQ(l.alpha, 232);
  EXPECT_EQ(l.rho, 233);
  EXPECT_EQ(l.tau, 14);
  EXPECT_EQ(l.delta_XH, 529);
  EXPECT_EQ(l.M, 22751);
  EXPECT_EQ(l.R0, 23280);
  EXPECT_EQ(l.inner_offset, 3 * 529);
  EXPECT_EQ(l.dag_offset, 8 * 529);
  EXPECT_EQ(l.mu, 4 * 529 + 1);
  ASSERT_TRUE(l.outer_radius.has_value());
  EXPECT_EQ(*l.outer_radius, 23280 + 10 * (BigInt(1) << 23280));
  EXPECT_FALSE(derive_certified(1000, 0, 1000, 1, 0).outer_radius.has_value());
  EXPECT_EQ(l.provenance.at("M"), Provenance::formula);
  EXPECT_EQ(l.provenance.at("delta_X"), Provenance::user);
}

TEST(DeriveCertified, DegenerateTree) {
  const ConstantsLedger l = derive_certified(0, 0, 0, 1, 0);
  for (const Rational* q : {&l.delta_X, &l.epsilon, &l.eta, &l.tau, &l.alpha, &l.diam_core, &l.rho, &l.delta_XH, &l.mu,
                            &l.inner_offset, &l.dag_offset}) {
    EXPECT_EQ(*q, 0);
  }
  EXPECT_EQ(l.M, 4);
  EXPECT_EQ(l.R0, 4);
  ASSERT_TRUE(l.outer_radius.has_value());
  EXPECT_EQ(*l.outer_radius, 4);
}

TEST(DeriveCertified, MixedInputs) {
  const ConstantsLedger l = derive_certified(1, 2, 1, 2, 3);
  EXPECT_EQ(l.alpha, 332);
  EXPECT_EQ(l.delta_XH, 739);
  EXPECT_EQ(l.tau, 12 + 4 + 2);
}

TEST(DeriveCertified, GeodesicExtensionAdjustment) {
  CertifiedInputs in;
  in.delta_X = 1;
  in.eta = Rational(1);
  in.geodesic_extension_adjusted = true;
  const ConstantsLedger l = derive_certified(in);
  EXPECT_EQ(l.delta_XH, 4 * 529 + 1);
  EXPECT_EQ(l.M, ceil(43 * l.delta_XH + 4));
  EXPECT_EQ(l.R0, l.M + 2117);
  EXPECT_TRUE(l.geodesic_extension_adjusted);
}

TEST(DeriveCertified, SmallDeltaExpandsOuterRadius) {
  const ConstantsLedger l = derive_certified(Rational(1, 1000), 0, Rational(1, 1000), 1, 0);
  EXPECT_EQ(l.delta_XH, Rational(529, 1000));
  EXPECT_EQ(l.M, 27);
  EXPECT_EQ(l.R0, 28);
  ASSERT_TRUE(l.outer_radius.has_value());
  EXPECT_EQ(*l.outer_radius, 28 + 2684355);  // ceil(2^28 / 100)
}

TEST(DeriveCertified, RejectsNegativeInputs) {
  EXPECT_THROW(derive_certified(-1, 0, 0, 1, 0), PreconditionError);
  EXPECT_THROW(derive_certified(0, 0, 0, 0, 0), PreconditionError);
}

TEST(DeriveCertified, IdentitiesHoldExactly) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 40);
  std::uniform_int_distribution<int> den(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational d(num(rng), den(rng));
    const Rational e(num(rng), den(rng));
    const Rational eta(num(rng), den(rng));
    const Rational diam(num(rng), den(rng));
    const int n0 = 1 + trial % 4;
    const ConstantsLedger l = derive_certified(d, e, eta, n0, diam);
    ASSERT_EQ(l.tau, 12 * d + 2 * e + 2 * eta);
    ASSERT_EQ(l.alpha, (132 + 100 * n0) * d);
    ASSERT_EQ(l.rho, diam + l.alpha + d);
    ASSERT_EQ(l.delta_XH, 2 * (diam + l.alpha + e) + 65 * d);
    ASSERT_GE(Rational(l.M), 43 * l.delta_XH + 4);
    ASSERT_LT(Rational(l.M), 43 * l.delta_XH + 5);
    ASSERT_GE(Rational(l.R0), Rational(l.M) + l.delta_XH);
    ASSERT_LT(Rational(l.R0), Rational(l.M) + l.delta_XH + 1);
    ASSERT_EQ(l.inner_offset, 3 * l.delta_XH);
    if (d == 0) {
      ASSERT_TRUE(l.outer_radius.has_value());
      ASSERT_EQ(*l.outer_radius, l.R0);
    }
  }
}

TEST(EmpiricalLedger, Examples) {
  const ConstantsLedger l = empirical_ledger({3, Rational(1), 8}, {});
  EXPECT_EQ(l.mode, LedgerMode::empirical);
  EXPECT_EQ(l.R0, 3);
  EXPECT_EQ(l.inner_radius(), 2);
  EXPECT_EQ(*l.outer_radius, 8);
  EXPECT_EQ(l.M, 3);
  EXPECT_EQ(l.dag_offset, 1);
  EXPECT_EQ(l.provenance.at("R0"), Provenance::user);
  EXPECT_EQ(l.provenance.at("outer_radius"), Provenance::user);
  EXPECT_EQ(l.provenance.at("M"), Provenance::default_value);
  EXPECT_EQ(l.provenance.at("delta_X"), Provenance::default_value);
  EXPECT_THROW(empirical_ledger({3, Rational(3), 8}, {}), PreconditionError);
  EXPECT_THROW(empirical_ledger({5, Rational(2), 5}, {}), PreconditionError);
  EXPECT_THROW(empirical_ledger({5, Rational(-1), 7}, {}), PreconditionError);
}

TEST(EmpiricalLedger, EstimatesCarryTheirSource) {
  Estimates e;
  e.delta_X = Rational(3, 2);
  e.delta_source = Provenance::estimated;
  e.epsilon = 2;
  e.epsilon_source = Provenance::user;
  const ConstantsLedger l = empirical_ledger({4, Rational(3, 2), 6, 2, Rational(5)}, e);
  EXPECT_EQ(l.delta_X, Rational(3, 2));
  EXPECT_EQ(l.alpha, 232 * Rational(3, 2));
  EXPECT_EQ(l.provenance.at("delta_X"), Provenance::estimated);
  EXPECT_EQ(l.provenance.at("epsilon"), Provenance::user);
  EXPECT_EQ(l.M, 2);
  EXPECT_EQ(l.dag_offset, 5);
  EXPECT_EQ(l.provenance.at("dag_offset"), Provenance::user);
}

TEST(LedgerJson, RoundTripIsExact) {
  std::vector<ConstantsLedger> ledgers{derive_certified(1, 0, 1, 1, 0), derive_certified(0, 0, 0, 1, 0),
                                       derive_certified(Rational(1, 1000), Rational(7, 3), Rational(2, 9), 3, Rational(5, 2)),
                                       empirical_ledger({3, Rational(3, 2), 5}, {})};
  CertifiedInputs in;
  in.delta_X = Rational(1, 7);
  in.geodesic_extension_adjusted = true;
  in.provenance["delta_X"] = Provenance::override_value;
  ledgers.push_back(derive_certified(in));
  for (const auto& l : ledgers) {
    const std::string text = to_json(l).dump();
    const ConstantsLedger back = ledger_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back, l);
    EXPECT_EQ(to_json(back).dump(), text);
  }
}

TEST(LedgerJson, Malformed) {
  nlohmann::json j = to_json(derive_certified(1, 0, 1, 1, 0));
  nlohmann::json missing = j;
  missing.erase("R0");
  EXPECT_THROW(ledger_from_json(missing), ParseError);
  nlohmann::json bad_tag = j;
  bad_tag["provenance"]["M"] = "guessed";
  EXPECT_THROW(ledger_from_json(bad_tag), ParseError);
  nlohmann::json bad_number = j;
  bad_number["alpha"] = "2x";
  EXPECT_THROW(ledger_from_json(bad_number), ParseError);
  nlohmann::json bad_mode = j;
  bad_mode["mode"] = "exact";
  EXPECT_THROW(ledger_from_json(bad_mode), ParseError);
}

TEST(Provenance, Names) {
  EXPECT_EQ(to_string(Provenance::override_value), "override");
  EXPECT_EQ(to_string(Provenance::default_value), "default");
  EXPECT_EQ(to_string(LedgerMode::certified), "certified");
}
