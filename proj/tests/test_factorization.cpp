#include <gtest/gtest.h>

#include <random>
#include <string>

#include "bmf/error.hpp"
#include "bmf/factorization.hpp"
#include "bmf/json_io.hpp"

namespace bmf {
namespace {

Factorization fixture(const std::string& name) {
  return factorization_from_json(read_json_file(std::string(BMF_TEST_DATA) + "/" + name));
}

BraidWord W(int p, const char* s) { return BraidWord::parse(p, s); }

TEST(FactorizationTest, FixturesValidate) {
  for (const char* name : {"node2.json", "branch2.json", "smooth_cubic.json"}) {
    const Factorization f = fixture(name);
    EXPECT_TRUE(validate(f)) << name;
    EXPECT_EQ(total_exponent(f), f.strands() * (f.strands() - 1)) << name;
  }
}

TEST(FactorizationTest, Profiles) {
  EXPECT_EQ(profile(fixture("node2.json")), (SingularityProfile{0, 1, 0}));
  EXPECT_EQ(profile(fixture("branch2.json")), (SingularityProfile{2, 0, 0}));
  EXPECT_EQ(profile(fixture("smooth_cubic.json")), (SingularityProfile{6, 0, 0}));
  const Factorization raw(2, {Factor::raw(W(2, "1 1"))});
  EXPECT_THROW(profile(raw), InputError);
}

TEST(FactorizationTest, WrongProductFailsValidation) {
  const Factorization f(3, {Factor::half_twist(BraidWord(3), 1), Factor::half_twist(W(3, "2 1"), 1)});
  EXPECT_FALSE(validate(f));
  const Factorization cusp(2, {Factor::half_twist(BraidWord(2), 3)});
  EXPECT_FALSE(validate(cusp));
}

TEST(FactorizationTest, ConstructorChecks) {
  EXPECT_THROW(Factor::half_twist(BraidWord(3), 0), InputError);
  EXPECT_THROW(Factorization(3, {Factor::half_twist(BraidWord(2), 1)}), InputError);
  EXPECT_THROW(Factorization(2, {Factor::half_twist(BraidWord(2), 4)}, true), InputError);
  EXPECT_THROW(Factorization(2, {Factor::raw(W(2, "1"))}, true), InputError);
}

TEST(FactorizationTest, FactorWordIsConjugatedPower) {
  const Factor t = Factor::half_twist(W(3, "2 1"), 2);
  EXPECT_TRUE(equals(t.word(), W(3, "-1 -2 1 1 2 1")));
  const Factor c = t.conjugated(W(3, "2"));
  EXPECT_TRUE(equals(c.word(), W(3, "-2") * t.word() * W(3, "2")));
}

TEST(FactorizationTest, ClassifyRecoversConjugator) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> idx(1, 2);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> q;
    for (int k = 0; k < 4; ++k) q.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
    const int rho = 1 + t % 3;
    const BraidWord w = conj_halftwist(BraidWord::from_ints(3, q), rho);
    const auto hit = classify_positive(w);
    ASSERT_TRUE(hit.has_value()) << w.to_string();
    EXPECT_EQ(hit->rho, rho);
    EXPECT_TRUE(equals(conj_halftwist(hit->conjugator, hit->rho), w));
  }
}

TEST(FactorizationTest, ClassifyRejectsNonHalfTwists) {
  EXPECT_FALSE(classify_positive(delta_sq(3)).has_value());
  EXPECT_FALSE(classify_positive(W(3, "1 2")).has_value());
  EXPECT_FALSE(classify_positive(W(3, "-1")).has_value());
}

TEST(FactorizationJsonTest, RoundTripHalfTwistForm) {
  const Factorization f = fixture("smooth_cubic.json");
  const json j = to_json(f);
  const Factorization g = factorization_from_json(j);
  EXPECT_EQ(to_json(g).dump(), j.dump());
  EXPECT_TRUE(g.cuspidal());
  EXPECT_TRUE(factorwise_equal(f, g));
}

TEST(FactorizationJsonTest, RoundTripRawForm) {
  const Factorization f(3, {Factor::raw(W(3, "2 1 2 1 2 1"))});
  const json j = to_json(f);
  EXPECT_TRUE(j.contains("words"));
  EXPECT_EQ(to_json(factorization_from_json(j)).dump(), j.dump());
}

TEST(FactorizationJsonTest, MalformedInputs) {
  EXPECT_THROW(factorization_from_json(json::parse(R"({"factors": []})")), InputError);
  EXPECT_THROW(factorization_from_json(json::parse(R"({"p": 3})")), InputError);
  EXPECT_THROW(factorization_from_json(json::parse(R"({"p": 3, "factors": [{"q": [4], "rho": 1}]})")),
               InputError);
  EXPECT_THROW(factorization_from_json(json::parse(R"({"p": 3, "words": [[1, "x"]]})")), InputError);
}

}  // namespace
}  // namespace bmf
