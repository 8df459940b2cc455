#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "bmf/braid.hpp"
#include "bmf/codes.hpp"
#include "bmf/error.hpp"
#include "code_fixtures.hpp"

namespace bmf::codes {
namespace {

TEST(CodeParseTest, ParsesSymbols) {
  const Code c = parse_code(3, "u0, o3, h2^-1, l0, q1^-1");
  ASSERT_EQ(c.size(), 5u);
  EXPECT_EQ(c[1], o(-1));
  EXPECT_EQ(c[2], h(2, -1));
  EXPECT_EQ(to_string(c, 3), "u0, o3, h2^-1, l0, q1^-1");
  EXPECT_EQ(parse_code(3, "h_1^{-1}")[0], h(1, -1));
}

TEST(CodeParseTest, ReportsOffendingToken) {
  try {
    parse_code(3, "u0, x1, u0^-1");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_code(3, "h3"), InputError);
  EXPECT_THROW(parse_code(3, "h1^2"), InputError);
  EXPECT_THROW(parse_code(3, "u0,,u0^-1"), InputError);
  EXPECT_THROW(parse_code(3, "o"), InputError);
}

TEST(CodeReduceTest, Examples) {
  EXPECT_EQ(reduce(parse_code(3, "u0, h2, h2^-1, u0^-1")), parse_code(3, "u0, u0^-1"));
  const Code f = frame_loop(1, 3);
  EXPECT_EQ(reduce(f), f);
  // endpoint markers never cancel
  EXPECT_EQ(reduce(parse_code(3, "q1, q1^-1")).size(), 2u);
}

TEST(CodeReduceTest, FuzzIdempotentAndConfluent) {
  std::mt19937_64 rng(1);
  const Code base = frame_loop(1, 4);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(0, 3);
  for (int t = 0; t < 2000; ++t) {
    Code c = base;
    for (int k = 0; k < 10; ++k) {
      const CodeSymbol s{static_cast<SymbolKind>(1 + kind(rng)), idx(rng), rng() % 2 ? 1 : -1};
      const std::size_t at = 1 + rng() % (c.size() - 1);
      c.insert(c.begin() + at, {s, s.inverse()});
    }
    const Code r = reduce(c);
    EXPECT_EQ(r, base);
    EXPECT_EQ(reduce(r), r);
    EXPECT_TRUE(codes_equal(c, base));
  }
}

TEST(CodeEqualTest, KindsMustMatch) {
  EXPECT_FALSE(codes_equal(frame_loop(1, 3), frame_loop(2, 3)));
  EXPECT_THROW(codes_equal(frame_loop(1, 3), frame_path(1, 3)), InputError);
  EXPECT_THROW(codes_equal(frame_path(1, 3), frame_path(2, 3)), InputError);
}

TEST(CodeFrameTest, FrameLoopTupleAndFreeWord) {
  for (int p : {3, 4}) {
    for (int s = 0; s < p; ++s) {
      const Code f = frame_loop(s, p);
      EXPECT_EQ(f, (Code{u0(), o(s - 1), l(s), o(s, -1), h(s, -1), u0(-1)}));
      EXPECT_EQ(loop_to_free_word(f, p), (FreeWord{s + 1}));
    }
  }
  EXPECT_THROW(frame_loop(3, 3), InputError);
}

TEST(CodeFrameTest, LoopWordIsHomomorphism) {
  const Code a = frame_loop(0, 3);
  const Code b = frame_loop(2, 3);
  // a ends in U_{-1}, b starts and ends in U_1
  Code ab(a.begin(), a.end() - 1);
  ab.push_back(h(0));
  ab.push_back(h(1));
  ab.insert(ab.end(), b.begin() + 1, b.end() - 1);
  ab.push_back(h(1, -1));
  ab.push_back(h(0, -1));
  ab.push_back(u0(-1));
  EXPECT_EQ(loop_to_free_word(ab, 3), (FreeWord{1, 3}));
  Code inv = inverse(Code(a.begin() + 1, a.end() - 1));
  inv.insert(inv.begin(), u0());
  inv.push_back(u0(-1));
  EXPECT_EQ(loop_to_free_word(inv, 3), (FreeWord{-1}));
}

TEST(CodeFrameTest, InconsistentWalkRejected) {
  EXPECT_THROW(loop_to_free_word(parse_code(3, "u0, l1, u0^-1"), 3), InputError);
  EXPECT_THROW(check_path(parse_code(3, "q0, o1, q2^-1"), 3), InputError);
}

TEST(CodeSignTest, BothOrientations) {
  EXPECT_EQ(sign_of(parse_code(3, "q2, h1^-1, q0^-1"), 3), 1);
  EXPECT_EQ(sign_of(parse_code(3, "q0, l1, q2^-1"), 3), -1);
  EXPECT_EQ(sign_of(frame_path(1, 3), 3), -1);
  EXPECT_EQ(sign_of(parse_code(3, "q1, q0^-1"), 3), 1);
}

TEST(CodeQuadrupleTest, CaseTables) {
  EXPECT_EQ(b_quadruple(parse_code(3, "q2, h1^-1, q0^-1"), 3, PathEnd::Plus),
            (std::array<CodeSymbol, 4>{o(1), l(2), o(2, -1), h(2, -1)}));
  EXPECT_EQ(b_quadruple(parse_code(3, "q0, h1, q2^-1"), 3, PathEnd::Minus),
            (std::array<CodeSymbol, 4>{o(1), l(2), o(2, -1), h(2, -1)}));
  EXPECT_EQ(b_quadruple(parse_code(3, "q0, l1, q2^-1"), 3, PathEnd::Plus),
            (std::array<CodeSymbol, 4>{o(0, -1), h(0, -1), o(-1), l(0)}));
  EXPECT_THROW(b_quadruple(parse_code(3, "q0, o0, q2^-1"), 3, PathEnd::Plus), InputError);
}

TEST(CodeQuadrupleTest, EveryQuadrupleIsACircleAroundItsPoint) {
  // Based in the quadrant the path leaves from, each quadruple is a loop
  // around the endpoint: its free class is conjugate to that generator.
  for (const auto& [p, text] : kArcs) {
    const Code path = parse_code(p, text);
    for (auto side : {PathEnd::Plus, PathEnd::Minus}) {
      const auto b = b_quadruple(path, p, side);
      const int point = side == PathEnd::Plus ? path.front().index : path.back().index;
      EXPECT_TRUE(free_conjugate(l_word(Code(b.begin(), b.end())), FreeWord{point + 1})) << text;
    }
  }
}

TEST(CodeRTest, RotationAndNuTwo) {
  for (const auto& [p, text] : kArcs) {
    const Code path = parse_code(p, text);
    for (int k = 1; k + 1 < static_cast<int>(path.size()); ++k) {
      const RCodes r2 = r_codes(path, p, k, 2);
      const RCodes r4 = r_codes(path, p, k, 4);
      // r_sigma_k is a cyclic rotation of r_sigma (as reduced cyclic words).
      EXPECT_TRUE(free_conjugate(l_word(r2.r_sigma_k), l_word(r2.r_sigma))) << text;
      EXPECT_EQ(r2.r_sigma, r4.r_sigma);
      EXPECT_FALSE(r2.r_nu.empty());
    }
  }
  EXPECT_THROW(r_codes(parse_code(3, "q0, h1, q2^-1"), 3, 1, 3), InputError);
  EXPECT_THROW(r_codes(parse_code(3, "q0, h1, q2^-1"), 3, 3, 2), InputError);
}

TEST(CodeRTest, CommutatorForNuTwo) {
  const Code path = parse_code(3, "q0, h1, q2^-1");
  // c- = (h1), c+ = (); B = b-, A = h1^-1 b+ h1.
  const auto bp = b_quadruple(path, 3, PathEnd::Plus);
  const auto bm = b_quadruple(path, 3, PathEnd::Minus);
  const Code B(bm.begin(), bm.end());
  Code A{h(1, -1)};
  A.insert(A.end(), bp.begin(), bp.end());
  A.push_back(h(1));
  const Code comm = reduce(concat(concat(concat(B, A), inverse(B)), inverse(A)));
  EXPECT_EQ(r_codes(path, 3, 2, 2).r_nu, comm);
}

TEST(CodeActionTest, FramePathsMatchArtinAction) {
  for (int p : {3, 4}) {
    for (int j = 1; j < p; ++j) {
      for (int nu : {2, 4}) {
        const ArtinImage im = artin_image(power(BraidWord::generator(p, j), nu));
        for (int s = 0; s < p; ++s) {
          const Code out = act_on_frame_loop(frame_path(j, p), p, nu, s);
          EXPECT_EQ(loop_to_free_word(out, p), im.image(s + 1))
              << "p=" << p << " j=" << j << " nu=" << nu << " s=" << s;
          EXPECT_TRUE(is_reduced(out));
        }
      }
    }
  }
}

TEST(CodeActionTest, ReversedFramePathActsTheSame) {
  const Code rev = parse_code(4, "q2, q1^-1");
  for (int s = 0; s < 4; ++s) {
    EXPECT_EQ(loop_to_free_word(act_on_frame_loop(rev, 4, 2, s), 4),
              loop_to_free_word(act_on_frame_loop(frame_path(2, 4), 4, 2, s), 4));
  }
}

TEST(CodeActionTest, CuratedArcsMatchConjugatedTwist) {
  for (const auto& [p, text] : kArcs) {
    const Code path = parse_code(p, text);
    const auto beta = arc_conjugator(path, p, 6);
    ASSERT_TRUE(beta.has_value()) << text;
    const BraidWord twist = inverse(*beta) * BraidWord::generator(p, 1) * *beta;
    for (int nu : {2, 4}) {
      const ArtinImage im = artin_image(power(twist, nu));
      for (int s = 0; s < p; ++s) {
        EXPECT_EQ(loop_to_free_word(act_on_frame_loop(path, p, nu, s), p), im.image(s + 1))
            << text << " nu=" << nu << " s=" << s;
      }
    }
  }
}

TEST(CodeActionTest, KeyInequality) {
  for (const auto& [p, text] : kArcs) {
    const Code path = parse_code(p, text);
    ASSERT_GE(path.size(), 3u);
    const int s = path.front().index;
    EXPECT_FALSE(codes_equal(act_on_frame_loop(path, p, 4, s), frame_loop(s, p))) << text;
  }
}

TEST(CodeActionTest, DisjointPathLeavesLoopAlone) {
  // q0 -> q1 under nothing; the loop around q3 does not meet the line v1 = 3.
  const Code path = parse_code(4, "q0, h1, q2^-1");
  EXPECT_EQ(act_on_frame_loop(path, 4, 4, 3), frame_loop(3, 4));
}

TEST(CodeActionTest, RejectsBadInput) {
  EXPECT_THROW(act_on_frame_loop(frame_path(1, 3), 3, 3, 0), InputError);
  EXPECT_THROW(act_on_frame_loop(frame_path(1, 3), 3, 2, 3), InputError);
  EXPECT_THROW(act_on_frame_loop(frame_loop(1, 3), 3, 2, 1), InputError);
  EXPECT_THROW(act_on_frame_loop(parse_code(3, "q0, q2^-1"), 3, 2, 1), InputError);
}

}  // namespace
}  // namespace bmf::codes
