#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trapezoid/error.hpp"
#include "trapezoid/sturmian.hpp"
#include "trapezoid/trapezoidal.hpp"

namespace trapezoid {
namespace {

Word W(const std::string& s) { return Word::parse(s); }

bool trapezoidal_by_oracle(const std::string& s) {
  const auto p = oracle::parameters(s);
  return p.R + p.K == s.size();
}

TEST(Closed, Examples) {
  EXPECT_TRUE(is_closed(W("aabbaa")));
  EXPECT_TRUE(is_closed(W("ababa")));
  EXPECT_FALSE(is_closed(W("aabbaaa")));
  EXPECT_TRUE(is_closed(Word()));
  EXPECT_TRUE(is_closed(W("a")));
  EXPECT_TRUE(is_closed(W("aababaaba")));
  EXPECT_EQ(closed_witness(W("aababaaba")), W("aaba"));
  EXPECT_EQ(closed_witness(W("ababa")), W("aba"));
  EXPECT_FALSE(closed_witness(W("aabbaaa")).has_value());
  EXPECT_EQ(openness(W("aaba")), Openness::open);
}

TEST(Closed, MatchesDefinition) {
  EXPECT_FALSE(closed_witness(Word()).has_value());
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const Word w = W(s);
      ASSERT_EQ(is_closed(w), oracle::closed(s)) << s;
      const auto witness = closed_witness(w);
      ASSERT_EQ(witness.has_value(), oracle::closed(s)) << s;
      if (witness) {
        const auto occ = oracle::occurrences(s, witness->str());
        EXPECT_EQ(occ.size(), 2u) << s;
        EXPECT_EQ(*witness, period_data(w).longest_border) << s;
      }
    }
  }
}

TEST(ClosedCharacterizations, Examples) {
  for (bool c : closed_characterization_oracles(W("abba"))) EXPECT_TRUE(c);
  for (bool c : closed_characterization_oracles(W("aaba"))) EXPECT_FALSE(c);
  EXPECT_THROW(closed_characterization_oracles(Word()), std::invalid_argument);
}

TEST(ClosedCharacterizations, AllTenAgree) {
  for (std::size_t n = 1; n <= 13; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w = Word::from_bits(bits, n);
      const bool closed = is_closed(w);
      const auto c = closed_characterization_oracles(w);
      for (std::size_t k = 0; k < c.size(); ++k) ASSERT_EQ(c[k], closed) << w << " clause " << k;
    }
  }
}

TEST(Trapezoidal, Examples) {
  EXPECT_TRUE(is_trapezoidal(W("aaababa")));
  EXPECT_FALSE(is_trapezoidal(W("aabbaa")));
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_TRUE(is_trapezoidal(Word::power(Letter::a, n)));
  EXPECT_THROW(is_trapezoidal(Word()), std::invalid_argument);
}

TEST(Trapezoidal, SevenCharacterizationsAgree) {
  for (std::size_t n = 1; n <= 11; ++n) {
    for (const auto& s : oracle::all_words(n)) {
      const bool t = is_trapezoidal(W(s));
      ASSERT_EQ(t, trapezoidal_by_oracle(s)) << s;
      const auto c = oracle::trapezoidal_characterizations(s);
      for (std::size_t k = 0; k < c.size(); ++k) ASSERT_EQ(c[k], t) << s << " clause " << k;
    }
  }
}

TEST(Inclusions, SturmianTrapezoidalRich) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w = Word::from_bits(bits, n);
      const bool sturmian = is_balanced(w);
      const bool trapezoidal = is_trapezoidal(w);
      const bool closed = is_closed(w);
      if (sturmian) ASSERT_TRUE(trapezoidal) << w;
      if (trapezoidal) ASSERT_TRUE(is_rich(w)) << w;
      if (closed && trapezoidal) ASSERT_TRUE(sturmian) << w;
      ASSERT_EQ(closed, is_closed(reversal(w))) << w;
      if (is_palindrome(w)) {
        ASSERT_EQ(trapezoidal, sturmian) << w;
        if (sturmian) ASSERT_TRUE(closed) << w;
        if (is_rich(w)) ASSERT_TRUE(closed) << w;
      }
    }
  }
  // Strictness witnesses.
  EXPECT_TRUE(is_trapezoidal(W("aaababa")));
  EXPECT_FALSE(is_balanced(W("aaababa")));
  EXPECT_TRUE(is_rich(W("aabbaa")));
  EXPECT_FALSE(is_trapezoidal(W("aabbaa")));
}

TEST(Inclusions, StrictSturmianInclusionAtEveryLengthFromSix) {
  for (std::size_t n = 6; n <= 14; ++n) {
    bool witness = false;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n) && !witness; ++bits) {
      const Word w = Word::from_bits(bits, n);
      witness = is_trapezoidal(w) && !is_balanced(w);
    }
    EXPECT_TRUE(witness) << n;
  }
}

TEST(Openness, ParameterLawsForTrapezoidalWords) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w = Word::from_bits(bits, n);
      if (!is_trapezoidal(w)) continue;
      const auto p = de_luca_parameters(w);
      const bool open = !is_closed(w);
      ASSERT_EQ(open, p.r_w.has_value() && p.h_w == *p.r_w) << w;
      ASSERT_EQ(open, p.l_w.has_value() && p.k_w == *p.l_w) << w;
      if (open) {
        ASSERT_EQ(p.H, p.R) << w;
        ASSERT_EQ(p.K, p.L) << w;
      } else {
        ASSERT_EQ(p.H, p.K) << w;
        ASSERT_EQ(p.L, p.R) << w;
        ASSERT_EQ(p.l_w, p.r_w) << w;
        if (p.l_w) ASSERT_TRUE(is_central(*p.l_w)) << w;
      }
    }
  }
}

TEST(Openness, ConverseFailsOnAbbaAndAaba) {
  for (const char* s : {"abba", "aaba"}) {
    const auto p = de_luca_parameters(W(s));
    EXPECT_EQ(p.H, 2u) << s;
    EXPECT_EQ(p.K, 2u) << s;
    EXPECT_EQ(p.L, 2u) << s;
    EXPECT_EQ(p.R, 2u) << s;
  }
  EXPECT_TRUE(is_closed(W("abba")));
  EXPECT_FALSE(is_closed(W("aaba")));
}

TEST(Rich, Examples) {
  EXPECT_TRUE(is_rich(W("aabbaa")));
  EXPECT_FALSE(is_rich(W("aaababbaabbabaaa")));
  EXPECT_TRUE(is_rich(Word()));
}

TEST(Rich, MatchesCompleteReturnCharacterization) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& s : oracle::all_words(n)) ASSERT_EQ(is_rich(W(s)), oracle::rich_by_complete_returns(s)) << s;
  }
}

TEST(Rich, PalindromeCounterexampleOfLength16) {
  const Word w = W("aaababbaabbabaaa");
  EXPECT_TRUE(is_palindrome(w));
  EXPECT_TRUE(is_closed(w));
  EXPECT_EQ(count_palindromic_factors(w), 16u);
  EXPECT_EQ(oracle::palindromes(w.str()).size(), 16u);
  EXPECT_FALSE(is_rich(w));
}

TEST(PqFactorization, Examples) {
  auto s = dalessandro_factorization(W("aaababa"));
  EXPECT_EQ(s.p, W("aaa"));
  EXPECT_EQ(s.q, W("baba"));
  s = dalessandro_factorization(W("aaabab"));
  EXPECT_EQ(s.p, W("aaa"));
  EXPECT_EQ(s.q, W("bab"));
  EXPECT_THROW(dalessandro_factorization(W("abaababa")), PreconditionError);
  EXPECT_THROW(dalessandro_factorization(W("aabbaa")), PreconditionError);
}

TEST(PqFactorization, SplitPropertiesUpToLength12) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w = Word::from_bits(bits, n);
      if (is_balanced(w) || !is_trapezoidal(w)) continue;
      const auto s = dalessandro_factorization(w);
      const auto d = *minimal_pathological_pair(w);
      const auto params = de_luca_parameters(w);
      ASSERT_EQ(s.p + s.q, w);
      ASSERT_EQ(s.q.size(), params.K) << w;
      ASSERT_TRUE(is_balanced(s.p)) << w;
      ASSERT_TRUE(is_balanced(s.q)) << w;
      const Word zf = period_data(d.f).fractional_root;
      const Word zg = period_data(d.g).fractional_root;
      ASSERT_EQ(reversal(s.p), periodic_extension(zf, s.p.size())) << w;
      ASSERT_EQ(s.q, periodic_extension(zg, s.q.size())) << w;
      ASSERT_EQ(params.r_w, s.p.prefix(params.R - 1)) << w;
    }
  }
}

TEST(Semicentral, Examples) {
  EXPECT_TRUE(is_semicentral(W("abaababa")));
  EXPECT_TRUE(is_semicentral(W("aaaabaaa")));
  EXPECT_FALSE(is_semicentral(W("abba")));

  auto t = semicentral_decompose(W("abaababa"));
  EXPECT_EQ(t.u, W("aba"));
  EXPECT_EQ(t.x, Letter::a);
  EXPECT_EQ(t.y, Letter::b);
  t = semicentral_decompose(W("ababaaba"));
  EXPECT_EQ(t.u, W("aba"));
  EXPECT_EQ(t.x, Letter::b);
  EXPECT_EQ(t.y, Letter::a);
  t = semicentral_decompose(W("bbbabbbb"));
  EXPECT_EQ(t.u, W("bbb"));
  EXPECT_EQ(t.x, Letter::a);
  EXPECT_EQ(t.y, Letter::b);
  EXPECT_THROW(semicentral_decompose(W("abba")), PreconditionError);
}

TEST(Semicentral, EquivalentToUxyuWithCentralU) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w = Word::from_bits(bits, n);
      bool uxyu = false;
      if (n % 2 == 0) {
        const std::size_t h = n / 2 - 1;
        const Word u = w.prefix(h);
        uxyu = w.suffix(h) == u && w[h] != w[h + 1] && oracle::central_by_equations(u.str());
      }
      ASSERT_EQ(is_semicentral(w), uxyu) << w;
    }
  }
}

TEST(Semicentral, NonStrictlyBispecial) {
  for (std::size_t n = 2; n <= 12; n += 2) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const Word w = Word::from_bits(bits, n);
      if (!is_semicentral(w)) continue;
      const std::string s = w.str();
      EXPECT_TRUE(oracle::balanced("a" + s)) << s;
      EXPECT_TRUE(oracle::balanced("b" + s)) << s;
      EXPECT_TRUE(oracle::balanced(s + "a")) << s;
      EXPECT_TRUE(oracle::balanced(s + "b")) << s;
      EXPECT_FALSE(oracle::balanced("a" + s + "b") && oracle::balanced("b" + s + "a")) << s;
    }
  }
}

TEST(Classify, Examples) {
  auto r = classify(W("aaababa"));
  EXPECT_TRUE(r.is_trapezoidal);
  EXPECT_FALSE(r.is_sturmian);
  EXPECT_EQ(r.openness, Openness::open);
  EXPECT_TRUE(r.is_rich);
  EXPECT_FALSE(r.is_palindrome);
  EXPECT_FALSE(r.is_semicentral);
  ASSERT_TRUE(r.pq_split.has_value());
  EXPECT_EQ(r.pq_split->p, W("aaa"));
  EXPECT_EQ(r.pq_split->q, W("baba"));
  EXPECT_EQ(r.complexity, (std::vector<std::size_t>{1, 2, 3, 4, 4, 3, 2, 1}));

  r = classify(W("aababaaba"));
  EXPECT_TRUE(r.is_trapezoidal);
  EXPECT_TRUE(r.is_sturmian);
  EXPECT_EQ(r.openness, Openness::closed);
  EXPECT_EQ(r.closed_witness, W("aaba"));
  EXPECT_FALSE(r.pq_split.has_value());

  r = classify(W("abaababaaba"));
  EXPECT_TRUE(r.is_trapezoidal);
  EXPECT_TRUE(r.is_sturmian);
  EXPECT_EQ(r.openness, Openness::closed);
  EXPECT_TRUE(r.is_palindrome);

  r = classify(W("aaaaa"));
  EXPECT_TRUE(r.is_trapezoidal);
  EXPECT_TRUE(r.is_sturmian);
  EXPECT_EQ(r.openness, Openness::closed);
  EXPECT_TRUE(r.is_palindrome);
  EXPECT_TRUE(r.is_rich);
  EXPECT_FALSE(r.is_semicentral);

  r = classify(W("abaababa"));
  EXPECT_TRUE(r.is_semicentral);
  ASSERT_TRUE(r.semicentral_triple.has_value());
  EXPECT_EQ(r.semicentral_triple->u, W("aba"));

  EXPECT_THROW(classify(Word()), std::invalid_argument);
}

TEST(SturmianPalindrome, Examples) {
  auto c = sturmian_palindrome_tests(W("abaaba"));
  EXPECT_TRUE(c.is_palindrome);
  EXPECT_TRUE(c.is_sturmian);
  EXPECT_EQ(c.period, 3u);
  EXPECT_EQ(c.R, 2u);
  EXPECT_TRUE(c.period_law);

  c = sturmian_palindrome_tests(W("aaababbaabbabaaa"));
  EXPECT_TRUE(c.is_palindrome);
  EXPECT_FALSE(c.is_sturmian);
  EXPECT_NE(c.period, c.R + 1);
  EXPECT_TRUE(c.period_law);

  c = sturmian_palindrome_tests(W("aababaaba"));
  EXPECT_FALSE(c.is_palindrome);
  EXPECT_TRUE(c.is_closed_trapezoidal);
  EXPECT_TRUE(c.longest_repeated_prefix_law);
  EXPECT_FALSE(is_palindrome(de_luca_parameters(W("aababaaba")).h_w));
}

TEST(SturmianPalindrome, LawsHoldUpToLength12) {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto c = sturmian_palindrome_tests(Word::from_bits(bits, n));
      ASSERT_TRUE(c.period_law);
      ASSERT_TRUE(c.longest_repeated_prefix_law);
      ASSERT_TRUE(c.special_factor_law);
    }
  }
}

}  // namespace
}  // namespace trapezoid
