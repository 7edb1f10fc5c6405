#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hangword/compile.hpp"
#include "hangword/errors.hpp"
#include "hangword/quotient.hpp"
#include "hangword/verify.hpp"

#include "support.hpp"

using namespace hangword;
using hangword::testing::Raw;
using hangword::testing::hanging_table;
using hangword::testing::random_formula;
using hangword::testing::raw;
using hangword::testing::read_once_corpus;

namespace {
  using Sets = std::vector<std::vector<int>>;

  // Naive oracle: the hanging table of the expanded word equals the
  // function's truth table.
  bool realizes(WordExpr const& e, MonotoneFn const& f) {
    return hanging_table(raw(flatten(e)), f.rank()) == tabulate(f);
  }

  // Every nonconstant monotone table on n nails.
  std::vector<std::vector<bool>> monotone_tables(int n) {
    std::vector<std::vector<bool>> out;
    std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << states); ++bits) {
      std::vector<bool> t(states);
      for (std::uint64_t s = 0; s < states; ++s) {
        t[s] = (bits >> s) & 1U;
      }
      bool ok = !t.front() && t.back();
      for (std::uint64_t s = 0; s < states && ok; ++s) {
        for (int i = 0; i < n && ok; ++i) {
          if (t[s] && !t[s | (std::uint64_t{1} << i)]) {
            ok = false;
          }
        }
      }
      if (ok) {
        out.push_back(t);
      }
    }
    return out;
  }

  std::uint64_t length_of(Compiled const& c) {
    return written_length(c.word);
  }
}  // namespace

TEST_CASE("all_nails") {
  CHECK(raw(all_nails(1).word) == Raw{1});
  CHECK(raw(all_nails(2).word) == Raw{1, 2, -1, -2});
  CHECK(length_of(all_nails(3)) == 10);
  std::uint64_t const expected[] = {16, 28, 40, 52, 64};
  for (int n = 4; n <= 8; ++n) {
    CHECK(length_of(all_nails(n)) == expected[n - 4]);
  }
  CHECK(raw(all_nails(4).word)
        == Raw{1, 2, -1, -2, 3, 4, -3, -4, 2, 1, -2, -1, 4, 3, -4, -3});
  CHECK(all_nails(5).provenance.construction == "all-nails");
  CHECK(all_nails(5).provenance.parameters["n"] == 5);
  CHECK_THROWS_AS(all_nails(0), InputError);
}

TEST_CASE("all_nails lengths: squares at powers of two, linear between") {
  for (int a = 1; a <= 4; ++a) {
    int lo = 1 << a;
    CHECK(length_of(all_nails(lo)) == std::uint64_t(lo) * lo);
    if (a == 4) {
      break;
    }
    int hi = lo * 2;
    auto step = (std::uint64_t(hi) * hi - std::uint64_t(lo) * lo) / lo;
    for (int n = lo; n <= hi; ++n) {
      CHECK(length_of(all_nails(n))
            == std::uint64_t(lo) * lo + step * (n - lo));
    }
  }
}

TEST_CASE("all_nails realizes n out of n") {
  for (int n = 1; n <= 10; ++n) {
    auto c = all_nails(n);
    auto f = MonotoneFn::threshold(n, n);
    if (n <= 8) {
      REQUIRE(realizes(c.word, f));
    }
    auto r = verify_exhaustive(c.word, f);
    REQUIRE(r.verified);
  }
}

TEST_CASE("from_minimal_sets") {
  auto or2 = from_minimal_sets(MonotoneFn::minimal_sets(2, Sets{{1}, {2}}));
  CHECK(raw(or2.word) == Raw{1, 2});
  CHECK(or2.provenance.construction == "lambda");

  auto and2 = from_minimal_sets(MonotoneFn::minimal_sets(2, Sets{{1, 2}}));
  CHECK(raw(and2.word) == Raw{1, 2, -1, -2});

  auto f3 = MonotoneFn::minimal_sets(3, Sets{{1}, {2, 3}});
  auto w3 = from_minimal_sets(f3);
  CHECK(raw(w3.word) == Raw{1, 2, 3, -2, -3});
  CHECK(raw(quotient(flatten(w3.word), NailState::of(3, {1, 2})))
        == Raw{1});
  CHECK(is_identity(quotient(flatten(w3.word), NailState::of(3, {2}))));
  CHECK(realizes(w3.word, f3));
}

TEST_CASE("from_minimal_sets realizes all 166 functions on four nails") {
  int count = 0;
  for (int n = 1; n <= 4; ++n) {
    for (auto const& t : monotone_tables(n)) {
      auto f = MonotoneFn::truth_table(n, t);
      auto c = from_minimal_sets(f);
      REQUIRE(realizes(c.word, f));
      REQUIRE(verify_exhaustive(c.word, f).verified);
      count += n == 4;
    }
  }
  CHECK(count == 166);
}

TEST_CASE("from_formula") {
  for (auto [text, n] : {std::pair{"x1 | x2", 2}, {"x1 & x2", 2},
                         {"(x1 & x2) | x3", 3}, {"x1&x2|x3", 3}}) {
    auto f = parse_formula(text, n);
    auto c = from_formula(f);
    CHECK(c.provenance.construction == "formula");
    CHECK(realizes(c.word, f));
  }
  CHECK(raw(from_formula(parse_formula("x1 | x2", 4)).word)
        == Raw{3, 1, -3, 4, 2, -4});
  CHECK_THROWS_AS(from_formula(parse_formula("x1", 1)), InputError);
  CHECK_THROWS_AS(from_formula(MonotoneFn::threshold(3, 2)), InputError);
}

TEST_CASE("from_formula realizes every read-once formula on n <= 4") {
  // Unordered binary splits: T(1) = 1, T(m) = sum of 2 T(a) T(b).
  std::size_t const sizes[] = {0, 0, 4, 21, 184};
  for (int n = 2; n <= 4; ++n) {
    auto corpus = read_once_corpus(n);
    CHECK(corpus.size() == sizes[n]);
    for (auto const& text : corpus) {
      auto f = parse_formula(text, n);
      auto c = from_formula(f);
      INFO(text);
      REQUIRE(verify_exhaustive(c.word, f).verified);
    }
  }
  // n-ary nodes fold to the left.
  for (auto text : {"x1 | x2 | x3 | x4", "x1 & x2 & x3 & x4",
                    "x1 & x2 | x3 & x4", "(x1 | x2 | x3) & x4"}) {
    auto f = parse_formula(text, 4);
    REQUIRE(verify_exhaustive(from_formula(f).word, f).verified);
  }
}

// Gate pads can be removed like any other nail. When they are, two operands
// built from the same variables can cancel, so a formula that repeats a
// variable may compile to a word that falls where it should hang. It can
// never hang where it should fall: a gate collapses whenever its truth
// value is false.
TEST_CASE("from_formula with repeated variables errs only towards falling") {
  auto f = parse_formula("x1 & x1", 2);
  auto r = verify_exhaustive(from_formula(f).word, f);
  CHECK_FALSE(r.verified);
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].state == NailState::of(2, {1}));

  std::mt19937_64 rng(21);
  int             failing = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int  n    = 2 + static_cast<int>(rng() % 3);
    auto text = random_formula(rng, n, 3);
    auto g    = parse_formula(text, n);
    auto rep  = verify_exhaustive(from_formula(g).word, g);
    failing += !rep.verified;
    INFO(text);
    for (auto const& ce : rep.counterexamples) {
      REQUIRE(ce.expected_hang);
      REQUIRE_FALSE(ce.got_nontrivial);
    }
  }
  MESSAGE("repeated-variable formulas that fail verification: " << failing
                                                                << "/400");
}

TEST_CASE("kofn_dnc") {
  CHECK(raw(kofn_dnc(2, 1).word) == Raw{2, 1});
  CHECK(raw(kofn_dnc(2, 2).word) == Raw{1, 2, -1, -2});
  CHECK(raw(kofn_dnc(1, 1).word) == Raw{1});
  CHECK(kofn_dnc(4, 2).provenance.construction == "dnc");
  CHECK_THROWS_AS(kofn_dnc(3, 0), InputError);
  CHECK_THROWS_AS(kofn_dnc(3, 4), InputError);
}

TEST_CASE("kofn_dnc realizes every threshold up to ten nails") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto c = kofn_dnc(n, k);
      auto f = MonotoneFn::threshold(n, k);
      INFO("n=" << n << " k=" << k);
      REQUIRE(verify_exhaustive(c.word, f).verified);
      if (n <= 6) {
        REQUIRE(realizes(c.word, f));
      }
    }
  }
}

TEST_CASE("kofn_dnc length bound for powers of two") {
  for (int a = 1; a <= 4; ++a) {
    int n = 1 << a;
    std::uint64_t bound = std::uint64_t{1} << (a * (a + 3) / 2);
    for (int k = 1; k <= n; ++k) {
      CHECK(length_of(kofn_dnc(n, k)) <= bound);
    }
  }
}
