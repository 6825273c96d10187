#include "catch_amalgamated.hpp"

#include <algorithm>
#include <set>

#include "ellis/coding.hpp"
#include "ellis/error.hpp"
#include "ellis/odometer.hpp"
#include "ellis/substitution.hpp"

using namespace ellis;

namespace {
  char const* const kThreeLetter = R"(
alphabet: a b c
rules:
  a: a a c a a
  b: a b c a a
  c: a c c b a
)";
  char const* const kBijective = "alphabet: a b\nrules:\n  a: bab\n  b: aba\n";

  Word tuple(std::string const& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<letter_t>(c - 'a'));
    return w;
  }

  std::set<Word> tuples(std::vector<ColumnMap> const& cs) {
    std::set<Word> out;
    for (auto const& c : cs) out.insert(c.tuple);
    return out;
  }
}  // namespace

TEST_CASE("parsing", "[substitution]") {
  auto const th = parse_substitution(kThreeLetter);
  CHECK(th.size() == 3);
  CHECK(th.length() == 5);
  CHECK(th.is_primitive());
  CHECK(th.format(th.rule(2)) == "accba");
  CHECK(parse_substitution(th.to_text()).to_text() == th.to_text());

  auto const json = parse_substitution(R"({"alphabet": ["a","b"], "rules": {"a": "bab", "b": ["a","b","a"]}})");
  CHECK(json.length() == 3);
  CHECK(json.is_bijective());
  CHECK(parse_substitution(kBijective).is_bijective());

  try {
    (void) parse_substitution("alphabet: a b\nrules:\n  a: a b\n  b: a\n");
    FAIL("accepted non-constant length");
  } catch (ParseError const& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("non-constant") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_substitution("alphabet: a b\nrules:\n a: a x\n b: b a\n"), ParseError);
  CHECK_THROWS_AS(parse_substitution("alphabet: a\nrules:\n a: a\n"), ParseError);
  CHECK_THROWS_AS(parse_substitution("alphabet: a b\nrules:\n a: ab\n"), ParseError);
  CHECK_THROWS_AS(parse_substitution("rules:\n a: ab\n"), ParseError);
  CHECK_THROWS_AS(parse_substitution("{\"alphabet\": [\"a\"], "), ParseError);

  auto const np = parse_substitution("alphabet: a b\nrules:\n a: aa\n b: bb\n");
  CHECK_FALSE(np.is_primitive());
}

TEST_CASE("seeds and windows", "[substitution]") {
  auto const th = parse_substitution(kThreeLetter);
  CHECK(fixed_point_seeds(th) == Word{0, 1, 2});
  CHECK(fixed_point_seeds(parse_substitution(kBijective)) == Word{0, 1});
  CHECK(fixed_point_seeds(parse_substitution("alphabet: a\nrules:\n a: aa\n")) == Word{0});

  FixedPoint const xa(th, 0), xb(th, 1), xc(th, 2);
  CHECK(xa.window_text(0) == ".a");
  CHECK(xa.window_text(1) == "a.acaa");
  CHECK(xb.window_text(1) == "a.bcaa");
  CHECK(xc.window_text(1) == "a.ccba");
  CHECK(xa.window_text(2) == "aacaaa.acaaaccbaaacaaaacaa");
  CHECK(xb.window_text(2) == "aacaaa.bcaaaccbaaacaaaacaa");
  CHECK(xc.window_text(2) == "aacaaa.ccbaaccbaabcaaaacaa");
  CHECK(xb.window(2).word.size() == 25);

  // window k+1 extends window k
  for (unsigned k = 0; k < 5; ++k) {
    auto const w = xc.window(k), v = xc.window(k + 1);
    for (std::size_t i = 0; i < w.word.size(); ++i)
      CHECK(v.word[v.origin - w.origin + i] == w.word[i]);
  }
  CHECK_THROWS_AS(FixedPoint(th, 7), std::invalid_argument);
}

TEST_CASE("fixed point identities", "[substitution]") {
  auto const th = parse_substitution(kThreeLetter);
  auto const c1 = th.column(1);
  CHECK(c1.is_identity());
  for (letter_t s : fixed_point_seeds(th)) {
    FixedPoint const x(th, s);
    for (std::int64_t m = -20; m <= 20; ++m) {
      // x = shift(theta(x))
      std::int64_t const q = (m + 1 >= 0) ? (m + 1) / 5 : -((-(m + 1) + 4) / 5);
      CHECK(x.at(m) == th.rule(x.at(q))[static_cast<std::size_t>(m + 1 - 5 * q)]);
      std::int64_t p = 1;
      Transformation ck = Transformation::identity(3);
      for (int k = 0; k <= 4; ++k) {
        CHECK(x.at(m * p) == ck[x.at(m)]);
        p *= 5;
        ck = c1 * ck;
      }
    }
  }
}

TEST_CASE("length two fixed points", "[substitution]") {
  // Thue-Morse has no fixed point of shift after substitution.
  auto const tm = parse_substitution("alphabet: a b\nrules:\n a: ab\n b: ba\n");
  CHECK(fixed_point_seeds(tm).empty());
  CHECK_THROWS_AS(FixedPoint(tm, 0), std::invalid_argument);
  // column 0 is the identity, so x[1] is not determined
  auto const free = parse_substitution("alphabet: a b\nrules:\n a: aa\n b: ba\n");
  CHECK_THROWS_AS(FixedPoint(free, 0), AnalysisDeclined);

  auto const th = parse_substitution("alphabet: a b c\nrules:\n a: ab\n b: cb\n c: aa\n");
  CHECK(th.is_primitive());
  REQUIRE(fixed_point_seeds(th) == Word{1});
  FixedPoint const x(th, 1);
  CHECK(x.at(1) == 0);
  auto const w = x.window(4);
  CHECK(w.word.size() == 32);
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    CHECK(x.at(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(w.origin)) == w.word[i]);
  }
}

TEST_CASE("column maps", "[substitution]") {
  auto const th    = parse_substitution(kThreeLetter);
  auto const seeds = fixed_point_seeds(th);
  CHECK(column_map_at(th, seeds, 0).tuple == tuple("abc"));
  CHECK(column_map_at(th, seeds, 1).tuple == tuple("ccc"));
  CHECK(column_map_at(th, seeds, -1).tuple == tuple("aaa"));

  auto const all = occurring_columns(th, seeds, Side::all);
  CHECK(tuples(all) == std::set<Word>{tuple("abc"), tuple("aaa"), tuple("bbb"), tuple("ccc"), tuple("aab")});
  for (auto const& c : all) {
    REQUIRE(c.position);
    CHECK(column_map_at(th, seeds, *c.position).tuple == c.tuple);
  }
  auto const neg = occurring_columns(th, seeds, Side::negative);
  CHECK(tuples(neg) == std::set<Word>{tuple("aaa"), tuple("bbb"), tuple("ccc")});
  auto const pos = occurring_columns(th, seeds, Side::positive);
  CHECK(tuples(pos) == std::set<Word>{tuple("aaa"), tuple("bbb"), tuple("ccc"), tuple("aab")});

  auto const bij = parse_substitution(kBijective);
  auto const bs  = fixed_point_seeds(bij);
  std::set<Word> const group{tuple("ab"), tuple("ba")};
  CHECK(tuples(occurring_columns(bij, bs, Side::all)) == group);
  CHECK(tuples(occurring_columns(bij, bs, Side::positive)) == group);
  CHECK(tuples(occurring_columns(bij, bs, Side::negative)) == group);
}

TEST_CASE("recurrent columns agree with sampling", "[substitution]") {
  auto const th    = parse_substitution(kThreeLetter);
  auto const seeds = fixed_point_seeds(th);
  std::set<Word> late_pos, late_neg;
  std::vector<FixedPoint> xs;
  for (letter_t s : seeds) xs.emplace_back(th, s);
  for (std::int64_t m = 2000; m < 20000; ++m) {
    Word p, n;
    for (auto const& x : xs) {
      p.push_back(x.at(m));
      n.push_back(x.at(-m));
    }
    late_pos.insert(p);
    late_neg.insert(n);
  }
  CHECK(late_pos == tuples(occurring_columns(th, seeds, Side::positive)));
  CHECK(late_neg == tuples(occurring_columns(th, seeds, Side::negative)));
}

TEST_CASE("pair classification", "[substitution]") {
  auto const th = parse_substitution(kThreeLetter);
  auto const ab = classify_pair(th, 0, 1, Direction::forward);
  CHECK(ab.verdict == Verdict::asymptotic);
  CHECK(ab.proximal);
  REQUIRE(ab.threshold);
  FixedPoint const xa(th, 0), xb(th, 1), xc(th, 2);
  for (std::int64_t n = *ab.threshold; n < *ab.threshold + 3000; ++n) {
    REQUIRE(xa.at(n) == xb.at(n));
  }
  CHECK(xa.at(*ab.threshold - 1) != xb.at(*ab.threshold - 1));

  for (auto [s, t] : {std::pair{0u, 2u}, std::pair{1u, 2u}}) {
    auto const c = classify_pair(th, s, t, Direction::forward);
    CHECK(c.verdict == Verdict::li_yorke);
    CHECK(c.witnesses.size() == 5);
    CHECK(check_li_yorke_witnesses(FixedPoint(th, s), FixedPoint(th, t), Direction::forward,
                                   c.witnesses));
    for (std::size_t k = 0; k < c.witnesses.size(); ++k) {
      CHECK(c.witnesses[k].N >= static_cast<std::int64_t>(k + 1));
    }
  }
  for (auto [s, t] : {std::pair{0u, 1u}, std::pair{0u, 2u}, std::pair{1u, 2u}}) {
    auto const c = classify_pair(th, s, t, Direction::backward);
    CHECK(c.verdict == Verdict::asymptotic);
    REQUIRE(c.threshold);
    for (std::int64_t n = *c.threshold; n < *c.threshold + 2000; ++n) {
      REQUIRE(FixedPoint(th, s).at(-n) == FixedPoint(th, t).at(-n));
    }
  }
  CHECK_THROWS_AS(classify_pair(th, 1, 1, Direction::forward), std::invalid_argument);

  // a tampered witness list is rejected
  auto c = classify_pair(th, 0, 2, Direction::forward);
  c.witnesses[0].N += 1000;
  CHECK_FALSE(check_li_yorke_witnesses(xa, xc, Direction::forward, c.witnesses));

  auto const bij = parse_substitution(kBijective);
  CHECK(classify_pair(bij, 0, 1, Direction::forward).verdict == Verdict::distal_pair);
  CHECK(classify_pair(bij, 0, 1, Direction::backward).verdict == Verdict::distal_pair);
}

TEST_CASE("verdict flags are coherent and stable", "[substitution]") {
  auto const th = parse_substitution(kThreeLetter);
  for (auto dir : {Direction::forward, Direction::backward}) {
    for (letter_t s = 0; s < 3; ++s)
      for (letter_t t = s + 1; t < 3; ++t) {
        auto const a = classify_pair(th, s, t, dir);
        auto const b = classify_pair(th, s, t, dir, {5, 5 * 5 * 5 * 5 * 5 * 5 * 5 * 5, 1 << 22});
        CHECK(a.verdict == b.verdict);
        if (a.asymptotic) CHECK(a.proximal);
        CHECK((a.verdict == Verdict::li_yorke) == (a.proximal && !a.asymptotic));
      }
  }
}

TEST_CASE("odometer arithmetic", "[odometer]") {
  auto const one = OdometerElement::ones(5, 4);
  CHECK(odometer_add(one, 1).digits == std::vector<unsigned>{2, 1, 1, 1});
  CHECK(odometer_add(OdometerElement{5, {4, 4, 4, 4}}, 1).digits == std::vector<unsigned>{0, 0, 0, 0});
  CHECK(odometer_add(OdometerElement::zero(5, 4), 7).digits == std::vector<unsigned>{2, 1, 0, 0});
  CHECK(odometer_add(OdometerElement::zero(5, 4), -1).digits == std::vector<unsigned>{4, 4, 4, 4});
  for (std::int64_t a = -700; a <= 700; a += 37)
    for (std::int64_t b = -700; b <= 700; b += 53) {
      auto const x = OdometerElement::from_integer(5, 4, a);
      CHECK(odometer_add(x, b) == OdometerElement::from_integer(5, 4, a + b));
      CHECK(odometer_add(x, OdometerElement::from_integer(5, 4, b)) == odometer_add(x, b));
      CHECK(static_cast<std::int64_t>(odometer_add(x, b).value()) == (((a + b) % 625) + 625) % 625);
    }
}

TEST_CASE("metric and block coding", "[coding]") {
  auto const       th = parse_substitution(kThreeLetter);
  FixedPoint const xa(th, 0), xc(th, 2);
  auto const       A = segment_of(xa, -200, 3000), C = segment_of(xc, -200, 3000);

  // duality: distance <= e^-N iff agreement on n-N..n+N
  for (std::int64_t n = 0; n < 400; n += 7) {
    auto const r = agreement_radius(A, C, n);
    for (std::int64_t N = 0; N < 50; ++N) {
      bool agree = true;
      for (std::int64_t k = n - N; k <= n + N; ++k) agree = agree && A.at(k) == C.at(k);
      bool const close = !r || *r >= N;
      CHECK(agree == close);
    }
  }
  CHECK(window_distance(A, A, 10) == 0.0);
  CHECK(window_distance(A, C, 0) == Catch::Approx(std::exp(1.0)));

  BlockAlphabet id;
  for (std::uint32_t a = 0; a < 3; ++a) id.code({a});
  auto const same = higher_block_coding(A, 0, id);
  CHECK(same.word == A.word);

  BlockAlphabet blocks;
  auto const RA = higher_block_coding(A, 1, blocks);
  auto const RC = higher_block_coding(C, 1, blocks);
  CHECK(RA.word.size() == A.word.size() - 2);
  CHECK(RA.first == A.first + 1);
  CHECK(check_coding_equivariance(A, 1, 20));
  CHECK(check_coding_equivariance(C, 2, 20));

  // the recoded pair still shows disagreements followed by longer and
  // longer agreement runs
  auto const w = scan_li_yorke([&](std::int64_t n) { return RA.at(n); },
                               [&](std::int64_t n) { return RC.at(n); }, RA.last() - 1, 4);
  CHECK(w.size() == 4);
}
