#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ellis/transformation.hpp"

namespace ellis {

  using letter_t = point_t;
  using Word     = std::vector<letter_t>;

  /// A substitution of constant length on an ordered alphabet. Letters are
  /// indices into the alphabet; rule(a) is the image word of letter a.
  class Substitution {
   public:
    /// Throws std::invalid_argument if the alphabet is empty or has repeated
    /// symbols, if a rule is missing, if the rule lengths differ, if the length is
    /// < 2 or if a rule uses an unknown letter.
    Substitution(std::vector<std::string> alphabet, std::vector<Word> rules);

    [[nodiscard]] std::size_t size() const noexcept {
      return alphabet_.size();
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return length_;
    }
    [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] std::string const& symbol(letter_t a) const {
      return alphabet_.at(a);
    }
    [[nodiscard]] std::optional<letter_t> letter(std::string_view symbol) const;
    [[nodiscard]] Word const& rule(letter_t a) const {
      return rules_.at(a);
    }

    /// Column d as a map on letters: a -> rule(a)[d].
    [[nodiscard]] Transformation const& column(std::size_t d) const {
      return columns_.at(d);
    }

    /// Some power of the incidence matrix is strictly positive.
    [[nodiscard]] bool is_primitive() const noexcept {
      return primitive_;
    }
    // Every column is a permutation.
    [[nodiscard]] bool is_bijective() const;

    [[nodiscard]] Word apply(Word const& w) const;

    /// Words of length two occurring in some iterate theta^n(a).
    [[nodiscard]] std::vector<std::pair<letter_t, letter_t>> legal_two_words() const;

    // Symbols concatenated; separated by spaces if some symbol is longer
    // than one character.
    [[nodiscard]] std::string format(Word const& w) const;

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;

   private:
    std::vector<std::string>    alphabet_;
    std::vector<Word>           rules_;
    std::size_t                 length_ = 0;
    std::vector<Transformation> columns_;
    bool                        primitive_ = false;
  };

  /// Parses the text format
  ///
  ///   alphabet: a b c
  ///   rules:
  ///     a: a a c a a
  ///     ...
  ///
  /// ('#' starts a comment; with single character symbols a rule may also be
  /// written as one token, "a: aacaa") or the JSON form
  /// {"alphabet": [...], "rules": {"a": "aacaa" | ["a", ...], ...}}.
  /// Throws ParseError with a line number where one applies.
  [[nodiscard]] Substitution parse_substitution(std::string_view text);
  [[nodiscard]] Substitution read_substitution(std::filesystem::path const& path);

  /// Letters s with rule(s)[1] = s, i.e. the possible symbols at position 0 of
  /// a fixed point of shift after substitution.
  [[nodiscard]] std::vector<letter_t> fixed_point_seeds(Substitution const& theta);

  /// A two-sided sequence x with x = shift(theta(x)) and x[0] = seed. It is
  /// determined by x[j] = rule(x[q])[r] where j + 1 = l*q + r, 0 <= r < l;
  /// for l = 2 the right half also needs x[1], taken as the unique letter t
  /// with rule(t)[0] = t that the powers of column 0 collapse to.
  class FixedPoint {
   public:
    /// Throws std::invalid_argument if `seed` is not a seed, and
    /// AnalysisDeclined when l = 2 and x[1] is not determined or the germ
    /// x[0]x[1] is not a legal word.
    FixedPoint(Substitution const& theta, letter_t seed);

    [[nodiscard]] letter_t seed() const noexcept {
      return seed_;
    }
    [[nodiscard]] Substitution const& substitution() const noexcept {
      return *theta_;
    }

    struct Window {
      Word        word;
      std::size_t origin;  // index of position 0 in `word`
    };

    /// The word after k applications of shift o theta to the germ, with the
    /// origin tracked. Consistency with window(k - 1) and with the recursion
    /// is asserted (ConsistencyError).
    [[nodiscard]] Window window(unsigned k) const;

    /// "a.acaa": the window with a dot left of position 0.
    [[nodiscard]] std::string window_text(unsigned k) const;

    [[nodiscard]] letter_t at(std::int64_t m) const;

    /// x[from .. to] inclusive.
    [[nodiscard]] Word segment(std::int64_t from, std::int64_t to) const;

   private:
    Substitution const* theta_;
    letter_t            seed_;
    std::optional<letter_t> right_;  // x[1] when l = 2
  };

  /// A column of the fixed points: tuple[i] = x_{seeds[i]}[position].
  struct ColumnMap {
    Word                        tuple;
    std::optional<std::int64_t> position;  // nullopt if it overflowed

    friend bool operator==(ColumnMap const& a, ColumnMap const& b) {
      return a.tuple == b.tuple;
    }
  };

  [[nodiscard]] ColumnMap column_map_at(Substitution const&          theta,
                                        std::vector<letter_t> const& seeds,
                                        std::int64_t                 m);

  enum class Side { all, positive, negative };

  /// The tuple graph: nodes are tuples of letters, and the tuple at position
  /// j with j + 1 = l*q + r is column r applied to the tuple at q. Roots are
  /// given with their positions; every node records the first position found.
  struct TupleGraph {
    std::vector<Word>                        nodes;
    std::vector<std::optional<std::int64_t>> position;
    std::vector<std::vector<std::uint32_t>>  succ;  // indexed by digit r
    std::vector<bool>                        recurrent;

    [[nodiscard]] std::optional<std::uint32_t> find(Word const& w) const;
  };

  [[nodiscard]] TupleGraph
  explore_tuples(Substitution const&                                          theta,
                 std::vector<std::pair<Word, std::optional<std::int64_t>>> const& roots);

  /// Roots of the tuple graph for one side. Position 0 (and position 1 when
  /// l = 2) is fixed by the recursion and is only a root of Side::all.
  [[nodiscard]] std::vector<std::pair<Word, std::optional<std::int64_t>>>
  side_roots(Substitution const& theta, Word const& seed_tuple, Side side);

  /// Side::all: every tuple occurring at some position. Side::positive and
  /// Side::negative: the tuples occurring at arbitrarily large positive
  /// (negative) positions, found as the nodes reachable from a cycle.
  /// Sorted by tuple.
  [[nodiscard]] std::vector<ColumnMap> occurring_columns(Substitution const&          theta,
                                                         std::vector<letter_t> const& seeds,
                                                         Side                         side);

  enum class Direction { forward, backward };
  enum class Verdict { asymptotic, li_yorke, distal_pair };

  [[nodiscard]] char const* to_string(Direction d);
  [[nodiscard]] char const* to_string(Verdict v);

  struct LiYorkeWitness {
    std::int64_t n;  // x_n != y_n (for backward: at position -n)
    std::int64_t N;  // agreement on n < k <= n + N (backward: mirrored)
  };

  struct PairClassification {
    letter_t  s = 0, t = 0;
    Direction direction = Direction::forward;
    Verdict   verdict   = Verdict::distal_pair;
    bool      proximal   = false;
    bool      asymptotic = false;
    // asymptotic: x_n = y_n for all n >= threshold (backward: n <= -threshold)
    std::optional<std::int64_t> threshold;
    std::vector<LiYorkeWitness> witnesses;
    // pairs recurring on this side (the proof data)
    std::vector<std::pair<letter_t, letter_t>> recurrent_pairs;
  };

  struct WitnessOptions {
    std::size_t  count   = 5;
    std::int64_t horizon = 0;  // 0: l^6
    std::int64_t max_horizon = std::int64_t{1} << 22;
  };

  /// Exact verdict from the pair graph; witnesses by scanning windows.
  /// Throws std::invalid_argument if s == t or either is not a seed.
  [[nodiscard]] PairClassification classify_pair(Substitution const& theta,
                                                 letter_t            s,
                                                 letter_t            t,
                                                 Direction           dir,
                                                 WitnessOptions const& opts = {});

  /// Whether the witnesses satisfy x_n != y_n and x_k = y_k for
  /// n < k <= n + N, with n and N strictly increasing.
  [[nodiscard]] bool check_li_yorke_witnesses(FixedPoint const&                  x,
                                              FixedPoint const&                  y,
                                              Direction                          dir,
                                              std::vector<LiYorkeWitness> const& w);

  /// Scans positions 1..horizon of two sequences given as functions for
  /// disagreements followed by agreement runs of strictly increasing length
  /// (N_k >= k). Stops after `count` witnesses. A run reaching the end of
  /// the horizon is not used.
  template <typename X, typename Y>
  std::vector<LiYorkeWitness>
  scan_li_yorke(X&& x, Y&& y, std::int64_t horizon, std::size_t count) {
    std::vector<LiYorkeWitness> out;
    std::int64_t                last = -1;  // previous disagreement
    for (std::int64_t n = 1; n <= horizon && out.size() < count; ++n) {
      if (x(n) == y(n)) {
        continue;
      }
      if (last >= 1) {
        std::int64_t const run  = n - last - 1;
        std::int64_t const need = std::max<std::int64_t>(
            static_cast<std::int64_t>(out.size()) + 1, out.empty() ? 0 : out.back().N + 1);
        if (run >= need) {
          out.push_back({last, run});
        }
      }
      last = n;
    }
    return out;
  }

}  // namespace ellis
