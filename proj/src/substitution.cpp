#include "ellis/substitution.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ellis/detail/scc.hpp"
#include "ellis/error.hpp"

namespace ellis {

  Substitution::Substitution(std::vector<std::string> alphabet, std::vector<Word> rules)
      : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
    if (alphabet_.empty()) {
      throw std::invalid_argument("empty alphabet");
    }
    std::set<std::string> seen;
    for (auto const& s : alphabet_) {
      if (s.empty() || !seen.insert(s).second) {
        throw std::invalid_argument("alphabet symbols must be distinct and non-empty");
      }
    }
    if (rules_.size() != alphabet_.size()) {
      throw std::invalid_argument("need exactly one rule per letter");
    }
    length_ = rules_.front().size();
    for (std::size_t a = 0; a < rules_.size(); ++a) {
      if (rules_[a].size() != length_) {
        throw std::invalid_argument("non-constant length: rule for '" + alphabet_[a]
                                    + "' has length " + std::to_string(rules_[a].size())
                                    + ", expected " + std::to_string(length_));
      }
      for (letter_t b : rules_[a]) {
        if (b >= alphabet_.size()) {
          throw std::invalid_argument("rule for '" + alphabet_[a] + "' uses an unknown letter");
        }
      }
    }
    if (length_ < 2) {
      throw std::invalid_argument("substitution length must be at least 2");
    }
    for (std::size_t d = 0; d < length_; ++d) {
      std::vector<point_t> im(size());
      for (letter_t a = 0; a < size(); ++a) {
        im[a] = rules_[a][d];
      }
      columns_.emplace_back(std::move(im));
    }

    // Wielandt: a primitive n x n matrix has M^k > 0 for k = (n-1)^2 + 1.
    std::size_t const              n = size();
    std::vector<std::vector<bool>> M(n, std::vector<bool>(n, false));
    for (letter_t a = 0; a < n; ++a) {
      for (letter_t b : rules_[a]) {
        M[a][b] = true;
      }
    }
    auto P = M;
    for (std::size_t k = 1; k <= (n - 1) * (n - 1) + 1; ++k) {
      bool positive = true;
      for (auto const& row : P) {
        positive = positive && std::all_of(row.begin(), row.end(), [](bool b) { return b; });
      }
      if (positive) {
        primitive_ = true;
        break;
      }
      std::vector<std::vector<bool>> Q(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
          if (P[i][m])
            for (std::size_t j = 0; j < n; ++j)
              if (M[m][j]) Q[i][j] = true;
      P = std::move(Q);
    }
  }

  std::optional<letter_t> Substitution::letter(std::string_view symbol) const {
    for (letter_t a = 0; a < size(); ++a) {
      if (alphabet_[a] == symbol) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool Substitution::is_bijective() const {
    return std::all_of(columns_.begin(), columns_.end(),
                       [](Transformation const& c) { return c.rank() == c.degree(); });
  }

  Word Substitution::apply(Word const& w) const {
    Word out;
    out.reserve(w.size() * length_);
    for (letter_t a : w) {
      out.insert(out.end(), rules_.at(a).begin(), rules_.at(a).end());
    }
    return out;
  }

  std::vector<std::pair<letter_t, letter_t>> Substitution::legal_two_words() const {
    std::set<std::pair<letter_t, letter_t>> words;
    for (auto const& r : rules_) {
      for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        words.emplace(r[i], r[i + 1]);
      }
    }
    for (bool grew = true; grew;) {
      grew = false;
      for (auto [u, v] : std::vector<std::pair<letter_t, letter_t>>(words.begin(), words.end())) {
        grew |= words.emplace(rules_[u].back(), rules_[v].front()).second;
      }
    }
    return {words.begin(), words.end()};
  }

  std::string Substitution::format(Word const& w) const {
    bool const  spaced = std::any_of(alphabet_.begin(), alphabet_.end(),
                                     [](std::string const& s) { return s.size() > 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (spaced && i) {
        out += ' ';
      }
      out += alphabet_.at(w[i]);
    }
    return out;
  }

  std::string Substitution::to_text() const {
    std::ostringstream os;
    os << "alphabet:";
    for (auto const& s : alphabet_) {
      os << ' ' << s;
    }
    os << "\nrules:\n";
    for (letter_t a = 0; a < size(); ++a) {
      os << "  " << alphabet_[a] << ':';
      for (letter_t b : rules_[a]) {
        os << ' ' << alphabet_[b];
      }
      os << '\n';
    }
    return os.str();
  }

  nlohmann::ordered_json Substitution::to_json() const {
    nlohmann::ordered_json j;
    j["alphabet"] = alphabet_;
    j["length"]   = length_;
    j["rules"]    = nlohmann::ordered_json::object();
    for (letter_t a = 0; a < size(); ++a) {
      j["rules"][alphabet_[a]] = format(rules_[a]);
    }
    j["primitive"] = primitive_;
    return j;
  }

  namespace {

    std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       is{std::string(s)};
      for (std::string tok; is >> tok;) {
        out.push_back(tok);
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    // Tokens of a rule body: whitespace separated symbols, or a single token
    // split into characters when every symbol is one character long.
    std::vector<std::string> rule_tokens(std::string_view body,
                                         std::vector<std::string> const& alphabet) {
      auto toks = split_ws(body);
      bool const single = std::all_of(alphabet.begin(), alphabet.end(),
                                      [](std::string const& s) { return s.size() == 1; });
      if (toks.size() == 1 && single && toks[0].size() > 1) {
        std::vector<std::string> chars;
        for (char c : toks[0]) {
          chars.emplace_back(1, c);
        }
        return chars;
      }
      return toks;
    }

    Substitution build(std::vector<std::string> const&                         alphabet,
                       std::vector<std::pair<std::size_t, std::vector<std::string>>> const& rules,
                       std::vector<std::string> const&                         keys) {
      std::map<std::string, letter_t> index;
      for (letter_t a = 0; a < alphabet.size(); ++a) {
        index[alphabet[a]] = a;
      }
      std::vector<Word>        words(alphabet.size());
      std::vector<bool>        have(alphabet.size(), false);
      std::vector<std::size_t> line_of(alphabet.size(), 0);
      for (std::size_t k = 0; k < rules.size(); ++k) {
        auto const& [line, toks] = rules[k];
        auto        it           = index.find(keys[k]);
        if (it == index.end()) {
          throw ParseError(line, "rule for unknown symbol '" + keys[k] + "'");
        }
        if (have[it->second]) {
          throw ParseError(line, "second rule for '" + keys[k] + "'");
        }
        Word w;
        for (auto const& t : toks) {
          auto jt = index.find(t);
          if (jt == index.end()) {
            throw ParseError(line, "unknown symbol '" + t + "' in rule for '" + keys[k] + "'");
          }
          w.push_back(jt->second);
        }
        if (w.empty()) {
          throw ParseError(line, "empty rule for '" + keys[k] + "'");
        }
        have[it->second]    = true;
        line_of[it->second] = line;
        words[it->second]   = std::move(w);
      }
      for (letter_t a = 0; a < alphabet.size(); ++a) {
        if (!have[a]) {
          throw ParseError(0, "no rule for '" + alphabet[a] + "'");
        }
      }
      std::size_t const len = words.front().size();
      for (letter_t a = 0; a < alphabet.size(); ++a) {
        if (words[a].size() != len) {
          throw ParseError(line_of[a], "non-constant length: rule for '" + alphabet[a]
                                           + "' has length " + std::to_string(words[a].size())
                                           + ", expected " + std::to_string(len));
        }
      }
      if (len < 2) {
        throw ParseError(line_of[0], "substitution length must be at least 2");
      }
      try {
        return Substitution(alphabet, std::move(words));
      } catch (std::invalid_argument const& e) {
        throw ParseError(0, e.what());
      }
    }

    Substitution parse_json(std::string_view text) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (nlohmann::json::parse_error const& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
          line += text[i] == '\n';
        }
        throw ParseError(line, std::string("invalid JSON: ") + e.what());
      }
      if (!j.is_object() || !j.contains("alphabet") || !j.contains("rules")
          || !j["alphabet"].is_array() || !j["rules"].is_object()) {
        throw ParseError(0, "JSON substitution needs \"alphabet\" (array) and \"rules\" (object)");
      }
      std::vector<std::string> alphabet;
      for (auto const& s : j["alphabet"]) {
        if (!s.is_string()) {
          throw ParseError(0, "alphabet entries must be strings");
        }
        alphabet.push_back(s.get<std::string>());
      }
      std::set<std::string> uniq(alphabet.begin(), alphabet.end());
      if (alphabet.empty() || uniq.size() != alphabet.size()) {
        throw ParseError(0, "alphabet must be non-empty with distinct symbols");
      }
      std::vector<std::pair<std::size_t, std::vector<std::string>>> rules;
      std::vector<std::string>                                      keys;
      for (auto const& [key, val] : j["rules"].items()) {
        std::vector<std::string> toks;
        if (val.is_string()) {
          toks = rule_tokens(val.get<std::string>(), alphabet);
        } else if (val.is_array()) {
          for (auto const& t : val) {
            if (!t.is_string()) {
              throw ParseError(0, "rule for '" + key + "' must list symbols as strings");
            }
            toks.push_back(t.get<std::string>());
          }
        } else {
          throw ParseError(0, "rule for '" + key + "' must be a string or array");
        }
        rules.emplace_back(0, std::move(toks));
        keys.push_back(key);
      }
      return build(alphabet, rules, keys);
    }

  }  // namespace

  Substitution parse_substitution(std::string_view text) {
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      return parse_json(text);
    }

    std::optional<std::vector<std::string>>                       alphabet;
    std::size_t                                                   alphabet_line = 0;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rules;
    std::vector<std::string>                                      keys;
    bool                                                          in_rules = false;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto const       nl   = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
      pos                   = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      line = trim(line);
      if (line.empty()) {
        continue;
      }
      auto const colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(line_no, "expected 'key: value'");
      }
      std::string const key  = std::string(trim(line.substr(0, colon)));
      std::string_view  body = trim(line.substr(colon + 1));
      if (!in_rules && key == "alphabet") {
        if (alphabet) {
          throw ParseError(line_no, "alphabet given twice");
        }
        alphabet      = split_ws(body);
        alphabet_line = line_no;
        std::set<std::string> uniq(alphabet->begin(), alphabet->end());
        if (alphabet->empty()) {
          throw ParseError(line_no, "empty alphabet");
        }
        if (uniq.size() != alphabet->size()) {
          throw ParseError(line_no, "repeated symbol in alphabet");
        }
        continue;
      }
      if (!in_rules && key == "rules") {
        if (!body.empty()) {
          throw ParseError(line_no, "rules are listed on the following lines");
        }
        in_rules = true;
        continue;
      }
      if (!alphabet) {
        throw ParseError(line_no, "rule before the alphabet line");
      }
      rules.emplace_back(line_no, rule_tokens(body, *alphabet));
      keys.push_back(key);
    }
    if (!alphabet) {
      throw ParseError(0, "missing 'alphabet:' line");
    }
    (void) alphabet_line;
    return build(*alphabet, rules, keys);
  }

  Substitution read_substitution(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, "cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_substitution(ss.str());
  }

  std::vector<letter_t> fixed_point_seeds(Substitution const& theta) {
    std::vector<letter_t> out;
    for (letter_t a = 0; a < theta.size(); ++a) {
      if (theta.rule(a)[1] == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  namespace {

    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    // For l = 2: the letter x[1] shared by all fixed points.
    letter_t right_letter(Substitution const& theta) {
      auto const e = theta.column(0).idempotent_power();
      if (!e.is_constant()) {
        throw AnalysisDeclined("length 2: powers of column 0 do not collapse to a single "
                               "letter, so x[1] is not determined by the seed");
      }
      return e[0];
    }

  }  // namespace

  FixedPoint::FixedPoint(Substitution const& theta, letter_t seed)
      : theta_(&theta), seed_(seed) {
    if (seed >= theta.size() || theta.rule(seed)[1] != seed) {
      throw std::invalid_argument("letter is not a fixed point seed");
    }
    if (theta.length() == 2) {
      right_          = right_letter(theta);
      auto const legal = theta.legal_two_words();
      if (!std::binary_search(legal.begin(), legal.end(), std::make_pair(seed, *right_))) {
        throw AnalysisDeclined("length 2: the germ " + theta.symbol(seed) + "."
                               + theta.symbol(*right_) + " is not a legal word");
      }
    }
  }

  letter_t FixedPoint::at(std::int64_t m) const {
    auto const l = static_cast<std::int64_t>(theta_->length());
    // digits r_1, r_2, ... from m down to 0 (or 1 when l = 2)
    std::vector<std::uint32_t> digits;
    letter_t                   base = seed_;
    while (m != 0) {
      if (right_ && m == 1) {
        base = *right_;
        break;
      }
      std::int64_t const q = floor_div(m + 1, l);
      digits.push_back(static_cast<std::uint32_t>(m + 1 - l * q));
      m = q;
    }
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      base = theta_->rule(base)[*it];
    }
    return base;
  }

  Word FixedPoint::segment(std::int64_t from, std::int64_t to) const {
    Word out;
    for (std::int64_t m = from; m <= to; ++m) {
      out.push_back(at(m));
    }
    return out;
  }

  FixedPoint::Window FixedPoint::window(unsigned k) const {
    Window w;
    w.word   = right_ ? Word{seed_, *right_} : Word{seed_};
    w.origin = 0;
    for (unsigned step = 0; step < k; ++step) {
      Window next{theta_->apply(w.word), w.origin * theta_->length() + 1};
      // the previous window sits inside the new one at the same positions
      for (std::size_t i = 0; i < w.word.size(); ++i) {
        if (next.word.at(next.origin - w.origin + i) != w.word[i]) {
          throw ConsistencyError("window expansion is not consistent");
        }
      }
      w = std::move(next);
    }
    if (w.word.size() <= 4096) {
      for (std::size_t i = 0; i < w.word.size(); ++i) {
        auto const m = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(w.origin);
        if (at(m) != w.word[i]) {
          throw ConsistencyError("window disagrees with the fixed point recursion");
        }
      }
    }
    return w;
  }

  std::string FixedPoint::window_text(unsigned k) const {
    auto const w = window(k);
    Word const left(w.word.begin(), w.word.begin() + static_cast<std::ptrdiff_t>(w.origin));
    Word const right(w.word.begin() + static_cast<std::ptrdiff_t>(w.origin), w.word.end());
    return theta_->format(left) + "." + theta_->format(right);
  }

  ColumnMap column_map_at(Substitution const&          theta,
                          std::vector<letter_t> const& seeds,
                          std::int64_t                 m) {
    ColumnMap c;
    c.position = m;
    for (letter_t s : seeds) {
      c.tuple.push_back(FixedPoint(theta, s).at(m));
    }
    return c;
  }

  std::optional<std::uint32_t> TupleGraph::find(Word const& w) const {
    auto it = std::find(nodes.begin(), nodes.end(), w);
    if (it == nodes.end()) {
      return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - nodes.begin());
  }

  namespace {
    Word apply_column(Substitution const& theta, std::size_t d, Word const& T) {
      Word out(T.size());
      for (std::size_t i = 0; i < T.size(); ++i) {
        out[i] = theta.column(d)[T[i]];
      }
      return out;
    }
  }  // namespace

  TupleGraph
  explore_tuples(Substitution const&                                              theta,
                 std::vector<std::pair<Word, std::optional<std::int64_t>>> const& roots) {
    TupleGraph                      G;
    std::map<Word, std::uint32_t>   index;
    std::vector<std::uint32_t>      queue;
    auto const                      l = static_cast<std::int64_t>(theta.length());
    auto add = [&](Word const& w, std::optional<std::int64_t> pos) -> std::uint32_t {
      auto [it, fresh] = index.emplace(w, static_cast<std::uint32_t>(G.nodes.size()));
      if (fresh) {
        G.nodes.push_back(w);
        G.position.push_back(pos);
        G.succ.emplace_back();
        queue.push_back(it->second);
      }
      return it->second;
    };
    for (auto const& [w, pos] : roots) {
      add(w, pos);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t const v = queue[qi];
      for (std::size_t r = 0; r < theta.length(); ++r) {
        std::optional<std::int64_t> pos;
        if (auto q = G.position[v]) {
          std::int64_t j;
          if (!__builtin_mul_overflow(*q, l, &j)
              && !__builtin_add_overflow(j, static_cast<std::int64_t>(r) - 1, &j)) {
            pos = j;
          }
        }
        std::uint32_t const u = add(apply_column(theta, r, G.nodes[v]), pos);
        G.succ[v].push_back(u);
      }
    }

    std::size_t const n    = G.nodes.size();
    auto const        comp = detail::strongly_connected_components(
        n, [&G](std::uint32_t v) -> std::vector<std::uint32_t> const& { return G.succ[v]; });
    std::vector<std::size_t> comp_size(n, 0);
    for (auto c : comp) {
      ++comp_size[c];
    }
    G.recurrent.assign(n, false);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t v = 0; v < n; ++v) {
      bool const self = std::find(G.succ[v].begin(), G.succ[v].end(), v) != G.succ[v].end();
      if (comp_size[comp[v]] > 1 || self) {
        G.recurrent[v] = true;
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      std::uint32_t const v = stack.back();
      stack.pop_back();
      for (std::uint32_t u : G.succ[v]) {
        if (!G.recurrent[u]) {
          G.recurrent[u] = true;
          stack.push_back(u);
        }
      }
    }
    return G;
  }

  std::vector<std::pair<Word, std::optional<std::int64_t>>>
  side_roots(Substitution const& theta, Word const& seed_tuple, Side side) {
    std::vector<std::pair<Word, std::optional<std::int64_t>>> roots;
    std::size_t const                                         l = theta.length();
    Word                                                      right;
    if (l == 2) {
      right.assign(seed_tuple.size(), right_letter(theta));
    }
    switch (side) {
      case Side::all:
        roots.emplace_back(seed_tuple, 0);
        if (l == 2) {
          roots.emplace_back(right, 1);
        }
        break;
      case Side::positive:
        if (l == 2) {
          roots.emplace_back(apply_column(theta, 1, right), 2);
        } else {
          for (std::size_t d = 2; d < l; ++d) {
            roots.emplace_back(apply_column(theta, d, seed_tuple),
                               static_cast<std::int64_t>(d) - 1);
          }
        }
        break;
      case Side::negative:
        roots.emplace_back(apply_column(theta, 0, seed_tuple), -1);
        break;
    }
    return roots;
  }

  std::vector<ColumnMap> occurring_columns(Substitution const&          theta,
                                           std::vector<letter_t> const& seeds,
                                           Side                         side) {
    if (seeds.empty()) {
      throw std::invalid_argument("occurring_columns needs at least one seed");
    }
    auto const             G = explore_tuples(theta, side_roots(theta, seeds, side));
    std::vector<ColumnMap> out;
    for (std::size_t v = 0; v < G.nodes.size(); ++v) {
      if (side == Side::all || G.recurrent[v]) {
        out.push_back({G.nodes[v], G.position[v]});
      }
    }
    std::sort(out.begin(), out.end(),
              [](ColumnMap const& a, ColumnMap const& b) { return a.tuple < b.tuple; });
    return out;
  }

  char const* to_string(Direction d) {
    return d == Direction::forward ? "forward" : "backward";
  }

  char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::asymptotic: return "asymptotic";
      case Verdict::li_yorke: return "li_yorke";
      case Verdict::distal_pair: return "distal_pair";
    }
    return "?";
  }

  PairClassification classify_pair(Substitution const&   theta,
                                   letter_t              s,
                                   letter_t              t,
                                   Direction             dir,
                                   WitnessOptions const& opts) {
    if (s == t) {
      throw std::invalid_argument("classify_pair needs two distinct seeds");
    }
    FixedPoint const x(theta, s), y(theta, t);

    PairClassification res;
    res.s         = s;
    res.t         = t;
    res.direction = dir;
    auto const         roots
        = side_roots(theta, {s, t}, dir == Direction::forward ? Side::positive : Side::negative);
    auto const G = explore_tuples(theta, roots);
    bool       diag = false, off = false;
    for (std::size_t v = 0; v < G.nodes.size(); ++v) {
      if (G.recurrent[v]) {
        auto const& p = G.nodes[v];
        res.recurrent_pairs.emplace_back(p[0], p[1]);
        (p[0] == p[1] ? diag : off) = true;
      }
    }
    std::sort(res.recurrent_pairs.begin(), res.recurrent_pairs.end());
    res.proximal   = diag;
    res.asymptotic = !off;
    if (res.asymptotic && !res.proximal) {
      throw ConsistencyError("pair graph: asymptotic but not proximal");
    }
    res.verdict = res.asymptotic ? Verdict::asymptotic
                  : res.proximal ? Verdict::li_yorke
                                 : Verdict::distal_pair;

    auto const l = static_cast<std::int64_t>(theta.length());
    if (res.asymptotic) {
      // Off-diagonal positions form a finite tree below the roots.
      std::int64_t                                    last = 0;
      std::vector<std::pair<std::int64_t, Word>>      stack;
      for (auto const& [w, pos] : roots) {
        stack.emplace_back(*pos, w);
      }
      std::size_t guard = 0;
      while (!stack.empty()) {
        auto [m, w] = std::move(stack.back());
        stack.pop_back();
        if (w[0] == w[1]) {
          continue;
        }
        if (++guard > 1'000'000) {
          throw ConsistencyError("asymptotic pair with an unbounded disagreement tree");
        }
        last = std::max(last, m < 0 ? -m : m);
        for (std::int64_t r = 0; r < l; ++r) {
          std::int64_t const j = l * m + r - 1;
          if (j != m) {
            stack.emplace_back(j, apply_column(theta, static_cast<std::size_t>(r), w));
          }
        }
      }
      res.threshold = last + 1;
    } else if (res.verdict == Verdict::li_yorke) {
      std::int64_t horizon = opts.horizon > 0 ? opts.horizon : l * l * l * l * l * l;
      int const    sign    = dir == Direction::forward ? 1 : -1;
      for (;;) {
        res.witnesses = scan_li_yorke([&](std::int64_t n) { return x.at(sign * n); },
                                      [&](std::int64_t n) { return y.at(sign * n); },
                                      horizon, opts.count);
        if (res.witnesses.size() >= opts.count || horizon >= opts.max_horizon) {
          break;
        }
        horizon = std::min(horizon * l, opts.max_horizon);
      }
    }
    return res;
  }

  bool check_li_yorke_witnesses(FixedPoint const&                  x,
                                FixedPoint const&                  y,
                                Direction                          dir,
                                std::vector<LiYorkeWitness> const& w) {
    int const sign = dir == Direction::forward ? 1 : -1;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0 && (w[k].n <= w[k - 1].n || w[k].N <= w[k - 1].N)) {
        return false;
      }
      if (w[k].n < 1 || w[k].N < 1) {
        return false;
      }
      if (x.at(sign * w[k].n) == y.at(sign * w[k].n)) {
        return false;
      }
      for (std::int64_t m = w[k].n + 1; m <= w[k].n + w[k].N; ++m) {
        if (x.at(sign * m) != y.at(sign * m)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace ellis
