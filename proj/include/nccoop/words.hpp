#ifndef NCCOOP_WORDS_HPP
#define NCCOOP_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nccoop/errors.hpp"

namespace nccoop {

/// A letter is an index into its alphabet. Names live on the alphabet and
/// are only used for display, so relabeling is the only symmetry in play.
struct Letter {
  std::uint32_t id = 0;

  friend auto operator<=>(Letter, Letter) = default;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered finite set of named letters with ids 0..size()-1.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw validation_error("alphabet must contain at least one letter");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
      if (n.empty()) throw validation_error("letter names must be nonempty");
      if (!seen.insert(n).second) throw validation_error("duplicate letter name '" + n + "'");
    }
  }

  static AlphabetPtr make(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
  }

  /// Letters named prefix1, prefix2, ..., prefixk.
  static AlphabetPtr numbered(std::size_t k, std::string_view prefix = "") {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(names));
  }

  /// Letters a, b, c, ... (k <= 26).
  static AlphabetPtr latin(std::size_t k) {
    if (k == 0 || k > 26) throw validation_error("latin alphabet size must be in 1..26");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return make(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l.id); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Letter> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return Letter{static_cast<std::uint32_t>(i)};
    return std::nullopt;
  }

  bool single_char_names() const noexcept {
    return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// The sub-alphabet on `letters` (deduplicated), keeping the parent's order.
/// Letter j of the result is the j-th smallest id of `letters`.
inline AlphabetPtr sub_alphabet(const Alphabet& parent, std::span<const Letter> letters) {
  std::vector<Letter> sorted(letters.begin(), letters.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::string> names;
  names.reserve(sorted.size());
  for (Letter l : sorted) names.push_back(parent.name(l));
  return Alphabet::make(std::move(names));
}

/// Nonempty finite sequence of letters over an alphabet. Immutable.
class Word {
 public:
  Word(AlphabetPtr alphabet, std::vector<Letter> seq) : alphabet_(std::move(alphabet)), seq_(std::move(seq)) {
    if (!alphabet_) throw validation_error("word requires an alphabet");
    if (seq_.empty()) throw validation_error("a word must be nonempty");
    for (Letter l : seq_)
      if (l.id >= alphabet_->size())
        throw validation_error("letter id " + std::to_string(l.id) + " outside alphabet of size " +
                               std::to_string(alphabet_->size()));
  }

  Word(AlphabetPtr alphabet, std::initializer_list<std::uint32_t> ids)
      : Word(std::move(alphabet), to_letters(ids)) {}

  const Alphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return seq_; }
  std::size_t size() const noexcept { return seq_.size(); }
  Letter operator[](std::size_t i) const { return seq_[i]; }
  Letter front() const { return seq_.front(); }
  Letter back() const { return seq_.back(); }

  friend bool operator==(const Word& a, const Word& b) {
    return a.seq_ == b.seq_ && (a.alphabet_ == b.alphabet_ || *a.alphabet_ == *b.alphabet_);
  }

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.alphabet_ != b.alphabet_) {
      if (auto c = *a.alphabet_ <=> *b.alphabet_; c != 0) return c;
    }
    return a.seq_ <=> b.seq_;
  }

 private:
  static std::vector<Letter> to_letters(std::initializer_list<std::uint32_t> ids) {
    std::vector<Letter> out;
    for (auto id : ids) out.push_back(Letter{id});
    return out;
  }

  AlphabetPtr alphabet_;
  std::vector<Letter> seq_;
};

namespace detail {

/// Normal form of the two rewrite rules: collapse adjacent repeats, then drop
/// a final letter equal to the first, until neither applies.
inline void reduce_in_place(std::vector<Letter>& seq) {
  for (;;) {
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    if (seq.size() > 1 && seq.front() == seq.back())
      seq.pop_back();
    else
      return;
  }
}

/// True iff no distinct a, b occur as a subsequence a..b..a..b.
inline bool is_noncrossing(std::span<const Letter> seq) {
  // Runs of one letter never matter for the pattern.
  std::vector<Letter> s;
  s.reserve(seq.size());
  for (Letter l : seq)
    if (s.empty() || s.back() != l) s.push_back(l);
  std::vector<Letter> distinct(s.begin(), s.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (Letter a : distinct) {
    for (Letter b : distinct) {
      if (a == b) continue;
      const Letter pattern[4] = {a, b, a, b};
      int matched = 0;
      for (Letter l : s) {
        if (l == pattern[matched] && ++matched == 4) return false;
      }
    }
  }
  return true;
}

inline bool is_reduced(std::span<const Letter> seq) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i] == seq[i - 1]) return false;
  return seq.size() == 1 || seq.front() != seq.back();
}

}  // namespace detail

/// Unique reduced form of `w` (adjacent repeats collapsed, a trailing copy of
/// the first letter removed, repeated to a fixpoint).
inline Word reduce(const Word& w) {
  std::vector<Letter> seq(w.letters().begin(), w.letters().end());
  detail::reduce_in_place(seq);
  return Word(w.alphabet_ptr(), std::move(seq));
}

/// Deletes every letter outside `subset`. The result lives on the
/// sub-alphabet `subset` with ids renumbered in increasing order.
inline Word restrict(const Word& w, std::span<const Letter> subset) {
  std::vector<bool> keep(w.alphabet().size(), false);
  for (Letter l : subset) {
    if (l.id >= keep.size()) throw validation_error("restriction subset not contained in the alphabet");
    keep[l.id] = true;
  }
  std::vector<std::uint32_t> renumber(keep.size(), 0);
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (keep[i]) renumber[i] = next++;

  std::vector<Letter> seq;
  for (Letter l : w.letters())
    if (keep[l.id]) seq.push_back(Letter{renumber[l.id]});
  if (seq.empty()) throw empty_restriction_error("restriction subset contains no letter of the word");
  return Word(sub_alphabet(w.alphabet(), subset), std::move(seq));
}

/// A total function from one alphabet into another.
struct LetterMap {
  AlphabetPtr target;
  std::vector<Letter> image;  // indexed by source letter id
};

/// Letterwise image of `w` under `f`.
inline Word apply_map(const Word& w, const LetterMap& f) {
  if (f.image.size() != w.alphabet().size())
    throw validation_error("letter map is not total on the word's alphabet");
  std::vector<Letter> seq;
  seq.reserve(w.size());
  for (Letter l : w.letters()) seq.push_back(f.image[l.id]);
  return Word(f.target, std::move(seq));
}

inline bool is_noncrossing(const Word& w) { return detail::is_noncrossing(w.letters()); }

inline bool is_reduced(const Word& w) { return detail::is_reduced(w.letters()); }

inline bool is_pangrammatic(const Word& w) {
  std::vector<bool> seen(w.alphabet().size(), false);
  for (Letter l : w.letters()) seen[l.id] = true;
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

/// Letters occurring in `w`, ascending.
inline std::vector<Letter> occurring_letters(const Word& w) {
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The word 1,2,...,N on the alphabet [N].
inline Word identity_word(std::size_t n) {
  if (n == 0) throw validation_error("identity word needs N >= 1");
  std::vector<Letter> seq;
  for (std::uint32_t i = 0; i < n; ++i) seq.push_back(Letter{i});
  return Word(Alphabet::numbered(n), std::move(seq));
}

/// The word 1,2,...,N-1,N,N-1,...,3,2 on the alphabet [N].
inline Word boolean_word(std::size_t n) {
  if (n == 0) throw validation_error("boolean word needs N >= 1");
  std::vector<Letter> seq;
  for (std::uint32_t i = 0; i < n; ++i) seq.push_back(Letter{i});
  for (std::uint32_t i = static_cast<std::uint32_t>(n) - 1; i >= 2; --i) seq.push_back(Letter{i - 1});
  return Word(Alphabet::numbered(n), std::move(seq));
}

/// All pangrammatic reduced non-crossing words over `alphabet` of length at
/// most `max_len` (default 2k-1), lexicographic in letter ids.
inline std::vector<Word> enumerate_nc_basis(const AlphabetPtr& alphabet, std::optional<std::size_t> max_len = {}) {
  const std::size_t k = alphabet->size();
  const std::size_t limit = max_len.value_or(2 * k - 1);
  if (limit == 0) throw validation_error("max_len must be at least 1");

  std::vector<Word> out;
  std::vector<Letter> prefix;
  std::vector<std::size_t> counts(k, 0);
  std::size_t distinct = 0;

  // Crossing and adjacent repeats are inherited by every extension, so both
  // prune the search.
  auto dfs = [&](auto&& self) -> void {
    if (!prefix.empty() && distinct == k && prefix.front() != prefix.back())
      out.emplace_back(alphabet, prefix);
    else if (prefix.size() == 1 && k == 1)
      out.emplace_back(alphabet, prefix);
    if (prefix.size() == limit) return;
    for (std::uint32_t id = 0; id < k; ++id) {
      Letter l{id};
      if (!prefix.empty() && prefix.back() == l) continue;
      prefix.push_back(l);
      if (detail::is_noncrossing(prefix)) {
        if (counts[id]++ == 0) ++distinct;
        self(self);
        if (--counts[id] == 0) --distinct;
      }
      prefix.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

/// All pangrammatic reduced words over `alphabet` of length at most
/// `max_len`, lexicographic in letter ids.
inline std::vector<Word> enumerate_basis(const AlphabetPtr& alphabet, std::size_t max_len) {
  const std::size_t k = alphabet->size();
  std::vector<Word> out;
  std::vector<Letter> prefix;
  std::vector<std::size_t> counts(k, 0);
  std::size_t distinct = 0;
  auto dfs = [&](auto&& self) -> void {
    if (!prefix.empty() && distinct == k && (prefix.size() == 1 || prefix.front() != prefix.back()))
      out.emplace_back(alphabet, prefix);
    if (prefix.size() == max_len) return;
    for (std::uint32_t id = 0; id < k; ++id) {
      if (!prefix.empty() && prefix.back().id == id) continue;
      prefix.push_back(Letter{id});
      if (counts[id]++ == 0) ++distinct;
      self(self);
      if (--counts[id] == 0) --distinct;
      prefix.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

/// A random pangrammatic reduced word: a uniform word of length 1..max_len
/// over a uniform alphabet of size 1..max_alphabet, reduced and restricted to
/// the letters that occur.
template <class Rng>
Word random_basis_word(Rng& rng, std::size_t max_alphabet, std::size_t max_len) {
  if (max_alphabet == 0 || max_alphabet > 26 || max_len == 0)
    throw validation_error("random_basis_word: sizes out of range");
  std::uniform_int_distribution<std::size_t> pick_k(1, max_alphabet);
  std::uniform_int_distribution<std::size_t> pick_len(1, max_len);
  const std::size_t k = pick_k(rng);
  const std::size_t len = pick_len(rng);
  std::uniform_int_distribution<std::uint32_t> pick_letter(0, static_cast<std::uint32_t>(k - 1));
  std::vector<Letter> seq;
  for (std::size_t i = 0; i < len; ++i) seq.push_back(Letter{pick_letter(rng)});
  Word w = reduce(Word(Alphabet::latin(k), std::move(seq)));
  return restrict(w, occurring_letters(w));
}

/// How a word was written: "abcb" or "a1,a2,a1".
enum class WordSyntax { compact, comma };

struct ParsedWord {
  Word word;
  WordSyntax syntax;
};

namespace detail {

/// Orders names so that embedded digit runs compare numerically: a2 < a10.
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      auto da = a.substr(i, ie - i), db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

inline std::vector<std::string> split_tokens(std::string_view text, WordSyntax& syntax) {
  std::vector<std::string> tokens;
  if (text.find(',') != std::string_view::npos) {
    syntax = WordSyntax::comma;
    std::size_t start = 0;
    for (;;) {
      const auto comma = text.find(',', start);
      auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (tok.empty()) throw parse_error("empty letter in word '" + std::string(text) + "'");
      tokens.emplace_back(tok);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    syntax = WordSyntax::compact;
    for (char c : text) tokens.emplace_back(1, c);
  }
  for (const auto& t : tokens)
    for (char c : t)
      if (c == ' ' || c == '\t' || c == '\n' || c == '{' || c == '}' || c == ';' || c == '|')
        throw parse_error("invalid character in word '" + std::string(text) + "'");
  return tokens;
}

}  // namespace detail

/// Parses "abcb" or "a1,a2,a1,a3". The alphabet is the set of letters that
/// occur, in natural name order.
inline ParsedWord parse_word(std::string_view text) {
  if (text.empty()) throw parse_error("empty word");
  WordSyntax syntax{};
  auto tokens = detail::split_tokens(text, syntax);
  std::vector<std::string> names(tokens.begin(), tokens.end());
  std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) { return detail::natural_less(a, b); });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  auto alphabet = Alphabet::make(names);
  std::vector<Letter> seq;
  for (const auto& t : tokens) seq.push_back(*alphabet->find(t));
  return ParsedWord{Word(alphabet, std::move(seq)), syntax};
}

/// Parses `text` against a given alphabet; unknown letters are an error.
inline Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
  if (text.empty()) throw parse_error("empty word");
  WordSyntax syntax{};
  auto tokens = detail::split_tokens(text, syntax);
  std::vector<Letter> seq;
  for (const auto& t : tokens) {
    auto l = alphabet->find(t);
    if (!l) throw parse_error("letter '" + t + "' is not in the alphabet");
    seq.push_back(*l);
  }
  return Word(alphabet, std::move(seq));
}

/// Compact rendering is used only when requested and every name is one
/// character; otherwise letters are comma-separated.
inline std::string format_word(const Word& w, WordSyntax syntax = WordSyntax::compact) {
  const bool compact = syntax == WordSyntax::compact && w.alphabet().single_char_names();
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += w.alphabet().name(w[i]);
  }
  return out;
}

}  // namespace nccoop

#endif  // NCCOOP_WORDS_HPP
