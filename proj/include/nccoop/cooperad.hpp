#ifndef NCCOOP_COOPERAD_HPP
#define NCCOOP_COOPERAD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nccoop/errors.hpp"
#include "nccoop/lin.hpp"
#include "nccoop/rational.hpp"
#include "nccoop/surjections.hpp"
#include "nccoop/words.hpp"

namespace nccoop {

/// One factor of the decomposition of a word along a surjection f of its
/// alphabet: the reduced image of the word, and the reduced restriction of the
/// word to each block of f.
struct DecompositionTerm {
  Surjection f;
  Word outer;
  std::vector<Word> inner;  // inner[t] lives on the block f^-1(t)

  friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
  friend auto operator<=>(const DecompositionTerm&, const DecompositionTerm&) = default;
};

enum class CooperadKind { word, noncrossing };

/// Names the letters of f's codomain after the blocks: "b0" for the single
/// block of a constant map, otherwise "b" followed by the 1-based positions
/// of the block's letters ("b13" for {a1,a3}).
inline AlphabetPtr block_alphabet(const Alphabet& source, const Surjection& f) {
  if (f.domain_size() != source.size()) throw validation_error("surjection does not match the alphabet");
  if (f.is_constant()) return Alphabet::make({"b0"});
  const bool wide = source.size() >= 10;
  std::vector<std::string> names;
  for (const auto& block : f.blocks()) {
    std::string name = "b";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (wide && j) name += '_';
      name += std::to_string(block[j] + 1);
    }
    names.push_back(std::move(name));
  }
  return Alphabet::make(std::move(names));
}

namespace detail {

inline std::vector<Letter> as_letters(std::span<const std::uint32_t> ids) {
  std::vector<Letter> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(Letter{id});
  return out;
}

inline LetterMap letter_map(const Surjection& f, AlphabetPtr target) {
  return LetterMap{std::move(target), as_letters(f.assignment())};
}

inline void require_basis_word(const Word& w) {
  if (!is_pangrammatic(w)) throw validation_error("word '" + format_word(w) + "' is not pangrammatic");
  if (!is_reduced(w)) throw validation_error("word '" + format_word(w) + "' is not reduced");
}

}  // namespace detail

/// Decomposition along f with an explicit codomain alphabet.
inline DecompositionTerm delta_f(const Word& w, const Surjection& f, AlphabetPtr target) {
  detail::require_basis_word(w);
  if (f.domain_size() != w.alphabet().size()) throw validation_error("surjection does not match the alphabet");
  if (target->size() != f.codomain_size()) throw validation_error("target alphabet has the wrong size");
  Word outer = reduce(apply_map(w, detail::letter_map(f, std::move(target))));
  std::vector<Word> inner;
  for (const auto& block : f.blocks()) inner.push_back(reduce(restrict(w, detail::as_letters(block))));
  return DecompositionTerm{f, std::move(outer), std::move(inner)};
}

inline DecompositionTerm delta_f(const Word& w, const Surjection& f) {
  return delta_f(w, f, block_alphabet(w.alphabet(), f));
}

/// One term per canonical surjection of the alphabet, in the canonical
/// surjection order.
inline std::vector<DecompositionTerm> decompose(const Word& w) {
  detail::require_basis_word(w);
  std::vector<DecompositionTerm> out;
  for (const auto& f : enumerate_canonical_surjections(w.alphabet().size())) out.push_back(delta_f(w, f));
  return out;
}

/// Decomposition in the non-crossing quotient: the terms whose unreduced
/// image f(w) is non-crossing.
inline std::vector<DecompositionTerm> decompose_nc(const Word& w) {
  detail::require_basis_word(w);
  if (!is_noncrossing(w)) throw crossing_word_error("word '" + format_word(w) + "' is crossing");
  std::vector<DecompositionTerm> out;
  for (const auto& f : enumerate_canonical_surjections(w.alphabet().size())) {
    std::vector<Letter> image;
    for (Letter l : w.letters()) image.push_back(Letter{f(l.id)});
    if (detail::is_noncrossing(image)) out.push_back(delta_f(w, f));
  }
  return out;
}

/// Linear extension of decompose().
inline Lin<DecompositionTerm> decompose(const Lin<Word>& x) {
  Lin<DecompositionTerm> out;
  for (const auto& [w, c] : x)
    for (auto& term : decompose(w)) out.add(term, c);
  return out;
}

/// True iff the term lies in the crossing ideal: its outer word or one of
/// its inner words is crossing.
inline bool crossing_ideal_witness(const DecompositionTerm& term) {
  if (!is_noncrossing(term.outer)) return true;
  for (const auto& w : term.inner)
    if (!is_noncrossing(w)) return true;
  return false;
}

/// Quotient map from words onto non-crossing words.
inline Lin<Word> project_nc(const Lin<Word>& x) {
  return x.filter([](const Word& w) { return is_noncrossing(w); });
}

/// Quotient map on the composite, killing every term in the crossing ideal.
inline Lin<DecompositionTerm> project_nc(const Lin<DecompositionTerm>& x) {
  return x.filter([](const DecompositionTerm& t) { return !crossing_ideal_witness(t); });
}

/// Counit: 1 on the unique word over a singleton alphabet. Larger alphabets
/// have a zero counit, reported as an error so callers handle it explicitly.
inline Rat counit(const Word& w) {
  if (w.alphabet().size() != 1)
    throw validation_error("counit is only defined on singleton alphabets");
  return Rat(1);
}

struct CoassociativityReport {
  std::size_t chains = 0;
  std::size_t failures = 0;
  bool ok() const noexcept { return failures == 0; }
};

/// Checks both iterated decompositions factor by factor over every chain of
/// canonical surjections S ->> T ->> U out of w's alphabet. For the
/// non-crossing cooperad a chain also has to agree on whether it survives
/// the quotient.
inline CoassociativityReport coassociativity_report(const Word& w, CooperadKind which) {
  detail::require_basis_word(w);
  if (which == CooperadKind::noncrossing && !is_noncrossing(w))
    throw crossing_word_error("word '" + format_word(w) + "' is crossing");

  CoassociativityReport report;
  const std::size_t k = w.alphabet().size();
  for (const auto& f : enumerate_canonical_surjections(k)) {
    const std::size_t m = f.codomain_size();
    auto t_alpha = Alphabet::numbered(m, "t");
    const Word fw = apply_map(w, detail::letter_map(f, t_alpha));
    const Word fw_red = reduce(fw);
    const auto f_blocks = f.blocks();
    std::vector<Word> inner_left;
    for (const auto& b : f_blocks) inner_left.push_back(reduce(restrict(w, detail::as_letters(b))));

    for (const auto& g : enumerate_canonical_surjections(m)) {
      ++report.chains;
      auto u_alpha = Alphabet::numbered(g.codomain_size(), "u");
      const Surjection h = compose(g, f);
      const auto g_blocks = g.blocks();
      const auto h_blocks = h.blocks();

      // (Delta_g (x) id) Delta_f
      const Word outer_left = reduce(apply_map(fw_red, detail::letter_map(g, u_alpha)));
      std::vector<Word> mid_left;
      for (const auto& b : g_blocks) mid_left.push_back(reduce(restrict(fw_red, detail::as_letters(b))));
      bool survives_left = true;
      if (which == CooperadKind::noncrossing)
        survives_left = is_noncrossing(fw) && detail::is_noncrossing(apply_map(fw_red, detail::letter_map(g, u_alpha)).letters());

      // (id (x) Delta_{f|}) Delta_{gf}
      const Word hw = apply_map(w, detail::letter_map(h, u_alpha));
      const Word outer_right = reduce(hw);
      std::vector<Word> mid_right;
      std::vector<Word> inner_right(m, w);
      bool survives_right = which == CooperadKind::word || is_noncrossing(hw);
      for (std::size_t u = 0; u < g_blocks.size(); ++u) {
        const Word w_u = reduce(restrict(w, detail::as_letters(h_blocks[u])));
        // f restricted to the fiber over u, landing in the sub-alphabet g^-1(u) of T.
        const auto& fiber = h_blocks[u];
        const auto& targets = g_blocks[u];
        std::vector<Letter> image;
        for (auto s : fiber) {
          auto pos = std::find(targets.begin(), targets.end(), f(s)) - targets.begin();
          image.push_back(Letter{static_cast<std::uint32_t>(pos)});
        }
        const Word f_u_w = apply_map(w_u, LetterMap{sub_alphabet(*t_alpha, detail::as_letters(targets)), image});
        if (which == CooperadKind::noncrossing && !is_noncrossing(f_u_w)) survives_right = false;
        mid_right.push_back(reduce(f_u_w));
        for (std::size_t j = 0; j < targets.size(); ++j) {
          std::vector<Letter> sub;
          for (std::uint32_t i = 0; i < fiber.size(); ++i)
            if (image[i].id == j) sub.push_back(Letter{i});
          inner_right[targets[j]] = reduce(restrict(w_u, sub));
        }
      }

      bool agree = survives_left == survives_right;
      if (agree && survives_left)
        agree = outer_left == outer_right && mid_left == mid_right && inner_left == inner_right;
      if (!agree) ++report.failures;
    }
  }
  return report;
}

inline bool check_coassociativity(const Word& w, CooperadKind which) {
  return coassociativity_report(w, which).ok();
}

/// "f={1,3}{2} | outer=b13,b2 | inner=[a1,a3; a2]"
inline std::string format_term(const DecompositionTerm& term, WordSyntax syntax = WordSyntax::compact) {
  std::string out = "f=" + format_blocks(term.f) + " | outer=" + format_word(term.outer, syntax) + " | inner=[";
  for (std::size_t t = 0; t < term.inner.size(); ++t) {
    if (t) out += "; ";
    out += format_word(term.inner[t], syntax);
  }
  return out + "]";
}

}  // namespace nccoop

#endif  // NCCOOP_COOPERAD_HPP
