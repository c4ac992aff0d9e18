#ifndef NCCOOP_CUMULANTS_HPP
#define NCCOOP_CUMULANTS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nccoop/errors.hpp"
#include "nccoop/probability.hpp"
#include "nccoop/rational.hpp"
#include "nccoop/surjections.hpp"
#include "nccoop/words.hpp"

namespace nccoop {

/// A word (pangrammatic, reduced, non-crossing) with one variable per letter.
struct CumulantQuery {
  Word word;
  Assignment assign;
};

/// Cumulants of one expectation, indexed by word and assignment.
///
/// The cumulant of w solves
///   E(w) = sum over canonical surjections f with f(w) non-crossing of
///          prod_t K(reduce(w restricted to f^-1(t)))
/// for the constant-f term, which is K(w) itself. Every other term has
/// strictly smaller blocks, so the system is triangular with unit diagonal.
///
/// Entries are keyed on the word relabeled by first occurrence, so queries
/// that differ only by alphabet naming share cache entries. Lookups and
/// inserts are safe from several threads.
class CumulantTable {
 public:
  explicit CumulantTable(MomentFunctional E) : E_(std::move(E)) {}

  const MomentFunctional& expectation() const noexcept { return E_; }

  Rat word_cumulant(const Word& w, const Assignment& assign) {
    if (!is_pangrammatic(w)) throw validation_error("cumulant word '" + format_word(w) + "' is not pangrammatic");
    if (!is_reduced(w)) throw validation_error("cumulant word '" + format_word(w) + "' is not reduced");
    if (!is_noncrossing(w)) throw crossing_word_error("cumulant word '" + format_word(w) + "' is crossing");
    if (assign.size() != w.alphabet().size())
      throw validation_error("assignment must give one variable per letter");
    for (const auto& v : assign)
      if (!E_.has_variable(v)) throw validation_error("unknown variable '" + v.name + "'");
    std::vector<Letter> seq(w.letters().begin(), w.letters().end());
    auto [cseq, cassign] = canonical_form(seq, assign);
    return compute(cseq, cassign);
  }

  Rat word_cumulant(const CumulantQuery& q) { return word_cumulant(q.word, q.assign); }

  /// kappa_N(args) as the cumulant of the word 1,2,...,N.
  Rat free_cumulant(std::span<const Variable> args) {
    if (args.empty()) throw validation_error("cumulant order must be at least 1");
    return word_cumulant(identity_word(args.size()), Assignment(args.begin(), args.end()));
  }

  /// The cumulant of the word 1,2,...,N,N-1,...,2.
  Rat boolean_word_cumulant(std::span<const Variable> args) {
    if (args.empty()) throw validation_error("cumulant order must be at least 1");
    return word_cumulant(boolean_word(args.size()), Assignment(args.begin(), args.end()));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  using Key = std::pair<std::vector<std::uint32_t>, std::vector<std::string>>;

  static std::pair<std::vector<Letter>, Assignment> canonical_form(const std::vector<Letter>& seq,
                                                                   const Assignment& assign) {
    std::vector<std::uint32_t> relabel(assign.size(), UINT32_MAX);
    Assignment cassign;
    std::vector<Letter> cseq;
    cseq.reserve(seq.size());
    for (Letter l : seq) {
      auto& r = relabel[l.id];
      if (r == UINT32_MAX) {
        r = static_cast<std::uint32_t>(cassign.size());
        cassign.push_back(assign[l.id]);
      }
      cseq.push_back(Letter{r});
    }
    return {std::move(cseq), std::move(cassign)};
  }

  Rat compute(const std::vector<Letter>& seq, const Assignment& assign) {
    Key key;
    key.first.reserve(seq.size());
    for (Letter l : seq) key.first.push_back(l.id);
    for (const auto& v : assign) key.second.push_back(v.name);
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }

    // In canonical form the first-occurrence order is the identity.
    Rat value = E_(Monomial{assign});
    const std::size_t k = assign.size();
    if (k > 1) {
      std::vector<Letter> image(seq.size());
      for_each_canonical_surjection(k, [&](std::span<const std::uint32_t> f, std::size_t m) {
        if (m == 1) return;
        for (std::size_t i = 0; i < seq.size(); ++i) image[i] = Letter{f[seq[i].id]};
        if (!detail::is_noncrossing(image)) return;
        Rat product = 1;
        for (std::uint32_t t = 0; t < m && product != 0; ++t) {
          std::vector<std::uint32_t> renumber(k, UINT32_MAX);
          Assignment block_assign;
          for (std::uint32_t l = 0; l < k; ++l)
            if (f[l] == t) {
              renumber[l] = static_cast<std::uint32_t>(block_assign.size());
              block_assign.push_back(assign[l]);
            }
          std::vector<Letter> restricted;
          for (Letter l : seq)
            if (f[l.id] == t) restricted.push_back(Letter{renumber[l.id]});
          detail::reduce_in_place(restricted);
          auto [cseq, cassign] = canonical_form(restricted, block_assign);
          product *= compute(cseq, cassign);
        }
        value -= product;
      });
    }

    std::unique_lock lock(mutex_);
    return entries_.emplace(std::move(key), std::move(value)).first->second;
  }

  MomentFunctional E_;
  mutable std::shared_mutex mutex_;
  std::map<Key, Rat> entries_;
};

inline Rat word_cumulant(const MomentFunctional& E, const CumulantQuery& q) {
  CumulantTable table(E);
  return table.word_cumulant(q);
}

/// kappa_N(v_1, ..., v_N) through the cooperad recursion on the word 1..N.
inline Rat free_cumulant(const MomentFunctional& E, std::span<const Variable> args) {
  CumulantTable table(E);
  return table.free_cumulant(args);
}

namespace oracle_detail {

using Blocks = std::vector<std::vector<std::uint32_t>>;

/// Set partitions of {0..n-1} built by inserting elements one at a time.
inline std::vector<Blocks> all_set_partitions(std::size_t n) {
  std::vector<Blocks> out;
  Blocks current;
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (next == n) {
      out.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(next);
      self(self, next + 1);
      current[b].pop_back();
    }
    current.push_back({next});
    self(self, next + 1);
    current.pop_back();
  };
  rec(rec, 0);
  return out;
}

/// No a < b < c < d with a, c in one block and b, d in another.
inline bool blocks_noncrossing(const Blocks& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x)
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) continue;
      for (auto a : blocks[x])
        for (auto b : blocks[y])
          for (auto c : blocks[x])
            for (auto d : blocks[y])
              if (a < b && b < c && c < d) return false;
    }
  return true;
}

}  // namespace oracle_detail

/// kappa_N(v_1, ..., v_N) straight from the defining equation
///   E(v_1 ... v_N) = sum over non-crossing partitions pi of prod_{B in pi} kappa_|B|(v_B),
/// enumerating partitions as block lists. Shares no code with the word recursion.
inline Rat free_cumulant_oracle(const MomentFunctional& E, std::span<const Variable> args) {
  if (args.empty()) throw validation_error("cumulant order must be at least 1");
  std::map<std::size_t, std::vector<oracle_detail::Blocks>> nc_by_size;
  std::map<std::vector<Variable>, Rat> memo;

  auto kappa = [&](auto&& self, const std::vector<Variable>& vs) -> Rat {
    if (auto it = memo.find(vs); it != memo.end()) return it->second;
    const std::size_t n = vs.size();
    auto& partitions = nc_by_size[n];
    if (partitions.empty())
      for (auto& p : oracle_detail::all_set_partitions(n))
        if (oracle_detail::blocks_noncrossing(p)) partitions.push_back(std::move(p));
    Rat value = E(Monomial{vs});
    for (const auto& p : partitions) {
      if (p.size() == 1) continue;
      Rat product = 1;
      for (const auto& block : p) {
        std::vector<Variable> sub;
        for (auto i : block) sub.push_back(vs[i]);
        product *= self(self, sub);
      }
      value -= product;
    }
    memo.emplace(vs, value);
    return value;
  };
  return kappa(kappa, std::vector<Variable>(args.begin(), args.end()));
}

/// Boolean cumulants from the interval-partition equation, peeling off the
/// first interval: m(v_1..v_N) = sum_j b(v_1..v_j) m(v_{j+1}..v_N).
inline Rat boolean_cumulant(const MomentFunctional& E, std::span<const Variable> args) {
  if (args.empty()) throw validation_error("cumulant order must be at least 1");
  const std::size_t n = args.size();
  std::vector<Rat> b(n + 1);
  auto moment = [&](std::size_t from, std::size_t to) {
    return E(Monomial{std::vector<Variable>(args.begin() + from, args.begin() + to)});
  };
  for (std::size_t len = 1; len <= n; ++len) {
    Rat value = moment(0, len);
    for (std::size_t j = 1; j < len; ++j) value -= b[j] * moment(j, len);
    b[len] = value;
  }
  return b[n];
}

/// c_n from m_0..m_n through c_n = m_n - sum_{k<n} C(n-1,k-1) c_k m_{n-k},
/// which groups set partitions of [n] by the block containing 1.
inline std::vector<Rat> classical_cumulants_from_moments(std::span<const Rat> moments) {
  if (moments.empty()) throw validation_error("moment sequence must contain m_0");
  const std::size_t n = moments.size() - 1;
  std::vector<Rat> c(n + 1, Rat(0));
  for (std::size_t len = 1; len <= n; ++len) {
    Rat value = moments[len];
    Int binom = 1;  // C(len-1, k-1)
    for (std::size_t k = 1; k < len; ++k) {
      value -= Rat(binom) * c[k] * moments[len - k];
      binom = binom * (len - k) / k;
    }
    c[len] = value;
  }
  return c;
}

/// Classical cumulant of a single variable repeated N times. Mixed arguments
/// are rejected: no symmetrization convention is assumed.
inline Rat classical_cumulant(const MomentFunctional& E, std::span<const Variable> args) {
  if (args.empty()) throw validation_error("cumulant order must be at least 1");
  for (const auto& v : args)
    if (v != args.front()) throw validation_error("classical cumulants are restricted to a single variable");
  std::vector<Rat> moments;
  Monomial m;
  moments.push_back(Rat(1));
  for (std::size_t k = 1; k <= args.size(); ++k) {
    m.factors.push_back(args.front());
    moments.push_back(E(m));
  }
  return classical_cumulants_from_moments(moments).back();
}

/// m_0..m_N from kappa_1..kappa_N: m_n is the sum over NC(n) of products of
/// kappa_{|block|}.
inline std::vector<Rat> moments_from_free_cumulants(std::span<const Rat> kappas) {
  std::vector<Rat> m{Rat(1)};
  for (std::size_t n = 1; n <= kappas.size(); ++n) {
    Rat total = 0;
    for (const auto& p : enumerate_nc_partitions(n)) {
      Rat product = 1;
      for (const auto& block : p.blocks()) product *= kappas[block.size() - 1];
      total += product;
    }
    m.push_back(total);
  }
  return m;
}

/// m_0..m_N from Boolean cumulants: sum over compositions of n.
inline std::vector<Rat> moments_from_boolean_cumulants(std::span<const Rat> b) {
  std::vector<Rat> m{Rat(1)};
  for (std::size_t n = 1; n <= b.size(); ++n) {
    Rat total = 0;
    for (std::size_t j = 1; j <= n; ++j) total += b[j - 1] * m[n - j];
    m.push_back(total);
  }
  return m;
}

/// m_0..m_N from classical cumulants: sum over all set partitions of [n].
inline std::vector<Rat> moments_from_classical_cumulants(std::span<const Rat> c) {
  std::vector<Rat> m{Rat(1)};
  for (std::size_t n = 1; n <= c.size(); ++n) {
    Rat total = 0;
    for (const auto& f : enumerate_canonical_surjections(n)) {
      Rat product = 1;
      for (const auto& block : f.blocks()) product *= c[block.size() - 1];
      total += product;
    }
    m.push_back(total);
  }
  return m;
}

}  // namespace nccoop

#endif  // NCCOOP_CUMULANTS_HPP
