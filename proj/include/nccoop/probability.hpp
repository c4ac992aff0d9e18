#ifndef NCCOOP_PROBABILITY_HPP
#define NCCOOP_PROBABILITY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nccoop/errors.hpp"
#include "nccoop/rational.hpp"
#include "nccoop/surjections.hpp"
#include "nccoop/words.hpp"

namespace nccoop {

struct Variable {
  std::string name;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Product of variables in order; the empty product is the unit.
struct Monomial {
  std::vector<Variable> factors;

  bool is_unit() const noexcept { return factors.empty(); }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial make_monomial(std::initializer_list<const char*> names) {
  Monomial m;
  for (const char* n : names) m.factors.push_back(Variable{n});
  return m;
}

/// "a*b*a", or "1" for the unit.
inline std::string format_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) out += '*';
    out += m.factors[i].name;
  }
  return out;
}

/// Letter id -> variable.
using Assignment = std::vector<Variable>;

/// The expectation E: a unit-preserving map from monomials to rationals.
/// Either a finite table or a generative rule (memoized). Values are
/// immutable; copies share state.
class MomentFunctional {
 public:
  /// Computes E on a non-unit monomial; throws missing_moment_error when
  /// undefined.
  using Generator = std::function<Rat(const Monomial&)>;

  static MomentFunctional from_table(std::vector<Variable> vars, const std::vector<std::pair<Monomial, Rat>>& entries) {
    auto state = std::make_shared<State>();
    state->vars = validated_vars(std::move(vars));
    for (const auto& [m, value] : entries) {
      state->check_factors(m);
      if (m.is_unit()) {
        if (value != 1) throw validation_error("E(1) must equal 1, got " + format_rat(value));
        continue;
      }
      if (!state->table.emplace(m, value).second)
        throw validation_error("duplicate moment for " + format_monomial(m));
    }
    return MomentFunctional(std::move(state));
  }

  static MomentFunctional generative(std::vector<Variable> vars, Generator gen) {
    auto state = std::make_shared<State>();
    state->vars = validated_vars(std::move(vars));
    state->generator = std::move(gen);
    return MomentFunctional(std::move(state));
  }

  const std::vector<Variable>& variables() const noexcept { return state_->vars; }

  bool has_variable(const Variable& v) const {
    return std::find(state_->vars.begin(), state_->vars.end(), v) != state_->vars.end();
  }

  /// The stored table; empty for generative functionals.
  const std::map<Monomial, Rat>& table() const noexcept { return state_->table; }
  bool is_generative() const noexcept { return static_cast<bool>(state_->generator); }

  Rat operator()(const Monomial& m) const {
    if (m.is_unit()) return Rat(1);
    state_->check_factors(m);
    if (auto it = state_->table.find(m); it != state_->table.end()) return it->second;
    if (!state_->generator) throw missing_moment_error(format_monomial(m));
    {
      std::shared_lock lock(state_->cache_mutex);
      if (auto it = state_->cache.find(m); it != state_->cache.end()) return it->second;
    }
    Rat value = state_->generator(m);
    std::unique_lock lock(state_->cache_mutex);
    return state_->cache.emplace(m, std::move(value)).first->second;
  }

 private:
  struct State {
    std::vector<Variable> vars;
    std::map<Monomial, Rat> table;
    Generator generator;
    mutable std::shared_mutex cache_mutex;
    mutable std::map<Monomial, Rat> cache;

    void check_factors(const Monomial& m) const {
      for (const auto& v : m.factors)
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
          throw validation_error("unknown variable '" + v.name + "' in " + format_monomial(m));
    }
  };

  explicit MomentFunctional(std::shared_ptr<const State> state) : state_(std::move(state)) {}

  static std::vector<Variable> validated_vars(std::vector<Variable> vars) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
      if (v.name.empty()) throw validation_error("variable names must be nonempty");
      if (!seen.insert(v.name).second) throw validation_error("duplicate variable '" + v.name + "'");
    }
    return vars;
  }

  std::shared_ptr<const State> state_;
};

/// Ranks the letters of a pangrammatic word by first occurrence.
inline Order psi(const Word& w) {
  std::vector<std::uint32_t> rank(w.alphabet().size(), 0);
  std::uint32_t next = 1;
  for (Letter l : w.letters())
    if (rank[l.id] == 0) rank[l.id] = next++;
  if (next != rank.size() + 1) throw validation_error("psi requires a pangrammatic word");
  return Order(std::move(rank));
}

/// The monomial fed to E for a word: one factor per letter, letters taken in
/// first-occurrence order.
inline Monomial word_monomial(const Word& w, const Assignment& assign) {
  if (assign.size() != w.alphabet().size())
    throw validation_error("assignment must give one variable per letter");
  Monomial m;
  for (auto letter : psi(w).sequence()) m.factors.push_back(assign[letter]);
  return m;
}

inline Rat expect_word(const MomentFunctional& E, const Word& w, const Assignment& assign) {
  return E(word_monomial(w, assign));
}

namespace detail {

/// Sum over non-crossing pairings of `labels` whose pairs carry equal labels
/// of the product of the labels' variances.
inline Rat semicircular_moment(std::span<const std::uint32_t> labels, const std::vector<Rat>& variance,
                               std::map<std::vector<std::uint32_t>, Rat>& memo) {
  if (labels.empty()) return Rat(1);
  if (labels.size() % 2 == 1) return Rat(0);
  std::vector<std::uint32_t> key(labels.begin(), labels.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Rat total = 0;
  // The partner of the first position splits the rest into an inside and an
  // outside, each paired independently.
  for (std::size_t j = 1; j < labels.size(); j += 2) {
    if (labels[j] != labels[0]) continue;
    Rat inside = semicircular_moment(labels.subspan(1, j - 1), variance, memo);
    if (inside == 0) continue;
    total += variance[labels[0]] * inside * semicircular_moment(labels.subspan(j + 1), variance, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// Freely independent centered semicircular variables with the given
/// variances. Default names: "x" for one variable, x1..xk otherwise.
inline MomentFunctional semicircular_family(std::vector<Rat> variance, std::vector<std::string> names = {}) {
  if (variance.empty()) throw validation_error("semicircular family needs at least one variable");
  for (const auto& c : variance)
    if (c < 0) throw validation_error("covariance entries must be nonnegative");
  if (names.empty()) {
    if (variance.size() == 1)
      names.push_back("x");
    else
      for (std::size_t i = 1; i <= variance.size(); ++i) names.push_back("x" + std::to_string(i));
  }
  if (names.size() != variance.size()) throw validation_error("one name per covariance entry required");

  std::vector<Variable> vars;
  for (auto& n : names) vars.push_back(Variable{n});
  auto index = std::make_shared<std::map<std::string, std::uint32_t>>();
  for (std::uint32_t i = 0; i < names.size(); ++i) (*index)[names[i]] = i;

  return MomentFunctional::generative(vars, [variance = std::move(variance), index](const Monomial& m) {
    std::vector<std::uint32_t> labels;
    for (const auto& v : m.factors) labels.push_back(index->at(v.name));
    std::map<std::vector<std::uint32_t>, Rat> memo;
    return detail::semicircular_moment(labels, variance, memo);
  });
}

}  // namespace nccoop

#endif  // NCCOOP_PROBABILITY_HPP
