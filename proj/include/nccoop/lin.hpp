#ifndef NCCOOP_LIN_HPP
#define NCCOOP_LIN_HPP

#include <cstddef>
#include <map>
#include <type_traits>
#include <utility>

#include "nccoop/rational.hpp"

namespace nccoop {

/// Finite formal linear combination of basis elements with rational
/// coefficients. Zero coefficients are never stored, and iteration follows
/// the basis ordering so rendering is deterministic.
template <class Basis>
class Lin {
 public:
  using basis_type = Basis;
  using container = std::map<Basis, Rat>;
  using const_iterator = typename container::const_iterator;

  Lin() = default;

  explicit Lin(Basis b, Rat coeff = Rat(1)) { add(std::move(b), coeff); }

  void add(const Basis& b, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }

  Lin& operator+=(const Lin& other) {
    for (const auto& [b, c] : other.terms_) add(b, c);
    return *this;
  }

  Lin& operator-=(const Lin& other) {
    for (const auto& [b, c] : other.terms_) add(b, -c);
    return *this;
  }

  Lin& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& entry : terms_) entry.second *= s;
    return *this;
  }

  friend Lin operator+(Lin a, const Lin& b) { return a += b; }
  friend Lin operator-(Lin a, const Lin& b) { return a -= b; }
  friend Lin operator-(Lin a) { return a *= Rat(-1); }
  friend Lin operator*(Lin a, const Rat& s) { return a *= s; }
  friend Lin operator*(const Rat& s, Lin a) { return a *= s; }

  friend bool operator==(const Lin& a, const Lin& b) { return a.terms_ == b.terms_; }

  /// Keeps the terms whose basis element satisfies `pred`.
  template <class Pred>
  Lin filter(Pred&& pred) const {
    Lin out;
    for (const auto& [b, c] : terms_)
      if (pred(b)) out.terms_.emplace(b, c);
    return out;
  }

  /// Linear extension of `f`. `f` may return a basis element of another
  /// type or a whole linear combination.
  template <class F>
  auto map_linear(F&& f) const {
    using R = std::invoke_result_t<F&, const Basis&>;
    if constexpr (is_lin<R>::value) {
      R out;
      for (const auto& [b, c] : terms_) out += f(b) * c;
      return out;
    } else {
      Lin<R> out;
      for (const auto& [b, c] : terms_) out.add(f(b), c);
      return out;
    }
  }

 private:
  template <class T>
  struct is_lin : std::false_type {};
  template <class B>
  struct is_lin<Lin<B>> : std::true_type {};

  container terms_;
};

}  // namespace nccoop

#endif  // NCCOOP_LIN_HPP
