#ifndef NCCOOP_SURJECTIONS_HPP
#define NCCOOP_SURJECTIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nccoop/errors.hpp"
#include "nccoop/words.hpp"

namespace nccoop {

/// A surjection [n] -> [m], stored 0-based: assignment[i] is the image of i.
class Surjection {
 public:
  Surjection(std::vector<std::uint32_t> assignment, std::size_t codomain)
      : assignment_(std::move(assignment)), codomain_(codomain) {
    if (assignment_.empty()) throw validation_error("surjection domain must be nonempty");
    std::vector<bool> hit(codomain_, false);
    for (auto v : assignment_) {
      if (v >= codomain_) throw validation_error("surjection value out of range");
      hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      throw validation_error("map is not surjective");
  }

  std::size_t domain_size() const noexcept { return assignment_.size(); }
  std::size_t codomain_size() const noexcept { return codomain_; }
  std::uint32_t operator()(std::size_t i) const { return assignment_[i]; }
  std::span<const std::uint32_t> assignment() const noexcept { return assignment_; }

  /// Preimages of 0..m-1, each ascending.
  std::vector<std::vector<std::uint32_t>> blocks() const {
    std::vector<std::vector<std::uint32_t>> out(codomain_);
    for (std::uint32_t i = 0; i < assignment_.size(); ++i) out[assignment_[i]].push_back(i);
    return out;
  }

  /// i < j implies min f^-1(i) < min f^-1(j).
  bool is_canonical() const noexcept {
    std::uint32_t next = 0;
    for (auto v : assignment_) {
      if (v > next) return false;
      if (v == next) ++next;
    }
    return true;
  }

  bool is_constant() const noexcept { return codomain_ == 1; }
  bool is_bijective() const noexcept { return codomain_ == assignment_.size(); }

  friend bool operator==(const Surjection&, const Surjection&) = default;
  friend auto operator<=>(const Surjection& a, const Surjection& b) {
    if (auto c = a.codomain_ <=> b.codomain_; c != 0) return c;
    return a.assignment_ <=> b.assignment_;
  }

 private:
  std::vector<std::uint32_t> assignment_;
  std::size_t codomain_;
};

/// Surjection whose blocks are numbered by their minima; one representative
/// per isomorphism class of surjections out of [n].
class CanonicalSurjection : public Surjection {
 public:
  explicit CanonicalSurjection(Surjection s) : Surjection(std::move(s)) {
    if (!is_canonical()) throw validation_error("surjection is not min-preimage ordered");
  }

  /// From a 0-based restricted growth string; the codomain is inferred.
  static CanonicalSurjection from_assignment(std::vector<std::uint32_t> assignment) {
    std::size_t m = 0;
    for (auto v : assignment) m = std::max<std::size_t>(m, v + 1);
    return CanonicalSurjection(Surjection(std::move(assignment), m));
  }
};

/// g after f.
inline Surjection compose(const Surjection& g, const Surjection& f) {
  if (g.domain_size() != f.codomain_size()) throw validation_error("surjections are not composable");
  std::vector<std::uint32_t> a(f.domain_size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
  return Surjection(std::move(a), g.codomain_size());
}

/// The representative of f's isomorphism class: relabel blocks by minima.
inline CanonicalSurjection canonicalize(const Surjection& f) {
  std::vector<std::uint32_t> relabel(f.codomain_size(), UINT32_MAX);
  std::vector<std::uint32_t> a(f.domain_size());
  std::uint32_t next = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& r = relabel[f(i)];
    if (r == UINT32_MAX) r = next++;
    a[i] = r;
  }
  return CanonicalSurjection(Surjection(std::move(a), f.codomain_size()));
}

/// Visits every canonical surjection out of [n] in lexicographic order of
/// the assignment. The callback receives the 0-based assignment and codomain.
template <class F>
void for_each_canonical_surjection(std::size_t n, F&& visit) {
  if (n == 0) throw validation_error("n must be at least 1");
  std::vector<std::uint32_t> a(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);  // max of a[0..i]
  for (;;) {
    visit(std::span<const std::uint32_t>(a), static_cast<std::size_t>(prefix_max[n - 1] + 1));
    std::size_t i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

/// All canonical surjections out of [n], ordered by (codomain size,
/// assignment). There are Bell(n) of them.
inline std::vector<CanonicalSurjection> enumerate_canonical_surjections(std::size_t n) {
  std::vector<CanonicalSurjection> out;
  for_each_canonical_surjection(n, [&](std::span<const std::uint32_t> a, std::size_t m) {
    out.emplace_back(Surjection(std::vector<std::uint32_t>(a.begin(), a.end()), m));
  });
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.codomain_size() < y.codomain_size();
  });
  return out;
}

namespace detail {

inline bool assignment_is_noncrossing(std::span<const std::uint32_t> a) {
  std::vector<Letter> w;
  w.reserve(a.size());
  for (auto v : a) w.push_back(Letter{v});
  return is_noncrossing(w);
}

}  // namespace detail

/// f(1,...,n) is a non-crossing word. Ordering is already a type invariant.
inline bool is_noncrossing_partition(const CanonicalSurjection& f) {
  return detail::assignment_is_noncrossing(f.assignment());
}

/// A canonical surjection whose induced word on [n] is non-crossing.
class NonCrossingPartition {
 public:
  explicit NonCrossingPartition(CanonicalSurjection f) : f_(std::move(f)) {
    if (!is_noncrossing_partition(f_)) throw validation_error("partition is crossing");
  }

  const CanonicalSurjection& surjection() const noexcept { return f_; }
  std::size_t size() const noexcept { return f_.codomain_size(); }
  std::size_t n() const noexcept { return f_.domain_size(); }
  std::vector<std::vector<std::uint32_t>> blocks() const { return f_.blocks(); }

  friend bool operator==(const NonCrossingPartition&, const NonCrossingPartition&) = default;

 private:
  CanonicalSurjection f_;
};

/// Non-crossing partitions of [n], in the canonical surjection order.
/// There are Catalan(n) of them.
inline std::vector<NonCrossingPartition> enumerate_nc_partitions(std::size_t n) {
  std::vector<NonCrossingPartition> out;
  for (auto& f : enumerate_canonical_surjections(n))
    if (is_noncrossing_partition(f)) out.emplace_back(std::move(f));
  return out;
}

/// Block notation "{1,3}{2}" with 1-based elements, blocks ordered by minimum.
inline std::string format_blocks(const Surjection& f) {
  auto blocks = f.blocks();
  std::sort(blocks.begin(), blocks.end());
  std::string out;
  for (const auto& b : blocks) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i] + 1);
    }
    out += '}';
  }
  return out;
}

/// A total order on [n]: rank(i) in 1..n is the position of element i.
class Order {
 public:
  explicit Order(std::vector<std::uint32_t> ranking) : ranking_(std::move(ranking)) {
    std::vector<bool> seen(ranking_.size() + 1, false);
    for (auto r : ranking_) {
      if (r == 0 || r > ranking_.size() || seen[r]) throw validation_error("ranking is not a bijection onto [n]");
      seen[r] = true;
    }
  }

  static Order identity(std::size_t n) {
    std::vector<std::uint32_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(i + 1);
    return Order(std::move(r));
  }

  std::size_t size() const noexcept { return ranking_.size(); }
  std::uint32_t rank(std::size_t i) const { return ranking_[i]; }
  std::span<const std::uint32_t> ranking() const noexcept { return ranking_; }

  /// Elements listed from rank 1 upwards (0-based).
  std::vector<std::uint32_t> sequence() const {
    std::vector<std::uint32_t> seq(ranking_.size());
    for (std::uint32_t i = 0; i < ranking_.size(); ++i) seq[ranking_[i] - 1] = i;
    return seq;
  }

  friend bool operator==(const Order&, const Order&) = default;
  friend auto operator<=>(const Order&, const Order&) = default;

 private:
  std::vector<std::uint32_t> ranking_;
};

/// "(1,3,2)": the ranks of elements 1..n.
inline std::string format_order(const Order& o) {
  std::string out = "(";
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(o.rank(i));
  }
  return out + ")";
}

/// All n! orders on [n], lexicographic in the ranking.
inline std::vector<Order> enumerate_orders(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(i + 1);
  std::vector<Order> out;
  do {
    out.emplace_back(r);
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

/// Composition of the associative operad along f: element s goes to
///   tau_{f(s)}(s) + sum over blocks t ranked before f(s) by rho of |f^-1(t)|.
/// taus[t] orders the block f^-1(t), whose elements are indexed ascending.
inline Order graft_orders(const Surjection& f, const Order& rho, std::span<const Order> taus) {
  if (rho.size() != f.codomain_size() || taus.size() != f.codomain_size())
    throw validation_error("graft_orders: order count does not match the surjection");
  const auto blocks = f.blocks();
  for (std::size_t t = 0; t < blocks.size(); ++t)
    if (taus[t].size() != blocks[t].size()) throw validation_error("graft_orders: block order has wrong size");

  std::vector<std::uint32_t> position(f.domain_size());
  for (const auto& b : blocks)
    for (std::uint32_t j = 0; j < b.size(); ++j) position[b[j]] = j;

  std::vector<std::uint32_t> out(f.domain_size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto fs = f(s);
    std::uint32_t offset = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t)
      if (rho.rank(t) < rho.rank(fs)) offset += static_cast<std::uint32_t>(blocks[t].size());
    out[s] = taus[fs].rank(position[s]) + offset;
  }
  return Order(std::move(out));
}

}  // namespace nccoop

#endif  // NCCOOP_SURJECTIONS_HPP
