// Brute-force reference computations for the test suites. Nothing in here
// calls into the library algorithms it is used to check.
#ifndef NCCOOP_TESTS_ORACLES_HPP
#define NCCOOP_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nccoop/rational.hpp"

namespace oracle {

using Seq = std::vector<std::uint32_t>;

/// Every word reachable from `w` by single applications of
/// "..aa.. -> ..a.." and "a..a -> a..", and the irreducible ones among them.
struct RewriteClosure {
  std::set<Seq> reachable;
  std::set<Seq> normal_forms;
};

inline RewriteClosure rewrite_closure(const Seq& w) {
  RewriteClosure out;
  std::deque<Seq> queue{w};
  out.reachable.insert(w);
  while (!queue.empty()) {
    Seq cur = queue.front();
    queue.pop_front();
    std::vector<Seq> next;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] == cur[i + 1]) {
        Seq s = cur;
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        next.push_back(s);
      }
    if (cur.size() > 1 && cur.front() == cur.back()) {
      Seq s = cur;
      s.pop_back();
      next.push_back(s);
    }
    if (next.empty()) out.normal_forms.insert(cur);
    for (auto& s : next)
      if (out.reachable.insert(s).second) queue.push_back(s);
  }
  return out;
}

/// Indices i<j<k<l with w[i]=w[k] != w[j]=w[l].
inline bool crossing_by_indices(const Seq& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (w[i] == w[k] && w[j] == w[l] && w[i] != w[j]) return true;
  return false;
}

inline bool reduced_by_definition(const Seq& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return false;
  return w.size() == 1 || w.front() != w.back();
}

inline bool uses_all(const Seq& w, std::size_t k) {
  std::set<std::uint32_t> s(w.begin(), w.end());
  return s.size() == k;
}

/// All sequences over {0..k-1} with lengths 1..max_len, lexicographic.
inline std::vector<Seq> all_sequences(std::size_t k, std::size_t max_len) {
  std::vector<Seq> out;
  Seq cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (std::uint32_t a = 0; a < k; ++a) {
      cur.push_back(a);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// Set partitions of [n] as canonical assignments, found by normalizing all
/// n^n functions [n] -> [n].
inline std::set<Seq> set_partitions_by_functions(std::size_t n) {
  std::set<Seq> out;
  Seq f(n, 0);
  for (;;) {
    std::map<std::uint32_t, std::uint32_t> relabel;
    Seq canon;
    for (auto v : f) {
      auto it = relabel.find(v);
      if (it == relabel.end()) it = relabel.emplace(v, static_cast<std::uint32_t>(relabel.size())).first;
      canon.push_back(it->second);
    }
    out.insert(canon);
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline nccoop::Int bell(std::size_t n) {
  // Bell triangle.
  std::vector<nccoop::Int> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<nccoop::Int> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

inline nccoop::Int catalan(std::size_t n) {
  nccoop::Int c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

/// Order produced by listing the blocks in rho's order and each block in its
/// tau's order; the rank of s is its position in that listing.
inline Seq graft_by_listing(const Seq& f, const Seq& rho, const std::vector<Seq>& taus) {
  const std::size_t m = rho.size();
  std::vector<Seq> blocks(m);
  for (std::uint32_t s = 0; s < f.size(); ++s) blocks[f[s]].push_back(s);
  std::vector<std::uint32_t> block_order(m);
  for (std::uint32_t t = 0; t < m; ++t) block_order[rho[t] - 1] = t;
  Seq listing;
  for (auto t : block_order) {
    Seq in_block(blocks[t].size());
    for (std::size_t j = 0; j < blocks[t].size(); ++j) in_block[taus[t][j] - 1] = blocks[t][j];
    listing.insert(listing.end(), in_block.begin(), in_block.end());
  }
  Seq rank(f.size());
  for (std::uint32_t pos = 0; pos < listing.size(); ++pos) rank[listing[pos]] = pos + 1;
  return rank;
}

/// Compositions of n as lists of interval lengths.
inline std::vector<Seq> compositions(std::size_t n) {
  std::vector<Seq> out;
  Seq cur;
  auto rec = [&](auto&& self, std::size_t left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t len = 1; len <= left; ++len) {
      cur.push_back(len);
      self(self, left - len);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

}  // namespace oracle

#endif  // NCCOOP_TESTS_ORACLES_HPP
