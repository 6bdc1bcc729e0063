#pragma once

// Shared helpers for the test binaries. The generators here are brute force
// and do not use the library's enumeration.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "pseudoline/arrangement.hpp"
#include "pseudoline/crossing_word.hpp"
#include "pseudoline/error.hpp"

inline std::optional<pseudoline::ErrorCode> error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const pseudoline::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Random reduced word of the full reversal.
inline pseudoline::CrossingWord random_word(int n, std::mt19937_64& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> word;
  while (static_cast<int>(word.size()) < n * (n - 1) / 2) {
    std::vector<int> open;
    for (int p = 1; p < n; ++p) {
      if (order[p - 1] < order[p]) open.push_back(p);
    }
    const int p = open[rng() % open.size()];
    std::swap(order[p - 1], order[p]);
    word.push_back(p);
  }
  return pseudoline::CrossingWord::validate(n, word);
}

// Every reduced word of the full reversal on n wires.
inline std::vector<std::vector<int>> all_reduced_words(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> word;
  const int total = n * (n - 1) / 2;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(word.size()) == total) {
      out.push_back(word);
      return;
    }
    for (int p = 1; p < n; ++p) {
      if (order[p - 1] > order[p]) continue;
      std::swap(order[p - 1], order[p]);
      word.push_back(p);
      rec();
      word.pop_back();
      std::swap(order[p - 1], order[p]);
    }
  };
  rec();
  return out;
}

// All words reachable by swapping adjacent commuting letters.
inline std::set<std::vector<int>> commutation_class_of(const std::vector<int>& start) {
  std::set<std::vector<int>> seen{start};
  std::queue<std::vector<int>> todo;
  todo.push(start);
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (std::abs(w[i] - w[i + 1]) < 2) continue;
      auto v = w;
      std::swap(v[i], v[i + 1]);
      if (seen.insert(v).second) todo.push(v);
    }
  }
  return seen;
}

inline std::vector<pseudoline::CrossingWord> commutation_class(const pseudoline::CrossingWord& w) {
  std::vector<pseudoline::CrossingWord> out;
  for (const auto& v :
       commutation_class_of(std::vector<int>(w.positions().begin(), w.positions().end()))) {
    out.push_back(pseudoline::CrossingWord::validate(w.wires(), v));
  }
  return out;
}

// Number of orbits of raw words under commutation plus the listed word maps,
// by union-find over the explicit word set.
inline int orbit_count(int n, const std::vector<std::function<std::vector<int>(std::vector<int>)>>&
                                  maps) {
  const auto words = all_reduced_words(n);
  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto id_of = [&](const std::vector<int>& w) {
    return static_cast<int>(std::lower_bound(words.begin(), words.end(), w) - words.begin());
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (std::abs(w[k] - w[k + 1]) < 2) continue;
      auto v = w;
      std::swap(v[k], v[k + 1]);
      parent[find(static_cast<int>(i))] = find(id_of(v));
    }
    for (const auto& m : maps) parent[find(static_cast<int>(i))] = find(id_of(m(w)));
  }
  int roots = 0;
  for (std::size_t i = 0; i < words.size(); ++i) roots += find(static_cast<int>(i)) == static_cast<int>(i);
  return roots;
}

inline std::vector<int> reversed_word(std::vector<int> w) {
  std::reverse(w.begin(), w.end());
  return w;
}

inline std::vector<int> mirrored_word(std::vector<int> w, int n) {
  for (int& p : w) p = n - p;
  return w;
}
