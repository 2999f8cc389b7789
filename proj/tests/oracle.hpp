#pragma once

// Brute-force oracles for the tests. Nothing here calls into the library's
// component, enumeration or bound code: characteristics come from a
// boolean reachability matrix, trees from Pruefer codes, partitions from
// plain recursion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using Count = std::int64_t;
using ArcList = std::vector<std::pair<int, int>>;

struct Chars {
  Count v, c, s, cc_max, cc_min, scc_max, scc_min;
};

inline ArcList arcs_of_mask(int n, std::uint64_t mask) {
  ArcList arcs;
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w)
      if ((mask >> (u * n + w)) & 1U) arcs.emplace_back(u, w);
  return arcs;
}

inline bool in_class(int n, const ArcList& arcs) {
  if (n == 0) return false;
  std::set<int> touched;
  for (auto [a, b] : arcs) {
    touched.insert(a);
    touched.insert(b);
  }
  return static_cast<int>(touched.size()) == n;
}

inline Chars characteristics(int n, const ArcList& arcs) {
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<int>> undirected(n);
  for (int i = 0; i < n; ++i) reach[i][i] = true;
  for (auto [a, b] : arcs) {
    reach[a][b] = true;
    undirected[a].push_back(b);
    undirected[b].push_back(a);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;

  Chars ch{n, 0, 0, 0, n + 1, 0, n + 1};
  std::vector<int> comp(n, -1);
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    Count size = 0;
    std::queue<int> q;
    q.push(start);
    comp[start] = static_cast<int>(ch.c);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      ++size;
      for (int y : undirected[x])
        if (comp[y] < 0) {
          comp[y] = comp[x];
          q.push(y);
        }
    }
    ++ch.c;
    ch.cc_max = std::max(ch.cc_max, size);
    ch.cc_min = std::min(ch.cc_min, size);
  }
  std::vector<bool> done(n, false);
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    Count size = 0;
    for (int j = 0; j < n; ++j)
      if (reach[i][j] && reach[j][i]) {
        done[j] = true;
        ++size;
      }
    ++ch.s;
    ch.scc_max = std::max(ch.scc_max, size);
    ch.scc_min = std::min(ch.scc_min, size);
  }
  return ch;
}

// Visits the characteristics of every in-class digraph on n vertices.
inline void for_each_digraph(int n, const std::function<void(std::uint64_t, const Chars&)>& visit) {
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t m = 0; m < total; ++m) {
    const ArcList arcs = arcs_of_mask(n, m);
    if (in_class(n, arcs)) visit(m, characteristics(n, arcs));
  }
}

// Father vectors (fathers of 1..n-1, root 0) of all labeled trees on n
// vertices, decoded from Pruefer sequences and rooted at 0.
inline std::set<std::vector<int>> trees_by_pruefer(int n) {
  std::set<std::vector<int>> out;
  if (n == 1) {
    out.insert(std::vector<int>{});
    return out;
  }
  if (n == 2) {
    out.insert(std::vector<int>{0});
    return out;
  }
  std::vector<int> code(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : code) ++degree[x];
    std::vector<std::vector<int>> adj(n);
    for (int x : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(x);
      adj[x].push_back(leaf);
      --degree[leaf];
      --degree[x];
    }
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 1) (a < 0 ? a : b) = i;
    adj[a].push_back(b);
    adj[b].push_back(a);

    std::vector<int> father(n, -1);
    std::queue<int> q;
    q.push(0);
    father[0] = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (father[y] < 0) {
          father[y] = x;
          q.push(y);
        }
    }
    out.insert(std::vector<int>(father.begin() + 1, father.end()));

    int i = n - 3;
    while (i >= 0 && ++code[i] == n) code[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

struct TreeChars {
  Count n, leaves, d_min, d_max;
};

inline TreeChars tree_characteristics(const std::vector<int>& fathers) {
  const int n = static_cast<int>(fathers.size()) + 1;
  std::vector<Count> kids(n, 0);
  for (int f : fathers) ++kids[f];
  TreeChars t{n, 0, 0, 0};
  Count smallest = n + 1;
  for (Count k : kids) {
    if (k == 0) {
      ++t.leaves;
    } else {
      smallest = std::min(smallest, k);
      t.d_max = std::max(t.d_max, k);
    }
  }
  t.d_min = t.d_max == 0 ? 0 : smallest;
  return t;
}

// Occurrence multisets summing to n, each in non-increasing order.
inline std::vector<std::vector<Count>> partitions(int n) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> cur;
  std::function<void(Count, Count)> rec = [&](Count left, Count cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (Count p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

struct PartitionChars {
  Count n_p, nval, m_min, m_max, m_diff;
};

inline PartitionChars partition_characteristics(const std::vector<Count>& counts) {
  PartitionChars p{0, static_cast<Count>(counts.size()), counts.front(), counts.front(), 0};
  for (Count c : counts) {
    p.n_p += c;
    p.m_min = std::min(p.m_min, c);
    p.m_max = std::max(p.m_max, c);
  }
  p.m_diff = p.m_max - p.m_min;
  return p;
}

}  // namespace oracle
