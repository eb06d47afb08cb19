#include "hicomm/congruence.hpp"

#include <numeric>

#include "hicomm/errors.hpp"

namespace hicomm {

namespace {

// Plain union-find over 0..n-1.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

Partition to_partition(UnionFind& uf) {
  std::vector<int> ids(uf.parent.size());
  for (std::size_t x = 0; x < ids.size(); ++x) ids[x] = uf.find(static_cast<int>(x));
  return Partition::from_block_ids(ids);
}

// Enumerates all tuples in {0..N-1}^k in row-major order, calling fn(tuple).
template <typename Fn>
void for_each_tuple(int N, int k, Fn&& fn) {
  std::vector<std::uint8_t> tup(k, 0);
  while (true) {
    fn(tup);
    int d = k - 1;
    for (; d >= 0; --d) {
      if (++tup[d] < N) break;
      tup[d] = 0;
    }
    if (d < 0) break;
  }
}

}  // namespace

bool is_congruence(const FiniteAlgebra& A, const Partition& p) {
  if (p.size() != A.size()) throw ValidationError("partition size does not match algebra");
  const int N = A.size();
  // Single-coordinate substitution suffices: componentwise-related tuples are
  // connected by a chain of such substitutions, and p is transitive.
  for (const FiniteOp& f : A.ops()) {
    if (f.arity == 0) continue;
    bool ok = true;
    for_each_tuple(N, f.arity, [&](std::vector<std::uint8_t>& tup) {
      if (!ok) return;
      std::uint8_t base = A.apply(f, tup);
      for (int d = 0; d < f.arity && ok; ++d) {
        std::uint8_t orig = tup[d];
        for (int b = 0; b < N; ++b) {
          if (b == orig || !p.same(orig, b)) continue;
          tup[d] = static_cast<std::uint8_t>(b);
          if (!p.same(base, A.apply(f, tup))) {
            ok = false;
            break;
          }
        }
        tup[d] = orig;
      }
    });
    if (!ok) return false;
  }
  return true;
}

Partition cg(const FiniteAlgebra& A, const std::vector<std::pair<int, int>>& pairs) {
  const int N = A.size();
  UnionFind uf(N);
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= N || b < 0 || b >= N) throw ValidationError("cg pair out of range");
    uf.unite(a, b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const FiniteOp& f : A.ops()) {
      if (f.arity == 0) continue;
      for_each_tuple(N, f.arity, [&](std::vector<std::uint8_t>& tup) {
        std::uint8_t base = A.apply(f, tup);
        for (int d = 0; d < f.arity; ++d) {
          std::uint8_t orig = tup[d];
          for (int b = 0; b < N; ++b) {
            if (b == orig || uf.find(orig) != uf.find(b)) continue;
            tup[d] = static_cast<std::uint8_t>(b);
            if (uf.unite(base, A.apply(f, tup))) changed = true;
          }
          tup[d] = orig;
        }
      });
    }
  }
  return to_partition(uf);
}

std::vector<Partition> all_congruences(const FiniteAlgebra& A, int size_cap) {
  if (A.size() > size_cap) {
    throw ResourceCapError("congruence enumeration capped at carrier size " +
                           std::to_string(size_cap) + ", algebra has " +
                           std::to_string(A.size()));
  }
  std::vector<Partition> out;
  for (const Partition& p : all_partitions(A.size())) {
    if (is_congruence(A, p)) out.push_back(p);
  }
  return out;
}

Partition join_in_con(const FiniteAlgebra& A, const Partition& p, const Partition& q) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& block : p.blocks()) {
    for (std::size_t k = 1; k < block.size(); ++k) pairs.emplace_back(block[0], block[k]);
  }
  for (const auto& block : q.blocks()) {
    for (std::size_t k = 1; k < block.size(); ++k) pairs.emplace_back(block[0], block[k]);
  }
  return cg(A, pairs);
}

}  // namespace hicomm
