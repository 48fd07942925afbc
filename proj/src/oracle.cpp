// Copyright 2026 The graphchi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphchi/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "graphchi/errors.hpp"

namespace graphchi {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int a) {
    while (parent_[static_cast<std::size_t>(a)] != a) {
      auto& p = parent_[static_cast<std::size_t>(a)];
      p = parent_[static_cast<std::size_t>(p)];
      a = p;
    }
    return a;
  }
  // false if already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Splits [0, count) into contiguous chunks, runs fn(begin, end) on each and
// adds the results in chunk order, so the total does not depend on threads.
template <class T, class Fn>
T parallel_sum(std::size_t count, int threads, Fn fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) return fn(std::size_t{0}, count);
  const std::size_t chunks = std::min(workers, count);
  std::vector<T> partial(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    pool.emplace_back([&, c, begin, end] { partial[c] = fn(begin, end); });
  }
  for (auto& t : pool) t.join();
  T total{};
  for (auto& p : partial) total += p;
  return total;
}

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw RangeError(std::string(what) + ": size " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(cap) + "; raise the cap (or pass --force) if you mean it");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// HalfEdgeGraph

HalfEdgeGraph::HalfEdgeGraph(std::vector<int> pairing, std::vector<int> vertex_of)
    : pairing_(std::move(pairing)), vertex_of_(std::move(vertex_of)) {
  const int h = static_cast<int>(pairing_.size());
  if (static_cast<int>(vertex_of_.size()) != h) {
    throw UsageError("pairing and vertex assignment differ in length");
  }
  for (int i = 0; i < h; ++i) {
    const int j = pairing_[static_cast<std::size_t>(i)];
    if (j < 0 || j >= h || pairing_[static_cast<std::size_t>(j)] != i) {
      throw UsageError("pairing is not an involution at half-edge " + std::to_string(i));
    }
  }
  int k = 0;
  for (int v : vertex_of_) {
    if (v < 0) throw UsageError("negative vertex index");
    k = std::max(k, v + 1);
  }
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : vertex_of_) seen[static_cast<std::size_t>(v)] = true;
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw UsageError("vertex partition has an empty block");
  }
  vertex_count_ = k;
}

HalfEdgeGraph HalfEdgeGraph::from_blocks(std::vector<int> pairing,
                                         const std::vector<std::vector<int>>& blocks) {
  std::vector<int> vertex_of(pairing.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int h : blocks[b]) {
      if (h < 0 || static_cast<std::size_t>(h) >= pairing.size() ||
          vertex_of[static_cast<std::size_t>(h)] != -1) {
        throw UsageError("blocks are not a partition of the half-edges");
      }
      vertex_of[static_cast<std::size_t>(h)] = static_cast<int>(b);
    }
  }
  if (std::find(vertex_of.begin(), vertex_of.end(), -1) != vertex_of.end()) {
    throw UsageError("blocks do not cover every half-edge");
  }
  return HalfEdgeGraph(std::move(pairing), std::move(vertex_of));
}

int HalfEdgeGraph::edge_count() const { return (half_edges() - leaf_count()) / 2; }

int HalfEdgeGraph::leaf_count() const {
  int leaves = 0;
  for (int i = 0; i < half_edges(); ++i) leaves += partner(i) == i;
  return leaves;
}

std::vector<std::vector<int>> HalfEdgeGraph::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count_));
  for (int i = 0; i < half_edges(); ++i) out[static_cast<std::size_t>(vertex_of(i))].push_back(i);
  return out;
}

std::vector<std::pair<int, int>> HalfEdgeGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < half_edges(); ++i) {
    if (i < partner(i)) out.emplace_back(i, partner(i));
  }
  return out;
}

void HalfEdgeGraph::validate(Mode mode) const {
  int singletons = 0;
  for (const auto& block : blocks()) {
    if (block.size() >= 3) continue;
    if (mode == Mode::rooted_tree && block.size() == 1) {
      ++singletons;
      continue;
    }
    throw DomainError("vertex of valence " + std::to_string(block.size()) + " in " + to_string());
  }
  if (mode == Mode::rooted_tree && singletons != 1) {
    throw DomainError("rooted tree needs exactly one root vertex: " + to_string());
  }
  if (mode == Mode::no_leaf && leaf_count() != 0) {
    throw DomainError("leaf in a no-leaf graph: " + to_string());
  }
}

bool HalfEdgeGraph::satisfies(Mode mode) const {
  try {
    validate(mode);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::string HalfEdgeGraph::to_string() const {
  std::ostringstream os;
  os << "V";
  for (const auto& block : blocks()) {
    os << "{";
    for (std::size_t i = 0; i < block.size(); ++i) os << (i ? "," : "") << block[i];
    os << "}";
  }
  os << " E";
  for (int i = 0; i < half_edges(); ++i) {
    if (partner(i) == i) {
      os << "L(" << i << ")";
    } else if (i < partner(i)) {
      os << "(" << i << "," << partner(i) << ")";
    }
  }
  return os.str();
}

bool connected(const HalfEdgeGraph& g) {
  if (g.vertex_count() == 0) return false;
  UnionFind uf(g.vertex_count());
  int components = g.vertex_count();
  for (const auto& [a, b] : g.edges()) components -= uf.unite(g.vertex_of(a), g.vertex_of(b));
  return components == 1;
}

bool is_forest(const HalfEdgeGraph& g, std::uint64_t edge_mask) {
  UnionFind uf(g.vertex_count());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(edge_mask >> i & 1U)) continue;
    if (!uf.unite(g.vertex_of(edges[i].first), g.vertex_of(edges[i].second))) return false;
  }
  return true;
}

std::vector<std::uint64_t> forest_subsets(const HalfEdgeGraph& g) {
  const auto e = g.edges().size();
  if (e >= 63) throw RangeError("too many edges for subset enumeration");
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    if (is_forest(g, mask)) out.push_back(mask);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matchings and fat partitions

namespace {

void matchings_rec(std::vector<int>& pairing, const std::function<void(std::span<const int>)>& visit) {
  const auto first = std::find(pairing.begin(), pairing.end(), -1);
  if (first == pairing.end()) {
    visit(pairing);
    return;
  }
  const int a = static_cast<int>(first - pairing.begin());
  for (int b = a + 1; b < static_cast<int>(pairing.size()); ++b) {
    if (pairing[static_cast<std::size_t>(b)] != -1) continue;
    pairing[static_cast<std::size_t>(a)] = b;
    pairing[static_cast<std::size_t>(b)] = a;
    matchings_rec(pairing, visit);
    pairing[static_cast<std::size_t>(b)] = -1;
  }
  pairing[static_cast<std::size_t>(a)] = -1;
}

constexpr int kMinBlock = 3;

// Restricted growth strings with every block reaching kMinBlock. `deficit` is
// the number of elements still owed to undersized open blocks.
void fat_rec(int i, int n, std::vector<int>& block_of, std::vector<int>& sizes, int deficit,
             const std::function<void(std::span<const int>, int)>& visit) {
  if (i == n) {
    if (deficit == 0) visit(block_of, static_cast<int>(sizes.size()));
    return;
  }
  const int remaining = n - i;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const int owed = sizes[b] < kMinBlock ? 1 : 0;
    if (deficit - owed > remaining - 1) continue;
    block_of[static_cast<std::size_t>(i)] = static_cast<int>(b);
    ++sizes[b];
    fat_rec(i + 1, n, block_of, sizes, deficit - owed, visit);
    --sizes[b];
  }
  if (deficit + kMinBlock - 1 <= remaining - 1) {
    block_of[static_cast<std::size_t>(i)] = static_cast<int>(sizes.size());
    sizes.push_back(1);
    fat_rec(i + 1, n, block_of, sizes, deficit + kMinBlock - 1, visit);
    sizes.pop_back();
  }
}

}  // namespace

void enumerate_matchings(int n, const std::function<void(std::span<const int>)>& visit, int cap) {
  if (n < 0 || n % 2 != 0) throw UsageError("matchings need an even, nonnegative size");
  require_cap(n, cap, "enumerate_matchings");
  std::vector<int> pairing(static_cast<std::size_t>(n), -1);
  matchings_rec(pairing, visit);
}

std::vector<std::vector<int>> all_matchings(int n, int cap) {
  std::vector<std::vector<int>> out;
  enumerate_matchings(n, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); }, cap);
  return out;
}

void enumerate_fat_partitions(int n, const std::function<void(std::span<const int>, int)>& visit,
                              int cap) {
  if (n < 0) throw UsageError("negative set size");
  require_cap(n, cap, "enumerate_fat_partitions");
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  fat_rec(0, n, block_of, sizes, 0, visit);
}

std::vector<std::int64_t> fat_partition_counts(int n, int cap) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n / kMinBlock) + 1, 0);
  enumerate_fat_partitions(n, [&](std::span<const int>, int k) { ++out[static_cast<std::size_t>(k)]; },
                           cap);
  return out;
}

// ---------------------------------------------------------------------------
// Census

Rational CensusRow::weight() const { return Rational(BigInt(labeled_count), factorial(2 * m)); }

namespace {

struct Tally {
  std::int64_t labeled = 0;
  std::int64_t connected = 0;
  Tally& operator+=(const Tally& o) {
    labeled += o.labeled;
    connected += o.connected;
    return *this;
  }
};

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList matching_edges(std::span<const int> pairing) {
  EdgeList out;
  for (int i = 0; i < static_cast<int>(pairing.size()); ++i) {
    if (i < pairing[static_cast<std::size_t>(i)]) out.emplace_back(i, pairing[static_cast<std::size_t>(i)]);
  }
  return out;
}

bool vertices_connected(const EdgeList& edges, std::span<const int> vertex_of, int k) {
  UnionFind uf(k);
  int components = k;
  for (const auto& [a, b] : edges) {
    components -= uf.unite(vertex_of[static_cast<std::size_t>(a)], vertex_of[static_cast<std::size_t>(b)]);
  }
  return components == 1;
}

struct GraphSpace {
  std::vector<EdgeList> matchings;
  std::vector<std::vector<std::vector<int>>> partitions_by_k;  // [k][i] -> vertex_of
};

GraphSpace build_space(int h, const OracleCaps& caps) {
  GraphSpace space;
  enumerate_matchings(h, [&](std::span<const int> p) { space.matchings.push_back(matching_edges(p)); },
                      caps.matching_max);
  space.partitions_by_k.resize(static_cast<std::size_t>(h / kMinBlock) + 1);
  enumerate_fat_partitions(
      h,
      [&](std::span<const int> block_of, int k) {
        space.partitions_by_k[static_cast<std::size_t>(k)].emplace_back(block_of.begin(), block_of.end());
      },
      caps.matching_max);
  return space;
}

}  // namespace

std::vector<CensusRow> count_labeled_graphs(int m, const OracleCaps& caps) {
  if (m < 0) throw UsageError("negative edge count");
  require_cap(2 * m, caps.matching_max, "count_labeled_graphs");
  std::vector<CensusRow> rows;
  if (m == 0) {
    rows.push_back(CensusRow{0, 0, 1, 0, 1, std::nullopt});
    return rows;
  }
  const auto space = build_space(2 * m, caps);
  for (std::size_t k = 1; k < space.partitions_by_k.size(); ++k) {
    const auto& partitions = space.partitions_by_k[k];
    if (partitions.empty()) continue;
    const Tally t = parallel_sum<Tally>(space.matchings.size(), caps.threads,
                                        [&](std::size_t begin, std::size_t end) {
                                          Tally local;
                                          for (std::size_t i = begin; i < end; ++i) {
                                            for (const auto& vertex_of : partitions) {
                                              ++local.labeled;
                                              local.connected += vertices_connected(
                                                  space.matchings[i], vertex_of, static_cast<int>(k));
                                            }
                                          }
                                          return local;
                                        });
    CensusRow row;
    row.m = m;
    row.k = static_cast<int>(k);
    row.labeled_count = t.labeled;
    row.connected_count = t.connected;
    row.signed_count = m % 2 == 0 ? t.labeled : -t.labeled;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

constexpr int kLeafEntry = -2;
constexpr int kNewEntry = -1;

class Canonicalizer {
 public:
  explicit Canonicalizer(const HalfEdgeGraph& g) : g_(g), blocks_(g.blocks()) {
    const int h = g.half_edges();
    std::vector<std::size_t> order(blocks_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return blocks_[a].size() > blocks_[b].size(); });
    for (std::size_t s = 0; s < order.size(); ++s) {
      for (std::size_t j = 0; j < blocks_[order[s]].size(); ++j) slot_of_position_.push_back(static_cast<int>(s));
      slot_sizes_.push_back(static_cast<int>(blocks_[order[s]].size()));
    }
    position_of_.assign(static_cast<std::size_t>(h), -1);
    at_position_.assign(static_cast<std::size_t>(h), -1);
    block_used_.assign(blocks_.size(), false);
    block_of_slot_.assign(blocks_.size(), -1);
    code_.assign(static_cast<std::size_t>(h), 0);
  }

  CanonicalForm run() {
    search(0);
    const int h = g_.half_edges();
    std::vector<int> pairing(static_cast<std::size_t>(h));
    for (int i = 0; i < h; ++i) {
      const int orig = best_assignment_[static_cast<std::size_t>(i)];
      pairing[static_cast<std::size_t>(i)] = best_position_[static_cast<std::size_t>(g_.partner(orig))];
    }
    CanonicalForm out{HalfEdgeGraph(std::move(pairing), slot_of_position_), {}, BigInt(count_)};
    out.code.push_back(static_cast<int>(slot_sizes_.size()));
    out.code.insert(out.code.end(), slot_sizes_.begin(), slot_sizes_.end());
    out.code.insert(out.code.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  int entry(int orig) const {
    const int p = g_.partner(orig);
    if (p == orig) return kLeafEntry;
    const int pos = position_of_[static_cast<std::size_t>(p)];
    return pos >= 0 ? pos : kNewEntry;
  }

  // -1, 0, 1 comparing code_[0..depth] to best_[0..depth]
  int compare_prefix(std::size_t depth) const {
    if (best_.empty()) return -1;
    for (std::size_t i = 0; i <= depth; ++i) {
      if (code_[i] != best_[i]) return code_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void place(int i, int orig) {
    at_position_[static_cast<std::size_t>(i)] = orig;
    position_of_[static_cast<std::size_t>(orig)] = i;
    code_[static_cast<std::size_t>(i)] = entry(orig);
  }
  void unplace(int i, int orig) {
    at_position_[static_cast<std::size_t>(i)] = -1;
    position_of_[static_cast<std::size_t>(orig)] = -1;
  }

  void search(int i) {
    const int h = g_.half_edges();
    if (i == h) {
      const int c = compare_prefix(static_cast<std::size_t>(h) - 1);
      if (c < 0) {
        best_ = code_;
        best_assignment_ = at_position_;
        best_position_ = position_of_;
        count_ = 1;
      } else if (c == 0) {
        ++count_;
      }
      return;
    }
    const int slot = slot_of_position_[static_cast<std::size_t>(i)];
    const bool opens_slot = i == 0 || slot_of_position_[static_cast<std::size_t>(i) - 1] != slot;

    // candidates: (original half-edge, block index if this opens the slot)
    std::vector<std::pair<int, int>> candidates;
    if (opens_slot) {
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (block_used_[b] || static_cast<int>(blocks_[b].size()) != slot_sizes_[static_cast<std::size_t>(slot)]) continue;
        for (int orig : blocks_[b]) candidates.emplace_back(orig, static_cast<int>(b));
      }
    } else {
      for (int orig : blocks_[static_cast<std::size_t>(block_of_slot_[static_cast<std::size_t>(slot)])]) {
        if (position_of_[static_cast<std::size_t>(orig)] < 0) candidates.emplace_back(orig, -1);
      }
    }
    int lowest = std::numeric_limits<int>::max();
    for (const auto& [orig, b] : candidates) lowest = std::min(lowest, entry(orig));

    for (const auto& [orig, b] : candidates) {
      if (entry(orig) != lowest) continue;
      place(i, orig);
      if (compare_prefix(static_cast<std::size_t>(i)) <= 0 || best_.empty()) {
        if (opens_slot) {
          block_used_[static_cast<std::size_t>(b)] = true;
          block_of_slot_[static_cast<std::size_t>(slot)] = b;
        }
        search(i + 1);
        if (opens_slot) block_used_[static_cast<std::size_t>(b)] = false;
      }
      unplace(i, orig);
    }
  }

  const HalfEdgeGraph& g_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> slot_of_position_;
  std::vector<int> slot_sizes_;
  std::vector<int> position_of_;
  std::vector<int> at_position_;
  std::vector<bool> block_used_;
  std::vector<int> block_of_slot_;
  std::vector<int> code_;
  std::vector<int> best_;
  std::vector<int> best_assignment_;
  std::vector<int> best_position_;
  long count_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const HalfEdgeGraph& g) {
  if (g.half_edges() == 0) return CanonicalForm{g, {0}, BigInt(1)};
  return Canonicalizer(g).run();
}

std::vector<CensusRow> iso_census(int m, const OracleCaps& caps) {
  if (m > caps.iso_max_edges) {
    throw RangeError("iso_census: " + std::to_string(m) + " edges exceeds the cap of " +
                     std::to_string(caps.iso_max_edges));
  }
  auto rows = count_labeled_graphs(m, caps);
  if (m == 0) {
    rows[0].iso_classes = std::vector<IsoClass>{IsoClass{"V E", 1, BigInt(1)}};
    return rows;
  }
  const auto space = build_space(2 * m, caps);
  const BigInt labelings = factorial(static_cast<unsigned>(2 * m));
  for (auto& row : rows) {
    struct ClassInfo {
      std::string text;
      std::int64_t orbit = 0;
      BigInt aut;
    };
    std::map<std::vector<int>, ClassInfo> classes;
    for (const auto& edges : space.matchings) {
      std::vector<int> pairing(static_cast<std::size_t>(2 * m));
      for (const auto& [a, b] : edges) {
        pairing[static_cast<std::size_t>(a)] = b;
        pairing[static_cast<std::size_t>(b)] = a;
      }
      for (const auto& vertex_of : space.partitions_by_k[static_cast<std::size_t>(row.k)]) {
        const auto form = canonical_form(HalfEdgeGraph(pairing, vertex_of));
        auto [it, fresh] = classes.try_emplace(form.code);
        if (fresh) {
          it->second.text = form.graph.to_string();
          it->second.aut = form.automorphisms;
        } else if (it->second.aut != form.automorphisms) {
          throw ConsistencyError("automorphism count differs within one class");
        }
        ++it->second.orbit;
      }
    }
    std::vector<IsoClass> out;
    std::int64_t orbit_total = 0;
    for (const auto& [code, info] : classes) {
      if (BigInt(info.orbit) * info.aut != labelings) {
        throw ConsistencyError("orbit-stabilizer fails for " + info.text + ": orbit " +
                               std::to_string(info.orbit) + ", |Aut| " + info.aut.get_str());
      }
      orbit_total += info.orbit;
      out.push_back(IsoClass{info.text, info.orbit, info.aut});
    }
    if (orbit_total != row.labeled_count) {
      throw ConsistencyError("orbits do not cover the labeled census");
    }
    row.iso_classes = std::move(out);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Graphs with a marked forest

namespace {

// Multigraph on at most 15 vertices with at most 16 edges, one byte per edge
// (lo << 4 | hi), sorted, packed into 128 bits.
using MultigraphKey = unsigned __int128;

struct KeyHash {
  std::size_t operator()(MultigraphKey k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo * 0x9E3779B97F4A7C15ULL ^ hi);
  }
};

// 0 for disconnected graphs, else sum over forests F of (-1)^{|F|}.
std::int64_t signed_forest_sum(const std::vector<std::pair<int, int>>& edges, int k) {
  {
    UnionFind uf(k);
    int components = k;
    for (const auto& [a, b] : edges) components -= uf.unite(a, b);
    if (components != 1) return 0;
  }
  std::int64_t total = 0;
  const std::size_t e = edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    UnionFind uf(k);
    bool acyclic = true;
    for (std::size_t i = 0; i < e && acyclic; ++i) {
      if (mask >> i & 1U) acyclic = uf.unite(edges[i].first, edges[i].second);
    }
    if (acyclic) total += std::popcount(mask) % 2 == 0 ? 1 : -1;
  }
  return total;
}

std::int64_t pair_tally(const GraphSpace& space, const std::vector<std::vector<int>>& partitions,
                        int k, int threads) {
  return parallel_sum<std::int64_t>(
      partitions.size(), threads, [&](std::size_t begin, std::size_t end) {
        std::unordered_map<MultigraphKey, std::int64_t, KeyHash> memo;
        std::int64_t local = 0;
        std::array<std::uint8_t, 16> bytes{};
        for (std::size_t p = begin; p < end; ++p) {
          const auto& vertex_of = partitions[p];
          for (const auto& edges : space.matchings) {
            const std::size_t e = edges.size();
            for (std::size_t i = 0; i < e; ++i) {
              int a = vertex_of[static_cast<std::size_t>(edges[i].first)];
              int b = vertex_of[static_cast<std::size_t>(edges[i].second)];
              if (a > b) std::swap(a, b);
              bytes[i] = static_cast<std::uint8_t>(a << 4 | b);
            }
            std::sort(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(e));
            MultigraphKey key = 0;
            for (std::size_t i = 0; i < e; ++i) key = key << 8 | bytes[i];
            auto it = memo.find(key);
            if (it == memo.end()) {
              std::vector<std::pair<int, int>> vertex_edges;
              for (std::size_t i = 0; i < e; ++i) vertex_edges.emplace_back(bytes[i] >> 4, bytes[i] & 15);
              it = memo.emplace(key, signed_forest_sum(vertex_edges, k)).first;
            }
            local += it->second;
          }
        }
        return local;
      });
}

}  // namespace

Rational pair_sum(int n, const OracleCaps& caps) {
  if (n < 1) throw UsageError("pair_sum requires n >= 1");
  if (n > caps.pair_max_rank) {
    throw RangeError("pair_sum: rank " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(caps.pair_max_rank));
  }
  Rational total;
  // m - k = n with every vertex of valence >= 3 forces m <= 3n.
  for (int m = n + 1; m <= 3 * n; ++m) {
    const int k = m - n;
    if (3 * k > 2 * m) continue;
    if (m > 16 || k > 15) throw RangeError("pair_sum: graph too large for the multigraph key");
    const auto space = build_space(2 * m, caps);
    const auto& partitions = space.partitions_by_k[static_cast<std::size_t>(k)];
    const std::int64_t tally = pair_tally(space, partitions, k, caps.threads);
    total += Rational(BigInt(tally), factorial(static_cast<unsigned>(2 * m)));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Trees

namespace {

// A planted tree: a leaf, or an internal vertex with >= 2 planted subtrees.
struct PlantedNode {
  int leaf = -1;
  std::vector<std::shared_ptr<const PlantedNode>> children;
};
using PlantedPtr = std::shared_ptr<const PlantedNode>;

class PlantedForestBuilder {
 public:
  const std::vector<PlantedPtr>& trees(unsigned mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::vector<PlantedPtr> out;
    if (std::popcount(mask) == 1) {
      auto leaf = std::make_shared<PlantedNode>();
      leaf->leaf = std::countr_zero(mask);
      out.push_back(leaf);
    } else {
      for (const auto& parts : set_partitions(mask)) {
        if (parts.size() < 2) continue;
        std::vector<PlantedPtr> chosen;
        product(parts, 0, chosen, out);
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  static std::vector<std::vector<unsigned>> set_partitions(unsigned mask) {
    std::vector<std::vector<unsigned>> out;
    if (mask == 0) {
      out.emplace_back();
      return out;
    }
    const unsigned low = mask & (~mask + 1);
    const unsigned rest = mask ^ low;
    // block containing the lowest element: low plus any submask of rest
    for (unsigned sub = rest;; sub = (sub - 1) & rest) {
      for (auto tail : set_partitions(rest ^ sub)) {
        tail.insert(tail.begin(), low | sub);
        out.push_back(std::move(tail));
      }
      if (sub == 0) break;
    }
    return out;
  }

  void product(const std::vector<unsigned>& parts, std::size_t i, std::vector<PlantedPtr>& chosen,
               std::vector<PlantedPtr>& out) {
    if (i == parts.size()) {
      auto node = std::make_shared<PlantedNode>();
      node->children = chosen;
      out.push_back(node);
      return;
    }
    const auto options = trees(parts[i]);  // copy: memo may rehash
    for (const auto& t : options) {
      chosen.push_back(t);
      product(parts, i + 1, chosen, out);
      chosen.pop_back();
    }
  }

  std::map<unsigned, std::vector<PlantedPtr>> memo_;
};

class TreeAssembler {
 public:
  void attach_children(const PlantedNode& node, int vertex) {
    for (const auto& child : node.children) {
      const int down = new_half_edge(vertex);
      if (child->leaf >= 0) {
        pairing_[static_cast<std::size_t>(down)] = down;
        continue;
      }
      const int child_vertex = next_vertex_++;
      const int up = new_half_edge(child_vertex);
      pairing_[static_cast<std::size_t>(down)] = up;
      pairing_[static_cast<std::size_t>(up)] = down;
      attach_children(*child, child_vertex);
    }
  }

  HalfEdgeGraph rooted(const PlantedNode& top) {
    const int root = next_vertex_++;
    const int r = new_half_edge(root);
    if (top.leaf >= 0) {
      pairing_[static_cast<std::size_t>(r)] = r;
    } else {
      const int top_vertex = next_vertex_++;
      const int up = new_half_edge(top_vertex);
      pairing_[static_cast<std::size_t>(r)] = up;
      pairing_[static_cast<std::size_t>(up)] = r;
      attach_children(top, top_vertex);
    }
    return HalfEdgeGraph(pairing_, vertex_of_);
  }

  // The planted tree's top vertex also carries the extra leaf.
  HalfEdgeGraph unrooted(const PlantedNode& top) {
    const int top_vertex = next_vertex_++;
    const int extra = new_half_edge(top_vertex);
    pairing_[static_cast<std::size_t>(extra)] = extra;
    attach_children(top, top_vertex);
    return HalfEdgeGraph(pairing_, vertex_of_);
  }

 private:
  int new_half_edge(int vertex) {
    pairing_.push_back(-1);
    vertex_of_.push_back(vertex);
    return static_cast<int>(pairing_.size()) - 1;
  }

  std::vector<int> pairing_;
  std::vector<int> vertex_of_;
  int next_vertex_ = 0;
};

struct TreeTotals {
  BigInt signed_count;
  std::int64_t count = 0;
};

TreeTotals walk_trees(int n, bool rooted, const OracleCaps& caps) {
  if (n > caps.tree_max_leaves) {
    throw RangeError("tree_census: " + std::to_string(n) + " leaves exceeds the cap of " +
                     std::to_string(caps.tree_max_leaves));
  }
  if (rooted ? n < 1 : n < 3) throw UsageError("tree_census: too few leaves");
  PlantedForestBuilder builder;
  const int planted_leaves = rooted ? n : n - 1;
  const unsigned mask = (1U << planted_leaves) - 1;
  const auto mode = rooted ? HalfEdgeGraph::Mode::rooted_tree : HalfEdgeGraph::Mode::tree;
  TreeTotals totals;
  for (const auto& top : builder.trees(mask)) {
    TreeAssembler assembler;
    const auto g = rooted ? assembler.rooted(*top) : assembler.unrooted(*top);
    g.validate(mode);
    const std::uint64_t all_edges = g.edges().size() >= 64 ? ~0ULL : (1ULL << g.edges().size()) - 1;
    if (!connected(g) || !is_forest(g, all_edges) || g.leaf_count() != n) {
      throw ConsistencyError("assembled tree is malformed: " + g.to_string());
    }
    const int internal = rooted ? g.vertex_count() - 1 : g.vertex_count();
    totals.signed_count += internal % 2 == 0 ? 1 : -1;
    ++totals.count;
  }
  return totals;
}

}  // namespace

BigInt tree_census(int n, bool rooted, const OracleCaps& caps) {
  return walk_trees(n, rooted, caps).signed_count;
}

std::int64_t tree_count(int n, bool rooted, const OracleCaps& caps) {
  return walk_trees(n, rooted, caps).count;
}

Rational tree_census_half_edge(int n, bool rooted) {
  const int cap = rooted ? 4 : 5;
  if (n > cap) {
    throw RangeError("tree_census_half_edge: brute force is limited to " + std::to_string(cap) +
                     " leaves");
  }
  if (rooted ? n < 1 : n < 3) throw UsageError("tree_census_half_edge: too few leaves");
  if (rooted && n == 1) return Rational(1);  // root plus one leaf, a single half-edge

  // Unrooted trees have at most n-3 internal edges; a rooted tree adds the
  // root edge and its univalent vertex.
  const int internal_edges_max = rooted ? n - 2 : n - 3;
  const auto mode = rooted ? HalfEdgeGraph::Mode::rooted_tree : HalfEdgeGraph::Mode::tree;
  Rational total;
  for (int edges = 0; edges <= internal_edges_max + (rooted ? 1 : 0); ++edges) {
    const int h = n + 2 * edges;
    if (h > 16) break;
    std::int64_t signed_labeled = 0;
    // involutions with exactly n fixed points: choose the fixed set, match the rest
    for (unsigned fixed = 0; fixed < (1U << h); ++fixed) {
      if (std::popcount(fixed) != n) continue;
      std::vector<int> movable;
      for (int i = 0; i < h; ++i) {
        if (!(fixed >> i & 1U)) movable.push_back(i);
      }
      for (const auto& inner : all_matchings(static_cast<int>(movable.size()), 16)) {
        std::vector<int> pairing(static_cast<std::size_t>(h));
        for (int i = 0; i < h; ++i) {
          if (fixed >> i & 1U) pairing[static_cast<std::size_t>(i)] = i;
        }
        for (std::size_t i = 0; i < movable.size(); ++i) {
          pairing[static_cast<std::size_t>(movable[i])] = movable[static_cast<std::size_t>(inner[i])];
        }
        auto count_partition = [&](const std::vector<int>& vertex_of) {
          const HalfEdgeGraph g(pairing, vertex_of);
          if (!g.satisfies(mode) || !connected(g)) return;
          const std::uint64_t all = (1ULL << g.edges().size()) - 1;
          if (!is_forest(g, all)) return;
          const int internal = rooted ? g.vertex_count() - 1 : g.vertex_count();
          signed_labeled += internal % 2 == 0 ? 1 : -1;
        };
        if (!rooted) {
          enumerate_fat_partitions(h, [&](std::span<const int> block_of, int) {
            count_partition(std::vector<int>(block_of.begin(), block_of.end()));
          }, 16);
          continue;
        }
        // root: a singleton block on a non-leaf half-edge; fat partition of the rest
        for (int root = 0; root < h; ++root) {
          if (pairing[static_cast<std::size_t>(root)] == root) continue;
          enumerate_fat_partitions(h - 1, [&](std::span<const int> block_of, int k) {
            std::vector<int> vertex_of(static_cast<std::size_t>(h));
            for (int i = 0, j = 0; i < h; ++i) {
              vertex_of[static_cast<std::size_t>(i)] =
                  i == root ? k : block_of[static_cast<std::size_t>(j++)];
            }
            count_partition(vertex_of);
          }, 16);
        }
      }
    }
    total += Rational(BigInt(signed_labeled) * factorial(static_cast<unsigned>(n)),
                      factorial(static_cast<unsigned>(h)));
  }
  return total;
}

}  // namespace graphchi
