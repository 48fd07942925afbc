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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphchi/rational.hpp"

namespace graphchi {

/// Enumeration limits. Every enumerator refuses work above its cap.
struct OracleCaps {
  int matching_max = 14;  // half-edges in a matching or partition
  int iso_max_edges = 4;
  int pair_max_rank = 2;  // -chi(G) for pair_sum
  int tree_max_leaves = 7;
  int threads = 1;
};

/// A graph as half-edges {0..h-1}, an involution on them (fixed points are
/// leaves, 2-cycles are edges) and a partition into vertices.
class HalfEdgeGraph {
 public:
  enum class Mode {
    no_leaf,      // fixed-point free involution, every vertex of size >= 3
    tree,         // leaves allowed, every vertex of size >= 3
    rooted_tree,  // as tree, plus exactly one vertex of size 1 (the root)
  };

  HalfEdgeGraph() = default;
  /// Throws UsageError if pairing is not an involution or vertex_of does not
  /// describe a partition into nonempty blocks 0..k-1.
  HalfEdgeGraph(std::vector<int> pairing, std::vector<int> vertex_of);
  static HalfEdgeGraph from_blocks(std::vector<int> pairing,
                                   const std::vector<std::vector<int>>& blocks);

  int half_edges() const { return static_cast<int>(pairing_.size()); }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const;
  int leaf_count() const;
  long euler_characteristic() const { return long{vertex_count_} - edge_count(); }

  int partner(int h) const { return pairing_[static_cast<std::size_t>(h)]; }
  int vertex_of(int h) const { return vertex_of_[static_cast<std::size_t>(h)]; }
  const std::vector<int>& pairing() const { return pairing_; }
  std::vector<std::vector<int>> blocks() const;
  /// Edges as half-edge pairs (a, b) with a < b, ordered by a.
  std::vector<std::pair<int, int>> edges() const;

  /// Throws DomainError if the graph breaks the rules of `mode`.
  void validate(Mode mode) const;
  bool satisfies(Mode mode) const;

  /// "V{0,1,2,3} E(0,1)(2,3)"; leaves print as "L(h)".
  std::string to_string() const;

  friend bool operator==(const HalfEdgeGraph&, const HalfEdgeGraph&) = default;

 private:
  std::vector<int> pairing_;
  std::vector<int> vertex_of_;
  int vertex_count_ = 0;
};

/// One vertex set reachable from every other through edges. The empty graph is
/// not connected.
bool connected(const HalfEdgeGraph& g);

/// True if the edges selected by `edge_mask` (bit i = i-th entry of g.edges())
/// form a forest.
bool is_forest(const HalfEdgeGraph& g, std::uint64_t edge_mask);
/// Masks of all acyclic edge subsets, including the empty one.
std::vector<std::uint64_t> forest_subsets(const HalfEdgeGraph& g);

/// Visits every perfect matching of {0..n-1} once, as a pairing array.
/// n odd -> UsageError; n > cap -> RangeError.
void enumerate_matchings(int n, const std::function<void(std::span<const int>)>& visit,
                         int cap = OracleCaps{}.matching_max);
std::vector<std::vector<int>> all_matchings(int n, int cap = OracleCaps{}.matching_max);

/// Visits every partition of {0..n-1} into blocks of size >= 3 once, as a
/// block-index array (blocks numbered by first element) plus block count.
void enumerate_fat_partitions(int n,
                              const std::function<void(std::span<const int>, int)>& visit,
                              int cap = OracleCaps{}.matching_max);
/// Number of fat partitions of an n-set into k blocks, indexed by k.
std::vector<std::int64_t> fat_partition_counts(int n, int cap = OracleCaps{}.matching_max);

/// Isomorphism class of labeled graphs within one census row.
struct IsoClass {
  std::string canonical;
  std::int64_t orbit_size = 0;
  BigInt aut_order;  // (2m)! / orbit_size
};

struct CensusRow {
  int m = 0;  // edges
  int k = 0;  // vertices
  std::int64_t labeled_count = 0;
  std::int64_t connected_count = 0;
  std::int64_t signed_count = 0;  // (-1)^m labeled_count
  std::optional<std::vector<IsoClass>> iso_classes;

  /// labeled_count / (2m)! = sum over classes of 1/|Aut|.
  Rational weight() const;
};

/// Rows for every k with at least one labeled admissible no-leaf graph on m edges.
std::vector<CensusRow> count_labeled_graphs(int m, const OracleCaps& caps = {});

/// Canonical form under relabeling of half-edges, plus the number of
/// relabelings that reproduce it (= |Aut g|). Relabelings keep each vertex's
/// half-edges contiguous, vertices ordered by decreasing size.
struct CanonicalForm {
  HalfEdgeGraph graph;
  std::vector<int> code;
  BigInt automorphisms;
};
CanonicalForm canonical_form(const HalfEdgeGraph& g);

/// count_labeled_graphs with isomorphism classes filled in. Throws
/// ConsistencyError if orbit sizes and automorphism counts disagree.
std::vector<CensusRow> iso_census(int m, const OracleCaps& caps = {});

/// sum over labeled connected admissible graphs G with -chi(G) = n and all
/// forests F in G of (-1)^{e(F)} / (2e(G))!.
Rational pair_sum(int n, const OracleCaps& caps = {});

/// Signed count of leaf-labeled admissible trees with n leaves, each weighted
/// by (-1)^{internal vertices}. Rooted trees carry one extra univalent root.
/// Built by recursive construction and checked structurally as half-edge graphs.
BigInt tree_census(int n, bool rooted, const OracleCaps& caps = {});
/// Number of distinct leaf-labeled trees tree_census visits (unsigned).
std::int64_t tree_count(int n, bool rooted, const OracleCaps& caps = {});

/// The same signed count by brute force over half-edge structures
/// (involution with n fixed points times vertex partition), converted from
/// half-edge labelings to leaf labelings by n!/h!. Small n only: 5 leaves
/// unrooted, 4 rooted.
Rational tree_census_half_edge(int n, bool rooted);

}  // namespace graphchi
