#ifndef GPERM_PARTITIONS_HPP
#define GPERM_PARTITIONS_HPP

#include <compare>
#include <string>
#include <vector>

#include "gperm/bijections.hpp"
#include "gperm/perm.hpp"

namespace gperm {

/* Integer partition as weakly decreasing positive parts. */
struct FerrersPartition {
    std::vector<int> parts;

    int sum() const;
    /* Largest d with parts[d-1] >= d. */
    int durfee_size() const;
    std::string str() const;  // "4+3+2"

    bool operator==(const FerrersPartition&) const = default;
    auto operator<=>(const FerrersPartition&) const = default;
};

FerrersPartition make_partition(std::vector<int> parts);  // validates
FerrersPartition parse_partition(const std::string& text);  // "4,3,2" or "4+3+2"

std::vector<FerrersPartition> partitions_of(int m);
std::vector<FerrersPartition> partitions_with_durfee(int m, int d);

/* Odd 2413-avoiders of [n] -> partitions of n+2 with Durfee square exactly 2.
 * Built from the four 1324-inflation block sizes; the two columns under the
 * square and the two rows beside it are adjusted into weakly decreasing order
 * in a way the parities of the result identify uniquely. */
FerrersPartition durfee_map(const Permutation& p);
Permutation durfee_map_inverse(const FerrersPartition& q);

/* Multidigraph on two unlabeled nodes: loop counts plus directed edge counts,
 * stored canonically under the node swap. */
struct Multidigraph2 {
    int left_loops = 0;
    int lr_edges = 0;
    int rl_edges = 0;
    int right_loops = 0;

    int edge_count() const { return left_loops + lr_edges + rl_edges + right_loops; }
    bool operator==(const Multidigraph2&) const = default;
    auto operator<=>(const Multidigraph2&) const = default;
};

std::vector<Multidigraph2> multidigraphs(int edges);
Multidigraph2 class_to_graph(const CompClass& c);
CompClass graph_to_class(const Multidigraph2& g);

}  // namespace gperm

#endif
