#include "gperm/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gperm {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

const Permutation& pat2413() {
    static const Permutation p = Permutation({2, 4, 1, 3});
    return p;
}

const Permutation& pat1324() {
    static const Permutation p = Permutation({1, 3, 2, 4});
    return p;
}

}  // namespace

int FerrersPartition::sum() const {
    int s = 0;
    for (int part : parts) s += part;
    return s;
}

int FerrersPartition::durfee_size() const {
    int d = 0;
    while (d < static_cast<int>(parts.size()) && parts[static_cast<size_t>(d)] >= d + 1) ++d;
    return d;
}

std::string FerrersPartition::str() const {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

FerrersPartition make_partition(std::vector<int> parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return FerrersPartition{std::move(parts)};
}

FerrersPartition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, text.find('+') != std::string::npos ? '+' : ',')) {
        size_t used = 0;
        parts.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument("bad partition part: " + token);
    }
    return make_partition(std::move(parts));
}

std::vector<FerrersPartition> partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("negative partition size");
    std::vector<FerrersPartition> out;
    std::vector<int> current;
    std::function<void(int, int)> grow = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(FerrersPartition{current});
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            current.push_back(part);
            grow(rest - part, part);
            current.pop_back();
        }
    };
    grow(m, m);
    return out;
}

std::vector<FerrersPartition> partitions_with_durfee(int m, int d) {
    std::vector<FerrersPartition> out;
    for (FerrersPartition& q : partitions_of(m))
        if (q.durfee_size() == d) out.push_back(std::move(q));
    return out;
}

namespace {

/* Appendage lengths for one side of the square: a circles against b-1 with b
 * odd, rearranged into a weakly decreasing pair whose parities identify the
 * rearrangement. */
std::pair<int, int> square_adjust(int a, int b) {
    if (a % 2 == 1) return a > b - 1 ? std::pair{a, b - 1} : std::pair{b - 1, a};
    if (a > b - 1) return {a - 1, b};
    return {b - 1, a};
}

/* Decode (first length, second length) back to the pair (a, b). */
std::pair<int, int> square_decode(int c1, int c2) {
    const bool odd1 = c1 % 2 == 1, odd2 = c2 % 2 == 1;
    if (odd1 && !odd2) return {c1, c2 + 1};
    if (odd1 && odd2) return {c1 + 1, c2};
    return {c2, c1 + 1};
}

}  // namespace

FerrersPartition durfee_map(const Permutation& p) {
    const int n = p.size();
    require(n >= 2, "durfee map needs size >= 2");
    require(parity_of(p) == Parity::Odd, "durfee map needs an odd permutation");
    require(!contains_pattern(p, pat2413()), "durfee map needs a 2413-avoider");
    const auto dec = decompose_inflation(p, Skeleton::S1324);
    require(dec.has_value(), "input does not fit the block shape");
    const int k1 = dec->block_sizes[0], k2 = dec->block_sizes[1];
    const int k3 = dec->block_sizes[2], k4 = dec->block_sizes[3];
    require(k2 % 2 == 1 && k3 % 2 == 1, "inner block sizes must be odd");
    const auto [c1, c2] = square_adjust(k1, k2);
    const auto [r1, r2] = square_adjust(k4, k3);
    std::vector<int> parts = {2 + r1, 2 + r2};
    for (int i = 0; i < c1; ++i) parts.push_back(i < c2 ? 2 : 1);
    return FerrersPartition{std::move(parts)};
}

Permutation durfee_map_inverse(const FerrersPartition& q) {
    require(q.durfee_size() == 2, "partition must have Durfee square exactly 2");
    const int c1 = static_cast<int>(q.parts.size()) - 2;
    int c2 = 0;
    for (size_t i = 2; i < q.parts.size(); ++i)
        if (q.parts[i] >= 2) ++c2;
    const int r1 = q.parts[0] - 2, r2 = q.parts[1] - 2;
    const auto [k1, k2] = square_decode(c1, c2);
    const auto [k4, k3] = square_decode(r1, r2);
    require(k2 % 2 == 1 && k3 % 2 == 1 && k1 >= 0 && k4 >= 0,
            "partition does not decode to valid block sizes");
    Permutation out = inflate_identity_blocks(pat1324(), {k1, k2, k3, k4});
    require(out.size() == q.sum() - 2, "decoded sizes do not match the partition");
    require(durfee_map(out) == q, "inverse failed to re-create the partition");
    return out;
}

std::vector<Multidigraph2> multidigraphs(int edges) {
    std::vector<Multidigraph2> out;
    for (const CompClass& c : composition_classes(edges)) out.push_back(class_to_graph(c));
    return out;
}

Multidigraph2 class_to_graph(const CompClass& c) {
    return {c.rep[0], c.rep[1], c.rep[2], c.rep[3]};
}

CompClass graph_to_class(const Multidigraph2& g) {
    return class_canonical(WeakComp4{{g.left_loops, g.lr_edges, g.rl_edges, g.right_loops}});
}

}  // namespace gperm
