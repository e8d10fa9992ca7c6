#ifndef GPERM_PERM_HPP
#define GPERM_PERM_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gperm {

enum class Parity { Even, Odd };

inline Parity opposite(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
const char* to_string(Parity p);

/* A permutation of [n] = {1,...,n} in one-line notation. Positions are
 * 0-based, values are 1-based. The empty permutation (n = 0) is valid. */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values);  // throws std::invalid_argument
    static Permutation identity(int n);

    /* "35124" for n <= 9, "3,5,1,2,4" otherwise (or with any commas). */
    static Permutation parse(std::string_view text);
    std::string str() const;

    int size() const { return static_cast<int>(vals_.size()); }
    bool empty() const { return vals_.empty(); }
    int at(int pos) const { return vals_[static_cast<size_t>(pos)]; }
    const std::vector<int>& values() const { return vals_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> vals_;
};

long long inversion_count(const Permutation& p);
Parity parity_of(const Permutation& p);
bool is_identity(const Permutation& p);

/* 0-based indices i with p[i] > p[i+1]. */
std::vector<int> descent_positions(const Permutation& p);

/* Run/descent structure of a permutation with at most one descent. */
struct GrassmannianProfile {
    int descent_count = 0;      // 0 or 1
    int descent_position = -1;  // 0-based index of the descent, -1 if none
    std::vector<int> run1;      // first maximal increasing run (values)
    std::vector<int> run2;      // rest; empty when descent_count == 0
    int descent_top = 0;        // last value of run1 when a descent exists
    int descent_bottom = 0;     // first value of run2 when a descent exists
};

/* nullopt when p has two or more descents. */
std::optional<GrassmannianProfile> grassmannian_profile(const Permutation& p);
bool is_grassmannian(const Permutation& p);

/* p^rc with (p^rc)_i = n+1 - p_{n+1-i}; an involution. */
Permutation reverse_complement(const Permutation& p);

/* True iff some subsequence of p is order-isomorphic to sigma. */
bool contains_pattern(const Permutation& p, const Permutation& sigma);

/* p followed by q with q's values shifted up by |p|. */
Permutation direct_sum(const Permutation& p, const Permutation& q);

/* Replace entry i of the skeleton by blocks[i], value ranges ordered by the
 * skeleton's ranks. Empty blocks are allowed. */
Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks);
Permutation inflate_identity_blocks(const Permutation& skeleton, const std::vector<int>& sizes);

/* The inflation shapes used by the bijections.  The two Lambda shapes are the
 * block decompositions of non-identity 3412- and 1423-avoiders into
 * (tau1, tau2, tau3, tau4) around the descent pair. */
enum class Skeleton {
    S1324,       // 1324[k1,k2,k3,k4], k2,k3 >= 1
    S2413,       // 2413[k1,k2,k3,k4], k1,k3,k4 >= 1
    S13524,      // 13524[k1,k2,k3,k4,1], k1,k2,k4 >= 1
    S135246,     // 135246[k1,1,1,k2,k3,k4], k1,k2,k3 >= 1
    S24135,      // 24135[k1,k2,k3,1,k4], k1,k2 >= 1
    Lambda3412,  // tau1 tau2 k l tau3 tau4
    Lambda1423,  // tau1 tau2 k tau3 l tau4
};

struct InflationDecomposition {
    Skeleton skeleton;
    std::vector<int> block_sizes;  // the four free block sizes
};

/* Sizes such that reinflating the skeleton with identity blocks (and the
 * skeleton's pinned singleton blocks) reproduces p; nullopt when p does not
 * fit the shape. */
std::optional<InflationDecomposition> decompose_inflation(const Permutation& p, Skeleton s);

/* Generic engine: block i is pinned to size pinned[i] when pinned[i] >= 0 and
 * must otherwise have size >= min_size[i].  Returns the full size tuple. */
std::optional<std::vector<int>> decompose_identity_blocks(const Permutation& p,
                                                          const Permutation& skeleton,
                                                          const std::vector<int>& pinned,
                                                          const std::vector<int>& min_size);

/* All permutations of [n] with at most one descent, lexicographic.
 * Generated by choosing the first-run value set, O(2^n) instead of O(n!). */
std::vector<Permutation> enumerate_grassmannian(int n);

std::vector<Permutation> enumerate_avoiders(int n, const Permutation& sigma,
                                            std::optional<Parity> parity,
                                            bool exclude_identity);

/* Permutations of [k] with exactly one descent, lexicographic. */
std::vector<Permutation> one_descent_patterns(int k);

}  // namespace gperm

#endif
