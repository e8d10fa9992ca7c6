#ifndef GPERM_FORMULAS_HPP
#define GPERM_FORMULAS_HPP

#include <vector>

#include "gperm/perm.hpp"

namespace gperm {

long long binomial(long long n, long long k);

/* Number of Grassmannian permutations of [n] avoiding a one-descent pattern
 * sigma of size k >= 3, both parities together: 1 + sum_{j=3..k} C(n, j-1). */
long long grassmannian_avoider_total(const Permutation& sigma, int n);

struct ParityTotals {
    long long even = 0;
    long long odd = 0;
};

/* |G_n| split by inversion parity: even = 2^{n-1} + 2^{floor((n-1)/2)} - n,
 * odd = 2^{n-1} - 2^{floor((n-1)/2)}. */
ParityTotals grassmannian_parity_totals(int n);

/* Closed forms / recurrences for odd Grassmannian avoiders, one family
 * representative per restricted Wilf class.  All require n >= 1. */
long long count_odd_132(int n);          // also 213; C(floor(n/2)+1, 2)
long long count_odd_312(int n);          // also 231
long long count_odd_1243_family(int n);  // 1243, 2134, 2341, 4123
long long count_odd_3412_family(int n);  // 1423, 2314, 3412
long long count_odd_2413(int n);
long long count_odd_1324(int n);
long long count_odd_1342_family(int n);  // 1342, 3124

/* Dispatch by pattern; throws std::invalid_argument for patterns without a
 * closed form (sizes other than 3-4, or no descent). */
long long count_odd(const Permutation& sigma, int n);
long long count_even(const Permutation& sigma, int n);

struct WilfClassification {
    int pattern_size = 0;
    int n_max = 0;
    Parity parity = Parity::Odd;
    /* one-descent patterns grouped by identical count vectors over n = 1..n_max;
     * classes ordered by their lexicographically least member */
    std::vector<std::vector<Permutation>> classes;
    std::vector<std::vector<long long>> class_counts;  // parallel to classes
};

/* Count-vector equality up to n_max is evidence of equivalence, not proof. */
WilfClassification wilf_classes(int pattern_size, int n_max, Parity parity);

}  // namespace gperm

#endif
