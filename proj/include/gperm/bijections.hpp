#ifndef GPERM_BIJECTIONS_HPP
#define GPERM_BIJECTIONS_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gperm/perm.hpp"

namespace gperm {

/* Weak composition with four parts. */
struct WeakComp4 {
    std::array<int, 4> t{0, 0, 0, 0};

    int sum() const { return t[0] + t[1] + t[2] + t[3]; }
    int operator[](int i) const { return t[static_cast<size_t>(i)]; }
    std::string str() const;

    bool operator==(const WeakComp4&) const = default;
    auto operator<=>(const WeakComp4&) const = default;
};

WeakComp4 reversed(const WeakComp4& u);
bool is_symmetric(const WeakComp4& u);

/* u is minimal when u1 < u4, or u1 = u4 and u2 < u3. */
bool is_minimal(const WeakComp4& u);

/* Equivalence class of a tuple under reversal, stored by the canonical
 * representative (the minimal of {u, u'}; symmetric tuples represent
 * themselves). */
struct CompClass {
    WeakComp4 rep;
    bool symmetric = false;

    std::string str() const;
    bool operator==(const CompClass&) const = default;
    auto operator<=>(const CompClass&) const = default;
};

CompClass class_canonical(const WeakComp4& u);

/* All reversal classes of four-part weak compositions of m, ordered
 * lexicographically by canonical representative. */
std::vector<CompClass> composition_classes(int m);

/* Three-case tuple map used for the 3412 family; undefined exactly on
 * (0, t2, t3, 0) with t3 even. */
std::optional<WeakComp4> phi_step(const WeakComp4& t);
std::optional<WeakComp4> phi_step_inverse(const WeakComp4& u);

/* Two-case tuple map used for the 1423 family; undefined when t1 = t4 = 0.
 * The inverse is undefined when u2 = 0 and u3 = 0. */
std::optional<WeakComp4> psi_step(const WeakComp4& t);
std::optional<WeakComp4> psi_step_inverse(const WeakComp4& u);

/* Block-size tuples (|tau1|,|tau2|,|tau3|,|tau4|) of non-identity
 * Grassmannian avoiders of 3412 resp. 1423; bijections onto the weak
 * compositions of n-2.  Throw std::domain_error off their domains. */
WeakComp4 lambda_3412(const Permutation& p);
Permutation lambda_3412_inverse(const WeakComp4& t, int n);
WeakComp4 lambda_1423(const Permutation& p);
Permutation lambda_1423_inverse(const WeakComp4& t, int n);

/* Even non-identity 312-avoiders of size n -> odd 312-avoiders of size n-1:
 * drop n, and when the descent is not final also move the descent top next to
 * the descent bottom. */
Permutation alpha_312(const Permutation& p);
Permutation alpha_312_inverse(const Permutation& p);

/* Even non-identity 1243-avoiders of size n-1 -> odd 1243-avoiders of size n
 * outside the exceptional set; one of three insertion rules applies. */
Permutation gamma_1243(const Permutation& p);
Permutation gamma_1243_inverse(const Permutation& p);

/* Tuple maps conjugated through the block-size bijections. */
Permutation phi_3412(const Permutation& p);
Permutation phi_3412_inverse(const Permutation& p);
Permutation psi_1423(const Permutation& p);
Permutation psi_1423_inverse(const Permutation& p);

/* Odd-size bijection odd(2413) -> odd(1324): fixed on 1324-avoiders,
 * otherwise swaps inflation blocks 1<->2 and 3<->4 onto the 2413 skeleton. */
Permutation phi1_1324(const Permutation& p);
Permutation phi1_1324_inverse(const Permutation& p);

/* Even-size bijection odd(2134) -> odd(1324). */
Permutation phi2_1324(const Permutation& p);
Permutation phi2_1324_inverse(const Permutation& p);

/* Odd-size bijection odd(2341) -> odd(1342). */
Permutation psi1_1342(const Permutation& p);
Permutation psi1_1342_inverse(const Permutation& p);

/* Even-size bijection odd(1423) -> odd(1342). */
Permutation psi2_1342(const Permutation& p);
Permutation psi2_1342_inverse(const Permutation& p);

/* The special sets that the counting bijections carve out:
 *   A2341 - even 2341-avoiders whose middle value run is empty
 *   B1243 - odd 1243-avoiders not reachable by the insertion map
 *   A3412 - odd 3412-avoiders with empty outer blocks and even inner blocks
 *   B1423 - odd 1423-avoiders with empty outer blocks
 *   E2413 - odd 2413-avoiders containing a 132 pattern
 * Results are lexicographically ordered. */
enum class ExceptionalFamily { A2341, B1243, A3412, B1423, E2413 };
std::vector<Permutation> exceptional_set(ExceptionalFamily family, int n);
bool in_exceptional_set(ExceptionalFamily family, const Permutation& p);

/* Bijection odd 3412-avoiders of [n] -> reversal classes of weak compositions
 * of n-2.  Returns the tuple the case analysis produces (class labels follow
 * it); xi_class gives its canonical class. */
WeakComp4 xi_3412(const Permutation& p);
CompClass xi_class(const Permutation& p);
Permutation xi_3412_inverse(const WeakComp4& any_rep, int n);

}  // namespace gperm

#endif
