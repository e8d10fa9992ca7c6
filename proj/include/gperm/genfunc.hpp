#ifndef GPERM_GENFUNC_HPP
#define GPERM_GENFUNC_HPP

#include <optional>
#include <string>
#include <vector>

#include "gperm/perm.hpp"

namespace gperm {

using Poly = std::vector<long long>;  // coefficients, ascending degree

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& base, int e);

/* Ratio of two integer polynomials; the catalog entries all expand with
 * integer coefficients, which gf_coefficients enforces exactly. */
struct RationalGF {
    Poly num;
    Poly den;  // den[0] != 0
};

/* Taylor coefficients of x^1 .. x^count, by exact integer long division.
 * Throws std::invalid_argument on a zero constant denominator term and
 * std::logic_error if a coefficient fails to be an integer. */
std::vector<long long> gf_coefficients(const RationalGF& gf, int count);

/* One row of the sequence catalog: a pattern group with a fixed parity and
 * either a rational generating function or a literal finite sequence. */
struct CatalogRow {
    std::vector<std::string> patterns;
    Parity parity;
    std::optional<RationalGF> gf;
    std::vector<long long> finite;  // used when !gf; zero beyond its length
    std::string oeis;               // empty when none is known
};

const std::vector<CatalogRow>& sequence_catalog();
const CatalogRow* catalog_lookup(const Permutation& pattern, Parity parity);

/* Counts for n = 1..n_max from the catalog entry (GF expansion or padded
 * finite row).  Throws std::invalid_argument for unknown keys. */
std::vector<long long> catalog_sequence(const Permutation& pattern, Parity parity, int n_max);

std::string gf_to_string(const RationalGF& gf);

}  // namespace gperm

#endif
