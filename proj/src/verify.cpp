#include "gperm/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gperm/bijections.hpp"
#include "gperm/dyck.hpp"
#include "gperm/formulas.hpp"
#include "gperm/genfunc.hpp"
#include "gperm/partitions.hpp"
#include "gperm/perm.hpp"

namespace gperm {

namespace {

constexpr size_t kMaxMessages = 20;

struct Check {
    SuiteResult& result;
    void operator()(bool ok, const std::string& what) {
        ++result.checks;
        if (ok) return;
        ++result.failures;
        if (result.messages.size() < kMaxMessages) result.messages.push_back(what);
    }
};

const Permutation& pat(const char* digits) {
    static std::map<std::string, Permutation> cache;
    auto [it, inserted] = cache.try_emplace(digits);
    if (inserted) it->second = Permutation::parse(digits);
    return it->second;
}

/* Independent containment oracle: walk all subsequences of the right length. */
bool naive_contains(const Permutation& p, const Permutation& sigma) {
    const int n = p.size(), k = sigma.size();
    if (k > n) return false;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        bool match = true;
        for (int a = 0; a < k && match; ++a)
            for (int b = a + 1; b < k && match; ++b)
                match = (p.at(idx[static_cast<size_t>(a)]) < p.at(idx[static_cast<size_t>(b)])) ==
                        (sigma.at(a) < sigma.at(b));
        if (match) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i) - 1] + 1;
    }
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

long long brute_count(int n, const Permutation& sigma, Parity parity) {
    return static_cast<long long>(enumerate_avoiders(n, sigma, parity, false).size());
}

const std::vector<const char*>& size34_patterns() {
    static const std::vector<const char*> p = {"132",  "213",  "231",  "312",  "1243", "2134",
                                               "2341", "4123", "1324", "1342", "3124", "1423",
                                               "2314", "3412", "2413"};
    return p;
}

}  // namespace

SuiteResult verify_perm_core(int n_max) {
    SuiteResult result;
    result.name = "perm-core";
    Check check{result};

    for (int n = 1; n <= std::min(n_max, 12); ++n) {
        const auto all = enumerate_grassmannian(n);
        check(static_cast<long long>(all.size()) == (1LL << n) - n,
              "|G_" + std::to_string(n) + "| != 2^n - n");
        long long even = 0, odd = 0;
        for (const auto& p : all) (parity_of(p) == Parity::Even ? even : odd) += 1;
        const ParityTotals t = grassmannian_parity_totals(n);
        check(even == t.even && odd == t.odd,
              "parity split mismatch at n=" + std::to_string(n));
        check(std::is_sorted(all.begin(), all.end()),
              "enumeration is not lexicographically sorted at n=" + std::to_string(n));
    }

    // reverse complement: involution, parity preserved, avoider sets map over
    for (int n = 1; n <= std::min(n_max, 10); ++n) {
        for (const auto& p : enumerate_grassmannian(n)) {
            const Permutation rc = reverse_complement(p);
            check(reverse_complement(rc) == p, "rc not an involution: " + p.str());
            check(parity_of(rc) == parity_of(p), "rc changed parity: " + p.str());
        }
        for (const char* s : size34_patterns()) {
            const Permutation& sigma = pat(s);
            const auto image_set = enumerate_avoiders(n, reverse_complement(sigma), Parity::Odd, false);
            std::vector<Permutation> mapped;
            for (const auto& p : enumerate_avoiders(n, sigma, Parity::Odd, false))
                mapped.push_back(reverse_complement(p));
            std::sort(mapped.begin(), mapped.end());
            check(mapped == image_set,
                  std::string("rc does not map odd avoiders of ") + s + " onto those of its rc");
        }
    }

    // decomposition round-trips over every skeleton
    const std::vector<std::pair<Skeleton, Permutation>> skeletons = {
        {Skeleton::S1324, pat("1324")},     {Skeleton::S2413, pat("2413")},
        {Skeleton::S13524, pat("13524")},   {Skeleton::S135246, pat("135246")},
        {Skeleton::S24135, pat("24135")},   {Skeleton::Lambda3412, pat("135246")},
        {Skeleton::Lambda1423, pat("245136")}};
    for (int n = 2; n <= std::min(n_max, 11); ++n) {
        for (const auto& p : enumerate_grassmannian(n)) {
            for (const auto& [sk, skeleton_perm] : skeletons) {
                const auto dec = decompose_inflation(p, sk);
                if (!dec) continue;
                if (sk == Skeleton::Lambda3412) {
                    WeakComp4 t{{dec->block_sizes[0], dec->block_sizes[1], dec->block_sizes[2],
                                 dec->block_sizes[3]}};
                    check(lambda_3412_inverse(t, n) == p, "lambda3412 round trip: " + p.str());
                } else if (sk == Skeleton::Lambda1423) {
                    WeakComp4 t{{dec->block_sizes[0], dec->block_sizes[1], dec->block_sizes[2],
                                 dec->block_sizes[3]}};
                    check(lambda_1423_inverse(t, n) == p, "lambda1423 round trip: " + p.str());
                } else {
                    std::vector<int> sizes = dec->block_sizes;
                    if (sk == Skeleton::S13524) sizes.push_back(1);
                    if (sk == Skeleton::S135246) sizes = {sizes[0], 1, 1, sizes[1], sizes[2], sizes[3]};
                    if (sk == Skeleton::S24135) sizes = {sizes[0], sizes[1], sizes[2], 1, sizes[3]};
                    check(inflate_identity_blocks(skeleton_perm, sizes) == p,
                          "skeleton round trip: " + p.str());
                }
            }
        }
    }

    // inversion count of the four-block 1324 shape is the product of the
    // two inner sizes
    for (int k1 = 0; k1 <= std::min(n_max, 12); ++k1)
        for (int k2 = 1; k1 + k2 <= std::min(n_max, 12); ++k2)
            for (int k3 = 1; k1 + k2 + k3 <= std::min(n_max, 12); ++k3)
                for (int k4 = 0; k1 + k2 + k3 + k4 <= std::min(n_max, 12); ++k4) {
                    const Permutation p = inflate_identity_blocks(pat("1324"), {k1, k2, k3, k4});
                    check(inversion_count(p) == static_cast<long long>(k2) * k3,
                          "inversions != k2*k3 for blocks");
                }

    // containment against the subsequence oracle
    for (int n = 1; n <= std::min(n_max, 8); ++n) {
        const auto perms = all_permutations(n);
        std::vector<Permutation> sigmas;
        for (const auto& s : all_permutations(3)) sigmas.push_back(s);
        for (const auto& s : all_permutations(4)) sigmas.push_back(s);
        long long bad = 0;
        for (const auto& p : perms)
            for (const auto& sigma : sigmas)
                if (contains_pattern(p, sigma) != naive_contains(p, sigma)) ++bad;
        check(bad == 0, "containment disagrees with the oracle at n=" + std::to_string(n));
    }

    return result;
}

SuiteResult verify_formulas(int n_max) {
    SuiteResult result;
    result.name = "formulas";
    Check check{result};
    const int top = std::min(n_max, 12);

    for (const char* s : size34_patterns()) {
        const Permutation& sigma = pat(s);
        for (int n = 2; n <= top; ++n) {
            check(count_odd(sigma, n) == brute_count(n, sigma, Parity::Odd),
                  std::string("odd closed form vs enumeration: ") + s + " n=" + std::to_string(n));
            check(count_even(sigma, n) == brute_count(n, sigma, Parity::Even),
                  std::string("even count vs enumeration: ") + s + " n=" + std::to_string(n));
        }
    }

    // the 312 closed form also satisfies its complementary recurrence
    for (int n = 3; n <= top; ++n)
        check(count_odd_312(n) == binomial(n, 2) - count_odd_312(n - 1),
              "312 recurrence fails at n=" + std::to_string(n));

    // totals of the two parities, sizes 3..5
    for (int k = 3; k <= 5; ++k) {
        for (const auto& sigma : one_descent_patterns(k)) {
            for (int n = 1; n <= std::min(top, 9); ++n) {
                const long long total = grassmannian_avoider_total(sigma, n);
                check(total == brute_count(n, sigma, Parity::Even) + brute_count(n, sigma, Parity::Odd),
                      "avoider total mismatch: " + sigma.str() + " n=" + std::to_string(n));
            }
        }
    }

    // non-identity avoiders of any one-descent size-4 pattern number C(n+1,3)
    for (const auto& sigma : one_descent_patterns(4))
        for (int n = 2; n <= top; ++n)
            check(static_cast<long long>(enumerate_avoiders(n, sigma, std::nullopt, true).size()) ==
                      binomial(n + 1, 3),
                  "starred avoiders != C(n+1,3): " + sigma.str());

    return result;
}

SuiteResult verify_generating_functions(int n_max) {
    SuiteResult result;
    result.name = "generating-functions";
    Check check{result};
    const int top = std::min(n_max, 12);

    for (const CatalogRow& row : sequence_catalog()) {
        for (const std::string& name : row.patterns) {
            const Permutation sigma = Permutation::parse(name);
            const auto seq = catalog_sequence(sigma, row.parity, top);
            for (int n = 1; n <= top; ++n)
                check(seq[static_cast<size_t>(n) - 1] == brute_count(n, sigma, row.parity),
                      "catalog sequence vs enumeration: " + name + "/" +
                          to_string(row.parity) + " n=" + std::to_string(n));
        }
    }
    return result;
}

SuiteResult verify_dyck_paths(int n_max) {
    SuiteResult result;
    result.name = "dyck-paths";
    Check check{result};
    const int top = std::min(n_max, 12);

    for (int n = 1; n <= top; ++n) {
        long long catalan = binomial(2 * n, n) / (n + 1);
        long long total = 0, odd_grass = 0, invalid = 0;
        for_each_dyck(n, [&](const DyckPath& p) {
            ++total;
            const PathStats st = path_stats(p);
            int h = 0;
            bool valid = true;
            for (char c : p.steps()) {
                h += c == 'U' ? 1 : -1;
                valid = valid && h >= 0;
            }
            if (!valid || h != 0) ++invalid;
            if (st.long_ascent_count <= 1 && st.peaks_at_even_height % 2 == 1) ++odd_grass;
        });
        check(invalid == 0, "prefix invariant violated at n=" + std::to_string(n));
        check(total == catalan, "path count != Catalan at n=" + std::to_string(n));
        check(odd_grass == grassmannian_parity_totals(n).odd,
              "odd Grassmannian path total mismatch at n=" + std::to_string(n));
    }

    const std::vector<std::pair<PathCharacterization, const char*>> pairs = {
        {PathCharacterization::BeginsLongAscentOneLongDescent, "132"},
        {PathCharacterization::OneLongAscentOneLongDescentNoPeakAfter, "213"},
        {PathCharacterization::NoValleyAboveZero, "312"},
        {PathCharacterization::NoPeakAboveTwo, "231"}};
    for (const auto& [characterization, pattern] : pairs)
        for (int n = 2; n <= top; ++n)
            check(count_characterized(n, characterization) == brute_count(n, pat(pattern), Parity::Odd),
                  std::string("path family count != odd avoiders of ") + pattern +
                      " at n=" + std::to_string(n));
    return result;
}

SuiteResult verify_bijections(int n_max) {
    SuiteResult result;
    result.name = "bijections";
    Check check{result};
    const int top = std::min(n_max, 11);

    // alpha: even non-identity 312-avoiders of n <-> odd ones of n-1
    for (int n = 2; n <= top; ++n) {
        std::set<Permutation> images;
        for (const auto& p : enumerate_avoiders(n, pat("312"), Parity::Even, true)) {
            const Permutation q = alpha_312(p);
            check(q.size() == n - 1 && parity_of(q) == Parity::Odd &&
                      !contains_pattern(q, pat("312")),
                  "alpha postcondition: " + p.str());
            check(alpha_312_inverse(q) == p, "alpha round trip: " + p.str());
            images.insert(q);
        }
        const auto odd_target = enumerate_avoiders(n - 1, pat("312"), Parity::Odd, false);
        check(images.size() == odd_target.size() &&
                  std::equal(images.begin(), images.end(), odd_target.begin()),
              "alpha is not onto at n=" + std::to_string(n));
    }

    // gamma: even non-identity 1243-avoiders of n-1 <-> odd ones of n minus
    // the exceptional set
    for (int n = 3; n <= top; ++n) {
        std::set<Permutation> images;
        for (const auto& p : enumerate_avoiders(n - 1, pat("1243"), Parity::Even, true)) {
            const Permutation q = gamma_1243(p);
            check(q.size() == n && parity_of(q) == Parity::Odd &&
                      !contains_pattern(q, pat("1243")),
                  "gamma postcondition: " + p.str());
            check(!in_exceptional_set(ExceptionalFamily::B1243, q),
                  "gamma image hit the exceptional set: " + p.str());
            check(gamma_1243_inverse(q) == p, "gamma round trip: " + p.str());
            images.insert(q);
        }
        std::vector<Permutation> target;
        for (const auto& q : enumerate_avoiders(n, pat("1243"), Parity::Odd, false))
            if (!in_exceptional_set(ExceptionalFamily::B1243, q)) target.push_back(q);
        check(images.size() == target.size() &&
                  std::equal(images.begin(), images.end(), target.begin()),
              "gamma is not onto at n=" + std::to_string(n));
        const auto b = exceptional_set(ExceptionalFamily::B1243, n);
        check(static_cast<long long>(b.size()) == n - 1,
              "|B set| != n-1 at n=" + std::to_string(n));
        for (const auto& q : b)
            check(parity_of(q) == Parity::Odd && !contains_pattern(q, pat("1243")),
                  "B set element off-domain: " + q.str());
    }

    // A set for 2341: even avoiders not reachable by extending the middle run
    for (int n = 2; n <= top; ++n) {
        const auto a = exceptional_set(ExceptionalFamily::A2341, n);
        check(static_cast<long long>(a.size()) == 1 + binomial(n - 1, 2),
              "|A 2341 set| mismatch at n=" + std::to_string(n));
        for (const auto& q : a)
            check(parity_of(q) == Parity::Even && !contains_pattern(q, pat("2341")),
                  "A 2341 element off-domain: " + q.str());
        check(brute_count(n, pat("2341"), Parity::Even) ==
                  brute_count(n - 1, pat("2341"), Parity::Odd) + binomial(n - 1, 2) + 1,
              "even-odd recurrence for 2341 fails at n=" + std::to_string(n));
    }

    // conjugated tuple maps for 3412 and 1423
    for (int n = 3; n <= top; ++n) {
        for (const auto& [pattern, forward, inverse, family] :
             std::vector<std::tuple<const char*, Permutation (*)(const Permutation&),
                                    Permutation (*)(const Permutation&),
                                    std::optional<ExceptionalFamily>>>{
                 {"3412", phi_3412, phi_3412_inverse,
                  n % 2 == 0 ? std::optional(ExceptionalFamily::A3412) : std::nullopt},
                 {"1423", psi_1423, psi_1423_inverse,
                  n % 2 == 0 ? std::optional(ExceptionalFamily::B1423) : std::nullopt}}) {
            std::set<Permutation> images;
            long long skipped = 0;
            for (const auto& p : enumerate_avoiders(n, pat(pattern), Parity::Odd, false)) {
                if (family && in_exceptional_set(*family, p)) {
                    ++skipped;
                    continue;
                }
                const Permutation q = forward(p);
                check(parity_of(q) == Parity::Even && !is_identity(q) &&
                          !contains_pattern(q, pat(pattern)),
                      std::string("tuple map postcondition: ") + p.str());
                check(inverse(q) == p, std::string("tuple map round trip: ") + p.str());
                images.insert(q);
            }
            const auto target = enumerate_avoiders(n, pat(pattern), Parity::Even, true);
            check(images.size() == target.size() &&
                      std::equal(images.begin(), images.end(), target.begin()),
                  std::string("tuple map not onto for ") + pattern + " at n=" + std::to_string(n));
            if (family)
                check(skipped == n / 2, std::string("undefined-domain size for ") + pattern);
        }
    }

    // parity-restricted equalities via the four block bijections
    for (int n = 2; n <= top; ++n) {
        const bool odd_size = n % 2 == 1;
        const char* source = odd_size ? "2413" : "2134";
        auto forward = odd_size ? phi1_1324 : phi2_1324;
        auto inverse = odd_size ? phi1_1324_inverse : phi2_1324_inverse;
        std::set<Permutation> images;
        for (const auto& p : enumerate_avoiders(n, pat(source), Parity::Odd, false)) {
            const Permutation q = forward(p);
            check(parity_of(q) == Parity::Odd && !contains_pattern(q, pat("1324")),
                  "1324 map postcondition: " + p.str());
            check(inverse(q) == p, "1324 map round trip: " + p.str());
            if (!odd_size)
                check(contains_pattern(q, pat("2134")) == contains_pattern(p, pat("1324")),
                      "1324 map containment equivalence: " + p.str());
            images.insert(q);
        }
        const auto target = enumerate_avoiders(n, pat("1324"), Parity::Odd, false);
        check(images.size() == target.size() &&
                  std::equal(images.begin(), images.end(), target.begin()),
              "1324 map not onto at n=" + std::to_string(n));
    }
    for (int n = 2; n <= top; ++n) {
        const bool odd_size = n % 2 == 1;
        const char* source = odd_size ? "2341" : "1423";
        auto forward = odd_size ? psi1_1342 : psi2_1342;
        auto inverse = odd_size ? psi1_1342_inverse : psi2_1342_inverse;
        std::set<Permutation> images;
        for (const auto& p : enumerate_avoiders(n, pat(source), Parity::Odd, false)) {
            const Permutation q = forward(p);
            check(parity_of(q) == Parity::Odd && !contains_pattern(q, pat("1342")),
                  "1342 map postcondition: " + p.str());
            check(inverse(q) == p, "1342 map round trip: " + p.str());
            check(contains_pattern(q, pat(source)) == contains_pattern(p, pat("1342")),
                  "1342 map containment equivalence: " + p.str());
            images.insert(q);
        }
        const auto target = enumerate_avoiders(n, pat("1342"), Parity::Odd, false);
        check(images.size() == target.size() &&
                  std::equal(images.begin(), images.end(), target.begin()),
              "1342 map not onto at n=" + std::to_string(n));
    }

    // the odd 2413-avoiders split into the 132-avoiding ones and the
    // 1-prefixed copies of the previous size
    for (int n = 3; n <= top; ++n) {
        const auto domain = enumerate_avoiders(n, pat("2413"), Parity::Odd, false);
        const auto special = exceptional_set(ExceptionalFamily::E2413, n);
        check(static_cast<long long>(domain.size()) ==
                  static_cast<long long>(special.size()) +
                      static_cast<long long>(
                          enumerate_avoiders(n, pat("132"), Parity::Odd, false).size()),
              "2413 split by 132 containment fails at n=" + std::to_string(n));
        for (const auto& q : special) {
            check(q.at(0) == 1, "prefixed element does not start with 1: " + q.str());
            check(contains_pattern(q, pat("132")), "prefixed element avoids 132: " + q.str());
        }
    }

    // block-size parity characterizations of the two Lambda shapes
    for (int n = 2; n <= top; ++n) {
        for (const auto& p : enumerate_avoiders(n, pat("3412"), std::nullopt, true)) {
            const WeakComp4 t = lambda_3412(p);
            check((parity_of(p) == Parity::Odd) == (t[1] % 2 == t[2] % 2),
                  "3412 parity characterization: " + p.str());
        }
        for (const auto& p : enumerate_avoiders(n, pat("1423"), std::nullopt, true)) {
            const WeakComp4 t = lambda_1423(p);
            check((parity_of(p) == Parity::Odd) ==
                      (((t[0] + t[1] + 1) * t[2] + t[1]) % 2 == 0),
                  "1423 parity characterization: " + p.str());
        }
    }

    // xi: bijection onto the composition classes, no collisions
    for (int n = 2; n <= std::min(n_max, 12); ++n) {
        std::set<CompClass> images;
        const auto domain = enumerate_avoiders(n, pat("3412"), Parity::Odd, false);
        for (const auto& p : domain) {
            const WeakComp4 produced = xi_3412(p);
            check(produced.sum() == n - 2, "xi image has wrong sum: " + p.str());
            check(xi_3412_inverse(produced, n) == p, "xi round trip: " + p.str());
            images.insert(class_canonical(produced));
        }
        const auto classes = composition_classes(n - 2);
        check(images.size() == domain.size(), "xi has collisions at n=" + std::to_string(n));
        check(images.size() == classes.size() &&
                  std::equal(images.begin(), images.end(), classes.begin()),
              "xi is not onto the classes at n=" + std::to_string(n));
    }

    // step-map lemmas on the tuples with congruent middle parts (the ones the
    // block bijection assigns to odd permutations): reversal-equal step images
    // force matching symmetry, and force opposite minimality
    for (int m = 0; m <= std::min(n_max, 12); ++m) {
        std::vector<WeakComp4> tuples;
        for (int a = 0; a <= m; ++a)
            for (int b = 0; a + b <= m; ++b)
                for (int c = 0; a + b + c <= m; ++c)
                    if (b % 2 == c % 2) tuples.push_back(WeakComp4{{a, b, c, m - a - b - c}});
        for (const auto& u : tuples) {
            const auto fu = phi_step(u);
            if (!fu) continue;
            for (const auto& v : tuples) {
                const auto fv = phi_step(v);
                if (!fv || !(*fu == reversed(*fv) || *fu == *fv)) continue;
                if (is_symmetric(u))
                    check(is_symmetric(v), "symmetry lemma fails: " + u.str() + " " + v.str());
                else if (!is_symmetric(v) && !(u == v))
                    check(is_minimal(u) != is_minimal(v),
                          "minimality lemma fails: " + u.str() + " " + v.str());
            }
        }
    }

    return result;
}

SuiteResult verify_partitions_graphs(int n_max) {
    SuiteResult result;
    result.name = "partitions-graphs";
    Check check{result};

    // durfee map: injective onto the partitions of n+2 with Durfee square 2
    for (int n = 2; n <= std::min(n_max, 12); ++n) {
        std::set<FerrersPartition> images;
        const auto domain = enumerate_avoiders(n, pat("2413"), Parity::Odd, false);
        for (const auto& p : domain) {
            const FerrersPartition q = durfee_map(p);
            check(q.sum() == n + 2 && q.durfee_size() == 2,
                  "durfee image invalid: " + p.str() + " -> " + q.str());
            check(durfee_map_inverse(q) == p, "durfee round trip: " + p.str());
            images.insert(q);
        }
        check(images.size() == domain.size(), "durfee map collides at n=" + std::to_string(n));
        const auto target = partitions_with_durfee(n + 2, 2);
        std::set<FerrersPartition> target_set(target.begin(), target.end());
        check(images == target_set, "durfee image != partitions with Durfee 2 at n=" + std::to_string(n));
        check(static_cast<long long>(domain.size()) == count_odd_2413(n),
              "odd 2413 avoider count mismatch at n=" + std::to_string(n));
    }

    // multidigraph classes: counts match the closed expression and the
    // odd 3412 avoiders
    for (int m = 0; m <= std::min(n_max, 10); ++m) {
        const auto graphs = multidigraphs(m);
        std::set<CompClass> classes;
        for (const auto& g : graphs) {
            check(g.edge_count() == m, "graph has wrong edge count");
            classes.insert(graph_to_class(g));
        }
        check(classes.size() == graphs.size(), "graph list has duplicates at m=" + std::to_string(m));
        long long symmetric = m % 2 == 0 ? m / 2 + 1 : 0;
        check(static_cast<long long>(graphs.size()) == (binomial(m + 3, 3) + symmetric) / 2,
              "class count formula fails at m=" + std::to_string(m));
        if (m + 2 <= std::min(n_max, 12))
            check(static_cast<long long>(graphs.size()) ==
                      brute_count(m + 2, pat("3412"), Parity::Odd),
                  "graphs != odd 3412 avoiders at m=" + std::to_string(m));
    }

    return result;
}

std::vector<std::string> verification_suite_names() {
    return {"perm-core", "formulas", "generating-functions", "dyck-paths", "bijections",
            "partitions-graphs"};
}

std::vector<SuiteResult> run_verification(const std::string& suite, int n_max) {
    std::vector<SuiteResult> out;
    const bool all = suite == "all";
    if (all || suite == "perm-core") out.push_back(verify_perm_core(n_max));
    if (all || suite == "formulas") out.push_back(verify_formulas(n_max));
    if (all || suite == "generating-functions") out.push_back(verify_generating_functions(n_max));
    if (all || suite == "dyck-paths") out.push_back(verify_dyck_paths(n_max));
    if (all || suite == "bijections") out.push_back(verify_bijections(n_max));
    if (all || suite == "partitions-graphs") out.push_back(verify_partitions_graphs(n_max));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace gperm
