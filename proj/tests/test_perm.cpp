#include <doctest.h>

#include <algorithm>
#include <set>

#include "gperm/formulas.hpp"
#include "gperm/perm.hpp"

using namespace gperm;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

/* Oracle: count inversions by scanning every index pair. */
long long pair_count(const Permutation& p) {
    long long c = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p.at(i) > p.at(j)) ++c;
    return c;
}

/* Oracle: containment by checking every index subset of size |sigma|. */
bool subset_contains(const Permutation& p, const Permutation& sigma) {
    const int n = p.size(), k = sigma.size();
    if (k > n) return false;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = a + 1; b < k && ok; ++b)
                ok = (p.at(idx[static_cast<size_t>(a)]) < p.at(idx[static_cast<size_t>(b)])) ==
                     (sigma.at(a) < sigma.at(b));
        if (ok) return true;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) return false;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i) - 1] + 1;
    }
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

TEST_CASE("construction validates one-line notation") {
    CHECK(Permutation().size() == 0);
    CHECK(P("213456").values() == std::vector<int>{2, 1, 3, 4, 5, 6});
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
    CHECK(Permutation::parse("3,5,1,2,4") == P("35124"));
    CHECK(Permutation::identity(12).str() == "1,2,3,4,5,6,7,8,9,10,11,12");
}

TEST_CASE("inversions and parity") {
    CHECK(inversion_count(Permutation::identity(5)) == 0);
    CHECK(parity_of(Permutation::identity(5)) == Parity::Even);
    CHECK(inversion_count(P("3412")) == pair_count(P("3412")));
    CHECK(inversion_count(P("3412")) == 4);
    CHECK(parity_of(P("3412")) == Parity::Even);
    CHECK(inversion_count(P("13524")) == 3);
    CHECK(parity_of(P("13524")) == Parity::Odd);
}

TEST_CASE("grassmannian profile") {
    const auto prof = grassmannian_profile(P("123465"));
    REQUIRE(prof.has_value());
    CHECK(prof->descent_count == 1);
    CHECK(prof->descent_position == 4);
    CHECK(prof->descent_top == 6);
    CHECK(prof->descent_bottom == 5);
    CHECK(prof->run1 == std::vector<int>{1, 2, 3, 4, 6});
    CHECK(prof->run2 == std::vector<int>{5});

    CHECK_FALSE(grassmannian_profile(P("321")).has_value());

    const auto id = grassmannian_profile(Permutation::identity(4));
    REQUIRE(id.has_value());
    CHECK(id->descent_count == 0);
    CHECK(id->run2.empty());
}

TEST_CASE("reverse complement") {
    CHECK(reverse_complement(P("2341")) == P("4123"));
    CHECK(reverse_complement(P("132")) == P("213"));
    CHECK(reverse_complement(Permutation::identity(7)) == Permutation::identity(7));
    for (const auto& p : enumerate_grassmannian(7)) {
        CHECK(reverse_complement(reverse_complement(p)) == p);
        CHECK(parity_of(reverse_complement(p)) == parity_of(p));
        CHECK(is_grassmannian(reverse_complement(p)));
    }
}

TEST_CASE("reverse complement carries odd avoider sets across") {
    for (const char* s : {"132", "312", "1243", "1342", "1423", "2413"}) {
        const Permutation sigma = P(s);
        for (int n = 2; n <= 8; ++n) {
            std::vector<Permutation> mapped;
            for (const auto& p : enumerate_avoiders(n, sigma, Parity::Odd, false))
                mapped.push_back(reverse_complement(p));
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped == enumerate_avoiders(n, reverse_complement(sigma), Parity::Odd, false));
        }
    }
}

TEST_CASE("pattern containment") {
    CHECK(contains_pattern(P("13524"), P("1342")));
    CHECK_FALSE(contains_pattern(Permutation::identity(6), P("132")));
    CHECK(contains_pattern(P("2413"), P("2413")));
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : symmetric_group(n))
            for (const auto& sigma : symmetric_group(3))
                CHECK(contains_pattern(p, sigma) == subset_contains(p, sigma));
    for (const auto& p : symmetric_group(6))
        for (const auto& sigma : symmetric_group(4))
            CHECK(contains_pattern(p, sigma) == subset_contains(p, sigma));
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(P("1"), P("213")) == P("1324"));
    CHECK(direct_sum(Permutation(), P("2413")) == P("2413"));
    CHECK(direct_sum(P("21"), P("1")) == P("213"));
}

TEST_CASE("inflation") {
    CHECK(inflate_identity_blocks(P("2413"), {1, 1, 2, 1}) == P("35124"));
    CHECK(inflate(P("1324"), {P("1"), P("1"), P("1"), P("1")}) == P("1324"));
    CHECK(inflate(P("13524"), {P("1"), P("1"), Permutation(), P("1"), P("1")}) == P("1324"));
    CHECK_THROWS_AS(inflate(P("21"), {P("1")}), std::invalid_argument);
}

TEST_CASE("inflation decomposition") {
    const auto lam = decompose_inflation(P("123465"), Skeleton::Lambda3412);
    REQUIRE(lam.has_value());
    CHECK(lam->block_sizes == std::vector<int>{4, 0, 0, 0});

    const auto blocks = decompose_inflation(P("1263457"), Skeleton::S1324);
    REQUIRE(blocks.has_value());
    CHECK(blocks->block_sizes == std::vector<int>{2, 1, 3, 1});

    CHECK_FALSE(decompose_inflation(Permutation::identity(5), Skeleton::S2413).has_value());
}

TEST_CASE("decomposition round trips on every skeleton") {
    const std::vector<std::pair<Skeleton, Permutation>> skeletons = {
        {Skeleton::S1324, P("1324")},   {Skeleton::S2413, P("2413")},
        {Skeleton::S13524, P("13524")}, {Skeleton::S135246, P("135246")},
        {Skeleton::S24135, P("24135")}};
    for (int n = 2; n <= 8; ++n) {
        for (const auto& p : enumerate_grassmannian(n)) {
            for (const auto& [sk, skeleton_perm] : skeletons) {
                const auto dec = decompose_inflation(p, sk);
                if (!dec) continue;
                std::vector<int> sizes = dec->block_sizes;
                if (sk == Skeleton::S13524) sizes.push_back(1);
                if (sk == Skeleton::S135246) sizes = {sizes[0], 1, 1, sizes[1], sizes[2], sizes[3]};
                if (sk == Skeleton::S24135) sizes = {sizes[0], sizes[1], sizes[2], 1, sizes[3]};
                CHECK(inflate_identity_blocks(skeleton_perm, sizes) == p);
            }
        }
    }
}

TEST_CASE("four-block shape has product inversion count") {
    for (int k1 = 0; k1 <= 4; ++k1)
        for (int k2 = 1; k2 <= 4; ++k2)
            for (int k3 = 1; k3 <= 4; ++k3)
                for (int k4 = 0; k4 <= 4; ++k4) {
                    const Permutation p = inflate_identity_blocks(P("1324"), {k1, k2, k3, k4});
                    CHECK(inversion_count(p) == static_cast<long long>(k2) * k3);
                }
}

TEST_CASE("grassmannian enumeration") {
    CHECK(enumerate_grassmannian(1) == std::vector<Permutation>{P("1")});
    CHECK(enumerate_grassmannian(3) ==
          std::vector<Permutation>{P("123"), P("132"), P("213"), P("231"), P("312")});
    const auto g6 = enumerate_grassmannian(6);
    CHECK(g6.size() == 58);
    long long even = 0, odd = 0;
    for (const auto& p : g6) (parity_of(p) == Parity::Even ? even : odd) += 1;
    CHECK(even == 30);
    CHECK(odd == 28);

    // matches straight filtering of S_n
    for (int n = 1; n <= 6; ++n) {
        std::vector<Permutation> filtered;
        for (const auto& p : symmetric_group(n))
            if (descent_positions(p).size() <= 1) filtered.push_back(p);
        CHECK(filtered == enumerate_grassmannian(n));
    }
}

TEST_CASE("avoider enumeration") {
    CHECK(enumerate_avoiders(6, P("132"), Parity::Odd, false) ==
          std::vector<Permutation>{P("213456"), P("234156"), P("234561"), P("412356"),
                                   P("456123"), P("612345")});
    const auto odd312 = enumerate_avoiders(5, P("312"), Parity::Odd, false);
    CHECK(odd312.size() == 6);
    CHECK(std::count(odd312.begin(), odd312.end(), P("12354")) == 1);
    CHECK(std::count(odd312.begin(), odd312.end(), P("23415")) == 1);
    CHECK(enumerate_avoiders(1, P("132"), Parity::Odd, false).empty());
    CHECK(enumerate_avoiders(4, P("132"), std::nullopt, true).size() ==
          enumerate_avoiders(4, P("132"), std::nullopt, false).size() - 1);
}
