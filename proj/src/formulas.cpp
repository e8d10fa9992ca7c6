#include "gperm/formulas.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace gperm {

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long grassmannian_avoider_total(const Permutation& sigma, int n) {
    const int k = sigma.size();
    if (k < 3 || descent_positions(sigma).size() != 1)
        throw std::invalid_argument("total requires a one-descent pattern of size >= 3");
    if (n < 1) throw std::invalid_argument("n must be positive");
    long long total = 1;
    for (int j = 3; j <= k; ++j) total += binomial(n, j - 1);
    return total;
}

ParityTotals grassmannian_parity_totals(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const long long half = 1LL << ((n - 1) / 2);
    const long long lead = 1LL << (n - 1);
    return {lead + half - n, lead - half};
}

long long count_odd_132(int n) { return binomial(n / 2 + 1, 2); }

long long count_odd_312(int n) { return binomial((n - 1) / 2 + 1, 2) + binomial(n / 2 + 1, 2); }

long long count_odd_1243_family(int n) {
    long long a = 0;  // value at size 1
    for (int m = 2; m <= n; ++m) a = binomial(m, 3) + m - 1 - a;
    return a;
}

long long count_odd_3412_family(int n) {
    if (n % 2 == 1) return binomial(n + 1, 3) / 2;
    return (binomial(n + 1, 3) + n / 2) / 2;
}

long long count_odd_2413(int n) {
    long long a = 0;
    for (int m = 2; m <= n; ++m) a += binomial(m / 2 + 1, 2);
    return a;
}

long long count_odd_1324(int n) {
    return n % 2 == 1 ? count_odd_2413(n) : count_odd_1243_family(n);
}

long long count_odd_1342_family(int n) {
    return n % 2 == 1 ? count_odd_1243_family(n) : count_odd_3412_family(n);
}

long long count_odd(const Permutation& sigma, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    static const std::map<std::string, long long (*)(int)> dispatch = {
        {"132", count_odd_132},
        {"213", count_odd_132},
        {"231", count_odd_312},
        {"312", count_odd_312},
        {"1243", count_odd_1243_family},
        {"2134", count_odd_1243_family},
        {"2341", count_odd_1243_family},
        {"4123", count_odd_1243_family},
        {"1324", count_odd_1324},
        {"1342", count_odd_1342_family},
        {"3124", count_odd_1342_family},
        {"1423", count_odd_3412_family},
        {"2314", count_odd_3412_family},
        {"3412", count_odd_3412_family},
        {"2413", count_odd_2413},
    };
    auto it = dispatch.find(sigma.str());
    if (it == dispatch.end())
        throw std::invalid_argument("no closed form for pattern " + sigma.str());
    return it->second(n);
}

long long count_even(const Permutation& sigma, int n) {
    return grassmannian_avoider_total(sigma, n) - count_odd(sigma, n);
}

WilfClassification wilf_classes(int pattern_size, int n_max, Parity parity) {
    if (pattern_size < 3 || pattern_size > 7) throw std::invalid_argument("pattern size must be 3..7");
    if (n_max < 1 || n_max > 16) throw std::invalid_argument("n_max must be 1..16");

    WilfClassification out;
    out.pattern_size = pattern_size;
    out.n_max = n_max;
    out.parity = parity;

    const std::vector<Permutation> patterns = one_descent_patterns(pattern_size);
    std::vector<std::vector<long long>> counts(patterns.size());

    for (int n = 1; n <= n_max; ++n) {
        const std::vector<Permutation> all = enumerate_grassmannian(n);
        std::vector<char> wanted(all.size());
        for (size_t i = 0; i < all.size(); ++i) wanted[i] = parity_of(all[i]) == parity;
        for (size_t s = 0; s < patterns.size(); ++s) {
            long long c = 0;
            for (size_t i = 0; i < all.size(); ++i)
                if (wanted[i] && !contains_pattern(all[i], patterns[s])) ++c;
            counts[s].push_back(c);
        }
    }

    std::map<std::vector<long long>, std::vector<Permutation>> groups;
    for (size_t s = 0; s < patterns.size(); ++s) groups[counts[s]].push_back(patterns[s]);

    std::vector<std::pair<Permutation, std::pair<std::vector<Permutation>, std::vector<long long>>>> ordered;
    for (auto& [vec, members] : groups) {
        std::sort(members.begin(), members.end());
        ordered.push_back({members.front(), {members, vec}});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, payload] : ordered) {
        out.classes.push_back(payload.first);
        out.class_counts.push_back(payload.second);
    }
    return out;
}

}  // namespace gperm
