#include "gperm/genfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gperm {

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_pow(const Poly& base, int e) {
    Poly out = {1};
    for (int i = 0; i < e; ++i) out = poly_mul(out, base);
    return out;
}

std::vector<long long> gf_coefficients(const RationalGF& gf, int count) {
    if (gf.den.empty() || gf.den[0] == 0)
        throw std::invalid_argument("denominator must have a nonzero constant term");
    if (count < 0) throw std::invalid_argument("negative coefficient count");
    const long long d0 = gf.den[0];
    std::vector<long long> c(static_cast<size_t>(count) + 1, 0);
    for (size_t k = 0; k < c.size(); ++k) {
        long long acc = k < gf.num.size() ? gf.num[k] : 0;
        for (size_t j = 1; j < gf.den.size() && j <= k; ++j) acc -= gf.den[j] * c[k - j];
        if (acc % d0 != 0) throw std::logic_error("non-integer series coefficient");
        c[k] = acc / d0;
    }
    return {c.begin() + 1, c.end()};
}

namespace {

RationalGF make(Poly num, int one_minus_pow, int one_plus_pow) {
    return {std::move(num),
            poly_mul(poly_pow({1, -1}, one_minus_pow), poly_pow({1, 1}, one_plus_pow))};
}

std::vector<CatalogRow> build_catalog() {
    std::vector<CatalogRow> rows;
    // size-3 rows
    rows.push_back({{"123"}, Parity::Odd, std::nullopt, {0, 1, 2, 1}, ""});
    rows.push_back({{"132", "213"}, Parity::Odd, make({0, 0, 1}, 3, 2), {}, "A008805"});
    rows.push_back({{"231", "312"}, Parity::Odd, make({0, 0, 1}, 3, 1), {}, "A002620"});
    rows.push_back({{"123"}, Parity::Even, std::nullopt, {1, 1, 2, 1}, ""});
    rows.push_back({{"132", "213"}, Parity::Even, make({0, 1, 0, 0, 1, 1}, 3, 2), {}, "A131355"});
    rows.push_back({{"231", "312"}, Parity::Even, make({0, 1, -1, 0, 1}, 3, 1), {}, "A033638"});
    // size-4 rows
    rows.push_back({{"1234"}, Parity::Odd, std::nullopt, {0, 1, 2, 6, 4, 3}, ""});
    rows.push_back({{"1243", "2134", "2341", "4123"}, Parity::Odd,
                    make({0, 0, 1, 0, 0, 1}, 4, 2), {}, "A175287"});
    rows.push_back({{"1324"}, Parity::Odd, make({0, 0, 1, 2, 1, 0, 2}, 4, 4), {}, ""});
    rows.push_back({{"1342", "3124"}, Parity::Odd, make({0, 0, 1, 1, 1, 0, 1}, 4, 3), {}, ""});
    rows.push_back({{"1423", "2314", "3412"}, Parity::Odd, make({0, 0, 1, 0, 1}, 4, 2), {}, "A005993"});
    rows.push_back({{"2413"}, Parity::Odd, make({0, 0, 1}, 4, 2), {}, "A006918"});
    rows.push_back({{"1234"}, Parity::Even, std::nullopt, {1, 1, 3, 5, 6, 2}, ""});
    rows.push_back({{"1243", "2134", "2341", "4123"}, Parity::Even,
                    make({0, 1, -2, 2, 1, -1}, 4, 1), {}, ""});
    rows.push_back({{"1324"}, Parity::Even,
                    make({0, 1, 1, -1, 2, 7, 2, -1, -1}, 4, 4), {}, ""});
    rows.push_back({{"1342", "3124"}, Parity::Even,
                    make({0, 1, 0, -1, 2, 4, -1, -1}, 4, 3), {}, ""});
    rows.push_back({{"1423", "2314", "3412"}, Parity::Even,
                    make({0, 1, -1, 0, 2, 1, -1}, 4, 2), {}, ""});
    rows.push_back({{"2413"}, Parity::Even, make({0, 1, -1, 0, 3, 1, -1}, 4, 2), {}, ""});
    return rows;
}

}  // namespace

const std::vector<CatalogRow>& sequence_catalog() {
    static const std::vector<CatalogRow> rows = build_catalog();
    return rows;
}

const CatalogRow* catalog_lookup(const Permutation& pattern, Parity parity) {
    const std::string key = pattern.str();
    for (const CatalogRow& row : sequence_catalog()) {
        if (row.parity != parity) continue;
        if (std::find(row.patterns.begin(), row.patterns.end(), key) != row.patterns.end())
            return &row;
    }
    return nullptr;
}

std::vector<long long> catalog_sequence(const Permutation& pattern, Parity parity, int n_max) {
    const CatalogRow* row = catalog_lookup(pattern, parity);
    if (!row) throw std::invalid_argument("pattern " + pattern.str() + " is not a catalog row");
    if (row->gf) return gf_coefficients(*row->gf, n_max);
    std::vector<long long> out(static_cast<size_t>(n_max), 0);
    for (size_t i = 0; i < out.size() && i < row->finite.size(); ++i) out[i] = row->finite[i];
    return out;
}

std::string gf_to_string(const RationalGF& gf) {
    auto poly_str = [](const Poly& p) {
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < p.size(); ++i) {
            const long long c = p[i];
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            const long long a = c < 0 ? -c : c;
            if (a != 1 || i == 0) out << a;
            if (i == 1) out << "x";
            if (i > 1) out << "x^" << i;
            first = false;
        }
        if (first) out << "0";
        return out.str();
    };
    return "(" + poly_str(gf.num) + ") / (" + poly_str(gf.den) + ")";
}

}  // namespace gperm
