#include "gperm/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gperm {

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : vals_) {
        if (v < 1 || v > n) throw std::invalid_argument("permutation value out of range 1..n");
        if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("duplicate permutation value");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> vals;
    if (text.find(',') != std::string_view::npos) {
        std::string token;
        std::istringstream in{std::string(text)};
        while (std::getline(in, token, ',')) {
            size_t used = 0;
            int v = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument("bad permutation entry: " + token);
            vals.push_back(v);
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit");
            vals.push_back(c - '0');
        }
    }
    return Permutation(std::move(vals));
}

std::string Permutation::str() const {
    std::string out;
    const bool commas = size() > 9;
    for (int i = 0; i < size(); ++i) {
        if (commas && i > 0) out += ',';
        out += std::to_string(vals_[static_cast<size_t>(i)]);
    }
    return out;
}

long long inversion_count(const Permutation& p) {
    long long count = 0;
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.at(i) > p.at(j)) ++count;
    return count;
}

Parity parity_of(const Permutation& p) {
    return inversion_count(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

bool is_identity(const Permutation& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p.at(i) != i + 1) return false;
    return true;
}

std::vector<int> descent_positions(const Permutation& p) {
    std::vector<int> out;
    for (int i = 0; i + 1 < p.size(); ++i)
        if (p.at(i) > p.at(i + 1)) out.push_back(i);
    return out;
}

std::optional<GrassmannianProfile> grassmannian_profile(const Permutation& p) {
    const std::vector<int> descents = descent_positions(p);
    if (descents.size() > 1) return std::nullopt;
    GrassmannianProfile prof;
    if (descents.empty()) {
        prof.run1 = p.values();
        return prof;
    }
    const int d = descents[0];
    prof.descent_count = 1;
    prof.descent_position = d;
    prof.run1.assign(p.values().begin(), p.values().begin() + d + 1);
    prof.run2.assign(p.values().begin() + d + 1, p.values().end());
    prof.descent_top = prof.run1.back();
    prof.descent_bottom = prof.run2.front();
    return prof;
}

bool is_grassmannian(const Permutation& p) { return descent_positions(p).size() <= 1; }

Permutation reverse_complement(const Permutation& p) {
    const int n = p.size();
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = n + 1 - p.at(n - 1 - i);
    return Permutation(std::move(out));
}

bool contains_pattern(const Permutation& p, const Permutation& sigma) {
    const int n = p.size();
    const int k = sigma.size();
    if (k == 0) return true;
    if (k > n) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(k));
    // depth-first subsequence search; each new entry must sit in the same
    // relative order against all chosen entries as sigma dictates
    std::function<bool(int, int)> extend = [&](int t, int start) -> bool {
        if (t == k) return true;
        for (int i = start; i <= n - (k - t); ++i) {
            const int v = p.at(i);
            bool ok = true;
            for (int s = 0; s < t && ok; ++s)
                ok = (v > chosen[static_cast<size_t>(s)]) == (sigma.at(t) > sigma.at(s));
            if (!ok) continue;
            chosen.push_back(v);
            if (extend(t + 1, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return extend(0, 0);
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<int> out = p.values();
    out.reserve(static_cast<size_t>(p.size() + q.size()));
    for (int v : q.values()) out.push_back(v + p.size());
    return Permutation(std::move(out));
}

Permutation inflate(const Permutation& skeleton, const std::vector<Permutation>& blocks) {
    const int m = skeleton.size();
    if (static_cast<int>(blocks.size()) != m)
        throw std::invalid_argument("inflate: block count must match skeleton size");
    std::vector<int> offset(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (skeleton.at(j) < skeleton.at(i)) offset[static_cast<size_t>(i)] += blocks[static_cast<size_t>(j)].size();
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        for (int v : blocks[static_cast<size_t>(i)].values()) out.push_back(offset[static_cast<size_t>(i)] + v);
    return Permutation(std::move(out));
}

Permutation inflate_identity_blocks(const Permutation& skeleton, const std::vector<int>& sizes) {
    const int m = skeleton.size();
    if (static_cast<int>(sizes.size()) != m)
        throw std::invalid_argument("inflate: size count must match skeleton size");
    std::vector<int> offset(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (skeleton.at(j) < skeleton.at(i)) offset[static_cast<size_t>(i)] += sizes[static_cast<size_t>(j)];
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        for (int v = 1; v <= sizes[static_cast<size_t>(i)]; ++v) out.push_back(offset[static_cast<size_t>(i)] + v);
    return Permutation(std::move(out));
}

std::optional<std::vector<int>> decompose_identity_blocks(const Permutation& p,
                                                          const Permutation& skeleton,
                                                          const std::vector<int>& pinned,
                                                          const std::vector<int>& min_size) {
    const int m = skeleton.size();
    const int n = p.size();
    if (static_cast<int>(pinned.size()) != m || static_cast<int>(min_size.size()) != m)
        throw std::invalid_argument("decompose: constraint vectors must match skeleton size");

    // maximal run of consecutive increasing values starting at each position
    std::vector<int> max_run(static_cast<size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        max_run[static_cast<size_t>(i)] = 1;
        if (i + 1 < n && p.at(i + 1) == p.at(i) + 1)
            max_run[static_cast<size_t>(i)] = max_run[static_cast<size_t>(i) + 1] + 1;
    }
    std::vector<int> min_tail(static_cast<size_t>(m) + 1, 0);
    for (int i = m - 1; i >= 0; --i)
        min_tail[static_cast<size_t>(i)] =
            min_tail[static_cast<size_t>(i) + 1] + (pinned[static_cast<size_t>(i)] >= 0 ? pinned[static_cast<size_t>(i)] : min_size[static_cast<size_t>(i)]);

    std::vector<int> sizes(static_cast<size_t>(m), 0);
    std::function<bool(int, int)> assign = [&](int block, int pos) -> bool {
        if (block == m) return pos == n && inflate_identity_blocks(skeleton, sizes) == p;
        const int remaining = n - pos;
        if (remaining < min_tail[static_cast<size_t>(block)]) return false;
        const int pin = pinned[static_cast<size_t>(block)];
        const int lo = pin >= 0 ? pin : min_size[static_cast<size_t>(block)];
        int hi = pin >= 0 ? pin : remaining - min_tail[static_cast<size_t>(block) + 1];
        if (lo > 0) hi = std::min(hi, pos < n ? max_run[static_cast<size_t>(pos)] : 0);
        // larger earlier blocks are preferred when a run could split two ways
        for (int s = hi; s >= lo; --s) {
            if (s > 0 && (pos + s > n || max_run[static_cast<size_t>(pos)] < s)) continue;
            sizes[static_cast<size_t>(block)] = s;
            if (assign(block + 1, pos + s)) return true;
        }
        return false;
    };
    if (!assign(0, 0)) return std::nullopt;
    return sizes;
}

namespace {

const Permutation& skeleton_pattern(Skeleton s) {
    static const Permutation p1324 = Permutation({1, 3, 2, 4});
    static const Permutation p2413 = Permutation({2, 4, 1, 3});
    static const Permutation p13524 = Permutation({1, 3, 5, 2, 4});
    static const Permutation p135246 = Permutation({1, 3, 5, 2, 4, 6});
    static const Permutation p24135 = Permutation({2, 4, 1, 3, 5});
    static const Permutation p245136 = Permutation({2, 4, 5, 1, 3, 6});
    switch (s) {
        case Skeleton::S1324: return p1324;
        case Skeleton::S2413: return p2413;
        case Skeleton::S13524: return p13524;
        case Skeleton::S135246: return p135246;
        case Skeleton::S24135: return p24135;
        case Skeleton::Lambda3412: return p135246;
        case Skeleton::Lambda1423: return p245136;
    }
    throw std::logic_error("unknown skeleton");
}

struct SkeletonShape {
    std::vector<int> pinned;    // -1 = free
    std::vector<int> min_size;  // for free blocks
    std::vector<int> free_idx;  // positions of the four free blocks
};

SkeletonShape skeleton_shape(Skeleton s) {
    switch (s) {
        case Skeleton::S1324:
            return {{-1, -1, -1, -1}, {0, 1, 1, 0}, {0, 1, 2, 3}};
        case Skeleton::S2413:
            return {{-1, -1, -1, -1}, {1, 0, 1, 1}, {0, 1, 2, 3}};
        case Skeleton::S13524:
            return {{-1, -1, -1, -1, 1}, {1, 1, 0, 1, 0}, {0, 1, 2, 3}};
        case Skeleton::S135246:
            return {{-1, 1, 1, -1, -1, -1}, {1, 0, 0, 1, 1, 0}, {0, 3, 4, 5}};
        case Skeleton::S24135:
            return {{-1, -1, -1, 1, -1}, {1, 1, 0, 0, 0}, {0, 1, 2, 4}};
        case Skeleton::Lambda3412:
            return {{-1, -1, 1, 1, -1, -1}, {0, 0, 0, 0, 0, 0}, {0, 1, 4, 5}};
        case Skeleton::Lambda1423:
            return {{-1, -1, 1, -1, 1, -1}, {0, 0, 0, 0, 0, 0}, {0, 1, 3, 5}};
    }
    throw std::logic_error("unknown skeleton");
}

}  // namespace

std::optional<InflationDecomposition> decompose_inflation(const Permutation& p, Skeleton s) {
    const Permutation& pat = skeleton_pattern(s);
    const SkeletonShape shape = skeleton_shape(s);
    auto sizes = decompose_identity_blocks(p, pat, shape.pinned, shape.min_size);
    if (!sizes) return std::nullopt;
    InflationDecomposition out;
    out.skeleton = s;
    for (int idx : shape.free_idx) out.block_sizes.push_back((*sizes)[static_cast<size_t>(idx)]);
    return out;
}

std::vector<Permutation> enumerate_grassmannian(int n) {
    if (n < 0) throw std::invalid_argument("negative size");
    if (n > 25) throw std::invalid_argument("enumeration is limited to n <= 25");
    std::vector<Permutation> out;
    if (n == 0) {
        out.push_back(Permutation());
        return out;
    }
    out.reserve((1u << n) - static_cast<unsigned>(n));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // skip first-run sets {1..k}, k >= 1: they all rebuild the identity
        if (mask != 0 && (mask & (mask + 1)) == 0) continue;
        std::vector<int> vals;
        vals.reserve(static_cast<size_t>(n));
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) vals.push_back(v);
        for (int v = 1; v <= n; ++v)
            if (!(mask & (1u << (v - 1)))) vals.push_back(v);
        out.push_back(Permutation(std::move(vals)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_avoiders(int n, const Permutation& sigma,
                                            std::optional<Parity> parity,
                                            bool exclude_identity) {
    std::vector<Permutation> out;
    for (const Permutation& p : enumerate_grassmannian(n)) {
        if (exclude_identity && is_identity(p)) continue;
        if (parity && parity_of(p) != *parity) continue;
        if (contains_pattern(p, sigma)) continue;
        out.push_back(p);
    }
    return out;
}

std::vector<Permutation> one_descent_patterns(int k) {
    std::vector<Permutation> out;
    for (const Permutation& p : enumerate_grassmannian(k))
        if (!is_identity(p)) out.push_back(p);
    return out;
}

}  // namespace gperm
