#include "gperm/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gperm {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

const Permutation& pat(const char* digits) {
    static std::map<std::string, Permutation> cache;
    auto [it, inserted] = cache.try_emplace(digits);
    if (inserted) it->second = Permutation::parse(digits);
    return it->second;
}

std::vector<int> range_values(int lo, int hi) {  // lo..hi inclusive, empty when lo > hi
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

void append_range(std::vector<int>& out, int lo, int hi) {
    for (int v = lo; v <= hi; ++v) out.push_back(v);
}

}  // namespace

std::string WeakComp4::str() const {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + "," + std::to_string(t[3]) + ")";
}

WeakComp4 reversed(const WeakComp4& u) { return {{u[3], u[2], u[1], u[0]}}; }

bool is_symmetric(const WeakComp4& u) { return u == reversed(u); }

bool is_minimal(const WeakComp4& u) {
    return u[0] < u[3] || (u[0] == u[3] && u[1] < u[2]);
}

std::string CompClass::str() const { return "[" + rep.str() + "]"; }

CompClass class_canonical(const WeakComp4& u) {
    CompClass c;
    c.symmetric = is_symmetric(u);
    c.rep = (c.symmetric || is_minimal(u)) ? u : reversed(u);
    return c;
}

std::vector<CompClass> composition_classes(int m) {
    if (m < 0) throw std::invalid_argument("negative composition size");
    std::set<WeakComp4> reps;
    for (int a = 0; a <= m; ++a)
        for (int b = 0; a + b <= m; ++b)
            for (int c = 0; a + b + c <= m; ++c)
                reps.insert(class_canonical(WeakComp4{{a, b, c, m - a - b - c}}).rep);
    std::vector<CompClass> out;
    for (const WeakComp4& r : reps) out.push_back(class_canonical(r));
    return out;
}

std::optional<WeakComp4> phi_step(const WeakComp4& t) {
    if (t[2] % 2 == 0 && t[3] > 0) return WeakComp4{{t[0], t[1], t[2] + 1, t[3] - 1}};
    if (t[2] % 2 == 0) {
        if (t[0] == 0) return std::nullopt;
        return WeakComp4{{t[0] - 1, t[1] + 1, t[2], t[3]}};
    }
    return WeakComp4{{t[0], t[1], t[2] - 1, t[3] + 1}};
}

std::optional<WeakComp4> phi_step_inverse(const WeakComp4& u) {
    if (u[2] % 2 == 1) return WeakComp4{{u[0], u[1], u[2] - 1, u[3] + 1}};
    if (u[3] == 0) {
        if (u[1] == 0) return std::nullopt;
        return WeakComp4{{u[0] + 1, u[1] - 1, u[2], u[3]}};
    }
    return WeakComp4{{u[0], u[1], u[2] + 1, u[3] - 1}};
}

std::optional<WeakComp4> psi_step(const WeakComp4& t) {
    if (t[0] > 0) return WeakComp4{{t[0] - 1, t[1] + 1, t[2], t[3]}};
    if (t[3] == 0) return std::nullopt;
    return WeakComp4{{t[1], 0, t[2] + 1, t[3] - 1}};
}

std::optional<WeakComp4> psi_step_inverse(const WeakComp4& u) {
    if (u[1] > 0) return WeakComp4{{u[0] + 1, u[1] - 1, u[2], u[3]}};
    if (u[2] == 0) return std::nullopt;
    return WeakComp4{{0, u[0], u[2] - 1, u[3] + 1}};
}

/* ---- block-size bijections for the 3412 and 1423 shapes ---- */

Permutation lambda_3412_inverse(const WeakComp4& t, int n) {
    require(t[0] >= 0 && t[1] >= 0 && t[2] >= 0 && t[3] >= 0, "negative block size");
    require(t.sum() == n - 2, "block sizes must sum to n-2");
    // values bottom-up: tau1, descent bottom, tau2, tau3, descent top, tau4
    const int bottom = t[0] + 1;
    const int top = t[0] + t[1] + t[2] + 2;
    std::vector<int> v;
    append_range(v, 1, t[0]);                      // tau1
    append_range(v, bottom + 1, bottom + t[1]);    // tau2
    v.push_back(top);
    v.push_back(bottom);
    append_range(v, bottom + t[1] + 1, top - 1);   // tau3
    append_range(v, top + 1, n);                   // tau4
    return Permutation(std::move(v));
}

WeakComp4 lambda_3412(const Permutation& p) {
    const int n = p.size();
    require(n >= 2, "block decomposition needs size >= 2");
    const auto prof = grassmannian_profile(p);
    require(prof.has_value() && prof->descent_count == 1,
            "block decomposition needs a Grassmannian non-identity permutation");
    const int t1 = prof->descent_bottom - 1;
    const int t4 = n - prof->descent_top;
    const int t2 = prof->descent_position - t1;
    const int t3 = (n - 2) - t1 - t2 - t4;
    WeakComp4 t{{t1, t2, t3, t4}};
    require(t1 >= 0 && t2 >= 0 && t3 >= 0 && t4 >= 0 && lambda_3412_inverse(t, n) == p,
            "permutation does not fit the 3412 avoider shape");
    return t;
}

Permutation lambda_1423_inverse(const WeakComp4& t, int n) {
    require(t[0] >= 0 && t[1] >= 0 && t[2] >= 0 && t[3] >= 0, "negative block size");
    require(t.sum() == n - 2, "block sizes must sum to n-2");
    // values bottom-up: tau3, tau1, descent bottom-run end l, tau2, k, tau4
    const int l = t[2] + t[0] + 1;
    const int k = l + t[1] + 1;
    std::vector<int> v;
    append_range(v, t[2] + 1, t[2] + t[0]);  // tau1
    append_range(v, l + 1, l + t[1]);        // tau2
    v.push_back(k);
    append_range(v, 1, t[2]);                // tau3
    v.push_back(l);
    append_range(v, k + 1, n);               // tau4
    return Permutation(std::move(v));
}

WeakComp4 lambda_1423(const Permutation& p) {
    const int n = p.size();
    require(n >= 2, "block decomposition needs size >= 2");
    const auto prof = grassmannian_profile(p);
    require(prof.has_value() && prof->descent_count == 1,
            "block decomposition needs a Grassmannian non-identity permutation");
    const int k = prof->descent_top;
    const int t4 = n - k;
    const int below = static_cast<int>(prof->run2.size()) - t4;  // tau3 plus l
    require(below >= 1, "permutation does not fit the 1423 avoider shape");
    const int l = prof->run2[static_cast<size_t>(below) - 1];
    const int t3 = below - 1;
    const int t1 = l - t3 - 1;
    const int t2 = prof->descent_position - t1;
    WeakComp4 t{{t1, t2, t3, t4}};
    require(t1 >= 0 && t2 >= 0 && lambda_1423_inverse(t, n) == p,
            "permutation does not fit the 1423 avoider shape");
    return t;
}

/* ---- alpha: even 312-avoiders of [n] -> odd 312-avoiders of [n-1] ---- */

Permutation alpha_312(const Permutation& p) {
    const int n = p.size();
    require(n >= 2, "alpha needs size >= 2");
    require(!is_identity(p) && parity_of(p) == Parity::Even,
            "alpha needs an even non-identity permutation");
    require(!contains_pattern(p, pat("312")), "alpha needs a 312-avoider");
    const auto prof = grassmannian_profile(p);
    require(prof.has_value() && prof->descent_count == 1, "alpha needs a Grassmannian input");
    const int d = prof->descent_position;
    const int m = prof->descent_top;
    std::vector<int> v = p.values();
    if (m == n) {
        v.erase(v.begin() + d);
    } else {
        // the maximum sits at the end; drop it and tuck the descent top
        // in right after the descent bottom
        v.pop_back();
        v.erase(v.begin() + d);
        v.insert(v.begin() + d + 1, m);
    }
    return Permutation(std::move(v));
}

Permutation alpha_312_inverse(const Permutation& p) {
    const int n = p.size();
    require(n >= 1, "alpha inverse needs a nonempty permutation");
    require(parity_of(p) == Parity::Odd, "alpha inverse needs an odd permutation");
    require(!contains_pattern(p, pat("312")), "alpha inverse needs a 312-avoider");
    const auto prof = grassmannian_profile(p);
    require(prof.has_value() && prof->descent_count == 1, "alpha inverse needs a Grassmannian input");
    const int pos_bottom = prof->descent_position + 1;
    std::vector<int> v = p.values();
    if (pos_bottom == n - 1) {
        v.insert(v.end() - 1, n + 1);
    } else {
        const int moved = v[static_cast<size_t>(pos_bottom) + 1];
        v.erase(v.begin() + pos_bottom + 1);
        v.insert(v.begin() + pos_bottom, moved);
        v.push_back(n + 1);
    }
    return Permutation(std::move(v));
}

/* ---- gamma: even 1243-avoiders of [n-1] -> odd 1243-avoiders of [n] ---- */

namespace {

/* Run structure of a non-identity 1243-avoiding Grassmannian permutation.
 * The first run is {j} followed by an interval ending at the descent top;
 * three cases by how j attaches: j = 1, j isolated below the interval, or
 * j extending the interval downward. */
struct Shape1243 {
    enum Kind { LeadOne, Isolated, Interval } kind;
    int ell;       // largest second-run value below the descent top
    int tau1_len;  // length of the first-run interval excluding j and the top
    int descent;   // 0-based descent index
};

Shape1243 analyze_1243(const Permutation& p) {
    const auto prof = grassmannian_profile(p);
    require(prof.has_value() && prof->descent_count == 1, "shape needs exactly one descent");
    const std::vector<int>& run1 = prof->run1;
    const int k = prof->descent_top;
    int ell = 0;
    for (int v : prof->run2)
        if (v < k) ell = v;
    require(ell >= 1, "shape needs a second-run value below the descent top");
    Shape1243 s;
    s.ell = ell;
    s.descent = prof->descent_position;
    const int j = run1.front();
    if (j == 1) {
        s.kind = Shape1243::LeadOne;
        s.tau1_len = static_cast<int>(run1.size()) - 2;
    } else if (run1.size() == 1 || run1[1] == j + 1) {
        s.kind = Shape1243::Interval;
        s.tau1_len = static_cast<int>(run1.size()) - 1;
    } else {
        s.kind = Shape1243::Isolated;
        s.tau1_len = static_cast<int>(run1.size()) - 2;
    }
    return s;
}

}  // namespace

/* The insertion rules apply to either parity and always flip it; the
 * bijection statement concerns the restriction to even inputs. */
Permutation gamma_1243(const Permutation& p) {
    require(p.size() >= 2, "gamma needs size >= 2");
    require(!is_identity(p), "gamma is undefined on the identity");
    require(is_grassmannian(p) && !contains_pattern(p, pat("1243")),
            "gamma needs a Grassmannian 1243-avoider");
    const Shape1243 s = analyze_1243(p);
    std::vector<int> v = p.values();
    std::vector<int> out;
    out.reserve(v.size() + 1);
    if (s.tau1_len % 2 == 0) {
        for (int& x : v)
            if (x > s.ell) ++x;
        for (int x : v) {
            out.push_back(x);
            if (x == s.ell) out.push_back(s.ell + 1);
        }
    } else if (s.kind != Shape1243::Interval) {
        for (int& x : v) ++x;
        out.assign(v.begin(), v.begin() + s.descent + 1);
        out.push_back(1);
        out.insert(out.end(), v.begin() + s.descent + 1, v.end());
    } else {
        for (int& x : v)
            if (x > s.ell + 1) ++x;
        for (int x : v) {
            out.push_back(x);
            if (x == s.ell) out.push_back(s.ell + 2);
        }
    }
    return Permutation(std::move(out));
}

Permutation gamma_1243_inverse(const Permutation& q) {
    require(q.size() >= 3, "gamma inverse needs size >= 3");
    require(is_grassmannian(q) && !contains_pattern(q, pat("1243")),
            "gamma inverse needs a Grassmannian 1243-avoider");
    require(!is_identity(q), "gamma inverse is undefined on the identity");
    require(!in_exceptional_set(ExceptionalFamily::B1243, q),
            "gamma inverse is undefined on the exceptional elements");
    const Parity source_parity = opposite(parity_of(q));

    auto consider = [&](std::vector<int> vals) -> std::optional<Permutation> {
        Permutation cand;
        try {
            cand = Permutation(std::move(vals));
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
        if (is_identity(cand) || parity_of(cand) != source_parity) return std::nullopt;
        if (!is_grassmannian(cand) || contains_pattern(cand, pat("1243"))) return std::nullopt;
        try {
            if (gamma_1243(cand) == q) return cand;
        } catch (const std::domain_error&) {
        }
        return std::nullopt;
    };

    std::vector<Permutation> found;
    const auto prof = grassmannian_profile(q);
    // insertion rule 2 put the value 1 right after the descent
    if (prof && prof->descent_count == 1 && prof->descent_bottom == 1) {
        std::vector<int> vals;
        for (int x : q.values())
            if (x != 1) vals.push_back(x - 1);
        if (auto c = consider(std::move(vals))) found.push_back(*c);
    }
    // rules 1 and 3 put a new value right after its positional predecessor
    {
        const Shape1243 sq = analyze_1243(q);
        int pos = -1;
        for (int i = 0; i < q.size(); ++i)
            if (q.at(i) == sq.ell) pos = i;
        if (pos > 0 && (q.at(pos - 1) == sq.ell - 1 || q.at(pos - 1) == sq.ell - 2)) {
            std::vector<int> vals;
            for (int x : q.values()) {
                if (x == sq.ell) continue;
                vals.push_back(x > sq.ell ? x - 1 : x);
            }
            if (auto c = consider(std::move(vals))) found.push_back(*c);
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    require(!found.empty(), "gamma inverse: input is outside the image");
    require(found.size() == 1, "gamma inverse: preimage is not unique");
    return found.front();
}

/* ---- conjugated tuple maps ---- */

Permutation phi_3412(const Permutation& p) {
    require(parity_of(p) == Parity::Odd, "phi needs an odd permutation");
    require(!contains_pattern(p, pat("3412")), "phi needs a 3412-avoider");
    const WeakComp4 t = lambda_3412(p);
    const auto u = phi_step(t);
    require(u.has_value(), "phi is undefined on this permutation");
    return lambda_3412_inverse(*u, p.size());
}

Permutation phi_3412_inverse(const Permutation& p) {
    require(parity_of(p) == Parity::Even, "phi inverse needs an even permutation");
    require(!contains_pattern(p, pat("3412")), "phi inverse needs a 3412-avoider");
    const WeakComp4 u = lambda_3412(p);
    const auto t = phi_step_inverse(u);
    require(t.has_value(), "phi inverse is undefined on this permutation");
    Permutation out = lambda_3412_inverse(*t, p.size());
    require(parity_of(out) == Parity::Odd, "phi inverse produced an even permutation");
    return out;
}

Permutation psi_1423(const Permutation& p) {
    require(parity_of(p) == Parity::Odd, "psi needs an odd permutation");
    require(!contains_pattern(p, pat("1423")), "psi needs a 1423-avoider");
    const WeakComp4 t = lambda_1423(p);
    const auto u = psi_step(t);
    require(u.has_value(), "psi is undefined on this permutation");
    return lambda_1423_inverse(*u, p.size());
}

Permutation psi_1423_inverse(const Permutation& p) {
    require(parity_of(p) == Parity::Even, "psi inverse needs an even permutation");
    require(!contains_pattern(p, pat("1423")), "psi inverse needs a 1423-avoider");
    const WeakComp4 u = lambda_1423(p);
    const auto t = psi_step_inverse(u);
    require(t.has_value(), "psi inverse is undefined on this permutation");
    Permutation out = lambda_1423_inverse(*t, p.size());
    require(parity_of(out) == Parity::Odd, "psi inverse produced an even permutation");
    return out;
}

/* ---- inflation-block bijections onto odd 1324- and 1342-avoiders ---- */

namespace {

std::vector<int> demand_blocks(const Permutation& p, const Permutation& skeleton,
                               const std::vector<int>& pinned, const std::vector<int>& mins,
                               const char* msg) {
    auto sizes = decompose_identity_blocks(p, skeleton, pinned, mins);
    require(sizes.has_value(), msg);
    return *sizes;
}

}  // namespace

Permutation phi1_1324(const Permutation& p) {
    require(p.size() % 2 == 1, "this map acts on odd sizes");
    require(parity_of(p) == Parity::Odd, "input must be odd");
    require(!contains_pattern(p, pat("2413")), "input must avoid 2413");
    if (!contains_pattern(p, pat("1324"))) return p;
    const auto k = demand_blocks(p, pat("1324"), {-1, -1, -1, -1}, {1, 1, 1, 1},
                                 "input does not fit the 1324 block shape");
    return inflate_identity_blocks(pat("2413"), {k[1], k[0], k[3], k[2]});
}

Permutation phi1_1324_inverse(const Permutation& q) {
    require(q.size() % 2 == 1, "this map acts on odd sizes");
    require(parity_of(q) == Parity::Odd, "input must be odd");
    require(!contains_pattern(q, pat("1324")), "input must avoid 1324");
    if (!contains_pattern(q, pat("2413"))) return q;
    const auto a = demand_blocks(q, pat("2413"), {-1, -1, -1, -1}, {1, 1, 1, 1},
                                 "input does not fit the 2413 block shape");
    return inflate_identity_blocks(pat("1324"), {a[1], a[0], a[3], a[2]});
}

Permutation phi2_1324(const Permutation& p) {
    require(p.size() % 2 == 0, "this map acts on even sizes");
    require(parity_of(p) == Parity::Odd, "input must be odd");
    require(!contains_pattern(p, pat("2134")), "input must avoid 2134");
    if (!contains_pattern(p, pat("1324"))) return p;
    const auto s = demand_blocks(p, pat("13524"), {-1, -1, -1, -1, 1}, {1, 1, 0, 1, 0},
                                 "input does not fit the 13524 block shape");
    const int k1 = s[0], k2 = s[1], k3 = s[2], k4 = s[3];
    if (k3 % 2 != k4 % 2) return inflate_identity_blocks(pat("2413"), {k2, k3, k1, k4 + 1});
    require(k3 % 2 == 1 && k4 % 2 == 1 && k1 >= 2, "unexpected block parities");
    return inflate_identity_blocks(pat("2413"), {k2 + 1, k3, k1 - 1, k4 + 1});
}

Permutation phi2_1324_inverse(const Permutation& q) {
    require(q.size() % 2 == 0, "this map acts on even sizes");
    require(parity_of(q) == Parity::Odd, "input must be odd");
    require(!contains_pattern(q, pat("1324")), "input must avoid 1324");
    if (!contains_pattern(q, pat("2134"))) return q;
    const auto a = demand_blocks(q, pat("2413"), {-1, -1, -1, -1}, {1, 0, 1, 2},
                                 "input does not fit the 2413 block shape");
    int k1 = 0, k2 = 0, k3 = 0, k4 = 0;
    if (a[1] % 2 != (a[3] - 1) % 2) {
        k1 = a[2], k2 = a[0], k3 = a[1], k4 = a[3] - 1;
    } else {
        require(a[1] % 2 == 1, "block parities identify no source case");
        k1 = a[2] + 1, k2 = a[0] - 1, k3 = a[1], k4 = a[3] - 1;
    }
    require(k1 >= 1 && k2 >= 1 && k4 >= 1 && k3 >= 0, "reconstructed blocks out of range");
    Permutation out = inflate_identity_blocks(pat("13524"), {k1, k2, k3, k4, 1});
    require(phi2_1324(out) == q, "inverse failed to re-create the input");
    return out;
}

Permutation psi1_1342(const Permutation& p) {
    require(p.size() % 2 == 1, "this map acts on odd sizes");
    require(parity_of(p) == Parity::Odd, "input must be odd");
    require(!contains_pattern(p, pat("2341")), "input must avoid 2341");
    if (!contains_pattern(p, pat("1342"))) return p;
    const auto s = demand_blocks(p, pat("135246"), {-1, 1, 1, -1, -1, -1}, {1, 0, 0, 1, 1, 0},
                                 "input does not fit the 135246 block shape");
    const int k1 = s[0], k2 = s[3], k3 = s[4], k4 = s[5];
    require(k3 % 2 == 1, "unexpected block parities");
    if ((k1 * k2) % 2 == 0) return inflate_identity_blocks(pat("24135"), {k2 + 1, 1, k1, k3, k4});
    return inflate_identity_blocks(pat("24135"), {k2 + 1, 1, k1, k3 - 1, k4 + 1});
}

Permutation psi1_1342_inverse(const Permutation& q) {
    require(q.size() % 2 == 1, "this map acts on odd sizes");
    require(parity_of(q) == Parity::Odd, "input must be odd");
    require(!contains_pattern(q, pat("1342")), "input must avoid 1342");
    if (!contains_pattern(q, pat("2341"))) return q;
    const auto a = demand_blocks(q, pat("24135"), {-1, 1, -1, -1, -1}, {2, 0, 1, 0, 0},
                                 "input does not fit the 24135 block shape");
    int k1 = a[2], k2 = a[0] - 1, k3 = 0, k4 = 0;
    if (a[3] % 2 == 1) {
        k3 = a[3], k4 = a[4];
        require((k1 * k2) % 2 == 0, "block parities identify no source case");
    } else {
        require(a[4] >= 1, "reconstructed blocks out of range");
        k3 = a[3] + 1, k4 = a[4] - 1;
        require((k1 * k2) % 2 == 1, "block parities identify no source case");
    }
    Permutation out = inflate_identity_blocks(pat("135246"), {k1, 1, 1, k2, k3, k4});
    require(psi1_1342(out) == q, "inverse failed to re-create the input");
    return out;
}

Permutation psi2_1342(const Permutation& p) {
    require(p.size() % 2 == 0, "this map acts on even sizes");
    require(parity_of(p) == Parity::Odd, "input must be odd");
    require(!contains_pattern(p, pat("1423")), "input must avoid 1423");
    if (!contains_pattern(p, pat("1342"))) return p;
    const auto s = demand_blocks(p, pat("24135"), {-1, -1, -1, 1, -1}, {1, 2, 0, 0, 0},
                                 "input does not fit the 24135 block shape");
    const int k1 = s[0], k2 = s[1], k3 = s[2], k4 = s[4];
    if (k2 % 2 == 1) return inflate_identity_blocks(pat("24135"), {k1, 1, k3, k2, k4});
    require(k4 >= 1, "unexpected block sizes");
    return inflate_identity_blocks(pat("24135"), {k1 + 1, 1, k3, k2, k4 - 1});
}

Permutation psi2_1342_inverse(const Permutation& q) {
    require(q.size() % 2 == 0, "this map acts on even sizes");
    require(parity_of(q) == Parity::Odd, "input must be odd");
    require(!contains_pattern(q, pat("1342")), "input must avoid 1342");
    if (!contains_pattern(q, pat("1423"))) return q;
    const auto a = demand_blocks(q, pat("24135"), {-1, 1, -1, -1, -1}, {1, 0, 0, 2, 0},
                                 "input does not fit the 24135 block shape");
    int k1 = 0, k2 = a[3], k3 = a[2], k4 = 0;
    if (a[3] % 2 == 1) {
        k1 = a[0], k4 = a[4];
    } else {
        require(a[0] >= 2, "reconstructed blocks out of range");
        k1 = a[0] - 1, k4 = a[4] + 1;
    }
    Permutation out = inflate_identity_blocks(pat("24135"), {k1, k2, k3, 1, k4});
    require(psi2_1342(out) == q, "inverse failed to re-create the input");
    return out;
}

/* ---- exceptional sets ---- */

std::vector<Permutation> exceptional_set(ExceptionalFamily family, int n) {
    if (n < 2) throw std::invalid_argument("exceptional sets need n >= 2");
    std::vector<Permutation> out;
    switch (family) {
        case ExceptionalFamily::A2341: {
            out.push_back(Permutation::identity(n));
            for (int j = 2; j <= n - 1; ++j) {
                for (int l = 1; l < j; ++l) {
                    std::vector<int> v = range_values(1, l - 1);
                    v.push_back(j);
                    v.push_back(j + 1);
                    v.push_back(l);
                    append_range(v, l + 1, j - 1);
                    append_range(v, j + 2, n);
                    out.push_back(Permutation(std::move(v)));
                }
            }
            break;
        }
        case ExceptionalFamily::B1243: {
            for (int k = 3; k <= n; k += 2) {  // shape 1, 3..k, 2, rest; odd k
                std::vector<int> v = {1};
                append_range(v, 3, k);
                v.push_back(2);
                append_range(v, k + 1, n);
                out.push_back(Permutation(std::move(v)));
            }
            for (int k = 2; k <= n; k += 2) {  // shape 2..k, 1, rest; even k
                std::vector<int> v = range_values(2, k);
                v.push_back(1);
                append_range(v, k + 1, n);
                out.push_back(Permutation(std::move(v)));
            }
            break;
        }
        case ExceptionalFamily::A3412: {
            require(n % 2 == 0, "this exceptional set exists for even sizes only");
            for (int t2 = 0; t2 <= n - 2; t2 += 2)
                out.push_back(lambda_3412_inverse(WeakComp4{{0, t2, n - 2 - t2, 0}}, n));
            break;
        }
        case ExceptionalFamily::B1423: {
            require(n % 2 == 0, "this exceptional set exists for even sizes only");
            for (int t2 = 0; t2 <= n - 2; t2 += 2)
                out.push_back(lambda_1423_inverse(WeakComp4{{0, t2, n - 2 - t2, 0}}, n));
            break;
        }
        case ExceptionalFamily::E2413: {
            for (const Permutation& t : enumerate_avoiders(n - 1, pat("2413"), Parity::Odd, false))
                out.push_back(direct_sum(Permutation::identity(1), t));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_exceptional_set(ExceptionalFamily family, const Permutation& p) {
    if (p.size() < 2) return false;
    if ((family == ExceptionalFamily::A3412 || family == ExceptionalFamily::B1423) &&
        p.size() % 2 != 0)
        return false;
    const std::vector<Permutation> set = exceptional_set(family, p.size());
    return std::binary_search(set.begin(), set.end(), p);
}

/* ---- xi: odd 3412-avoiders of [n] -> composition classes of n-2 ---- */

WeakComp4 xi_3412(const Permutation& p) {
    const int n = p.size();
    require(n >= 2, "xi needs size >= 2");
    require(parity_of(p) == Parity::Odd, "xi needs an odd permutation");
    require(!contains_pattern(p, pat("3412")), "xi needs a 3412-avoider");
    const WeakComp4 t = lambda_3412(p);
    if (is_minimal(t)) return t;
    if (!is_symmetric(t)) {
        if (const auto u = phi_step(t)) return *u;
        // step undefined: t = (0, t2, t3, 0) with both parts even and t2 > t3
        const int t2 = t[1], t3 = t[2];
        if (n % 4 == 0)
            return (t2 / 2) % 2 == 1 ? WeakComp4{{t2 / 2, t3 / 2, t3 / 2, t2 / 2}}
                                     : WeakComp4{{t3 / 2, t2 / 2, t2 / 2, t3 / 2}};
        return (t2 / 2) % 2 == 0 ? WeakComp4{{t2 / 2, t3 / 2, t3 / 2, t2 / 2}}
                                 : WeakComp4{{t3 / 2 + 1, t2 / 2 - 1, t2 / 2 - 1, t3 / 2 + 1}};
    }
    const bool keep = (n % 4 == 0) ? t[0] % 2 == 0 : (t[0] % 2 == 1 || t[0] == 0);
    if (keep) return t;
    const auto u = phi_step(t);
    require(u.has_value(), "unexpected undefined step on a symmetric tuple");
    return *u;
}

CompClass xi_class(const Permutation& p) { return class_canonical(xi_3412(p)); }

Permutation xi_3412_inverse(const WeakComp4& any_rep, int n) {
    require(n >= 2, "xi inverse needs size >= 2");
    require(any_rep.sum() == n - 2, "class tuple must sum to n-2");
    const WeakComp4 u = any_rep;
    Permutation out;
    if (!is_symmetric(u) && u[1] % 2 == u[2] % 2) {
        out = lambda_3412_inverse(is_minimal(u) ? u : reversed(u), n);
    } else if (u[1] % 2 != u[2] % 2) {
        const auto v1 = phi_step_inverse(u);
        const auto v2 = phi_step_inverse(reversed(u));
        require(v1.has_value() && v2.has_value(), "unexpected undefined inverse step");
        if (!is_symmetric(*v1) && !is_symmetric(*v2)) {
            out = lambda_3412_inverse(is_minimal(*v1) ? *v2 : *v1, n);
        } else {
            const WeakComp4 w = is_minimal(u) ? reversed(u) : u;
            const auto v = phi_step_inverse(w);
            require(v.has_value(), "unexpected undefined inverse step");
            out = lambda_3412_inverse(*v, n);
        }
    } else {
        // u symmetric; the step image of u is minimal exactly when u2 is odd
        if (u[1] % 2 == 1) {
            out = lambda_3412_inverse(u, n);
        } else if (n % 4 == 0) {
            require(u[0] % 2 == 1, "class is not realizable for this size");
            const int k = (u[0] - 1) / 2, l = u[1] / 2;
            out = lambda_3412_inverse(k >= l ? WeakComp4{{0, 4 * k + 2, 4 * l, 0}}
                                             : WeakComp4{{0, 4 * l, 4 * k + 2, 0}},
                                      n);
        } else {
            require(n % 4 == 2 && u[0] % 2 == 0, "class is not realizable for this size");
            const int k = u[0] / 2, l = u[1] / 2;
            if (k == 0)
                out = lambda_3412_inverse(WeakComp4{{0, 2 * l, 2 * l, 0}}, n);
            else
                out = lambda_3412_inverse(k > l ? WeakComp4{{0, 4 * k, 4 * l, 0}}
                                                : WeakComp4{{0, 4 * l + 2, 4 * k - 2, 0}},
                                          n);
        }
    }
    require(class_canonical(xi_3412(out)) == class_canonical(any_rep),
            "xi inverse failed to re-create the class");
    return out;
}

}  // namespace gperm
