#include "gperm/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace gperm {

namespace {

void validate_steps(const std::string& s) {
    int h = 0;
    for (char c : s) {
        if (c == 'U')
            ++h;
        else if (c == 'D')
            --h;
        else
            throw std::invalid_argument("Dyck path steps must be 'U' or 'D'");
        if (h < 0) throw std::invalid_argument("Dyck path dips below the start");
    }
    if (h != 0) throw std::invalid_argument("Dyck path must return to height zero");
}

}  // namespace

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) { validate_steps(steps_); }

DyckPath DyckPath::parse(std::string_view text) { return DyckPath(std::string(text)); }

PathStats path_stats(const DyckPath& path) {
    const std::string& s = path.steps();
    PathStats st;
    int h = 0;
    size_t run_start = 0;
    auto close_run = [&](size_t end) {  // run covers steps [run_start, end)
        if (end - run_start < 2) return;
        if (s[run_start] == 'U') {
            ++st.long_ascent_count;
        } else {
            ++st.long_descent_count;
            st.index_of_last_long_descent = static_cast<int>(end) - 1;
        }
    };
    for (size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && s[i] != s[i - 1]) {
            close_run(i);
            run_start = i;
        }
        if (i + 1 < s.size() && s[i] == 'U' && s[i + 1] == 'D') {
            const int apex = h + 1;
            ++st.peak_count;
            st.peak_heights.push_back(apex);
            st.peak_positions.push_back(static_cast<int>(i));
            if (apex % 2 == 0) ++st.peaks_at_even_height;
        }
        if (i + 1 < s.size() && s[i] == 'D' && s[i + 1] == 'U')
            st.valley_heights.push_back(h - 1);
        h += s[i] == 'U' ? 1 : -1;
    }
    close_run(s.size());
    return st;
}

bool is_grassmannian(const DyckPath& path) { return path_stats(path).long_ascent_count <= 1; }

Parity parity_class(const DyckPath& path) {
    const PathStats st = path_stats(path);
    if (st.long_ascent_count > 1)
        throw std::domain_error("parity_class requires a Grassmannian path");
    return st.peaks_at_even_height % 2 == 0 ? Parity::Even : Parity::Odd;
}

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit) {
    if (n < 0) throw std::invalid_argument("negative semilength");
    std::string steps(static_cast<size_t>(2 * n), ' ');
    // U before D gives lexicographic order
    std::function<void(int, int, int)> grow = [&](int pos, int ups, int downs) {
        if (pos == 2 * n) {
            visit(DyckPath(steps));
            return;
        }
        if (ups < n) {
            steps[static_cast<size_t>(pos)] = 'U';
            grow(pos + 1, ups + 1, downs);
        }
        if (downs < ups) {
            steps[static_cast<size_t>(pos)] = 'D';
            grow(pos + 1, ups, downs + 1);
        }
    };
    grow(0, 0, 0);
}

std::vector<DyckPath> enumerate_dyck(int n) {
    std::vector<DyckPath> out;
    for_each_dyck(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

bool satisfies(const DyckPath& path, PathCharacterization c) {
    const PathStats st = path_stats(path);
    const std::string& s = path.steps();
    switch (c) {
        case PathCharacterization::BeginsLongAscentOneLongDescent:
            return s.size() >= 2 && s[0] == 'U' && s[1] == 'U' && st.long_descent_count == 1;
        case PathCharacterization::OneLongAscentOneLongDescentNoPeakAfter: {
            if (st.long_ascent_count != 1 || st.long_descent_count != 1) return false;
            for (int pos : st.peak_positions)
                if (pos > st.index_of_last_long_descent) return false;
            return true;
        }
        case PathCharacterization::NoValleyAboveZero:
            return std::all_of(st.valley_heights.begin(), st.valley_heights.end(),
                               [](int h) { return h == 0; });
        case PathCharacterization::NoPeakAboveTwo:
            return std::all_of(st.peak_heights.begin(), st.peak_heights.end(),
                               [](int h) { return h <= 2; });
    }
    throw std::logic_error("unknown characterization");
}

std::vector<DyckPath> enumerate_characterized(int n, PathCharacterization c) {
    std::vector<DyckPath> out;
    for_each_dyck(n, [&](const DyckPath& p) {
        const PathStats st = path_stats(p);
        if (st.long_ascent_count > 1) return;
        if (st.peaks_at_even_height % 2 == 0) return;
        if (satisfies(p, c)) out.push_back(p);
    });
    return out;
}

long long count_characterized(int n, PathCharacterization c) {
    return static_cast<long long>(enumerate_characterized(n, c).size());
}

}  // namespace gperm
