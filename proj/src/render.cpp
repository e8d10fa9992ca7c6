#include "gperm/render.hpp"

#include <algorithm>

namespace gperm {

std::string render_dyck(const DyckPath& path) {
    const std::string& s = path.steps();
    if (s.empty()) return "(empty path)\n";
    int h = 0, max_h = 0;
    for (char c : s) {
        h += c == 'U' ? 1 : -1;
        max_h = std::max(max_h, h);
    }
    std::vector<std::string> rows(static_cast<size_t>(max_h), std::string(s.size(), ' '));
    h = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'U') {
            rows[static_cast<size_t>(max_h - h - 1)][i] = '/';
            ++h;
        } else {
            rows[static_cast<size_t>(max_h - h)][i] = '\\';
            --h;
        }
    }
    std::string out;
    for (const std::string& row : rows) {
        size_t end = row.find_last_not_of(' ');
        out += row.substr(0, end + 1);
        out += '\n';
    }
    return out;
}

std::string render_ferrers(const FerrersPartition& q) {
    std::string out;
    for (int part : q.parts) {
        for (int i = 0; i < part; ++i) {
            if (i > 0) out += ' ';
            out += 'o';
        }
        out += '\n';
    }
    return out;
}

std::string render_multidigraph(const Multidigraph2& g) {
    auto loops = [](int c) { return c == 0 ? std::string(".") : std::string(static_cast<size_t>(c), '@'); };
    std::string out = "(" + std::to_string(g.left_loops) + "," + std::to_string(g.lr_edges) + "," +
                      std::to_string(g.rl_edges) + "," + std::to_string(g.right_loops) + ")\n";
    out += "  loops " + loops(g.left_loops) + "  (L) ==" + std::to_string(g.lr_edges) +
           "==> (R)  loops " + loops(g.right_loops) + "\n";
    out += "            (L) <==" + std::to_string(g.rl_edges) + "== (R)\n";
    return out;
}

}  // namespace gperm
