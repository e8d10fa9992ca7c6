#ifndef GPERM_DYCK_HPP
#define GPERM_DYCK_HPP

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gperm/perm.hpp"

namespace gperm {

/* A Dyck path as a U/D step string: every prefix has #U >= #D and the totals
 * are equal.  Lexicographic order with U < D (which std::string gives). */
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::string steps);  // validates, throws std::invalid_argument
    static DyckPath parse(std::string_view text);

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    const std::string& steps() const { return steps_; }

    bool operator==(const DyckPath&) const = default;
    std::strong_ordering operator<=>(const DyckPath& other) const {
        const size_t m = std::min(steps_.size(), other.steps_.size());
        for (size_t i = 0; i < m; ++i)
            if (steps_[i] != other.steps_[i])
                return steps_[i] == 'U' ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
        return steps_.size() <=> other.steps_.size();
    }

private:
    std::string steps_;
};

/* A peak is a UD factor, a valley a DU factor; heights are taken at the apex
 * or nadir vertex.  A long ascent/descent is a maximal run of >= 2 equal
 * steps. */
struct PathStats {
    int peak_count = 0;
    std::vector<int> peak_heights;
    std::vector<int> valley_heights;
    std::vector<int> peak_positions;       // step index of each peak's U step
    int long_ascent_count = 0;
    int long_descent_count = 0;
    int peaks_at_even_height = 0;
    int index_of_last_long_descent = -1;   // index of that run's final step
};

PathStats path_stats(const DyckPath& path);

/* Grassmannian path: at most one long ascent. */
bool is_grassmannian(const DyckPath& path);

/* Odd iff the number of peaks at even height is odd.
 * Throws std::domain_error for non-Grassmannian paths. */
Parity parity_class(const DyckPath& path);

std::vector<DyckPath> enumerate_dyck(int n);
void for_each_dyck(int n, const std::function<void(const DyckPath&)>& visit);

enum class PathCharacterization {
    BeginsLongAscentOneLongDescent,           // counts odd avoiders of 132
    OneLongAscentOneLongDescentNoPeakAfter,   // 213
    NoValleyAboveZero,                        // 312
    NoPeakAboveTwo,                           // 231
};

/* Structural property alone; parity/Grassmannian filtering is separate. */
bool satisfies(const DyckPath& path, PathCharacterization c);

/* Odd Grassmannian paths of semilength n with the given property. */
std::vector<DyckPath> enumerate_characterized(int n, PathCharacterization c);
long long count_characterized(int n, PathCharacterization c);

}  // namespace gperm

#endif
