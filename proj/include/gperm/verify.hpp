#ifndef GPERM_VERIFY_HPP
#define GPERM_VERIFY_HPP

#include <string>
#include <vector>

namespace gperm {

struct SuiteResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> messages;  // one per failure (capped)
};

/* Exhaustive cross-checks of everything the library claims, each suite capped
 * at its own documented range, further capped by n_max. */
SuiteResult verify_perm_core(int n_max);
SuiteResult verify_formulas(int n_max);
SuiteResult verify_generating_functions(int n_max);
SuiteResult verify_dyck_paths(int n_max);
SuiteResult verify_bijections(int n_max);
SuiteResult verify_partitions_graphs(int n_max);

std::vector<SuiteResult> run_verification(const std::string& suite, int n_max);
std::vector<std::string> verification_suite_names();

}  // namespace gperm

#endif
