#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gperm/bijections.hpp"
#include "gperm/dyck.hpp"
#include "gperm/formulas.hpp"
#include "gperm/genfunc.hpp"
#include "gperm/partitions.hpp"
#include "gperm/perm.hpp"
#include "gperm/render.hpp"
#include "gperm/verify.hpp"

namespace {

using gperm::Parity;
using gperm::Permutation;
using ordered_json = nlohmann::ordered_json;

int size_cap() {
    if (const char* env = std::getenv("GPERM_MAX_N")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return 16;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_cap(int n) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (n > size_cap())
        throw UsageError("n exceeds the size cap " + std::to_string(size_cap()) +
                         " (override with GPERM_MAX_N)");
}

std::optional<Parity> parse_parity(const std::string& text) {
    if (text == "odd") return Parity::Odd;
    if (text == "even") return Parity::Even;
    if (text == "both") return std::nullopt;
    throw UsageError("parity must be odd, even or both");
}

long long formula_count(const Permutation& sigma, Parity parity, int n) {
    const std::string key = sigma.str();
    if (key == "123" || key == "1234")  // no closed form; the catalog row is literal
        return gperm::catalog_sequence(sigma, parity, n).back();
    return parity == Parity::Odd ? gperm::count_odd(sigma, n) : gperm::count_even(sigma, n);
}

std::vector<long long> sequence_by_source(const Permutation& sigma, Parity parity, int n_max,
                                          const std::string& source) {
    if (source == "enumerate") {
        std::vector<long long> out;
        for (int n = 1; n <= n_max; ++n)
            out.push_back(static_cast<long long>(
                gperm::enumerate_avoiders(n, sigma, parity, false).size()));
        return out;
    }
    if (source == "gf") return gperm::catalog_sequence(sigma, parity, n_max);
    if (source == "formula") {
        std::vector<long long> out;
        for (int n = 1; n <= n_max; ++n) out.push_back(formula_count(sigma, parity, n));
        return out;
    }
    throw UsageError("source must be formula, gf or enumerate");
}

std::string join_counts(const std::vector<long long>& seq) {
    std::string out;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

gperm::WeakComp4 parse_class(std::string text) {
    std::erase_if(text, [](char c) { return c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; });
    std::vector<int> nums;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t comma = text.find(',', start);
        const std::string token = text.substr(start, comma - start);
        if (token.empty()) throw UsageError("bad class tuple");
        nums.push_back(std::stoi(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (nums.size() != 4) throw UsageError("class tuple needs exactly four parts");
    return gperm::WeakComp4{{nums[0], nums[1], nums[2], nums[3]}};
}

int run_count(const Permutation& sigma, const std::string& parity_text, int n,
              const std::string& source, bool exclude_identity, const std::string& format) {
    check_cap(n);
    const auto parity = parse_parity(parity_text);
    long long count = 0;
    if (source == "enumerate" || !parity || exclude_identity) {
        count = static_cast<long long>(
            gperm::enumerate_avoiders(n, sigma, parity, exclude_identity).size());
    } else if (source == "formula") {
        count = formula_count(sigma, *parity, n);
    } else if (source == "gf") {
        count = gperm::catalog_sequence(sigma, *parity, n).back();
    } else {
        throw UsageError("source must be formula, gf or enumerate");
    }
    if (format == "json") {
        ordered_json out;
        out["n"] = n;
        out["pattern"] = sigma.str();
        out["parity"] = parity_text;
        out["count"] = count;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << count << "\n";
    }
    return 0;
}

int run_sequence(const Permutation& sigma, const std::string& parity_text, int n_max,
                 const std::string& source, const std::string& format) {
    check_cap(n_max);
    const auto parity = parse_parity(parity_text);
    if (!parity) throw UsageError("sequence needs --parity odd or even");
    const auto seq = sequence_by_source(sigma, *parity, n_max, source);
    if (format == "json") {
        ordered_json out;
        out["n"] = n_max;
        out["pattern"] = sigma.str();
        out["parity"] = parity_text;
        out["items"] = seq;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,count\n";
        for (size_t i = 0; i < seq.size(); ++i) std::cout << i + 1 << "," << seq[i] << "\n";
    } else {
        std::cout << join_counts(seq) << "\n";
    }
    return 0;
}

int run_list(int n, const std::optional<Permutation>& sigma, const std::string& parity_text,
             bool exclude_identity, const std::string& format) {
    check_cap(n);
    const auto parity = parse_parity(parity_text);
    std::vector<Permutation> items;
    if (sigma)
        items = gperm::enumerate_avoiders(n, *sigma, parity, exclude_identity);
    else
        for (const auto& p : gperm::enumerate_grassmannian(n)) {
            if (exclude_identity && gperm::is_identity(p)) continue;
            if (parity && gperm::parity_of(p) != *parity) continue;
            items.push_back(p);
        }
    if (format == "json") {
        ordered_json out;
        out["n"] = n;
        out["pattern"] = sigma ? sigma->str() : "";
        out["parity"] = parity_text;
        auto arr = ordered_json::array();
        for (const auto& p : items) arr.push_back(p.str());
        out["items"] = arr;
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "perm\n";
        for (const auto& p : items) std::cout << p.str() << "\n";
    } else {
        for (const auto& p : items) std::cout << p.str() << "\n";
    }
    return 0;
}

int run_map(const std::string& bijection, const std::string& perm_text,
            const std::string& class_text, const std::string& partition_text, int n) {
    using MapFn = Permutation (*)(const Permutation&);
    static const std::map<std::string, MapFn> perm_maps = {
        {"alpha", gperm::alpha_312},
        {"alpha-inverse", gperm::alpha_312_inverse},
        {"gamma", gperm::gamma_1243},
        {"gamma-inverse", gperm::gamma_1243_inverse},
        {"phi", gperm::phi_3412},
        {"phi-inverse", gperm::phi_3412_inverse},
        {"psi", gperm::psi_1423},
        {"psi-inverse", gperm::psi_1423_inverse},
        {"phi1", gperm::phi1_1324},
        {"phi1-inverse", gperm::phi1_1324_inverse},
        {"phi2", gperm::phi2_1324},
        {"phi2-inverse", gperm::phi2_1324_inverse},
        {"psi1", gperm::psi1_1342},
        {"psi1-inverse", gperm::psi1_1342_inverse},
        {"psi2", gperm::psi2_1342},
        {"psi2-inverse", gperm::psi2_1342_inverse},
    };

    if (auto it = perm_maps.find(bijection); it != perm_maps.end()) {
        if (perm_text.empty()) throw UsageError("this bijection needs --perm");
        std::cout << it->second(Permutation::parse(perm_text)).str() << "\n";
        return 0;
    }
    if (bijection == "xi") {
        if (perm_text.empty()) throw UsageError("xi needs --perm");
        std::cout << "[" << gperm::xi_3412(Permutation::parse(perm_text)).str() << "]\n";
        return 0;
    }
    if (bijection == "xi-inverse") {
        if (class_text.empty() || n < 2) throw UsageError("xi-inverse needs --class and --n");
        std::cout << gperm::xi_3412_inverse(parse_class(class_text), n).str() << "\n";
        return 0;
    }
    if (bijection == "durfee") {
        if (perm_text.empty()) throw UsageError("durfee needs --perm");
        std::cout << gperm::durfee_map(Permutation::parse(perm_text)).str() << "\n";
        return 0;
    }
    if (bijection == "durfee-inverse") {
        if (partition_text.empty()) throw UsageError("durfee-inverse needs --partition");
        std::cout << gperm::durfee_map_inverse(gperm::parse_partition(partition_text)).str() << "\n";
        return 0;
    }
    if (bijection == "lambda-3412") {
        if (perm_text.empty()) throw UsageError("lambda-3412 needs --perm");
        std::cout << gperm::lambda_3412(Permutation::parse(perm_text)).str() << "\n";
        return 0;
    }
    if (bijection == "lambda-1423") {
        if (perm_text.empty()) throw UsageError("lambda-1423 needs --perm");
        std::cout << gperm::lambda_1423(Permutation::parse(perm_text)).str() << "\n";
        return 0;
    }
    throw UsageError("unknown bijection: " + bijection);
}

int run_verify(const std::string& suite, int n_max) {
    check_cap(n_max);
    const auto results = gperm::run_verification(suite, n_max);
    long long failures = 0;
    for (const auto& r : results) {
        failures += r.failures;
        std::cout << (r.failures == 0 ? "PASS" : "FAIL") << "  " << r.name << "  ("
                  << r.checks - r.failures << "/" << r.checks << " checks)\n";
        for (const auto& msg : r.messages) std::cout << "      " << msg << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_wilf(int size, int n_max, const std::string& parity_text, const std::string& format) {
    check_cap(n_max);
    const auto parity = parse_parity(parity_text);
    if (!parity) throw UsageError("wilf needs --parity odd or even");
    const auto cls = gperm::wilf_classes(size, n_max, *parity);
    if (format == "json") {
        ordered_json out;
        out["size"] = size;
        out["n_max"] = n_max;
        out["parity"] = parity_text;
        out["evidence"] = "count vectors agree for n = 1.." + std::to_string(n_max) +
                          "; equality beyond that is not proven";
        auto arr = ordered_json::array();
        for (size_t i = 0; i < cls.classes.size(); ++i) {
            ordered_json entry;
            auto members = ordered_json::array();
            for (const auto& p : cls.classes[i]) members.push_back(p.str());
            entry["patterns"] = members;
            entry["counts"] = cls.class_counts[i];
            arr.push_back(entry);
        }
        out["classes"] = arr;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << cls.classes.size() << " classes of one-descent patterns of size " << size
              << " (" << parity_text << ", counts for n = 1.." << n_max
              << "; evidence, not proof)\n";
    for (size_t i = 0; i < cls.classes.size(); ++i) {
        std::cout << "  class " << i + 1 << ":";
        for (const auto& p : cls.classes[i]) std::cout << " " << p.str();
        std::cout << "  -> " << join_counts(cls.class_counts[i]) << "\n";
    }
    std::cout << "  (the identity pattern " << Permutation::identity(size).str()
              << " has no descent and is listed in no class)\n";
    return 0;
}

int run_render(const std::string& dyck_text, const std::string& partition_text,
               const std::string& graph_text) {
    if (!dyck_text.empty()) {
        std::cout << gperm::render_dyck(gperm::DyckPath::parse(dyck_text));
        return 0;
    }
    if (!partition_text.empty()) {
        std::cout << gperm::render_ferrers(gperm::parse_partition(partition_text));
        return 0;
    }
    if (!graph_text.empty()) {
        const auto cls = gperm::class_canonical(parse_class(graph_text));
        std::cout << gperm::render_multidigraph(gperm::class_to_graph(cls));
        return 0;
    }
    throw UsageError("render needs one of --dyck, --partition, --graph");
}

int run_graphs(int edges, const std::string& format, bool sketch) {
    if (edges < 0) throw UsageError("--edges must be non-negative");
    const auto graphs = gperm::multidigraphs(edges);
    if (format == "json") {
        ordered_json out;
        out["edges"] = edges;
        auto arr = ordered_json::array();
        for (const auto& g : graphs)
            arr.push_back({{"left_loops", g.left_loops},
                           {"lr_edges", g.lr_edges},
                           {"rl_edges", g.rl_edges},
                           {"right_loops", g.right_loops}});
        out["count"] = graphs.size();
        out["items"] = arr;
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << graphs.size() << " multidigraphs on 2 nodes with " << edges << " edges\n";
    for (const auto& g : graphs) {
        if (sketch)
            std::cout << gperm::render_multidigraph(g);
        else
            std::cout << gperm::graph_to_class(g).str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity-restricted pattern-avoiding Grassmannian permutations"};
    app.require_subcommand(1);

    std::string pattern, parity = "both", source = "enumerate", format = "text";
    std::string perm_text, class_text, partition_text, bijection, suite = "all";
    std::string dyck_text, graph_text;
    int n = 0, n_max = 11, size = 4, edges = 0;
    bool exclude_identity = false, sketch = false;

    auto* count = app.add_subcommand("count", "Count avoiders at one size");
    count->add_option("--pattern", pattern, "pattern in one-line notation")->required();
    count->add_option("--parity", parity, "odd, even or both (default both)");
    count->add_option("--n", n, "permutation size")->required();
    count->add_option("--source", source, "formula, gf or enumerate (default enumerate)");
    count->add_flag("--exclude-identity", exclude_identity, "drop the identity permutation");
    count->add_option("--format", format, "text or json");

    auto* sequence = app.add_subcommand("sequence", "Counts for n = 1..n_max");
    sequence->add_option("--pattern", pattern, "pattern in one-line notation")->required();
    sequence->add_option("--parity", parity, "odd or even")->required();
    sequence->add_option("--n-max", n_max, "largest size")->required();
    sequence->add_option("--source", source, "formula, gf or enumerate")->required();
    sequence->add_option("--format", format, "text, json or csv");

    auto* list = app.add_subcommand("list", "List Grassmannian permutations or avoiders");
    list->add_option("--n", n, "permutation size")->required();
    list->add_option("--pattern", pattern, "optional pattern to avoid");
    list->add_option("--parity", parity, "odd, even or both (default both)");
    list->add_flag("--exclude-identity", exclude_identity, "drop the identity permutation");
    list->add_option("--format", format, "text, json or csv");

    auto* map = app.add_subcommand("map", "Apply one of the bijections");
    map->add_option("--bijection", bijection,
                    "alpha, gamma, phi, psi, phi1, phi2, psi1, psi2, xi, durfee, "
                    "lambda-3412, lambda-1423, or any of these with -inverse")
        ->required();
    map->add_option("--perm", perm_text, "input permutation");
    map->add_option("--class", class_text, "input class tuple, e.g. \"(3,1,0,0)\"");
    map->add_option("--partition", partition_text, "input partition, e.g. 4,3,2");
    map->add_option("--n", n, "target size for xi-inverse");

    auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
    verify->add_option("--suite", suite, "all or one suite name");
    verify->add_option("--n-max", n_max, "cap on the exhaustive ranges (default 11)");

    auto* wilf = app.add_subcommand("wilf", "Group one-descent patterns by count vectors");
    wilf->add_option("--size", size, "pattern size, 3..7")->required();
    wilf->add_option("--n-max", n_max, "length of the count vectors (default 11)");
    wilf->add_option("--parity", parity, "odd or even (default odd)");
    wilf->add_option("--format", format, "text or json");

    auto* render = app.add_subcommand("render", "ASCII pictures");
    render->add_option("--dyck", dyck_text, "path as a U/D step string");
    render->add_option("--partition", partition_text, "partition, e.g. 4,3,2 or 4+3+2");
    render->add_option("--graph", graph_text, "multidigraph tuple, e.g. \"(0,3,0,0)\"");

    auto* graphs = app.add_subcommand("graphs", "Two-node multidigraph classes");
    graphs->add_option("--edges", edges, "number of edges")->required();
    graphs->add_option("--format", format, "text or json");
    graphs->add_flag("--sketch", sketch, "draw each graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed())
            return run_count(Permutation::parse(pattern), parity, n, source, exclude_identity, format);
        if (sequence->parsed())
            return run_sequence(Permutation::parse(pattern), parity, n_max, source, format);
        if (list->parsed()) {
            std::optional<Permutation> sigma;
            if (!pattern.empty()) sigma = Permutation::parse(pattern);
            return run_list(n, sigma, parity, exclude_identity, format);
        }
        if (map->parsed()) return run_map(bijection, perm_text, class_text, partition_text, n);
        if (verify->parsed()) return run_verify(suite, n_max);
        if (wilf->parsed()) {
            if (parity == "both") parity = "odd";
            return run_wilf(size, n_max, parity, format);
        }
        if (render->parsed()) return run_render(dyck_text, partition_text, graph_text);
        if (graphs->parsed()) return run_graphs(edges, format, sketch);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
