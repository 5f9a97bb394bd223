#pragma once

#include "rainbowdom/bounds.hpp"
#include "rainbowdom/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rainbowdom {

enum class ScanFamily { all_trees, random_trees, random_connected, paths, cycles, spiders, l_k, double_stars, product_pairs };
enum class ScanPredicate { bound_violation, tight_3n4, lower_bound_equality, product_violation };

std::string_view to_string(ScanFamily f);
std::string_view to_string(ScanPredicate p);
std::optional<ScanFamily> parse_family(std::string_view s);
std::optional<ScanPredicate> parse_predicate(std::string_view s);

struct ScanSpec {
    ScanFamily family = ScanFamily::all_trees;
    int min_n = 3;
    int max_n = 8;
    ScanPredicate predicate = ScanPredicate::bound_violation;
    std::uint64_t seed = 1;
    int sample_count = 100;        // random families only
    double edge_probability = 0.5; // random_connected only
    unsigned threads = 0;          // 0: hardware concurrency
};

/// Largest max_n accepted for a family.
int family_size_cap(ScanFamily f);

/// Throws InputError or CapExceeded when the spec cannot be run.
void validate(const ScanSpec& spec);

struct ScanEntry {
    std::string graph;  // graph6, or the product spec for product pairs
    Json values;
};

struct ScanReport {
    ScanSpec spec;
    std::int64_t instances_checked = 0;
    std::int64_t budget_exhausted = 0;
    std::vector<ScanEntry> hits;
    std::vector<ScanEntry> violations;  // always a subset of hits
};

/// Evaluates the predicate over the family. Results are in generation order
/// whatever the thread count.
ScanReport scan(const ScanSpec& spec, const SolverOptions& opts = {}, const SolverSet& solvers = {});

Json to_json(const ScanReport& r);

}  // namespace rainbowdom
