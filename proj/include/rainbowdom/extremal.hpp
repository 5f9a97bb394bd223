#pragma once

#include "rainbowdom/graph.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace rainbowdom {

/// Partition of V into induced P4s joined only at designated centers.
struct P4Certificate {
    std::vector<std::array<Vertex, 4>> parts;  // each listed in path order
    std::vector<Vertex> centers;               // one per part
};

enum class CertificateIssue {
    none,
    malformed,             // part/center count mismatch or bad vertex id
    not_a_partition,
    part_not_induced_p4,
    center_not_interior,
    non_center_crossing,   // an inter-part edge touches a non-center
    centers_disconnected,
};

std::string_view to_string(CertificateIssue issue);

struct CertificateCheck {
    bool ok = false;
    CertificateIssue issue = CertificateIssue::malformed;
    explicit operator bool() const { return ok; }
};

CertificateCheck verify_certificate(const Graph& g, const P4Certificate& c);

/// Search for a P4 partition certificate on any graph (no class check).
std::optional<P4Certificate> find_p4_certificate(const Graph& g);

/// Certificate iff gamma_r2(T) = 3n/4, for trees with n >= 3.
std::optional<P4Certificate> recognize_extremal_tree(const Graph& tree);

/// Outcome of recognizing a connected extremal graph.
struct ExtremalVerdict {
    bool extremal = false;
    bool is_corona_c4 = false;              // matched C4 o K1
    std::optional<P4Certificate> certificate;
};

/// Accepts P4, C4 o K1, or a verified P4 partition certificate.
ExtremalVerdict recognize_extremal_graph(const Graph& g);

/// Exhaustive isomorphism test for small graphs (at most 10 vertices).
bool isomorphic_small(const Graph& a, const Graph& b);

}  // namespace rainbowdom
