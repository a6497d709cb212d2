#pragma once

#include "bk/kempe.hpp"

#include <string>
#include <vector>

namespace bk {

struct AuditVerdict {
    bool holds = true;
    // Violation tuples, and a rendered form of each for reports.
    std::vector<std::vector<int>> witnesses;
    std::vector<std::string> details;

    void violate(std::vector<int> tuple, std::string detail)
    {
        holds = false;
        witnesses.push_back(std::move(tuple));
        details.push_back(std::move(detail));
    }
};

// Literal evaluation of the structural conditions of a launch configuration
// at center u: Case-1 predicates over nonadjacent pairs of uniquely-colored
// neighbors, Case-2 predicates over the repeated pair {X, Y}. Verdicts are
// facts about this one colored configuration, nothing more.
struct ConfigAudit {
    bool applicable = false;
    std::string not_applicable_reason;

    int center = -1;
    int palette = 0;
    std::vector<int> unique_colors;
    int pair_color = 0;
    int pair_x = -1, pair_y = -1;
    bool uniques_pairwise_adjacent = false;

    // (A) no color m has A_m as the only m-vertex of both ends of a
    //     nonadjacent unique pair
    AuditVerdict cond_a;
    // (B) a nonadjacent unique pair has at most two common adjacent A_k
    AuditVerdict cond_b;
    // (C) each A_i is non-adjacent to at most three other A_k
    AuditVerdict cond_c;
    // the inference drawn from (C): each A_i adjacent to at least three A_m
    AuditVerdict cond_c_inference;
    // Case 2, I: at most two A_i non-adjacent to both X and Y
    AuditVerdict case_i;
    // Case 2, II: every A_i has a j-vertex for every other unique color j
    AuditVerdict case_ii;
    // Case 2, III: X and Y have a k-vertex for every unique color k
    AuditVerdict case_iii;
    // Case 2, IV: X and Y are adjacent to at least omega-5 of the A_i
    AuditVerdict case_iv;
    // Case 2, V: neither X nor Y is the only pair-color vertex of any A_i
    AuditVerdict case_v;
};

// Throws when c is improper on G - u (message names a violating edge) or not
// total on G - u. A profile that is not the launch configuration is reported
// as not applicable, not an error.
ConfigAudit audit_config(const Graph& g, const Coloring& c, int u);

} // namespace bk
