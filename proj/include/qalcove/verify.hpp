#pragma once

#include "qalcove/chevalley.hpp"

#include <string>
#include <vector>

namespace qalcove {

struct SweepOptions {
    std::vector<std::string> types = {"A2", "B2", "C2", "G2", "A3"};
    int coeff_min = -2;
    int coeff_max = 2;
    int cap = 24; // skip weights whose inversion set exceeds this
};

struct CaseResult {
    std::string type;
    std::string lambda;
    bool skipped = false;
    std::vector<std::string> failures;
    // observed (not asserted) comparison of the path sets across two
    // generated reflection orders
    bool iqls_order_invariant = true;
    // forgetful images violating the strict junction-direction constraint
    // y_i != y_{i+1}; reported findings, not failures (the remaining checks
    // run against the relaxed path universe)
    std::vector<std::string> y_counterexamples;

    bool passed() const { return !skipped && failures.empty(); }
};

struct TypeResult {
    std::string type;
    std::vector<std::string> failures;
};

struct SweepResult {
    std::vector<TypeResult> type_checks;
    std::vector<CaseResult> cases;

    bool ok() const;
    int passed() const;
    int failed() const;
    int skipped() const;
};

// Full invariant suite for one weight: inversion-set cardinality, Phi
// injectivity, affine reflection-order axioms, the block decomposition of
// w(lambda)Delta+, coroot betweenness of the generated orders, and for every
// w the injectivity / image / weight / sign / transfer / q=0 / term-multiset
// checks of the forgetful map.
CaseResult verify_case(const WeylGroup &W, const QBG &g, const Weight &lambda,
                       int cap);

// Graph-level checks: distance parity and shortest-weight invariance on all
// pairs; optionally shellability over every reflection order.
std::vector<std::string> verify_graph(const WeylGroup &W, const QBG &g,
                                      bool shellability_exhaustive);

SweepResult run_sweep(const SweepOptions &opt);

std::string sweep_to_json(const SweepResult &r);

} // namespace qalcove
