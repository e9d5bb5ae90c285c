#pragma once

#include "qalcove/qbg.hpp"
#include "qalcove/reforder.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qalcove {

// A w-admissible subset of a lambda-chain: chain positions j_1 < ... < j_p
// (0-based) whose labels trace a directed path in QBG(W) from w.
struct AdmissibleSubset {
    std::vector<int> positions;
    std::vector<int> path;       // vertices w_0 .. w_p
    std::vector<EdgeKind> kinds; // per-step edge kinds

    int start() const { return path.front(); }
    int end() const { return path.back(); }
    int size() const { return (int)positions.size(); }
};

struct SubsetStats {
    int end;
    Coords down; // sum of |beta_j|^vee over quantum steps
    Weight wt;
    long long height; // sum of sgn(beta_j) * ltilde_j over quantum steps
    int n;            // number of selected negative chain roots
    std::vector<int> quantum_positions;
};

// Stream every w-admissible subset (the empty one first) in depth-first order
// of position lists; prefix feasibility prunes the search.
void for_each_admissible(const QBG &g, int w, const LambdaChain &chain, bool q0,
                         const std::function<void(const AdmissibleSubset &)> &fn);

// Materialized enumeration, sorted by (size, positions); `limit` bounds the
// number of subsets kept in memory.
std::vector<AdmissibleSubset> admissible_subsets(const QBG &g, int w,
                                                 const LambdaChain &chain,
                                                 bool q0 = false,
                                                 std::size_t limit = 10000000);

SubsetStats subset_stats(const WeylGroup &W, const LambdaChain &chain,
                         const AdmissibleSubset &A);

// "{1,3}" with 1-based positions; "{}" for the empty subset
std::string positions_str(const AdmissibleSubset &A);

// Markdown table with columns A | end | down | wt | height
std::string admissible_table_markdown(const WeylGroup &W, const LambdaChain &chain,
                                      const std::vector<AdmissibleSubset> &subsets);

// One JSON object per line with the full statistics
std::string admissible_json_lines(const WeylGroup &W, const LambdaChain &chain,
                                  const std::vector<AdmissibleSubset> &subsets);

} // namespace qalcove
