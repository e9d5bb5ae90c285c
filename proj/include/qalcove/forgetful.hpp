#pragma once

#include "qalcove/alcove.hpp"
#include "qalcove/iqls.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qalcove {

// The image of an admissible subset together with its segmentation data:
// m_1..m_t split the subset by equal degree quotients, n_1..n_{t-1} split
// each interior segment at the negative/positive label boundary.
struct ForgetfulRecord {
    IQLSPath eta;
    int endpoint;
    std::vector<int> m_idx;
    std::vector<int> n_idx;
};

// With `strict`, an image violating the junction-direction constraint
// y_i != y_{i+1} aborts with diagnostics; non-strict callers inspect the
// violation themselves (it occurs for some G2 weights).
ForgetfulRecord xi_map(const IQLSContext &ctx, const LambdaChain &chain,
                       const AdmissibleSubset &A, bool strict = true);

// (Xi(A), end(A))
std::pair<IQLSPath, int> forgetful(const IQLSContext &ctx, const LambdaChain &chain,
                                   const AdmissibleSubset &A, bool strict = true);

// true iff w =>(lambda,+) kappa(eta) and iota(eta) =>(lambda,-) u
bool image_predicate(const IQLSContext &ctx, const IQLSPath &eta, int u, int w);

// Reconstruct the unique admissible subset with forgetful image (eta, u);
// rejects pairs outside the image, naming the failing arrow.
AdmissibleSubset forgetful_inverse(const IQLSContext &ctx, const LambdaChain &chain,
                                   const IQLSPath &eta, int u, int w,
                                   bool strict = true);

// Markdown: A versus its forgetful image
std::string forgetful_table_markdown(const IQLSContext &ctx, const LambdaChain &chain,
                                     const std::vector<AdmissibleSubset> &subsets);

// Markdown: per path, whether w reaches its final direction, and the
// endpoints reachable from its initial direction
std::string image_table_markdown(const IQLSContext &ctx, int w);

} // namespace qalcove
