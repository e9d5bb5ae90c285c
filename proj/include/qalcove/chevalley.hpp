#pragma once

#include "qalcove/forgetful.hpp"

#include <string>
#include <vector>

namespace qalcove {

// Tuple of partitions, one per node, with length bounded by the positive
// fundamental coefficients of lambda.
struct PartitionTuple {
    std::vector<std::vector<int>> parts;

    long long size() const; // |chi|
    Coords first_columns(int rank) const; // iota(chi) in simple-coroot coords

    friend bool operator==(const PartitionTuple &a, const PartitionTuple &b) {
        return a.parts == b.parts;
    }
};

// all tuples with |chi| <= max_size, ordered by (|chi|, parts)
std::vector<PartitionTuple> par_truncated(const RootSystem &rs, const Weight &lambda,
                                          int max_size);

// One term of the graded-character expansion, with the common
// -<lambda, xi> - |chi| exponent shift and the chi-sum factored out.
struct ChevalleyTerm {
    int sign;        // +1 or -1
    long long q_exp; // -height(A), equivalently Deg_w
    Weight weight;
    int direction;   // endpoint Weyl id
    Coords shift;    // down(A), equivalently xi(u, eta, w)

    friend bool operator==(const ChevalleyTerm &a, const ChevalleyTerm &b) {
        return a.sign == b.sign && a.q_exp == b.q_exp && a.weight == b.weight &&
               a.direction == b.direction && a.shift == b.shift;
    }
    friend bool operator<(const ChevalleyTerm &a, const ChevalleyTerm &b);
};

// one term per admissible subset
std::vector<ChevalleyTerm> terms_from_admissible(const IQLSContext &ctx,
                                                 const LambdaChain &chain, int w);

// one term per pair (eta, u) in the forgetful image
std::vector<ChevalleyTerm> terms_from_iqls(const IQLSContext &ctx, int w);

struct VerifyReport {
    bool equal;
    std::size_t lhs_count;
    std::size_t rhs_count;
    // symmetric difference: term with its lhs-minus-rhs multiplicity
    std::vector<std::pair<ChevalleyTerm, long long>> diff;
};

// exact multiset comparison of the two expansions
VerifyReport verify_identity(const IQLSContext &ctx, const LambdaChain &chain, int w);

std::string term_to_json(const RootSystem &rs, const WeylGroup &W,
                         const ChevalleyTerm &t);
std::string report_to_json(const IQLSContext &ctx, const std::string &case_label,
                           const VerifyReport &r);

// Truncated series for gch V^-_{w t_xi}(mu + lambda) with the chi-sum
// reinstated and symbolic gch factors; JSON array, partition-major order so
// that deeper truncations extend shallower ones.
std::string emit_series_json(const IQLSContext &ctx, const LambdaChain &chain, int w,
                             const Coords &xi_shift, int max_par);

} // namespace qalcove
