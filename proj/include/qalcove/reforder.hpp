#pragma once

#include "qalcove/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qalcove {

// A total order on a root universe, listed smallest first. The universe is
// either Delta^+ (all signs +1) or w(lambda)Delta^+ (signed roots).
struct ReflectionOrder {
    std::vector<SRoot> seq;

    int position(SRoot r) const;
    friend bool operator==(const ReflectionOrder &a, const ReflectionOrder &b) {
        return a.seq == b.seq;
    }
};

// Witness for a failed reflection-order condition: a before b in the order,
// but a+b does not sit between them.
struct OrderViolation {
    SRoot a;
    SRoot b;
    SRoot sum;
};

// Partition of Delta^+ by the sign of <lambda, alpha^vee>; each list keeps
// the root-system order.
struct LambdaBlocks {
    std::vector<int> neg;  // Delta^+(lambda)_{<0}
    std::vector<int> zero; // Delta^+(lambda)_{=0}
    std::vector<int> pos;  // Delta^+(lambda)_{>0}
};

LambdaBlocks lambda_blocks(const RootSystem &rs, const Weight &lambda);

// Defining condition of a reflection order on the universe spanned by `order`:
// whenever a + b lies in the universe it sits strictly between a and b.
// Returns a violating triple on failure.
std::optional<OrderViolation> reflection_order_violation(const RootSystem &rs,
                                                         const ReflectionOrder &order);
bool is_reflection_order(const RootSystem &rs, const ReflectionOrder &order);

// Coroot-side betweenness: for a before b with a^vee + b^vee a coroot of the
// system, the root (a^vee+b^vee)^vee must sit between a and b.
std::optional<OrderViolation> coroot_betweenness_violation(const RootSystem &rs,
                                                           const ReflectionOrder &order);

// Is `order` a permutation of Delta^+ lying in RO(lambda, Delta^+)?
// (negative-pairing block, then zero block, then positive block)
bool in_ro_lambda(const RootSystem &rs, const Weight &lambda,
                  const ReflectionOrder &order);
// Same for RO(lambda, w(lambda)Delta^+): positive block, then negated
// negative block, then negated zero block.
bool in_ro_lambda_conjugate(const RootSystem &rs, const Weight &lambda,
                            const ReflectionOrder &order);

// One explicit member of RO(lambda, Delta^+), built from the length-additive
// factorization of the longest element through u(-lambda), u(lambda) and the
// stabilizer parabolic, pulled back through the block bijection.
ReflectionOrder ro_for_lambda(const WeylGroup &W, const Weight &lambda);

// A second member generated from different reduced-word choices, for
// order-dependence comparisons. May coincide with ro_for_lambda.
ReflectionOrder ro_for_lambda_alt(const WeylGroup &W, const Weight &lambda);

// The block bijection RO(lambda, Delta^+) -> RO(lambda, w(lambda)Delta^+)
// and its inverse.
ReflectionOrder ro_conjugate(const RootSystem &rs, const Weight &lambda,
                             const ReflectionOrder &order);
ReflectionOrder ro_conjugate_inverse(const RootSystem &rs, const Weight &lambda,
                                     const ReflectionOrder &order);

// A positive real affine coroot gamma^vee + deg * delta-tilde, recorded via
// the signed root gamma.
struct AffineCoroot {
    SRoot gamma;
    int deg;

    friend bool operator==(const AffineCoroot &a, const AffineCoroot &b) {
        return a.gamma == b.gamma && a.deg == b.deg;
    }
    friend bool operator<(const AffineCoroot &a, const AffineCoroot &b) {
        if (!(a.gamma == b.gamma))
            return a.gamma < b.gamma;
        return a.deg < b.deg;
    }
};

// The inversion set of the translation by lambda: all gamma^vee + k delta-tilde
// with chi(gamma^vee) <= k < chi(gamma^vee) + <lambda, gamma^vee>.
std::vector<AffineCoroot> inversion_set(const RootSystem &rs, const Weight &lambda);

// (deg / <lambda, bar>, bar-root); defined only on the inversion set.
std::pair<Rational, SRoot> phi(const RootSystem &rs, const Weight &lambda,
                               const AffineCoroot &beta);

struct ChainEntry {
    SRoot gamma;      // signed chain root
    int level;        // hyperplane level l_k
    long long ltilde; // <lambda, gamma^vee> - l_k
};

struct LambdaChain {
    Weight lambda;
    std::vector<ChainEntry> entries;

    int size() const { return (int)entries.size(); }
    // chain position of the affine coroot gamma^vee + deg*delta, -1 if absent
    int find(const AffineCoroot &b) const;
};

// The suitable chain: the inversion set sorted by the lexicographic order on
// (first Phi component, second component under the reverse of the conjugated
// order). Aborts if the sort key is not strict (Phi injectivity).
LambdaChain suitable_chain(const WeylGroup &W, const Weight &lambda,
                           const ReflectionOrder &order);

// Both axioms of an affine reflection order for the sorted inversion set;
// decompositions range over positive real affine coroots.
bool affine_reflection_order_ok(const RootSystem &rs, const Weight &lambda,
                                const std::vector<AffineCoroot> &sorted_inv);

// serialization
std::string order_to_json(const RootSystem &rs, const ReflectionOrder &order);
ReflectionOrder order_from_json(const RootSystem &rs, const std::string &text);
std::string chain_to_json(const RootSystem &rs, const LambdaChain &chain);
LambdaChain chain_from_json(const RootSystem &rs, const Weight &lambda,
                            const std::string &text);

} // namespace qalcove
