#pragma once

#include "qalcove/qbg.hpp"
#include "qalcove/reforder.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qalcove {

// An interpolated path of shape lambda: directions x_1..x_s, junction
// directions y_1..y_{s-1}, and rationals 0 = sigma_0 < ... < sigma_s = 1.
struct IQLSPath {
    std::vector<int> x;
    std::vector<int> y;
    std::vector<Rational> sigma;

    int steps() const { return (int)x.size(); }
    int initial() const { return x.front(); } // iota
    int final() const { return x.back(); }    // kappa

    friend bool operator==(const IQLSPath &a, const IQLSPath &b) {
        return a.x == b.x && a.y == b.y && a.sigma == b.sigma;
    }
    friend bool operator<(const IQLSPath &a, const IQLSPath &b);
};

struct PathStats {
    int iota;
    int kappa;
    Weight wt;
    int nega;
};

struct JunctionWitness {
    QBGPath minus; // x_{i+1} => y_i
    QBGPath plus;  // y_i => x_i
};

// Arrow relations and path enumeration for a fixed lambda and reflection
// order in RO(lambda, Delta^+). Immutable after construction apart from
// internal relation caches.
class IQLSContext {
public:
    IQLSContext(const QBG &g, const Weight &lambda, const ReflectionOrder &order);

    const QBG &graph() const { return *g_; }
    const WeylGroup &weyl() const { return g_->weyl(); }
    const Weight &lambda() const { return lambda_; }
    const ReflectionOrder &order() const { return order_; }

    // sigma in (0,1) admitting at least one integral label
    const std::vector<Rational> &sigma_candidates() const { return candidates_; }

    // labels for a (lambda, +/-) arrow at sigma, in decreasing reflection
    // order (the order they may appear along a path)
    std::vector<int> arrow_pool(const Rational &sigma, bool plus) const;

    // witness path for x =>_(sigma, +/-) y, or absent; with assert_unique the
    // restricted-pool uniqueness is checked at runtime
    std::optional<QBGPath> arrow(int x, int y, const Rational &sigma, bool plus,
                                 bool q0 = false, bool assert_unique = false) const;

    // all interpolated QLS paths (q0 = false) or LS paths (q0 = true),
    // sorted by (s, sigma sequence, x ids, y ids). With `relaxed` the
    // junction-direction constraint y_i != y_{i+1} is dropped; forgetful
    // images can violate it (observed in G2), so verification runs against
    // the relaxed universe while reporting strict-definition violations.
    std::vector<IQLSPath> enumerate(bool q0 = false, bool relaxed = false) const;

    // error message if eta violates the definition, nullopt otherwise;
    // witnesses for the junction arrows are returned on success
    std::optional<std::string> validate(const IQLSPath &eta, bool q0 = false,
                                        std::vector<JunctionWitness> *out = nullptr,
                                        bool relaxed = false) const;

    // does eta have adjacent equal junction directions?
    static bool violates_y_constraint(const IQLSPath &eta);

    PathStats stats(const IQLSPath &eta) const;
    Rational deg(const IQLSPath &eta, int w) const;     // Deg_w(eta)
    Coords xi(int u, const IQLSPath &eta, int w) const; // xi(u, eta, w)

    bool has_plus_arrow(int x, int y, bool q0 = false) const;  // sigma = 1
    bool has_minus_arrow(int x, int y, bool q0 = false) const; // sigma = 1

    std::string display(const IQLSPath &eta) const; // "(s1 s2, s2; s2; 0, 1/2, 1)"
    std::string to_json(const IQLSPath &eta) const;
    IQLSPath from_json(const std::string &text) const;

private:
    const QBG *g_;
    Weight lambda_;
    ReflectionOrder order_;
    std::vector<int> pool_plus_;  // Delta^+(lambda)_{>0} in decreasing order
    std::vector<int> pool_minus_; // Delta^+(lambda)_{<0} in decreasing order
    std::vector<Rational> candidates_;

    // reach[x] = endpoints of label-decreasing paths from x
    using Relation = std::vector<std::vector<int>>;
    mutable std::map<std::tuple<Rational, bool, bool>, Relation> relcache_;

    const Relation &relation(const Rational &sigma, bool plus, bool q0) const;
};

} // namespace qalcove
