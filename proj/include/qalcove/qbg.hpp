#pragma once

#include "qalcove/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qalcove {

enum class EdgeKind : unsigned char { None = 0, Bruhat = 1, Quantum = 2 };

// A directed path in QBG(W): vertices w_0..w_r, positive-root label indices
// beta_1..beta_r, and per-step kinds.
struct QBGPath {
    std::vector<int> vertices;
    std::vector<int> labels;
    std::vector<EdgeKind> kinds;

    int steps() const { return (int)labels.size(); }
    int end() const { return vertices.back(); }
    // sum of beta_k^vee over quantum steps
    Coords weight(const RootSystem &rs) const;
};

// The quantum Bruhat graph on W: for each (x, alpha) in W x Delta^+ there is
// at most one edge x -> x s_alpha, a Bruhat edge (length +1) or a quantum edge
// (length drop 2<rho, alpha^vee> - 1). The Bruhat graph is the subgraph of
// Bruhat edges. Immutable after construction; queries are pure.
class QBG {
public:
    explicit QBG(const WeylGroup &W);

    const WeylGroup &weyl() const { return *W_; }

    EdgeKind edge(int x, int label) const { return kind_[x][label]; }
    int target(int x, int label) const { return W_->mult_refl(x, label); }

    // directed-graph distance and shortest-path weight (well-defined across
    // shortest paths; see verify_weight_invariance)
    int distance(int v, int w) const;
    Coords shortest_weight(int v, int w) const;

    // enumerate the weights of all shortest v->w paths and check they agree
    bool verify_weight_invariance(int v, int w) const;

    // The unique label-increasing directed path from v to w whose labels are
    // drawn from `pool` (positive-root indices, scanned in the given order),
    // if one exists. With `bruhat_only` the search is restricted to BG(W).
    // `count` receives the number of such paths (capped at `count_cap`).
    std::optional<QBGPath> label_increasing_path(int v, int w,
                                                 const std::vector<int> &pool,
                                                 bool bruhat_only = false,
                                                 int *count = nullptr,
                                                 int count_cap = 2) const;

    std::string to_dot() const;
    std::string to_json() const;

private:
    const WeylGroup *W_;
    std::vector<std::vector<EdgeKind>> kind_;

    struct BfsRow {
        std::vector<int> dist;
        std::vector<Coords> wt;
    };
    mutable std::vector<std::optional<BfsRow>> rows_;
    const BfsRow &row(int v) const;
};

} // namespace qalcove
