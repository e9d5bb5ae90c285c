#include "qalcove/qbg.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace qalcove {

Coords QBGPath::weight(const RootSystem &rs) const {
    Coords wt(rs.rank(), 0);
    for (int k = 0; k < steps(); ++k) {
        if (kinds[k] != EdgeKind::Quantum)
            continue;
        const Coords &cv = rs.pos_coroot(labels[k]);
        for (int i = 0; i < rs.rank(); ++i)
            wt[i] += cv[i];
    }
    return wt;
}

QBG::QBG(const WeylGroup &W) : W_(&W) {
    const int N = W.size();
    const int P = W.rs().num_pos();
    kind_.assign(N, std::vector<EdgeKind>(P, EdgeKind::None));
    for (int x = 0; x < N; ++x) {
        for (int k = 0; k < P; ++k) {
            int y = W.mult_refl(x, k);
            int lx = W.length(x), ly = W.length(y);
            if (ly == lx + 1)
                kind_[x][k] = EdgeKind::Bruhat;
            else if (ly == lx - 2 * W.rs().rho_pair(k) + 1)
                kind_[x][k] = EdgeKind::Quantum;
        }
    }
    rows_.resize(N);
}

const QBG::BfsRow &QBG::row(int v) const {
    if (rows_[v])
        return *rows_[v];
    const int N = W_->size();
    const int P = W_->rs().num_pos();
    BfsRow r;
    r.dist.assign(N, -1);
    r.wt.assign(N, Coords(W_->rs().rank(), 0));
    r.dist[v] = 0;
    std::deque<int> queue = {v};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int k = 0; k < P; ++k) {
            if (kind_[x][k] == EdgeKind::None)
                continue;
            int y = W_->mult_refl(x, k);
            if (r.dist[y] >= 0)
                continue;
            r.dist[y] = r.dist[x] + 1;
            r.wt[y] = r.wt[x];
            if (kind_[x][k] == EdgeKind::Quantum) {
                const Coords &cv = W_->rs().pos_coroot(k);
                for (int i = 0; i < W_->rs().rank(); ++i)
                    r.wt[y][i] += cv[i];
            }
            queue.push_back(y);
        }
    }
    rows_[v] = std::move(r);
    return *rows_[v];
}

int QBG::distance(int v, int w) const { return row(v).dist[w]; }

Coords QBG::shortest_weight(int v, int w) const { return row(v).wt[w]; }

bool QBG::verify_weight_invariance(int v, int w) const {
    const BfsRow &r = row(v);
    const int P = W_->rs().num_pos();
    Coords expect = r.wt[w];
    // walk the BFS DAG from w backwards, accumulating weights of all
    // shortest paths
    bool ok = true;
    std::function<void(int, Coords)> back = [&](int y, Coords acc) {
        if (!ok)
            return;
        if (y == v) {
            if (acc != expect)
                ok = false;
            return;
        }
        for (int x = 0; x < W_->size(); ++x) {
            if (r.dist[x] != r.dist[y] - 1)
                continue;
            for (int k = 0; k < P; ++k) {
                if (kind_[x][k] == EdgeKind::None || W_->mult_refl(x, k) != y)
                    continue;
                Coords nxt = acc;
                if (kind_[x][k] == EdgeKind::Quantum) {
                    const Coords &cv = W_->rs().pos_coroot(k);
                    for (int i = 0; i < W_->rs().rank(); ++i)
                        nxt[i] += cv[i];
                }
                back(x, nxt);
            }
        }
    };
    back(w, Coords(W_->rs().rank(), 0));
    return ok;
}

std::optional<QBGPath> QBG::label_increasing_path(int v, int w,
                                                  const std::vector<int> &pool,
                                                  bool bruhat_only, int *count,
                                                  int count_cap) const {
    std::optional<QBGPath> found;
    int hits = 0;
    QBGPath partial;
    partial.vertices.push_back(v);
    std::function<void(int, int)> dfs = [&](int cur, int next_pos) {
        if (hits >= count_cap && found)
            return;
        if (cur == w) {
            ++hits;
            if (!found)
                found = partial;
            if (hits >= count_cap)
                return;
        }
        for (int p = next_pos; p < (int)pool.size(); ++p) {
            int k = pool[p];
            EdgeKind e = kind_[cur][k];
            if (e == EdgeKind::None || (bruhat_only && e != EdgeKind::Bruhat))
                continue;
            int nxt = W_->mult_refl(cur, k);
            partial.vertices.push_back(nxt);
            partial.labels.push_back(k);
            partial.kinds.push_back(e);
            dfs(nxt, p + 1);
            partial.vertices.pop_back();
            partial.labels.pop_back();
            partial.kinds.pop_back();
        }
    };
    dfs(v, 0);
    if (count)
        *count = hits;
    return found;
}

std::string QBG::to_dot() const {
    std::ostringstream out;
    out << "digraph qbg {\n";
    for (int x = 0; x < W_->size(); ++x)
        out << "  \"" << W_->word_str(x) << "\";\n";
    const int P = W_->rs().num_pos();
    for (int x = 0; x < W_->size(); ++x)
        for (int k = 0; k < P; ++k) {
            if (kind_[x][k] == EdgeKind::None)
                continue;
            out << "  \"" << W_->word_str(x) << "\" -> \""
                << W_->word_str(W_->mult_refl(x, k)) << "\" [label=\""
                << W_->rs().render_root(W_->rs().pos_root(k)) << "\"";
            if (kind_[x][k] == EdgeKind::Quantum)
                out << ", style=dashed";
            out << "];\n";
        }
    out << "}\n";
    return out.str();
}

std::string QBG::to_json() const {
    std::ostringstream out;
    out << "{\"vertices\":[";
    for (int x = 0; x < W_->size(); ++x)
        out << (x ? "," : "") << "\"" << W_->word_str(x) << "\"";
    out << "],\"edges\":[";
    bool first = true;
    const int P = W_->rs().num_pos();
    for (int x = 0; x < W_->size(); ++x)
        for (int k = 0; k < P; ++k) {
            if (kind_[x][k] == EdgeKind::None)
                continue;
            if (!first)
                out << ",";
            first = false;
            out << "{\"source\":\"" << W_->word_str(x) << "\",\"target\":\""
                << W_->word_str(W_->mult_refl(x, k)) << "\",\"label\":[";
            const Coords &c = W_->rs().pos_root(k);
            for (int i = 0; i < (int)c.size(); ++i)
                out << (i ? "," : "") << c[i];
            out << "],\"kind\":\""
                << (kind_[x][k] == EdgeKind::Bruhat ? "bruhat" : "quantum") << "\"}";
        }
    out << "]}";
    return out.str();
}

} // namespace qalcove
