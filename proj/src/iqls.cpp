#include "qalcove/iqls.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qalcove {

bool operator<(const IQLSPath &a, const IQLSPath &b) {
    if (a.steps() != b.steps())
        return a.steps() < b.steps();
    for (size_t i = 0; i < a.sigma.size(); ++i)
        if (a.sigma[i] != b.sigma[i])
            return a.sigma[i] < b.sigma[i];
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

IQLSContext::IQLSContext(const QBG &g, const Weight &lambda,
                         const ReflectionOrder &order)
    : g_(&g), lambda_(lambda), order_(order) {
    const RootSystem &rs = g.weyl().rs();
    if (!in_ro_lambda(rs, lambda, order))
        throw std::invalid_argument("order is not in RO(lambda, Delta+)");
    // pools in decreasing reflection order
    for (auto it = order.seq.rbegin(); it != order.seq.rend(); ++it) {
        Rational p = rs.pair(lambda, rs.pos_coroot(it->index));
        if (p > Rational(0))
            pool_plus_.push_back(it->index);
        else if (p < Rational(0))
            pool_minus_.push_back(it->index);
    }
    std::set<Rational> cands;
    for (int k : pool_plus_) {
        long long n = rs.ipair(lambda, rs.pos_coroot(k));
        for (long long j = 1; j < n; ++j)
            cands.insert(Rational(j, n));
    }
    for (int k : pool_minus_) {
        long long n = -rs.ipair(lambda, rs.pos_coroot(k));
        for (long long j = 1; j < n; ++j)
            cands.insert(Rational(j, n));
    }
    candidates_.assign(cands.begin(), cands.end());
}

std::vector<int> IQLSContext::arrow_pool(const Rational &sigma, bool plus) const {
    const RootSystem &rs = g_->weyl().rs();
    std::vector<int> pool;
    for (int k : plus ? pool_plus_ : pool_minus_) {
        Rational prod = sigma * rs.pair(lambda_, rs.pos_coroot(k));
        if (prod.is_integer())
            pool.push_back(k);
    }
    return pool;
}

std::optional<QBGPath> IQLSContext::arrow(int x, int y, const Rational &sigma,
                                          bool plus, bool q0,
                                          bool assert_unique) const {
    auto pool = arrow_pool(sigma, plus);
    int count = 0;
    auto path = g_->label_increasing_path(x, y, pool, q0, &count,
                                          assert_unique ? 1000000 : 2);
    if (assert_unique && count > 1)
        throw std::logic_error("restricted-pool label-increasing path is not unique");
    return path;
}

const IQLSContext::Relation &IQLSContext::relation(const Rational &sigma, bool plus,
                                                   bool q0) const {
    auto key = std::make_tuple(sigma, plus, q0);
    auto it = relcache_.find(key);
    if (it != relcache_.end())
        return it->second;

    const int N = g_->weyl().size();
    auto pool = arrow_pool(sigma, plus);
    Relation rel(N);
    for (int x = 0; x < N; ++x) {
        // endpoints of all strictly label-decreasing paths from x
        std::set<int> reach;
        std::vector<std::vector<char>> visited(N,
                                               std::vector<char>(pool.size() + 1, 0));
        std::function<void(int, int)> dfs = [&](int cur, int pos) {
            if (visited[cur][pos])
                return;
            visited[cur][pos] = 1;
            reach.insert(cur);
            for (int p = pos; p < (int)pool.size(); ++p) {
                EdgeKind e = g_->edge(cur, pool[p]);
                if (e == EdgeKind::None || (q0 && e != EdgeKind::Bruhat))
                    continue;
                dfs(g_->target(cur, pool[p]), p + 1);
            }
        };
        dfs(x, 0);
        rel[x].assign(reach.begin(), reach.end());
    }
    return relcache_.emplace(key, std::move(rel)).first->second;
}

std::vector<IQLSPath> IQLSContext::enumerate(bool q0, bool relaxed) const {
    const int N = g_->weyl().size();
    std::vector<IQLSPath> out;

    // built from the final direction leftwards; collected junction data is in
    // decreasing sigma order
    std::vector<int> xs, ys;
    std::vector<Rational> sigmas;
    std::function<void(int, int)> extend = [&](int front, int max_idx) {
        IQLSPath eta;
        eta.x.assign(xs.rbegin(), xs.rend());
        eta.y.assign(ys.rbegin(), ys.rend());
        eta.sigma.push_back(Rational(0));
        for (auto it = sigmas.rbegin(); it != sigmas.rend(); ++it)
            eta.sigma.push_back(*it);
        eta.sigma.push_back(Rational(1));
        out.push_back(std::move(eta));

        for (int idx = 0; idx < max_idx; ++idx) {
            const Rational &sg = candidates_[idx];
            const Relation &relm = relation(sg, false, q0);
            const Relation &relp = relation(sg, true, q0);
            for (int yv : relm[front]) {
                if (!relaxed && !ys.empty() && yv == ys.back())
                    continue;
                for (int xv : relp[yv]) {
                    if (xv == front)
                        continue;
                    xs.push_back(xv);
                    ys.push_back(yv);
                    sigmas.push_back(sg);
                    extend(xv, idx);
                    xs.pop_back();
                    ys.pop_back();
                    sigmas.pop_back();
                }
            }
        }
    };
    for (int xfinal = 0; xfinal < N; ++xfinal) {
        xs.push_back(xfinal);
        extend(xfinal, (int)candidates_.size());
        xs.pop_back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool IQLSContext::violates_y_constraint(const IQLSPath &eta) {
    for (size_t i = 0; i + 1 < eta.y.size(); ++i)
        if (eta.y[i] == eta.y[i + 1])
            return true;
    return false;
}

std::optional<std::string> IQLSContext::validate(const IQLSPath &eta, bool q0,
                                                 std::vector<JunctionWitness> *out,
                                                 bool relaxed) const {
    const int s = eta.steps();
    if (s < 1 || (int)eta.y.size() != s - 1 || (int)eta.sigma.size() != s + 1)
        return "sequence lengths are inconsistent";
    if (!(eta.sigma.front() == Rational(0)) || !(eta.sigma.back() == Rational(1)))
        return "sigma must start at 0 and end at 1";
    for (int i = 0; i + 1 <= s; ++i)
        if (!(eta.sigma[i] < eta.sigma[i + 1]))
            return "sigma sequence is not strictly increasing";
    for (int i = 0; i + 1 < s; ++i)
        if (eta.x[i] == eta.x[i + 1])
            return "consecutive directions x_i = x_{i+1}";
    if (!relaxed && violates_y_constraint(eta))
        return "consecutive junction directions y_i = y_{i+1}";
    for (int i = 1; i <= s - 1; ++i) {
        // junction i: x_{i+1} =>(-) y_i and y_i =>(+) x_i at sigma_i
        auto minus = arrow(eta.x[i], eta.y[i - 1], eta.sigma[i], false, q0);
        if (!minus)
            return "missing (lambda,-) arrow at junction " + std::to_string(i);
        auto plus = arrow(eta.y[i - 1], eta.x[i - 1], eta.sigma[i], true, q0);
        if (!plus)
            return "missing (lambda,+) arrow at junction " + std::to_string(i);
        if (out)
            out->push_back({*minus, *plus});
    }
    return std::nullopt;
}

PathStats IQLSContext::stats(const IQLSPath &eta) const {
    const WeylGroup &W = g_->weyl();
    PathStats st;
    st.iota = eta.initial();
    st.kappa = eta.final();
    st.wt = Weight(W.rs().rank());
    for (int k = 1; k <= eta.steps(); ++k) {
        Rational c = eta.sigma[k] - eta.sigma[k - 1];
        st.wt = st.wt + c * W.act_weight(eta.x[k - 1], lambda_);
    }
    st.nega = 0;
    for (int i = 1; i <= eta.steps() - 1; ++i)
        st.nega += g_->distance(eta.x[i], eta.y[i - 1]);
    return st;
}

Rational IQLSContext::deg(const IQLSPath &eta, int w) const {
    const RootSystem &rs = g_->weyl().rs();
    if (!has_plus_arrow(w, eta.final()))
        throw std::invalid_argument("missing arrow w =>(lambda,+) kappa(eta)");
    Rational total = -rs.pair(lambda_, g_->shortest_weight(w, eta.final()));
    for (int i = 1; i <= eta.steps() - 1; ++i) {
        Coords sum = g_->shortest_weight(eta.x[i], eta.y[i - 1]);
        Coords second = g_->shortest_weight(eta.y[i - 1], eta.x[i - 1]);
        for (int t = 0; t < rs.rank(); ++t)
            sum[t] += second[t];
        total -= eta.sigma[i] * rs.pair(lambda_, sum);
    }
    return total;
}

Coords IQLSContext::xi(int u, const IQLSPath &eta, int w) const {
    const RootSystem &rs = g_->weyl().rs();
    if (!has_plus_arrow(w, eta.final()))
        throw std::invalid_argument("missing arrow w =>(lambda,+) kappa(eta)");
    if (!has_minus_arrow(eta.initial(), u))
        throw std::invalid_argument("missing arrow iota(eta) =>(lambda,-) u");
    Coords total = g_->shortest_weight(w, eta.final());
    auto add = [&](const Coords &c) {
        for (int t = 0; t < rs.rank(); ++t)
            total[t] += c[t];
    };
    for (int i = 1; i <= eta.steps() - 1; ++i) {
        add(g_->shortest_weight(eta.x[i], eta.y[i - 1]));
        add(g_->shortest_weight(eta.y[i - 1], eta.x[i - 1]));
    }
    add(g_->shortest_weight(eta.initial(), u));
    return total;
}

bool IQLSContext::has_plus_arrow(int x, int y, bool q0) const {
    const auto &rel = relation(Rational(1), true, q0);
    return std::binary_search(rel[x].begin(), rel[x].end(), y);
}

bool IQLSContext::has_minus_arrow(int x, int y, bool q0) const {
    const auto &rel = relation(Rational(1), false, q0);
    return std::binary_search(rel[x].begin(), rel[x].end(), y);
}

std::string IQLSContext::display(const IQLSPath &eta) const {
    const WeylGroup &W = g_->weyl();
    std::string out = "(";
    for (int i = 0; i < eta.steps(); ++i) {
        if (i)
            out += ", ";
        out += W.word_str(eta.x[i]);
    }
    out += "; ";
    for (int i = 0; i + 1 < eta.steps(); ++i) {
        if (i)
            out += ", ";
        out += W.word_str(eta.y[i]);
    }
    out += "; ";
    for (size_t i = 0; i < eta.sigma.size(); ++i) {
        if (i)
            out += ", ";
        out += eta.sigma[i].str();
    }
    return out + ")";
}

std::string IQLSContext::to_json(const IQLSPath &eta) const {
    const WeylGroup &W = g_->weyl();
    nlohmann::json j;
    j["x"] = nlohmann::json::array();
    for (int v : eta.x)
        j["x"].push_back(W.word_str(v));
    j["y"] = nlohmann::json::array();
    for (int v : eta.y)
        j["y"].push_back(W.word_str(v));
    j["sigma"] = nlohmann::json::array();
    for (const auto &s : eta.sigma)
        j["sigma"].push_back(std::vector<long long>{s.num, s.den});
    return j.dump();
}

IQLSPath IQLSContext::from_json(const std::string &text) const {
    const WeylGroup &W = g_->weyl();
    nlohmann::json j = nlohmann::json::parse(text);
    IQLSPath eta;
    for (const auto &s : j.at("x"))
        eta.x.push_back(W.parse_word(s.get<std::string>()));
    for (const auto &s : j.at("y"))
        eta.y.push_back(W.parse_word(s.get<std::string>()));
    for (const auto &s : j.at("sigma")) {
        auto pair = s.get<std::vector<long long>>();
        if (pair.size() != 2)
            throw std::invalid_argument("sigma entries must be [num, den] pairs");
        eta.sigma.push_back(Rational(pair[0], pair[1]));
    }
    return eta;
}

} // namespace qalcove
