#include "qalcove/alcove.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qalcove {

void for_each_admissible(const QBG &g, int w, const LambdaChain &chain, bool q0,
                         const std::function<void(const AdmissibleSubset &)> &fn) {
    AdmissibleSubset cur;
    cur.path.push_back(w);
    std::function<void(int)> extend = [&](int next_pos) {
        fn(cur);
        for (int j = next_pos; j < chain.size(); ++j) {
            int label = chain.entries[j].gamma.index;
            EdgeKind e = g.edge(cur.path.back(), label);
            if (e == EdgeKind::None || (q0 && e != EdgeKind::Bruhat))
                continue;
            cur.positions.push_back(j);
            cur.path.push_back(g.target(cur.path.back(), label));
            cur.kinds.push_back(e);
            extend(j + 1);
            cur.positions.pop_back();
            cur.path.pop_back();
            cur.kinds.pop_back();
        }
    };
    extend(0);
}

std::vector<AdmissibleSubset> admissible_subsets(const QBG &g, int w,
                                                 const LambdaChain &chain, bool q0,
                                                 std::size_t limit) {
    std::vector<AdmissibleSubset> out;
    for_each_admissible(g, w, chain, q0, [&](const AdmissibleSubset &A) {
        if (out.size() >= limit)
            throw std::length_error("admissible subset enumeration exceeds limit");
        out.push_back(A);
    });
    std::sort(out.begin(), out.end(),
              [](const AdmissibleSubset &a, const AdmissibleSubset &b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a.positions < b.positions;
              });
    return out;
}

SubsetStats subset_stats(const WeylGroup &W, const LambdaChain &chain,
                         const AdmissibleSubset &A) {
    const RootSystem &rs = W.rs();
    SubsetStats s;
    s.end = A.end();
    s.down = Coords(rs.rank(), 0);
    s.height = 0;
    s.n = 0;

    for (int k = 0; k < A.size(); ++k) {
        const ChainEntry &e = chain.entries[A.positions[k]];
        if (e.gamma.sign < 0)
            ++s.n;
        if (A.kinds[k] == EdgeKind::Quantum) {
            s.quantum_positions.push_back(A.positions[k]);
            const Coords &cv = rs.pos_coroot(e.gamma.index);
            for (int i = 0; i < rs.rank(); ++i)
                s.down[i] += cv[i];
            s.height += e.gamma.sign * e.ltilde;
        }
    }

    // wt(A) = -w s_{beta_{j_1}, -l_{j_1}} ... s_{beta_{j_p}, -l_{j_p}} (-lambda),
    // with s_{beta, k}(nu) = nu - (<nu, beta^vee> - k) beta
    Weight nu = -chain.lambda;
    for (int k = A.size() - 1; k >= 0; --k) {
        const ChainEntry &e = chain.entries[A.positions[k]];
        Coords coroot = rs.scoroot_coords(e.gamma);
        Weight gamma_wt = rs.root_as_weight(rs.sroot_coords(e.gamma));
        Rational c = rs.pair(nu, coroot) + Rational(e.level);
        nu = nu - c * gamma_wt;
    }
    nu = W.act_weight(A.start(), nu);
    s.wt = -nu;
    if (!s.wt.is_integral())
        throw std::logic_error("admissible subset weight is not integral");
    return s;
}

std::string positions_str(const AdmissibleSubset &A) {
    std::string out = "{";
    for (int k = 0; k < A.size(); ++k) {
        if (k)
            out += ",";
        out += std::to_string(A.positions[k] + 1);
    }
    return out + "}";
}

std::string admissible_table_markdown(const WeylGroup &W, const LambdaChain &chain,
                                      const std::vector<AdmissibleSubset> &subsets) {
    const RootSystem &rs = W.rs();
    std::ostringstream out;
    out << "| A | end(A) | down(A) | wt(A) | height(A) |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto &A : subsets) {
        SubsetStats s = subset_stats(W, chain, A);
        out << "| " << positions_str(A) << " | " << W.word_str(s.end) << " | "
            << rs.render_coroot(s.down) << " | " << rs.render_weight(s.wt) << " | "
            << s.height << " |\n";
    }
    return out.str();
}

std::string admissible_json_lines(const WeylGroup &W, const LambdaChain &chain,
                                  const std::vector<AdmissibleSubset> &subsets) {
    std::ostringstream out;
    for (const auto &A : subsets) {
        SubsetStats s = subset_stats(W, chain, A);
        nlohmann::json j;
        std::vector<int> pos1;
        for (int p : A.positions)
            pos1.push_back(p + 1);
        std::vector<int> qpos1;
        for (int p : s.quantum_positions)
            qpos1.push_back(p + 1);
        j["A"] = pos1;
        j["end"] = W.word_str(s.end);
        j["down"] = s.down;
        std::vector<long long> wt;
        for (const auto &c : s.wt.m)
            wt.push_back(c.num);
        j["wt"] = wt;
        j["height"] = s.height;
        j["n"] = s.n;
        j["quantum"] = qpos1;
        out << j.dump() << "\n";
    }
    return out.str();
}

} // namespace qalcove
