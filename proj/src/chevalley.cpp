#include "qalcove/chevalley.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qalcove {

long long PartitionTuple::size() const {
    long long total = 0;
    for (const auto &p : parts)
        for (int v : p)
            total += v;
    return total;
}

Coords PartitionTuple::first_columns(int rank) const {
    Coords c(rank, 0);
    for (int i = 0; i < rank; ++i)
        if (!parts[i].empty())
            c[i] = parts[i][0];
    return c;
}

std::vector<PartitionTuple> par_truncated(const RootSystem &rs, const Weight &lambda,
                                          int max_size) {
    if (max_size < 0)
        throw std::invalid_argument("partition truncation must be nonnegative");
    if (!lambda.is_integral())
        throw std::invalid_argument("partition bounds need an integral weight");

    std::vector<long long> bound(rs.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
        bound[i] = std::max(lambda.m[i].num, 0LL);

    std::vector<PartitionTuple> out;
    PartitionTuple cur;
    cur.parts.resize(rs.rank());
    // per node, weakly decreasing parts within the remaining size budget
    std::function<void(int, int)> node = [&](int i, int budget) {
        if (i == rs.rank()) {
            out.push_back(cur);
            return;
        }
        std::function<void(int, int)> extend = [&](int remaining, int cap) {
            node(i + 1, remaining);
            if ((long long)cur.parts[i].size() >= bound[i])
                return;
            for (int part = 1; part <= std::min(remaining, cap); ++part) {
                cur.parts[i].push_back(part);
                extend(remaining - part, part);
                cur.parts[i].pop_back();
            }
        };
        extend(budget, max_size);
    };
    node(0, max_size);

    std::sort(out.begin(), out.end(), [](const PartitionTuple &a, const PartitionTuple &b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.parts < b.parts;
    });
    return out;
}

bool operator<(const ChevalleyTerm &a, const ChevalleyTerm &b) {
    if (a.sign != b.sign)
        return a.sign < b.sign;
    if (a.q_exp != b.q_exp)
        return a.q_exp < b.q_exp;
    if (a.weight != b.weight)
        return a.weight < b.weight;
    if (a.direction != b.direction)
        return a.direction < b.direction;
    return a.shift < b.shift;
}

std::vector<ChevalleyTerm> terms_from_admissible(const IQLSContext &ctx,
                                                 const LambdaChain &chain, int w) {
    const WeylGroup &W = ctx.weyl();
    std::vector<ChevalleyTerm> terms;
    for (const auto &A : admissible_subsets(ctx.graph(), w, chain)) {
        SubsetStats s = subset_stats(W, chain, A);
        ChevalleyTerm t;
        t.sign = s.n % 2 == 0 ? +1 : -1;
        t.q_exp = -s.height;
        t.weight = s.wt;
        t.direction = s.end;
        t.shift = s.down;
        terms.push_back(std::move(t));
    }
    return terms;
}

std::vector<ChevalleyTerm> terms_from_iqls(const IQLSContext &ctx, int w) {
    const WeylGroup &W = ctx.weyl();
    std::vector<ChevalleyTerm> terms;
    // the relaxed universe carries the identity; forgetful images can violate
    // the strict junction-direction constraint (G2), and the image
    // characterization holds exactly over the relaxed set
    for (const auto &eta : ctx.enumerate(false, true)) {
        if (!ctx.has_plus_arrow(w, eta.final()))
            continue;
        PathStats ps = ctx.stats(eta);
        Rational degv = ctx.deg(eta, w);
        if (!degv.is_integer())
            throw std::logic_error("degree statistic is not an integer");
        for (int u = 0; u < W.size(); ++u) {
            if (!ctx.has_minus_arrow(eta.initial(), u))
                continue;
            ChevalleyTerm t;
            long long parity = ps.nega + W.length(u) - W.length(ps.iota);
            t.sign = ((parity % 2) + 2) % 2 == 0 ? +1 : -1;
            t.q_exp = degv.num;
            t.weight = ps.wt;
            t.direction = u;
            t.shift = ctx.xi(u, eta, w);
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

VerifyReport verify_identity(const IQLSContext &ctx, const LambdaChain &chain, int w) {
    auto lhs = terms_from_admissible(ctx, chain, w);
    auto rhs = terms_from_iqls(ctx, w);
    VerifyReport r;
    r.lhs_count = lhs.size();
    r.rhs_count = rhs.size();

    std::map<ChevalleyTerm, long long> excess;
    for (const auto &t : lhs)
        ++excess[t];
    for (const auto &t : rhs)
        --excess[t];
    for (const auto &[t, e] : excess)
        if (e != 0)
            r.diff.push_back({t, e});
    r.equal = r.diff.empty();
    return r;
}

namespace {

nlohmann::json weight_json(const Weight &w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &c : w.m)
        j.push_back(std::vector<long long>{c.num, c.den});
    return j;
}

nlohmann::json term_json(const RootSystem &rs, const WeylGroup &W,
                         const ChevalleyTerm &t) {
    (void)rs;
    nlohmann::json j;
    j["sign"] = t.sign;
    j["q_exponent"] = t.q_exp;
    j["weight"] = weight_json(t.weight);
    j["gch_index"] = {{"direction", W.word_str(t.direction)},
                      {"translation", t.shift}};
    return j;
}

} // namespace

std::string term_to_json(const RootSystem &rs, const WeylGroup &W,
                         const ChevalleyTerm &t) {
    return term_json(rs, W, t).dump();
}

std::string report_to_json(const IQLSContext &ctx, const std::string &case_label,
                           const VerifyReport &r) {
    const WeylGroup &W = ctx.weyl();
    nlohmann::json j;
    j["case"] = case_label;
    j["equal"] = r.equal;
    j["lhs_terms"] = r.lhs_count;
    j["rhs_terms"] = r.rhs_count;
    j["diff"] = nlohmann::json::array();
    for (const auto &[t, e] : r.diff) {
        nlohmann::json d = term_json(W.rs(), W, t);
        d["excess"] = e;
        j["diff"].push_back(d);
    }
    return j.dump();
}

std::string emit_series_json(const IQLSContext &ctx, const LambdaChain &chain, int w,
                             const Coords &xi_shift, int max_par) {
    const RootSystem &rs = ctx.weyl().rs();
    const WeylGroup &W = ctx.weyl();
    long long base = rs.ipair(ctx.lambda(), xi_shift);

    auto terms = terms_from_admissible(ctx, chain, w);
    std::sort(terms.begin(), terms.end());
    auto tuples = par_truncated(rs, ctx.lambda(), max_par);

    nlohmann::json series = nlohmann::json::array();
    for (const auto &chi : tuples) {
        Coords iota = chi.first_columns(rs.rank());
        for (const auto &t : terms) {
            nlohmann::json entry;
            entry["sign"] = t.sign;
            entry["q_exponent"] = t.q_exp - base - chi.size();
            entry["weight"] = weight_json(t.weight);
            Coords translation = xi_shift;
            for (int i = 0; i < rs.rank(); ++i)
                translation[i] += t.shift[i] + iota[i];
            entry["gch_index"] = {{"direction", W.word_str(t.direction)},
                                  {"translation", translation}};
            series.push_back(entry);
        }
    }
    return series.dump();
}

} // namespace qalcove
