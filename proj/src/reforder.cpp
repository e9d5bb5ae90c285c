#include "qalcove/reforder.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qalcove {

int ReflectionOrder::position(SRoot r) const {
    for (int i = 0; i < (int)seq.size(); ++i)
        if (seq[i] == r)
            return i;
    return -1;
}

LambdaBlocks lambda_blocks(const RootSystem &rs, const Weight &lambda) {
    LambdaBlocks b;
    for (int k = 0; k < rs.num_pos(); ++k) {
        Rational p = rs.pair(lambda, rs.pos_coroot(k));
        if (p < Rational(0))
            b.neg.push_back(k);
        else if (p.is_zero())
            b.zero.push_back(k);
        else
            b.pos.push_back(k);
    }
    return b;
}

std::optional<OrderViolation> reflection_order_violation(const RootSystem &rs,
                                                         const ReflectionOrder &order) {
    std::map<Coords, int> pos;
    for (int i = 0; i < (int)order.seq.size(); ++i)
        pos[rs.sroot_coords(order.seq[i])] = i;
    for (int i = 0; i < (int)order.seq.size(); ++i)
        for (int j = i + 1; j < (int)order.seq.size(); ++j) {
            Coords sum = rs.sroot_coords(order.seq[i]);
            Coords cj = rs.sroot_coords(order.seq[j]);
            for (int t = 0; t < rs.rank(); ++t)
                sum[t] += cj[t];
            auto it = pos.find(sum);
            if (it == pos.end())
                continue;
            if (!(i < it->second && it->second < j))
                return OrderViolation{order.seq[i], order.seq[j],
                                      *rs.classify(sum)};
        }
    return std::nullopt;
}

bool is_reflection_order(const RootSystem &rs, const ReflectionOrder &order) {
    return !reflection_order_violation(rs, order).has_value();
}

std::optional<OrderViolation> coroot_betweenness_violation(const RootSystem &rs,
                                                           const ReflectionOrder &order) {
    std::map<SRoot, int> pos;
    for (int i = 0; i < (int)order.seq.size(); ++i)
        pos[order.seq[i]] = i;
    for (int i = 0; i < (int)order.seq.size(); ++i)
        for (int j = i + 1; j < (int)order.seq.size(); ++j) {
            Coords sum = rs.scoroot_coords(order.seq[i]);
            Coords cj = rs.scoroot_coords(order.seq[j]);
            for (int t = 0; t < rs.rank(); ++t)
                sum[t] += cj[t];
            auto mid = rs.classify_coroot(sum);
            if (!mid)
                continue;
            auto it = pos.find(*mid);
            if (it == pos.end())
                continue;
            if (!(i < it->second && it->second < j))
                return OrderViolation{order.seq[i], order.seq[j], *mid};
        }
    return std::nullopt;
}

namespace {

// block class within w(lambda)Delta^+: 0 = positive-pairing roots,
// 1 = negated negative-pairing roots, 2 = negated zero-pairing roots;
// -1 if outside the universe
int conjugate_block_class(const RootSystem &rs, const Weight &lambda, SRoot r) {
    Rational p = rs.pair(lambda, rs.pos_coroot(r.index));
    if (r.sign > 0)
        return p > Rational(0) ? 0 : -1;
    if (p < Rational(0))
        return 1;
    if (p.is_zero())
        return 2;
    return -1;
}

bool is_permutation(const ReflectionOrder &order, int expected_size) {
    if ((int)order.seq.size() != expected_size)
        return false;
    std::set<SRoot> seen(order.seq.begin(), order.seq.end());
    return (int)seen.size() == expected_size;
}

} // namespace

bool in_ro_lambda(const RootSystem &rs, const Weight &lambda,
                  const ReflectionOrder &order) {
    if (!is_permutation(order, rs.num_pos()))
        return false;
    for (SRoot r : order.seq)
        if (r.sign != +1)
            return false;
    int prev = 0;
    for (SRoot r : order.seq) {
        Rational p = rs.pair(lambda, rs.pos_coroot(r.index));
        int cls = p < Rational(0) ? 0 : (p.is_zero() ? 1 : 2);
        if (cls < prev)
            return false;
        prev = cls;
    }
    return is_reflection_order(rs, order);
}

bool in_ro_lambda_conjugate(const RootSystem &rs, const Weight &lambda,
                            const ReflectionOrder &order) {
    if (!is_permutation(order, rs.num_pos()))
        return false;
    int prev = 0;
    for (SRoot r : order.seq) {
        int cls = conjugate_block_class(rs, lambda, r);
        if (cls < 0 || cls < prev)
            return false;
        prev = cls;
    }
    return is_reflection_order(rs, order);
}

namespace {

std::vector<int> word_by_descents(const WeylGroup &W, int w, bool largest) {
    const RootSystem &rs = W.rs();
    std::vector<int> simple_idx(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
        Coords e(rs.rank(), 0);
        e[i] = 1;
        simple_idx[i] = rs.pos_index(e);
    }
    std::vector<int> collected;
    while (w != W.identity()) {
        int pick = -1;
        for (int i = 0; i < rs.rank(); ++i) {
            if (W.act_posroot(w, simple_idx[i]).sign < 0) {
                pick = i;
                if (!largest)
                    break;
            }
        }
        if (pick < 0)
            throw std::logic_error("non-identity element without descent");
        collected.push_back(pick);
        w = W.mult_simple(w, pick);
    }
    std::reverse(collected.begin(), collected.end());
    return collected;
}

ReflectionOrder ro_for_lambda_impl(const WeylGroup &W, const Weight &lambda,
                                   bool largest) {
    const RootSystem &rs = W.rs();
    DominantData d = dominant_data(W, lambda);
    DominantData dneg = dominant_data(W, -lambda);
    int wo_par = parabolic_longest(W, d.stabilizer_nodes);

    std::vector<int> concat = word_by_descents(W, W.inverse(dneg.u_lambda), largest);
    for (int i : word_by_descents(W, d.u_lambda, largest))
        concat.push_back(i);
    for (int i : word_by_descents(W, wo_par, largest))
        concat.push_back(i);
    if ((int)concat.size() != rs.num_pos() || W.from_word(concat) != W.longest())
        throw std::logic_error("factorization of the longest element is not reduced");

    // beta_k = s_{j_{N-1}} ... s_{j_{k+1}} (alpha_{j_k}), the Papi order of the
    // reversed word, read in reverse
    const int N = rs.num_pos();
    std::vector<SRoot> beta(N);
    int suffix = W.identity();
    for (int k = N - 1; k >= 0; --k) {
        Coords simple(rs.rank(), 0);
        simple[concat[k]] = 1;
        auto img = rs.classify(W.act_root(suffix, simple));
        if (!img || img->sign != +1)
            throw std::logic_error("suffix image is not a positive root");
        beta[k] = *img;
        suffix = W.mult(suffix, W.from_word({concat[k]}));
    }

    ReflectionOrder prec;
    prec.seq.resize(N);
    for (int k = 0; k < N; ++k) {
        auto img = rs.classify(W.act_root(d.w_lambda, rs.sroot_coords(beta[k])));
        if (!img)
            throw std::logic_error("w(lambda) image left the root system");
        prec.seq[k] = *img;
    }
    if (!in_ro_lambda_conjugate(rs, lambda, prec))
        throw std::logic_error("constructed order is not in RO(lambda, w(lambda)Delta+)");

    ReflectionOrder order = ro_conjugate_inverse(rs, lambda, prec);
    if (!in_ro_lambda(rs, lambda, order))
        throw std::logic_error("pulled-back order is not in RO(lambda, Delta+)");
    return order;
}

} // namespace

ReflectionOrder ro_for_lambda(const WeylGroup &W, const Weight &lambda) {
    return ro_for_lambda_impl(W, lambda, false);
}

ReflectionOrder ro_for_lambda_alt(const WeylGroup &W, const Weight &lambda) {
    return ro_for_lambda_impl(W, lambda, true);
}

ReflectionOrder ro_conjugate(const RootSystem &rs, const Weight &lambda,
                             const ReflectionOrder &order) {
    if (!in_ro_lambda(rs, lambda, order))
        throw std::invalid_argument("input order is not in RO(lambda, Delta+)");
    std::vector<SRoot> neg, zero, pos;
    for (SRoot r : order.seq) {
        Rational p = rs.pair(lambda, rs.pos_coroot(r.index));
        if (p < Rational(0))
            neg.push_back({r.index, -1});
        else if (p.is_zero())
            zero.push_back({r.index, -1});
        else
            pos.push_back(r);
    }
    ReflectionOrder out;
    out.seq = pos;
    out.seq.insert(out.seq.end(), neg.begin(), neg.end());
    out.seq.insert(out.seq.end(), zero.begin(), zero.end());
    return out;
}

ReflectionOrder ro_conjugate_inverse(const RootSystem &rs, const Weight &lambda,
                                     const ReflectionOrder &order) {
    if (!in_ro_lambda_conjugate(rs, lambda, order))
        throw std::invalid_argument(
            "input order is not in RO(lambda, w(lambda)Delta+)");
    std::vector<SRoot> neg, zero, pos;
    for (SRoot r : order.seq) {
        switch (conjugate_block_class(rs, lambda, r)) {
        case 0: pos.push_back(r); break;
        case 1: neg.push_back({r.index, +1}); break;
        default: zero.push_back({r.index, +1}); break;
        }
    }
    ReflectionOrder out;
    out.seq = neg;
    out.seq.insert(out.seq.end(), zero.begin(), zero.end());
    out.seq.insert(out.seq.end(), pos.begin(), pos.end());
    return out;
}

std::vector<AffineCoroot> inversion_set(const RootSystem &rs, const Weight &lambda) {
    std::vector<AffineCoroot> out;
    for (int k = 0; k < rs.num_pos(); ++k) {
        long long n = rs.ipair(lambda, rs.pos_coroot(k));
        if (n > 0) {
            for (int deg = 0; deg < n; ++deg)
                out.push_back({SRoot{k, +1}, deg});
        } else if (n < 0) {
            for (int deg = 1; deg <= -n; ++deg)
                out.push_back({SRoot{k, -1}, deg});
        }
    }
    return out;
}

std::pair<Rational, SRoot> phi(const RootSystem &rs, const Weight &lambda,
                               const AffineCoroot &beta) {
    long long n = rs.ipair(lambda, rs.scoroot_coords(beta.gamma));
    bool in_inv = n > 0 && (beta.gamma.sign > 0 ? (beta.deg >= 0 && beta.deg < n)
                                                : (beta.deg >= 1 && beta.deg <= n));
    if (!in_inv)
        throw std::invalid_argument("affine coroot is not in the inversion set");
    return {Rational(beta.deg, n), beta.gamma};
}

int LambdaChain::find(const AffineCoroot &b) const {
    for (int k = 0; k < size(); ++k)
        if (entries[k].gamma == b.gamma && entries[k].level == b.deg)
            return k;
    return -1;
}

LambdaChain suitable_chain(const WeylGroup &W, const Weight &lambda,
                           const ReflectionOrder &order) {
    const RootSystem &rs = W.rs();
    ReflectionOrder conj = ro_conjugate(rs, lambda, order);
    std::map<SRoot, int> star_pos; // position under the reversed conjugated order
    for (int i = 0; i < (int)conj.seq.size(); ++i)
        star_pos[conj.seq[i]] = (int)conj.seq.size() - 1 - i;

    auto inv = inversion_set(rs, lambda);
    std::vector<std::pair<std::pair<Rational, int>, AffineCoroot>> keyed;
    for (const auto &b : inv) {
        auto [d, bar] = phi(rs, lambda, b);
        auto it = star_pos.find(bar);
        if (it == star_pos.end())
            throw std::logic_error("Phi image outside the expected universe");
        keyed.push_back({{d, it->second}, b});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
        if (a.first.first != b.first.first)
            return a.first.first < b.first.first;
        return a.first.second < b.first.second;
    });
    for (size_t i = 1; i < keyed.size(); ++i)
        if (keyed[i - 1].first == keyed[i].first)
            throw std::logic_error("Phi is not injective on the inversion set");

    LambdaChain chain;
    chain.lambda = lambda;
    for (const auto &[key, b] : keyed) {
        ChainEntry e;
        e.gamma = b.gamma;
        e.level = b.deg;
        e.ltilde = rs.ipair(lambda, rs.scoroot_coords(b.gamma)) - b.deg;
        chain.entries.push_back(e);
    }
    return chain;
}

namespace {

bool affine_positive(const RootSystem &rs, const Coords &coroot, long long deg,
                     SRoot *out) {
    auto cls = rs.classify_coroot(coroot);
    if (!cls)
        return false;
    if (out)
        *out = *cls;
    return deg >= 1 || (deg == 0 && cls->sign > 0);
}

} // namespace

bool affine_reflection_order_ok(const RootSystem &rs, const Weight &lambda,
                                const std::vector<AffineCoroot> &sorted_inv) {
    (void)lambda;
    std::map<std::pair<SRoot, int>, int> pos;
    for (int i = 0; i < (int)sorted_inv.size(); ++i)
        pos[{sorted_inv[i].gamma, sorted_inv[i].deg}] = i;
    auto coroot_of = [&](const AffineCoroot &b) { return rs.scoroot_coords(b.gamma); };

    // axiom 1: sums of members that stay real must be members, in between
    for (int i = 0; i < (int)sorted_inv.size(); ++i)
        for (int j = i + 1; j < (int)sorted_inv.size(); ++j) {
            Coords sum = coroot_of(sorted_inv[i]);
            Coords cj = coroot_of(sorted_inv[j]);
            for (int t = 0; t < rs.rank(); ++t)
                sum[t] += cj[t];
            long long deg = sorted_inv[i].deg + sorted_inv[j].deg;
            SRoot bar;
            if (!affine_positive(rs, sum, deg, &bar))
                continue;
            auto it = pos.find({bar, (int)deg});
            if (it == pos.end())
                return false;
            if (!(i < it->second && it->second < j))
                return false;
        }

    // axiom 2: members decompose into positive real affine coroots only with a
    // smaller member on one side
    for (int c = 0; c < (int)sorted_inv.size(); ++c) {
        Coords target = coroot_of(sorted_inv[c]);
        int tdeg = sorted_inv[c].deg;
        for (int k = 0; k < rs.num_pos(); ++k)
            for (int sgn : {+1, -1}) {
                Coords c1 = rs.scoroot_coords(SRoot{k, sgn});
                Coords c2(rs.rank());
                for (int t = 0; t < rs.rank(); ++t)
                    c2[t] = target[t] - c1[t];
                auto cls2 = rs.classify_coroot(c2);
                if (!cls2)
                    continue;
                int lo1 = sgn > 0 ? 0 : 1;
                int lo2 = cls2->sign > 0 ? 0 : 1;
                for (int k1 = lo1; k1 <= tdeg - lo2; ++k1) {
                    int k2 = tdeg - k1;
                    auto ita = pos.find({SRoot{k, sgn}, k1});
                    auto itb = pos.find({*cls2, k2});
                    bool ok = (ita != pos.end() && ita->second < c) ||
                              (itb != pos.end() && itb->second < c);
                    if (!ok)
                        return false;
                }
            }
    }
    return true;
}

std::string order_to_json(const RootSystem &rs, const ReflectionOrder &order) {
    nlohmann::json j = nlohmann::json::array();
    for (SRoot r : order.seq)
        j.push_back(rs.sroot_coords(r));
    return j.dump();
}

ReflectionOrder order_from_json(const RootSystem &rs, const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ReflectionOrder order;
    for (const auto &item : j) {
        Coords c = item.get<Coords>();
        auto cls = rs.classify(c);
        if (!cls)
            throw std::invalid_argument("order entry is not a root: " +
                                        item.dump());
        order.seq.push_back(*cls);
    }
    return order;
}

std::string chain_to_json(const RootSystem &rs, const LambdaChain &chain) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &e : chain.entries) {
        nlohmann::json item;
        item["root"] = rs.sroot_coords(e.gamma);
        item["level"] = e.level;
        item["coroot"] = rs.scoroot_coords(e.gamma);
        item["degree"] = e.level;
        j.push_back(item);
    }
    return j.dump();
}

LambdaChain chain_from_json(const RootSystem &rs, const Weight &lambda,
                            const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LambdaChain chain;
    chain.lambda = lambda;
    for (const auto &item : j) {
        Coords c = item.at("root").get<Coords>();
        auto cls = rs.classify(c);
        if (!cls)
            throw std::invalid_argument("chain entry is not a root: " + item.dump());
        ChainEntry e;
        e.gamma = *cls;
        e.level = item.at("level").get<int>();
        Rational p = rs.pair(lambda, rs.scoroot_coords(e.gamma));
        if (!p.is_integer())
            throw std::invalid_argument("chain root pairs non-integrally with lambda");
        e.ltilde = p.num - e.level;
        chain.entries.push_back(e);
    }
    return chain;
}

} // namespace qalcove
