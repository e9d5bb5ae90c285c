#include "qalcove/forgetful.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qalcove {

namespace {

Rational degree_quotient(const RootSystem &rs, const Weight &lambda,
                         const ChainEntry &e) {
    long long pairing = rs.ipair(lambda, rs.scoroot_coords(e.gamma));
    return Rational(e.level, pairing);
}

} // namespace

ForgetfulRecord xi_map(const IQLSContext &ctx, const LambdaChain &chain,
                       const AdmissibleSubset &A, bool strict) {
    const RootSystem &rs = ctx.weyl().rs();
    const Weight &lambda = ctx.lambda();
    const int s = A.size();

    // blocks of equal degree quotient along the selected positions, padded
    // with an empty quotient-0 block in front and an empty quotient-1 block
    // at the back when those values are missing
    struct Block {
        Rational value;
        int begin, end; // half-open range of indices into A
    };
    std::vector<Block> blocks;
    for (int k = 0; k < s; ++k) {
        Rational d = degree_quotient(rs, lambda, chain.entries[A.positions[k]]);
        if (!blocks.empty() && blocks.back().value == d)
            blocks.back().end = k + 1;
        else
            blocks.push_back({d, k, k + 1});
    }
    if (blocks.empty() || !(blocks.front().value == Rational(0)))
        blocks.insert(blocks.begin(), {Rational(0), 0, 0});
    if (!(blocks.back().value == Rational(1)))
        blocks.push_back({Rational(1), s, s});

    const int t = (int)blocks.size() - 1;
    ForgetfulRecord rec;
    rec.endpoint = A.end();
    for (int a = 1; a <= t; ++a)
        rec.m_idx.push_back(blocks[a - 1].end);

    // n_a: boundary between negative and positive labels inside segment a
    for (int a = 1; a <= t - 1; ++a) {
        int lo = blocks[a].begin, hi = blocks[a].end;
        int negatives = 0;
        bool seen_positive = false;
        for (int k = lo; k < hi; ++k) {
            const ChainEntry &e = chain.entries[A.positions[k]];
            if (e.gamma.sign < 0) {
                if (seen_positive)
                    throw std::logic_error(
                        "segment labels are not negative-then-positive");
                ++negatives;
            } else {
                seen_positive = true;
            }
        }
        rec.n_idx.push_back(lo + negatives);
    }

    for (int i = t; i >= 1; --i)
        rec.eta.x.push_back(A.path[rec.m_idx[i - 1]]);
    for (int i = t - 1; i >= 1; --i)
        rec.eta.y.push_back(A.path[rec.n_idx[i - 1]]);
    rec.eta.sigma.push_back(Rational(0));
    for (int i = 1; i <= t - 1; ++i)
        rec.eta.sigma.push_back(Rational(1) - blocks[t - i].value);
    rec.eta.sigma.push_back(Rational(1));

    if (auto err = ctx.validate(rec.eta, false, nullptr, !strict))
        throw std::logic_error("forgetful image of " + positions_str(A) +
                               " is not an interpolated path: " + *err);
    return rec;
}

std::pair<IQLSPath, int> forgetful(const IQLSContext &ctx, const LambdaChain &chain,
                                   const AdmissibleSubset &A, bool strict) {
    ForgetfulRecord rec = xi_map(ctx, chain, A, strict);
    return {rec.eta, rec.endpoint};
}

bool image_predicate(const IQLSContext &ctx, const IQLSPath &eta, int u, int w) {
    return ctx.has_plus_arrow(w, eta.final()) &&
           ctx.has_minus_arrow(eta.initial(), u);
}

AdmissibleSubset forgetful_inverse(const IQLSContext &ctx, const LambdaChain &chain,
                                   const IQLSPath &eta, int u, int w, bool strict) {
    const RootSystem &rs = ctx.weyl().rs();
    const Weight &lambda = ctx.lambda();
    const int s = eta.steps();

    std::vector<AffineCoroot> lifted;
    auto lift = [&](const QBGPath &path, bool plus, const Rational &sigma) {
        Rational d = Rational(1) - sigma;
        for (int label : path.labels) {
            SRoot gamma{label, plus ? +1 : -1};
            Rational deg = d * rs.pair(lambda, rs.scoroot_coords(gamma));
            if (!deg.is_integer())
                throw std::logic_error("lifted degree is not integral");
            lifted.push_back({gamma, (int)deg.num});
        }
    };

    auto final_path = ctx.arrow(w, eta.final(), Rational(1), true, false, true);
    if (!final_path)
        throw std::invalid_argument("no arrow w =>(lambda,+) kappa(eta)");
    lift(*final_path, true, Rational(1)); // d = 0

    for (int i = s - 1; i >= 1; --i) {
        auto minus = ctx.arrow(eta.x[i], eta.y[i - 1], eta.sigma[i], false, false, true);
        if (!minus)
            throw std::invalid_argument("no (lambda,-) arrow at junction " +
                                        std::to_string(i));
        auto plus = ctx.arrow(eta.y[i - 1], eta.x[i - 1], eta.sigma[i], true, false, true);
        if (!plus)
            throw std::invalid_argument("no (lambda,+) arrow at junction " +
                                        std::to_string(i));
        lift(*minus, false, eta.sigma[i]);
        lift(*plus, true, eta.sigma[i]);
    }

    auto init_path = ctx.arrow(eta.initial(), u, Rational(1), false, false, true);
    if (!init_path)
        throw std::invalid_argument("no arrow iota(eta) =>(lambda,-) u");
    lift(*init_path, false, Rational(0)); // d = 1

    std::set<int> positions;
    for (const auto &b : lifted) {
        int pos = chain.find(b);
        if (pos < 0)
            throw std::logic_error("lifted coroot is outside the chain");
        if (!positions.insert(pos).second)
            throw std::logic_error("lifted coroots collide in the chain");
    }

    AdmissibleSubset A;
    A.positions.assign(positions.begin(), positions.end());
    A.path.push_back(w);
    for (int j : A.positions) {
        int label = chain.entries[j].gamma.index;
        EdgeKind e = ctx.graph().edge(A.path.back(), label);
        if (e == EdgeKind::None)
            throw std::logic_error("reconstructed subset is not admissible");
        A.kinds.push_back(e);
        A.path.push_back(ctx.graph().target(A.path.back(), label));
    }

    auto [eta_back, end_back] = forgetful(ctx, chain, A, strict);
    if (!(eta_back == eta) || end_back != u)
        throw std::logic_error("inverse does not round-trip through the forgetful map");
    return A;
}

std::string forgetful_table_markdown(const IQLSContext &ctx, const LambdaChain &chain,
                                     const std::vector<AdmissibleSubset> &subsets) {
    const WeylGroup &W = ctx.weyl();
    std::ostringstream out;
    out << "| A | forgetful(A) |\n|---|---|\n";
    for (const auto &A : subsets) {
        auto [eta, u] = forgetful(ctx, chain, A);
        out << "| " << positions_str(A) << " | (" << ctx.display(eta) << ", "
            << W.word_str(u) << ") |\n";
    }
    return out.str();
}

std::string image_table_markdown(const IQLSContext &ctx, int w) {
    const WeylGroup &W = ctx.weyl();
    std::ostringstream out;
    out << "| eta | w =>(+) kappa(eta)? | u with iota(eta) =>(-) u |\n|---|---|---|\n";
    for (const auto &eta : ctx.enumerate()) {
        bool reach = ctx.has_plus_arrow(w, eta.final());
        out << "| " << ctx.display(eta) << " | " << (reach ? "o" : "x") << " | ";
        if (!reach) {
            out << "-";
        } else {
            bool first = true;
            for (int u = 0; u < W.size(); ++u) {
                if (!ctx.has_minus_arrow(eta.initial(), u))
                    continue;
                if (!first)
                    out << ", ";
                first = false;
                out << W.word_str(u);
            }
        }
        out << " |\n";
    }
    return out.str();
}

} // namespace qalcove
