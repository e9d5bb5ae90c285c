#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qalcove/alcove.hpp"

#include <map>
#include <set>

using namespace qalcove;

namespace {

struct A2Case {
    RootSystem rs{'A', 2};
    WeylGroup W{rs};
    QBG g{W};
    Weight lam = RootSystem::parse_weight("-1,2", 2);
    LambdaChain chain;
    int w;

    A2Case() {
        chain = suitable_chain(W, lam, ro_for_lambda(W, lam));
        w = W.parse_word("s1");
    }
};

// independent check over all 2^r subsets, walking edges directly
std::set<std::vector<int>> oracle_admissible(const QBG &g, int w,
                                             const LambdaChain &chain, bool q0) {
    const int r = chain.size();
    REQUIRE(r <= 12);
    std::set<std::vector<int>> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        int cur = w;
        bool ok = true;
        std::vector<int> positions;
        for (int j = 0; j < r && ok; ++j) {
            if (!(mask >> j & 1))
                continue;
            positions.push_back(j);
            EdgeKind e = g.edge(cur, chain.entries[j].gamma.index);
            if (e == EdgeKind::None || (q0 && e != EdgeKind::Bruhat))
                ok = false;
            else
                cur = g.target(cur, chain.entries[j].gamma.index);
        }
        if (ok)
            out.insert(positions);
    }
    return out;
}

} // namespace

TEST_CASE("the twelve admissible subsets of the A2 worked example") {
    A2Case c;
    auto subsets = admissible_subsets(c.g, c.w, c.chain);
    REQUIRE(subsets.size() == 12);

    // rows of the worked table: positions -> (end, down, wt, height)
    struct Row {
        std::vector<int> A;
        std::string end, down, wt;
        long long height;
    };
    std::vector<Row> table = {
        {{}, "s1", "0", "w1+w2", 0},
        {{1}, "s1 s2", "0", "-w1-w2", 0},
        {{2}, "s2 s1", "0", "2w1-w2", 0},
        {{3}, "s1 s2", "0", "0", 0},
        {{4}, "e", "a1^", "w1+w2", 0},
        {{1, 3}, "s1", "a2^", "0", 1},
        {{1, 4}, "s1 s2 s1", "0", "-w1-w2", 0},
        {{2, 3}, "s1 s2 s1", "0", "0", 0},
        {{2, 4}, "s2", "a1^", "2w1-w2", 0},
        {{3, 4}, "s1 s2 s1", "0", "0", 0},
        {{1, 3, 4}, "e", "a1^+a2^", "0", 1},
        {{2, 3, 4}, "s1 s2", "a1^", "0", 0},
    };
    REQUIRE(table.size() == 12);
    for (size_t i = 0; i < table.size(); ++i) {
        std::vector<int> pos1;
        for (int p : subsets[i].positions)
            pos1.push_back(p + 1);
        CHECK(pos1 == table[i].A);
        SubsetStats s = subset_stats(c.W, c.chain, subsets[i]);
        CHECK(c.W.word_str(s.end) == table[i].end);
        CHECK(c.rs.render_coroot(s.down) == table[i].down);
        CHECK(c.rs.render_weight(s.wt) == table[i].wt);
        CHECK(s.height == table[i].height);
        // n(A) counts selected negative chain roots; position 4 is -alpha_1
        bool has4 = std::count(pos1.begin(), pos1.end(), 4) > 0;
        CHECK(s.n == (has4 ? 1 : 0));
    }
}

TEST_CASE("the empty subset is always admissible with end = w") {
    A2Case c;
    for (int w = 0; w < c.W.size(); ++w) {
        auto subsets = admissible_subsets(c.g, w, c.chain);
        REQUIRE(!subsets.empty());
        CHECK(subsets[0].size() == 0);
        CHECK(subsets[0].end() == w);
        SubsetStats s = subset_stats(c.W, c.chain, subsets[0]);
        CHECK(s.wt == c.W.act_weight(w, c.lam));
    }
}

TEST_CASE("q=0 restriction of the worked example") {
    A2Case c;
    auto subsets = admissible_subsets(c.g, c.w, c.chain, true);
    std::set<std::vector<int>> got;
    for (const auto &A : subsets)
        got.insert(A.positions);
    std::set<std::vector<int>> expect = {{},     {0},    {1},    {2},
                                         {0, 3}, {1, 2}, {2, 3}};
    CHECK(got == expect);
    // Bruhat-only paths carry no quantum statistics
    for (const auto &A : subsets) {
        SubsetStats s = subset_stats(c.W, c.chain, A);
        CHECK(s.quantum_positions.empty());
        CHECK(s.down == Coords{0, 0});
        CHECK(s.height == 0);
    }
}

TEST_CASE("pruned enumeration matches the brute-force oracle") {
    for (const char *tok : {"A2", "B2"}) {
        RootSystem rs = RootSystem::parse(tok);
        WeylGroup W(rs);
        QBG g(W);
        Weight lam(rs.rank());
        lam.m[0] = Rational(-1);
        lam.m[1] = Rational(2);
        auto chain = suitable_chain(W, lam, ro_for_lambda(W, lam));
        REQUIRE(chain.size() <= 12);
        for (int w = 0; w < W.size(); ++w) {
            for (bool q0 : {false, true}) {
                auto subsets = admissible_subsets(g, w, chain, q0);
                std::set<std::vector<int>> got;
                for (const auto &A : subsets)
                    got.insert(A.positions);
                CHECK(got == oracle_admissible(g, w, chain, q0));
            }
        }
    }
}

TEST_CASE("weights agree with the incremental recursion") {
    // independent route: dropping the largest position j from A leaves an
    // admissible prefix B, and wt(A) = wt(B) + (l_j - <lambda, gamma_j^vee>)
    // * end(B)(gamma_j)
    for (const char *tok : {"A2", "B2"}) {
        for (const char *coeffs : {"-1,2", "2,-1", "1,1"}) {
            RootSystem rs = RootSystem::parse(tok);
            WeylGroup W(rs);
            QBG g(W);
            Weight lam = RootSystem::parse_weight(coeffs, 2);
            auto chain = suitable_chain(W, lam, ro_for_lambda(W, lam));
            for (int w = 0; w < W.size(); ++w) {
                std::map<std::vector<int>, Weight> known;
                for (const auto &A : admissible_subsets(g, w, chain)) {
                    Weight wt = subset_stats(W, chain, A).wt;
                    if (A.size() == 0) {
                        CHECK(wt == W.act_weight(w, lam));
                    } else {
                        std::vector<int> prefix(A.positions.begin(),
                                                A.positions.end() - 1);
                        auto it = known.find(prefix);
                        REQUIRE(it != known.end());
                        const ChainEntry &e = chain.entries[A.positions.back()];
                        long long pairing =
                            rs.ipair(lam, rs.scoroot_coords(e.gamma));
                        Weight gamma_wt =
                            rs.root_as_weight(rs.sroot_coords(e.gamma));
                        int end_prefix = A.path[A.size() - 1];
                        Weight incr = Rational(e.level - pairing) *
                                      W.act_weight(end_prefix, gamma_wt);
                        CHECK(wt == it->second + incr);
                    }
                    known[A.positions] = wt;
                }
            }
        }
    }
}

TEST_CASE("weights are integral across a sweep") {
    RootSystem rs('B', 2);
    WeylGroup W(rs);
    QBG g(W);
    for (int m1 = -2; m1 <= 2; ++m1)
        for (int m2 = -2; m2 <= 2; ++m2) {
            Weight lam(2);
            lam.m[0] = Rational(m1);
            lam.m[1] = Rational(m2);
            auto chain = suitable_chain(W, lam, ro_for_lambda(W, lam));
            for (int w = 0; w < W.size(); ++w)
                for (const auto &A : admissible_subsets(g, w, chain))
                    CHECK(subset_stats(W, chain, A).wt.is_integral());
        }
}

TEST_CASE("external chains with explicit levels reproduce the worked table") {
    A2Case c;
    // the worked chain, supplied through the JSON interface
    std::string json = R"([
        {"root": [0,1], "level": 0},
        {"root": [1,1], "level": 0},
        {"root": [0,1], "level": 1},
        {"root": [-1,0], "level": 1}
    ])";
    auto chain = chain_from_json(c.rs, c.lam, json);
    auto subsets = admissible_subsets(c.g, c.w, chain);
    CHECK(subsets.size() == 12);
    auto reference = admissible_subsets(c.g, c.w, c.chain);
    for (size_t i = 0; i < subsets.size(); ++i) {
        SubsetStats a = subset_stats(c.W, chain, subsets[i]);
        SubsetStats b = subset_stats(c.W, c.chain, reference[i]);
        CHECK(a.end == b.end);
        CHECK(a.down == b.down);
        CHECK(a.wt == b.wt);
        CHECK(a.height == b.height);
    }
}

TEST_CASE("markdown table layout") {
    A2Case c;
    auto subsets = admissible_subsets(c.g, c.w, c.chain);
    std::string md = admissible_table_markdown(c.W, c.chain, subsets);
    CHECK(md.find("| A | end(A) | down(A) | wt(A) | height(A) |") == 0);
    CHECK(md.find("| {} | s1 | 0 | w1+w2 | 0 |") != std::string::npos);
    CHECK(md.find("| {1,3} | s1 | a2^ | 0 | 1 |") != std::string::npos);
    CHECK(md.find("| {2,3,4} | s1 s2 | a1^ | 0 | 0 |") != std::string::npos);

    std::string jl = admissible_json_lines(c.W, c.chain, subsets);
    CHECK(std::count(jl.begin(), jl.end(), '\n') == 12);
    CHECK(jl == admissible_json_lines(c.W, c.chain, subsets));
}
