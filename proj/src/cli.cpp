#include "qalcove/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qalcove {

std::string CaseSpec::str() const {
    std::ostringstream out;
    out << "type=" << type << ";lambda=" << lambda << ";w=" << w
        << ";order=" << order << ";format=" << format
        << ";truncate-par=" << truncate_par << ";sweep=" << sweep
        << ";cap=" << cap;
    return out.str();
}

CaseSpec CaseSpec::parse(const std::string &text) {
    CaseSpec spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad case spec item '" + item + "'");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "type")
            spec.type = value;
        else if (key == "lambda")
            spec.lambda = value;
        else if (key == "w")
            spec.w = value;
        else if (key == "order")
            spec.order = value;
        else if (key == "format")
            spec.format = value;
        else if (key == "truncate-par")
            spec.truncate_par = std::stoi(value);
        else if (key == "sweep")
            spec.sweep = value;
        else if (key == "cap")
            spec.cap = std::stoi(value);
        else
            throw std::invalid_argument("unknown case spec key '" + key + "'");
    }
    return spec;
}

namespace {

struct Session {
    RootSystem rs;
    WeylGroup W;
    QBG g;
    Weight lam;
    ReflectionOrder order;
    LambdaChain chain;
    IQLSContext ctx;

    static ReflectionOrder load_order(const WeylGroup &W, const Weight &lam,
                                      const std::string &source) {
        if (source == "auto")
            return ro_for_lambda(W, lam);
        std::ifstream in(source);
        if (!in)
            throw std::invalid_argument("cannot open order file '" + source + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        auto order = order_from_json(W.rs(), buf.str());
        if (!in_ro_lambda(W.rs(), lam, order))
            throw std::invalid_argument("order file '" + source +
                                        "' is not in RO(lambda, Delta+)");
        return order;
    }

    explicit Session(const CaseSpec &spec)
        : rs(RootSystem::parse(spec.type)), W(rs), g(W),
          lam(RootSystem::parse_weight(spec.lambda, rs.rank())),
          order(load_order(W, lam, spec.order)),
          chain(suitable_chain(W, lam, order)), ctx(g, lam, order) {}

    std::vector<int> w_list(const std::string &w) const {
        if (w == "all") {
            std::vector<int> all(W.size());
            for (int i = 0; i < W.size(); ++i)
                all[i] = i;
            return all;
        }
        return {W.parse_word(w)};
    }
};

std::string stats_table_markdown(const Session &s,
                                 const std::vector<AdmissibleSubset> &subsets,
                                 int w) {
    std::ostringstream out;
    out << "| A | xi(end(A), im(A), w) | Deg_w(im(A)) |\n|---|---|---|\n";
    for (const auto &A : subsets) {
        auto [eta, u] = forgetful(s.ctx, s.chain, A);
        out << "| " << positions_str(A) << " | "
            << s.rs.render_coroot(s.ctx.xi(u, eta, w)) << " | "
            << s.ctx.deg(eta, w).str() << " |\n";
    }
    return out.str();
}

std::string forgetful_json_lines(const Session &s,
                                 const std::vector<AdmissibleSubset> &subsets) {
    std::ostringstream out;
    for (const auto &A : subsets) {
        auto [eta, u] = forgetful(s.ctx, s.chain, A);
        nlohmann::json j;
        std::vector<int> pos1;
        for (int p : A.positions)
            pos1.push_back(p + 1);
        j["A"] = pos1;
        j["eta"] = nlohmann::json::parse(s.ctx.to_json(eta));
        j["end"] = s.W.word_str(u);
        out << j.dump() << "\n";
    }
    return out.str();
}

std::string image_json_lines(const Session &s, int w) {
    std::ostringstream out;
    for (const auto &eta : s.ctx.enumerate()) {
        nlohmann::json j;
        j["eta"] = nlohmann::json::parse(s.ctx.to_json(eta));
        bool reach = s.ctx.has_plus_arrow(w, eta.final());
        j["reachable"] = reach;
        j["u"] = nlohmann::json::array();
        if (reach)
            for (int u = 0; u < s.W.size(); ++u)
                if (s.ctx.has_minus_arrow(eta.initial(), u))
                    j["u"].push_back(s.W.word_str(u));
        out << j.dump() << "\n";
    }
    return out.str();
}

std::string stats_json_lines(const Session &s,
                             const std::vector<AdmissibleSubset> &subsets, int w) {
    std::ostringstream out;
    for (const auto &A : subsets) {
        auto [eta, u] = forgetful(s.ctx, s.chain, A);
        nlohmann::json j;
        std::vector<int> pos1;
        for (int p : A.positions)
            pos1.push_back(p + 1);
        j["A"] = pos1;
        j["xi"] = s.ctx.xi(u, eta, w);
        Rational deg = s.ctx.deg(eta, w);
        j["deg"] = std::vector<long long>{deg.num, deg.den};
        out << j.dump() << "\n";
    }
    return out.str();
}

} // namespace

std::string cmd_table(const std::string &kind, const CaseSpec &spec) {
    Session s(spec);
    bool json = spec.format == "json";
    std::ostringstream out;
    auto ws = s.w_list(spec.w);
    for (size_t i = 0; i < ws.size(); ++i) {
        int w = ws[i];
        if (ws.size() > 1)
            out << (i ? "\n" : "") << "## w = " << s.W.word_str(w) << "\n\n";
        auto subsets = admissible_subsets(s.g, w, s.chain);
        if (kind == "admissible")
            out << (json ? admissible_json_lines(s.W, s.chain, subsets)
                         : admissible_table_markdown(s.W, s.chain, subsets));
        else if (kind == "forgetful")
            out << (json ? forgetful_json_lines(s, subsets)
                         : forgetful_table_markdown(s.ctx, s.chain, subsets));
        else if (kind == "image")
            out << (json ? image_json_lines(s, w) : image_table_markdown(s.ctx, w));
        else if (kind == "stats")
            out << (json ? stats_json_lines(s, subsets, w)
                         : stats_table_markdown(s, subsets, w));
        else
            throw std::invalid_argument("unknown table kind '" + kind + "'");
    }
    return out.str();
}

std::string cmd_enumerate(const std::string &kind, const CaseSpec &spec) {
    Session s(spec);
    std::ostringstream out;
    if (kind == "iqls" || kind == "ils") {
        for (const auto &eta : s.ctx.enumerate(kind == "ils"))
            out << s.ctx.to_json(eta) << "\n";
    } else if (kind == "qbg") {
        out << (spec.format == "dot" ? s.g.to_dot() : s.g.to_json() + "\n");
    } else if (kind == "chain") {
        for (const auto &e : s.chain.entries) {
            nlohmann::json j;
            j["root"] = s.rs.sroot_coords(e.gamma);
            j["level"] = e.level;
            j["coroot"] = s.rs.scoroot_coords(e.gamma);
            j["degree"] = e.level;
            out << j.dump() << "\n";
        }
    } else if (kind == "inversions") {
        for (const auto &b : inversion_set(s.rs, s.lam)) {
            nlohmann::json j;
            j["coroot"] = s.rs.scoroot_coords(b.gamma);
            j["degree"] = b.deg;
            out << j.dump() << "\n";
        }
    } else if (kind == "series") {
        int w = s.W.parse_word(spec.w == "all" ? "e" : spec.w);
        out << emit_series_json(s.ctx, s.chain, w, Coords(s.rs.rank(), 0),
                                spec.truncate_par)
            << "\n";
    } else {
        throw std::invalid_argument("unknown enumerate kind '" + kind + "'");
    }
    return out.str();
}

VerifyOutcome cmd_verify(const CaseSpec &spec) {
    if (!spec.sweep.empty()) {
        auto dots = spec.sweep.find("..");
        if (dots == std::string::npos)
            throw std::invalid_argument("sweep must be of the form min..max");
        SweepOptions opt;
        opt.coeff_min = std::stoi(spec.sweep.substr(0, dots));
        opt.coeff_max = std::stoi(spec.sweep.substr(dots + 2));
        opt.cap = spec.cap;
        opt.types.clear();
        std::stringstream ss(spec.type);
        std::string tok;
        while (std::getline(ss, tok, ','))
            opt.types.push_back(tok);
        auto result = run_sweep(opt);
        return {result.ok() ? 0 : 1, sweep_to_json(result) + "\n"};
    }

    Session s(spec);
    CaseResult cr = verify_case(s.W, s.g, s.lam, spec.cap);
    nlohmann::json j;
    j["case"] = spec.type + "/" + spec.lambda;
    j["skipped"] = cr.skipped;
    j["failures"] = cr.failures;
    j["iqls_order_invariant"] = cr.iqls_order_invariant;
    j["y_counterexamples"] = cr.y_counterexamples;
    j["identity"] = nlohmann::json::array();
    bool ok = cr.failures.empty();
    if (!cr.skipped) {
        for (int w : s.w_list(spec.w)) {
            auto r = verify_identity(s.ctx, s.chain, w);
            nlohmann::json rj =
                nlohmann::json::parse(report_to_json(s.ctx, s.W.word_str(w), r));
            j["identity"].push_back(rj);
            ok = ok && r.equal;
        }
    }
    j["ok"] = ok;
    return {ok ? 0 : 1, j.dump(2) + "\n"};
}

} // namespace qalcove
