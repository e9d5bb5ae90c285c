#include "qalcove/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qalcove {

namespace {

std::vector<std::vector<int>> cartan_matrix(char series, int n) {
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        C[i][i] = 2;
    auto chain_edge = [&](int i, int j) { C[i][j] = -1, C[j][i] = -1; };
    switch (series) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i)
            chain_edge(i, i + 1);
        break;
    case 'B': // alpha_n short
        for (int i = 0; i + 2 < n; ++i)
            chain_edge(i, i + 1);
        C[n - 2][n - 1] = -1;
        C[n - 1][n - 2] = -2;
        break;
    case 'C': // alpha_n long
        for (int i = 0; i + 2 < n; ++i)
            chain_edge(i, i + 1);
        C[n - 2][n - 1] = -2;
        C[n - 1][n - 2] = -1;
        break;
    case 'D':
        for (int i = 0; i + 3 < n; ++i)
            chain_edge(i, i + 1);
        chain_edge(n - 3, n - 2);
        chain_edge(n - 3, n - 1);
        break;
    case 'E': // Bourbaki: branch node 2 attached to node 4
        chain_edge(0, 2);
        chain_edge(2, 3);
        chain_edge(1, 3);
        for (int i = 3; i + 1 < n; ++i)
            chain_edge(i, i + 1);
        break;
    case 'F': // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        chain_edge(0, 1);
        C[1][2] = -1;
        C[2][1] = -2;
        chain_edge(2, 3);
        break;
    case 'G': // alpha_1 short, alpha_2 long
        C[0][1] = -3;
        C[1][0] = -1;
        break;
    }
    return C;
}

void validate_type(char series, int rank) {
    if (rank < 1 || rank > 8)
        throw std::invalid_argument("root system rank must be in 1..8, got " +
                                    std::to_string(rank));
    bool ok = false;
    switch (series) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default:
        throw std::invalid_argument(std::string("unknown series '") + series +
                                    "' (expected one of A B C D E F G)");
    }
    if (!ok)
        throw std::invalid_argument(std::string(1, series) + std::to_string(rank) +
                                    " is not a valid finite type");
}

int coords_height(const Coords &c) {
    int h = 0;
    for (int v : c)
        h += v;
    return h;
}

bool graded_lex_less(const Coords &a, const Coords &b) {
    int ha = coords_height(a), hb = coords_height(b);
    if (ha != hb)
        return ha < hb;
    return a < b;
}

std::string render_linear(const std::vector<long long> &coeff, const std::string &sym,
                          const std::string &suffix) {
    std::string out;
    for (int i = 0; i < (int)coeff.size(); ++i) {
        long long c = coeff[i];
        if (c == 0)
            continue;
        if (!out.empty() && c > 0)
            out += "+";
        if (c == -1)
            out += "-";
        else if (c != 1)
            out += std::to_string(c);
        out += sym + std::to_string(i + 1) + suffix;
    }
    return out.empty() ? "0" : out;
}

} // namespace

RootSystem::RootSystem(char series, int rank) : series_(series), rank_(rank) {
    validate_type(series, rank);
    cartan_ = cartan_matrix(series, rank);

    // symmetrizer: minimal positive integers with sym_[i]*cartan(i,j) symmetric
    {
        std::vector<Rational> d(rank, Rational(0));
        d[0] = Rational(1);
        std::vector<int> todo = {0};
        while (!todo.empty()) {
            int i = todo.back();
            todo.pop_back();
            for (int j = 0; j < rank; ++j) {
                if (i == j || cartan_[i][j] == 0 || !d[j].is_zero())
                    continue;
                d[j] = d[i] * Rational(cartan_[i][j], cartan_[j][i]);
                todo.push_back(j);
            }
        }
        long long denom = 1;
        for (auto &x : d)
            denom = std::lcm(denom, x.den);
        sym_.resize(rank);
        long long g = 0;
        for (int i = 0; i < rank; ++i) {
            sym_[i] = (int)(d[i].num * (denom / d[i].den));
            g = std::gcd(g, (long long)sym_[i]);
        }
        for (auto &s : sym_)
            s /= (int)g;
    }

    close_roots();

    // coroots: beta^vee = sum_i b_i * d_i / d_beta * alpha_i^vee
    int dmin = *std::min_element(sym_.begin(), sym_.end());
    for (const auto &b : pos_roots_) {
        long long norm = 0; // (beta, beta) with short simple roots of norm 2*dmin
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                norm += (long long)b[i] * b[j] * sym_[i] * cartan_[i][j];
        if (norm % (2 * dmin) != 0)
            throw std::logic_error("root norm not a multiple of the short norm");
        long long dbeta = norm / (2 * dmin);
        Coords cv(rank);
        for (int i = 0; i < rank; ++i) {
            long long num = (long long)b[i] * sym_[i];
            if (num % (dmin * dbeta) != 0)
                throw std::logic_error("non-integral coroot coordinate");
            cv[i] = (int)(num / (dmin * dbeta));
        }
        pos_coroots_.push_back(cv);
        rho_pair_.push_back((int)std::accumulate(cv.begin(), cv.end(), 0));
    }
    for (int k = 0; k < num_pos(); ++k)
        coroot_index_[pos_coroots_[k]] = k;

    // highest root: unique root of maximal height
    int best = -1;
    for (int k = 0; k < num_pos(); ++k)
        if (best < 0 || height(k) > height(best))
            best = k;
    theta_ = best;

    // highest short root: maximal height among roots of minimal norm
    best = -1;
    for (int k = 0; k < num_pos(); ++k) {
        const auto &b = pos_roots_[k];
        long long norm = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                norm += (long long)b[i] * b[j] * sym_[i] * cartan_[i][j];
        if (norm != 2 * dmin)
            continue;
        if (best < 0 || height(k) > height(best))
            best = k;
    }
    theta_short_ = best;
}

RootSystem RootSystem::parse(const std::string &token) {
    if (token.size() < 2)
        throw std::invalid_argument("root system token too short: '" + token + "'");
    char series = (char)std::toupper((unsigned char)token[0]);
    int rank = 0;
    for (size_t i = 1; i < token.size(); ++i) {
        if (!std::isdigit((unsigned char)token[i]))
            throw std::invalid_argument("bad root system token: '" + token + "'");
        rank = rank * 10 + (token[i] - '0');
    }
    return RootSystem(series, rank);
}

// Height-by-height closure: beta + alpha_i is a root iff the alpha_i-string
// through beta satisfies p - <beta, alpha_i^vee> > 0, with p the number of
// steps down the string.
void RootSystem::close_roots() {
    std::set<Coords> roots;
    for (int i = 0; i < rank_; ++i) {
        Coords e(rank_, 0);
        e[i] = 1;
        roots.insert(e);
    }
    std::vector<Coords> frontier(roots.begin(), roots.end());
    while (!frontier.empty()) {
        std::vector<Coords> next;
        for (const auto &b : frontier) {
            for (int i = 0; i < rank_; ++i) {
                int p = 0;
                Coords down = b;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(),
                                            [](int v) { return v == 0; });
                    if (zero || roots.count(down))
                        ++p;
                    else
                        break;
                    if (zero)
                        break;
                }
                int pairing = 0;
                for (int j = 0; j < rank_; ++j)
                    pairing += cartan_[i][j] * b[j];
                if (p - pairing > 0) {
                    Coords up = b;
                    up[i] += 1;
                    if (roots.insert(up).second)
                        next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    pos_roots_.assign(roots.begin(), roots.end());
    std::sort(pos_roots_.begin(), pos_roots_.end(), graded_lex_less);
    for (int k = 0; k < (int)pos_roots_.size(); ++k)
        index_[pos_roots_[k]] = k;
}

int RootSystem::height(int k) const { return coords_height(pos_roots_[k]); }

int RootSystem::pos_index(const Coords &c) const {
    auto it = index_.find(c);
    return it == index_.end() ? -1 : it->second;
}

std::optional<SRoot> RootSystem::classify(const Coords &c) const {
    int k = pos_index(c);
    if (k >= 0)
        return SRoot{k, +1};
    Coords neg(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        neg[i] = -c[i];
    k = pos_index(neg);
    if (k >= 0)
        return SRoot{k, -1};
    return std::nullopt;
}

int RootSystem::pos_coroot_index(const Coords &c) const {
    auto it = coroot_index_.find(c);
    return it == coroot_index_.end() ? -1 : it->second;
}

std::optional<SRoot> RootSystem::classify_coroot(const Coords &c) const {
    int k = pos_coroot_index(c);
    if (k >= 0)
        return SRoot{k, +1};
    Coords neg(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        neg[i] = -c[i];
    k = pos_coroot_index(neg);
    if (k >= 0)
        return SRoot{k, -1};
    return std::nullopt;
}

Coords RootSystem::sroot_coords(SRoot r) const {
    Coords c = pos_roots_[r.index];
    if (r.sign < 0)
        for (auto &v : c)
            v = -v;
    return c;
}

Coords RootSystem::scoroot_coords(SRoot r) const {
    Coords c = pos_coroots_[r.index];
    if (r.sign < 0)
        for (auto &v : c)
            v = -v;
    return c;
}

Rational RootSystem::pair(const Weight &lambda, const Coords &coroot) const {
    if ((int)lambda.m.size() != rank_ || (int)coroot.size() != rank_)
        throw std::invalid_argument("pairing dimension mismatch");
    Rational r(0);
    for (int i = 0; i < rank_; ++i)
        r += lambda.m[i] * Rational(coroot[i]);
    return r;
}

long long RootSystem::ipair(const Weight &lambda, const Coords &coroot) const {
    Rational r = pair(lambda, coroot);
    if (!r.is_integer())
        throw std::domain_error("non-integral pairing for an integral-weight operation");
    return r.num;
}

Weight RootSystem::fundamental(int i) const {
    Weight w(rank_);
    w.m[i] = Rational(1);
    return w;
}

Weight RootSystem::rho() const {
    Weight w(rank_);
    for (auto &c : w.m)
        c = Rational(1);
    return w;
}

Weight RootSystem::root_as_weight(const Coords &root) const {
    Weight w(rank_);
    for (int j = 0; j < rank_; ++j) {
        long long v = 0;
        for (int i = 0; i < rank_; ++i)
            v += (long long)cartan_[j][i] * root[i];
        w.m[j] = Rational(v);
    }
    return w;
}

std::string RootSystem::render_root(const Coords &c) const {
    std::vector<long long> v(c.begin(), c.end());
    return render_linear(v, "a", "");
}

std::string RootSystem::render_coroot(const Coords &c) const {
    std::vector<long long> v(c.begin(), c.end());
    return render_linear(v, "a", "^");
}

std::string RootSystem::render_weight(const Weight &w) const {
    bool integral = w.is_integral();
    std::string out;
    for (int i = 0; i < (int)w.m.size(); ++i) {
        const Rational &c = w.m[i];
        if (c.is_zero())
            continue;
        if (!out.empty() && c.num > 0)
            out += "+";
        if (c == Rational(-1))
            out += "-";
        else if (c != Rational(1))
            out += c.str();
        out += "w" + std::to_string(i + 1);
    }
    (void)integral;
    return out.empty() ? "0" : out;
}

Weight RootSystem::parse_weight(const std::string &text, int rank) {
    std::vector<Rational> coeffs;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        while (pos < tok.size() && std::isspace((unsigned char)tok[pos]))
            ++pos;
        size_t end = tok.size();
        while (end > pos && std::isspace((unsigned char)tok[end - 1]))
            --end;
        tok = tok.substr(pos, end - pos);
        if (tok.empty())
            throw std::invalid_argument("empty weight coefficient in '" + text + "'");
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad weight coefficient '" + tok + "'");
        coeffs.push_back(Rational(v));
    }
    if ((int)coeffs.size() != rank)
        throw std::invalid_argument("expected " + std::to_string(rank) +
                                    " weight coefficients, got " +
                                    std::to_string(coeffs.size()));
    Weight w(rank);
    w.m = coeffs;
    return w;
}

// ---------------------------------------------------------------------------
// WeylGroup

namespace {

// row-major rank x rank matrices
std::vector<int> identity_matrix(int n) {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i)
        m[i * n + i] = 1;
    return m;
}

std::vector<int> mat_mult(const std::vector<int> &a, const std::vector<int> &b, int n) {
    std::vector<int> r(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i * n + k];
            if (aik == 0)
                continue;
            for (int j = 0; j < n; ++j)
                r[i * n + j] += aik * b[k * n + j];
        }
    return r;
}

} // namespace

WeylGroup::WeylGroup(const RootSystem &rs) : rs_(&rs) {
    const int n = rs.rank();

    std::vector<std::vector<int>> simple_mat(n);
    for (int i = 0; i < n; ++i) {
        auto m = identity_matrix(n);
        for (int j = 0; j < n; ++j)
            m[i * n + j] -= rs.cartan(i, j);
        simple_mat[i] = m;
    }

    // enumerate all elements by BFS over right multiplication
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> all;
    std::vector<int> layer_of;
    all.push_back(identity_matrix(n));
    seen[all[0]] = 0;
    layer_of.push_back(0);
    for (size_t head = 0; head < all.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            auto m = mat_mult(all[head], simple_mat[i], n);
            if (!seen.count(m)) {
                seen[m] = (int)all.size();
                all.push_back(m);
                layer_of.push_back(layer_of[head] + 1);
            }
        }
    }

    // canonical reduced word by smallest-index descents
    auto column_negative = [&](const std::vector<int> &m, int col) {
        for (int r = 0; r < n; ++r)
            if (m[r * n + col] > 0)
                return false;
        return true;
    };
    auto canonical_word = [&](std::vector<int> m) {
        std::vector<int> collected;
        while (true) {
            int descent = -1;
            for (int i = 0; i < n; ++i)
                if (column_negative(m, i)) {
                    descent = i;
                    break;
                }
            if (descent < 0)
                break;
            collected.push_back(descent);
            m = mat_mult(m, simple_mat[descent], n);
        }
        if (m != identity_matrix(n))
            throw std::logic_error("descent recursion did not terminate at e");
        std::reverse(collected.begin(), collected.end());
        return collected;
    };

    std::vector<std::pair<std::vector<int>, int>> order; // (word, bfs index)
    order.reserve(all.size());
    for (int idx = 0; idx < (int)all.size(); ++idx) {
        auto w = canonical_word(all[idx]);
        if ((int)w.size() != layer_of[idx])
            throw std::logic_error("canonical word length disagrees with BFS layer");
        order.push_back({std::move(w), idx});
    }
    std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });

    const int N = (int)order.size();
    matrices_.resize(N);
    word_.resize(N);
    length_.resize(N);
    for (int id = 0; id < N; ++id) {
        word_[id] = order[id].first;
        matrices_[id] = all[order[id].second];
        length_[id] = (int)word_[id].size();
        index_[matrices_[id]] = id;
    }
    longest_ = N - 1;

    mult_simple_.assign(N, std::vector<int>(n));
    for (int id = 0; id < N; ++id)
        for (int i = 0; i < n; ++i)
            mult_simple_[id][i] = lookup(mat_mult(matrices_[id], simple_mat[i], n));

    // reflection s_beta for each positive root
    const int P = rs.num_pos();
    refl_.resize(P);
    std::vector<std::vector<int>> refl_mat(P);
    for (int k = 0; k < P; ++k) {
        const Coords &b = rs.pos_root(k);
        const Coords &cv = rs.pos_coroot(k);
        auto m = identity_matrix(n);
        for (int j = 0; j < n; ++j) {
            int pj = 0;
            for (int i = 0; i < n; ++i)
                pj += cv[i] * rs.cartan(i, j);
            for (int r = 0; r < n; ++r)
                m[r * n + j] -= pj * b[r];
        }
        refl_mat[k] = m;
        refl_[k] = lookup(m);
    }

    mult_refl_.assign(N, std::vector<int>(P));
    act_posroot_.assign(N, std::vector<SRoot>(P));
    for (int id = 0; id < N; ++id) {
        for (int k = 0; k < P; ++k) {
            mult_refl_[id][k] = lookup(mat_mult(matrices_[id], refl_mat[k], n));
            Coords img(n);
            for (int r = 0; r < n; ++r) {
                int v = 0;
                for (int c = 0; c < n; ++c)
                    v += matrices_[id][r * n + c] * rs.pos_root(k)[c];
                img[r] = v;
            }
            auto s = rs.classify(img);
            if (!s)
                throw std::logic_error("Weyl action left the root system");
            act_posroot_[id][k] = *s;
        }
        int inversions = 0;
        for (int k = 0; k < P; ++k)
            if (act_posroot_[id][k].sign < 0)
                ++inversions;
        if (inversions != length_[id])
            throw std::logic_error("length does not match inversion count");
    }

    inverse_.resize(N);
    for (int id = 0; id < N; ++id) {
        auto w = word_[id];
        std::reverse(w.begin(), w.end());
        inverse_[id] = from_word(w);
    }
}

int WeylGroup::lookup(const std::vector<int> &matrix) const {
    auto it = index_.find(matrix);
    if (it == index_.end())
        throw std::logic_error("unknown Weyl group element matrix");
    return it->second;
}

int WeylGroup::mult(int a, int b) const {
    int r = a;
    for (int i : word_[b])
        r = mult_simple_[r][i];
    return r;
}

Coords WeylGroup::act_root(int id, const Coords &c) const {
    const int n = rs_->rank();
    Coords img(n);
    for (int r = 0; r < n; ++r) {
        int v = 0;
        for (int col = 0; col < n; ++col)
            v += matrices_[id][r * n + col] * c[col];
        img[r] = v;
    }
    return img;
}

Weight WeylGroup::act_weight(int id, const Weight &w) const {
    Weight r = w;
    const auto &letters = word_[id];
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int i = *it;
        Rational c = r.m[i];
        if (c.is_zero())
            continue;
        for (int j = 0; j < rs_->rank(); ++j)
            r.m[j] -= c * Rational(rs_->cartan(j, i));
    }
    return r;
}

int WeylGroup::from_word(const std::vector<int> &letters) const {
    int r = identity();
    for (int i : letters) {
        if (i < 0 || i >= rs_->rank())
            throw std::invalid_argument("word letter out of range: s" +
                                        std::to_string(i + 1));
        r = mult_simple_[r][i];
    }
    return r;
}

int WeylGroup::parse_word(const std::string &text) const {
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c) && c != ',')
            t += c;
    if (t.empty() || t == "e" || t == "E")
        return identity();
    std::vector<int> letters;
    if (t.find('s') != std::string::npos || t.find('S') != std::string::npos) {
        size_t pos = 0;
        while (pos < t.size()) {
            if (t[pos] != 's' && t[pos] != 'S')
                throw std::invalid_argument("bad Weyl word '" + text + "' at position " +
                                            std::to_string(pos));
            size_t j = pos + 1;
            while (j < t.size() && std::isdigit((unsigned char)t[j]))
                ++j;
            if (j == pos + 1)
                throw std::invalid_argument("bad Weyl word '" + text + "' at position " +
                                            std::to_string(pos));
            letters.push_back(std::stoi(t.substr(pos + 1, j - pos - 1)) - 1);
            pos = j;
        }
    } else {
        for (size_t pos = 0; pos < t.size(); ++pos) {
            if (!std::isdigit((unsigned char)t[pos]))
                throw std::invalid_argument("bad Weyl word '" + text + "' at position " +
                                            std::to_string(pos));
            letters.push_back(t[pos] - '0' - 1);
        }
    }
    return from_word(letters);
}

std::string WeylGroup::word_str(int id) const {
    if (id == identity())
        return "e";
    std::string out;
    for (int i : word_[id]) {
        if (!out.empty())
            out += " ";
        out += "s" + std::to_string(i + 1);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> parabolic_elements(const WeylGroup &W, const std::vector<int> &nodes) {
    std::vector<int> elems = {W.identity()};
    std::set<int> seen = {W.identity()};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (int i : nodes) {
            int nxt = W.mult_simple(elems[head], i);
            if (seen.insert(nxt).second)
                elems.push_back(nxt);
        }
    }
    return elems;
}

} // namespace

int parabolic_longest(const WeylGroup &W, const std::vector<int> &nodes) {
    auto elems = parabolic_elements(W, nodes);
    int best = W.identity();
    for (int e : elems)
        if (W.length(e) > W.length(best))
            best = e;
    int count = 0;
    for (int e : elems)
        if (W.length(e) == W.length(best))
            ++count;
    if (count != 1)
        throw std::logic_error("parabolic longest element is not unique");
    return best;
}

DominantData dominant_data(const WeylGroup &W, const Weight &lambda) {
    const RootSystem &rs = W.rs();
    if (!lambda.is_integral())
        throw std::invalid_argument("dominant_data requires an integral weight");

    // dominalize, collecting the word that sends lambda_plus back to lambda
    Weight mu = lambda;
    std::vector<int> letters;
    while (true) {
        int i = -1;
        for (int j = 0; j < rs.rank(); ++j)
            if (mu.m[j] < Rational(0)) {
                i = j;
                break;
            }
        if (i < 0)
            break;
        Rational c = mu.m[i];
        for (int j = 0; j < rs.rank(); ++j)
            mu.m[j] -= c * Rational(rs.cartan(j, i));
        letters.push_back(i);
    }
    int w0 = W.from_word(letters);

    DominantData d;
    d.lambda_plus = mu;
    for (int i = 0; i < rs.rank(); ++i)
        if (mu.m[i].is_zero())
            d.stabilizer_nodes.push_back(i);

    auto stab = parabolic_elements(W, d.stabilizer_nodes);
    int umin = -1, wmax = -1;
    for (int v : stab) {
        int e = W.mult(w0, v);
        if (umin < 0 || W.length(e) < W.length(umin))
            umin = e;
        if (wmax < 0 || W.length(e) > W.length(wmax))
            wmax = e;
    }
    d.u_lambda = umin;
    d.w_lambda = wmax;

    if (W.act_weight(d.u_lambda, mu) != lambda || W.act_weight(d.w_lambda, mu) != lambda)
        throw std::logic_error("coset extremes do not map lambda_plus to lambda");
    int wo_par = parabolic_longest(W, d.stabilizer_nodes);
    if (W.mult(d.u_lambda, wo_par) != d.w_lambda ||
        W.length(d.w_lambda) != W.length(d.u_lambda) + W.length(wo_par))
        throw std::logic_error("w(lambda) != u(lambda) * w_o(I) or length not additive");
    return d;
}

} // namespace qalcove
