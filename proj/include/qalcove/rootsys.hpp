#pragma once

#include "qalcove/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qalcove {

// Coordinates of a root in the simple-root basis, or of a coroot in the
// simple-coroot basis.
using Coords = std::vector<int>;

// Signed reference to a positive root: sign * pos_roots[index].
struct SRoot {
    int index = -1;
    int sign = +1;

    friend bool operator==(const SRoot &a, const SRoot &b) {
        return a.index == b.index && a.sign == b.sign;
    }
    friend bool operator!=(const SRoot &a, const SRoot &b) { return !(a == b); }
    friend bool operator<(const SRoot &a, const SRoot &b) {
        if (a.index != b.index)
            return a.index < b.index;
        return a.sign < b.sign;
    }
};

// Weight in the fundamental-weight basis; coordinates are exact rationals
// (integral exactly when the weight lies in the weight lattice P).
struct Weight {
    std::vector<Rational> m;

    Weight() = default;
    explicit Weight(int rank) : m(rank) {}

    int rank() const { return (int)m.size(); }
    bool is_integral() const {
        for (const auto &c : m)
            if (!c.is_integer())
                return false;
        return true;
    }
    bool is_zero() const {
        for (const auto &c : m)
            if (!c.is_zero())
                return false;
        return true;
    }

    friend Weight operator+(const Weight &a, const Weight &b) {
        Weight r(a.rank());
        for (int i = 0; i < a.rank(); ++i)
            r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    friend Weight operator-(const Weight &a, const Weight &b) {
        Weight r(a.rank());
        for (int i = 0; i < a.rank(); ++i)
            r.m[i] = a.m[i] - b.m[i];
        return r;
    }
    friend Weight operator*(const Rational &c, const Weight &a) {
        Weight r(a.rank());
        for (int i = 0; i < a.rank(); ++i)
            r.m[i] = c * a.m[i];
        return r;
    }
    Weight operator-() const { return Rational(-1) * *this; }
    friend bool operator==(const Weight &a, const Weight &b) { return a.m == b.m; }
    friend bool operator!=(const Weight &a, const Weight &b) { return !(a == b); }
    friend bool operator<(const Weight &a, const Weight &b) {
        for (int i = 0; i < (int)a.m.size() && i < (int)b.m.size(); ++i) {
            if (a.m[i] != b.m[i])
                return a.m[i] < b.m[i];
        }
        return a.m.size() < b.m.size();
    }
};

// Finite crystallographic root system with exact lattice arithmetic.
// Positive roots are closed from the Cartan matrix and stored in graded
// lexicographic order (height first, then coordinates).
class RootSystem {
public:
    RootSystem(char series, int rank);

    // "A2", "B3", ... token form.
    static RootSystem parse(const std::string &token);

    char series() const { return series_; }
    int rank() const { return rank_; }
    std::string token() const { return std::string(1, series_) + std::to_string(rank_); }

    // cartan(i, j) = <alpha_j, alpha_i^vee>
    int cartan(int i, int j) const { return cartan_[i][j]; }
    // symmetrizer d_i = (alpha_i, alpha_i)/(shortest root norm); d_i * cartan(i,j) symmetric
    int sym(int i) const { return sym_[i]; }

    int num_pos() const { return (int)pos_roots_.size(); }
    const Coords &pos_root(int k) const { return pos_roots_[k]; }
    const Coords &pos_coroot(int k) const { return pos_coroots_[k]; }
    int rho_pair(int k) const { return rho_pair_[k]; } // <rho, pos_root(k)^vee>
    int height(int k) const;

    int theta() const { return theta_; }             // highest root index
    int theta_short() const { return theta_short_; } // highest short root index

    // Index of a positive root by coordinates, -1 if not a positive root.
    int pos_index(const Coords &c) const;
    // Classify arbitrary coordinates as a signed root, if they form one.
    std::optional<SRoot> classify(const Coords &c) const;
    // Same lookups on the coroot side (coordinates in the simple-coroot basis).
    int pos_coroot_index(const Coords &c) const;
    std::optional<SRoot> classify_coroot(const Coords &c) const;

    Coords sroot_coords(SRoot r) const;
    Coords scoroot_coords(SRoot r) const; // coords of sign * pos_root(index)^vee

    // <lambda, beta^vee> with beta^vee given by simple-coroot coordinates.
    Rational pair(const Weight &lambda, const Coords &coroot) const;
    // Same, asserting an integral result (lambda in P paired with a coroot).
    long long ipair(const Weight &lambda, const Coords &coroot) const;

    Weight zero_weight() const { return Weight(rank_); }
    Weight fundamental(int i) const;
    Weight rho() const;
    // A root expressed in the fundamental-weight basis.
    Weight root_as_weight(const Coords &root) const;

    std::string render_root(const Coords &c) const;   // "a1+a2", "-a1", "0"
    std::string render_coroot(const Coords &c) const; // "a1^+a2^", "0"
    std::string render_weight(const Weight &w) const; // "-w1+2w2", "0"
    static Weight parse_weight(const std::string &text, int rank);

private:
    char series_;
    int rank_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> sym_;
    std::vector<Coords> pos_roots_;
    std::vector<Coords> pos_coroots_;
    std::vector<int> rho_pair_;
    int theta_ = -1;
    int theta_short_ = -1;
    std::map<Coords, int> index_;
    std::map<Coords, int> coroot_index_;

    void close_roots();
};

// The Weyl group of a root system, fully enumerated. Elements are identified
// by dense ids ordered by (length, canonical reduced word); the canonical form
// of an element is its action matrix on the simple-root basis, so equality is
// structural and independent of words.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem &rs);

    const RootSystem &rs() const { return *rs_; }
    int size() const { return (int)matrices_.size(); }
    int identity() const { return 0; }
    int longest() const { return longest_; }

    int length(int id) const { return length_[id]; }
    const std::vector<int> &word(int id) const { return word_[id]; } // 0-based letters
    int inverse(int id) const { return inverse_[id]; }

    int mult(int a, int b) const; // a * b
    int mult_simple(int id, int i) const { return mult_simple_[id][i]; } // w * s_i
    int mult_refl(int id, int k) const { return mult_refl_[id][k]; }     // w * s_{pos_root(k)}
    int reflection(int k) const { return refl_[k]; }                     // s_{pos_root(k)}

    SRoot act_posroot(int id, int k) const { return act_posroot_[id][k]; } // w(pos_root(k))
    Coords act_root(int id, const Coords &c) const;
    Weight act_weight(int id, const Weight &w) const;

    // Element with the given reduced (or unreduced) word s_{i1} ... s_{ik}.
    int from_word(const std::vector<int> &letters) const;
    // "s1 s2 s1", "1 2 1", or "s1s2s1"; "e" is the identity.
    int parse_word(const std::string &text) const;
    std::string word_str(int id) const; // "s1 s2 s1", identity -> "e"

private:
    const RootSystem *rs_;
    std::vector<std::vector<int>> matrices_; // row-major rank x rank action on simple roots
    std::vector<int> length_;
    std::vector<std::vector<int>> word_;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> mult_simple_;
    std::vector<std::vector<int>> mult_refl_;
    std::vector<std::vector<SRoot>> act_posroot_;
    std::vector<int> refl_;
    int longest_ = -1;
    std::map<std::vector<int>, int> index_;

    int lookup(const std::vector<int> &matrix) const;
};

// lambda_plus: the dominant representative of W*lambda.
// w_lambda / u_lambda: the maximal / minimal element of {w | w lambda_plus = lambda}.
// stabilizer_nodes: { i | <lambda_plus, alpha_i^vee> = 0 }.
struct DominantData {
    Weight lambda_plus;
    int w_lambda;
    int u_lambda;
    std::vector<int> stabilizer_nodes;
};

DominantData dominant_data(const WeylGroup &W, const Weight &lambda);

// Longest element of the parabolic subgroup generated by the given nodes.
int parabolic_longest(const WeylGroup &W, const std::vector<int> &nodes);

} // namespace qalcove
