#pragma once

// Root datum for sl_n in the matrix realization.
//
// Conventions, fixed once and used everywhere downstream:
//   * positive roots are L_i - L_j for 1 <= i < j <= n, listed by height
//     (= j - i) and then lexicographically by (i, j); the first n-1 entries
//     are the simple roots alpha_1..alpha_{n-1};
//   * the Chevalley generator of a positive root (i,j) is E_ij, of the
//     negative root is E_ji, and the Cartan basis is H_t = E_tt - E_{t+1,t+1};
//   * weights are stored by their values on H_1..H_{n-1}, i.e. in coordinates
//     over the fundamental weights.
//
// The global generator order underlying every PBW basis here is
//
//   negatives (root order), H_1..H_{n-1}, positives (root order *reversed*).
//
// Mirroring the positives makes transposition E_ij -> E_ji a mere relabeling
// of positions (id -> N-1-id off the Cartan block), so the transpose
// antiautomorphism maps ordered monomials to ordered monomials with no
// restraightening.  Cartans commute, so their fixed positions cost nothing.

#include "verma/errors.hpp"
#include "verma/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace verma {

using RatMatrix = std::vector<std::vector<Rational>>;

// Positive root L_i - L_j, 1 <= i < j <= n.
struct Root {
    int i = 0;
    int j = 0;

    int height() const { return j - i; }
    friend bool operator==(const Root& a, const Root& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    }
};

// Weight in fundamental coordinates: coords()[t-1] is the value on H_t.
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static Weight zero(int n) { return Weight(std::vector<Rational>(static_cast<std::size_t>(n - 1))); }

    int n() const { return static_cast<int>(coords_.size()) + 1; }
    const std::vector<Rational>& coords() const { return coords_; }

    // Value on H_t, t in [1, n-1].
    const Rational& on_cartan(int t) const { return coords_.at(static_cast<std::size_t>(t - 1)); }

    Weight& operator+=(const Weight& o) {
        check_same(o);
        for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] += o.coords_[t];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        check_same(o);
        for (std::size_t t = 0; t < coords_.size(); ++t) coords_[t] -= o.coords_[t];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& c, Weight a) {
        for (auto& x : a.coords_) x *= c;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    bool is_integral() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return is_integer(x); });
    }
    bool is_dominant_integral() const {
        return std::all_of(coords_.begin(), coords_.end(),
                           [](const Rational& x) { return is_integer(x) && sgn(x) >= 0; });
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t t = 0; t < coords_.size(); ++t) {
            if (t) s += ",";
            s += coords_[t].get_str();
        }
        return s + ")";
    }

  private:
    void check_same(const Weight& o) const {
        if (coords_.size() != o.coords_.size())
            throw std::invalid_argument("Weight: rank mismatch");
    }

    std::vector<Rational> coords_;
};

// Strict ordering for use as a map key (lexicographic on coordinates).
struct WeightLess {
    bool operator()(const Weight& a, const Weight& b) const {
        return std::lexicographical_compare(a.coords().begin(), a.coords().end(),
                                            b.coords().begin(), b.coords().end());
    }
};

// Fundamental coordinates of the positive root L_i - L_j.
inline Weight root_weight(int n, const Root& r) {
    std::vector<Rational> c(static_cast<std::size_t>(n - 1));
    for (int t = 1; t < n; ++t) {
        int v = (r.i == t) - (r.i == t + 1) - (r.j == t) + (r.j == t + 1);
        c[static_cast<std::size_t>(t - 1)] = v;
    }
    return Weight(std::move(c));
}

// Sum of the fundamental weights (the half-sum-of-positive-roots weight).
inline Weight delta_weight(int n) {
    return Weight(std::vector<Rational>(static_cast<std::size_t>(n - 1), Rational(1)));
}

// lambda(H_alpha) for alpha = L_i - L_j, i.e. the coordinate sum over [i, j).
inline Rational lambda_on_coroot(const Weight& lambda, const Root& r) {
    Rational s = 0;
    for (int t = r.i; t < r.j; ++t) s += lambda.on_cartan(t);
    return s;
}

inline Rational m_alpha(const Weight& lambda, const Root& r) { return lambda_on_coroot(lambda, r) + 1; }

// One basis generator of sl_n.  Off-diagonal generators are matrix units
// E_{row,col}; the Cartan generator H_t stores row = col = t.
struct Generator {
    enum class Kind { Negative, Cartan, Positive };
    Kind kind = Kind::Cartan;
    int row = 0;
    int col = 0;
};

class RootDatum {
  public:
    explicit RootDatum(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("RootDatum: need n >= 2");
        for (int h = 1; h < n; ++h)
            for (int i = 1; i + h <= n; ++i) positive_roots_.push_back(Root{i, i + h});
        const int m = static_cast<int>(positive_roots_.size());
        for (int k = 0; k < m; ++k) {
            const Root& r = positive_roots_[static_cast<std::size_t>(k)];
            gens_.push_back(Generator{Generator::Kind::Negative, r.j, r.i});
            root_index_[{r.i, r.j}] = k;
        }
        for (int t = 1; t < n; ++t) gens_.push_back(Generator{Generator::Kind::Cartan, t, t});
        for (int k = m - 1; k >= 0; --k) {
            const Root& r = positive_roots_[static_cast<std::size_t>(k)];
            gens_.push_back(Generator{Generator::Kind::Positive, r.i, r.j});
        }
    }

    int n() const { return n_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    int num_positive() const { return static_cast<int>(positive_roots_.size()); }

    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    const Generator& gen(int id) const { return gens_.at(static_cast<std::size_t>(id)); }

    int negative_gen(const Root& r) const { return root_idx(r); }
    int cartan_gen(int t) const {
        if (t < 1 || t >= n_) throw std::invalid_argument("RootDatum: Cartan index out of range");
        return num_positive() + t - 1;
    }
    int positive_gen(const Root& r) const { return num_gens() - 1 - root_idx(r); }

    // Transpose partner: fixes Cartans, swaps E_ij <-> E_ji.
    int mirror(int id) const {
        if (id < 0 || id >= num_gens()) throw std::invalid_argument("RootDatum: generator id out of range");
        const int m = num_positive();
        if (id >= m && id < m + n_ - 1) return id;
        return num_gens() - 1 - id;
    }

    // The (positive) root of an off-diagonal generator.
    Root root_of(int id) const {
        const Generator& g = gen(id);
        if (g.kind == Generator::Kind::Cartan)
            throw std::invalid_argument("RootDatum: Cartan generator has no root");
        return g.kind == Generator::Kind::Positive ? Root{g.row, g.col} : Root{g.col, g.row};
    }

    // Weight of ad(H) on the generator: +root, -root, or 0.
    Weight gen_weight(int id) const {
        const Generator& g = gen(id);
        if (g.kind == Generator::Kind::Cartan) return Weight::zero(n_);
        Weight w = root_weight(n_, root_of(id));
        return g.kind == Generator::Kind::Positive ? w : Rational(-1) * w;
    }

    // n x n matrix of a generator.
    RatMatrix gen_matrix(int id) const {
        const Generator& g = gen(id);
        RatMatrix m(static_cast<std::size_t>(n_), std::vector<Rational>(static_cast<std::size_t>(n_)));
        if (g.kind == Generator::Kind::Cartan) {
            m[static_cast<std::size_t>(g.row - 1)][static_cast<std::size_t>(g.row - 1)] = 1;
            m[static_cast<std::size_t>(g.row)][static_cast<std::size_t>(g.row)] = -1;
        } else {
            m[static_cast<std::size_t>(g.row - 1)][static_cast<std::size_t>(g.col - 1)] = 1;
        }
        return m;
    }

  private:
    int root_idx(const Root& r) const {
        auto it = root_index_.find({r.i, r.j});
        if (it == root_index_.end()) throw std::invalid_argument("RootDatum: not a positive root");
        return it->second;
    }

    int n_;
    std::vector<Root> positive_roots_;
    std::vector<Generator> gens_;
    std::map<std::pair<int, int>, int> root_index_;
};

// Element of sl_n as a sparse combination of the fixed generator basis.
class ChevalleyElement {
  public:
    explicit ChevalleyElement(int n) : n_(n) {}

    static ChevalleyElement generator(const RootDatum& rd, int id) {
        ChevalleyElement x(rd.n());
        if (id < 0 || id >= rd.num_gens()) throw std::invalid_argument("ChevalleyElement: bad generator id");
        x.coeffs_[id] = 1;
        return x;
    }

    int n() const { return n_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    void add(int id, const Rational& c) {
        if (verma::is_zero(c)) return;
        auto [it, fresh] = coeffs_.try_emplace(id, c);
        if (!fresh) {
            it->second += c;
            if (verma::is_zero(it->second)) coeffs_.erase(it);
        }
    }

    ChevalleyElement& operator+=(const ChevalleyElement& o) {
        check_same(o);
        for (const auto& [id, c] : o.coeffs_) add(id, c);
        return *this;
    }
    friend ChevalleyElement operator*(const Rational& c, ChevalleyElement x) {
        if (verma::is_zero(c)) return ChevalleyElement(x.n_);
        for (auto& [id, v] : x.coeffs_) v *= c;
        return x;
    }
    friend bool operator==(const ChevalleyElement& a, const ChevalleyElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    RatMatrix to_matrix(const RootDatum& rd) const {
        check_rd(rd);
        RatMatrix m(static_cast<std::size_t>(n_), std::vector<Rational>(static_cast<std::size_t>(n_)));
        for (const auto& [id, c] : coeffs_) {
            const Generator& g = rd.gen(id);
            if (g.kind == Generator::Kind::Cartan) {
                m[static_cast<std::size_t>(g.row - 1)][static_cast<std::size_t>(g.row - 1)] += c;
                m[static_cast<std::size_t>(g.row)][static_cast<std::size_t>(g.row)] -= c;
            } else {
                m[static_cast<std::size_t>(g.row - 1)][static_cast<std::size_t>(g.col - 1)] += c;
            }
        }
        return m;
    }

    // Inverse of to_matrix; the matrix must be traceless.
    static ChevalleyElement from_matrix(const RootDatum& rd, const RatMatrix& m) {
        const int n = rd.n();
        if (static_cast<int>(m.size()) != n)
            throw std::invalid_argument("ChevalleyElement: matrix size mismatch");
        Rational tr = 0;
        for (int t = 0; t < n; ++t) {
            if (static_cast<int>(m[static_cast<std::size_t>(t)].size()) != n)
                throw std::invalid_argument("ChevalleyElement: matrix size mismatch");
            tr += m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
        }
        if (!verma::is_zero(tr)) throw std::invalid_argument("ChevalleyElement: matrix has nonzero trace");
        ChevalleyElement x(n);
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                if (r == c) continue;
                const Rational& v = m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
                if (verma::is_zero(v)) continue;
                int id = r < c ? rd.positive_gen(Root{r, c}) : rd.negative_gen(Root{c, r});
                x.add(id, v);
            }
        // Diagonal (a_1..a_n) with zero sum decomposes over H_t with
        // coefficients the partial sums a_1 + .. + a_t.
        Rational partial = 0;
        for (int t = 1; t < n; ++t) {
            partial += m[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(t - 1)];
            if (!verma::is_zero(partial)) x.add(rd.cartan_gen(t), partial);
        }
        return x;
    }

  private:
    void check_same(const ChevalleyElement& o) const {
        if (n_ != o.n_) throw std::invalid_argument("ChevalleyElement: rank mismatch");
    }
    void check_rd(const RootDatum& rd) const {
        if (rd.n() != n_) throw std::invalid_argument("ChevalleyElement: root datum mismatch");
    }

    int n_;
    std::map<int, Rational> coeffs_;
};

inline ChevalleyElement bracket(const RootDatum& rd, const ChevalleyElement& x, const ChevalleyElement& y) {
    if (x.n() != y.n() || x.n() != rd.n()) throw std::invalid_argument("bracket: rank mismatch");
    const std::size_t n = static_cast<std::size_t>(rd.n());
    RatMatrix a = x.to_matrix(rd), b = y.to_matrix(rd);
    RatMatrix c(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            if (is_zero(a[r][k]) && is_zero(b[r][k])) continue;
            for (std::size_t s = 0; s < n; ++s) {
                if (!is_zero(a[r][k]) && !is_zero(b[k][s])) c[r][s] += a[r][k] * b[k][s];
                if (!is_zero(b[r][k]) && !is_zero(a[k][s])) c[r][s] -= b[r][k] * a[k][s];
            }
        }
    return ChevalleyElement::from_matrix(rd, c);
}

// Block structure of the parabolic given by a flag 0 < n_1 < .. < n_k < n:
// column c belongs to block b when n_{b-1} < c <= n_b (with n_0 = 0, n_{k+1} = n).
inline int block_of(int n, const std::vector<int>& flag, int col) {
    if (col < 1 || col > n) throw std::invalid_argument("block_of: column out of range");
    int b = 1;
    for (int f : flag) {
        if (col <= f) return b;
        ++b;
    }
    return b;
}

inline void validate_flag(int n, const std::vector<int>& flag) {
    if (flag.empty()) throw std::invalid_argument("flag must be nonempty");
    int prev = 0;
    for (int f : flag) {
        if (f <= prev || f >= n) throw std::invalid_argument("flag entries must be strictly increasing in [1, n-1]");
        prev = f;
    }
}

// Scalar character of the parabolic p(flag) determined by integers l_1..l_k:
// it vanishes on every off-diagonal entry of p and takes the value
// c_t = sum of l_i over flag entries n_i >= t on E_tt.  Its restriction to h
// is lambda = sum l_i * omega_{n_i}.
class ParabolicCharacter {
  public:
    ParabolicCharacter(int n, std::vector<int> flag, std::vector<long> ell)
        : n_(n), flag_(std::move(flag)), ell_(std::move(ell)) {
        if (n < 2) throw std::invalid_argument("ParabolicCharacter: need n >= 2");
        validate_flag(n, flag_);
        if (flag_.size() != ell_.size())
            throw std::invalid_argument("ParabolicCharacter: flag and weight lists differ in length");
        std::vector<Rational> lam(static_cast<std::size_t>(n - 1));
        for (std::size_t i = 0; i < flag_.size(); ++i)
            lam[static_cast<std::size_t>(flag_[i] - 1)] = ell_[i];
        lambda_ = Weight(std::move(lam));
        diag_.assign(static_cast<std::size_t>(n), Rational(0));
        for (int t = 1; t <= n; ++t)
            for (std::size_t i = 0; i < flag_.size(); ++i)
                if (flag_[i] >= t) diag_[static_cast<std::size_t>(t - 1)] += ell_[i];
    }

    int n() const { return n_; }
    const std::vector<int>& flag() const { return flag_; }
    const std::vector<long>& ell() const { return ell_; }
    const Weight& lambda() const { return lambda_; }

    // Value of the character on E_tt.
    const Rational& diag_coeff(int t) const { return diag_.at(static_cast<std::size_t>(t - 1)); }

    int block_of(int col) const { return verma::block_of(n_, flag_, col); }

    bool is_full_flag() const { return static_cast<int>(flag_.size()) == n_ - 1; }

    // min over the flag weights l_i (the truncation bound for the character
    // ideal theorems).  The alternative reading, min over all of lambda's
    // coordinates, is min_flag() capped at 0 for a proper parabolic.
    long min_flag() const { return *std::min_element(ell_.begin(), ell_.end()); }
    long min_all_coords() const { return is_full_flag() ? min_flag() : std::min(min_flag(), 0L); }

    bool gen_in_parabolic(const Generator& g) const {
        if (g.kind != Generator::Kind::Negative) return true;
        return block_of(g.row) == block_of(g.col);
    }

    // Character value on a single parabolic generator.
    Rational value_on_gen(const Generator& g) const {
        if (!gen_in_parabolic(g)) throw not_in_parabolic("character evaluated off the parabolic");
        if (g.kind != Generator::Kind::Cartan) return 0;
        return diag_coeff(g.row) - diag_coeff(g.row + 1);
    }

  private:
    int n_;
    std::vector<int> flag_;
    std::vector<long> ell_;
    Weight lambda_;
    std::vector<Rational> diag_;
};

inline Rational eval_character(const RootDatum& rd, const ParabolicCharacter& pc, const ChevalleyElement& x) {
    if (rd.n() != pc.n() || x.n() != pc.n()) throw std::invalid_argument("eval_character: rank mismatch");
    Rational v = 0;
    for (const auto& [id, c] : x.coeffs()) v += c * pc.value_on_gen(rd.gen(id));
    return v;
}

// Positive roots (i,j) whose matrix unit E_ji lies below the block diagonal;
// E_ji for these span the nilpotent complement of p in g.  Root order again.
inline std::vector<Root> complement_roots(const RootDatum& rd, const ParabolicCharacter& pc) {
    if (rd.n() != pc.n()) throw std::invalid_argument("complement_roots: rank mismatch");
    std::vector<Root> out;
    for (const Root& r : rd.positive_roots())
        if (pc.block_of(r.i) != pc.block_of(r.j)) out.push_back(r);
    return out;
}

} // namespace verma
