#pragma once

// The enveloping algebra U(sl_n) in its PBW basis.
//
// Monomials are exponent vectors over the global generator order fixed by
// RootDatum (negatives, Cartans, mirrored positives).  Products are computed
// by letterwise left multiplication: pushing a generator g into an ordered
// monomial swaps it past the leading letter f at the cost of a bracket term,
//
//   g f X = f g X + [g, f] X,
//
// and recursion terminates because each step either shortens the tail or
// strictly reduces the number of out-of-order pairs at equal degree.  Normal
// forms of (generator, monomial) products are memoized per algebra; the same
// reductions recur constantly across module actions and ideal spans.
//
// Monomial order: by total degree, then descending lexicographic on the
// exponent vector.  For sl_2 with generators (E21, H1, E12) the degree <= 1
// monomials enumerate as 1, E21, H1, E12.

#include "verma/rational.hpp"
#include "verma/rootdata.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace verma {

using ExpVec = std::vector<std::int32_t>;

inline int exp_degree(const ExpVec& e) {
    int d = 0;
    for (std::int32_t x : e) d += x;
    return d;
}

// Graded order, ties broken by descending lex on exponents.
struct GradedLexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = exp_degree(a), db = exp_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

struct PBWMonomial {
    ExpVec exps;

    static PBWMonomial one(int num_gens) { return PBWMonomial{ExpVec(static_cast<std::size_t>(num_gens), 0)}; }
    int degree() const { return exp_degree(exps); }
    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](std::int32_t x) { return x == 0; });
    }
    friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) { return a.exps == b.exps; }
    friend bool operator<(const PBWMonomial& a, const PBWMonomial& b) {
        return GradedLexDesc{}(a.exps, b.exps);
    }
};

struct MonomialLess {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const { return a < b; }
};

class UEAElement {
  public:
    using TermMap = std::map<PBWMonomial, Rational, MonomialLess>;

    explicit UEAElement(int num_gens) : num_gens_(num_gens) {}

    int num_gens() const { return num_gens_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Rational& coeff(const PBWMonomial& m) const {
        static const Rational zero(0);
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const PBWMonomial& m, const Rational& c) {
        if (verma::is_zero(c)) return;
        if (static_cast<int>(m.exps.size()) != num_gens_)
            throw std::invalid_argument("UEAElement: monomial width mismatch");
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (verma::is_zero(it->second)) terms_.erase(it);
        }
    }

    UEAElement& operator+=(const UEAElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    UEAElement& operator-=(const UEAElement& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(const Rational& c, UEAElement a) {
        if (verma::is_zero(c)) return UEAElement(a.num_gens_);
        for (auto& [m, v] : a.terms_) v *= c;
        return a;
    }
    friend bool operator==(const UEAElement& a, const UEAElement& b) {
        return a.num_gens_ == b.num_gens_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const UEAElement& a, const UEAElement& b) { return !(a == b); }

  private:
    void check_same(const UEAElement& o) const {
        if (num_gens_ != o.num_gens_) throw std::invalid_argument("UEAElement: algebra mismatch");
    }

    int num_gens_;
    TermMap terms_;
};

// Largest total degree among the terms; empty for the zero element.  The
// graded order puts the top-degree term last.
inline std::optional<int> filtration_degree(const UEAElement& e) {
    if (e.is_zero()) return std::nullopt;
    return e.terms().rbegin()->first.degree();
}

// All monomials of degree <= level supported on the given generator ids,
// listed in the graded monomial order.  There are C(|ids| + level, level).
inline std::vector<PBWMonomial> enumerate_pbw(int num_gens, int level, const std::vector<int>& ids) {
    if (level < 0) throw std::invalid_argument("enumerate_pbw: negative level");
    for (int id : ids)
        if (id < 0 || id >= num_gens) throw std::invalid_argument("enumerate_pbw: generator id out of range");
    std::vector<PBWMonomial> out;
    ExpVec cur(static_cast<std::size_t>(num_gens), 0);
    auto rec = [&](auto&& self, std::size_t k, int budget) -> void {
        if (k == ids.size()) {
            out.push_back(PBWMonomial{cur});
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[static_cast<std::size_t>(ids[k])] = e;
            self(self, k + 1, budget - e);
        }
        cur[static_cast<std::size_t>(ids[k])] = 0;
    };
    rec(rec, 0, level);
    std::sort(out.begin(), out.end(), [](const PBWMonomial& a, const PBWMonomial& b) {
        return MonomialLess{}(a, b);
    });
    return out;
}

class Algebra {
  public:
    explicit Algebra(int n) : rd_(n) {
        const int N = rd_.num_gens();
        brackets_.assign(static_cast<std::size_t>(N),
                         std::vector<std::vector<std::pair<int, Rational>>>(static_cast<std::size_t>(N)));
        for (int g = 0; g < N; ++g)
            for (int f = 0; f < N; ++f) {
                ChevalleyElement b = bracket(rd_, ChevalleyElement::generator(rd_, g),
                                             ChevalleyElement::generator(rd_, f));
                auto& cell = brackets_[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
                for (const auto& [id, c] : b.coeffs()) cell.emplace_back(id, c);
            }
    }

    const RootDatum& root_datum() const { return rd_; }
    int num_gens() const { return rd_.num_gens(); }

    // [gen g, gen f] expanded over the generator basis.
    const std::vector<std::pair<int, Rational>>& gen_bracket(int g, int f) const {
        return brackets_.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(f));
    }

    UEAElement one() const {
        UEAElement e(num_gens());
        e.add_term(PBWMonomial::one(num_gens()), 1);
        return e;
    }

    UEAElement generator_element(int id) const {
        check_id(id);
        PBWMonomial m = PBWMonomial::one(num_gens());
        m.exps[static_cast<std::size_t>(id)] = 1;
        UEAElement e(num_gens());
        e.add_term(m, 1);
        return e;
    }

    UEAElement monomial_element(const PBWMonomial& m, const Rational& c = 1) const {
        UEAElement e(num_gens());
        e.add_term(m, c);
        return e;
    }

    // Degree <= 1 embedding of sl_n.
    UEAElement from_chevalley(const ChevalleyElement& x) const {
        if (x.n() != rd_.n()) throw std::invalid_argument("from_chevalley: rank mismatch");
        UEAElement e(num_gens());
        for (const auto& [id, c] : x.coeffs()) {
            PBWMonomial m = PBWMonomial::one(num_gens());
            m.exps[static_cast<std::size_t>(id)] = 1;
            e.add_term(m, c);
        }
        return e;
    }

    // Normal form of the generator-word product, times an optional scalar.
    UEAElement straighten(const std::vector<int>& word, const Rational& coeff = 1) const {
        for (int id : word) check_id(id);
        UEAElement r = one();
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = multiply_generator_left(*it, r);
        return coeff * r;
    }

    UEAElement multiply_generator_left(int g, const UEAElement& e) const {
        check_id(g);
        check_elem(e);
        UEAElement out(num_gens());
        for (const auto& [m, c] : e.terms()) {
            const UEAElement& gm = mul_gen_mono(g, m);
            for (const auto& [m2, c2] : gm.terms()) out.add_term(m2, c * c2);
        }
        return out;
    }

    UEAElement multiply(const UEAElement& a, const UEAElement& b) const {
        check_elem(a);
        check_elem(b);
        UEAElement out(num_gens());
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                UEAElement prod = multiply_mono(ma, mb);
                for (const auto& [m2, c2] : prod.terms()) out.add_term(m2, ca * cb * c2);
            }
        return out;
    }

    // Antiautomorphism induced by matrix transposition.  On this generator
    // order it permutes exponent vectors (see RootDatum::mirror).
    UEAElement transpose(const UEAElement& e) const {
        check_elem(e);
        UEAElement out(num_gens());
        for (const auto& [m, c] : e.terms()) {
            PBWMonomial t = PBWMonomial::one(num_gens());
            for (int id = 0; id < num_gens(); ++id)
                t.exps[static_cast<std::size_t>(rd_.mirror(id))] = m.exps[static_cast<std::size_t>(id)];
            out.add_term(t, c);
        }
        return out;
    }

    // Image of e in End(Q^n) under the defining representation; the faithful
    // oracle for straightening identities in low degree.
    RatMatrix fundamental_matrix(const UEAElement& e) const {
        check_elem(e);
        const std::size_t n = static_cast<std::size_t>(rd_.n());
        RatMatrix acc(n, RatVectorN(n));
        for (const auto& [m, c] : e.terms()) {
            RatMatrix prod = identity(n);
            for (int id = 0; id < num_gens(); ++id)
                for (std::int32_t rep = 0; rep < m.exps[static_cast<std::size_t>(id)]; ++rep)
                    prod = mat_mul(prod, rd_.gen_matrix(id));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) acc[r][s] += c * prod[r][s];
        }
        return acc;
    }

  private:
    using RatVectorN = std::vector<Rational>;

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, RatVectorN(n));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    }

    static RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
        const std::size_t n = a.size();
        RatMatrix c(n, RatVectorN(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(a[i][k])) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!is_zero(b[k][j])) c[i][j] += a[i][k] * b[k][j];
            }
        return c;
    }

    void check_id(int id) const {
        if (id < 0 || id >= num_gens()) throw std::invalid_argument("Algebra: generator id out of range");
    }
    void check_elem(const UEAElement& e) const {
        if (e.num_gens() != num_gens()) throw std::invalid_argument("Algebra: element from a different algebra");
    }

    // Normal form of X^a * X^b for ordered monomials a, b.
    UEAElement multiply_mono(const PBWMonomial& a, const PBWMonomial& b) const {
        UEAElement t = monomial_element(b);
        for (int id = num_gens() - 1; id >= 0; --id)
            for (std::int32_t rep = 0; rep < a.exps[static_cast<std::size_t>(id)]; ++rep)
                t = multiply_generator_left(id, t);
        return t;
    }

    // g * X^m in normal form.
    const UEAElement& mul_gen_mono(int g, const PBWMonomial& m) const {
        std::size_t f = 0;
        while (f < m.exps.size() && m.exps[f] == 0) ++f;
        if (f == m.exps.size() || g <= static_cast<int>(f)) {
            // Already ordered: just bump the exponent.
            auto key = std::make_pair(g, m);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
            PBWMonomial r = m;
            r.exps[static_cast<std::size_t>(g)] += 1;
            return memo_.emplace(std::move(key), monomial_element(r)).first->second;
        }
        auto key = std::make_pair(g, m);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        PBWMonomial tail = m;
        tail.exps[f] -= 1;
        // g f X = f (g X) + [g, f] X
        const UEAElement& gx = mul_gen_mono(g, tail);
        UEAElement r = multiply_generator_left(static_cast<int>(f), gx);
        for (const auto& [h, c] : gen_bracket(g, static_cast<int>(f))) {
            const UEAElement& hx = mul_gen_mono(h, tail);
            for (const auto& [m2, c2] : hx.terms()) r.add_term(m2, c * c2);
        }
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    RootDatum rd_;
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> brackets_;
    mutable std::map<std::pair<int, PBWMonomial>, UEAElement> memo_;
};

} // namespace verma
