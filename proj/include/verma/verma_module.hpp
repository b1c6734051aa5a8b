#pragma once

// Scalar highest-weight modules induced from a parabolic.
//
// Fix the parabolic p cut out by a flag and a character chi of p that kills
// every off-diagonal entry (so chi is determined by its restriction to h,
// which must vanish on the Levi simple roots).  The induced module has basis
// X^P (*) w where X^P runs over ordered monomials in the complement
// generators E_ji, one per positive root (i, j) crossing the flag, and w is
// the cyclic vector.  The basis vector X^P (*) w has weight chi + alpha_P
// where alpha_P is the (negative) sum of the roots in P.
//
// The action is computed letterwise.  A complement letter multiplies into
// X^P by PBW straightening inside U(n-bar), which is closed under brackets.
// A parabolic letter g walks past the leading complement letter c via
//
//   g c X = c (g X) + [g, c] X,
//
// bottoming out on the cyclic vector where g acts by chi (Cartans) or 0
// (off-diagonal parabolic letters).  Bracket terms re-dispatch on which side
// of the decomposition they land.

#include "verma/errors.hpp"
#include "verma/exactla.hpp"
#include "verma/pbw.hpp"
#include "verma/rootdata.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace verma {

// Vector in the induced module: exponent vectors over the complement roots.
class ModuleVector {
  public:
    using TermMap = std::map<ExpVec, Rational, GradedLexDesc>;

    explicit ModuleVector(int width) : width_(width) {}

    int width() const { return width_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Rational& coeff(const ExpVec& p) const {
        static const Rational zero(0);
        auto it = terms_.find(p);
        return it == terms_.end() ? zero : it->second;
    }

    void add_term(const ExpVec& p, const Rational& c) {
        if (verma::is_zero(c)) return;
        if (static_cast<int>(p.size()) != width_)
            throw std::invalid_argument("ModuleVector: exponent width mismatch");
        auto [it, fresh] = terms_.try_emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (verma::is_zero(it->second)) terms_.erase(it);
        }
    }

    ModuleVector& operator+=(const ModuleVector& o) {
        if (width_ != o.width_) throw std::invalid_argument("ModuleVector: module mismatch");
        for (const auto& [p, c] : o.terms_) add_term(p, c);
        return *this;
    }
    friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
    friend ModuleVector operator*(const Rational& c, ModuleVector a) {
        if (verma::is_zero(c)) return ModuleVector(a.width_);
        for (auto& [p, v] : a.terms_) v *= c;
        return a;
    }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
        return a.width_ == b.width_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !(a == b); }

  private:
    int width_;
    TermMap terms_;
};

inline std::optional<int> degree_of(const ModuleVector& v) {
    if (v.is_zero()) return std::nullopt;
    return exp_degree(v.terms().rbegin()->first);
}

class GeneralizedVerma {
  public:
    // chi is a weight of h extended by zero to p; it must vanish on the
    // Levi simple roots (coordinates off the flag).  chi may be any rational
    // weight; no integrality is assumed.
    GeneralizedVerma(const Algebra& alg, std::vector<int> flag, Weight chi)
        : alg_(&alg), flag_(std::move(flag)), chi_(std::move(chi)) {
        const RootDatum& rd = alg.root_datum();
        validate_flag(rd.n(), flag_);
        if (chi_.n() != rd.n()) throw std::invalid_argument("GeneralizedVerma: weight rank mismatch");
        for (int j = 1; j < rd.n(); ++j) {
            bool in_flag = std::find(flag_.begin(), flag_.end(), j) != flag_.end();
            if (!in_flag && !verma::is_zero(chi_.on_cartan(j)))
                throw std::invalid_argument(
                    "GeneralizedVerma: character must vanish on Levi simple root " + std::to_string(j));
        }
        comp_index_of_gen_.assign(static_cast<std::size_t>(rd.num_gens()), -1);
        for (const Root& r : rd.positive_roots()) {
            if (block_of(rd.n(), flag_, r.i) == block_of(rd.n(), flag_, r.j)) continue;
            int id = rd.negative_gen(r);
            comp_index_of_gen_[static_cast<std::size_t>(id)] = static_cast<int>(comp_roots_.size());
            comp_roots_.push_back(r);
            comp_gen_ids_.push_back(id);
            comp_weights_.push_back(root_weight(rd.n(), r));
        }
    }

    static GeneralizedVerma from_character(const Algebra& alg, const ParabolicCharacter& pc) {
        if (alg.root_datum().n() != pc.n()) throw std::invalid_argument("from_character: rank mismatch");
        return GeneralizedVerma(alg, pc.flag(), pc.lambda());
    }

    // Classical Verma module for the Borel; optionally builds M(mu - delta).
    static GeneralizedVerma classical(const Algebra& alg, const Weight& mu, bool shift_by_delta = false) {
        const int n = alg.root_datum().n();
        std::vector<int> full(static_cast<std::size_t>(n - 1));
        for (int j = 1; j < n; ++j) full[static_cast<std::size_t>(j - 1)] = j;
        return GeneralizedVerma(alg, full, shift_by_delta ? mu - delta_weight(n) : mu);
    }

    const Algebra& algebra() const { return *alg_; }
    int n() const { return alg_->root_datum().n(); }
    const std::vector<int>& flag() const { return flag_; }
    const Weight& highest_weight() const { return chi_; }
    bool is_full_flag() const { return static_cast<int>(flag_.size()) == n() - 1; }

    int num_complement() const { return static_cast<int>(comp_roots_.size()); }
    const std::vector<Root>& complement_roots() const { return comp_roots_; }
    const std::vector<int>& complement_gen_ids() const { return comp_gen_ids_; }

    bool is_complement_gen(int id) const {
        return comp_index_of_gen_.at(static_cast<std::size_t>(id)) >= 0;
    }

    ModuleVector cyclic_vector() const {
        ModuleVector v(num_complement());
        v.add_term(ExpVec(static_cast<std::size_t>(num_complement()), 0), 1);
        return v;
    }

    Weight weight_of(const ExpVec& p) const {
        if (static_cast<int>(p.size()) != num_complement())
            throw std::invalid_argument("weight_of: exponent width mismatch");
        Weight w = chi_;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k]) w -= Rational(p[k]) * comp_weights_[k];
        return w;
    }

    // Coefficient of the cyclic vector itself.
    Rational lambda_coefficient(const ModuleVector& v) const {
        return v.coeff(ExpVec(static_cast<std::size_t>(num_complement()), 0));
    }

    ModuleVector act_generator(int gid, const ModuleVector& v) const {
        if (gid < 0 || gid >= alg_->num_gens())
            throw std::invalid_argument("act_generator: generator id out of range");
        if (v.width() != num_complement()) throw std::invalid_argument("act_generator: vector from another module");
        ModuleVector out(num_complement());
        for (const auto& [p, c] : v.terms()) {
            const ModuleVector& gv = act_gen_on_basis(gid, p);
            for (const auto& [q, c2] : gv.terms()) out.add_term(q, c * c2);
        }
        return out;
    }

    ModuleVector act(const UEAElement& a, const ModuleVector& v) const {
        if (a.num_gens() != alg_->num_gens()) throw std::invalid_argument("act: element from another algebra");
        if (v.width() != num_complement()) throw std::invalid_argument("act: vector from another module");
        ModuleVector out(num_complement());
        for (const auto& [m, c] : a.terms()) {
            ModuleVector t = v;
            for (int id = alg_->num_gens() - 1; id >= 0; --id)
                for (std::int32_t rep = 0; rep < m.exps[static_cast<std::size_t>(id)]; ++rep)
                    t = act_generator(id, t);
            out += c * t;
        }
        return out;
    }

    ModuleVector act_chevalley(const ChevalleyElement& x, const ModuleVector& v) const {
        return act(alg_->from_chevalley(x), v);
    }

  private:
    // chi on a parabolic generator: Cartans see the weight, root generators 0.
    Rational chi_value(int gid) const {
        const Generator& g = alg_->root_datum().gen(gid);
        if (g.kind == Generator::Kind::Cartan) return chi_.on_cartan(g.row);
        return 0;
    }

    const ModuleVector& act_gen_on_basis(int gid, const ExpVec& p) const {
        auto key = std::make_pair(gid, p);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        ModuleVector r = is_complement_gen(gid) ? prepend_complement(gid, p) : act_parabolic(gid, p);
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    // Y_gid * X^P inside U(n-bar), via the algebra's straightening.  The
    // complement is closed under brackets, so the normal form stays
    // supported on complement generators.
    ModuleVector prepend_complement(int gid, const ExpVec& p) const {
        PBWMonomial m = PBWMonomial::one(alg_->num_gens());
        for (std::size_t k = 0; k < p.size(); ++k)
            m.exps[static_cast<std::size_t>(comp_gen_ids_[k])] = p[k];
        UEAElement prod = alg_->multiply_generator_left(gid, alg_->monomial_element(m));
        ModuleVector out(num_complement());
        for (const auto& [m2, c] : prod.terms()) {
            ExpVec q(static_cast<std::size_t>(num_complement()), 0);
            for (int id = 0; id < alg_->num_gens(); ++id) {
                std::int32_t e = m2.exps[static_cast<std::size_t>(id)];
                if (!e) continue;
                int k = comp_index_of_gen_[static_cast<std::size_t>(id)];
                if (k < 0) throw std::logic_error("prepend_complement: straightening left the complement");
                q[static_cast<std::size_t>(k)] = e;
            }
            out.add_term(q, c);
        }
        return out;
    }

    // g * (X^P (*) w) for parabolic g, by walking g past the leading letter.
    ModuleVector act_parabolic(int gid, const ExpVec& p) const {
        std::size_t f = 0;
        while (f < p.size() && p[f] == 0) ++f;
        ModuleVector out(num_complement());
        if (f == p.size()) {
            out.add_term(p, chi_value(gid));
            return out;
        }
        ExpVec tail = p;
        tail[f] -= 1;
        const int cid = comp_gen_ids_[f];
        // c * (g * tail)
        const ModuleVector& inner = act_gen_on_basis(gid, tail);
        for (const auto& [q, c] : inner.terms()) {
            const ModuleVector& cq = act_gen_on_basis(cid, q);
            for (const auto& [q2, c2] : cq.terms()) out.add_term(q2, c * c2);
        }
        // + [g, c] * tail
        for (const auto& [h, c] : alg_->gen_bracket(gid, cid)) {
            const ModuleVector& hv = act_gen_on_basis(h, tail);
            for (const auto& [q2, c2] : hv.terms()) out.add_term(q2, c * c2);
        }
        return out;
    }

    const Algebra* alg_;
    std::vector<int> flag_;
    Weight chi_;
    std::vector<Root> comp_roots_;
    std::vector<int> comp_gen_ids_;
    std::vector<Weight> comp_weights_;
    std::vector<int> comp_index_of_gen_;
    mutable std::map<std::pair<int, ExpVec>, ModuleVector> memo_;
};

// All exponent vectors of the given width with degree <= level, in the
// graded order.  There are C(width + level, level).
inline std::vector<ExpVec> enumerate_exps(int width, int level) {
    if (level < 0) throw std::invalid_argument("enumerate_exps: negative level");
    std::vector<ExpVec> out;
    ExpVec cur(static_cast<std::size_t>(width), 0);
    auto rec = [&](auto&& self, std::size_t k, int budget) -> void {
        if (k == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur[k] = e;
            self(self, k + 1, budget - e);
        }
        cur[k] = 0;
    };
    rec(rec, 0, level);
    std::sort(out.begin(), out.end(), GradedLexDesc{});
    return out;
}

// The degree <= level slice of the module, with a fixed coordinate order.
class TruncatedModule {
  public:
    TruncatedModule(const GeneralizedVerma& mod, int level) : mod_(&mod), level_(level) {
        if (level < 0) throw std::invalid_argument("TruncatedModule: negative level");
        basis_ = enumerate_exps(mod.num_complement(), level);
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }

    const GeneralizedVerma& module() const { return *mod_; }
    int level() const { return level_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<ExpVec>& basis() const { return basis_; }

    std::size_t index_of(const ExpVec& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::invalid_argument("TruncatedModule: vector exceeds the truncation level");
        return it->second;
    }

    RatVector coordinates(const ModuleVector& v) const {
        RatVector out(basis_.size());
        for (const auto& [p, c] : v.terms()) out[index_of(p)] = c;
        return out;
    }

    ModuleVector from_coordinates(const RatVector& x) const {
        if (x.size() != basis_.size()) throw std::invalid_argument("TruncatedModule: coordinate length mismatch");
        ModuleVector v(mod_->num_complement());
        for (std::size_t i = 0; i < x.size(); ++i) v.add_term(basis_[i], x[i]);
        return v;
    }

    // Action with the filtration guard: deg(a) + deg(v) must stay <= level,
    // otherwise the result would leave the truncation.
    ModuleVector act(const UEAElement& a, const ModuleVector& v) const {
        std::optional<int> da = filtration_degree(a), dv = degree_of(v);
        if (da && dv && *da + *dv > level_)
            throw std::invalid_argument("TruncatedModule: action would exceed the truncation level");
        return mod_->act(a, v);
    }

  private:
    const GeneralizedVerma* mod_;
    int level_;
    std::vector<ExpVec> basis_;
    std::map<ExpVec, std::size_t, GradedLexDesc> index_;
};

// Basis indices grouped by weight.
inline std::map<Weight, std::vector<std::size_t>, WeightLess> weight_spaces(const TruncatedModule& tm) {
    std::map<Weight, std::vector<std::size_t>, WeightLess> out;
    for (std::size_t i = 0; i < tm.basis().size(); ++i)
        out[tm.module().weight_of(tm.basis()[i])].push_back(i);
    return out;
}

// Image of a classical Verma vector under the canonical surjection onto a
// generalized module with the same highest weight: rewrite each monomial in
// the full set of negative generators and act on the target's cyclic vector.
inline ModuleVector project_from_classical(const GeneralizedVerma& target, const GeneralizedVerma& source,
                                           const ModuleVector& v) {
    if (&target.algebra() != &source.algebra() && target.n() != source.n())
        throw std::invalid_argument("project_from_classical: rank mismatch");
    if (!source.is_full_flag())
        throw std::invalid_argument("project_from_classical: source must be a classical Verma module");
    if (source.highest_weight() != target.highest_weight())
        throw std::invalid_argument("project_from_classical: highest weights differ");
    if (v.width() != source.num_complement())
        throw std::invalid_argument("project_from_classical: vector from another module");
    const Algebra& alg = target.algebra();
    ModuleVector out(target.num_complement());
    for (const auto& [p, c] : v.terms()) {
        PBWMonomial m = PBWMonomial::one(alg.num_gens());
        for (std::size_t k = 0; k < p.size(); ++k)
            m.exps[static_cast<std::size_t>(source.complement_gen_ids()[k])] = p[k];
        out += c * target.act(alg.monomial_element(m), target.cyclic_vector());
    }
    return out;
}

} // namespace verma
