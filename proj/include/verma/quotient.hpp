#pragma once

// The maximal proper submodule and the simple quotient.
//
// Every weight of the induced module lies below the highest weight chi, and
// the chi weight space is the line through the cyclic vector.  A weight
// vector k generates a proper submodule exactly when no raising element of
// U(p) pushes it back onto that line, so the submodule's slice in the weight
// space of mu = chi + alpha_P is the kernel of the matrix
//
//   (raising monomial Y of weight chi - mu) x (basis vector X^P (*) w)
//   entry = coefficient of the cyclic vector in Y . (X^P (*) w).
//
// Monomials with Levi-lowering letters contribute nothing (they would need
// weights above chi) and Cartan letters only rescale rows, so it suffices to
// range over monomials in the positive root generators; their degree is then
// bounded by the height of chi - mu, keeping the matrix finite.
//
// An independent cross-check computes the same slice as the radical of the
// contravariant form via the transpose antiautomorphism: the Gram matrix
// G[P][Q] = cyclic coefficient of transpose(X^P) . (X^Q (*) w).

#include "verma/exactla.hpp"
#include "verma/verma_module.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace verma {

// Coordinates of a weight over the simple roots (always solvable over Q).
inline std::vector<Rational> simple_root_coords(const Weight& nu) {
    const int n = nu.n();
    // Realize nu = sum c_t L_t with the c determined up to a common shift by
    // c_t - c_{t+1} = nu(H_t); pick the shift with sum c_t = 0, then the
    // simple coordinates are the partial sums of the c.
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (int t = n - 1; t >= 1; --t)
        c[static_cast<std::size_t>(t - 1)] = c[static_cast<std::size_t>(t)] + nu.on_cartan(t);
    Rational shift = 0;
    for (const Rational& x : c) shift += x;
    shift /= n;
    std::vector<Rational> q(static_cast<std::size_t>(n - 1));
    Rational partial = 0;
    for (int t = 1; t < n; ++t) {
        partial += c[static_cast<std::size_t>(t - 1)] - shift;
        q[static_cast<std::size_t>(t - 1)] = partial;
    }
    return q;
}

// nu as a nonnegative integer combination of simple roots, if it is one.
inline std::optional<std::vector<int>> nonneg_root_coords(const Weight& nu) {
    std::vector<Rational> q = simple_root_coords(nu);
    std::vector<int> out(q.size());
    for (std::size_t t = 0; t < q.size(); ++t) {
        if (!is_integer(q[t]) || sgn(q[t]) < 0) return std::nullopt;
        out[t] = static_cast<int>(to_long(q[t]));
    }
    return out;
}

// All exponent vectors P (any degree) with chi + alpha_P = mu, graded order.
inline std::vector<ExpVec> weight_space_basis(const GeneralizedVerma& mod, const Weight& mu) {
    std::vector<ExpVec> out;
    auto q = nonneg_root_coords(mod.highest_weight() - mu);
    if (!q) return out;
    const auto& roots = mod.complement_roots();
    ExpVec cur(static_cast<std::size_t>(mod.num_complement()), 0);
    std::vector<int> rem = *q;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == roots.size()) {
            for (int x : rem)
                if (x) return;
            out.push_back(cur);
            return;
        }
        // Exponent of root (i, j) is capped by the remaining budget on each
        // simple coordinate it covers.
        int cap = rem[static_cast<std::size_t>(roots[k].i - 1)];
        for (int t = roots[k].i; t < roots[k].j; ++t)
            cap = std::min(cap, rem[static_cast<std::size_t>(t - 1)]);
        for (int e = 0; e <= cap; ++e) {
            cur[k] = e;
            for (int t = roots[k].i; t < roots[k].j; ++t) rem[static_cast<std::size_t>(t - 1)] -= e;
            self(self, k + 1);
            for (int t = roots[k].i; t < roots[k].j; ++t) rem[static_cast<std::size_t>(t - 1)] += e;
        }
        cur[k] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), GradedLexDesc{});
    return out;
}

// PBW monomials in the positive root generators with weight exactly the
// given nonnegative simple-root vector, graded order.
inline std::vector<PBWMonomial> raising_monomials(const Algebra& alg, const std::vector<int>& target) {
    const RootDatum& rd = alg.root_datum();
    if (static_cast<int>(target.size()) != rd.n() - 1)
        throw std::invalid_argument("raising_monomials: bad target length");
    std::vector<PBWMonomial> out;
    PBWMonomial cur = PBWMonomial::one(alg.num_gens());
    std::vector<int> rem = target;
    const auto& roots = rd.positive_roots();
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == roots.size()) {
            for (int x : rem)
                if (x) return;
            out.push_back(cur);
            return;
        }
        int cap = rem[static_cast<std::size_t>(roots[k].i - 1)];
        for (int t = roots[k].i; t < roots[k].j; ++t)
            cap = std::min(cap, rem[static_cast<std::size_t>(t - 1)]);
        const std::size_t id = static_cast<std::size_t>(rd.positive_gen(roots[k]));
        for (int e = 0; e <= cap; ++e) {
            cur.exps[id] = e;
            for (int t = roots[k].i; t < roots[k].j; ++t) rem[static_cast<std::size_t>(t - 1)] -= e;
            self(self, k + 1);
            for (int t = roots[k].i; t < roots[k].j; ++t) rem[static_cast<std::size_t>(t - 1)] += e;
        }
        cur.exps[id] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), MonomialLess{});
    return out;
}

// Slice of the maximal proper submodule in the weight space of mu, in the
// coordinates of weight_space_basis(mod, mu).
inline TruncatedSubspace submodule_membership_weightspace(const GeneralizedVerma& mod, const Weight& mu) {
    std::vector<ExpVec> wsb = weight_space_basis(mod, mu);
    if (wsb.empty()) throw std::invalid_argument("submodule_membership_weightspace: mu is not a module weight");
    auto q = nonneg_root_coords(mod.highest_weight() - mu);
    std::vector<PBWMonomial> raise = raising_monomials(mod.algebra(), *q);
    std::vector<RatVector> rows;
    rows.reserve(wsb.size());
    for (const ExpVec& p : wsb) {
        ModuleVector v(mod.num_complement());
        v.add_term(p, 1);
        RatVector row(raise.size());
        for (std::size_t c = 0; c < raise.size(); ++c)
            row[c] = mod.lambda_coefficient(mod.act(mod.algebra().monomial_element(raise[c]), v));
        rows.push_back(std::move(row));
    }
    return kernel(rows);
}

// Same slice as the radical of the contravariant form on the weight space.
inline TruncatedSubspace shapovalov_radical_weightspace(const GeneralizedVerma& mod, const Weight& mu) {
    std::vector<ExpVec> wsb = weight_space_basis(mod, mu);
    if (wsb.empty()) throw std::invalid_argument("shapovalov_radical_weightspace: mu is not a module weight");
    const Algebra& alg = mod.algebra();
    std::vector<UEAElement> transposed;
    transposed.reserve(wsb.size());
    for (const ExpVec& p : wsb) {
        PBWMonomial m = PBWMonomial::one(alg.num_gens());
        for (std::size_t k = 0; k < p.size(); ++k)
            m.exps[static_cast<std::size_t>(mod.complement_gen_ids()[k])] = p[k];
        transposed.push_back(alg.transpose(alg.monomial_element(m)));
    }
    std::vector<RatVector> gram(wsb.size(), RatVector(wsb.size()));
    for (std::size_t r = 0; r < wsb.size(); ++r) {
        for (std::size_t c = 0; c < wsb.size(); ++c) {
            ModuleVector v(mod.num_complement());
            v.add_term(wsb[c], 1);
            gram[r][c] = mod.lambda_coefficient(mod.act(transposed[r], v));
        }
    }
    return kernel(gram);
}

enum class KernelOracle { Raising, Shapovalov };

inline TruncatedSubspace submodule_weightspace(const GeneralizedVerma& mod, const Weight& mu, KernelOracle o) {
    return o == KernelOracle::Raising ? submodule_membership_weightspace(mod, mu)
                                      : shapovalov_radical_weightspace(mod, mu);
}

// The degree <= level slice of the maximal submodule and the corresponding
// quotient dimensions.
struct SubmoduleLevel {
    int level = 0;
    std::size_t dim_module = 0;
    std::size_t dim_submodule = 0;
    std::size_t dim_quotient = 0;
    TruncatedSubspace subspace; // in TruncatedModule coordinates
    std::map<Weight, std::size_t, WeightLess> quotient_weight_dims;
};

inline SubmoduleLevel maximal_submodule_trunc(const GeneralizedVerma& mod, int level,
                                              KernelOracle oracle = KernelOracle::Raising) {
    TruncatedModule tm(mod, level);
    SubmoduleLevel out;
    out.level = level;
    out.dim_module = tm.dimension();
    out.subspace = TruncatedSubspace(tm.dimension());
    for (const auto& entry : weight_spaces(tm)) {
        const Weight& mu = entry.first;
        std::vector<ExpVec> wsb = weight_space_basis(mod, mu);
        TruncatedSubspace kmu = submodule_weightspace(mod, mu, oracle);
        // Cut to the degree <= level coordinates, which form a prefix of the
        // graded weight-space basis.
        TruncatedSubspace low(wsb.size());
        std::size_t n_low = 0;
        for (std::size_t i = 0; i < wsb.size(); ++i) {
            if (exp_degree(wsb[i]) > level) continue;
            ++n_low;
            RatVector unit(wsb.size());
            unit[i] = 1;
            low.insert(std::move(unit));
        }
        TruncatedSubspace cut = intersect(kmu, low);
        for (const RatVector& row : cut.basis()) {
            RatVector full(tm.dimension());
            for (std::size_t i = 0; i < wsb.size(); ++i)
                if (!is_zero(row[i])) full[tm.index_of(wsb[i])] = row[i];
            out.subspace.insert(std::move(full));
        }
        out.quotient_weight_dims[mu] = n_low - cut.dim();
    }
    out.dim_submodule = out.subspace.dim();
    out.dim_quotient = out.dim_module - out.dim_submodule;
    return out;
}

// dim of the degree <= l slice of the simple quotient for l = 0..probe, in
// one sweep over the weights of the level-probe truncation.
inline std::vector<std::size_t> jet_dimension_profile(const GeneralizedVerma& mod, int probe,
                                                      KernelOracle oracle = KernelOracle::Raising) {
    TruncatedModule tm(mod, probe);
    std::vector<std::size_t> dims(static_cast<std::size_t>(probe + 1), 0);
    for (const auto& entry : weight_spaces(tm)) {
        const Weight& mu = entry.first;
        std::vector<ExpVec> wsb = weight_space_basis(mod, mu);
        TruncatedSubspace kmu = submodule_weightspace(mod, mu, oracle);
        int min_deg = exp_degree(wsb.front());
        for (int l = min_deg; l <= probe; ++l) {
            TruncatedSubspace low(wsb.size());
            std::size_t n_low = 0;
            for (std::size_t i = 0; i < wsb.size(); ++i) {
                if (exp_degree(wsb[i]) > l) continue;
                ++n_low;
                RatVector unit(wsb.size());
                unit[i] = 1;
                low.insert(std::move(unit));
            }
            dims[static_cast<std::size_t>(l)] += n_low - intersect(kmu, low).dim();
        }
    }
    return dims;
}

// Weyl dimension of the simple finite-dimensional module of highest weight
// lambda (dominant integral): product over positive roots (i, j) of
// (lambda + delta, alpha) / (delta, alpha).
inline Integer weyl_dimension(const Weight& lambda) {
    if (!lambda.is_dominant_integral())
        throw std::invalid_argument("weyl_dimension: weight must be dominant integral");
    const int n = lambda.n();
    Rational prod = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rational num = 0;
            for (int t = i; t < j; ++t) num += lambda.on_cartan(t) + 1;
            prod *= num / (j - i);
        }
    if (!is_integer(prod)) throw std::logic_error("weyl_dimension: non-integral product");
    return prod.get_num();
}

struct ClassifyResult {
    enum class Verdict { Finite, Infinite, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    Integer finite_dim = 0;                // set when verdict == Finite
    bool all_negative = false;             // every flag weight strictly negative
    std::vector<std::size_t> jet_dims;     // levels 0..probe
};

// Decide finiteness of the simple quotient from the jet profile.  Dominant
// characters are declared Finite only when the profile has flattened at the
// Weyl dimension; non-dominant ones Infinite only when the profile is
// strictly increasing across the whole probe window.  Anything else is
// Inconclusive rather than guessed.
inline ClassifyResult classify(const Algebra& alg, const ParabolicCharacter& pc, int probe,
                               KernelOracle oracle = KernelOracle::Raising) {
    if (probe < 1) throw std::invalid_argument("classify: probe level must be >= 1");
    GeneralizedVerma mod = GeneralizedVerma::from_character(alg, pc);
    ClassifyResult res;
    res.jet_dims = jet_dimension_profile(mod, probe, oracle);
    res.all_negative = *std::max_element(pc.ell().begin(), pc.ell().end()) < 0;
    if (pc.lambda().is_dominant_integral()) {
        Integer wd = weyl_dimension(pc.lambda());
        const std::size_t last = res.jet_dims.back();
        const std::size_t prev = res.jet_dims[res.jet_dims.size() - 2];
        if (wd == static_cast<long>(last) && last == prev) {
            res.verdict = ClassifyResult::Verdict::Finite;
            res.finite_dim = wd;
        }
        return res;
    }
    bool strict = true;
    for (std::size_t l = 1; l < res.jet_dims.size(); ++l)
        if (res.jet_dims[l] <= res.jet_dims[l - 1]) strict = false;
    if (strict) res.verdict = ClassifyResult::Verdict::Infinite;
    return res;
}

} // namespace verma
