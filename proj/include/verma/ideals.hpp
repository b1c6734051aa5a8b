#pragma once

// Truncated left ideals attached to a scalar character of a parabolic.
//
// Everything here lives in the coordinates of the degree <= l monomial basis
// of U(sl_n).  Three ideals are computed:
//
//   char_l : span of u (x - rho(x)) for deg(u) <= l-1 and x running over a
//            basis of p.  This is the degree <= l slice of the kernel of
//            U(g) -> M(rho), u -> u.w, so its dimension must come out as
//            dim U_l - dim M_l; that identity is checked at runtime.
//
//   ann_l  : kernel of U_l -> M_l / K_l acting on the cyclic vector, where
//            K_l is the maximal-submodule slice from quotient.hpp.  This is
//            the truncated annihilator of the simple quotient's generator.
//
//   For the classical (full flag, dominant) case, ann_l is also generated
//   in closed form: the highest-weight ideal plus U f_i^(lambda_i + 1); the
//   two computations must agree level by level.
//
// rho extends to an algebra map rho_U on U(p) by multiplicativity; its
// kernel meets U_l(p) in codimension one, and the span of the u (x - rho(x))
// inside U(p) is expected to exhaust it.  rho_u_kernel_check reports both
// subspaces.

#include "verma/exactla.hpp"
#include "verma/pbw.hpp"
#include "verma/quotient.hpp"
#include "verma/rootdata.hpp"
#include "verma/verma_module.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace verma {

struct MonomialBasis {
    std::vector<PBWMonomial> monos;
    std::map<PBWMonomial, std::size_t, MonomialLess> index;

    std::size_t dim() const { return monos.size(); }
};

inline MonomialBasis monomial_basis(const Algebra& alg, int level, const std::vector<int>& ids) {
    MonomialBasis b;
    b.monos = enumerate_pbw(alg.num_gens(), level, ids);
    for (std::size_t i = 0; i < b.monos.size(); ++i) b.index[b.monos[i]] = i;
    return b;
}

inline std::vector<int> all_gen_ids(const Algebra& alg) {
    std::vector<int> ids(static_cast<std::size_t>(alg.num_gens()));
    for (int i = 0; i < alg.num_gens(); ++i) ids[static_cast<std::size_t>(i)] = i;
    return ids;
}

inline std::vector<int> parabolic_gen_ids(const Algebra& alg, const ParabolicCharacter& pc) {
    std::vector<int> ids;
    for (int i = 0; i < alg.num_gens(); ++i)
        if (pc.gen_in_parabolic(alg.root_datum().gen(i))) ids.push_back(i);
    return ids;
}

inline RatVector element_coords(const UEAElement& e, const MonomialBasis& basis) {
    RatVector out(basis.dim());
    for (const auto& [m, c] : e.terms()) {
        auto it = basis.index.find(m);
        if (it == basis.index.end())
            throw std::invalid_argument("element_coords: monomial outside the basis");
        out[it->second] = c;
    }
    return out;
}

struct IdealLevel {
    int level = 0;
    TruncatedSubspace subspace; // in degree <= level monomial coordinates
};

// Degree <= l slice of the character ideal char(rho).
inline IdealLevel char_ideal_trunc(const Algebra& alg, const ParabolicCharacter& pc, int level) {
    if (alg.root_datum().n() != pc.n()) throw std::invalid_argument("char_ideal_trunc: rank mismatch");
    MonomialBasis full = monomial_basis(alg, level, all_gen_ids(alg));
    IdealLevel out;
    out.level = level;
    out.subspace = TruncatedSubspace(full.dim());
    if (level >= 1) {
        std::vector<int> p_ids = parabolic_gen_ids(alg, pc);
        std::vector<PBWMonomial> lower = enumerate_pbw(alg.num_gens(), level - 1, all_gen_ids(alg));
        for (const PBWMonomial& u : lower) {
            UEAElement ue = alg.monomial_element(u);
            for (int x : p_ids) {
                UEAElement e = alg.multiply(ue, alg.generator_element(x));
                Rational rho = pc.value_on_gen(alg.root_datum().gen(x));
                if (!is_zero(rho)) e -= rho * ue;
                out.subspace.insert(element_coords(e, full));
            }
        }
    }
    // The span must be the full kernel of U_l -> M_l: codimension the number
    // of degree <= l monomials in the complement generators.
    std::size_t m = complement_roots(alg.root_datum(), pc).size();
    std::size_t expected = full.dim() - binomial_sz(m + static_cast<unsigned long>(level), static_cast<unsigned long>(level));
    if (out.subspace.dim() != expected)
        throw std::logic_error("char_ideal_trunc: span dimension differs from dim U_l - dim M_l");
    return out;
}

// Degree <= l slice of the highest-weight-vector annihilator for a classical
// Verma module of highest weight lambda: spans of u E_alpha and
// u (H_t - lambda(H_t)).
inline IdealLevel highest_weight_ideal_trunc(const Algebra& alg, const Weight& lambda, int level) {
    const RootDatum& rd = alg.root_datum();
    if (lambda.n() != rd.n()) throw std::invalid_argument("highest_weight_ideal_trunc: rank mismatch");
    MonomialBasis full = monomial_basis(alg, level, all_gen_ids(alg));
    IdealLevel out;
    out.level = level;
    out.subspace = TruncatedSubspace(full.dim());
    if (level >= 1) {
        std::vector<PBWMonomial> lower = enumerate_pbw(alg.num_gens(), level - 1, all_gen_ids(alg));
        for (const PBWMonomial& u : lower) {
            UEAElement ue = alg.monomial_element(u);
            for (const Root& r : rd.positive_roots())
                out.subspace.insert(element_coords(alg.multiply(ue, alg.generator_element(rd.positive_gen(r))), full));
            for (int t = 1; t < rd.n(); ++t) {
                UEAElement e = alg.multiply(ue, alg.generator_element(rd.cartan_gen(t)));
                const Rational& lt = lambda.on_cartan(t);
                if (!is_zero(lt)) e -= lt * ue;
                out.subspace.insert(element_coords(e, full));
            }
        }
    }
    return out;
}

// Degree <= l slice of the annihilator of the simple quotient's generator.
// Needs the maximal-submodule slice at the same level.
inline IdealLevel ann_ideal_trunc(const Algebra& alg, const ParabolicCharacter& pc, int level,
                                  const SubmoduleLevel& sub) {
    if (alg.root_datum().n() != pc.n()) throw std::invalid_argument("ann_ideal_trunc: rank mismatch");
    if (sub.level != level)
        throw dependency_error("ann_ideal_trunc: submodule slice computed at level " +
                               std::to_string(sub.level) + ", need " + std::to_string(level));
    GeneralizedVerma mod = GeneralizedVerma::from_character(alg, pc);
    TruncatedModule tm(mod, level);
    if (sub.subspace.ambient_dim() != tm.dimension())
        throw dependency_error("ann_ideal_trunc: submodule slice has mismatched ambient dimension");
    MonomialBasis full = monomial_basis(alg, level, all_gen_ids(alg));
    std::vector<RatVector> rows;
    rows.reserve(full.dim());
    ModuleVector w = mod.cyclic_vector();
    for (const PBWMonomial& u : full.monos)
        rows.push_back(sub.subspace.reduce(tm.coordinates(mod.act(alg.monomial_element(u), w))));
    IdealLevel out;
    out.level = level;
    out.subspace = kernel(rows);
    return out;
}

// Degree-bounded span of the classical annihilator generators for a dominant
// classical character: the highest-weight ideal plus u f_t^(lambda_t + 1) for
// cofactors u of degree <= level - lambda_t - 1.  In a filtered algebra this
// bounded-cofactor span can be a proper subspace of the true degree <= level
// slice of the ideal it generates: higher-degree cofactors may produce
// low-filtration elements through cancellation.  Smallest observed instance:
// sl_3, lambda = (1, 1), level 3, where this span has dimension 153 while
// ann_ideal_trunc gives 157.
inline IdealLevel ann_via_generators(const Algebra& alg, const Weight& lambda, int level) {
    const RootDatum& rd = alg.root_datum();
    if (lambda.n() != rd.n()) throw std::invalid_argument("ann_via_generators: rank mismatch");
    if (!lambda.is_dominant_integral())
        throw std::invalid_argument("ann_via_generators: weight must be dominant integral");
    IdealLevel out = highest_weight_ideal_trunc(alg, lambda, level);
    MonomialBasis full = monomial_basis(alg, level, all_gen_ids(alg));
    for (int t = 1; t < rd.n(); ++t) {
        long power = to_long(lambda.on_cartan(t)) + 1;
        if (power > level) continue;
        PBWMonomial f = PBWMonomial::one(alg.num_gens());
        f.exps[static_cast<std::size_t>(rd.negative_gen(Root{t, t + 1}))] = static_cast<std::int32_t>(power);
        UEAElement fe = alg.monomial_element(f);
        for (const PBWMonomial& u : enumerate_pbw(alg.num_gens(), level - static_cast<int>(power), all_gen_ids(alg)))
            out.subspace.insert(element_coords(alg.multiply(alg.monomial_element(u), fe), full));
    }
    return out;
}

struct EqualityRow {
    int level = 0;
    std::size_t dim_char = 0;
    std::size_t dim_ann = 0;
    bool equal = false;
};

// char_l vs ann_l for l = 0..l_max, as canonical subspaces.
inline std::vector<EqualityRow> equality_report(const Algebra& alg, const ParabolicCharacter& pc, int l_max,
                                                KernelOracle oracle = KernelOracle::Raising) {
    std::vector<EqualityRow> rows;
    GeneralizedVerma mod = GeneralizedVerma::from_character(alg, pc);
    for (int l = 0; l <= l_max; ++l) {
        IdealLevel ch = char_ideal_trunc(alg, pc, l);
        SubmoduleLevel sub = maximal_submodule_trunc(mod, l, oracle);
        IdealLevel an = ann_ideal_trunc(alg, pc, l, sub);
        rows.push_back(EqualityRow{l, ch.subspace.dim(), an.subspace.dim(), ch.subspace == an.subspace});
    }
    return rows;
}

struct RhoUKernelReport {
    int level = 0;
    std::size_t dim_up = 0;     // dim of the degree <= l slice of U(p)
    std::size_t dim_span = 0;   // span of the u (x - rho(x))
    std::size_t dim_kernel = 0; // kernel of the multiplicative extension rho_U
    bool span_equals_kernel = false;
    bool codim_one = false;
};

// Inside U(p): the span of u (x - rho(x)) against the kernel of rho_U.
inline RhoUKernelReport rho_u_kernel_check(const Algebra& alg, const ParabolicCharacter& pc, int level) {
    if (alg.root_datum().n() != pc.n()) throw std::invalid_argument("rho_u_kernel_check: rank mismatch");
    std::vector<int> p_ids = parabolic_gen_ids(alg, pc);
    MonomialBasis pbasis = monomial_basis(alg, level, p_ids);
    RhoUKernelReport rep;
    rep.level = level;
    rep.dim_up = pbasis.dim();

    TruncatedSubspace span(pbasis.dim());
    if (level >= 1) {
        for (const PBWMonomial& u : enumerate_pbw(alg.num_gens(), level - 1, p_ids)) {
            UEAElement ue = alg.monomial_element(u);
            for (int x : p_ids) {
                UEAElement e = alg.multiply(ue, alg.generator_element(x));
                Rational rho = pc.value_on_gen(alg.root_datum().gen(x));
                if (!is_zero(rho)) e -= rho * ue;
                // Products of parabolic letters stay in U(p).
                span.insert(element_coords(e, pbasis));
            }
        }
    }
    rep.dim_span = span.dim();

    // rho_U on a monomial is the product of the generator values.
    std::vector<RatVector> functional;
    functional.reserve(pbasis.dim());
    for (const PBWMonomial& m : pbasis.monos) {
        Rational v = 1;
        for (int id : p_ids) {
            std::int32_t e = m.exps[static_cast<std::size_t>(id)];
            for (std::int32_t k = 0; k < e; ++k) v *= pc.value_on_gen(alg.root_datum().gen(id));
        }
        functional.push_back(RatVector{v});
    }
    TruncatedSubspace ker = kernel(functional);
    rep.dim_kernel = ker.dim();
    rep.span_equals_kernel = (span == ker);
    rep.codim_one = (rep.dim_span + 1 == rep.dim_up);
    return rep;
}

} // namespace verma
