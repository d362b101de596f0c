#pragma once

#include "repstab/charpoly.hpp"
#include "repstab/errors.hpp"
#include "repstab/fistab.hpp"
#include "repstab/induct.hpp"
#include "repstab/partition.hpp"
#include "repstab/symchar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace repstab::gamma {

/****************************************************************************

  Cohomology of the groups Γ_{n,s} (self homotopy equivalences of a rank n
  graph fixing s marked points) as FI-modules in s.

  Known decompositions:
    - n = 1: H^i = P(1^i) for i even, 0 for i odd;
    - n = 2, i = 4: H^4 = P(2) ⊕ P(2,1) ⊕ P(2,2) for s >= 6;
    - i = 0: the trivial module for every n.
  For n >= 2 everything else is reported as bounds from the Leray-Serre
  spectral sequence of 1 -> F_n^s -> Γ_{n,s} -> Out(F_n) -> 1, whose E_2
  page is Σ_{|λ|=q, λ_1<=n} C_{p,λ} ⊗ M(λ) with C_{p,λ} left symbolic.

 ****************************************************************************/

struct GammaQuery {
    int n = 1;
    int i = 0;

    GammaQuery(int rank, int degree) : n(rank), i(degree) {
        if (n < 1) throw DomainError(ErrorKind::InvalidArgument, "graph rank n must be >= 1");
        if (i < 0) throw DomainError(ErrorKind::InvalidArgument, "cohomological degree i must be >= 0");
    }
};

/// ⊕ mult·P(λ), valid for s >= valid_from.
struct StableDecomp {
    std::vector<std::pair<Partition, Integer>> terms;
    int valid_from = 0;

    IrrDecomp at(int s) const {
        if (s < valid_from)
            throw DomainError(ErrorKind::BelowStableRange,
                              "s = " + std::to_string(s) + " is below the stable range s >= " + std::to_string(valid_from));
        IrrDecomp out(s);
        for (const auto& [lambda, mult] : terms) out.add(pad(lambda, s).full(), mult);
        return out;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [lambda, mult] : terms) {
            if (!out.empty()) out += " + ";
            if (mult != 1) out += mult.str() + "*";
            out += "P" + lambda.str();
        }
        return out;
    }
};

inline StableDecomp rank1_decomp(int i) {
    if (i < 0) throw DomainError(ErrorKind::InvalidArgument, "degree must be >= 0");
    StableDecomp out;
    out.valid_from = i + 1;
    if (i % 2 == 0) out.terms.emplace_back(Partition(std::vector<int>(static_cast<std::size_t>(i), 1)), 1);
    return out;
}

inline StableDecomp stored_decomposition(const GammaQuery& query) {
    if (query.n == 1) return rank1_decomp(query.i);
    if (query.i == 0) return StableDecomp{{{Partition{}, 1}}, query.n};
    if (query.n == 2 && query.i == 4) return StableDecomp{{{Partition{2}, 1}, {Partition{2, 1}, 1}, {Partition{2, 2}, 1}}, 6};
    throw DomainError(ErrorKind::NoStoredDecomposition, "no known decomposition of H^" + std::to_string(query.i) +
                                                            " for rank n = " + std::to_string(query.n));
}

/// Terms of E_2^{pq}: one C_{p,λ} ⊗ M(λ) per λ ⊢ q with λ_1 <= n.
/// `p` only fills in the label of the constant; it defaults to the letter p.
inline FIExpr e2_page(int n, int q, std::optional<int> p = std::nullopt) {
    if (n < 2) throw DomainError(ErrorKind::RankTooSmall, "the fibration argument needs n >= 2");
    if (q < 0) throw DomainError(ErrorKind::InvalidArgument, "q must be >= 0");
    const std::string p_label = p ? std::to_string(*p) : "p";
    FIExpr out(FIExpr::Kind::FreeSum);
    for (auto& lambda : enumerate(q, n)) {
        auto label = "C_{" + p_label + "," + lambda.str() + "}";
        out.add(Coefficient::symbol(std::move(label)), std::move(lambda));
    }
    return out;
}

struct SchurWeylReport {
    int n = 0, q = 0, s = 0;
    IrrDecomp character_side;  // decompose((k^n)^{∧q} ∘ P_(s-q))
    IrrDecomp schur_side;      // Σ_{λ ⊢ q, ℓ(λ) <= n} dim 𝕊_λ(k^n) · M(λ')_s
    Integer expected_dimension;  // binom(s, q) n^q
    bool matches = false;
};

inline SchurWeylReport schur_weyl_report(int n, int q, int s) {
    if (n < 1 || q < 0 || q > s) throw DomainError(ErrorKind::InvalidArgument, "schur-weyl needs n >= 1 and 0 <= q <= s");
    SchurWeylReport r;
    r.n = n;
    r.q = q;
    r.s = s;
    r.character_side = decompose(wedge_power_character(n, q, s));
    r.schur_side = IrrDecomp(s);
    for (const auto& lambda : enumerate(q, std::nullopt, n))
        r.schur_side += m_lambda_at(conjugate(lambda), s).scaled(schur_dim(lambda, n));
    r.expected_dimension = binomial(s, q) * power(Integer(n), q);
    r.matches = r.character_side == r.schur_side && r.character_side.dimension() == r.expected_dimension &&
                r.schur_side.dimension() == r.expected_dimension;
    return r;
}

struct StabilityReport {
    int weight_bound = 0;
    int stability_degree = 0;
    int stable_range = 0;
    std::vector<SpectralGrid> pages;  // E_2 .. E_{i+2}; empty for n = 1
    std::string provenance;
};

/// E_2 seed for n >= 2: every entry carries the uniform bound (0, n) and weight q.
inline SpectralGrid e2_grid(int n, int p_max, int q_max) {
    if (n < 2) throw DomainError(ErrorKind::RankTooSmall, "the fibration argument needs n >= 2");
    return SpectralGrid::from_rule(2, p_max, q_max, [n](int, int q) { return GridEntry{{0, n}, q, ""}; });
}

inline StabilityReport stability_bounds(const GammaQuery& query) {
    StabilityReport r;
    if (query.n == 1) {
        // H^i = P(1^i) or 0: weight <= i, stability degree <= λ_1 <= 1.
        r.weight_bound = query.i;
        r.stability_degree = 1;
        r.stable_range = r.weight_bound + r.stability_degree;
        r.provenance = "rank 1: H^" + std::to_string(query.i) + " = " + rank1_decomp(query.i).str() +
                       "; P(1^i) has weight <= i and stability degree <= 1";
        return r;
    }

    SpectralGrid grid = e2_grid(query.n, query.i, query.i);
    r.pages.push_back(grid);
    while (grid.page() < convergence_page(query.i)) {
        grid = grid.turn_page();
        r.pages.push_back(grid);
    }
    const AssembledBound bound = converge_and_assemble(grid, query.i);
    if (!bound.type.degree().known()) throw InvariantViolation("stability degree of the abutment is unknown");
    r.weight_bound = bound.weight_bound;
    r.stability_degree = bound.type.degree().value();
    r.stable_range = r.weight_bound + r.stability_degree;
    r.provenance = "spectral sequence: E_2 types (0," + std::to_string(query.n) + "), converged at page " +
                   std::to_string(grid.page()) + ", abutment type " + bound.type.str();
    return r;
}

inline CharPolynomial stable_char_poly(const GammaQuery& query) {
    const StableDecomp d = stored_decomposition(query);
    return sum_for_decomp(d.terms);
}

/// Dimension of H^i(Γ_{n,s}) in the stable range, checked against the hook length formula.
inline Integer stable_dimension(const GammaQuery& query, int s) {
    const StableDecomp d = stored_decomposition(query);
    const int range = query.n + query.i;
    if (s < range)
        throw DomainError(ErrorKind::BelowStableRange,
                          "s = " + std::to_string(s) + " is below the stable range s >= " + std::to_string(range));
    const Rational by_poly = dimension_polynomial(stable_char_poly(query))(Rational(s));
    const Integer by_hooks = d.at(s).dimension();
    if (by_poly != Rational(by_hooks))
        throw InvariantViolation("dimension polynomial gives " + to_string(by_poly) + " but hook lengths give " +
                                 by_hooks.str());
    return by_hooks;
}

}  // namespace repstab::gamma
