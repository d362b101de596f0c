#pragma once

#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/symchar.hpp"

#include <vector>

namespace repstab {

/****************************************************************************

  Induction products P ∘ Q = Ind_{S_a x S_b}^{S_{a+b}} P ⊗ Q.

  Two independent routes to the same multiplicities:
    - lr_coefficients: Littlewood-Richardson tableaux (fast path);
    - lr_coefficients_via_characters: decompose the induced character.
  The Pieri special case M(λ)_s = P_λ ∘ P_(s-|λ|) has its own horizontal
  strip enumerator.

 ****************************************************************************/

namespace detail {

// Σ over sub-multisets of the cycles with total length a:
//   Π_j binom(m_j, k_j) · f(cycles taken) · g(cycles left).
template <class F>
void for_each_split(const CycleCounts& ct, int a, F&& visit) {
    const int top = ct.max_cycle();
    std::vector<int> taken(static_cast<std::size_t>(top), 0);
    Integer weight = 1;

    auto rec = [&](auto&& self, int j, int remaining) -> void {
        if (j == 0) {
            if (remaining != 0) return;
            std::vector<int> left(static_cast<std::size_t>(top));
            for (int k = 0; k < top; ++k) left[k] = ct.count(k + 1) - taken[k];
            visit(weight, CycleCounts(taken), CycleCounts(std::move(left)));
            return;
        }
        const int m = ct.count(j);
        for (int k = 0; k <= m && k * j <= remaining; ++k) {
            taken[j - 1] = k;
            const Integer saved = weight;
            weight *= binomial(m, k);
            self(self, j - 1, remaining - k * j);
            weight = saved;
        }
        taken[j - 1] = 0;
    };
    rec(rec, top, a);
}

}  // namespace detail

/// Character of Ind_{S_a x S_b}^{S_{a+b}} (f ⊗ g) for class functions f on S_a and g on S_b.
inline ClassFunction induce_product(const ClassFunction& f, const ClassFunction& g) {
    const int a = f.rank();
    return ClassFunction::from(a + g.rank(), [&](const Partition& type) {
        Rational total = 0;
        detail::for_each_split(CycleCounts::from_cycle_type(type), a,
                               [&](const Integer& weight, const CycleCounts& left, const CycleCounts& right) {
                                   total += Rational(weight) * f.at(left.cycle_type()) * g.at(right.cycle_type());
                               });
        return total;
    });
}

inline ClassFunction induced_character(const Partition& lambda, const Partition& mu) {
    return induce_product(character(lambda), character(mu));
}

inline IrrDecomp lr_coefficients_via_characters(const Partition& lambda, const Partition& mu) {
    return decompose(induced_character(lambda, mu));
}

namespace detail {

// Counts LR tableaux of shape outer/inner with content `content`, filling
// cells in reverse reading order (rows top-down, each row right to left).
inline int count_lr_tableaux(const Partition& outer, const Partition& inner, const Partition& content) {
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < outer.length(); ++r)
        for (int c = outer[r] - 1; c >= inner[r]; --c) cells.push_back({r, c});

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(outer.length()));
    for (int r = 0; r < outer.length(); ++r) fill[r].assign(static_cast<std::size_t>(outer[r]), 0);
    std::vector<int> used(static_cast<std::size_t>(content.length()) + 1, 0);

    int found = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++found;
            return;
        }
        const auto [r, c] = cells[idx];
        int hi = content.length();
        if (c + 1 < outer[r]) hi = std::min(hi, fill[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= inner[r - 1]) lo = fill[r - 1][c] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= content[v - 1]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;
            fill[r][c] = v;
            ++used[v];
            self(self, idx + 1);
            --used[v];
        }
        fill[r][c] = 0;
    };
    rec(rec, 0);
    return found;
}

inline bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int k = 0; k < inner.length(); ++k)
        if (inner[k] > outer[k]) return false;
    return true;
}

}  // namespace detail

/// Decomposition of P_λ ∘ P_μ by Littlewood-Richardson tableau enumeration.
inline IrrDecomp lr_coefficients(const Partition& lambda, const Partition& mu) {
    const int total = lambda.size() + mu.size();
    IrrDecomp out(total);
    for (const auto& nu : enumerate(total)) {
        if (!detail::contains(nu, lambda) || !detail::contains(nu, mu)) continue;
        const int c = detail::count_lr_tableaux(nu, lambda, mu);
        if (c) out.add(nu, c);
    }
    return out;
}

/// M(λ)_s = P_λ ∘ P_(s-|λ|): one P_μ per μ ⊇ λ with μ/λ a horizontal strip.
/// Below |λ| the module is zero and the decomposition is empty.
inline IrrDecomp m_lambda_at(const Partition& lambda, int s) {
    IrrDecomp out(s);
    const int extra = s - lambda.size();
    if (extra < 0) return out;

    const int len = lambda.length();
    std::vector<int> mu(static_cast<std::size_t>(len) + 1, 0);
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k == len) {
            // Last row may take up to λ_len boxes (or everything if λ is empty).
            const int cap = len == 0 ? remaining : lambda[len - 1];
            if (remaining > cap) return;
            mu[len] = remaining;
            out.add(Partition::from_multiset(mu), 1);
            return;
        }
        const int cap = k == 0 ? remaining : std::min(remaining, lambda[k - 1] - lambda[k]);
        for (int add = 0; add <= cap; ++add) {
            mu[k] = lambda[k] + add;
            self(self, k + 1, remaining - add);
        }
    };
    rec(rec, 0, extra);
    return out;
}

/// dim 𝕊_λ(k^n) = Π_cells (n + content) / hook; zero when λ has more than n rows.
inline Integer schur_dim(const Partition& lambda, int n) {
    if (n < 0) throw DomainError(ErrorKind::InvalidArgument, "schur_dim needs n >= 0");
    if (lambda.length() > n) return 0;
    const HookTable hooks(lambda);
    Integer num = 1, den = 1;
    for (int r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            num *= n + c - r;
            den *= hooks.at(r + 1, c + 1);
        }
    }
    return num / den;
}

/// Character of (k^n)^{∧q} ∘ P_(s-q) on S_s, where S_q acts on (k^n)^{⊗q}
/// by permuting factors times the sign.
inline ClassFunction wedge_power_character(int n, int q, int s) {
    if (n < 1 || q < 0 || q > s)
        throw DomainError(ErrorKind::InvalidArgument, "wedge_power_character needs n >= 1 and 0 <= q <= s");
    const ClassFunction twisted = ClassFunction::from(q, [&](const Partition& type) {
        const CycleCounts ct = CycleCounts::from_cycle_type(type);
        return Rational(sign(ct) * power(Integer(n), ct.num_cycles()));
    });
    return induce_product(twisted, trivial_character(s - q));
}

}  // namespace repstab
