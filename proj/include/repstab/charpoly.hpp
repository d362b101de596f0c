#pragma once

#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/symchar.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace repstab {

/****************************************************************************

  Character polynomials.

  A character polynomial is a polynomial in the class functions X_j (number
  of j-cycles) graded by deg X_j = j. The canonical form is the expanded
  monomial basis; the falling-factorial basis Π_j (X_j)_{k_j}, with
  (x)_k = x(x-1)...(x-k+1), is a view used for display.

 ****************************************************************************/

/// Exponent vector: e[j-1] is the exponent of X_j. Kept without trailing zeros.
using Exponents = std::vector<int>;

namespace detail {

inline Exponents trimmed(Exponents e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

inline int graded_weight(const Exponents& e) {
    int w = 0;
    for (std::size_t j = 0; j < e.size(); ++j) w += static_cast<int>(j + 1) * e[j];
    return w;
}

/// Coefficients (low to high) of (x)_k in powers of x: signed Stirling numbers of the first kind.
inline std::vector<Integer> falling_factorial_coeffs(int k) {
    std::vector<Integer> c{1};
    for (int i = 0; i < k; ++i) {
        std::vector<Integer> next(c.size() + 1, 0);
        for (std::size_t e = 0; e < c.size(); ++e) {
            next[e + 1] += c[e];
            next[e] -= c[e] * i;
        }
        c = std::move(next);
    }
    return c;
}

/// x^e = Σ_k S(e,k) (x)_k; returns S(e, 0..e), Stirling numbers of the second kind.
inline std::vector<Integer> power_in_falling_factorials(int e) {
    std::vector<Integer> row{1};  // S(0,0)
    for (int n = 1; n <= e; ++n) {
        std::vector<Integer> next(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k) {
            const Integer prev_same = k < static_cast<int>(row.size()) ? row[k] : Integer(0);
            next[k] = Integer(k) * prev_same + row[k - 1];
        }
        row = std::move(next);
    }
    return row;
}

// Display order: constants last; otherwise by highest variable used, then by
// exponents read from the highest variable down, larger first.
struct DisplayOrder {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.empty() != b.empty()) return b.empty();
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t j = a.size(); j-- > 0;)
            if (a[j] != b[j]) return a[j] > b[j];
        return false;
    }
};

template <class BodyFn>
std::string render_terms(const std::map<Exponents, Rational>& terms, BodyFn body) {
    std::vector<std::pair<Exponents, Rational>> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return DisplayOrder{}(x.first, y.first); });
    if (sorted.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : sorted) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (out.empty()) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        const std::string b = body(exps);
        if (b.empty()) out += to_string(mag);
        else if (mag == 1) out += b;
        else out += to_string(mag) + "*" + b;
    }
    return out;
}

}  // namespace detail

class CharPolynomial {
public:
    using Terms = std::map<Exponents, Rational>;

    CharPolynomial() = default;
    explicit CharPolynomial(const Rational& c) { add_term({}, c); }

    static CharPolynomial variable(int j) {
        Exponents e(static_cast<std::size_t>(j), 0);
        e[j - 1] = 1;
        CharPolynomial out;
        out.add_term(std::move(e), 1);
        return out;
    }

    /// (X_j)_k
    static CharPolynomial falling_factorial(int j, int k) {
        CharPolynomial out;
        const auto coeffs = detail::falling_factorial_coeffs(k);
        for (std::size_t e = 0; e < coeffs.size(); ++e) {
            Exponents exps(static_cast<std::size_t>(j), 0);
            exps[j - 1] = static_cast<int>(e);
            out.add_term(std::move(exps), Rational(coeffs[e]));
        }
        return out;
    }

    /// binom(X_j, k) = (X_j)_k / k!
    static CharPolynomial binomial(int j, int k) {
        CharPolynomial out = falling_factorial(j, k);
        out *= Rational(1, factorial(k));
        return out;
    }

    void add_term(Exponents exps, const Rational& coeff) {
        if (coeff == 0) return;
        for (int e : exps)
            if (e < 0) throw DomainError(ErrorKind::InvalidArgument, "negative exponent");
        auto [it, inserted] = terms_.try_emplace(detail::trimmed(std::move(exps)), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Exponents& exps) const {
        auto it = terms_.find(detail::trimmed(exps));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Graded degree with deg X_j = j; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [exps, _] : terms_) d = std::max(d, detail::graded_weight(exps));
        return d;
    }

    /// Highest j with X_j present.
    int num_variables() const {
        std::size_t n = 0;
        for (const auto& [exps, _] : terms_) n = std::max(n, exps.size());
        return static_cast<int>(n);
    }

    CharPolynomial& operator+=(const CharPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    CharPolynomial& operator-=(const CharPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    CharPolynomial& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        for (auto& [_, v] : terms_) v *= c;
        return *this;
    }
    CharPolynomial& operator*=(const CharPolynomial& o) { return *this = *this * o; }

    friend CharPolynomial operator+(CharPolynomial a, const CharPolynomial& b) { return a += b; }
    friend CharPolynomial operator-(CharPolynomial a, const CharPolynomial& b) { return a -= b; }
    friend CharPolynomial operator*(const Rational& c, CharPolynomial a) { return a *= c; }
    friend CharPolynomial operator*(const CharPolynomial& a, const CharPolynomial& b) {
        CharPolynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t j = 0; j < ea.size(); ++j) e[j] += ea[j];
                for (std::size_t j = 0; j < eb.size(); ++j) e[j] += eb[j];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    bool operator==(const CharPolynomial&) const = default;

    /// Expanded form, e.g. "1/2*X1^2 - 3/2*X1 - X2 + 1".
    std::string str() const {
        return detail::render_terms(terms_, [](const Exponents& e) {
            std::string body;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (!e[j]) continue;
                if (!body.empty()) body += '*';
                body += "X" + std::to_string(j + 1);
                if (e[j] > 1) body += "^" + std::to_string(e[j]);
            }
            return body;
        });
    }

private:
    Terms terms_;
};

/// Substitutes X_j = m_j. Variables past the class's support evaluate to 0.
inline Rational evaluate(const CharPolynomial& f, const CycleCounts& ct) {
    Rational total = 0;
    for (const auto& [exps, coeff] : f.terms()) {
        Rational term = coeff;
        for (std::size_t j = 0; j < exps.size() && term != 0; ++j)
            if (exps[j]) term *= power(Rational(ct.count(static_cast<int>(j) + 1)), exps[j]);
        total += term;
    }
    return total;
}

/// Coefficients in the basis Π_j (X_j)_{k_j}; key k[j-1] = k_j.
using FallingFactorialForm = std::map<Exponents, Rational>;

inline CharPolynomial from_falling_factorials(const FallingFactorialForm& form) {
    CharPolynomial out;
    for (const auto& [ks, coeff] : form) {
        CharPolynomial term(coeff);
        for (std::size_t j = 0; j < ks.size(); ++j)
            if (ks[j]) term = term * CharPolynomial::falling_factorial(static_cast<int>(j) + 1, ks[j]);
        out += term;
    }
    return out;
}

inline FallingFactorialForm to_falling_factorials(const CharPolynomial& f) {
    FallingFactorialForm out;
    for (const auto& [exps, coeff] : f.terms()) {
        // Tensor product over variables of x_j^e = Σ_k S(e,k) (x_j)_k.
        std::vector<std::pair<Exponents, Rational>> partial{{Exponents(exps.size(), 0), coeff}};
        for (std::size_t j = 0; j < exps.size(); ++j) {
            if (!exps[j]) continue;
            const auto stirling = detail::power_in_falling_factorials(exps[j]);
            std::vector<std::pair<Exponents, Rational>> next;
            for (const auto& [ks, c] : partial) {
                for (std::size_t k = 1; k < stirling.size(); ++k) {
                    if (stirling[k] == 0) continue;
                    Exponents nk = ks;
                    nk[j] = static_cast<int>(k);
                    next.emplace_back(std::move(nk), c * Rational(stirling[k]));
                }
            }
            partial = std::move(next);
        }
        for (auto& [ks, c] : partial) {
            auto key = detail::trimmed(std::move(ks));
            auto& slot = out[key];
            slot += c;
            if (slot == 0) out.erase(key);
        }
    }
    return out;
}

/// Display form, e.g. "1/2*(X1)_2 - X1 - X2 + 1"; (X_j)_1 prints as Xj.
inline std::string render_falling_factorials(const CharPolynomial& f) {
    return detail::render_terms(to_falling_factorials(f), [](const Exponents& ks) {
        std::string body;
        for (std::size_t j = 0; j < ks.size(); ++j) {
            if (!ks[j]) continue;
            if (!body.empty()) body += '*';
            const std::string var = "X" + std::to_string(j + 1);
            body += ks[j] == 1 ? var : "(" + var + ")_" + std::to_string(ks[j]);
        }
        return body;
    });
}

namespace detail {

/// Solves A x = b exactly by Gauss-Jordan elimination; throws on a singular system.
inline std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw InvariantViolation("InterpolationSingular: character polynomial system is singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = 1 / a[col][col];
        for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
        b[col] *= inv;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace detail

inline int default_anchor(const Partition& lambda) { return lambda.size() + lambda.first() + lambda.size(); }

/// f_λ: the character polynomial of P(λ)_s for all s >= |λ| + λ_1.
///
/// Exact interpolation in the basis Π_j binom(X_j, m_j) with Σ j·m_j <= d = |λ|.
/// For each tail (m_2..m_d) of weight t <= d, the constraints are the classes
/// of S_{N+a}, a = 0..d-t, with that tail and N+a-t fixed points. The system
/// is block triangular in the tail, with a Vandermonde block per tail, so it
/// has a unique solution for any anchor N >= |λ| + λ_1.
inline CharPolynomial build_f_lambda(const Partition& lambda, int anchor) {
    if (anchor < min_padding(lambda))
        throw DomainError(ErrorKind::PadTooSmall, "anchor rank below |λ| + λ_1");
    const int d = lambda.size();

    std::vector<CycleCounts> basis;
    for (int k = 0; k <= d; ++k)
        for (const auto& rho : enumerate(k)) basis.push_back(CycleCounts::from_cycle_type(rho));

    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> rhs;
    for (int t = 0; t <= d; ++t) {
        for (const auto& tail : enumerate(t)) {
            if (tail.length() && tail.parts().back() == 1) continue;  // tails have no fixed points
            for (int a = 0; a <= d - t; ++a) {
                const int rank = anchor + a;
                std::vector<int> counts = CycleCounts::from_cycle_type(tail).counts();
                if (counts.empty()) counts.push_back(0);
                counts[0] = rank - t;
                const CycleCounts cls(std::move(counts));

                std::vector<Rational> row;
                row.reserve(basis.size());
                for (const auto& m : basis) {
                    Integer v = 1;
                    for (int j = 1; j <= m.max_cycle() && v != 0; ++j) v *= repstab::binomial(cls.count(j), m.count(j));
                    row.emplace_back(v);
                }
                matrix.push_back(std::move(row));
                rhs.emplace_back(mn_character(pad(lambda, rank).full(), cls));
            }
        }
    }
    if (matrix.size() != basis.size())
        throw InvariantViolation("InterpolationSingular: constraint count does not match basis size");

    const auto coeffs = detail::solve_exact(std::move(matrix), std::move(rhs));
    CharPolynomial out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k] == 0) continue;
        CharPolynomial term(coeffs[k]);
        for (int j = 1; j <= basis[k].max_cycle(); ++j)
            if (basis[k].count(j)) term = term * CharPolynomial::binomial(j, basis[k].count(j));
        out += term;
    }
    return out;
}

inline CharPolynomial build_f_lambda(const Partition& lambda) { return build_f_lambda(lambda, default_anchor(lambda)); }

/// Σ mult · f_λ over a stable decomposition ⊕ mult·P(λ).
inline CharPolynomial sum_for_decomp(const std::vector<std::pair<Partition, Integer>>& decomp) {
    CharPolynomial out;
    for (const auto& [lambda, mult] : decomp) out += Rational(mult) * build_f_lambda(lambda);
    return out;
}

/// Polynomial in one variable, coefficients from the constant term up.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::string str(const std::string& var = "s") const {
        std::map<Exponents, Rational> terms;
        for (std::size_t e = 0; e < coeffs_.size(); ++e)
            if (coeffs_[e] != 0) terms[e ? Exponents{static_cast<int>(e)} : Exponents{}] = coeffs_[e];
        return detail::render_terms(terms, [&](const Exponents& e) {
            if (e.empty()) return std::string();
            return e[0] == 1 ? var : var + "^" + std::to_string(e[0]);
        });
    }

    bool operator==(const UnivariatePolynomial&) const = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// f(s, 0, ..., 0): the dimension of the module at rank s.
inline UnivariatePolynomial dimension_polynomial(const CharPolynomial& f) {
    std::vector<Rational> coeffs;
    for (const auto& [exps, coeff] : f.terms()) {
        if (exps.size() > 1) continue;
        const std::size_t e = exps.empty() ? 0 : static_cast<std::size_t>(exps[0]);
        if (coeffs.size() <= e) coeffs.resize(e + 1, Rational(0));
        coeffs[e] += coeff;
    }
    return UnivariatePolynomial(std::move(coeffs));
}

}  // namespace repstab
