#pragma once

#include "repstab/errors.hpp"
#include "repstab/induct.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"
#include "repstab/symchar.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace repstab {

/****************************************************************************

  FI-module stability bookkeeping.

  A StabilityType is an (injectivity, surjectivity) pair of degree bounds.
  Either slot may be Unknown ("*"), which absorbs under max. Weights are
  always upper bounds.

  The spectral grid stores stability types and weight bounds of the entries
  E_k^{pq} of a first-quadrant spectral sequence. Turning the page applies
  the homology rule to each entry with the endpoints of the differentials
  d_k of bidegree (k, 1-k).

 ****************************************************************************/

/// Non-negative degree bound, or Unknown.
class ExtInt {
public:
    constexpr ExtInt() = default;  // Unknown
    constexpr ExtInt(int v) : value_(v) {}

    static constexpr ExtInt unknown() { return ExtInt(); }

    constexpr bool known() const noexcept { return value_.has_value(); }
    constexpr int value() const {
        if (!value_) throw DomainError(ErrorKind::InvalidArgument, "degree is unknown");
        return *value_;
    }

    std::string str() const { return value_ ? std::to_string(*value_) : "*"; }

    constexpr bool operator==(const ExtInt&) const = default;

    friend constexpr ExtInt max(ExtInt a, ExtInt b) {
        if (!a.known() || !b.known()) return unknown();
        return ExtInt(std::max(*a.value_, *b.value_));
    }

private:
    std::optional<int> value_;
};

struct StabilityType {
    ExtInt injectivity = 0;
    ExtInt surjectivity = 0;

    /// max(I, S); Unknown if either slot is.
    ExtInt degree() const { return max(injectivity, surjectivity); }

    std::string str() const { return "(" + injectivity.str() + "," + surjectivity.str() + ")"; }

    bool operator==(const StabilityType&) const = default;

    friend StabilityType max(const StabilityType& a, const StabilityType& b) {
        return {max(a.injectivity, b.injectivity), max(a.surjectivity, b.surjectivity)};
    }
};

/// Homology of U -> V -> W with types (*,A), (B,C), (D,*): (max(A,B), max(C,D)).
inline StabilityType homology_type(const StabilityType& u, const StabilityType& v, const StabilityType& w) {
    return {max(u.surjectivity, v.injectivity), max(v.surjectivity, w.injectivity)};
}

/// Componentwise max over filtration quotients. Exact when every quotient has
/// the same type; an upper bound otherwise.
inline StabilityType filtration_type(const std::vector<StabilityType>& quotients) {
    if (quotients.empty()) throw DomainError(ErrorKind::EmptyFiltration, "filtration has no quotients");
    StabilityType out = quotients.front();
    for (const auto& t : quotients) out = max(out, t);
    return out;
}

/// A non-negative integer or a named constant (e.g. an unknown cohomology group).
class Coefficient {
public:
    Coefficient(int c) : value_(Integer(c)) {}
    Coefficient(Integer c) : value_(std::move(c)) {}
    static Coefficient symbol(std::string name) {
        Coefficient c(0);
        c.value_ = std::move(name);
        return c;
    }

    bool is_symbolic() const noexcept { return std::holds_alternative<std::string>(value_); }
    const Integer& number() const {
        if (is_symbolic()) throw DomainError(ErrorKind::SymbolicCoefficient, "coefficient " + str() + " is symbolic");
        return std::get<Integer>(value_);
    }
    std::string str() const { return is_symbolic() ? std::get<std::string>(value_) : std::get<Integer>(value_).str(); }

    bool operator==(const Coefficient&) const = default;

private:
    std::variant<Integer, std::string> value_;
};

/// Formal sum of free modules M(λ) or of padded irreducibles P(λ).
class FIExpr {
public:
    enum class Kind { FreeSum, IrredSum };

    struct Term {
        Coefficient coeff;
        Partition lambda;
        bool operator==(const Term&) const = default;
    };

    explicit FIExpr(Kind kind, std::vector<Term> terms = {}) : kind_(kind) {
        for (auto& t : terms) add(std::move(t.coeff), std::move(t.lambda));
    }

    void add(Coefficient coeff, Partition lambda) {
        if (!coeff.is_symbolic() && coeff.number() == 0) return;
        if (!coeff.is_symbolic() && coeff.number() < 0)
            throw DomainError(ErrorKind::InvalidArgument, "FI-module coefficients are non-negative");
        weight_ = std::max(weight_, lambda.size());
        stype_ = max(stype_, term_type(lambda));
        terms_.push_back({std::move(coeff), std::move(lambda)});
    }

    Kind kind() const noexcept { return kind_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    int weight_bound() const noexcept { return weight_; }
    const StabilityType& stype() const noexcept { return stype_; }

    bool has_symbols() const {
        return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_symbolic(); });
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& t : terms_) {
            if (!out.empty()) out += " + ";
            if (t.coeff.is_symbolic() || t.coeff.number() != 1) out += t.coeff.str() + " (x) ";
            out += (kind_ == Kind::FreeSum ? "M" : "P") + t.lambda.str();
        }
        return out;
    }

private:
    StabilityType term_type(const Partition& lambda) const {
        // M(λ): type (0, λ_1). P(λ): stability degree <= λ_1.
        if (kind_ == Kind::FreeSum) return {0, lambda.first()};
        return {lambda.first(), lambda.first()};
    }

    Kind kind_;
    std::vector<Term> terms_;
    int weight_ = 0;
    StabilityType stype_{0, 0};
};

namespace detail {

inline IrrDecomp term_at(FIExpr::Kind kind, const Partition& lambda, int s) {
    if (kind == FIExpr::Kind::FreeSum) return m_lambda_at(lambda, s);
    IrrDecomp out(s);
    if (s >= min_padding(lambda)) out.add(pad(lambda, s).full(), 1);
    return out;
}

}  // namespace detail

/// Evaluation at the set {1..s}. Throws SymbolicCoefficient if any coefficient is named.
inline IrrDecomp evaluate_at(const FIExpr& e, int s) {
    if (s < 0) throw DomainError(ErrorKind::InvalidArgument, "evaluation rank must be >= 0");
    IrrDecomp out(s);
    for (const auto& t : e.terms()) out += detail::term_at(e.kind(), t.lambda, s).scaled(t.coeff.number());
    return out;
}

/// Irreducible -> (coefficient label -> multiplicity); numeric coefficients are folded under "".
using SymbolicDecomp = std::map<Partition, std::map<std::string, Integer>, DecreasingLex>;

inline SymbolicDecomp evaluate_at_symbolic(const FIExpr& e, int s) {
    if (s < 0) throw DomainError(ErrorKind::InvalidArgument, "evaluation rank must be >= 0");
    SymbolicDecomp out;
    for (const auto& t : e.terms()) {
        const IrrDecomp part = detail::term_at(e.kind(), t.lambda, s);
        for (const auto& [mu, mult] : part.terms()) {
            if (t.coeff.is_symbolic()) out[mu][t.coeff.str()] += mult;
            else out[mu][""] += mult * t.coeff.number();
        }
    }
    return out;
}

struct GridEntry {
    StabilityType type{0, 0};
    int weight_bound = 0;
    std::string label;

    bool operator==(const GridEntry&) const = default;
};

/// Weight bound and stability type of the abutment along one anti-diagonal.
struct AssembledBound {
    int weight_bound = 0;
    StabilityType type;
};

class SpectralGrid {
public:
    /// Gives E_page^{pq} for every p, q >= 0.
    using Rule = std::function<GridEntry(int p, int q)>;

    /// Explicit data for 0 <= p <= p_max, 0 <= q <= q_max, stored p-major.
    /// Nothing is known past the cutoff: a differential reaching there raises NotConverged.
    SpectralGrid(int page, int p_max, int q_max, std::vector<GridEntry> entries)
        : page_(page), p_max_(p_max), q_max_(q_max), window_(std::move(entries)) {
        check_shape();
        if (window_.size() != static_cast<std::size_t>((p_max + 1) * (q_max + 1)))
            throw DomainError(ErrorKind::InvalidArgument, "grid entries do not fill the window");
    }

    /// Data defined by a rule on the whole first quadrant; the window is what is stored and shown.
    static SpectralGrid from_rule(int page, int p_max, int q_max, Rule rule) {
        SpectralGrid g;
        g.page_ = page;
        g.p_max_ = p_max;
        g.q_max_ = q_max;
        g.check_shape();
        g.seed_ = std::make_shared<const Seed>(Seed{page, std::move(rule)});
        g.window_.reserve(static_cast<std::size_t>((p_max + 1) * (q_max + 1)));
        for (int p = 0; p <= p_max; ++p)
            for (int q = 0; q <= q_max; ++q) g.window_.push_back(g.seed_->rule(p, q));
        return g;
    }

    int page() const noexcept { return page_; }
    int p_max() const noexcept { return p_max_; }
    int q_max() const noexcept { return q_max_; }
    bool extends_past_window() const noexcept { return seed_ != nullptr; }

    /// Zero entry outside the first quadrant; NotConverged past the cutoff.
    const GridEntry& at(int p, int q) const {
        static const GridEntry zero{};
        if (p < 0 || q < 0) return zero;
        if (p > p_max_ || q > q_max_)
            throw DomainError(ErrorKind::NotConverged, "entry (" + std::to_string(p) + "," + std::to_string(q) +
                                                           ") lies past the grid cutoff");
        return window_[index(p, q)];
    }

    /// E_{k+1} from E_k: each entry becomes the homology at E_k^{pq} of
    /// E_k^{p-k,q+k-1} -> E_k^{pq} -> E_k^{p+k,q-k+1}. Weights carry over.
    SpectralGrid turn_page() const {
        SpectralGrid next = *this;
        next.page_ = page_ + 1;
        if (seed_) {
            Memo memo;
            for (int p = 0; p <= p_max_; ++p)
                for (int q = 0; q <= q_max_; ++q) next.window_[index(p, q)] = seeded_value(page_ + 1, p, q, memo);
        } else {
            const int k = page_;
            for (int p = 0; p <= p_max_; ++p)
                for (int q = 0; q <= q_max_; ++q)
                    next.window_[index(p, q)] = step(at(p - k, q + k - 1), at(p, q), at(p + k, q - k + 1));
        }
        return next;
    }

    /// Rows q = q_max..0, columns p = 0..p_max, each cell "(I,S)".
    std::string render() const {
        std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(q_max_ + 1));
        std::size_t width = 0;
        for (int q = 0; q <= q_max_; ++q)
            for (int p = 0; p <= p_max_; ++p) {
                cells[q].push_back(at(p, q).type.str());
                width = std::max(width, cells[q].back().size());
            }
        std::ostringstream out;
        out << "E_" << page_ << " page (I,S)\n";
        const std::size_t label_width = std::to_string(q_max_).size() + 2;
        for (int q = q_max_; q >= 0; --q) {
            std::string label = "q=" + std::to_string(q);
            out << label << std::string(label_width + 2 - label.size(), ' ') << '|';
            for (const auto& c : cells[q]) out << ' ' << std::string(width - c.size(), ' ') << c;
            out << '\n';
        }
        out << std::string(label_width + 2, ' ') << '+' << std::string((width + 1) * (p_max_ + 1), '-') << '\n';
        out << std::string(label_width + 3, ' ');
        for (int p = 0; p <= p_max_; ++p) {
            const std::string label = "p=" + std::to_string(p);
            out << ' ' << std::string(width > label.size() ? width - label.size() : 0, ' ') << label;
        }
        out << '\n';
        return out.str();
    }

    bool operator==(const SpectralGrid& o) const {
        return page_ == o.page_ && p_max_ == o.p_max_ && q_max_ == o.q_max_ && window_ == o.window_;
    }

private:
    struct Seed {
        int page;
        Rule rule;
    };
    using Memo = std::unordered_map<std::uint64_t, GridEntry>;

    SpectralGrid() = default;

    void check_shape() const {
        if (page_ < 2) throw DomainError(ErrorKind::InvalidArgument, "spectral grids start at page 2");
        if (p_max_ < 0 || q_max_ < 0) throw DomainError(ErrorKind::InvalidArgument, "grid cutoffs must be >= 0");
    }

    std::size_t index(int p, int q) const { return static_cast<std::size_t>(p * (q_max_ + 1) + q); }

    static GridEntry step(const GridEntry& source, const GridEntry& here, const GridEntry& target) {
        GridEntry out = here;
        out.type = homology_type(source.type, here.type, target.type);
        return out;
    }

    GridEntry seeded_value(int k, int p, int q, Memo& memo) const {
        if (p < 0 || q < 0) return GridEntry{};
        const std::uint64_t key = (static_cast<std::uint64_t>(k) << 48) | (static_cast<std::uint64_t>(p) << 24) |
                                  static_cast<std::uint64_t>(q);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        GridEntry out;
        if (k == seed_->page) {
            out = seed_->rule(p, q);
        } else {
            const int prev = k - 1;
            out = step(seeded_value(prev, p - prev, q + prev - 1, memo), seeded_value(prev, p, q, memo),
                       seeded_value(prev, p + prev, q - prev + 1, memo));
        }
        memo.emplace(key, out);
        return out;
    }

    int page_ = 2;
    int p_max_ = 0;
    int q_max_ = 0;
    std::vector<GridEntry> window_;
    std::shared_ptr<const Seed> seed_;
};

/// Page from which no differential touches the anti-diagonal p + q = i.
constexpr int convergence_page(int i) { return i + 2; }

/// Bounds for the abutment H^i from the converged anti-diagonal E_∞^{p,i-p}.
inline AssembledBound converge_and_assemble(const SpectralGrid& g, int i) {
    if (i < 0) throw DomainError(ErrorKind::InvalidArgument, "degree must be >= 0");
    if (g.page() < convergence_page(i))
        throw DomainError(ErrorKind::NotConverged, "page " + std::to_string(g.page()) + " still has differentials on p+q=" +
                                                       std::to_string(i) + "; need page " +
                                                       std::to_string(convergence_page(i)));
    AssembledBound out;
    std::vector<StabilityType> quotients;
    for (int p = 0; p <= i; ++p) {
        const GridEntry& e = g.at(p, i - p);
        out.weight_bound = std::max(out.weight_bound, e.weight_bound);
        quotients.push_back(e.type);
    }
    out.type = filtration_type(quotients);
    return out;
}

}  // namespace repstab
