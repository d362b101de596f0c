#pragma once

#include "repstab/errors.hpp"
#include "repstab/partition.hpp"
#include "repstab/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace repstab {

/// Cycle counts m_j of a permutation; equivalent to its cycle type.
class CycleCounts {
public:
    CycleCounts() = default;

    /// counts[j-1] = number of j-cycles.
    explicit CycleCounts(std::vector<int> counts) : counts_(std::move(counts)) {
        for (int m : counts_)
            if (m < 0) throw DomainError(ErrorKind::InvalidArgument, "negative cycle count");
        trim();
    }

    static CycleCounts from_cycle_type(const Partition& type) {
        std::vector<int> counts(static_cast<std::size_t>(type.first()), 0);
        for (int j : type.parts()) ++counts[static_cast<std::size_t>(j - 1)];
        return CycleCounts(std::move(counts));
    }

    static CycleCounts identity(int s) { return CycleCounts(std::vector<int>{s}); }

    /// m_j; zero for j beyond the support.
    int count(int j) const noexcept {
        return j >= 1 && static_cast<std::size_t>(j) <= counts_.size() ? counts_[static_cast<std::size_t>(j - 1)] : 0;
    }

    int max_cycle() const noexcept { return static_cast<int>(counts_.size()); }

    int degree() const noexcept {
        int d = 0;
        for (std::size_t j = 0; j < counts_.size(); ++j) d += static_cast<int>(j + 1) * counts_[j];
        return d;
    }

    int num_cycles() const noexcept {
        int c = 0;
        for (int m : counts_) c += m;
        return c;
    }

    Partition cycle_type() const {
        std::vector<int> parts;
        for (int j = max_cycle(); j >= 1; --j) parts.insert(parts.end(), static_cast<std::size_t>(count(j)), j);
        return Partition(std::move(parts));
    }

    const std::vector<int>& counts() const noexcept { return counts_; }

    bool operator==(const CycleCounts&) const = default;

private:
    void trim() {
        while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
    }

    std::vector<int> counts_;
};

/// (-1)^(s - #cycles)
inline int sign(const CycleCounts& ct) { return (ct.degree() - ct.num_cycles()) % 2 == 0 ? 1 : -1; }

/// Size of the conjugacy class: s! / prod_j (j^m_j * m_j!).
inline Integer centralizer_order(const CycleCounts& ct) {
    Integer z = 1;
    for (int j = 1; j <= ct.max_cycle(); ++j) z *= power(Integer(j), ct.count(j)) * factorial(ct.count(j));
    return z;
}

inline Integer class_size(const CycleCounts& ct) { return factorial(ct.degree()) / centralizer_order(ct); }

namespace detail {

struct MnKey {
    Partition shape;
    Partition cycles;
    bool operator==(const MnKey&) const = default;
};

struct MnKeyHash {
    std::size_t operator()(const MnKey& k) const noexcept {
        PartitionHash h;
        return h(k.shape) * 31u ^ h(k.cycles);
    }
};

/// Process-wide memo for Murnaghan-Nakayama values. Readers share the lock.
class MnCache {
public:
    bool lookup(const MnKey& key, Integer& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(MnKey key, const Integer& value) {
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<MnKey, Integer, MnKeyHash> table_;
};

inline MnCache& mn_cache() {
    static MnCache cache;
    return cache;
}

// Removes the largest cycle as a border strip, working on the beta-set
// (first-column hook lengths): a border strip of length r is a bead moved
// from b to b-r into an empty slot, with sign (-1)^(beads jumped over).
inline Integer mn_rec(const Partition& shape, const Partition& cycles) {
    if (cycles.empty() || shape.length() == 1) return 1;

    MnKey key{shape, cycles};
    Integer cached;
    if (mn_cache().lookup(key, cached)) return cached;

    const int r = cycles.first();
    const Partition rest(std::vector<int>(cycles.parts().begin() + 1, cycles.parts().end()));

    const int len = shape.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) beta[k] = shape[k] + len - 1 - k;  // strictly decreasing

    Integer total = 0;
    for (int k = 0; k < len; ++k) {
        const int target = beta[k] - r;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int jumped = 0;
        for (int b : beta)
            if (b > target && b < beta[k]) ++jumped;

        std::vector<int> moved = beta;
        moved[k] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts;
        for (int j = 0; j < len; ++j) {
            const int part = moved[j] - (len - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        const Integer sub = mn_rec(Partition(std::move(parts)), rest);
        if (jumped % 2) total -= sub;
        else total += sub;
    }

    mn_cache().store(std::move(key), total);
    return total;
}

}  // namespace detail

/// Irreducible character χ_λ at a conjugacy class, by the Murnaghan-Nakayama rule.
inline Integer mn_character(const Partition& lambda, const CycleCounts& ct) {
    if (lambda.size() != ct.degree())
        throw DomainError(ErrorKind::SizeMismatch, "partition " + lambda.str() + " has size " +
                                                       std::to_string(lambda.size()) + " but class has degree " +
                                                       std::to_string(ct.degree()));
    return detail::mn_rec(lambda, ct.cycle_type());
}

inline Integer mn_character(const Partition& lambda, const Partition& cycle_type) {
    return mn_character(lambda, CycleCounts::from_cycle_type(cycle_type));
}

/// Hook length formula.
inline Integer dim_irr(const Partition& lambda) {
    Integer hooks = 1;
    const HookTable table = hook_lengths(lambda);
    for (const auto& row : table.rows())
        for (int h : row) hooks *= h;
    return factorial(lambda.size()) / hooks;
}

/// Rational-valued function on the conjugacy classes of S_rank, keyed by cycle type.
class ClassFunction {
public:
    using Values = std::map<Partition, Rational, DecreasingLex>;

    explicit ClassFunction(int rank = 0) : rank_(rank) {
        for (auto& c : enumerate(rank)) values_.emplace(std::move(c), Rational(0));
    }

    template <class F>
    static ClassFunction from(int rank, F&& fn) {
        ClassFunction out(rank);
        for (auto& [type, value] : out.values_) value = Rational(fn(type));
        return out;
    }

    int rank() const noexcept { return rank_; }
    const Values& values() const noexcept { return values_; }

    const Rational& at(const Partition& cycle_type) const {
        auto it = values_.find(cycle_type);
        if (it == values_.end())
            throw DomainError(ErrorKind::SizeMismatch, cycle_type.str() + " is not a class of S_" + std::to_string(rank_));
        return it->second;
    }

    void set(const Partition& cycle_type, Rational value) {
        auto it = values_.find(cycle_type);
        if (it == values_.end())
            throw DomainError(ErrorKind::SizeMismatch, cycle_type.str() + " is not a class of S_" + std::to_string(rank_));
        it->second = std::move(value);
    }

    ClassFunction& operator+=(const ClassFunction& o) { return combine(o, [](Rational& a, const Rational& b) { a += b; }); }
    ClassFunction& operator-=(const ClassFunction& o) { return combine(o, [](Rational& a, const Rational& b) { a -= b; }); }
    ClassFunction& operator*=(const ClassFunction& o) { return combine(o, [](Rational& a, const Rational& b) { a *= b; }); }
    ClassFunction& operator*=(const Rational& c) {
        for (auto& [_, v] : values_) v *= c;
        return *this;
    }

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
    friend ClassFunction operator*(const Rational& c, ClassFunction a) { return a *= c; }

    bool operator==(const ClassFunction&) const = default;

private:
    template <class Op>
    ClassFunction& combine(const ClassFunction& o, Op op) {
        if (o.rank_ != rank_)
            throw DomainError(ErrorKind::RankMismatch, "class functions on S_" + std::to_string(rank_) + " and S_" +
                                                           std::to_string(o.rank_));
        auto it = o.values_.begin();
        for (auto& [_, v] : values_) op(v, (it++)->second);
        return *this;
    }

    int rank_;
    Values values_;
};

inline ClassFunction character(const Partition& lambda) {
    return ClassFunction::from(lambda.size(), [&](const Partition& type) { return mn_character(lambda, type); });
}

inline ClassFunction trivial_character(int s) {
    return ClassFunction::from(s, [](const Partition&) { return 1; });
}

/// (1/s!) Σ_classes |class| f g. Characters of S_s are real, so no conjugation.
inline Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.rank() != g.rank())
        throw DomainError(ErrorKind::RankMismatch, "inner product of class functions on S_" + std::to_string(f.rank()) +
                                                       " and S_" + std::to_string(g.rank()));
    Rational sum = 0;
    auto it = g.values().begin();
    for (const auto& [type, value] : f.values()) {
        const Rational& other = (it++)->second;
        if (value != 0 && other != 0)
            sum += Rational(class_size(CycleCounts::from_cycle_type(type))) * value * other;
    }
    return sum / Rational(factorial(f.rank()));
}

/// Multiset of irreducibles of S_rank.
class IrrDecomp {
public:
    using Terms = std::map<Partition, Integer, DecreasingLex>;

    explicit IrrDecomp(int rank = 0) : rank_(rank) {}

    IrrDecomp(int rank, std::initializer_list<std::pair<Partition, int>> terms) : rank_(rank) {
        for (const auto& [lambda, mult] : terms) add(lambda, mult);
    }

    int rank() const noexcept { return rank_; }
    const Terms& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    Integer multiplicity(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Partition& lambda, const Integer& mult) {
        if (lambda.size() != rank_)
            throw DomainError(ErrorKind::SizeMismatch, lambda.str() + " is not a partition of " + std::to_string(rank_));
        if (mult < 0) throw DomainError(ErrorKind::NotACharacter, "negative multiplicity for " + lambda.str());
        if (mult == 0) return;
        terms_[lambda] += mult;
    }

    IrrDecomp& operator+=(const IrrDecomp& o) {
        if (o.rank_ != rank_) throw DomainError(ErrorKind::RankMismatch, "adding decompositions of different rank");
        for (const auto& [lambda, mult] : o.terms_) add(lambda, mult);
        return *this;
    }

    friend IrrDecomp operator+(IrrDecomp a, const IrrDecomp& b) { return a += b; }

    IrrDecomp scaled(const Integer& c) const {
        IrrDecomp out(rank_);
        for (const auto& [lambda, mult] : terms_) out.add(lambda, mult * c);
        return out;
    }

    Integer dimension() const {
        Integer d = 0;
        for (const auto& [lambda, mult] : terms_) d += mult * dim_irr(lambda);
        return d;
    }

    ClassFunction character() const {
        ClassFunction out(rank_);
        for (const auto& [lambda, mult] : terms_) out += Rational(mult) * repstab::character(lambda);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [lambda, mult] : terms_) {
            if (!out.empty()) out += " + ";
            if (mult != 1) out += mult.str() + "*";
            out += "P" + lambda.str();
        }
        return out;
    }

    bool operator==(const IrrDecomp&) const = default;

private:
    int rank_;
    Terms terms_;
};

/// Multiplicities ⟨f, χ_λ⟩ for every λ ⊢ s. Throws NotACharacter if any is
/// negative or non-integral.
inline IrrDecomp decompose(const ClassFunction& f) {
    IrrDecomp out(f.rank());
    for (const auto& lambda : enumerate(f.rank())) {
        const Rational m = inner_product(f, character(lambda));
        if (!is_integral(m) || m < 0)
            throw DomainError(ErrorKind::NotACharacter,
                              "multiplicity of " + lambda.str() + " is " + to_string(m));
        out.add(lambda, to_integer(m));
    }
    return out;
}

struct CharacterTable {
    int rank = 0;
    std::vector<Partition> classes;  // cycle types, decreasing lex
    std::map<Partition, std::vector<Integer>, DecreasingLex> rows;
};

inline CharacterTable character_table(int s) {
    CharacterTable table;
    table.rank = s;
    table.classes = enumerate(s);
    for (const auto& lambda : table.classes) {
        auto& row = table.rows[lambda];
        for (const auto& type : table.classes) row.push_back(mn_character(lambda, type));
    }
    return table;
}

}  // namespace repstab
