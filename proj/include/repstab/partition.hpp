#pragma once

#include "repstab/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace repstab {

/****************************************************************************

  Integer partitions.

  A Partition is a weakly decreasing sequence of positive integers. The same
  type indexes irreducible representations of S_s and conjugacy classes
  (cycle types). The empty partition is the unique partition of 0.

  Young diagrams use English notation; cells are (row, column), 1-based.

 ****************************************************************************/

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    /// Sorts and drops zeros; for building a partition from an unordered multiset.
    static Partition from_multiset(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// λ_1, or 0 for the empty partition.
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// 0-based part access; parts past the end read as 0.
    int operator[](std::size_t k) const noexcept { return k < parts_.size() ? parts_[k] : 0; }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

    std::string str() const {
        std::string out = "[";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(parts_[k]);
        }
        return out + "]";
    }

private:
    void validate() const {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw DomainError(ErrorKind::InvalidPartition, "parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw DomainError(ErrorKind::InvalidPartition, "parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

/// Ordering used everywhere output must be deterministic: decreasing lexicographic.
struct DecreasingLex {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
        return h;
    }
};

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    std::vector<int> out(static_cast<std::size_t>(p.first()), 0);
    for (int row : p.parts())
        for (int c = 0; c < row; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

/// λ[s] = (s - |λ|, λ_1, λ_2, ...). Only defined for s >= |λ| + λ_1.
struct PaddedPartition {
    Partition base;
    int total = 0;

    Partition full() const {
        std::vector<int> parts;
        parts.reserve(base.parts().size() + 1);
        if (total - base.size() > 0) parts.push_back(total - base.size());
        parts.insert(parts.end(), base.parts().begin(), base.parts().end());
        return Partition(std::move(parts));
    }

    bool operator==(const PaddedPartition&) const = default;
};

inline int min_padding(const Partition& p) { return p.size() + p.first(); }

inline PaddedPartition pad(const Partition& p, int s) {
    if (s < min_padding(p))
        throw DomainError(ErrorKind::PadTooSmall,
                          "cannot pad " + p.str() + " to " + std::to_string(s) +
                              "; need s >= " + std::to_string(min_padding(p)));
    return PaddedPartition{p, s};
}

/// Hook lengths of every cell, indexed 1-based as (row, column).
class HookTable {
public:
    explicit HookTable(const Partition& p) : shape_(p) {
        const Partition conj = conjugate(p);
        hooks_.resize(static_cast<std::size_t>(p.length()));
        for (int r = 0; r < p.length(); ++r) {
            for (int c = 0; c < p[r]; ++c) {
                const int arm = p[r] - c - 1;
                const int leg = conj[c] - r - 1;
                hooks_[r].push_back(arm + leg + 1);
            }
        }
    }

    int at(int row, int col) const {
        return hooks_.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(col - 1));
    }

    const std::vector<std::vector<int>>& rows() const noexcept { return hooks_; }
    const Partition& shape() const noexcept { return shape_; }

    long long product() const {
        long long out = 1;
        for (const auto& row : hooks_)
            for (int h : row) out *= h;
        return out;
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> hooks_;
};

inline HookTable hook_lengths(const Partition& p) { return HookTable(p); }

namespace detail {

inline void enumerate_rec(int remaining, int max_part, int slots_left, std::vector<int>& prefix,
                          std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (slots_left == 0) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // The rest must fit into slots_left - 1 parts of size <= part.
        if (static_cast<long long>(part) * slots_left < remaining) break;
        prefix.push_back(part);
        enumerate_rec(remaining - part, part, slots_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of `size` with parts <= max_part and at most max_length
/// parts, in decreasing lexicographic order.
inline std::vector<Partition> enumerate(int size, std::optional<int> max_part = std::nullopt,
                                        std::optional<int> max_length = std::nullopt) {
    std::vector<Partition> out;
    if (size < 0) return out;
    std::vector<int> prefix;
    detail::enumerate_rec(size, max_part.value_or(size), max_length.value_or(size), prefix, out);
    return out;
}

/// Parses "2,1", "[2,1]", "" or "[]" into positive parts, in the order given.
inline std::vector<int> parse_parts(std::string_view text) {
    auto trim = [](std::string_view v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
        return v;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            throw DomainError(ErrorKind::InvalidPartition, "unbalanced bracket in '" + std::string(text) + "'");
        text = trim(text.substr(1, text.size() - 2));
    }
    std::vector<int> parts;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view token = trim(text.substr(0, comma));
        if (token.empty() || token.find_first_not_of("0123456789") != std::string_view::npos ||
            token.size() > 9)
            throw DomainError(ErrorKind::InvalidPartition, "bad part '" + std::string(token) + "'");
        parts.push_back(std::stoi(std::string(token)));
        if (parts.back() == 0) throw DomainError(ErrorKind::InvalidPartition, "parts must be positive");
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
        if (trim(text).empty()) throw DomainError(ErrorKind::InvalidPartition, "trailing comma");
    }
    return parts;
}

/// As parse_parts, but the parts must already be weakly decreasing.
inline Partition parse_partition(std::string_view text) { return Partition(parse_parts(text)); }

}  // namespace repstab
