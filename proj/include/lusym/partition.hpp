#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lusym {

// An integer partition: weakly decreasing positive parts. The empty list is
// the zero partition. Trailing zeros are stripped at construction; any other
// violation throws.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Zero-padded access, 0-based.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int first() const { return part(0); }

    // Young-diagram transpose.
    Partition transpose() const {
        if (parts_.empty()) return {};
        std::vector<int> t(static_cast<std::size_t>(parts_[0]));
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++t[static_cast<std::size_t>(j)];
        return Partition(std::move(t));
    }

    // lambda_* : drop the largest part.
    Partition remove_first_row() const {
        if (parts_.empty()) return {};
        return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
    }

    // Prepend a part >= current first part.
    Partition with_first_row(int p) const {
        std::vector<int> v;
        v.reserve(parts_.size() + 1);
        v.push_back(p);
        v.insert(v.end(), parts_.begin(), parts_.end());
        return Partition(std::move(v));
    }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

// l ≼ m : m_i - 1 <= l_i <= m_i for every i, after zero-padding.
inline bool shift_dominates(const Partition& l, const Partition& m) {
    std::size_t len = std::max(l.length(), m.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (l.part(i) > m.part(i) || l.part(i) < m.part(i) - 1)
            return false;
    }
    return true;
}

// |l_i - m_i| <= 1 for every i, after zero-padding.
inline bool is_close(const Partition& l, const Partition& m) {
    std::size_t len = std::max(l.length(), m.length());
    for (std::size_t i = 0; i < len; ++i) {
        int d = l.part(i) - m.part(i);
        if (d > 1 || d < -1)
            return false;
    }
    return true;
}

// The common parts of l and m: positions where the padded parts agree, zero
// parts dropped.
inline Partition common_parts(const Partition& l, const Partition& m) {
    std::vector<int> c;
    std::size_t len = std::max(l.length(), m.length());
    for (std::size_t i = 0; i < len; ++i)
        if (l.part(i) == m.part(i) && l.part(i) > 0)
            c.push_back(l.part(i));
    return Partition(std::move(c));
}

// A partition is even when every part multiplicity is even.
inline bool is_even_partition(const Partition& p) {
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if ((j - i) % 2 != 0)
            return false;
        i = j;
    }
    return true;
}

// close with even common part.
inline bool is_two_transverse(const Partition& l, const Partition& m) {
    return is_close(l, m) && is_even_partition(common_parts(l, m));
}

struct Bipartition {
    Partition upper;
    Partition lower;

    int size() const { return upper.size() + lower.size(); }

    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;
};

inline constexpr int kEnumerationCap = 64;

// All partitions of n, ascending lexicographic on the part lists.
inline std::vector<Partition> enumerate_partitions(int n, int cap = kEnumerationCap) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    if (n > cap)
        throw std::length_error("enumerate_partitions: n exceeds cap");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Build parts from the smallest upward; reversing yields the decreasing form.
    auto rec = [&](auto&& self, int rest, int min_part) -> void {
        if (rest == 0) {
            std::vector<int> v(cur.rbegin(), cur.rend());
            out.emplace_back(std::move(v));
            return;
        }
        for (int p = min_part; p <= rest; ++p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// All bipartitions of n: |upper| ascending, then lexicographic in each slot.
inline std::vector<Bipartition> enumerate_bipartitions(int n, int cap = kEnumerationCap) {
    if (n < 0)
        throw std::invalid_argument("enumerate_bipartitions: n must be nonnegative");
    if (n > cap)
        throw std::length_error("enumerate_bipartitions: n exceeds cap");
    std::vector<Bipartition> out;
    for (int k = 0; k <= n; ++k)
        for (const auto& u : enumerate_partitions(k, cap))
            for (const auto& l : enumerate_partitions(n - k, cap))
                out.push_back({u, l});
    return out;
}

} // namespace lusym
