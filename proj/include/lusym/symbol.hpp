#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "lusym/partition.hpp"
#include "lusym/sign.hpp"

namespace lusym {

// sd() is only defined on nonzero defect and on the two basic defect-0
// symbols (1;0) and (0;1).
struct SdUndefinedError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class DefectFamily { S, SPlus, SMinus }; // def = 1, 0, 2 (mod 4)

inline std::string family_name(DefectFamily f) {
    switch (f) {
        case DefectFamily::S: return "S";
        case DefectFamily::SPlus: return "S+";
        case DefectFamily::SMinus: return "S-";
    }
    return "?";
}

// Rank contribution of the defect alone: the rank of the symbol whose
// bipartition is empty. Equals (d^2-1)/4 for odd d and (d/2)^2 for even d;
// both are integer division d*d/4.
inline int defect_offset(int d) { return (d * d) / 4; }

// A Lusztig symbol: two strictly decreasing rows of naturals, considered up
// to simultaneous shift. Rows are stored as given; equality and ordering
// compare the reduced representatives.
class Symbol {
  public:
    Symbol() = default;

    Symbol(std::vector<int> top, std::vector<int> bottom)
        : top_(std::move(top)), bottom_(std::move(bottom)) {
        check_row(top_);
        check_row(bottom_);
    }

    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }

    int defect() const {
        return static_cast<int>(top_.size()) - static_cast<int>(bottom_.size());
    }

    int rank() const {
        int sum = 0;
        for (int a : top_) sum += a;
        for (int b : bottom_) sum += b;
        int m = static_cast<int>(top_.size() + bottom_.size()) - 1;
        return sum - (m >= 1 ? (m * m) / 4 : 0);
    }

    Symbol transpose() const { return Symbol(bottom_, top_); }

    bool is_reduced() const {
        bool zt = !top_.empty() && top_.back() == 0;
        bool zb = !bottom_.empty() && bottom_.back() == 0;
        return !(zt && zb);
    }

    // One simultaneous shift: (A;B) -> (A+1 u {0}; B+1 u {0}).
    Symbol shift() const {
        std::vector<int> t(top_), b(bottom_);
        for (int& a : t) ++a;
        for (int& a : b) ++a;
        t.push_back(0);
        b.push_back(0);
        return Symbol(std::move(t), std::move(b));
    }

    // Undo shifts until reduced.
    Symbol normalize() const {
        std::vector<int> t(top_), b(bottom_);
        while (!t.empty() && t.back() == 0 && !b.empty() && b.back() == 0) {
            t.pop_back();
            b.pop_back();
            for (int& a : t) --a;
            for (int& a : b) --a;
        }
        return Symbol(std::move(t), std::move(b));
    }

    // The bipartition of the symbol: subtract the staircase from each row.
    Bipartition upsilon() const {
        return {row_partition(top_), row_partition(bottom_)};
    }

    // Sign of the defect; on defect 0 only the basic symbols carry one.
    Sign sd() const {
        int d = defect();
        if (d != 0)
            return sign_of(d);
        Symbol r = normalize();
        if (r.top_ == std::vector<int>{1} && r.bottom_ == std::vector<int>{0})
            return Sign::plus;
        if (r.top_ == std::vector<int>{0} && r.bottom_ == std::vector<int>{1})
            return Sign::minus;
        throw SdUndefinedError("sd: undefined for non-basic defect-0 symbol");
    }

    // Parity of the defect: (-1)^floor(|def|/2).
    Sign pd() const {
        int d = defect();
        return parity_sign((d < 0 ? -d : d) / 2);
    }

    std::optional<DefectFamily> family() const {
        switch (((defect() % 4) + 4) % 4) {
            case 1: return DefectFamily::S;
            case 0: return DefectFamily::SPlus;
            case 2: return DefectFamily::SMinus;
            default: return std::nullopt;
        }
    }

    // Compares the largest entries of the two rows; an empty row loses. Both
    // rows empty yields {+,-} (a convention; the source material leaves this
    // case open).
    SignSet zeta() const {
        Symbol r = normalize();
        bool te = r.top_.empty(), be = r.bottom_.empty();
        if (te && be) return SignSet::all();
        if (te) return SignSet::only(Sign::minus);
        if (be) return SignSet::only(Sign::plus);
        if (r.top_[0] > r.bottom_[0]) return SignSet::only(Sign::plus);
        if (r.top_[0] < r.bottom_[0]) return SignSet::only(Sign::minus);
        return SignSet::all();
    }

    bool operator==(const Symbol& o) const {
        Symbol a = normalize(), b = o.normalize();
        return a.top_ == b.top_ && a.bottom_ == b.bottom_;
    }

    // Total order on reduced representatives, for containers.
    auto key() const {
        Symbol r = normalize();
        return std::tuple<std::vector<int>, std::vector<int>>(r.top_, r.bottom_);
    }
    bool operator<(const Symbol& o) const { return key() < o.key(); }

  private:
    static void check_row(const std::vector<int>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0)
                throw std::invalid_argument("Symbol: entries must be naturals");
            if (i + 1 < row.size() && row[i] <= row[i + 1])
                throw std::invalid_argument("Symbol: rows must be strictly decreasing");
        }
    }

    static Partition row_partition(const std::vector<int>& row) {
        std::vector<int> p;
        int m = static_cast<int>(row.size());
        for (int i = 0; i < m; ++i)
            p.push_back(row[static_cast<std::size_t>(i)] - (m - 1 - i));
        return Partition(std::move(p));
    }

    std::vector<int> top_, bottom_;
};

// The reduced symbol with the given bipartition and defect.
inline Symbol symbol_from_bipartition(const Bipartition& bp, int defect) {
    const auto& lam = bp.upper;
    const auto& mu = bp.lower;
    int m2 = std::max({0, static_cast<int>(lam.length()) - defect,
                       static_cast<int>(mu.length())});
    int m1 = m2 + defect;
    std::vector<int> top, bottom;
    for (int i = 0; i < m1; ++i)
        top.push_back(lam.part(static_cast<std::size_t>(i)) + (m1 - 1 - i));
    for (int i = 0; i < m2; ++i)
        bottom.push_back(mu.part(static_cast<std::size_t>(i)) + (m2 - 1 - i));
    return Symbol(std::move(top), std::move(bottom));
}

// upsilon_inverse: the reduced symbol of defect d with Upsilon = bp.
inline Symbol upsilon_inverse(const Bipartition& bp, int d) {
    return symbol_from_bipartition(bp, d);
}

// Alvis-Curtis dual: same defect, components swapped and transposed.
inline Symbol ac_dual(const Symbol& s) {
    Bipartition b = s.upsilon();
    return symbol_from_bipartition({b.lower.transpose(), b.upper.transpose()},
                                   s.defect());
}

// Remove the largest entry of the selected row, acting on shift classes: the
// first part of the corresponding bipartition component is dropped (a no-op
// on an empty component, via a shifted representative) and the defect moves
// one step toward the other row.
inline Symbol remove_row_max(const Symbol& s, Sign row) {
    Bipartition b = s.upsilon();
    int d = s.defect();
    if (row == Sign::plus)
        return symbol_from_bipartition({b.upper.remove_first_row(), b.lower}, d - 1);
    return symbol_from_bipartition({b.upper, b.lower.remove_first_row()}, d + 1);
}

// All reduced symbols of the given rank and defect, in bipartition order.
inline std::vector<Symbol> enumerate_symbols(int n, int d, int cap = kEnumerationCap) {
    if (n > cap)
        throw std::length_error("enumerate_symbols: rank exceeds cap");
    std::vector<Symbol> out;
    int content = n - defect_offset(d);
    if (content < 0)
        return out;
    for (const auto& bp : enumerate_bipartitions(content, cap))
        out.push_back(symbol_from_bipartition(bp, d));
    return out;
}

inline std::vector<int> family_defects(int n, DefectFamily f) {
    int residue = f == DefectFamily::S ? 1 : (f == DefectFamily::SPlus ? 0 : 2);
    std::vector<int> ds;
    for (int a = 0; defect_offset(a) <= n; ++a) {
        for (int d : {a, -a}) {
            if (((d % 4) + 4) % 4 != residue)
                continue;
            if (d == 0 && a != 0)
                continue;
            if (std::find(ds.begin(), ds.end(), d) == ds.end())
                ds.push_back(d);
        }
    }
    std::sort(ds.begin(), ds.end(), [](int x, int y) {
        int ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
        if (ax != ay) return ax < ay;
        return x > y; // positive defect first
    });
    return ds;
}

// The defect family S (def=1 mod 4), S+ (0 mod 4) or S- (2 mod 4) at rank n:
// union over admissible defects, smallest |defect| first.
inline std::vector<Symbol> enumerate_family(int n, DefectFamily f,
                                            int cap = kEnumerationCap) {
    if (n > cap)
        throw std::length_error("enumerate_family: rank exceeds cap");
    std::vector<Symbol> out;
    for (int d : family_defects(n, f))
        for (auto& s : enumerate_symbols(n, d, cap))
            out.push_back(std::move(s));
    return out;
}

} // namespace lusym
