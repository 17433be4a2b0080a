#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lusym/partition.hpp"
#include "lusym/sign.hpp"
#include "lusym/symbol.hpp"

namespace lusym {

struct NotBasicError : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedOperation : std::domain_error {
    using std::domain_error::domain_error;
};

enum class GroupKind { Sp, OEven, OOdd }; // Sp_{2n}, O^eps_{2n}, O^eps_{2n+1}

inline std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::Sp: return "Sp";
        case GroupKind::OEven: return "OEven";
        case GroupKind::OOdd: return "OOdd";
    }
    return "?";
}

struct GroupTag {
    GroupKind kind = GroupKind::Sp;
    int n = 0;
    std::optional<Sign> eps; // orthogonal kinds only

    static GroupTag sp(int n) { return {GroupKind::Sp, n, std::nullopt}; }
    static GroupTag o_even(int n, Sign e) { return {GroupKind::OEven, n, e}; }
    static GroupTag o_odd(int n, Sign e) { return {GroupKind::OOdd, n, e}; }

    bool operator==(const GroupTag&) const = default;

    std::string name() const {
        std::ostringstream os;
        switch (kind) {
            case GroupKind::Sp: os << "Sp_" << 2 * n; break;
            case GroupKind::OEven:
                os << "O" << (eps ? std::string(1, sign_char(*eps)) : "?") << "_" << 2 * n;
                break;
            case GroupKind::OOdd:
                os << "O" << (eps ? std::string(1, sign_char(*eps)) : "?") << "_" << 2 * n + 1;
                break;
        }
        return os.str();
    }
};

// Metadata of one eigenvalue orbit [a], a != +-1. `neg` names the partner
// orbit [-a]; `central` is this orbit's contribution to iota_rho.
struct OrbitLabel {
    std::string id;
    int card = 2;        // #[a]
    bool unitary = false;
    std::string neg;     // id of [-a]; may equal id
    Sign central = Sign::plus;

    bool operator==(const OrbitLabel&) const = default;
};

// The "away from +-1" part of a representation: a finite map from orbit
// labels to nonempty partitions, together with the label metadata for the
// support and its neg-partners.
class RhoDatum {
  public:
    RhoDatum() = default;

    void declare(const OrbitLabel& l) {
        auto it = labels_.find(l.id);
        if (it != labels_.end() && !(it->second == l))
            throw std::invalid_argument("RhoDatum: conflicting label " + l.id);
        labels_[l.id] = l;
    }

    void set_part(const std::string& id, Partition p) {
        if (!labels_.count(id))
            throw std::invalid_argument("RhoDatum: unknown label " + id);
        if (p.empty())
            parts_.erase(id);
        else
            parts_[id] = std::move(p);
    }

    const std::map<std::string, OrbitLabel>& labels() const { return labels_; }
    const std::map<std::string, Partition>& parts() const { return parts_; }

    const OrbitLabel& label(const std::string& id) const {
        auto it = labels_.find(id);
        if (it == labels_.end())
            throw std::invalid_argument("RhoDatum: unknown label " + id);
        return it->second;
    }

    Partition part(const std::string& id) const {
        auto it = parts_.find(id);
        return it == parts_.end() ? Partition{} : it->second;
    }

    bool empty() const { return parts_.empty(); }

    bool cuspidal_flag() const { return cuspidal_; }
    void set_cuspidal_flag(bool b) { cuspidal_ = b; }

    // 2|rho| = sum card([a]) * |rho[a]|.
    int twice_size() const {
        int t = 0;
        for (const auto& [id, p] : parts_)
            t += label(id).card * p.size();
        return t;
    }

    bool size_integral() const { return twice_size() % 2 == 0; }

    int size() const {
        if (!size_integral())
            throw std::domain_error("RhoDatum: |rho| is not an integer");
        return twice_size() / 2;
    }

    // (-1)^{# unitary labels with a nonempty partition}
    Sign eps_rho() const {
        int u = 0;
        for (const auto& [id, p] : parts_)
            if (label(id).unitary) ++u;
        return parity_sign(u);
    }

    // Product of the stored central signs over the support.
    Sign iota_rho() const {
        Sign s = Sign::plus;
        for (const auto& [id, p] : parts_)
            s *= label(id).central;
        return s;
    }

    Sign iota_tilde(const SignConfig& cfg) const {
        return iota_rho() * sign_pow(cfg.ee, size());
    }

    // rho^-: [a] -> rho[-a].
    RhoDatum minus() const {
        RhoDatum r;
        r.labels_ = labels_;
        r.cuspidal_ = cuspidal_;
        for (const auto& [id, p] : parts_)
            r.parts_[label(id).neg] = p;
        return r;
    }

    // rho_1: remove the first row of every rho[a].
    RhoDatum first_rows_removed() const {
        RhoDatum r;
        r.labels_ = labels_;
        r.cuspidal_ = cuspidal_;
        for (const auto& [id, p] : parts_) {
            Partition q = p.remove_first_row();
            if (!q.empty())
                r.parts_[id] = q;
        }
        return r;
    }

    std::vector<std::string> check() const {
        std::vector<std::string> bad;
        for (const auto& [id, l] : labels_) {
            if (l.id != id)
                bad.push_back("rho: label map key mismatch at " + id);
            auto it = labels_.find(l.neg);
            if (it == labels_.end()) {
                bad.push_back("rho: missing neg partner of " + id);
                continue;
            }
            const OrbitLabel& m = it->second;
            if (m.neg != id)
                bad.push_back("rho: neg is not an involution at " + id);
            if (m.card != l.card)
                bad.push_back("rho: card differs across neg pair " + id);
            if (m.unitary != l.unitary)
                bad.push_back("rho: unitary flag differs across neg pair " + id);
            if (m.central != l.central)
                bad.push_back("rho: central sign differs across neg pair " + id);
            if (l.card <= 0)
                bad.push_back("rho: card must be positive at " + id);
        }
        for (const auto& [id, p] : parts_) {
            if (!labels_.count(id))
                bad.push_back("rho: undeclared support label " + id);
            if (p.empty())
                bad.push_back("rho: stored empty partition at " + id);
        }
        if (!size_integral())
            bad.push_back("rho: |rho| is not an integer");
        return bad;
    }

    bool operator==(const RhoDatum& o) const {
        return parts_ == o.parts_ && labels_ == o.labels_ && cuspidal_ == o.cuspidal_;
    }

  private:
    std::map<std::string, OrbitLabel> labels_;
    std::map<std::string, Partition> parts_;
    bool cuspidal_ = false;
};

inline RhoDatum rho_minus(const RhoDatum& r) { return r.minus(); }
inline RhoDatum rho_one(const RhoDatum& r) { return r.first_rows_removed(); }

// pi_{rho, Lambda_1, Lambda_-1, iota} under the canonical correspondence.
struct Irrep {
    GroupTag group;
    RhoDatum rho;
    Symbol lambda1;
    Symbol lambdam1;
    std::optional<Sign> iota; // OOdd only

    bool operator==(const Irrep& o) const {
        return group == o.group && rho == o.rho && lambda1 == o.lambda1 &&
               lambdam1 == o.lambdam1 && iota == o.iota;
    }

    // Deterministic container key.
    std::string key() const;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline ValidationResult validate(const Irrep& p) {
    ValidationResult r;
    auto fail = [&](const std::string& m) { r.violations.push_back(m); };

    if (p.group.n < 0)
        fail("group: negative rank");
    if (p.group.kind == GroupKind::Sp && p.group.eps)
        fail("group: Sp carries no eps");
    if (p.group.kind != GroupKind::Sp && !p.group.eps)
        fail("group: orthogonal kind requires eps");
    if ((p.group.kind == GroupKind::OOdd) != p.iota.has_value())
        fail("iota: present iff the group is odd orthogonal");

    for (auto& m : p.rho.check())
        fail(m);

    auto fam1 = p.lambda1.family();
    auto famm1 = p.lambdam1.family();
    auto is_even_family = [](std::optional<DefectFamily> f) {
        return f && (*f == DefectFamily::SPlus || *f == DefectFamily::SMinus);
    };
    switch (p.group.kind) {
        case GroupKind::Sp:
            if (fam1 != DefectFamily::S)
                fail("lambda1: defect must be 1 (mod 4) for Sp");
            if (!is_even_family(famm1))
                fail("lambdam1: defect must be 0 or 2 (mod 4) for Sp");
            break;
        case GroupKind::OEven:
            if (!is_even_family(fam1))
                fail("lambda1: defect must be 0 or 2 (mod 4) for OEven");
            if (!is_even_family(famm1))
                fail("lambdam1: defect must be 0 or 2 (mod 4) for OEven");
            break;
        case GroupKind::OOdd:
            if (fam1 != DefectFamily::S)
                fail("lambda1: defect must be 1 (mod 4) for OOdd");
            if (famm1 != DefectFamily::S)
                fail("lambdam1: defect must be 1 (mod 4) for OOdd");
            break;
    }

    if (p.rho.size_integral()) {
        int n = p.rho.size() + p.lambda1.rank() + p.lambdam1.rank();
        if (n != p.group.n)
            fail("rank: |rho| + rank(lambda1) + rank(lambdam1) != n");
    }

    if (p.group.kind == GroupKind::OEven && p.group.eps && r.violations.empty()) {
        Sign link = p.rho.eps_rho() * p.lambda1.pd() * p.lambdam1.pd();
        if (link != *p.group.eps)
            fail("eps: OEven discriminant must equal eps_rho*pd(lambda1)*pd(lambdam1)");
    }
    return r;
}

inline std::string Irrep::key() const {
    std::ostringstream os;
    os << kind_name(group.kind) << ':' << group.n << ':';
    if (group.eps) os << sign_char(*group.eps);
    os << '|';
    for (const auto& [id, p] : rho.parts()) {
        os << id << "->";
        for (int x : p.parts()) os << x << ',';
        os << ';';
    }
    os << '|';
    auto put = [&](const Symbol& s) {
        Symbol n = s.normalize();
        for (int x : n.top()) os << x << ',';
        os << ';';
        for (int x : n.bottom()) os << x << ',';
    };
    put(lambda1);
    os << '|';
    put(lambdam1);
    os << '|';
    if (iota) os << sign_char(*iota);
    return os.str();
}

// Staircase symbols of the unipotent cuspidal representations.
// Sp/SO-odd side: rank k(k+1), defect (-1)^k (2k+1).
inline Symbol sp_cuspidal_symbol(int k) {
    std::vector<int> row;
    for (int a = 2 * k; a >= 0; --a) row.push_back(a);
    if (k % 2 == 0)
        return Symbol(row, {});
    return Symbol({}, row);
}

// Even orthogonal side: rank k^2, group eps (-1)^k; the transpose labels the
// companion sgn-twisted cuspidal.
inline Symbol even_cuspidal_symbol(int k) {
    std::vector<int> row;
    for (int a = 2 * k - 1; a >= 0; --a) row.push_back(a);
    return Symbol(row, {});
}

inline Irrep trivial_rep(const GroupTag& g) {
    Irrep p;
    p.group = g;
    switch (g.kind) {
        case GroupKind::Sp:
            if (g.eps)
                throw std::invalid_argument("trivial_rep: Sp carries no eps");
            p.lambda1 = Symbol({g.n}, {});
            p.lambdam1 = Symbol({}, {});
            break;
        case GroupKind::OEven:
            if (!g.eps)
                throw std::invalid_argument("trivial_rep: OEven requires eps");
            if (g.n == 0) {
                if (*g.eps == Sign::minus)
                    throw std::invalid_argument("trivial_rep: O-_0 does not exist");
                p.lambda1 = Symbol({}, {}); // trivial group O+_0
            } else {
                p.lambda1 = (*g.eps == Sign::plus) ? Symbol({g.n}, {0})
                                                   : Symbol({}, {g.n, 0});
            }
            p.lambdam1 = Symbol({}, {});
            break;
        case GroupKind::OOdd:
            if (!g.eps)
                throw std::invalid_argument("trivial_rep: OOdd requires eps");
            p.lambda1 = Symbol({g.n}, {});
            p.lambdam1 = Symbol({0}, {});
            p.iota = Sign::plus;
            break;
    }
    return p;
}

inline bool is_unipotent_cuspidal(const Symbol& s, const GroupTag& g) {
    if (g.kind == GroupKind::Sp || g.kind == GroupKind::OOdd) {
        for (int k = 0; k * (k + 1) <= g.n; ++k)
            if (k * (k + 1) == g.n && s == sp_cuspidal_symbol(k))
                return true;
        return false;
    }
    if (!g.eps)
        return false;
    for (int k = 0; k * k <= g.n; ++k) {
        if (k * k != g.n || parity_sign(k) != *g.eps)
            continue;
        Symbol c = even_cuspidal_symbol(k);
        if (s == c || s == c.transpose())
            return true;
    }
    return false;
}

// Half-integers carried by basic representations.
struct HalfInt {
    int twice = 0;

    bool is_integer() const { return twice % 2 == 0; }
    int floor_abs() const { return (twice < 0 ? -twice : twice) / 2; }  // floor|v|
    int ceil_abs() const { return ((twice < 0 ? -twice : twice) + 1) / 2; } // ceil|v|
    double value() const { return twice / 2.0; }

    bool operator==(const HalfInt&) const = default;
};

// A symbol is basic when it is a unipotent cuspidal staircase (either side),
// the trivial symbol, or one of the O+_2 symbols (1;0), (0;1).
inline bool is_basic_symbol(const Symbol& s) {
    auto f = s.family();
    if (!f)
        return false;
    if (*f == DefectFamily::S) {
        for (int k = 0; k * (k + 1) <= s.rank(); ++k)
            if (s == sp_cuspidal_symbol(k))
                return true;
        return false;
    }
    if (s == Symbol({}, {}) || s == Symbol({1}, {0}) || s == Symbol({0}, {1}))
        return true;
    for (int k = 1; k * k <= s.rank(); ++k) {
        Symbol c = even_cuspidal_symbol(k);
        if (s == c || s == c.transpose())
            return true;
    }
    return false;
}

inline bool is_basic(const Irrep& p) {
    bool rho_ok = p.rho.empty() ||
                  (p.rho.cuspidal_flag() && [&] {
                      for (const auto& [id, q] : p.rho.parts())
                          if (!p.rho.label(id).unitary) return false;
                      return true;
                  }());
    return rho_ok && is_basic_symbol(p.lambda1) && is_basic_symbol(p.lambdam1);
}

// The (k,h) table for one basic symbol.
inline HalfInt kh_of_symbol(const Symbol& s) {
    int d = s.defect();
    auto f = s.family();
    if (f == DefectFamily::S)
        return {(d < 0 ? -d : d) - 1}; // (|def|-1)/2
    if (s == Symbol({1}, {0}))
        return {1}; // +1/2
    if (s == Symbol({0}, {1}))
        return {-1}; // -1/2
    return {d}; // def/2, including 0 for the trivial symbol
}

inline std::pair<HalfInt, HalfInt> kh_params(const Irrep& p) {
    if (!is_basic(p))
        throw NotBasicError("kh_params: representation is not basic");
    return {kh_of_symbol(p.lambda1), kh_of_symbol(p.lambdam1)};
}

// pi^c: transpose the (-1)-symbol. Defined for Sp and OEven.
inline Irrep conj_c(const Irrep& p) {
    if (p.group.kind == GroupKind::OOdd)
        throw UnsupportedOperation("conj_c: not defined for odd orthogonal groups");
    Irrep q = p;
    q.lambdam1 = p.lambdam1.transpose();
    return q;
}

// sgn twist: transpose both symbols (OEven) or flip iota (OOdd).
inline Irrep sgn_twist(const Irrep& p) {
    if (p.group.kind == GroupKind::Sp)
        throw UnsupportedOperation("sgn_twist: Sp has no sgn character");
    Irrep q = p;
    if (p.group.kind == GroupKind::OEven) {
        q.lambda1 = p.lambda1.transpose();
        q.lambdam1 = p.lambdam1.transpose();
    } else {
        q.iota = -*p.iota;
    }
    return q;
}

// Spinor norm of -I on O^eps_N: the determinant of the form mod squares,
// eps * ee^{floor(N/2)}.
inline Sign spinor_norm_minus_identity(Sign eps, int N, const SignConfig& cfg) {
    return eps * sign_pow(cfg.ee, N / 2);
}

// chi twist by the spinor-norm character (orthogonal kinds).
inline Irrep chi_twist(const Irrep& p, const SignConfig& cfg) {
    Irrep q = p;
    switch (p.group.kind) {
        case GroupKind::Sp:
            throw UnsupportedOperation("chi_twist: Sp has no spinor norm");
        case GroupKind::OEven: {
            bool flip = (p.lambda1.pd() * p.lambdam1.pd()) == Sign::minus;
            q.rho = p.rho.minus();
            q.lambda1 = flip ? p.lambdam1.transpose() : p.lambdam1;
            q.lambdam1 = flip ? p.lambda1.transpose() : p.lambda1;
            break;
        }
        case GroupKind::OOdd: {
            Sign iprime =
                spinor_norm_minus_identity(*p.group.eps, 2 * p.group.n + 1, cfg);
            q.rho = p.rho.minus();
            q.lambda1 = p.lambdam1;
            q.lambdam1 = p.lambda1;
            q.iota = iprime * *p.iota;
            break;
        }
    }
    return q;
}

// pi(-I). Sp: iota_rho * pd(lambdam1) * ee^{rank lambdam1}; OOdd: iota.
// No formula is available for OEven.
inline Sign central_sign(const Irrep& p, const SignConfig& cfg) {
    switch (p.group.kind) {
        case GroupKind::Sp:
            return p.rho.iota_rho() * p.lambdam1.pd() *
                   sign_pow(cfg.ee, p.lambdam1.rank());
        case GroupKind::OOdd:
            return *p.iota;
        case GroupKind::OEven:
            throw UnsupportedOperation("central_sign: unavailable for even orthogonal groups");
    }
    throw std::logic_error("central_sign: bad kind");
}

// Alvis-Curtis duality on the parametrization: dual both symbols, transpose
// every rho part; group and iota are untouched.
inline Irrep alvis_curtis(const Irrep& p) {
    Irrep q = p;
    q.lambda1 = ac_dual(p.lambda1);
    q.lambdam1 = ac_dual(p.lambdam1);
    RhoDatum r;
    for (const auto& [id, l] : p.rho.labels())
        r.declare(l);
    for (const auto& [id, part] : p.rho.parts())
        r.set_part(id, part.transpose());
    r.set_cuspidal_flag(p.rho.cuspidal_flag());
    q.rho = r;
    return q;
}

namespace detail {

// All rho data over the alphabet with weighted size exactly w2/2 where
// w2 = 2|rho|; partitions optionally restricted to unitary labels.
inline void rho_assignments(const std::vector<OrbitLabel>& alphabet, std::size_t i,
                            int budget2, RhoDatum cur, bool unitary_only,
                            std::vector<RhoDatum>& out) {
    if (i == alphabet.size()) {
        if (cur.size_integral())
            out.push_back(std::move(cur));
        return;
    }
    const OrbitLabel& l = alphabet[i];
    bool usable = !unitary_only || l.unitary;
    int maxsz = usable ? budget2 / l.card : 0;
    for (int sz = 0; sz <= maxsz; ++sz) {
        for (const auto& part : enumerate_partitions(sz)) {
            if (sz > 0 && part.empty())
                continue;
            RhoDatum next = cur;
            if (sz > 0)
                next.set_part(l.id, part);
            rho_assignments(alphabet, i + 1, budget2 - l.card * sz, next,
                            unitary_only, out);
        }
    }
}

inline std::vector<RhoDatum> enumerate_rho(const std::vector<OrbitLabel>& alphabet,
                                           int max_size, bool unitary_only,
                                           bool cuspidal_flag) {
    RhoDatum base;
    for (const auto& l : alphabet)
        base.declare(l);
    base.set_cuspidal_flag(cuspidal_flag);
    std::vector<RhoDatum> out;
    rho_assignments(alphabet, 0, 2 * max_size, base, unitary_only, out);
    return out;
}

} // namespace detail

inline constexpr int kIrrepRankCap = 12;

// Complete listing of representations of g. In quadratic-unipotent mode rho
// is empty; otherwise rho runs over the supplied orbit alphabet.
inline std::vector<Irrep> enumerate_irreps(const GroupTag& g, bool quadratic_unipotent_only,
                                           const std::vector<OrbitLabel>& alphabet = {},
                                           int cap = kIrrepRankCap) {
    if (g.n > cap)
        throw std::length_error("enumerate_irreps: rank exceeds cap");
    if (g.kind != GroupKind::Sp && !g.eps)
        throw std::invalid_argument("enumerate_irreps: orthogonal kind requires eps");

    std::vector<RhoDatum> rhos;
    if (quadratic_unipotent_only || alphabet.empty())
        rhos.push_back(RhoDatum{});
    else
        rhos = detail::enumerate_rho(alphabet, g.n, false, false);

    std::vector<Irrep> out;
    for (const auto& rho : rhos) {
        int m = g.n - rho.size();
        if (m < 0)
            continue;
        for (int r1 = 0; r1 <= m; ++r1) {
            int r2 = m - r1;
            std::vector<Symbol> l1s, l2s;
            auto even_union = [&](int r) {
                std::vector<Symbol> v = enumerate_family(r, DefectFamily::SPlus);
                for (auto& s : enumerate_family(r, DefectFamily::SMinus))
                    v.push_back(std::move(s));
                return v;
            };
            switch (g.kind) {
                case GroupKind::Sp:
                    l1s = enumerate_family(r1, DefectFamily::S);
                    l2s = even_union(r2);
                    break;
                case GroupKind::OEven:
                    l1s = even_union(r1);
                    l2s = even_union(r2);
                    break;
                case GroupKind::OOdd:
                    l1s = enumerate_family(r1, DefectFamily::S);
                    l2s = enumerate_family(r2, DefectFamily::S);
                    break;
            }
            for (const auto& a : l1s)
                for (const auto& b : l2s) {
                    Irrep p{g, rho, a, b, std::nullopt};
                    if (g.kind == GroupKind::OEven) {
                        if (rho.eps_rho() * a.pd() * b.pd() != *g.eps)
                            continue;
                        out.push_back(p);
                    } else if (g.kind == GroupKind::OOdd) {
                        p.iota = Sign::plus;
                        out.push_back(p);
                        p.iota = Sign::minus;
                        out.push_back(p);
                    } else {
                        out.push_back(p);
                    }
                }
        }
    }
    return out;
}

// Basic representations of g: cuspidal-shaped symbol parts and cuspidal rho
// over the unitary labels of the alphabet.
inline std::vector<Irrep> enumerate_basic_irreps(const GroupTag& g,
                                                 const std::vector<OrbitLabel>& alphabet = {},
                                                 int cap = kIrrepRankCap) {
    if (g.n > cap)
        throw std::length_error("enumerate_basic_irreps: rank exceeds cap");
    std::vector<RhoDatum> rhos;
    if (alphabet.empty())
        rhos.push_back(RhoDatum{});
    else
        rhos = detail::enumerate_rho(alphabet, g.n, true, true);

    auto basic_s = [](int maxrank) {
        std::vector<Symbol> v;
        for (int k = 0; k * (k + 1) <= maxrank; ++k)
            v.push_back(sp_cuspidal_symbol(k));
        return v;
    };
    auto basic_even = [](int maxrank) {
        std::vector<Symbol> v{Symbol({}, {})};
        if (maxrank >= 1) {
            v.push_back(Symbol({1}, {0}));
            v.push_back(Symbol({0}, {1}));
        }
        for (int k = 1; k * k <= maxrank; ++k) {
            v.push_back(even_cuspidal_symbol(k));
            v.push_back(even_cuspidal_symbol(k).transpose());
        }
        return v;
    };

    std::vector<Irrep> out;
    for (const auto& rho : rhos) {
        int m = g.n - rho.size();
        if (m < 0)
            continue;
        std::vector<Symbol> l1s, l2s;
        switch (g.kind) {
            case GroupKind::Sp:
                l1s = basic_s(m);
                l2s = basic_even(m);
                break;
            case GroupKind::OEven:
                l1s = basic_even(m);
                l2s = basic_even(m);
                break;
            case GroupKind::OOdd:
                l1s = basic_s(m);
                l2s = basic_s(m);
                break;
        }
        for (const auto& a : l1s)
            for (const auto& b : l2s) {
                if (a.rank() + b.rank() != m)
                    continue;
                Irrep p{g, rho, a, b, std::nullopt};
                if (g.kind == GroupKind::OEven) {
                    if (rho.eps_rho() * a.pd() * b.pd() != *g.eps)
                        continue;
                    out.push_back(p);
                } else if (g.kind == GroupKind::OOdd) {
                    p.iota = Sign::plus;
                    out.push_back(p);
                    p.iota = Sign::minus;
                    out.push_back(p);
                } else {
                    out.push_back(p);
                }
            }
    }
    return out;
}

} // namespace lusym
