#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lusym/rep.hpp"

namespace lusym {

struct FamilyMismatchError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ScanCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WittTower { sp, o_even_plus, o_even_minus, o_odd_plus, o_odd_minus };

inline std::string tower_name(WittTower t) {
    switch (t) {
        case WittTower::sp: return "Sp";
        case WittTower::o_even_plus: return "O+even";
        case WittTower::o_even_minus: return "O-even";
        case WittTower::o_odd_plus: return "O+odd";
        case WittTower::o_odd_minus: return "O-odd";
    }
    return "?";
}

struct ThetaEdge {
    Irrep source;
    Irrep target;
    Sign eps; // dual-pair discriminant
};

// Membership in B^eps: lam is a symplectic-side symbol (family S), lamp an
// even-orthogonal one (family S+ for eps = +, S- for eps = -). The dominance
// conditions run over transposed bipartition components and the defect obeys
//   def(lamp) = -def(lam) + eps*1.
inline bool in_B(Sign eps, const Symbol& lam, const Symbol& lamp) {
    if (lam.family() != DefectFamily::S)
        throw FamilyMismatchError("in_B: first symbol must have defect 1 (mod 4)");
    DefectFamily want = eps == Sign::plus ? DefectFamily::SPlus : DefectFamily::SMinus;
    if (lamp.family() != want)
        throw FamilyMismatchError("in_B: second symbol is in the wrong defect family");

    if (lamp.defect() != -lam.defect() + to_int(eps))
        return false;
    Bipartition a = lam.upsilon(), b = lamp.upsilon();
    if (eps == Sign::plus) {
        return shift_dominates(b.lower.transpose(), a.upper.transpose()) &&
               shift_dominates(a.lower.transpose(), b.upper.transpose());
    }
    return shift_dominates(b.upper.transpose(), a.lower.transpose()) &&
           shift_dominates(a.upper.transpose(), b.lower.transpose());
}

namespace detail {

inline Sign family_sign(const Symbol& s) {
    auto f = s.family();
    if (f == DefectFamily::SPlus) return Sign::plus;
    if (f == DefectFamily::SMinus) return Sign::minus;
    throw FamilyMismatchError("family_sign: symbol is not in an even family");
}

inline std::vector<Symbol> even_families(int r) {
    if (r < 0) return {};
    std::vector<Symbol> v = enumerate_family(r, DefectFamily::SPlus);
    for (auto& s : enumerate_family(r, DefectFamily::SMinus))
        v.push_back(std::move(s));
    return v;
}

inline void require_valid(const Irrep& p, const char* where) {
    auto v = validate(p);
    if (!v.ok())
        throw std::invalid_argument(std::string(where) + ": invalid representation: " +
                                    v.violations.front());
}

} // namespace detail

// All targets of p in the group g across the dual pair (p.group.kind,
// g.kind). Deterministic order.
inline std::vector<Irrep> theta_targets(const Irrep& p, const GroupTag& g,
                                        const SignConfig& cfg) {
    detail::require_valid(p, "theta_targets");
    std::vector<Irrep> out;
    const GroupKind sk = p.group.kind, tk = g.kind;

    if (sk == GroupKind::Sp && tk == GroupKind::OEven) {
        if (!g.eps)
            throw std::invalid_argument("theta_targets: OEven target requires eps");
        int m = g.n - p.rho.size() - p.lambdam1.rank();
        for (const auto& cand : detail::even_families(m)) {
            if (!in_B(detail::family_sign(cand), p.lambda1, cand))
                continue;
            if (p.rho.eps_rho() * cand.pd() * p.lambdam1.pd() != *g.eps)
                continue;
            out.push_back(Irrep{g, p.rho, cand, p.lambdam1, std::nullopt});
        }
        return out;
    }

    if (sk == GroupKind::Sp && tk == GroupKind::OOdd) {
        if (!g.eps)
            throw std::invalid_argument("theta_targets: OOdd target requires eps");
        // lambda'_{-1} = lambda_1; lambda'_1 lifts lambda_{-1}, sgn-twisted
        // first when eps'*eps_rho = -.
        Symbol lift = (*g.eps * p.rho.eps_rho() == Sign::plus)
                          ? p.lambdam1
                          : p.lambdam1.transpose();
        int m = g.n - p.rho.size() - p.lambda1.rank();
        if (m < 0)
            return out;
        Sign iprime = p.rho.iota_tilde(cfg) * p.lambdam1.pd() *
                      sign_pow(cfg.ee, p.lambda1.rank());
        for (const auto& cand : enumerate_family(m, DefectFamily::S)) {
            if (!in_B(detail::family_sign(lift), cand, lift))
                continue;
            out.push_back(Irrep{g, p.rho.minus(), cand, p.lambda1, iprime});
        }
        return out;
    }

    if (sk == GroupKind::OEven && tk == GroupKind::Sp) {
        int m = g.n - p.rho.size() - p.lambdam1.rank();
        if (m < 0)
            return out;
        for (const auto& cand : enumerate_family(m, DefectFamily::S)) {
            if (!in_B(detail::family_sign(p.lambda1), cand, p.lambda1))
                continue;
            out.push_back(Irrep{g, p.rho, cand, p.lambdam1, std::nullopt});
        }
        return out;
    }

    if (sk == GroupKind::OOdd && tk == GroupKind::Sp) {
        // Mirror of the (Sp, OOdd) conditions with p on the odd side.
        RhoDatum target_rho = p.rho.minus();
        int m = g.n - target_rho.size() - p.lambdam1.rank();
        Sign twist = *p.group.eps * p.rho.eps_rho();
        Sign need_iota = target_rho.iota_tilde(cfg) * sign_pow(cfg.ee, p.lambdam1.rank());
        for (const auto& cand : detail::even_families(m)) {
            Symbol lift = twist == Sign::plus ? cand : cand.transpose();
            if (!in_B(detail::family_sign(lift), p.lambda1, lift))
                continue;
            if (*p.iota != need_iota * cand.pd())
                continue;
            out.push_back(Irrep{g, target_rho, p.lambdam1, cand, std::nullopt});
        }
        return out;
    }

    throw std::invalid_argument("theta_targets: not a symplectic-orthogonal dual pair");
}

inline GroupTag tower_group(WittTower t, int n) {
    switch (t) {
        case WittTower::sp: return GroupTag::sp(n);
        case WittTower::o_even_plus: return GroupTag::o_even(n, Sign::plus);
        case WittTower::o_even_minus: return GroupTag::o_even(n, Sign::minus);
        case WittTower::o_odd_plus: return GroupTag::o_odd(n, Sign::plus);
        case WittTower::o_odd_minus: return GroupTag::o_odd(n, Sign::minus);
    }
    throw std::logic_error("tower_group: bad tower");
}

struct FirstOccurrence {
    int n_first = 0;
    int bold_n = 0; // n - n_first
};

// Smallest tower level with a nonempty theta target set.
inline FirstOccurrence first_occurrence(const Irrep& p, WittTower t,
                                        const SignConfig& cfg, int cap = -1) {
    bool src_sp = p.group.kind == GroupKind::Sp;
    if (src_sp == (t == WittTower::sp))
        throw std::invalid_argument("first_occurrence: tower is not dual to the group");
    if (cap < 0)
        cap = 2 * p.group.n + 4;
    for (int n = 0; n <= cap; ++n) {
        if (t == WittTower::o_even_minus && n == 0)
            continue; // O-_0 does not exist
        if (!theta_targets(p, tower_group(t, n), cfg).empty())
            return {n, p.group.n - n};
    }
    throw ScanCapExceeded("first_occurrence: no occurrence up to the scan cap");
}

struct ConservationIdentity {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline int floor_div2(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// floor(n + h) for half-integral h.
inline int floor_plus(int n, HalfInt h) { return floor_div2(2 * n + h.twice); }

inline bool same_pair(int a1, int a2, int b1, int b2) {
    return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

inline std::string pair_str(int a, int b) {
    std::ostringstream os;
    os << "{" << a << "," << b << "}";
    return os.str();
}

} // namespace detail

// Closed-form first-occurrence identities for a basic representation,
// compared against direct tower scans.
inline std::vector<ConservationIdentity> conservation_check_basic(const Irrep& p,
                                                                  const SignConfig& cfg) {
    if (!is_basic(p))
        throw NotBasicError("conservation_check_basic: representation is not basic");
    auto [k, h] = kh_params(p);
    int n = p.group.n;
    std::vector<ConservationIdentity> out;
    auto emit = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok, detail});
    };

    if (p.group.kind == GroupKind::Sp) {
        int np = first_occurrence(p, WittTower::o_even_plus, cfg).n_first;
        int nm = first_occurrence(p, WittTower::o_even_minus, cfg).n_first;
        int ki = k.twice / 2;
        emit("cus1-even", detail::same_pair(np, nm, n - ki, n + ki + 1),
             "{n+,n-}=" + detail::pair_str(np, nm) + " expected " +
                 detail::pair_str(n - ki, n + ki + 1));
        Irrep pc = conj_c(p);
        int npc = first_occurrence(pc, WittTower::o_even_plus, cfg).n_first;
        int nmc = first_occurrence(pc, WittTower::o_even_minus, cfg).n_first;
        emit("cus1-even-conj", np == npc && nm == nmc,
             "n^eps(pi)=" + detail::pair_str(np, nm) + " n^eps(pi^c)=" +
                 detail::pair_str(npc, nmc));
        int op = first_occurrence(p, WittTower::o_odd_plus, cfg).n_first;
        int om = first_occurrence(p, WittTower::o_odd_minus, cfg).n_first;
        emit("cus1-odd",
             detail::same_pair(op, om, detail::floor_plus(n, h),
                               detail::floor_plus(n, HalfInt{-h.twice})),
             "{n+,n-}=" + detail::pair_str(op, om) + " expected " +
                 detail::pair_str(detail::floor_plus(n, h),
                                  detail::floor_plus(n, HalfInt{-h.twice})));
        Sign formula = p.rho.iota_rho() * parity_sign(h.floor_abs()) *
                       sign_pow(cfg.ee, h.ceil_abs());
        emit("oddg-central", central_sign(p, cfg) == formula,
             std::string("pi(-I)=") + sign_char(central_sign(p, cfg)) +
                 " formula=" + sign_char(formula));
    } else if (p.group.kind == GroupKind::OEven) {
        int np = first_occurrence(p, WittTower::sp, cfg).n_first;
        int ns = first_occurrence(sgn_twist(p), WittTower::sp, cfg).n_first;
        emit("cus2-even",
             detail::same_pair(np, ns, detail::floor_plus(n, k),
                               detail::floor_plus(n, HalfInt{-k.twice})),
             "{n(pi),n(sgn pi)}=" + detail::pair_str(np, ns) + " expected " +
                 detail::pair_str(detail::floor_plus(n, k),
                                  detail::floor_plus(n, HalfInt{-k.twice})));
        int nc = first_occurrence(conj_c(p), WittTower::sp, cfg).n_first;
        emit("cus2-even-conj", np == nc,
             "n(pi)=" + std::to_string(np) + " n(pi^c)=" + std::to_string(nc));
    } else {
        int ki = k.twice / 2;
        int np = first_occurrence(p, WittTower::sp, cfg).n_first;
        Irrep ps = sgn_twist(p);
        int ns = first_occurrence(ps, WittTower::sp, cfg).n_first;
        emit("cus2-odd", detail::same_pair(np, ns, n + ki + 1, n - ki),
             "{n(pi),n(sgn pi)}=" + detail::pair_str(np, ns) + " expected " +
                 detail::pair_str(n + ki + 1, n - ki));
        // Both odd towers act through the same symplectic tower scan; t4 is
        // the statement that the answer does not depend on the ambient
        // discriminant label.
        Irrep flipped = p;
        flipped.group.eps = -*p.group.eps;
        int nf = first_occurrence(flipped, WittTower::sp, cfg).n_first;
        emit("t4", np == nf,
             "n^+=" + std::to_string(np) + " n^-=" + std::to_string(nf));
        Sign crit = p.rho.iota_tilde(cfg) * parity_sign(ki + 1);
        int expected = (*p.iota == crit) ? n + ki + 1 : n - ki;
        emit("oddg-first", np == expected,
             "n(pi)=" + std::to_string(np) + " expected " + std::to_string(expected));
    }
    return out;
}

// Lusztig-side data: the image of a representation under the canonical
// correspondence, with the group forgotten.
struct LusztigTuple {
    RhoDatum rho;
    Symbol l1;
    Symbol lm1;
    std::optional<Sign> iota;

    bool operator==(const LusztigTuple& o) const {
        return rho == o.rho && l1 == o.l1 && lm1 == o.lm1 && iota == o.iota;
    }
};

inline LusztigTuple tuple_of(const Irrep& p) {
    return {p.rho, p.lambda1, p.lambdam1, p.iota};
}

inline Irrep irrep_from_tuple(const GroupTag& g, const LusztigTuple& t) {
    return Irrep{g, t.rho, t.l1, t.lm1, t.iota};
}

struct TaggedTuple {
    GroupTag group;
    LusztigTuple data;

    bool operator==(const TaggedTuple&) const = default;
};

struct FirstLift {
    int rank = 0;
    std::vector<Symbol> symbols;
};

// First theta lift of a symplectic-family symbol into the even-orthogonal
// families: smallest rank with a B-partner, both families collected.
inline FirstLift first_lift_to_even(const Symbol& lam, int cap = -1) {
    if (cap < 0)
        cap = 2 * lam.rank() + 4;
    for (int r = 0; r <= cap; ++r) {
        std::vector<Symbol> hits;
        for (const auto& cand : detail::even_families(r))
            if (in_B(detail::family_sign(cand), lam, cand))
                hits.push_back(cand);
        if (!hits.empty())
            return {r, hits};
    }
    throw ScanCapExceeded("first_lift_to_even: no lift up to the scan cap");
}

// First theta lift of an even-orthogonal symbol into the symplectic family.
inline FirstLift first_lift_to_sp(const Symbol& lamp, int cap = -1) {
    if (cap < 0)
        cap = 2 * lamp.rank() + 4;
    Sign fam = detail::family_sign(lamp);
    for (int r = 0; r <= cap; ++r) {
        std::vector<Symbol> hits;
        for (const auto& cand : enumerate_family(r, DefectFamily::S))
            if (in_B(fam, cand, lamp))
                hits.push_back(cand);
        if (!hits.empty())
            return {r, hits};
    }
    throw ScanCapExceeded("first_lift_to_sp: no lift up to the scan cap");
}

// The Lusztig-side first-lift functor Theta^*. `target_eps` selects the odd
// tower for (Sp, OOdd); when absent the tower(s) of smallest first
// occurrence are taken.
inline std::vector<TaggedTuple> theta_star(const LusztigTuple& t,
                                              const GroupTag& source,
                                              GroupKind target_kind,
                                              std::optional<Sign> target_eps,
                                              const SignConfig& cfg) {
    std::vector<TaggedTuple> out;
    const GroupKind sk = source.kind;

    if (sk == GroupKind::Sp && target_kind == GroupKind::OEven) {
        FirstLift fl = first_lift_to_even(t.l1);
        for (const auto& s : fl.symbols) {
            Sign eps = t.rho.eps_rho() * s.pd() * t.lm1.pd();
            if (target_eps && eps != *target_eps)
                continue;
            int n = t.rho.size() + s.rank() + t.lm1.rank();
            out.push_back({GroupTag::o_even(n, eps), {t.rho, s, t.lm1, std::nullopt}});
        }
        return out;
    }

    if (sk == GroupKind::OEven && target_kind == GroupKind::Sp) {
        FirstLift fl = first_lift_to_sp(t.l1);
        for (const auto& s : fl.symbols) {
            int n = t.rho.size() + s.rank() + t.lm1.rank();
            out.push_back({GroupTag::sp(n), {t.rho, s, t.lm1, std::nullopt}});
        }
        return out;
    }

    if (sk == GroupKind::Sp && target_kind == GroupKind::OOdd) {
        auto lift_at = [&](Sign eps) {
            Symbol pre = (eps * t.rho.eps_rho() == Sign::plus) ? t.lm1
                                                               : t.lm1.transpose();
            return first_lift_to_sp(pre);
        };
        std::vector<Sign> towers;
        if (target_eps) {
            towers.push_back(*target_eps);
        } else {
            FirstLift a = lift_at(Sign::plus), b = lift_at(Sign::minus);
            int na = t.rho.size() + a.rank + t.l1.rank();
            int nb = t.rho.size() + b.rank + t.l1.rank();
            if (na <= nb) towers.push_back(Sign::plus);
            if (nb <= na) towers.push_back(Sign::minus);
        }
        Sign iprime = t.rho.iota_tilde(cfg) * t.lm1.pd() * sign_pow(cfg.ee, t.l1.rank());
        for (Sign eps : towers) {
            FirstLift fl = lift_at(eps);
            int n = t.rho.size() + fl.rank + t.l1.rank();
            for (const auto& s : fl.symbols)
                out.push_back({GroupTag::o_odd(n, eps), {t.rho.minus(), s, t.l1, iprime}});
        }
        return out;
    }

    if (sk == GroupKind::OOdd && target_kind == GroupKind::Sp) {
        if (!source.eps)
            throw std::invalid_argument("theta_star: OOdd source requires eps");
        if (!t.iota)
            throw std::invalid_argument("theta_star: OOdd data requires iota");
        // The first lift of the representation, not of the bare symbol: iota
        // picks which of the two occurrence indices is realized, through the
        // parity of the lifted defect.
        RhoDatum rm = t.rho.minus();
        Sign need_pd = *t.iota * rm.iota_tilde(cfg) * sign_pow(cfg.ee, t.lm1.rank());
        Sign twist = *source.eps * t.rho.eps_rho();
        int cap = 2 * t.l1.rank() + 4;
        for (int r = 0; r <= cap && out.empty(); ++r) {
            for (const auto& s : detail::even_families(r)) {
                if (s.pd() != need_pd)
                    continue;
                if (!in_B(detail::family_sign(s), t.l1, s))
                    continue;
                Symbol target_lm1 = twist == Sign::plus ? s : s.transpose();
                int n = rm.size() + t.lm1.rank() + target_lm1.rank();
                out.push_back({GroupTag::sp(n), {rm, t.lm1, target_lm1, std::nullopt}});
            }
        }
        return out;
    }

    throw std::invalid_argument("theta_star: unsupported dual pair");
}

} // namespace lusym
