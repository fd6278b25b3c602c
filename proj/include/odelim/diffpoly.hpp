#ifndef ODELIM_DIFFPOLY_HPP
#define ODELIM_DIFFPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "odelim/coefficient.hpp"
#include "odelim/errors.hpp"
#include "odelim/multipoly.hpp"

namespace odelim {

// One derivative of one unknown or excitation: x^(order).
struct DerivTerm {
    std::string func;
    int order = 0;

    bool operator==(const DerivTerm& o) const { return func == o.func && order == o.order; }
    bool operator<(const DerivTerm& o) const {
        if (func != o.func) return func < o.func;
        return order < o.order;
    }

    // `x`, `x'`, `x''`, `x^(3)`, ...
    std::string render() const {
        if (order == 0) return func;
        if (order == 1) return func + "'";
        if (order == 2) return func + "''";
        return func + "^(" + std::to_string(order) + ")";
    }

    // Encoding used when a differential polynomial is flattened into a
    // MultiPoly; '@' cannot occur in parsed identifiers.
    std::string atom_name() const { return func + "@" + std::to_string(order); }

    static std::optional<DerivTerm> from_atom_name(const std::string& atom) {
        auto pos = atom.find('@');
        if (pos == std::string::npos) return std::nullopt;
        return DerivTerm{atom.substr(0, pos), std::stoi(atom.substr(pos + 1))};
    }
};

// Power product of derivative terms; empty product is 1. Factors sorted by
// (func, order) with positive exponents.
class DiffMono {
public:
    using Factors = std::vector<std::pair<DerivTerm, int>>;

    DiffMono() = default;
    explicit DiffMono(Factors f) : factors_(std::move(f)) { normalize(); }

    static DiffMono one() { return DiffMono(); }
    static DiffMono of(const DerivTerm& t, int exp = 1) {
        DiffMono m;
        if (exp > 0) m.factors_.push_back({t, exp});
        return m;
    }

    bool is_one() const { return factors_.empty(); }
    const Factors& factors() const { return factors_; }

    int degree_of(const DerivTerm& t) const {
        for (const auto& [u, e] : factors_)
            if (u == t) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [u, e] : factors_) d += e;
        return d;
    }

    DiffMono times(const DiffMono& o) const {
        DiffMono r;
        auto i = factors_.begin();
        auto j = o.factors_.begin();
        while (i != factors_.end() && j != o.factors_.end()) {
            if (i->first < j->first) {
                r.factors_.push_back(*i++);
            } else if (j->first < i->first) {
                r.factors_.push_back(*j++);
            } else {
                r.factors_.push_back({i->first, i->second + j->second});
                ++i;
                ++j;
            }
        }
        r.factors_.insert(r.factors_.end(), i, factors_.end());
        r.factors_.insert(r.factors_.end(), j, o.factors_.end());
        return r;
    }

    // Remove one power of t; nullopt when t does not occur.
    std::optional<DiffMono> without(const DerivTerm& t, int exp) const {
        DiffMono r;
        bool found = false;
        for (const auto& [u, e] : factors_) {
            if (u == t) {
                if (e < exp) return std::nullopt;
                found = true;
                if (e > exp) r.factors_.push_back({u, e - exp});
            } else {
                r.factors_.push_back({u, e});
            }
        }
        if (!found && exp > 0) return std::nullopt;
        return r;
    }

    static int lex_cmp(const DiffMono& x, const DiffMono& y) {
        auto i = x.factors_.begin();
        auto j = y.factors_.begin();
        while (i != x.factors_.end() || j != y.factors_.end()) {
            if (i == x.factors_.end()) return -1;
            if (j == y.factors_.end()) return 1;
            if (i->first < j->first) return 1;
            if (j->first < i->first) return -1;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i;
            ++j;
        }
        return 0;
    }

    bool operator==(const DiffMono& o) const { return factors_ == o.factors_; }
    bool operator<(const DiffMono& o) const { return lex_cmp(*this, o) < 0; }

private:
    void normalize() {
        std::sort(factors_.begin(), factors_.end());
        Factors merged;
        for (auto& [u, e] : factors_) {
            if (!merged.empty() && merged.back().first == u)
                merged.back().second += e;
            else
                merged.push_back({u, e});
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& p) { return p.second == 0; }),
                     merged.end());
        factors_ = std::move(merged);
    }

    Factors factors_;
};

// Polynomial in derivative terms with exact rational-function coefficients.
// Immutable in use: every operation returns a fresh value.
class DiffPoly {
public:
    using Terms = std::map<DiffMono, Coefficient>;

    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly constant(Coefficient c) {
        DiffPoly p;
        if (!c.is_zero()) p.terms_[DiffMono::one()] = std::move(c);
        return p;
    }
    static DiffPoly from_int(Int v) { return constant(Coefficient::from_int(std::move(v))); }
    static DiffPoly var(const std::string& func, int order = 0) {
        DiffPoly p;
        p.terms_[DiffMono::of({func, order})] = Coefficient::one();
        return p;
    }
    static DiffPoly term(DiffMono m, Coefficient c) {
        DiffPoly p;
        if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // True when no derivative term occurs (constant-only polynomial).
    bool is_coefficient_only() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Coefficient constant_coefficient() const {
        auto it = terms_.find(DiffMono::one());
        return it == terms_.end() ? Coefficient::zero() : it->second;
    }

    size_t term_count() const { return terms_.size(); }

    std::set<DerivTerm> derivative_terms() const {
        std::set<DerivTerm> r;
        for (const auto& [m, c] : terms_)
            for (const auto& [u, e] : m.factors()) r.insert(u);
        return r;
    }

    std::set<std::string> functions() const {
        std::set<std::string> r;
        for (const auto& [m, c] : terms_)
            for (const auto& [u, e] : m.factors()) r.insert(u.func);
        return r;
    }

    int max_order_of(const std::string& func) const {
        int best = -1;
        for (const auto& [m, c] : terms_)
            for (const auto& [u, e] : m.factors())
                if (u.func == func) best = std::max(best, u.order);
        return best;  // -1 when func absent
    }

    int degree_in(const DerivTerm& t) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(t));
        return d;
    }

    bool contains(const DerivTerm& t) const {
        for (const auto& [m, c] : terms_)
            if (m.degree_of(t) > 0) return true;
        return false;
    }

    DiffPoly operator-() const {
        DiffPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    DiffPoly operator+(const DiffPoly& o) const {
        DiffPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    DiffPoly operator-(const DiffPoly& o) const {
        DiffPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    DiffPoly operator*(const DiffPoly& o) const {
        DiffPoly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
        return r;
    }

    DiffPoly scaled(const Coefficient& k) const {
        DiffPoly r;
        if (k.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
        return r;
    }

    DiffPoly pow(int e) const {
        DiffPoly r = from_int(1);
        DiffPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    static int cmp(const DiffPoly& a, const DiffPoly& b) {
        auto i = a.terms_.rbegin();
        auto j = b.terms_.rbegin();
        while (i != a.terms_.rend() && j != b.terms_.rend()) {
            int c = DiffMono::lex_cmp(i->first, j->first);
            if (c != 0) return c;
            c = Coefficient::cmp(i->second, j->second);
            if (c != 0) return c;
            ++i;
            ++j;
        }
        if (i != a.terms_.rend()) return 1;
        if (j != b.terms_.rend()) return -1;
        return 0;
    }

    // Formal time derivative. Constants differentiate to zero, so each term is
    // handled by the product rule over its derivative-term factors.
    DiffPoly differentiate() const {
        DiffPoly r;
        for (const auto& [m, c] : terms_) {
            const auto& fs = m.factors();
            for (size_t k = 0; k < fs.size(); ++k) {
                const auto& [u, e] = fs[k];
                // d/dt u^e = e * u^(e-1) * u'
                DiffMono rest = *m.without(u, e);
                DiffMono bumped = rest.times(DiffMono::of(u, e - 1))
                                      .times(DiffMono::of({u.func, u.order + 1}));
                r.add_term(bumped, c * Coefficient::from_int(e));
            }
        }
        return r;
    }

    DiffPoly differentiate(int k) const {
        DiffPoly r = *this;
        for (int i = 0; i < k; ++i) r = r.differentiate();
        return r;
    }

    // Formal partial derivative with respect to one derivative term.
    DiffPoly partial(const DerivTerm& t) const {
        DiffPoly r;
        for (const auto& [m, c] : terms_) {
            int e = m.degree_of(t);
            if (e == 0) continue;
            DiffMono rest = *m.without(t, e);
            r.add_term(rest.times(DiffMono::of(t, e - 1)), c * Coefficient::from_int(e));
        }
        return r;
    }

    // Coefficient (as a polynomial) of t^power, terms with other powers of t dropped.
    DiffPoly coefficient_of(const DerivTerm& t, int power) const {
        DiffPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.degree_of(t) != power) continue;
            r.add_term(*m.without(t, power), c);
        }
        return r;
    }

    // View as univariate in t: power -> coefficient polynomial.
    std::map<int, DiffPoly> collect(const DerivTerm& t) const {
        std::map<int, DiffPoly> r;
        for (const auto& [m, c] : terms_) {
            int e = m.degree_of(t);
            r[e].add_term(*m.without(t, e), c);
        }
        return r;
    }

    // Replace t by replacement/divisor, power by power:
    // result = divisor^d * this  with  t := replacement/divisor,  d = deg_t(this).
    DiffPoly substitute(const DerivTerm& t, const DiffPoly& replacement, const DiffPoly& divisor) const {
        if (divisor.is_zero()) throw DivisionByZero("zero divisor in substitution");
        int d = degree_in(t);
        if (d == 0) return *this;
        auto parts = collect(t);
        DiffPoly acc;
        for (const auto& [e, coeff] : parts) {
            acc = acc + coeff * replacement.pow(e) * divisor.pow(d - e);
        }
        return acc;
    }

    Rat evaluate(const std::map<std::string, Rat>& constants,
                 const std::map<DerivTerm, Rat>& values) const {
        Rat acc = 0;
        for (const auto& [m, c] : terms_) {
            Rat t = c.evaluate(constants);
            for (const auto& [u, e] : m.factors()) {
                auto it = values.find(u);
                if (it == values.end()) throw UnboundConstant(u.render());
                for (int k = 0; k < e; ++k) t *= it->second;
            }
            acc += t;
        }
        return acc;
    }

    void add_term(const DiffMono& m, const Coefficient& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Flattening to/from MultiPoly (derivative terms become atoms). Requires all
// coefficients to be polynomial (denominator 1); used after clearing
// denominators.

inline MultiPoly to_multipoly(const DiffPoly& p) {
    MultiPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (!c.den().is_one()) throw Error("flattening requires polynomial coefficients");
        Mono base = Mono::one();
        for (const auto& [u, e] : m.factors()) base = base.times(Mono::atom(u.atom_name(), e));
        for (const auto& [cm, cc] : c.num().terms()) r.add_term(base.times(cm), cc);
    }
    return r;
}

inline DiffPoly from_multipoly(const MultiPoly& p) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        DiffMono dm;
        Mono cm = Mono::one();
        for (const auto& [a, e] : m.factors()) {
            if (auto t = DerivTerm::from_atom_name(a))
                dm = dm.times(DiffMono::of(*t, e));
            else
                cm = cm.times(Mono::atom(a, e));
        }
        r.add_term(dm, Coefficient(MultiPoly::term(cm, c), MultiPoly::one()));
    }
    return r;
}

// Multiply through by the lcm of coefficient denominators: returns a
// polynomial-coefficient multiple of p.
inline DiffPoly clear_denominators(const DiffPoly& p) {
    MultiPoly l = MultiPoly::one();
    for (const auto& [m, c] : p.terms()) l = poly_lcm(l, c.den());
    if (l.is_one()) return p;
    return p.scaled(Coefficient(l, MultiPoly::one()));
}

// Clear denominators, divide out the gcd of all coefficient numerators, and
// normalize the sign of the highest term. The canonical integral
// representative of p up to a nonzero coefficient factor.
inline DiffPoly primitive_part(const DiffPoly& p) {
    if (p.is_zero()) return p;
    DiffPoly q = clear_denominators(p);
    MultiPoly g;
    for (const auto& [m, c] : q.terms()) {
        g = poly_gcd(g, c.num());
        if (g.is_one()) break;
    }
    DiffPoly r;
    for (const auto& [m, c] : q.terms())
        r.add_term(m, Coefficient(*divide_exact(c.num(), g), MultiPoly::one()));
    // Highest monomial gets a positive leading integer coefficient.
    const auto& top = r.terms().rbegin()->second;
    if (top.num().leading_term().second < 0) r = -r;
    return r;
}

}  // namespace odelim

#endif  // ODELIM_DIFFPOLY_HPP
