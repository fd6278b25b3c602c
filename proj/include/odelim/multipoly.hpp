#ifndef ODELIM_MULTIPOLY_HPP
#define ODELIM_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "odelim/errors.hpp"
#include "odelim/rational.hpp"

namespace odelim {

// Power product over named atoms. Factors are kept sorted by atom name with
// strictly positive exponents; the empty product is 1.
class Mono {
public:
    using Factors = std::vector<std::pair<std::string, int>>;

    Mono() = default;
    explicit Mono(Factors f) : factors_(std::move(f)) { normalize(); }

    static Mono one() { return Mono(); }
    static Mono atom(const std::string& name, int exp = 1) {
        Mono m;
        if (exp > 0) m.factors_.push_back({name, exp});
        return m;
    }

    bool is_one() const { return factors_.empty(); }
    const Factors& factors() const { return factors_; }

    int degree_of(const std::string& atom) const {
        for (const auto& [a, e] : factors_)
            if (a == atom) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [a, e] : factors_) d += e;
        return d;
    }

    Mono times(const Mono& o) const {
        Mono r;
        r.factors_.reserve(factors_.size() + o.factors_.size());
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

    // Exact quotient this / o, or nullopt when some exponent would go negative.
    std::optional<Mono> divided_by(const Mono& o) const {
        Mono r;
        auto i = factors_.begin();
        auto j = o.factors_.begin();
        while (j != o.factors_.end()) {
            if (i == factors_.end() || j->first < i->first) return std::nullopt;
            if (i->first < j->first) {
                r.factors_.push_back(*i++);
                continue;
            }
            if (i->second < j->second) return std::nullopt;
            if (i->second > j->second) r.factors_.push_back({i->first, i->second - j->second});
            ++i;
            ++j;
        }
        r.factors_.insert(r.factors_.end(), i, factors_.end());
        return r;
    }

    // Lexicographic order: alphabetically earliest atom is most significant,
    // higher exponent wins. Total and compatible with multiplication.
    static int lex_cmp(const Mono& x, const Mono& y) {
        auto i = x.factors_.begin();
        auto j = y.factors_.begin();
        while (i != x.factors_.end() || j != y.factors_.end()) {
            if (i == x.factors_.end()) return -1;  // y has an extra (positive) exponent
            if (j == y.factors_.end()) return 1;
            if (i->first < j->first) return 1;  // x carries the earlier atom
            if (j->first < i->first) return -1;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i;
            ++j;
        }
        return 0;
    }

    bool operator==(const Mono& o) const { return factors_ == o.factors_; }
    bool operator<(const Mono& o) const { return lex_cmp(*this, o) < 0; }

private:
    void normalize() {
        std::sort(factors_.begin(), factors_.end());
        Factors merged;
        for (auto& [a, e] : factors_) {
            if (!merged.empty() && merged.back().first == a)
                merged.back().second += e;
            else
                merged.push_back({a, e});
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const auto& p) { return p.second == 0; }),
                     merged.end());
        factors_ = std::move(merged);
    }

    Factors factors_;
};

// Sparse multivariate polynomial over the integers. Used both for
// coefficient-field numerators/denominators (atoms are constant symbols) and,
// with derivative terms encoded as atoms, for whole-polynomial factor
// extraction during elimination.
class MultiPoly {
public:
    using Terms = std::map<Mono, Int>;

    MultiPoly() = default;
    explicit MultiPoly(Int c) {
        if (c != 0) terms_[Mono::one()] = std::move(c);
    }

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(Int(1)); }
    static MultiPoly constant(Int c) { return MultiPoly(std::move(c)); }
    static MultiPoly atom(const std::string& name, int exp = 1) {
        MultiPoly p;
        p.terms_[Mono::atom(name, exp)] = 1;
        return p;
    }
    static MultiPoly term(Mono m, Int c) {
        MultiPoly p;
        if (c != 0) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
    }

    // Only meaningful when is_constant().
    Int constant_value() const {
        if (terms_.empty()) return 0;
        return terms_.begin()->second;
    }

    std::set<std::string> atoms() const {
        std::set<std::string> r;
        for (const auto& [m, c] : terms_)
            for (const auto& [a, e] : m.factors()) r.insert(a);
        return r;
    }

    int degree_of(const std::string& atom) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of(atom));
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    size_t term_count() const { return terms_.size(); }

    const std::pair<const Mono, Int>& leading_term() const { return *terms_.rbegin(); }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
        return r;
    }

    MultiPoly times_int(const Int& k) const {
        MultiPoly r;
        if (k == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
        return r;
    }

    MultiPoly times_term(const Mono& m0, const Int& c0) const {
        MultiPoly r;
        if (c0 == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_[m.times(m0)] = c * c0;
        return r;
    }

    MultiPoly pow(int e) const {
        MultiPoly r = one();
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Deterministic total order, used to keep sets and logs reproducible.
    static int cmp(const MultiPoly& a, const MultiPoly& b) {
        auto i = a.terms_.rbegin();
        auto j = b.terms_.rbegin();
        while (i != a.terms_.rend() && j != b.terms_.rend()) {
            int c = Mono::lex_cmp(i->first, j->first);
            if (c != 0) return c;
            if (i->second != j->second) return i->second < j->second ? -1 : 1;
            ++i;
            ++j;
        }
        if (i != a.terms_.rend()) return 1;
        if (j != b.terms_.rend()) return -1;
        return 0;
    }

    // gcd of all integer coefficients, carrying the sign of the leading term.
    Int integer_content() const {
        if (terms_.empty()) return 0;
        Int g = 0;
        for (const auto& [m, c] : terms_) {
            g = int_gcd(g, c);
            if (g == 1) break;
        }
        if (leading_term().second < 0) g = -g;
        return g;
    }

    MultiPoly divided_by_int(const Int& k) const {
        MultiPoly r;
        for (const auto& [m, c] : terms_) {
            if (c % k != 0) throw Error("inexact integer division in polynomial");
            r.terms_[m] = c / k;
        }
        return r;
    }

    // View as univariate in `atom` with MultiPoly coefficients.
    std::map<int, MultiPoly> as_univariate(const std::string& atom) const {
        std::map<int, MultiPoly> r;
        for (const auto& [m, c] : terms_) {
            int d = m.degree_of(atom);
            Mono rest = *m.divided_by(Mono::atom(atom, d));
            r[d].add_term(rest, c);
        }
        return r;
    }

    static MultiPoly from_univariate(const std::string& atom, const std::map<int, MultiPoly>& coeffs) {
        MultiPoly r;
        for (const auto& [d, p] : coeffs)
            for (const auto& [m, c] : p.terms_) r.add_term(m.times(Mono::atom(atom, d)), c);
        return r;
    }

    Rat evaluate(const std::map<std::string, Rat>& assignment) const {
        Rat acc = 0;
        for (const auto& [m, c] : terms_) {
            Rat t(c);
            for (const auto& [a, e] : m.factors()) {
                auto it = assignment.find(a);
                if (it == assignment.end()) throw UnboundConstant(a);
                Rat base = it->second;
                for (int k = 0; k < e; ++k) t *= base;
            }
            acc += t;
        }
        return acc;
    }

    std::string render() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            bool neg = c < 0;
            Int a = neg ? Int(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string factors;
            for (const auto& [atom, e] : it->first.factors()) {
                if (!factors.empty()) factors += "*";
                factors += atom;
                if (e > 1) factors += "^" + std::to_string(e);
            }
            if (factors.empty()) {
                out += a.str();
            } else {
                if (a != 1) out += a.str() + "*";
                out += factors;
            }
        }
        return out;
    }

    void add_term(const Mono& m, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Exact division and gcd (primitive PRS).

// Exact quotient a / b, or nullopt when b does not divide a.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MultiPoly q;
    MultiPoly r = a;
    const auto& [ltb_m, ltb_c] = b.leading_term();
    while (!r.is_zero()) {
        const auto& [ltr_m, ltr_c] = r.leading_term();
        auto qm = ltr_m.divided_by(ltb_m);
        if (!qm) return std::nullopt;
        if (ltr_c % ltb_c != 0) return std::nullopt;
        Int qc = ltr_c / ltb_c;
        q.add_term(*qm, qc);
        r = r - b.times_term(*qm, qc);
    }
    return q;
}

namespace detail {

// Pseudo-remainder of f by g, both viewed as univariate in `atom`:
// lc(g)^(deg f - deg g + 1) * f  =  q*g + prem.
inline MultiPoly pseudo_rem_uni(const MultiPoly& f, const MultiPoly& g, const std::string& atom) {
    auto gu = g.as_univariate(atom);
    int dg = gu.rbegin()->first;
    const MultiPoly& lcg = gu.rbegin()->second;
    MultiPoly r = f;
    int e = f.degree_of(atom) - dg + 1;
    while (!r.is_zero()) {
        auto ru = r.as_univariate(atom);
        int dr = ru.rbegin()->first;
        if (dr < dg) break;
        const MultiPoly& lcr = ru.rbegin()->second;
        MultiPoly shift = MultiPoly::atom(atom, dr - dg);
        r = r * lcg - lcr * shift * g;
        --e;
    }
    for (int k = 0; k < e; ++k) r = r * lcg;
    return r;
}

}  // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Content of p w.r.t. `atom`: gcd of its univariate coefficients.
inline MultiPoly content_in(const MultiPoly& p, const std::string& atom) {
    MultiPoly c;
    for (const auto& [d, coeff] : p.as_univariate(atom)) {
        c = poly_gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

inline MultiPoly normalize_sign(const MultiPoly& p) {
    if (p.is_zero()) return p;
    if (p.leading_term().second < 0) return -p;
    return p;
}

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    Int ia = a.integer_content();
    Int ib = b.integer_content();
    Int ic = int_gcd(ia, ib);
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(ic < 0 ? Int(-ic) : ic);

    auto atoms_a = a.atoms();
    auto atoms_b = b.atoms();
    std::string v = std::max(*atoms_a.rbegin(), *atoms_b.rbegin());

    MultiPoly pa = a.divided_by_int(ia);
    MultiPoly pb = b.divided_by_int(ib);
    if (pa.degree_of(v) == 0) {
        MultiPoly g = poly_gcd(pa, content_in(pb, v));
        return normalize_sign(g.times_int(ic < 0 ? Int(-ic) : ic));
    }
    if (pb.degree_of(v) == 0) {
        MultiPoly g = poly_gcd(content_in(pa, v), pb);
        return normalize_sign(g.times_int(ic < 0 ? Int(-ic) : ic));
    }

    MultiPoly ca = content_in(pa, v);
    MultiPoly cb = content_in(pb, v);
    MultiPoly cont = poly_gcd(ca, cb);
    MultiPoly F = *divide_exact(pa, ca);
    MultiPoly G = *divide_exact(pb, cb);
    if (F.degree_of(v) < G.degree_of(v)) std::swap(F, G);

    // Primitive PRS: take the primitive part after every pseudo-remainder to
    // keep coefficient growth in check.
    while (true) {
        MultiPoly r = detail::pseudo_rem_uni(F, G, v);
        if (r.is_zero()) break;
        if (r.degree_of(v) == 0) {
            G = MultiPoly::one();
            break;
        }
        Int rc = r.integer_content();
        r = r.divided_by_int(rc);
        MultiPoly rcont = content_in(r, v);
        if (!rcont.is_one()) r = *divide_exact(r, rcont);
        F = std::move(G);
        G = std::move(r);
    }
    Int gc = G.integer_content();
    G = G.divided_by_int(gc);
    MultiPoly gcont = content_in(G, v);
    if (!gcont.is_one()) G = *divide_exact(G, gcont);
    return normalize_sign((cont * G).times_int(ic < 0 ? Int(-ic) : ic));
}

inline MultiPoly poly_lcm(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly::zero();
    MultiPoly g = poly_gcd(a, b);
    return normalize_sign(*divide_exact(a * b, g));
}

}  // namespace odelim

#endif  // ODELIM_MULTIPOLY_HPP
