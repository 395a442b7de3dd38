#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace cuntz {

// A word in the free monoid on the generator letters 1..d.
using Word = std::vector<std::uint8_t>;

inline std::string word_str(const Word& w) {
    std::string s;
    for (auto l : w) s += std::to_string(int(l));
    return s;
}

// All d^len words of the given length, in lexicographic order.
inline std::vector<Word> all_words(int d, int len) {
    if (d < 1 || len < 0) throw std::invalid_argument("all_words: bad arguments");
    std::vector<Word> out;
    out.reserve(std::size_t(1) << len);  // exact for d = 2, a hint otherwise
    Word w(len, 1);
    while (true) {
        out.push_back(w);
        int pos = len - 1;
        while (pos >= 0 && w[pos] == d) w[pos--] = 1;
        if (pos < 0) break;
        ++w[pos];
    }
    return out;
}

/**
 * Monomial s_I s_J^* in the polynomial *-algebra of O_d.
 *
 * Both words are stored in creator order: annihilators = (j_1, ..., j_k)
 * denotes the operator (s_{j_1} ... s_{j_k})^* = s_{j_k}^* ... s_{j_1}^*.
 * Under that convention, products contract along common prefixes of the
 * annihilator word of the left factor and the creator word of the right.
 */
struct Monomial {
    Word creators;
    Word annihilators;

    int degree() const {
        return int(creators.size()) - int(annihilators.size());
    }
    bool balanced() const { return creators.size() == annihilators.size(); }
    bool is_identity() const { return creators.empty() && annihilators.empty(); }
    int max_letter() const {
        int m = 0;
        for (auto l : creators) m = std::max(m, int(l));
        for (auto l : annihilators) m = std::max(m, int(l));
        return m;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

// s_I s_J^* . s_K s_L^*: if J is a prefix of K the annihilators cancel into
// the surplus creators; if K is a proper prefix of J the surplus annihilators
// survive; otherwise the product vanishes (s_i^* s_j = 0 for i != j).
inline std::optional<Monomial> contract(const Monomial& x, const Monomial& y) {
    const Word& j = x.annihilators;
    const Word& k = y.creators;
    if (j.size() <= k.size()) {
        if (!is_prefix(j, k)) return std::nullopt;
        Monomial r;
        r.creators = x.creators;
        r.creators.insert(r.creators.end(), k.begin() + j.size(), k.end());
        r.annihilators = y.annihilators;
        return r;
    }
    if (!is_prefix(k, j)) return std::nullopt;
    Monomial r;
    r.creators = x.creators;
    r.annihilators = y.annihilators;
    r.annihilators.insert(r.annihilators.end(), j.begin() + k.size(), j.end());
    return r;
}

/**
 * Finite linear combination of monomials over Q(i, sqrt2), tagged with the
 * generator count d.  This is the polynomial *-algebra on d isometries
 * subject to s_i^* s_j = delta_ij and sum_i s_i s_i^* = 1; no completion is
 * represented.  Zero coefficients are dropped eagerly, so the term map of the
 * zero element is empty.
 */
class Element {
  public:
    explicit Element(int d = 2) : d_(d) {
        if (d < 2) throw std::invalid_argument("Element: need d >= 2");
    }

    static Element zero(int d = 2) { return Element(d); }

    static Element identity(int d = 2) {
        Element e(d);
        e.terms_[Monomial{}] = Scalar::one();
        return e;
    }

    // The isometry s_i.
    static Element generator(int i, int d = 2) {
        Element e(d);
        if (i < 1 || i > d) throw std::invalid_argument("generator index out of range");
        e.terms_[Monomial{Word{std::uint8_t(i)}, {}}] = Scalar::one();
        return e;
    }

    static Element monomial(Monomial m, Scalar coeff = Scalar::one(), int d = 2) {
        Element e(d);
        if (m.max_letter() > d)
            throw std::invalid_argument("monomial letter exceeds generator count");
        if (!coeff.is_zero()) e.terms_[std::move(m)] = std::move(coeff);
        return e;
    }

    int generator_count() const { return d_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool structurally_zero() const { return terms_.empty(); }

    Element& add_term(const Monomial& m, const Scalar& c) {
        if (m.max_letter() > d_)
            throw std::invalid_argument("monomial letter exceeds generator count");
        if (c.is_zero()) return *this;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    friend Element operator+(const Element& x, const Element& y) {
        check_same_d(x, y);
        Element r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }

    friend Element operator-(const Element& x, const Element& y) {
        check_same_d(x, y);
        Element r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }

    Element operator-() const {
        Element r(d_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Element operator*(const Scalar& s, const Element& x) {
        Element r(x.d_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : x.terms_) r.terms_[m] = s * c;
        return r;
    }
    friend Element operator*(const Element& x, const Scalar& s) { return s * x; }

    friend Element operator*(const Element& x, const Element& y) {
        check_same_d(x, y);
        Element r(x.d_);
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_)
                if (auto m = contract(mx, my)) r.add_term(*m, cx * cy);
        return r;
    }

    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }
    Element& operator*=(const Element& y) { return *this = *this * y; }

    // Structural identity of term maps (not semantic equality; see equals()).
    friend bool operator==(const Element& x, const Element& y) {
        return x.d_ == y.d_ && x.terms_ == y.terms_;
    }

  private:
    static void check_same_d(const Element& x, const Element& y) {
        if (x.d_ != y.d_)
            throw std::invalid_argument("Element: mixed generator counts");
    }

    int d_;
    std::map<Monomial, Scalar> terms_;
};

// s_I s_J^* as an element, from words in creator order.
inline Element word_element(const Word& creators, const Word& annihilators, int d = 2) {
    return Element::monomial(Monomial{creators, annihilators}, Scalar::one(), d);
}

// Product of two bare monomials: a single monomial or zero.
inline Element mul_monomial(const Monomial& x, const Monomial& y, int d = 2) {
    if (auto m = contract(x, y)) return Element::monomial(*m, Scalar::one(), d);
    return Element::zero(d);
}

inline Element adjoint(const Element& x) {
    Element r(x.generator_count());
    for (const auto& [m, c] : x.terms())
        r.add_term(Monomial{m.annihilators, m.creators}, c.conj());
    return r;
}

/**
 * Canonical expansion: rewrite every term s_I s_J^* as
 * sum over |W| = L - |J| of s_{I.W} s_{J.W}^*, using sum_i s_i s_i^* = 1.
 * Semantics-preserving; requires |J| <= L for every term.  After expansion,
 * monomials within one degree class are linearly independent.
 */
inline Element expand_to_level(const Element& x, int L) {
    if (L < 0) throw std::invalid_argument("expand_to_level: negative level");
    const int d = x.generator_count();
    Element r(d);
    for (const auto& [m, c] : x.terms()) {
        const int need = L - int(m.annihilators.size());
        if (need < 0)
            throw std::invalid_argument(
                "expand_to_level: level " + std::to_string(L) +
                " below annihilator length " + std::to_string(m.annihilators.size()));
        if (need == 0) {
            r.add_term(m, c);
            continue;
        }
        for (const auto& w : all_words(d, need)) {
            Monomial t = m;
            t.creators.insert(t.creators.end(), w.begin(), w.end());
            t.annihilators.insert(t.annihilators.end(), w.begin(), w.end());
            r.add_term(t, c);
        }
    }
    return r;
}

/**
 * Exact semantic equality.  The difference is grouped by degree; within one
 * degree class all terms are expanded to the maximal annihilator length
 * present there, where monomials are linearly independent, so the difference
 * is zero iff every expanded coefficient cancels.
 */
inline bool equals(const Element& x, const Element& y) {
    if (x.generator_count() != y.generator_count())
        throw std::invalid_argument("equals: mixed generator counts");
    const int d = x.generator_count();
    std::map<Monomial, Scalar> diff = x.terms();
    for (const auto& [m, c] : y.terms()) {
        auto it = diff.find(m);
        if (it == diff.end()) {
            diff.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) diff.erase(it);
        }
    }
    if (diff.empty()) return true;

    std::map<int, std::vector<const std::pair<const Monomial, Scalar>*>> by_degree;
    for (const auto& term : diff) by_degree[term.first.degree()].push_back(&term);

    for (const auto& [deg, terms] : by_degree) {
        std::size_t lmax = 0, lmin = SIZE_MAX;
        for (const auto* t : terms) {
            lmax = std::max(lmax, t->first.annihilators.size());
            lmin = std::min(lmin, t->first.annihilators.size());
        }
        // Uniform level: the terms are independent monomials and at least one
        // nonzero coefficient is present.
        if (lmin == lmax) return false;
        std::map<Monomial, Scalar> acc;
        for (const auto* t : terms) {
            const int need = int(lmax - t->first.annihilators.size());
            for (const auto& w : all_words(d, need)) {
                Monomial e = t->first;
                e.creators.insert(e.creators.end(), w.begin(), w.end());
                e.annihilators.insert(e.annihilators.end(), w.begin(), w.end());
                auto it = acc.find(e);
                if (it == acc.end()) {
                    acc.emplace(std::move(e), t->second);
                } else {
                    it->second += t->second;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        if (!acc.empty()) return false;
    }
    return true;
}

inline bool is_zero(const Element& x) { return equals(x, Element::zero(x.generator_count())); }

// True iff every term has degree zero (creator and annihilator words of equal
// length); such elements are fixed by the gauge action.
inline bool is_balanced(const Element& x) {
    for (const auto& [m, c] : x.terms())
        if (!m.balanced()) return false;
    return true;
}

// Splits x into gauge-homogeneous components; key = degree.  Components sum
// to x and omit zero parts.
inline std::map<int, Element> grade(const Element& x) {
    std::map<int, Element> parts;
    for (const auto& [m, c] : x.terms()) {
        auto it = parts.find(m.degree());
        if (it == parts.end())
            it = parts.emplace(m.degree(), Element(x.generator_count())).first;
        it->second.add_term(m, c);
    }
    return parts;
}

inline Element degree_part(const Element& x, int deg) {
    Element r(x.generator_count());
    for (const auto& [m, c] : x.terms())
        if (m.degree() == deg) r.add_term(m, c);
    return r;
}

// Gauge action tau_z: s_i -> z s_i, so a monomial of degree g picks up z^g.
// Requires |z| = 1 exactly (z^-1 = conj(z) keeps coefficients in the field).
inline Element gauge_rotate(const Element& x, const Scalar& z) {
    if (!z.is_unit_modulus())
        throw std::invalid_argument("gauge_rotate: z must have modulus 1");
    std::map<int, Scalar> pow{{0, Scalar::one()}};
    auto zpow = [&](int g) -> const Scalar& {
        auto it = pow.find(g);
        if (it != pow.end()) return it->second;
        Scalar v = Scalar::one();
        const Scalar base = g > 0 ? z : z.conj();
        for (int k = 0; k < std::abs(g); ++k) v *= base;
        return pow.emplace(g, std::move(v)).first->second;
    };
    Element r(x.generator_count());
    for (const auto& [m, c] : x.terms()) r.add_term(m, zpow(m.degree()) * c);
    return r;
}

// All monomials with |I| <= L and |J| <= L, as elements; the standard test
// basis for property sweeps.
inline std::vector<Element> monomial_basis(int d, int L) {
    std::vector<Word> words;
    for (int len = 0; len <= L; ++len)
        for (auto& w : all_words(d, len)) words.push_back(std::move(w));
    std::vector<Element> out;
    out.reserve(words.size() * words.size());
    for (const auto& i : words)
        for (const auto& j : words)
            out.push_back(Element::monomial(Monomial{i, j}, Scalar::one(), d));
    return out;
}

inline std::string to_string(const Monomial& m) {
    if (m.is_identity()) return "I";
    std::string s;
    for (auto l : m.creators) {
        if (!s.empty()) s += ' ';
        s += 's' + std::to_string(int(l));
    }
    // Annihilators print right-to-left: (s_{j1} ... s_{jk})^* = s_jk^* ... s_j1^*.
    for (auto it = m.annihilators.rbegin(); it != m.annihilators.rend(); ++it) {
        if (!s.empty()) s += ' ';
        s += 's' + std::to_string(int(*it)) + '*';
    }
    return s;
}

// Parseable rendering; parse_expression(to_string(x), x.generator_count())
// reproduces the term map exactly.
inline std::string to_string(const Element& x) {
    if (x.structurally_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : x.terms()) {
        std::string coeff;
        bool negative = false;
        if (c.is_one()) {
            coeff = "";
        } else if ((-c).is_one()) {
            negative = true;
        } else if (c.nonzero_parts() > 1) {
            coeff = "(" + c.to_string() + ")";
        } else {
            std::string s = c.to_string();
            if (!s.empty() && s[0] == '-') {
                negative = true;
                s.erase(0, 1);
            }
            coeff = s;
        }
        std::string body = coeff;
        if (!m.is_identity()) {
            if (!body.empty()) body += ' ';
            body += to_string(m);
        } else if (body.empty()) {
            body = "I";
        }
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace cuntz
