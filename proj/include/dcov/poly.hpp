#ifndef DCOV_POLY_HPP
#define DCOV_POLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dcov/error.hpp"
#include "dcov/field.hpp"
#include "dcov/ring.hpp"

namespace dcov {

template <class F> F field_from_desc(const FieldDesc& d);
template <> inline QField field_from_desc<QField>(const FieldDesc& d) {
    if (d.kind != FieldKind::rational)
        fail(ErrorCode::ring_mismatch, "ring field is not Q");
    return QField{};
}
template <> inline ZpField field_from_desc<ZpField>(const FieldDesc& d) {
    if (d.kind != FieldKind::prime)
        fail(ErrorCode::ring_mismatch, "ring field is not a prime field");
    return ZpField(d.p);
}

// Sparse homogeneous polynomial with exact coefficients in a weighted graded
// ring. Terms are kept in descending lexicographic order on exponent vectors
// with no zero coefficients, so equal values have identical representations.
// The zero polynomial has no terms and carries no degree (degree() == -1);
// degree checks treat it as compatible with any degree.
template <class F>
class PolyT {
  public:
    using Field = F;
    using Elem = typename F::Elem;

    struct Term {
        ExpVec e;
        Elem c;
    };

    PolyT() = default;

    explicit PolyT(const RingCtx& ring) : ring_(ring), fld_(field_from_desc<F>(ring.field)) {}

    static PolyT zero(const RingCtx& ring) { return PolyT(ring); }

    static PolyT monomial(const RingCtx& ring, ExpVec e, Elem c) {
        PolyT p(ring);
        p.set_terms({Term{std::move(e), std::move(c)}});
        return p;
    }

    static PolyT constant(const RingCtx& ring, Elem c) {
        return monomial(ring, ExpVec(size_t(ring.nvars), 0), std::move(c));
    }

    static PolyT variable(const RingCtx& ring, int i) {
        if (i < 0 || i >= ring.nvars) fail(ErrorCode::bad_argument, "variable index out of range");
        ExpVec e(size_t(ring.nvars), 0);
        e[size_t(i)] = 1;
        return monomial(ring, std::move(e), field_from_desc<F>(ring.field).one());
    }

    static PolyT from_terms(const RingCtx& ring, std::vector<Term> terms) {
        PolyT p(ring);
        p.set_terms(std::move(terms));
        return p;
    }

    const RingCtx& ring() const { return ring_; }
    const F& field() const { return fld_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long degree() const { return degree_; } // -1 for the zero polynomial

    Elem coeff(const ExpVec& e) const {
        for (const Term& t : terms_)
            if (t.e == e) return t.c;
        return fld_.zero();
    }

    bool operator==(const PolyT& o) const {
        if (!(ring_ == o.ring_) || terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].e != o.terms_[i].e || !fld_.eq(terms_[i].c, o.terms_[i].c)) return false;
        return true;
    }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

    PolyT operator-() const {
        PolyT r(*this);
        for (Term& t : r.terms_) t.c = fld_.neg(t.c);
        return r;
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        require_same_ring(a.ring_, b.ring_, "poly add");
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.degree_ != b.degree_)
            fail(ErrorCode::degree_mismatch,
                 "cannot add homogeneous polynomials of degrees " + std::to_string(a.degree_) +
                     " and " + std::to_string(b.degree_));
        const F& f = a.fld_;
        PolyT r(a.ring_);
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            if (a.terms_[i].e == b.terms_[j].e) {
                Elem s = f.add(a.terms_[i].c, b.terms_[j].c);
                if (!f.is_zero(s)) out.push_back(Term{a.terms_[i].e, std::move(s)});
                ++i, ++j;
            } else if (exp_lex_greater(a.terms_[i].e, b.terms_[j].e)) {
                out.push_back(a.terms_[i++]);
            } else {
                out.push_back(b.terms_[j++]);
            }
        }
        for (; i < a.terms_.size(); ++i) out.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) out.push_back(b.terms_[j]);
        r.adopt_sorted(std::move(out));
        return r;
    }

    friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        require_same_ring(a.ring_, b.ring_, "poly mul");
        const F& f = a.fld_;
        PolyT r(a.ring_);
        if (a.is_zero() || b.is_zero()) return r;
        std::map<ExpVec, Elem, std::greater<ExpVec>> acc;
        const int n = a.ring_.nvars;
        for (const Term& s : a.terms_) {
            for (const Term& t : b.terms_) {
                ExpVec e(size_t(n), 0);
                for (int v = 0; v < n; ++v) e[size_t(v)] = s.e[size_t(v)] + t.e[size_t(v)];
                Elem c = f.mul(s.c, t.c);
                auto it = acc.find(e);
                if (it == acc.end())
                    acc.emplace(std::move(e), std::move(c));
                else
                    it->second = f.add(it->second, c);
            }
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!f.is_zero(c)) out.push_back(Term{e, c});
        r.adopt_sorted(std::move(out));
        return r;
    }

    friend PolyT operator*(const Elem& c, const PolyT& p) {
        const F& f = p.fld_;
        PolyT r(p.ring_);
        if (f.is_zero(c) || p.is_zero()) return r;
        std::vector<Term> out = p.terms_;
        for (Term& t : out) t.c = f.mul(c, t.c);
        r.adopt_sorted(std::move(out));
        return r;
    }

    Elem evaluate(const std::vector<Elem>& point) const {
        if (int(point.size()) != ring_.nvars)
            fail(ErrorCode::dimension_mismatch, "evaluation point has wrong length");
        Elem acc = fld_.zero();
        for (const Term& t : terms_) {
            Elem v = t.c;
            for (int i = 0; i < ring_.nvars; ++i)
                for (int k = 0; k < t.e[size_t(i)]; ++k) v = fld_.mul(v, point[size_t(i)]);
            acc = fld_.add(acc, v);
        }
        return acc;
    }

    // Formal partial derivatives, one per variable. Each is homogeneous (the
    // weighted degree drops by the variable's weight); exponents reduce in
    // the field, so characteristic p kills multiples of p.
    std::vector<PolyT> jacobian() const {
        std::vector<PolyT> out;
        out.reserve(size_t(ring_.nvars));
        for (int v = 0; v < ring_.nvars; ++v) {
            std::vector<Term> terms;
            for (const Term& t : terms_) {
                int ev = t.e[size_t(v)];
                if (ev == 0) continue;
                Elem c = fld_.mul(t.c, fld_.from_int(ev));
                if (fld_.is_zero(c)) continue;
                ExpVec e = t.e;
                e[size_t(v)] -= 1;
                terms.push_back(Term{std::move(e), std::move(c)});
            }
            PolyT d(ring_);
            d.adopt_sorted(std::move(terms));
            out.push_back(std::move(d));
        }
        return out;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const Term& t : terms_) {
            if (!first) os << " + ";
            first = false;
            os << fld_.to_string(t.c);
            for (int i = 0; i < ring_.nvars; ++i) {
                int e = t.e[size_t(i)];
                if (e == 0) continue;
                os << "*x" << i;
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void set_terms(std::vector<Term> terms) {
        std::map<ExpVec, Elem, std::greater<ExpVec>> acc;
        for (Term& t : terms) {
            if (int(t.e.size()) != ring_.nvars)
                fail(ErrorCode::dimension_mismatch, "exponent vector has wrong length");
            for (int e : t.e)
                if (e < 0) fail(ErrorCode::bad_argument, "negative exponent");
            auto it = acc.find(t.e);
            if (it == acc.end())
                acc.emplace(std::move(t.e), std::move(t.c));
            else
                it->second = fld_.add(it->second, t.c);
        }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!fld_.is_zero(c)) out.push_back(Term{e, c});
        adopt_sorted(std::move(out));
    }

    // terms must already be sorted descending-lex with distinct exponents and
    // nonzero coefficients.
    void adopt_sorted(std::vector<Term> terms) {
        terms_ = std::move(terms);
        if (terms_.empty()) {
            degree_ = -1;
            return;
        }
        degree_ = ring_.weighted_degree(terms_.front().e);
        for (const Term& t : terms_)
            if (ring_.weighted_degree(t.e) != degree_)
                fail(ErrorCode::degree_mismatch, "terms of mixed weighted degree");
    }

    RingCtx ring_;
    F fld_;
    std::vector<Term> terms_;
    long degree_ = -1;
};

namespace detail {
inline void enumerate_exponents(const RingCtx& ring, int var, long remaining, ExpVec& cur,
                                std::vector<ExpVec>& out) {
    if (var == ring.nvars - 1) {
        int w = ring.weights[size_t(var)];
        if (remaining % w == 0) {
            cur[size_t(var)] = int(remaining / w);
            out.push_back(cur);
            cur[size_t(var)] = 0;
        }
        return;
    }
    int w = ring.weights[size_t(var)];
    for (long e = remaining / w; e >= 0; --e) {
        cur[size_t(var)] = int(e);
        enumerate_exponents(ring, var + 1, remaining - e * w, cur, out);
    }
    cur[size_t(var)] = 0;
}
} // namespace detail

// All exponent vectors of weighted degree m, in canonical descending-lex
// order; empty for m < 0.
inline std::vector<ExpVec> exponents_of_degree(const RingCtx& ring, long m) {
    std::vector<ExpVec> out;
    if (m < 0) return out;
    ExpVec cur(size_t(ring.nvars), 0);
    detail::enumerate_exponents(ring, 0, m, cur, out);
    return out;
}

// All monomials of weighted degree m in canonical order. For unit weights the
// count is binomial(nvars-1+m, nvars-1).
template <class F>
std::vector<PolyT<F>> monomial_basis(const RingCtx& ring, long m) {
    F f = field_from_desc<F>(ring.field);
    std::vector<PolyT<F>> out;
    for (ExpVec& e : exponents_of_degree(ring, m))
        out.push_back(PolyT<F>::monomial(ring, std::move(e), f.one()));
    return out;
}

// p == lambda * q for some nonzero scalar lambda. Projective equality of
// branch equations is exactly this.
template <class F>
bool proportional(const PolyT<F>& p, const PolyT<F>& q) {
    if (!(p.ring() == q.ring())) return false;
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    const auto& pt = p.terms();
    const auto& qt = q.terms();
    if (pt.size() != qt.size()) return false;
    const F& f = p.field();
    auto lambda = f.div(pt.front().c, qt.front().c);
    for (size_t i = 0; i < pt.size(); ++i) {
        if (pt[i].e != qt[i].e) return false;
        if (!f.eq(pt[i].c, f.mul(lambda, qt[i].c))) return false;
    }
    return true;
}

// Substitutes args[i] for variable i; all args must live in one common ring.
// Used for linear slicing and for moving polynomials between rings.
template <class F>
PolyT<F> substitute(const PolyT<F>& p, const std::vector<PolyT<F>>& args) {
    if (int(args.size()) != p.ring().nvars)
        fail(ErrorCode::dimension_mismatch, "substitute: one argument per variable required");
    if (args.empty()) fail(ErrorCode::bad_argument, "substitute: empty argument list");
    const RingCtx& target = args.front().ring();
    for (const auto& a : args) require_same_ring(target, a.ring(), "substitute");
    F f = field_from_desc<F>(target.field);
    PolyT<F> acc = PolyT<F>::zero(target);
    for (const auto& t : p.terms()) {
        PolyT<F> m = PolyT<F>::constant(target, t.c);
        for (int i = 0; i < p.ring().nvars; ++i)
            for (int k = 0; k < t.e[size_t(i)]; ++k) m = m * args[size_t(i)];
        acc = acc + m;
    }
    return acc;
}

} // namespace dcov

#endif
