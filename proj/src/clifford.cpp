#include "gk/clifford.hpp"

#include <sstream>

namespace gk {

GenSection::GenSection(Polyvector v, Form f) : vec(std::move(v)), one(std::move(f)) {
    if (vec.n() != one.n()) throw error("chart dimension mismatch");
    if (!vec.is_zero() && (vec.max_degree() > 1 || !vec.degree_part(0).is_zero()))
        throw error("section vector part must have degree 1");
    int d;
    if (!one.is_homogeneous(&d) || (d != 1 && !one.is_zero()))
        throw error("section form part must have degree 1");
}

std::vector<PolyScalar> GenSection::coords() const {
    int n = vec.n();
    std::vector<PolyScalar> c(4 * n, PolyScalar(n));
    for (int a = 0; a < 2 * n; ++a) {
        c[a] = vec.component(Mask(1) << a);
        c[2 * n + a] = one.component(Mask(1) << a);
    }
    return c;
}

GenSection GenSection::from_coords(int n, const std::vector<PolyScalar>& c) {
    Polyvector v(n);
    Form f(n);
    for (int a = 0; a < 2 * n; ++a) {
        v.add_term(Mask(1) << a, c[a]);
        f.add_term(Mask(1) << a, c[2 * n + a]);
    }
    return {std::move(v), std::move(f)};
}

PolyScalar pairing(const GenSection& a, const GenSection& b) {
    int n = a.n();
    PolyScalar acc(n);
    for (int k = 0; k < 2 * n; ++k) {
        acc += b.one.component(Mask(1) << k) * a.vec.component(Mask(1) << k);
        acc += a.one.component(Mask(1) << k) * b.vec.component(Mask(1) << k);
    }
    return acc.scaled(GaussRat(Rat(1, 2)));
}

namespace {

// 2<e_a, e_b> over the isotropic basis: 1 exactly when {a,b} pairs a frame
// vector with its own coframe covector.
inline int twice_pairing(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    return (b == a + 2 * n) ? 1 : 0;
}

} // namespace

CliffordElem CliffordElem::scalar(int n, PolyScalar c) {
    CliffordElem x(n);
    x.add_word(0, c);
    return x;
}

CliffordElem CliffordElem::generator(int n, int idx) {
    if (idx < 0 || idx >= 4 * n) throw error("generator index out of range");
    CliffordElem x(n);
    x.add_word(WordMask(1) << idx, PolyScalar::one(n));
    return x;
}

CliffordElem CliffordElem::from_form(const Form& f) {
    CliffordElem x(f.n());
    for (auto& [m, c] : f.components())
        x.add_word(WordMask(m) << (2 * f.n()), c);
    return x;
}

CliffordElem CliffordElem::from_polyvector(const Polyvector& p) {
    CliffordElem x(p.n());
    for (auto& [m, c] : p.components()) {
        int k = std::popcount(m);
        int sign = ((k * (k - 1) / 2) & 1) ? -1 : 1; // reversal parity
        x.add_word(WordMask(m), sign > 0 ? c : -c);
    }
    return x;
}

CliffordElem CliffordElem::from_section(const GenSection& e) {
    return from_polyvector(e.vec) + from_form(e.one);
}

void CliffordElem::add_word(WordMask w, const PolyScalar& c) {
    if (c.is_zero()) return;
    auto it = words_.find(w);
    if (it == words_.end()) {
        words_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) words_.erase(it);
    }
}

int CliffordElem::filtration_degree() const {
    int d = 0;
    for (auto& [w, c] : words_) d = std::max(d, std::popcount(w));
    return d;
}

bool CliffordElem::in_cl2() const {
    for (auto& [w, c] : words_) {
        int p = std::popcount(w);
        if (p != 0 && p != 2) return false;
    }
    return true;
}

CliffordElem CliffordElem::operator-() const {
    CliffordElem r(n_);
    for (auto& [w, c] : words_) r.words_.emplace(w, -c);
    return r;
}

CliffordElem& CliffordElem::operator+=(const CliffordElem& o) {
    if (n_ != o.n_) throw error("chart dimension mismatch");
    for (auto& [w, c] : o.words_) add_word(w, c);
    return *this;
}

CliffordElem& CliffordElem::operator-=(const CliffordElem& o) {
    if (n_ != o.n_) throw error("chart dimension mismatch");
    for (auto& [w, c] : o.words_) add_word(w, -c);
    return *this;
}

CliffordElem CliffordElem::scaled(const GaussRat& c) const {
    CliffordElem r(n_);
    if (c.is_zero()) return r;
    for (auto& [w, v] : words_) r.words_.emplace(w, v.scaled(c));
    return r;
}

CliffordElem CliffordElem::conj() const {
    // Conjugation swaps each generator with its barred partner; the word
    // stays a word, resorted with plain anticommutation (partners of
    // distinct slots never pair).
    CliffordElem r(n_);
    for (auto& [w, c] : words_) {
        std::vector<int> swapped;
        WordMask nm = 0;
        WordMask ww = w;
        while (ww) {
            int b = std::countr_zero(ww);
            ww &= ww - 1;
            int block = b / n_; // 0: @, 1: @b, 2: dz, 3: dzb
            int s = (block % 2 == 0) ? b + n_ : b - n_;
            swapped.push_back(s);
            nm |= WordMask(1) << s;
        }
        int sign = permutation_sign(swapped);
        PolyScalar cc = c.conj();
        r.add_word(nm, sign > 0 ? cc : -cc);
    }
    return r;
}

GenSection CliffordElem::cl1_part(bool allow_rest) const {
    Polyvector v(n_);
    Form f(n_);
    for (auto& [w, c] : words_) {
        if (std::popcount(w) != 1) {
            if (allow_rest) continue;
            throw error("element is not a section of T + T*");
        }
        int b = std::countr_zero(w);
        if (b < 2 * n_)
            v.add_term(Mask(1) << b, c);
        else
            f.add_term(Mask(1) << (b - 2 * n_), c);
    }
    return {std::move(v), std::move(f)};
}

PolyScalar CliffordElem::scalar_part() const {
    auto it = words_.find(0);
    return it == words_.end() ? PolyScalar(n_) : it->second;
}

namespace {

// (sorted word w) * e_b straightened into sorted words.
void word_times_gen(int n, WordMask w, int b, const PolyScalar& c,
                    CliffordElem& acc) {
    if (w == 0) {
        acc.add_word(WordMask(1) << b, c);
        return;
    }
    int a = 63 - std::countl_zero(w);
    if (a < b) {
        acc.add_word(w | (WordMask(1) << b), c);
        return;
    }
    if (a == b) return; // isotropic generator squares to zero
    WordMask rest = w ^ (WordMask(1) << a);
    if (twice_pairing(a, b, n)) acc.add_word(rest, c);
    // w e_b = 2<a,b> rest - (rest e_b) e_a; every word of rest*e_b has all
    // indices < a, so appending e_a keeps it sorted.
    CliffordElem tmp(n);
    word_times_gen(n, rest, b, c, tmp);
    for (auto& [u, cu] : tmp.words()) acc.add_word(u | (WordMask(1) << a), -cu);
}

} // namespace

CliffordElem cl_mul(const CliffordElem& a, const CliffordElem& b) {
    if (a.n() != b.n()) throw error("chart dimension mismatch");
    int n = a.n();
    CliffordElem r(n);
    for (auto& [wb, cb] : b.words()) {
        // fold the generators of wb (left to right) into each word of a
        CliffordElem cur(n);
        for (auto& [wa, ca] : a.words()) cur.add_word(wa, ca * cb);
        WordMask ww = wb;
        while (ww && !cur.is_zero()) {
            int g = std::countr_zero(ww);
            ww &= ww - 1;
            CliffordElem next(n);
            for (auto& [u, cu] : cur.words()) word_times_gen(n, u, g, cu, next);
            cur = std::move(next);
        }
        r += cur;
    }
    return r;
}

CliffordElem cl_product(const CliffordElem& a, const CliffordElem& b) {
    CliffordElem r = cl_mul(a, b);
    if (r.filtration_degree() > 3)
        throw filtration_error("Clifford product leaves the degree-3 filtration");
    return r;
}

CliffordElem cl_commutator(const CliffordElem& a, const CliffordElem& b) {
    return cl_mul(a, b) - cl_mul(b, a);
}

Form spin_action(const CliffordElem& x, const Form& phi) {
    if (x.n() != phi.n()) throw error("chart dimension mismatch");
    int n = x.n();
    Form r(n);
    for (auto& [w, c] : x.words()) {
        Form cur = phi.scaled(c);
        // generators act right-to-left: highest index first
        auto bits = mask_bits((Mask)(w & 0xffffffffu));
        // WordMask may exceed 32 bits only for n > 8, which the CLI grammar
        // never produces; guard anyway.
        if (w >> 32) {
            bits.clear();
            WordMask ww = w;
            while (ww) {
                bits.push_back(std::countr_zero(ww));
                ww &= ww - 1;
            }
        }
        for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
            int g = *it;
            if (g < 2 * n)
                cur = interior_basis(cur, g);
            else
                cur = wedge(Form::basis_oneform(n, g - 2 * n), cur);
            if (cur.is_zero()) break;
        }
        r += cur;
    }
    return r;
}

Form exp_action(const CliffordElem& x, const Form& phi) {
    Form acc = phi;
    Form term = phi;
    Rat fact(1);
    for (int k = 1; k <= 4 * x.n() + 2; ++k) {
        term = spin_action(x, term);
        if (term.is_zero()) return acc;
        fact *= k;
        acc += term.scaled(GaussRat(Rat(1) / fact));
    }
    throw error("exp_action: element does not act nilpotently");
}

GenSection adjoint_on_section(const CliffordElem& x, const GenSection& e) {
    CliffordElem cur = CliffordElem::from_section(e);
    CliffordElem acc = cur;
    Rat fact(1);
    for (int k = 1; k <= 100; ++k) {
        cur = cl_commutator(x, cur);
        if (cur.is_zero()) return acc.cl1_part();
        fact *= k;
        acc += cur.scaled(GaussRat(Rat(1) / fact));
    }
    throw error("adjoint_on_section: ad is not nilpotent for this exponent");
}

CliffordSeries cl_series_zero(int order, int n) {
    return CliffordSeries(order, CliffordElem(n));
}

CliffordSeries cl_series_mul(const CliffordSeries& a, const CliffordSeries& b) {
    int n = a.c[0].n();
    return series_mul(a, b, [](const CliffordElem& x, const CliffordElem& y) { return cl_mul(x, y); },
                      CliffordElem(n));
}

CliffordSeries cl_series_exp(const CliffordSeries& x) {
    int n = x.c[0].n();
    if (!x.c[0].is_zero()) throw error("series exp needs zero constant term");
    return series_exp(x, [](const CliffordElem& a, const CliffordElem& b) { return cl_mul(a, b); },
                      CliffordElem(n), CliffordElem::scalar(n, GaussRat(1)));
}

CliffordSeries cl_series_log(const CliffordSeries& x) {
    int n = x.c[0].n();
    return series_log(x, [](const CliffordElem& a, const CliffordElem& b) { return cl_mul(a, b); },
                      CliffordElem(n), CliffordElem::scalar(n, GaussRat(1)));
}

CliffordSeries bch_log(const CliffordElem& g1, const CliffordSeries& g2, int order) {
    if (order > 6) throw error("bch_log supports truncation order <= 6");
    int n = g1.n();
    if (!g1.in_cl2()) throw error("bch_log: first exponent must lie in CL2");
    for (auto& c : g2.c)
        if (!c.in_cl2()) throw error("bch_log: second exponent must lie in CL2");
    if (!g2.c[0].is_zero()) throw error("bch_log: series exponent needs zero constant term");
    CliffordSeries x = cl_series_zero(order, n);
    if (order >= 1) x.c[1] = g1;
    CliffordSeries g2t = g2;
    g2t.order = order;
    g2t.c.resize(order + 1, CliffordElem(n));
    CliffordSeries prod = cl_series_mul(cl_series_exp(x), cl_series_exp(g2t));
    CliffordSeries z = cl_series_log(prod);
    for (auto& c : z.c)
        if (!c.in_cl2())
            throw error("bch_log: logarithm left CL2, inputs were inconsistent");
    return z;
}

FormSeries form_series_zero(int order, int n) { return FormSeries(order, Form(n)); }

FormSeries spin_series_apply(const CliffordSeries& x, const FormSeries& phi) {
    int n = phi.c[0].n();
    FormSeries r(phi.order, Form(n));
    for (int i = 0; i <= x.order && i <= phi.order; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; i + j <= phi.order; ++j)
            r.c[i + j] += spin_action(x.c[i], phi.c[j]);
    }
    return r;
}

FormSeries spin_series_exp_apply(const CliffordSeries& x, const FormSeries& phi) {
    if (!x.c[0].is_zero()) throw error("series exp needs zero constant term");
    FormSeries acc = phi;
    FormSeries term = phi;
    Rat fact(1);
    for (int m = 1; m <= phi.order; ++m) {
        term = spin_series_apply(x, term);
        fact *= m;
        GaussRat inv{Rat(1) / fact};
        for (int k = 0; k <= phi.order; ++k) acc.c[k] += term.c[k].scaled(inv);
    }
    return acc;
}

TSeries<GenSection> adjoint_series_on_section(const CliffordSeries& x, const GenSection& e) {
    if (!x.c[0].is_zero()) throw error("series exp needs zero constant term");
    int n = e.n();
    int T = x.order;
    std::vector<CliffordElem> acc(T + 1, CliffordElem(n)), cur(T + 1, CliffordElem(n));
    cur[0] = CliffordElem::from_section(e);
    acc[0] = cur[0];
    Rat fact(1);
    for (int m = 1; m <= T; ++m) {
        std::vector<CliffordElem> next(T + 1, CliffordElem(n));
        for (int i = 1; i <= T; ++i)
            for (int j = 0; i + j <= T; ++j) {
                if (x.c[i].is_zero() || cur[j].is_zero()) continue;
                next[i + j] += cl_commutator(x.c[i], cur[j]);
            }
        cur = std::move(next);
        fact *= m;
        GaussRat inv{Rat(1) / fact};
        for (int k = 0; k <= T; ++k) acc[k] += cur[k].scaled(inv);
    }
    TSeries<GenSection> r(T, GenSection(n));
    for (int k = 0; k <= T; ++k) r.c[k] = acc[k].cl1_part();
    return r;
}

std::string CliffordElem::str() const {
    if (words_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [w, c] : words_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        WordMask ww = w;
        while (ww) {
            int b = std::countr_zero(ww);
            ww &= ww - 1;
            int block = b / n_;
            const char* names[4] = {"@", "@b", "dz", "dzb"};
            os << "." << names[block] << (b % n_) + 1;
        }
    }
    return os.str();
}

} // namespace gk
