#include "asep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace asep {

namespace {

using Exponents = MultiPoly::Exponents;
using Term = MultiPoly::Term;

struct LexGreaterCmp {
    bool operator()(const Exponents& a, const Exponents& b) const {
        return lex_greater(a, b);
    }
};

// Ordered accumulator for term maps; iteration yields decreasing lex order.
using TermMap = std::map<Exponents, Int, LexGreaterCmp>;

std::vector<Term> collapse(TermMap&& m) {
    std::vector<Term> out;
    out.reserve(m.size());
    for (auto& [e, c] : m)
        if (c != 0) out.emplace_back(e, std::move(c));
    return out;
}

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r; // base is canonical, so num^e / den^e already is
}

} // namespace

bool lex_greater(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

MultiPoly MultiPoly::zero(RingPtr ring) {
    MultiPoly p;
    p.ring_ = std::move(ring);
    return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, Int value) {
    MultiPoly p;
    p.ring_ = std::move(ring);
    if (value != 0)
        p.terms_.emplace_back(Exponents(p.ring_->size(), 0), std::move(value));
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw Error("variable index out of range");
    Exponents e(ring->size(), 0);
    e[index] = 1;
    return monomial(std::move(ring), std::move(e), 1);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::string_view name) {
    std::size_t idx = ring->require(name);
    return variable(std::move(ring), idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exps, Int coeff) {
    if (exps.size() != ring->size())
        throw Error("exponent vector length does not match ring");
    MultiPoly p;
    p.ring_ = std::move(ring);
    if (coeff != 0)
        p.terms_.emplace_back(std::move(exps), std::move(coeff));
    return p;
}

bool MultiPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].second == 1 &&
           std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return std::all_of(terms_[0].first.begin(), terms_[0].first.end(),
                       [](std::uint32_t e) { return e == 0; });
}

long MultiPoly::total_degree() const {
    long best = -1;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

long MultiPoly::degree_in(std::size_t var) const {
    long best = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, static_cast<long>(e[var]));
    return best;
}

Int MultiPoly::leading_coefficient() const {
    return terms_.empty() ? Int(0) : terms_[0].second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_ring(ring_, o.ring_);
    MultiPoly out;
    out.ring_ = ring_;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const auto& [ea, ca] = terms_[i];
        const auto& [eb, cb] = o.terms_[j];
        if (ea == eb) {
            Int c = ca + cb;
            if (c != 0) out.terms_.emplace_back(ea, std::move(c));
            ++i, ++j;
        } else if (lex_greater(ea, eb)) {
            out.terms_.push_back(terms_[i++]);
        } else {
            out.terms_.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

namespace {

// Exponent vectors packed into one 64-bit key, fields in ring order with
// variable 0 most significant, so unsigned comparison equals lex order and
// addition is field-wise (when no field overflows).
struct Packing {
    unsigned bits = 0;
    std::size_t nvars = 0;
    bool usable = false;

    static Packing make(const MultiPoly& a, const MultiPoly& b, bool for_product) {
        Packing p;
        p.nvars = a.ring()->size();
        if (p.nvars == 0 || p.nvars > 16) return p;
        p.bits = p.nvars == 1 ? 63 : static_cast<unsigned>(64 / p.nvars);
        std::vector<std::uint64_t> ma(p.nvars, 0), mb(p.nvars, 0);
        for (const auto& [e, c] : a.terms())
            for (std::size_t k = 0; k < p.nvars; ++k) ma[k] = std::max<std::uint64_t>(ma[k], e[k]);
        for (const auto& [e, c] : b.terms())
            for (std::size_t k = 0; k < p.nvars; ++k) mb[k] = std::max<std::uint64_t>(mb[k], e[k]);
        const std::uint64_t cap = (std::uint64_t(1) << p.bits) - 1;
        for (std::size_t k = 0; k < p.nvars; ++k) {
            std::uint64_t need = for_product ? ma[k] + mb[k] : std::max(ma[k], mb[k]);
            if (need > cap) return p;
        }
        p.usable = true;
        return p;
    }

    std::uint64_t pack(const Exponents& e) const {
        std::uint64_t key = 0;
        for (std::size_t k = 0; k < nvars; ++k) key = (key << bits) | e[k];
        return key;
    }

    Exponents unpack(std::uint64_t key) const {
        Exponents e(nvars);
        const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
        for (std::size_t k = nvars; k-- > 0;) {
            e[k] = static_cast<std::uint32_t>(key & mask);
            key >>= bits;
        }
        return e;
    }
};

} // namespace

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_ring(ring_, o.ring_);
    MultiPoly out;
    out.ring_ = ring_;
    if (terms_.empty() || o.terms_.empty()) return out;

    Packing pk = Packing::make(*this, o, true);
    if (pk.usable) {
        // All key products, sorted descending, runs combined with addmul.
        // Big operands are split into chunks to bound the scratch space.
        struct Prod {
            std::uint64_t key;
            std::uint32_t ia, ib;
        };
        std::vector<std::uint64_t> ka(terms_.size()), kb(o.terms_.size());
        for (std::size_t i = 0; i < terms_.size(); ++i) ka[i] = pk.pack(terms_[i].first);
        for (std::size_t j = 0; j < o.terms_.size(); ++j) kb[j] = pk.pack(o.terms_[j].first);
        constexpr std::size_t kMaxScratch = std::size_t(1) << 23;
        std::size_t chunk = std::max<std::size_t>(1, kMaxScratch / o.terms_.size());
        std::vector<Prod> prods;
        for (std::size_t lo = 0; lo < terms_.size(); lo += chunk) {
            std::size_t hi = std::min(terms_.size(), lo + chunk);
            prods.clear();
            prods.reserve((hi - lo) * o.terms_.size());
            for (std::size_t i = lo; i < hi; ++i)
                for (std::size_t j = 0; j < o.terms_.size(); ++j)
                    prods.push_back({ka[i] + kb[j], static_cast<std::uint32_t>(i),
                                     static_cast<std::uint32_t>(j)});
            std::sort(prods.begin(), prods.end(),
                      [](const Prod& x, const Prod& y) { return x.key > y.key; });
            MultiPoly part;
            part.ring_ = ring_;
            part.terms_.reserve(prods.size() / 2 + 1);
            std::size_t i = 0;
            while (i < prods.size()) {
                std::uint64_t key = prods[i].key;
                Int c = 0;
                for (; i < prods.size() && prods[i].key == key; ++i)
                    mpz_addmul(c.get_mpz_t(), terms_[prods[i].ia].second.get_mpz_t(),
                               o.terms_[prods[i].ib].second.get_mpz_t());
                if (c != 0) part.terms_.emplace_back(pk.unpack(key), std::move(c));
            }
            if (lo == 0)
                out = std::move(part);
            else
                out += part;
        }
        return out;
    }

    TermMap acc;
    Exponents e(ring_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto [it, inserted] = acc.try_emplace(e, 0);
            mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    }
    out.terms_ = collapse(std::move(acc));
    return out;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
    MultiPoly out;
    out.ring_ = ring_;
    if (c == 0) return out;
    out.terms_ = terms_;
    for (auto& [e, t] : out.terms_) t *= c;
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_same_ring(ring_, o.ring_);
    return terms_ == o.terms_;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
    check_same_ring(ring_, divisor.ring_);
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    if (is_zero()) return zero(ring_);

    const auto& dlead_e = divisor.terms_[0].first;
    const auto& dlead_c = divisor.terms_[0].second;

    MultiPoly q;
    q.ring_ = ring_;

    // Packed path: per-variable degrees add under multiplication, so in an
    // exact division every intermediate term fits the product capacity; a
    // lead that does not divide is caught before any key arithmetic.
    Packing pk = Packing::make(*this, divisor, true);
    if (pk.usable) {
        std::map<std::uint64_t, Int, std::greater<std::uint64_t>> rem;
        for (const auto& t : terms_) rem.emplace(pk.pack(t.first), t.second);
        std::vector<std::pair<std::uint64_t, const Int*>> dv;
        dv.reserve(divisor.terms_.size());
        for (const auto& t : divisor.terms_) dv.emplace_back(pk.pack(t.first), &t.second);
        while (!rem.empty()) {
            const std::uint64_t rk = rem.begin()->first;
            Exponents re = pk.unpack(rk);
            for (std::size_t k = 0; k < re.size(); ++k)
                if (re[k] < dlead_e[k])
                    throw NotDivisibleError("polynomial division leaves a remainder");
            Int qc, r;
            mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.begin()->second.get_mpz_t(),
                        dlead_c.get_mpz_t());
            if (r != 0)
                throw NotDivisibleError("polynomial division leaves a remainder");
            const std::uint64_t qk = rk - dv[0].first;
            for (const auto& [dk, dc] : dv) {
                auto [it, inserted] = rem.try_emplace(qk + dk, 0);
                mpz_submul(it->second.get_mpz_t(), qc.get_mpz_t(), dc->get_mpz_t());
                if (it->second == 0) rem.erase(it);
            }
            Exponents qe = re;
            for (std::size_t k = 0; k < qe.size(); ++k) qe[k] -= dlead_e[k];
            q.terms_.emplace_back(std::move(qe), std::move(qc));
        }
        return q;
    }

    TermMap rem;
    for (const auto& t : terms_) rem.emplace(t.first, t.second);
    Exponents qe(ring_->size());
    while (!rem.empty()) {
        const auto& [re, rc] = *rem.begin();
        for (std::size_t k = 0; k < qe.size(); ++k) {
            if (re[k] < dlead_e[k])
                throw NotDivisibleError("polynomial division leaves a remainder");
            qe[k] = re[k] - dlead_e[k];
        }
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rc.get_mpz_t(), dlead_c.get_mpz_t());
        if (r != 0)
            throw NotDivisibleError("polynomial division leaves a remainder");
        // Subtract qc * x^qe * divisor from the remainder.
        Exponents se(ring_->size());
        for (const auto& [de, dc] : divisor.terms_) {
            for (std::size_t k = 0; k < se.size(); ++k) se[k] = qe[k] + de[k];
            auto [it, inserted] = rem.try_emplace(se, 0);
            it->second -= qc * dc;
            if (it->second == 0) rem.erase(it);
        }
        q.terms_.emplace_back(qe, std::move(qc)); // lex-decreasing by construction
    }
    return q;
}

bool MultiPoly::divisible_by(const MultiPoly& divisor) const {
    try {
        (void)exact_div(divisor);
        return true;
    } catch (const NotDivisibleError&) {
        return false;
    }
}

Int MultiPoly::integer_content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

MultiPoly MultiPoly::normalized() const {
    if (is_zero()) return *this;
    MultiPoly p = *this;
    Int g = integer_content();
    if (p.terms_[0].second < 0) g = -g;
    if (g != 1)
        for (auto& [e, c] : p.terms_) c /= g;
    return p;
}

bool MultiPoly::has_negative_coefficient() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.second < 0; });
}

// ---------------------------------------------------------------------------
// Multivariate gcd: content/primitive-part recursion over the lowest common
// variable with a primitive pseudo-remainder sequence.  Exactness over speed;
// the instances in this project are small.

namespace {

// p viewed as univariate in variable v: coefficients by v-degree, with the
// v-exponent zeroed out (still polynomials in the full ring).
std::vector<MultiPoly> univariate_coeffs(const MultiPoly& p, std::size_t v) {
    long d = p.degree_in(v);
    std::vector<TermMap> buckets(static_cast<std::size_t>(d + 1));
    for (const auto& [e, c] : p.terms()) {
        Exponents e2 = e;
        std::uint32_t dv = e2[v];
        e2[v] = 0;
        buckets[dv].emplace(std::move(e2), c);
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        MultiPoly acc = MultiPoly::zero(p.ring());
        for (auto& [e, c] : b) acc += MultiPoly::monomial(p.ring(), e, c);
        out.push_back(std::move(acc));
    }
    return out;
}

// p * v^k, by exponent shift.
MultiPoly times_power(const MultiPoly& p, std::size_t v, std::uint32_t k) {
    MultiPoly acc = MultiPoly::zero(p.ring());
    for (auto [e, c] : p.terms()) {
        e[v] += k;
        acc += MultiPoly::monomial(p.ring(), std::move(e), std::move(c));
    }
    return acc;
}

MultiPoly lead_coeff_in(const MultiPoly& p, std::size_t v, long d) {
    MultiPoly acc = MultiPoly::zero(p.ring());
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<long>(e[v]) == d) {
            Exponents e2 = e;
            e2[v] = 0;
            acc += MultiPoly::monomial(p.ring(), std::move(e2), c);
        }
    }
    return acc;
}

// Full pseudo-remainder rem(lc(B)^(delta+1) * A, B) w.r.t. v, with
// delta = deg_v(A) - deg_v(B); the exact multiplier matters for the
// subresultant divisions downstream.
MultiPoly pseudo_rem(MultiPoly A, const MultiPoly& B, std::size_t v) {
    long db = B.degree_in(v);
    long delta = A.degree_in(v) - db;
    MultiPoly lcB = lead_coeff_in(B, v, db);
    long scaled = 0;
    while (!A.is_zero()) {
        long da = A.degree_in(v);
        if (da < db) break;
        MultiPoly lcA = lead_coeff_in(A, v, da);
        A = A * lcB - times_power(lcA, v, static_cast<std::uint32_t>(da - db)) * B;
        ++scaled;
    }
    for (; scaled < delta + 1; ++scaled) A = A * lcB;
    return A;
}

MultiPoly poly_pow(const MultiPoly& base, long e) {
    MultiPoly r = MultiPoly::constant(base.ring(), 1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

MultiPoly content_in(const MultiPoly& p, std::size_t v) {
    auto coeffs = univariate_coeffs(p, v);
    MultiPoly g = MultiPoly::zero(p.ring());
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.normalized() : MultiPoly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

Int max_abs_coeff(const MultiPoly& p) {
    Int m = 0;
    for (const auto& [e, c] : p.terms()) {
        Int a = c < 0 ? Int(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

// p(v = value) with a shared power table; value may be thousands of bits.
MultiPoly eval_at_int(const MultiPoly& p, std::size_t v, const Int& value) {
    long d = p.degree_in(v);
    std::vector<Int> pw(static_cast<std::size_t>(d + 1));
    pw[0] = 1;
    for (long i = 1; i <= d; ++i) pw[i] = pw[i - 1] * value;
    TermMap acc;
    for (const auto& [e, c] : p.terms()) {
        Exponents e2 = e;
        std::uint32_t dv = e2[v];
        e2[v] = 0;
        auto [it, inserted] = acc.try_emplace(std::move(e2), 0);
        mpz_addmul(it->second.get_mpz_t(), c.get_mpz_t(), pw[dv].get_mpz_t());
    }
    MultiPoly out = MultiPoly::zero(p.ring());
    for (auto& [e, c] : acc)
        if (c != 0) out += MultiPoly::monomial(p.ring(), e, c);
    return out;
}

// Balanced residue in (-xi/2, xi/2].
Int balanced_mod(const Int& v, const Int& xi) {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (r * 2 > xi) r -= xi;
    return r;
}

// Inverse of evaluation: the xi-adic digit expansion of g, coefficient-wise
// balanced, read as a polynomial in v.
std::optional<MultiPoly> xi_adic_lift(const MultiPoly& g, std::size_t v, const Int& xi,
                                      long degree_cap) {
    MultiPoly res = MultiPoly::zero(g.ring());
    MultiPoly cur = g;
    std::uint32_t i = 0;
    while (!cur.is_zero()) {
        if (static_cast<long>(i) > degree_cap) return std::nullopt;
        MultiPoly digit = MultiPoly::zero(g.ring());
        for (const auto& [e, c] : cur.terms()) {
            Int d = balanced_mod(c, xi);
            if (d != 0) digit += MultiPoly::monomial(g.ring(), e, std::move(d));
        }
        if (!digit.is_zero()) res += times_power(digit, v, i);
        MultiPoly next = cur - digit;
        MultiPoly scaled = MultiPoly::zero(g.ring());
        for (const auto& [e, c] : next.terms()) {
            Int q;
            mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
            scaled += MultiPoly::monomial(g.ring(), e, std::move(q));
        }
        cur = std::move(scaled);
        ++i;
    }
    return res;
}

// Evaluation-based gcd: map one variable to a large integer, recurse, lift
// the integer-coefficient gcd back, and verify by exact division.  The
// evaluation point exceeds twice the height any common factor can have, so
// a verified candidate is the gcd; on any miss the caller falls back to the
// remainder-sequence route.
std::optional<MultiPoly> heu_gcd(const MultiPoly& a, const MultiPoly& b, int depth) {
    if (depth > 20) return std::nullopt;
    if (a.is_constant() && b.is_constant())
        return MultiPoly::constant(a.ring(), int_gcd(a.integer_content(), b.integer_content()));

    std::size_t v = 0;
    while (a.degree_in(v) == 0 && b.degree_in(v) == 0) ++v;
    long dv = std::max(a.degree_in(v), b.degree_in(v));
    long dmin = std::min(a.degree_in(v), b.degree_in(v));

    Int bound_a = (max_abs_coeff(a) + 1) << static_cast<unsigned>(std::min<long>(a.total_degree(), 60) + 2);
    Int bound_b = (max_abs_coeff(b) + 1) << static_cast<unsigned>(std::min<long>(b.total_degree(), 60) + 2);
    Int xi = 2 * (bound_a < bound_b ? bound_a : bound_b) + 3;
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(dv + 1) > 2'000'000)
        return std::nullopt; // evaluation would be unreasonably large

    for (int attempt = 0; attempt < 6; ++attempt) {
        MultiPoly A = eval_at_int(a, v, xi);
        MultiPoly B = eval_at_int(b, v, xi);
        if (!A.is_zero() && !B.is_zero()) {
            auto G = heu_gcd(A, B, depth + 1);
            if (G && !G->is_zero()) {
                auto lifted = xi_adic_lift(*G, v, xi, dmin);
                if (lifted && !lifted->is_zero()) {
                    MultiPoly cand = lifted->normalized();
                    if (a.divisible_by(cand) && b.divisible_by(cand)) {
                        // Reattach the integer content so inner lifts see
                        // the full gcd of the evaluated images.
                        Int ig = int_gcd(a.integer_content(), b.integer_content());
                        return cand * ig;
                    }
                }
            }
        }
        xi = (xi * 73794) / 27011 + 1;
    }
    return std::nullopt;
}

} // namespace

MultiPoly MultiPoly::gcd(const MultiPoly& a, const MultiPoly& b) {
    check_same_ring(a.ring(), b.ring());
    if (a.is_zero() && b.is_zero()) throw Error("gcd(0, 0) is undefined");
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    // The result is the primitive gcd: integer content 1, positive lead.
    if (a.is_constant() || b.is_constant()) return constant(a.ring(), 1);

    if (a.is_monomial() || b.is_monomial()) {
        // Exponent-wise minimum over all terms.
        Exponents e(a.ring()->size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            std::uint32_t lo = UINT32_MAX;
            for (const auto& [ea, ca] : a.terms()) lo = std::min(lo, ea[k]);
            for (const auto& [eb, cb] : b.terms()) lo = std::min(lo, eb[k]);
            e[k] = lo;
        }
        return monomial(a.ring(), std::move(e), 1);
    }

    // Divisibility shortcuts pay off when folding a gcd across a vector.
    if (a.term_count() <= b.term_count() && b.divisible_by(a)) return a.normalized();
    if (b.term_count() < a.term_count() && a.divisible_by(b)) return b.normalized();

    if (auto h = heu_gcd(a, b, 0)) return h->normalized();

    // Main variable: a common one with the fewest elimination steps; if the
    // supports are disjoint, strip the content of a lone variable instead.
    std::size_t v = SIZE_MAX;
    long best = 0;
    std::size_t lone = SIZE_MAX;
    for (std::size_t k = 0; k < a.ring()->size(); ++k) {
        long da = a.degree_in(k), db = b.degree_in(k);
        if (da > 0 && db > 0) {
            long score = std::min(da, db);
            if (v == SIZE_MAX || score < best) {
                v = k;
                best = score;
            }
        } else if (lone == SIZE_MAX && (da > 0 || db > 0)) {
            lone = k;
        }
    }
    if (v == SIZE_MAX) {
        const MultiPoly& has = a.degree_in(lone) > 0 ? a : b;
        const MultiPoly& other = a.degree_in(lone) > 0 ? b : a;
        return gcd(content_in(has, lone), other);
    }

    MultiPoly ca = content_in(a, v);
    MultiPoly cb = content_in(b, v);
    MultiPoly cg = gcd(ca, cb);
    MultiPoly A = a.exact_div(ca);
    MultiPoly B = b.exact_div(cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    // Subresultant PRS: coefficient growth is tamed by exact divisions with
    // the tracked g, h factors instead of per-step content extraction.
    MultiPoly sg = MultiPoly::constant(a.ring(), 1);
    MultiPoly sh = MultiPoly::constant(a.ring(), 1);
    while (true) {
        long delta = A.degree_in(v) - B.degree_in(v);
        MultiPoly R = pseudo_rem(A, B, v);
        if (R.is_zero()) break;
        if (R.degree_in(v) == 0) {
            // Coprime w.r.t. v: only content survives.
            return cg.normalized();
        }
        A = std::move(B);
        B = R.exact_div(sg * poly_pow(sh, delta));
        sg = lead_coeff_in(A, v, A.degree_in(v));
        if (delta >= 1) sh = poly_pow(sg, delta).exact_div(poly_pow(sh, delta - 1));
    }
    return (cg * B.exact_div(content_in(B, v))).normalized();
}

Rat MultiPoly::evaluate(const std::map<std::string, Rat>& assignment) const {
    // Resolve values once per variable; unresolved variables are only an
    // error if they actually appear.
    std::vector<const Rat*> vals(ring_->size(), nullptr);
    for (const auto& [name, value] : assignment) {
        if (auto idx = ring_->find(name)) vals[*idx] = &value;
    }
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!vals[k])
                throw Error("evaluate: no value for variable '" + ring_->name(k) + "'");
            term *= rat_pow(*vals[k], e[k]);
        }
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Int& value) const {
    TermMap acc;
    for (const auto& [e, c] : terms_) {
        Int coeff = c;
        if (e[var] > 0) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), e[var]);
            coeff *= pw;
        }
        if (coeff == 0) continue;
        Exponents e2 = e;
        e2[var] = 0;
        auto [it, inserted] = acc.try_emplace(std::move(e2), 0);
        it->second += coeff;
    }
    MultiPoly out;
    out.ring_ = ring_;
    out.terms_ = collapse(std::move(acc));
    return out;
}

MultiPoly MultiPoly::map_to(const RingPtr& target) const {
    std::vector<std::size_t> where(ring_->size(), SIZE_MAX);
    for (std::size_t k = 0; k < ring_->size(); ++k) {
        if (auto idx = target->find(ring_->name(k))) where[k] = *idx;
    }
    TermMap acc;
    for (const auto& [e, c] : terms_) {
        Exponents e2(target->size(), 0);
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (where[k] == SIZE_MAX)
                throw RingMismatchError("variable '" + ring_->name(k) +
                                        "' does not exist in the target ring");
            e2[where[k]] += e[k];
        }
        auto [it, inserted] = acc.try_emplace(std::move(e2), 0);
        it->second += c;
    }
    MultiPoly out;
    out.ring_ = target;
    out.terms_ = collapse(std::move(acc));
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text format.

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; });
        bool coeff_shown = false;
        if (mag != 1 || !any_var) {
            os << mag.get_str();
            coeff_shown = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (coeff_shown) os << "*";
            os << ring_->name(k);
            if (e[k] > 1) os << "^" << e[k];
            coeff_shown = true;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer at position " + std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
        }
        if (pos == start) throw ParseError("expected a variable name at position " + std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace

MultiPoly MultiPoly::parse(RingPtr ring, std::string_view text) {
    Lexer lx{text};
    TermMap acc;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.accept('+')) {
            sign = 1;
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        // One term: factors joined by '*'; a factor is an integer or var^exp.
        Int coeff = sign;
        Exponents e(ring->size(), 0);
        bool want_factor = true;
        while (want_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= Int(lx.integer());
            } else {
                std::string name = lx.identifier();
                auto idx = ring->find(name);
                if (!idx) throw ParseError("unknown variable '" + name + "'");
                std::uint32_t exp = 1;
                if (lx.accept('^')) exp = static_cast<std::uint32_t>(std::stoul(lx.integer()));
                e[*idx] += exp;
            }
            want_factor = lx.accept('*');
        }
        if (coeff != 0) {
            auto [it, inserted] = acc.try_emplace(std::move(e), 0);
            it->second += coeff;
        }
        first = false;
    }
    if (first) throw ParseError("empty polynomial text");
    MultiPoly out;
    out.ring_ = std::move(ring);
    out.terms_ = collapse(std::move(acc));
    return out;
}

} // namespace asep
