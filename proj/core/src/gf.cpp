#include "vsb/gf.hpp"

#include <algorithm>
#include <sstream>

namespace vsb {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense F_p[x] helpers used only for modulus validation and the default
// modulus search. Coefficient vectors are low degree first, trailing
// zeros trimmed.

using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mul_mod(const PolyP& x, const PolyP& y, const PolyP& m, std::uint64_t p) {
    if (x.empty() || y.empty()) return {};
    PolyP r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    }
    // m is monic, so reduction is plain back-substitution.
    std::size_t dm = m.size() - 1;
    for (std::size_t i = r.size(); i-- > dm;) {
        std::uint64_t c = r[i];
        if (c == 0) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < dm; ++j)
            r[i - dm + j] = (r[i - dm + j] + (p - m[j] % p) * c) % p;
    }
    r.resize(dm);
    trim(r);
    return r;
}

PolyP poly_pow_mod(PolyP base, std::uint64_t e, const PolyP& m, std::uint64_t p) {
    PolyP acc{1};
    while (e > 0) {
        if (e & 1) acc = poly_mul_mod(acc, base, m, p);
        base = poly_mul_mod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

PolyP poly_mod(PolyP f, const PolyP& g, std::uint64_t p) {
    // g monic up to a unit: normalize the leading coefficient first.
    PolyP gm = g;
    trim(gm);
    std::uint64_t lead = gm.back();
    std::uint64_t inv_lead = 1;
    // Fermat inverse of the leading coefficient mod p.
    {
        std::uint64_t b = lead % p, e = p - 2, acc = 1;
        while (e > 0) {
            if (e & 1) acc = acc * b % p;
            b = b * b % p;
            e >>= 1;
        }
        inv_lead = acc;
    }
    trim(f);
    while (f.size() >= gm.size()) {
        std::uint64_t c = f.back() * inv_lead % p;
        std::size_t shift = f.size() - gm.size();
        for (std::size_t j = 0; j < gm.size(); ++j)
            f[shift + j] = (f[shift + j] + (p - gm[j] * c % p)) % p;
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

PolyP poly_gcd(PolyP f, PolyP g, std::uint64_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        PolyP r = poly_mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

std::uint64_t upow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

bool is_irreducible(const PolyP& m, std::uint64_t p, int a) {
    if (a == 1) return true;
    // x^{p^a} must equal x mod m, and for every prime r | a,
    // gcd(x^{p^{a/r}} - x, m) must be constant.
    PolyP x{0, 1};
    PolyP frob = poly_pow_mod(x, upow(p, static_cast<std::uint64_t>(a)), m, p);
    if (frob != x) return false;
    int rem = a;
    for (int r = 2; r * r <= rem || r <= rem; ++r) {
        if (rem % r != 0) continue;
        while (rem % r == 0) rem /= r;
        PolyP g = poly_pow_mod(x, upow(p, static_cast<std::uint64_t>(a / r)), m, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        trim(g);
        PolyP d = poly_gcd(m, g, p);
        if (d.size() > 1) return false;
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint64_t p, int a) {
    if (a == 1) return {0, 1};
    // Enumerate coefficient tuples (c_0, ..., c_{a-1}) in lexicographic
    // order, low degree compared first, and take the first irreducible.
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a), 0);
    for (;;) {
        PolyP m(c.begin(), c.end());
        m.push_back(1);
        if (is_irreducible(m, p, a)) {
            std::vector<std::uint32_t> out(c);
            out.push_back(1);
            return out;
        }
        int i = a - 1;
        while (i >= 0) {
            if (++c[static_cast<std::size_t>(i)] < p) break;
            c[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break; // cannot happen: irreducibles of every degree exist
    }
    throw ReducibleModulusError("no irreducible modulus found");
}

} // namespace

Field::Field(std::uint64_t p, int a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < a_; ++i) q_ *= p_;
}

FieldPtr Field::make(std::uint64_t p, int a,
                     std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p))
        throw NotPrimeError("characteristic " + std::to_string(p) + " is not prime");
    if (a < 1)
        throw BadParamsError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (int i = 0; i < a; ++i) {
        q *= p;
        if (q > (1u << 16))
            throw DomainTooLargeError("field order exceeds 2^16");
    }
    std::vector<std::uint32_t> m;
    if (modulus) {
        m = *modulus;
        if (m.size() != static_cast<std::size_t>(a) + 1 || m.back() != 1)
            throw ReducibleModulusError("modulus must be monic of degree equal to the extension degree");
        for (auto c : m)
            if (c >= p)
                throw ReducibleModulusError("modulus coefficients must lie in [0, p)");
        PolyP mp(m.begin(), m.end());
        if (!is_irreducible(mp, p, a))
            throw ReducibleModulusError("modulus is reducible");
    } else {
        m = default_modulus(p, a);
    }
    return FieldPtr(new Field(p, a, std::move(m)));
}

bool Field::compatible(const Field& other) const {
    return this == &other ||
           (p_ == other.p_ && a_ == other.a_ && modulus_ == other.modulus_);
}

FieldElement Field::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint32_t>(a_, 0));
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::generator() const {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a_), 0);
    if (a_ > 1) c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::from_coeffs(std::vector<std::uint32_t> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(a_))
        throw BadParamsError("coefficient vector length must equal the extension degree");
    for (auto c : coeffs)
        if (c >= p_)
            throw BadParamsError("coefficients must lie in [0, p)");
    return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement Field::from_int(std::uint64_t v) const {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a_), 0);
    c[0] = static_cast<std::uint32_t>(v % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

std::uint64_t Field::rank(const FieldElement& x) const {
    std::uint64_t r = 0;
    for (std::size_t i = x.c_.size(); i-- > 0;) r = r * p_ + x.c_[i];
    return r;
}

FieldElement Field::from_rank(std::uint64_t r) const {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a_), 0);
    for (int i = 0; i < a_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(r % p_);
        r /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

namespace {
void check_same(const Field& f, const FieldElement& x, const FieldElement& y) {
    if (!x.field() || !y.field() || !f.compatible(*x.field()) || !f.compatible(*y.field()))
        throw FieldMismatchError("operands belong to different fields");
}
} // namespace

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
    check_same(*this, x, y);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a_));
    for (int i = 0; i < a_; ++i) {
        auto s = static_cast<std::uint64_t>(x.c_[i]) + y.c_[i];
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
    return add(x, neg(y));
}

FieldElement Field::neg(const FieldElement& x) const {
    if (!x.field() || !compatible(*x.field()))
        throw FieldMismatchError("operand belongs to a different field");
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a_));
    for (int i = 0; i < a_; ++i)
        c[static_cast<std::size_t>(i)] =
            x.c_[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - x.c_[i]);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
    check_same(*this, x, y);
    std::vector<std::uint64_t> r(static_cast<std::size_t>(2 * a_ - 1), 0);
    for (int i = 0; i < a_; ++i) {
        if (x.c_[i] == 0) continue;
        for (int j = 0; j < a_; ++j)
            r[static_cast<std::size_t>(i + j)] += static_cast<std::uint64_t>(x.c_[i]) * y.c_[j];
    }
    for (std::size_t i = r.size(); i-- > static_cast<std::size_t>(a_);) {
        std::uint64_t c = r[i] % p_;
        r[i] = 0;
        if (c == 0) continue;
        for (int j = 0; j < a_; ++j)
            r[i - static_cast<std::size_t>(a_) + static_cast<std::size_t>(j)] +=
                (p_ - modulus_[static_cast<std::size_t>(j)]) % p_ * c;
    }
    std::vector<std::uint32_t> c(static_cast<std::size_t>(a_));
    for (int i = 0; i < a_; ++i)
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(r[static_cast<std::size_t>(i)] % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement Field::inv(const FieldElement& x) const {
    if (x.is_zero())
        throw DivisionByZeroError("inverse of zero");
    return pow(x, q_ - 2);
}

FieldElement Field::pow(const FieldElement& x, std::uint64_t e) const {
    if (!x.field() || !compatible(*x.field()))
        throw FieldMismatchError("operand belongs to a different field");
    FieldElement acc = one();
    FieldElement base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (a_ > 1) {
        os << " = F_" << p_ << "[t]/(";
        bool first = true;
        for (int i = 0; i <= a_; ++i) {
            auto c = modulus_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || c != 1) os << c;
            if (i > 0 && c != 1) os << "*";
            if (i == 1) os << "t";
            if (i > 1) os << "t^" << i;
        }
        os << ")";
    }
    return os.str();
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return field_->add(*this, o);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return field_->sub(*this, o);
}

FieldElement FieldElement::operator-() const { return field_->neg(*this); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return field_->mul(*this, o);
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return !field_ && !o.field_;
    return field_->compatible(*o.field_) && c_ == o.c_;
}

namespace {

// Gauss-Jordan inverse of a square matrix over F_p. Returns false when
// the matrix is singular.
bool invert_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p,
                  std::vector<std::vector<std::uint32_t>>& out) {
    std::size_t n = m.size();
    std::vector<std::vector<std::uint64_t>> inv(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] % p == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        std::uint64_t d = m[col][col] % p, e = p - 2, dinv = 1;
        while (e > 0) {
            if (e & 1) dinv = dinv * d % p;
            d = d * d % p;
            e >>= 1;
        }
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] % p * dinv % p;
            inv[col][j] = inv[col][j] % p * dinv % p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            std::uint64_t f = m[r][col] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = (m[r][j] + (p - f) * m[col][j]) % p;
                inv[r][j] = (inv[r][j] + (p - f) * inv[col][j]) % p;
            }
        }
    }
    out.assign(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out[i][j] = static_cast<std::uint32_t>(inv[i][j] % p);
    return true;
}

} // namespace

ExtensionCtx ExtensionCtx::make(FieldPtr base, int n) {
    if (!base) throw BadParamsError("null base field");
    if (n < 1) throw BadParamsError("extension degree must be at least 1");
    std::uint64_t qn = 1;
    for (int i = 0; i < n; ++i) {
        qn *= base->q();
        if (qn > (1u << 16))
            throw DomainTooLargeError("extension order exceeds 2^16");
    }
    ExtensionCtx ctx;
    ctx.base_ = base;
    ctx.n_ = n;
    int a = base->a();
    if (n == 1) {
        // Identity embedding: the top field is the base field itself.
        ctx.top_ = base;
        FieldElement t = base->generator();
        FieldElement acc = base->one();
        for (int j = 0; j < a; ++j) {
            ctx.embed_powers_.push_back(acc);
            acc = acc * t;
        }
        ctx.basis_ = {base->one()};
        std::size_t dim = static_cast<std::size_t>(a);
        ctx.coord_inv_.assign(dim, std::vector<std::uint32_t>(dim, 0));
        for (std::size_t i = 0; i < dim; ++i) ctx.coord_inv_[i][i] = 1;
        return ctx;
    }
    ctx.top_ = Field::make(base->p(), a * n);
    const Field& top = *ctx.top_;

    // Exhaustive root scan: the first top element (by rank) that kills
    // the base modulus becomes the image of the base generator.
    FieldElement theta = top.zero();
    bool found = false;
    const auto& m = base->modulus();
    for (std::uint64_t r = 0; r < top.q(); ++r) {
        FieldElement cand = top.from_rank(r);
        FieldElement val = top.zero();
        for (int j = a; j >= 0; --j)
            val = val * cand + top.from_int(m[static_cast<std::size_t>(j)]);
        if (val.is_zero()) {
            theta = cand;
            found = true;
            break;
        }
    }
    if (!found)
        throw Error("base modulus has no root in the extension"); // unreachable
    FieldElement acc = top.one();
    for (int j = 0; j < a; ++j) {
        ctx.embed_powers_.push_back(acc);
        acc = acc * theta;
    }

    // Power basis of a generator, checked for F_q-linear independence by
    // inverting the F_p change-of-coordinates matrix. The canonical
    // generator always passes (its minimal polynomial over F_q has degree
    // exactly n); the fallback scan is kept as a guard.
    std::size_t dim = static_cast<std::size_t>(a * n);
    for (std::uint64_t attempt = 0; attempt <= top.q(); ++attempt) {
        FieldElement beta = attempt == 0 ? top.generator() : top.from_rank(attempt - 1);
        std::vector<FieldElement> basis;
        FieldElement b = top.one();
        for (int i = 0; i < n; ++i) {
            basis.push_back(b);
            b = b * beta;
        }
        std::vector<std::vector<std::uint64_t>> mat(dim, std::vector<std::uint64_t>(dim, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < a; ++j) {
                FieldElement col = basis[static_cast<std::size_t>(i)] *
                                   ctx.embed_powers_[static_cast<std::size_t>(j)];
                std::size_t cidx = static_cast<std::size_t>(i * a + j);
                for (std::size_t rI = 0; rI < dim; ++rI)
                    mat[rI][cidx] = col.coeffs()[rI];
            }
        std::vector<std::vector<std::uint32_t>> inv;
        if (invert_mod_p(std::move(mat), base->p(), inv)) {
            ctx.basis_ = std::move(basis);
            ctx.coord_inv_ = std::move(inv);
            return ctx;
        }
    }
    throw Error("no power basis found"); // unreachable
}

FieldElement ExtensionCtx::embed(const FieldElement& x) const {
    if (!x.field() || !base_->compatible(*x.field()))
        throw FieldMismatchError("embed expects a base-field element");
    FieldElement out = top_->zero();
    for (int j = 0; j < base_->a(); ++j) {
        std::uint32_t c = x.coeffs()[static_cast<std::size_t>(j)];
        if (c == 0) continue;
        out = out + embed_powers_[static_cast<std::size_t>(j)] * top_->from_int(c);
    }
    return out;
}

std::vector<FieldElement> ExtensionCtx::coords(const FieldElement& y) const {
    if (!y.field() || !top_->compatible(*y.field()))
        throw FieldMismatchError("coords expects a top-field element");
    std::size_t dim = coord_inv_.size();
    std::uint64_t p = base_->p();
    std::vector<std::uint64_t> sol(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < dim; ++j)
            s += static_cast<std::uint64_t>(coord_inv_[i][j]) * y.coeffs()[j];
        sol[i] = s % p;
    }
    int a = base_->a();
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(a));
        for (int j = 0; j < a; ++j)
            c[static_cast<std::size_t>(j)] =
                static_cast<std::uint32_t>(sol[static_cast<std::size_t>(i * a + j)]);
        out.push_back(base_->from_coeffs(std::move(c)));
    }
    return out;
}

FieldElement ExtensionCtx::from_coords(const std::vector<FieldElement>& cs) const {
    if (cs.size() != static_cast<std::size_t>(n_))
        throw BadParamsError("coordinate tuple has wrong length");
    FieldElement out = top_->zero();
    for (int i = 0; i < n_; ++i)
        out = out + embed(cs[static_cast<std::size_t>(i)]) * basis_[static_cast<std::size_t>(i)];
    return out;
}

FieldElement norm_value(const ExtensionCtx& ctx, const FieldElement& x) {
    std::uint64_t q = ctx.base()->q();
    std::uint64_t qpow = q;
    for (int i = 1; i < ctx.degree(); ++i) qpow *= q;
    std::uint64_t e = (qpow - 1) / (q - 1);
    FieldElement z = ctx.top()->pow(x, e);
    std::vector<FieldElement> cs = ctx.coords(z);
    for (std::size_t i = 1; i < cs.size(); ++i)
        if (!cs[i].is_zero())
            throw NotInBaseFieldError("norm power did not land in the base field");
    return cs[0];
}

std::string FieldElement::to_string() const {
    bool constant = true;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) constant = false;
    if (constant) return std::to_string(c_.empty() ? 0 : c_[0]);
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0 && c_[i] != 1) os << "*";
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
    }
    os << ")";
    return os.str();
}

} // namespace vsb
