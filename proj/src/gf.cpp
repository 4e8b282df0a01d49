#include "legendre/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace legendre {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 64-bit; p < 2^32
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        std::int64_t t = r0 - quot * r1;
        r0 = r1;
        r1 = t;
        t = s0 - quot * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1)
        throw std::domain_error("inverse of zero");
    std::int64_t ip = static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(((s0 % ip) + ip) % ip);
}

// f mod g over F_p, g nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
    trim(f);
    std::uint64_t lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        std::uint64_t c = f.back() * lead_inv % p;
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = c * g[i] % p;
            f[shift + i] = (f[shift + i] + p - sub) % p;
        }
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    if (a.empty() || b.empty())
        return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1)
            result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1)
        return std::nullopt;
    return std::make_pair(p, k);
}

bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p) {
    Poly f(monic.begin(), monic.end());
    trim(f);
    if (f.size() < 2 || f.back() != 1)
        return false;
    std::size_t k = f.size() - 1;
    if (k == 1)
        return true;
    Poly x_pow{0, 1};  // x^(p^i) mod f
    for (std::size_t i = 1; i <= k / 2; ++i) {
        x_pow = poly_powmod(x_pow, p, f, p);
        Poly diff = x_pow;
        if (diff.size() < 2)
            diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty())
            return false;
        if (poly_gcd(f, diff, p).size() > 1)
            return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (p == 2 || p == 3)
        throw std::invalid_argument("characteristic must exceed 3");
    if (!is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw std::invalid_argument("extension degree must be at least 1");

    q_ = 1;
    radix_.reserve(k);
    for (unsigned i = 0; i < k; ++i) {
        radix_.push_back(q_);
        if (q_ > kMaxFieldOrder / p)
            throw std::invalid_argument("field order exceeds " + std::to_string(kMaxFieldOrder));
        q_ *= p;
    }

    if (k == 1) {
        modulus_ = {0, 1};
    } else {
        // Candidates c_0 + c_1 x + ... + x^k in lexicographic order with c_0
        // most significant. c_0 = 0 is always reducible.
        Poly cand(k + 1, 0);
        cand[k] = 1;
        for (std::uint64_t n = q_ / p;; ++n) {
            std::uint64_t rest = n;
            for (unsigned i = k; i-- > 0;) {
                cand[i] = rest % p;
                rest /= p;
            }
            if (is_irreducible(cand, p)) {
                modulus_ = cand;
                break;
            }
        }
    }

    for (std::uint64_t a = 2; a < q_; ++a) {
        if (pow(a, (q_ - 1) / 2) != 1) {
            nonresidue_ = a;
            break;
        }
    }
}

FieldRef make_field(std::uint64_t p, unsigned k) {
    return std::make_shared<const FieldSpec>(p, k);
}

std::vector<std::uint64_t> FieldSpec::coeffs_of(std::uint64_t encoded) const {
    std::vector<std::uint64_t> c(k_);
    for (unsigned i = 0; i < k_; ++i) {
        c[i] = encoded % p_;
        encoded /= p_;
    }
    return c;
}

std::uint64_t FieldSpec::encode(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() > k_)
        throw std::invalid_argument("too many coefficients for degree-" + std::to_string(k_) + " field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= p_)
            throw std::invalid_argument("coefficient " + std::to_string(coeffs[i]) + " not reduced mod " +
                                        std::to_string(p_));
        v += coeffs[i] * radix_[i];
    }
    return v;
}

FieldElement FieldSpec::zero() const { return {*this, 0}; }
FieldElement FieldSpec::one() const { return {*this, 1}; }

FieldElement FieldSpec::element(std::uint64_t encoded) const {
    if (encoded >= q_)
        throw std::invalid_argument("encoding " + std::to_string(encoded) + " out of range for F_" +
                                    std::to_string(q_));
    return {*this, encoded};
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint64_t> coeffs) const {
    return {*this, encode(coeffs)};
}

FieldElement FieldSpec::from_integer(std::int64_t n) const {
    std::int64_t ip = static_cast<std::int64_t>(p_);
    return {*this, static_cast<std::uint64_t>(((n % ip) + ip) % ip)};
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t s = a % p_ + b % p_;
        if (s >= p_)
            s -= p_;
        v += s * radix_[i];
        a /= p_;
        b /= p_;
    }
    return v;
}

std::uint64_t FieldSpec::sub(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1)
        return a >= b ? a - b : a + p_ - b;
    std::uint64_t v = 0;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint64_t x = a % p_, y = b % p_;
        v += (x >= y ? x - y : x + p_ - y) * radix_[i];
        a /= p_;
        b /= p_;
    }
    return v;
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1)
        return a * b % p_;
    Poly x = coeffs_of(a), y = coeffs_of(b);
    Poly prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i) {
        if (x[i] == 0)
            continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
    // modulus is monic: x^k = -(m_0 + ... + m_{k-1} x^{k-1})
    for (std::size_t d = prod.size(); d-- > k_;) {
        std::uint64_t c = prod[d];
        if (c == 0)
            continue;
        for (unsigned i = 0; i < k_; ++i) {
            std::uint64_t sub = c * modulus_[i] % p_;
            std::uint64_t& slot = prod[d - k_ + i];
            slot = slot >= sub ? slot - sub : slot + p_ - sub;
        }
        prod[d] = 0;
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < k_; ++i)
        v += prod[i] * radix_[i];
    return v;
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1;
    while (e > 0) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

const FieldElement& FieldElement::checked(const FieldElement& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("operands belong to different fields");
    return o;
}

bool FieldElement::is_one() const { return value_ == 1; }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return {*field_, field_->add(value_, checked(o).value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return {*field_, field_->sub(value_, checked(o).value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    return {*field_, field_->mul(value_, checked(o).value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * checked(o).inv(); }

FieldElement FieldElement::operator-() const { return {*field_, field_->sub(0, value_)}; }

FieldElement FieldElement::inv() const {
    if (value_ == 0)
        throw std::domain_error("inverse of zero");
    if (field_->k_ == 1)
        return {*field_, inv_mod(value_, field_->p_)};
    return pow(field_->q_ - 2);
}

FieldElement FieldElement::pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

std::vector<FieldElement> elements(const FieldSpec& field) {
    std::vector<FieldElement> out;
    out.reserve(field.order());
    for (std::uint64_t v = 0; v < field.order(); ++v)
        out.emplace_back(field, v);
    return out;
}

int jacobi(const FieldElement& a) {
    if (a.is_zero())
        return 0;
    return a.pow((a.field().order() - 1) / 2).is_one() ? 1 : -1;
}

std::optional<FieldElement> sqrt(const FieldElement& a) {
    const FieldSpec& F = a.field();
    if (a.is_zero())
        return a;
    if (jacobi(a) != 1)
        return std::nullopt;

    const std::uint64_t q = F.order();
    FieldElement root = a;
    if (q % 4 == 3) {
        root = a.pow((q + 1) / 4);
    } else {
        unsigned s = 0;
        std::uint64_t t = q - 1;
        while (t % 2 == 0) {
            t /= 2;
            ++s;
        }
        FieldElement c = F.element(F.nonresidue()).pow(t);
        FieldElement b = a.pow(t);
        root = a.pow((t + 1) / 2);
        unsigned m = s;
        while (!b.is_one()) {
            unsigned i = 0;
            FieldElement b2 = b;
            while (!b2.is_one()) {
                b2 = b2.square();
                ++i;
            }
            FieldElement g = c;
            for (unsigned j = 0; j + i + 1 < m; ++j)
                g = g.square();
            root *= g;
            c = g.square();
            b *= c;
            m = i;
        }
    }
    FieldElement other = -root;
    return std::min(root, other);
}

}  // namespace legendre
