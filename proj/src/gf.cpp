#include "coverdepth/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coverdepth {

namespace {

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- polynomial arithmetic over GF(p), coefficient vectors c[i] = coeff of x^i ----

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    // p is prime, a != 0
    unsigned r = 1;
    unsigned base = a % p;
    unsigned exp = p - 2;
    while (exp) {
        if (exp & 1) r = static_cast<unsigned>((static_cast<unsigned long long>(r) * base) % p);
        base = static_cast<unsigned>((static_cast<unsigned long long>(base) * base) % p);
        exp >>= 1;
    }
    return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<unsigned>(
                (prod[i + j] + static_cast<unsigned long long>(a[i]) * b[j]) % p);
    }
    // reduce mod the monic polynomial `mod` of degree mod.size()-1
    const size_t deg = mod.size() - 1;
    for (size_t i = prod.size(); i-- > deg;) {
        const unsigned c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            prod[i - deg + j] = static_cast<unsigned>(
                (prod[i - deg + j] + static_cast<unsigned long long>(c) * (p - mod[j] % p)) % p);
    }
    prod.resize(deg);
    trim(prod);
    return prod;
}

Poly poly_powmod(Poly base, unsigned long long exp, const Poly& mod, unsigned p) {
    Poly result{1};
    while (exp) {
        if (exp & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        Poly r = a;
        const unsigned lead_inv = inv_mod_p(b.back(), p);
        while (r.size() >= b.size()) {
            const unsigned c =
                static_cast<unsigned>((static_cast<unsigned long long>(r.back()) * lead_inv) % p);
            const size_t shift = r.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                r[shift + j] = static_cast<unsigned>(
                    (r[shift + j] + static_cast<unsigned long long>(c) * (p - b[j] % p)) % p);
            trim(r);
            if (r.empty()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test for a monic polynomial of degree e >= 1.
bool is_irreducible(const Poly& f, unsigned p) {
    const size_t e = f.size() - 1;
    if (e == 1) return true;
    const Poly x{0, 1};
    // x^(p^e) == x mod f
    Poly t = x;
    for (size_t i = 0; i < e; ++i) t = poly_powmod(t, p, f, p);
    Poly diff = t;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(e/t)) - x, f) == 1 for every prime divisor t of e
    for (unsigned d = 2; d <= e; ++d) {
        if (e % d != 0 || !is_prime(d)) continue;
        Poly u = x;
        for (size_t i = 0; i < e / d; ++i) u = poly_powmod(u, p, f, p);
        Poly v = u;
        v.resize(std::max<size_t>(v.size(), 2), 0);
        v[1] = (v[1] + p - 1) % p;
        trim(v);
        Poly g = poly_gcd(v, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<unsigned> prime_factors(unsigned n) {
    std::vector<unsigned> fs;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

Poly code_to_poly(std::uint32_t code, unsigned p) {
    Poly c;
    while (code) {
        c.push_back(code % p);
        code /= p;
    }
    return c;
}

std::uint32_t poly_to_code(const Poly& c, unsigned p) {
    std::uint32_t code = 0;
    for (size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

std::mutex field_cache_mutex;
std::map<std::pair<unsigned, unsigned>, FieldPtr> field_cache;

}  // namespace

FieldPtr FiniteField::make(unsigned p, unsigned e) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p = " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 16) throw std::invalid_argument("make_field: e must be in [1, 16]");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > 65536ULL) throw std::invalid_argument("make_field: p^e exceeds 2^16");
    }

    {
        std::lock_guard<std::mutex> lock(field_cache_mutex);
        auto it = field_cache.find({p, e});
        if (it != field_cache.end()) return it->second;
    }

    auto field = std::shared_ptr<FiniteField>(new FiniteField());
    field->p_ = p;
    field->e_ = e;
    field->q_ = static_cast<unsigned>(q);

    if (e == 1) {
        field->modulus_ = {0, 1};
    } else {
        // Smallest (c_0, ..., c_{e-1}) in lexicographic order, constant term first.
        bool found = false;
        std::vector<unsigned> c(e, 0);
        while (!found) {
            Poly f(c.begin(), c.end());
            f.push_back(1);  // monic
            if (is_irreducible(f, p)) {
                field->modulus_.assign(f.begin(), f.end());
                found = true;
                break;
            }
            // odometer: last coefficient varies fastest
            size_t i = e;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) throw std::logic_error("make_field: no irreducible found");
            }
        }
    }

    // log/antilog tables from a primitive element
    const Poly mod(field->modulus_.begin(), field->modulus_.end());
    auto mul_raw = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (e == 1) return static_cast<std::uint32_t>((static_cast<unsigned long long>(a) * b) % p);
        return poly_to_code(poly_mulmod(code_to_poly(a, p), code_to_poly(b, p), mod, p), p);
    };
    auto pow_raw = [&](std::uint32_t a, unsigned long long exp) {
        std::uint32_t r = 1;
        while (exp) {
            if (exp & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            exp >>= 1;
        }
        return r;
    };
    const unsigned order = field->q_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 1; cand < field->q_; ++cand) {
        bool primitive = true;
        for (unsigned f : factors)
            if (pow_raw(cand, order / f) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("make_field: no primitive element found");
    field->generator_ = g;
    field->exp_.resize(order);
    field->log_.assign(field->q_, 0);
    std::uint32_t acc = 1;
    for (unsigned i = 0; i < order; ++i) {
        field->exp_[i] = acc;
        field->log_[acc] = i;
        acc = mul_raw(acc, g);
    }
    if (acc != 1) throw std::logic_error("make_field: generator order mismatch");

    FieldPtr result = field;
    std::lock_guard<std::mutex> lock(field_cache_mutex);
    auto [it, inserted] = field_cache.emplace(std::make_pair(p, e), result);
    return it->second;
}

FieldPtr FiniteField::from_order(unsigned q) {
    if (q < 2) throw std::invalid_argument("from_order: q must be >= 2");
    unsigned n = q;
    unsigned p = 0;
    for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = n;  // q itself prime
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1)
        throw std::invalid_argument("from_order: q = " + std::to_string(q) +
                                    " is not a prime power");
    return make(p, e);
}

void FiniteField::check_code(std::uint32_t a) const {
    if (a >= q_) throw std::invalid_argument("field element code out of range");
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
        const std::uint32_t s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    std::uint32_t r = 0, mul = 1;
    while (a || b) {
        const unsigned da = a % p_, db = b % p_;
        unsigned ds = da + db;
        if (ds >= p_) ds -= p_;
        r += ds * mul;
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return r;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : q_ - a;
    std::uint32_t r = 0, mul = 1;
    while (a) {
        const unsigned da = a % p_;
        r += (da == 0 ? 0 : p_ - da) * mul;
        a /= p_;
        mul *= p_;
    }
    return r;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const unsigned order = q_ - 1;
    unsigned s = log_[a] + log_[b];
    if (s >= order) s -= order;
    return exp_[s];
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    check_code(a);
    const unsigned order = q_ - 1;
    const unsigned l = log_[a];
    return exp_[l == 0 ? 0 : order - l];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t exp) const {
    if (a == 0) return exp == 0 ? 1 : 0;
    const unsigned order = q_ - 1;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (exp % order)) % order;
    return exp_[static_cast<unsigned>(l)];
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (e_ > 1) {
        os << " = GF(" << p_ << "^" << e_ << "), modulus";
        bool first = true;
        for (size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            os << (first ? " " : " + ");
            first = false;
            if (i == 0 || modulus_[i] != 1) os << modulus_[i];
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

FieldElement::FieldElement(FieldPtr f, std::uint32_t c) : field(std::move(f)), code(c) {
    if (!field) throw std::invalid_argument("FieldElement: null field");
    if (code >= field->q()) throw std::invalid_argument("FieldElement: code out of range");
}

namespace {

const FiniteField& common_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field || !b.field || !a.field->same_as(*b.field))
        throw std::invalid_argument("field elements from different fields");
    return *a.field;
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.field, common_field(a, b).add(a.code, b.code)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.field, common_field(a, b).sub(a.code, b.code)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.field, common_field(a, b).mul(a.code, b.code)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    common_field(a, b);
    return a.code == b.code;
}

FieldElement inverse(const FieldElement& a) {
    if (!a.field) throw std::invalid_argument("FieldElement: null field");
    return {a.field, a.field->inv(a.code)};
}

FieldElement embed(const FieldPtr& base, const FieldPtr& ext, const FieldElement& a) {
    if (!base || !ext) throw std::invalid_argument("embed: null field");
    if (!a.field || !a.field->same_as(*base))
        throw std::invalid_argument("embed: element not from the base field");
    if (base->e() != 1 || base->p() != ext->p())
        throw std::invalid_argument("embed: only prime-subfield embeddings are supported");
    // Constant polynomials keep their code under the p-adic encoding.
    return {ext, a.code};
}

}  // namespace coverdepth
