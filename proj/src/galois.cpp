#include "coltrs/galois.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coltrs {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

// Dense polynomial arithmetic over GF(p), little-endian coefficient vectors.
using Poly = std::vector<std::uint32_t>;

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = (out[i + j] + f[i] * g[j]) % p;
    }
    return out;
}

// f mod g, g monic
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
    f = poly_trim(std::move(f));
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        std::uint32_t lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead) {
            for (std::size_t i = 0; i <= dg; ++i) {
                std::uint32_t sub = (lead * g[i]) % p;
                f[shift + i] = (f[shift + i] + p - sub % p) % p;
            }
        }
        f.pop_back();
        f = poly_trim(std::move(f));
        if (f.empty()) break;
    }
    return f;
}

bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (f[0] == 0) return deg == 1;  // divisible by x
    if (deg == 1) return true;
    // trial division by all monic polynomials of degree 1..deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly g(d + 1, 0);
            std::uint64_t v = t;
            for (std::size_t i = 0; i < d; ++i) { g[i] = v % p; v /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

gf pack(const Poly& cs, std::uint32_t p, std::uint32_t m) {
    gf v = 0;
    for (std::size_t i = m; i-- > 0;)
        v = v * p + (i < cs.size() ? cs[i] : 0);
    return v;
}

Poly unpack(gf a, std::uint32_t p, std::uint32_t m) {
    Poly cs(m);
    for (std::uint32_t i = 0; i < m; ++i) { cs[i] = a % p; a /= p; }
    return cs;
}

// table-free multiply, used only while bootstrapping the tables
gf slow_mul(gf a, gf b, std::uint32_t p, std::uint32_t m, const Poly& mod) {
    if (m == 1) return (a * b) % p;
    Poly prod = poly_mul(unpack(a, p, m), unpack(b, p, m), p);
    return pack(poly_mod(std::move(prod), mod, p), p, m);
}

std::uint64_t slow_order(gf a, std::uint32_t p, std::uint32_t m, const Poly& mod,
                         std::uint32_t q) {
    gf x = a;
    std::uint64_t ord = 1;
    while (x != 1) {
        x = slow_mul(x, a, p, m, mod);
        ++ord;
        if (ord > q) throw std::logic_error("order loop did not terminate");
    }
    return ord;
}

std::vector<std::uint32_t> split_coeffs(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) throw std::invalid_argument("empty coefficient in field description");
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return out;
}

std::string join_coeffs(const std::vector<std::uint32_t>& cs) {
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(cs[i]);
    }
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     const std::vector<std::uint32_t>& modulus,
                     std::int64_t primitive) {
    if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("q = p^m exceeds 2^16");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);

    if (m == 1) {
        f->modulus_ = {0, 1};  // placeholder x, unused for prime fields
    } else if (!modulus.empty()) {
        if (modulus.size() != m + 1 || modulus[m] != 1)
            throw std::invalid_argument("modulus must be monic of degree m");
        Poly mod(modulus.begin(), modulus.end());
        for (auto& c : mod) c %= p;
        if (!poly_is_irreducible(mod, p))
            throw std::invalid_argument("modulus is reducible over GF(" + std::to_string(p) + ")");
        f->modulus_.assign(mod.begin(), mod.end());
    } else {
        // canonical choice: least monic irreducible (by packed coefficient
        // value) whose root x has full multiplicative order
        bool found = false;
        std::uint64_t count = q;  // p^m coefficient tuples
        for (std::uint64_t t = 0; t < count && !found; ++t) {
            Poly cand(m + 1, 0);
            std::uint64_t v = t;
            for (std::uint32_t i = 0; i < m; ++i) { cand[i] = static_cast<std::uint32_t>(v % p); v /= p; }
            cand[m] = 1;
            if (!poly_is_irreducible(cand, p)) continue;
            if (slow_order(static_cast<gf>(p), p, m, cand, f->q_) != f->q_ - 1) continue;
            f->modulus_.assign(cand.begin(), cand.end());
            found = true;
        }
        if (!found) throw std::logic_error("no primitive modulus found");  // cannot happen
    }

    Poly mod(f->modulus_.begin(), f->modulus_.end());
    if (primitive >= 0) {
        gf w = static_cast<gf>(primitive);
        if (w == 0 || w >= f->q_)
            throw std::invalid_argument("primitive element out of range");
        if (slow_order(w, p, m, mod, f->q_) != f->q_ - 1)
            throw std::invalid_argument("supplied primitive element has order < q-1");
        f->primitive_ = w;
    } else {
        gf w = 0;
        if (m > 1 && slow_order(static_cast<gf>(p), p, m, mod, f->q_) == f->q_ - 1) {
            w = static_cast<gf>(p);  // x itself
        } else {
            for (gf cand = 2; cand < f->q_; ++cand) {
                if (slow_order(cand, p, m, mod, f->q_) == f->q_ - 1) { w = cand; break; }
            }
        }
        if (w == 0) throw std::logic_error("no primitive element found");  // cannot happen
        f->primitive_ = w;
    }

    f->build_tables();
    return f;
}

void Field::build_tables() {
    Poly mod(modulus_.begin(), modulus_.end());
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    gf x = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = slow_mul(x, primitive_, p_, m_, mod);
    }
    if (x != 1) throw std::logic_error("primitive element failed to cycle");
}

gf Field::add(gf a, gf b) const {
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    gf out = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((a % p_) + (b % p_)) % p_ * mul;
        a /= p_; b /= p_; mul *= p_;
    }
    return out;
}

gf Field::neg(gf a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return (p_ - a) % p_;
    gf out = 0, mul = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * mul;
        a /= p_; mul *= p_;
    }
    return out;
}

gf Field::sub(gf a, gf b) const { return add(a, neg(b)); }

gf Field::mul(gf a, gf b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

gf Field::inv(gf a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

gf Field::div(gf a, gf b) const {
    if (b == 0) throw std::domain_error("division by zero");
    if (a == 0) return 0;
    return exp_[(log_[a] + (q_ - 1) - log_[b]) % (q_ - 1)];
}

gf Field::pow(gf a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) throw std::domain_error("inversion of zero");
        return e == 0 ? 1 : 0;
    }
    std::int64_t le = (static_cast<std::int64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return exp_[le];
}

gf Field::w_pow(std::int64_t e) const {
    std::int64_t r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[r];
}

std::uint32_t Field::log(gf a) const {
    if (a == 0) throw std::domain_error("discrete log of zero");
    return log_[a];
}

std::uint64_t Field::element_order(gf a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint32_t n = q_ - 1;
    return n / std::gcd(n, log_[a]);
}

std::vector<std::uint32_t> Field::coeffs(gf a) const {
    std::vector<std::uint32_t> cs(m_);
    for (std::uint32_t i = 0; i < m_; ++i) { cs[i] = a % p_; a /= p_; }
    return cs;
}

gf Field::from_coeffs(const std::vector<std::uint32_t>& cs) const {
    if (cs.size() > m_) throw std::invalid_argument("coefficient list longer than degree");
    gf v = 0;
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i] >= p_) throw std::invalid_argument("coefficient out of range");
        v = v * p_ + cs[i];
    }
    return v;
}

std::string Field::describe() const {
    std::string head = m_ == 1
        ? "GF(" + std::to_string(p_) + ")"
        : "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
    return head + "/" + join_coeffs(modulus_) + "/" + join_coeffs(coeffs(primitive_));
}

FieldPtr Field::parse(const std::string& desc) {
    auto fail = [&] { throw std::invalid_argument("bad field description: " + desc); };
    if (desc.rfind("GF(", 0) != 0) fail();
    auto close = desc.find(')');
    if (close == std::string::npos) fail();
    std::string head = desc.substr(3, close - 3);
    std::uint32_t p = 0, m = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = static_cast<std::uint32_t>(std::stoul(head.substr(0, caret)));
        m = static_cast<std::uint32_t>(std::stoul(head.substr(caret + 1)));
    } else {
        p = static_cast<std::uint32_t>(std::stoul(head));
    }
    auto slash1 = desc.find('/', close);
    if (slash1 == std::string::npos) fail();
    auto slash2 = desc.find('/', slash1 + 1);
    if (slash2 == std::string::npos) fail();
    auto modulus = split_coeffs(desc.substr(slash1 + 1, slash2 - slash1 - 1));
    auto prim_coeffs = split_coeffs(desc.substr(slash2 + 1));
    auto probe = Field::make(p, m, m == 1 ? std::vector<std::uint32_t>{} : modulus, -1);
    gf w = probe->from_coeffs(prim_coeffs);
    if (w == probe->primitive()) return probe;
    return Field::make(p, m, m == 1 ? std::vector<std::uint32_t>{} : modulus,
                       static_cast<std::int64_t>(w));
}

std::string Field::format(gf a) const {
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::uint32_t e = log_[a];
    if (e == 0) return "1";
    if (e == 1) return "w";
    return "w^" + std::to_string(e);
}

std::string Field::format_coeffs(gf a) const {
    std::string out = "(";
    auto cs = coeffs(a);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (i) out += ',';
        out += std::to_string(cs[i]);
    }
    return out + ")";
}

gf Field::parse_element(const std::string& token) const {
    if (token.empty()) throw std::invalid_argument("empty element token");
    if (token == "w") {
        if (m_ == 1) throw std::invalid_argument("'w' token needs an extension field");
        return primitive_;
    }
    try {
        if (token.rfind("w^", 0) == 0) return w_pow(std::stoll(token.substr(2)));
        std::size_t used = 0;
        std::uint64_t v = std::stoull(token, &used);
        if (used != token.size() || v >= q_) throw std::invalid_argument(token);
        return static_cast<gf>(v);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad element token '" + token + "' for " + describe());
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad element token '" + token + "' for " + describe());
    }
}

bool Field::operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_ &&
           primitive_ == other.primitive_;
}

Subgroup subgroup(const FieldPtr& field, std::uint32_t d) {
    if (d == 0 || (field->q() - 1) % d != 0)
        throw std::invalid_argument("subgroup order " + std::to_string(d) + " does not divide q-1");
    Subgroup H;
    H.field = field;
    H.order = d;
    H.generator = field->w_pow((field->q() - 1) / d);
    H.elements.reserve(d);
    gf x = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        H.elements.push_back(x);
        x = field->mul(x, H.generator);
    }
    return H;
}

bool in_subgroup(const FieldPtr& field, gf x, const Subgroup& H) {
    if (x == 0) throw std::domain_error("subgroup membership of zero");
    if (H.field && *H.field != *field)
        throw std::invalid_argument("subgroup belongs to a different field");
    return field->pow(x, H.order) == 1;
}

}  // namespace coltrs
