#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coltrs {

// A field element, packed as a base-p integer of its coefficient vector:
// value = c0 + c1*p + ... + c_{m-1}*p^{m-1}.  Two elements are equal iff
// their packed values are equal, so the representation is canonical.
using gf = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Exact arithmetic in GF(p^m), q = p^m <= 2^16.  Multiplication runs on
// exp/log tables built at construction; addition works digitwise mod p.
class Field {
  public:
    // modulus: coefficient list (c0..cm), monic of degree m; ignored for
    // m == 1 (a canonical degree-1 placeholder is stored).  When omitted
    // for m > 1, the canonical modulus is chosen: the least monic
    // irreducible, ordered by packed coefficient value, whose root x is
    // primitive.  primitive: element generating the multiplicative group;
    // when omitted, x for the canonical m > 1 case, otherwise the least
    // packed value with full order.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         const std::vector<std::uint32_t>& modulus = {},
                         std::int64_t primitive = -1);

    // Parses the text form emitted by describe().
    static FieldPtr parse(const std::string& desc);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    gf primitive() const { return primitive_; }

    gf add(gf a, gf b) const;
    gf sub(gf a, gf b) const;
    gf neg(gf a) const;
    gf mul(gf a, gf b) const;
    gf div(gf a, gf b) const;    // throws on b == 0
    gf inv(gf a) const;          // throws on a == 0
    gf pow(gf a, std::int64_t e) const;
    gf one() const { return 1; }

    // primitive^e (e may be negative or exceed q-1)
    gf w_pow(std::int64_t e) const;
    // discrete log base primitive; throws on 0
    std::uint32_t log(gf a) const;
    std::uint64_t element_order(gf a) const;

    std::vector<std::uint32_t> coeffs(gf a) const;
    gf from_coeffs(const std::vector<std::uint32_t>& cs) const;

    // "GF(29)/0;1/2" or "GF(3^3)/1;2;0;1/0;1;0": p^m, modulus coefficient
    // list, primitive coefficient list.
    std::string describe() const;

    // Element tokens: decimal packed value for prime fields; "0", "1",
    // "w", "w^e" for extension fields.  parse_element also accepts packed
    // decimal for m > 1.
    std::string format(gf a) const;
    std::string format_coeffs(gf a) const;  // "(c0,c1,...)"
    gf parse_element(const std::string& token) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

  private:
    Field() = default;
    void build_tables();

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    gf primitive_ = 0;
    std::vector<gf> exp_;           // exp_[e] = primitive^e, e in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[x] for x in [1, q)
};

// The unique multiplicative subgroup of F_q* of order d (d | q-1),
// elements materialized in exponent order: generator^0 .. generator^{d-1}.
struct Subgroup {
    FieldPtr field;
    std::uint32_t order = 0;
    gf generator = 0;
    std::vector<gf> elements;
};

Subgroup subgroup(const FieldPtr& field, std::uint32_t d);

// true iff x^|H| = 1; throws on x == 0.
bool in_subgroup(const FieldPtr& field, gf x, const Subgroup& H);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace coltrs
