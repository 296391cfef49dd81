#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coverdepth {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// GF(p^e) with a deterministic modulus: the lexicographically smallest monic
// irreducible of degree e over GF(p), coefficients compared from the constant
// term upward. Elements are encoded as integers sum c_i p^i in [0, q), where
// sum c_i x^i is the residue polynomial. Multiplication and inversion go
// through log/antilog tables built from a fixed primitive element, addition
// is digit-wise mod p (plain XOR when p = 2).
class FiniteField : public std::enable_shared_from_this<FiniteField> {
  public:
    // Validates p prime, 1 <= e <= 16, p^e <= 2^16.
    static FieldPtr make(unsigned p, unsigned e);
    // Factors q as p^e and delegates to make(); rejects non prime powers.
    static FieldPtr from_order(unsigned q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }
    // Coefficients c_0..c_e of the modulus (monic, c_e = 1). For e = 1 this
    // is the placeholder x - 0, i.e. {0, 1}.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    // Arithmetic on element codes.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws std::domain_error on 0
    std::uint32_t pow(std::uint32_t a, std::uint64_t exp) const;

    // A fixed primitive element (the one the log tables are built from).
    std::uint32_t generator() const { return generator_; }

    bool same_as(const FiniteField& other) const { return p_ == other.p_ && e_ == other.e_; }

    std::string describe() const;  // "GF(9) = GF(3^2), modulus x^2+1" style

  private:
    FiniteField() = default;
    void check_code(std::uint32_t a) const;

    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    std::uint32_t generator_ = 0;
    std::vector<std::uint32_t> exp_;  // exp_[i] = code of g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;  // log_[code] for code >= 1
};

// Element with its field attached; the checked, user-facing carrier type.
// Hot paths (matrices, census, simulation) work on raw codes instead.
struct FieldElement {
    FieldPtr field;
    std::uint32_t code = 0;

    FieldElement() = default;
    FieldElement(FieldPtr f, std::uint32_t c);

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
};

FieldElement inverse(const FieldElement& a);

// Prime-subfield embedding GF(p) -> GF(p^e). The element encoding makes this
// the identity on codes; the function exists to validate compatibility.
FieldElement embed(const FieldPtr& base, const FieldPtr& ext, const FieldElement& a);

}  // namespace coverdepth
