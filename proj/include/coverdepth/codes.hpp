#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "coverdepth/linalg.hpp"
#include "coverdepth/rational.hpp"

namespace coverdepth {

// How a code was constructed. Lets the verification layer pick the matching
// closed-form expectation without re-identifying the code.
struct CodeFamily {
    enum Kind { kGeneric, kSimplex, kHamming, kGolay, kGolayExtended, kReedMuller1, kReedSolomon, kFullSpace };
    Kind kind = kGeneric;
    unsigned q = 0;
    unsigned param = 0;  // k for simplex, r for hamming, s for rm1, k for rs
    std::string label() const;
};

// Linear [n, k] code over GF(q), held by a full-rank generator matrix.
// Copies are cheap (shared immutable state); derived data (canonical rref,
// dual, minimum distance) is computed lazily and cached.
class LinearCode {
  public:
    // Rejects rank-deficient generators, reporting the actual rank.
    static LinearCode from_generator(const MatrixGF& g);

    const FieldPtr& field() const;
    unsigned q() const { return field()->q(); }
    size_t length() const;     // n
    size_t dimension() const;  // k, may be 0 for the zero code (dual of full space)
    const MatrixGF& generator() const;
    const CodeFamily& family() const;

    const MatrixGF& canonical_rref() const;
    LinearCode dual() const;

    // Least weight of a nonzero codeword; enumeration guard q^k <= 2^24.
    size_t minimum_distance() const;

    // Streams all q^k codewords (as code vectors) exactly once, message
    // vectors in integer order. Guard q^k <= 2^24.
    void for_each_codeword(const std::function<void(std::span<const std::uint32_t>)>& fn) const;
    std::vector<std::vector<std::uint32_t>> codewords() const;

    bool same_code(const LinearCode& other) const;

    friend LinearCode tag_family(LinearCode code, CodeFamily family);

  private:
    struct Impl;
    explicit LinearCode(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

LinearCode tag_family(LinearCode code, CodeFamily family);

// ---- constructors for the code families used throughout ----

// Columns: one representative per projective point of F_q^k (first nonzero
// coordinate scaled to 1), sorted by integer encoding. n = (q^k-1)/(q-1).
LinearCode simplex_code(unsigned q, unsigned k);

// Dual of the simplex code of redundancy r; [n, n-r] with n = (q^r-1)/(q-1).
LinearCode hamming_code(unsigned q, unsigned r);

// [11, 6, 5]_3 and [12, 6, 6]_3; built from a fixed standard-form generator
// and verified against the known weight distributions at construction.
LinearCode ternary_golay();
LinearCode extended_ternary_golay();

// First-order q-ary Reed-Muller: evaluations of affine functions on F_q^(s-1);
// n = q^(s-1), k = s, d = (q-1) q^(s-2).
LinearCode reed_muller1(unsigned q, unsigned s);

// Vandermonde generator on the n field points with smallest codes; MDS.
LinearCode reed_solomon(unsigned q, unsigned n, unsigned k);

// Identity generator; the full space F_q^n.
LinearCode full_space(unsigned q, unsigned n);

// ---- ".code" file format ----
// line 1: "q k n" (q a prime power literal); then k rows of n integers in
// [0, q) using the field's integer encoding. Lines starting with '#' are
// ignored. Strict parsing, errors carry line numbers.
LinearCode parse_code_stream(std::istream& in, const std::string& source_name);
LinearCode load_code_file(const std::string& path);
void write_code_file(const LinearCode& code, std::ostream& out);

}  // namespace coverdepth
