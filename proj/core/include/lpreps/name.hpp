#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>

#include "lpreps/encoding.hpp"
#include "lpreps/funcspec.hpp"

namespace lpreps {

// Append-only query log for one wrapped Name. Not synchronized: concurrent use
// of a traced Name requires externally serialized access.
class Trace {
  public:
    struct Entry {
        Unary query_len;
        Unary answer_len;
        std::string tag;
    };

    void append(Unary query_len, Unary answer_len, const std::string& tag);
    Unary total_queries() const { return total_queries_; }
    Unary total_answer_bits() const { return total_answer_bits_; }
    Unary total_query_bits() const { return total_query_bits_; }
    Unary max_answer_len() const { return max_answer_len_; }
    const std::vector<Entry>& log() const { return log_; }
    void clear();

    // Optional query budget; append throws budget_error beyond it.
    void set_budget(Unary max_queries) { budget_ = max_queries; }
    Unary budget() const { return budget_; }

    // Counting-only mode: drops per-entry logs (used by exponential grids).
    void set_counting_only(bool v) { counting_only_ = v; }

    std::string to_jsonl() const;  // {"query_len":..,"answer_len":..,"tag":".."} per line

  private:
    std::vector<Entry> log_;
    Unary total_queries_ = 0, total_answer_bits_ = 0, total_query_bits_ = 0;
    Unary max_answer_len_ = 0;
    Unary budget_ = -1;  // negative: unlimited
    bool counting_only_ = false;
};

// A length-monotone total string function with declared length, the carrier of
// every representation. Immutable and cheaply copyable; optional semantic fast
// paths answer structured queries without materializing bit strings (their
// results are bit-identical to decoding the wire answers).
class Name {
  public:
    using AnswerFn = std::function<BitString(const BitString&)>;
    using LengthFn = std::function<Unary(Unary)>;

    Name() = default;
    Name(AnswerFn answer, LengthFn declared_length);

    bool valid() const { return static_cast<bool>(impl_); }

    // Bit-level interface. Verifies |answer| == declared_length(|query|).
    BitString query(const BitString& a) const;
    Unary declared_length(Unary input_len) const;

    // Semantic fast paths (empty when not applicable).
    std::function<Dyadic(const Box&, Unary)> box_integral() const;
    std::function<Dyadic(const Dyadic&, Unary)> point_value() const;
    std::function<Dyadic(Unary)> real_approx() const;
    std::function<Dyadic(const Dyadic&, Unary, Unary)> smooth_value() const;

    Name with_box_integral(std::function<Dyadic(const Box&, Unary)> f,
                           std::function<Unary(const Box&, Unary)> query_len) const;
    Name with_point_value(std::function<Dyadic(const Dyadic&, Unary)> f,
                          std::function<Unary(const Dyadic&, Unary)> query_len) const;
    Name with_real_approx(std::function<Dyadic(Unary)> f) const;
    Name with_smooth_value(std::function<Dyadic(const Dyadic&, Unary, Unary)> f,
                           std::function<Unary(const Dyadic&, Unary, Unary)> query_len) const;

    // Structured queries: use the fast path when present (logging the wire
    // lengths), otherwise encode/decode through the bit-level interface.
    Dyadic ask_box_integral(const Box& box, Unary n) const;
    Dyadic ask_point_value(const Dyadic& x, Unary n) const;
    Dyadic ask_real(Unary n) const;
    Dyadic ask_smooth_value(const Dyadic& x, Unary k, Unary n) const;

    // Same name with a trace attached (shares the underlying oracle).
    Name traced(std::shared_ptr<Trace> trace, std::string tag) const;
    std::shared_ptr<Trace> trace() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    std::shared_ptr<Trace> trace_;
    std::string tag_;
    void log(Unary qlen, Unary alen) const;
};

// Padded name: answers raw(a) zero-padded to target(|a|); decoded values are
// unchanged. Throws contract_error at query time if target is below the raw
// answer length.
Name pad_name(const Name& raw, Name::LengthFn target);

// <phi,psi>(a) = <phi(a), psi(a)>; components recoverable by unpair.
Name pair_names(const Name& phi, const Name& psi);

// --- second-order polynomials ------------------------------------------------

// AST over positive-coefficient integer polynomials in n, +, *, and l(P).
class SecondOrderPoly {
  public:
    static SecondOrderPoly poly(std::vector<BigInt> coeffs);  // sum c_i n^i
    static SecondOrderPoly constant(const BigInt& c) { return poly({c}); }
    static SecondOrderPoly variable() { return poly({0, 1}); }  // n
    static SecondOrderPoly add(SecondOrderPoly a, SecondOrderPoly b);
    static SecondOrderPoly mul(SecondOrderPoly a, SecondOrderPoly b);
    static SecondOrderPoly apply(SecondOrderPoly inner);  // l(inner)

    BigInt eval(const Name::LengthFn& l, Unary n) const;
    std::string to_string() const;

  private:
    enum class Kind { poly, add, mul, apply };
    Kind kind_ = Kind::poly;
    std::vector<BigInt> coeffs_;
    std::shared_ptr<SecondOrderPoly> a_, b_;
};

struct BoundCheckReport {
    bool ok = true;
    BigInt bound;
    Unary total_queries = 0;
    Unary total_answer_bits = 0;
    Unary worst_query_len = 0;
    Unary worst_answer_len = 0;
};

// true iff total queries and total answer bits are both <= P(l, n).
BoundCheckReport check_query_bound(const Trace& trace, const SecondOrderPoly& P,
                                   const Name::LengthFn& l, Unary n);

// Exponential-time bound 2^{A l(|a|+B) + C |a|} on the query count, |a| = n.
struct ExpBoundReport {
    bool ok;
    Unary exponent;
    Unary total_queries;
    Unary a, b, c;
};
ExpBoundReport check_exponential_bound(const Trace& trace, Unary A, Unary B, Unary C,
                                       const Name::LengthFn& l, Unary n);

// --- invariants ---------------------------------------------------------------

struct NameInvariantReport {
    bool ok = true;
    std::string detail;
};

// Exhaustive queries up to length `exhaustive_len` plus random queries up to
// length `max_random_len`: answers have exactly the declared length and the
// declared length is nondecreasing.
NameInvariantReport check_name_invariants(const Name& name, Unary exhaustive_len = 10,
                                          int random_samples = 64, Unary max_random_len = 200,
                                          std::uint64_t seed = 1);

} // namespace lpreps
