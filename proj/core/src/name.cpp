#include "lpreps/name.hpp"

#include <sstream>

#include "lpreps/errors.hpp"

namespace lpreps {

void Trace::append(Unary query_len, Unary answer_len, const std::string& tag) {
    if (budget_ >= 0 && total_queries_ >= budget_)
        throw budget_error("query budget exceeded (" + std::to_string(budget_) + ")");
    ++total_queries_;
    total_answer_bits_ += answer_len;
    total_query_bits_ += query_len;
    max_answer_len_ = std::max(max_answer_len_, answer_len);
    if (!counting_only_) log_.push_back({query_len, answer_len, tag});
}

void Trace::clear() {
    log_.clear();
    total_queries_ = total_answer_bits_ = total_query_bits_ = 0;
    max_answer_len_ = 0;
}

std::string Trace::to_jsonl() const {
    std::ostringstream os;
    for (const auto& e : log_)
        os << "{\"query_len\":" << e.query_len << ",\"answer_len\":" << e.answer_len
           << ",\"tag\":\"" << e.tag << "\"}\n";
    return os.str();
}

struct Name::Impl {
    AnswerFn answer;
    LengthFn declared_length;
    std::function<Dyadic(const Box&, Unary)> box_integral;
    std::function<Unary(const Box&, Unary)> box_query_len;
    std::function<Dyadic(const Dyadic&, Unary)> point_value;
    std::function<Unary(const Dyadic&, Unary)> point_query_len;
    std::function<Dyadic(Unary)> real_approx;
    std::function<Dyadic(const Dyadic&, Unary, Unary)> smooth_value;
    std::function<Unary(const Dyadic&, Unary, Unary)> smooth_query_len;
};

Name::Name(AnswerFn answer, LengthFn declared_length) {
    auto impl = std::make_shared<Impl>();
    impl->answer = std::move(answer);
    impl->declared_length = std::move(declared_length);
    impl_ = std::move(impl);
}

void Name::log(Unary qlen, Unary alen) const {
    if (trace_) trace_->append(qlen, alen, tag_);
}

BitString Name::query(const BitString& a) const {
    if (!impl_) throw contract_error("Name: empty");
    BitString ans = impl_->answer(a);
    Unary want = impl_->declared_length(a.size());
    if (ans.size() != want)
        throw contract_error("Name invariant violated: |answer(a)| = " +
                             std::to_string(ans.size()) + " != declared_length(|a|) = " +
                             std::to_string(want));
    log(a.size(), ans.size());
    return ans;
}

Unary Name::declared_length(Unary input_len) const {
    if (!impl_) throw contract_error("Name: empty");
    return impl_->declared_length(input_len);
}

std::function<Dyadic(const Box&, Unary)> Name::box_integral() const {
    return impl_ ? impl_->box_integral : nullptr;
}
std::function<Dyadic(const Dyadic&, Unary)> Name::point_value() const {
    return impl_ ? impl_->point_value : nullptr;
}
std::function<Dyadic(Unary)> Name::real_approx() const {
    return impl_ ? impl_->real_approx : nullptr;
}
std::function<Dyadic(const Dyadic&, Unary, Unary)> Name::smooth_value() const {
    return impl_ ? impl_->smooth_value : nullptr;
}

Name Name::with_box_integral(std::function<Dyadic(const Box&, Unary)> f,
                             std::function<Unary(const Box&, Unary)> query_len) const {
    Name n = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->box_integral = std::move(f);
    impl->box_query_len = std::move(query_len);
    n.impl_ = std::move(impl);
    return n;
}

Name Name::with_point_value(std::function<Dyadic(const Dyadic&, Unary)> f,
                            std::function<Unary(const Dyadic&, Unary)> query_len) const {
    Name n = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->point_value = std::move(f);
    impl->point_query_len = std::move(query_len);
    n.impl_ = std::move(impl);
    return n;
}

Name Name::with_real_approx(std::function<Dyadic(Unary)> f) const {
    Name n = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->real_approx = std::move(f);
    n.impl_ = std::move(impl);
    return n;
}

Name Name::with_smooth_value(std::function<Dyadic(const Dyadic&, Unary, Unary)> f,
                             std::function<Unary(const Dyadic&, Unary, Unary)> query_len) const {
    Name n = *this;
    auto impl = std::make_shared<Impl>(*impl_);
    impl->smooth_value = std::move(f);
    impl->smooth_query_len = std::move(query_len);
    n.impl_ = std::move(impl);
    return n;
}

Dyadic Name::ask_box_integral(const Box& box, Unary n) const {
    if (!impl_) throw contract_error("Name: empty");
    if (impl_->box_integral) {
        Unary qlen = impl_->box_query_len ? impl_->box_query_len(box, n) : 0;
        log(qlen, impl_->declared_length(qlen));
        return impl_->box_integral(box, n);
    }
    BitString a = encode_dyadic_vector(box.lower());
    BitString b = encode_dyadic_vector(box.upper());
    BitString q = pair3(a, b, encode_unary(n));
    return decode_dyadic(query(q));
}

Dyadic Name::ask_point_value(const Dyadic& x, Unary n) const {
    if (!impl_) throw contract_error("Name: empty");
    if (impl_->point_value) {
        Unary qlen = impl_->point_query_len ? impl_->point_query_len(x, n) : 0;
        log(qlen, impl_->declared_length(qlen));
        return impl_->point_value(x, n);
    }
    BitString q = pair(encode_dyadic(x), encode_unary(n));
    return decode_dyadic(query(q));
}

Dyadic Name::ask_real(Unary n) const {
    if (!impl_) throw contract_error("Name: empty");
    if (impl_->real_approx) {
        log(n, impl_->declared_length(n));
        return impl_->real_approx(n);
    }
    return decode_dyadic(query(encode_unary(n)));
}

Dyadic Name::ask_smooth_value(const Dyadic& x, Unary k, Unary n) const {
    if (!impl_) throw contract_error("Name: empty");
    if (impl_->smooth_value) {
        Unary qlen = impl_->smooth_query_len ? impl_->smooth_query_len(x, k, n) : 0;
        log(qlen, impl_->declared_length(qlen));
        return impl_->smooth_value(x, k, n);
    }
    BitString q = pair3(encode_dyadic(x), encode_unary(k), encode_unary(n));
    return decode_dyadic(query(q));
}

Name Name::traced(std::shared_ptr<Trace> trace, std::string tag) const {
    Name n = *this;
    n.trace_ = std::move(trace);
    n.tag_ = std::move(tag);
    return n;
}

std::shared_ptr<Trace> Name::trace() const { return trace_; }

Name pad_name(const Name& raw, Name::LengthFn target) {
    Name out(
        [raw, target](const BitString& a) {
            BitString ans = raw.query(a);
            Unary want = target(a.size());
            if (want < ans.size())
                throw contract_error("pad_name: target below raw answer length");
            return pad_to(ans, want);
        },
        target);
    // Padding preserves decoded values, so the fast paths carry over.
    if (raw.box_integral()) {
        auto f = raw.box_integral();
        out = out.with_box_integral(f, nullptr);
    }
    if (raw.real_approx()) out = out.with_real_approx(raw.real_approx());
    if (raw.point_value()) out = out.with_point_value(raw.point_value(), nullptr);
    if (raw.smooth_value()) out = out.with_smooth_value(raw.smooth_value(), nullptr);
    return out;
}

Name pair_names(const Name& phi, const Name& psi) {
    return Name(
        [phi, psi](const BitString& a) { return pair(phi.query(a), psi.query(a)); },
        [phi, psi](Unary k) {
            return pair_length(phi.declared_length(k), psi.declared_length(k));
        });
}

// --- SecondOrderPoly -----------------------------------------------------------

SecondOrderPoly SecondOrderPoly::poly(std::vector<BigInt> coeffs) {
    for (const auto& c : coeffs)
        if (c < 0) throw domain_error("SecondOrderPoly: negative coefficient");
    SecondOrderPoly p;
    p.kind_ = Kind::poly;
    p.coeffs_ = std::move(coeffs);
    return p;
}

SecondOrderPoly SecondOrderPoly::add(SecondOrderPoly a, SecondOrderPoly b) {
    SecondOrderPoly p;
    p.kind_ = Kind::add;
    p.a_ = std::make_shared<SecondOrderPoly>(std::move(a));
    p.b_ = std::make_shared<SecondOrderPoly>(std::move(b));
    return p;
}

SecondOrderPoly SecondOrderPoly::mul(SecondOrderPoly a, SecondOrderPoly b) {
    SecondOrderPoly p;
    p.kind_ = Kind::mul;
    p.a_ = std::make_shared<SecondOrderPoly>(std::move(a));
    p.b_ = std::make_shared<SecondOrderPoly>(std::move(b));
    return p;
}

SecondOrderPoly SecondOrderPoly::apply(SecondOrderPoly inner) {
    SecondOrderPoly p;
    p.kind_ = Kind::apply;
    p.a_ = std::make_shared<SecondOrderPoly>(std::move(inner));
    return p;
}

BigInt SecondOrderPoly::eval(const Name::LengthFn& l, Unary n) const {
    switch (kind_) {
        case Kind::poly: {
            BigInt v = 0, pw = 1;
            for (const auto& c : coeffs_) {
                v += c * pw;
                pw *= n;
            }
            return v;
        }
        case Kind::add: return a_->eval(l, n) + b_->eval(l, n);
        case Kind::mul: return a_->eval(l, n) * b_->eval(l, n);
        case Kind::apply: {
            BigInt inner = a_->eval(l, n);
            if (inner > BigInt(1) << 32)
                throw budget_error("SecondOrderPoly: length argument too large to evaluate");
            return BigInt(l(inner.convert_to<Unary>()));
        }
    }
    throw domain_error("SecondOrderPoly: bad kind");
}

std::string SecondOrderPoly::to_string() const {
    switch (kind_) {
        case Kind::poly: {
            std::ostringstream os;
            bool first = true;
            for (std::size_t i = 0; i < coeffs_.size(); ++i) {
                if (coeffs_[i] == 0) continue;
                if (!first) os << "+";
                first = false;
                os << coeffs_[i];
                if (i >= 1) os << "n";
                if (i >= 2) os << "^" << i;
            }
            if (first) os << "0";
            return os.str();
        }
        case Kind::add: return "(" + a_->to_string() + "+" + b_->to_string() + ")";
        case Kind::mul: return "(" + a_->to_string() + "*" + b_->to_string() + ")";
        case Kind::apply: return "l(" + a_->to_string() + ")";
    }
    return "?";
}

BoundCheckReport check_query_bound(const Trace& trace, const SecondOrderPoly& P,
                                   const Name::LengthFn& l, Unary n) {
    BoundCheckReport rep;
    rep.bound = P.eval(l, n);
    rep.total_queries = trace.total_queries();
    rep.total_answer_bits = trace.total_answer_bits();
    for (const auto& e : trace.log()) {
        if (e.answer_len > rep.worst_answer_len) {
            rep.worst_answer_len = e.answer_len;
            rep.worst_query_len = e.query_len;
        }
    }
    rep.ok = BigInt(rep.total_queries) <= rep.bound && BigInt(rep.total_answer_bits) <= rep.bound;
    return rep;
}

ExpBoundReport check_exponential_bound(const Trace& trace, Unary A, Unary B, Unary C,
                                       const Name::LengthFn& l, Unary n) {
    ExpBoundReport rep{};
    rep.a = A;
    rep.b = B;
    rep.c = C;
    rep.exponent = A * l(n + B) + C * n;
    rep.total_queries = trace.total_queries();
    if (rep.exponent >= 63)
        rep.ok = true;  // query counts are 64-bit, so the bound cannot be exceeded
    else
        rep.ok = rep.total_queries <= (Unary(1) << rep.exponent);
    return rep;
}

NameInvariantReport check_name_invariants(const Name& name, Unary exhaustive_len,
                                          int random_samples, Unary max_random_len,
                                          std::uint64_t seed) {
    NameInvariantReport rep;
    auto check_one = [&](const BitString& a) {
        try {
            name.query(a);  // Name::query enforces the declared length
        } catch (const contract_error& e) {
            rep.ok = false;
            rep.detail = e.what();
            return false;
        }
        return true;
    };
    // exhaustive short queries
    for (Unary len = 0; len <= exhaustive_len && rep.ok; ++len) {
        for (std::uint64_t m = 0; m < (1ULL << len); ++m) {
            std::string s;
            for (Unary j = len - 1; j >= 0; --j) s.push_back((m >> j) & 1 ? '1' : '0');
            if (!check_one(BitString(s))) return rep;
        }
    }
    // declared length must be nondecreasing
    Unary prev = -1;
    for (Unary k = 0; k <= std::max<Unary>(exhaustive_len, 24); ++k) {
        Unary cur = name.declared_length(k);
        if (prev >= 0 && cur < prev) {
            rep.ok = false;
            rep.detail = "declared length decreases at input length " + std::to_string(k);
            return rep;
        }
        prev = cur;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Unary> lend(0, max_random_len);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int i = 0; i < random_samples && rep.ok; ++i) {
        Unary len = lend(rng);
        std::string s;
        for (Unary j = 0; j < len; ++j) s.push_back(bit(rng) ? '1' : '0');
        if (!check_one(BitString(s))) return rep;
    }
    return rep;
}

} // namespace lpreps
