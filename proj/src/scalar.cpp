#include "hennings/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace hennings {

namespace {

using Poly = std::vector<mpq_class>;  // coefficient i is the x^i coefficient

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_trim(r);
    return r;
}

// Divides a by b (b nonzero), returning quotient and leaving the remainder
// in a. Exact rational arithmetic, b need not be monic.
Poly poly_divmod(Poly& a, const Poly& b) {
    Poly q;
    if (b.empty()) throw arithmetic_error("polynomial division by zero");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size()) {
        mpq_class f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
        if (a.empty()) break;
    }
    return q;
}

Poly cyclotomic(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, mpq_class(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly phid = cyclotomic(d);
        Poly q = poly_divmod(num, phid);
        if (!num.empty()) throw arithmetic_error("cyclotomic division not exact");
        num = std::move(q);
    }
    return num;
}

}  // namespace

FieldSpec::FieldSpec(int order, std::vector<mpq_class> modulus)
    : order_(order), degree_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {}

std::shared_ptr<const FieldSpec> FieldSpec::make(int cyclotomic_order) {
    if (cyclotomic_order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(cyclotomic_order);
    if (it != cache.end()) return it->second;
    auto spec = std::shared_ptr<const FieldSpec>(
        new FieldSpec(cyclotomic_order, cyclotomic(cyclotomic_order)));
    cache.emplace(cyclotomic_order, spec);
    return spec;
}

Scalar::Scalar(FieldPtr field) : field_(std::move(field)) {
    c_.assign(field_->degree(), mpq_class(0));
}

Scalar::Scalar(FieldPtr field, const mpq_class& rational) : Scalar(std::move(field)) {
    if (field_->degree() == 0) throw arithmetic_error("degenerate field");
    c_[0] = rational;
    c_[0].canonicalize();
}

Scalar::Scalar(FieldPtr field, std::vector<mpq_class> coeffs) : field_(std::move(field)) {
    Poly p = std::move(coeffs);
    poly_trim(p);
    poly_divmod(p, field_->modulus());
    p.resize(field_->degree(), mpq_class(0));
    for (auto& q : p) q.canonicalize();
    c_ = std::move(p);
}

Scalar Scalar::rational(const FieldPtr& field, long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, q);
}

Scalar Scalar::zeta(const FieldPtr& field, int power) {
    int n = field->cyclotomic_order();
    int e = ((power % n) + n) % n;
    std::vector<mpq_class> p(e + 1, mpq_class(0));
    p[e] = 1;
    return Scalar(field, std::move(p));
}

void Scalar::check_compatible(const Scalar& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw arithmetic_error("scalar field mismatch");
}

bool Scalar::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_compatible(o);
    Scalar r(field_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_compatible(o);
    Scalar r(field_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_compatible(o);
    Poly p = poly_mul(c_, o.c_);
    return Scalar(field_, std::move(p));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw arithmetic_error("inversion of zero scalar");
    // Extended Euclid in Q[x] against Phi_n: u*a + w*Phi = gcd (a constant,
    // since Phi_n is irreducible over Q and a is a nonzero residue).
    Poly a = c_;
    poly_trim(a);
    Poly b = field_->modulus();
    Poly ua{mpq_class(1)}, ub{};
    while (!b.empty()) {
        Poly rem = a;
        Poly q = poly_divmod(rem, b);
        // (a, b) <- (b, a - q*b); carry the u-cofactors along.
        Poly uq = poly_mul(q, ub);
        Poly unew = ua;
        if (unew.size() < uq.size()) unew.resize(uq.size(), mpq_class(0));
        for (size_t i = 0; i < uq.size(); ++i) unew[i] -= uq[i];
        poly_trim(unew);
        a = std::move(b);
        ua = std::move(ub);
        b = std::move(rem);
        ub = std::move(unew);
    }
    if (a.size() != 1)
        throw arithmetic_error("residue not invertible (modulus not irreducible?)");
    mpq_class inv_const = 1 / a[0];
    for (auto& q : ua) q *= inv_const;
    return Scalar(field_, std::move(ua));
}

bool Scalar::operator==(const Scalar& o) const {
    check_compatible(o);
    return c_ == o.c_;
}

std::string Scalar::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class coeff = c_[i];
        if (first) {
            if (coeff < 0) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            out << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool unit_coeff = (coeff == 1 && i > 0);
        if (!unit_coeff) out << coeff.get_str();
        if (i > 0) {
            if (!unit_coeff) out << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) return "0";
    return out.str();
}

namespace {

struct ScalarLexer {
    const std::string& s;
    size_t pos = 0;
    explicit ScalarLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw parse_error("expected integer at position " + std::to_string(start) +
                              " in scalar '" + s + "'");
        return mpz_class(s.substr(start, pos - start));
    }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldPtr& field) {
    ScalarLexer lex(text);
    int n = field->cyclotomic_order();
    std::vector<mpq_class> acc(static_cast<size_t>(n) + 1, mpq_class(0));
    bool any_term = false;

    while (true) {
        int sign = 1;
        if (lex.accept('-')) sign = -1;
        else lex.accept('+');
        if (lex.done()) {
            if (!any_term || sign != 1)
                throw parse_error("dangling sign in scalar '" + text + "'");
            break;
        }

        mpq_class coeff(1);
        bool have_coeff = false;
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = lex.integer();
            mpz_class den(1);
            if (lex.accept('/')) {
                den = lex.integer();
                if (den == 0) throw parse_error("zero denominator in scalar '" + text + "'");
            }
            coeff = mpq_class(num, den);
            coeff.canonicalize();
            have_coeff = true;
        }

        int exponent = 0;
        bool have_power = false;
        bool expect_power = !have_coeff || lex.accept('*');
        if (expect_power) {
            char v = lex.peek();
            if (v == 'q' || v == 'i') {
                if (v == 'i' && n != 4)
                    throw parse_error("'i' alias only valid for cyclotomic order 4");
                ++lex.pos;
                exponent = 1;
                if (lex.accept('^')) exponent = static_cast<int>(lex.integer().get_si());
                have_power = true;
            } else if (!have_coeff) {
                throw parse_error("expected term at position " + std::to_string(lex.pos) +
                                  " in scalar '" + text + "'");
            } else {
                throw parse_error("expected q-power after '*' in scalar '" + text + "'");
            }
        }
        (void)have_power;

        exponent %= n;  // zeta^n = 1
        acc[static_cast<size_t>(exponent)] += sign * coeff;
        any_term = true;

        if (lex.done()) break;
        char next = lex.peek();
        if (next != '+' && next != '-')
            throw parse_error("unexpected character '" + std::string(1, next) + "' in scalar '" +
                              text + "'");
    }
    if (!any_term) throw parse_error("empty scalar text");
    return Scalar(field, std::move(acc));
}

}  // namespace hennings
