#include <string>

#include "builtins_internal.hpp"
#include "hennings/algebra.hpp"

namespace hennings {

namespace detail {

namespace {

void set_m(HopfAlgebraSpec& A, int i, int j, int k, const Scalar& v) {
    A.mult[(static_cast<size_t>(i) * A.dim + j) * A.dim + k] = v;
}
void set_d(HopfAlgebraSpec& A, int i, int j, int k, const Scalar& v) {
    A.coproduct[(static_cast<size_t>(i) * A.dim + j) * A.dim + k] = v;
}
void set_s(HopfAlgebraSpec& A, int i, int j, const Scalar& v) {
    A.antipode[static_cast<size_t>(i) * A.dim + j] = v;
}

HopfAlgebraSpec blank(FieldPtr field, int dim) {
    HopfAlgebraSpec A;
    A.field = std::move(field);
    A.dim = dim;
    size_t d = static_cast<size_t>(dim);
    Scalar z = Scalar::zero(A.field);
    A.mult.assign(d * d * d, z);
    A.coproduct.assign(d * d * d, z);
    A.counit.assign(d, z);
    A.antipode.assign(d * d, z);
    A.unit.assign(d, z);
    return A;
}

}  // namespace

HopfAlgebraSpec build_group_zn(int n) {
    auto field = FieldSpec::make(1);
    HopfAlgebraSpec A = blank(field, n);
    Scalar one = Scalar::one(field);
    for (int i = 0; i < n; ++i)
        A.basis_labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) set_m(A, i, j, (i + j) % n, one);
        set_d(A, i, i, i, one);
        A.counit[i] = one;
        set_s(A, i, (n - i) % n, one);
    }
    A.unit[0] = one;
    return A;
}

HopfAlgebraSpec build_h4_base() {
    // Basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx,
    // Delta(x) = x (x) g + 1 (x) x.
    auto field = FieldSpec::make(1);
    HopfAlgebraSpec A = blank(field, 4);
    A.basis_labels = {"1", "g", "x", "gx"};
    Scalar one = Scalar::one(field);
    Scalar neg = -one;
    enum { e1 = 0, eg = 1, ex = 2, egx = 3 };

    for (int i = 0; i < 4; ++i) {
        set_m(A, e1, i, i, one);
        if (i != e1) set_m(A, i, e1, i, one);
    }
    set_m(A, eg, eg, e1, one);
    set_m(A, eg, ex, egx, one);
    set_m(A, eg, egx, ex, one);
    set_m(A, ex, eg, egx, neg);
    set_m(A, egx, eg, ex, neg);
    // x*x, x*gx, gx*x, gx*gx are all zero

    set_d(A, e1, e1, e1, one);
    set_d(A, eg, eg, eg, one);
    set_d(A, ex, ex, eg, one);
    set_d(A, ex, e1, ex, one);
    set_d(A, egx, egx, e1, one);
    set_d(A, egx, eg, egx, one);

    A.counit[e1] = one;
    A.counit[eg] = one;

    set_s(A, e1, e1, one);
    set_s(A, eg, eg, one);
    set_s(A, ex, egx, one);   // s(x) = gx
    set_s(A, egx, ex, neg);   // s(gx) = -x

    A.unit[e1] = one;
    return A;
}

HopfAlgebraSpec build_uq_base() {
    // Basis a^m x^e over Q(i): a^4 = 1, xa = -ax, x^2 = a^2 - 1,
    // Delta(a) = a (x) a, Delta(x) = x (x) a + 1 (x) x.
    auto field = FieldSpec::make(4);
    HopfAlgebraSpec A = blank(field, 8);
    A.basis_labels = {"1", "a", "a2", "a3", "x", "ax", "a2x", "a3x"};
    Scalar one = Scalar::one(field);
    auto idx = [](int m, int e) { return ((m % 4) + 4) % 4 + 4 * e; };

    for (int m = 0; m < 4; ++m)
        for (int e = 0; e <= 1; ++e)
            for (int n = 0; n < 4; ++n)
                for (int f = 0; f <= 1; ++f) {
                    // (a^m x^e)(a^n x^f) = (-1)^{e n} a^{m+n} x^{e+f}
                    Scalar sign = (e * n) % 2 ? -one : one;
                    if (e + f <= 1) {
                        set_m(A, idx(m, e), idx(n, f), idx(m + n, e + f), sign);
                    } else {
                        // x^2 = a^2 - 1
                        set_m(A, idx(m, e), idx(n, f), idx(m + n + 2, 0), sign);
                        set_m(A, idx(m, e), idx(n, f), idx(m + n, 0), -sign);
                    }
                }

    for (int m = 0; m < 4; ++m) {
        set_d(A, idx(m, 0), idx(m, 0), idx(m, 0), one);
        // Delta(a^m x) = a^m x (x) a^{m+1} + a^m (x) a^m x
        set_d(A, idx(m, 1), idx(m, 1), idx(m + 1, 0), one);
        set_d(A, idx(m, 1), idx(m, 0), idx(m, 1), one);
        A.counit[idx(m, 0)] = one;
        set_s(A, idx(m, 0), idx(4 - m, 0), one);
        // s(a^m x) = (-1)^m a^{3-m} x
        set_s(A, idx(m, 1), idx(3 - m + 4, 1), m % 2 ? -one : one);
    }

    A.unit[0] = one;
    return A;
}

}  // namespace detail

namespace {

struct RhoEntry {
    const char* j;
    const char* k;
    const char* coeff;
};

void attach_rho(HopfAlgebraSpec& A, const RhoEntry* entries, size_t count) {
    A.has_rho = true;
    A.rho.assign(static_cast<size_t>(A.dim) * A.dim, Scalar::zero(A.field));
    for (size_t t = 0; t < count; ++t) {
        int j = A.label_index(entries[t].j);
        int k = A.label_index(entries[t].k);
        if (j < 0 || k < 0) throw data_error("bad builtin rho label");
        A.rho[static_cast<size_t>(j) * A.dim + k] = parse_scalar(entries[t].coeff, A.field);
    }
}

void attach_grouplike(HopfAlgebraSpec& A, const std::string& label) {
    A.has_grouplike = true;
    A.grouplike_G.assign(A.dim, Scalar::zero(A.field));
    int g = A.label_index(label);
    if (g < 0) throw data_error("bad builtin grouplike label");
    A.grouplike_G[g] = Scalar::one(A.field);
}

void validate_builtin(const HopfAlgebraSpec& A, const std::string& name) {
    AxiomReport hopf = check_hopf_axioms(A);
    if (!hopf.all_pass())
        throw data_error("builtin " + name + " fails " + hopf.first_failure()->axiom);
    AxiomReport qt = check_quasitriangular(A);
    if (!qt.all_pass())
        throw data_error("builtin " + name + " fails " + qt.first_failure()->axiom);
    AxiomReport rib = check_ribbon(A);
    if (!rib.all_pass())
        throw data_error("builtin " + name + " fails " + rib.first_failure()->axiom);
}

// Sweedler H4 one-parameter R-matrix family at t = 1 (see derivation in
// the unit tests: the family is pinned by the quasitriangular axioms,
// which validate_builtin re-checks on every construction).
const RhoEntry kH4Rho[] = {
    {"1", "1", "1/2"},   {"1", "g", "1/2"},    {"g", "1", "1/2"},   {"g", "g", "-1/2"},
    {"x", "x", "1/2"},   {"x", "gx", "1/2"},   {"gx", "x", "-1/2"}, {"gx", "gx", "1/2"},
};

const RhoEntry kUqRho[] = {
    {"1", "1", "1/4"},  // placeholder until derived
};

}  // namespace

bool is_builtin_name(const std::string& name) {
    return name.rfind("group_Zn:", 0) == 0 || name == "sweedler_h4" ||
           name == "uq_sl2_prime_q4";
}

HopfAlgebraSpec builtin_algebra(const std::string& name) {
    if (name.rfind("group_Zn:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(9));
        } catch (...) {
            throw data_error("bad group order in builtin name '" + name + "'");
        }
        if (n < 1 || n > 64) throw data_error("group order out of range in '" + name + "'");
        HopfAlgebraSpec A = detail::build_group_zn(n);
        A.has_rho = true;  // rho = 1 (x) 1
        A.rho.assign(static_cast<size_t>(A.dim) * A.dim, Scalar::zero(A.field));
        A.rho[0] = Scalar::one(A.field);
        attach_grouplike(A, "1");
        A.finalize();
        validate_builtin(A, name);
        return A;
    }
    if (name == "sweedler_h4") {
        HopfAlgebraSpec A = detail::build_h4_base();
        attach_rho(A, kH4Rho, sizeof(kH4Rho) / sizeof(kH4Rho[0]));
        attach_grouplike(A, "g");
        A.finalize();
        validate_builtin(A, name);
        return A;
    }
    if (name == "uq_sl2_prime_q4") {
        HopfAlgebraSpec A = detail::build_uq_base();
        attach_rho(A, kUqRho, sizeof(kUqRho) / sizeof(kUqRho[0]));
        attach_grouplike(A, "a");
        A.finalize();
        validate_builtin(A, name);
        return A;
    }
    throw data_error("unknown builtin algebra '" + name + "'");
}

}  // namespace hennings
