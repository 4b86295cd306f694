#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hennings/scalar.hpp"

namespace hennings {

struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient column over the algebra basis.
struct AlgebraElement {
    std::vector<Scalar> c;
    bool operator==(const AlgebraElement& o) const { return c == o.c; }
};

/// Coefficient row over the basis; application is the exact dot product.
struct LinearFunctional {
    std::vector<Scalar> c;
};

struct CheckItem {
    std::string axiom;
    bool pass = false;
    std::string witness;  // first counterexample, empty on pass
};

struct AxiomReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    const CheckItem* first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return &it;
        return nullptr;
    }
    void add(std::string axiom, bool pass, std::string witness = "") {
        items.push_back({std::move(axiom), pass, std::move(witness)});
    }
};

/// Element of A (x) A as a dense dim x dim coefficient grid.
struct Tensor2 {
    int dim = 0;
    std::vector<Scalar> c;
    Tensor2() = default;
    Tensor2(int d, const FieldPtr& f) : dim(d), c(static_cast<size_t>(d) * d, Scalar::zero(f)) {}
    Scalar& at(int j, int k) { return c[static_cast<size_t>(j) * dim + k]; }
    const Scalar& at(int j, int k) const { return c[static_cast<size_t>(j) * dim + k]; }
    bool operator==(const Tensor2& o) const { return dim == o.dim && c == o.c; }
};

/// Element of A (x) A (x) A.
struct Tensor3 {
    int dim = 0;
    std::vector<Scalar> c;
    Tensor3() = default;
    Tensor3(int d, const FieldPtr& f)
        : dim(d), c(static_cast<size_t>(d) * d * d, Scalar::zero(f)) {}
    Scalar& at(int i, int j, int k) {
        return c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return c[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    bool operator==(const Tensor3& o) const { return dim == o.dim && c == o.c; }
};

/// Finite-dimensional Hopf algebra given by dense structure tensors over
/// the exact ground field, with optional quasitriangular element rho and
/// special grouplike G. Nothing is assumed of the tensors: the check_*
/// functions verify every axiom on basis elements, which is complete by
/// linearity.
class HopfAlgebraSpec {
public:
    FieldPtr field;
    int dim = 0;
    std::vector<std::string> basis_labels;

    // b_i b_j = sum_k mult[(i*d + j)*d + k] b_k
    std::vector<Scalar> mult;
    // Delta(b_i) = sum_{j,k} coproduct[(i*d + j)*d + k] b_j (x) b_k
    std::vector<Scalar> coproduct;
    std::vector<Scalar> counit;    // row of d scalars
    std::vector<Scalar> antipode;  // s(b_i) = sum_j antipode[i*d + j] b_j
    std::vector<Scalar> unit;      // column of d scalars

    bool has_rho = false;
    std::vector<Scalar> rho;  // rho = sum_{j,k} rho[j*d + k] b_j (x) b_k

    bool has_grouplike = false;
    std::vector<Scalar> grouplike_G;  // column

    /// Validates shapes and label uniqueness, builds the sparse access
    /// tables. Must be called before any operation below.
    void finalize();

    const Scalar& m3(int i, int j, int k) const {
        return mult[(static_cast<size_t>(i) * dim + j) * dim + k];
    }
    const Scalar& d3(int i, int j, int k) const {
        return coproduct[(static_cast<size_t>(i) * dim + j) * dim + k];
    }

    struct MultEnt {
        int k;
        Scalar v;
    };
    struct PairEnt {
        int j, k;
        Scalar v;
    };
    const std::vector<MultEnt>& mult_col(int i, int j) const {
        return mult_nz_[static_cast<size_t>(i) * dim + j];
    }
    const std::vector<PairEnt>& cop_terms(int i) const { return cop_nz_[i]; }
    const std::vector<PairEnt>& rho_terms() const { return rho_nz_; }

    // --- element operations -------------------------------------------
    AlgebraElement zero_elem() const;
    AlgebraElement basis_elem(int i) const;
    AlgebraElement unit_elem() const;
    AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement scale(const Scalar& s, const AlgebraElement& x) const;
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement power(const AlgebraElement& x, int n) const;  // n >= 0
    AlgebraElement antipode_apply(const AlgebraElement& x) const;
    AlgebraElement antipode_inv_apply(const AlgebraElement& x) const;
    /// s^k for any integer k (negative powers need an invertible antipode).
    AlgebraElement antipode_power(const AlgebraElement& x, int k) const;
    Scalar counit_apply(const AlgebraElement& x) const;
    Tensor2 coproduct_of(const AlgebraElement& x) const;
    bool is_zero_elem(const AlgebraElement& x) const;
    bool antipode_invertible() const { return antipode_inv_.has_value(); }

    Scalar apply(const LinearFunctional& f, const AlgebraElement& x) const;

    // --- tensor-square/cube products ----------------------------------
    Tensor2 t2_multiply(const Tensor2& a, const Tensor2& b) const;
    Tensor3 t3_multiply(const Tensor3& a, const Tensor3& b) const;
    Tensor2 t2_unit() const;  // 1 (x) 1
    Tensor2 rho_tensor() const;
    Tensor2 rho_under_tensor() const;  // (s (x) 1) rho, the L-expansion

    std::string elem_to_string(const AlgebraElement& x) const;
    /// Parses "gx", "1/2*x + q*gx", coefficients in the scalar grammar.
    AlgebraElement parse_element(const std::string& text) const;
    int label_index(const std::string& label) const;  // -1 if unknown

private:
    std::vector<std::vector<MultEnt>> mult_nz_;
    std::vector<std::vector<PairEnt>> cop_nz_;
    std::vector<PairEnt> rho_nz_;
    std::optional<std::vector<Scalar>> antipode_inv_;  // d*d, same layout as antipode
};

// --- checkers and derived structure ------------------------------------

AxiomReport check_hopf_axioms(const HopfAlgebraSpec& A);

/// Axiom 1 (rho Delta = Delta' rho), both coproduct-expansion identities,
/// the antipode formulas for rho^-1, the Yang-Baxter equation and
/// (s (x) s) rho = rho. Throws data_error when rho is absent or the
/// antipode is singular.
AxiomReport check_quasitriangular(const HopfAlgebraSpec& A);

struct DrinfeldData {
    AlgebraElement u;
    AlgebraElement u_inv;
};

/// u = sum s(e') e. Verifies invertibility (by exact solve) and
/// s^2(x) = u x u^-1 on the basis; throws data_error on failure.
DrinfeldData compute_drinfeld(const HopfAlgebraSpec& A);
inline AlgebraElement drinfeld_u(const HopfAlgebraSpec& A) { return compute_drinfeld(A).u; }

/// Grouplike checks on G plus centrality of v = G^-1 u, s(u) = G^-1 u G^-1,
/// s^2 = conjugation by G, and s(v) = v.
AxiomReport check_ribbon(const HopfAlgebraSpec& A);

struct IntegralResult {
    LinearFunctional lambda;
    bool property1 = false;               // lambda(xy) = lambda(s^2(y) x)
    bool property2 = false;               // lambda(G^2 x) = lambda(s(x))
    bool property2_applicable = false;    // needs G
    std::string witness;                  // first failing pair, if any
};

/// Solves lambda(x) 1 = sum lambda(x_1) x_2 as a homogeneous system.
/// Throws data_error unless the solution space has dimension exactly 1;
/// scales so the first nonzero coordinate (basis order) is 1.
IntegralResult right_integral(const HopfAlgebraSpec& A);

/// tr(x) = lambda(G x), without any verification.
LinearFunctional make_trace(const HopfAlgebraSpec& A, const LinearFunctional& lambda);

/// Trace Theorem check: tr(xy) = tr(yx) and tr(s(x)) = tr(x) on the basis.
AxiomReport check_trace_theorem(const HopfAlgebraSpec& A, const LinearFunctional& tr);

/// make_trace + check, throwing data_error when the theorem fails
/// (signals a lambda-property failure upstream, e.g. a non-unimodular
/// input algebra).
LinearFunctional trace_functional(const HopfAlgebraSpec& A, const LinearFunctional& lambda);

/// Builtins: "group_Zn:<n>", "sweedler_h4", "uq_sl2_prime_q4". Each comes
/// with rho and G and is validated by the checkers at construction.
HopfAlgebraSpec builtin_algebra(const std::string& name);
bool is_builtin_name(const std::string& name);

}  // namespace hennings
