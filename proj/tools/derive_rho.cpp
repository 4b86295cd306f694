// Temporary development tool: solves for quasitriangular structures on
// candidate builtin algebras. Axiom 1, the counit normalizations,
// (s x s)rho = rho and the u-identities are linear in rho; the axiom-2
// residual is quadratic and handled by monomial linearization over the
// remaining free parameters.

#include <iostream>
#include <tuple>
#include <vector>

#include "../src/builtins_internal.hpp"
#include "hennings/algebra.hpp"
#include "hennings/linalg.hpp"

using namespace hennings;

namespace {

Tensor3 embed13(const HopfAlgebraSpec& A, const Tensor2& t) {
    Tensor3 r(A.dim, A.field);
    for (int j = 0; j < A.dim; ++j)
        for (int k = 0; k < A.dim; ++k) {
            if (t.at(j, k).is_zero()) continue;
            for (int m = 0; m < A.dim; ++m)
                if (!A.unit[m].is_zero()) r.at(j, m, k) += t.at(j, k) * A.unit[m];
        }
    return r;
}
Tensor3 embed12(const HopfAlgebraSpec& A, const Tensor2& t) {
    Tensor3 r(A.dim, A.field);
    for (int j = 0; j < A.dim; ++j)
        for (int k = 0; k < A.dim; ++k) {
            if (t.at(j, k).is_zero()) continue;
            for (int m = 0; m < A.dim; ++m)
                if (!A.unit[m].is_zero()) r.at(j, k, m) += t.at(j, k) * A.unit[m];
        }
    return r;
}
Tensor3 embed23(const HopfAlgebraSpec& A, const Tensor2& t) {
    Tensor3 r(A.dim, A.field);
    for (int j = 0; j < A.dim; ++j)
        for (int k = 0; k < A.dim; ++k) {
            if (t.at(j, k).is_zero()) continue;
            for (int m = 0; m < A.dim; ++m)
                if (!A.unit[m].is_zero()) r.at(m, j, k) += t.at(j, k) * A.unit[m];
        }
    return r;
}

struct Problem {
    HopfAlgebraSpec A;
    std::vector<int> generators;
    std::vector<std::string> g_candidates;
    std::vector<int> u_support;                 // allowed u coordinates (empty = any)
    std::vector<std::pair<int, int>> support;   // allowed rho coordinates
};

struct AffineRows {
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
};

// rho built from reduced coordinates
std::vector<Scalar> rho_from(const Problem& P, const std::vector<Scalar>& t) {
    std::vector<Scalar> rho(static_cast<size_t>(P.A.dim) * P.A.dim, Scalar::zero(P.A.field));
    for (size_t i = 0; i < P.support.size(); ++i)
        rho[static_cast<size_t>(P.support[i].first) * P.A.dim + P.support[i].second] = t[i];
    return rho;
}

void add_rows_from_t2(AffineRows& sys, const std::vector<Tensor2>& cols, const FieldPtr& F) {
    size_t n = cols.empty() ? 0 : cols[0].c.size();
    for (size_t p = 0; p < n; ++p) {
        std::vector<Scalar> row;
        row.reserve(cols.size());
        bool nonzero = false;
        for (const auto& c : cols) {
            row.push_back(c.c[p]);
            if (!c.c[p].is_zero()) nonzero = true;
        }
        if (nonzero) {
            sys.rows.push_back(std::move(row));
            sys.rhs.push_back(Scalar::zero(F));
        }
    }
}

AffineRows build_linear_system(const Problem& P) {
    const HopfAlgebraSpec& A = P.A;
    int d = A.dim;
    auto F = A.field;
    size_t n = P.support.size();
    AffineRows sys;

    // axiom 1 at the generators
    for (int g : P.generators) {
        Tensor2 cop = A.coproduct_of(A.basis_elem(g));
        Tensor2 copf(d, F);
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) copf.at(k, j) = cop.at(j, k);
        std::vector<Tensor2> cols;
        cols.reserve(n);
        for (auto [j, k] : P.support) {
            Tensor2 e(d, F);
            e.at(j, k) = Scalar::one(F);
            Tensor2 r1 = A.t2_multiply(e, cop);
            Tensor2 r2 = A.t2_multiply(copf, e);
            for (size_t p = 0; p < r1.c.size(); ++p) r1.c[p] -= r2.c[p];
            cols.push_back(std::move(r1));
        }
        add_rows_from_t2(sys, cols, F);
    }

    // (eps x 1) rho = 1 and (1 x eps) rho = 1
    for (int t = 0; t < d; ++t) {
        std::vector<Scalar> row1(n, Scalar::zero(F)), row2(n, Scalar::zero(F));
        for (size_t i = 0; i < n; ++i) {
            auto [j, k] = P.support[i];
            if (k == t) row1[i] += A.counit[j];
            if (j == t) row2[i] += A.counit[k];
        }
        sys.rows.push_back(std::move(row1));
        sys.rhs.push_back(A.unit[t]);
        sys.rows.push_back(std::move(row2));
        sys.rhs.push_back(A.unit[t]);
    }

    // (s x s) rho = rho
    {
        std::vector<Tensor2> cols;
        cols.reserve(n);
        for (auto [j, k] : P.support) {
            Tensor2 res(d, F);
            AlgebraElement sj = A.antipode_apply(A.basis_elem(j));
            AlgebraElement sk = A.antipode_apply(A.basis_elem(k));
            for (int j2 = 0; j2 < d; ++j2) {
                if (sj.c[j2].is_zero()) continue;
                for (int k2 = 0; k2 < d; ++k2)
                    if (!sk.c[k2].is_zero()) res.at(j2, k2) += sj.c[j2] * sk.c[k2];
            }
            res.at(j, k) -= Scalar::one(F);
            cols.push_back(std::move(res));
        }
        add_rows_from_t2(sys, cols, F);
    }

    // u-support and ribbon-linear identities
    std::vector<AlgebraElement> u_of;
    u_of.reserve(n);
    for (auto [j, k] : P.support)
        u_of.push_back(A.multiply(A.antipode_apply(A.basis_elem(k)), A.basis_elem(j)));

    if (!P.u_support.empty()) {
        std::vector<bool> ok(d, false);
        for (int i : P.u_support) ok[i] = true;
        for (int t = 0; t < d; ++t) {
            if (ok[t]) continue;
            std::vector<Scalar> row(n, Scalar::zero(F));
            bool nonzero = false;
            for (size_t i = 0; i < n; ++i) {
                row[i] = u_of[i].c[t];
                if (!row[i].is_zero()) nonzero = true;
            }
            if (nonzero) {
                sys.rows.push_back(std::move(row));
                sys.rhs.push_back(Scalar::zero(F));
            }
        }
    }

    if (P.g_candidates.size() == 1) {
        AlgebraElement G = A.basis_elem(A.label_index(P.g_candidates[0]));
        Matrix L(d, d, F);
        for (int j = 0; j < d; ++j) {
            AlgebraElement col = A.multiply(G, A.basis_elem(j));
            for (int k = 0; k < d; ++k) L.at(k, j) = col.c[k];
        }
        AlgebraElement Ginv{*solve(L, A.unit)};
        for (int t = 0; t < d; ++t) {  // s(u) = G^-1 u G^-1
            std::vector<Scalar> row(n, Scalar::zero(F));
            bool nonzero = false;
            for (size_t i = 0; i < n; ++i) {
                AlgebraElement diff = A.sub(A.antipode_apply(u_of[i]),
                                            A.multiply(A.multiply(Ginv, u_of[i]), Ginv));
                row[i] = diff.c[t];
                if (!row[i].is_zero()) nonzero = true;
            }
            if (nonzero) {
                sys.rows.push_back(std::move(row));
                sys.rhs.push_back(Scalar::zero(F));
            }
        }
        for (int b = 0; b < d; ++b) {  // s^2(b) u = u b
            AlgebraElement s2 = A.antipode_apply(A.antipode_apply(A.basis_elem(b)));
            for (int t = 0; t < d; ++t) {
                std::vector<Scalar> row(n, Scalar::zero(F));
                bool nonzero = false;
                for (size_t i = 0; i < n; ++i) {
                    AlgebraElement diff =
                        A.sub(A.multiply(s2, u_of[i]), A.multiply(u_of[i], A.basis_elem(b)));
                    row[i] = diff.c[t];
                    if (!row[i].is_zero()) nonzero = true;
                }
                if (nonzero) {
                    sys.rows.push_back(std::move(row));
                    sys.rhs.push_back(Scalar::zero(F));
                }
            }
        }
    }
    return sys;
}

std::vector<Scalar> axiom2_residual(const HopfAlgebraSpec& base, const std::vector<Scalar>& rho) {
    HopfAlgebraSpec A = base;
    A.has_rho = true;
    A.rho = rho;
    A.finalize();
    int d = A.dim;
    Tensor2 R = A.rho_tensor();
    Tensor3 r13 = embed13(A, R), r12 = embed12(A, R), r23 = embed23(A, R);
    Tensor3 lhs_a = A.t3_multiply(r13, r12);
    Tensor3 rhs_a(d, A.field);
    for (const auto& e : A.rho_terms())
        for (const auto& f : A.cop_terms(e.k)) rhs_a.at(e.j, f.j, f.k) += e.v * f.v;
    Tensor3 lhs_b = A.t3_multiply(r13, r23);
    Tensor3 rhs_b(d, A.field);
    for (const auto& e : A.rho_terms())
        for (const auto& f : A.cop_terms(e.j)) rhs_b.at(f.j, f.k, e.k) += e.v * f.v;
    Tensor2 Rinv = A.rho_under_tensor();
    Tensor2 one2 = A.t2_unit();
    Tensor2 inv_l = A.t2_multiply(Rinv, R);
    Tensor2 inv_r = A.t2_multiply(R, Rinv);
    std::vector<Scalar> out;
    out.reserve(lhs_a.c.size() * 2 + inv_l.c.size() * 2);
    for (size_t p = 0; p < lhs_a.c.size(); ++p) out.push_back(lhs_a.c[p] - rhs_a.c[p]);
    for (size_t p = 0; p < lhs_b.c.size(); ++p) out.push_back(lhs_b.c[p] - rhs_b.c[p]);
    for (size_t p = 0; p < inv_l.c.size(); ++p) out.push_back(inv_l.c[p] - one2.c[p]);
    for (size_t p = 0; p < inv_r.c.size(); ++p) out.push_back(inv_r.c[p] - one2.c[p]);
    return out;
}

void report_candidate(const Problem& P, const std::vector<Scalar>& rho) {
    for (const auto& glabel : P.g_candidates) {
        HopfAlgebraSpec B = P.A;
        B.has_rho = true;
        B.rho = rho;
        B.has_grouplike = true;
        B.grouplike_G.assign(B.dim, Scalar::zero(B.field));
        B.grouplike_G[B.label_index(glabel)] = Scalar::one(B.field);
        B.finalize();
        AxiomReport qt = check_quasitriangular(B);
        if (!qt.all_pass()) {
            std::cout << "  quasitriangular FAILS: " << qt.first_failure()->axiom << "\n";
            return;
        }
        AxiomReport rib = check_ribbon(B);
        std::cout << "  G=" << glabel << " ribbon: " << (rib.all_pass() ? "PASS" : "fail");
        if (!rib.all_pass()) {
            std::cout << " (" << rib.first_failure()->axiom << ")\n";
            continue;
        }
        try {
            IntegralResult ir = right_integral(B);
            std::cout << " lambda-props p1=" << ir.property1 << " p2=" << ir.property2;
            LinearFunctional tr = make_trace(B, ir.lambda);
            AxiomReport trt = check_trace_theorem(B, tr);
            std::cout << " trace-theorem=" << trt.all_pass();
            DrinfeldData dr = compute_drinfeld(B);
            AlgebraElement G{B.grouplike_G};
            Matrix L(B.dim, B.dim, B.field);
            for (int j = 0; j < B.dim; ++j) {
                AlgebraElement col = B.multiply(G, B.basis_elem(j));
                for (int k = 0; k < B.dim; ++k) L.at(k, j) = col.c[k];
            }
            AlgebraElement ginv{*solve(L, B.unit)};
            AlgebraElement v = B.multiply(ginv, dr.u);
            AlgebraElement vinv = B.multiply(dr.u_inv, G);
            Scalar lv = B.apply(ir.lambda, v), lvi = B.apply(ir.lambda, vinv);
            std::cout << "\n    u = " << B.elem_to_string(dr.u);
            std::cout << "\n    v = " << B.elem_to_string(v);
            std::cout << "\n    lambda(v)=" << lv.to_string()
                      << " lambda(v^-1)=" << lvi.to_string() << "\n";
            if (!lv.is_zero() && !lvi.is_zero()) {
                std::vector<Scalar> inv_vals;
                std::cout << "    INV proxy: ";
                for (int nn = -8; nn <= 8; ++nn) {
                    if (nn == 0) continue;
                    AlgebraElement pvn = B.power(nn > 0 ? v : vinv, nn > 0 ? nn : -nn);
                    Scalar val = B.apply(ir.lambda, pvn) * (nn > 0 ? lv : lvi).inverse();
                    std::cout << "[" << nn << "]=" << val.to_string() << " ";
                    inv_vals.push_back(val);
                }
                bool distinct = true;
                for (size_t p1 = 0; p1 < inv_vals.size(); ++p1)
                    for (size_t p2 = 0; p2 < p1; ++p2)
                        if (inv_vals[p1] == inv_vals[p2]) distinct = false;
                std::cout << "\n    lens proxy pairwise distinct: "
                          << (distinct ? "YES" : "no") << "\n";
            }
            std::cout << "    rho entries:\n";
            for (const auto& e : B.rho_terms())
                std::cout << "      {\"" << B.basis_labels[e.j] << "\", \"" << B.basis_labels[e.k]
                          << "\", \"" << e.v.to_string() << "\"},\n";
        } catch (const std::exception& ex) {
            std::cout << " integral: " << ex.what() << "\n";
        }
    }
}

void run(const std::string& name, Problem P) {
    std::cout << "=== " << name << " ===\n";
    P.A.finalize();
    AxiomReport hopf = check_hopf_axioms(P.A);
    if (!hopf.all_pass()) {
        std::cout << "base fails " << hopf.first_failure()->axiom << " at "
                  << hopf.first_failure()->witness << "\n";
        return;
    }
    if (P.support.empty())
        for (int j = 0; j < P.A.dim; ++j)
            for (int k = 0; k < P.A.dim; ++k) P.support.push_back({j, k});
    auto F = P.A.field;
    size_t n = P.support.size();
    std::cout << "unknowns: " << n << "\n";

    AffineRows sys = build_linear_system(P);
    std::cout << "rows: " << sys.rows.size() << "\n";
    Matrix M(static_cast<int>(sys.rows.size()), static_cast<int>(n), F);
    for (size_t r = 0; r < sys.rows.size(); ++r)
        for (size_t c = 0; c < n; ++c) M.at(static_cast<int>(r), static_cast<int>(c)) =
            sys.rows[r][c];
    auto part = solve(M, sys.rhs);
    if (!part) {
        std::cout << "linear system inconsistent\n";
        return;
    }
    auto null = nullspace(M);
    size_t k = null.size();
    std::cout << "affine solution dimension: " << k << "\n";
    if (std::getenv("DUMP_AFFINE")) {
        auto dump = [&](const std::vector<Scalar>& v, const std::string& tag) {
            std::cout << " " << tag << ":";
            for (size_t i = 0; i < n; ++i)
                if (!v[i].is_zero())
                    std::cout << " (" << P.A.basis_labels[P.support[i].first] << ","
                              << P.A.basis_labels[P.support[i].second] << ")="
                              << v[i].to_string();
            std::cout << "\n";
        };
        dump(*part, "particular");
        for (size_t i = 0; i < k; ++i) dump(null[i], "null[" + std::to_string(i) + "]");
    }

    auto rho_at = [&](const std::vector<Scalar>& t) {
        std::vector<Scalar> red = *part;
        for (size_t i = 0; i < k; ++i)
            if (!t[i].is_zero())
                for (size_t c = 0; c < n; ++c) red[c] += t[i] * null[i][c];
        return rho_from(P, red);
    };

    Scalar zero = Scalar::zero(F), one = Scalar::one(F);
    Scalar half = Scalar::rational(F, 1, 2);
    std::vector<Scalar> t0(k, zero);
    std::vector<Scalar> C = axiom2_residual(P.A, rho_at(t0));
    size_t N = C.size();
    std::vector<std::vector<Scalar>> Lc(k), Qd(k);
    for (size_t i = 0; i < k; ++i) {
        std::vector<Scalar> tp(k, zero), tm(k, zero);
        tp[i] = one;
        tm[i] = -one;
        auto Rp = axiom2_residual(P.A, rho_at(tp));
        auto Rm = axiom2_residual(P.A, rho_at(tm));
        Lc[i].reserve(N);
        Qd[i].reserve(N);
        for (size_t p = 0; p < N; ++p) {
            Lc[i].push_back((Rp[p] - Rm[p]) * half);
            Qd[i].push_back((Rp[p] + Rm[p]) * half - C[p]);
        }
        std::cout << "." << std::flush;
    }
    std::vector<std::vector<std::vector<Scalar>>> Q(k, std::vector<std::vector<Scalar>>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            std::vector<Scalar> t(k, zero);
            t[i] = one;
            t[j] = one;
            auto Rij = axiom2_residual(P.A, rho_at(t));
            std::vector<Scalar> q;
            q.reserve(N);
            for (size_t p = 0; p < N; ++p)
                q.push_back(Rij[p] - C[p] - Lc[i][p] - Lc[j][p] - Qd[i][p] - Qd[j][p]);
            Q[i][j] = std::move(q);
            std::cout << "." << std::flush;
        }
    std::cout << "\n";

    // split directions: "linear-safe" ones have vanishing self-square and
    // vanishing products with every other linear-safe direction, so for any
    // fixed assignment of the remaining (grid) directions the residual is
    // linear in them.
    auto vec_zero = [](const std::vector<Scalar>& v) {
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    };
    std::vector<size_t> linset, gridset;
    for (size_t i = 0; i < k; ++i)
        if (vec_zero(Qd[i])) linset.push_back(i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < linset.size() && !changed; ++a)
            for (size_t b = a + 1; b < linset.size() && !changed; ++b) {
                size_t i = std::min(linset[a], linset[b]), j = std::max(linset[a], linset[b]);
                if (!vec_zero(Q[i][j])) {
                    linset.erase(linset.begin() + b);
                    changed = true;
                }
            }
    }
    {
        std::vector<bool> inlin(k, false);
        for (size_t i : linset) inlin[i] = true;
        for (size_t i = 0; i < k; ++i)
            if (!inlin[i]) gridset.push_back(i);
    }
    std::cout << "grid directions: " << gridset.size() << ", linear directions: "
              << linset.size() << "\n";

    std::vector<Scalar> values;
    for (int num : {0, 1, -1, 2, -2, 4, -4}) values.push_back(Scalar::integer(F, num));
    for (int den : {2, 4, 8}) {
        values.push_back(Scalar::rational(F, 1, den));
        values.push_back(Scalar::rational(F, -1, den));
    }
    {
        size_t base_count = values.size();
        for (int j = 1; j < F->cyclotomic_order(); ++j) {
            Scalar zj = Scalar::zeta(F, j);
            for (size_t i = 1; i < base_count; ++i) values.push_back(values[i] * zj);
        }
        if (F->cyclotomic_order() % 4 == 0) {
            Scalar im = Scalar::zeta(F, F->cyclotomic_order() / 4);
            for (int den : {1, 2, 4, 8}) {
                Scalar s = Scalar::rational(F, 1, den);
                values.push_back(s + s * im);
                values.push_back(s - s * im);
                values.push_back(-(s + s * im));
                values.push_back(-(s - s * im));
            }
        }
    }
    if (gridset.size() > 3) {
        std::cout << "too many grid directions\n";
        return;
    }

    std::vector<size_t> odo(gridset.size(), 0);
    int found = 0;
    long long tried = 0;
    while (true) {
        std::vector<Scalar> t(k, zero);
        for (size_t i = 0; i < gridset.size(); ++i) t[gridset[i]] = values[odo[i]];
        ++tried;
        // residual restricted: base(t_grid) + sum_l t_l * dir_l(t_grid)
        std::vector<Scalar> base = C;
        for (size_t gi : gridset) {
            for (size_t p = 0; p < N; ++p) base[p] += t[gi] * Lc[gi][p] + t[gi] * t[gi] * Qd[gi][p];
        }
        for (size_t a = 0; a < gridset.size(); ++a)
            for (size_t b = a + 1; b < gridset.size(); ++b) {
                size_t i = std::min(gridset[a], gridset[b]), j = std::max(gridset[a], gridset[b]);
                for (size_t p = 0; p < N; ++p) base[p] += t[gridset[a]] * t[gridset[b]] * Q[i][j][p];
            }
        std::vector<std::vector<Scalar>> dirs;
        for (size_t li : linset) {
            std::vector<Scalar> dir = Lc[li];
            for (size_t gi : gridset) {
                size_t i = std::min(li, gi), j = std::max(li, gi);
                if (!vec_zero(Q[i][j]))
                    for (size_t p = 0; p < N; ++p) dir[p] += t[gi] * Q[i][j][p];
            }
            dirs.push_back(std::move(dir));
        }
        // solve base + sum t_l dir_l = 0
        std::vector<int> keep;
        for (size_t p = 0; p < N; ++p) {
            bool nz = !base[p].is_zero();
            for (const auto& d : dirs)
                if (!d[p].is_zero()) nz = true;
            if (nz) keep.push_back(static_cast<int>(p));
        }
        Matrix MM(static_cast<int>(keep.size()), static_cast<int>(linset.size()), F);
        std::vector<Scalar> bb;
        bb.reserve(keep.size());
        for (size_t r = 0; r < keep.size(); ++r) {
            for (size_t c = 0; c < linset.size(); ++c) MM.at(static_cast<int>(r),
                                                             static_cast<int>(c)) =
                dirs[c][keep[r]];
            bb.push_back(-base[keep[r]]);
        }
        auto sol = solve(MM, bb);
        if (sol) {
            std::cout << "linear-consistent at grid (";
            for (size_t i = 0; i < gridset.size(); ++i)
                std::cout << values[odo[i]].to_string() << (i + 1 < gridset.size() ? "," : "");
            std::cout << ")\n";
            for (size_t c = 0; c < linset.size(); ++c) t[linset[c]] = (*sol)[c];
            std::vector<Scalar> rho = rho_at(t);
            std::vector<Scalar> res = axiom2_residual(P.A, rho);
            if (vec_zero(res)) {
                ++found;
                std::cout << "candidate t = (";
                for (size_t i = 0; i < k; ++i)
                    std::cout << t[i].to_string() << (i + 1 < k ? ", " : "");
                std::cout << ")\n";
                report_candidate(P, rho_at(t));
                if (found >= 4) return;
            }
        }
        size_t i = 0;
        for (; i < gridset.size(); ++i) {
            if (++odo[i] < values.size()) break;
            odo[i] = 0;
        }
        if (i == gridset.size() || gridset.empty()) break;
    }
    std::cout << "grid points tried: " << tried << ", candidates found: " << found << "\n";
}

// Z8 with i-graded nilpotents over Q(i): a^8 = 1, x^2 = y^2 = 0,
// xa = i ax, ya = -i ay, xy - yx = delta (a^2 - a^6),
// Delta(x) = x (x) a^2 + 1 (x) x, Delta(y) = y (x) 1 + a^6 (x) y.
HopfAlgebraSpec build_z8(const Scalar& delta, int field_order = 4) {
    auto field = FieldSpec::make(field_order);
    Scalar one = Scalar::one(field), z = Scalar::zero(field);
    Scalar im = Scalar::zeta(field, field_order / 4);  // i as element of Q(zeta_n)
    HopfAlgebraSpec A;
    A.field = field;
    A.dim = 32;
    size_t dd = 32;
    A.mult.assign(dd * dd * dd, z);
    A.coproduct.assign(dd * dd * dd, z);
    A.counit.assign(dd, z);
    A.antipode.assign(dd * dd, z);
    A.unit.assign(dd, z);
    auto idx = [](int m, int e, int f) { return ((m % 8) + 8) % 8 + 8 * (e + 2 * f); };
    for (int m = 0; m < 8; ++m)
        for (int e = 0; e <= 1; ++e)
            for (int f = 0; f <= 1; ++f) {
                std::string lbl = (m == 0 && e + f == 0) ? "1" : "";
                if (m == 1) lbl += "a";
                if (m > 1) lbl += "a" + std::to_string(m);
                if (e) lbl += "x";
                if (f) lbl += "y";
                A.basis_labels.resize(32);
                A.basis_labels[idx(m, e, f)] = lbl;
            }
    auto ipow = [&](int p) {
        Scalar r = one;
        p = ((p % 4) + 4) % 4;
        for (int t = 0; t < p; ++t) r = r * im;
        return r;
    };
    auto setm = [&](int i, int j, int k, const Scalar& v) {
        A.mult[(static_cast<size_t>(i) * 32 + j) * 32 + k] += v;
    };
    for (int m = 0; m < 8; ++m)
        for (int e1 = 0; e1 <= 1; ++e1)
            for (int f1 = 0; f1 <= 1; ++f1)
                for (int nn = 0; nn < 8; ++nn)
                    for (int e2 = 0; e2 <= 1; ++e2)
                        for (int f2 = 0; f2 <= 1; ++f2) {
                            int i = idx(m, e1, f1), j = idx(nn, e2, f2);
                            // x^{e1} y^{f1} a^n = i^{n e1} (-i)^{n f1} a^n x^{e1} y^{f1}
                            Scalar s1 = ipow(nn * e1 - nn * f1);
                            int mm = m + nn;
                            if (f1 == 0 || e2 == 0) {
                                if (e1 + e2 <= 1 && f1 + f2 <= 1)
                                    setm(i, j, idx(mm, e1 + e2, f1 + f2), s1);
                            } else {
                                // y x = x y - delta (a^2 - a^6)
                                if (e1 == 0 && f2 == 0) setm(i, j, idx(mm, 1, 1), s1);
                                // - x^{e1} delta (a^2 - a^6) y^{f2}
                                Scalar t2 = -(s1 * delta) * ipow(2 * e1);
                                Scalar t6 = (s1 * delta) * ipow(6 * e1);
                                setm(i, j, idx(mm + 2, e1, f2), t2);
                                setm(i, j, idx(mm + 6, e1, f2), t6);
                            }
                        }
    for (int m = 0; m < 8; ++m) A.counit[idx(m, 0, 0)] = one;
    A.unit[0] = one;
    {
        HopfAlgebraSpec tmp = A;
        tmp.coproduct.assign(dd * dd * dd, z);
        tmp.antipode.assign(dd * dd, z);
        for (size_t t = 0; t < dd; ++t) tmp.antipode[t * 32 + t] = one;
        for (size_t t = 0; t < dd; ++t) tmp.coproduct[(t * 32 + 0) * 32 + t] = one;
        tmp.finalize();
        Tensor2 da(32, field), dx(32, field), dy(32, field);
        da.at(idx(1, 0, 0), idx(1, 0, 0)) = one;
        dx.at(idx(0, 1, 0), idx(2, 0, 0)) = one;
        dx.at(idx(0, 0, 0), idx(0, 1, 0)) = one;
        dy.at(idx(0, 0, 1), idx(0, 0, 0)) = one;
        dy.at(idx(6, 0, 0), idx(0, 0, 1)) = one;
        for (int m = 0; m < 8; ++m)
            for (int e = 0; e <= 1; ++e)
                for (int f = 0; f <= 1; ++f) {
                    Tensor2 d = tmp.t2_unit();
                    for (int t = 0; t < m; ++t) d = tmp.t2_multiply(d, da);
                    for (int t = 0; t < e; ++t) d = tmp.t2_multiply(d, dx);
                    for (int t = 0; t < f; ++t) d = tmp.t2_multiply(d, dy);
                    int i = idx(m, e, f);
                    for (int jj = 0; jj < 32; ++jj)
                        for (int kk = 0; kk < 32; ++kk)
                            A.coproduct[(static_cast<size_t>(i) * 32 + jj) * 32 + kk] =
                                d.at(jj, kk);
                }
        // s(x) = -x a^{-2} = -i^{-2} a^{-2} x = a^6 x
        // s(y) = -a^{-6} y = -a^2 y
        AlgebraElement sa = tmp.basis_elem(idx(7, 0, 0));
        AlgebraElement sx = tmp.basis_elem(idx(6, 1, 0));
        AlgebraElement sy = tmp.scale(-one, tmp.basis_elem(idx(2, 0, 1)));
        for (int m = 0; m < 8; ++m)
            for (int e = 0; e <= 1; ++e)
                for (int f = 0; f <= 1; ++f) {
                    AlgebraElement s = tmp.unit_elem();
                    for (int t = 0; t < f; ++t) s = tmp.multiply(s, sy);
                    for (int t = 0; t < e; ++t) s = tmp.multiply(s, sx);
                    for (int t = 0; t < m; ++t) s = tmp.multiply(s, sa);
                    int i = idx(m, e, f);
                    for (int jj = 0; jj < 32; ++jj)
                        A.antipode[static_cast<size_t>(i) * 32 + jj] = s.c[jj];
                }
    }
    return A;
}

}  // namespace

int main(int argc, char** argv) {
    std::string which = argc > 1 ? argv[1] : "all";
    if (which == "h4" || which == "all") {
        Problem P;
        P.A = detail::build_h4_base();
        P.generators = {1, 2};
        P.g_candidates = {"g"};
        run("sweedler_h4", std::move(P));
    }
    if (which == "z8" || which == "all") {
        int order = 4;
        if (const char* e = std::getenv("FIELD_ORDER")) order = std::atoi(e);
        auto F = FieldSpec::make(order);
        Problem P;
        P.A = build_z8(Scalar::one(F), order);
        P.generators = {1, 8, 16};
        P.g_candidates = {"a2", "a6"};
        // minimal-QT shape: support in (group + x-monos) (x) (group + y-monos),
        // cut down by the a (x) a grading filter
        for (int m = 0; m < 8; ++m)
            for (int nn = 0; nn < 8; ++nn) {
                P.support.push_back({m, nn});
                P.support.push_back({8 + m, 16 + nn});
                if (std::getenv("WIDE_SUPPORT")) P.support.push_back({24 + m, 24 + nn});
            }
        run("z8 extended restricted quantum group", std::move(P));
    }
    return 0;
}
