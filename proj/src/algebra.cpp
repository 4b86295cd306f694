#include "hennings/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hennings/linalg.hpp"

namespace hennings {

void HopfAlgebraSpec::finalize() {
    if (!field) throw data_error("algebra spec has no field");
    if (dim <= 0) throw data_error("algebra dimension must be positive");
    size_t d = static_cast<size_t>(dim);
    if (basis_labels.size() != d) throw data_error("basis label count != dim");
    std::set<std::string> seen(basis_labels.begin(), basis_labels.end());
    if (seen.size() != d) throw data_error("basis labels are not distinct");
    if (mult.size() != d * d * d) throw data_error("mult tensor has wrong shape");
    if (coproduct.size() != d * d * d) throw data_error("coproduct tensor has wrong shape");
    if (counit.size() != d) throw data_error("counit has wrong shape");
    if (antipode.size() != d * d) throw data_error("antipode has wrong shape");
    if (unit.size() != d) throw data_error("unit has wrong shape");
    if (has_rho && rho.size() != d * d) throw data_error("rho has wrong shape");
    if (has_grouplike && grouplike_G.size() != d) throw data_error("grouplike_G has wrong shape");

    mult_nz_.assign(d * d, {});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!m3(i, j, k).is_zero()) mult_nz_[i * d + j].push_back({k, m3(i, j, k)});

    cop_nz_.assign(d, {});
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!d3(i, j, k).is_zero()) cop_nz_[i].push_back({j, k, d3(i, j, k)});

    rho_nz_.clear();
    if (has_rho)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                if (!rho[static_cast<size_t>(j) * dim + k].is_zero())
                    rho_nz_.push_back({j, k, rho[static_cast<size_t>(j) * dim + k]});

    // Antipode inverse by exact matrix inversion, when it exists.
    Matrix s(dim, dim, field);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s.at(i, j) = antipode[static_cast<size_t>(i) * dim + j];
    auto sinv = inverse(s);
    if (sinv) {
        std::vector<Scalar> table(d * d, Scalar::zero(field));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) table[static_cast<size_t>(i) * dim + j] = sinv->at(i, j);
        antipode_inv_ = std::move(table);
    } else {
        antipode_inv_.reset();
    }
}

AlgebraElement HopfAlgebraSpec::zero_elem() const {
    return {std::vector<Scalar>(dim, Scalar::zero(field))};
}

AlgebraElement HopfAlgebraSpec::basis_elem(int i) const {
    AlgebraElement e = zero_elem();
    e.c[i] = Scalar::one(field);
    return e;
}

AlgebraElement HopfAlgebraSpec::unit_elem() const { return {unit}; }

AlgebraElement HopfAlgebraSpec::add(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement r = x;
    for (int i = 0; i < dim; ++i) r.c[i] += y.c[i];
    return r;
}

AlgebraElement HopfAlgebraSpec::sub(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement r = x;
    for (int i = 0; i < dim; ++i) r.c[i] -= y.c[i];
    return r;
}

AlgebraElement HopfAlgebraSpec::scale(const Scalar& s, const AlgebraElement& x) const {
    AlgebraElement r = x;
    for (int i = 0; i < dim; ++i) r.c[i] *= s;
    return r;
}

AlgebraElement HopfAlgebraSpec::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    if (static_cast<int>(x.c.size()) != dim || static_cast<int>(y.c.size()) != dim)
        throw data_error("element dimension mismatch");
    AlgebraElement r = zero_elem();
    for (int i = 0; i < dim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (y.c[j].is_zero()) continue;
            Scalar coeff = x.c[i] * y.c[j];
            for (const auto& e : mult_col(i, j)) r.c[e.k] += coeff * e.v;
        }
    }
    return r;
}

AlgebraElement HopfAlgebraSpec::power(const AlgebraElement& x, int n) const {
    AlgebraElement r = unit_elem();
    for (int i = 0; i < n; ++i) r = multiply(r, x);
    return r;
}

AlgebraElement HopfAlgebraSpec::antipode_apply(const AlgebraElement& x) const {
    AlgebraElement r = zero_elem();
    for (int i = 0; i < dim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            const Scalar& v = antipode[static_cast<size_t>(i) * dim + j];
            if (!v.is_zero()) r.c[j] += x.c[i] * v;
        }
    }
    return r;
}

AlgebraElement HopfAlgebraSpec::antipode_inv_apply(const AlgebraElement& x) const {
    if (!antipode_inv_) throw data_error("antipode is not invertible");
    AlgebraElement r = zero_elem();
    for (int i = 0; i < dim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            const Scalar& v = (*antipode_inv_)[static_cast<size_t>(i) * dim + j];
            if (!v.is_zero()) r.c[j] += x.c[i] * v;
        }
    }
    return r;
}

AlgebraElement HopfAlgebraSpec::antipode_power(const AlgebraElement& x, int k) const {
    AlgebraElement r = x;
    for (; k > 0; --k) r = antipode_apply(r);
    for (; k < 0; ++k) r = antipode_inv_apply(r);
    return r;
}

Scalar HopfAlgebraSpec::counit_apply(const AlgebraElement& x) const {
    Scalar r = Scalar::zero(field);
    for (int i = 0; i < dim; ++i)
        if (!x.c[i].is_zero()) r += x.c[i] * counit[i];
    return r;
}

Tensor2 HopfAlgebraSpec::coproduct_of(const AlgebraElement& x) const {
    Tensor2 t(dim, field);
    for (int i = 0; i < dim; ++i) {
        if (x.c[i].is_zero()) continue;
        for (const auto& e : cop_terms(i)) t.at(e.j, e.k) += x.c[i] * e.v;
    }
    return t;
}

bool HopfAlgebraSpec::is_zero_elem(const AlgebraElement& x) const {
    for (const auto& s : x.c)
        if (!s.is_zero()) return false;
    return true;
}

Scalar HopfAlgebraSpec::apply(const LinearFunctional& f, const AlgebraElement& x) const {
    Scalar r = Scalar::zero(field);
    for (int i = 0; i < dim; ++i)
        if (!x.c[i].is_zero() && !f.c[i].is_zero()) r += f.c[i] * x.c[i];
    return r;
}

Tensor2 HopfAlgebraSpec::t2_multiply(const Tensor2& a, const Tensor2& b) const {
    Tensor2 r(dim, field);
    size_t dd = static_cast<size_t>(dim);
    std::vector<size_t> bnz;
    for (size_t q = 0; q < dd * dd; ++q)
        if (!b.c[q].is_zero()) bnz.push_back(q);
    for (size_t p = 0; p < dd * dd; ++p) {
        const Scalar& av = a.c[p];
        if (av.is_zero()) continue;
        int j1 = static_cast<int>(p / dd), k1 = static_cast<int>(p % dd);
        for (size_t q : bnz) {
            int j2 = static_cast<int>(q / dd), k2 = static_cast<int>(q % dd);
            Scalar coeff = av * b.c[q];
            for (const auto& ej : mult_col(j1, j2))
                for (const auto& ek : mult_col(k1, k2)) r.at(ej.k, ek.k) += coeff * ej.v * ek.v;
        }
    }
    return r;
}

Tensor3 HopfAlgebraSpec::t3_multiply(const Tensor3& a, const Tensor3& b) const {
    Tensor3 r(dim, field);
    size_t dd = static_cast<size_t>(dim);
    std::vector<size_t> anz, bnz;
    for (size_t p = 0; p < dd * dd * dd; ++p)
        if (!a.c[p].is_zero()) anz.push_back(p);
    for (size_t q = 0; q < dd * dd * dd; ++q)
        if (!b.c[q].is_zero()) bnz.push_back(q);
    for (size_t p : anz) {
        int i1 = static_cast<int>(p / (dd * dd));
        int j1 = static_cast<int>((p / dd) % dd);
        int k1 = static_cast<int>(p % dd);
        for (size_t q : bnz) {
            int i2 = static_cast<int>(q / (dd * dd));
            int j2 = static_cast<int>((q / dd) % dd);
            int k2 = static_cast<int>(q % dd);
            Scalar coeff = a.c[p] * b.c[q];
            for (const auto& ei : mult_col(i1, i2))
                for (const auto& ej : mult_col(j1, j2))
                    for (const auto& ek : mult_col(k1, k2))
                        r.at(ei.k, ej.k, ek.k) += coeff * ei.v * ej.v * ek.v;
        }
    }
    return r;
}

Tensor2 HopfAlgebraSpec::t2_unit() const {
    Tensor2 r(dim, field);
    for (int j = 0; j < dim; ++j) {
        if (unit[j].is_zero()) continue;
        for (int k = 0; k < dim; ++k)
            if (!unit[k].is_zero()) r.at(j, k) += unit[j] * unit[k];
    }
    return r;
}

Tensor2 HopfAlgebraSpec::rho_tensor() const {
    if (!has_rho) throw data_error("algebra has no rho");
    Tensor2 r(dim, field);
    r.c = rho;
    return r;
}

Tensor2 HopfAlgebraSpec::rho_under_tensor() const {
    Tensor2 r(dim, field);
    for (const auto& e : rho_terms()) {
        // (s (x) 1) applied to the j-th slot
        for (int j2 = 0; j2 < dim; ++j2) {
            const Scalar& sv = antipode[static_cast<size_t>(e.j) * dim + j2];
            if (!sv.is_zero()) r.at(j2, e.k) += e.v * sv;
        }
    }
    return r;
}

std::string HopfAlgebraSpec::elem_to_string(const AlgebraElement& x) const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < dim; ++i) {
        if (x.c[i].is_zero()) continue;
        std::string cs = x.c[i].to_string();
        if (!first) out << " + ";
        first = false;
        if (cs == "1") {
            out << basis_labels[i];
        } else if (cs.find_first_of("+-") != std::string::npos && cs.rfind('-', 0) != 0) {
            out << "(" << cs << ")*" << basis_labels[i];
        } else if (cs.find_first_of("+-", 1) != std::string::npos) {
            out << "(" << cs << ")*" << basis_labels[i];
        } else {
            out << cs << "*" << basis_labels[i];
        }
    }
    if (first) return "0";
    return out.str();
}

int HopfAlgebraSpec::label_index(const std::string& label) const {
    for (int i = 0; i < dim; ++i)
        if (basis_labels[i] == label) return i;
    return -1;
}

AlgebraElement HopfAlgebraSpec::parse_element(const std::string& text) const {
    // terms split on top-level '+'; each term is [scalar *] label or a
    // parenthesized scalar times label.
    AlgebraElement r = zero_elem();
    size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        size_t end = pos;
        int depth = 0;
        while (end < text.size()) {
            char ch = text[end];
            if (ch == '(') ++depth;
            if (ch == ')') --depth;
            if (ch == '+' && depth == 0 && end > pos) break;
            ++end;
        }
        std::string term = text.substr(pos, end - pos);
        pos = end + 1;
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
            term.pop_back();
        if (term.empty()) throw parse_error("empty term in element '" + text + "'");

        // split off the trailing label
        size_t star = term.rfind('*');
        std::string coeff_text = "1";
        std::string label = term;
        if (star != std::string::npos) {
            coeff_text = term.substr(0, star);
            label = term.substr(star + 1);
            while (!coeff_text.empty() &&
                   std::isspace(static_cast<unsigned char>(coeff_text.back())))
                coeff_text.pop_back();
            if (coeff_text.size() >= 2 && coeff_text.front() == '(' && coeff_text.back() == ')')
                coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
        }
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front())))
            label.erase(label.begin());
        int idx = label_index(label);
        if (idx < 0) {
            // the whole term may be a bare scalar multiple of the unit
            idx = -1;
            try {
                Scalar s = parse_scalar(term, field);
                AlgebraElement u = unit_elem();
                for (int i = 0; i < dim; ++i) r.c[i] += s * u.c[i];
                any = true;
                continue;
            } catch (const parse_error&) {
                throw parse_error("unknown basis label '" + label + "'");
            }
        }
        r.c[idx] += parse_scalar(coeff_text, field);
        any = true;
    }
    if (!any) throw parse_error("empty element text");
    return r;
}

// ------------------------------------------------------------------------
// Checkers
// ------------------------------------------------------------------------

namespace {

std::string ix(const HopfAlgebraSpec& A, int i) { return A.basis_labels[i]; }

bool t2_equal(const Tensor2& a, const Tensor2& b) { return a.c == b.c; }

Tensor2 flip(const Tensor2& t, const FieldPtr& f) {
    Tensor2 r(t.dim, f);
    for (int j = 0; j < t.dim; ++j)
        for (int k = 0; k < t.dim; ++k) r.at(k, j) = t.at(j, k);
    return r;
}

}  // namespace

AxiomReport check_hopf_axioms(const HopfAlgebraSpec& A) {
    AxiomReport rep;
    int d = A.dim;

    {  // associativity on basis triples
        bool ok = true;
        std::string wit;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j)
                for (int k = 0; k < d && ok; ++k) {
                    AlgebraElement lhs =
                        A.multiply(A.multiply(A.basis_elem(i), A.basis_elem(j)), A.basis_elem(k));
                    AlgebraElement rhs =
                        A.multiply(A.basis_elem(i), A.multiply(A.basis_elem(j), A.basis_elem(k)));
                    if (!(lhs == rhs)) {
                        ok = false;
                        wit = "(" + ix(A, i) + "," + ix(A, j) + "," + ix(A, k) + ")";
                    }
                }
        rep.add("associativity", ok, wit);
    }

    {  // unit law
        bool ok = true;
        std::string wit;
        AlgebraElement one = A.unit_elem();
        for (int i = 0; i < d && ok; ++i) {
            AlgebraElement b = A.basis_elem(i);
            if (!(A.multiply(one, b) == b) || !(A.multiply(b, one) == b)) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("unit law", ok, wit);
    }

    {  // coassociativity
        bool ok = true;
        std::string wit;
        for (int i = 0; i < d && ok; ++i) {
            Tensor3 lhs(d, A.field), rhs(d, A.field);
            for (const auto& e : A.cop_terms(i)) {
                for (const auto& f : A.cop_terms(e.j)) lhs.at(f.j, f.k, e.k) += e.v * f.v;
                for (const auto& f : A.cop_terms(e.k)) rhs.at(e.j, f.j, f.k) += e.v * f.v;
            }
            if (!(lhs == rhs)) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("coassociativity", ok, wit);
    }

    {  // counit law
        bool ok = true;
        std::string wit;
        for (int i = 0; i < d && ok; ++i) {
            AlgebraElement left = A.zero_elem(), right = A.zero_elem();
            for (const auto& e : A.cop_terms(i)) {
                left.c[e.k] += e.v * A.counit[e.j];
                right.c[e.j] += e.v * A.counit[e.k];
            }
            AlgebraElement b = A.basis_elem(i);
            if (!(left == b) || !(right == b)) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("counit law", ok, wit);
    }

    {  // Delta is an algebra map (including Delta(1) = 1 (x) 1)
        bool ok = true;
        std::string wit;
        Tensor2 du = A.coproduct_of(A.unit_elem());
        if (!t2_equal(du, A.t2_unit())) {
            ok = false;
            wit = "unit";
        }
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
                Tensor2 lhs = A.coproduct_of(A.multiply(A.basis_elem(i), A.basis_elem(j)));
                Tensor2 rhs =
                    A.t2_multiply(A.coproduct_of(A.basis_elem(i)), A.coproduct_of(A.basis_elem(j)));
                if (!t2_equal(lhs, rhs)) {
                    ok = false;
                    wit = "(" + ix(A, i) + "," + ix(A, j) + ")";
                }
            }
        rep.add("coproduct is an algebra map", ok, wit);
    }

    {  // epsilon is an algebra map
        bool ok = true;
        std::string wit;
        if (!A.counit_apply(A.unit_elem()).is_one()) {
            ok = false;
            wit = "unit";
        }
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
                Scalar lhs = A.counit_apply(A.multiply(A.basis_elem(i), A.basis_elem(j)));
                Scalar rhs = A.counit[i] * A.counit[j];
                if (lhs != rhs) {
                    ok = false;
                    wit = "(" + ix(A, i) + "," + ix(A, j) + ")";
                }
            }
        rep.add("counit is an algebra map", ok, wit);
    }

    {  // antipode law m(1 (x) s)Delta = eps 1 = m(s (x) 1)Delta
        bool ok = true;
        std::string wit;
        for (int i = 0; i < d && ok; ++i) {
            AlgebraElement left = A.zero_elem(), right = A.zero_elem();
            for (const auto& e : A.cop_terms(i)) {
                left = A.add(left, A.scale(e.v, A.multiply(A.basis_elem(e.j),
                                                           A.antipode_apply(A.basis_elem(e.k)))));
                right = A.add(right, A.scale(e.v, A.multiply(A.antipode_apply(A.basis_elem(e.j)),
                                                             A.basis_elem(e.k))));
            }
            AlgebraElement target = A.scale(A.counit[i], A.unit_elem());
            if (!(left == target) || !(right == target)) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("antipode law", ok, wit);
    }

    {  // derived: s(xy) = s(y)s(x)
        bool ok = true;
        std::string wit;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
                AlgebraElement lhs = A.antipode_apply(A.multiply(A.basis_elem(i), A.basis_elem(j)));
                AlgebraElement rhs = A.multiply(A.antipode_apply(A.basis_elem(j)),
                                                A.antipode_apply(A.basis_elem(i)));
                if (!(lhs == rhs)) {
                    ok = false;
                    wit = "(" + ix(A, i) + "," + ix(A, j) + ")";
                }
            }
        rep.add("antipode antihomomorphism", ok, wit);
    }

    return rep;
}

namespace {

Tensor3 embed13(const HopfAlgebraSpec& A, const Tensor2& t) {
    Tensor3 r(A.dim, A.field);
    for (int j = 0; j < A.dim; ++j)
        for (int k = 0; k < A.dim; ++k) {
            const Scalar& v = t.at(j, k);
            if (v.is_zero()) continue;
            for (int m = 0; m < A.dim; ++m)
                if (!A.unit[m].is_zero()) r.at(j, m, k) += v * A.unit[m];
        }
    return r;
}

Tensor3 embed12(const HopfAlgebraSpec& A, const Tensor2& t) {
    Tensor3 r(A.dim, A.field);
    for (int j = 0; j < A.dim; ++j)
        for (int k = 0; k < A.dim; ++k) {
            const Scalar& v = t.at(j, k);
            if (v.is_zero()) continue;
            for (int m = 0; m < A.dim; ++m)
                if (!A.unit[m].is_zero()) r.at(j, k, m) += v * A.unit[m];
        }
    return r;
}

Tensor3 embed23(const HopfAlgebraSpec& A, const Tensor2& t) {
    Tensor3 r(A.dim, A.field);
    for (int j = 0; j < A.dim; ++j)
        for (int k = 0; k < A.dim; ++k) {
            const Scalar& v = t.at(j, k);
            if (v.is_zero()) continue;
            for (int m = 0; m < A.dim; ++m)
                if (!A.unit[m].is_zero()) r.at(m, j, k) += v * A.unit[m];
        }
    return r;
}

}  // namespace

AxiomReport check_quasitriangular(const HopfAlgebraSpec& A) {
    if (!A.has_rho) throw data_error("algebra has no rho element");
    if (!A.antipode_invertible()) throw data_error("antipode is not invertible");
    AxiomReport rep;
    int d = A.dim;
    Tensor2 R = A.rho_tensor();

    {  // axiom 1: rho Delta(x) = Delta'(x) rho on the basis
        bool ok = true;
        std::string wit;
        for (int i = 0; i < d && ok; ++i) {
            Tensor2 cop = A.coproduct_of(A.basis_elem(i));
            Tensor2 lhs = A.t2_multiply(R, cop);
            Tensor2 rhs = A.t2_multiply(flip(cop, A.field), R);
            if (!t2_equal(lhs, rhs)) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("rho Delta = Delta' rho", ok, wit);
    }

    Tensor3 r13 = embed13(A, R), r12 = embed12(A, R), r23 = embed23(A, R);

    {  // axiom 2a: rho13 rho12 = (1 (x) Delta) rho
        Tensor3 lhs = A.t3_multiply(r13, r12);
        Tensor3 rhs(d, A.field);
        for (const auto& e : A.rho_terms())
            for (const auto& f : A.cop_terms(e.k)) rhs.at(e.j, f.j, f.k) += e.v * f.v;
        rep.add("rho13 rho12 = (1 (x) Delta) rho", lhs == rhs);
    }

    {  // axiom 2b: rho13 rho23 = (Delta (x) 1) rho
        Tensor3 lhs = A.t3_multiply(r13, r23);
        Tensor3 rhs(d, A.field);
        for (const auto& e : A.rho_terms())
            for (const auto& f : A.cop_terms(e.j)) rhs.at(f.j, f.k, e.k) += e.v * f.v;
        rep.add("rho13 rho23 = (Delta (x) 1) rho", lhs == rhs);
    }

    Tensor2 Rinv = A.rho_under_tensor();  // (s (x) 1) rho

    {  // (s (x) 1) rho is a two-sided inverse of rho
        Tensor2 one2 = A.t2_unit();
        bool ok = t2_equal(A.t2_multiply(Rinv, R), one2) && t2_equal(A.t2_multiply(R, Rinv), one2);
        rep.add("(s (x) 1) rho is rho^-1", ok);
    }

    {  // (1 (x) s^-1) rho = (s (x) 1) rho
        Tensor2 alt(d, A.field);
        for (const auto& e : A.rho_terms()) {
            AlgebraElement si = A.antipode_inv_apply(A.basis_elem(e.k));
            for (int k2 = 0; k2 < d; ++k2)
                if (!si.c[k2].is_zero()) alt.at(e.j, k2) += e.v * si.c[k2];
        }
        rep.add("(1 (x) s^-1) rho = (s (x) 1) rho", t2_equal(alt, Rinv));
    }

    {  // Yang-Baxter
        Tensor3 lhs = A.t3_multiply(A.t3_multiply(r12, r13), r23);
        Tensor3 rhs = A.t3_multiply(A.t3_multiply(r23, r13), r12);
        rep.add("Yang-Baxter equation", lhs == rhs);
    }

    {  // (s (x) s) rho = rho
        Tensor2 ss(d, A.field);
        for (const auto& e : A.rho_terms()) {
            AlgebraElement sj = A.antipode_apply(A.basis_elem(e.j));
            AlgebraElement sk = A.antipode_apply(A.basis_elem(e.k));
            for (int j2 = 0; j2 < d; ++j2) {
                if (sj.c[j2].is_zero()) continue;
                for (int k2 = 0; k2 < d; ++k2)
                    if (!sk.c[k2].is_zero()) ss.at(j2, k2) += e.v * sj.c[j2] * sk.c[k2];
            }
        }
        rep.add("(s (x) s) rho = rho", t2_equal(ss, R));
    }

    return rep;
}

DrinfeldData compute_drinfeld(const HopfAlgebraSpec& A) {
    if (!A.has_rho) throw data_error("algebra has no rho element");
    AlgebraElement u = A.zero_elem();
    for (const auto& e : A.rho_terms())
        u = A.add(u, A.scale(e.v, A.multiply(A.antipode_apply(A.basis_elem(e.k)),
                                             A.basis_elem(e.j))));

    // invert u by solving (left multiplication by u) y = 1
    Matrix L(A.dim, A.dim, A.field);
    for (int j = 0; j < A.dim; ++j) {
        AlgebraElement col = A.multiply(u, A.basis_elem(j));
        for (int k = 0; k < A.dim; ++k) L.at(k, j) = col.c[k];
    }
    auto y = solve(L, A.unit);
    if (!y) throw data_error("Drinfeld element u is not invertible");
    AlgebraElement uinv{*y};
    if (!(A.multiply(u, uinv) == A.unit_elem()) || !(A.multiply(uinv, u) == A.unit_elem()))
        throw data_error("Drinfeld element inverse is not two-sided");

    for (int i = 0; i < A.dim; ++i) {
        AlgebraElement lhs = A.antipode_apply(A.antipode_apply(A.basis_elem(i)));
        AlgebraElement rhs = A.multiply(A.multiply(u, A.basis_elem(i)), uinv);
        if (!(lhs == rhs))
            throw data_error("s^2(x) = u x u^-1 fails at basis element " + A.basis_labels[i]);
    }
    return {u, uinv};
}

AxiomReport check_ribbon(const HopfAlgebraSpec& A) {
    if (!A.has_grouplike) throw data_error("algebra has no grouplike G");
    AxiomReport rep;
    AlgebraElement G{A.grouplike_G};

    {  // Delta(G) = G (x) G
        Tensor2 lhs = A.coproduct_of(G);
        Tensor2 rhs(A.dim, A.field);
        for (int j = 0; j < A.dim; ++j) {
            if (G.c[j].is_zero()) continue;
            for (int k = 0; k < A.dim; ++k)
                if (!G.c[k].is_zero()) rhs.at(j, k) += G.c[j] * G.c[k];
        }
        rep.add("Delta(G) = G (x) G", t2_equal(lhs, rhs));
    }
    rep.add("eps(G) = 1", A.counit_apply(G).is_one());

    // G^-1 by exact solve
    Matrix L(A.dim, A.dim, A.field);
    for (int j = 0; j < A.dim; ++j) {
        AlgebraElement col = A.multiply(G, A.basis_elem(j));
        for (int k = 0; k < A.dim; ++k) L.at(k, j) = col.c[k];
    }
    auto yi = solve(L, A.unit);
    if (!yi) {
        rep.add("G invertible", false);
        return rep;
    }
    AlgebraElement Ginv{*yi};
    rep.add("G invertible", true);
    rep.add("s(G) = G^-1", A.antipode_apply(G) == Ginv);

    DrinfeldData dr = compute_drinfeld(A);
    AlgebraElement v = A.multiply(Ginv, dr.u);

    {  // v = G^-1 u central
        bool ok = true;
        std::string wit;
        for (int i = 0; i < A.dim && ok; ++i) {
            if (!(A.multiply(v, A.basis_elem(i)) == A.multiply(A.basis_elem(i), v))) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("v = G^-1 u is central", ok, wit);
    }

    rep.add("s(u) = G^-1 u G^-1",
            A.antipode_apply(dr.u) == A.multiply(A.multiply(Ginv, dr.u), Ginv));

    {  // derived: s^2(x) = G x G^-1
        bool ok = true;
        std::string wit;
        for (int i = 0; i < A.dim && ok; ++i) {
            AlgebraElement lhs = A.antipode_apply(A.antipode_apply(A.basis_elem(i)));
            AlgebraElement rhs = A.multiply(A.multiply(G, A.basis_elem(i)), Ginv);
            if (!(lhs == rhs)) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("s^2(x) = G x G^-1", ok, wit);
    }

    rep.add("s(v) = v", A.antipode_apply(v) == v);
    return rep;
}

IntegralResult right_integral(const HopfAlgebraSpec& A) {
    int d = A.dim;
    // Unknowns lambda_j; equations indexed by (basis i, output coordinate t):
    //   sum_j lambda_j Delta[i][j][t] - lambda_i unit[t] = 0.
    Matrix M(d * d, d, A.field);
    for (int i = 0; i < d; ++i)
        for (const auto& e : A.cop_terms(i)) M.at(i * d + e.k, e.j) += e.v;
    for (int i = 0; i < d; ++i)
        for (int t = 0; t < d; ++t) M.at(i * d + t, i) -= A.unit[t];

    auto basis = nullspace(std::move(M));
    if (basis.empty()) throw data_error("no right integral exists (solution space is zero)");
    if (basis.size() > 1)
        throw data_error("right integral is not unique (solution space dimension " +
                         std::to_string(basis.size()) + ")");

    std::vector<Scalar> lam = basis[0];
    for (int j = 0; j < d; ++j) {
        if (!lam[j].is_zero()) {
            Scalar inv = lam[j].inverse();
            for (auto& s : lam) s *= inv;
            break;
        }
    }

    IntegralResult res;
    res.lambda = {lam};

    {  // property 1: lambda(xy) = lambda(s^2(y) x)
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            for (int j = 0; j < d && ok; ++j) {
                Scalar lhs = A.apply(res.lambda, A.multiply(A.basis_elem(i), A.basis_elem(j)));
                Scalar rhs = A.apply(
                    res.lambda,
                    A.multiply(A.antipode_apply(A.antipode_apply(A.basis_elem(j))),
                               A.basis_elem(i)));
                if (lhs != rhs) {
                    ok = false;
                    res.witness = "property 1 at (" + ix(A, i) + "," + ix(A, j) + ")";
                }
            }
        res.property1 = ok;
    }

    if (A.has_grouplike) {
        res.property2_applicable = true;
        AlgebraElement G{A.grouplike_G};
        AlgebraElement g = A.multiply(G, G);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            Scalar lhs = A.apply(res.lambda, A.multiply(g, A.basis_elem(i)));
            Scalar rhs = A.apply(res.lambda, A.antipode_apply(A.basis_elem(i)));
            if (lhs != rhs) {
                ok = false;
                if (res.witness.empty()) res.witness = "property 2 at " + ix(A, i);
            }
        }
        res.property2 = ok;
    }
    return res;
}

LinearFunctional make_trace(const HopfAlgebraSpec& A, const LinearFunctional& lambda) {
    if (!A.has_grouplike) throw data_error("trace needs the grouplike G");
    AlgebraElement G{A.grouplike_G};
    LinearFunctional tr;
    tr.c.assign(A.dim, Scalar::zero(A.field));
    for (int t = 0; t < A.dim; ++t) tr.c[t] = A.apply(lambda, A.multiply(G, A.basis_elem(t)));
    return tr;
}

AxiomReport check_trace_theorem(const HopfAlgebraSpec& A, const LinearFunctional& tr) {
    AxiomReport rep;
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < A.dim && ok; ++i)
            for (int j = 0; j < A.dim && ok; ++j) {
                Scalar lhs = A.apply(tr, A.multiply(A.basis_elem(i), A.basis_elem(j)));
                Scalar rhs = A.apply(tr, A.multiply(A.basis_elem(j), A.basis_elem(i)));
                if (lhs != rhs) {
                    ok = false;
                    wit = "(" + ix(A, i) + "," + ix(A, j) + ")";
                }
            }
        rep.add("tr(xy) = tr(yx)", ok, wit);
    }
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < A.dim && ok; ++i) {
            Scalar lhs = A.apply(tr, A.antipode_apply(A.basis_elem(i)));
            Scalar rhs = A.apply(tr, A.basis_elem(i));
            if (lhs != rhs) {
                ok = false;
                wit = ix(A, i);
            }
        }
        rep.add("tr(s(x)) = tr(x)", ok, wit);
    }
    return rep;
}

LinearFunctional trace_functional(const HopfAlgebraSpec& A, const LinearFunctional& lambda) {
    LinearFunctional tr = make_trace(A, lambda);
    AxiomReport rep = check_trace_theorem(A, tr);
    if (!rep.all_pass()) {
        const CheckItem* f = rep.first_failure();
        throw data_error("trace theorem fails (" + f->axiom + " at " + f->witness +
                         "); lambda properties do not hold for this algebra");
    }
    return tr;
}

}  // namespace hennings
