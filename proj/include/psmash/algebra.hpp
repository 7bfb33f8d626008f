// Based finite-dimensional algebras, coalgebras, bialgebras and Hopf
// algebras by structure constants, with exhaustive axiom checkers, duals,
// tensor products, convolution and endomorphism algebras.
//
// Conventions (fixed across the project):
//   mult(i,j,k)  : e_i e_j = sum_k mult(i,j,k) e_k
//   comult(i,j,k): Delta(e_i) = sum_{j,k} comult(i,j,k) e_j (x) e_k
//   antipode     : column c holds the coordinates of S(e_c)
//   tensor bases : lexicographic, left factor major
//   Sweedler legs: expanded left-nested, Delta^(n) = (Delta (x) id...) Delta^(n-1)
#pragma once

#include <string>
#include <vector>

#include "psmash/linalg.hpp"
#include "psmash/report.hpp"

namespace psmash {

template <Field K>
struct AlgebraData {
    size_t dim = 0;
    Tensor3<K> mult;              // (dim, dim, dim)
    Vec<K> unit;                  // coordinates of 1
    std::vector<std::string> basis_names;

    void validate() const {
        if (mult.d1() != dim || mult.d2() != dim || mult.d3() != dim)
            throw error("AlgebraData: mult tensor shape mismatch");
        if (unit.size() != dim) throw error("AlgebraData: unit length mismatch");
        if (!basis_names.empty() && basis_names.size() != dim)
            throw error("AlgebraData: basis_names length mismatch");
    }

    std::string name_of(size_t i) const {
        return basis_names.empty() ? "e" + std::to_string(i) : basis_names[i];
    }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> r(dim, K::zero());
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                K c = x[i] * y[j];
                for (size_t k = 0; k < dim; ++k) {
                    const K& m = mult(i, j, k);
                    if (!m.is_zero()) r[k] += c * m;
                }
            }
        }
        return r;
    }
};

template <Field K>
struct CoalgebraData {
    size_t dim = 0;
    Tensor3<K> comult;            // (dim, dim, dim)
    Vec<K> counit;

    void validate() const {
        if (comult.d1() != dim || comult.d2() != dim || comult.d3() != dim)
            throw error("CoalgebraData: comult tensor shape mismatch");
        if (counit.size() != dim) throw error("CoalgebraData: counit length mismatch");
    }

    K counit_of(const Vec<K>& v) const {
        K s = K::zero();
        for (size_t i = 0; i < dim; ++i)
            if (!v[i].is_zero()) s += v[i] * counit[i];
        return s;
    }
};

// One Sweedler term: basis indices of each tensor leg plus a coefficient.
template <Field K>
struct SweedlerTerm {
    std::vector<size_t> legs;
    K coeff;
};

// Left-nested n-fold coproduct of the basis element e_i, as a sparse list of
// terms in lexicographic order of leg indices.
template <Field K>
std::vector<SweedlerTerm<K>> sweedler(const CoalgebraData<K>& c, size_t i, size_t nlegs) {
    std::vector<SweedlerTerm<K>> terms{{{i}, K::one()}};
    for (size_t step = 1; step < nlegs; ++step) {
        std::vector<SweedlerTerm<K>> next;
        for (const auto& t : terms) {
            size_t head = t.legs[0];
            for (size_t a = 0; a < c.dim; ++a)
                for (size_t b = 0; b < c.dim; ++b) {
                    const K& d = c.comult(head, a, b);
                    if (d.is_zero()) continue;
                    SweedlerTerm<K> nt;
                    nt.legs.reserve(t.legs.size() + 1);
                    nt.legs.push_back(a);
                    nt.legs.push_back(b);
                    nt.legs.insert(nt.legs.end(), t.legs.begin() + 1, t.legs.end());
                    nt.coeff = t.coeff * d;
                    next.push_back(std::move(nt));
                }
        }
        terms = std::move(next);
    }
    return terms;
}

template <Field K>
struct HopfData {
    AlgebraData<K> alg;
    CoalgebraData<K> coalg;
    Matrix<K> antipode;           // column c = coordinates of S(e_c)

    size_t dim() const { return alg.dim; }
    void validate() const {
        alg.validate();
        coalg.validate();
        if (coalg.dim != alg.dim) throw error("HopfData: algebra/coalgebra dimension mismatch");
        if (antipode.rows() != alg.dim || antipode.cols() != alg.dim)
            throw error("HopfData: antipode shape mismatch");
    }
    Vec<K> s(const Vec<K>& v) const { return antipode.apply(v); }
    std::string name_of(size_t i) const { return alg.name_of(i); }
};

template <Field K>
struct LinMap {
    size_t src_dim = 0;
    size_t dst_dim = 0;
    Matrix<K> mat;                // (dst_dim, src_dim)

    LinMap() = default;
    LinMap(size_t src, size_t dst) : src_dim(src), dst_dim(dst), mat(dst, src) {}
    explicit LinMap(Matrix<K> m) : src_dim(m.cols()), dst_dim(m.rows()), mat(std::move(m)) {}

    Vec<K> apply(const Vec<K>& v) const { return mat.apply(v); }
    void set_image(size_t i, const Vec<K>& w) { mat.set_col(i, w); }
    bool bijective() const { return src_dim == dst_dim && rank(mat) == src_dim; }
};

namespace detail {

template <Field K>
bool record(VerificationReport& rep, const std::string& name, const std::string& statement,
            bool okflag, std::vector<size_t> idx, const std::string& lhs,
            const std::string& rhs) {
    if (okflag)
        rep.add_pass(name, statement);
    else
        rep.add_fail(name, statement, Counterexample{std::move(idx), lhs, rhs});
    return okflag;
}

// Runs an exhaustive elementwise comparison over all index tuples of the
// given shape; the first mismatch (lexicographic) is recorded.
template <Field K, class F>
void exhaustive(VerificationReport& rep, const std::string& name,
                const std::string& statement, const std::vector<size_t>& shape, F&& fn) {
    std::vector<size_t> idx(shape.size(), 0);
    auto bump = [&]() {
        for (size_t d = shape.size(); d-- > 0;) {
            if (++idx[d] < shape[d]) return true;
            idx[d] = 0;
        }
        return false;
    };
    if (shape.empty()) {
        auto [l, r] = fn(idx);
        record<K>(rep, name, statement, l == r, idx, vec_str(l), vec_str(r));
        return;
    }
    for (size_t d = 0; d < shape.size(); ++d)
        if (shape[d] == 0) { rep.add_pass(name, statement); return; }
    do {
        auto [l, r] = fn(idx);
        if (!(l == r)) {
            rep.add_fail(name, statement, Counterexample{idx, vec_str(l), vec_str(r)});
            return;
        }
    } while (bump());
    rep.add_pass(name, statement);
}

} // namespace detail

template <Field K>
VerificationReport check_algebra(const AlgebraData<K>& a, const std::string& subject = "algebra") {
    a.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t n = a.dim;
    detail::exhaustive<K>(rep, "associativity", "algebra axiom", {n, n, n}, [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = a.mul(a.mul(unit_vec<K>(n, ix[0]), unit_vec<K>(n, ix[1])), unit_vec<K>(n, ix[2]));
        Vec<K> rhs = a.mul(unit_vec<K>(n, ix[0]), a.mul(unit_vec<K>(n, ix[1]), unit_vec<K>(n, ix[2])));
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "left unit", "algebra axiom", {n}, [&](const std::vector<size_t>& ix) {
        return std::pair(a.mul(a.unit, unit_vec<K>(n, ix[0])), unit_vec<K>(n, ix[0]));
    });
    detail::exhaustive<K>(rep, "right unit", "algebra axiom", {n}, [&](const std::vector<size_t>& ix) {
        return std::pair(a.mul(unit_vec<K>(n, ix[0]), a.unit), unit_vec<K>(n, ix[0]));
    });
    return rep;
}

template <Field K>
VerificationReport check_coalgebra(const CoalgebraData<K>& c,
                                   const std::string& subject = "coalgebra") {
    c.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t n = c.dim;
    detail::exhaustive<K>(rep, "coassociativity", "coalgebra axiom", {n}, [&](const std::vector<size_t>& ix) {
        size_t i = ix[0];
        Vec<K> lhs(n * n * n, K::zero()), rhs(n * n * n, K::zero());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& d = c.comult(i, a, b);
                if (d.is_zero()) continue;
                for (size_t p = 0; p < n; ++p)
                    for (size_t q = 0; q < n; ++q) {
                        const K& e1 = c.comult(a, p, q);
                        if (!e1.is_zero()) lhs[(p * n + q) * n + b] += d * e1;
                        const K& e2 = c.comult(b, p, q);
                        if (!e2.is_zero()) rhs[(a * n + p) * n + q] += d * e2;
                    }
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "left counit", "coalgebra axiom", {n}, [&](const std::vector<size_t>& ix) {
        size_t i = ix[0];
        Vec<K> lhs(n, K::zero());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& d = c.comult(i, a, b);
                if (!d.is_zero()) lhs[b] += d * c.counit[a];
            }
        return std::pair(lhs, unit_vec<K>(n, i));
    });
    detail::exhaustive<K>(rep, "right counit", "coalgebra axiom", {n}, [&](const std::vector<size_t>& ix) {
        size_t i = ix[0];
        Vec<K> lhs(n, K::zero());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& d = c.comult(i, a, b);
                if (!d.is_zero()) lhs[a] += d * c.counit[b];
            }
        return std::pair(lhs, unit_vec<K>(n, i));
    });
    return rep;
}

enum class StructureLevel { algebra, coalgebra, bialgebra, hopf };

template <Field K>
VerificationReport check_structure(const HopfData<K>& h, StructureLevel level,
                                   const std::string& subject = "structure") {
    h.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t n = h.dim();
    if (level == StructureLevel::algebra || level == StructureLevel::bialgebra ||
        level == StructureLevel::hopf)
        rep.merge(check_algebra(h.alg, subject));
    if (level == StructureLevel::coalgebra || level == StructureLevel::bialgebra ||
        level == StructureLevel::hopf)
        rep.merge(check_coalgebra(h.coalg, subject));
    if (level == StructureLevel::algebra || level == StructureLevel::coalgebra) return rep;

    // Bialgebra: Delta and counit are algebra morphisms.
    detail::exhaustive<K>(rep, "comultiplication multiplicative", "bialgebra axiom", {n, n},
                          [&](const std::vector<size_t>& ix) {
        size_t i = ix[0], j = ix[1];
        Vec<K> lhs(n * n, K::zero()), rhs(n * n, K::zero());
        for (size_t k = 0; k < n; ++k) {
            const K& m = h.alg.mult(i, j, k);
            if (m.is_zero()) continue;
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q) {
                    const K& d = h.coalg.comult(k, p, q);
                    if (!d.is_zero()) lhs[p * n + q] += m * d;
                }
        }
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& di = h.coalg.comult(i, a, b);
                if (di.is_zero()) continue;
                for (size_t c2 = 0; c2 < n; ++c2)
                    for (size_t d2 = 0; d2 < n; ++d2) {
                        const K& dj = h.coalg.comult(j, c2, d2);
                        if (dj.is_zero()) continue;
                        K f = di * dj;
                        for (size_t p = 0; p < n; ++p) {
                            const K& m1 = h.alg.mult(a, c2, p);
                            if (m1.is_zero()) continue;
                            for (size_t q = 0; q < n; ++q) {
                                const K& m2 = h.alg.mult(b, d2, q);
                                if (!m2.is_zero()) rhs[p * n + q] += f * m1 * m2;
                            }
                        }
                    }
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "comultiplication unital", "bialgebra axiom", {},
                          [&](const std::vector<size_t>&) {
        Vec<K> lhs(n * n, K::zero()), rhs(n * n, K::zero());
        for (size_t i = 0; i < n; ++i) {
            if (h.alg.unit[i].is_zero()) continue;
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q) {
                    const K& d = h.coalg.comult(i, p, q);
                    if (!d.is_zero()) lhs[p * n + q] += h.alg.unit[i] * d;
                }
        }
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) rhs[p * n + q] = h.alg.unit[p] * h.alg.unit[q];
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "counit multiplicative", "bialgebra axiom", {n, n},
                          [&](const std::vector<size_t>& ix) {
        size_t i = ix[0], j = ix[1];
        K lhs = K::zero();
        for (size_t k = 0; k < n; ++k) {
            const K& m = h.alg.mult(i, j, k);
            if (!m.is_zero()) lhs += m * h.coalg.counit[k];
        }
        return std::pair(Vec<K>{lhs}, Vec<K>{h.coalg.counit[i] * h.coalg.counit[j]});
    });
    detail::exhaustive<K>(rep, "counit unital", "bialgebra axiom", {},
                          [&](const std::vector<size_t>&) {
        return std::pair(Vec<K>{h.coalg.counit_of(h.alg.unit)}, Vec<K>{K::one()});
    });
    if (level == StructureLevel::bialgebra) return rep;

    // Hopf: antipode axiom on every basis element.
    detail::exhaustive<K>(rep, "left antipode identity", "Hopf axiom", {n},
                          [&](const std::vector<size_t>& ix) {
        size_t i = ix[0];
        Vec<K> lhs(n, K::zero());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& d = h.coalg.comult(i, a, b);
                if (d.is_zero()) continue;
                Vec<K> t = h.alg.mul(h.antipode.col(a), unit_vec<K>(n, b));
                vec_add_scaled(lhs, d, t);
            }
        return std::pair(lhs, vec_scale(h.coalg.counit[i], h.alg.unit));
    });
    detail::exhaustive<K>(rep, "right antipode identity", "Hopf axiom", {n},
                          [&](const std::vector<size_t>& ix) {
        size_t i = ix[0];
        Vec<K> lhs(n, K::zero());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& d = h.coalg.comult(i, a, b);
                if (d.is_zero()) continue;
                Vec<K> t = h.alg.mul(unit_vec<K>(n, a), h.antipode.col(b));
                vec_add_scaled(lhs, d, t);
            }
        return std::pair(lhs, vec_scale(h.coalg.counit[i], h.alg.unit));
    });
    return rep;
}

// Dual Hopf algebra on the dual basis {p_i}: multiplication of H* is the
// transpose of Delta (convolution), comultiplication the transpose of mult,
// unit is the counit, counit is evaluation at 1, antipode is S^T.
template <Field K>
HopfData<K> dual_hopf(const HopfData<K>& h) {
    size_t n = h.dim();
    HopfData<K> d;
    d.alg.dim = d.coalg.dim = n;
    d.alg.mult = Tensor3<K>(n, n, n);
    d.coalg.comult = Tensor3<K>(n, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                d.alg.mult(i, j, k) = h.coalg.comult(k, i, j);
                d.coalg.comult(i, j, k) = h.alg.mult(j, k, i);
            }
    d.alg.unit = h.coalg.counit;
    d.coalg.counit = h.alg.unit;
    d.antipode = h.antipode.transpose();
    d.alg.basis_names.reserve(n);
    for (size_t i = 0; i < n; ++i) d.alg.basis_names.push_back(h.name_of(i) + "*");
    return d;
}

// Opposite-coopposite Hopf algebra (reversed product and reversed coproduct);
// the antipode is unchanged.
template <Field K>
HopfData<K> op_cop_hopf(const HopfData<K>& h) {
    size_t n = h.dim();
    HopfData<K> r = h;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) {
                r.alg.mult(i, j, k) = h.alg.mult(j, i, k);
                r.coalg.comult(i, j, k) = h.coalg.comult(i, k, j);
            }
    return r;
}

// Transport of structure along a change of basis; row i of new_basis holds
// the coordinates of the new basis vector b_i in the old basis.
template <Field K>
HopfData<K> rebase_hopf(const HopfData<K>& h, const Matrix<K>& new_basis,
                        std::vector<std::string> names) {
    size_t n = h.dim();
    if (new_basis.rows() != n || new_basis.cols() != n)
        throw error("rebase_hopf: basis matrix must be square of the algebra dimension");
    Matrix<K> to_old = new_basis.transpose(); // column i = b_i in old coordinates
    auto inv = invert(to_old);
    if (!inv) throw error("rebase_hopf: proposed basis is singular");
    const Matrix<K>& from_old = *inv;

    HopfData<K> r;
    r.alg.dim = r.coalg.dim = n;
    r.alg.mult = Tensor3<K>(n, n, n);
    r.coalg.comult = Tensor3<K>(n, n, n);
    r.alg.basis_names = std::move(names);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Vec<K> prod = from_old.apply(h.alg.mul(to_old.col(i), to_old.col(j)));
            r.alg.mult.set_slice(i, j, prod);
        }
    r.alg.unit = from_old.apply(h.alg.unit);
    r.coalg.counit = Vec<K>(n, K::zero());
    for (size_t i = 0; i < n; ++i) {
        Vec<K> bi = to_old.col(i);
        r.coalg.counit[i] = h.coalg.counit_of(bi);
        for (size_t a = 0; a < n; ++a) {
            if (bi[a].is_zero()) continue;
            for (size_t p = 0; p < n; ++p)
                for (size_t q = 0; q < n; ++q) {
                    const K& d = h.coalg.comult(a, p, q);
                    if (d.is_zero()) continue;
                    // transport both tensor legs to the new basis
                    for (size_t jj = 0; jj < n; ++jj) {
                        const K& f1 = from_old(jj, p);
                        if (f1.is_zero()) continue;
                        for (size_t kk = 0; kk < n; ++kk) {
                            const K& f2 = from_old(kk, q);
                            if (!f2.is_zero())
                                r.coalg.comult(i, jj, kk) += bi[a] * d * f1 * f2;
                        }
                    }
                }
        }
    }
    r.antipode = from_old * h.antipode * to_old;
    return r;
}

// Convolution product (f*g)(x) = f(x_(1)) g(x_(2)) of two linear maps C -> A.
template <Field K>
LinMap<K> convolution(const LinMap<K>& f, const LinMap<K>& g, const CoalgebraData<K>& c,
                      const AlgebraData<K>& a) {
    if (f.src_dim != c.dim || g.src_dim != c.dim || f.dst_dim != a.dim || g.dst_dim != a.dim)
        throw error("convolution: shape mismatch");
    LinMap<K> r(c.dim, a.dim);
    for (size_t i = 0; i < c.dim; ++i) {
        Vec<K> col(a.dim, K::zero());
        for (size_t j = 0; j < c.dim; ++j)
            for (size_t k = 0; k < c.dim; ++k) {
                const K& d = c.comult(i, j, k);
                if (d.is_zero()) continue;
                vec_add_scaled(col, d, a.mul(f.mat.col(j), g.mat.col(k)));
            }
        r.set_image(i, col);
    }
    return r;
}

// Convolution identity u (compose) eps as a linear map C -> A.
template <Field K>
LinMap<K> convolution_unit(const CoalgebraData<K>& c, const AlgebraData<K>& a) {
    LinMap<K> r(c.dim, a.dim);
    for (size_t i = 0; i < c.dim; ++i) r.set_image(i, vec_scale(c.counit[i], a.unit));
    return r;
}

// S^-1 as a matrix, verified two-sided; a singular antipode is an error that
// rules out the constructions needing it.
template <Field K>
Matrix<K> antipode_inverse(const HopfData<K>& h) {
    auto inv = invert(h.antipode);
    if (!inv) throw error("antipode is singular; S^-1 does not exist");
    return *inv;
}

// Componentwise tensor product algebra on the lexicographic basis e_i (x) f_j.
template <Field K>
AlgebraData<K> tensor_algebra(const AlgebraData<K>& a, const AlgebraData<K>& b) {
    size_t na = a.dim, nb = b.dim, n = na * nb;
    AlgebraData<K> t;
    t.dim = n;
    t.mult = Tensor3<K>(n, n, n);
    for (size_t i1 = 0; i1 < na; ++i1)
        for (size_t j1 = 0; j1 < na; ++j1) {
            Vec<K> va = a.mult.slice(i1, j1);
            for (size_t i2 = 0; i2 < nb; ++i2)
                for (size_t j2 = 0; j2 < nb; ++j2) {
                    Vec<K> vb = b.mult.slice(i2, j2);
                    for (size_t k1 = 0; k1 < na; ++k1) {
                        if (va[k1].is_zero()) continue;
                        for (size_t k2 = 0; k2 < nb; ++k2)
                            if (!vb[k2].is_zero())
                                t.mult(i1 * nb + i2, j1 * nb + j2, k1 * nb + k2) = va[k1] * vb[k2];
                    }
                }
        }
    t.unit = Vec<K>(n, K::zero());
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) t.unit[i * nb + j] = a.unit[i] * b.unit[j];
    t.basis_names.reserve(n);
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j)
            t.basis_names.push_back(a.name_of(i) + "(x)" + b.name_of(j));
    return t;
}

// End(V) on the matrix-unit basis E_{ij} (flat index i*n + j).
template <Field K>
AlgebraData<K> end_algebra(size_t n) {
    if (n < 1) throw error("end_algebra: dimension must be positive");
    AlgebraData<K> a;
    a.dim = n * n;
    a.mult = Tensor3<K>(n * n, n * n, n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                for (size_t l = 0; l < n; ++l)
                    if (j == k) a.mult(i * n + j, k * n + l, i * n + l) = K::one();
    a.unit = Vec<K>(n * n, K::zero());
    for (size_t i = 0; i < n; ++i) a.unit[i * n + i] = K::one();
    a.basis_names.reserve(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            a.basis_names.push_back("E" + std::to_string(i) + std::to_string(j));
    return a;
}

// Endomorphism matrix (n x n) <-> coordinate vector in end_algebra(n).
template <Field K>
Vec<K> end_coords(const Matrix<K>& m) {
    Vec<K> v(m.rows() * m.cols(), K::zero());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

template <Field K>
Matrix<K> end_matrix(const Vec<K>& v, size_t n) {
    Matrix<K> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

// Solves the antipode axiom for S as a linear system over the bialgebra
// constants. Returns the unique solution; no solution or an underdetermined
// system is an error (a bialgebra has at most one antipode).
template <Field K>
Matrix<K> solve_antipode(const AlgebraData<K>& alg, const CoalgebraData<K>& coalg) {
    size_t n = alg.dim;
    size_t nv = n * n;                 // unknowns S(r, c), flat r*n + c
    size_t ne = 2 * n * n;             // two vector equations per basis element
    Matrix<K> sys(ne, nv + 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            size_t eq_l = i * n + k, eq_r = n * n + i * n + k;
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    const K& d = coalg.comult(i, a, b);
                    if (d.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c) {
                        const K& ml = alg.mult(c, b, k);
                        if (!ml.is_zero()) sys(eq_l, c * n + a) += d * ml;
                        const K& mr = alg.mult(a, c, k);
                        if (!mr.is_zero()) sys(eq_r, c * n + b) += d * mr;
                    }
                }
            sys(eq_l, nv) = coalg.counit[i] * alg.unit[k];
            sys(eq_r, nv) = coalg.counit[i] * alg.unit[k];
        }
    auto [red, pivots] = rref(std::move(sys));
    for (size_t p : pivots)
        if (p == nv) throw error("solve_antipode: antipode axiom has no solution");
    if (pivots.size() != nv)
        throw error("solve_antipode: antipode axiom is underdetermined");
    Matrix<K> s(n, n);
    for (size_t i = 0; i < pivots.size(); ++i) {
        size_t var = pivots[i];
        s(var / n, var % n) = red(i, nv);
    }
    return s;
}

// Algebra morphism test for a linear map f : A -> B (multiplicativity and,
// optionally, unitality).
template <Field K>
VerificationReport check_algebra_morphism(const LinMap<K>& f, const AlgebraData<K>& a,
                                          const AlgebraData<K>& b, bool require_unital,
                                          const std::string& subject) {
    VerificationReport rep;
    rep.subject = subject;
    size_t n = a.dim;
    detail::exhaustive<K>(rep, "multiplicative", "algebra morphism", {n, n},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = f.apply(a.mult.slice(ix[0], ix[1]));
        Vec<K> rhs = b.mul(f.mat.col(ix[0]), f.mat.col(ix[1]));
        return std::pair(lhs, rhs);
    });
    if (require_unital)
        detail::exhaustive<K>(rep, "unital", "algebra morphism", {},
                              [&](const std::vector<size_t>&) {
            return std::pair(f.apply(a.unit), b.unit);
        });
    return rep;
}

// Coalgebra morphism test: (f (x) f) Delta_C = Delta_D f and eps_D f = eps_C.
template <Field K>
VerificationReport check_coalgebra_morphism(const LinMap<K>& f, const CoalgebraData<K>& c,
                                            const CoalgebraData<K>& d,
                                            const std::string& subject) {
    VerificationReport rep;
    rep.subject = subject;
    size_t n = c.dim, m = d.dim;
    detail::exhaustive<K>(rep, "comultiplicative", "coalgebra morphism", {n},
                          [&](const std::vector<size_t>& ix) {
        size_t i = ix[0];
        Vec<K> lhs(m * m, K::zero()), rhs(m * m, K::zero());
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) {
                const K& dd = c.comult(i, a, b);
                if (dd.is_zero()) continue;
                Vec<K> fa = f.mat.col(a), fb = f.mat.col(b);
                for (size_t p = 0; p < m; ++p) {
                    if (fa[p].is_zero()) continue;
                    for (size_t q = 0; q < m; ++q)
                        if (!fb[q].is_zero()) lhs[p * m + q] += dd * fa[p] * fb[q];
                }
            }
        Vec<K> fi = f.mat.col(i);
        for (size_t k = 0; k < m; ++k) {
            if (fi[k].is_zero()) continue;
            for (size_t p = 0; p < m; ++p)
                for (size_t q = 0; q < m; ++q) {
                    const K& dd = d.comult(k, p, q);
                    if (!dd.is_zero()) rhs[p * m + q] += fi[k] * dd;
                }
        }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "counit preserved", "coalgebra morphism", {n},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(Vec<K>{d.counit_of(f.mat.col(ix[0]))}, Vec<K>{c.counit[ix[0]]});
    });
    return rep;
}

} // namespace psmash
