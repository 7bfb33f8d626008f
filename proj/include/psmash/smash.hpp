// The ambient product on A (x) H, the partial twisted smash product
// <A (*) H> = (A (x) H)(1_A (x) 1_H) as a based subalgebra, and the global
// twisted smash product B (*) H.
//
// Ambient coordinates are a-major: flat index of a_i (x) e_h is i*dimH + h.
#pragma once

#include "psmash/partial_action.hpp"

namespace psmash {

// Multiplication (a(x)h)(b(x)g) = a (h_(1) -> b <- S(h_(3))) (x) h_(2) g,
// precomputed as a dense product table over the ambient basis.
template <Field K>
class AmbientProduct {
public:
    explicit AmbientProduct(PartialBimoduleData<K> bimodule) : bim_(std::move(bimodule)) {
        bim_.validate();
        na_ = bim_.A.dim;
        nh_ = bim_.H.dim();
        size_t n = dim();
        table_ = Tensor3<K>(n, n, n);
        for (size_t p = 0; p < nh_; ++p) {
            auto legs = sweedler(bim_.H.coalg, p, 3);
            for (size_t i = 0; i < na_; ++i)
                for (size_t j = 0; j < na_; ++j)
                    for (size_t q = 0; q < nh_; ++q) {
                        Vec<K> acc(n, K::zero());
                        for (const auto& t : legs) {
                            size_t r = t.legs[0], s = t.legs[1], u = t.legs[2];
                            Vec<K> mid = bim_.act_left(r, bim_.act_right_s(unit_vec<K>(na_, j), u));
                            Vec<K> left = bim_.A.mul(unit_vec<K>(na_, i), mid);
                            Vec<K> hpart = bim_.H.alg.mult.slice(s, q);
                            for (size_t k = 0; k < na_; ++k) {
                                if (left[k].is_zero()) continue;
                                for (size_t m = 0; m < nh_; ++m)
                                    if (!hpart[m].is_zero())
                                        acc[k * nh_ + m] += t.coeff * left[k] * hpart[m];
                            }
                        }
                        table_.set_slice(i * nh_ + p, j * nh_ + q, acc);
                    }
        }
        unit_ = Vec<K>(n, K::zero());
        for (size_t i = 0; i < na_; ++i)
            for (size_t h = 0; h < nh_; ++h) unit_[i * nh_ + h] = bim_.A.unit[i] * bim_.H.alg.unit[h];
    }

    const PartialBimoduleData<K>& bimodule() const { return bim_; }
    size_t dim() const { return na_ * nh_; }
    size_t dim_a() const { return na_; }
    size_t dim_h() const { return nh_; }
    const Vec<K>& unit_tensor() const { return unit_; }

    Vec<K> pure(size_t a, size_t h) const { return unit_vec<K>(dim(), a * nh_ + h); }

    Vec<K> multiply(const Vec<K>& z1, const Vec<K>& z2) const {
        size_t n = dim();
        Vec<K> r(n, K::zero());
        for (size_t i = 0; i < n; ++i) {
            if (z1[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (z2[j].is_zero()) continue;
                K c = z1[i] * z2[j];
                Vec<K> cell = table_.slice(i, j);
                vec_add_scaled(r, c, cell);
            }
        }
        return r;
    }

    // z . (1_A (x) 1_H); on pure tensors this is the typical element
    // <a (*) h> = a (h_(1) -> 1_A <- S(h_(3))) (x) h_(2).
    Vec<K> project(const Vec<K>& z) const { return multiply(z, unit_); }

    VerificationReport check_associative(const std::string& subject = "ambient product") const {
        VerificationReport rep;
        rep.subject = subject;
        size_t n = dim();
        detail::exhaustive<K>(rep, "ambient associativity", "section 3 product on A(x)H",
                              {n, n, n}, [&](const std::vector<size_t>& ix) {
            Vec<K> lhs = multiply(table_.slice(ix[0], ix[1]), unit_vec<K>(n, ix[2]));
            Vec<K> rhs = multiply(unit_vec<K>(n, ix[0]), table_.slice(ix[1], ix[2]));
            return std::pair(lhs, rhs);
        });
        return rep;
    }

private:
    PartialBimoduleData<K> bim_;
    size_t na_, nh_;
    Tensor3<K> table_;
    Vec<K> unit_;
};

// A subalgebra of an ambient based algebra: inclusion rows give the basis in
// ambient coordinates, the product table lives in subspace coordinates.
template <Field K>
struct BasedSubalgebra {
    size_t ambient_dim = 0;
    Matrix<K> inclusion;
    Tensor3<K> table;
    Vec<K> unit_coords;
    std::vector<std::string> basis_names;

    size_t dim() const { return inclusion.rows(); }
    Vec<K> to_ambient(const Vec<K>& v) const { return inclusion.apply_left(v); }
    std::optional<Vec<K>> from_ambient(const Vec<K>& z) const { return membership(z, inclusion); }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
        size_t n = dim();
        Vec<K> r(n, K::zero());
        for (size_t i = 0; i < n; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (y[j].is_zero()) continue;
                K c = x[i] * y[j];
                vec_add_scaled(r, c, table.slice(i, j));
            }
        }
        return r;
    }

    AlgebraData<K> as_algebra() const {
        AlgebraData<K> a;
        a.dim = dim();
        a.mult = table;
        a.unit = unit_coords;
        a.basis_names = basis_names;
        return a;
    }
};

// Exhaustive (xy)z = x(yz) over the subalgebra's table, plus the unit law.
template <Field K>
VerificationReport check_associativity(const BasedSubalgebra<K>& s,
                                       const std::string& subject = "subalgebra") {
    VerificationReport rep;
    rep.subject = subject;
    size_t n = s.dim();
    detail::exhaustive<K>(rep, "associativity", "Prop 3.3", {n, n, n},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = s.mul(s.table.slice(ix[0], ix[1]), unit_vec<K>(n, ix[2]));
        Vec<K> rhs = s.mul(unit_vec<K>(n, ix[0]), s.table.slice(ix[1], ix[2]));
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "left unit", "Prop 3.3", {n}, [&](const std::vector<size_t>& ix) {
        return std::pair(s.mul(s.unit_coords, unit_vec<K>(n, ix[0])), unit_vec<K>(n, ix[0]));
    });
    detail::exhaustive<K>(rep, "right unit", "Prop 3.3", {n}, [&](const std::vector<size_t>& ix) {
        return std::pair(s.mul(unit_vec<K>(n, ix[0]), s.unit_coords), unit_vec<K>(n, ix[0]));
    });
    return rep;
}

// <A (*) H>: the span of the projections of all pure tensors, with the
// product re-expressed through membership. Closure or unit failures signal
// inconsistent action tensors and abort.
template <Field K>
BasedSubalgebra<K> build_underline_smash(const AmbientProduct<K>& amb) {
    size_t n = amb.dim();
    std::vector<Vec<K>> projections;
    projections.reserve(n);
    for (size_t i = 0; i < n; ++i)
        projections.push_back(amb.project(unit_vec<K>(n, i)));
    BasedSubalgebra<K> s;
    s.ambient_dim = n;
    s.inclusion = span_basis(projections);
    size_t m = s.inclusion.rows();
    s.table = Tensor3<K>(m, m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            Vec<K> p = amb.multiply(s.inclusion.row(i), s.inclusion.row(j));
            auto c = s.from_ambient(p);
            if (!c)
                throw error("underline smash: product of basis elements " + std::to_string(i) +
                            "," + std::to_string(j) + " escapes the span");
            s.table.set_slice(i, j, *c);
        }
    auto u = s.from_ambient(amb.project(amb.unit_tensor()));
    if (!u) throw error("underline smash: projected unit escapes the span");
    s.unit_coords = *u;
    for (size_t i = 0; i < m; ++i) {
        Vec<K> ei = unit_vec<K>(m, i);
        if (!(s.mul(s.unit_coords, ei) == ei) || !(s.mul(ei, s.unit_coords) == ei))
            throw error("underline smash: <1_A (*) 1_H> is not a two-sided unit");
    }
    return s;
}

// The global twisted smash product B (*) H on the full tensor basis.
template <Field K>
BasedSubalgebra<K> build_twisted_smash(const GlobalBimoduleData<K>& g) {
    auto axioms = check_global_bimodule(g);
    if (!axioms.ok()) throw error("twisted smash: global bimodule axioms fail");
    AmbientProduct<K> amb(g.as_partial());
    size_t n = amb.dim();
    BasedSubalgebra<K> s;
    s.ambient_dim = n;
    s.inclusion = Matrix<K>::identity(n);
    s.table = Tensor3<K>(n, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            s.table.set_slice(i, j, amb.multiply(unit_vec<K>(n, i), unit_vec<K>(n, j)));
    s.unit_coords = amb.unit_tensor();
    s.basis_names.reserve(n);
    for (size_t i = 0; i < g.A.dim; ++i)
        for (size_t h = 0; h < g.H.dim(); ++h)
            s.basis_names.push_back(g.A.name_of(i) + "(*)" + g.H.name_of(h));
    auto rep = check_associativity(s, "B (*) H");
    if (!rep.ok()) throw error("twisted smash: product fails associativity or unit law");
    return s;
}

// The Prop 3.3 package for the underline algebra: unit law, associativity,
// projection idempotence, and Eq (3.1) consistency against the ambient
// product.
template <Field K>
VerificationReport check_underline_smash(const AmbientProduct<K>& amb,
                                         const BasedSubalgebra<K>& s,
                                         const std::string& subject = "partial twisted smash") {
    VerificationReport rep;
    rep.subject = subject;
    rep.merge(check_associativity(s, subject));
    size_t n = amb.dim();
    detail::exhaustive<K>(rep, "projection idempotent", "underline projection", {n},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> once = amb.project(unit_vec<K>(n, ix[0]));
        return std::pair(amb.project(once), once);
    });
    detail::exhaustive<K>(rep, "Eq (3.1) consistency", "Eq (3.1)", {n, n},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> z1 = unit_vec<K>(n, ix[0]), z2 = unit_vec<K>(n, ix[1]);
        Vec<K> lhs = amb.multiply(amb.project(z1), amb.project(z2));
        Vec<K> rhs = amb.project(amb.multiply(z1, z2));
        return std::pair(lhs, rhs);
    });
    return rep;
}

} // namespace psmash
