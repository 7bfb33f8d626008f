// Partial left/right actions and partial bimodule algebras, their axiom
// checkers, and the construction routes: restriction of a global action to
// an ideal, skew pairs, and partial coactions pulled back along the pairing.
//
// Action tensors are stored H-major:
//   left(h, a, k) : e_h -> a_j = sum_k left(h, j, k) a_k
//   right(h, a, k): a_j <- e_h = sum_k right(h, j, k) a_k
#pragma once

#include "psmash/algebra.hpp"

namespace psmash {

template <Field K>
struct PartialBimoduleData {
    HopfData<K> H;
    AlgebraData<K> A;
    Tensor3<K> left;   // (dim H, dim A, dim A)
    Tensor3<K> right;  // (dim H, dim A, dim A)

    void validate() const {
        H.validate();
        A.validate();
        if (left.d1() != H.dim() || left.d2() != A.dim || left.d3() != A.dim)
            throw error("PartialBimoduleData: left action tensor shape mismatch");
        if (right.d1() != H.dim() || right.d2() != A.dim || right.d3() != A.dim)
            throw error("PartialBimoduleData: right action tensor shape mismatch");
    }

    Vec<K> act_left(size_t h, const Vec<K>& a) const {
        Vec<K> r(A.dim, K::zero());
        for (size_t j = 0; j < A.dim; ++j) {
            if (a[j].is_zero()) continue;
            for (size_t k = 0; k < A.dim; ++k) {
                const K& c = left(h, j, k);
                if (!c.is_zero()) r[k] += a[j] * c;
            }
        }
        return r;
    }
    Vec<K> act_left(const Vec<K>& h, const Vec<K>& a) const {
        Vec<K> r(A.dim, K::zero());
        for (size_t i = 0; i < H.dim(); ++i)
            if (!h[i].is_zero()) vec_add_scaled(r, h[i], act_left(i, a));
        return r;
    }
    Vec<K> act_right(const Vec<K>& a, size_t h) const {
        Vec<K> r(A.dim, K::zero());
        for (size_t j = 0; j < A.dim; ++j) {
            if (a[j].is_zero()) continue;
            for (size_t k = 0; k < A.dim; ++k) {
                const K& c = right(h, j, k);
                if (!c.is_zero()) r[k] += a[j] * c;
            }
        }
        return r;
    }
    Vec<K> act_right(const Vec<K>& a, const Vec<K>& h) const {
        Vec<K> r(A.dim, K::zero());
        for (size_t i = 0; i < H.dim(); ++i)
            if (!h[i].is_zero()) vec_add_scaled(r, h[i], act_right(a, i));
        return r;
    }
    // a <- S(e_h)
    Vec<K> act_right_s(const Vec<K>& a, size_t h) const {
        return act_right(a, H.antipode.col(h));
    }
    // h_(1) -> a <- S(h_(2)) for a basis element e_h of H.
    Vec<K> sandwich(size_t h, const Vec<K>& a) const {
        Vec<K> r(A.dim, K::zero());
        for (size_t p = 0; p < H.dim(); ++p)
            for (size_t q = 0; q < H.dim(); ++q) {
                const K& d = H.coalg.comult(h, p, q);
                if (d.is_zero()) continue;
                vec_add_scaled(r, d, act_left(p, act_right_s(a, q)));
            }
        return r;
    }
};

template <Field K>
struct GlobalBimoduleData {
    HopfData<K> H;
    AlgebraData<K> A;
    Tensor3<K> left;
    Tensor3<K> right;

    PartialBimoduleData<K> as_partial() const { return {H, A, left, right}; }
};

// A skew pair (A, H, sigma) of Hopf algebras; sigma(i, j) = sigma(a_i, h_j).
template <Field K>
struct SkewPairData {
    HopfData<K> A;
    HopfData<K> H;
    Matrix<K> sigma;

    void validate() const {
        A.validate();
        H.validate();
        if (sigma.rows() != A.dim() || sigma.cols() != H.dim())
            throw error("SkewPairData: sigma shape mismatch");
    }
    K pair(const Vec<K>& a, const Vec<K>& h) const {
        K s = K::zero();
        for (size_t i = 0; i < A.dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < H.dim(); ++j)
                if (!h[j].is_zero()) s += a[i] * h[j] * sigma(i, j);
        }
        return s;
    }
};

// The seven axioms of a partial H-bimodule algebra (three left, three right,
// one compatibility), checked on all basis tuples.
template <Field K>
VerificationReport check_partial_bimodule(const PartialBimoduleData<K>& d,
                                          const std::string& subject = "partial bimodule") {
    d.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t nh = d.H.dim(), na = d.A.dim;
    auto e = [&](size_t i) { return unit_vec<K>(na, i); };

    detail::exhaustive<K>(rep, "left: action on products", "Def 2.1 (1)", {nh, na, na},
                          [&](const std::vector<size_t>& ix) {
        auto [h, i, j] = std::tuple(ix[0], ix[1], ix[2]);
        Vec<K> lhs = d.act_left(h, d.A.mult.slice(i, j));
        Vec<K> rhs(na, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(h, p, q);
                if (c.is_zero()) continue;
                vec_add_scaled(rhs, c, d.A.mul(d.act_left(p, e(i)), d.act_left(q, e(j))));
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "left: 1_H acts as identity", "Def 2.1 (2)", {na},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(d.act_left(d.H.alg.unit, e(ix[0])), e(ix[0]));
    });
    detail::exhaustive<K>(rep, "left: composition", "Def 2.1 (3)", {nh, nh, na},
                          [&](const std::vector<size_t>& ix) {
        auto [h, g, a] = std::tuple(ix[0], ix[1], ix[2]);
        Vec<K> lhs = d.act_left(h, d.act_left(g, e(a)));
        Vec<K> rhs(na, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(h, p, q);
                if (c.is_zero()) continue;
                Vec<K> one_part = d.act_left(p, d.A.unit);
                Vec<K> qg = d.H.alg.mul(unit_vec<K>(nh, q), unit_vec<K>(nh, g));
                vec_add_scaled(rhs, c, d.A.mul(one_part, d.act_left(qg, e(a))));
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "right: action on products", "Def 3.1 (1)", {nh, na, na},
                          [&](const std::vector<size_t>& ix) {
        auto [h, i, j] = std::tuple(ix[0], ix[1], ix[2]);
        Vec<K> lhs = d.act_right(d.A.mult.slice(i, j), h);
        Vec<K> rhs(na, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(h, p, q);
                if (c.is_zero()) continue;
                vec_add_scaled(rhs, c, d.A.mul(d.act_right(e(i), p), d.act_right(e(j), q)));
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "right: 1_H acts as identity", "Def 3.1 (2)", {na},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(d.act_right(e(ix[0]), d.H.alg.unit), e(ix[0]));
    });
    detail::exhaustive<K>(rep, "right: composition", "Def 3.1 (3)", {nh, nh, na},
                          [&](const std::vector<size_t>& ix) {
        auto [h, g, a] = std::tuple(ix[0], ix[1], ix[2]);
        Vec<K> lhs = d.act_right(d.act_right(e(a), g), h);
        Vec<K> rhs(na, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(h, p, q);
                if (c.is_zero()) continue;
                Vec<K> one_part = d.act_right(d.A.unit, p);
                Vec<K> gq = d.H.alg.mul(unit_vec<K>(nh, g), unit_vec<K>(nh, q));
                vec_add_scaled(rhs, c, d.A.mul(one_part, d.act_right(e(a), gq)));
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "compatibility", "Def 3.2 (ii)", {nh, na, nh},
                          [&](const std::vector<size_t>& ix) {
        auto [h, a, g] = std::tuple(ix[0], ix[1], ix[2]);
        Vec<K> lhs = d.act_right(d.act_left(h, e(a)), g);
        Vec<K> rhs = d.act_left(h, d.act_right(e(a), g));
        return std::pair(lhs, rhs);
    });
    return rep;
}

// Global (unital, multiplicative, associative) bimodule-algebra axioms.
template <Field K>
VerificationReport check_global_bimodule(const GlobalBimoduleData<K>& g,
                                         const std::string& subject = "global bimodule") {
    PartialBimoduleData<K> d = g.as_partial();
    d.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t nh = d.H.dim(), na = d.A.dim;
    auto e = [&](size_t i) { return unit_vec<K>(na, i); };

    detail::exhaustive<K>(rep, "left: action on products", "module algebra", {nh, na, na},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = d.act_left(ix[0], d.A.mult.slice(ix[1], ix[2]));
        Vec<K> rhs(na, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(ix[0], p, q);
                if (c.is_zero()) continue;
                vec_add_scaled(rhs, c, d.A.mul(d.act_left(p, e(ix[1])), d.act_left(q, e(ix[2]))));
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "left: 1_H acts as identity", "module axiom", {na},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(d.act_left(d.H.alg.unit, e(ix[0])), e(ix[0]));
    });
    detail::exhaustive<K>(rep, "left: associativity of action", "module axiom", {nh, nh, na},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = d.act_left(ix[0], d.act_left(ix[1], e(ix[2])));
        Vec<K> gh = d.H.alg.mult.slice(ix[0], ix[1]);
        return std::pair(lhs, d.act_left(gh, e(ix[2])));
    });
    detail::exhaustive<K>(rep, "left: action unital on 1_A", "module algebra", {nh},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(d.act_left(ix[0], d.A.unit),
                         vec_scale(d.H.coalg.counit[ix[0]], d.A.unit));
    });
    detail::exhaustive<K>(rep, "right: action on products", "module algebra", {nh, na, na},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = d.act_right(d.A.mult.slice(ix[1], ix[2]), ix[0]);
        Vec<K> rhs(na, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(ix[0], p, q);
                if (c.is_zero()) continue;
                vec_add_scaled(rhs, c, d.A.mul(d.act_right(e(ix[1]), p), d.act_right(e(ix[2]), q)));
            }
        return std::pair(lhs, rhs);
    });
    detail::exhaustive<K>(rep, "right: 1_H acts as identity", "module axiom", {na},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(d.act_right(e(ix[0]), d.H.alg.unit), e(ix[0]));
    });
    detail::exhaustive<K>(rep, "right: associativity of action", "module axiom", {nh, nh, na},
                          [&](const std::vector<size_t>& ix) {
        // (a <| g) <| h = a <| (g h)
        Vec<K> lhs = d.act_right(d.act_right(e(ix[2]), ix[0]), ix[1]);
        Vec<K> gh = d.H.alg.mult.slice(ix[0], ix[1]);
        return std::pair(lhs, d.act_right(e(ix[2]), gh));
    });
    detail::exhaustive<K>(rep, "right: action unital on 1_A", "module algebra", {nh},
                          [&](const std::vector<size_t>& ix) {
        return std::pair(d.act_right(d.A.unit, ix[0]),
                         vec_scale(d.H.coalg.counit[ix[0]], d.A.unit));
    });
    detail::exhaustive<K>(rep, "compatibility", "bimodule axiom", {nh, na, nh},
                          [&](const std::vector<size_t>& ix) {
        Vec<K> lhs = d.act_right(d.act_left(ix[0], e(ix[1])), ix[2]);
        Vec<K> rhs = d.act_left(ix[0], d.act_right(e(ix[1]), ix[2]));
        return std::pair(lhs, rhs);
    });
    return rep;
}

// Standing assumption of section 3:
//   (a <- S(h_(1))) (x) h_(2) = (a <- S(h_(2))) (x) h_(1)  in A (x) H.
// Gate for the envelope, Morita and duality pipelines.
template <Field K>
VerificationReport check_symmetry_assumption(const PartialBimoduleData<K>& d,
                                             const std::string& subject = "symmetry assumption") {
    d.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t nh = d.H.dim(), na = d.A.dim;
    detail::exhaustive<K>(rep, "antipode-leg symmetry", "section 3 standing assumption", {na, nh},
                          [&](const std::vector<size_t>& ix) {
        auto [a, h] = std::tuple(ix[0], ix[1]);
        Vec<K> lhs(na * nh, K::zero()), rhs(na * nh, K::zero());
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = d.H.coalg.comult(h, p, q);
                if (c.is_zero()) continue;
                Vec<K> l = d.act_right_s(unit_vec<K>(na, a), p);
                for (size_t k = 0; k < na; ++k)
                    if (!l[k].is_zero()) lhs[k * nh + q] += c * l[k];
                Vec<K> r = d.act_right_s(unit_vec<K>(na, a), q);
                for (size_t k = 0; k < na; ++k)
                    if (!r[k].is_zero()) rhs[k * nh + p] += c * r[k];
            }
        return std::pair(lhs, rhs);
    });
    return rep;
}

// Restriction of a global bimodule action to a two-sided ideal with its own
// unit: h -> a = 1_A (h |> a), a <- h = (a <| h) 1_A.
template <Field K>
PartialBimoduleData<K> induced_partial_from_global(const GlobalBimoduleData<K>& g,
                                                   const Matrix<K>& ideal_basis,
                                                   const Vec<K>& unit1A) {
    PartialBimoduleData<K> gp = g.as_partial();
    gp.validate();
    size_t nb = g.A.dim, nh = g.H.dim();
    if (ideal_basis.cols() != nb) throw error("induced action: ideal basis length mismatch");
    if (unit1A.size() != nb) throw error("induced action: unit length mismatch");
    size_t m = ideal_basis.rows();
    if (m == 0) throw error("induced action: zero ideal has no unit");
    if (rank(ideal_basis) != m) throw error("induced action: ideal basis rows are dependent");
    if (!membership(unit1A, ideal_basis)) throw error("induced action: unit is not in the ideal");
    if (!(g.A.mul(unit1A, unit1A) == unit1A))
        throw error("induced action: proposed unit is not idempotent");
    for (size_t i = 0; i < m; ++i) {
        Vec<K> row = ideal_basis.row(i);
        if (!(g.A.mul(unit1A, row) == row) || !(g.A.mul(row, unit1A) == row))
            throw error("induced action: proposed unit is not a local unit for the ideal");
        for (size_t b = 0; b < nb; ++b) {
            Vec<K> eb = unit_vec<K>(nb, b);
            if (!membership(g.A.mul(eb, row), ideal_basis) ||
                !membership(g.A.mul(row, eb), ideal_basis))
                throw error("induced action: basis is not multiplication-closed against B");
        }
    }

    PartialBimoduleData<K> r;
    r.H = g.H;
    r.A.dim = m;
    r.A.mult = Tensor3<K>(m, m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            auto c = membership(g.A.mul(ideal_basis.row(i), ideal_basis.row(j)), ideal_basis);
            r.A.mult.set_slice(i, j, *c);
        }
    r.A.unit = *membership(unit1A, ideal_basis);
    r.left = Tensor3<K>(nh, m, m);
    r.right = Tensor3<K>(nh, m, m);
    for (size_t h = 0; h < nh; ++h)
        for (size_t i = 0; i < m; ++i) {
            Vec<K> l = g.A.mul(unit1A, gp.act_left(h, ideal_basis.row(i)));
            auto lc = membership(l, ideal_basis);
            if (!lc) throw error("induced action: left translate escapes the ideal");
            r.left.set_slice(h, i, *lc);
            Vec<K> rr = g.A.mul(gp.act_right(ideal_basis.row(i), h), unit1A);
            auto rc = membership(rr, ideal_basis);
            if (!rc) throw error("induced action: right translate escapes the ideal");
            r.right.set_slice(h, i, *rc);
        }
    auto rep = check_partial_bimodule(r, "induced partial action");
    if (!rep.ok()) throw error("induced action: partial bimodule axioms fail on the restriction");
    return r;
}

// Def 3.4 conditions (1)-(3) for a skew pair.
template <Field K>
VerificationReport check_skew_pair(const SkewPairData<K>& s,
                                   const std::string& subject = "skew pair") {
    s.validate();
    VerificationReport rep;
    rep.subject = subject;
    size_t na = s.A.dim(), nh = s.H.dim();
    detail::exhaustive<K>(rep, "condition (1)", "Def 3.4 (1)", {na, na, nh},
                          [&](const std::vector<size_t>& ix) {
        auto [i, j, k] = std::tuple(ix[0], ix[1], ix[2]);
        K lhs = K::zero();
        Vec<K> prod = s.A.alg.mult.slice(i, j);
        for (size_t mIdx = 0; mIdx < na; ++mIdx)
            if (!prod[mIdx].is_zero()) lhs += prod[mIdx] * s.sigma(mIdx, k);
        K rhs = K::zero();
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = s.H.coalg.comult(k, p, q);
                if (!c.is_zero()) rhs += c * s.sigma(i, p) * s.sigma(j, q);
            }
        return std::pair(Vec<K>{lhs}, Vec<K>{rhs});
    });
    auto lhs_of = [&](size_t i, size_t h, size_t g) {
        // sigma(a_(1), h) sigma(a_(2), g)
        K v = K::zero();
        for (size_t p = 0; p < na; ++p)
            for (size_t q = 0; q < na; ++q) {
                const K& c = s.A.coalg.comult(i, p, q);
                if (!c.is_zero()) v += c * s.sigma(p, h) * s.sigma(q, g);
            }
        return v;
    };
    detail::exhaustive<K>(rep, "condition (2), first equality", "Def 3.4 (2)", {na, nh, nh},
                          [&](const std::vector<size_t>& ix) {
        auto [i, h, g] = std::tuple(ix[0], ix[1], ix[2]);
        K rhs = K::zero();
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = s.H.coalg.comult(g, p, q);
                if (c.is_zero()) continue;
                K u = s.pair(s.A.alg.unit, unit_vec<K>(nh, p));
                Vec<K> qh = s.H.alg.mult.slice(q, h);
                K v = K::zero();
                for (size_t mIdx = 0; mIdx < nh; ++mIdx)
                    if (!qh[mIdx].is_zero()) v += qh[mIdx] * s.sigma(i, mIdx);
                rhs += c * u * v;
            }
        return std::pair(Vec<K>{lhs_of(i, h, g)}, Vec<K>{rhs});
    });
    detail::exhaustive<K>(rep, "condition (2), second equality", "Def 3.4 (2)", {na, nh, nh},
                          [&](const std::vector<size_t>& ix) {
        auto [i, h, g] = std::tuple(ix[0], ix[1], ix[2]);
        K rhs = K::zero();
        for (size_t p = 0; p < nh; ++p)
            for (size_t q = 0; q < nh; ++q) {
                const K& c = s.H.coalg.comult(h, p, q);
                if (c.is_zero()) continue;
                K u = s.pair(s.A.alg.unit, unit_vec<K>(nh, p));
                Vec<K> gq = s.H.alg.mult.slice(g, q);
                K v = K::zero();
                for (size_t mIdx = 0; mIdx < nh; ++mIdx)
                    if (!gq[mIdx].is_zero()) v += gq[mIdx] * s.sigma(i, mIdx);
                rhs += c * u * v;
            }
        return std::pair(Vec<K>{lhs_of(i, h, g)}, Vec<K>{rhs});
    });
    detail::exhaustive<K>(rep, "condition (3)", "Def 3.4 (3)", {na},
                          [&](const std::vector<size_t>& ix) {
        K lhs = s.pair(unit_vec<K>(na, ix[0]), s.H.alg.unit);
        return std::pair(Vec<K>{lhs}, Vec<K>{s.A.coalg.counit[ix[0]]});
    });
    return rep;
}

// Ex 3.5: h -> b = b_(2) sigma(b_(1), h), b <- h = b_(1) sigma(b_(2), (S^-1)^2(h)).
template <Field K>
PartialBimoduleData<K> skew_pair_action(const SkewPairData<K>& s) {
    auto cond = check_skew_pair(s);
    if (!cond.ok()) {
        for (const auto& c : cond.checks)
            if (c.status == CheckStatus::fail) {
                std::string where;
                for (size_t i : c.counterexample->indices)
                    where += (where.empty() ? "" : ",") + std::to_string(i);
                throw error("skew pair " + c.name + " fails at basis triple (" + where + ")");
            }
    }
    Matrix<K> sinv = antipode_inverse(s.H);
    Matrix<K> sinv2 = sinv * sinv;
    size_t na = s.A.dim(), nh = s.H.dim();
    PartialBimoduleData<K> d;
    d.H = s.H;
    d.A = s.A.alg;
    d.left = Tensor3<K>(nh, na, na);
    d.right = Tensor3<K>(nh, na, na);
    for (size_t j = 0; j < nh; ++j)
        for (size_t i = 0; i < na; ++i) {
            Vec<K> l(na, K::zero()), r(na, K::zero());
            for (size_t p = 0; p < na; ++p)
                for (size_t q = 0; q < na; ++q) {
                    const K& c = s.A.coalg.comult(i, p, q);
                    if (c.is_zero()) continue;
                    l[q] += c * s.sigma(p, j);
                    r[p] += c * s.pair(unit_vec<K>(na, q), sinv2.col(j));
                }
            d.left.set_slice(j, i, l);
            d.right.set_slice(j, i, r);
        }
    auto rep = check_partial_bimodule(d, "skew pair action");
    if (!rep.ok()) throw error("skew pair action: induced bimodule axioms fail");
    return d;
}

// Partial coactions pulled back along the dual pairing:
//   f -> a = <f, a_[1]> a_[0]   (right coaction rho_r : A -> A (x) H)
//   a <- g = <g, a_[-1]> a_[0]  (left coaction  rho_l : A -> H (x) A)
// rho_l is (dim A, dim H, dim A), rho_r is (dim A, dim A, dim H). The result
// acts over dual_hopf(H); validity is established by the caller running
// check_partial_bimodule.
template <Field K>
PartialBimoduleData<K> coaction_to_action(const HopfData<K>& h, const AlgebraData<K>& a,
                                          const Tensor3<K>& rho_l, const Tensor3<K>& rho_r) {
    h.validate();
    a.validate();
    size_t nh = h.dim(), na = a.dim;
    if (rho_l.d1() != na || rho_l.d2() != nh || rho_l.d3() != na)
        throw error("coaction_to_action: rho_l shape mismatch");
    if (rho_r.d1() != na || rho_r.d2() != na || rho_r.d3() != nh)
        throw error("coaction_to_action: rho_r shape mismatch");
    PartialBimoduleData<K> d;
    d.H = dual_hopf(h);
    d.A = a;
    d.left = Tensor3<K>(nh, na, na);
    d.right = Tensor3<K>(nh, na, na);
    for (size_t j = 0; j < nh; ++j)
        for (size_t i = 0; i < na; ++i)
            for (size_t k = 0; k < na; ++k) {
                d.left(j, i, k) = rho_r(i, k, j);
                d.right(j, i, k) = rho_l(i, j, k);
            }
    return d;
}

// Morphism (and equivalence) of partial H-bimodule algebras,
// theta(h -> a <- k) = h -> theta(a) <- k, plus multiplicativity/unitality.
template <Field K>
VerificationReport check_action_morphism(const LinMap<K>& theta, const PartialBimoduleData<K>& src,
                                         const PartialBimoduleData<K>& dst,
                                         const std::string& subject = "action morphism") {
    src.validate();
    dst.validate();
    if (!(src.H.alg.mult == dst.H.alg.mult) || !(src.H.coalg.comult == dst.H.coalg.comult))
        throw error("check_action_morphism: source and target act over different Hopf data");
    if (theta.src_dim != src.A.dim || theta.dst_dim != dst.A.dim)
        throw error("check_action_morphism: map shape mismatch");
    VerificationReport rep;
    rep.subject = subject;
    rep.merge(check_algebra_morphism(theta, src.A, dst.A, true, subject));
    size_t nh = src.H.dim(), na = src.A.dim;
    detail::exhaustive<K>(rep, "equivariance", "Def 3.7", {nh, na, nh},
                          [&](const std::vector<size_t>& ix) {
        auto [h, a, k] = std::tuple(ix[0], ix[1], ix[2]);
        Vec<K> lhs = theta.apply(src.act_right(src.act_left(h, unit_vec<K>(na, a)), k));
        Vec<K> rhs = dst.act_right(dst.act_left(h, theta.mat.col(a)), k);
        return std::pair(lhs, rhs);
    });
    if (theta.bijective())
        rep.add_pass("bijective (equivalence)", "Def 3.7");
    else
        rep.add_fail("bijective (equivalence)", "Def 3.7",
                     Counterexample{{}, "rank " + std::to_string(rank(theta.mat)),
                                    "dim " + std::to_string(theta.src_dim)});
    return rep;
}

} // namespace psmash
