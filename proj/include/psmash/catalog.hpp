// Built-in example objects used by tests and the CLI. Every entry passes its
// own structure checks at construction time; construction throws otherwise.
#pragma once

#include <functional>

#include "psmash/partial_action.hpp"

namespace psmash {

// k[x]/(x^2) on the basis {1, x}.
template <Field K>
AlgebraData<K> dual_numbers_algebra() {
    AlgebraData<K> a;
    a.dim = 2;
    a.mult = Tensor3<K>(2, 2, 2);
    a.mult(0, 0, 0) = K::one();
    a.mult(0, 1, 1) = K::one();
    a.mult(1, 0, 1) = K::one();
    a.unit = unit_vec<K>(2, 0);
    a.basis_names = {"1", "x"};
    return a;
}

// Group algebra kZ_n on the basis {1, g, ..., g^(n-1)}.
template <Field K>
HopfData<K> group_algebra(size_t n) {
    if (n < 1) throw error("group_algebra: order must be positive");
    HopfData<K> h;
    h.alg.dim = h.coalg.dim = n;
    h.alg.mult = Tensor3<K>(n, n, n);
    h.coalg.comult = Tensor3<K>(n, n, n);
    h.antipode = Matrix<K>(n, n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) h.alg.mult(i, j, (i + j) % n) = K::one();
        h.coalg.comult(i, i, i) = K::one();
        h.antipode((n - i) % n, i) = K::one();
    }
    h.alg.unit = unit_vec<K>(n, 0);
    h.coalg.counit = Vec<K>(n, K::one());
    h.alg.basis_names.push_back("1");
    for (size_t i = 1; i < n; ++i)
        h.alg.basis_names.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
    auto rep = check_structure(h, StructureLevel::hopf, "kZ" + std::to_string(n));
    if (!rep.ok()) throw error("group_algebra: construction fails its own checks");
    return h;
}

// Sweedler's four dimensional Hopf algebra on the basis {1, c, x, cx}
// (c^2 = 1, x^2 = 0, xc = -cx; Delta(c) = c(x)c, Delta(x) = x(x)1 + c(x)x).
// The antipode is solved from the antipode axiom and then asserted against
// S(c) = c, S(x) = -cx.
template <Field K>
HopfData<K> sweedler_h4() {
    if (K::from_int(2).is_zero()) throw error("sweedler_h4: needs characteristic != 2");
    HopfData<K> h;
    h.alg.dim = h.coalg.dim = 4;
    h.alg.mult = Tensor3<K>(4, 4, 4);
    auto set = [&](size_t i, size_t j, size_t k, long c) { h.alg.mult(i, j, k) = K::from_int(c); };
    for (size_t j = 0; j < 4; ++j) { set(0, j, j, 1); if (j) set(j, 0, j, 1); }
    set(1, 1, 0, 1);          // c c = 1
    set(1, 2, 3, 1);          // c x = cx
    set(1, 3, 2, 1);          // c cx = x
    set(2, 1, 3, -1);         // x c = -cx
    set(3, 1, 2, -1);         // cx c = -x
    h.alg.unit = unit_vec<K>(4, 0);
    h.alg.basis_names = {"1", "c", "x", "cx"};
    h.coalg.comult = Tensor3<K>(4, 4, 4);
    h.coalg.comult(0, 0, 0) = K::one();
    h.coalg.comult(1, 1, 1) = K::one();
    h.coalg.comult(2, 2, 0) = K::one();
    h.coalg.comult(2, 1, 2) = K::one();
    h.coalg.comult(3, 3, 1) = K::one();
    h.coalg.comult(3, 0, 3) = K::one();
    h.coalg.counit = {K::one(), K::one(), K::zero(), K::zero()};
    h.antipode = solve_antipode(h.alg, h.coalg);
    Matrix<K> expect(4, 4);
    expect(0, 0) = K::one();
    expect(1, 1) = K::one();
    expect(3, 2) = -K::one();  // S(x) = -cx
    expect(2, 3) = K::one();   // S(cx) = x
    if (h.antipode != expect) throw error("sweedler_h4: solved antipode differs from S(c)=c, S(x)=-cx");
    auto rep = check_structure(h, StructureLevel::hopf, "H4");
    if (!rep.ok()) throw error("sweedler_h4: construction fails its own checks");
    return h;
}

// The dual of H4 on the named basis {1, T, P, TP} of Ex 3.6, carried in the
// convention that example computes with (opposite product and coproduct of
// the standard dual). On this presentation T*T = 1, P*P = 0, T*P = TP, and
// the basis map 1 -> 1*+c*, c -> T, x -> P, cx -> TP from H4 is an honest
// bialgebra isomorphism. Against the standard dual the same map is a
// bialgebra anti-isomorphism; see the tests.
template <Field K>
HopfData<K> h4_dual_named() {
    HopfData<K> dual = op_cop_hopf(dual_hopf(sweedler_h4<K>()));
    Matrix<K> basis(4, 4);
    basis(0, 0) = K::one(); basis(0, 1) = K::one();   // 1 = 1* + c*
    basis(1, 0) = K::one(); basis(1, 1) = -K::one();  // T = 1* - c*
    basis(2, 2) = K::one(); basis(2, 3) = K::one();   // P = x* + (cx)*
    basis(3, 2) = K::one(); basis(3, 3) = -K::one();  // TP = x* - (cx)*
    HopfData<K> named = rebase_hopf(dual, basis, {"1", "T", "P", "TP"});
    auto rep = check_structure(named, StructureLevel::hopf, "H4 dual");
    if (!rep.ok()) throw error("h4_dual_named: construction fails its own checks");
    return named;
}

// Ex 3.6's stated basis map H4 -> {1, T, P, TP}; in the h4_dual_named
// presentation it is simply e_i -> b_i.
template <Field K>
LinMap<K> h4_dual_iso() {
    return LinMap<K>(Matrix<K>::identity(4));
}

// Change of the acting Hopf algebra's basis in a partial bimodule; row i of
// new_basis holds the new basis vector b_i in old coordinates.
template <Field K>
PartialBimoduleData<K> rebase_bimodule_hopf(const PartialBimoduleData<K>& d,
                                            const Matrix<K>& new_basis,
                                            std::vector<std::string> names) {
    PartialBimoduleData<K> r;
    r.H = rebase_hopf(d.H, new_basis, std::move(names));
    r.A = d.A;
    size_t nh = d.H.dim(), na = d.A.dim;
    r.left = Tensor3<K>(nh, na, na);
    r.right = Tensor3<K>(nh, na, na);
    for (size_t i = 0; i < nh; ++i)
        for (size_t a = 0; a < na; ++a) {
            Vec<K> l(na, K::zero()), rr(na, K::zero());
            for (size_t j = 0; j < nh; ++j) {
                const K& c = new_basis(i, j);
                if (c.is_zero()) continue;
                vec_add_scaled(l, c, d.left.slice(j, a));
                vec_add_scaled(rr, c, d.right.slice(j, a));
            }
            r.left.set_slice(i, a, l);
            r.right.set_slice(i, a, rr);
        }
    return r;
}

// Ex 3.6: A = k[x] inside H4, a partial bimodule algebra over the dual of H4
// presented on the named basis {1, T, P, TP}.
//
// The right coaction is stored exactly as displayed,
//   rho_r(a) = 1/2 a (x) (1 + c + cx).
// The displayed left coaction 1/2 (1 + c + cx) (x) a does NOT induce a
// partial right action (Def 3.1 (3) fails; the tests keep that variant as a
// documented counterexample). The left coaction used here is
//   rho_l(a) = 1/2 (1 + c + x) (x) a,
// i.e. the displayed H-leg pushed through the antipode, which makes all
// seven bimodule axioms hold.
template <Field K>
PartialBimoduleData<K> kx_in_h4_bimodule() {
    HopfData<K> h4 = sweedler_h4<K>();
    AlgebraData<K> a = dual_numbers_algebra<K>();
    K hf = half<K>();
    Tensor3<K> rho_r(2, 2, 4);
    for (size_t i = 0; i < 2; ++i)
        for (size_t leg : {0, 1, 3}) rho_r(i, i, leg) = hf;   // 1, c, cx
    Tensor3<K> rho_l(2, 4, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t leg : {0, 1, 2}) rho_l(i, leg, i) = hf;   // 1, c, x
    PartialBimoduleData<K> d = coaction_to_action(h4, a, rho_l, rho_r);
    Matrix<K> basis(4, 4);
    basis(0, 0) = K::one(); basis(0, 1) = K::one();
    basis(1, 0) = K::one(); basis(1, 1) = -K::one();
    basis(2, 2) = K::one(); basis(2, 3) = K::one();
    basis(3, 2) = K::one(); basis(3, 3) = -K::one();
    PartialBimoduleData<K> named = rebase_bimodule_hopf(d, basis, {"1", "T", "P", "TP"});
    auto rep = check_partial_bimodule(named, "k[x] in H4");
    if (!rep.ok()) throw error("kx_in_h4_bimodule: construction fails its own checks");
    return named;
}

// Section 3: a central idempotent e with eps(e) = 1 and
// (e (x) 1) Delta(e) = e (x) e = Delta(e) (e (x) 1) gives a partial coaction
// on A = k, hence a partial bimodule over H* by f -> x = <f, e> x = x <- f.
template <Field K>
PartialBimoduleData<K> central_idempotent_example(const HopfData<K>& h, const Vec<K>& e) {
    h.validate();
    size_t n = h.dim();
    if (e.size() != n) throw error("central idempotent: coordinate length mismatch");
    if (!(h.alg.mul(e, e) == e)) throw error("central idempotent: e is not idempotent");
    for (size_t i = 0; i < n; ++i)
        if (!(h.alg.mul(e, unit_vec<K>(n, i)) == h.alg.mul(unit_vec<K>(n, i), e)))
            throw error("central idempotent: e is not central");
    if (!(h.coalg.counit_of(e) == K::one()))
        throw error("central idempotent: counit of e is not 1");
    // (e (x) 1) Delta(e) = e (x) e = Delta(e) (e (x) 1)
    Vec<K> lhs(n * n, K::zero()), rhs(n * n, K::zero()), ee(n * n, K::zero());
    for (size_t i = 0; i < n; ++i) {
        if (e[i].is_zero()) continue;
        for (size_t p = 0; p < n; ++p)
            for (size_t q = 0; q < n; ++q) {
                const K& d = h.coalg.comult(i, p, q);
                if (d.is_zero()) continue;
                Vec<K> l = h.alg.mul(e, unit_vec<K>(n, p));
                Vec<K> r = h.alg.mul(unit_vec<K>(n, p), e);
                for (size_t k = 0; k < n; ++k) {
                    if (!l[k].is_zero()) lhs[k * n + q] += e[i] * d * l[k];
                    if (!r[k].is_zero()) rhs[k * n + q] += e[i] * d * r[k];
                }
            }
        for (size_t j = 0; j < n; ++j) ee[i * n + j] = e[i] * e[j];
    }
    if (!(lhs == ee) || !(rhs == ee))
        throw error("central idempotent: (e(x)1)Delta(e) = e(x)e = Delta(e)(e(x)1) fails");

    AlgebraData<K> a;
    a.dim = 1;
    a.mult = Tensor3<K>(1, 1, 1);
    a.mult(0, 0, 0) = K::one();
    a.unit = {K::one()};
    a.basis_names = {"1"};
    Tensor3<K> rho_l(1, n, 1), rho_r(1, 1, n);
    for (size_t i = 0; i < n; ++i) {
        rho_l(0, i, 0) = e[i];
        rho_r(0, 0, i) = e[i];
    }
    PartialBimoduleData<K> d = coaction_to_action(h, a, rho_l, rho_r);
    auto rep = check_partial_bimodule(d, "central idempotent example");
    if (!rep.ok()) throw error("central_idempotent_example: construction fails its own checks");
    return d;
}

template <Field K>
PartialBimoduleData<K> central_idempotent_kz2() {
    HopfData<K> h = group_algebra<K>(2);
    K hf = half<K>();
    return central_idempotent_example(h, Vec<K>{hf, hf});
}

// Skew pair on kZ_n: sigma(g^a, g^b) = w^(ab) for a primitive n-th root of
// unity w. Over Q only n <= 2 is possible; over F_p the root is searched for.
template <Field K>
SkewPairData<K> zn_skew_pair(size_t n) {
    HopfData<K> h = group_algebra<K>(n);
    K omega = K::zero();
    bool found = false;
    if (n == 1) { omega = K::one(); found = true; }
    else if (n == 2) {
        if (!K::from_int(2).is_zero()) { omega = -K::one(); found = true; }
    } else if constexpr (std::is_same_v<K, Fp>) {
        for (std::uint64_t c = 2; c < Fp::modulus() && !found; ++c) {
            Fp w(static_cast<long>(c)), acc = w;
            size_t ord = 1;
            while (!acc.is_one() && ord <= n) { acc *= w; ++ord; }
            if (ord == n && acc.is_one()) { omega = w; found = true; }
        }
    }
    if (!found)
        throw error("zn_skew_pair: the field has no primitive " + std::to_string(n) +
                    "-th root of unity");
    SkewPairData<K> s;
    s.A = h;
    s.H = h;
    s.sigma = Matrix<K>(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            K v = K::one();
            for (size_t t = 0; t < (i * j) % n; ++t) v *= omega;
            s.sigma(i, j) = v;
        }
    auto rep = check_skew_pair(s, "kZ" + std::to_string(n) + " skew pair");
    if (!rep.ok()) throw error("zn_skew_pair: conditions (1)-(3) fail");
    return s;
}

// kZ2 acting on itself through the sign automorphism g . (alpha + beta g) =
// alpha - beta g, on both sides; the canonical small global bimodule algebra.
template <Field K>
GlobalBimoduleData<K> global_sign_kz2() {
    GlobalBimoduleData<K> g;
    g.H = group_algebra<K>(2);
    g.A = g.H.alg;
    g.left = Tensor3<K>(2, 2, 2);
    g.right = Tensor3<K>(2, 2, 2);
    for (size_t a = 0; a < 2; ++a) {
        g.left(0, a, a) = K::one();
        g.right(0, a, a) = K::one();
    }
    g.left(1, 0, 0) = K::one();
    g.left(1, 1, 1) = -K::one();
    g.right(1, 0, 0) = K::one();
    g.right(1, 1, 1) = -K::one();
    auto rep = check_global_bimodule(g, "sign action of kZ2");
    if (!rep.ok()) throw error("global_sign_kz2: construction fails its own checks");
    return g;
}

// Trivial global action h |> a = eps(h) a = a <| h on any algebra.
template <Field K>
GlobalBimoduleData<K> global_trivial(const HopfData<K>& h, const AlgebraData<K>& a) {
    GlobalBimoduleData<K> g;
    g.H = h;
    g.A = a;
    g.left = Tensor3<K>(h.dim(), a.dim, a.dim);
    g.right = Tensor3<K>(h.dim(), a.dim, a.dim);
    for (size_t i = 0; i < h.dim(); ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            g.left(i, j, j) = h.coalg.counit[i];
            g.right(i, j, j) = h.coalg.counit[i];
        }
    auto rep = check_global_bimodule(g, "trivial action");
    if (!rep.ok()) throw error("global_trivial: construction fails its own checks");
    return g;
}

template <Field K>
GlobalBimoduleData<K> global_trivial_h4() {
    return global_trivial(sweedler_h4<K>(), dual_numbers_algebra<K>());
}

struct CatalogInfo {
    std::string name;
    std::string kind;        // hopf | partial-bimodule | global-bimodule | skew-pair
    std::string provenance;  // statement the entry comes from
};

inline const std::vector<CatalogInfo>& catalog_list() {
    static const std::vector<CatalogInfo> entries = {
        {"h4", "hopf", "Ex 3.6"},
        {"h4-dual", "hopf", "Ex 3.6"},
        {"kz2", "hopf", "§1"},
        {"kz3", "hopf", "§1"},
        {"kx-in-h4", "partial-bimodule", "Ex 3.6"},
        {"central-idempotent-kz2", "partial-bimodule", "§3"},
        {"z2-skew-action", "partial-bimodule", "Ex 3.5"},
        {"z2-skew-pair", "skew-pair", "Ex 3.5 / Def 3.4"},
        {"global-sign-kz2", "global-bimodule", "Lemma 3.8"},
        {"global-trivial-h4", "global-bimodule", "Lemma 3.8"},
    };
    return entries;
}

template <Field K>
HopfData<K> catalog_hopf(const std::string& name) {
    if (name == "h4") return sweedler_h4<K>();
    if (name == "h4-dual") return h4_dual_named<K>();
    if (name == "kz2") return group_algebra<K>(2);
    if (name == "kz3") return group_algebra<K>(3);
    throw error("catalog: unknown hopf entry '" + name + "'");
}

template <Field K>
PartialBimoduleData<K> catalog_bimodule(const std::string& name) {
    if (name == "kx-in-h4") return kx_in_h4_bimodule<K>();
    if (name == "central-idempotent-kz2") return central_idempotent_kz2<K>();
    if (name == "z2-skew-action") return skew_pair_action(zn_skew_pair<K>(2));
    if (name == "global-sign-kz2") return global_sign_kz2<K>().as_partial();
    if (name == "global-trivial-h4") return global_trivial_h4<K>().as_partial();
    throw error("catalog: unknown bimodule entry '" + name + "'");
}

} // namespace psmash
