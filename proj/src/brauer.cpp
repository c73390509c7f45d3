#include "brauercat/brauer.hpp"

#include <algorithm>

#include "brauercat/errors.hpp"

namespace brauercat {

BrauerMorphism BrauerMorphism::from_diagram(Diagram d, DeltaPolynomial coeff) {
    BrauerMorphism f(d.source, d.target);
    f.add_term(d, coeff);
    return f;
}

void BrauerMorphism::add_term(const Diagram& d, const DeltaPolynomial& coeff) {
    if (d.source != source_ || d.target != target_)
        throw ArityError("term arity does not match morphism arity");
    if (coeff.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (terms_.size() >= term_cap())
            throw CapExceeded("term bound exceeded (" + std::to_string(term_cap()) + ")");
        terms_.emplace(d, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BrauerMorphism BrauerMorphism::operator+(const BrauerMorphism& o) const {
    if (source_ != o.source_ || target_ != o.target_)
        throw ArityError("cannot add morphisms with different arities");
    BrauerMorphism out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, c);
    return out;
}

BrauerMorphism BrauerMorphism::operator-(const BrauerMorphism& o) const {
    return *this + o.scaled(DeltaPolynomial(Rational(-1)));
}

BrauerMorphism BrauerMorphism::scaled(const DeltaPolynomial& s) const {
    BrauerMorphism out(source_, target_);
    if (s.is_zero()) return out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, c * s);
    return out;
}

BrauerMorphism generator(Gen kind) {
    switch (kind) {
        case Gen::I: return BrauerMorphism::from_diagram(make_diagram(1, 1, {{0, 1}}));
        case Gen::U: return BrauerMorphism::from_diagram(make_diagram(0, 2, {{0, 1}}));
        case Gen::A: return BrauerMorphism::from_diagram(make_diagram(2, 0, {{0, 1}}));
        case Gen::X: return BrauerMorphism::from_diagram(make_diagram(2, 2, {{0, 3}, {1, 2}}));
    }
    throw Error("unknown generator");
}

BrauerMorphism identity_morphism(int r) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(r));
    for (int p = 0; p < r; ++p) pairs.emplace_back(p, r + p);
    return BrauerMorphism::from_diagram(make_diagram(r, r, std::move(pairs)));
}

namespace {

// Concatenate two diagrams: a: s->u below, b: u->t above. Result pairs are
// over s bottom + t top points; each eliminated loop is reported.
std::pair<std::vector<std::pair<int, int>>, int> glue(const Diagram& a, const Diagram& b) {
    const int s = a.source, u = a.target, t = b.target;
    // nodes: 0..s-1 bottom finals, s..s+t-1 top finals, then u middles
    const int n_end = s + t;
    auto map_a = [&](int p) { return p < s ? p : n_end + (p - s); };
    auto map_b = [&](int p) { return p < u ? n_end + p : s + (p - u); };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(a.pairs.size() + b.pairs.size());
    for (auto [p, q] : a.pairs) edges.emplace_back(map_a(p), map_a(q));
    for (auto [p, q] : b.pairs) edges.emplace_back(map_b(p), map_b(q));
    Traced tr = trace_graph(n_end + u, edges, n_end);
    canonicalize_pairs(tr.ends);
    return {std::move(tr.ends), tr.loops};
}

}  // namespace

BrauerMorphism compose(const BrauerMorphism& f, const BrauerMorphism& g) {
    if (f.target() != g.source())
        throw ArityError("compose: middle arity mismatch (" + std::to_string(f.target()) +
                         " vs " + std::to_string(g.source()) + ")");
    BrauerMorphism out(f.source(), g.target());
    const DeltaPolynomial delta = DeltaPolynomial::delta();
    for (const auto& [da, ca] : f.terms()) {
        for (const auto& [db, cb] : g.terms()) {
            auto [pairs, loops] = glue(da, db);
            DeltaPolynomial coeff = ca * cb;
            for (int i = 0; i < loops; ++i) coeff *= delta;
            out.add_term(Diagram{f.source(), g.target(), std::move(pairs)}, coeff);
        }
    }
    return out;
}

BrauerMorphism tensor(const BrauerMorphism& f, const BrauerMorphism& g) {
    const int s = f.source() + g.source();
    const int t = f.target() + g.target();
    BrauerMorphism out(s, t);
    auto map_f = [&](int p) { return p < f.source() ? p : s + (p - f.source()); };
    auto map_g = [&](int p) {
        return p < g.source() ? f.source() + p : s + f.target() + (p - g.source());
    };
    for (const auto& [df, cf] : f.terms()) {
        for (const auto& [dg, cg] : g.terms()) {
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(df.pairs.size() + dg.pairs.size());
            for (auto [p, q] : df.pairs) pairs.emplace_back(map_f(p), map_f(q));
            for (auto [p, q] : dg.pairs) pairs.emplace_back(map_g(p), map_g(q));
            canonicalize_pairs(pairs);
            out.add_term(Diagram{s, t, std::move(pairs)}, cf * cg);
        }
    }
    return out;
}

BrauerMorphism dual(const BrauerMorphism& f) {
    const int s = f.source(), t = f.target();
    BrauerMorphism out(t, s);
    auto flip = [&](int p) { return p < s ? t + p : p - s; };
    for (const auto& [d, c] : f.terms()) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(d.pairs.size());
        for (auto [p, q] : d.pairs) pairs.emplace_back(flip(p), flip(q));
        canonicalize_pairs(pairs);
        out.add_term(Diagram{t, s, std::move(pairs)}, c);
    }
    return out;
}

BrauerMorphism permutation_morphism(const std::vector<int>& images) {
    const int r = static_cast<int>(images.size());
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= r || seen[static_cast<std::size_t>(v)])
            throw Error("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(images.size());
    for (int p = 0; p < r; ++p) pairs.emplace_back(p, r + images[static_cast<std::size_t>(p)]);
    return BrauerMorphism::from_diagram(make_diagram(r, r, std::move(pairs)));
}

BrauerMorphism antisymmetrizer(int r, int cap) {
    if (r < 0) throw Error("antisymmetrizer needs r >= 0");
    if (r > cap) {
        BigInt terms = factorial(r);
        throw CapExceeded("antisymmetrizer cap exceeded: rank " + std::to_string(r) +
                          " expands to " + terms.str() + " terms (cap rank " +
                          std::to_string(cap) + ")");
    }
    BrauerMorphism out(r, r);
    for (const auto& perm : all_permutations(r)) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(perm.size());
        for (int p = 0; p < r; ++p)
            pairs.emplace_back(p, r + perm[static_cast<std::size_t>(p)]);
        canonicalize_pairs(pairs);
        out.add_term(Diagram{r, r, std::move(pairs)},
                     DeltaPolynomial(Rational(permutation_sign(perm))));
    }
    return out;
}

BrauerMorphism rotate_up(const BrauerMorphism& f, int q) {
    if (q < 0 || q > f.source()) throw ArityError("rotate_up: arity underflow");
    BrauerMorphism cur = f;
    for (int step = 0; step < q; ++step) {
        const int s = cur.source();
        cur = compose(tensor(identity_morphism(s - 1), generator(Gen::U)),
                      tensor(cur, generator(Gen::I)));
    }
    return cur;
}

BrauerMorphism rotate_down(const BrauerMorphism& f, int q) {
    if (q < 0 || q > f.target()) throw ArityError("rotate_down: arity underflow");
    BrauerMorphism cur = f;
    for (int step = 0; step < q; ++step) {
        const int t = cur.target();
        cur = compose(tensor(cur, generator(Gen::I)),
                      tensor(identity_morphism(t - 1), generator(Gen::A)));
    }
    return cur;
}

namespace {

// nested cups 0 -> 2r: pairs (k, 2r-1-k)
BrauerMorphism nested_cups(int r) {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < r; ++k) pairs.emplace_back(k, 2 * r - 1 - k);
    return BrauerMorphism::from_diagram(make_diagram(0, 2 * r, std::move(pairs)));
}

DeltaPolynomial scalar_part(const BrauerMorphism& f) {
    if (f.source() != 0 || f.target() != 0) throw ArityError("not a closed morphism");
    if (f.is_zero()) return {};
    return f.terms().begin()->second;
}

}  // namespace

DeltaPolynomial closure(const BrauerMorphism& f) {
    if (f.source() != f.target()) throw ArityError("closure needs equal arities");
    const int r = f.source();
    return scalar_part(compose(rotate_up(f, r), dual(nested_cups(r))));
}

DeltaPolynomial pairing_generic(const BrauerMorphism& x, const BrauerMorphism& y) {
    if (x.source() != 0 || y.source() != 0 || x.target() != y.target())
        throw ArityError("pairing needs two 0->r morphisms of equal arity");
    return scalar_part(compose(x, dual(y)));
}

Report verify_reduction_lemma(int r) {
    if (r < 2) throw Error("reduction identities need r >= 2");
    Report rep;

    // (1)  Sigma_r = Sigma_{r-1} (x) I
    //      - (r-2)!^{-1} (Sigma_{r-1} (x) I) . (I^{r-2} (x) X) . (Sigma_{r-1} (x) I)
    {
        const BrauerMorphism lhs = antisymmetrizer(r);
        const BrauerMorphism side = tensor(antisymmetrizer(r - 1), generator(Gen::I));
        const BrauerMorphism swap_last =
            tensor(identity_morphism(r - 2), generator(Gen::X));
        const BrauerMorphism sandwich = compose(compose(side, swap_last), side);
        const BrauerMorphism rhs =
            side - sandwich.scaled(DeltaPolynomial(Rational(1) / Rational(factorial(r - 2))));
        rep.push_back({"reduction identity (1), r=" + std::to_string(r), lhs == rhs,
                       lhs == rhs ? "" : "expansion mismatch"});
    }

    // (2)  partial trace of the last strand of Sigma_r = -(r-1-delta) Sigma_{r-1}
    {
        const BrauerMorphism sig = antisymmetrizer(r);
        const BrauerMorphism lhs = compose(
            compose(tensor(identity_morphism(r - 1), generator(Gen::U)),
                    tensor(sig, generator(Gen::I))),
            tensor(identity_morphism(r - 1), generator(Gen::A)));
        const BrauerMorphism rhs = antisymmetrizer(r - 1).scaled(
            DeltaPolynomial(std::vector<Rational>{Rational(-(r - 1)), Rational(1)}));
        rep.push_back({"reduction identity (2), r=" + std::to_string(r), lhs == rhs,
                       lhs == rhs ? "" : "expansion mismatch"});
    }
    return rep;
}

}  // namespace brauercat
