#include "brauercat/enhanced.hpp"

#include <algorithm>

#include "brauercat/errors.hpp"

namespace brauercat {

EnhancedDiagram make_enhanced_diagram(int source, int target, std::vector<int> legs,
                                      std::vector<std::pair<int, int>> pairs) {
    const int n = source + target;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int l : legs) {
        if (l < 0 || l >= n) throw Error("vertex leg out of range");
        ++deg[static_cast<std::size_t>(l)];
    }
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) throw Error("pair out of range");
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    for (int d : deg)
        if (d != 1) throw Error("legs and pairs must partition the boundary");
    if (!std::is_sorted(legs.begin(), legs.end()))
        throw Error("vertex legs must be strictly increasing in canonical form");
    canonicalize_pairs(pairs);
    return EnhancedDiagram{source, target, std::move(legs), std::move(pairs)};
}

EnhancedMorphism::EnhancedMorphism(int m, int source, int target)
    : m_(m), source_(source), target_(target) {
    if (m < 2) throw Error("the enhanced category needs m >= 2");
}

void EnhancedMorphism::add_term(const EnhancedDiagram& d, const Rational& coeff) {
    if (d.source != source_ || d.target != target_)
        throw ArityError("term arity does not match morphism arity");
    if (d.has_delta() && static_cast<int>(d.delta_legs.size()) != m_)
        throw Error("vertex valence does not match m");
    if (coeff == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (terms_.size() >= term_cap())
            throw CapExceeded("term bound exceeded (" + std::to_string(term_cap()) + ")");
        terms_.emplace(d, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

EnhancedMorphism EnhancedMorphism::operator+(const EnhancedMorphism& o) const {
    if (m_ != o.m_) throw Error("mixed m");
    if (source_ != o.source_ || target_ != o.target_)
        throw ArityError("cannot add morphisms with different arities");
    EnhancedMorphism out = *this;
    for (const auto& [d, c] : o.terms_) out.add_term(d, c);
    return out;
}

EnhancedMorphism EnhancedMorphism::operator-(const EnhancedMorphism& o) const {
    return *this + o.scaled(Rational(-1));
}

EnhancedMorphism EnhancedMorphism::scaled(const Rational& s) const {
    EnhancedMorphism out(m_, source_, target_);
    if (s == 0) return out;
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, c * s);
    return out;
}

EnhancedMorphism delta_generator(int m) {
    EnhancedMorphism out(m, 0, m);
    std::vector<int> legs(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) legs[static_cast<std::size_t>(i)] = i;
    out.add_term(make_enhanced_diagram(0, m, std::move(legs), {}), Rational(1));
    return out;
}

EnhancedMorphism from_brauer(const BrauerMorphism& f, int m) {
    EnhancedMorphism out(m, f.source(), f.target());
    for (const auto& [d, c] : f.terms())
        out.add_term(EnhancedDiagram{d.source, d.target, {}, d.pairs},
                     c.evaluate(Rational(m)));
    return out;
}

namespace {

// Pre-canonical state of a glued diagram: strand edges over an expanded
// node set, plus up to two vertex leg lists (in sign-relevant order).
struct Glued {
    int n_bottom = 0;
    int n_top = 0;
    int n_middle = 0;
    std::vector<std::pair<int, int>> strand_edges;  // finals/middles node ids
    std::vector<std::vector<int>> vertices;          // ordered legs, node ids
};

// Resolves a glued state to canonical terms:
//   closed loop                -> factor m
//   strand joining two legs of one vertex -> 0 (harmonicity)
//   leg permutation            -> sorted legs, sign into the coefficient
//   two vertices               -> signed sum over all leg-to-leg wirings
void resolve(const Glued& g, int m, const Rational& coeff,
             std::vector<std::pair<EnhancedDiagram, Rational>>& out) {
    if (g.vertices.size() > 2) throw Error("more than two vertices in one gluing");
    const int n_final = g.n_bottom + g.n_top;
    int n_legs = 0;
    for (const auto& v : g.vertices) n_legs += static_cast<int>(v.size());

    // node layout: finals, leg nodes, middles
    const int n_nodes = n_final + n_legs + g.n_middle;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.strand_edges.size() + static_cast<std::size_t>(n_legs));
    auto shift = [&](int node) { return node < n_final ? node : node + n_legs; };
    for (auto [a, b] : g.strand_edges) edges.emplace_back(shift(a), shift(b));
    std::vector<std::vector<int>> leg_nodes(g.vertices.size());
    {
        int next = n_final;
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            for (int pt : g.vertices[v]) {
                leg_nodes[v].push_back(next);
                edges.emplace_back(next, shift(pt));
                ++next;
            }
    }

    Traced tr = trace_graph(n_nodes, edges, n_final + n_legs);
    Rational c = coeff;
    for (int i = 0; i < tr.loops; ++i) c *= m;

    // classify connections
    auto owner = [&](int node) -> int {  // vertex index, or -1 for finals
        if (node < n_final) return -1;
        int rel = node - n_final;
        for (std::size_t v = 0; v < g.vertices.size(); ++v) {
            if (rel < static_cast<int>(g.vertices[v].size())) return static_cast<int>(v);
            rel -= static_cast<int>(g.vertices[v].size());
        }
        throw Error("bad node");
    };
    std::vector<std::pair<int, int>> final_pairs;
    std::map<int, int> leg_landing;                  // leg node -> final point
    std::vector<std::pair<int, int>> cross_links;    // leg node <-> leg node
    for (auto [a, b] : tr.ends) {
        const int oa = owner(a), ob = owner(b);
        if (oa == -1 && ob == -1) {
            final_pairs.emplace_back(a, b);
        } else if (oa == -1) {
            leg_landing[b] = a;
        } else if (ob == -1) {
            leg_landing[a] = b;
        } else if (oa == ob) {
            return;  // two legs of the same vertex joined: the term is zero
        } else {
            cross_links.emplace_back(a, b);
        }
    }

    if (g.vertices.size() == 2) {
        // fuse: the pair of vertices is replaced by the signed sum over all
        // leg-to-leg wirings, then each branch re-traced
        const int mm = static_cast<int>(g.vertices[0].size());
        for (const auto& pi : all_permutations(mm)) {
            // mini-graph over finals + leg nodes: connections plus wiring
            std::vector<std::pair<int, int>> mini = final_pairs;
            for (auto [l, f] : leg_landing) mini.emplace_back(l, f);
            for (auto [a, b] : cross_links) mini.emplace_back(a, b);
            for (int k = 0; k < mm; ++k)
                mini.emplace_back(leg_nodes[0][static_cast<std::size_t>(k)],
                                  leg_nodes[1][static_cast<std::size_t>(pi[static_cast<std::size_t>(k)])]);
            Traced sub = trace_graph(n_final + n_legs, mini, n_final);
            Rational sc = c * permutation_sign(pi);
            for (int i = 0; i < sub.loops; ++i) sc *= m;
            std::vector<std::pair<int, int>> pairs = sub.ends;
            canonicalize_pairs(pairs);
            out.emplace_back(EnhancedDiagram{g.n_bottom, g.n_top, {}, std::move(pairs)}, sc);
        }
        return;
    }

    canonicalize_pairs(final_pairs);
    if (g.vertices.size() == 1) {
        std::vector<int> landed;
        landed.reserve(leg_nodes[0].size());
        for (int ln : leg_nodes[0]) {
            auto it = leg_landing.find(ln);
            if (it == leg_landing.end()) throw Error("dangling vertex leg");
            landed.push_back(it->second);
        }
        const int sign = sort_with_sign(landed);
        out.emplace_back(EnhancedDiagram{g.n_bottom, g.n_top, std::move(landed),
                                         std::move(final_pairs)},
                         c * sign);
        return;
    }
    out.emplace_back(EnhancedDiagram{g.n_bottom, g.n_top, {}, std::move(final_pairs)}, c);
}

// g after f at diagram level; node layout per resolve()
Glued glue_composition(const EnhancedDiagram& a, const EnhancedDiagram& b) {
    const int s = a.source, u = a.target, t = b.target;
    Glued g;
    g.n_bottom = s;
    g.n_top = t;
    g.n_middle = u;
    const int n_final = s + t;
    auto map_a = [&](int p) { return p < s ? p : n_final + (p - s); };
    auto map_b = [&](int p) { return p < u ? n_final + p : s + (p - u); };
    for (auto [p, q] : a.pairs) g.strand_edges.emplace_back(map_a(p), map_a(q));
    for (auto [p, q] : b.pairs) g.strand_edges.emplace_back(map_b(p), map_b(q));
    if (a.has_delta()) {
        g.vertices.emplace_back();
        for (int l : a.delta_legs) g.vertices.back().push_back(map_a(l));
    }
    if (b.has_delta()) {
        g.vertices.emplace_back();
        for (int l : b.delta_legs) g.vertices.back().push_back(map_b(l));
    }
    return g;
}

Glued glue_tensor(const EnhancedDiagram& a, const EnhancedDiagram& b) {
    const int s = a.source + b.source;
    Glued g;
    g.n_bottom = s;
    g.n_top = a.target + b.target;
    auto map_a = [&](int p) { return p < a.source ? p : s + (p - a.source); };
    auto map_b = [&](int p) {
        return p < b.source ? a.source + p : s + a.target + (p - b.source);
    };
    for (auto [p, q] : a.pairs) g.strand_edges.emplace_back(map_a(p), map_a(q));
    for (auto [p, q] : b.pairs) g.strand_edges.emplace_back(map_b(p), map_b(q));
    if (a.has_delta()) {
        g.vertices.emplace_back();
        for (int l : a.delta_legs) g.vertices.back().push_back(map_a(l));
    }
    if (b.has_delta()) {
        g.vertices.emplace_back();
        for (int l : b.delta_legs) g.vertices.back().push_back(map_b(l));
    }
    return g;
}

}  // namespace

EnhancedMorphism compose(const EnhancedMorphism& f, const EnhancedMorphism& g) {
    if (f.m() != g.m()) throw Error("compose: mixed m");
    if (f.target() != g.source())
        throw ArityError("compose: middle arity mismatch (" + std::to_string(f.target()) +
                         " vs " + std::to_string(g.source()) + ")");
    EnhancedMorphism out(f.m(), f.source(), g.target());
    std::vector<std::pair<EnhancedDiagram, Rational>> terms;
    for (const auto& [da, ca] : f.terms())
        for (const auto& [db, cb] : g.terms()) {
            terms.clear();
            resolve(glue_composition(da, db), f.m(), ca * cb, terms);
            for (auto& [d, c] : terms) out.add_term(d, c);
        }
    return out;
}

EnhancedMorphism tensor(const EnhancedMorphism& f, const EnhancedMorphism& g) {
    if (f.m() != g.m()) throw Error("tensor: mixed m");
    EnhancedMorphism out(f.m(), f.source() + g.source(), f.target() + g.target());
    std::vector<std::pair<EnhancedDiagram, Rational>> terms;
    for (const auto& [da, ca] : f.terms())
        for (const auto& [db, cb] : g.terms()) {
            terms.clear();
            resolve(glue_tensor(da, db), f.m(), ca * cb, terms);
            for (auto& [d, c] : terms) out.add_term(d, c);
        }
    return out;
}

EnhancedMorphism dual(const EnhancedMorphism& f) {
    const int s = f.source(), t = f.target();
    EnhancedMorphism out(f.m(), t, s);
    auto flip = [&](int p) { return p < s ? t + p : p - s; };
    for (const auto& [d, c] : f.terms()) {
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(d.pairs.size());
        for (auto [p, q] : d.pairs) pairs.emplace_back(flip(p), flip(q));
        canonicalize_pairs(pairs);
        std::vector<int> legs;
        legs.reserve(d.delta_legs.size());
        for (int l : d.delta_legs) legs.push_back(flip(l));
        const int sign = sort_with_sign(legs);
        out.add_term(EnhancedDiagram{t, s, std::move(legs), std::move(pairs)}, c * sign);
    }
    return out;
}

EnhancedMorphism rotate_up(const EnhancedMorphism& f, int q) {
    if (q < 0 || q > f.source()) throw ArityError("rotate_up: arity underflow");
    EnhancedMorphism cur = f;
    for (int step = 0; step < q; ++step) {
        const int s = cur.source();
        cur = compose(from_brauer(tensor(identity_morphism(s - 1), generator(Gen::U)), f.m()),
                      tensor(cur, from_brauer(generator(Gen::I), f.m())));
    }
    return cur;
}

EnhancedMorphism rotate_down(const EnhancedMorphism& f, int q) {
    if (q < 0 || q > f.target()) throw ArityError("rotate_down: arity underflow");
    EnhancedMorphism cur = f;
    for (int step = 0; step < q; ++step) {
        const int t = cur.target();
        cur = compose(tensor(cur, from_brauer(generator(Gen::I), f.m())),
                      from_brauer(tensor(identity_morphism(t - 1), generator(Gen::A)), f.m()));
    }
    return cur;
}

EnhancedMorphism normalize(const EnhancedMorphism& f) {
    EnhancedMorphism out(f.m(), f.source(), f.target());
    std::vector<std::pair<EnhancedDiagram, Rational>> terms;
    for (const auto& [d, c] : f.terms()) {
        Glued g;
        g.n_bottom = d.source;
        g.n_top = d.target;
        g.strand_edges = d.pairs;
        if (d.has_delta()) g.vertices.push_back(d.delta_legs);
        terms.clear();
        resolve(g, f.m(), c, terms);
        for (auto& [nd, nc] : terms) out.add_term(nd, nc);
    }
    return out;
}

Rational closed_scalar(const EnhancedMorphism& f) {
    if (f.source() != 0 || f.target() != 0) throw ArityError("not a closed morphism");
    if (f.is_zero()) return Rational(0);
    return f.terms().begin()->second;
}

}  // namespace brauercat
