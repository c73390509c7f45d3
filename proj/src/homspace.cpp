#include "brauercat/homspace.hpp"

#include <algorithm>
#include <sstream>

#include "brauercat/errors.hpp"

namespace brauercat {

namespace {

// m-subsets of {0..n-1} in lexicographic order
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<EnhancedDiagram> spanning_set(int m, int s, int t) {
    const int r = s + t;
    if (r > kSpanningCap)
        throw CapExceeded("spanning set cap exceeded: s+t = " + std::to_string(r));
    std::vector<EnhancedDiagram> out;
    std::vector<int> pts(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pts[static_cast<std::size_t>(i)] = i;
    if (r % 2 == 0)
        for (auto& pairs : all_matchings(pts))
            out.push_back(EnhancedDiagram{s, t, {}, std::move(pairs)});
    if (r >= m && (r - m) % 2 == 0) {
        for (const auto& legs : subsets(r, m)) {
            std::vector<int> rest;
            for (int p : pts)
                if (!std::binary_search(legs.begin(), legs.end(), p)) rest.push_back(p);
            for (auto& pairs : all_matchings(rest))
                out.push_back(EnhancedDiagram{s, t, legs, std::move(pairs)});
        }
    }
    return out;
}

EnhancedMorphism diagram_morphism(int m, const EnhancedDiagram& d) {
    EnhancedMorphism f(m, d.source, d.target);
    f.add_term(d, Rational(1));
    return f;
}

Rational pairing(const EnhancedMorphism& x, const EnhancedMorphism& y) {
    if (x.m() != y.m()) throw Error("pairing: mixed m");
    if (x.source() != y.source() || x.target() != y.target())
        throw ArityError("pairing: arity mismatch");
    const EnhancedMorphism xr = rotate_up(x, x.source());
    const EnhancedMorphism yr = rotate_up(y, y.source());
    return closed_scalar(compose(xr, dual(yr)));
}

GramMatrix gram_matrix(int m, int s, int t) {
    GramMatrix g;
    g.m = m;
    g.s = s;
    g.t = t;
    g.basis = spanning_set(m, s, t);
    const std::size_t n = g.basis.size();
    // rotate once, pair all
    std::vector<EnhancedMorphism> rotated;
    rotated.reserve(n);
    for (const auto& d : g.basis) rotated.push_back(rotate_up(diagram_morphism(m, d), s));
    g.entries.assign(n, Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Rational v = closed_scalar(compose(rotated[i], dual(rotated[j])));
            g.entries[i][j] = v;
            g.entries[j][i] = v;
        }
    }
    return g;
}

namespace {

Mat eval_rows(int m, const std::vector<EnhancedDiagram>& basis) {
    Mat rows;
    rows.reserve(basis.size());
    for (const auto& d : basis) rows.push_back(eval_morphism(diagram_morphism(m, d)).entries());
    return rows;
}

}  // namespace

long dim_hom(int m, int s, int t, DimRoute route, const std::vector<long>* dtab) {
    switch (route) {
        case DimRoute::Gram:
            return static_cast<long>(rank_of(gram_matrix(m, s, t).entries));
        case DimRoute::Functor:
            return static_cast<long>(rank_of(eval_rows(m, spanning_set(m, s, t))));
        case DimRoute::Formula: {
            const int r = s + t;
            std::vector<long> local;
            if (!dtab) {
                local = d_table(m, r);
                dtab = &local;
            }
            const BigInt count =
                binomial(r, m) * d_of(*dtab, r - m) + d_of(*dtab, r);
            return static_cast<long>(count);
        }
    }
    throw Error("unknown route");
}

std::vector<EnhancedMorphism> sft_kernel(int m, int s, int t) {
    const GramMatrix g = gram_matrix(m, s, t);
    const Mat null = nullspace(g.entries, g.basis.size());
    const Mat rows = eval_rows(m, g.basis);

    // double containment: every Gram-null combination evaluates to zero,
    // and the evaluated rank equals the Gram rank
    std::vector<EnhancedMorphism> out;
    for (const auto& c : null) {
        EnhancedMorphism f(m, s, t);
        Vec image(rows.empty() ? 0 : rows[0].size(), Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            f.add_term(g.basis[j], c[j]);
            for (std::size_t k = 0; k < image.size(); ++k)
                if (rows[j][k] != 0) image[k] += c[j] * rows[j][k];
        }
        if (std::any_of(image.begin(), image.end(),
                        [](const Rational& v) { return v != 0; }))
            throw Error("Gram-null combination has a nonzero tensor image");
        out.push_back(std::move(f));
    }
    if (rank_of(Mat(g.entries)) != rank_of(Mat(rows)))
        throw Error("Gram rank and functor rank disagree");
    return out;
}

std::vector<DimensionRow> dimension_report(int m, int r_max) {
    const std::vector<long> dtab = d_table(m, r_max);
    std::vector<DimensionRow> rows;
    for (int r = 0; r <= r_max; ++r) {
        for (int s = 0; s <= r; ++s) {
            const int t = r - s;
            DimensionRow row;
            row.m = m;
            row.s = s;
            row.t = t;
            row.gram = dim_hom(m, s, t, DimRoute::Gram);
            row.functor = dim_hom(m, s, t, DimRoute::Functor);
            row.formula = dim_hom(m, s, t, DimRoute::Formula, &dtab);
            row.agree = row.gram == row.functor && row.functor == row.formula;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string dimension_report_csv(const std::vector<DimensionRow>& rows) {
    std::ostringstream os;
    os << "m,s,t,gram,functor,formula,agree\n";
    for (const auto& r : rows)
        os << r.m << "," << r.s << "," << r.t << "," << r.gram << "," << r.functor << ","
           << r.formula << "," << (r.agree ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace brauercat
