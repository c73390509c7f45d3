#include "brauercat/tensor.hpp"

#include <algorithm>

#include "brauercat/errors.hpp"

namespace brauercat {

namespace {

std::size_t checked_size(int m, int points) {
    std::size_t n = 1;
    for (int i = 0; i < points; ++i) {
        n *= static_cast<std::size_t>(m);
        if (n > kTensorEntryGuard)
            throw CapExceeded("tensor entry guard exceeded: " + std::to_string(m) + "^" +
                              std::to_string(points) + " > " +
                              std::to_string(kTensorEntryGuard));
    }
    return n;
}

}  // namespace

Tensor::Tensor(int m, int source, int target)
    : m_(m), source_(source), target_(target),
      entries_(checked_size(m, source + target), Rational(0)) {
    if (m < 1) throw Error("tensor needs m >= 1");
}

bool Tensor::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& x) { return x == 0; });
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (m_ != o.m_ || source_ != o.source_ || target_ != o.target_)
        throw ArityError("tensor shape mismatch");
    Tensor out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += o.entries_[i];
    return out;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o.scaled(Rational(-1)); }

Tensor Tensor::scaled(const Rational& s) const {
    Tensor out = *this;
    for (auto& x : out.entries_) x *= s;
    return out;
}

namespace {

// iterate multi-indices as digit vectors
struct MultiIndex {
    std::vector<int> digits;
    int m;
    explicit MultiIndex(int m_, int len) : digits(static_cast<std::size_t>(len), 0), m(m_) {}
    bool next() {
        for (std::size_t i = digits.size(); i-- > 0;) {
            if (++digits[i] < m) return true;
            digits[i] = 0;
        }
        return false;
    }
};

std::size_t flat_of(const std::vector<int>& digits, int m) {
    std::size_t f = 0;
    for (int d : digits) f = f * static_cast<std::size_t>(m) + static_cast<std::size_t>(d);
    return f;
}

// sign of the value sequence as a permutation of 0..m-1; 0 on repeats
int levi_civita(const std::vector<int>& vals) {
    std::vector<int> v = vals;
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && v[j - 1] > v[j]) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != static_cast<int>(i)) return 0;
    return sign;
}

void accumulate_diagram(Tensor& out, const EnhancedDiagram& d, const Rational& coeff,
                        int m) {
    const int n = d.source + d.target;
    if (n == 0) {
        out[0] += coeff;
        return;
    }
    MultiIndex idx(m, n);
    std::size_t flat = 0;
    do {
        bool match = true;
        for (auto [a, b] : d.pairs)
            if (idx.digits[static_cast<std::size_t>(a)] !=
                idx.digits[static_cast<std::size_t>(b)]) {
                match = false;
                break;
            }
        if (!match) {
            ++flat;
            continue;
        }
        Rational v = coeff;
        if (d.has_delta()) {
            std::vector<int> legs;
            legs.reserve(d.delta_legs.size());
            for (int l : d.delta_legs) legs.push_back(idx.digits[static_cast<std::size_t>(l)]);
            const int eps = levi_civita(legs);
            if (eps == 0) {
                ++flat;
                continue;
            }
            v *= eps;
        }
        out[flat] += v;
        ++flat;
    } while (idx.next());
}

}  // namespace

Tensor eval_generator(Gen kind, int m) {
    const BrauerMorphism f = generator(kind);
    return eval_morphism(f, m);
}

Tensor lambda_tensor(int m) {
    return delta_vertex_tensor(m).scaled(Rational(1) / Rational(factorial(m)));
}

Tensor delta_vertex_tensor(int m) {
    Tensor out(m, 0, m);
    EnhancedDiagram d;
    d.source = 0;
    d.target = m;
    for (int i = 0; i < m; ++i) d.delta_legs.push_back(i);
    accumulate_diagram(out, d, Rational(1), m);
    return out;
}

Tensor eval_morphism(const BrauerMorphism& f, int m) {
    Tensor out(m, f.source(), f.target());
    for (const auto& [d, c] : f.terms())
        accumulate_diagram(out, EnhancedDiagram{d.source, d.target, {}, d.pairs},
                           c.evaluate(Rational(m)), m);
    return out;
}

Tensor eval_morphism(const EnhancedMorphism& f) {
    Tensor out(f.m(), f.source(), f.target());
    for (const auto& [d, c] : f.terms()) accumulate_diagram(out, d, c, f.m());
    return out;
}

Tensor compose(const Tensor& f, const Tensor& g) {
    if (f.m() != g.m()) throw Error("compose: mixed m");
    if (f.target() != g.source()) throw ArityError("compose: middle arity mismatch");
    const int m = f.m();
    const std::size_t ni = checked_size(m, f.source());
    const std::size_t nu = checked_size(m, f.target());
    const std::size_t nk = checked_size(m, g.target());
    checked_size(m, f.source() + g.target());
    Tensor out(m, f.source(), g.target());
    for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t u = 0; u < nu; ++u) {
            const Rational& fv = f[i * nu + u];
            if (fv == 0) continue;
            for (std::size_t k = 0; k < nk; ++k) {
                const Rational& gv = g[u * nk + k];
                if (gv == 0) continue;
                out[i * nk + k] += fv * gv;
            }
        }
    return out;
}

Tensor tensor_product(const Tensor& f, const Tensor& g) {
    if (f.m() != g.m()) throw Error("tensor: mixed m");
    const int m = f.m();
    Tensor out(m, f.source() + g.source(), f.target() + g.target());
    const std::size_t fs = checked_size(m, f.source());
    const std::size_t ft = checked_size(m, f.target());
    const std::size_t gs = checked_size(m, g.source());
    const std::size_t gt = checked_size(m, g.target());
    // result layout: (f.bottom, g.bottom, f.top, g.top)
    for (std::size_t a = 0; a < fs; ++a)
        for (std::size_t b = 0; b < ft; ++b) {
            const Rational& fv = f[a * ft + b];
            if (fv == 0) continue;
            for (std::size_t c = 0; c < gs; ++c)
                for (std::size_t d = 0; d < gt; ++d) {
                    const Rational& gv = g[c * gt + d];
                    if (gv == 0) continue;
                    out[((a * gs + c) * ft + b) * gt + d] += fv * gv;
                }
        }
    return out;
}

Tensor transpose_tensor(const Tensor& f) {
    const int m = f.m();
    const std::size_t ns = checked_size(m, f.source());
    const std::size_t nt = checked_size(m, f.target());
    Tensor out(m, f.target(), f.source());
    for (std::size_t i = 0; i < ns; ++i)
        for (std::size_t j = 0; j < nt; ++j) out[j * ns + i] = f[i * nt + j];
    return out;
}

Tensor apply(const Tensor& f, const Tensor& x) {
    if (x.source() != 0) throw ArityError("apply expects a 0->s argument");
    return compose(x, f);
}

Rational bilinear_form(const Tensor& x, const Tensor& y) {
    if (x.m() != y.m() || x.source() != y.source() || x.target() != y.target())
        throw ArityError("bilinear form shape mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0 && y[i] != 0) acc += x[i] * y[i];
    return acc;
}

bool is_harmonic(const Tensor& x) {
    if (x.source() != 0) throw ArityError("harmonicity applies to 0->r tensors");
    const int r = x.target();
    if (r < 2) throw ArityError("harmonicity needs r >= 2");
    const int m = x.m();
    // contract slots (i, j); all (r choose 2) contractions must vanish
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            MultiIndex idx(m, r - 2);
            do {
                Rational acc(0);
                for (int a = 0; a < m; ++a) {
                    std::vector<int> full(static_cast<std::size_t>(r));
                    int src = 0;
                    for (int k = 0; k < r; ++k) {
                        if (k == i || k == j)
                            full[static_cast<std::size_t>(k)] = a;
                        else
                            full[static_cast<std::size_t>(k)] =
                                idx.digits[static_cast<std::size_t>(src++)];
                    }
                    acc += x[flat_of(full, m)];
                }
                if (acc != 0) return false;
            } while (r > 2 && idx.next());
        }
    return true;
}

Tensor pi_lambda(const Tensor& x) {
    if (x.source() != 0) throw ArityError("projection applies to 0->r tensors");
    const int m = x.m();
    const int r = x.target();
    if (r < m) throw ArityError("projection needs arity >= m");
    const Tensor lam = lambda_tensor(m);
    const Rational norm = bilinear_form(lam, lam);  // 1/m!
    const std::size_t head = checked_size(m, m);
    const std::size_t tail = checked_size(m, r - m);
    Tensor out(m, 0, r);
    for (std::size_t j = 0; j < tail; ++j) {
        Rational overlap(0);
        for (std::size_t i = 0; i < head; ++i)
            if (lam[i] != 0) overlap += lam[i] * x[i * tail + j];
        if (overlap == 0) continue;
        const Rational scale = overlap / norm;
        for (std::size_t i = 0; i < head; ++i)
            if (lam[i] != 0) out[i * tail + j] = lam[i] * scale;
    }
    return out;
}

Tensor slot_permute(const Tensor& x, const std::vector<int>& sigma) {
    if (x.source() != 0) throw ArityError("slot permutation applies to 0->r tensors");
    const int r = x.target();
    if (static_cast<int>(sigma.size()) != r) throw Error("permutation size mismatch");
    const int m = x.m();
    Tensor out(m, 0, r);
    if (r == 0) {
        out[0] = x[0];
        return out;
    }
    MultiIndex idx(m, r);
    std::size_t flat = 0;
    do {
        std::vector<int> src(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k)
            src[static_cast<std::size_t>(k)] =
                idx.digits[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])];
        const Rational& v = x[flat_of(src, m)];
        if (v != 0) out[flat] = v;
        ++flat;
    } while (idx.next());
    return out;
}

std::vector<Tensor> sym_span(const Tensor& seed) {
    if (seed.source() != 0) throw ArityError("orbit applies to 0->r tensors");
    const int r = seed.target();
    if (r > kSymSpanCap)
        throw CapExceeded("orbit cap exceeded: r = " + std::to_string(r) + " needs " +
                          factorial(r).str() + " images");
    std::vector<Tensor> out;
    for (const auto& sigma : all_permutations(r)) {
        Tensor img = slot_permute(seed, sigma);
        if (std::find(out.begin(), out.end(), img) == out.end())
            out.push_back(std::move(img));
    }
    return out;
}

Report verify_relations_under_eval(int m) {
    Report rep;
    const Tensor id = eval_generator(Gen::I, m);
    const Tensor cup = eval_generator(Gen::U, m);
    const Tensor cap = eval_generator(Gen::A, m);
    const Tensor swp = eval_generator(Gen::X, m);
    const Tensor vtx = delta_vertex_tensor(m);
    auto check = [&](const std::string& name, bool ok) { rep.push_back({name, ok, ""}); };

    // strand relations
    check("eval: loop closes to m",
          compose(cup, cap)[0] == Rational(m));
    check("eval: swap is an involution", compose(swp, swp) == tensor_product(id, id));
    check("eval: swap absorbs into the cup", compose(cup, swp) == cup);
    check("eval: snake straightens",
          compose(tensor_product(id, cup), tensor_product(cap, id)) == id);

    // vertex relations at every admissible slot
    auto id_pow = [&](int k) {
        Tensor t(m, 0, 0);
        t[0] = 1;
        for (int i = 0; i < k; ++i) t = tensor_product(t, id);
        return t;
    };
    for (int rpos = 0; rpos <= m - 2; ++rpos) {
        const Tensor capped = compose(
            vtx, tensor_product(tensor_product(id_pow(rpos), cap), id_pow(m - rpos - 2)));
        check("eval: harmonicity, slot " + std::to_string(rpos), capped.is_zero());
        const Tensor crossed = compose(
            vtx, tensor_product(tensor_product(id_pow(rpos), swp), id_pow(m - rpos - 2)));
        check("eval: leg swap negates, slot " + std::to_string(rpos),
              crossed == vtx.scaled(Rational(-1)));
    }

    // vertex fusion
    const Tensor left = compose(transpose_tensor(vtx), vtx);
    const Tensor sig = eval_morphism(antisymmetrizer(m), m);
    check("eval: vertex fusion equals the antisymmetrizer", left == sig);
    return rep;
}

Mat rational_rotation(int m, unsigned seed) {
    // deterministic product of Givens-style rotations with Pythagorean
    // cos/sin pairs; entries stay rational, determinant stays 1
    static const std::array<std::pair<int, std::pair<int, int>>, 3> triples = {
        std::pair<int, std::pair<int, int>>{5, {3, 4}},
        std::pair<int, std::pair<int, int>>{13, {5, 12}},
        std::pair<int, std::pair<int, int>>{25, {7, 24}}};
    Mat g(static_cast<std::size_t>(m), Vec(static_cast<std::size_t>(m), Rational(0)));
    for (int i = 0; i < m; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    unsigned state = seed * 2654435761u + 1u;
    const int rounds = 2 + static_cast<int>(seed % 3);
    for (int round = 0; round < rounds; ++round) {
        state = state * 1664525u + 1013904223u;
        const int a = static_cast<int>(state % static_cast<unsigned>(m));
        state = state * 1664525u + 1013904223u;
        int b = static_cast<int>(state % static_cast<unsigned>(m));
        if (a == b) b = (b + 1) % m;
        state = state * 1664525u + 1013904223u;
        const auto& [hyp, legs] = triples[state % triples.size()];
        const Rational c(legs.first, hyp), s(legs.second, hyp);
        // right-multiply by the rotation in the (a, b) plane
        for (int row = 0; row < m; ++row) {
            Rational& xa = g[static_cast<std::size_t>(row)][static_cast<std::size_t>(a)];
            Rational& xb = g[static_cast<std::size_t>(row)][static_cast<std::size_t>(b)];
            const Rational na = xa * c - xb * s;
            const Rational nb = xa * s + xb * c;
            xa = na;
            xb = nb;
        }
    }
    return g;
}

Tensor apply_group_element(const Mat& g, const Tensor& x) {
    if (x.source() != 0) throw ArityError("group action applies to 0->r tensors");
    const int m = x.m();
    const int r = x.target();
    Tensor cur = x;
    // one slot at a time
    for (int slot = 0; slot < r; ++slot) {
        Tensor nxt(m, 0, r);
        MultiIndex idx(m, r);
        std::size_t flat = 0;
        do {
            const Rational& v = cur[flat];
            ++flat;
            if (v == 0) continue;
            const int j = idx.digits[static_cast<std::size_t>(slot)];
            for (int i = 0; i < m; ++i) {
                const Rational& gij = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (gij == 0) continue;
                std::vector<int> digits = idx.digits;
                digits[static_cast<std::size_t>(slot)] = i;
                nxt[flat_of(digits, m)] += gij * v;
            }
        } while (idx.next());
        cur = std::move(nxt);
    }
    return cur;
}

}  // namespace brauercat
