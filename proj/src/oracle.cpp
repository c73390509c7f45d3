#include "brauercat/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "brauercat/errors.hpp"

namespace brauercat {

namespace {

long checked_dim(int m, int r) {
    long n = 1;
    for (int i = 0; i < r; ++i) {
        n *= m;
        if (n > kInvariantGuard)
            throw CapExceeded("invariant-space guard exceeded: " + std::to_string(m) + "^" +
                              std::to_string(r) + " > " + std::to_string(kInvariantGuard));
    }
    return n;
}

std::vector<int> digits_of(long flat, int m, int r) {
    std::vector<int> d(static_cast<std::size_t>(r));
    for (int k = r; k-- > 0;) {
        d[static_cast<std::size_t>(k)] = static_cast<int>(flat % m);
        flat /= m;
    }
    return d;
}

long flat_of(const std::vector<int>& digits, int m) {
    long f = 0;
    for (int d : digits) f = f * m + d;
    return f;
}

}  // namespace

Mat SparseAction::to_dense() const {
    Mat out(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), Rational(0)));
    for (auto [row, col, val] : entries)
        out[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] += val;
    return out;
}

void SparseAction::apply(const Vec& x, Vec& out) const {
    for (auto [row, col, val] : entries) {
        const Rational& xv = x[static_cast<std::size_t>(col)];
        if (xv != 0) out[static_cast<std::size_t>(row)] += val * xv;
    }
}

std::vector<SparseAction> so_action_matrices(int m, int r) {
    const long n = checked_dim(m, r);
    std::vector<SparseAction> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            SparseAction act;
            act.dim = n;
            // derivation: sum over slots of (E_ab - E_ba) applied in one slot
            for (long col = 0; col < n; ++col) {
                std::vector<int> d = digits_of(col, m, r);
                for (int k = 0; k < r; ++k) {
                    const int v = d[static_cast<std::size_t>(k)];
                    if (v == b) {
                        d[static_cast<std::size_t>(k)] = a;
                        act.entries.emplace_back(flat_of(d, m), col, 1);
                        d[static_cast<std::size_t>(k)] = b;
                    } else if (v == a) {
                        d[static_cast<std::size_t>(k)] = b;
                        act.entries.emplace_back(flat_of(d, m), col, -1);
                        d[static_cast<std::size_t>(k)] = a;
                    }
                }
            }
            out.push_back(std::move(act));
        }
    return out;
}

namespace {

// Sparse kernel vectors: list of (index, value).
using SparseVec = std::vector<std::pair<long, Rational>>;

// Kernel of the derivation of [[0,-1],[1,0]] on the p-fold power of Q^2,
// as dense vectors of length 2^p. Cached per p.
const Mat& rotation_block_kernel(int p) {
    static std::vector<Mat> cache;
    while (static_cast<int>(cache.size()) <= p) {
        const int q = static_cast<int>(cache.size());
        const long dim = 1L << q;
        // build the block action: values 0,1 in each slot
        Mat rows(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), Rational(0)));
        for (long col = 0; col < dim; ++col) {
            for (int k = 0; k < q; ++k) {
                const long bit = 1L << (q - 1 - k);
                const long other = col ^ bit;
                // slot value 1 -> value 0 with +1; value 0 -> 1 with -1
                if (col & bit)
                    rows[static_cast<std::size_t>(other)][static_cast<std::size_t>(col)] += 1;
                else
                    rows[static_cast<std::size_t>(other)][static_cast<std::size_t>(col)] -= 1;
            }
        }
        cache.push_back(nullspace(std::move(rows), static_cast<std::size_t>(dim)));
    }
    return cache[static_cast<std::size_t>(p)];
}

}  // namespace

InvariantSpace invariant_space(int m, int r) {
    const long n = checked_dim(m, r);
    InvariantSpace inv;
    inv.m = m;
    inv.r = r;

    // Stage 1: kernel of the (0,1)-plane rotation, block by block. A block
    // fixes which slots carry values in {0,1} and the values elsewhere; on
    // the block the action is the p-fold rotation derivation.
    std::vector<SparseVec> kernel;
    if (r == 0) {
        kernel.push_back({{0, Rational(1)}});
    } else {
        for (long mask = 0; mask < (1L << r); ++mask) {
            const int p = static_cast<int>(__builtin_popcountll(static_cast<unsigned long long>(mask)));
            const int rest = r - p;
            // values >= 2 on the complement slots
            const long outside = [&] {
                long c = 1;
                for (int i = 0; i < rest; ++i) c *= (m - 2);
                return c;
            }();
            if (outside == 0) continue;
            const Mat& blk = rotation_block_kernel(p);
            if (blk.empty()) continue;
            for (long fill = 0; fill < outside; ++fill) {
                // fixed digits on complement slots
                std::vector<int> fixed(static_cast<std::size_t>(r), -1);
                long f = fill;
                for (int k = r; k-- > 0;) {
                    if (mask & (1L << (r - 1 - k))) continue;
                    fixed[static_cast<std::size_t>(k)] = 2 + static_cast<int>(f % (m - 2));
                    f /= (m - 2);
                }
                for (const auto& bv : blk) {
                    SparseVec v;
                    for (std::size_t bi = 0; bi < bv.size(); ++bi) {
                        if (bv[bi] == 0) continue;
                        std::vector<int> digits = fixed;
                        int bitpos = p;
                        for (int k = 0; k < r; ++k) {
                            if (!(mask & (1L << (r - 1 - k)))) continue;
                            --bitpos;
                            digits[static_cast<std::size_t>(k)] =
                                (bi >> bitpos) & 1 ? 1 : 0;
                        }
                        v.emplace_back(flat_of(digits, m), bv[bi]);
                    }
                    std::sort(v.begin(), v.end());
                    kernel.push_back(std::move(v));
                }
            }
        }
    }

    // Stage 2: restrict the remaining generators to the current kernel and
    // refine. Coordinates live in the current kernel basis.
    const std::vector<SparseAction> gens = so_action_matrices(m, r);
    for (std::size_t gi = 1; gi < gens.size() && !kernel.empty(); ++gi) {
        const std::size_t d = kernel.size();
        // row-major view of the kernel: for each ambient index, the
        // coefficients it receives from each kernel vector
        std::vector<std::vector<std::pair<std::size_t, Rational>>> by_index(
            static_cast<std::size_t>(n));
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [idx, val] : kernel[j])
                by_index[static_cast<std::size_t>(idx)].emplace_back(j, val);

        // rows of (action * kernel-matrix), reduced on the fly
        std::vector<Vec> rows(static_cast<std::size_t>(n));
        for (auto [row, col, val] : gens[gi].entries) {
            const auto& contrib = by_index[static_cast<std::size_t>(col)];
            if (contrib.empty()) continue;
            auto& target = rows[static_cast<std::size_t>(row)];
            if (target.empty()) target.assign(d, Rational(0));
            for (const auto& [j, v] : contrib) target[j] += val * v;
        }
        RowReducer red(d);
        for (auto& row : rows)
            if (!row.empty()) red.add(std::move(row));
        const Mat coeffs = red.nullspace_basis();
        std::vector<SparseVec> next;
        next.reserve(coeffs.size());
        for (const auto& c : coeffs) {
            std::map<long, Rational> acc;
            for (std::size_t j = 0; j < d; ++j) {
                if (c[j] == 0) continue;
                for (const auto& [idx, val] : kernel[j]) acc[idx] += c[j] * val;
            }
            SparseVec v;
            for (auto& [idx, val] : acc)
                if (val != 0) v.emplace_back(idx, std::move(val));
            if (!v.empty()) next.push_back(std::move(v));
        }
        kernel = std::move(next);
    }

    // densify and canonicalize
    Mat dense;
    dense.reserve(kernel.size());
    for (const auto& v : kernel) {
        Vec row(static_cast<std::size_t>(n), Rational(0));
        for (const auto& [idx, val] : v) row[static_cast<std::size_t>(idx)] = val;
        dense.push_back(std::move(row));
    }
    rref_in_place(dense);
    inv.basis = dense;

    // reflection negating the first coordinate: diagonal with sign
    // (-1)^(number of 0-digits)
    auto reflect_sign = [&](long flat) {
        int zeros = 0;
        for (int k = 0; k < r; ++k) {
            if (flat % m == 0) ++zeros;
            flat /= m;
        }
        return zeros % 2 == 0 ? 1 : -1;
    };
    Mat plus, minus;
    for (const auto& row : inv.basis) {
        Vec vp(row.size()), vm(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            const int s = reflect_sign(static_cast<long>(i));
            const Rational rv = row[i] * s;
            vp[i] = (row[i] + rv) / 2;
            vm[i] = (row[i] - rv) / 2;
        }
        plus.push_back(std::move(vp));
        minus.push_back(std::move(vm));
    }
    rref_in_place(plus);
    rref_in_place(minus);
    inv.dim_plus = plus.size();
    inv.dim_minus = minus.size();
    if (inv.dim_plus + inv.dim_minus != inv.basis.size())
        throw Error("reflection split does not decompose the invariant space");
    inv.plus_basis = std::move(plus);
    inv.minus_basis = std::move(minus);
    return inv;
}

std::vector<long> d_table(int m, int r_max) {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(r_max) + 1);
    for (int r = 0; r <= r_max; ++r)
        out.push_back(static_cast<long>(invariant_space(m, r).dim_plus));
    return out;
}

long d_of(const std::vector<long>& table, int r) {
    if (r < 0 || r >= static_cast<int>(table.size())) return 0;
    return table[static_cast<std::size_t>(r)];
}

std::string d_table_csv(const std::vector<long>& table) {
    std::ostringstream os;
    os << "r,d\n";
    for (std::size_t r = 0; r < table.size(); ++r) os << r << "," << table[r] << "\n";
    return os.str();
}

namespace {

Vec tensor_row(const Tensor& t) { return t.entries(); }

Tensor cup_power_seed(int m, int half) {
    Tensor seed(m, 0, 0);
    seed[0] = 1;
    const Tensor cup = eval_generator(Gen::U, m);
    for (int i = 0; i < half; ++i) seed = tensor_product(seed, cup);
    return seed;
}

}  // namespace

Report verify_thm_so_inv(int m, int r) {
    Report rep;
    const InvariantSpace inv = invariant_space(m, r);
    const std::string tag = "m=" + std::to_string(m) + ", r=" + std::to_string(r);

    if (r < m || (r - m) % 2 != 0) {
        rep.push_back({"det-twisted part empty (" + tag + ")", inv.dim_minus == 0,
                       "dim " + std::to_string(inv.dim_minus)});
    } else {
        Tensor seed = tensor_product(lambda_tensor(m), cup_power_seed(m, (r - m) / 2));
        Mat span;
        for (const auto& img : sym_span(seed)) span.push_back(tensor_row(img));
        const bool eq = same_row_space(span, inv.minus_basis);
        rep.push_back({"det-twisted part = symmetrized span (" + tag + ")", eq,
                       eq ? "" : "row spaces differ"});
    }

    // projection comparison: the first-m-slot projection of the plus part
    // has the dimension of the det-twisted part at rank r - m
    if (r >= m) {
        const InvariantSpace lower = invariant_space(m, r - m);
        Mat projected;
        for (const auto& row : inv.plus_basis) {
            Tensor t(m, 0, r);
            for (std::size_t i = 0; i < row.size(); ++i) t[i] = row[i];
            projected.push_back(tensor_row(pi_lambda(t)));
        }
        const std::size_t got = rank_of(std::move(projected));
        rep.push_back({"projection rank matches lower det-twisted dim (" + tag + ")",
                       got == lower.dim_minus,
                       "rank " + std::to_string(got) + " vs dim " +
                           std::to_string(lower.dim_minus)});
    }

    // plus/minus decomposition of every joint invariant
    bool decomp = inv.dim_plus + inv.dim_minus == inv.basis.size();
    for (const auto& row : inv.basis) {
        if (!decomp) break;
        Vec vp(row.size()), vm(row.size());
        auto reflect_sign = [&](long flat) {
            int zeros = 0;
            for (int k = 0; k < r; ++k) {
                if (flat % m == 0) ++zeros;
                flat /= m;
            }
            return zeros % 2 == 0 ? 1 : -1;
        };
        for (std::size_t i = 0; i < row.size(); ++i) {
            const Rational rv = row[i] * reflect_sign(static_cast<long>(i));
            vp[i] = (row[i] + rv) / 2;
            vm[i] = (row[i] - rv) / 2;
        }
        if (!in_row_space(inv.plus_basis, vp) || !in_row_space(inv.minus_basis, vm))
            decomp = false;
    }
    rep.push_back({"plus/minus decomposition exact (" + tag + ")", decomp, ""});
    return rep;
}

Report verify_fft_span(int m, int r) {
    Report rep;
    const InvariantSpace inv = invariant_space(m, r);
    const std::string tag = "m=" + std::to_string(m) + ", r=" + std::to_string(r);
    if (r % 2 != 0) {
        rep.push_back({"plus part empty at odd rank (" + tag + ")", inv.dim_plus == 0,
                       "dim " + std::to_string(inv.dim_plus)});
        return rep;
    }
    std::vector<int> pts(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) pts[static_cast<std::size_t>(i)] = i;
    Mat span;
    for (const auto& pairs : all_matchings(pts)) {
        EnhancedDiagram d{0, r, {}, pairs};
        EnhancedMorphism f(m, 0, r);
        f.add_term(d, Rational(1));
        span.push_back(eval_morphism(f).entries());
    }
    const bool eq = same_row_space(span, inv.plus_basis);
    rep.push_back({"plus part = pair-partition span (" + tag + ")", eq,
                   eq ? "" : "row spaces differ"});
    return rep;
}

}  // namespace brauercat
