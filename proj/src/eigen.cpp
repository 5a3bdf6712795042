#include "betaspec/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define BETASPEC_X86 1
#endif

namespace betaspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Maximal index ranges [start, end) between exact zeros of the off-diagonal;
// the matrix is block diagonal across them.
std::vector<std::pair<std::size_t, std::size_t>> split_blocks(const TridiagonalMatrix& T) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < T.n; ++i) {
        if (T.offdiag[i] == 0.0) {
            blocks.emplace_back(start, i + 1);
            start = i + 1;
        }
    }
    blocks.emplace_back(start, T.n);
    return blocks;
}

// Implicit-shift QL on (d, e), values only; d and e are block-local working
// copies, e one shorter than d. Optionally carries one row of the accumulated
// rotation product in z (the spectral weights |e_m(root)| come from squaring
// it). Classic EISPACK tql1/tql2 recurrences.
void ql_inplace(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z) {
    const std::size_t n = d.size();
    if (n == 1)
        return;
    e.push_back(0.0); // scratch slot e[n-1]
    for (std::size_t l = 0; l < n; ++l) {
        std::size_t iter = 0;
        for (;;) {
            std::size_t m = l;
            while (m + 1 < n) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= kEps * dd + DBL_MIN)
                    break;
                ++m;
            }
            if (m == l)
                break;
            if (++iter > 64)
                throw std::runtime_error("eigenvalues: QL iteration failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (z) {
                    std::vector<double>& zz = *z;
                    const double zi = zz[i];
                    const double zi1 = zz[i + 1];
                    zz[i + 1] = s * zi + c * zi1;
                    zz[i] = c * zi - s * zi1;
                }
            }
            if (underflow)
                continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    e.pop_back();
}

// ---------------------------------------------------------------------------
// Batched Sturm counts: number of sign changes of the characteristic
// polynomials of leading principal minors, evaluated at a batch of shifts.
// The three-term recurrence p_i = (d_i - x) p_{i-1} - e_{i-1}^2 p_{i-2} is
// run with periodic rescaling (it is homogeneous, so positive scaling
// preserves signs); sign changes are counted from the xor of consecutive
// IEEE sign bits. Count(x) = #{eigenvalues < x} away from exact polynomial
// roots, which bisection midpoints avoid almost surely.

constexpr std::size_t kBatchD = 32; // shifts per double kernel call
constexpr std::size_t kBatchF = 64; // shifts per float kernel call

#if defined(__AVX512F__)

void sturm_batch_double(std::size_t n, const double* d, const double* e2,
                        const double* x, std::int64_t* cnt) {
    __m512d xv[4], p0[4], p1[4];
    __m512i c[4];
    const __m512d one = _mm512_set1_pd(1.0);
    const __m512d big = _mm512_set1_pd(1e120);
    const __m512d sml = _mm512_set1_pd(1e-120);
    const __m512d absmask = _mm512_castsi512_pd(_mm512_set1_epi64(0x7fffffffffffffffLL));
    for (int k = 0; k < 4; ++k) {
        xv[k] = _mm512_loadu_pd(x + 8 * k);
        p0[k] = one;
        p1[k] = _mm512_sub_pd(_mm512_set1_pd(d[0]), xv[k]);
        const __mmask8 neg = _mm512_cmp_pd_mask(p1[k], _mm512_setzero_pd(), _CMP_LT_OQ);
        c[k] = _mm512_maskz_set1_epi64(neg, 1);
    }
    std::size_t i = 1;
    while (i < n) {
        const std::size_t iend = std::min(n, i + 32);
        for (; i < iend; ++i) {
            const __m512d dv = _mm512_set1_pd(d[i]);
            const __m512d ev = _mm512_set1_pd(e2[i - 1]);
            for (int k = 0; k < 4; ++k) {
                const __m512d t = _mm512_sub_pd(dv, xv[k]);
                const __m512d u = _mm512_mul_pd(ev, p0[k]);
                const __m512d p2 = _mm512_fmsub_pd(t, p1[k], u);
                const __m512i s = _mm512_xor_si512(_mm512_castpd_si512(p2),
                                                   _mm512_castpd_si512(p1[k]));
                c[k] = _mm512_sub_epi64(c[k], _mm512_srai_epi64(s, 63));
                p0[k] = p1[k];
                p1[k] = p2;
            }
        }
        for (int k = 0; k < 4; ++k) {
            const __m512d a = _mm512_and_pd(p1[k], absmask);
            const __mmask8 hi = _mm512_cmp_pd_mask(a, big, _CMP_GT_OQ);
            const __mmask8 lo = _mm512_cmp_pd_mask(a, sml, _CMP_LT_OQ);
            __m512d sc = _mm512_mask_mov_pd(one, hi, sml);
            sc = _mm512_mask_mov_pd(sc, lo, big);
            p0[k] = _mm512_mul_pd(p0[k], sc);
            p1[k] = _mm512_mul_pd(p1[k], sc);
        }
    }
    for (int k = 0; k < 4; ++k)
        _mm512_storeu_si512(reinterpret_cast<void*>(cnt + 8 * k), c[k]);
}

void sturm_batch_float(std::size_t n, const float* d, const float* e2,
                       const float* x, std::int32_t* cnt) {
    __m512 xv[4], p0[4], p1[4];
    __m512i c[4];
    const __m512 one = _mm512_set1_ps(1.0f);
    const __m512 big = _mm512_set1_ps(1e10f);
    const __m512 sml = _mm512_set1_ps(1e-10f);
    const __m512 absmask = _mm512_castsi512_ps(_mm512_set1_epi32(0x7fffffff));
    for (int k = 0; k < 4; ++k) {
        xv[k] = _mm512_loadu_ps(x + 16 * k);
        p0[k] = one;
        p1[k] = _mm512_sub_ps(_mm512_set1_ps(d[0]), xv[k]);
        const __mmask16 neg = _mm512_cmp_ps_mask(p1[k], _mm512_setzero_ps(), _CMP_LT_OQ);
        c[k] = _mm512_maskz_set1_epi32(neg, 1);
    }
    std::size_t i = 1;
    while (i < n) {
        const std::size_t iend = std::min(n, i + 8);
        for (; i < iend; ++i) {
            const __m512 dv = _mm512_set1_ps(d[i]);
            const __m512 ev = _mm512_set1_ps(e2[i - 1]);
            for (int k = 0; k < 4; ++k) {
                const __m512 t = _mm512_sub_ps(dv, xv[k]);
                const __m512 u = _mm512_mul_ps(ev, p0[k]);
                const __m512 p2 = _mm512_fmsub_ps(t, p1[k], u);
                const __m512i s = _mm512_xor_si512(_mm512_castps_si512(p2),
                                                   _mm512_castps_si512(p1[k]));
                c[k] = _mm512_sub_epi32(c[k], _mm512_srai_epi32(s, 31));
                p0[k] = p1[k];
                p1[k] = p2;
            }
        }
        for (int k = 0; k < 4; ++k) {
            const __m512 a = _mm512_and_ps(p1[k], absmask);
            const __mmask16 hi = _mm512_cmp_ps_mask(a, big, _CMP_GT_OQ);
            const __mmask16 lo = _mm512_cmp_ps_mask(a, sml, _CMP_LT_OQ);
            __m512 sc = _mm512_mask_mov_ps(one, hi, sml);
            sc = _mm512_mask_mov_ps(sc, lo, big);
            p0[k] = _mm512_mul_ps(p0[k], sc);
            p1[k] = _mm512_mul_ps(p1[k], sc);
        }
    }
    for (int k = 0; k < 4; ++k)
        _mm512_storeu_si512(reinterpret_cast<void*>(cnt + 16 * k), c[k]);
}

#else // portable fallback

template <typename F, typename I, std::size_t B, std::size_t RescaleEvery>
void sturm_batch_generic(std::size_t n, const F* d, const F* e2, const F* x,
                         I* cnt_out) {
    alignas(64) F p0[B], p1[B];
    alignas(64) I c[B];
    constexpr F big = sizeof(F) == 8 ? F(1e120) : F(1e10);
    constexpr F sml = F(1) / big;
    for (std::size_t l = 0; l < B; ++l) {
        p0[l] = F(1);
        p1[l] = d[0] - x[l];
        c[l] = p1[l] < F(0) ? 1 : 0;
    }
    using UInt = std::conditional_t<sizeof(F) == 8, std::uint64_t, std::uint32_t>;
    using SInt = std::conditional_t<sizeof(F) == 8, std::int64_t, std::int32_t>;
    std::size_t i = 1;
    while (i < n) {
        const std::size_t iend = std::min(n, i + RescaleEvery);
        for (; i < iend; ++i) {
            const F di = d[i], ei = e2[i - 1];
            for (std::size_t l = 0; l < B; ++l) {
                const F p2 = (di - x[l]) * p1[l] - ei * p0[l];
                UInt a, b;
                __builtin_memcpy(&a, &p2, sizeof(F));
                __builtin_memcpy(&b, &p1[l], sizeof(F));
                const SInt sign_changed = static_cast<SInt>(a ^ b) >> (8 * sizeof(F) - 1);
                c[l] -= static_cast<I>(sign_changed); // 0 or -1
                p0[l] = p1[l];
                p1[l] = p2;
            }
        }
        for (std::size_t l = 0; l < B; ++l) {
            const F a = p1[l] < F(0) ? -p1[l] : p1[l];
            const F sc = a > big ? sml : (a < sml ? big : F(1));
            p0[l] *= sc;
            p1[l] *= sc;
        }
    }
    for (std::size_t l = 0; l < B; ++l)
        cnt_out[l] = c[l];
}

void sturm_batch_double(std::size_t n, const double* d, const double* e2,
                        const double* x, std::int64_t* cnt) {
    sturm_batch_generic<double, std::int64_t, kBatchD, 32>(n, d, e2, x, cnt);
}

void sturm_batch_float(std::size_t n, const float* d, const float* e2,
                       const float* x, std::int32_t* cnt) {
    sturm_batch_generic<float, std::int32_t, kBatchF, 8>(n, d, e2, x, cnt);
}

#endif

#if defined(BETASPEC_X86)
// The polynomial recurrence can graze the denormal range through
// cancellation; flush-to-zero keeps those transients cheap and preserves the
// sign bit, which is the only thing the count consumes.
struct FtzGuard {
    unsigned csr;
    FtzGuard() : csr(_mm_getcsr()) { _mm_setcsr(csr | 0x8040u); }
    ~FtzGuard() { _mm_setcsr(csr); }
};
#else
struct FtzGuard {};
#endif

struct Gershgorin {
    double lo, hi;
};

Gershgorin gershgorin_bounds(const TridiagonalMatrix& T) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < T.n; ++i) {
        double radius = 0.0;
        if (i > 0)
            radius += std::fabs(T.offdiag[i - 1]);
        if (i + 1 < T.n)
            radius += std::fabs(T.offdiag[i]);
        lo = std::min(lo, T.diag[i] - radius);
        hi = std::max(hi, T.diag[i] + radius);
    }
    return {lo, hi};
}

std::vector<double> bisect_all(const TridiagonalMatrix& T) {
    const std::size_t n = T.n;
    const double norm = std::max(1.0, T.inf_norm());
    const double target_width = 0.5e-10 * norm;

    Gershgorin g = gershgorin_bounds(T);
    const double margin = 1e-4 * norm;
    g.lo -= margin;
    g.hi += margin;

    std::vector<double> e2(n > 0 ? n - 1 : 0);
    for (std::size_t i = 0; i + 1 < n; ++i)
        e2[i] = T.offdiag[i] * T.offdiag[i];

    [[maybe_unused]] FtzGuard ftz;

    // Isolation: Sturm counts in float on a uniform grid bracket every
    // eigenvalue to one grid cell (plus a fuzz margin for the float
    // arithmetic, restored below before refining in double).
    std::vector<float> df(T.diag.begin(), T.diag.end());
    std::vector<float> e2f(e2.begin(), e2.end());
    const std::size_t cells = 16384;
    std::vector<double> grid(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i)
        grid[i] = g.lo + (g.hi - g.lo) * static_cast<double>(i) / static_cast<double>(cells);
    std::vector<std::int64_t> grid_count(cells + 1);
    {
        float xs[kBatchF];
        std::int32_t cs[kBatchF];
        for (std::size_t base = 0; base <= cells; base += kBatchF) {
            const std::size_t m = std::min(kBatchF, cells + 1 - base);
            for (std::size_t l = 0; l < m; ++l)
                xs[l] = static_cast<float>(grid[base + l]);
            for (std::size_t l = m; l < kBatchF; ++l)
                xs[l] = static_cast<float>(g.hi);
            sturm_batch_float(n, df.data(), e2f.data(), xs, cs);
            for (std::size_t l = 0; l < m; ++l)
                grid_count[base + l] = cs[l];
        }
    }
    // Counts are monotone in exact arithmetic; enforce it on the float fuzz.
    // The widened Gershgorin endpoints certify the extreme counts.
    grid_count[0] = 0;
    for (std::size_t i = 1; i <= cells; ++i)
        grid_count[i] = std::max(grid_count[i], grid_count[i - 1]);
    grid_count[cells] = static_cast<std::int64_t>(n);

    std::vector<double> lo_k(n), hi_k(n);
    {
        std::size_t j = 0;
        for (std::size_t k = 0; k < n; ++k) {
            while (grid_count[j] < static_cast<std::int64_t>(k + 1))
                ++j;
            // j >= 1 because grid_count[0] >= k+1 would mean eigenvalues
            // below the widened Gershgorin bound.
            hi_k[k] = grid[j] + margin;
            lo_k[k] = grid[j - 1] - margin;
        }
    }

    // Refinement: batched bisection in double down to the accuracy contract.
    std::vector<double> out(n);
    double xs[kBatchD];
    std::int64_t cs[kBatchD];
    for (std::size_t base = 0; base < n; base += kBatchD) {
        const std::size_t m = std::min(kBatchD, n - base);
        double wmax = 0.0;
        for (std::size_t l = 0; l < m; ++l)
            wmax = std::max(wmax, hi_k[base + l] - lo_k[base + l]);
        int iters = 0;
        while (wmax > target_width && iters < 64) {
            wmax *= 0.5;
            ++iters;
        }
        for (int it = 0; it < iters; ++it) {
            for (std::size_t l = 0; l < m; ++l)
                xs[l] = 0.5 * (lo_k[base + l] + hi_k[base + l]);
            for (std::size_t l = m; l < kBatchD; ++l)
                xs[l] = g.hi;
            sturm_batch_double(n, T.diag.data(), e2.data(), xs, cs);
            for (std::size_t l = 0; l < m; ++l) {
                const std::size_t k = base + l;
                if (xs[l] <= lo_k[k] || xs[l] >= hi_k[k])
                    continue; // interval at floating-point resolution
                if (cs[l] > static_cast<std::int64_t>(k))
                    hi_k[k] = xs[l];
                else
                    lo_k[k] = xs[l];
            }
        }
        for (std::size_t l = 0; l < m; ++l)
            out[base + l] = 0.5 * (lo_k[base + l] + hi_k[base + l]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Merge atoms whose locations are within tol; masses add, locations average.
PointMeasure merge_atoms(std::vector<PointMeasure::Atom> atoms, double tol) {
    std::sort(atoms.begin(), atoms.end(),
              [](const PointMeasure::Atom& a, const PointMeasure::Atom& b) {
                  return a.location < b.location;
              });
    PointMeasure out;
    for (const PointMeasure::Atom& a : atoms) {
        if (!out.atoms.empty() && a.location - out.atoms.back().location <= tol) {
            PointMeasure::Atom& last = out.atoms.back();
            last.location = 0.5 * (last.location + a.location);
            last.mass += a.mass;
        } else {
            out.atoms.push_back(a);
        }
    }
    return out;
}

} // namespace

std::vector<double> eigenvalues_ql(const TridiagonalMatrix& T) {
    T.validate();
    std::vector<double> all;
    all.reserve(T.n);
    for (const auto& [s, t] : split_blocks(T)) {
        std::vector<double> d(T.diag.begin() + s, T.diag.begin() + t);
        std::vector<double> e(T.offdiag.begin() + s, T.offdiag.begin() + (t - 1));
        ql_inplace(d, e, nullptr);
        all.insert(all.end(), d.begin(), d.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<double> eigenvalues_bisect(const TridiagonalMatrix& T) {
    T.validate();
    return bisect_all(T);
}

std::vector<double> eigenvalues(const TridiagonalMatrix& T) {
    T.validate();
    // Squared off-diagonals overflow only for norms far outside the
    // ensembles' range; route those to QL, which squares nothing.
    if (T.n <= kEigenBisectThreshold || T.inf_norm() > 1e150)
        return eigenvalues_ql(T);
    return eigenvalues_bisect(T);
}

std::size_t sturm_count(const TridiagonalMatrix& T, double x) {
    T.validate();
    const double pivmin = DBL_MIN * std::max(1.0, T.inf_norm());
    double q = T.diag[0] - x;
    std::size_t count = q < 0.0 ? 1 : 0;
    for (std::size_t i = 1; i < T.n; ++i) {
        const double e = T.offdiag[i - 1];
        if (std::fabs(q) < pivmin)
            q = q < 0.0 ? -pivmin : pivmin;
        q = T.diag[i] - x - e * e / q;
        if (q < 0.0)
            ++count;
    }
    return count;
}

PointMeasure spectral_measure_at_root(const TridiagonalMatrix& T, std::size_t root) {
    T.validate();
    if (root >= T.n)
        throw std::invalid_argument("spectral_measure_at_root: root out of range");
    std::vector<PointMeasure::Atom> atoms;
    atoms.reserve(T.n);
    for (const auto& [s, t] : split_blocks(T)) {
        std::vector<double> d(T.diag.begin() + s, T.diag.begin() + t);
        std::vector<double> e(T.offdiag.begin() + s, T.offdiag.begin() + (t - 1));
        if (root >= s && root < t) {
            std::vector<double> z(t - s, 0.0);
            z[root - s] = 1.0;
            ql_inplace(d, e, &z);
            for (std::size_t i = 0; i < d.size(); ++i)
                atoms.push_back({d[i], z[i] * z[i]});
        } else {
            ql_inplace(d, e, nullptr);
            for (double lambda : d)
                atoms.push_back({lambda, 0.0});
        }
    }
    return merge_atoms(std::move(atoms), 1e-12 * T.inf_norm());
}

PointMeasure expected_spectral_measure(const TridiagonalMatrix& T) {
    T.validate();
    const std::vector<double> lambda = eigenvalues(T);
    std::vector<PointMeasure::Atom> atoms;
    atoms.reserve(lambda.size());
    const double mass = 1.0 / static_cast<double>(T.n);
    for (double v : lambda)
        atoms.push_back({v, mass});
    return merge_atoms(std::move(atoms), 1e-12 * T.inf_norm());
}

} // namespace betaspec
