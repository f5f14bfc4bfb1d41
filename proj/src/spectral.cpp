#include "tanner/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tanner {

namespace {

// H H^T as a sparse integer matrix in CSR-like form.
struct SparseGram {
    int m = 0;
    std::vector<std::vector<std::pair<int, int>>> rows;  // (col, value)
};

SparseGram build_gram(const ScalarParityMatrix& H) {
    std::vector<std::vector<int>> col_rows(H.n);
    for (int r = 0; r < H.m; ++r)
        for (int c : H.rows[r]) col_rows[c].push_back(r);

    SparseGram G;
    G.m = H.m;
    G.rows.resize(H.m);
    std::vector<int> cnt(H.m, 0);
    for (int r = 0; r < H.m; ++r) {
        for (int c : H.rows[r])
            for (int r2 : col_rows[c]) ++cnt[r2];
        for (int r2 = 0; r2 < H.m; ++r2) {
            if (cnt[r2]) {
                G.rows[r].push_back({r2, cnt[r2]});
                cnt[r2] = 0;
            }
        }
    }
    return G;
}

using DenseRows = std::vector<std::vector<Int>>;  // m x m bignum matrix

// out = P * G, dense times sparse.
DenseRows multiply(const DenseRows& P, const SparseGram& G) {
    const int m = G.m;
    DenseRows out(m, std::vector<Int>(m));
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (int r = 0; r < m; ++r) {
        for (int t = 0; t < m; ++t) {
            if (P[r][t] == 0) continue;
            for (auto [c, g] : G.rows[t]) out[r][c] += P[r][t] * g;
        }
    }
    return out;
}

}  // namespace

PowerSumTable gram_power_traces(const ScalarParityMatrix& H, int K) {
    if (K < 1) throw Error(errc::missing_moments, "K must be >= 1");
    SparseGram G = build_gram(H);
    const int m = G.m;
    const int half = (K + 1) / 2;

    // powers[a] = (HH^T)^a as dense rows, a = 1..ceil(K/2)
    std::vector<DenseRows> powers(half + 1);
    powers[1].assign(m, std::vector<Int>(m));
    for (int r = 0; r < m; ++r)
        for (auto [c, g] : G.rows[r]) powers[1][r][c] = g;
    for (int a = 2; a <= half; ++a) powers[a] = multiply(powers[a - 1], G);

    PowerSumTable ps;
    ps.K = K;
    ps.T.assign(K + 1, Int(0));
    ps.T[0] = m;
    for (int k = 1; k <= K; ++k) {
        const int a = (k + 1) / 2, b = k / 2;
        Int total = 0;
        if (b == 0) {
            for (int r = 0; r < m; ++r) total += powers[a][r][r];
        } else {
            // Tr(M^a M^b) = sum of the elementwise product (M symmetric).
            const DenseRows& Pa = powers[a];
            const DenseRows& Pb = powers[b];
            std::vector<Int> partial(m);
#pragma omp parallel for schedule(static) num_threads(thread_count())
            for (int r = 0; r < m; ++r) {
                Int acc = 0;
                for (int c = 0; c < m; ++c)
                    if (Pa[r][c] != 0 && Pb[r][c] != 0) acc += Pa[r][c] * Pb[r][c];
                partial[r] = acc;
            }
            for (int r = 0; r < m; ++r) total += partial[r];
        }
        ps.T[k] = total;
    }
    return ps;
}

namespace reference {

PowerSumTable gram_power_traces(const ScalarParityMatrix& H, int K) {
    if (K < 1) throw Error(errc::missing_moments, "K must be >= 1");
    const int m = H.m;
    DenseRows G(m, std::vector<Int>(m, 0));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            // |row_r intersect row_c| on sorted index lists
            std::size_t i = 0, j = 0;
            long v = 0;
            while (i < H.rows[r].size() && j < H.rows[c].size()) {
                if (H.rows[r][i] < H.rows[c][j])
                    ++i;
                else if (H.rows[r][i] > H.rows[c][j])
                    ++j;
                else {
                    ++v;
                    ++i;
                    ++j;
                }
            }
            G[r][c] = v;
        }

    PowerSumTable ps;
    ps.K = K;
    ps.T.assign(K + 1, Int(0));
    ps.T[0] = m;
    DenseRows R = G;
    for (int k = 1; k <= K; ++k) {
        if (k > 1) {
            DenseRows next(m, std::vector<Int>(m, 0));
            for (int r = 0; r < m; ++r)
                for (int t = 0; t < m; ++t) {
                    if (R[r][t] == 0) continue;
                    for (int c = 0; c < m; ++c)
                        if (G[t][c] != 0) next[r][c] += R[r][t] * G[t][c];
                }
            R = std::move(next);
        }
        for (int r = 0; r < m; ++r) ps.T[k] += R[r][r];
    }
    return ps;
}

}  // namespace reference

long exact_rank(const ScalarParityMatrix& H) {
    const int m = H.m, n = H.n;
    std::vector<std::vector<Int>> A(m, std::vector<Int>(n, 0));
    for (int r = 0; r < m; ++r)
        for (int c : H.rows[r]) A[r][c] = 1;

    long rank = 0;
    Int prev_pivot = 1;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // partial pivoting on magnitude
        int pivot = -1;
        for (int r = row; r < m; ++r) {
            if (A[r][col] == 0) continue;
            if (pivot < 0 || cmp(abs(A[r][col]), abs(A[pivot][col])) > 0)
                pivot = r;
        }
        if (pivot < 0) continue;
        std::swap(A[row], A[pivot]);
        for (int r = row + 1; r < m; ++r) {
            for (int c = col + 1; c < n; ++c) {
                Int v = A[r][c] * A[row][col] - A[r][col] * A[row][c];
                // exact by the Bareiss divisibility property
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                A[r][c] = std::move(v);
            }
            A[r][col] = 0;
        }
        prev_pivot = A[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

ShiftedMomentTable shifted_moments(const PowerSumTable& ps,
                                   const BiregularProfile& profile) {
    return shifted_moments(ps, profile, ps.K);
}

ShiftedMomentTable shifted_moments(const PowerSumTable& ps,
                                   const BiregularProfile& profile, int K) {
    if (K > ps.K)
        throw Error(errc::missing_moments, "power sums too shallow for requested K");
    const Int shift = -Int(profile.q1 + profile.q2);
    ShiftedMomentTable e;
    e.K = K;
    e.E.assign(K + 1, Int(0));
    for (int k = 0; k <= K; ++k) {
        // binomial shift of the traces, minus the m - mu zero eigenvalues
        Int acc = 0;
        Int binom = 1;
        for (int i = 0; i <= k; ++i) {
            Int pw;
            mpz_pow_ui(pw.get_mpz_t(), shift.get_mpz_t(), k - i);
            acc += binom * pw * ps.T[i];
            binom = binom * (k - i) / (i + 1);
        }
        Int zpow;
        mpz_pow_ui(zpow.get_mpz_t(), shift.get_mpz_t(), k);
        e.E[k] = acc - Int(profile.m - profile.rank) * zpow;
    }
    return e;
}

namespace {

template <typename T>
std::vector<T> newton_impl(const std::vector<T>& c, int K) {
    const int d = static_cast<int>(c.size()) - 1;
    if (d < 1)
        throw Error(errc::missing_moments, "polynomial degree must be >= 1");
    std::vector<T> P(K + 1, T(0));
    for (int k = 1; k <= K; ++k) {
        T acc(0);
        if (k <= d) {
            for (int i = 1; i < k; ++i) acc += c[d - i] * P[k - i];
            acc += T(k) * c[d - k];
        } else {
            for (int i = 1; i <= d; ++i) acc += c[d - i] * P[k - i];
        }
        P[k] = -acc;
    }
    P.erase(P.begin());
    return P;
}

}  // namespace

std::vector<Int> newton_power_sums(const std::vector<Int>& monic_coeffs, int K) {
    if (monic_coeffs.empty() || monic_coeffs.back() != 1)
        throw Error(errc::missing_moments, "polynomial must be monic");
    return newton_impl(monic_coeffs, K);
}

std::vector<cd> newton_power_sums(const std::vector<cd>& monic_coeffs, int K) {
    return newton_impl(monic_coeffs, K);
}

std::vector<cd> root_of_unity_gram(const PolynomialParityMatrix& pm, int j) {
    const int N = pm.N, d = pm.n_c;
    std::vector<cd> Hc(static_cast<std::size_t>(d) * pm.n_v, cd(0));
    for (int bi = 0; bi < d; ++bi)
        for (int bj = 0; bj < pm.n_v; ++bj)
            for (int e : pm.entries[bi][bj]) {
                double th = 2.0 * std::numbers::pi *
                            static_cast<double>((static_cast<long long>(j) * e) % N) / N;
                Hc[bi * pm.n_v + bj] += cd(std::cos(th), std::sin(th));
            }

    std::vector<cd> A(static_cast<std::size_t>(d) * d, cd(0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            cd s(0);
            for (int t = 0; t < pm.n_v; ++t)
                s += Hc[r * pm.n_v + t] * std::conj(Hc[c * pm.n_v + t]);
            A[r * d + c] = s;
        }
    return A;
}

CharPolySet roots_of_unity_charpolys(const PolynomialParityMatrix& pm) {
    const int N = pm.N, d = pm.n_c;
    CharPolySet cps;
    cps.N = N;
    cps.n_c = d;
    cps.blocks.resize(N);

#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (int j = 0; j < N; ++j) {
        std::vector<cd> A = root_of_unity_gram(pm, j);

        // Faddeev-LeVerrier trace recursion for the characteristic polynomial
        std::vector<cd> coeffs(d + 1, cd(0));
        coeffs[d] = 1.0;
        std::vector<cd> M = A;
        for (int k = 1; k <= d; ++k) {
            if (k > 1) {
                std::vector<cd> tmp = M;
                for (int r = 0; r < d; ++r) tmp[r * d + r] += coeffs[d - k + 1];
                std::vector<cd> next(static_cast<std::size_t>(d) * d, cd(0));
                for (int r = 0; r < d; ++r)
                    for (int t = 0; t < d; ++t)
                        for (int c = 0; c < d; ++c)
                            next[r * d + c] += A[r * d + t] * tmp[t * d + c];
                M = std::move(next);
            }
            cd tr(0);
            for (int r = 0; r < d; ++r) tr += M[r * d + r];
            coeffs[d - k] = -tr / static_cast<double>(k);
        }

        CharPolyBlock blk;
        blk.j = j;
        blk.coeffs = coeffs;
        blk.snap_ok = true;
        blk.snapped.resize(d + 1);
        for (int i = 0; i <= d; ++i) {
            double re = coeffs[i].real();
            double rd = std::round(re);
            double tol = 1e-6 * std::max(1.0, std::abs(re));
            if (std::abs(coeffs[i].imag()) > tol || std::abs(re - rd) > tol)
                blk.snap_ok = false;
            blk.snapped[i] = static_cast<long long>(rd);
        }
        cps.blocks[j] = std::move(blk);
    }
    return cps;
}

std::vector<double> hermitian_eigenvalues(std::vector<cd> M, int d) {
    auto at = [&](int r, int c) -> cd& { return M[r * d + c]; };
    // enforce exact Hermitian symmetry before rotating
    for (int r = 0; r < d; ++r) {
        for (int c = r + 1; c < d; ++c) {
            cd avg = 0.5 * (at(r, c) + std::conj(at(c, r)));
            at(r, c) = avg;
            at(c, r) = std::conj(avg);
        }
        at(r, r) = cd(at(r, r).real(), 0.0);
    }

    double norm0 = 0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            if (r != c) norm0 += std::norm(at(r, c));
    norm0 = std::sqrt(norm0) + 1e-300;

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (r != c) off += std::norm(at(r, c));
        if (std::sqrt(off) < 1e-12 * norm0) break;
        if (sweep == max_sweeps - 1)
            throw Error(errc::no_convergence, "Jacobi sweeps exhausted");

        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                cd apq = at(p, q);
                double r = std::abs(apq);
                if (r < 1e-300) continue;
                cd phase = apq / r;
                double app = at(p, p).real(), aqq = at(q, q).real();
                double tau = (app - aqq) / (2 * r);
                double t = (tau >= 0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                cd s = t * c * phase;

                for (int i = 0; i < d; ++i) {
                    cd mip = at(i, p), miq = at(i, q);
                    at(i, p) = mip * c + miq * std::conj(s);
                    at(i, q) = -mip * s + miq * c;
                }
                for (int i = 0; i < d; ++i) {
                    at(p, i) = std::conj(at(i, p));
                    at(q, i) = std::conj(at(i, q));
                }
                double sig = t * c * r;
                at(p, p) = cd(app * c * c + 2 * c * sig + aqq * t * t * c * c, 0);
                at(q, q) = cd(app * t * t * c * c - 2 * c * sig + aqq * c * c, 0);
                at(p, q) = cd(0, 0);
                at(q, p) = cd(0, 0);
            }
        }
    }

    std::vector<double> eig(d);
    for (int r = 0; r < d; ++r) eig[r] = at(r, r).real();
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

PowerSumTable qc_power_traces(const CharPolySet& cps, int K) {
    if (K < 1) throw Error(errc::missing_moments, "K must be >= 1");
    std::vector<cd> sums(K + 1, cd(0));
    // fixed summation order keeps the output independent of thread count
    for (const auto& blk : cps.blocks) {
        auto mom = newton_power_sums(blk.coeffs, K);
        for (int k = 1; k <= K; ++k) sums[k] += mom[k - 1];
    }

    PowerSumTable ps;
    ps.K = K;
    ps.T.assign(K + 1, Int(0));
    ps.T[0] = static_cast<long>(cps.n_c) * cps.N;
    for (int k = 1; k <= K; ++k) {
        double re = sums[k].real();
        double rd = std::round(re);
        double tol = 1e-6 * std::max(1.0, std::abs(re));
        if (std::abs(sums[k].imag()) > tol || std::abs(re - rd) > tol)
            throw Error(errc::snap_failure,
                        "aggregate trace T_" + std::to_string(k) +
                            " does not snap to an integer");
        ps.T[k] = static_cast<long>(rd);
    }
    return ps;
}

}  // namespace tanner
