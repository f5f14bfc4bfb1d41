#include "tanner/cycle_formulas.hpp"

namespace tanner {

namespace {

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int binom(long a, long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return r;
}

/// Alternating geometric sum (q^k + (-1)^{k-1}) / (q + 1), valid for any q.
Int alt_sum(long q, int k) {
    Int acc = 0;
    for (int i = 0; i < k; ++i) {
        Int t = ipow(Int(q), k - 1 - i);
        acc += (i % 2 == 0) ? t : -t;
    }
    return acc;
}

/// Homogeneous form of (q1^k - q2^k) / (q1 - q2).
Int hom_sum(long q1, long q2, int k) {
    Int acc = 0;
    for (int i = 0; i < k; ++i) acc += ipow(Int(q1), i) * ipow(Int(q2), k - 1 - i);
    return acc;
}

Int exact_div(Int num, long den, int k) {
    if (num % den != 0)
        throw Error(errc::non_integer_count,
                    "N_" + std::to_string(2 * k) + ": division by " +
                        std::to_string(den) + " is not exact");
    return num / den;
}

// d_{k,j} with sum S_{alpha,k} = sum_j d_{k,j} (q1 q2)^j alpha^{k-2j}
std::vector<std::vector<Int>> s_coefficients(int K) {
    std::vector<std::vector<Int>> d(std::max(K, 2) + 1);
    d[1] = {Int(1)};
    d[2] = {Int(1), Int(-2)};
    for (int k = 3; k <= K; ++k) {
        d[k].assign(k / 2 + 1, Int(0));
        for (int j = 0; j <= k / 2; ++j) {
            if (j < static_cast<int>(d[k - 1].size())) d[k][j] += d[k - 1][j];
            if (j >= 1 && j - 1 < static_cast<int>(d[k - 2].size()))
                d[k][j] -= d[k - 2][j - 1];
        }
    }
    return d;
}

}  // namespace

SPairSequence s_sequence(const Int& alpha, const Int& q1q2, int K) {
    if (K < 1) throw Error(errc::missing_moments, "K must be >= 1");
    SPairSequence seq;
    seq.alpha = alpha;
    seq.S.assign(K + 1, Int(0));
    seq.S[1] = alpha;
    if (K >= 2) seq.S[2] = alpha * alpha - 2 * q1q2;
    for (int k = 3; k <= K; ++k)
        seq.S[k] = alpha * seq.S[k - 1] - q1q2 * seq.S[k - 2];
    return seq;
}

std::vector<Int> lifted_s_sums(const ShiftedMomentTable& E, const Int& q1q2,
                               int K) {
    if (K > E.K)
        throw Error(errc::missing_moments, "moment table too shallow");
    auto d = s_coefficients(K);
    std::vector<Int> S(K + 1, Int(0));
    for (int k = 1; k <= K; ++k)
        for (int j = 0; j < static_cast<int>(d[k].size()); ++j)
            S[k] += d[k][j] * ipow(q1q2, j) * E.at(k - 2 * j);
    return S;
}

AConstantSet a_constants(long q1, long q2) {
    const Int s = q1 + q2, p = Int(q1) * q2;
    auto coeff = a_coefficients(q1, q2);

    AConstantSet out;
    out.q1 = q1;
    out.q2 = q2;
    out.A.assign(8, Int(0));
    out.A[2] = s + 1;
    out.A[3] = (s + 1) * (s + 1) + p;
    out.A[4] = ipow(s + 1, 3) + p * (3 * s + 2);
    out.A[5] = -1 + alt_sum(q1, 5) + alt_sum(q2, 5) - 5 * hom_sum(q1, q2, 5) +
               5 * s * out.A[4] - coeff.at(5, 2) * out.A[3] +
               coeff.at(5, 3) * out.A[2];
    out.A[6] = -1 - alt_sum(q1, 6) - alt_sum(q2, 6) + 6 * hom_sum(q1, q2, 6) +
               6 * s * out.A[5] - coeff.at(6, 2) * out.A[4] +
               coeff.at(6, 3) * out.A[3] - coeff.at(6, 4) * out.A[2];
    out.A[7] = -1 + alt_sum(q1, 7) + alt_sum(q2, 7) - 7 * hom_sum(q1, q2, 7) +
               7 * s * out.A[6] - coeff.at(7, 2) * out.A[5] +
               coeff.at(7, 3) * out.A[4] - coeff.at(7, 4) * out.A[3] +
               coeff.at(7, 5) * out.A[2];
    return out;
}

Int CoefficientTable::at(int k, int i) const {
    auto itk = a.find(k);
    if (itk == a.end()) return 0;
    auto iti = itk->second.find(i);
    return iti == itk->second.end() ? Int(0) : iti->second;
}

CoefficientTable a_coefficients(long q1, long q2) {
    const Int s = q1 + q2, p = Int(q1) * q2;
    CoefficientTable t;
    t.q1 = q1;
    t.q2 = q2;
    for (int k = 2; k <= 7; ++k) {
        for (int i = 2; i <= k; ++i) {
            Int v = binom(k, i) * ipow(s, i);
            if (i >= 2 && binom(k - 2, i - 2) != 0)
                v -= k * binom(k - 2, i - 2) * p * ipow(s, i - 2);
            if (i >= 4 && binom(k - 4, i - 4) != 0)
                v += Int(k) * (k - 3) / 2 * binom(k - 4, i - 4) * p * p *
                     ipow(s, i - 4);
            if (i >= 6 && binom(k - 6, i - 6) != 0)
                v -= (Int(k) * k - 8 * k + 14) * binom(k - 6, i - 6) * p * p * p *
                     ipow(s, i - 6);
            t.a[k][i] = v;
        }
    }
    return t;
}

const char* method_name(CountMethod m) {
    switch (m) {
        case CountMethod::recursive: return "recursive";
        case CountMethod::ek: return "ek";
        case CountMethod::lambda: return "lambda";
    }
    return "?";
}

namespace {

Int signed_pow(long q, int k) {
    Int r = ipow(Int(q), k);
    return (k % 2 == 0) ? r : -r;  // (-q)^k
}

}  // namespace

CycleCountReport count_recursive(const BiregularProfile& profile,
                                 const ShiftedMomentTable& E, int K) {
    if (K > E.K)
        throw Error(errc::missing_moments, "moment table too shallow");
    const Int p = Int(profile.q1) * profile.q2;
    auto S = lifted_s_sums(E, p, K);

    CycleCountReport rep;
    rep.method = CountMethod::recursive;
    for (int k = 1; k <= K; ++k) {
        Int num = Int(profile.edge_count) - (profile.m + profile.n) +
                  signed_pow(profile.q1, k) * (profile.n - profile.rank) +
                  signed_pow(profile.q2, k) * (profile.m - profile.rank) + S[k];
        rep.counts[k] = exact_div(num, 2 * k, k);
    }
    return rep;
}

CycleCountReport count_via_ek(const BiregularProfile& profile,
                              const ShiftedMomentTable& E, int K) {
    if (K > 7)
        throw Error(errc::k_too_large,
                    "closed E_k coefficients stop at k = 7; use the recursive method");
    if (K > E.K)
        throw Error(errc::missing_moments, "moment table too shallow");
    const Int p = Int(profile.q1) * profile.q2;

    CycleCountReport rep;
    rep.method = CountMethod::ek;
    for (int k = 1; k <= K; ++k) {
        Int q1k = signed_pow(profile.q1, k), q2k = signed_pow(profile.q2, k);
        // |E|(1 + ((-q1)^k - 1)/(q1+1) + ((-q2)^k - 1)/(q2+1)) expanded
        // through n = |E|/(q1+1), m = |E|/(q2+1) to stay integral.
        Int num = Int(profile.edge_count) + profile.n * (q1k - 1) +
                  profile.m * (q2k - 1) - profile.rank * (q1k + q2k);
        num += E.at(k);
        num -= k * p * E.at(k - 2);
        num += Int(k) * (k - 3) / 2 * p * p * E.at(k - 4);
        num -= (Int(k) * k - 8 * k + 14) * p * p * p * E.at(k - 6);
        rep.counts[k] = exact_div(num, 2 * k, k);
    }
    return rep;
}

int lambda_k_limit(int girth) {
    if (girth >= 8) return 7;
    if (girth >= 6) return 5;
    if (girth >= 4) return 3;
    return 1;
}

CycleCountReport count_via_lambda(const BiregularProfile& profile,
                                  const PowerSumTable& T, int girth, int K) {
    if (K > 7)
        throw Error(errc::k_too_large, "lambda-power formulas stop at k = 7");
    if (K > lambda_k_limit(girth))
        throw Error(errc::girth_precondition_unmet,
                    "N_" + std::to_string(2 * K) + " requires girth >= " +
                        std::to_string(K >= 6 ? 8 : 6));
    if (K > T.K)
        throw Error(errc::missing_moments, "power sums too shallow");

    const Int s = profile.q1 + profile.q2;
    const Int p = Int(profile.q1) * profile.q2;
    const Int edges = profile.edge_count;
    auto A = a_constants(profile.q1, profile.q2);

    CycleCountReport rep;
    rep.method = CountMethod::lambda;
    rep.counts[1] = 0;  // N_2 = 0 on any simple graph
    std::map<int, Int>& N = rep.counts;
    for (int k = 2; k <= K; ++k) {
        Int tail = exact_div(T.at(k) - edges * A.at(k), 2 * k, k);
        switch (k) {
            case 2: N[2] = tail; break;
            case 3: N[3] = -2 * s * N[2] + tail; break;
            case 4: N[4] = -3 * s * N[3] + tail; break;
            case 5:
                N[5] = -4 * s * N[4] - 3 * (2 * s * s + p) * N[3] + tail;
                break;
            case 6:
                N[6] = -5 * s * N[5] - 2 * (5 * s * s + 2 * p) * N[4] + tail;
                break;
            case 7:
                N[7] = -6 * s * N[6] - 5 * (3 * s * s + p) * N[5] -
                       4 * s * (5 * s * s + 6 * p) * N[4] + tail;
                break;
        }
        if (N[k] < 0)
            throw Error(errc::non_integer_count,
                        "negative cycle count N_" + std::to_string(2 * k));
    }
    return rep;
}

GirthCertificate girth_certificate(const BiregularProfile& profile,
                                   const PowerSumTable& T) {
    auto A = a_constants(profile.q1, profile.q2);
    GirthCertificate cert;
    int jmax = std::min(7, T.K);
    int first_fail = 0;
    for (int j = 2; j <= jmax; ++j) {
        bool ok = (T.at(j) == Int(profile.edge_count) * A.at(j));
        cert.conditions.push_back({j, ok});
        if (!ok) {
            first_fail = j;
            break;
        }
    }
    cert.certified_k = first_fail ? first_fail
                                  : jmax + 1;  // all checked conditions hold
    cert.certified_girth = 2 * cert.certified_k;
    return cert;
}

}  // namespace tanner
