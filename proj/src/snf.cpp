#include "snf.hpp"

namespace mk3 {

IntMat mat_identity(size_t n) {
    IntMat I(n, IntVec(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    size_t n = A.size(), m = B[0].size(), k = B.size();
    IntMat C(n, IntVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

IntMat mat_transpose(const IntMat& A) {
    size_t n = A.size(), m = A[0].size();
    IntMat T(m, IntVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) T[j][i] = A[i][j];
    return T;
}

bool mat_eq(const IntMat& A, const IntMat& B) {
    if (A.size() != B.size()) return false;
    for (size_t i = 0; i < A.size(); ++i)
        if (A[i] != B[i]) return false;
    return true;
}

IntVec mat_apply(const IntMat& A, const IntVec& v) {
    IntVec r(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
    return r;
}

Int mat_det(IntMat A) {
    size_t n = A.size();
    Int prev = 1;
    int sign = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && A[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(A[piv], A[c]);
            sign = -sign;
        }
        for (size_t i = c + 1; i < n; ++i)
            for (size_t j = c + 1; j < n; ++j)
                A[i][j] = (A[i][j] * A[c][c] - A[i][c] * A[c][j]) / prev;
        prev = A[c][c];
    }
    return sign * A[n - 1][n - 1];
}

std::array<int, 3> symmetric_inertia(const IntMat& A) {
    // symmetric congruence reduction over Q, counting pivot signs (Sylvester)
    size_t n = A.size();
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
    int pos = 0, neg = 0, zero = 0;
    std::vector<bool> used(n, false);
    size_t done = 0;
    while (done < n) {
        size_t piv = n;
        for (size_t i = 0; i < n; ++i)
            if (!used[i] && M[i][i] != Rat(0)) { piv = i; break; }
        if (piv == n) {
            size_t a = n, b = n;
            for (size_t i = 0; i < n && a == n; ++i)
                if (!used[i])
                    for (size_t j = i + 1; j < n; ++j)
                        if (!used[j] && M[i][j] != Rat(0)) { a = i; b = j; break; }
            if (a == n) {
                for (size_t i = 0; i < n; ++i)
                    if (!used[i]) ++zero;
                break;
            }
            // congruence row/col a += row/col b makes the (a,a) entry 2*M[a][b] != 0
            for (size_t j = 0; j < n; ++j) M[a][j] += M[b][j];
            for (size_t i = 0; i < n; ++i) M[i][a] += M[i][b];
            continue;
        }
        Rat d = M[piv][piv];
        if (d > Rat(0)) ++pos;
        else ++neg;
        used[piv] = true;
        ++done;
        for (size_t i = 0; i < n; ++i) {
            if (used[i] || M[i][piv] == Rat(0)) continue;
            Rat f = M[i][piv] / d;
            for (size_t j = 0; j < n; ++j)
                if (!used[j]) M[i][j] -= f * M[piv][j];
        }
    }
    return {pos, neg, zero};
}

std::vector<Int> smith_invariant_factors(IntMat A) {
    size_t m = A.size();
    size_t n = m ? A[0].size() : 0;
    std::vector<Int> divs;
    size_t r = 0;
    auto iabs = [](const Int& v) { return v < 0 ? -v : v; };
    while (r < m && r < n) {
        size_t pi = m, pj = n;
        Int best = 0;
        for (size_t i = r; i < m; ++i)
            for (size_t j = r; j < n; ++j)
                if (A[i][j] != 0 && (best == 0 || iabs(A[i][j]) < best)) {
                    best = iabs(A[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == m) break;
        std::swap(A[r], A[pi]);
        for (size_t i = 0; i < m; ++i) std::swap(A[i][r], A[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = r + 1; i < m; ++i) {
                if (A[i][r] == 0) continue;
                Int q = A[i][r] / A[r][r];
                for (size_t j = 0; j < n; ++j) A[i][j] -= q * A[r][j];
                if (A[i][r] != 0) {
                    std::swap(A[r], A[i]);
                    again = true;
                }
            }
            for (size_t j = r + 1; j < n; ++j) {
                if (A[r][j] == 0) continue;
                Int q = A[r][j] / A[r][r];
                for (size_t i = 0; i < m; ++i) A[i][j] -= q * A[i][r];
                if (A[r][j] != 0) {
                    for (size_t i = 0; i < m; ++i) std::swap(A[i][r], A[i][j]);
                    again = true;
                }
            }
            if (!again) {
                // divisibility fix-up
                for (size_t i = r + 1; i < m && !again; ++i)
                    for (size_t j = r + 1; j < n && !again; ++j)
                        if (A[i][j] % A[r][r] != 0) {
                            for (size_t t = 0; t < n; ++t) A[r][t] += A[i][t];
                            again = true;
                        }
            }
        }
        divs.push_back(iabs(A[r][r]));
        ++r;
    }
    return divs;
}

std::vector<IntVec> kernel_basis(const IntMat& Ain) {
    size_t m = Ain.size();
    size_t n = m ? Ain[0].size() : 0;
    IntMat A = Ain;
    IntMat U = mat_identity(n);  // column operation tracker
    auto iabs = [](const Int& v) { return v < 0 ? -v : v; };
    size_t r = 0;
    for (size_t i = 0; i < m && r < n; ++i) {
        while (true) {
            size_t piv = n;
            Int best = 0;
            for (size_t j = r; j < n; ++j)
                if (A[i][j] != 0 && (best == 0 || iabs(A[i][j]) < best)) {
                    best = iabs(A[i][j]);
                    piv = j;
                }
            if (piv == n) break;  // row i already zero on free columns
            bool clean = true;
            for (size_t j = r; j < n; ++j) {
                if (j == piv || A[i][j] == 0) continue;
                Int q = A[i][j] / A[i][piv];
                for (size_t t = 0; t < m; ++t) A[t][j] -= q * A[t][piv];
                for (size_t t = 0; t < n; ++t) U[t][j] -= q * U[t][piv];
                if (A[i][j] != 0) clean = false;
            }
            if (clean) {
                for (size_t t = 0; t < m; ++t) std::swap(A[t][r], A[t][piv]);
                for (size_t t = 0; t < n; ++t) std::swap(U[t][r], U[t][piv]);
                ++r;
                break;
            }
        }
    }
    std::vector<IntVec> ker;
    for (size_t j = r; j < n; ++j) {
        bool zero = true;
        for (size_t i = 0; i < m; ++i)
            if (A[i][j] != 0) zero = false;
        if (zero) {
            IntVec v(n);
            for (size_t t = 0; t < n; ++t) v[t] = U[t][j];
            ker.push_back(v);
        }
    }
    return ker;
}

IntVec solve_exact(const IntMat& A, const IntVec& rhs) {
    size_t m = A.size(), n = A[0].size();
    std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
        M[i][n] = Rat(rhs[i]);
    }
    std::vector<size_t> pivcol;
    size_t row = 0;
    for (size_t c = 0; c < n && row < m; ++c) {
        size_t piv = row;
        while (piv < m && M[piv][c] == Rat(0)) ++piv;
        if (piv == m) continue;
        std::swap(M[piv], M[row]);
        Rat pv = M[row][c];
        for (size_t j = 0; j <= n; ++j) M[row][j] /= pv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || M[i][c] == Rat(0)) continue;
            Rat f = M[i][c];
            for (size_t j = 0; j <= n; ++j) M[i][j] -= f * M[row][j];
        }
        pivcol.push_back(c);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (M[i][n] != Rat(0)) throw std::invalid_argument("solve_exact: inconsistent system");
    IntVec x(n, 0);
    for (size_t i = 0; i < pivcol.size(); ++i) {
        const Rat& v = M[i][n];
        if (v.denominator() != 1) throw std::invalid_argument("solve_exact: non-integral solution");
        x[pivcol[i]] = v.numerator();
    }
    return x;
}

IntMat solve_exact_mat(const IntMat& A, const IntMat& B) {
    size_t cols = B[0].size();
    IntMat X;
    for (size_t j = 0; j < cols; ++j) {
        IntVec rhs(B.size());
        for (size_t i = 0; i < B.size(); ++i) rhs[i] = B[i][j];
        IntVec x = solve_exact(A, rhs);
        if (X.empty()) X.assign(x.size(), IntVec(cols, 0));
        for (size_t i = 0; i < x.size(); ++i) X[i][j] = x[i];
    }
    return X;
}

}  // namespace mk3
