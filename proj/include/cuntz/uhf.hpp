#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "config.hpp"
#include "element.hpp"

namespace cuntz {

/**
 * Exact 2^k x 2^k matrix over Q(i, sqrt2), the level-k realization of the
 * gauge-invariant subalgebra: the balanced monomial s_I s_J^* with
 * |I| = |J| = k maps to the matrix unit E_{I,J}.  Rows and columns are
 * indexed by words of length k with the FIRST letter as the most significant
 * bit, so prepending a generator letter selects a diagonal block and
 * appending one tensors with the 2x2 identity on the right.
 */
class UhfMatrix {
  public:
    explicit UhfMatrix(int level) : level_(level) {
        if (level < 0 || level > 30) throw std::invalid_argument("UhfMatrix: bad level");
        dim_ = std::size_t(1) << level;
        e_.assign(dim_ * dim_, Scalar::zero());
    }

    static UhfMatrix identity(int level) {
        UhfMatrix m(level);
        for (std::size_t r = 0; r < m.dim_; ++r) m.at(r, r) = Scalar::one();
        return m;
    }

    int level() const { return level_; }
    std::size_t dim() const { return dim_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

    friend bool operator==(const UhfMatrix& x, const UhfMatrix& y) {
        return x.level_ == y.level_ && x.e_ == y.e_;
    }
    friend bool operator!=(const UhfMatrix& x, const UhfMatrix& y) { return !(x == y); }

    friend UhfMatrix operator+(const UhfMatrix& x, const UhfMatrix& y) {
        check_level(x, y);
        UhfMatrix r(x.level_);
        for (std::size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = x.e_[k] + y.e_[k];
        return r;
    }

    friend UhfMatrix operator-(const UhfMatrix& x, const UhfMatrix& y) {
        check_level(x, y);
        UhfMatrix r(x.level_);
        for (std::size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = x.e_[k] - y.e_[k];
        return r;
    }

    friend UhfMatrix operator*(const Scalar& s, const UhfMatrix& x) {
        UhfMatrix r(x.level_);
        for (std::size_t k = 0; k < x.e_.size(); ++k) r.e_[k] = s * x.e_[k];
        return r;
    }

    // The matrices arising here are extremely sparse (signed partial
    // permutations and small sums of them), so the product skips zero rows
    // of the left factor.
    friend UhfMatrix operator*(const UhfMatrix& x, const UhfMatrix& y) {
        check_level(x, y);
        UhfMatrix r(x.level_);
        for (std::size_t i = 0; i < x.dim_; ++i) {
            for (std::size_t k = 0; k < x.dim_; ++k) {
                const Scalar& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (std::size_t j = 0; j < x.dim_; ++j) {
                    const Scalar& ykj = y.at(k, j);
                    if (ykj.is_zero()) continue;
                    r.at(i, j) += xik * ykj;
                }
            }
        }
        return r;
    }

    UhfMatrix adjoint() const {
        UhfMatrix r(level_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).conj();
        return r;
    }

    // X -> X (x) I_2: the level-(k+1) image of the same algebra element.
    UhfMatrix tensor_identity() const {
        UhfMatrix r(level_ + 1);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                if (at(i, j).is_zero()) continue;
                r.at(2 * i, 2 * j) = at(i, j);
                r.at(2 * i + 1, 2 * j + 1) = at(i, j);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    Eigen::MatrixXcd to_complex() const {
        Eigen::MatrixXcd m(dim_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m(i, j) = at(i, j).to_complex();
        return m;
    }

  private:
    static void check_level(const UhfMatrix& x, const UhfMatrix& y) {
        if (x.level_ != y.level_)
            throw std::invalid_argument("UhfMatrix: mixed levels");
    }

    int level_;
    std::size_t dim_;
    std::vector<Scalar> e_;
};

// Word index with the first letter as the most significant bit.
inline std::size_t word_index(const Word& w) {
    std::size_t idx = 0;
    for (auto l : w) idx = idx * 2 + (l - 1);
    return idx;
}

/**
 * Level-k matrix of a gauge-invariant element: expand to level k and place
 * each coefficient on its matrix unit.  Requires every term balanced with
 * |J| <= k, and k within the configured limit.
 */
inline UhfMatrix to_matrix_level(const Element& x, int k,
                                 const Limits& limits = default_limits()) {
    if (x.generator_count() != 2)
        throw std::invalid_argument("to_matrix_level: defined for d = 2 only");
    if (k < 0) throw std::invalid_argument("to_matrix_level: negative level");
    if (k > limits.max_level)
        throw ResourceError("to_matrix_level: level " + std::to_string(k) +
                            " exceeds limit " + std::to_string(limits.max_level));
    if (!is_balanced(x))
        throw std::invalid_argument("to_matrix_level: element is not gauge-invariant");
    for (const auto& [m, c] : x.terms())
        if (int(m.annihilators.size()) > k)
            throw std::invalid_argument("to_matrix_level: level too small for element");
    UhfMatrix r(k);
    const Element ex = expand_to_level(x, k);
    for (const auto& [m, c] : ex.terms())
        r.at(word_index(m.creators), word_index(m.annihilators)) = c;
    return r;
}

// Smallest level whose matrix realization is faithful on x.
inline int min_matrix_level(const Element& x) {
    if (!is_balanced(x))
        throw std::invalid_argument("min_matrix_level: element is not gauge-invariant");
    int k = 0;
    for (const auto& [m, c] : x.terms())
        k = std::max(k, int(m.annihilators.size()));
    return k;
}

/**
 * Jordan-Wigner matrix of the n-th fermion mode on N sites:
 * Z^(x)(n-1) (x) P (x) I^(x)(N-n) with Z = diag(1, -1) and P = E_{1,2}.
 * Built directly from Kronecker products as an independent reference for the
 * symbolic fermion generators.
 */
inline UhfMatrix jordan_wigner(int n, int N, const Limits& limits = default_limits()) {
    if (n < 1 || n > N) throw std::invalid_argument("jordan_wigner: need 1 <= n <= N");
    if (N > limits.max_level)
        throw ResourceError("jordan_wigner: N exceeds level limit");
    auto kron2 = [](const UhfMatrix& a, const Scalar b[2][2]) {
        UhfMatrix r(a.level() + 1);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (std::size_t bi = 0; bi < 2; ++bi)
                    for (std::size_t bj = 0; bj < 2; ++bj)
                        if (!b[bi][bj].is_zero())
                            r.at(2 * i + bi, 2 * j + bj) = a.at(i, j) * b[bi][bj];
            }
        return r;
    };
    const Scalar Z[2][2] = {{Scalar::one(), Scalar::zero()},
                            {Scalar::zero(), -Scalar::one()}};
    const Scalar P[2][2] = {{Scalar::zero(), Scalar::one()},
                            {Scalar::zero(), Scalar::zero()}};
    const Scalar I2[2][2] = {{Scalar::one(), Scalar::zero()},
                             {Scalar::zero(), Scalar::one()}};
    UhfMatrix m = UhfMatrix::identity(0);
    for (int k = 0; k < n - 1; ++k) m = kron2(m, Z);
    m = kron2(m, P);
    for (int k = n; k < N; ++k) m = kron2(m, I2);
    return m;
}

// Largest singular value (float) of the exact matrix.
inline double operator_norm(const UhfMatrix& m) {
    if (m.dim() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m.to_complex());
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

// Operator norm of a gauge-invariant element, computed at its minimal
// faithful level.  Exact structure, float singular value.
inline double norm_gauge_invariant(const Element& x,
                                   const Limits& limits = default_limits()) {
    if (x.structurally_zero()) return 0.0;
    return operator_norm(to_matrix_level(x, min_matrix_level(x), limits));
}

// Smallest eigenvalue of a Hermitian exact matrix (float); used for
// positivity checks of transfer images.
inline double min_eigenvalue_hermitian(const UhfMatrix& m) {
    if (m.dim() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.to_complex(),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

/**
 * Permutative representation on basis indices 0..2^L-1: s_1: n -> 2n,
 * s_2: n -> 2n+1, compressed by the projection onto the first 2^L basis
 * vectors.  On the uncompressed sequence space this is a faithful
 * representation, so the compression norm is a lower bound for the operator
 * norm, monotone nondecreasing in L.
 */
struct PermutativeRep {
    int cutoff = 0;       // L
    std::size_t dim = 0;  // 2^L

    explicit PermutativeRep(int L, const Limits& limits = default_limits()) {
        if (L < 1) throw std::invalid_argument("PermutativeRep: need cutoff >= 1");
        if (L > limits.max_perm_depth)
            throw ResourceError("PermutativeRep: cutoff " + std::to_string(L) +
                                " exceeds limit " +
                                std::to_string(limits.max_perm_depth));
        if (L > 22) throw ResourceError("PermutativeRep: cutoff too large");
        cutoff = L;
        dim = std::size_t(1) << L;
    }

    // Letters append at the least significant digit: the word offset of
    // (w_1, ..., w_k) is sum (w_t - 1) 2^(t-1).
    static std::uint64_t word_offset(const Word& w) {
        std::uint64_t off = 0;
        for (std::size_t t = 0; t < w.size(); ++t)
            off += std::uint64_t(w[t] - 1) << t;
        return off;
    }

    // Apply the compressed element to v; out must be zero-filled.
    void apply(const Element& x, const std::vector<std::complex<double>>& v,
               std::vector<std::complex<double>>& out) const {
        for (const auto& [m, c] : x.terms()) {
            const std::uint64_t offJ = word_offset(m.annihilators);
            const std::uint64_t offI = word_offset(m.creators);
            const unsigned kJ = m.annihilators.size(), kI = m.creators.size();
            const std::uint64_t modJ = std::uint64_t(1) << kJ;
            const std::complex<double> cc = c.to_complex();
            for (std::uint64_t n = offJ; n < dim; n += modJ) {
                const std::uint64_t out_idx = ((n - offJ) >> kJ << kI) + offI;
                if (out_idx >= dim) continue;
                out[out_idx] += cc * v[n];
            }
        }
    }
};

namespace detail {

inline double vec_norm(const std::vector<std::complex<double>>& v) {
    double s = 0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

// Power iteration on (PxP)* (PxP) with a nondecreasing Rayleigh sequence.
// Returns the converged sqrt eigenvalue estimate and leaves the final vector
// in v for warm starts at larger cutoffs.
inline double compression_norm_iterate(const Element& x, const PermutativeRep& rep,
                                       std::vector<std::complex<double>>& v) {
    const Element xs = adjoint(x);
    const std::size_t dim = rep.dim;
    if (v.size() != dim) v.resize(dim, {0, 0});
    double nv = vec_norm(v);
    if (nv < 1e-300) {
        // Deterministic pseudo-random start.
        std::uint64_t s = 0x9e3779b97f4a7c15ull;
        for (auto& z : v) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            const double re = double((s >> 17) & 0xffff) / 65536.0 - 0.5;
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            const double im = double((s >> 17) & 0xffff) / 65536.0 - 0.5;
            z = {re, im};
        }
        nv = vec_norm(v);
    }
    for (auto& z : v) z /= nv;

    std::vector<std::complex<double>> w(dim), u(dim);
    double lambda = 0;
    int stale = 0;
    for (int it = 0; it < 4000; ++it) {
        std::fill(w.begin(), w.end(), std::complex<double>{0, 0});
        rep.apply(x, v, w);
        const double nw = vec_norm(w);
        const double cand = nw * nw;  // <v, B v> for unit v
        if (cand <= lambda + std::max(1e-15, 1e-13 * lambda)) {
            if (++stale > 16) {
                lambda = std::max(lambda, cand);
                break;
            }
        } else {
            stale = 0;
        }
        lambda = std::max(lambda, cand);
        if (nw < 1e-150) return 0.0;
        std::fill(u.begin(), u.end(), std::complex<double>{0, 0});
        rep.apply(xs, w, u);
        const double nu = vec_norm(u);
        if (nu < 1e-150) break;
        for (std::size_t k = 0; k < dim; ++k) v[k] = u[k] / nu;
    }
    return std::sqrt(lambda);
}

}  // namespace detail

/**
 * Monotone family of numeric lower bounds for the operator norm: compression
 * norms at cutoffs step, 2*step, ..., depth, each run warm-started with the
 * zero-padded maximizing vector of the previous cutoff (which makes the
 * reported sequence nondecreasing up to float rounding).
 */
inline std::vector<std::pair<int, double>> norm_lower_bound_profile(
    const Element& x, int depth, int step = 3,
    const Limits& limits = default_limits()) {
    if (x.generator_count() != 2)
        throw std::invalid_argument("norm_lower_bound: defined for d = 2 only");
    if (depth < 1) throw std::invalid_argument("norm_lower_bound: need depth >= 1");
    if (step < 1) step = depth;
    std::vector<int> cutoffs;
    for (int L = step; L < depth; L += step) cutoffs.push_back(L);
    cutoffs.push_back(depth);
    std::vector<std::pair<int, double>> out;
    std::vector<std::complex<double>> warm;
    double best = 0;
    for (int L : cutoffs) {
        PermutativeRep rep(L, limits);
        warm.resize(rep.dim, {0, 0});
        best = std::max(best, detail::compression_norm_iterate(x, rep, warm));
        out.emplace_back(L, best);
    }
    return out;
}

// Compression-norm lower bound at a single cutoff (cold start).
inline double norm_lower_bound(const Element& x, int L,
                               const Limits& limits = default_limits()) {
    if (x.generator_count() != 2)
        throw std::invalid_argument("norm_lower_bound: defined for d = 2 only");
    PermutativeRep rep(L, limits);
    std::vector<std::complex<double>> v;
    return detail::compression_norm_iterate(x, rep, v);
}

}  // namespace cuntz
