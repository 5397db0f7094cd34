#include "vsb/dilation.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace vsb {

NewtonPolytope newton_polytope(const PolyMap& f) {
    DegreeMatrix d = f.degree_matrix();
    NewtonPolytope np;
    np.nvars = d.nvars;
    np.generators.push_back(ExponentVec(static_cast<std::size_t>(d.nvars), 0));
    for (auto& c : d.columns) np.generators.push_back(c);
    return np;
}

namespace {

void check_coverage(const std::vector<ExponentVec>& cols, int nvars) {
    for (int i = 0; i < nvars; ++i) {
        bool covered = false;
        for (const auto& c : cols)
            if (c[static_cast<std::size_t>(i)] > 0) {
                covered = true;
                break;
            }
        if (!covered)
            throw UncoverableCoordinateError(
                "coordinate " + std::to_string(i + 1) +
                " is zero in every column");
    }
}

/*
 * Dense exact-rational simplex on equality constraints with variables
 * >= 0. Bland's rule (least-index entering and leaving) guarantees
 * termination. Small problems only: rows = nvars <= a handful, columns
 * = matrix columns + artificials.
 */
class Simplex {
public:
    Simplex(const std::vector<ExponentVec>& cols, const ExponentVec& target)
        : rows_(target.size()), m_(cols.size()) {
        std::size_t width = m_ + rows_ + 1;
        t_.assign(rows_, std::vector<Rational>(width, Rational(0)));
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < m_; ++j)
                t_[i][j] = Rational(cols[j][i]);
            t_[i][m_ + i] = 1;
            t_[i].back() = Rational(target[i]);
            basis_[i] = m_ + i;
        }
    }

    // Returns false when the constraints are infeasible.
    bool solve() {
        // Phase 1: minimize the artificial sum.
        std::vector<Rational> cost1(m_ + rows_, Rational(0));
        for (std::size_t j = m_; j < m_ + rows_; ++j) cost1[j] = 1;
        run(cost1, m_ + rows_);
        Rational art = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] >= m_) art += t_[i].back();
        if (art != 0) return false;

        // Pivot leftover degenerate artificials out; rows that cannot be
        // pivoted are redundant constraints and get dropped.
        for (std::size_t i = 0; i < rows_;) {
            if (basis_[i] < m_) {
                ++i;
                continue;
            }
            std::size_t enter = m_;
            for (std::size_t j = 0; j < m_; ++j)
                if (t_[i][j] != 0) {
                    enter = j;
                    break;
                }
            if (enter < m_) {
                pivot(i, enter);
                ++i;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --rows_;
            }
        }

        // Phase 2: minimize the structural sum; artificials are barred
        // from entering by capping the scan width.
        std::vector<Rational> cost2(m_, Rational(1));
        run(cost2, m_);
        return true;
    }

    Rational objective() const {
        Rational v = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < m_) v += t_[i].back();
        return v;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(m_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < m_) x[basis_[i]] = t_[i].back();
        return x;
    }

private:
    void run(const std::vector<Rational>& cost, std::size_t scan_width) {
        for (;;) {
            std::size_t enter = scan_width;
            for (std::size_t j = 0; j < scan_width; ++j) {
                // reduced cost c_j - c_B . column_j
                Rational rc = j < cost.size() ? cost[j] : Rational(0);
                for (std::size_t i = 0; i < rows_; ++i) {
                    std::size_t b = basis_[i];
                    Rational cb = b < cost.size() ? cost[b] : Rational(0);
                    if (cb != 0) rc -= cb * t_[i][j];
                }
                if (rc < 0) {
                    enter = j;
                    break; // Bland: least index wins
                }
            }
            if (enter == scan_width) return; // optimal
            std::size_t leave = rows_;
            Rational best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i].back() / t_[i][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows_)
                throw Error("dilation LP is unbounded"); // impossible: cost >= 0
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Rational d = t_[row][col];
        for (auto& v : t_[row]) v /= d;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            Rational f = t_[i][col];
            for (std::size_t j = 0; j < t_[i].size(); ++j)
                t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t m_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::size_t> basis_;
};

} // namespace

std::optional<LpSolution> lp_min_combination(const DegreeMatrix& D,
                                             const ExponentVec& target) {
    if (target.size() != static_cast<std::size_t>(D.nvars))
        throw BadParamsError("target arity does not match the matrix");
    if (D.columns.empty()) return std::nullopt;
    Simplex s(D.columns, target);
    if (!s.solve()) return std::nullopt;
    LpSolution sol;
    sol.value = s.objective();
    sol.coeffs = s.solution();
    return sol;
}

MuResult mu_from_matrix(const DegreeMatrix& D) {
    check_coverage(D.columns, D.nvars);
    int n = D.nvars;
    std::uint64_t d = 0;
    for (const auto& c : D.columns) d = std::max(d, total_degree(c));
    std::uint64_t hi = static_cast<std::uint64_t>(n) * d;

    std::optional<MuResult> best;
    ExponentVec target(static_cast<std::size_t>(n), 1);
    for (;;) {
        auto sol = lp_min_combination(D, target);
        if (sol && (!best || sol->value < best->mu)) {
            MuResult r;
            r.mu = sol->value;
            r.witness_target = target;
            r.witness_coeffs = sol->coeffs;
            best = std::move(r);
        }
        // odometer over [1, n*d]^n, first coordinate fastest
        std::size_t i = 0;
        while (i < target.size()) {
            if (++target[i] <= hi) break;
            target[i] = 1;
            ++i;
        }
        if (i == target.size()) break;
    }
    if (!best)
        throw Error("dilation factor search found no feasible target"); // unreachable under coverage
    return *best;
}

MuResult mu(const PolyMap& f) {
    auto unused = f.unused_variables();
    if (!unused.empty()) {
        std::string list;
        for (int i : unused) list += (list.empty() ? "x" : ", x") + std::to_string(i);
        throw UnusedVariablesError("variables appear in no component: " + list);
    }
    return mu_from_matrix(f.degree_matrix());
}

OmegaResult omega_from_matrix(const DegreeMatrix& D, std::uint64_t q) {
    if (q < 2) throw BadParamsError("q must be at least 2");
    check_coverage(D.columns, D.nvars);
    int n = D.nvars;
    std::size_t m = D.columns.size();
    std::uint64_t M = q - 1;

    const std::uint64_t cap = 1ull << 24;
    if (n >= 24) throw DomainTooLargeError("multiplicity state space too large");
    std::uint64_t nstates = 1ull << n;
    for (int i = 0; i < n; ++i) {
        if (nstates > cap / M)
            throw DomainTooLargeError("multiplicity state space too large");
        nstates *= M;
    }

    // Column residues and positivity masks drive the transition.
    std::vector<std::vector<std::uint64_t>> col_res(m);
    std::vector<std::uint32_t> col_mask(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        col_res[j].resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::uint32_t e = D.columns[j][static_cast<std::size_t>(i)];
            col_res[j][static_cast<std::size_t>(i)] = M == 1 ? 0 : e % M;
            if (e > 0) col_mask[j] |= 1u << i;
        }
    }

    std::vector<std::int32_t> dist(nstates, -1);
    std::vector<std::int64_t> parent(nstates, -1);
    std::vector<std::int32_t> via(nstates, -1);
    std::deque<std::uint64_t> queue;
    dist[0] = 0;
    queue.push_back(0);
    std::uint64_t full = (1ull << n) - 1;
    std::uint64_t goal = full; // residues all zero, mask full
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(n));

    while (!queue.empty()) {
        std::uint64_t s = queue.front();
        queue.pop_front();
        if (s == goal) break;
        std::uint64_t mask = s & full;
        std::uint64_t r = s >> n;
        for (int i = 0; i < n; ++i) {
            digits[static_cast<std::size_t>(i)] = M == 1 ? 0 : r % M;
            r /= M == 1 ? 1 : M;
        }
        // Columns are scanned in descending index order. First-touch
        // parents then resolve ties between equal-length witnesses
        // toward small multiplicities on early columns, and the
        // recovered witness is deterministic for a fixed column order.
        for (std::size_t j = m; j-- > 0;) {
            std::uint64_t nr = 0;
            for (int i = n; i-- > 0;) {
                std::uint64_t v = digits[static_cast<std::size_t>(i)] +
                                  col_res[j][static_cast<std::size_t>(i)];
                if (M > 1 && v >= M) v -= M;
                nr = M == 1 ? 0 : nr * M + v;
            }
            std::uint64_t ns = (nr << n) | (mask | col_mask[j]);
            if (dist[ns] == -1) {
                dist[ns] = dist[s] + 1;
                parent[ns] = static_cast<std::int64_t>(s);
                via[ns] = static_cast<std::int32_t>(j);
                queue.push_back(ns);
            }
        }
    }

    if (dist[goal] < 0)
        throw Error("no multiplicity vector reaches the target lattice"); // unreachable under coverage

    OmegaResult res;
    res.witness_k.assign(m, 0);
    std::uint64_t s = goal;
    while (s != 0) {
        res.witness_k[static_cast<std::size_t>(via[s])] += 1;
        s = static_cast<std::uint64_t>(parent[s]);
    }
    // Cap normalization: k_j >= q gets folded to an equivalent residue in
    // [1, q-1]. A shortest path never needs it; see the header note.
    for (auto& k : res.witness_k)
        if (k >= q) {
            k = static_cast<std::uint32_t>(k % M);
            if (k == 0) k = static_cast<std::uint32_t>(M);
        }
    for (auto k : res.witness_k) res.omega += k;
    return res;
}

OmegaResult omega(const PolyMap& f) {
    auto unused = f.unused_variables();
    if (!unused.empty()) {
        std::string list;
        for (int i : unused) list += (list.empty() ? "x" : ", x") + std::to_string(i);
        throw UnusedVariablesError("variables appear in no component: " + list);
    }
    return omega_from_matrix(f.degree_matrix(), f.field()->q());
}

int gamma(const std::vector<ExponentVec>& vectors, int nvars) {
    if (vectors.empty())
        throw UncoverableCoordinateError("empty vector set covers nothing");
    check_coverage(vectors, nvars);
    std::size_t m = vectors.size();
    int cap = std::min<int>(nvars, static_cast<int>(m));
    for (int size = 1; size <= cap; ++size) {
        // lexicographic combinations of indices
        std::vector<std::size_t> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        for (;;) {
            bool all_positive = true;
            for (int coord = 0; coord < nvars && all_positive; ++coord) {
                std::uint64_t s = 0;
                for (auto j : idx) s += vectors[j][static_cast<std::size_t>(coord)];
                if (s == 0) all_positive = false;
            }
            if (all_positive) return size;
            // next combination
            int i = size - 1;
            while (i >= 0 &&
                   idx[static_cast<std::size_t>(i)] ==
                       m - static_cast<std::size_t>(size - i)) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < size; ++k)
                idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
        }
    }
    throw Error("covered set has no positive subset sum"); // unreachable
}

ChainCheck chain_check(const PolyMap& f) {
    std::uint64_t q = f.field()->q();
    std::uint64_t d = f.degree();
    int n = f.nvars();
    MuResult m = mu(f);
    OmegaResult o = omega(f);
    ChainCheck c;
    c.omega = o.omega;
    c.mu_times_qminus1 = m.mu * Rational(q - 1);
    c.n_qminus1_over_d = Rational(static_cast<std::uint64_t>(n) * (q - 1), d);
    c.holds = Rational(c.omega) >= c.mu_times_qminus1 &&
              c.mu_times_qminus1 >= c.n_qminus1_over_d;
    c.degree_below_nvars = d < static_cast<std::uint64_t>(n);
    return c;
}

} // namespace vsb
