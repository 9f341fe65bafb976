#include "rtrop/linear.hpp"

#include "rtrop/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

namespace rtrop {

namespace {

Puiseux exact(const Puiseux& a, const Puiseux& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("inexact division in fraction-free elimination");
    return *q;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

KMatrix columns(const KMatrix& m, const std::vector<std::size_t>& cols) {
    KMatrix out;
    for (const auto& row : m) {
        std::vector<Puiseux> r;
        for (auto c : cols) r.push_back(row[c]);
        out.push_back(std::move(r));
    }
    return out;
}

KMatrix without_row(const KMatrix& m, std::size_t skip) {
    KMatrix out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (i != skip) out.push_back(m[i]);
    return out;
}

// Left kernel vector of an m x (m-1) matrix of rank m-1 by signed maximal minors.
std::vector<Puiseux> cofactor_kernel(const KMatrix& a) {
    std::vector<Puiseux> lambda;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Puiseux minor = a.front().empty() ? Puiseux(1L) : k_determinant(without_row(a, i));
        lambda.push_back(i % 2 == 0 ? minor : -minor);
    }
    return lambda;
}

// Adjugate of a square matrix.
KMatrix adjugate(const KMatrix& a) {
    const std::size_t n = a.size();
    KMatrix adj(n, std::vector<Puiseux>(n));
    if (n == 1) {
        adj[0][0] = Puiseux(1L);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            KMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<Puiseux> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            Puiseux d = k_determinant(minor);
            adj[j][i] = (i + j) % 2 == 0 ? d : -d;
        }
    }
    return adj;
}

Puiseux random_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> terms(1, 2);
    std::uniform_int_distribution<long> exponent(0, 2);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::vector<Puiseux::Term> ts;
    int k = terms(rng);
    for (int i = 0; i < k; ++i) ts.push_back({Rat(exponent(rng)), Rat(coeff(rng))});
    return Puiseux::from_terms(ts);
}

}  // namespace

std::size_t k_rank(KMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    Puiseux prev(1L);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pick = r;
        while (pick < rows && m[pick][c].is_zero()) ++pick;
        if (pick == rows) continue;
        std::swap(m[r], m[pick]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = exact(m[i][j] * m[r][c] - m[i][c] * m[r][j], prev);
            m[i][c] = Puiseux();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

Puiseux k_determinant(KMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Puiseux(1L);
    Puiseux prev(1L);
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[c].size() != n) throw DomainError("determinant of a non-square matrix");
        std::size_t pick = c;
        while (pick < n && m[pick][c].is_zero()) ++pick;
        if (pick == n) return Puiseux();
        if (pick != c) {
            std::swap(m[pick], m[c]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) m[i][j] = exact(m[i][j] * m[c][c] - m[i][c] * m[c][j], prev);
            m[i][c] = Puiseux();
        }
        prev = m[c][c];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

void LinearSystem::validate() const {
    if (n == 0) throw DomainError("linear system needs at least one variable");
    if (rows.empty()) throw DomainError("linear system has no rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n + 1) throw DomainError("row " + std::to_string(i + 1) + " has the wrong length");
        if (std::all_of(rows[i].begin(), rows[i].end(), [](const Puiseux& x) { return x.is_zero(); }))
            throw DomainError("row " + std::to_string(i + 1) + " is zero");
    }
}

KPoly CircuitForm::to_kpoly() const {
    const std::size_t n = coefficients.size() - 1;
    KPoly f(n);
    for (std::size_t i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        f.add_term(e, coefficients[i]);
    }
    f.add_term(Exponent(n, 0), coefficients[n]);
    return f;
}

std::vector<Puiseux> normalize_form(const std::vector<Puiseux>& form) {
    std::optional<Puiseux> content;
    for (const auto& x : form) {
        if (x.is_zero()) continue;
        content = content ? laurent_gcd(*content, x) : laurent_gcd(x, x);
    }
    if (!content) throw DomainError("cannot normalize the zero form");
    std::vector<Puiseux> out;
    for (const auto& x : form) out.push_back(x.is_zero() ? x : exact(x, *content));
    Rat min_val;
    bool first = true;
    for (const auto& x : out) {
        if (x.is_zero()) continue;
        if (first || x.valuation() < min_val) min_val = x.valuation();
        first = false;
    }
    const Puiseux* lead = nullptr;
    for (const auto& x : out)
        if (!x.is_zero()) {
            lead = &x;
            break;
        }
    Rat scale = 1 / lead->principal();
    for (auto& x : out) x = x.shifted(-min_val).scaled(scale);
    return out;
}

std::vector<CircuitForm> circuits(const LinearSystem& sys) {
    sys.validate();
    const KMatrix& a = sys.rows;
    const std::size_t m = a.size();
    {
        KMatrix independent;
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < m; ++i) {
            auto trial = independent;
            trial.push_back(a[i]);
            if (k_rank(trial) == trial.size()) {
                independent = std::move(trial);
                kept.push_back(i);
                continue;
            }
            std::string witness;
            for (auto k : kept) witness += (witness.empty() ? "" : ", ") + std::to_string(k + 1);
            throw DomainError("dependent input rows: row " + std::to_string(i + 1) + " lies in the span of rows {" +
                              witness + "}");
        }
    }
    const std::size_t cols = sys.n + 1;
    std::vector<CircuitForm> out;
    std::set<std::vector<std::string>> seen;
    for_each_subset(cols, m - 1, [&](const std::vector<std::size_t>& d) {
        KMatrix ad = columns(a, d);
        if (k_rank(ad) != m - 1) return;
        auto lambda = cofactor_kernel(ad);
        std::vector<Puiseux> y(cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < m; ++i) y[j] += lambda[i] * a[i][j];
        auto form = normalize_form(y);
        std::vector<std::string> key;
        for (const auto& x : form) key.push_back(render(x));
        if (!seen.insert(key).second) return;
        CircuitForm c{form, {}};
        for (std::size_t j = 0; j < cols; ++j)
            if (!form[j].is_zero()) c.support.push_back(j);
        out.push_back(std::move(c));
    });
    return out;
}

LinearVerdict linear_member(const std::vector<CircuitForm>& circuits, const SignedTropPoint& p) {
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        if (!rt_member(tropicalize(circuits[i].to_kpoly()), p)) return {false, i};
    }
    return {true, std::nullopt};
}

std::vector<std::vector<Puiseux>> sample_solutions(const LinearSystem& sys, std::size_t count, std::uint64_t seed) {
    sys.validate();
    const std::size_t n = sys.n;
    const std::size_t m = sys.rows.size();
    const KMatrix& a = sys.rows;
    if (k_rank(a) != m) throw DomainError("dependent input rows");

    // Candidate bases: r columns among the variables with nonzero minor D for
    // which adj(A_B) c / D is a finite sum.
    std::optional<std::vector<std::size_t>> basis;
    std::vector<Puiseux> particular;
    Puiseux det;
    KMatrix adj;
    for_each_subset(n, m, [&](const std::vector<std::size_t>& b) {
        if (basis) return;
        KMatrix ab;
        for (const auto& row : a) {
            std::vector<Puiseux> r;
            for (auto c : b) r.push_back(row[c]);
            ab.push_back(std::move(r));
        }
        Puiseux d = k_determinant(ab);
        if (d.is_zero()) return;
        KMatrix adj_b = adjugate(ab);
        std::vector<Puiseux> part;
        for (std::size_t i = 0; i < m; ++i) {
            Puiseux acc;
            for (std::size_t k = 0; k < m; ++k) acc -= adj_b[i][k] * a[k][n];
            auto q = divide_exact(acc, d);
            if (!q) return;
            part.push_back(*q);
        }
        basis = b;
        particular = std::move(part);
        det = d;
        adj = std::move(adj_b);
    });
    if (!basis) throw DomainError("system has no solution with finite Puiseux coordinates");

    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!std::binary_search(basis->begin(), basis->end(), j)) free.push_back(j);

    auto build = [&](const std::vector<Puiseux>& nu) {
        std::vector<Puiseux> x(n);
        for (std::size_t f = 0; f < free.size(); ++f) x[free[f]] = det * nu[f];
        for (std::size_t i = 0; i < m; ++i) {
            Puiseux acc = particular[i];
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t f = 0; f < free.size(); ++f) acc -= adj[i][k] * a[k][free[f]] * nu[f];
            x[(*basis)[i]] = acc;
        }
        return x;
    };
    auto nonzero = [](const std::vector<Puiseux>& x) {
        return std::none_of(x.begin(), x.end(), [](const Puiseux& v) { return v.is_zero(); });
    };

    if (free.empty()) {
        auto x = build({});
        if (!nonzero(x)) throw DomainError("the unique solution has a zero coordinate");
        return {x};
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Puiseux>> out;
    const std::size_t max_attempts = 100 * (count + 1);
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > max_attempts) throw SearchExhausted("could not sample solutions off the coordinate hyperplanes");
        std::vector<Puiseux> nu;
        for (std::size_t f = 0; f < free.size(); ++f) nu.push_back(random_coefficient(rng));
        auto x = build(nu);
        if (nonzero(x)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace rtrop
