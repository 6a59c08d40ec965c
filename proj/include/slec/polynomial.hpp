#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace slec {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse exponent vector. Only positive exponents are stored.
class Monomial {
public:
    Monomial() = default;

    Monomial(std::initializer_list<std::pair<int, int>> exps) {
        for (auto [v, e] : exps) set(v, e);
    }

    static Monomial from_dense(const std::vector<int>& exps) {
        Monomial m;
        for (std::size_t v = 0; v < exps.size(); ++v) m.set(static_cast<int>(v), exps[v]);
        return m;
    }

    int exponent(int var) const {
        for (auto [v, e] : entries_)
            if (v == var) return e;
        return 0;
    }

    Monomial& set(int var, int exp) {
        if (var < 0) throw input_error("monomial: negative variable index");
        if (exp < 0) throw input_error("monomial: negative exponent");
        auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                                   [](const std::pair<int, int>& p, int v) { return p.first < v; });
        if (it != entries_.end() && it->first == var) {
            if (exp == 0) entries_.erase(it);
            else it->second = exp;
        } else if (exp > 0) {
            entries_.insert(it, {var, exp});
        }
        return *this;
    }

    int degree() const {
        int d = 0;
        for (auto [v, e] : entries_) d += e;
        return d;
    }

    bool empty() const { return entries_.empty(); }
    int max_var() const { return entries_.empty() ? -1 : entries_.back().first; }
    const std::vector<std::pair<int, int>>& entries() const { return entries_; }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::pair<int, int>> entries_;  // sorted by variable
};

/// Product of two monomials (exponents add).
inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (auto [v, e] : b.entries()) out.set(v, out.exponent(v) + e);
    return out;
}

namespace detail {

using ExpKey = std::vector<std::uint16_t>;

struct ExpKeyHash {
    std::size_t operator()(const ExpKey& k) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint16_t e : k) {
            h ^= e & 0xffu;
            h *= 1099511628211ULL;
            h ^= e >> 8;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace detail

/// Multivariate polynomial with arbitrary-precision integer coefficients over
/// a fixed variable count. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::unordered_map<detail::ExpKey, BigInt, detail::ExpKeyHash>;

    explicit Polynomial(int num_vars) : nv_(num_vars) {
        if (num_vars < 0) throw input_error("polynomial: negative variable count");
    }

    static Polynomial zero(int num_vars) { return Polynomial(num_vars); }

    static Polynomial constant(int num_vars, BigInt c) {
        Polynomial p(num_vars);
        if (c != 0) p.terms_[detail::ExpKey(static_cast<std::size_t>(num_vars), 0)] = std::move(c);
        return p;
    }

    static Polynomial variable(int num_vars, int var) {
        Polynomial p(num_vars);
        if (var < 0 || var >= num_vars) throw input_error("polynomial: variable index out of range");
        detail::ExpKey k(static_cast<std::size_t>(num_vars), 0);
        k[static_cast<std::size_t>(var)] = 1;
        p.terms_[std::move(k)] = 1;
        return p;
    }

    int num_vars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& raw_terms() const { return terms_; }

    void add_term(const detail::ExpKey& key, const BigInt& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (m.max_var() >= nv_) throw input_error("polynomial: monomial variable out of range");
        detail::ExpKey key(static_cast<std::size_t>(nv_), 0);
        for (auto [v, e] : m.entries()) key[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
        add_term(key, c);
    }

    BigInt coefficient_at(const Monomial& m) const {
        if (m.max_var() >= nv_) return 0;
        detail::ExpKey key(static_cast<std::size_t>(nv_), 0);
        for (auto [v, e] : m.entries()) key[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(e);
        auto it = terms_.find(key);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Total degree; nothing for the zero polynomial.
    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        int best = 0;
        for (const auto& [k, c] : terms_) best = std::max(best, key_degree(k));
        return best;
    }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [k, c] : terms_) {
            int kd = key_degree(k);
            if (!d) d = kd;
            else if (*d != kd) return false;
        }
        return true;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.nv_ != nv_) throw input_error("polynomial: variable counts differ");
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        if (o.nv_ != nv_) throw input_error("polynomial: variable counts differ");
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.nv_ != b.nv_) throw input_error("polynomial: variable counts differ");
        Polynomial out(a.nv_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                detail::ExpKey k = ka;
                for (std::size_t i = 0; i < k.size(); ++i)
                    k[i] = static_cast<std::uint16_t>(k[i] + kb[i]);
                out.add_term(k, ca * cb);
            }
        return out;
    }

    Polynomial& scale(const BigInt& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    /// Structural equality; tolerates different variable counts by treating
    /// missing trailing variables as exponent zero.
    bool equals(const Polynomial& o) const {
        if (term_count() != o.term_count()) return false;
        for (const auto& [k, c] : terms_) {
            Monomial m = key_to_monomial(k);
            if (o.coefficient_at(m) != c) return false;
        }
        return true;
    }

    bool operator==(const Polynomial& o) const { return equals(o); }

    /// Terms sorted in graded lexicographic order, largest first.
    std::vector<std::pair<Monomial, BigInt>> sorted_terms() const {
        std::vector<std::pair<detail::ExpKey, BigInt>> keyed(terms_.begin(), terms_.end());
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            int da = key_degree(a.first), db = key_degree(b.first);
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::vector<std::pair<Monomial, BigInt>> out;
        out.reserve(keyed.size());
        for (auto& [k, c] : keyed) out.push_back({key_to_monomial(k), c});
        return out;
    }

    /// One line per term: "<coeff> : v<i>^<e> ...", graded-lex sorted; "0" when zero.
    std::string debug_string() const {
        if (terms_.empty()) return "0\n";
        std::ostringstream os;
        for (const auto& [m, c] : sorted_terms()) {
            os << c << " :";
            for (auto [v, e] : m.entries()) os << " v" << v << "^" << e;
            os << "\n";
        }
        return os.str();
    }

    static int key_degree(const detail::ExpKey& k) {
        int d = 0;
        for (auto e : k) d += e;
        return d;
    }

    static Monomial key_to_monomial(const detail::ExpKey& k) {
        Monomial m;
        for (std::size_t v = 0; v < k.size(); ++v)
            if (k[v]) m.set(static_cast<int>(v), k[v]);
        return m;
    }

private:
    int nv_ = 0;
    TermMap terms_;
};

/// Per-variable exponent caps; a disengaged cap means unbounded.
struct CapVector {
    std::vector<std::optional<int>> caps;

    static CapVector unbounded(int num_vars) {
        CapVector c;
        c.caps.assign(static_cast<std::size_t>(num_vars), std::nullopt);
        return c;
    }

    /// Caps every variable at its exponent in m (zero for absent variables).
    static CapVector exact(const Monomial& m, int num_vars) {
        CapVector c;
        c.caps.assign(static_cast<std::size_t>(num_vars), 0);
        for (auto [v, e] : m.entries())
            if (v < num_vars) c.caps[static_cast<std::size_t>(v)] = e;
        return c;
    }

    /// Caps only the variables of m, leaving the rest unbounded.
    static CapVector on_support(const Monomial& m, int num_vars) {
        CapVector c = unbounded(num_vars);
        for (auto [v, e] : m.entries())
            if (v < num_vars) c.caps[static_cast<std::size_t>(v)] = e;
        return c;
    }

    void set(int var, int cap) {
        if (var < 0 || var >= static_cast<int>(caps.size()))
            throw input_error("cap vector: variable index out of range");
        if (cap < 0) throw input_error("cap vector: negative cap");
        caps[static_cast<std::size_t>(var)] = cap;
    }

    bool allows_increment(const detail::ExpKey& k, int var) const {
        const auto& c = caps[static_cast<std::size_t>(var)];
        return !c || static_cast<int>(k[static_cast<std::size_t>(var)]) < *c;
    }
};

/// Ordered product of linear difference factors (x_a - x_b); orientation matters.
struct FactorProduct {
    int num_vars = 0;
    std::vector<std::pair<int, int>> factors;

    int degree() const { return static_cast<int>(factors.size()); }
};

inline FactorProduct make_factor_product(int num_vars, std::vector<std::pair<int, int>> factors) {
    for (auto [a, b] : factors) {
        if (a < 0 || a >= num_vars || b < 0 || b >= num_vars)
            throw input_error("factor product: variable index out of range");
        if (a == b) throw input_error("factor product: degenerate factor");
    }
    return FactorProduct{num_vars, std::move(factors)};
}

/// Multiplies p by (x_a - x_b), dropping any monomial that would exceed a cap.
/// The drop is sound for coefficients within the caps: factors only ever raise
/// exponents, so an over-cap monomial can never contribute to an in-cap one.
inline Polynomial multiply_linear_factor(const Polynomial& p, int a, int b, const CapVector& caps) {
    if (a < 0 || a >= p.num_vars() || b < 0 || b >= p.num_vars() || a == b)
        throw input_error("multiply_linear_factor: bad factor");
    Polynomial out(p.num_vars());
    for (const auto& [key, c] : p.raw_terms()) {
        if (caps.allows_increment(key, a)) {
            detail::ExpKey k = key;
            ++k[static_cast<std::size_t>(a)];
            out.add_term(k, c);
        }
        if (caps.allows_increment(key, b)) {
            detail::ExpKey k = key;
            ++k[static_cast<std::size_t>(b)];
            out.add_term(k, -c);
        }
    }
    return out;
}

inline Polynomial multiply_monomial(const Polynomial& p, const Monomial& m) {
    if (m.max_var() >= p.num_vars())
        throw input_error("multiply_monomial: variable index out of range");
    Polynomial out(p.num_vars());
    for (const auto& [key, c] : p.raw_terms()) {
        detail::ExpKey k = key;
        for (auto [v, e] : m.entries())
            k[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(k[static_cast<std::size_t>(v)] + e);
        out.add_term(k, c);
    }
    return out;
}

/// Absorption order for a factor product: repeatedly take the factor sharing
/// the most variables with the already-opened support; ties prefer the factor
/// whose variables have the fewest remaining uses, then the lowest index.
inline std::vector<int> greedy_factor_order(const FactorProduct& fp) {
    const int m = fp.degree();
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<char> open(static_cast<std::size_t>(fp.num_vars), 0);
    std::vector<int> remaining(static_cast<std::size_t>(fp.num_vars), 0);
    for (auto [a, b] : fp.factors) {
        ++remaining[static_cast<std::size_t>(a)];
        ++remaining[static_cast<std::size_t>(b)];
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    for (int step = 0; step < m; ++step) {
        int best = -1, best_shared = -1, best_uses = 0;
        for (int i = 0; i < m; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            auto [a, b] = fp.factors[static_cast<std::size_t>(i)];
            int shared = open[static_cast<std::size_t>(a)] + open[static_cast<std::size_t>(b)];
            int uses = remaining[static_cast<std::size_t>(a)] + remaining[static_cast<std::size_t>(b)];
            if (shared > best_shared || (shared == best_shared && uses < best_uses)) {
                best = i;
                best_shared = shared;
                best_uses = uses;
            }
        }
        auto [a, b] = fp.factors[static_cast<std::size_t>(best)];
        used[static_cast<std::size_t>(best)] = 1;
        open[static_cast<std::size_t>(a)] = open[static_cast<std::size_t>(b)] = 1;
        --remaining[static_cast<std::size_t>(a)];
        --remaining[static_cast<std::size_t>(b)];
        order.push_back(best);
    }
    return order;
}

/// Full expansion with per-variable caps; coefficients of all in-cap monomials
/// are exact, over-cap monomials are absent.
inline Polynomial expand_capped(const FactorProduct& fp, const CapVector& caps) {
    if (static_cast<int>(caps.caps.size()) != fp.num_vars)
        throw input_error("expand_capped: cap vector size mismatch");
    make_factor_product(fp.num_vars, fp.factors);  // validate
    Polynomial acc = Polynomial::constant(fp.num_vars, 1);
    for (int idx : greedy_factor_order(fp)) {
        auto [a, b] = fp.factors[static_cast<std::size_t>(idx)];
        acc = multiply_linear_factor(acc, a, b, caps);
        if (acc.is_zero()) break;
    }
    return acc;
}

inline Polynomial expand(const FactorProduct& fp) {
    return expand_capped(fp, CapVector::unbounded(fp.num_vars));
}

inline BigInt coefficient(const Polynomial& p, const Monomial& m) {
    return p.coefficient_at(m);
}

/// Coefficient of m taken only in m's variables: the polynomial, in the other
/// variables, multiplying exactly x^m.
inline Polynomial partial_coefficient(const Polynomial& p, const Monomial& m) {
    if (m.max_var() >= p.num_vars()) return Polynomial::zero(p.num_vars());
    Polynomial out(p.num_vars());
    for (const auto& [key, c] : p.raw_terms()) {
        bool match = true;
        for (auto [v, e] : m.entries())
            if (static_cast<int>(key[static_cast<std::size_t>(v)]) != e) { match = false; break; }
        if (!match) continue;
        detail::ExpKey k = key;
        for (auto [v, e] : m.entries()) k[static_cast<std::size_t>(v)] = 0;
        out.add_term(k, c);
    }
    return out;
}

/// Same value as partial_coefficient, computed by the derivative route:
/// differentiate i_v times per variable, divide by i_v!, then set the
/// extracted variables to zero. Kept as an independent cross-check.
inline Polynomial partial_coefficient_derivative(const Polynomial& p, const Monomial& m) {
    if (m.max_var() >= p.num_vars()) return Polynomial::zero(p.num_vars());
    Polynomial cur = p;
    for (auto [v, ev] : m.entries()) {
        for (int step = 0; step < ev; ++step) {
            Polynomial next(cur.num_vars());
            for (const auto& [key, c] : cur.raw_terms()) {
                if (key[static_cast<std::size_t>(v)] == 0) continue;
                detail::ExpKey k = key;
                BigInt factor = k[static_cast<std::size_t>(v)];
                --k[static_cast<std::size_t>(v)];
                next.add_term(k, c * factor);
            }
            cur = std::move(next);
        }
        BigInt fact = 1;
        for (int i = 2; i <= ev; ++i) fact *= i;
        Polynomial scaled(cur.num_vars());
        for (const auto& [key, c] : cur.raw_terms()) scaled.add_term(key, c / fact);
        cur = std::move(scaled);
    }
    Polynomial out(cur.num_vars());
    for (const auto& [key, c] : cur.raw_terms()) {
        bool at_zero = true;
        for (auto [v, ev] : m.entries())
            if (key[static_cast<std::size_t>(v)] != 0) { at_zero = false; break; }
        if (at_zero) out.add_term(key, c);
    }
    return out;
}

namespace detail {

/// Shared engine: absorbs `batch` into `acc` under caps, pruning monomials that
/// can no longer reach the target exponent and extracting each target variable
/// exactly when its last batch factor has been absorbed. With cap_all, every
/// non-target variable is capped at zero so the result is a constant.
inline Polynomial extract_impl(Polynomial acc, const FactorProduct& batch, const Monomial& target,
                               bool cap_all) {
    const int nv = acc.num_vars();
    if (batch.num_vars != nv) throw input_error("extract: variable counts differ");
    make_factor_product(nv, batch.factors);  // validate
    if (target.max_var() >= nv) return Polynomial::zero(nv);

    std::vector<int> want(static_cast<std::size_t>(nv), 0);
    std::vector<char> is_target(static_cast<std::size_t>(nv), 0);
    for (auto [v, e] : target.entries()) {
        want[static_cast<std::size_t>(v)] = e;
        is_target[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> occ(static_cast<std::size_t>(nv), 0);
    for (auto [a, b] : batch.factors) {
        ++occ[static_cast<std::size_t>(a)];
        ++occ[static_cast<std::size_t>(b)];
    }
    CapVector caps = cap_all ? CapVector::exact(target, nv) : CapVector::on_support(target, nv);

    auto sweep = [&](Polynomial& p, std::initializer_list<int> vars) {
        Polynomial next(nv);
        for (const auto& [key, c] : p.raw_terms()) {
            bool keep = true;
            ExpKey k = key;
            for (int v : vars) {
                if (!cap_all && !is_target[static_cast<std::size_t>(v)]) continue;
                int have = k[static_cast<std::size_t>(v)];
                int rest = occ[static_cast<std::size_t>(v)];
                int goal = want[static_cast<std::size_t>(v)];
                if (have + rest < goal) { keep = false; break; }
                if (rest == 0) {
                    if (have != goal) { keep = false; break; }
                    k[static_cast<std::size_t>(v)] = 0;  // extract: divide by x_v^goal
                }
            }
            if (keep) next.add_term(k, c);
        }
        p = std::move(next);
    };

    // close target variables the batch never touches
    {
        std::vector<int> idle;
        for (auto [v, e] : target.entries())
            if (occ[static_cast<std::size_t>(v)] == 0) idle.push_back(v);
        if (!idle.empty()) {
            Polynomial next(nv);
            for (const auto& [key, c] : acc.raw_terms()) {
                bool keep = true;
                ExpKey k = key;
                for (int v : idle) {
                    if (static_cast<int>(k[static_cast<std::size_t>(v)]) != want[static_cast<std::size_t>(v)]) {
                        keep = false;
                        break;
                    }
                    k[static_cast<std::size_t>(v)] = 0;
                }
                if (keep) next.add_term(k, c);
            }
            acc = std::move(next);
        }
    }

    for (int idx : greedy_factor_order(batch)) {
        if (acc.is_zero()) return acc;
        auto [a, b] = batch.factors[static_cast<std::size_t>(idx)];
        acc = multiply_linear_factor(acc, a, b, caps);
        --occ[static_cast<std::size_t>(a)];
        --occ[static_cast<std::size_t>(b)];
        sweep(acc, {a, b});
    }
    return acc;
}

} // namespace detail

/// Exact coefficient of `target` in the expansion of the full product.
inline BigInt product_coefficient(const FactorProduct& fp, const Monomial& target) {
    if (target.degree() != fp.degree()) return 0;  // the expansion is homogeneous
    Polynomial res = detail::extract_impl(Polynomial::constant(fp.num_vars, 1), fp, target, true);
    return res.coefficient_at(Monomial{});
}

/// Absorbs a factor batch into a carried polynomial and extracts the target
/// monomial's coefficient as a polynomial in the remaining variables.
inline Polynomial staged_coefficient(Polynomial acc, const FactorProduct& batch, const Monomial& target) {
    return detail::extract_impl(std::move(acc), batch, target, false);
}

/// Extracts variable `var` at exponent `exp` from a partially expanded product.
/// `partial` must be the (homogeneous) expansion of the first deg(partial)
/// factors of fp in product order; extracting a variable that a later factor
/// still mentions is a sequencing error.
inline Polynomial eliminate_variable(const FactorProduct& fp, const Polynomial& partial, int var, int exp) {
    if (var < 0 || var >= fp.num_vars) throw input_error("eliminate_variable: variable out of range");
    if (exp < 0) throw input_error("eliminate_variable: negative exponent");
    if (partial.num_vars() != fp.num_vars)
        throw input_error("eliminate_variable: variable counts differ");
    if (partial.is_zero()) return partial;
    if (!partial.is_homogeneous())
        throw sequencing_error("eliminate_variable: partial expansion is not homogeneous");
    int absorbed = *partial.degree();
    if (absorbed > fp.degree())
        throw input_error("eliminate_variable: partial degree exceeds factor count");
    for (int i = absorbed; i < fp.degree(); ++i) {
        auto [a, b] = fp.factors[static_cast<std::size_t>(i)];
        if (a == var || b == var)
            throw sequencing_error("eliminate_variable: factor " + std::to_string(i) +
                                   " still mentions variable " + std::to_string(var));
    }
    return partial_coefficient(partial, Monomial{{var, exp}});
}

} // namespace slec
