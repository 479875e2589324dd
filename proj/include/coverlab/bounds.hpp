// Ramsey numbers and the Ramsey-derived constants, with exactness status.
//
// Values too large to hold (the alpha recursion squares its digit count at every
// step) keep only a base-10 logarithm; comparisons against them are estimates.

#ifndef COVERLAB_BOUNDS_HPP
#define COVERLAB_BOUNDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coverlab/error.hpp"
#include "coverlab/graph.hpp"

namespace coverlab {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundStatus { Exact, TableExact, UpperBoundOnly };

constexpr std::string_view to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::Exact: return "exact";
        case BoundStatus::TableExact: return "table";
        case BoundStatus::UpperBoundOnly: return "bound-only";
    }
    return "?";
}

constexpr BoundStatus weakest(BoundStatus a, BoundStatus b) { return a > b ? a : b; }

/// Non-negative integer that degrades to a log10 estimate past kMaxBits.
class Magnitude {
  public:
    static constexpr unsigned kMaxBits = 1u << 15;

    Magnitude() : Magnitude(BigInt(0)) {}
    Magnitude(BigInt v) { set(std::move(v)); }  // NOLINT(implicit)
    Magnitude(unsigned long long v) : Magnitude(BigInt(v)) {}  // NOLINT(implicit)
    static Magnitude from_log10(double l) {
        Magnitude m;
        m.exact_.reset();
        m.log10_ = l;
        return m;
    }

    bool materialized() const { return exact_.has_value(); }
    const BigInt& exact() const {
        if (!exact_) throw Error(ErrorKind::BadParameter, "value too large to materialize (~10^" + std::to_string(log10_) + ")");
        return *exact_;
    }
    double log10() const { return log10_; }

    /// The value if it fits in 64 bits.
    std::optional<unsigned long long> small() const {
        if (!exact_ || msb_bits(*exact_) > 63) return std::nullopt;
        return exact_->convert_to<unsigned long long>();
    }

    std::string str() const {
        if (exact_) return exact_->str();
        std::ostringstream os;
        os.precision(6);
        os << "~10^" << log10_;
        return os.str();
    }

    friend Magnitude operator+(const Magnitude& a, const Magnitude& b) {
        if (a.exact_ && b.exact_) return Magnitude(*a.exact_ + *b.exact_);
        const double hi = std::max(a.log10_, b.log10_), lo = std::min(a.log10_, b.log10_);
        return from_log10(hi + std::log10(1.0 + std::pow(10.0, lo - hi)));
    }
    friend Magnitude operator*(const Magnitude& a, const Magnitude& b) {
        if (a.is_zero() || b.is_zero()) return Magnitude(0ull);
        if (a.exact_ && b.exact_ && msb_bits(*a.exact_) + msb_bits(*b.exact_) <= kMaxBits + 1)
            return Magnitude(*a.exact_ * *b.exact_);
        return from_log10(a.log10_ + b.log10_);
    }
    /// a - k, clamped at zero.
    friend Magnitude operator-(const Magnitude& a, unsigned long long k) {
        if (a.exact_) return Magnitude(*a.exact_ >= k ? BigInt(*a.exact_ - k) : BigInt(0));
        return a;  // k is negligible against a non-materialized value
    }
    Magnitude pow(unsigned e) const {
        Magnitude r(1ull);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    bool is_zero() const { return exact_ && *exact_ == 0; }

    friend bool operator<=(const Magnitude& a, const Magnitude& b) {
        if (a.exact_ && b.exact_) return *a.exact_ <= *b.exact_;
        return a.log10_ <= b.log10_;
    }
    friend bool operator==(const Magnitude& a, const Magnitude& b) {
        if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
        return !a.exact_ && !b.exact_ && a.log10_ == b.log10_;
    }

  private:
    static unsigned msb_bits(const BigInt& v) { return v == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(v)) + 1; }

    static double log10_of(const BigInt& v) {
        if (v == 0) return -std::numeric_limits<double>::infinity();
        const unsigned bits = msb_bits(v);
        const unsigned shift = bits > 60 ? bits - 60 : 0;
        const BigInt top = v >> shift;
        return std::log10(top.convert_to<double>()) + shift * std::log10(2.0);
    }

    void set(BigInt v) {
        log10_ = log10_of(v);
        if (msb_bits(v) > kMaxBits)
            exact_.reset();
        else
            exact_ = std::move(v);
    }

    std::optional<BigInt> exact_;
    double log10_ = 0;
};

struct BoundValue {
    Magnitude value;
    BoundStatus status = BoundStatus::Exact;
    std::string note;  // provenance: identity, search witness, table, binomial bound

    bool computable() const { return status != BoundStatus::UpperBoundOnly && value.materialized(); }
};

namespace detail {

// log10 C(N, k) for huge N and small k.
inline double log10_binomial(double log10_n, unsigned long long k) {
    double l = 0;
    for (unsigned long long i = 1; i <= k; ++i) l += log10_n - std::log10(static_cast<double>(i));
    return l;
}

inline BigInt binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Exhaustive Ramsey search: is there a graph on `order` vertices with no K_s
/// and no independent t-set? Vertex 0 is taken of maximum degree d with
/// neighbours 1..d; every other vertex must stay within degree d.
class RamseySearch {
  public:
    RamseySearch(std::size_t s, std::size_t t, std::size_t order) : s_(s), t_(t), n_(order) {}

    std::optional<Graph> witness() {
        if (n_ == 0) return Graph(0);
        for (std::size_t d = n_; d-- > 0;) {
            d_ = d;
            rows_.assign(n_, VertexSet{});
            if (place(1)) {
                Graph g(n_);
                for (Vertex u = 0; u < n_; ++u) rows_[u].for_each([&](Vertex v) {
                        if (u < v) g.add_edge(u, v);
                    });
                return g;
            }
        }
        return std::nullopt;
    }

  private:
    bool has_clique(const VertexSet& cand, std::size_t need, bool independent) const {
        if (need == 0) return true;
        if (cand.size() < need) return false;
        for (Vertex v : cand) {
            VertexSet rest;
            for (Vertex w = cand.next(v + 1); w != kMaxVertices; w = cand.next(w + 1)) rest.insert(w);
            rest = independent ? rest - rows_[v] : rest & rows_[v];
            if (has_clique(rest, need - 1, independent)) return true;
        }
        return false;
    }

    bool place(std::size_t k) {
        if (k == n_) return true;
        const VertexSet earlier = VertexSet::prefix(k);
        const bool adj0 = k <= d_;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            if (((mask & 1) != 0) != adj0) continue;
            VertexSet a;
            for (Vertex v = 0; v < k; ++v)
                if (mask >> v & 1) a.insert(v);
            if (a.size() > d_) continue;
            bool over = false;
            a.for_each([&](Vertex v) { over = over || rows_[v].size() + 1 > d_; });
            if (over) continue;
            if (has_clique(a, s_ - 1, false)) continue;
            if (has_clique(earlier - a, t_ - 1, true)) continue;
            a.for_each([&](Vertex v) { rows_[v].insert(k); });
            rows_[k] = a;
            if (place(k + 1)) return true;
            a.for_each([&](Vertex v) { rows_[v].erase(k); });
            rows_[k] = VertexSet{};
        }
        return false;
    }

    std::size_t s_, t_, n_, d_ = 0;
    std::vector<VertexSet> rows_;
};

struct RamseyKey {
    std::size_t s, t;
    friend auto operator<=>(const RamseyKey&, const RamseyKey&) = default;
};

inline std::map<RamseyKey, std::size_t> builtin_table() {
    return {{{3, 3}, 6}, {{3, 4}, 9}, {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
            {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
}

// "s t value" per line, '#' comments; replaces the built-in table.
inline std::map<RamseyKey, std::size_t> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::BadInput, "cannot open Ramsey table " + path);
    std::map<RamseyKey, std::size_t> table;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::size_t s = 0, t = 0, v = 0;
        if (!(ls >> s)) continue;
        if (!(ls >> t >> v)) throw Error(ErrorKind::ParseError, "bad Ramsey table line: " + line);
        table[{std::min(s, t), std::max(s, t)}] = v;
    }
    return table;
}

inline const std::map<RamseyKey, std::size_t>& ramsey_table() {
    static const auto table = [] {
        if (const char* p = std::getenv("COVERLAB_TABLE_PATH"); p && *p) return load_table(p);
        return builtin_table();
    }();
    return table;
}

struct SearchCache {
    std::mutex mu;
    std::map<RamseyKey, std::pair<std::size_t, Graph>> results;  // R and a witness on R-1 vertices
};

inline SearchCache& search_cache() {
    static SearchCache c;
    return c;
}

inline constexpr unsigned long long kSearchableOrder = 10;

}  // namespace detail

/// Exhaustive R(s,t) with a witness graph on R-1 vertices (no K_s, no I_t).
inline std::pair<std::size_t, Graph> ramsey_search(std::size_t s, std::size_t t) {
    if (s > t) std::swap(s, t);
    auto& cache = detail::search_cache();
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.results.find({s, t}); it != cache.results.end()) return it->second;
    }
    Graph last(0);
    std::size_t order = 1;
    for (;; ++order) {
        auto w = detail::RamseySearch(s, t, order).witness();
        if (!w) break;
        last = *w;
    }
    std::lock_guard lock(cache.mu);
    cache.results[{s, t}] = {order, last};
    return {order, last};
}

/// True when ramsey(s, t) is settled by exhaustive search.
inline bool ramsey_searchable(std::size_t s, std::size_t t) {
    if (s > t) std::swap(s, t);
    return s >= 3 && detail::binomial(s + t - 2, s - 1) <= detail::kSearchableOrder;
}

inline BoundValue ramsey(std::size_t s, std::size_t t) {
    if (s < 1 || t < 1) throw Error(ErrorKind::BadParameter, "Ramsey arguments must be >= 1");
    if (s > t) std::swap(s, t);
    if (s == 1) return {Magnitude(1ull), BoundStatus::Exact, "R(1,t) = 1"};
    if (s == 2) return {Magnitude(static_cast<unsigned long long>(t)), BoundStatus::Exact, "R(2,t) = t"};
    if (ramsey_searchable(s, t)) {
        auto [r, w] = ramsey_search(s, t);
        return {Magnitude(static_cast<unsigned long long>(r)), BoundStatus::Exact,
                "exhaustive search; witness on " + std::to_string(w.order()) + " vertices"};
    }
    const auto& table = detail::ramsey_table();
    if (auto it = table.find({s, t}); it != table.end())
        return {Magnitude(static_cast<unsigned long long>(it->second)), BoundStatus::TableExact, "published value"};
    return {Magnitude(detail::binomial(s + t - 2, s - 1)), BoundStatus::UpperBoundOnly, "binomial bound C(s+t-2, s-1)"};
}

/// R(s, t) with a possibly huge second argument (s small).
inline BoundValue ramsey(std::size_t s, const Magnitude& t) {
    if (auto small = t.small(); small && *small <= std::numeric_limits<std::size_t>::max())
        return ramsey(s, static_cast<std::size_t>(*small));
    if (s < 1) throw Error(ErrorKind::BadParameter, "Ramsey arguments must be >= 1");
    if (s == 1) return {Magnitude(1ull), BoundStatus::Exact, "R(1,t) = 1"};
    if (s == 2) return {t, BoundStatus::Exact, "R(2,t) = t"};
    // C(t + s - 2, s - 1) with t huge: product of s - 1 factors over (s-1)!.
    if (t.materialized()) {
        BigInt top = t.exact() + (s - 2), r = 1;
        for (std::size_t i = 1; i < s; ++i) r *= top - (i - 1);
        for (std::size_t i = 2; i < s; ++i) r /= i;
        return {Magnitude(r), BoundStatus::UpperBoundOnly, "binomial bound C(s+t-2, s-1)"};
    }
    return {Magnitude::from_log10(detail::log10_binomial(t.log10(), s - 1)), BoundStatus::UpperBoundOnly,
            "binomial bound C(s+t-2, s-1), estimated"};
}

/// alpha_{n,1} = 1, alpha_{n,h} = R(n, (n-1) alpha_{n,h-1} + 1) - 1.
inline BoundValue alpha_value(std::size_t n, std::size_t h) {
    if (n < 1 || h < 1) throw Error(ErrorKind::BadParameter, "alpha needs n >= 1 and h >= 1");
    BoundValue a{Magnitude(1ull), BoundStatus::Exact, "alpha_{n,1} = 1"};
    for (std::size_t i = 2; i <= h; ++i) {
        const Magnitude arg = Magnitude(static_cast<unsigned long long>(n - 1)) * a.value + Magnitude(1ull);
        const BoundValue r = ramsey(n, arg);
        a = {r.value - 1, weakest(a.status, r.status), "recursion"};
    }
    return a;
}

/// xi_{n,i} = ((R(n-1,n) - 1)^i - 1) / (R(n-1,n) - 2).
inline BoundValue xi_value(std::size_t n, std::size_t i) {
    if (n < 3 || i < 1) throw Error(ErrorKind::BadParameter, "xi needs n >= 3 and i >= 1");
    const BoundValue r = ramsey(n - 1, n);
    const Magnitude base = r.value - 1;
    if (base.materialized() && base.pow(static_cast<unsigned>(i)).materialized()) {
        const BigInt b = base.exact();
        const BigInt num = base.pow(static_cast<unsigned>(i)).exact() - 1;
        return {Magnitude(BigInt(num / (b - 1))), r.status, "geometric sum"};
    }
    return {Magnitude::from_log10(static_cast<double>(i - 1) * base.log10()), r.status, "geometric sum, estimated"};
}

/// nu = R(n-1, n) - 1.
inline BoundValue nu_value(std::size_t n) {
    if (n < 2) throw Error(ErrorKind::BadParameter, "nu needs n >= 2");
    const BoundValue r = ramsey(n - 1, n);
    return {r.value - 1, r.status, "R(n-1,n) - 1"};
}

/// R(n,n) * sum_{2<=h<=l} alpha_{n,h} + 1: the dominating-set size bound.
inline BoundValue dominating_bound(std::size_t n, std::size_t l) {
    BoundValue rnn = ramsey(n, n);
    Magnitude sum(0ull);
    BoundStatus status = rnn.status;
    for (std::size_t h = 2; h <= l; ++h) {
        const BoundValue a = alpha_value(n, h);
        sum = sum + a.value;
        status = weakest(status, a.status);
    }
    return {rnn.value * sum + Magnitude(1ull), status, "R(n,n) sum alpha + 1"};
}

/// constant + coefficient * c_chi(n); c_chi has no closed form, so the value is
/// symbolic unless an override is supplied.
struct AffineBound {
    BoundValue constant;
    BoundValue coefficient;
    std::optional<BoundValue> evaluated;

    bool symbolic() const { return !evaluated.has_value(); }
    BoundStatus status() const { return evaluated ? evaluated->status : BoundStatus::UpperBoundOnly; }
};

inline AffineBound make_affine(BoundValue constant, BoundValue coefficient, const std::optional<BigInt>& c_chi) {
    AffineBound a{std::move(constant), std::move(coefficient), std::nullopt};
    if (c_chi) {
        a.evaluated = BoundValue{a.constant.value + a.coefficient.value * Magnitude(*c_chi),
                                 weakest(a.constant.status, a.coefficient.status), "c_chi override"};
    }
    return a;
}

/// c_1(n, l0) = (R(n,n) sum alpha + 1) * c_chi(n).
inline AffineBound c1_value(std::size_t n, std::size_t l0, const std::optional<BigInt>& c_chi = {}) {
    return make_affine({Magnitude(0ull), BoundStatus::Exact, ""}, dominating_bound(n, l0), c_chi);
}

/// c_2(n, l0) = (R(n,n) sum alpha + 1) * xi_{n,n-2}.
inline BoundValue c2_value(std::size_t n, std::size_t l0) {
    const BoundValue dom = dominating_bound(n, l0);
    const BoundValue xi = xi_value(n, n - 2);
    return {dom.value * xi.value, weakest(dom.status, xi.status), "dominating bound * xi_{n,n-2}"};
}

struct PaperConstants {
    std::size_t n = 0;
    BoundValue nu;
    BoundValue xi;  // xi_{n,n-2}, the factor of c_2
    AffineBound c1_inner, c1_outer;  // l0 = n^2 - 1 and n^2 + 2n - 1
    BoundValue c2_inner, c2_outer;
    AffineBound c_inspc;
    BoundValue c_inspp;
};

inline PaperConstants paper_constants(std::size_t n, const std::optional<BigInt>& c_chi = {}) {
    if (n < 4) throw Error(ErrorKind::BadParameter, "constants need n >= 4");
    PaperConstants pc;
    pc.n = n;
    pc.nu = nu_value(n);
    pc.xi = xi_value(n, n - 2);
    const std::size_t inner = n * n - 1, outer = n * n + 2 * n - 1;
    pc.c1_inner = c1_value(n, inner, c_chi);
    pc.c1_outer = c1_value(n, outer, c_chi);
    pc.c2_inner = c2_value(n, inner);
    pc.c2_outer = c2_value(n, outer);

    const Magnitude sq(static_cast<unsigned long long>((n - 1) * (n - 1)));
    const Magnitude sq_nu = sq * pc.nu.value;
    // c_inspc = (n-1)^2 nu + [(n-1)^2 nu coef_1(inner) + coef_1(outer)] c_chi
    BoundValue constant{sq_nu, pc.nu.status, "(n-1)^2 nu"};
    BoundValue coef{sq_nu * pc.c1_inner.coefficient.value + pc.c1_outer.coefficient.value,
                    weakest(pc.nu.status, weakest(pc.c1_inner.coefficient.status, pc.c1_outer.coefficient.status)),
                    "(n-1)^2 nu c_1(n,n^2-1) + c_1(n,n^2+2n-1), per unit c_chi"};
    pc.c_inspc = make_affine(constant, coef, c_chi);
    // c_inspp = (n-1)^2 + (n-1)^2 nu c_2(inner) + c_2(outer)
    pc.c_inspp = {sq + sq_nu * pc.c2_inner.value + pc.c2_outer.value,
                  weakest(pc.nu.status, weakest(pc.c2_inner.status, pc.c2_outer.status)),
                  "(n-1)^2 + (n-1)^2 nu c_2(n,n^2-1) + c_2(n,n^2+2n-1)"};
    return pc;
}

}  // namespace coverlab

#endif  // COVERLAB_BOUNDS_HPP
