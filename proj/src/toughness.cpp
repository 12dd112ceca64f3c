#include "hamtough/toughness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hamtough/error.hpp"

namespace hamtough {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string Toughness::to_string() const { return infinite ? "inf" : hamtough::to_string(value); }

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "yes";
        case Decision::No: return "no";
        case Decision::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> mask_rows(const Graph& g) {
    std::vector<Mask> rows(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) g.neighbors(v).for_each([&](int u) { rows[v] |= Mask{1} << u; });
    return rows;
}

int count_components(const std::vector<Mask>& rows, Mask alive) {
    int count = 0;
    while (alive) {
        Mask frontier = alive & -alive;
        alive &= ~frontier;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
            next &= alive;
            alive &= ~next;
            frontier = next;
        }
        ++count;
    }
    return count;
}

std::vector<int> members(Mask m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::vector<int> members(const VertexSet& s) {
    std::vector<int> out;
    s.for_each([&](int v) { out.push_back(v); });
    return out;
}

/// Visits every s-subset of [0, n) as a mask, in colexicographic order, until f returns true.
template <class F>
bool for_each_subset(int n, int s, F&& f) {
    const Mask end = n == 64 ? 0 : (Mask{1} << n);
    Mask m = s == 0 ? 0 : ((s == 64) ? ~Mask{0} : (Mask{1} << s) - 1);
    while (true) {
        if (f(m)) return true;
        if (m == 0) return false;
        const Mask low = m & -m;
        const Mask ripple = m + low;
        if (ripple == 0 || ripple >= end) return false;
        m = ripple | (((m ^ ripple) >> 2) / low);
    }
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "toughness is defined for connected graphs only");
}

}  // namespace

std::optional<CutCertificate> seeded_violation(const Graph& g, const Rational& t) {
    const int n = g.order();
    // Vertices of degree >= d, for each degree value d present.
    auto degrees = g.degrees();
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (int d : degrees) {
        VertexSet cut;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= d) cut.set(v);
        const int pieces = count_components(g, cut);
        if (pieces >= 2 && t * pieces > Rational(cut.count())) return CutCertificate{members(cut), pieces};
    }
    // N(v) is a cut whenever v is not universal; c(G - N(v)) >= 2 since v is isolated.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) continue;
        const int pieces = count_components(g, g.neighbors(v));
        if (t * pieces > Rational(g.degree(v))) return CutCertificate{members(g.neighbors(v)), pieces};
    }
    // Pairs of nonadjacent vertices: u and w are both isolated in G - (N(u) | N(w)).
    if (n > 128) return std::nullopt;
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            if (g.adjacent(u, w)) continue;
            const VertexSet cut = g.neighbors(u) | g.neighbors(w);
            const int pieces = count_components(g, cut);
            if (t * pieces > Rational(cut.count())) return CutCertificate{members(cut), pieces};
        }
    }
    return std::nullopt;
}

bool certificate_valid(const Graph& g, const CutCertificate& cert) {
    VertexSet s;
    for (int v : cert.cut) {
        if (v < 0 || v >= g.order() || s.test(v)) return false;
        s.set(v);
    }
    return cert.pieces >= 2 && count_components(g, s) == cert.pieces;
}

Toughness toughness_exact(const Graph& g, int limit) {
    if (limit > kMaxExhaustiveOrder) {
        throw Error(ErrorKind::InvalidParameter, "exhaustive toughness limit is capped at 63 vertices");
    }
    require_connected(g);
    if (g.is_complete()) return Toughness{true, Rational(0), std::nullopt};
    const int n = g.order();
    if (n > limit) {
        throw Error(ErrorKind::BudgetExceeded,
                    "order " + std::to_string(n) + " exceeds the exhaustive limit " + std::to_string(limit));
    }

    const auto rows = mask_rows(g);
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    std::optional<Rational> best;
    Mask best_cut = 0;
    int best_pieces = 0;
    for (int s = 1; s <= n - 2; ++s) {
        // c(G - S) <= n - s, so no cut of size >= s can beat s / (n - s).
        if (best && Rational(s, n - s) >= *best) break;
        for_each_subset(n, s, [&](Mask cut) {
            const int c = count_components(rows, all & ~cut);
            if (c >= 2 && (!best || Rational(s, c) < *best)) {
                best = Rational(s, c);
                best_cut = cut;
                best_pieces = c;
            }
            return false;
        });
    }
    // Non-complete connected graphs always have a cut (N(v) of a non-universal v).
    return Toughness{false, *best, CutCertificate{members(best_cut), best_pieces}};
}

ToughnessDecision is_t_tough(const Graph& g, Rational t, int limit) {
    if (t <= Rational(0)) throw Error(ErrorKind::InvalidParameter, "t must be positive");
    if (limit > kMaxExhaustiveOrder) {
        throw Error(ErrorKind::InvalidParameter, "exhaustive toughness limit is capped at 63 vertices");
    }
    require_connected(g);
    if (g.is_complete()) return {Decision::Yes, std::nullopt, {}};
    if (auto cert = seeded_violation(g, t)) return {Decision::No, std::move(cert), {}};

    const int n = g.order();
    // A violating cut of size s needs t * c > s with c <= n - s.
    auto size_can_violate = [&](int s) { return s <= n - 2 && t * (n - s) > Rational(s); };

    if (n <= limit) {
        const auto rows = mask_rows(g);
        const Mask all = (Mask{1} << n) - 1;
        std::optional<CutCertificate> found;
        for (int s = 1; size_can_violate(s) && !found; ++s) {
            for_each_subset(n, s, [&](Mask cut) {
                const int c = count_components(rows, all & ~cut);
                if (c >= 2 && t * c > Rational(s)) {
                    found = CutCertificate{members(cut), c};
                    return true;
                }
                return false;
            });
        }
        if (found) return {Decision::No, std::move(found), {}};
        return {Decision::Yes, std::nullopt, {}};
    }

    // Above the limit: all cuts up to the largest size whose cumulative
    // subset count stays within the budget.
    constexpr double kSubsetBudget = 1 << 22;
    double spent = 0;
    int searched = 0;
    for (int s = 1; size_can_violate(s); ++s) {
        double subsets = 1;
        for (int i = 0; i < s; ++i) subsets = subsets * (n - i) / (i + 1);
        if (spent + subsets > kSubsetBudget) break;
        spent += subsets;
        std::vector<int> idx(static_cast<std::size_t>(s));
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            VertexSet cut;
            for (int v : idx) cut.set(v);
            const int c = count_components(g, cut);
            if (c >= 2 && t * c > Rational(s)) return {Decision::No, CutCertificate{idx, c}, {}};
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        searched = s;
    }
    return {Decision::Unknown, std::nullopt,
            "order " + std::to_string(n) + " exceeds tough-limit " + std::to_string(limit) +
                "; no violating cut among neighbourhood seeds or cuts of size <= " + std::to_string(searched)};
}

}  // namespace hamtough
