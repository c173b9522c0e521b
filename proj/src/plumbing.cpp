#include "mfb/plumbing.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "mfb/errors.hpp"

namespace mfb {

const PlumbVertex& PlumbGraph::vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw input_error("unknown vertex '" + id + "'");
}

void PlumbGraph::sort_records() {
    std::sort(vertices.begin(), vertices.end(),
              [](const PlumbVertex& a, const PlumbVertex& b) { return a.id < b.id; });
    for (auto& e : edges)
        if (e.v2 < e.v1) std::swap(e.v1, e.v2);
    std::sort(edges.begin(), edges.end(), [](const PlumbEdge& a, const PlumbEdge& b) {
        return std::tie(a.v1, a.v2, a.sign) < std::tie(b.v1, b.v2, b.sign);
    });
}

PlumbGraph compute_self_intersections(const MultGraph& mg) {
    std::map<std::string, Int> acc;
    for (const auto& e : mg.edges) {
        const MultVertex& x = mg.vertex(e.v1);
        const MultVertex& y = mg.vertex(e.v2);
        Int s = e.sign == EdgeSign::Plus ? 1 : -1;
        if (x.kind != MultKind::Arrow) acc[x.id] += s * y.mult;
        if (y.kind != MultKind::Arrow) acc[y.id] += s * x.mult;
    }

    PlumbGraph out;
    out.name = mg.name;
    for (const auto& v : mg.vertices) {
        if (v.kind == MultKind::Arrow) continue;
        Int sum = 0;
        if (auto it = acc.find(v.id); it != acc.end()) sum = it->second;
        if (sum % v.mult != 0)
            throw decoration_error("non-integral self-intersection at vertex '" + v.id + "'");
        out.vertices.push_back({v.id, -(sum / v.mult), v.genus});
    }
    for (const auto& e : mg.edges) {
        if (mg.vertex(e.v1).kind == MultKind::Arrow) continue;
        if (mg.vertex(e.v2).kind == MultKind::Arrow) continue;
        out.edges.push_back({e.v1, e.v2, e.sign});
    }
    out.sort_records();
    return out;
}

IntersectionMatrix intersection_matrix(const PlumbGraph& pg) {
    IntersectionMatrix im;
    std::map<std::string, std::size_t> index;
    for (const auto& v : pg.vertices) {
        index[v.id] = im.order.size();
        im.order.push_back(v.id);
    }
    std::sort(im.order.begin(), im.order.end());
    for (std::size_t i = 0; i < im.order.size(); ++i) index[im.order[i]] = i;

    const std::size_t n = im.order.size();
    im.entries.assign(n, std::vector<Int>(n, 0));
    for (const auto& v : pg.vertices) im.entries[index[v.id]][index[v.id]] = v.euler;
    for (const auto& e : pg.edges) {
        std::size_t i = index.at(e.v1), j = index.at(e.v2);
        Int s = e.sign == EdgeSign::Plus ? 1 : -1;
        im.entries[i][j] += s;
        im.entries[j][i] += s;
    }
    return im;
}

namespace {

using boost::multiprecision::abs;

// fraction-free elimination; every division is exact
Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { piv = i; break; }
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    std::vector<Int> d(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            // pivot: nonzero entry of smallest absolute value in the
            // submatrix, re-selected on every pass to limit entry growth
            std::size_t pi = n, pj = n;
            Int best = 0;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < best)) {
                        best = abs(m[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == n) return d;   // submatrix is zero; trailing factors stay 0
            std::swap(m[t], m[pi]);
            for (auto& row : m) std::swap(row[t], row[pj]);

            // one clearing sweep; leftover remainders are strictly smaller
            // than the pivot and become the next pivot
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t] == 0) continue;
                Int q = m[i][t] / m[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j] == 0) continue;
                Int q = m[t][j] / m[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // the pivot must divide every remaining entry
            bool fixed = false;
            for (std::size_t i = t + 1; i < n && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (std::size_t jj = t; jj < n; ++jj) m[t][jj] += m[i][jj];
                        fixed = true;
                    }
            if (!fixed) break;
        }
        d[t] = abs(m[t][t]);
    }
    return d;
}

}

HomologyInvariants homology_invariants(const PlumbGraph& pg) {
    IntersectionMatrix im = intersection_matrix(pg);
    HomologyInvariants inv;
    inv.det = det_bareiss(im.entries);
    inv.factors = smith_diagonal(im.entries);
    inv.corank = 0;
    for (const auto& f : inv.factors)
        if (f == 0) ++inv.corank;
    inv.genus_sum_doubled = 0;
    for (const auto& v : pg.vertices) inv.genus_sum_doubled += 2 * v.genus;

    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : pg.edges) {
        adj[e.v1].push_back(e.v2);
        adj[e.v2].push_back(e.v1);
    }
    std::map<std::string, bool> seen;
    Int components = 0;
    for (const auto& v : pg.vertices) {
        if (seen[v.id]) continue;
        ++components;
        std::vector<std::string> stack{v.id};
        seen[v.id] = true;
        while (!stack.empty()) {
            std::string u = stack.back();
            stack.pop_back();
            for (const auto& w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    inv.cycle_count = Int(pg.edges.size()) - Int(pg.vertices.size()) + components;
    return inv;
}

PlumbGraph r0_flip(const PlumbGraph& pg, const std::string& vertex_id) {
    pg.vertex(vertex_id);   // id check
    PlumbGraph out = pg;
    for (auto& e : out.edges) {
        bool at1 = e.v1 == vertex_id, at2 = e.v2 == vertex_id;
        if (at1 == at2) continue;   // untouched, or a loop flipped twice
        e.sign = e.sign == EdgeSign::Plus ? EdgeSign::Minus : EdgeSign::Plus;
    }
    out.sort_records();
    return out;
}

PlumbGraph canonicalize_signs(const PlumbGraph& pg) {
    PlumbGraph original = pg;
    original.sort_records();
    PlumbGraph out = original;

    std::map<std::string, std::vector<std::size_t>> inc;
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
        inc[out.edges[i].v1].push_back(i);
        inc[out.edges[i].v2].push_back(i);
    }
    auto toggle = [](PlumbEdge& e) {
        e.sign = e.sign == EdgeSign::Plus ? EdgeSign::Minus : EdgeSign::Plus;
    };

    // spanning-forest pass: choose vertex parities making all tree edges '+'
    std::map<std::string, int> parity;
    for (const auto& v : out.vertices) {
        if (parity.count(v.id)) continue;
        parity[v.id] = 0;
        std::vector<std::string> stack{v.id};
        while (!stack.empty()) {
            std::string u = stack.back();
            stack.pop_back();
            for (std::size_t idx : inc[u]) {
                const PlumbEdge& e = out.edges[idx];
                const std::string& w = e.v1 == u ? e.v2 : e.v1;
                if (parity.count(w)) continue;
                parity[w] = parity[u] ^ (e.sign == EdgeSign::Minus ? 1 : 0);
                stack.push_back(w);
            }
        }
    }
    for (auto& e : out.edges)
        if (parity[e.v1] ^ parity[e.v2]) toggle(e);

    // greedy single-vertex flips until no flip lowers the '-' count
    for (bool improved = true; improved;) {
        improved = false;
        for (const auto& v : out.vertices) {
            int minus = 0, plus = 0;
            for (std::size_t idx : inc[v.id]) {
                if (out.edges[idx].v1 == out.edges[idx].v2) continue;
                (out.edges[idx].sign == EdgeSign::Minus ? minus : plus)++;
            }
            if (minus > plus) {
                for (std::size_t idx : inc[v.id]) {
                    if (out.edges[idx].v1 == out.edges[idx].v2) continue;
                    toggle(out.edges[idx]);
                }
                improved = true;
            }
        }
    }

    // the local minimum must not be worse than the input
    auto minus_count = [](const PlumbGraph& g) {
        std::size_t n = 0;
        for (const auto& e : g.edges)
            if (e.sign == EdgeSign::Minus) ++n;
        return n;
    };
    if (minus_count(out) > minus_count(original)) return original;
    out.sort_records();
    return out;
}

}
