#pragma once

// brute-force interval combinatorics, independent of the catalog generator

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Support = std::vector<int>;  // 0/1 per vertex

struct Quiver {
    int n;
    std::vector<std::pair<int, int>> arrows;  // 0-based (source, target)
};

inline Quiver type_a(const std::string& word) {
    Quiver q{(int)word.size() + 1, {}};
    for (int i = 0; i < (int)word.size(); ++i) {
        if (word[i] == 'L') q.arrows.push_back({i + 1, i});
        else q.arrows.push_back({i, i + 1});
    }
    return q;
}

inline bool connected(const Quiver& q, const Support& s) {
    int first = -1, count = 0;
    for (int i = 0; i < q.n; ++i)
        if (s[i]) {
            if (first < 0) first = i;
            ++count;
        }
    if (count == 0) return false;
    std::vector<int> seen(q.n, 0);
    std::vector<int> stack{first};
    seen[first] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [a, b] : q.arrows)
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
                if (x == v && s[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    stack.push_back(y);
                }
    }
    return reached == count;
}

// indecomposables of a type-A quiver with identity maps: connected supports
inline std::vector<Support> indecomposables(const Quiver& q) {
    std::vector<Support> out;
    for (int mask = 1; mask < (1 << q.n); ++mask) {
        Support s(q.n);
        for (int i = 0; i < q.n; ++i) s[i] = (mask >> i) & 1;
        if (connected(q, s)) out.push_back(s);
    }
    return out;
}

// submodules: subsets closed under arrows inside the support
inline std::vector<Support> submodules(const Quiver& q, const Support& m) {
    std::vector<Support> out;
    for (int mask = 0; mask < (1 << q.n); ++mask) {
        Support u(q.n);
        bool ok = true;
        for (int i = 0; i < q.n; ++i) {
            u[i] = (mask >> i) & 1;
            if (u[i] && !m[i]) ok = false;
        }
        if (!ok) continue;
        for (auto [a, b] : q.arrows)
            if (u[a] && m[b] && !u[b]) ok = false;
        if (ok) out.push_back(u);
    }
    return out;
}

inline Support minus(const Support& a, const Support& b) {
    Support r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] && !b[i];
    return r;
}

// connected components as a sorted multiset of supports
inline std::vector<Support> components(const Quiver& q, const Support& s) {
    std::vector<Support> out;
    std::vector<int> seen(q.n, 0);
    for (int i = 0; i < q.n; ++i) {
        if (!s[i] || seen[i]) continue;
        Support c(q.n, 0);
        std::vector<int> stack{i};
        seen[i] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c[v] = 1;
            for (auto [a, b] : q.arrows)
                for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
                    if (x == v && s[y] && !seen[y]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
        }
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// dim Hom(M,N) from the commutation equations f_b [a,b in M] = f_a [a,b in N] per arrow a->b
inline int hom(const Quiver& q, const Support& m, const Support& n) {
    std::vector<int> parent(q.n), zero(q.n, 0);
    for (int i = 0; i < q.n; ++i) {
        parent[i] = i;
        if (!(m[i] && n[i])) zero[i] = 1;
    }
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : q.arrows) {
        bool in_n = n[a] && n[b], in_m = m[a] && m[b];
        int lhs = in_n ? a : -1, rhs = in_m ? b : -1;  // -1 is the constant 0
        if (lhs >= 0 && zero[lhs]) lhs = -1;
        if (rhs >= 0 && zero[rhs]) rhs = -1;
        if (lhs < 0 && rhs < 0) continue;
        if (lhs < 0 || rhs < 0) {
            zero[find(lhs < 0 ? rhs : lhs)] = 1;
            continue;
        }
        int x = find(lhs), y = find(rhs);
        if (x != y) {
            parent[x] = y;
            zero[y] = zero[y] || zero[x];
        }
    }
    // zero flags may sit on vertices merged after they were set
    std::set<int> dead;
    for (int i = 0; i < q.n; ++i)
        if (m[i] && n[i] && zero[i]) dead.insert(find(i));
    int free = 0;
    std::set<int> roots;
    for (int i = 0; i < q.n; ++i)
        if (m[i] && n[i]) roots.insert(find(i));
    for (int r : roots)
        if (!dead.count(r)) ++free;
    return free;
}

}  // namespace oracle
