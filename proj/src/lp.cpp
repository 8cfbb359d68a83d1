#include "ghostpic/lp.hpp"

#include <stdexcept>

namespace ghostpic {

namespace {

struct Tableau {
    std::vector<std::vector<Rat>> a;  // m rows, cols + 1 (rhs last)
    std::vector<int> basis;
    int cols = 0;

    Rat& rhs(int r) { return a[r][cols]; }

    void pivot(int r, int c) {
        Rat p = a[r][c];
        for (auto& v : a[r]) v /= p;
        for (size_t i = 0; i < a.size(); ++i) {
            if ((int)i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j <= cols; ++j)
                if (a[r][j] != 0) a[i][j] -= f * a[r][j];
        }
        basis[r] = c;
    }

    // maximize obj over columns allowed[j]; returns false when unbounded
    bool optimize(const std::vector<Rat>& obj, const std::vector<bool>& allowed) {
        const int m = (int)a.size();
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols && enter < 0; ++j) {
                if (!allowed[j]) continue;
                bool basic = false;
                for (int b : basis)
                    if (b == j) basic = true;
                if (basic) continue;
                Rat red = obj[j];
                for (int i = 0; i < m; ++i)
                    if (a[i][j] != 0) red -= obj[basis[i]] * a[i][j];
                if (red > 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rat best;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter] <= 0) continue;
                Rat ratio = a[i][cols] / a[i][enter];
                if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_maximize(const RatVec& c, const std::vector<LpRow>& rows) {
    const int n = (int)c.size();
    const int m = (int)rows.size();
    int slacks = 0;
    for (const auto& r : rows)
        if (r.kind != RowKind::Eq) ++slacks;
    const int art0 = n + slacks;
    Tableau t;
    t.cols = art0 + m;
    t.a.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
    t.basis.assign(m, -1);
    int s = n;
    for (int i = 0; i < m; ++i) {
        const auto& r = rows[i];
        if ((int)r.coef.size() != n) throw std::invalid_argument("lp row width");
        for (int j = 0; j < n; ++j) t.a[i][j] = r.coef[j];
        if (r.kind == RowKind::Le) t.a[i][s++] = 1;
        else if (r.kind == RowKind::Ge) t.a[i][s++] = -1;
        t.a[i][t.cols] = r.rhs;
        if (r.rhs < 0)
            for (auto& v : t.a[i]) v = -v;
        t.a[i][art0 + i] = 1;
        t.basis[i] = art0 + i;
    }

    std::vector<Rat> phase1(t.cols, Rat(0));
    for (int i = 0; i < m; ++i) phase1[art0 + i] = -1;
    std::vector<bool> all(t.cols, true);
    t.optimize(phase1, all);
    Rat infeas = 0;
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= art0) infeas += t.a[i][t.cols];
    LpResult res;
    if (infeas != 0) return res;

    // drive zero-level artificials out of the basis
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < art0) continue;
        for (int j = 0; j < art0; ++j) {
            if (t.a[i][j] != 0) {
                t.pivot(i, j);
                break;
            }
        }
    }

    std::vector<Rat> obj(t.cols, Rat(0));
    for (int j = 0; j < n; ++j) obj[j] = c[j];
    std::vector<bool> allowed(t.cols, false);
    for (int j = 0; j < art0; ++j) allowed[j] = true;
    res.feasible = true;
    res.bounded = t.optimize(obj, allowed);
    res.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.a[i][t.cols];
    res.value = 0;
    for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

}  // namespace ghostpic
