/*
 * Copyright 2026 the hopfforge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hopfforge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hopfforge {

void GroupData::finish(int a_index) {
    int n = order();
    if (n == 0) fail(ErrorKind::Invalid, "empty group");
    for (int g = 0; g < n; ++g) {
        if ((int)cayley_[g].size() != n) fail(ErrorKind::Invalid, "Cayley table not square");
        for (int h = 0; h < n; ++h)
            if (cayley_[g][h] < 0 || cayley_[g][h] >= n)
                fail(ErrorKind::Invalid, "Cayley table entry out of range");
        if (cayley_[0][g] != g || cayley_[g][0] != g)
            fail(ErrorKind::Invalid, "index 0 is not an identity");
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                if (cayley_[cayley_[g][h]][k] != cayley_[g][cayley_[h][k]])
                    fail(ErrorKind::Invalid, "Cayley table is not associative");
    inv_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (cayley_[g][h] == 0 && cayley_[h][g] == 0) { inv_[g] = h; break; }
        if (inv_[g] < 0) fail(ErrorKind::Invalid, "element without inverse");
    }
    center_.clear();
    for (int g = 0; g < n; ++g) {
        bool central = true;
        for (int h = 0; h < n && central; ++h)
            if (cayley_[g][h] != cayley_[h][g]) central = false;
        if (central) center_.push_back(g);
    }
    if (a_index < 0 || a_index >= n) fail(ErrorKind::Invalid, "skew point index out of range");
    if (!std::binary_search(center_.begin(), center_.end(), a_index))
        fail(ErrorKind::Invalid, "skew point is not central");
    a_ = a_index;
    if (names_.empty()) {
        names_.resize(n);
        names_[0] = "1";
        for (int g = 1; g < n; ++g) names_[g] = "g" + std::to_string(g);
    }
}

GroupData GroupData::cyclic(const std::vector<int>& orders, const std::vector<int>& a_word) {
    if (orders.empty()) fail(ErrorKind::Invalid, "cyclic spec needs at least one factor");
    for (int m : orders)
        if (m < 1) fail(ErrorKind::Invalid, "cyclic factor order must be positive");
    if (a_word.size() != orders.size())
        fail(ErrorKind::Invalid, "skew point word length must match factor count");
    int n = 1;
    for (int m : orders) n *= m;
    if (n > 4096) fail(ErrorKind::Invalid, "group too large");
    std::vector<int> stride(orders.size());
    int acc = 1;
    for (size_t i = 0; i < orders.size(); ++i) { stride[i] = acc; acc *= orders[i]; }
    auto decode = [&](int idx) {
        std::vector<int> e(orders.size());
        for (size_t i = 0; i < orders.size(); ++i) { e[i] = idx % orders[i]; idx /= orders[i]; }
        return e;
    };
    auto encode = [&](const std::vector<int>& e) {
        int idx = 0;
        for (size_t i = orders.size(); i-- > 0;)
            idx = idx * orders[i] + (e[i] % orders[i] + orders[i]) % orders[i];
        return idx;
    };
    GroupData G;
    G.cayley_.assign(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            auto eg = decode(g), eh = decode(h);
            std::vector<int> s(orders.size());
            for (size_t i = 0; i < orders.size(); ++i) s[i] = eg[i] + eh[i];
            G.cayley_[g][h] = encode(s);
        }
    // names: generators a, b, c, ... per factor
    static const char* gen_names = "abcdefgh";
    G.names_.resize(n);
    for (int g = 0; g < n; ++g) {
        auto e = decode(g);
        std::string s;
        for (size_t i = 0; i < orders.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += gen_names[i % 8];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        G.names_[g] = s.empty() ? "1" : s;
    }
    std::vector<int> aw = a_word;
    G.finish(encode(aw));
    return G;
}

GroupData GroupData::from_table(const std::vector<std::vector<int>>& table, int a_index) {
    GroupData G;
    G.cayley_ = table;
    G.finish(a_index);
    return G;
}

void GroupData::set_names(std::vector<std::string> names) {
    if ((int)names.size() != order()) fail(ErrorKind::Invalid, "name list size mismatch");
    names_ = std::move(names);
}

int GroupData::power(int g, int64_t e) const {
    int m = element_order(g);
    int64_t r = e % m;
    if (r < 0) r += m;
    int acc = 0;
    for (int64_t i = 0; i < r; ++i) acc = mul(acc, g);
    return acc;
}

int GroupData::element_order(int g) const {
    int acc = g, ord = 1;
    while (acc != 0) { acc = mul(acc, g); ++ord; }
    return ord;
}

bool GroupData::is_central(int g) const {
    return std::binary_search(center_.begin(), center_.end(), g);
}

std::vector<int> GroupData::subgroup_generated(const std::vector<int>& gens) const {
    std::set<int> elems{0};
    std::vector<int> work{0};
    while (!work.empty()) {
        int g = work.back();
        work.pop_back();
        for (int s : gens) {
            for (int x : {mul(g, s), mul(g, inverse(s))})
                if (elems.insert(x).second) work.push_back(x);
        }
    }
    return std::vector<int>(elems.begin(), elems.end());
}

std::vector<int> GroupData::commutator_subgroup() const {
    std::vector<int> comms;
    for (int g = 0; g < order(); ++g)
        for (int h = 0; h < order(); ++h)
            comms.push_back(mul(mul(inverse(g), inverse(h)), mul(g, h)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_generated(comms);
}

std::pair<GroupData, std::vector<int>> GroupData::quotient(
    const std::vector<int>& normal_subgroup) const {
    int n = order();
    std::vector<int> cls(n, -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (cls[g] >= 0) continue;
        int c = (int)reps.size();
        // identity's coset must get index 0; process elements in index order,
        // so g = 0 always lands first
        for (int h : normal_subgroup) cls[mul(g, h)] = c;
        if (cls[g] != c) fail(ErrorKind::Invalid, "subgroup is not closed");
        reps.push_back(g);
    }
    int m = (int)reps.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) table[i][j] = cls[mul(reps[i], reps[j])];
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (cls[mul(g, h)] != table[cls[g]][cls[h]])
                fail(ErrorKind::Invalid, "quotient by a non-normal subgroup");
    GroupData Q;
    Q.cayley_ = table;
    Q.names_.resize(m);
    for (int i = 0; i < m; ++i) Q.names_[i] = names_[reps[i]] + "N";
    Q.finish(cls[a_]);
    return {Q, cls};
}

std::vector<int> GroupData::generating_set() const {
    std::vector<int> gens;
    std::vector<int> have{0};
    while ((int)have.size() < order()) {
        // deterministically take the element of largest order outside the
        // current subgroup (ties broken by index)
        int best = -1, best_ord = 0;
        for (int g = 0; g < order(); ++g) {
            if (std::binary_search(have.begin(), have.end(), g)) continue;
            int o = element_order(g);
            if (o > best_ord) { best = g; best_ord = o; }
        }
        gens.push_back(best);
        have = subgroup_generated(gens);
    }
    return gens;
}

CharacterMap make_character(const GroupData& G, const Field& F, std::vector<Fe> values) {
    if ((int)values.size() != G.order())
        fail(ErrorKind::Invalid, "character value list size mismatch");
    if (values[0] != F.one()) fail(ErrorKind::Invalid, "character: chi(1) != 1");
    for (int g = 0; g < G.order(); ++g) {
        if (F.is_zero(values[g])) fail(ErrorKind::Invalid, "character value 0");
        for (int h = 0; h < G.order(); ++h)
            if (values[G.mul(g, h)] != F.mul(values[g], values[h]))
                fail(ErrorKind::Invalid, "character is not multiplicative");
    }
    return CharacterMap{std::move(values)};
}

CMap make_cmap(const GroupData& G, const Field& F, const CharacterMap& chi,
               std::vector<Fe> values) {
    if ((int)values.size() != G.order())
        fail(ErrorKind::Invalid, "c-map value list size mismatch");
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h) {
            Fe lhs = values[G.mul(h, g)];
            Fe rhs = F.add(F.mul(chi(g), values[h]), values[g]);
            if (lhs != rhs)
                fail(ErrorKind::Invalid, "c-map violates c(hg) = chi(g)c(h) + c(g)");
        }
    return CMap{std::move(values)};
}

Subspace cocycle_space(const GroupData& G, const Field& F, const CharacterMap& chi) {
    int n = G.order();
    // unknowns c(g); one equation per pair (h, g)
    Mat M(F, n * n, n);
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            int row = h * n + g;
            M.at(row, G.mul(h, g)) = F.add(M.at(row, G.mul(h, g)), F.one());
            M.at(row, h) = F.sub(M.at(row, h), chi(g));
            M.at(row, g) = F.sub(M.at(row, g), F.one());
        }
    return kernel(M);
}

CharacterList linear_characters(const GroupData& G, const Field& F) {
    auto D = G.commutator_subgroup();
    auto [Q, proj] = G.quotient(D);
    // chain of generators of the abelian quotient
    std::vector<int> gens = Q.order() == 1 ? std::vector<int>{} : Q.generating_set();
    std::map<int, Fe> start{{0, F.one()}};
    std::vector<std::map<int, Fe>> frontier{start};
    std::vector<int> have{0};
    for (int gi : gens) {
        // relation: smallest m >= 1 with gi^m in current subgroup
        int m = 1, acc = gi;
        while (!std::binary_search(have.begin(), have.end(), acc)) {
            acc = Q.mul(acc, gi);
            ++m;
        }
        int target = acc; // gi^m
        std::vector<std::map<int, Fe>> next;
        for (const auto& chi : frontier) {
            Fe rhs = chi.at(target);
            for (uint32_t yv = 1; yv < F.q(); ++yv) {
                Fe y{yv};
                if (F.pow(y, m) != rhs) continue;
                std::map<int, Fe> ext = chi;
                // extend over cosets h * gi^t
                for (const auto& [h, val] : chi) {
                    int cur = h;
                    Fe cv = val;
                    for (int t = 1; t < m; ++t) {
                        cur = Q.mul(cur, gi);
                        cv = F.mul(cv, y);
                        ext[cur] = cv;
                    }
                }
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
        std::vector<int> newgens;
        for (int h : have) newgens.push_back(h);
        newgens.push_back(gi);
        have = Q.subgroup_generated(newgens);
    }
    CharacterList out;
    for (const auto& chi : frontier) {
        std::vector<Fe> vals(G.order());
        for (int g = 0; g < G.order(); ++g) vals[g] = chi.at(proj[g]);
        out.chars.push_back(CharacterMap{std::move(vals)});
    }
    std::sort(out.chars.begin(), out.chars.end(),
              [](const CharacterMap& A, const CharacterMap& B) {
                  for (size_t i = 0; i < A.values.size(); ++i)
                      if (A.values[i].v != B.values[i].v) return A.values[i].v < B.values[i].v;
                  return false;
              });
    // how many characters exist over a splitting field: |Q| / |Sylow_p(Q)|
    int pfree = Q.order();
    while (pfree % (int)F.p() == 0) pfree /= (int)F.p();
    if ((int)out.chars.size() < pfree) {
        // minimal degree where the p'-part of the exponent has roots of unity
        int e = 1;
        for (int g = 0; g < Q.order(); ++g) e = std::lcm(e, Q.element_order(g));
        while (e % (int)F.p() == 0) e /= (int)F.p();
        uint64_t m = 1, pm = F.p() % e;
        while (pm != 1u % e) { pm = pm * F.p() % e; ++m; }
        out.suggested_degree = (int)std::lcm<uint64_t>(m, F.d());
    }
    return out;
}

Vec character_idempotent(const GroupData& G, const CharacterMap& lambda, const Field& F) {
    if (!G.is_abelian())
        fail(ErrorKind::NotApplicable,
             "character idempotents are only defined here for abelian groups");
    if (G.order() % F.p() == 0)
        fail(ErrorKind::NotApplicable,
             "p divides |G|: the group algebra is not semisimple");
    Fe inv_order = F.inv(F.from_int(G.order()));
    Vec e(G.order(), F.zero());
    for (int g = 0; g < G.order(); ++g)
        e[g] = F.mul(inv_order, lambda(G.inverse(g)));
    return e;
}

void group_isomorphisms(const GroupData& G, const GroupData& G2, int a, int a2,
                        const std::function<bool(const std::vector<int>&)>& visit,
                        int budget) {
    if (G.order() > budget || G2.order() > budget)
        fail(ErrorKind::Budget,
             "group order exceeds the isomorphism enumeration budget (" +
                 std::to_string(budget) + ")");
    if (G.order() != G2.order()) return;
    if (G.element_order(a) != G2.element_order(a2)) return;
    std::vector<int> gens = G.generating_set();
    int n = G.order();

    // pre-sorted candidate images by element order
    std::vector<std::vector<int>> by_order(n + 1);
    for (int h = 0; h < n; ++h) by_order[G2.element_order(h)].push_back(h);

    std::vector<int> img(n, -1);
    img[0] = 0;

    // closure: propagate products; returns false on conflict
    std::function<bool(std::vector<int>&)> close = [&](std::vector<int>& m) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int g = 0; g < n; ++g) {
                if (m[g] < 0) continue;
                for (int h = 0; h < n; ++h) {
                    if (m[h] < 0) continue;
                    int gh = G.mul(g, h);
                    int val = G2.mul(m[g], m[h]);
                    if (m[gh] < 0) { m[gh] = val; changed = true; }
                    else if (m[gh] != val) return false;
                }
            }
        }
        return true;
    };

    std::function<bool(size_t, std::vector<int>)> rec = [&](size_t gi, std::vector<int> cur) {
        if (gi == gens.size()) {
            for (int g = 0; g < n; ++g)
                if (cur[g] < 0) return true; // not everything reached: not surjective
            std::vector<bool> hit(n, false);
            for (int g = 0; g < n; ++g) {
                if (hit[cur[g]]) return true;
                hit[cur[g]] = true;
            }
            if (cur[a] != a2) return true;
            return visit(cur);
        }
        int g = gens[gi];
        if (cur[g] >= 0) return rec(gi + 1, cur);
        for (int h : by_order[G.element_order(g)]) {
            std::vector<int> next = cur;
            next[g] = h;
            if (!close(next)) continue;
            if (next[a] >= 0 && next[a] != a2) continue;
            if (!rec(gi + 1, std::move(next))) return false;
        }
        return true;
    };
    rec(0, img);
}

std::vector<std::vector<int>> all_group_isomorphisms(const GroupData& G, const GroupData& G2,
                                                     int a, int a2, int budget) {
    std::vector<std::vector<int>> out;
    group_isomorphisms(G, G2, a, a2, [&](const std::vector<int>& f) {
        out.push_back(f);
        return true;
    }, budget);
    return out;
}

} // namespace hopfforge
