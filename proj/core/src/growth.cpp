#include "automult/growth.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "automult/error.hpp"

namespace automult {

namespace {

constexpr std::size_t kSkeletonVisitCap = 500000;
constexpr std::size_t kPatternCap = 20000;

// Expansion automaton tracking whether the most significant digit read so
// far is nonzero: node = 3 * state + tag, tag 0 = nothing read (initial
// only), 1 = last read digit zero, 2 = nonzero.  Words are fed least
// significant digit first, so a word is a canonical expansion exactly when
// it is empty or ends (in read order) on a nonzero digit.
struct Product {
    const Dfao* d = nullptr;
    int n = 0;
    int initial = 0;
    std::vector<char> accept, trim;

    int base() const { return d->base; }
    int target(int node, int c) const { return 3 * d->delta[node / 3][c] + (c == 0 ? 1 : 2); }
};

Product build_product(const Dfao& d, const AcceptPredicate& acc) {
    Product p;
    p.d = &d;
    p.n = 3 * d.size();
    p.initial = 3 * d.initial;
    p.accept.assign(p.n, 0);
    for (int s = 0; s < d.size(); ++s)
        if (acc(d.output[s])) p.accept[3 * s + 2] = 1;
    if (acc(d.output[d.initial])) p.accept[p.initial] = 1;  // empty word = n 0

    std::vector<char> reach(p.n, 0);
    std::queue<int> bfs;
    reach[p.initial] = 1;
    bfs.push(p.initial);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int c = 0; c < p.base(); ++c) {
            int y = p.target(x, c);
            if (!reach[y]) {
                reach[y] = 1;
                bfs.push(y);
            }
        }
    }
    std::vector<std::vector<int>> rev(p.n);
    for (int x = 0; x < p.n; ++x) {
        if (!reach[x]) continue;
        for (int c = 0; c < p.base(); ++c) {
            int y = p.target(x, c);
            if (reach[y]) rev[y].push_back(x);
        }
    }
    std::vector<char> useful(p.n, 0);
    for (int x = 0; x < p.n; ++x) {
        if (reach[x] && p.accept[x]) {
            useful[x] = 1;
            bfs.push(x);
        }
    }
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int y : rev[x]) {
            if (!useful[y]) {
                useful[y] = 1;
                bfs.push(y);
            }
        }
    }
    p.trim.assign(p.n, 0);
    for (int x = 0; x < p.n; ++x) p.trim[x] = reach[x] && useful[x];
    return p;
}

// Strongly connected components of the trim subgraph.  Component ids come
// out in reverse topological order: every edge between components goes from
// a higher id to a lower one.
std::pair<int, std::vector<int>> components(const Product& p) {
    std::vector<int> comp(p.n, -1), index(p.n, -1), low(p.n, 0), stack;
    std::vector<char> onstack(p.n, 0);
    int next_index = 0, next_comp = 0;
    struct Frame {
        int node, edge;
    };
    for (int start = 0; start < p.n; ++start) {
        if (!p.trim[start] || index[start] != -1) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = low[start] = next_index++;
        stack.push_back(start);
        onstack[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < p.base()) {
                int y = p.target(f.node, f.edge++);
                if (!p.trim[y]) continue;
                if (index[y] == -1) {
                    index[y] = low[y] = next_index++;
                    stack.push_back(y);
                    onstack[y] = 1;
                    frames.push_back({y, 0});
                } else if (onstack[y]) {
                    low[f.node] = std::min(low[f.node], index[y]);
                }
            } else {
                int x = f.node;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().node] = std::min(low[frames.back().node], low[x]);
                if (low[x] == index[x]) {
                    while (true) {
                        int y = stack.back();
                        stack.pop_back();
                        onstack[y] = 0;
                        comp[y] = next_comp;
                        if (y == x) break;
                    }
                    ++next_comp;
                }
            }
        }
    }
    return {next_comp, comp};
}

DigitWord written(int base, const std::vector<int>& read_letters) {
    return DigitWord{base, std::vector<int>(read_letters.rbegin(), read_letters.rend())};
}

// Shortest read-order letter path from src to a goal node through the trim
// subgraph, optionally restricted to one component.
std::vector<int> bfs_letters(const Product& p, int src, const std::function<bool(int)>& goal,
                             const std::vector<int>& comp, int comp_only) {
    if (goal(src)) return {};
    std::vector<int> parent(p.n, -1), letter(p.n, -1);
    std::vector<char> seen(p.n, 0);
    std::queue<int> q;
    q.push(src);
    seen[src] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int c = 0; c < p.base(); ++c) {
            int y = p.target(x, c);
            if (!p.trim[y] || seen[y]) continue;
            if (comp_only >= 0 && comp[y] != comp_only) continue;
            seen[y] = 1;
            parent[y] = x;
            letter[y] = c;
            if (goal(y)) {
                std::vector<int> letters;
                for (int z = y; z != src; z = parent[z]) letters.push_back(letter[z]);
                std::reverse(letters.begin(), letters.end());
                return letters;
            }
            q.push(y);
        }
    }
    throw Error("internal", "expected path missing in trim graph");
}

std::vector<int> repeat_read(const std::vector<int>& w, std::size_t times) {
    std::vector<int> out;
    out.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

ExponentialWitness make_witness(const Product& p, int q,
                                const std::vector<std::vector<std::pair<int, int>>>& intra,
                                const std::vector<int>& comp) {
    auto [c1, t1] = intra[q][0];
    auto [c2, t2] = intra[q][1];
    std::vector<int> cyc1{c1}, cyc2{c2};
    auto is_q = [&](int x) { return x == q; };
    auto back1 = bfs_letters(p, t1, is_q, comp, comp[q]);
    auto back2 = bfs_letters(p, t2, is_q, comp, comp[q]);
    cyc1.insert(cyc1.end(), back1.begin(), back1.end());
    cyc2.insert(cyc2.end(), back2.begin(), back2.end());
    std::vector<int> v1 = repeat_read(cyc1, cyc2.size());
    std::vector<int> v2 = repeat_read(cyc2, cyc1.size());
    auto u_read = bfs_letters(p, p.initial, is_q, comp, -1);
    auto w_read = bfs_letters(
        p, q, [&](int x) { return p.accept[x] != 0; }, comp, -1);
    int end = q;
    for (int c : w_read) end = p.target(end, c);
    return ExponentialWitness{written(p.base(), w_read), written(p.base(), v1),
                              written(p.base(), v2), written(p.base(), u_read),
                              p.d->output[end / 3]};
}

struct SkeletonCtx {
    const Product* p;
    const std::vector<int>* comp;
    const std::vector<char>* cyclic;
    const std::vector<std::vector<std::pair<int, int>>>* intra;
    std::set<std::string> seen;
    std::vector<BasicAridSet> out;
    std::size_t visits = 0;
};

std::string pattern_key(const BasicAridSet& a) {
    std::string key;
    for (std::size_t i = 0; i < a.u.size(); ++i) {
        key += word_to_string(a.u[i]);
        key += '|';
        if (i < a.v.size()) {
            key += word_to_string(a.v[i]);
            key += '^';
        }
    }
    return key;
}

void emit_pattern(SkeletonCtx& ctx, const std::vector<std::vector<int>>& segs,
                  const std::vector<std::vector<int>>& pumps) {
    BasicAridSet a;
    a.base = ctx.p->base();
    for (const auto& s : segs) a.u.push_back(written(a.base, s));
    for (const auto& v : pumps) a.v.push_back(written(a.base, v));
    std::string key = pattern_key(a);
    if (!ctx.seen.insert(key).second) return;
    if (ctx.out.size() >= kPatternCap)
        throw Error("decomposition-too-large", "pattern count exceeds cap");
    ctx.out.push_back(std::move(a));
}

// Enumerates skeleton paths through the condensation: islands accumulate
// read letters, each cyclic component contributes one pump word.  Pumps may
// repeat zero times, so passing through a cycle without looping is covered.
void skeleton_dfs(SkeletonCtx& ctx, int entry, std::vector<std::vector<int>>& segs,
                  std::vector<std::vector<int>>& pumps, std::vector<int> cur) {
    if (++ctx.visits > kSkeletonVisitCap)
        throw Error("decomposition-too-large", "skeleton walk exceeds cap");
    const Product& p = *ctx.p;
    int ci = (*ctx.comp)[entry];
    if ((*ctx.cyclic)[ci]) {
        std::vector<int> cyc;
        int x = entry;
        do {
            auto [c, y] = (*ctx.intra)[x][0];
            cyc.push_back(c);
            x = y;
        } while (x != entry);
        segs.push_back(cur);
        pumps.push_back(cyc);
        std::vector<int> walk;
        x = entry;
        for (std::size_t step = 0; step < cyc.size(); ++step) {
            if (p.accept[x]) {
                segs.push_back(walk);
                emit_pattern(ctx, segs, pumps);
                segs.pop_back();
            }
            for (int c = 0; c < p.base(); ++c) {
                int y = p.target(x, c);
                if (!p.trim[y] || (*ctx.comp)[y] == ci) continue;
                std::vector<int> next = walk;
                next.push_back(c);
                skeleton_dfs(ctx, y, segs, pumps, std::move(next));
            }
            auto [c, y] = (*ctx.intra)[x][0];
            walk.push_back(c);
            x = y;
        }
        segs.pop_back();
        pumps.pop_back();
    } else {
        if (p.accept[entry]) {
            segs.push_back(cur);
            emit_pattern(ctx, segs, pumps);
            segs.pop_back();
        }
        for (int c = 0; c < p.base(); ++c) {
            int y = p.target(entry, c);
            if (!p.trim[y]) continue;
            std::vector<int> next = cur;
            next.push_back(c);
            skeleton_dfs(ctx, y, segs, pumps, std::move(next));
        }
    }
}

}  // namespace

GrowthAnalysis language_growth(const Dfao& d, const AcceptPredicate& accept) {
    Product p = build_product(d, accept);
    GrowthAnalysis res;
    if (std::none_of(p.trim.begin(), p.trim.end(), [](char t) { return t != 0; })) {
        res.kind = GrowthAnalysis::Kind::Empty;
        return res;
    }

    auto [ncomp, comp] = components(p);
    std::vector<int> comp_size(ncomp, 0);
    for (int x = 0; x < p.n; ++x)
        if (p.trim[x]) ++comp_size[comp[x]];
    std::vector<std::vector<std::pair<int, int>>> intra(p.n);
    std::vector<char> cyclic(ncomp, 0);
    for (int x = 0; x < p.n; ++x) {
        if (!p.trim[x]) continue;
        for (int c = 0; c < p.base(); ++c) {
            int y = p.target(x, c);
            if (p.trim[y] && comp[y] == comp[x]) intra[x].emplace_back(c, y);
        }
        if (!intra[x].empty() || comp_size[comp[x]] > 1) cyclic[comp[x]] = 1;
    }

    for (int x = 0; x < p.n; ++x) {
        if (p.trim[x] && intra[x].size() >= 2) {
            res.kind = GrowthAnalysis::Kind::Exponential;
            res.witness = make_witness(p, x, intra, comp);
            return res;
        }
    }

    // Polynomial: count pumpable components along condensation paths.
    std::vector<std::vector<int>> comp_nodes(ncomp);
    for (int x = 0; x < p.n; ++x)
        if (p.trim[x]) comp_nodes[comp[x]].push_back(x);
    std::vector<long> blocks(ncomp, LONG_MIN);
    int start = comp[p.initial];
    blocks[start] = cyclic[start] ? 1 : 0;
    for (int ci = ncomp - 1; ci >= 0; --ci) {
        if (blocks[ci] == LONG_MIN) continue;
        for (int x : comp_nodes[ci]) {
            for (int c = 0; c < p.base(); ++c) {
                int y = p.target(x, c);
                if (!p.trim[y] || comp[y] == ci) continue;
                long cand = blocks[ci] + (cyclic[comp[y]] ? 1 : 0);
                blocks[comp[y]] = std::max(blocks[comp[y]], cand);
            }
        }
    }
    long best = 0;
    for (int x = 0; x < p.n; ++x)
        if (p.trim[x] && p.accept[x]) best = std::max(best, blocks[comp[x]]);

    res.kind = GrowthAnalysis::Kind::Polynomial;
    res.block_count = static_cast<std::size_t>(best);
    res.degree = best - 1;

    SkeletonCtx ctx;
    ctx.p = &p;
    ctx.comp = &comp;
    ctx.cyclic = &cyclic;
    ctx.intra = &intra;
    std::vector<std::vector<int>> segs, pumps;
    skeleton_dfs(ctx, p.initial, segs, pumps, {});
    res.decomposition = std::move(ctx.out);
    return res;
}

GrowthAnalysis support_growth(const Dfao& d) {
    return language_growth(d, [](const Value& v) { return !v.is_zero(); });
}

}  // namespace automult
