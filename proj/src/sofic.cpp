#include "symdyn/sofic.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace symdyn {

namespace {

using Mask = std::uint64_t;

int find_symbol(const LabelledGraph& g, const std::string& label) {
  for (std::size_t s = 0; s < g.alphabet.size(); ++s)
    if (g.alphabet[s] == label) return static_cast<int>(s);
  return -1;
}

}  // namespace

void validate_graph(const LabelledGraph& g) {
  if (g.vertices == 0) throw DataError("labelled graph needs at least one vertex");
  if (g.edges.empty()) throw DataError("labelled graph needs at least one edge");
  if (g.alphabet.empty()) throw DataError("labelled graph needs a nonempty alphabet");
  std::set<std::string> alpha(g.alphabet.begin(), g.alphabet.end());
  if (alpha.size() != g.alphabet.size()) throw DataError("alphabet has repeated symbols");
  for (const auto& e : g.edges) {
    if (e.from >= g.vertices || e.to >= g.vertices)
      throw DataError("edge endpoint out of range");
    if (!alpha.count(e.label)) throw DataError("edge label \"" + e.label + "\" not in alphabet");
  }
}

LabelledGraph essential_part(const LabelledGraph& g) {
  validate_graph(g);
  std::vector<char> alive(g.vertices, 1);
  for (;;) {
    std::vector<char> has_out(g.vertices, 0), has_in(g.vertices, 0);
    for (const auto& e : g.edges)
      if (alive[e.from] && alive[e.to]) {
        has_out[e.from] = 1;
        has_in[e.to] = 1;
      }
    bool changed = false;
    for (std::size_t v = 0; v < g.vertices; ++v)
      if (alive[v] && (!has_out[v] || !has_in[v])) {
        alive[v] = 0;
        changed = true;
      }
    if (!changed) break;
  }
  std::vector<std::size_t> remap(g.vertices, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (alive[v]) remap[v] = next++;
  LabelledGraph out;
  out.vertices = next;
  out.alphabet = g.alphabet;
  for (const auto& e : g.edges)
    if (alive[e.from] && alive[e.to]) out.edges.push_back({remap[e.from], remap[e.to], e.label});
  return out;
}

namespace {

// Per-symbol successor sets over an essential graph, vertices as bitmasks.
struct SubsetMachine {
  std::size_t nverts{0};
  std::size_t nsym{0};
  std::vector<std::string> alphabet;
  // succ[s][v] = bitmask of endpoints of s-labelled edges from v
  std::vector<std::vector<Mask>> succ;
  // pred[s][v] = bitmask of starts of s-labelled edges into v
  std::vector<std::vector<Mask>> pred;

  Mask full() const { return nverts == 64 ? ~Mask(0) : ((Mask(1) << nverts) - 1); }

  Mask step(Mask m, std::size_t s) const {
    Mask out = 0;
    for (std::size_t v = 0; v < nverts; ++v)
      if (m & (Mask(1) << v)) out |= succ[s][v];
    return out;
  }
  Mask step_back(Mask m, std::size_t s) const {
    Mask out = 0;
    for (std::size_t v = 0; v < nverts; ++v)
      if (m & (Mask(1) << v)) out |= pred[s][v];
    return out;
  }
  Mask read(Mask m, const std::vector<int>& word) const {
    for (int s : word) {
      m = step(m, static_cast<std::size_t>(s));
      if (!m) break;
    }
    return m;
  }
};

SubsetMachine make_machine(const LabelledGraph& essential) {
  if (essential.vertices > 32)
    throw DataError("presentation too large for the subset construction (> 32 vertices)");
  SubsetMachine m;
  m.nverts = essential.vertices;
  m.nsym = essential.alphabet.size();
  m.alphabet = essential.alphabet;
  m.succ.assign(m.nsym, std::vector<Mask>(m.nverts, 0));
  m.pred.assign(m.nsym, std::vector<Mask>(m.nverts, 0));
  for (const auto& e : essential.edges) {
    int s = find_symbol(essential, e.label);
    m.succ[s][e.from] |= Mask(1) << e.to;
    m.pred[s][e.to] |= Mask(1) << e.from;
  }
  return m;
}

std::vector<int> to_symbol_ids(const LabelledGraph& g, const Word& w) {
  std::vector<int> ids;
  ids.reserve(w.size());
  for (const auto& sym : w) {
    int s = find_symbol(g, sym);
    if (s < 0) throw DataError("symbol \"" + sym + "\" not in the alphabet");
    ids.push_back(s);
  }
  return ids;
}

// Deterministic right-resolving presentation from the forward subset
// construction, started at the full vertex set.
struct Deterministic {
  std::size_t states{0};
  std::size_t nsym{0};
  std::vector<std::string> alphabet;
  std::vector<std::vector<long>> delta;  // delta[s][q] or -1
  std::vector<Mask> state_mask;          // subset of essential vertices
};

Deterministic determinize(const SubsetMachine& m) {
  Deterministic d;
  d.nsym = m.nsym;
  d.alphabet = m.alphabet;
  std::map<Mask, long> index;
  std::vector<Mask> order;
  std::queue<Mask> todo;
  Mask start = m.full();
  index[start] = 0;
  order.push_back(start);
  todo.push(start);
  while (!todo.empty()) {
    Mask cur = todo.front();
    todo.pop();
    for (std::size_t s = 0; s < m.nsym; ++s) {
      Mask nxt = m.step(cur, s);
      if (!nxt) continue;
      if (!index.count(nxt)) {
        index[nxt] = static_cast<long>(order.size());
        order.push_back(nxt);
        todo.push(nxt);
        if (order.size() > 4096) throw DataError("determinization exceeds the state cap");
      }
    }
  }
  d.states = order.size();
  d.state_mask = order;
  d.delta.assign(d.nsym, std::vector<long>(d.states, -1));
  for (std::size_t q = 0; q < d.states; ++q)
    for (std::size_t s = 0; s < d.nsym; ++s) {
      Mask nxt = m.step(order[q], s);
      if (nxt) d.delta[s][q] = index[nxt];
    }
  return d;
}

// Follower-set minimization of a deterministic partial presentation
// (every state has a nonempty, infinite future). Returns the class of each
// state.
std::vector<std::size_t> minimize_classes(const Deterministic& d) {
  std::vector<std::size_t> cls(d.states, 0);
  // initial split by defined-symbol signature
  {
    std::map<std::vector<char>, std::size_t> sig;
    for (std::size_t q = 0; q < d.states; ++q) {
      std::vector<char> s(d.nsym);
      for (std::size_t a = 0; a < d.nsym; ++a) s[a] = d.delta[a][q] >= 0;
      auto [it, fresh] = sig.emplace(std::move(s), sig.size());
      cls[q] = it->second;
    }
  }
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<long>>, std::size_t> sig;
    std::vector<std::size_t> next(d.states);
    for (std::size_t q = 0; q < d.states; ++q) {
      std::vector<long> tr(d.nsym, -1);
      for (std::size_t a = 0; a < d.nsym; ++a)
        if (d.delta[a][q] >= 0) tr[a] = static_cast<long>(cls[d.delta[a][q]]);
      auto [it, fresh] = sig.emplace(std::make_pair(cls[q], std::move(tr)), sig.size());
      next[q] = it->second;
    }
    if (next == cls) break;
    cls = std::move(next);
  }
  return cls;
}

}  // namespace

std::set<Word> language(const LabelledGraph& g, std::size_t max_len) {
  auto ess = essential_part(g);
  std::set<Word> words;
  words.insert(Word{});
  if (ess.vertices == 0) return words;
  auto m = make_machine(ess);
  // BFS over (mask, word) pairs, deduplicating on words
  std::vector<std::pair<Mask, Word>> frontier{{m.full(), Word{}}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::pair<Mask, Word>> next;
    for (const auto& [mask, w] : frontier)
      for (std::size_t s = 0; s < m.nsym; ++s) {
        Mask nm = m.step(mask, s);
        if (!nm) continue;
        Word nw = w;
        nw.push_back(m.alphabet[s]);
        words.insert(nw);
        next.emplace_back(nm, std::move(nw));
      }
    frontier = std::move(next);
  }
  return words;
}

bool word_in_language(const LabelledGraph& g, const Word& w) {
  auto ess = essential_part(g);
  if (ess.vertices == 0) return w.empty();
  auto m = make_machine(ess);
  return m.read(m.full(), to_symbol_ids(g, w)) != 0;
}

namespace {

// Partial-function monoid over the determinized states, generated by the
// one-symbol transitions, reachable from the identity. Node 0 is the
// identity; edges append a symbol on the right (f -> delta_a . f).
struct FunctionMonoid {
  std::vector<std::vector<long>> funcs;        // funcs[node][q] or -1
  std::vector<std::vector<long>> next;         // next[node][sym]
  std::vector<Mask> dom;                       // domain mask over determinized states
};

FunctionMonoid build_monoid(const Deterministic& d) {
  if (d.states > 24) throw DataError("determinized presentation too large for the cover monoid");
  FunctionMonoid mo;
  std::map<std::vector<long>, long> index;
  std::vector<long> id(d.states);
  for (std::size_t q = 0; q < d.states; ++q) id[q] = static_cast<long>(q);
  index[id] = 0;
  mo.funcs.push_back(id);
  std::queue<long> todo;
  todo.push(0);
  while (!todo.empty()) {
    long cur = todo.front();
    todo.pop();
    if (static_cast<std::size_t>(cur) >= mo.next.size()) mo.next.resize(cur + 1);
    mo.next[cur].assign(d.nsym, -1);
    for (std::size_t s = 0; s < d.nsym; ++s) {
      std::vector<long> nf(d.states, -1);
      bool nonempty = false;
      for (std::size_t q = 0; q < d.states; ++q) {
        long mid = mo.funcs[cur][q];
        if (mid < 0) continue;
        long out = d.delta[s][mid];
        nf[q] = out;
        if (out >= 0) nonempty = true;
      }
      if (!nonempty) continue;
      auto it = index.find(nf);
      long nid;
      if (it == index.end()) {
        nid = static_cast<long>(mo.funcs.size());
        index[nf] = nid;
        mo.funcs.push_back(nf);
        todo.push(nid);
        if (mo.funcs.size() > 200000) throw DataError("cover monoid exceeds the size cap");
      } else {
        nid = it->second;
      }
      mo.next[cur][s] = nid;
    }
  }
  mo.next.resize(mo.funcs.size());
  for (auto& row : mo.next)
    if (row.empty()) row.assign(d.nsym, -1);
  mo.dom.resize(mo.funcs.size());
  for (std::size_t i = 0; i < mo.funcs.size(); ++i) {
    Mask m = 0;
    for (std::size_t q = 0; q < d.states; ++q)
      if (mo.funcs[i][q] >= 0) m |= Mask(1) << q;
    mo.dom[i] = m;
  }
  return mo;
}

// Stabilized subsets: domains of monoid elements lying on a cycle all of
// whose nodes share that domain.
std::set<Mask> stabilized_sets(const FunctionMonoid& mo, std::size_t nsym) {
  std::set<Mask> result;
  std::map<Mask, std::vector<long>> by_dom;
  for (std::size_t i = 0; i < mo.funcs.size(); ++i) by_dom[mo.dom[i]].push_back(i);
  for (const auto& [mask, nodes] : by_dom) {
    if (result.count(mask)) continue;
    // cycle search within the same-domain induced subgraph
    std::map<long, int> state;  // 0 unvisited, 1 in-progress, 2 done
    bool cyc = false;
    for (long root : nodes) {
      if (cyc) break;
      if (state.count(root)) continue;
      std::vector<std::pair<long, std::size_t>> stack{{root, 0}};
      state[root] = 1;
      while (!stack.empty() && !cyc) {
        auto& [v, si] = stack.back();
        if (si < nsym) {
          long w = mo.next[v][si++];
          if (w < 0 || mo.dom[w] != mask) continue;
          auto it = state.find(w);
          if (it == state.end()) {
            state[w] = 1;
            stack.emplace_back(w, 0);
          } else if (it->second == 1) {
            cyc = true;
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
    if (cyc) result.insert(mask);
  }
  return result;
}

std::vector<std::size_t> mask_to_list(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; m; ++q, m >>= 1)
    if (m & 1) out.push_back(q);
  return out;
}

struct CoverInternal {
  Deterministic det;
  std::vector<Mask> states;                       // sorted canonical order
  std::map<Mask, std::size_t> index;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;  // from, to, sym
  FunctionMonoid monoid;
};

CoverInternal krieger_internal(const LabelledGraph& g) {
  auto ess = essential_part(g);
  if (ess.vertices == 0) throw DataError("empty essential graph: the presented shift is empty");
  auto machine = make_machine(ess);
  CoverInternal ci;
  ci.det = determinize(machine);
  ci.monoid = build_monoid(ci.det);
  auto stable = stabilized_sets(ci.monoid, ci.det.nsym);

  std::vector<Mask> states(stable.begin(), stable.end());
  std::sort(states.begin(), states.end(), [](Mask a, Mask b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  ci.states = states;
  for (std::size_t i = 0; i < states.size(); ++i) ci.index[states[i]] = i;

  for (std::size_t i = 0; i < states.size(); ++i) {
    Mask target = states[i];
    for (std::size_t s = 0; s < ci.det.nsym; ++s) {
      Mask pre = 0;
      for (std::size_t q = 0; q < ci.det.states; ++q) {
        long nxt = ci.det.delta[s][q];
        if (nxt >= 0 && (target & (Mask(1) << nxt))) pre |= Mask(1) << q;
      }
      if (!pre) continue;
      auto it = ci.index.find(pre);
      if (it == ci.index.end())
        throw std::logic_error("cover closure violated: preimage is not a stabilized set");
      ci.edges.emplace_back(it->second, i, s);
    }
  }
  return ci;
}

CoverResult cover_to_result(const CoverInternal& ci, const std::vector<char>& keep,
                            const std::vector<std::string>& alphabet) {
  std::vector<std::size_t> remap(ci.states.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < ci.states.size(); ++i)
    if (keep[i]) remap[i] = next++;
  CoverResult res;
  res.cover.vertices = next;
  res.cover.alphabet = alphabet;
  for (const auto& [from, to, sym] : ci.edges)
    if (keep[from] && keep[to])
      res.cover.edges.push_back({remap[from], remap[to], alphabet[sym]});
  for (std::size_t i = 0; i < ci.states.size(); ++i)
    if (keep[i]) res.states.push_back(mask_to_list(ci.states[i]));
  return res;
}

}  // namespace

CoverResult krieger_cover(const LabelledGraph& g) {
  auto ci = krieger_internal(g);
  std::vector<char> keep(ci.states.size(), 1);
  return cover_to_result(ci, keep, ci.det.alphabet);
}

bool sofic_irreducible(const LabelledGraph& g) {
  auto ess = essential_part(g);
  if (ess.vertices == 0) return false;
  auto m = make_machine(ess);
  // forward-reachable subset states
  std::vector<Mask> fwd;
  {
    std::set<Mask> seen{m.full()};
    std::queue<Mask> todo;
    todo.push(m.full());
    while (!todo.empty()) {
      Mask cur = todo.front();
      todo.pop();
      fwd.push_back(cur);
      for (std::size_t s = 0; s < m.nsym; ++s) {
        Mask nxt = m.step(cur, s);
        if (nxt && !seen.count(nxt)) {
          seen.insert(nxt);
          todo.push(nxt);
        }
      }
    }
  }
  // backward-reachable start sets
  std::vector<Mask> bwd;
  {
    std::set<Mask> seen{m.full()};
    std::queue<Mask> todo;
    todo.push(m.full());
    while (!todo.empty()) {
      Mask cur = todo.front();
      todo.pop();
      bwd.push_back(cur);
      for (std::size_t s = 0; s < m.nsym; ++s) {
        Mask nxt = m.step_back(cur, s);
        if (nxt && !seen.count(nxt)) {
          seen.insert(nxt);
          todo.push(nxt);
        }
      }
    }
  }
  // reachability closure among forward states
  std::map<Mask, std::set<Mask>> reach;
  for (Mask t : fwd) {
    std::set<Mask> seen{t};
    std::queue<Mask> todo;
    todo.push(t);
    while (!todo.empty()) {
      Mask cur = todo.front();
      todo.pop();
      for (std::size_t s = 0; s < m.nsym; ++s) {
        Mask nxt = m.step(cur, s);
        if (nxt && !seen.count(nxt)) {
          seen.insert(nxt);
          todo.push(nxt);
        }
      }
    }
    reach[t] = std::move(seen);
  }
  for (Mask t : fwd)
    for (Mask w : bwd) {
      bool hit = false;
      for (Mask r : reach[t])
        if (r & w) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  return true;
}

CoverResult fischer_cover(const LabelledGraph& g) {
  if (!sofic_irreducible(g))
    throw PreconditionError("fischer_cover: the presented sofic shift is not irreducible");
  auto ci = krieger_internal(g);
  auto cls = minimize_classes(ci.det);

  // Synchronizing monoid elements: the induced map on follower classes is
  // constant on its domain.
  std::set<Mask> core;
  for (std::size_t i = 0; i < ci.monoid.funcs.size(); ++i) {
    if (ci.monoid.dom[i] == 0) continue;
    long cls_img = -1;
    bool constant = true;
    for (std::size_t q = 0; q < ci.det.states && constant; ++q) {
      long out = ci.monoid.funcs[i][q];
      if (out < 0) continue;
      long c = static_cast<long>(cls[out]);
      if (cls_img < 0)
        cls_img = c;
      else if (cls_img != c)
        constant = false;
    }
    if (!constant) continue;
    // preimages of states under this synchronizing word
    for (Mask target : ci.states) {
      Mask pre = 0;
      for (std::size_t q = 0; q < ci.det.states; ++q) {
        long out = ci.monoid.funcs[i][q];
        if (out >= 0 && (target & (Mask(1) << out))) pre |= Mask(1) << q;
      }
      if (pre && ci.index.count(pre)) core.insert(pre);
    }
  }

  // Keep the states with a forward path into the core.
  const std::size_t n = ci.states.size();
  std::vector<std::vector<std::size_t>> fwd_edges(n);
  for (const auto& [from, to, sym] : ci.edges) fwd_edges[from].push_back(to);
  std::vector<char> keep(n, 0);
  std::queue<std::size_t> todo;
  for (Mask c : core) {
    std::size_t i = ci.index.at(c);
    if (!keep[i]) {
      keep[i] = 1;
      todo.push(i);
    }
  }
  // reverse reachability
  std::vector<std::vector<std::size_t>> rev(n);
  for (const auto& [from, to, sym] : ci.edges) rev[to].push_back(from);
  while (!todo.empty()) {
    std::size_t cur = todo.front();
    todo.pop();
    for (std::size_t p : rev[cur])
      if (!keep[p]) {
        keep[p] = 1;
        todo.push(p);
      }
  }
  return cover_to_result(ci, keep, ci.det.alphabet);
}

Verdict is_intrinsically_synchronizing(const LabelledGraph& g, const Word& w,
                                       std::size_t bound) {
  auto ess = essential_part(g);
  if (ess.vertices == 0) throw DataError("empty essential graph");
  auto m = make_machine(ess);
  auto ids = to_symbol_ids(g, w);
  Mask t_w = m.read(m.full(), ids);
  if (!t_w && !w.empty()) throw DataError("word is not in the language");

  auto det = determinize(m);
  auto cls = minimize_classes(det);
  // all end states of w over every left context: read w in the determinized
  // automaton from every state where it is defined
  long cls_img = -1;
  bool constant = true;
  for (std::size_t q = 0; q < det.states && constant; ++q) {
    long cur = static_cast<long>(q);
    for (int s : ids) {
      cur = det.delta[s][cur];
      if (cur < 0) break;
    }
    if (cur < 0) continue;
    long c = static_cast<long>(cls[cur]);
    if (cls_img < 0)
      cls_img = c;
    else if (cls_img != c)
      constant = false;
  }
  if (constant) return Verdict::yes({{"follower_class", cls_img}});

  // minimal counterexample by (|nu| + |omega|, |nu|, lex)
  auto lang_words = [&](Mask from, std::size_t len) {
    std::set<Word> out;
    std::vector<std::pair<Mask, Word>> frontier{{from, {}}};
    for (std::size_t l = 0; l < len; ++l) {
      std::vector<std::pair<Mask, Word>> next;
      for (auto& [mask, word] : frontier)
        for (std::size_t s = 0; s < m.nsym; ++s) {
          Mask nm = m.step(mask, s);
          if (!nm) continue;
          Word nw = word;
          nw.push_back(m.alphabet[s]);
          if (l + 1 == len) out.insert(nw);
          next.emplace_back(nm, std::move(nw));
        }
      frontier = std::move(next);
    }
    return out;
  };
  for (std::size_t total = 2; total <= 2 * bound; ++total) {
    for (std::size_t ln = 1; ln + 1 <= total; ++ln) {
      std::size_t lo = total - ln;
      if (ln > bound || lo > bound) continue;
      for (const auto& nu : lang_words(m.full(), ln)) {
        Mask after_nu = m.read(m.full(), to_symbol_ids(g, nu));
        Mask e = m.read(after_nu, ids);
        if (!e) continue;  // nu.w not allowed
        for (const auto& omega : lang_words(t_w, lo)) {
          if (!m.read(e, to_symbol_ids(g, omega))) {
            return Verdict::no({{"nu", word_to_string(nu)}, {"omega", word_to_string(omega)}});
          }
        }
      }
    }
  }
  return Verdict::no({{"note", "not synchronizing; counterexample exceeds the reporting bound"}});
}

bool confirms_not_synchronizing(const LabelledGraph& g, const Word& w, const Word& nu,
                                const Word& omega) {
  Word nuw = nu, womega = w, nuwomega = nu;
  nuw.insert(nuw.end(), w.begin(), w.end());
  womega.insert(womega.end(), omega.begin(), omega.end());
  nuwomega.insert(nuwomega.end(), w.begin(), w.end());
  nuwomega.insert(nuwomega.end(), omega.begin(), omega.end());
  return word_in_language(g, nuw) && word_in_language(g, womega) && !word_in_language(g, nuwomega);
}

namespace {

std::map<std::tuple<std::size_t, std::size_t, std::string>, std::size_t> edge_multiset(
    const LabelledGraph& g) {
  std::map<std::tuple<std::size_t, std::size_t, std::string>, std::size_t> out;
  for (const auto& e : g.edges) ++out[{e.from, e.to, e.label}];
  return out;
}

bool extend_graph_iso(const LabelledGraph& a, const LabelledGraph& b,
                      const std::map<std::tuple<std::size_t, std::size_t, std::string>,
                                     std::size_t>& ea,
                      const std::map<std::tuple<std::size_t, std::size_t, std::string>,
                                     std::size_t>& eb,
                      std::vector<long>& perm, std::vector<char>& used, std::size_t v) {
  if (v == a.vertices) return true;
  for (std::size_t w = 0; w < b.vertices; ++w) {
    if (used[w]) continue;
    perm[v] = static_cast<long>(w);
    bool ok = true;
    for (std::size_t u = 0; u <= v && ok; ++u) {
      if (perm[u] < 0) continue;
      for (const auto& sym : a.alphabet) {
        auto cnt = [&](const auto& em, std::size_t x, std::size_t y) {
          auto it = em.find({x, y, sym});
          return it == em.end() ? std::size_t(0) : it->second;
        };
        if (cnt(ea, v, u) != cnt(eb, w, static_cast<std::size_t>(perm[u])) ||
            cnt(ea, u, v) != cnt(eb, static_cast<std::size_t>(perm[u]), w)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    used[w] = 1;
    if (extend_graph_iso(a, b, ea, eb, perm, used, v + 1)) return true;
    used[w] = 0;
    perm[v] = -1;
  }
  return false;
}

}  // namespace

bool labelled_graph_isomorphic(const LabelledGraph& a, const LabelledGraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  std::set<std::string> sa(a.alphabet.begin(), a.alphabet.end());
  std::set<std::string> sb(b.alphabet.begin(), b.alphabet.end());
  // compare on used labels only
  auto ea = edge_multiset(a);
  auto eb = edge_multiset(b);
  std::map<std::string, std::size_t> ca, cb;
  for (const auto& e : a.edges) ++ca[e.label];
  for (const auto& e : b.edges) ++cb[e.label];
  if (ca != cb) return false;
  std::vector<long> perm(a.vertices, -1);
  std::vector<char> used(b.vertices, 0);
  return extend_graph_iso(a, b, ea, eb, perm, used, 0);
}

LabelledGraph preset_graph(const std::string& name) {
  if (name == "even-shift") {
    return LabelledGraph{2, {"0", "1"}, {{0, 0, "1"}, {0, 1, "0"}, {1, 0, "0"}}};
  }
  if (name == "odd-shift") {
    return LabelledGraph{2, {"0", "1"}, {{0, 1, "0"}, {0, 1, "1"}, {1, 0, "1"}}};
  }
  if (name == "golden-mean") {
    return LabelledGraph{2, {"e", "f", "g"}, {{0, 0, "e"}, {0, 1, "f"}, {1, 0, "g"}}};
  }
  if (name.rfind("full:", 0) == 0) {
    std::size_t n = std::stoul(name.substr(5));
    if (n == 0 || n > 10) throw DataError("full:N requires 1 <= N <= 10");
    LabelledGraph g;
    g.vertices = 1;
    for (std::size_t i = 0; i < n; ++i) {
      g.alphabet.push_back(std::to_string(i));
      g.edges.push_back({0, 0, std::to_string(i)});
    }
    return g;
  }
  throw DataError("unknown preset: " + name +
                  " (expected even-shift|odd-shift|full:N|golden-mean)");
}

LabelledGraph from_matrix_distinct_labels(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("SFT presentation requires a square matrix");
  if (!a.is_nonnegative()) throw DataError("SFT presentation requires a nonnegative matrix");
  LabelledGraph g;
  g.vertices = a.rows();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (mpz_class t = 0; t < a.at(i, j); ++t) {
        std::string label =
            "e" + std::to_string(i) + "_" + std::to_string(j) + "_" + t.get_str();
        g.alphabet.push_back(label);
        g.edges.push_back({i, j, label});
      }
  if (g.edges.empty()) throw DataError("matrix presents an empty graph");
  return g;
}

Word word_from_string(const LabelledGraph& g, const std::string& text) {
  // Single-character alphabets admit compact words; otherwise symbols are
  // separated by spaces or commas.
  bool all_single = std::all_of(g.alphabet.begin(), g.alphabet.end(),
                                [](const std::string& s) { return s.size() == 1; });
  Word w;
  if (text.find(' ') == std::string::npos && text.find(',') == std::string::npos && all_single) {
    for (char c : text) w.push_back(std::string(1, c));
    return w;
  }
  std::string tok;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ' ')) {
    std::istringstream in2(piece);
    while (std::getline(in2, tok, ','))
      if (!tok.empty()) w.push_back(tok);
  }
  return w;
}

std::string word_to_string(const Word& w) {
  bool all_single =
      std::all_of(w.begin(), w.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !all_single) out += ' ';
    out += w[i];
  }
  return out;
}

}  // namespace symdyn
