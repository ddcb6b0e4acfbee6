#include "halin/wirt.hpp"

#include <algorithm>
#include <set>

namespace halin {

void AdversaryScript::validate() const {
  std::map<std::pair<std::uint64_t, std::uint64_t>, const ScriptValue*> by_cell;
  std::set<std::uint64_t> traced;
  for (const auto& t : traces) {
    require(t.j < t.k, ErrorCode::ScriptViolation, "trace of a path index >= its family size");
    require(traced.insert(t.i).second, ErrorCode::ScriptViolation, "column traced twice");
  }
  for (const auto& v : values) {
    require(!traced.count(v.i), ErrorCode::ScriptViolation,
            "column " + std::to_string(v.i) + " is both traced and scripted");
    auto [it, fresh] = by_cell.emplace(std::pair{v.i, v.n}, &v);
    require(fresh || it->second->vertex == v.vertex, ErrorCode::ScriptViolation,
            "value (" + std::to_string(v.i) + "," + std::to_string(v.n) + ") changes after converging");
    if (!fresh && v.stage < it->second->stage) it->second = &v;
  }
  for (const auto& [cell, v] : by_cell) {
    if (cell.second == 0) continue;
    auto prev = by_cell.find({cell.first, cell.second - 1});
    require(prev != by_cell.end() && prev->second->stage <= v->stage, ErrorCode::ScriptViolation,
            "value (" + std::to_string(cell.first) + "," + std::to_string(cell.second) +
                ") converges before its predecessor");
  }
}

const WirtPath& WirtRun::path(std::size_t k, std::size_t i) const {
  auto it = index.find({k, i});
  require(it != index.end(), ErrorCode::PreconditionViolated,
          "no path P^" + std::to_string(k) + "_" + std::to_string(i));
  return paths[it->second];
}

std::vector<std::pair<std::uint32_t, std::int32_t>> WirtRun::owners(std::uint32_t v) const {
  std::vector<std::pair<std::uint32_t, std::int32_t>> out;
  if (v >= owner.size()) return out;
  out.emplace_back(owner[v], coord[v]);
  auto it = extra.find(v);
  if (it != extra.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  return out;
}

std::vector<std::uint32_t> WirtRun::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  for (auto [pid, n] : owners(v)) {
    const WirtPath& p = paths[pid];
    for (std::int64_t m : {static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n) + 1})
      if (p.covers(m)) out.push_back(p.at(m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool WirtRun::is_endpoint(std::uint32_t v) const {
  for (auto [pid, n] : owners(v)) {
    const WirtPath& p = paths[pid];
    if (n == p.lo || n == p.hi()) return true;
  }
  return false;
}

std::size_t WirtRun::edge_count() const {
  std::size_t deg = 0;
  for (std::uint32_t v = 0; v < next_vertex; ++v) deg += neighbors(v).size();
  return deg / 2;
}

bool WirtRun::dc_holds() const {
  for (const auto& [v, more] : extra) {
    std::set<std::size_t> fam{paths[owner[v]].k};
    for (auto [pid, n] : more)
      if (!fam.insert(paths[pid].k).second) return false;
  }
  return true;
}

std::vector<std::string> WirtRun::obs_violations() const {
  std::vector<std::string> out;
  for (std::uint32_t v = 0; v < next_vertex; ++v) {
    const auto nb = neighbors(v);
    auto mp = merge_point.find(v);
    if (mp != merge_point.end()) {
      const MergeRecord& m = merges[mp->second];
      std::vector<std::uint32_t> want{m.x, m.y, m.z};
      std::sort(want.begin(), want.end());
      if (nb != want) out.push_back("merge point " + std::to_string(v) + " has neighbours other than x, y, z");
      if (is_endpoint(v)) out.push_back("merge point " + std::to_string(v) + " is an endpoint");
      continue;
    }
    if (is_endpoint(v)) {
      if (nb.size() != 1) out.push_back("endpoint " + std::to_string(v) + " has " + std::to_string(nb.size()) +
                                        " neighbours");
      continue;
    }
    if (nb.size() != 2)
      out.push_back("vertex " + std::to_string(v) + " has " + std::to_string(nb.size()) + " neighbours");
  }
  return out;
}

bool WirtRun::share_edge(std::pair<std::size_t, std::size_t> p, std::pair<std::size_t, std::size_t> q) const {
  const WirtPath& a = path(p.first, p.second);
  const WirtPath& b = path(q.first, q.second);
  std::set<std::pair<std::uint32_t, std::uint32_t>> ea;
  for (std::size_t t = 0; t + 1 < a.v.size(); ++t)
    ea.insert(std::minmax(a.v[t], a.v[t + 1]));
  for (std::size_t t = 0; t + 1 < b.v.size(); ++t)
    if (ea.count(std::minmax(b.v[t], b.v[t + 1]))) return true;
  return false;
}

namespace {

class Builder {
 public:
  Builder(const std::vector<AdversaryScript>& adv, WirtRun& run) : adv_(adv), run_(run) {
    std::set<std::size_t> es;
    for (const auto& a : adv_) {
      a.validate();
      require(es.insert(a.e).second, ErrorCode::BadConfig, "duplicate requirement index " + std::to_string(a.e));
    }
    std::sort(adv_.begin(), adv_.end(), [](const auto& x, const auto& y) { return x.e < y.e; });
    for (const auto& a : adv_) run_.requirements.push_back({a.e, false, 0, 0});
    last_values_.resize(adv_.size());
  }

  void stage(std::size_t s) {
    WirtStageLog lg;
    lg.stage = s;
    for (std::size_t q = 0; q < adv_.size(); ++q) {
      if (adv_[q].e >= s) break;
      auto cols = phi(q, s);
      if (run_.requirements[q].satisfied) continue;
      if (try_act(q, s, cols)) {
        lg.acted = adv_[q].e;
        break;
      }
    }
    grow(s);
    lg.vertices = run_.next_vertex;
    lg.endpoints = endpoints().size();
    lg.dc = run_.dc_holds();
    require(lg.dc, ErrorCode::InstanceContract, "disjointness condition violated at stage " + std::to_string(s));
    run_.log.push_back(lg);
  }

 private:
  using Column = std::vector<std::uint32_t>;

  std::uint32_t fresh() {
    const std::uint32_t v = run_.next_vertex++;
    run_.owner.push_back(UINT32_MAX);
    run_.coord.push_back(0);
    return v;
  }

  void own(std::uint32_t v, std::uint32_t pid, std::int64_t n) {
    if (run_.owner[v] == UINT32_MAX) {
      run_.owner[v] = pid;
      run_.coord[v] = static_cast<std::int32_t>(n);
    } else {
      run_.extra[v].emplace_back(pid, static_cast<std::int32_t>(n));
    }
  }

  void extend(std::uint32_t pid, int side, std::uint32_t v) {
    WirtPath& p = run_.paths[pid];
    if (side > 0) {
      p.v.push_back(v);
      own(v, pid, p.hi());
    } else {
      p.v.push_front(v);
      --p.lo;
      own(v, pid, p.lo);
    }
  }

  // Endpoint -> (path, side), ascending by vertex.
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, int>>> endpoints() const {
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, int>>> out;
    for (std::uint32_t pid = 0; pid < run_.paths.size(); ++pid) {
      const WirtPath& p = run_.paths[pid];
      out[p.v.front()].emplace_back(pid, -1);
      out[p.v.back()].emplace_back(pid, +1);
    }
    return out;
  }

  // Converged columns of Phi_{e,s}, checked against earlier stages.
  std::map<std::uint64_t, Column> phi(std::size_t q, std::size_t s) {
    const AdversaryScript& a = adv_[q];
    std::map<std::uint64_t, Column> cols;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> cells;
    for (const auto& v : a.values)
      if (v.stage <= s) cells[{v.i, v.n}] = v.vertex;
    for (const auto& [cell, vertex] : cells) {
      Column& c = cols[cell.first];
      require(c.size() == cell.second, ErrorCode::ScriptViolation, "column gap in script");
      c.push_back(static_cast<std::uint32_t>(vertex));
    }
    for (const auto& t : a.traces) {
      if (s < t.from_stage) continue;
      auto it = run_.index.find({t.k, t.j});
      if (it == run_.index.end()) continue;
      const WirtPath& p = run_.paths[it->second];
      Column& c = cols[t.i];
      for (std::int64_t n = 0; n <= p.hi() && static_cast<std::uint64_t>(n) <= t.max_n; ++n) c.push_back(p.at(n));
    }
    auto& last = last_values_[q];
    for (const auto& [i, c] : cols)
      for (std::size_t n = 0; n < c.size(); ++n) {
        auto [it, fresh] = last.emplace(std::pair{i, static_cast<std::uint64_t>(n)}, c[n]);
        require(fresh || it->second == c[n], ErrorCode::ScriptViolation,
                "Phi_" + std::to_string(a.e) + "(" + std::to_string(i) + "," + std::to_string(n) + ") changed");
      }
    for (const auto& [cell, v] : last)
      require(cols.count(cell.first) && cols[cell.first].size() > cell.second, ErrorCode::ScriptViolation,
              "Phi_" + std::to_string(a.e) + " value diverged after converging");
    return cols;
  }

  bool in_lower(std::uint32_t v, std::size_t f) const {
    for (auto [pid, n] : run_.owners(v))
      if (run_.paths[pid].k < f) return true;
    return false;
  }

  // Endpoint reached by the unique forward extension of column prefix 0..u, if admissible.
  std::optional<std::uint32_t> reach(const Column& c, std::size_t u, std::size_t f) const {
    std::set<std::uint32_t> seen;
    for (std::size_t n = 0; n <= u; ++n) {
      const std::uint32_t v = c[n];
      if (v >= run_.next_vertex || !seen.insert(v).second || in_lower(v, f)) return std::nullopt;
      if (n > 0) {
        auto nb = run_.neighbors(c[n - 1]);
        if (!std::binary_search(nb.begin(), nb.end(), v)) return std::nullopt;
      }
    }
    std::uint32_t prev = c[u - 1], cur = c[u];
    while (true) {
      auto nb = run_.neighbors(cur);
      nb.erase(std::remove(nb.begin(), nb.end(), prev), nb.end());
      if (nb.empty()) break;
      if (nb.size() > 1 || !seen.insert(nb[0]).second) return std::nullopt;
      prev = cur;
      cur = nb[0];
    }
    if (in_lower(cur, f)) return std::nullopt;
    for (auto [pid, n] : run_.owners(cur)) {
      const WirtPath& p = run_.paths[pid];
      if (p.k >= f && (n == p.lo || n == p.hi())) return cur;
    }
    return std::nullopt;
  }

  bool merge_ok(std::uint32_t x, std::uint32_t y) const {
    std::map<std::size_t, std::set<std::size_t>> fam_x, fam_y;
    for (std::uint32_t pid = 0; pid < run_.paths.size(); ++pid) {
      const WirtPath& p = run_.paths[pid];
      const bool ex = p.v.front() == x || p.v.back() == x;
      const bool ey = p.v.front() == y || p.v.back() == y;
      if (ex && ey) return false;
      if (ex) fam_x[p.k].insert(p.i);
      if (ey) fam_y[p.k].insert(p.i);
    }
    for (const auto& [k, is] : fam_x) {
      auto it = fam_y.find(k);
      if (it == fam_y.end()) continue;
      for (auto i : is)
        for (auto j : it->second)
          if (i != j) return false;
    }
    return true;
  }

  bool try_act(std::size_t q, std::size_t s, const std::map<std::uint64_t, Column>& cols) {
    const std::size_t f = run_.requirements[q].f;
    struct Cand {
      std::uint64_t a, u;
      std::uint32_t x;
    };
    std::vector<Cand> cands;
    for (const auto& [a, c] : cols) {
      if (a >= s) continue;
      for (std::size_t u = 1; u < c.size() && u < s; ++u)
        if (auto x = reach(c, u, f)) {
          cands.push_back({a, u, *x});
          break;
        }
    }
    for (const auto& A : cands)
      for (const auto& B : cands) {
        if (A.a == B.a || A.x == B.x || !merge_ok(A.x, B.x)) continue;
        merge(q, s, A.a, A.u, A.x, B.a, B.u, B.x);
        return true;
      }
    return false;
  }

  void merge(std::size_t q, std::size_t s, std::uint64_t a, std::uint64_t u, std::uint32_t x, std::uint64_t b,
             std::uint64_t v, std::uint32_t y) {
    MergeRecord m;
    m.stage = s;
    m.e = adv_[q].e;
    m.a = a;
    m.u = u;
    m.b = b;
    m.v = v;
    m.x = x;
    m.y = y;
    const auto ends = endpoints();
    m.r = fresh();
    for (std::uint32_t w : {x, y})
      for (auto [pid, side] : ends.at(w)) {
        (w == x ? m.at_x : m.at_y).emplace_back(run_.paths[pid].k, run_.paths[pid].i);
        extend(pid, side, m.r);
      }
    run_.merge_point[m.r] = run_.merges.size();
    run_.merges.push_back(m);
    run_.requirements[q].satisfied = true;
    run_.requirements[q].acted++;
    for (std::size_t p = q + 1; p < adv_.size(); ++p) {
      run_.requirements[p].satisfied = false;
      run_.requirements[p].f = s;
      run_.inits.push_back({s, adv_[p].e, adv_[q].e});
    }
    pending_z_ = m.r;
  }

  void grow(std::size_t s) {
    for (const auto& [w, list] : endpoints()) {
      const std::uint32_t z = fresh();
      for (auto [pid, side] : list) extend(pid, side, z);
      if (pending_z_ && *pending_z_ == w) run_.merges.back().z = z;
    }
    pending_z_.reset();
    for (std::size_t i = 0; i < s; ++i) {
      const auto pid = static_cast<std::uint32_t>(run_.paths.size());
      WirtPath p;
      p.k = s;
      p.i = i;
      p.lo = -static_cast<std::int64_t>(s);
      run_.paths.push_back(p);
      run_.index[{s, i}] = pid;
      for (std::int64_t n = -static_cast<std::int64_t>(s); n <= static_cast<std::int64_t>(s); ++n) {
        const std::uint32_t v = fresh();
        run_.paths[pid].v.push_back(v);
        own(v, pid, n);
      }
    }
  }

  std::vector<AdversaryScript> adv_;
  WirtRun& run_;
  std::vector<std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t>> last_values_;
  std::optional<std::uint32_t> pending_z_;
};

}  // namespace

WirtRun wirt_priority_build(const std::vector<AdversaryScript>& adversaries, std::size_t S) {
  WirtRun run;
  Builder b(adversaries, run);
  for (std::size_t s = 0; s < S; ++s) b.stage(s);
  run.stages = S;
  return run;
}

std::vector<AdversaryScript> wirt_demo_adversaries() {
  AdversaryScript q0;
  q0.e = 0;
  q0.traces = {{0, 1, 0, 5, 1000000}, {1, 2, 0, 5, 1000000}};
  AdversaryScript q1;
  q1.e = 1;
  q1.traces = {{0, 6, 1, 12, 1000000}, {1, 7, 3, 12, 1000000}};
  AdversaryScript q2;
  q2.e = 2;
  q2.traces = {{0, 20, 0, 40, 1000000}, {1, 25, 0, 40, 1000000}};
  return {q0, q1, q2};
}

}  // namespace halin
