#include "hyperell/engine.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hyperell/path_query.hpp"
#include "hyperell/treewidth.hpp"

namespace hyperell {

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::ReducedToEmpty: return "reduced-to-empty";
    case Reason::TwoTrees: return "two-trees";
    case Reason::Stuck: return "stuck";
    case Reason::TreewidthReject: return "treewidth-reject";
    case Reason::ConflictingConstraints: return "conflicting-constraints";
    case Reason::DegreeMismatch: return "degree-mismatch";
    case Reason::Disconnected: return "disconnected";
  }
  return "?";
}

std::size_t rule_application_budget(std::size_t n, Flavor f) {
  if (f == Flavor::Dgon) return 3 * n;
  return n + 2 * (4 * n) + n;
}

std::size_t potential(const Multigraph& g) { return g.num_vertices() + 2 * g.num_edges() + g.num_constraints(); }

bool stable_guard(const Multigraph& g) {
  for (VertexId v : g.vertices()) {
    const std::size_t d = g.degree(v);
    if ((d == 1 || d == 2) && g.constraint_count(v) == 0) return false;
  }
  return true;
}

bool is_tree_for(const Multigraph& g, Flavor f) {
  if (f != Flavor::Dgon) return g.is_tree();
  if (g.empty() || !g.is_connected()) return false;
  std::size_t loops = 0;
  for (VertexId v : g.vertices()) loops += g.loop_count(v);
  return g.num_edges() - loops + 1 == g.num_vertices();
}

namespace {

class Engine {
 public:
  Engine(Multigraph& g, Flavor f, const EngineOptions& opt) : g_(g), f_(f), opt_(opt), ctx_{g, paths_} {
    const auto def = default_priority(f);
    if (opt.priority.empty()) {
      priority_.assign(def.begin(), def.end());
    } else {
      priority_ = opt.priority;
      auto a = priority_;
      std::vector<RuleKind> b(def.begin(), def.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) throw std::invalid_argument("priority must permute the flavor's rule kinds");
    }
    if (opt.shuffle_seed) {
      std::mt19937_64 rng(*opt.shuffle_seed);
      std::shuffle(priority_.begin(), priority_.end(), rng);
    }
  }

  Verdict run() {
    Verdict out;
    out.flavor = f_;
    out.is_tree = is_tree_for(g_, f_);
    if (g_.empty()) return finish(out, true, Reason::ReducedToEmpty);
    if (!g_.is_connected(true)) {
      bool two_trees = false;
      if (g_.num_constraints() == 0) {
        const auto comps = g_.components();
        two_trees = comps.size() == 2 && std::all_of(comps.begin(), comps.end(), [&](const auto& c) {
                      return component_is_tree(c);
                    });
      }
      return finish(out, two_trees, two_trees ? Reason::TwoTrees : Reason::Disconnected);
    }

    preprocess(out);
    out.vertices_after_preprocess = g_.num_vertices();
    out.budget = rule_application_budget(out.vertices_after_preprocess, f_);
    if (opt_.treewidth_precheck && !tw_at_most_2(g_)) return finish(out, false, Reason::TreewidthReject);

    const std::optional<Reason> r = main_loop(out);
    if (opt_.treewidth_precheck && out.main_steps > out.budget) {
      throw std::logic_error("rule application budget exceeded");
    }
    if (r) return finish(out, false, *r);
    return finish(out, true, Reason::ReducedToEmpty);
  }

 private:
  static Verdict& finish(Verdict& v, bool yes, Reason r) {
    v.yes = yes;
    v.reason = r;
    return v;
  }

  bool component_is_tree(const std::vector<VertexId>& comp) const {
    std::size_t halves = 0;
    std::size_t loop_halves = 0;
    for (VertexId v : comp) {
      halves += g_.degree(v);
      loop_halves += 2 * g_.loop_count(v);
    }
    if (f_ != Flavor::Dgon && loop_halves != 0) return false;
    return (halves - loop_halves) / 2 + 1 == comp.size();
  }

  void record(Verdict& out, ReductionStep&& s) {
    if (opt_.keep_trace) out.trace.push_back(std::move(s));
  }

  void preprocess(Verdict& out) {
    for (RuleKind k : preprocess_rules(f_)) {
      for (VertexId v : g_.vertices()) {
        while (g_.is_live(v)) {
          auto s = try_rule(ctx_, f_, v, k);
          if (!s) break;
          ++out.preprocess_steps;
          record(out, std::move(*s));
        }
      }
    }
  }

  // -- incremental bookkeeping ---------------------------------------------

  void ensure_size() {
    const std::size_t n = g_.vertex_id_bound();
    if (in_queue_.size() >= n) return;
    in_queue_.resize(n, 0);
    stamp_.resize(n, 0);
    settled_at_.resize(n, UINT32_MAX);
    conflict_.resize(n, 0);
    violator_.resize(n, 0);
    mismatch_.resize(n, 0);
    pending_flag_.resize(n, 0);
    expensive_flag_.resize(n, 0);
  }

  static void set_flag(std::vector<char>& flags, std::size_t& count, std::size_t i, bool on) {
    if (static_cast<bool>(flags[i]) == on) return;
    flags[i] = on ? 1 : 0;
    if (on) {
      ++count;
    } else {
      --count;
    }
  }

  void refresh(VertexId v) {
    const std::size_t i = v.index();
    if (!g_.is_live(v)) {
      set_flag(conflict_, conflicts_, i, false);
      set_flag(violator_, violators_, i, false);
      set_flag(mismatch_, mismatches_, i, false);
      return;
    }
    const std::size_t cc = g_.constraint_count(v);
    set_flag(conflict_, conflicts_, i, cc > 1);
    if (f_ == Flavor::Dgon) return;
    const std::size_t d = g_.degree(v);
    set_flag(violator_, violators_, i, (d == 1 || d == 2) && cc == 0);
    bool mismatch = false;
    if (d == 1 && cc != 0) {
      for (VertexId w : g_.constraint_partners(v)) mismatch = mismatch || (w != v && g_.degree(w) != 1);
    }
    set_flag(mismatch_, mismatches_, i, mismatch);
  }

  void refresh_with_partners(VertexId v) {
    refresh(v);
    if (f_ == Flavor::Dgon || !g_.is_live(v) || g_.constraint_count(v) == 0) return;
    for (VertexId w : g_.constraint_partners(v)) {
      if (w != v) refresh(w);
    }
  }

  void enqueue(VertexId v) {
    if (!g_.is_live(v) || in_queue_[v.index()]) return;
    in_queue_[v.index()] = 1;
    (g_.degree(v) <= 2 ? low_ : high_).push_back(v);
  }

  std::optional<VertexId> pop() {
    for (auto* q : {&low_, &high_}) {
      if (!q->empty()) {
        const VertexId v = q->back();
        q->pop_back();
        in_queue_[v.index()] = 0;
        return v;
      }
    }
    return std::nullopt;
  }

  // Vertices whose rules wanted a path query; tried once the cheap queues drain.
  std::optional<VertexId> pop_expensive() {
    while (!expensive_.empty()) {
      const VertexId v = expensive_.back();
      expensive_.pop_back();
      expensive_flag_[v.index()] = 0;
      if (g_.is_live(v)) return v;
    }
    return std::nullopt;
  }

  void enqueue_all() {
    const auto vs = g_.vertices();
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) enqueue(*it);
  }

  bool guard() const { return violators_ == 0; }

  void absorb(const ReductionStep& s) {
    ensure_size();
    for (VertexId v : s.removed_vertices) refresh(v);
    for (VertexId v : g_.take_touched()) {
      ++stamp_[v.index()];
      refresh_with_partners(v);
      enqueue(v);
    }
    if (f_ != Flavor::Dgon && guard() && !pending_.empty()) {
      for (VertexId v : pending_) {
        pending_flag_[v.index()] = 0;
        enqueue(v);
      }
      pending_.clear();
    }
  }

  std::optional<Reason> eager_check() const {
    // Rules assume at most one constraint per vertex, so this one is not optional.
    if (conflicts_ > 0) return Reason::ConflictingConstraints;
    if (opt_.eager_no && f_ != Flavor::Dgon && guard() && mismatches_ > 0) return Reason::DegreeMismatch;
    return std::nullopt;
  }

  std::optional<Reason> main_loop(Verdict& out) {
    g_.set_touch_tracking(true);
    g_.take_touched();
    ensure_size();
    for (VertexId v : g_.vertices()) refresh(v);
    enqueue_all();
    bool rescanning = false;

    for (;;) {
      if (auto r = eager_check()) return r;
      if (g_.empty()) return std::nullopt;
      if (g_.num_vertices() <= 2) {
        std::optional<ReductionStep> s;
        for (RuleKind k : end_rules(f_)) {
          s = try_end(ctx_, f_, k);
          if (s) break;
        }
        if (s) {
          ++out.main_steps;
          absorb(*s);
          record(out, std::move(*s));
          continue;
        }
      }
      auto next = pop();
      bool expensive = rescanning;
      if (!next && !rescanning) {
        next = pop_expensive();
        expensive = true;
      }
      if (!next) {
        if (rescanning) return Reason::Stuck;
        rescanning = true;
        enqueue_all();
        continue;
      }
      const VertexId v = *next;
      if (!g_.is_live(v)) continue;
      if (!expensive && settled_at_[v.index()] == stamp_[v.index()]) continue;

      ctx_.guard = f_ == Flavor::Dgon || guard();
      ctx_.allow_expensive = expensive;
      ctx_.deferred = false;
      ctx_.settled.clear();
      ctx_.guard_blocked.clear();
      std::optional<ReductionStep> s;
      for (RuleKind k : priority_) {
        s = try_rule(ctx_, f_, v, k);
        if (s) break;
      }
      if (s) {
        if (rescanning) {
          ++out.late_finds;
          rescanning = false;
        }
        ++out.main_steps;
        absorb(*s);
        record(out, std::move(*s));
        continue;
      }
      if (ctx_.deferred) {
        if (!expensive_flag_[v.index()]) {
          expensive_flag_[v.index()] = 1;
          expensive_.push_back(v);
        }
        continue;
      }
      for (VertexId w : ctx_.settled) settled_at_[w.index()] = stamp_[w.index()];
      for (VertexId w : ctx_.guard_blocked) {
        if (!pending_flag_[w.index()]) {
          pending_flag_[w.index()] = 1;
          pending_.push_back(w);
        }
      }
    }
  }

  Multigraph& g_;
  Flavor f_;
  EngineOptions opt_;
  PathQuery paths_;
  RuleContext ctx_;
  std::vector<RuleKind> priority_;

  std::vector<VertexId> low_;
  std::vector<VertexId> high_;
  std::vector<char> in_queue_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> settled_at_;
  std::vector<char> conflict_;
  std::vector<char> violator_;
  std::vector<char> mismatch_;
  std::vector<char> pending_flag_;
  std::vector<VertexId> pending_;
  std::vector<VertexId> expensive_;
  std::vector<char> expensive_flag_;
  std::size_t conflicts_ = 0;
  std::size_t violators_ = 0;
  std::size_t mismatches_ = 0;
};

}  // namespace

Verdict run(Multigraph g, Flavor f, const EngineOptions& options) {
  Engine e(g, f, options);
  return e.run();
}

std::optional<ReductionStep> step(Multigraph& g, Flavor f) {
  PathQuery paths;
  RuleContext ctx{g, paths};
  ctx.guard = f == Flavor::Dgon || stable_guard(g);
  if (g.num_vertices() <= 2) {
    for (RuleKind k : end_rules(f)) {
      if (auto s = try_end(ctx, f, k)) return s;
    }
  }
  const auto vs = g.vertices();
  for (RuleKind k : default_priority(f)) {
    for (VertexId v : vs) {
      if (auto s = try_rule(ctx, f, v, k)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace hyperell
