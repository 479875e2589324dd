// Exact minimum set cover over a vertex universe by branch and bound.

#ifndef COVERLAB_SET_COVER_HPP
#define COVERLAB_SET_COVER_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "coverlab/error.hpp"
#include "coverlab/vertex_set.hpp"

namespace coverlab {

struct SetCoverResult {
    std::vector<std::size_t> chosen;  // indices into the candidate list
    bool optimal = true;
};

struct SetCoverOptions {
    std::optional<std::size_t> upper_bound_seed;  // a cover of this size is known to exist
    Deadline deadline;
    std::size_t jobs = 1;
};

namespace detail {

class SetCoverSearch {
  public:
    SetCoverSearch(const VertexSet& universe, const std::vector<VertexSet>& sets, const Deadline& deadline)
        : universe_(universe), deadline_(deadline) {
        sets_.reserve(sets.size());
        for (const auto& s : sets) sets_.push_back(s & universe);
    }

    bool coverable() const {
        VertexSet all;
        for (const auto& s : sets_) all |= s;
        return universe_.is_subset_of(all);
    }

    std::vector<std::size_t> greedy() const {
        std::vector<std::size_t> pick;
        VertexSet left = universe_;
        while (!left.empty()) {
            std::size_t best = 0, gain = 0;
            for (std::size_t i = 0; i < sets_.size(); ++i) {
                auto c = sets_[i].intersection_size(left);
                if (c > gain) gain = c, best = i;
            }
            pick.push_back(best);
            left -= sets_[best];
        }
        return pick;
    }

    // max(fractional bound sum_v 1/maxcov(v), ceil(|U| / max coverage)).
    std::size_t lower_bound(const VertexSet& left) const {
        if (left.empty()) return 0;
        std::vector<std::size_t> maxcov(kMaxVertices, 0);
        std::size_t global = 0;
        for (const auto& s : sets_) {
            VertexSet hit = s & left;
            const std::size_t c = hit.size();
            if (c == 0) continue;
            global = std::max(global, c);
            hit.for_each([&](Vertex v) { maxcov[v] = std::max(maxcov[v], c); });
        }
        double frac = 0;
        left.for_each([&](Vertex v) { frac += 1.0 / static_cast<double>(maxcov[v]); });
        const auto f = static_cast<std::size_t>(std::ceil(frac - 1e-9));
        return std::max(f, (left.size() + global - 1) / global);
    }

    // Candidates covering the pivot, dominated ones dropped, larger new coverage first.
    std::vector<std::size_t> branches(const VertexSet& left) const {
        const Vertex pivot = left.first();
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < sets_.size(); ++i)
            if (sets_[i].contains(pivot)) cand.push_back(i);
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            return sets_[a].intersection_size(left) > sets_[b].intersection_size(left);
        });
        std::vector<std::size_t> kept;
        std::vector<VertexSet> kept_cov;
        for (std::size_t i : cand) {
            VertexSet cov = sets_[i] & left;
            bool dominated = false;
            for (const auto& k : kept_cov)
                if (cov.is_subset_of(k)) {
                    dominated = true;
                    break;
                }
            if (!dominated) {
                kept.push_back(i);
                kept_cov.push_back(cov);
            }
        }
        return kept;
    }

    void run(const VertexSet& left, std::vector<std::size_t>& chosen, std::size_t& best,
             std::vector<std::size_t>& best_pick, const std::atomic<std::size_t>* shared = nullptr) {
        if ((++nodes_ & 1023) == 0 && deadline_.expired()) throw TimedOut{};
        if (shared) best = std::min(best, shared->load(std::memory_order_relaxed));
        if (left.empty()) {
            if (chosen.size() < best) {
                best = chosen.size();
                best_pick = chosen;
                on_improve(best);
            }
            return;
        }
        if (chosen.size() + lower_bound(left) >= best) return;
        for (std::size_t i : branches(left)) {
            chosen.push_back(i);
            run(left - sets_[i], chosen, best, best_pick, shared);
            chosen.pop_back();
            if (shared) best = std::min(best, shared->load(std::memory_order_relaxed));
            if (chosen.size() + 1 >= best) return;
        }
    }

    struct TimedOut {};

    std::function<void(std::size_t)> on_improve = [](std::size_t) {};
    const std::vector<VertexSet>& sets() const { return sets_; }
    const VertexSet& universe() const { return universe_; }

  private:
    VertexSet universe_;
    std::vector<VertexSet> sets_;
    Deadline deadline_;
    std::size_t nodes_ = 0;
};

}  // namespace detail

/// Minimum number of `sets` whose union contains `universe`. Throws BadInput if
/// no cover exists. On deadline expiry the best cover found so far is returned
/// with `optimal = false`.
inline SetCoverResult exact_set_cover(const VertexSet& universe, const std::vector<VertexSet>& sets,
                                      const SetCoverOptions& opt = {}) {
    detail::SetCoverSearch search(universe, sets, opt.deadline);
    if (!search.coverable()) throw Error(ErrorKind::BadInput, "candidate sets do not cover the universe");
    if (universe.empty()) return {};

    // With a seed, the search is canonical: it returns the first cover of the
    // seeded size in branching order, independent of any heuristic incumbent.
    const auto greedy = search.greedy();
    std::size_t best = opt.upper_bound_seed ? *opt.upper_bound_seed + 1 : greedy.size();
    std::vector<std::size_t> pick = opt.upper_bound_seed ? std::vector<std::size_t>{} : greedy;

    if (opt.jobs > 1 && !opt.upper_bound_seed) {
        // Split the top-level branches across workers; the value is then
        // re-derived single-threaded so the certificate does not depend on timing.
        std::atomic<std::size_t> shared{best};
        std::atomic<std::size_t> next{0};
        std::atomic<bool> timed_out{false};
        const auto top = search.branches(universe);
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(opt.jobs, top.size()); ++t) {
            pool.emplace_back([&] {
                detail::SetCoverSearch local(universe, sets, opt.deadline);
                local.on_improve = [&](std::size_t v) {
                    auto cur = shared.load();
                    while (v < cur && !shared.compare_exchange_weak(cur, v)) {
                    }
                };
                try {
                    for (std::size_t k; (k = next.fetch_add(1)) < top.size();) {
                        std::vector<std::size_t> chosen{top[k]};
                        std::size_t b = shared.load();
                        std::vector<std::size_t> bp;
                        local.run(universe - local.sets()[top[k]], chosen, b, bp, &shared);
                    }
                } catch (const detail::SetCoverSearch::TimedOut&) {
                    timed_out = true;
                }
            });
        }
        for (auto& th : pool) th.join();
        if (!timed_out && shared.load() < greedy.size()) {
            SetCoverOptions again = opt;
            again.jobs = 1;
            again.upper_bound_seed = shared.load();
            return exact_set_cover(universe, sets, again);
        }
        return {greedy, !timed_out};
    }

    std::vector<std::size_t> chosen;
    try {
        search.run(universe, chosen, best, pick);
    } catch (const detail::SetCoverSearch::TimedOut&) {
        if (pick.empty()) pick = greedy;
        return {pick, false};
    }
    if (pick.empty()) {
        // The seed was below the optimum; fall back to an unseeded search.
        SetCoverOptions again = opt;
        again.upper_bound_seed.reset();
        return exact_set_cover(universe, sets, again);
    }
    return {pick, true};
}

}  // namespace coverlab

#endif  // COVERLAB_SET_COVER_HPP
