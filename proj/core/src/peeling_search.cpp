#include "filebasis/peeling_search.hpp"

#include <queue>
#include <tuple>

#include "filebasis/errors.hpp"

namespace filebasis {

  PowerWord evaluate(ConjugateProduct const& product) {
    PowerWord out;
    for (Conjugate const& c : product) {
      out *= c.conjugator;
      out *= c.relator;
      out *= c.conjugator.inverse();
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // FaceLibrary
  ////////////////////////////////////////////////////////////////////////

  FaceLibrary::FaceLibrary(std::span<PowerWord const> relators) {
    for (PowerWord const& r : relators) {
      if (r.empty()) {
        throw PreconditionViolation("empty face label");
      }
      forward_.push_back(r.letters());
      backward_.push_back(filebasis::inverse(forward_.back()));
    }
    for (std::uint32_t k = 0; k < forward_.size(); ++k) {
      for (int sign : {1, -1}) {
        Letters const& w = word(k, sign);
        for (std::uint32_t t = 0; t < w.size(); ++t) {
          slots_[w[t]].push_back({k, sign, t});
        }
        Letters const key = rotate_left(w, least_rotation(w));
        canonical_.emplace(key, k);
      }
    }
  }

  std::span<FaceSlot const> FaceLibrary::slots_for(Letter a) const {
    auto it = slots_.find(a);
    if (it == slots_.end()) {
      return {};
    }
    return it->second;
  }

  Letters FaceLibrary::rotated(FaceSlot slot) const {
    return rotate_left(word(slot.relator, slot.sign), slot.offset);
  }

  bool FaceLibrary::is_face_label(std::span<Letter const> w) const {
    Letters const key = rotate_left(w, least_rotation(w));
    return canonical_.contains(key);
  }

  Letters canonical_cyclic(std::span<Letter const> w) {
    Letters x  = free_reduce(w);
    std::size_t lo = 0, hi = x.size();
    while (hi - lo >= 2 && x[lo] == -x[hi - 1]) {
      ++lo;
      --hi;
    }
    std::span<Letter const> core(x.data() + lo, hi - lo);
    return rotate_left(core, least_rotation(core));
  }

  namespace {
    // Cyclic reduction plus rotation with the conjugator recorded:
    // before == A' * after * A'^-1 where A' is appended to A.
    void canonicalize_tracked(Letters& x, Letters& conj) {
      x = free_reduce(x);
      std::size_t lo = 0, hi = x.size();
      while (hi - lo >= 2 && x[lo] == -x[hi - 1]) {
        ++lo;
        --hi;
      }
      conj.insert(conj.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(lo));
      Letters core(x.begin() + static_cast<std::ptrdiff_t>(lo),
                   x.begin() + static_cast<std::ptrdiff_t>(hi));
      std::size_t const k = least_rotation(core);
      conj.insert(conj.end(), core.begin(), core.begin() + static_cast<std::ptrdiff_t>(k));
      conj = free_reduce(conj);
      x    = rotate_left(core, k);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PeelingSearch
  ////////////////////////////////////////////////////////////////////////

  PeelingSearch::PeelingSearch(FaceLibrary const& faces,
                               Budget const&      budget,
                               std::int64_t       perimeter_budget,
                               bool               toward_empty)
      : faces_(&faces),
        budget_(budget),
        perimeter_budget_(perimeter_budget),
        toward_empty_(toward_empty) {}

  std::int64_t PeelingSearch::find(Letters const& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
  }

  SearchStatus PeelingSearch::run(std::span<Letter const>                       start,
                                  std::function<bool(std::int64_t)> const& is_goal) {
    nodes_.clear();
    index_.clear();
    goal_      = -1;
    truncated_ = false;

    using Entry = std::tuple<std::int64_t, std::int64_t>;  // priority, id
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    auto priority = [&](std::int64_t cost, Letters const& w) {
      return toward_empty_ ? cost + static_cast<std::int64_t>(w.size()) : cost;
    };

    Letters root = canonical_cyclic(start);
    if (static_cast<std::int64_t>(root.size()) > budget_.max_word_len) {
      truncated_ = true;
      return SearchStatus::truncated;
    }
    if (priority(0, root) > perimeter_budget_) {
      return SearchStatus::exhausted;
    }
    std::int64_t const root_priority = priority(0, root);
    nodes_.push_back({root, 0, -1, {}});
    index_.emplace(std::move(root), 0);
    queue.emplace(root_priority, 0);

    while (!queue.empty()) {
      auto const [key, id] = queue.top();
      queue.pop();
      Node const& settled = nodes_[static_cast<std::size_t>(id)];
      if (key != priority(settled.cost, settled.word)) {
        continue;  // stale
      }
      std::int64_t const cost = settled.cost;
      if (is_goal && is_goal(id)) {
        goal_ = id;
        return SearchStatus::found;
      }
      Letters const word = nodes_[static_cast<std::size_t>(id)].word;
      for (std::uint32_t j = 0; j < word.size(); ++j) {
        for (FaceSlot const& slot : faces_->slots_for(-word[j])) {
          std::int64_t const next_cost = cost + faces_->perimeter(slot.relator);
          if (next_cost > perimeter_budget_) {
            continue;
          }
          Letters const& label = faces_->word(slot.relator, slot.sign);
          Letters        next;
          next.reserve(word.size() + label.size());
          next.insert(next.end(), word.begin(), word.begin() + j);
          for (std::size_t t = 1; t < label.size(); ++t) {
            next.push_back(label[(slot.offset + t) % label.size()]);
          }
          next.insert(next.end(), word.begin() + j + 1, word.end());
          next = canonical_cyclic(next);
          if (priority(next_cost, next) > perimeter_budget_) {
            continue;
          }
          if (static_cast<std::int64_t>(next.size()) > budget_.max_word_len) {
            truncated_ = true;
            continue;
          }
          auto it = index_.find(next);
          if (it != index_.end()) {
            Node& known = nodes_[static_cast<std::size_t>(it->second)];
            if (known.cost <= next_cost) {
              continue;
            }
            known.cost   = next_cost;
            known.parent = id;
            known.step   = {j, slot};
            queue.emplace(priority(next_cost, next), it->second);
            continue;
          }
          if (static_cast<std::int64_t>(nodes_.size()) >= budget_.max_states) {
            truncated_ = true;
            return SearchStatus::truncated;
          }
          auto const new_id = static_cast<std::int64_t>(nodes_.size());
          std::int64_t const next_key = priority(next_cost, next);
          nodes_.push_back({next, next_cost, id, {j, slot}});
          index_.emplace(std::move(next), new_id);
          queue.emplace(next_key, new_id);
        }
      }
    }
    return truncated_ ? SearchStatus::truncated : SearchStatus::exhausted;
  }

  std::vector<PeelStep> PeelingSearch::path_to(std::int64_t id) const {
    std::vector<PeelStep> steps;
    while (id > 0) {
      Node const& nd = nodes_[static_cast<std::size_t>(id)];
      steps.push_back(nd.step);
      id = nd.parent;
    }
    return {steps.rbegin(), steps.rend()};
  }

  PeelReplay replay_peeling(FaceLibrary const&        faces,
                            std::span<Letter const>   start,
                            std::span<PeelStep const> steps) {
    PeelReplay out;
    out.current.assign(start.begin(), start.end());
    canonicalize_tracked(out.current, out.conjugator);
    for (PeelStep const& step : steps) {
      Letters& x = out.current;
      if (step.position >= x.size() || faces.word(step.slot.relator, step.slot.sign)[step.slot.offset] != -x[step.position]) {
        throw PreconditionViolation("peeling step does not apply");
      }
      Letters const rho = faces.rotated(step.slot);
      // x = p c s -> p R s with c^-1 R = rho, which equals K x for
      // K = g rho g^-1, g = p c.
      Letters g(x.begin(), x.begin() + step.position + 1);
      Letters ag = free_reduce(concat(out.conjugator, g));
      out.product.push_back({PowerWord::from_letters(ag),
                             PowerWord::from_letters(inverse(rho))});
      Letters next(x.begin(), x.begin() + step.position);
      next.insert(next.end(), rho.begin() + 1, rho.end());
      next.insert(next.end(), x.begin() + step.position + 1, x.end());
      x = std::move(next);
      canonicalize_tracked(x, out.conjugator);
    }
    return out;
  }

}  // namespace filebasis
