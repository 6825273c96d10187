#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ellis::detail {

  // Strongly connected components of a digraph on {0, ..., n - 1}, computed
  // with an iterative Tarjan traversal. `successors(v)` must return a range of
  // vertex ids. The result maps each vertex to its component id; components
  // are numbered in reverse topological order (sinks first).
  template <typename Successors>
  std::vector<std::uint32_t> strongly_connected_components(std::size_t n,
                                                           Successors&& successors) {
    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
    std::vector<std::uint32_t> stack;
    std::vector<bool>          on_stack(n, false);
    std::uint32_t              counter = 0, ncomp = 0;

    struct Frame {
      std::uint32_t              v;
      std::vector<std::uint32_t> succ;
      std::size_t                next;
    };
    std::vector<Frame> call;

    for (std::uint32_t root = 0; root < n; ++root) {
      if (index[root] != kUnset) {
        continue;
      }
      auto push = [&](std::uint32_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        auto const& s = successors(v);
        call.push_back({v, std::vector<std::uint32_t>(s.begin(), s.end()), 0});
      };
      push(root);
      while (!call.empty()) {
        Frame& f = call.back();
        if (f.next < f.succ.size()) {
          std::uint32_t w = f.succ[f.next++];
          if (index[w] == kUnset) {
            push(w);
          } else if (on_stack[w]) {
            low[f.v] = std::min(low[f.v], index[w]);
          }
          continue;
        }
        std::uint32_t v = f.v;
        if (low[v] == index[v]) {
          std::uint32_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w]     = ncomp;
          } while (w != v);
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty()) {
          std::uint32_t u = call.back().v;
          low[u]          = std::min(low[u], low[v]);
        }
      }
    }
    return comp;
  }

  // Group the vertices by component id; classes are sorted by their smallest
  // member and members are sorted.
  inline std::vector<std::vector<std::uint32_t>>
  classes_from_labels(std::vector<std::uint32_t> const& label) {
    std::vector<std::vector<std::uint32_t>> by_label;
    for (std::uint32_t v = 0; v < label.size(); ++v) {
      if (label[v] >= by_label.size()) {
        by_label.resize(label[v] + 1);
      }
      by_label[label[v]].push_back(v);
    }
    std::erase_if(by_label, [](auto const& c) { return c.empty(); });
    std::sort(by_label.begin(), by_label.end(), [](auto const& a, auto const& b) {
      return a.front() < b.front();
    });
    return by_label;
  }

}  // namespace ellis::detail
