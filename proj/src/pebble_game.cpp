#include "sparsity/pebble_game.hpp"

#include <algorithm>

namespace sparsity {

namespace {
constexpr int kPebblesPerVertex = 2;
constexpr int kRequired = 4; // pebbles on the endpoints before accepting (l + 1)
} // namespace

PebbleGame::PebbleGame(int vertex_count)
    : pebbles_(static_cast<std::size_t>(vertex_count), kPebblesPerVertex),
      heads_(static_cast<std::size_t>(vertex_count)),
      parent_(static_cast<std::size_t>(vertex_count), -1)
{
}

bool PebbleGame::try_insert(Vertex u, Vertex v)
{
    while (free_pebbles(u) + free_pebbles(v) < kRequired) {
        if (!gather_one(u, v)) {
            return false;
        }
    }
    --pebbles_[static_cast<std::size_t>(u)];
    heads_[static_cast<std::size_t>(u)].push_back(v);
    ++accepted_;
    return true;
}

bool PebbleGame::gather_one(Vertex u, Vertex v)
{
    constexpr Vertex kUnseen = -2;
    constexpr Vertex kRoot = -1;
    std::fill(parent_.begin(), parent_.end(), kUnseen);
    queue_.clear();
    for (Vertex s : {u, v}) {
        parent_[static_cast<std::size_t>(s)] = kRoot;
        queue_.push_back(s);
    }
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const Vertex x = queue_[head];
        for (Vertex y : heads_[static_cast<std::size_t>(x)]) {
            if (parent_[static_cast<std::size_t>(y)] != kUnseen) {
                continue;
            }
            parent_[static_cast<std::size_t>(y)] = x;
            if (pebbles_[static_cast<std::size_t>(y)] > 0) {
                // reverse the path root -> ... -> y; y pays, the root gains
                --pebbles_[static_cast<std::size_t>(y)];
                Vertex cur = y;
                while (parent_[static_cast<std::size_t>(cur)] != kRoot) {
                    const Vertex prev = parent_[static_cast<std::size_t>(cur)];
                    auto& out = heads_[static_cast<std::size_t>(prev)];
                    out.erase(std::find(out.begin(), out.end(), cur));
                    heads_[static_cast<std::size_t>(cur)].push_back(prev);
                    cur = prev;
                }
                ++pebbles_[static_cast<std::size_t>(cur)];
                return true;
            }
            queue_.push_back(y);
        }
    }
    blocker_ = VertexSet(queue_);
    return false;
}

} // namespace sparsity
