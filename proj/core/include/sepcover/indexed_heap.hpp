#pragma once

#include <cassert>
#include <utility>
#include <vector>

namespace sepcover {

/// Binary min-heap over dense ids 0..k-1 with arbitrary key reassignment in
/// O(log k). Ties break toward the smaller id so extraction order is
/// deterministic.
template <class R>
class IndexedHeap {
 public:
  void init(std::vector<R> keys) {
    key_ = std::move(keys);
    const int k = static_cast<int>(key_.size());
    heap_.resize(k);
    pos_.resize(k);
    for (int i = 0; i < k; ++i) heap_[i] = i;
    for (int i = k / 2 - 1; i >= 0; --i) sift_down(i);
    for (int i = 0; i < k; ++i) pos_[heap_[i]] = i;
  }

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  int top() const {
    assert(!heap_.empty());
    return heap_[0];
  }

  const R& key(int id) const { return key_[id]; }

  void set_key(int id, R k) {
    key_[id] = std::move(k);
    if (!sift_up(pos_[id])) sift_down(pos_[id]);
  }

 private:
  std::vector<R> key_;
  std::vector<int> heap_;
  std::vector<int> pos_;

  bool less(int a, int b) const {
    if (key_[a] < key_[b]) return true;
    if (key_[b] < key_[a]) return false;
    return a < b;
  }
  void place(int i, int id) {
    heap_[i] = id;
    pos_[id] = i;
  }
  bool sift_up(int i) {
    const int id = heap_[i];
    bool moved = false;
    while (i > 0) {
      const int par = (i - 1) / 2;
      if (!less(id, heap_[par])) break;
      place(i, heap_[par]);
      i = par;
      moved = true;
    }
    place(i, id);
    return moved;
  }
  void sift_down(int i) {
    const int id = heap_[i];
    const int k = static_cast<int>(heap_.size());
    while (true) {
      int c = 2 * i + 1;
      if (c >= k) break;
      if (c + 1 < k && less(heap_[c + 1], heap_[c])) ++c;
      if (!less(heap_[c], id)) break;
      place(i, heap_[c]);
      i = c;
    }
    place(i, id);
  }
};

}  // namespace sepcover
