#include "coverdepth/runtime.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace coverdepth {

namespace {
std::atomic<unsigned> thread_cap{0};
}

void set_thread_cap(unsigned cap) { thread_cap.store(cap); }

unsigned thread_budget() {
    const unsigned cap = thread_cap.load();
    if (cap > 0) return cap;
    const unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 8u);
}

}  // namespace coverdepth
